//! Taylor-tower layers: tensor powers for the geometric class, symmetric
//! powers for the exponential one, free-Lie dimensions for the logarithmic
//! one, and the suspension-graded differential recurrence for type f_n.
//!
//! Run with: cargo run --example taylor_layers

use functower::layers::{
    a_k_recurrence, layers_exponential, layers_geometric, layers_logarithmic, LayerInput,
};
use functower::rational::Rational;
use functower::series::Series;

fn main() {
    // first layer of dimension 2, ground value 1
    let input = LayerInput::new(
        Series::constant(1, 1, Rational::from_int(2)),
        Series::one(1, 1),
        1,
    );

    let geo = layers_geometric(&input, 5);
    let exp = layers_exponential(&input, 5).unwrap();
    let log = layers_logarithmic(&input, 5).unwrap();
    println!("layers on a 2-dimensional first layer:");
    println!("  k | tensor | symmetric | free-Lie");
    for k in 1..=5 {
        println!(
            "  {k} | {:>6} | {:>9} | {:>8}",
            geo.entry(k).to_string(),
            exp.entry(k).to_string(),
            log.entry(k).to_string(),
        );
    }

    // type f_n differentials on the ground field: q tracks the suspension
    for n in [1, 2, 3] {
        let table = a_k_recurrence(&LayerInput::ones(n), 6);
        println!("\ndifferentials at n = {n}:");
        for k in 1..=6 {
            println!("  A_{k} = {}", table.entry(k));
        }
        let totals: Vec<String> = (1..=6)
            .map(|k| {
                table
                    .entry(k)
                    .eval_q(&Rational::one())
                    .coefficient_of(&[0], 0)
                    .to_string()
            })
            .collect();
        println!("  at q=1: {}", totals.join(", "));
    }
}
