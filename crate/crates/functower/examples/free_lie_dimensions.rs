//! Free Lie algebra dimensions three ways: the necklace formula, direct
//! Lyndon-word enumeration, and plethysm on graded inputs.
//!
//! Run with: cargo run --example free_lie_dimensions

use functower::functor::{hilbert_model, FunctorKind};
use functower::lie::{
    lie_n_dimension, lyndon_count, multilinear_lyndon_count, plethystic_lie, plethystic_sym, witt,
};
use functower::rational::Rational;
use functower::series::Series;

fn main() {
    println!("Witt numbers l_k(d) vs Lyndon word counts:");
    for d in 1..=3u32 {
        let formula: Vec<String> = (1..=8).map(|k| witt(d, k).to_string()).collect();
        let counted: Vec<String> = (1..=8)
            .map(|k| lyndon_count(d, k).unwrap().to_string())
            .collect();
        println!("  d={d} formula:    {}", formula.join(", "));
        println!("  d={d} enumerated: {}", counted.join(", "));
    }

    println!("\nmultilinear dimensions (n-1)! by permutation enumeration:");
    for n in 1..=6u32 {
        println!(
            "  n={n}: {} (formula {})",
            multilinear_lyndon_count(n),
            lie_n_dimension(n)
        );
    }

    // the word-length Hilbert series of the free Lie algebra is the Witt
    // series, and plethysm generalizes it to graded inputs
    let h = hilbert_model(FunctorKind::Logarithmic, 2, 6).unwrap();
    println!("\nfree Lie series on 2 generators: {h}");

    let w = Series::var(1, 0, 6);
    let tensor_square = {
        let t = &w * &w.geometric_inverse().unwrap();
        &t * &t
    };
    println!(
        "L[(w/(1-w))^2]                 = {}",
        plethystic_lie(&tensor_square, 6).unwrap()
    );

    // generating-function PBW: Sym of the Lie series recovers the tensor series
    let two_w = Series::var(1, 0, 8).scale(&Rational::from_int(2));
    let sym = plethystic_sym(&plethystic_lie(&two_w, 8).unwrap(), 8).unwrap();
    let tensor = hilbert_model(FunctorKind::Geometric, 2, 8).unwrap();
    println!("Sym[L[2w]] == 2w/(1-2w):         {}", sym == tensor);
}
