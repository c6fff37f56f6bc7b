//! Cross effects: the inductive definition versus the inclusion-exclusion
//! closed form, the degree test, and the structural description of the
//! second cross effect in the dimension models.
//!
//! Run with: cargo run --example cross_effects

use functower::cross::{
    cr2_structural_check, cross_effect_inclusion_exclusion, cross_effect_recursive, is_degree_n,
    multilinear_part,
};
use functower::functor::{closed_form, ClosedFormParams, FunctorKind};
use functower::series::Series;

fn main() {
    let f = closed_form(FunctorKind::Geometric, &ClosedFormParams::unit(), 5);
    println!("f = {f}");

    for m in 1..=3 {
        let rec = cross_effect_recursive(&f, m).unwrap();
        let ie = cross_effect_inclusion_exclusion(&f, m).unwrap();
        println!("cr_{m} f (recursive)   = {}", rec.value.truncated(3));
        println!(
            "cr_{m} f (incl-excl)   = {}   [routes agree: {}]",
            ie.value.truncated(3),
            rec.value == ie.value
        );
    }

    // multilinear parts recover k! times the Taylor coefficients
    for k in 1..=4 {
        println!(
            "multilinear part at arity {k}: {}",
            multilinear_part(&f, k).unwrap()
        );
    }

    // a polynomial has a degree; the full model does not
    let cubic = Series::from_terms(
        1,
        6,
        f.terms()
            .filter(|(m, _)| m.arity_degree() <= 3)
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    println!(
        "cubic truncation is degree 3: {}",
        is_degree_n(&cubic, 3, 6).unwrap()
    );
    println!(
        "cubic truncation is degree 2: {}",
        is_degree_n(&cubic, 2, 6).unwrap()
    );
    println!(
        "full model is degree 4:       {}",
        is_degree_n(&f, 4, 5).unwrap()
    );

    // the second cross effect matches the shape dictated by each equation
    for kind in [
        FunctorKind::Exponential,
        FunctorKind::Geometric,
        FunctorKind::Logarithmic,
    ] {
        let report = cr2_structural_check(kind, 1, 1, 6).unwrap();
        println!("{}", report.summary_line());
    }
}
