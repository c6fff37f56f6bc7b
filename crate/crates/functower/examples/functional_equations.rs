//! The four functor classes: closed forms, their defining bivariate
//! equations, and the degree-by-degree solver that recovers the closed
//! forms from the linear coefficient alone.
//!
//! Run with: cargo run --example functional_equations

use functower::functor::{
    closed_form, equation_residual, solve_reduced, ClosedFormParams, FunctorKind,
};
use functower::rational::Rational;
use functower::series::Series;

fn main() {
    let order = 6;
    let kinds = [
        FunctorKind::Exponential,
        FunctorKind::Geometric,
        FunctorKind::Logarithmic,
        FunctorKind::TypeF { n: 2 },
        FunctorKind::TypeF { n: 3 },
    ];

    println!("closed forms at scale 1, through degree {order}:");
    for kind in kinds {
        let f = closed_form(kind, &ClosedFormParams::unit(), order);
        println!("  {kind:<12} {f}");
    }

    println!("\nresiduals of the defining equations (zero = exact solution):");
    for kind in kinds {
        for a in [1, 2] {
            let f = closed_form(kind, &ClosedFormParams::new(Rational::from_int(a)), order);
            let r = equation_residual(kind, &f, order).unwrap();
            println!(
                "  {kind:<12} a={a}: residual {}",
                if r.is_zero() { "0" } else { "NONZERO" }
            );
        }
    }

    // a non-solution leaves a visible residual
    let linear = Series::var(1, 0, 2);
    let r = equation_residual(FunctorKind::Exponential, &linear, 2).unwrap();
    println!("\nresidual of f = x under the exponential equation: {r}");

    // the solver pins each coefficient from the x^(k-1)y slot and recovers
    // the closed form; the seed coefficient is the only free parameter
    println!("\nsolve from the linear coefficient alone:");
    for kind in kinds {
        let solved = solve_reduced(kind, &Rational::from_int(2), order).unwrap();
        let expected = closed_form(kind, &ClosedFormParams::new(Rational::from_int(2)), order);
        println!(
            "  {kind:<12} solver == closed form: {}",
            if solved == expected { "yes" } else { "NO" }
        );
    }
}
