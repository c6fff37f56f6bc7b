//! The identity suite around exp(-log(1-x)) - 1 = x/(1-x): the functional
//! form, the dimension-product form, the composite description of the
//! type-f_n family, and the deliberate negative controls.
//!
//! Run with: cargo run --example pbw_identities

use functower::lie::{
    fn_composition_check, pbw_dimension_check, pbw_functional_identity,
    pbw_functional_identity_with_exponent,
};
use functower::rational::Rational;
use functower::suite::negative_controls_check;

fn main() {
    println!("{}", pbw_functional_identity(30).summary_line());
    for d in 1..=3 {
        println!("{}", pbw_dimension_check(d, 12).summary_line());
    }
    for n in 1..=4 {
        println!("{}", fn_composition_check(n, 12).summary_line());
    }

    // perturbing the exponent breaks the identity at x^2, and the report
    // carries the witness coefficient
    let broken = pbw_functional_identity_with_exponent(&Rational::new(10001, 10000), 12);
    println!("\n{}", broken.summary_line());

    // the suite checks that its own negative controls actually fire
    println!("{}", negative_controls_check().summary_line());
}
