//! Tour of the exact series substrate: arithmetic, composition, the
//! exp/log pair, and the q degree marker.
//!
//! Run with: cargo run --example series_arithmetic

use functower::rational::Rational;
use functower::series::Series;

fn main() {
    let order = 8;
    let x = Series::var(1, 0, order);

    // geometric series 1/(1-x) and its logarithm
    let geom = x.geometric_inverse().unwrap();
    println!("1/(1-x)        = {geom}");
    println!("log(1/(1-x))   = {}", geom.log().unwrap());

    // exp and log are mutually inverse, with exact rational coefficients
    let e = x.exp().unwrap();
    println!("exp(x)         = {e}");
    println!("log(exp(x))    = {}", e.log().unwrap());

    // composition: substitute a product of two geometric series into x/(1-x)
    let f = &geom - &Series::one(1, order); // x/(1-x), reduced
    let gx = f.embed(2, 0);
    let gy = f.embed(2, 1);
    let composite = f.substitute(&[&gx * &gy]).unwrap();
    println!("f(f(x)f(y))    = {}", composite.truncated(4));

    // the q marker tracks internal degree; shifts are multiplicative
    let suspended = f.shift_q(1);
    println!("q-shifted      = {}", suspended.truncated(3));
    let product = &suspended * &f.shift_q(-1);
    println!("shifts cancel  = {}", product.truncated(3));

    // the shared JSON schema, with coefficients as exact fractions
    let small = f.truncated(3).scale(&Rational::new(3, 4));
    println!(
        "json           = {}",
        serde_json::to_string(&small).unwrap()
    );
}
