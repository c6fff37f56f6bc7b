//! The four functor classes and their defining functional equations.
//!
//! Each class mimics a reduced analytic function: `exp(ax) - 1`,
//! `ax/(1-ax)`, `-log(1-ax)`, and the interpolating family
//! `f_n(ax) = (1 - ax/2^{n-1})^{-2^{n-1}} - 1`. Two independent models
//! coexist and must not be conflated:
//!
//! - the **analytic model**: pure rational series satisfying the bivariate
//!   functional equations ([`closed_form`], [`equation_residual`],
//!   [`solve_reduced`]);
//! - the **Hilbert model**: word-length dimension series of the example
//!   functors on a space of dimension `d` ([`hilbert_model`]). The
//!   non-unital symmetric algebra on one generator has Hilbert series
//!   `w/(1-w)`, not `e^w - 1`; the analogy between the two models is
//!   structural, not numerical.

use num::bigint::BigInt;
use num::One;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::lie;
use crate::rational::{binomial, factorial, Rational};
use crate::report::{Check, ReportDocument};
use crate::series::{Monomial, Series};

/// One of the four functor classes. `TypeF { n: 1 }` carries the Poisson
/// flavored equation, which is distinct from `Geometric` even though the two
/// closed forms coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctorKind {
    Exponential,
    Geometric,
    Logarithmic,
    TypeF { n: u32 },
}

impl FunctorKind {
    pub fn name(&self) -> &'static str {
        match self {
            FunctorKind::Exponential => "exponential",
            FunctorKind::Geometric => "geometric",
            FunctorKind::Logarithmic => "logarithmic",
            FunctorKind::TypeF { .. } => "type_f",
        }
    }
}

impl std::fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FunctorKind::TypeF { n } => write!(f, "type_f(n={n})"),
            other => write!(f, "{}", other.name()),
        }
    }
}

/// Parameters of a closed-form solution; `scale` is the `a` in `exp(ax)-1`
/// and friends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormParams {
    pub scale: Rational,
}

impl ClosedFormParams {
    pub fn new(scale: Rational) -> Self {
        ClosedFormParams { scale }
    }

    pub fn unit() -> Self {
        ClosedFormParams {
            scale: Rational::one(),
        }
    }
}

/// Taylor coefficients of the closed-form solution of the given kind,
/// exact through `order`:
///
/// - exponential: `a^k / k!`
/// - geometric: `a^k`
/// - logarithmic: `a^k / k`
/// - type f_n: `a^k * C(M+k-1, k) / M^k` with `M = 2^{n-1}`
pub fn closed_form(kind: FunctorKind, params: &ClosedFormParams, order: u32) -> Series {
    assert!(order >= 1, "order must be at least 1");
    let a = &params.scale;
    let coeff = |k: u32| -> Rational {
        let ak = a.pow(k as i32);
        match kind {
            FunctorKind::Exponential => {
                ak * Rational::from_big(BigInt::one(), factorial(u64::from(k)))
            }
            FunctorKind::Geometric => ak,
            FunctorKind::Logarithmic => ak * Rational::new(1, i64::from(k)),
            FunctorKind::TypeF { n } => {
                let m = BigInt::from(2).pow(n - 1);
                let num = binomial(&(&m + BigInt::from(k) - BigInt::one()), u64::from(k));
                ak * Rational::from_big(num, m.pow(k))
            }
        }
    };
    Series::from_terms(
        1,
        order,
        (1..=order).map(|k| (Monomial::new(vec![k], 0), coeff(k))),
    )
}

/// The composite argument appearing in the logarithmic and type-f_n
/// equations, scaled consistently with a solution whose linear coefficient
/// is `a`: for divisor `m` (1 for logarithmic, `2^{n-1}` for type f_n) this
/// is `(a*x*y/m) / ((1 - a x/m)(1 - a y/m))`.
fn composite_argument(a: &Rational, m: &Rational, order: u32) -> Series {
    let x = Series::var(2, 0, order);
    let y = Series::var(2, 1, order);
    let c = a / m;
    let gx = x
        .scale(&c)
        .geometric_inverse()
        .expect("scaled variable is reduced");
    let gy = y
        .scale(&c)
        .geometric_inverse()
        .expect("scaled variable is reduced");
    &(&(&x * &y).scale(&c) * &gx) * &gy
}

/// Left-minus-right residual of the defining bivariate equation, with
/// `f(x+y)` on the left:
///
/// - exponential: `f(x+y) - [f(x)f(y) + f(x) + f(y)]`
/// - geometric: `f(x+y) - [f(x) + f(y) + 2f(x)f(y) + f(x+y)f(x)f(y)]`
/// - logarithmic: `f(x+y) - [f(inner) + f(x) + f(y)]`
/// - type f_n: `f(x+y) - [E + f(inner) + f(inner)*E]`, `E = f(x)+f(y)+f(x)f(y)`
///
/// where `inner` is [`composite_argument`] scaled by the linear coefficient
/// of `f`, so that every closed form (any scale) is an exact solution. The
/// result is the zero series iff `f` satisfies its equation through `order`.
pub fn equation_residual(kind: FunctorKind, f: &Series, order: u32) -> Result<Series, Error> {
    assert_eq!(
        f.num_vars(),
        1,
        "equation_residual expects a univariate series"
    );
    if !f.is_reduced() {
        return Err(Error::NotReduced {
            context: "equation_residual",
        });
    }
    if order > f.truncation_order() {
        return Err(Error::OrderTooLarge {
            requested: order,
            available: f.truncation_order(),
        });
    }
    let x = Series::var(2, 0, order);
    let y = Series::var(2, 1, order);
    let fx = f.substitute(std::slice::from_ref(&x))?;
    let fy = f.substitute(std::slice::from_ref(&y))?;
    let fxy = f.substitute(&[x, y])?;
    let a = f.univariate_coefficient(1);
    let rhs = match kind {
        FunctorKind::Exponential => &(&fx * &fy) + &(&fx + &fy),
        FunctorKind::Geometric => {
            let prod = &fx * &fy;
            &(&(&fx + &fy) + &prod.scale(&Rational::from_int(2))) + &(&fxy * &prod)
        }
        FunctorKind::Logarithmic => {
            let inner = composite_argument(&a, &Rational::one(), order);
            let f_inner = f.substitute(std::slice::from_ref(&inner))?;
            &(&fx + &fy) + &f_inner
        }
        FunctorKind::TypeF { n } => {
            let m = Rational::from_int(2).pow(n as i32 - 1);
            let inner = composite_argument(&a, &m, order);
            let f_inner = f.substitute(std::slice::from_ref(&inner))?;
            let e = &(&fx + &fy) + &(&fx * &fy);
            &(&e + &f_inner) + &(&f_inner * &e)
        }
    };
    Ok(&fxy - &rhs)
}

/// Solves the kind's functional equation degree by degree for the unique
/// reduced series with linear coefficient `a1`.
///
/// At degree `k` the unknown coefficient is pinned by matching the
/// coefficient of `x^{k-1} y`, where it enters linearly (composite arguments
/// only contribute already-known coefficients there). Afterwards the full
/// bivariate residual is recomputed and must vanish through `order`.
pub fn solve_reduced(kind: FunctorKind, a1: &Rational, order: u32) -> Result<Series, Error> {
    assert!(order >= 1, "order must be at least 1");
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); order as usize + 1];
    coeffs[1] = a1.clone();
    for k in 2..=order {
        let pin_k = Monomial::new(vec![k - 1, 1], 0);
        let residual_at = |ak: Rational| -> Result<Rational, Error> {
            let mut trial = coeffs.clone();
            trial[k as usize] = ak;
            let f = Series::from_terms(
                1,
                k,
                trial[1..=k as usize]
                    .iter()
                    .enumerate()
                    .map(|(i, c)| (Monomial::new(vec![i as u32 + 1], 0), c.clone())),
            );
            Ok(equation_residual(kind, &f, k)?.coefficient(&pin_k))
        };
        let r0 = residual_at(Rational::zero())?;
        let r1 = residual_at(Rational::one())?;
        let slope = &r1 - &r0;
        if slope.is_zero() {
            return Err(Error::SolverInconsistent { monomial: pin_k });
        }
        coeffs[k as usize] = -&r0 / slope;
    }
    let f = Series::from_terms(
        1,
        order,
        coeffs[1..]
            .iter()
            .enumerate()
            .map(|(i, c)| (Monomial::new(vec![i as u32 + 1], 0), c.clone())),
    );
    let residual = equation_residual(kind, &f, order)?;
    if let Some((monomial, _, _)) = residual.first_difference(&Series::zero(2, order), order) {
        return Err(Error::SolverInconsistent { monomial });
    }
    Ok(f)
}

/// Word-length Hilbert series of the example functor of each kind on a
/// degree-0 space of dimension `d`:
///
/// - exponential (non-unital symmetric algebra): `(1-w)^{-d} - 1`
/// - geometric (non-unital tensor algebra): `d w / (1 - d w)`
/// - logarithmic (free Lie algebra): `sum_k l_k(d) w^k` with Witt numbers
///   `l_k(d)`
///
/// `TypeF` has no dimension model here: its Hilbert analogue would need
/// sign conventions for symmetrization in odd degree.
pub fn hilbert_model(kind: FunctorKind, input_dim: u32, order: u32) -> Result<Series, Error> {
    assert!(order >= 1, "order must be at least 1");
    let d = input_dim;
    match kind {
        FunctorKind::Exponential => Ok(Series::from_terms(
            1,
            order,
            (1..=order).map(|k| {
                let c = binomial(&BigInt::from(d + k - 1), u64::from(k));
                (Monomial::new(vec![k], 0), Rational::from_bigint(c))
            }),
        )),
        FunctorKind::Geometric => Ok(Series::from_terms(
            1,
            order,
            (1..=order).map(|k| {
                (
                    Monomial::new(vec![k], 0),
                    Rational::from_int(i64::from(d)).pow(k as i32),
                )
            }),
        )),
        FunctorKind::Logarithmic => Ok(Series::from_terms(
            1,
            order,
            (1..=order).map(|k| {
                let l = lie::witt(d, k);
                (
                    Monomial::new(vec![k], 0),
                    Rational::from_bigint(BigInt::from(l)),
                )
            }),
        )),
        FunctorKind::TypeF { .. } => Err(Error::UnsupportedModel { kind: "type_f" }),
    }
}

/// Runs [`equation_residual`] on the closed form and reports whether it is
/// the zero series through `order`.
pub fn functional_equation_check(
    kind: FunctorKind,
    scale: &Rational,
    order: u32,
) -> ReportDocument {
    let check = Check::new("functional-eq")
        .param("kind", kind)
        .param("a", scale);
    let f = closed_form(kind, &ClosedFormParams::new(scale.clone()), order);
    let residual = equation_residual(kind, &f, order).expect("closed form is reduced");
    check.compare(&Series::zero(2, order), &residual, order)
}

/// Reports whether the degree-by-degree solver reproduces the closed form
/// coefficient for coefficient.
pub fn solver_uniqueness_check(kind: FunctorKind, scale: &Rational, order: u32) -> ReportDocument {
    let check = Check::new("solver-uniqueness")
        .param("kind", kind)
        .param("a", scale);
    let expected = closed_form(kind, &ClosedFormParams::new(scale.clone()), order);
    match solve_reduced(kind, scale, order) {
        Ok(solved) => check.compare(&expected, &solved, order),
        Err(Error::SolverInconsistent { monomial }) => check.fail(
            order,
            crate::report::Witness {
                monomial,
                expected: Rational::zero(),
                actual: Rational::one(),
            },
        ),
        Err(e) => panic!("unexpected solver error: {e}"),
    }
}

/// Quantifies the degeneration of the type-f family toward the exponential
/// one: for every fixed `k in 2..=k_max`, the coefficients `a_k(n)` of the
/// unit-scale closed forms decrease strictly in `n`, stay above `1/k!`, and
/// the excess `a_k(n) - 1/k!` at least halves with each unit increase of
/// `n`. Checked exactly for `n in 2..=n_max`.
pub fn type_f_limit_check(k_max: u32, n_max: u32) -> ReportDocument {
    assert!(k_max >= 2 && n_max >= 3);
    let check = Check::new("type-f-limit")
        .param("k_max", k_max)
        .param("n_max", n_max);
    let tables: Vec<Series> = (2..=n_max)
        .map(|n| closed_form(FunctorKind::TypeF { n }, &ClosedFormParams::unit(), k_max))
        .collect();
    let exp = closed_form(FunctorKind::Exponential, &ClosedFormParams::unit(), k_max);
    let mut violation: Option<(u32, Rational, Rational)> = None;
    'outer: for k in 2..=k_max {
        let floor = exp.univariate_coefficient(k);
        for idx in 0..tables.len() - 1 {
            let cur = tables[idx].univariate_coefficient(k);
            let next = tables[idx + 1].univariate_coefficient(k);
            if next >= cur {
                violation = Some((k, cur, next));
                break 'outer;
            }
            if next <= floor {
                violation = Some((k, floor, next));
                break 'outer;
            }
            let excess_next = &next - &floor;
            let excess_cur = &cur - &floor;
            if &excess_next + &excess_next > excess_cur {
                violation = Some((k, excess_cur, excess_next));
                break 'outer;
            }
        }
    }
    match violation {
        None => check.pass(k_max),
        Some((k, expected, actual)) => check.fail(
            k_max,
            crate::report::Witness {
                monomial: Monomial::new(vec![k], 0),
                expected,
                actual,
            },
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn closed_form_geometric() {
        let f = closed_form(FunctorKind::Geometric, &ClosedFormParams::unit(), 4);
        assert_eq!(f.to_string(), "x + x^2 + x^3 + x^4");
    }

    #[test]
    fn closed_form_exponential() {
        let f = closed_form(FunctorKind::Exponential, &ClosedFormParams::unit(), 3);
        assert_eq!(f.univariate_coefficient(1), Rational::one());
        assert_eq!(f.univariate_coefficient(2), rat(1, 2));
        assert_eq!(f.univariate_coefficient(3), rat(1, 6));
    }

    #[test]
    fn closed_form_type_f_two() {
        // (1 - x/2)^{-2} - 1 has coefficients (k+1)/2^k.
        let f = closed_form(FunctorKind::TypeF { n: 2 }, &ClosedFormParams::unit(), 5);
        for k in 1..=5u32 {
            assert_eq!(
                f.univariate_coefficient(k),
                rat(i64::from(k) + 1, 1 << k),
                "coefficient of x^{k}"
            );
        }
    }

    #[test]
    fn closed_form_logarithmic_scaled() {
        let f = closed_form(
            FunctorKind::Logarithmic,
            &ClosedFormParams::new(Rational::from_int(2)),
            3,
        );
        assert_eq!(f.to_string(), "2*x + 2*x^2 + 8/3*x^3");
    }

    #[test]
    fn residual_of_geometric_closed_form_vanishes() {
        let f = closed_form(
            FunctorKind::Geometric,
            &ClosedFormParams::new(Rational::from_int(2)),
            10,
        );
        let r = equation_residual(FunctorKind::Geometric, &f, 10).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn residual_of_logarithmic_closed_form_vanishes() {
        let f = closed_form(FunctorKind::Logarithmic, &ClosedFormParams::unit(), 10);
        let r = equation_residual(FunctorKind::Logarithmic, &f, 10).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn residual_sign_convention() {
        // f = x under the exponential equation: f(x+y) - [xy + x + y] = -xy.
        let f = Series::var(1, 0, 2);
        let r = equation_residual(FunctorKind::Exponential, &f, 2).unwrap();
        assert_eq!(r.coefficient_of(&[1, 1], 0), Rational::from_int(-1));
        assert_eq!(r.num_terms(), 1);
    }

    #[test]
    fn residual_order_guard() {
        let f = Series::var(1, 0, 2);
        assert!(matches!(
            equation_residual(FunctorKind::Exponential, &f, 5),
            Err(Error::OrderTooLarge { .. })
        ));
    }

    #[test]
    fn residual_requires_reduced_input() {
        let f = Series::one(1, 3);
        assert!(matches!(
            equation_residual(FunctorKind::Geometric, &f, 3),
            Err(Error::NotReduced { .. })
        ));
    }

    #[test]
    fn solver_reproduces_geometric() {
        let f = solve_reduced(FunctorKind::Geometric, &Rational::one(), 6).unwrap();
        for k in 1..=6 {
            assert_eq!(f.univariate_coefficient(k), Rational::one());
        }
    }

    #[test]
    fn solver_reproduces_exponential() {
        let f = solve_reduced(FunctorKind::Exponential, &Rational::one(), 5).unwrap();
        assert_eq!(
            f,
            closed_form(FunctorKind::Exponential, &ClosedFormParams::unit(), 5)
        );
    }

    #[test]
    fn solver_reproduces_type_f() {
        let f = solve_reduced(FunctorKind::TypeF { n: 2 }, &Rational::one(), 5).unwrap();
        assert_eq!(
            f,
            closed_form(FunctorKind::TypeF { n: 2 }, &ClosedFormParams::unit(), 5)
        );
    }

    #[test]
    fn solver_zero_seed_gives_zero_series() {
        for kind in [
            FunctorKind::Exponential,
            FunctorKind::Geometric,
            FunctorKind::Logarithmic,
            FunctorKind::TypeF { n: 3 },
        ] {
            let f = solve_reduced(kind, &Rational::zero(), 4).unwrap();
            assert!(f.is_zero(), "{kind}");
        }
    }

    #[test]
    fn hilbert_exponential_one_generator() {
        let h = hilbert_model(FunctorKind::Exponential, 1, 4).unwrap();
        assert_eq!(h.to_string(), "x + x^2 + x^3 + x^4");
    }

    #[test]
    fn hilbert_geometric_two_generators() {
        let h = hilbert_model(FunctorKind::Geometric, 2, 3).unwrap();
        for (k, c) in [(1, 2), (2, 4), (3, 8)] {
            assert_eq!(h.univariate_coefficient(k), Rational::from_int(c));
        }
    }

    #[test]
    fn hilbert_logarithmic_witt_numbers() {
        let h = hilbert_model(FunctorKind::Logarithmic, 2, 5).unwrap();
        for (k, c) in [(1, 2), (2, 1), (3, 2), (4, 3), (5, 6)] {
            assert_eq!(
                h.univariate_coefficient(k),
                Rational::from_int(c),
                "l_{k}(2)"
            );
        }
    }

    #[test]
    fn hilbert_type_f_unsupported() {
        assert!(matches!(
            hilbert_model(FunctorKind::TypeF { n: 2 }, 1, 4),
            Err(Error::UnsupportedModel { .. })
        ));
    }

    /// The Hilbert series satisfy the same equations with F(X), F(Y),
    /// F(X v Y) instantiated at dims d_x, d_y, d_x + d_y.
    #[test]
    fn hilbert_series_satisfy_their_equations() {
        let order = 8;
        for dx in 1..=3u32 {
            for dy in 1..=3u32 {
                let joint = |kind| hilbert_model(kind, dx + dy, order).unwrap();
                let u = |kind| hilbert_model(kind, dx, order).unwrap();
                let v = |kind| hilbert_model(kind, dy, order).unwrap();

                let kind = FunctorKind::Exponential;
                let (s, a, b) = (joint(kind), u(kind), v(kind));
                assert_eq!(s, &(&a * &b) + &(&a + &b), "exponential {dx},{dy}");

                let kind = FunctorKind::Geometric;
                let (s, a, b) = (joint(kind), u(kind), v(kind));
                let ab = &a * &b;
                let rhs = &(&(&a + &b) + &ab.scale(&Rational::from_int(2))) + &(&s * &ab);
                assert_eq!(s, rhs, "geometric {dx},{dy}");

                let kind = FunctorKind::Logarithmic;
                let (s, a, b) = (joint(kind), u(kind), v(kind));
                let tx = hilbert_model(FunctorKind::Geometric, dx, order).unwrap();
                let ty = hilbert_model(FunctorKind::Geometric, dy, order).unwrap();
                let composite = crate::lie::plethystic_lie(&(&tx * &ty), order).unwrap();
                assert_eq!(s, &(&a + &b) + &composite, "logarithmic {dx},{dy}");
            }
        }
    }

    /// Type-f coefficients decrease strictly in n toward 1/k!.
    #[test]
    fn type_f_coefficients_decrease_toward_exponential() {
        let order = 8;
        let exp = closed_form(FunctorKind::Exponential, &ClosedFormParams::unit(), order);
        let tables: Vec<Series> = (1..=10)
            .map(|n| closed_form(FunctorKind::TypeF { n }, &ClosedFormParams::unit(), order))
            .collect();
        for k in 2..=order {
            let floor = exp.univariate_coefficient(k);
            for n in 1..10 {
                let cur = tables[n - 1].univariate_coefficient(k);
                let next = tables[n].univariate_coefficient(k);
                assert!(next < cur, "a_{k} not strictly decreasing at n={n}");
                assert!(next > floor, "a_{k} dipped below 1/k! at n={}", n + 1);
            }
        }
    }

    #[test]
    fn kind_serialization() {
        assert_eq!(
            serde_json::to_string(&FunctorKind::TypeF { n: 2 }).unwrap(),
            r#"{"kind":"type_f","n":2}"#
        );
        assert_eq!(
            serde_json::to_string(&FunctorKind::Geometric).unwrap(),
            r#"{"kind":"geometric"}"#
        );
        let k: FunctorKind = serde_json::from_str(r#"{"kind":"type_f","n":4}"#).unwrap();
        assert_eq!(k, FunctorKind::TypeF { n: 4 });
    }
}
