//! Free Lie algebra dimension machinery: Witt numbers, a brute-force Lyndon
//! word oracle, dimension-level plethysm, and the PBW identity suite.

use num::bigint::BigInt;

use crate::error::Error;
use crate::functor::{closed_form, ClosedFormParams, FunctorKind};
use crate::rational::{binomial, Rational};
use crate::report::{Check, ReportDocument};
use crate::series::{Monomial, Series};

/// Moebius function by direct factorization.
pub fn moebius(n: u64) -> i64 {
    assert!(n >= 1);
    let mut m = n;
    let mut result = 1i64;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

/// Witt number `l_k(d) = (1/k) sum_{e | k} mu(e) d^{k/e}`: the dimension of
/// the degree-k part of the free Lie algebra on d generators.
pub fn witt(d: u32, k: u32) -> u128 {
    assert!(d >= 1 && k >= 1, "witt needs d >= 1, k >= 1");
    let mut sum: i128 = 0;
    for e in 1..=k {
        if k.is_multiple_of(e) {
            let power = u128::from(d)
                .checked_pow(k / e)
                .expect("witt number exceeds u128 range");
            let signed = i128::try_from(power).expect("witt number exceeds i128 range");
            sum += i128::from(moebius(u64::from(e))) * signed;
        }
    }
    assert!(
        sum >= 0 && sum % i128::from(k) == 0,
        "necklace sum must divide evenly"
    );
    (sum / i128::from(k)) as u128
}

/// Witt numbers `l_1(d) .. l_{k_max}(d)` in one table.
#[derive(Clone, Debug, serde::Serialize, serde::Deserialize)]
pub struct WittTable {
    pub alphabet_dim: u32,
    pub entries: std::collections::BTreeMap<u32, u128>,
}

pub fn witt_table(d: u32, k_max: u32) -> WittTable {
    WittTable {
        alphabet_dim: d,
        entries: (1..=k_max).map(|k| (k, witt(d, k))).collect(),
    }
}

const LYNDON_BUDGET: u128 = 10_000_000;

/// True when `word` is strictly smaller than each of its proper rotations.
fn is_lyndon(word: &[u32]) -> bool {
    let k = word.len();
    'rot: for shift in 1..k {
        for i in 0..k {
            let rotated = word[(i + shift) % k];
            match rotated.cmp(&word[i]) {
                std::cmp::Ordering::Less => return false,
                std::cmp::Ordering::Greater => continue 'rot,
                std::cmp::Ordering::Equal => {}
            }
        }
        return false; // equal to a proper rotation: periodic
    }
    true
}

/// Counts Lyndon words of length `k` over a `d`-letter alphabet by direct
/// enumeration of all `d^k` words. Independent of [`witt`] by construction;
/// refuses searches past `d^k = 10^7`.
pub fn lyndon_count(d: u32, k: u32) -> Result<u128, Error> {
    assert!(d >= 1 && k >= 1, "lyndon_count needs d >= 1, k >= 1");
    let size = u128::from(d).checked_pow(k).ok_or(Error::BudgetExceeded {
        size: u128::MAX,
        budget: LYNDON_BUDGET,
    })?;
    if size > LYNDON_BUDGET {
        return Err(Error::BudgetExceeded {
            size,
            budget: LYNDON_BUDGET,
        });
    }
    let mut word = vec![0u32; k as usize];
    let mut count = 0u128;
    loop {
        if is_lyndon(&word) {
            count += 1;
        }
        // odometer increment
        let mut i = word.len();
        loop {
            if i == 0 {
                return Ok(count);
            }
            i -= 1;
            word[i] += 1;
            if word[i] < d {
                break;
            }
            word[i] = 0;
        }
    }
}

/// Counts the multilinear Lyndon words on `n` distinct letters (each letter
/// used exactly once) by enumerating all permutations. Equals `(n-1)!`: each
/// cyclic class of a multilinear word has exactly one Lyndon representative.
pub fn multilinear_lyndon_count(n: u32) -> u64 {
    assert!(
        (1..=10).contains(&n),
        "permutation enumeration supports n in 1..=10"
    );
    let mut word: Vec<u32> = (0..n).collect();
    let mut count = 0u64;
    // Heap's algorithm
    let mut c = vec![0usize; n as usize];
    if is_lyndon(&word) {
        count += 1;
    }
    let mut i = 0;
    while i < n as usize {
        if c[i] < i {
            if i % 2 == 0 {
                word.swap(0, i);
            } else {
                word.swap(c[i], i);
            }
            if is_lyndon(&word) {
                count += 1;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    count
}

/// Dimension of the multilinear part of the free Lie algebra on n letters.
pub fn lie_n_dimension(n: u32) -> u64 {
    assert!(
        (1..=20).contains(&n),
        "factorial fits u64 only through n = 20"
    );
    (1..n).map(u64::from).product()
}

fn validate_plethysm_input(g: &Series) -> Result<(), Error> {
    if !g.is_reduced() {
        return Err(Error::NotReduced {
            context: "plethysm",
        });
    }
    for (m, c) in g.terms() {
        if m.q_exponent % 2 != 0 {
            return Err(Error::OddQDegree {
                monomial: m.clone(),
            });
        }
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NonIntegerInput {
                monomial: m.clone(),
            });
        }
    }
    Ok(())
}

fn validate_plethysm_output(out: &Series) -> Result<(), Error> {
    for (m, c) in out.terms() {
        if !c.is_integer() || c.is_negative() {
            return Err(Error::NonIntegerOutput {
                monomial: m.clone(),
            });
        }
    }
    Ok(())
}

/// Dimension series of the free Lie algebra on a graded space with Hilbert
/// series `g`: `L[g] = sum_{m >= 1} (mu(m)/m) * (-log(1 - g(degrees * m)))`.
///
/// `g` must be reduced with non-negative integer coefficients in even
/// q-degrees; the output is checked to have non-negative integer
/// coefficients as well.
pub fn plethystic_lie(g: &Series, order: u32) -> Result<Series, Error> {
    validate_plethysm_input(g)?;
    let order = order.min(g.truncation_order());
    let g = g.truncated(order);
    let one = Series::one(g.num_vars(), order);
    let mut out = Series::zero(g.num_vars(), order);
    for m in 1..=order.max(1) {
        let mu = moebius(u64::from(m));
        if mu == 0 {
            continue;
        }
        let gm = g.frobenius(m);
        if gm.is_zero() {
            continue;
        }
        let neg_log = -&(&one - &gm)
            .log()
            .expect("1 - reduced series has unit constant term");
        out = &out + &neg_log.scale(&Rational::new(mu, i64::from(m)));
    }
    validate_plethysm_output(&out)?;
    Ok(out)
}

/// Dimension series of the free symmetric algebra on a graded space with
/// Hilbert series `g`: `Sym[g] = exp(sum_{m >= 1} g(degrees * m)/m) - 1`.
pub fn plethystic_sym(g: &Series, order: u32) -> Result<Series, Error> {
    validate_plethysm_input(g)?;
    let order = order.min(g.truncation_order());
    let g = g.truncated(order);
    let mut power_sum = Series::zero(g.num_vars(), order);
    for m in 1..=order.max(1) {
        let gm = g.frobenius(m);
        if gm.is_zero() {
            continue;
        }
        power_sum = &power_sum + &gm.scale(&Rational::new(1, i64::from(m)));
    }
    let out = &power_sum.exp()? - &Series::one(g.num_vars(), order);
    validate_plethysm_output(&out)?;
    Ok(out)
}

/// Checks the generating-function PBW identity
/// `prod_{k=1}^{order} (1 - w^k)^{-l_k(d)} = 1/(1 - d w)` through `order`.
pub fn pbw_dimension_check(d: u32, order: u32) -> ReportDocument {
    let check = Check::new("pbw-dimension").param("d", d);
    let mut lhs = Series::one(1, order);
    for k in 1..=order {
        let l = witt(d, k);
        // (1 - w^k)^{-l} = sum_j C(l+j-1, j) w^{kj}
        let factor = Series::from_terms(
            1,
            order,
            (0..=order / k).map(|j| {
                let coeff = binomial(
                    &(BigInt::from(l) + BigInt::from(j) - BigInt::from(1u8)),
                    u64::from(j),
                );
                (Monomial::new(vec![k * j], 0), Rational::from_bigint(coeff))
            }),
        );
        lhs = &lhs * &factor;
    }
    let rhs = Series::var(1, 0, order)
        .scale(&Rational::from_int(i64::from(d)))
        .geometric_inverse()
        .expect("d*w is reduced");
    check.compare(&rhs, &lhs, order)
}

/// The PBW identity as a functional identity on closed forms:
/// `exp(-log(1-x)) - 1 = x/(1-x)`, exact through `order`.
pub fn pbw_functional_identity(order: u32) -> ReportDocument {
    pbw_functional_identity_with_exponent(&Rational::one(), order)
}

/// Generalized form comparing `exp(c * (-log(1-x))) - 1` against the
/// geometric closed form at scale `c`. At `c = 1` this is the PBW identity;
/// any other exponent makes the two sides agree at `x` and split at `x^2`,
/// which is the deliberate negative control.
pub fn pbw_functional_identity_with_exponent(c: &Rational, order: u32) -> ReportDocument {
    let check = Check::new("pbw").param("exponent", c.fraction_string());
    let log = closed_form(FunctorKind::Logarithmic, &ClosedFormParams::unit(), order);
    let lhs = &log.scale(c).exp().expect("log closed form is reduced") - &Series::one(1, order);
    let rhs = closed_form(
        FunctorKind::Geometric,
        &ClosedFormParams::new(c.clone()),
        order,
    );
    check.compare(&rhs, &lhs, order)
}

/// Cross-checks the necklace formula against direct Lyndon-word
/// enumeration on the grid `d <= d_max`, `k <= k_max`.
pub fn witt_lyndon_check(d_max: u32, k_max: u32) -> ReportDocument {
    let check = Check::new("witt-lyndon")
        .param("d_max", d_max)
        .param("k_max", k_max);
    for d in 1..=d_max {
        for k in 1..=k_max {
            let formula = witt(d, k);
            let enumerated = match lyndon_count(d, k) {
                Ok(c) => c,
                Err(e) => panic!("lyndon budget too small for the requested grid: {e}"),
            };
            if formula != enumerated {
                return check.param("d", d).fail(
                    k_max,
                    crate::report::Witness {
                        monomial: Monomial::new(vec![k], 0),
                        expected: Rational::from_bigint(BigInt::from(formula)),
                        actual: Rational::from_bigint(BigInt::from(enumerated)),
                    },
                );
            }
        }
    }
    check.pass(k_max)
}

/// The logarithmic defining equation at the dimension level: the free Lie
/// series on `d_x + d_y` generators splits as
/// `L(d_x) + L(d_y) + L[T(d_x) * T(d_y)]` with `T` the tensor algebra
/// series. Checked for all `d_x, d_y <= d_max` through `order`, plus the
/// worked instance `L[(w/(1-w))^2] = w^2 + 2w^3 + 3w^4 + 6w^5`.
pub fn log_hilbert_equation_check(d_max: u32, order: u32) -> ReportDocument {
    let check = Check::new("log-hilbert-eq").param("d_max", d_max);
    let witt_series = |d: u32| -> Series {
        Series::from_terms(
            1,
            order,
            (1..=order).map(|k| {
                (
                    Monomial::new(vec![k], 0),
                    Rational::from_bigint(BigInt::from(witt(d, k))),
                )
            }),
        )
    };
    let tensor = |d: u32| -> Series {
        let g = Series::var(1, 0, order).scale(&Rational::from_int(i64::from(d)));
        &g * &g.geometric_inverse().expect("d*w is reduced")
    };
    for d_x in 1..=d_max {
        for d_y in 1..=d_max {
            let lhs = witt_series(d_x + d_y);
            let composite = match plethystic_lie(&(&tensor(d_x) * &tensor(d_y)), order) {
                Ok(s) => s,
                Err(e) => panic!("plethysm on tensor series cannot fail: {e}"),
            };
            let rhs = &(&witt_series(d_x) + &witt_series(d_y)) + &composite;
            if let Some((monomial, expected, actual)) = lhs.first_difference(&rhs, order) {
                return check.param("d_x", d_x).param("d_y", d_y).fail(
                    order,
                    crate::report::Witness {
                        monomial,
                        expected,
                        actual,
                    },
                );
            }
        }
    }
    if order >= 5 {
        let worked = plethystic_lie(&(&tensor(1) * &tensor(1)), 5).expect("valid input");
        let frozen = Series::from_terms(
            1,
            5,
            [(2u32, 1i64), (3, 2), (4, 3), (5, 6)]
                .map(|(k, c)| (Monomial::new(vec![k], 0), Rational::from_int(c))),
        );
        if let Some((monomial, expected, actual)) = frozen.first_difference(&worked, 5) {
            return check.fail(
                order,
                crate::report::Witness {
                    monomial,
                    expected,
                    actual,
                },
            );
        }
    }
    check.pass(order)
}

/// Checks the composite description of the interpolating family:
/// `f_n(x) = exp(-2^{n-1} log(1 - x/2^{n-1})) - 1` against the type-f_n
/// closed form through `order`.
pub fn fn_composition_check(n: u32, order: u32) -> ReportDocument {
    assert!(n >= 1);
    let check = Check::new("fn-composition").param("n", n);
    let m = Rational::from_int(2).pow(n as i32 - 1);
    let log = closed_form(
        FunctorKind::Logarithmic,
        &ClosedFormParams::new(m.recip()),
        order,
    );
    let lhs = &log.scale(&m).exp().expect("log closed form is reduced") - &Series::one(1, order);
    let rhs = closed_form(FunctorKind::TypeF { n }, &ClosedFormParams::unit(), order);
    check.compare(&rhs, &lhs, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moebius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &m) in expect.iter().enumerate() {
            assert_eq!(moebius(i as u64 + 1), m, "mu({})", i + 1);
        }
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt(2, 3), 2); // {aab, abb}
        assert_eq!(witt(2, 1), 2);
        for k in 2..=8 {
            assert_eq!(witt(1, k), 0, "one-generator case is abelian");
        }
        let expect_d2 = [2, 1, 2, 3, 6, 9, 18, 30];
        for (i, &w) in expect_d2.iter().enumerate() {
            assert_eq!(witt(2, i as u32 + 1), w);
        }
    }

    #[test]
    fn lyndon_matches_small_cases() {
        assert_eq!(lyndon_count(2, 4).unwrap(), 3); // aaab aabb abbb
        assert_eq!(lyndon_count(3, 2).unwrap(), 3); // ab ac bc
        for d in 1..=4 {
            assert_eq!(lyndon_count(d, 1).unwrap(), u128::from(d));
        }
    }

    #[test]
    fn lyndon_budget() {
        assert!(matches!(
            lyndon_count(10, 8),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn multilinear_count_is_shifted_factorial() {
        for n in 1..=6 {
            assert_eq!(multilinear_lyndon_count(n), lie_n_dimension(n), "n = {n}");
        }
        assert_eq!(lie_n_dimension(1), 1);
        assert_eq!(lie_n_dimension(3), 2);
        assert_eq!(lie_n_dimension(5), 24);
    }

    #[test]
    fn pbw_dimension_small() {
        assert!(pbw_dimension_check(1, 10).passed());
        assert!(pbw_dimension_check(2, 10).passed());
        assert!(pbw_dimension_check(3, 8).passed());
    }

    #[test]
    fn pbw_functional_passes() {
        assert!(pbw_functional_identity(30).passed());
        assert!(pbw_functional_identity(1).passed());
    }

    #[test]
    fn pbw_negative_control_fails_at_x_squared() {
        let r = pbw_functional_identity_with_exponent(&Rational::new(10001, 10000), 8);
        assert!(!r.passed());
        let w = r.witness.expect("negative control must carry a witness");
        assert_eq!(w.monomial, Monomial::new(vec![2], 0));
    }

    #[test]
    fn fn_composition_small() {
        assert!(fn_composition_check(2, 12).passed());
        assert!(fn_composition_check(4, 10).passed());
        // n = 1 collapses to the geometric closed form
        assert!(fn_composition_check(1, 12).passed());
        let f1 = closed_form(FunctorKind::TypeF { n: 1 }, &ClosedFormParams::unit(), 6);
        let geo = closed_form(FunctorKind::Geometric, &ClosedFormParams::unit(), 6);
        assert_eq!(f1, geo);
    }

    #[test]
    fn plethysm_on_generators_reduces_to_witt() {
        for d in 1..=3i64 {
            let g = Series::var(1, 0, 8).scale(&Rational::from_int(d));
            let l = plethystic_lie(&g, 8).unwrap();
            for k in 1..=8u32 {
                assert_eq!(
                    l.univariate_coefficient(k),
                    Rational::from_bigint(BigInt::from(witt(d as u32, k))),
                    "l_{k}({d})"
                );
            }
        }
    }

    #[test]
    fn plethysm_worked_instance() {
        // L[(w/(1-w))^2] = w^2 + 2w^3 + 3w^4 + 6w^5
        let t1 = Series::var(1, 0, 5).geometric_inverse().unwrap();
        let t1 = &Series::var(1, 0, 5) * &t1;
        let g = &t1 * &t1;
        let l = plethystic_lie(&g, 5).unwrap();
        assert_eq!(l.to_string(), "x^2 + 2*x^3 + 3*x^4 + 6*x^5");
    }

    #[test]
    fn plethystic_sym_one_generator() {
        let s = plethystic_sym(&Series::var(1, 0, 4), 4).unwrap();
        assert_eq!(s.to_string(), "x + x^2 + x^3 + x^4");
    }

    #[test]
    fn plethysm_rejects_odd_q_degree() {
        let g = Series::var(1, 0, 4).shift_q(1);
        assert!(matches!(
            plethystic_lie(&g, 4),
            Err(Error::OddQDegree { .. })
        ));
        assert!(matches!(
            plethystic_sym(&g, 4),
            Err(Error::OddQDegree { .. })
        ));
    }

    #[test]
    fn plethysm_rejects_fractional_input() {
        let g = Series::var(1, 0, 4).scale(&Rational::new(1, 2));
        assert!(matches!(
            plethystic_lie(&g, 4),
            Err(Error::NonIntegerInput { .. })
        ));
    }

    #[test]
    fn plethysm_accepts_even_q_degrees() {
        let g = Series::var(1, 0, 6).shift_q(2);
        let l = plethystic_lie(&g, 6).unwrap();
        // single generator in even internal degree: still one-dimensional
        // free Lie pieces only in degree 1
        assert_eq!(l.coefficient_of(&[1], 2), Rational::one());
        for k in 2..=6u32 {
            assert!(l.coefficient_of(&[k], 2 * i64::from(k)).is_zero());
        }
    }

    /// Sym[L[g]] = 1/(1-g) - 1: generating-function PBW.
    #[test]
    fn sym_of_lie_is_tensor() {
        let order = 8;
        for d in 1..=2i64 {
            let g = Series::var(1, 0, order).scale(&Rational::from_int(d));
            let lie = plethystic_lie(&g, order).unwrap();
            let sym = plethystic_sym(&lie, order).unwrap();
            let tensor = &g.geometric_inverse().unwrap() - &Series::one(1, order);
            assert_eq!(sym, tensor, "d = {d}");
        }
        // and on a non-linear input: g = w + w^2
        let g = &Series::var(1, 0, order) + &Series::var(1, 0, order).pow(2);
        let sym = plethystic_sym(&plethystic_lie(&g, order).unwrap(), order).unwrap();
        let tensor = &g.geometric_inverse().unwrap() - &Series::one(1, order);
        assert_eq!(sym, tensor);
    }

    /// The multilinear coefficient of L[w_1 + ... + w_n] is (n-1)!.
    #[test]
    fn multilinear_plethysm_coefficient() {
        for n in 1..=6usize {
            let order = n as u32;
            let mut g = Series::zero(n, order);
            for i in 0..n {
                g = &g + &Series::var(n, i, order);
            }
            let l = plethystic_lie(&g, order).unwrap();
            let c = l.coefficient_of(&vec![1u32; n], 0);
            assert_eq!(
                c,
                Rational::from_bigint(BigInt::from(lie_n_dimension(n as u32))),
                "n = {n}"
            );
        }
    }
}
