//! Configuration-space Poincare polynomials and the certification of the
//! type-f_n differentials against them.
//!
//! The cohomology of the space of k distinct points in R^n is, additively,
//! the tensor product of the cohomologies of wedges of (n-1)-spheres, so its
//! Poincare polynomial is `prod_{j=1}^{k-1} (1 + j q^{n-1})`. The flagship
//! check of this crate, [`verify_difhom`], recomputes the ground-field
//! differentials of the type-f_n recurrence and matches them against these
//! polynomials coefficient by coefficient.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::functor::{hilbert_model, FunctorKind};
use crate::layers::{a_k_recurrence, LayerInput};
use crate::rational::Rational;
use crate::report::{Check, ReportDocument, Witness};
use crate::series::{Monomial, Series};

/// Polynomial in the degree marker q with non-negative integer
/// coefficients. Negative exponents never occur here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPolynomial {
    coeffs: BTreeMap<i64, u128>,
}

impl QPolynomial {
    pub fn one() -> Self {
        QPolynomial {
            coeffs: BTreeMap::from([(0, 1)]),
        }
    }

    /// Multiplies by the linear factor `1 + scale * q^degree`.
    pub fn times_one_plus(&self, scale: u128, degree: i64) -> QPolynomial {
        let mut coeffs = self.coeffs.clone();
        if scale > 0 {
            for (&d, &c) in &self.coeffs {
                let add = scale.checked_mul(c).expect("coefficient exceeds u128");
                let entry = coeffs.entry(d + degree).or_insert(0);
                *entry = entry.checked_add(add).expect("coefficient exceeds u128");
            }
        }
        QPolynomial { coeffs }
    }

    pub fn coefficient(&self, degree: i64) -> u128 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> u128 {
        self.coeffs.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, u128)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    /// Re-expresses the polynomial as a [`Series`] with no arity-variable
    /// dependence, for comparison with layer tables.
    pub fn to_series(&self) -> Series {
        Series::from_terms(
            1,
            1,
            self.coeffs.iter().map(|(&d, &c)| {
                (
                    Monomial::new(vec![0], d),
                    Rational::from_bigint(BigInt::from(c)),
                )
            }),
        )
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&d, &c)| match (d, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}*q"),
                (d, 1) => format!("q^{d}"),
                (d, c) => format!("{c}*q^{d}"),
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Poincare polynomial of the configuration space of `points` distinct
/// points in Euclidean space of dimension `ambient_dim`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfPoincare {
    #[serde(rename = "n")]
    pub ambient_dim: u32,
    #[serde(rename = "k")]
    pub points: u32,
    pub poly: QPolynomial,
}

/// `prod_{j=1}^{k-1} (1 + j q^{n-1})`, exact. Degree `(k-1)(n-1)`, value
/// `k!` at q = 1.
pub fn conf_poincare(n: u32, k: u32) -> ConfPoincare {
    assert!(n >= 1 && k >= 1, "conf_poincare needs n >= 1, k >= 1");
    let mut poly = QPolynomial::one();
    for j in 1..k {
        poly = poly.times_one_plus(u128::from(j), i64::from(n) - 1);
    }
    ConfPoincare {
        ambient_dim: n,
        points: k,
        poly,
    }
}

/// Certifies that the ground-field differentials of the type-f_n recurrence
/// equal the configuration-space Poincare polynomials, coefficient by
/// coefficient, for every `2 <= k <= k_max`.
pub fn verify_difhom(n: u32, k_max: u32) -> ReportDocument {
    assert!(n >= 1 && k_max >= 2);
    let check = Check::new("difhom").param("n", n).param("k_max", k_max);
    let table = a_k_recurrence(&LayerInput::ones(n), k_max);
    for k in 2..=k_max {
        let expected = conf_poincare(n, k).poly.to_series();
        if let Some((monomial, expected, actual)) = expected.first_difference(table.entry(k), 0) {
            return check.param("k", k).fail(
                k_max,
                Witness {
                    monomial,
                    expected,
                    actual,
                },
            );
        }
    }
    check.pass(k_max)
}

/// The one-dimensionality anchors: for n >= 2 every `conf_poincare(n, k)`
/// has constant coefficient 1 (the infinite-dimensional limit is
/// one-dimensional in each fixed degree window), and for n >= 3 nothing
/// lives in degrees `1 .. n-2`. Checked on the grid n in `2..=k_max.max(2)`,
/// k in `1..=k_max`. On the line (n = 1) all factors are constants and the
/// polynomial collapses to k!, which [`e_one_check`] covers instead.
pub fn e_infinity_check(k_max: u32) -> ReportDocument {
    assert!(k_max >= 1);
    let check = Check::new("e-infinity").param("k_max", k_max);
    for n in 2..=k_max.max(2) {
        for k in 1..=k_max {
            let poly = conf_poincare(n, k).poly;
            let fail = |degree: i64, expected: u128, actual: u128| Witness {
                monomial: Monomial::new(vec![0], degree),
                expected: Rational::from_int(expected as i64),
                actual: Rational::from_int(actual as i64),
            };
            let constant = poly.coefficient(0);
            if constant != 1 {
                return check
                    .param("n", n)
                    .param("k", k)
                    .fail(k_max, fail(0, 1, constant));
            }
            for degree in 1..i64::from(n) - 1 {
                let c = poly.coefficient(degree);
                if c != 0 {
                    return check
                        .param("n", n)
                        .param("k", k)
                        .fail(k_max, fail(degree, 0, c));
                }
            }
        }
    }
    check.pass(k_max)
}

/// The one-dimensional anchor: on the line, components of the
/// configuration space correspond to orderings, so `conf_poincare(1, k)` at
/// q = 1 must equal `k!` for every `k <= k_max`.
pub fn e_one_check(k_max: u32) -> ReportDocument {
    assert!(k_max >= 1);
    let check = Check::new("e-one").param("k_max", k_max);
    let mut factorial: u128 = 1;
    for k in 1..=k_max {
        factorial *= u128::from(k);
        let value = conf_poincare(1, k).poly.eval_at_one();
        if value != factorial {
            return check.param("k", k).fail(
                k_max,
                Witness {
                    monomial: Monomial::new(vec![0], 0),
                    expected: Rational::from_bigint(BigInt::from(factorial)),
                    actual: Rational::from_bigint(BigInt::from(value)),
                },
            );
        }
    }
    check.pass(k_max)
}

/// The two classical triples bracketing the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    /// Non-unital tensor algebra: `dw/(1 - dw)`.
    Associative,
    /// Non-unital symmetric algebra: `(1-w)^{-d} - 1`.
    Symmetric,
}

/// Word-length dimension series of the free associative or symmetric
/// algebra on a space of dimension d (non-unital: summation starts at word
/// length 1).
pub fn triple_dimension_series(which: TripleKind, d: u32, order: u32) -> Series {
    let kind = match which {
        TripleKind::Associative => FunctorKind::Geometric,
        TripleKind::Symmetric => FunctorKind::Exponential,
    };
    hilbert_model(kind, d, order).expect("both triples have dimension models")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::layers::a_k_recurrence_wrong_multiplicity;

    #[test]
    fn two_points_is_a_sphere() {
        // on the line the two components collapse into the constant term
        assert_eq!(conf_poincare(1, 2).poly.coefficient(0), 2);
        for n in 2..=6u32 {
            let p = conf_poincare(n, 2).poly;
            assert_eq!(p.coefficient(0), 1);
            assert_eq!(p.coefficient(i64::from(n) - 1), 1);
            assert_eq!(p.eval_at_one(), 2);
        }
    }

    #[test]
    fn three_points_in_the_plane() {
        let p = conf_poincare(2, 3).poly;
        assert_eq!(p.to_series().to_string(), "1 + 3*q + 2*q^2");
    }

    #[test]
    fn line_counts_permutations() {
        for k in 1..=10u32 {
            let p = conf_poincare(1, k).poly;
            assert_eq!(p.degree(), 0);
            assert_eq!(p.eval_at_one(), (1..=u128::from(k)).product(), "k = {k}");
        }
    }

    #[test]
    fn value_at_one_counts_orderings_in_every_dimension() {
        for n in 1..=6u32 {
            let mut fact: u128 = 1;
            for k in 1..=12u32 {
                fact *= u128::from(k);
                assert_eq!(conf_poincare(n, k).poly.eval_at_one(), fact, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn factor_recursion() {
        for n in 2..=5u32 {
            for k in 2..=8u32 {
                let whole = conf_poincare(n, k).poly;
                let prev = conf_poincare(n, k - 1)
                    .poly
                    .times_one_plus(u128::from(k - 1), i64::from(n) - 1);
                assert_eq!(whole, prev, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn top_coefficient_is_factorial_of_k_minus_one() {
        for n in 2..=5u32 {
            for k in 1..=8u32 {
                let p = conf_poincare(n, k).poly;
                let top = i64::from(k - 1) * (i64::from(n) - 1);
                let expected: u128 = (1..=u128::from(k - 1)).product();
                assert_eq!(p.coefficient(top), expected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn difhom_certification_small() {
        assert!(verify_difhom(2, 12).passed());
        assert!(verify_difhom(5, 8).passed());
    }

    #[test]
    fn difhom_negative_control() {
        // the wrong-multiplicity recurrence must disagree with the
        // configuration polynomials, first at k = 3
        let table = a_k_recurrence_wrong_multiplicity(&LayerInput::ones(2), 4);
        let expected = conf_poincare(2, 3).poly.to_series();
        let diff = expected.first_difference(table.entry(3), 0);
        let (monomial, exp, act) = diff.expect("wrong multiplicity must be caught");
        assert_eq!(monomial, Monomial::new(vec![0], 1));
        assert_eq!(exp, Rational::from_int(3));
        assert_eq!(act, Rational::from_int(2));
    }

    #[test]
    fn e_infinity_anchors() {
        let r = e_infinity_check(8);
        assert!(r.passed(), "{}", r.summary_line());
        assert_eq!(conf_poincare(3, 4).poly.coefficient(0), 1);
        assert_eq!(conf_poincare(3, 4).poly.coefficient(1), 0);
    }

    #[test]
    fn triple_series() {
        assert_eq!(
            triple_dimension_series(TripleKind::Associative, 1, 4).to_string(),
            "x + x^2 + x^3 + x^4"
        );
        let sym = triple_dimension_series(TripleKind::Symmetric, 2, 3);
        for (k, c) in [(1u32, 2i64), (2, 3), (3, 4)] {
            assert_eq!(sym.univariate_coefficient(k), Rational::from_int(c));
        }
        assert!(triple_dimension_series(TripleKind::Associative, 0, 5).is_zero());
    }
}
