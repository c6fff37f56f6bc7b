//! Taylor-tower layers of the four functor classes, driven by the first
//! layer `D_1 F` and its value on the ground field.
//!
//! For the geometric, exponential, and logarithmic classes the layers have
//! closed forms. For type f_n the module computes the multilinearized
//! differentials `A_k`, not the layers themselves: the symmetric-group
//! action on `A_k` is only pinned down at the ground field, and that case is
//! certified against configuration-space homology in [`crate::conf`].

use std::collections::BTreeMap;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::functor::FunctorKind;
use crate::lie::witt;
use crate::rational::{binomial, Rational};
use crate::series::Series;

/// The data a layer computation starts from: the series of `D_1 F(X)`, the
/// series of `D_1 F` on the ground field (a pure q-polynomial), and the
/// suspension parameter n for the type-f_n recurrence.
#[derive(Clone, Debug)]
pub struct LayerInput {
    pub d1: Series,
    pub d1_at_ground: Series,
    pub n: u32,
}

impl LayerInput {
    pub fn new(d1: Series, d1_at_ground: Series, n: u32) -> Self {
        assert!(n >= 1, "suspension parameter must be positive");
        assert_eq!(
            d1.num_vars(),
            d1_at_ground.num_vars(),
            "variable count mismatch"
        );
        assert!(
            d1_at_ground.terms().all(|(m, _)| m.arity_degree() == 0),
            "d1_at_ground must be a pure q-polynomial"
        );
        LayerInput {
            d1,
            d1_at_ground,
            n,
        }
    }

    /// The ground-field instantiation: both inputs are the constant 1.
    pub fn ones(n: u32) -> Self {
        LayerInput::new(Series::one(1, 1), Series::one(1, 1), n)
    }
}

/// Map from layer index k (from 1) to the layer or differential series.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LayerTable {
    #[serde(flatten)]
    pub kind: FunctorKind,
    pub entries: BTreeMap<u32, Series>,
}

impl LayerTable {
    pub fn entry(&self, k: u32) -> &Series {
        &self.entries[&k]
    }
}

/// `|P(k-1, s)| = (k-1)! / (k-1-s)!`: ordered selections of s letters out
/// of k-1.
pub fn falling_factorial(k_minus_1: u32, s: u32) -> u64 {
    assert!(
        s <= k_minus_1,
        "selection size {s} out of range for {k_minus_1} letters"
    );
    let base = u64::from(k_minus_1);
    (0..u64::from(s)).fold(1u64, |acc, i| {
        acc.checked_mul(base - i)
            .expect("falling factorial exceeds u64")
    })
}

/// Layers of a geometric-type functor: the k-th layer is the k-th tensor
/// power of the first.
pub fn layers_geometric(input: &LayerInput, k_max: u32) -> LayerTable {
    assert!(k_max >= 1);
    LayerTable {
        kind: FunctorKind::Geometric,
        entries: (1..=k_max).map(|k| (k, input.d1.pow(k))).collect(),
    }
}

/// Extracts the dimension of a series concentrated in arity and q degree 0.
fn constant_dimension(s: &Series) -> Result<u32, Error> {
    if s.is_zero() {
        return Ok(0);
    }
    let mut terms = s.terms();
    let (m, c) = terms.next().expect("nonzero series has a term");
    if terms.next().is_some() || m.arity_degree() != 0 || m.q_exponent != 0 {
        return Err(Error::NotConstantDimension);
    }
    match c.as_integer() {
        Some(v) if v >= BigInt::from(0) => {
            u32::try_from(v).map_err(|_| Error::NotConstantDimension)
        }
        _ => Err(Error::NotConstantDimension),
    }
}

/// Layers of an exponential-type functor on a degree-0 input of dimension d:
/// the k-th layer is the symmetric power, of dimension `C(d+k-1, k)`.
/// Inputs with q-graded `d1` are rejected; symmetrizing those would need
/// sign conventions that are out of scope here.
pub fn layers_exponential(input: &LayerInput, k_max: u32) -> Result<LayerTable, Error> {
    assert!(k_max >= 1);
    let d = constant_dimension(&input.d1)?;
    let nv = input.d1.num_vars();
    let order = input.d1.truncation_order();
    let entries = (1..=k_max)
        .map(|k| {
            let dim = binomial(&BigInt::from(d + k - 1), u64::from(k));
            (k, Series::constant(nv, order, Rational::from_bigint(dim)))
        })
        .collect();
    Ok(LayerTable {
        kind: FunctorKind::Exponential,
        entries,
    })
}

/// Layers of a logarithmic-type functor on a degree-0 input of dimension d:
/// entry 1 is `d1` itself; for k >= 2 the k-th layer is
/// `l_k(d) * D_1 F(ground)`, the free-Lie dimension times the ground value.
pub fn layers_logarithmic(input: &LayerInput, k_max: u32) -> Result<LayerTable, Error> {
    assert!(k_max >= 1);
    let d = constant_dimension(&input.d1)?;
    let mut entries = BTreeMap::new();
    entries.insert(1, input.d1.clone());
    for k in 2..=k_max {
        let l = if d == 0 {
            Rational::zero()
        } else {
            Rational::from_bigint(BigInt::from(witt(d, k)))
        };
        entries.insert(k, input.d1_at_ground.scale(&l));
    }
    Ok(LayerTable {
        kind: FunctorKind::Logarithmic,
        entries,
    })
}

fn a_k_with_multiplicity(
    input: &LayerInput,
    k_max: u32,
    multiplicity: impl Fn(u32, u32) -> u64,
) -> LayerTable {
    assert!(k_max >= 1);
    let d1 = &input.d1;
    let d1g = &input.d1_at_ground;
    let shift = i64::from(input.n) - 1;
    let mut table: Vec<Series> = vec![
        Series::one(d1.num_vars(), d1.truncation_order()),
        d1.clone(),
    ];
    for k in 2..=k_max {
        let mut acc = &table[(k - 1) as usize] * d1;
        for s in 1..=k - 1 {
            let mult = Rational::from_int(
                i64::try_from(multiplicity(k - 1, s)).expect("multiplicity fits i64"),
            );
            let block = &(&d1.pow(s) * &table[(k - 1 - s) as usize]) * &(d1 * d1g);
            acc = &acc + &block.scale(&mult).shift_q(i64::from(s) * shift);
        }
        table.push(acc);
    }
    LayerTable {
        kind: FunctorKind::TypeF { n: input.n },
        entries: (1..=k_max)
            .map(|k| (k, table[k as usize].clone()))
            .collect(),
    }
}

/// The multilinearized differentials of a type-f_n functor:
///
/// `A_1 = D_1F`, and for k >= 2
/// `A_k = A_{k-1} (x) D_1F  +  sum_{s=1}^{k-1} q^{s(n-1)} |P(k-1,s)|
///        (D_1F)^{(x) s} (x) A_{k-s-1} (x) D_1F (x) D_1F(ground)`
///
/// with `A_0` the ground field and `|P(k-1,s)|` the falling factorial.
pub fn a_k_recurrence(input: &LayerInput, k_max: u32) -> LayerTable {
    a_k_with_multiplicity(input, k_max, falling_factorial)
}

/// Deliberately wrong variant using `s!` in place of the falling factorial;
/// kept as a negative control so the certification against
/// configuration-space homology is known to have teeth.
pub fn a_k_recurrence_wrong_multiplicity(input: &LayerInput, k_max: u32) -> LayerTable {
    a_k_with_multiplicity(input, k_max, |_, s| (1..=u64::from(s)).product())
}

/// Number of monomials of total degree `k` in `d` variables, by direct
/// recursion. Independent oracle for the symmetric-power dimensions.
fn monomial_count(d: u32, k: u32) -> u64 {
    match (d, k) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => (0..=k).map(|j| monomial_count(d - 1, k - j)).sum(),
    }
}

/// Checks the three layer closed forms against independent routes:
/// geometric layers on `d1 = x` against the analytic multilinear part of
/// `x/(1-x)` divided by `k!`; exponential dimensions against a brute-force
/// monomial count; logarithmic dimensions against the Witt numbers scaled
/// by the ground value. Grid: `d <= 3`, `k <= k_max`.
pub fn layer_formulas_check(k_max: u32) -> crate::report::ReportDocument {
    use crate::report::{Check, Witness};
    let check = Check::new("layer-formulas").param("k_max", k_max);
    let fail = |params: [(&str, String); 2], expected: Rational, actual: Rational| {
        let mut c = Check::new("layer-formulas").param("k_max", k_max);
        for (key, value) in params {
            c = c.param(key, value);
        }
        c.fail(
            k_max,
            Witness {
                monomial: crate::series::Monomial::unit(1),
                expected,
                actual,
            },
        )
    };

    // geometric at d1 = x versus the analytic model, k <= 6
    let order = k_max.max(6);
    let input = LayerInput::new(Series::var(1, 0, order), Series::one(1, order), 1);
    let table = layers_geometric(&input, k_max.min(6));
    let geo = crate::functor::closed_form(
        FunctorKind::Geometric,
        &crate::functor::ClosedFormParams::unit(),
        order,
    );
    for k in 1..=k_max.min(6) {
        let layer = table.entry(k).coefficient_of(&[k], 0);
        let analytic = crate::cross::multilinear_part(&geo, k as usize)
            .expect("closed form is reduced")
            * Rational::from_bigint(crate::rational::factorial(u64::from(k))).recip();
        if layer != analytic {
            return fail(
                [("kind", "geometric".into()), ("k", k.to_string())],
                analytic,
                layer,
            );
        }
    }

    for d in 0..=3u32 {
        let input = LayerInput::new(
            Series::constant(1, 1, Rational::from_int(i64::from(d))),
            Series::one(1, 1),
            1,
        );
        let exp_table = layers_exponential(&input, k_max).expect("constant input");
        let log_table = layers_logarithmic(&input, k_max).expect("constant input");
        for k in 1..=k_max {
            let got = exp_table.entry(k).coefficient_of(&[0], 0);
            let expect = Rational::from_int(monomial_count(d, k) as i64);
            if got != expect {
                return fail(
                    [("kind", "exponential".into()), ("d", d.to_string())],
                    expect,
                    got,
                );
            }
            if k >= 2 && d >= 1 {
                let got = log_table.entry(k).coefficient_of(&[0], 0);
                let expect = Rational::from_bigint(num::bigint::BigInt::from(witt(d, k)));
                if got != expect {
                    return fail(
                        [("kind", "logarithmic".into()), ("d", d.to_string())],
                        expect,
                        got,
                    );
                }
            }
        }
    }
    check.pass(k_max)
}
