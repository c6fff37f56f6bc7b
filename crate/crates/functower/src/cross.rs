//! Cross effects of univariate series models.
//!
//! The m-th cross effect is defined inductively by splitting the first
//! variable: `cr_m f(x1,..,xm)` is what is left of `cr_{m-1} f(x1+x2,
//! x3,..,xm)` after removing the two embedded copies of `cr_{m-1}`. The
//! closed inclusion-exclusion form `sum_{S subset [m]} (-1)^{m-|S|}
//! f(sum_{i in S} x_i)` is provably equal and serves as the independent
//! oracle (and the fast path).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::functor::{hilbert_model, FunctorKind};
use crate::lie::plethystic_lie;
use crate::rational::Rational;
use crate::report::{Check, ReportDocument, Witness};
use crate::series::{Monomial, Series};

/// An m-variate cross effect of a univariate base series. The value is
/// reduced in every variable: substituting 0 for any variable kills it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossEffect {
    pub base: Series,
    pub arity: usize,
    pub value: Series,
}

fn require_reduced_univariate(f: &Series, context: &'static str) -> Result<(), Error> {
    assert_eq!(f.num_vars(), 1, "cross effects take a univariate series");
    if !f.is_reduced() {
        return Err(Error::NotReduced { context });
    }
    Ok(())
}

/// Computes `cr_m f` by unwinding the inductive definition: repeated
/// two-variable splitting of the first slot.
pub fn cross_effect_recursive(f: &Series, m: usize) -> Result<CrossEffect, Error> {
    require_reduced_univariate(f, "cross_effect_recursive")?;
    assert!(m >= 1, "cross effects start at arity 1");
    let order = f.truncation_order();
    let mut value = f.clone(); // cr_1 f = f for reduced f
    for arity in 2..=m {
        let var = |i: usize| Series::var(arity, i, order);
        // cr_{arity-1} has arity-1 slots; split the first one. The two
        // subtracted copies are plain variable relabelings.
        let mut split_args = vec![&var(0) + &var(1)];
        let mut left_map = vec![0usize];
        let mut right_map = vec![1usize];
        for i in 2..arity {
            split_args.push(var(i));
            left_map.push(i);
            right_map.push(i);
        }
        let split = value.substitute_per_var(&split_args)?;
        let left = value.rename_vars(arity, &left_map);
        let right = value.rename_vars(arity, &right_map);
        value = &(&split - &left) - &right;
    }
    Ok(CrossEffect {
        base: f.clone(),
        arity: m,
        value,
    })
}

/// Closed-form cross effect:
/// `cr_m f = sum over nonempty S subset [m] of (-1)^{m-|S|} f(sum_{i in S} x_i)`.
pub fn cross_effect_inclusion_exclusion(f: &Series, m: usize) -> Result<CrossEffect, Error> {
    require_reduced_univariate(f, "cross_effect_inclusion_exclusion")?;
    assert!(m >= 1, "cross effects start at arity 1");
    let order = f.truncation_order();
    // f(sum of s variables) is computed once per subset size; individual
    // subsets are variable relabelings of it.
    let mut by_size: Vec<Series> = Vec::with_capacity(m + 1);
    by_size.push(Series::zero(1, order));
    for s in 1..=m {
        let vars: Vec<Series> = (0..s).map(|i| Series::var(s, i, order)).collect();
        by_size.push(f.substitute(&vars)?);
    }
    let mut value = Series::zero(m, order);
    for mask in 1u32..(1 << m) {
        let slots: Vec<usize> = (0..m).filter(|i| mask & (1 << i) != 0).collect();
        let term = by_size[slots.len()].rename_vars(m, &slots);
        let even = (m - slots.len()).is_multiple_of(2);
        value = if even { &value + &term } else { &value - &term };
    }
    Ok(CrossEffect {
        base: f.clone(),
        arity: m,
        value,
    })
}

/// True iff `cr_{n+1} f` vanishes through `order`, i.e. the series behaves
/// like a polynomial functor of degree at most n.
pub fn is_degree_n(f: &Series, n: usize, order: u32) -> Result<bool, Error> {
    assert!(
        order <= f.truncation_order(),
        "degree test order {order} exceeds truncation {}",
        f.truncation_order()
    );
    if !f.is_reduced() {
        return Err(Error::NotReduced {
            context: "is_degree_n",
        });
    }
    // cr_m is m-multireduced: every term involves all m variables, so its
    // total degree is at least m and the value vanishes through any order
    // below the arity.
    if n as u32 >= order {
        return Ok(true);
    }
    let cr = cross_effect_inclusion_exclusion(f, n + 1)?;
    Ok(cr
        .value
        .first_difference(&Series::zero(n + 1, order), order)
        .is_none())
}

/// Coefficient of `x_1 x_2 .. x_n` in `cr_n f`, which equals `n! a_n` for
/// `f = sum a_k x^k`. Dividing by n! recovers the n-th layer at the ground
/// object in this model.
pub fn multilinear_part(f: &Series, n: usize) -> Result<Rational, Error> {
    assert!(
        n as u32 <= f.truncation_order(),
        "n exceeds the truncation order"
    );
    let cr = cross_effect_inclusion_exclusion(f, n)?;
    Ok(cr.value.coefficient(&Monomial::new(vec![1; n], 0)))
}

/// Verifies, in the word-length Hilbert model, that the inclusion-exclusion
/// `cr_2` equals the structural right-hand side dictated by the kind's
/// defining equation:
///
/// - exponential: `cr_2 F(X,Y) = F(X) (x) F(Y)`
/// - geometric: `cr_2 F(X,Y) = 2 F(X)(x)F(Y) + F(X v Y)(x)F(X)(x)F(Y)`
/// - logarithmic: `cr_2 F(X,Y) = L[T(X) (x) T(Y)]` with `T` the tensor
///   algebra series and `L` the free-Lie plethysm
///
/// Both sides are bigraded by word length in X and in Y; the left side is
/// assembled from independent series routes, the right from the closed
/// coefficient formulas.
pub fn cr2_structural_check(
    kind: FunctorKind,
    d_x: u32,
    d_y: u32,
    order: u32,
) -> Result<ReportDocument, Error> {
    let check = Check::new("cr2-structural")
        .param("kind", kind)
        .param("d_x", d_x)
        .param("d_y", d_y);
    let wx = Series::var(2, 0, order);
    let wy = Series::var(2, 1, order);
    let dx = Rational::from_int(i64::from(d_x));
    let dy = Rational::from_int(i64::from(d_y));
    let one = Series::one(2, order);
    let fx = hilbert_model(kind, d_x, order)?.embed(2, 0);
    let fy = hilbert_model(kind, d_y, order)?.embed(2, 1);
    let (joint, structural) = match kind {
        FunctorKind::Exponential => {
            // product route for the joint series: (1-x)^{-dx} (1-y)^{-dy} - 1
            let ax = wx.geometric_inverse()?.pow(d_x);
            let ay = wy.geometric_inverse()?.pow(d_y);
            (&(&ax * &ay) - &one, &fx * &fy)
        }
        FunctorKind::Geometric => {
            let s = &wx.scale(&dx) + &wy.scale(&dy);
            let joint = &s * &s.geometric_inverse()?;
            let prod = &fx * &fy;
            let structural = &prod.scale(&Rational::from_int(2)) + &(&joint * &prod);
            (joint, structural)
        }
        FunctorKind::Logarithmic => {
            let joint = plethystic_lie(&(&wx.scale(&dx) + &wy.scale(&dy)), order)?;
            let tx = &wx.scale(&dx) * &wx.scale(&dx).geometric_inverse()?;
            let ty = &wy.scale(&dy) * &wy.scale(&dy).geometric_inverse()?;
            let structural = plethystic_lie(&(&tx * &ty), order)?;
            (joint, structural)
        }
        FunctorKind::TypeF { .. } => return Err(Error::UnsupportedModel { kind: "type_f" }),
    };
    let cr2 = &(&joint - &fx) - &fy;
    Ok(check.compare(&structural, &cr2, order))
}

/// Draws a random reduced polynomial of degree between 1 and `order` with
/// small integer coefficients and a nonzero top coefficient.
pub fn random_reduced_polynomial(rng: &mut impl Rng, order: u32) -> Series {
    let degree = rng.gen_range(1..=order);
    let mut terms = Vec::new();
    for k in 1..=degree {
        let c: i64 = if k == degree {
            let mag = rng.gen_range(1..=9i64);
            if rng.gen_bool(0.5) {
                mag
            } else {
                -mag
            }
        } else {
            rng.gen_range(-9..=9i64)
        };
        if c != 0 {
            terms.push((Monomial::new(vec![k], 0), Rational::from_int(c)));
        }
    }
    Series::from_terms(1, order, terms)
}

/// Seeded equivalence run: for `count` random polynomials and every arity
/// up to `max_arity`, the recursive and inclusion-exclusion cross effects
/// must agree exactly, and the degree test must locate the polynomial
/// degree. Deterministic for a fixed seed.
pub fn oracle_equivalence_check(
    seed: u64,
    count: u32,
    max_arity: usize,
    order: u32,
) -> ReportDocument {
    let check = Check::new("cross-effect-oracle")
        .param("seed", seed)
        .param("count", count)
        .param("max_arity", max_arity);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let poly_order = rng.gen_range(2..=order.max(2));
        let f = random_reduced_polynomial(&mut rng, poly_order);
        if f.is_zero() {
            continue;
        }
        let order = poly_order;
        for m in 1..=max_arity {
            let rec = cross_effect_recursive(&f, m).expect("sampled polynomial is reduced");
            let ie =
                cross_effect_inclusion_exclusion(&f, m).expect("sampled polynomial is reduced");
            if let Some((monomial, expected, actual)) = ie.value.first_difference(&rec.value, order)
            {
                return check.fail(
                    order,
                    Witness {
                        monomial,
                        expected,
                        actual,
                    },
                );
            }
        }
        let degree = (1..=order)
            .rev()
            .find(|&k| !f.univariate_coefficient(k).is_zero())
            .expect("nonzero polynomial has a degree");
        let at_degree =
            is_degree_n(&f, degree as usize, order).expect("sampled polynomial is reduced");
        if !at_degree {
            let cr = cross_effect_inclusion_exclusion(&f, degree as usize + 1).unwrap();
            let (monomial, actual) = cr
                .value
                .terms()
                .map(|(m, c)| (m.clone(), c.clone()))
                .next()
                .expect("a failed degree test leaves a nonzero term");
            return check.fail(
                order,
                Witness {
                    monomial,
                    expected: Rational::zero(),
                    actual,
                },
            );
        }
        let below =
            is_degree_n(&f, degree as usize - 1, order).expect("sampled polynomial is reduced");
        if below {
            // cr_degree should have retained the multilinear term deg! * a_deg
            let expected = multilinear_part(&f, degree as usize).unwrap();
            return check.fail(
                order,
                Witness {
                    monomial: Monomial::new(vec![1; degree as usize], 0),
                    expected,
                    actual: Rational::zero(),
                },
            );
        }
    }
    check.pass(order)
}
