//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`). Every comparison is exact
//! rational equality; there are no tolerances anywhere.

use std::collections::BTreeMap;

use functower::conf::{conf_poincare, e_infinity_check, e_one_check};
use functower::cross::{multilinear_part, oracle_equivalence_check};
use functower::functor::{
    closed_form, equation_residual, solve_reduced, ClosedFormParams, FunctorKind,
};
use functower::layers::{
    a_k_recurrence, a_k_recurrence_wrong_multiplicity, layers_exponential, layers_geometric,
    layers_logarithmic, LayerInput,
};
use functower::lie::{
    fn_composition_check, lyndon_count, pbw_dimension_check, pbw_functional_identity,
    pbw_functional_identity_with_exponent, plethystic_lie, witt,
};
use functower::rational::{factorial, Rational};
use functower::series::{Monomial, Series};

fn criterion(id: u32, name: &str, body: impl FnOnce() -> Result<(), String>) {
    match body() {
        Ok(()) => println!("criterion {id:02} {name}: PASS"),
        Err(msg) => {
            println!("criterion {id:02} {name}: FAIL ({msg})");
            panic!("criterion {id:02} {name} failed: {msg}");
        }
    }
}

fn all_kinds() -> Vec<FunctorKind> {
    vec![
        FunctorKind::Exponential,
        FunctorKind::Geometric,
        FunctorKind::Logarithmic,
        FunctorKind::TypeF { n: 1 },
        FunctorKind::TypeF { n: 2 },
        FunctorKind::TypeF { n: 3 },
        FunctorKind::TypeF { n: 4 },
    ]
}

#[test]
fn criterion_01_functional_equation_residuals() {
    criterion(1, "functional-equation-residuals", || {
        for kind in all_kinds() {
            for a in 1..=3i64 {
                let params = ClosedFormParams::new(Rational::from_int(a));
                let f = closed_form(kind, &params, 12);
                let r = equation_residual(kind, &f, 12).map_err(|e| e.to_string())?;
                if !r.is_zero() {
                    return Err(format!("nonzero residual for {kind} at a={a}: {r}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_02_solver_uniqueness() {
    criterion(2, "solver-uniqueness", || {
        for kind in all_kinds() {
            for a in 1..=3i64 {
                let scale = Rational::from_int(a);
                let expected = closed_form(kind, &ClosedFormParams::new(scale.clone()), 12);
                let solved = solve_reduced(kind, &scale, 12).map_err(|e| e.to_string())?;
                if solved != expected {
                    return Err(format!("solver drifted from closed form for {kind} a={a}"));
                }
            }
        }
        Ok(())
    });
}

/// Independent route to the configuration polynomial: plain i128 maps,
/// no shared code with `QPolynomial` or `Series`.
fn conf_oracle(n: u32, k: u32) -> BTreeMap<i64, i128> {
    let mut poly = BTreeMap::from([(0i64, 1i128)]);
    for j in 1..i128::from(k) {
        let mut next = poly.clone();
        for (&deg, &c) in &poly {
            *next.entry(deg + i64::from(n) - 1).or_insert(0) += j * c;
        }
        poly = next;
    }
    poly
}

#[test]
fn criterion_03_difhom_certification() {
    criterion(3, "difhom-certification", || {
        for n in 1..=5u32 {
            let table = a_k_recurrence(&LayerInput::ones(n), 12);
            for k in 2..=12u32 {
                let oracle = conf_oracle(n, k);
                let entry = table.entry(k);
                let max_deg = i64::from(k - 1) * (i64::from(n) - 1);
                for deg in 0..=max_deg {
                    let expected = Rational::from_int(
                        i64::try_from(oracle.get(&deg).copied().unwrap_or(0))
                            .expect("oracle coefficient fits i64"),
                    );
                    let actual = entry.coefficient_of(&[0], deg);
                    if actual != expected {
                        return Err(format!(
                            "n={n} k={k} q^{deg}: expected {expected}, got {actual}"
                        ));
                    }
                }
                if entry.num_terms() != oracle.values().filter(|&&c| c != 0).count() {
                    return Err(format!(
                        "n={n} k={k}: stray terms beyond the oracle support"
                    ));
                }
            }
            // stated value: two points give 1 + q^{n-1}; at n = 1 the two
            // summands share the monomial q^0
            let e2 = table.entry(2);
            let ok = if n == 1 {
                e2.coefficient_of(&[0], 0) == Rational::from_int(2) && e2.num_terms() == 1
            } else {
                e2.coefficient_of(&[0], 0) == Rational::one()
                    && e2.coefficient_of(&[0], i64::from(n) - 1) == Rational::one()
                    && e2.num_terms() == 2
            };
            if !ok {
                return Err(format!("A_2 at n={n} is not 1 + q^(n-1)"));
            }
        }
        // stated value: three points in the plane give 1 + 3q + 2q^2
        let t = a_k_recurrence(&LayerInput::ones(2), 3);
        if t.entry(3).to_string() != "1 + 3*q + 2*q^2" {
            return Err(format!("A_3 at n=2 is {}", t.entry(3)));
        }
        Ok(())
    });
}

#[test]
fn criterion_04_e1_and_e_infinity_anchors() {
    criterion(4, "e1-e-infinity-anchors", || {
        let mut fact: u128 = 1;
        for k in 1..=10u32 {
            fact *= u128::from(k);
            let value = conf_poincare(1, k).poly.eval_at_one();
            if value != fact {
                return Err(format!(
                    "conf(1,{k}) at q=1 is {value}, expected {k}!={fact}"
                ));
            }
        }
        let r = e_one_check(10);
        if !r.passed() {
            return Err(r.summary_line());
        }
        let r = e_infinity_check(12);
        if !r.passed() {
            return Err(r.summary_line());
        }
        // beyond the constant term: nothing below degree n-1
        for n in 3..=6u32 {
            for k in 2..=8u32 {
                let p = conf_poincare(n, k).poly;
                if p.coefficient(1) != 0 {
                    return Err(format!("conf({n},{k}) has a class in degree 1"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_05_pbw_suite() {
    criterion(5, "pbw-suite", || {
        let r = pbw_functional_identity(30);
        if !r.passed() {
            return Err(r.summary_line());
        }
        for n in 1..=4u32 {
            let r = fn_composition_check(n, 12);
            if !r.passed() {
                return Err(r.summary_line());
            }
        }
        for d in 1..=3u32 {
            let r = pbw_dimension_check(d, 12);
            if !r.passed() {
                return Err(r.summary_line());
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_06_witt_vs_lyndon() {
    criterion(6, "witt-vs-lyndon", || {
        for d in 1..=3u32 {
            for k in 1..=12u32 {
                let formula = witt(d, k);
                let enumerated = lyndon_count(d, k).map_err(|e| e.to_string())?;
                if formula != enumerated {
                    return Err(format!(
                        "d={d} k={k}: necklace formula {formula} vs enumeration {enumerated}"
                    ));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_07_cross_effect_oracle_equivalence() {
    criterion(7, "cross-effect-oracle", || {
        let r = oracle_equivalence_check(2024, 100, 5, 8);
        if r.passed() {
            Ok(())
        } else {
            Err(r.summary_line())
        }
    });
}

/// Monomial-count oracle for symmetric power dimensions: the number of
/// exponent vectors of d variables summing to k, by direct recursion.
fn count_monomials(d: u32, k: u32) -> i64 {
    match (d, k) {
        (_, 0) => 1,
        (0, _) => 0,
        _ => (0..=k).map(|j| count_monomials(d - 1, k - j)).sum(),
    }
}

#[test]
fn criterion_08_layer_closed_forms() {
    criterion(8, "layer-closed-forms", || {
        // geometric: k-th entry is the k-th power of the first
        let q_input = LayerInput::new(Series::one(1, 1).shift_q(1), Series::one(1, 1), 1);
        let t = layers_geometric(&q_input, 5);
        for k in 1..=5u32 {
            if t.entry(k).coefficient_of(&[0], i64::from(k)) != Rational::one() {
                return Err(format!("geometric layer {k} of q is not q^{k}"));
            }
        }
        for d in 0..=3i64 {
            let input = LayerInput::new(
                Series::constant(1, 1, Rational::from_int(d)),
                Series::one(1, 1),
                1,
            );
            let geo = layers_geometric(&input, 6);
            let exp = layers_exponential(&input, 6).map_err(|e| e.to_string())?;
            let log = layers_logarithmic(&input, 6).map_err(|e| e.to_string())?;
            for k in 1..=6u32 {
                let g = geo.entry(k).coefficient_of(&[0], 0);
                if g != Rational::from_int(d).pow(k as i32) {
                    return Err(format!("geometric d={d} k={k}: {g}"));
                }
                let e = exp.entry(k).coefficient_of(&[0], 0);
                if e != Rational::from_int(count_monomials(d as u32, k)) {
                    return Err(format!("exponential d={d} k={k}: {e}"));
                }
                if k >= 2 {
                    let l = log.entry(k).coefficient_of(&[0], 0);
                    let expect = if d == 0 {
                        Rational::zero()
                    } else {
                        Rational::from_int(witt(d as u32, k) as i64)
                    };
                    if l != expect {
                        return Err(format!("logarithmic d={d} k={k}: {l} vs {expect}"));
                    }
                }
            }
        }
        // logarithmic layers scale by the ground value
        let input = LayerInput::new(
            Series::constant(1, 1, Rational::from_int(2)),
            Series::one(1, 1).shift_q(2).scale(&Rational::from_int(3)),
            1,
        );
        let log = layers_logarithmic(&input, 4).map_err(|e| e.to_string())?;
        for k in 2..=4u32 {
            let expect = Rational::from_int(3 * witt(2, k) as i64);
            if log.entry(k).coefficient_of(&[0], 2) != expect {
                return Err(format!("ground scaling broken at k={k}"));
            }
        }
        // cross-check against the analytic model: multilinear_part / k!
        let geo_series = closed_form(FunctorKind::Geometric, &ClosedFormParams::unit(), 6);
        let x_input = LayerInput::new(Series::var(1, 0, 6), Series::one(1, 6), 1);
        let table = layers_geometric(&x_input, 6);
        for k in 1..=6usize {
            let layer = table.entry(k as u32).coefficient_of(&[k as u32], 0);
            let analytic = multilinear_part(&geo_series, k).map_err(|e| e.to_string())?
                * Rational::from_bigint(factorial(k as u64)).recip();
            if layer != analytic {
                return Err(format!("analytic cross-check failed at k={k}"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_09_type_f_limit_to_exponential() {
    criterion(9, "type-f-limit", || {
        let tables: Vec<Series> = (2..=10)
            .map(|n| closed_form(FunctorKind::TypeF { n }, &ClosedFormParams::unit(), 8))
            .collect();
        for k in 2..=8u32 {
            let floor = Rational::from_bigint(factorial(u64::from(k))).recip();
            for i in 0..tables.len() - 1 {
                let cur = tables[i].univariate_coefficient(k);
                let next = tables[i + 1].univariate_coefficient(k);
                if next >= cur {
                    return Err(format!("a_{k} not strictly decreasing at n={}", i + 2));
                }
                if next <= floor {
                    return Err(format!("a_{k} fell to 1/{k}! at n={}", i + 3));
                }
                let lhs = &(&next - &floor) + &(&next - &floor);
                if lhs > &cur - &floor {
                    return Err(format!("a_{k} - 1/{k}! not halving at n={}", i + 2));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_10_hilbert_level_logarithmic_equation() {
    criterion(10, "hilbert-log-equation", || {
        let order = 8;
        let tensor = |d: i64| {
            let g = Series::var(1, 0, order).scale(&Rational::from_int(d));
            &g * &g.geometric_inverse().expect("reduced")
        };
        let witt_series = |d: u32| {
            Series::from_terms(
                1,
                order,
                (1..=order).map(|k| {
                    (
                        Monomial::new(vec![k], 0),
                        Rational::from_int(witt(d, k) as i64),
                    )
                }),
            )
        };
        for dx in 1..=2u32 {
            for dy in 1..=2u32 {
                let lhs = witt_series(dx + dy);
                let composite = plethystic_lie(&(&tensor(dx as i64) * &tensor(dy as i64)), order)
                    .map_err(|e| e.to_string())?;
                let rhs = &(&witt_series(dx) + &witt_series(dy)) + &composite;
                if lhs != rhs {
                    return Err(format!("decomposition fails at d_x={dx} d_y={dy}"));
                }
            }
        }
        // worked instance at d_x = d_y = 1
        let l = plethystic_lie(&(&tensor(1) * &tensor(1)), 5).map_err(|e| e.to_string())?;
        if l.to_string() != "x^2 + 2*x^3 + 3*x^4 + 6*x^5" {
            return Err(format!("worked instance gave {l}"));
        }
        Ok(())
    });
}

#[test]
fn criterion_11_negative_controls() {
    criterion(11, "negative-controls", || {
        let r = pbw_functional_identity_with_exponent(&Rational::new(10001, 10000), 12);
        if r.passed() {
            return Err("perturbed identity was not caught".into());
        }
        let w = r
            .witness
            .ok_or("perturbed identity failed without a witness")?;
        if w.monomial != Monomial::new(vec![2], 0) {
            return Err(format!("witness expected at x^2, got {}", w.monomial));
        }
        let wrong = a_k_recurrence_wrong_multiplicity(&LayerInput::ones(2), 12);
        let mut caught = None;
        for k in 2..=12u32 {
            let expected = conf_poincare(2, k).poly.to_series();
            if let Some((monomial, exp, act)) = expected.first_difference(wrong.entry(k), 0) {
                caught = Some((k, monomial, exp, act));
                break;
            }
        }
        let (k, monomial, exp, act) =
            caught.ok_or("wrong-multiplicity recurrence slipped through")?;
        if k != 3 || monomial != Monomial::new(vec![0], 1) {
            return Err(format!(
                "first mismatch expected at k=3, q^1; got k={k}, {monomial}"
            ));
        }
        if exp != Rational::from_int(3) || act != Rational::from_int(2) {
            return Err(format!("witness values {exp}/{act} unexpected"));
        }
        Ok(())
    });
}
