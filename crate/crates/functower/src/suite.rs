//! The aggregated verification suite behind `verify all` and `report`.
//!
//! Each entry is an independent closure producing one [`ReportDocument`];
//! the runner fans them out over a worker pool and returns the results in
//! the fixed suite order, so output is deterministic for any parallelism.

use rayon::prelude::*;

use crate::conf::{e_infinity_check, e_one_check, verify_difhom};
use crate::cross::{cr2_structural_check, oracle_equivalence_check};
use crate::functor::{
    functional_equation_check, solver_uniqueness_check, type_f_limit_check, FunctorKind,
};
use crate::layers::{a_k_recurrence_wrong_multiplicity, layer_formulas_check, LayerInput};
use crate::lie::{
    fn_composition_check, log_hilbert_equation_check, pbw_dimension_check,
    pbw_functional_identity_with_exponent, witt_lyndon_check,
};
use crate::rational::Rational;
use crate::report::{Check, ReportDocument};

type NamedCheck = Box<dyn Fn() -> ReportDocument + Send + Sync>;

/// Verifies that the deliberately broken identities are caught: the
/// perturbed exponent in the PBW identity and the `s!` multiplicity in the
/// differential recurrence must both fail with a witness monomial.
pub fn negative_controls_check() -> ReportDocument {
    let check = Check::new("negative-controls");
    let perturbed = pbw_functional_identity_with_exponent(&Rational::new(10001, 10000), 12);
    if perturbed.passed() || perturbed.witness.is_none() {
        return check.param("control", "pbw-perturbed").fail(
            12,
            crate::report::Witness {
                monomial: crate::series::Monomial::new(vec![2], 0),
                expected: Rational::zero(),
                actual: Rational::zero(),
            },
        );
    }
    let wrong = a_k_recurrence_wrong_multiplicity(&LayerInput::ones(2), 4);
    let expected = crate::conf::conf_poincare(2, 3).poly.to_series();
    match expected.first_difference(wrong.entry(3), 0) {
        Some(_) => check.pass(12),
        None => check.param("control", "wrong-multiplicity").fail(
            12,
            crate::report::Witness {
                monomial: crate::series::Monomial::new(vec![0], 1),
                expected: Rational::from_int(3),
                actual: Rational::from_int(3),
            },
        ),
    }
}

/// All checks of the suite at the given base order, in a fixed order.
pub fn suite_checks(order: u32, n_range: (u32, u32), k_max: u32, seed: u64) -> Vec<NamedCheck> {
    let mut checks: Vec<NamedCheck> = Vec::new();
    let kinds: Vec<FunctorKind> = vec![
        FunctorKind::Exponential,
        FunctorKind::Geometric,
        FunctorKind::Logarithmic,
        FunctorKind::TypeF { n: 1 },
        FunctorKind::TypeF { n: 2 },
        FunctorKind::TypeF { n: 3 },
        FunctorKind::TypeF { n: 4 },
    ];
    for kind in kinds {
        for a in 1..=3i64 {
            let scale = Rational::from_int(a);
            let s = scale.clone();
            checks.push(Box::new(move || functional_equation_check(kind, &s, order)));
            checks.push(Box::new(move || {
                solver_uniqueness_check(kind, &scale, order)
            }));
        }
    }
    for n in n_range.0..=n_range.1 {
        checks.push(Box::new(move || verify_difhom(n, k_max.max(2))));
    }
    checks.push(Box::new(move || e_one_check(k_max.max(10))));
    checks.push(Box::new(move || e_infinity_check(k_max.max(2))));
    checks.push(Box::new(move || {
        pbw_functional_identity_with_exponent(&Rational::one(), order.max(30))
    }));
    for d in 1..=3u32 {
        checks.push(Box::new(move || pbw_dimension_check(d, order)));
    }
    for n in 1..=4u32 {
        checks.push(Box::new(move || fn_composition_check(n, order)));
    }
    checks.push(Box::new(move || witt_lyndon_check(3, k_max.max(2))));
    checks.push(Box::new(move || {
        oracle_equivalence_check(seed, 100, 5, order.min(8))
    }));
    for kind in [
        FunctorKind::Exponential,
        FunctorKind::Geometric,
        FunctorKind::Logarithmic,
    ] {
        checks.push(Box::new(move || {
            cr2_structural_check(kind, 1, 1, order.min(8)).expect("supported kind")
        }));
    }
    checks.push(Box::new(move || layer_formulas_check(k_max.max(2))));
    checks.push(Box::new(move || type_f_limit_check(8, 10)));
    checks.push(Box::new(move || {
        log_hilbert_equation_check(2, order.min(8))
    }));
    checks.push(Box::new(negative_controls_check));
    checks
}

/// Runs the checks on a dedicated pool of `parallelism` workers and returns
/// the reports in suite order.
pub fn run_suite(checks: Vec<NamedCheck>, parallelism: usize) -> Vec<ReportDocument> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism.max(1))
        .build()
        .expect("worker pool construction cannot fail for positive sizes");
    pool.install(|| checks.par_iter().map(|check| check()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_controls_catch_the_breakage() {
        let r = negative_controls_check();
        assert!(r.passed(), "{}", r.summary_line());
    }

    #[test]
    fn small_suite_passes_and_is_deterministic() {
        let a = run_suite(suite_checks(6, (1, 2), 4, 42), 2);
        let b = run_suite(suite_checks(6, (1, 2), 4, 42), 4);
        assert!(
            a.iter().all(|r| r.passed()),
            "{:#?}",
            a.iter().map(|r| r.summary_line()).collect::<Vec<_>>()
        );
        let names_a: Vec<&str> = a.iter().map(|r| r.identity_name.as_str()).collect();
        let names_b: Vec<&str> = b.iter().map(|r| r.identity_name.as_str()).collect();
        assert_eq!(
            names_a, names_b,
            "suite order must not depend on parallelism"
        );
    }
}
