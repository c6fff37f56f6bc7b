//! Exact-arithmetic workbench for functor classes defined by functional
//! equations.
//!
//! Four classes of functors mimic elementary reduced functions of one real
//! variable: `exp(ax)-1`, `ax/(1-ax)`, `-log(1-ax)`, and the interpolating
//! family `f_n(ax) = (1 - ax/2^{n-1})^{-2^{n-1}} - 1`. This crate models
//! their defining bivariate functional equations on truncated formal power
//! series with exact rational coefficients, computes cross effects and
//! Taylor-tower layers, and certifies the quantitative consequences; most
//! importantly that the ground-field differentials of the type-f_n
//! recurrence equal the Poincare polynomials of configuration spaces of
//! points in R^n.
//!
//! The crate is organized around the computation pipeline:
//!
//! - [`series`]: sparse truncated multivariate power series over exact
//!   rationals, with a degree marker `q` for suspension;
//! - [`functor`]: the four equation kinds, closed forms, residuals, a
//!   coefficient-by-coefficient solver, and word-length Hilbert models;
//! - [`cross`]: recursive and inclusion-exclusion cross effects with the
//!   degree test;
//! - [`layers`]: layer closed forms and the type-f_n differential
//!   recurrence `A_k`;
//! - [`conf`]: configuration-space Poincare polynomials and the
//!   certification that `A_k` matches them on the ground field;
//! - [`lie`]: Witt numbers, a Lyndon-word oracle, plethysm, and the PBW
//!   identity suite.
//!
//! Every runnable capability has a worked example under `examples/`; the
//! `functower` binary exposes the same operations for batch use.

pub mod conf;
pub mod config;
pub mod cross;
pub mod error;
pub mod functor;
pub mod layers;
pub mod lie;
pub mod rational;
pub mod report;
pub mod series;
pub mod suite;

pub use conf::{conf_poincare, e_infinity_check, verify_difhom, ConfPoincare, QPolynomial};
pub use cross::{
    cross_effect_inclusion_exclusion, cross_effect_recursive, is_degree_n, multilinear_part,
    CrossEffect,
};
pub use error::Error;
pub use functor::{
    closed_form, equation_residual, hilbert_model, solve_reduced, ClosedFormParams, FunctorKind,
};
pub use layers::{a_k_recurrence, falling_factorial, LayerInput, LayerTable};
pub use lie::{lyndon_count, plethystic_lie, plethystic_sym, witt, WittTable};
pub use rational::Rational;
pub use report::{ReportDocument, Status, Witness};
pub use series::{Monomial, Series};
