//! Generalized Bohr inequalities for bounded analytic functions on the
//! shifted disks `Ω_γ = { z : |z + γ/(1-γ)| < 1/(1-γ) }`, `0 ≤ γ < 1`.
//!
//! For a weight sequence `{φ_k}` and `p ∈ (0, 2]`, every `f = Σ a_n z^n`
//! bounded by 1 on `Ω_γ` satisfies
//!
//! ```text
//! |a_0|^p φ_0(r) + Σ_{k≥1} |a_k| φ_k(r) ≤ φ_0(r)
//! ```
//!
//! for `r` up to the minimal positive root of `(1+γ) φ_0 = (2/p) Σ_{k≥1} φ_k`,
//! and that radius is sharp. This crate computes those radii, verifies the
//! inequality on exact and random test functions, and provides the β-Cesàro,
//! α-Cesàro and Bernardi operators together with their radii.
//!
//! ```
//! use bohr::{minimal_root, DomainParams, RadiusQuery, WeightFamily};
//!
//! let query = RadiusQuery::new(WeightFamily::PowerTail { n: 1 }, DomainParams::unit_disk(), 1.0)?;
//! let r = minimal_root(&query, 1e-12)?;
//! assert!((r.radius - 1.0 / 3.0).abs() < 1e-10);
//! # Ok::<(), bohr::Error>(())
//! ```

pub mod bohr;
pub mod cli;
pub mod error;
pub mod harness;
pub mod operators;
pub mod quadrature;
pub mod radius;
pub mod series;
mod special;
pub mod weights;

pub use crate::bohr::{bohr_sum, extremal_margin, p_bound_check, verify_up_to_radius, BohrReport, BohrSum, ExtremalMargin};
pub use crate::error::{Error, Result};
pub use crate::operators::{
    apply_coefficient_form, apply_integral_form, gamma_ratio, operator_bohr_radius, operator_bound, pochhammer_ratio,
    OperatorSpec,
};
pub use crate::radius::{gap, minimal_root, sharpness_window_check, RadiusQuery, RadiusResult};
pub use crate::series::{
    affine_compose, blaschke_coefficients, coefficients_of, extremal_coefficients, lemma_bound_report, BoundedFunction,
    CoefficientSeries, DomainParams, LemmaReport,
};
pub use crate::weights::{WeightFamily, Weights};
