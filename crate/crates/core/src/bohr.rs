//! The generalized Bohr sum `A_f(φ, p, r) = |a_0|^p φ_0(r) + Σ_{k≥1} |a_k| φ_k(r)`,
//! its verification against `φ_0(r)` up to the sharp radius, and the
//! behaviour of the extremal maps just beyond it.

use serde::{Deserialize, Serialize};

use crate::error::{check_p, check_unit_interval, Error, Result};
use crate::radius::RadiusQuery;
use crate::series::{coefficients_of, lemma_bound_report, BoundedFunction, CoefficientSeries, DomainParams, DEFAULT_ORDER};
use crate::weights::{WeightTable, Weights};

/// Slack allowed on `A_f - φ_0` on top of the certified truncation bound.
pub const EXCESS_TOL: f64 = 1e-9;
/// Slack allowed on the coefficient bound before a function is declared a non-member.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

/// A truncated Bohr sum and a bound on what the truncation dropped.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BohrSum {
    pub value: f64,
    pub truncation_bound: f64,
}

/// `A_f(φ, p, r)` over the stored coefficients.
///
/// The dropped terms are bounded with `|a_k| ≤ 1 - |a_0|²` (the coefficient
/// bound on the unit disk, which dominates every `γ`) times `Σ_{k>M} φ_k(r)`.
pub fn bohr_sum<W: Weights + ?Sized>(series: &CoefficientSeries, family: &W, p: f64, r: f64) -> Result<BohrSum> {
    check_unit_interval(r)?;
    check_p(p)?;
    let c = series.coefficients();
    let c0 = c[0].norm();
    let mut value = c0.powf(p) * family.phi0(r);
    for (k, ck) in c.iter().enumerate().skip(1) {
        value += ck.norm() * family.phi(k, r);
    }
    let truncation_bound = (1.0 - c0 * c0).max(0.0) * family.tail_beyond(series.order(), r);
    Ok(BohrSum {
        value,
        truncation_bound,
    })
}

/// Outcome of checking `A_f(φ, p, r) ≤ φ_0(r)` on a grid over `[0, R]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BohrReport {
    pub radii: Vec<f64>,
    pub bohr_sums: Vec<f64>,
    pub phi0_values: Vec<f64>,
    /// `max_i (A_f(r_i) - φ_0(r_i))`.
    pub max_excess: f64,
    /// Largest truncation bound over the grid.
    pub truncation_bound: f64,
    /// `max_n (|a_n| - (1-|a_0|²)/(1+γ))`, or `|a_0| - 1` when `|a_0| > 1`.
    pub coefficient_violation: f64,
    pub pass: bool,
}

/// Uniform grid of `points` radii over `[0, upper]` (a single point when `points ≤ 1`).
pub fn radius_grid(upper: f64, points: usize) -> Vec<f64> {
    if points <= 1 {
        return vec![upper];
    }
    (0..points)
        .map(|i| upper * i as f64 / (points - 1) as f64)
        .collect()
}

/// Coefficient-bound violation of a series, used as the membership check.
pub fn coefficient_violation(series: &CoefficientSeries, domain: DomainParams) -> f64 {
    match lemma_bound_report(series, domain) {
        Ok(report) => report.max_violation,
        Err(Error::ConstantTermTooLarge(c0)) => c0 - 1.0,
        Err(_) => f64::INFINITY,
    }
}

/// Evaluates the Bohr sum of precomputed moduli against a weight table.
pub fn report_from_table(moduli: &[f64], table: &WeightTable, p: f64, coefficient_violation: f64) -> BohrReport {
    let c0 = moduli[0];
    let lead = c0.powf(p);
    let lemma = (1.0 - c0 * c0).max(0.0);
    let n = table.radii.len();
    let mut bohr_sums = Vec::with_capacity(n);
    let mut max_excess = f64::NEG_INFINITY;
    let mut truncation_bound: f64 = 0.0;
    for i in 0..n {
        let phi = &table.phi[i];
        let mut value = lead * table.phi0[i];
        for (m, w) in moduli[1..].iter().zip(phi.iter()) {
            value += m * w;
        }
        // moduli beyond the table order (if any) are ignored and covered by the bound
        let trunc = lemma * table.tail_bound[i];
        truncation_bound = truncation_bound.max(trunc);
        max_excess = max_excess.max(value - table.phi0[i]);
        bohr_sums.push(value);
    }
    let pass = max_excess <= EXCESS_TOL + truncation_bound && coefficient_violation <= MEMBERSHIP_TOL;
    BohrReport {
        radii: table.radii.clone(),
        bohr_sums,
        phi0_values: table.phi0.clone(),
        max_excess,
        truncation_bound,
        coefficient_violation,
        pass,
    }
}

/// Checks `A_f(φ, p, r) ≤ φ_0(r)` on `grid_points` radii in `[0, radius]`.
///
/// `f` is taken to be a member of `B(Ω_γ)`; the coefficient bound is still
/// evaluated and a violation beyond [`MEMBERSHIP_TOL`] fails the report.
pub fn verify_up_to_radius<W: Weights>(
    f: &BoundedFunction,
    query: &RadiusQuery<W>,
    radius: f64,
    grid_points: usize,
) -> Result<BohrReport> {
    check_unit_interval(radius)?;
    check_p(query.p)?;
    let series = coefficients_of(f, DEFAULT_ORDER)?;
    let violation = coefficient_violation(&series, query.domain);
    let table = WeightTable::new(&query.family, &radius_grid(radius, grid_points), series.order())?;
    Ok(report_from_table(&series.moduli(), &table, query.p, violation))
}

/// Extremal Bohr sum beyond `φ_0` together with its first-order prediction
/// `((1-a)/(1-γ)) [2 Σ φ_k(r) - p(1+γ) φ_0(r)]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExtremalMargin {
    /// `A_g(φ, p, r) - φ_0(r)`.
    pub margin: f64,
    pub first_order_prediction: f64,
    /// Truncation order used for the extremal series.
    pub order: usize,
}

pub fn extremal_margin<W: Weights + ?Sized>(
    domain: DomainParams,
    a: f64,
    family: &W,
    p: f64,
    r: f64,
) -> Result<ExtremalMargin> {
    let g = domain.gamma();
    if !(a > g) {
        return Err(Error::ExtremalBelowGamma { a, gamma: g });
    }
    if !(a < 1.0) {
        return Err(Error::InvalidParameter {
            name: "a",
            value: a,
            reason: "must be below 1",
        });
    }
    check_unit_interval(r)?;
    check_p(p)?;

    let one_minus_a = 1.0 - a;
    let denom = 1.0 - a * g;
    // c_0 - 1 = -(1-a)(1+γ)/(1-aγ); c_k = -lead · q^{k-1}
    let c0_minus_one = -one_minus_a * (1.0 + g) / denom;
    let q = a * (1.0 - g) / denom;
    let lead = one_minus_a * (1.0 + a) * (1.0 - g) / (denom * denom);

    let mut order = DEFAULT_ORDER;
    while order < (1 << 17) && lead * q.powi(order as i32) * family.tail_beyond(order, r) > 1e-18 {
        order *= 2;
    }

    let phi0 = family.phi0(r);
    let mut margin = (p * c0_minus_one.ln_1p()).exp_m1() * phi0;
    let mut ck = lead;
    for k in 1..=order {
        margin += ck * family.phi(k, r);
        ck *= q;
    }
    let first_order_prediction = one_minus_a / (1.0 - g) * (2.0 * family.tail_sum(r) - p * (1.0 + g) * phi0);
    Ok(ExtremalMargin {
        margin,
        first_order_prediction,
        order,
    })
}

/// `(1 - x^p)/(1 - x²) - p/2`, non-negative on `[0,1) × (0,2]`.
pub fn p_bound_check(x: f64, p: f64) -> Result<f64> {
    check_unit_interval(x)?;
    check_p(p)?;
    if x == 0.0 {
        return Ok(1.0 - p / 2.0);
    }
    let l = x.ln();
    Ok((p * l).exp_m1() / (2.0 * l).exp_m1() - p / 2.0)
}
