//! β-Cesàro, α-Cesàro and Bernardi operators.
//!
//! Each operator is available in coefficient form (a lower-triangular
//! transform of the Taylor coefficients) and in integral form (evaluated by
//! tanh-sinh quadrature). Their Bohr-type radii come from the matching weight
//! family with `p = 1`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::tanh_sinh;
use crate::radius::{minimal_root, RadiusQuery, RadiusResult, DEFAULT_TOL};
use crate::series::{CoefficientSeries, DomainParams};
use crate::special::{beta_cesaro_phi0, is_log_branch, lerch_sum};
use crate::weights::WeightFamily;

/// Default node budget for [`apply_integral_form`].
pub const DEFAULT_QUADRATURE_NODES: usize = 1 << 14;

/// Residual allowed when a located operator radius is substituted back into
/// the operator's own radius equation.
pub const CROSS_CHECK_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "operator", rename_all = "kebab-case")]
pub enum OperatorSpec {
    /// `T_β[f](z) = ∫_0^1 f(tz) (1-tz)^{-β} dt`, `β > 0`.
    BetaCesaro { beta: f64 },
    /// `C^α f(z) = (α+1) ∫_0^1 f(tz) (1-t)^α (1-tz)^{-(α+1)} dt`, `α > -1`.
    AlphaCesaro { alpha: f64 },
    /// `L_δ[f](z) = ∫_0^1 f(zt) t^{δ-1} dt` on functions vanishing to order `m`, `δ > -m`.
    Bernardi { m: u32, delta: f64 },
}

impl OperatorSpec {
    /// The weight family whose Bohr radius is the operator's radius.
    pub fn weight_family(&self) -> WeightFamily {
        match *self {
            OperatorSpec::BetaCesaro { beta } => WeightFamily::BetaCesaro { beta },
            OperatorSpec::AlphaCesaro { alpha } => WeightFamily::AlphaCesaro { alpha },
            OperatorSpec::Bernardi { m, delta } => WeightFamily::Bernardi { m, delta },
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.weight_family().validate()
    }
}

/// `Γ(j+β) / (Γ(j+1) Γ(β))` by the recurrence `c_j = c_{j-1} (j-1+β)/j`.
pub fn gamma_ratio(j: usize, beta: f64) -> f64 {
    (1..=j).fold(1.0, |c, i| c * (i as f64 - 1.0 + beta) / i as f64)
}

/// `A_k^α = (α+1)_k / k!` by the recurrence `A_k = A_{k-1} (α+k)/k`.
pub fn pochhammer_ratio(k: usize, alpha: f64) -> f64 {
    (1..=k).fold(1.0, |a, i| a * (alpha + i as f64) / i as f64)
}

/// First `n + 1` values of [`gamma_ratio`].
fn gamma_ratios(n: usize, beta: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    let mut c = 1.0;
    out.push(c);
    for j in 1..=n {
        c *= (j as f64 - 1.0 + beta) / j as f64;
        out.push(c);
    }
    out
}

/// First `n + 1` values of [`pochhammer_ratio`].
fn pochhammer_ratios(n: usize, alpha: f64) -> Vec<f64> {
    gamma_ratios(n, alpha + 1.0)
}

/// Coefficients of the transformed function, same truncation order.
pub fn apply_coefficient_form(spec: &OperatorSpec, series: &CoefficientSeries) -> Result<CoefficientSeries> {
    spec.validate()?;
    let a = series.coefficients();
    let order = series.order();
    let out: Vec<Complex64> = match *spec {
        OperatorSpec::BetaCesaro { beta } => {
            let g = gamma_ratios(order, beta);
            (0..=order)
                .map(|n| {
                    let s: Complex64 = (0..=n).map(|k| a[k] * g[n - k]).sum();
                    s / (n as f64 + 1.0)
                })
                .collect()
        }
        OperatorSpec::AlphaCesaro { alpha } => {
            let w = pochhammer_ratios(order, alpha);
            let norm = pochhammer_ratios(order, alpha + 1.0);
            (0..=order)
                .map(|n| {
                    let s: Complex64 = (0..=n).map(|k| a[k] * w[n - k]).sum();
                    s / norm[n]
                })
                .collect()
        }
        OperatorSpec::Bernardi { m, delta } => {
            let m = m as usize;
            if let Some(index) = a.iter().take(m).position(|c| *c != Complex64::default()) {
                return Err(Error::BernardiLeadingCoefficient { m: m as u32, index });
            }
            a.iter()
                .enumerate()
                .map(|(n, &c)| if n < m { c } else { c / (n as f64 + delta) })
                .collect()
        }
    };
    CoefficientSeries::new(out)
}

/// The operator applied to `f` at `z` by quadrature of its integral form.
///
/// `f` must be analytic on the closed disk of radius `|z|`. The endpoint
/// singularities `(1-t)^α` (α < 0) and `t^{δ-1}` (δ < 1) are integrable and
/// handled by the double-exponential rule.
pub fn apply_integral_form<F>(spec: &OperatorSpec, f: F, z: Complex64, max_nodes: usize) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    spec.validate()?;
    if !(z.norm() < 1.0) {
        return Err(Error::InvalidParameter {
            name: "|z|",
            value: z.norm(),
            reason: "must be below 1",
        });
    }
    let q = match *spec {
        OperatorSpec::BetaCesaro { beta } => tanh_sinh(
            |t, _| f(z * t) * (Complex64::new(1.0, 0.0) - z * t).powf(-beta),
            1e-15,
            max_nodes,
        ),
        OperatorSpec::AlphaCesaro { alpha } => tanh_sinh(
            |t, comp| f(z * t) * comp.powf(alpha) * (Complex64::new(1.0, 0.0) - z * t).powf(-(alpha + 1.0)),
            1e-15,
            max_nodes,
        )
        .scaled(alpha + 1.0),
        OperatorSpec::Bernardi { delta, .. } => {
            tanh_sinh(|t, _| f(z * t) * t.powf(delta - 1.0), 1e-15, max_nodes)
        }
    };
    Ok(q.value)
}

trait Scaled {
    fn scaled(self, by: f64) -> Self;
}

impl Scaled for crate::quadrature::Quadrature {
    fn scaled(mut self, by: f64) -> Self {
        self.value *= by;
        self.error_estimate *= by.abs();
        self
    }
}

/// Sharp bound on `|operator f(z)|` over the unit ball of bounded functions, at `|z| = r`.
pub fn operator_bound(spec: &OperatorSpec, r: f64) -> Result<f64> {
    spec.validate()?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::RadiusOutOfRange(r));
    }
    Ok(match *spec {
        OperatorSpec::BetaCesaro { beta } => beta_cesaro_phi0(beta, r),
        OperatorSpec::AlphaCesaro { alpha } => (alpha + 1.0) * lerch_sum(r, alpha + 1.0),
        OperatorSpec::Bernardi { m, delta } => r.powi(m as i32) / (m as f64 + delta),
    })
}

/// Bohr-type radius of the operator on `B(Ω_γ)` (exponent `p = 1`).
pub fn operator_bohr_radius(spec: &OperatorSpec, domain: DomainParams) -> Result<RadiusResult> {
    operator_bohr_radius_with_p(spec, domain, 1.0)
}

/// As [`operator_bohr_radius`] with a general exponent on `|a_0|`.
///
/// Only `p = 1` corresponds to the operator inequality itself; other values
/// apply the general weighted inequality to the operator's weights.
pub fn operator_bohr_radius_with_p(spec: &OperatorSpec, domain: DomainParams, p: f64) -> Result<RadiusResult> {
    spec.validate()?;
    let query = RadiusQuery::new(spec.weight_family(), domain, p)?;
    let result = minimal_root(&query, DEFAULT_TOL)?;
    let residual = radius_equation(spec, domain.gamma(), p, result.radius);
    if !(residual.abs() <= CROSS_CHECK_TOL) {
        return Err(Error::CrossCheck {
            radius: result.radius,
            residual,
        });
    }
    Ok(result)
}

/// The operator's radius equation in its own closed form, with `(3+γ)`
/// generalized to `(2 + p(1+γ))`. Its root is the operator radius.
pub fn radius_equation(spec: &OperatorSpec, gamma: f64, p: f64, x: f64) -> f64 {
    let lead = 2.0 + p * (1.0 + gamma);
    match *spec {
        OperatorSpec::BetaCesaro { beta } if is_log_branch(beta) => {
            // p = 1: 2x - (3+γ)(1-x) log(1/(1-x))
            2.0 * x - lead * (1.0 - x) * (1.0 / (1.0 - x)).ln()
        }
        OperatorSpec::BetaCesaro { beta } => {
            lead * (1.0 - (1.0 - x).powf(1.0 - beta)) / (1.0 - beta)
                - 2.0 * ((1.0 - x).powf(-beta) - 1.0) / beta
        }
        OperatorSpec::AlphaCesaro { alpha } => {
            let mut sum: f64 = 0.0;
            let mut xn = 1.0;
            let mut n = 0usize;
            while xn > 1e-18 * sum.max(1.0) || n == 0 {
                sum += xn / (n as f64 + alpha + 1.0);
                xn *= x;
                n += 1;
            }
            lead * (1.0 + alpha) * sum - 2.0 / (1.0 - x)
        }
        OperatorSpec::Bernardi { m, delta } => {
            // (1+γ) φ_0 = (2/p) Σ_{n≥1} φ_n, divided by x^m
            let c = m as f64 + delta;
            let mut tail: f64 = 0.0;
            let mut xn = x;
            let mut n = 1usize;
            while xn > 1e-18 * tail.max(1e-300) || n == 1 {
                tail += xn / (n as f64 + c);
                xn *= x;
                n += 1;
            }
            (1.0 + gamma) / c - 2.0 / p * tail
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::LN_2;

    fn ones(n: usize) -> CoefficientSeries {
        CoefficientSeries::from_real(&vec![1.0; n + 1]).unwrap()
    }

    #[test]
    fn gamma_ratio_values() {
        assert_eq!(gamma_ratio(0, 3.7), 1.0);
        assert_abs_diff_eq!(gamma_ratio(1, 0.3), 0.3, epsilon = 1e-16);
        assert_abs_diff_eq!(gamma_ratio(2, 0.3), 0.3 * 1.3 / 2.0, epsilon = 1e-16);
        for j in 0..50 {
            assert_eq!(gamma_ratio(j, 1.0), 1.0);
        }
    }

    #[test]
    fn pochhammer_values() {
        for k in 0..40 {
            assert_eq!(pochhammer_ratio(k, 0.0), 1.0);
            assert_abs_diff_eq!(pochhammer_ratio(k, 1.0), k as f64 + 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn pochhammer_generating_function() {
        // Σ A_k^α z^k = (1-z)^{-(1+α)}
        for &alpha in &[-0.5, 0.0, 1.0, 2.5] {
            for &z in &[0.1f64, 0.5, -0.7] {
                let sum: f64 = (0..400).map(|k| pochhammer_ratio(k, alpha) * z.powi(k as i32)).sum();
                let exact = (1.0 - z).powf(-(1.0 + alpha));
                assert_abs_diff_eq!(sum, exact, epsilon = 1e-12 * exact);
            }
        }
    }

    #[test]
    fn cesaro_row_sums() {
        let f = ones(30);
        for spec in [
            OperatorSpec::BetaCesaro { beta: 1.0 },
            OperatorSpec::AlphaCesaro { alpha: -0.5 },
            OperatorSpec::AlphaCesaro { alpha: 2.0 },
        ] {
            let out = apply_coefficient_form(&spec, &f).unwrap();
            for c in out.coefficients() {
                assert_abs_diff_eq!(c.re, 1.0, epsilon = 1e-13);
            }
        }
    }

    #[test]
    fn bernardi_coefficients() {
        let mut v = vec![1.0; 8];
        v[0] = 0.0;
        let s = CoefficientSeries::from_real(&v).unwrap();
        let out = apply_coefficient_form(&OperatorSpec::Bernardi { m: 1, delta: 1.0 }, &s).unwrap();
        for n in 1..8 {
            assert_abs_diff_eq!(out.get(n).re, 1.0 / (n as f64 + 1.0), epsilon = 1e-16);
        }
        assert!(matches!(
            apply_coefficient_form(&OperatorSpec::Bernardi { m: 1, delta: 1.0 }, &ones(3)),
            Err(Error::BernardiLeadingCoefficient { m: 1, index: 0 })
        ));
    }

    #[test]
    fn integral_form_examples() {
        let one = |_: Complex64| Complex64::new(1.0, 0.0);
        let z = Complex64::new(0.5, 0.0);
        let v = apply_integral_form(&OperatorSpec::BetaCesaro { beta: 1.0 }, one, z, DEFAULT_QUADRATURE_NODES).unwrap();
        assert_abs_diff_eq!(v.re, 2.0 * LN_2, epsilon = 1e-13);
        let v = apply_integral_form(&OperatorSpec::BetaCesaro { beta: 2.0 }, one, z, DEFAULT_QUADRATURE_NODES).unwrap();
        assert_abs_diff_eq!(v.re, 2.0, epsilon = 1e-13);

        let zz = Complex64::new(0.3, -0.4);
        let v = apply_integral_form(&OperatorSpec::Bernardi { m: 1, delta: 2.0 }, |w| w, zz, DEFAULT_QUADRATURE_NODES)
            .unwrap();
        assert_abs_diff_eq!((v - zz / 3.0).norm(), 0.0, epsilon = 1e-14);

        assert!(apply_integral_form(&OperatorSpec::BetaCesaro { beta: 1.0 }, one, Complex64::new(1.0, 0.0), 100).is_err());
    }

    #[test]
    fn bounds() {
        assert_abs_diff_eq!(
            operator_bound(&OperatorSpec::BetaCesaro { beta: 1.0 }, 0.5).unwrap(),
            2.0 * LN_2,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(
            operator_bound(&OperatorSpec::Bernardi { m: 2, delta: 1.0 }, 0.5).unwrap(),
            0.25 / 3.0,
            epsilon = 1e-16
        );
        assert_abs_diff_eq!(
            operator_bound(&OperatorSpec::AlphaCesaro { alpha: 0.0 }, 0.5).unwrap(),
            2.0 * LN_2,
            epsilon = 1e-15
        );
        assert!(operator_bound(&OperatorSpec::AlphaCesaro { alpha: 0.0 }, 0.0).is_err());
    }

    #[test]
    fn cesaro_radius_bracket() {
        // 3(1-x) log(1/(1-x)) - 2x changes sign on (0.5, 0.55)
        let h = |x: f64| 3.0 * (1.0 - x) * (1.0 / (1.0 - x)).ln() - 2.0 * x;
        assert!(h(0.5) > 0.0 && h(0.55) < 0.0);
        let r = operator_bohr_radius(&OperatorSpec::BetaCesaro { beta: 1.0 }, DomainParams::unit_disk()).unwrap();
        assert!(r.radius > 0.5 && r.radius < 0.55);
        let a = operator_bohr_radius(&OperatorSpec::AlphaCesaro { alpha: 0.0 }, DomainParams::unit_disk()).unwrap();
        assert_abs_diff_eq!(a.radius, r.radius, epsilon = 1e-10);
    }

    #[test]
    fn cesaro_radius_increases_with_gamma() {
        let spec = OperatorSpec::BetaCesaro { beta: 1.0 };
        let radii: Vec<f64> = [0.0, 0.3, 0.6]
            .iter()
            .map(|&g| operator_bohr_radius(&spec, DomainParams::new(g).unwrap()).unwrap().radius)
            .collect();
        assert!(radii[0] < radii[1] && radii[1] < radii[2], "{radii:?}");
    }
}
