//! Truncated power series of bounded analytic functions on the shifted disks
//! `Ω_γ = { z : |z + γ/(1-γ)| < 1/(1-γ) }`.
//!
//! Every function is represented by its Taylor coefficients at the origin.
//! Three generators are provided:
//!
//! * the extremal Möbius map `g(z) = (a-γ-(1-γ)z) / (1-aγ-a(1-γ)z)` of `Ω_γ`
//!   onto the unit disk, whose coefficients decay like `q^k` with
//!   `q = a(1-γ)/(1-aγ)`;
//! * finite Blaschke products composed with the affine map
//!   `w = (1-γ)z + γ` (which sends `Ω_γ` onto the unit disk). With zeros of
//!   modulus at most `ρ` the composed coefficients decay like
//!   `((1-γ)/(1/ρ - γ))^k` times a polynomial factor;
//! * raw, caller-supplied coefficient lists (used for negative controls).
//!
//! The tail of a truncated series at radius `r` is bounded by
//! `C r^(M+1) / (1-r)` where `C = (1-|c_0|^2)/(1+γ)` for members of the class.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default truncation order for generated series.
pub const DEFAULT_ORDER: usize = 200;

/// The shift parameter `γ ∈ [0, 1)` of the domain `Ω_γ`. `γ = 0` is the unit disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawDomain")]
pub struct DomainParams {
    gamma: f64,
}

#[derive(Deserialize)]
struct RawDomain {
    gamma: f64,
}

impl TryFrom<RawDomain> for DomainParams {
    type Error = Error;

    fn try_from(raw: RawDomain) -> Result<Self> {
        DomainParams::new(raw.gamma)
    }
}

impl DomainParams {
    pub fn new(gamma: f64) -> Result<Self> {
        if (0.0..1.0).contains(&gamma) {
            Ok(Self { gamma })
        } else {
            Err(Error::InvalidParameter {
                name: "gamma",
                value: gamma,
                reason: "must lie in [0, 1)",
            })
        }
    }

    pub fn unit_disk() -> Self {
        Self { gamma: 0.0 }
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The coefficient bound `(1 - |c_0|^2) / (1 + γ)` valid for `n ≥ 1`.
    #[inline]
    pub fn coefficient_bound(&self, c0_abs: f64) -> f64 {
        (1.0 - c0_abs * c0_abs) / (1.0 + self.gamma)
    }
}

/// Taylor coefficients `c_0, …, c_M` of an analytic function on the unit disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex64>", into = "Vec<Complex64>")]
pub struct CoefficientSeries {
    coefficients: Vec<Complex64>,
}

impl TryFrom<Vec<Complex64>> for CoefficientSeries {
    type Error = Error;

    fn try_from(coefficients: Vec<Complex64>) -> Result<Self> {
        CoefficientSeries::new(coefficients)
    }
}

impl From<CoefficientSeries> for Vec<Complex64> {
    fn from(series: CoefficientSeries) -> Self {
        series.coefficients
    }
}

impl CoefficientSeries {
    pub fn new(coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::NonFiniteCoefficient(0));
        }
        if let Some(i) = coefficients.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFiniteCoefficient(i));
        }
        Ok(Self { coefficients })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| Complex64::new(v, 0.0)).collect())
    }

    /// Truncation order `M`; the series holds `M + 1` coefficients.
    #[inline]
    pub fn order(&self) -> usize {
        self.coefficients.len() - 1
    }

    #[inline]
    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    #[inline]
    pub fn get(&self, n: usize) -> Complex64 {
        self.coefficients.get(n).copied().unwrap_or_default()
    }

    /// Moduli `|c_n|`.
    pub fn moduli(&self) -> Vec<f64> {
        self.coefficients.iter().map(|c| c.norm()).collect()
    }

    /// Truncates or zero-pads to the requested order.
    pub fn resized(&self, order: usize) -> Self {
        let mut coefficients = self.coefficients.clone();
        coefficients.resize(order + 1, Complex64::default());
        Self { coefficients }
    }

    /// Horner evaluation of the truncated series.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coefficients
            .iter()
            .rev()
            .fold(Complex64::default(), |acc, &c| acc * z + c)
    }
}

/// A member of `B(Ω_γ)` (or, for `Raw`, a caller-asserted candidate).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BoundedFunction {
    /// The extremal map of `Ω_γ` onto the disk with parameter `a ∈ [0, 1)`.
    Extremal { domain: DomainParams, a: f64 },
    /// `rotation · Π (w - z_i)/(1 - conj(z_i) w)` with `w = (1-γ)z + γ`.
    BlaschkeComposed {
        domain: DomainParams,
        zeros: Vec<Complex64>,
        rotation: Complex64,
    },
    Raw { series: CoefficientSeries },
}

impl BoundedFunction {
    /// Closed-form evaluation at `z` (for `Raw`, the truncated polynomial).
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            BoundedFunction::Extremal { domain, a } => {
                let g = domain.gamma();
                (*a - g - (1.0 - g) * z) / (1.0 - a * g - a * (1.0 - g) * z)
            }
            BoundedFunction::BlaschkeComposed {
                domain,
                zeros,
                rotation,
            } => {
                let g = domain.gamma();
                let w = (1.0 - g) * z + g;
                zeros
                    .iter()
                    .fold(*rotation, |acc, zi| acc * (w - zi) / (1.0 - zi.conj() * w))
            }
            BoundedFunction::Raw { series } => series.eval(z),
        }
    }

    pub fn domain(&self) -> Option<DomainParams> {
        match self {
            BoundedFunction::Extremal { domain, .. }
            | BoundedFunction::BlaschkeComposed { domain, .. } => Some(*domain),
            BoundedFunction::Raw { .. } => None,
        }
    }
}

fn check_a(a: f64) -> Result<()> {
    if (0.0..1.0).contains(&a) {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "a",
            value: a,
            reason: "must lie in [0, 1)",
        })
    }
}

/// Taylor coefficients of the extremal map `g_{γ,a}`.
///
/// `c_0 = (a-γ)/(1-aγ)` and `c_k = -(1-a²)/(a(1-aγ)) · (a(1-γ)/(1-aγ))^k` for `k ≥ 1`.
pub fn extremal_coefficients(domain: DomainParams, a: f64, order: usize) -> Result<CoefficientSeries> {
    check_a(a)?;
    let g = domain.gamma();
    let mut c = vec![Complex64::default(); order + 1];

    if a == 0.0 {
        // g(z) = -γ - (1-γ)z
        c[0] = Complex64::new(-g, 0.0);
        if order >= 1 {
            c[1] = Complex64::new(-(1.0 - g), 0.0);
        }
        return CoefficientSeries::new(c);
    }

    let denom = 1.0 - a * g;
    c[0] = Complex64::new((a - g) / denom, 0.0);
    // The 1/a factor is absorbed into the first power of the ratio.
    let q = a * (1.0 - g) / denom;
    let mut term = (1.0 - a) * (1.0 + a) * (1.0 - g) / (denom * denom);
    for ck in c.iter_mut().skip(1) {
        *ck = Complex64::new(-term, 0.0);
        term *= q;
    }
    CoefficientSeries::new(c)
}

/// Coefficients of `z ↦ F((1-γ)z + γ)` up to the order of `outer`.
pub fn affine_compose(outer: &CoefficientSeries, domain: DomainParams) -> CoefficientSeries {
    affine_compose_to(outer, domain, outer.order())
}

/// As [`affine_compose`], truncated to `order ≤ outer.order()`.
///
/// The expansion weights `C(k,j)(1-γ)^j γ^(k-j)` form a convex row, built by the
/// Pascal-type recurrence `w(k,j) = γ w(k-1,j) + (1-γ) w(k-1,j-1)`, so nothing
/// overflows. The absolute error in the output caused by truncating the outer
/// series at `K` is at most `Σ_{k>K} |b_k|` summed over all output coefficients.
pub fn affine_compose_to(outer: &CoefficientSeries, domain: DomainParams, order: usize) -> CoefficientSeries {
    let order = order.min(outer.order());
    let g = domain.gamma();
    if g == 0.0 {
        return outer.resized(order);
    }
    let s = 1.0 - g;
    let mut out = vec![Complex64::default(); order + 1];
    let mut row = vec![0.0_f64; order + 1];
    row[0] = 1.0;
    for (k, &b) in outer.coefficients().iter().enumerate() {
        if k > 0 {
            let top = k.min(order);
            if k <= order {
                row[k] = s * row[k - 1];
            }
            let upper = if k <= order { top - 1 } else { top };
            for j in (1..=upper).rev() {
                row[j] = g * row[j] + s * row[j - 1];
            }
            row[0] *= g;
        }
        for (o, &w) in out.iter_mut().zip(row.iter()).take(k.min(order) + 1) {
            *o += b * w;
        }
    }
    CoefficientSeries { coefficients: out }
}

fn check_rotation(rotation: Complex64) -> Result<()> {
    if (rotation.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParameter {
            name: "rotation",
            value: rotation.norm(),
            reason: "rotation must be unimodular",
        });
    }
    Ok(())
}

fn check_zeros(zeros: &[Complex64]) -> Result<()> {
    for z in zeros {
        if !(z.norm() < 1.0) {
            return Err(Error::ZeroOutsideDisk { re: z.re, im: z.im });
        }
    }
    Ok(())
}

/// Taylor coefficients of `rotation · Π (z - z_i)/(1 - conj(z_i) z)`.
///
/// Each factor is applied in place: multiply by `(z - z_i)` then divide by
/// `(1 - conj(z_i) z)` via `h_k = g_k + conj(z_i) h_{k-1}`.
pub fn blaschke_coefficients(zeros: &[Complex64], rotation: Complex64, order: usize) -> Result<CoefficientSeries> {
    check_zeros(zeros)?;
    check_rotation(rotation)?;
    let mut c = vec![Complex64::default(); order + 1];
    c[0] = rotation;
    for &zi in zeros {
        for k in (0..=order).rev() {
            let prev = if k > 0 { c[k - 1] } else { Complex64::default() };
            c[k] = prev - zi * c[k];
        }
        let conj = zi.conj();
        for k in 1..=order {
            let prev = c[k - 1];
            c[k] += conj * prev;
        }
    }
    CoefficientSeries::new(c)
}

/// Outer expansion order needed so that composing a Blaschke product with the
/// affine map loses less than `1e-18` in total coefficient mass.
///
/// Uses the majorant `Π(|z_i| + (1-|z_i|²) s / (1 - |z_i| s))` and the Cauchy
/// estimate `m_k ≤ M(s) s^{-k}` for some `1 < s < 1/max|z_i|`.
fn blaschke_outer_order(zeros: &[Complex64], order: usize, gamma: f64) -> usize {
    if gamma == 0.0 || zeros.is_empty() {
        return order;
    }
    let rho = zeros.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let s = if rho < 1.0 / 3.0 { 2.0 } else { 0.5 * (1.0 + 1.0 / rho) };
    let majorant: f64 = zeros
        .iter()
        .map(|z| {
            let m = z.norm();
            m + (1.0 - m * m) * s / (1.0 - m * s)
        })
        .product();
    let needed = ((majorant / ((1.0 - 1.0 / s) * 1e-18)).ln() / s.ln()).ceil();
    let needed = if needed.is_finite() && needed > 0.0 {
        needed as usize
    } else {
        0
    };
    order.max(needed.min(50_000))
}

/// Coefficients of any [`BoundedFunction`] up to `order`.
pub fn coefficients_of(f: &BoundedFunction, order: usize) -> Result<CoefficientSeries> {
    match f {
        BoundedFunction::Extremal { domain, a } => extremal_coefficients(*domain, *a, order),
        BoundedFunction::BlaschkeComposed {
            domain,
            zeros,
            rotation,
        } => {
            let outer_order = blaschke_outer_order(zeros, order, domain.gamma());
            let outer = blaschke_coefficients(zeros, *rotation, outer_order)?;
            Ok(affine_compose_to(&outer, *domain, order))
        }
        BoundedFunction::Raw { series } => Ok(series.resized(order)),
    }
}

/// Result of checking `|c_n| ≤ (1-|c_0|²)/(1+γ)` for `1 ≤ n ≤ M`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LemmaReport {
    /// `max_n (|c_n| - bound)`; non-positive when the bound holds. Zero if `M = 0`.
    pub max_violation: f64,
    /// Index attaining the maximum, `None` when the series has no `n ≥ 1` terms.
    pub worst_index: Option<usize>,
}

pub fn lemma_bound_report(series: &CoefficientSeries, domain: DomainParams) -> Result<LemmaReport> {
    let c0 = series.get(0).norm();
    if c0 > 1.0 + 1e-12 {
        return Err(Error::ConstantTermTooLarge(c0));
    }
    let bound = domain.coefficient_bound(c0);
    let worst = series
        .coefficients()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, c)| (n, c.norm() - bound))
        .fold(None, |best: Option<(usize, f64)>, (n, v)| match best {
            Some((_, bv)) if bv >= v => best,
            _ => Some((n, v)),
        });
    Ok(match worst {
        Some((n, v)) => LemmaReport {
            max_violation: v,
            worst_index: Some(n),
        },
        None => LemmaReport {
            max_violation: 0.0,
            worst_index: None,
        },
    })
}
