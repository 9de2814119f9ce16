//! The sharp radius: the minimal positive root of
//! `(1+γ) φ_0(x) = (2/p) Σ_{k≥1} φ_k(x)`.
//!
//! The root is located by a uniform sign scan for the first positive to
//! non-positive transition of the gap, followed by bisection. Families whose
//! weights share a factor `x^m` are scanned on the reduced gap (divided by
//! `x^m`), which has the same sign for `x > 0` but does not vanish at 0.

use serde::{Deserialize, Serialize};

use crate::error::{check_p, check_unit_interval, Error, Result};
use crate::series::DomainParams;
use crate::weights::{WeightFamily, Weights};

/// Default bisection tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Step of the coarse sign scan.
pub const SCAN_STEP: f64 = 1e-3;
/// Step of the fine scan used when the gap is already non-positive at the first coarse point.
pub const FINE_STEP: f64 = 1e-6;
/// Right end of the scan.
pub const SCAN_END: f64 = 1.0 - 1e-9;
/// Number of samples in a sharpness window.
pub const WINDOW_SAMPLES: usize = 32;

/// A weight family together with the domain and the exponent `p ∈ (0, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusQuery<W = WeightFamily> {
    pub family: W,
    pub domain: DomainParams,
    pub p: f64,
}

impl RadiusQuery<WeightFamily> {
    pub fn new(family: WeightFamily, domain: DomainParams, p: f64) -> Result<Self> {
        family.validate()?;
        check_p(p)?;
        Ok(Self { family, domain, p })
    }
}

impl<W: Weights> RadiusQuery<W> {
    /// Query over a caller-supplied weight sequence.
    pub fn custom(family: W, domain: DomainParams, p: f64) -> Result<Self> {
        check_p(p)?;
        Ok(Self { family, domain, p })
    }

    #[inline]
    fn gap_unchecked(&self, x: f64) -> f64 {
        (1.0 + self.domain.gamma()) * self.family.phi0(x) - 2.0 / self.p * self.family.tail_sum(x)
    }

    /// Gap divided by `x^m`; same sign as the gap for `x > 0`.
    #[inline]
    fn reduced_gap(&self, x: f64) -> f64 {
        (1.0 + self.domain.gamma()) * self.family.reduced_phi0(x)
            - 2.0 / self.p * self.family.reduced_tail_sum(x)
    }
}

/// A located radius with its certificate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiusResult {
    pub radius: f64,
    /// `gap(lo) > 0` and `gap(hi) ≤ 0`.
    pub bracket: (f64, f64),
    /// Gap evaluated at `radius`.
    pub residual: f64,
    pub sharp_window_ok: bool,
    pub evaluations: usize,
    pub tolerance: f64,
}

/// `(1+γ) φ_0(x) - (2/p) Σ_{k≥1} φ_k(x)`.
pub fn gap<W: Weights>(query: &RadiusQuery<W>, x: f64) -> Result<f64> {
    check_unit_interval(x)?;
    Ok(query.gap_unchecked(x))
}

/// Minimal positive root of the gap, with the default scan step.
pub fn minimal_root<W: Weights>(query: &RadiusQuery<W>, tol: f64) -> Result<RadiusResult> {
    minimal_root_with_step(query, tol, SCAN_STEP)
}

/// As [`minimal_root`] with an explicit coarse scan step.
pub fn minimal_root_with_step<W: Weights>(query: &RadiusQuery<W>, tol: f64, step: f64) -> Result<RadiusResult> {
    check_p(query.p)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            value: tol,
            reason: "must be positive",
        });
    }
    if !(step > 0.0 && step < 0.5) {
        return Err(Error::InvalidParameter {
            name: "step",
            value: step,
            reason: "must lie in (0, 0.5)",
        });
    }

    let mut evaluations = 0usize;
    let mut f = |x: f64| {
        evaluations += 1;
        query.reduced_gap(x)
    };

    let (mut lo, mut hi) = if f(step) > 0.0 {
        scan(&mut f, step, step, SCAN_END).ok_or(Error::NoRoot)?
    } else {
        if !(f(FINE_STEP) > 0.0) {
            return Err(Error::NotPositiveNearZero);
        }
        scan(&mut f, FINE_STEP, FINE_STEP, step).ok_or(Error::NotPositiveNearZero)?
    };

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    let radius = 0.5 * (lo + hi);
    let residual = query.gap_unchecked(radius);
    let epsilon = f64::min(0.01, 0.5 * (1.0 - radius));
    let sharp_window_ok = sharpness_window_check(query, radius, epsilon).unwrap_or(false);
    Ok(RadiusResult {
        radius,
        bracket: (lo, hi),
        residual,
        sharp_window_ok,
        evaluations: evaluations + 1 + WINDOW_SAMPLES,
        tolerance: tol,
    })
}

/// First `(lo, hi)` with `f(lo) > 0 ≥ f(hi)` on the grid `start, start+step, …, end`.
/// Assumes `f(start) > 0`; the last grid point is clamped to `end`.
fn scan<F: FnMut(f64) -> f64>(f: &mut F, start: f64, step: f64, end: f64) -> Option<(f64, f64)> {
    let mut prev = start;
    let mut i = 1usize;
    loop {
        let x = (start + i as f64 * step).min(end);
        if x <= prev {
            return None;
        }
        if !(f(x) > 0.0) {
            return Some((prev, x));
        }
        if x >= end {
            return None;
        }
        prev = x;
        i += 1;
    }
}

/// `true` iff the gap is negative at every one of [`WINDOW_SAMPLES`] equispaced
/// interior points of `(radius, radius + epsilon)`.
pub fn sharpness_window_check<W: Weights>(query: &RadiusQuery<W>, radius: f64, epsilon: f64) -> Result<bool> {
    let hi = radius + epsilon;
    if !(radius >= 0.0 && epsilon > 0.0 && hi < 1.0) {
        return Err(Error::WindowOutOfRange { lo: radius, hi });
    }
    let n = WINDOW_SAMPLES as f64 + 1.0;
    Ok((1..=WINDOW_SAMPLES).all(|i| {
        let x = radius + epsilon * i as f64 / n;
        query.reduced_gap(x) < 0.0
    }))
}
