//! Weight sequences `{φ_k(r)}` for the generalized Bohr sum.
//!
//! A weight sequence is any family of non-negative continuous functions on
//! `[0, 1)` whose sum converges locally uniformly. The built-in families carry
//! closed forms for `φ_0` and for the tail `Σ_{k≥1} φ_k` wherever one exists;
//! series-defined weights are summed by term recurrences with a ratio-test
//! certificate on the remainder.
//!
//! Custom sequences plug in through the [`Weights`] trait.

use serde::{Deserialize, Serialize};

use crate::error::{check_unit_interval, Error, Result};
use crate::special::{beta_cesaro_phi0, beta_cesaro_total, lerch_sum, ratio_series};

/// A weight sequence. Implementations may assume `0 ≤ r < 1`.
pub trait Weights: Sync {
    fn phi0(&self, r: f64) -> f64;

    /// `φ_k(r)`; `k = 0` must agree with [`Weights::phi0`].
    fn phi(&self, k: usize, r: f64) -> f64;

    /// `Σ_{k≥1} φ_k(r)`.
    fn tail_sum(&self, r: f64) -> f64;

    /// Certified upper bound on `Σ_{k>order} φ_k(r)`.
    fn tail_beyond(&self, order: usize, r: f64) -> f64;

    /// Largest `m` such that every `φ_k(r)` carries the factor `r^m`.
    fn leading_power(&self) -> u32 {
        0
    }

    /// `φ_0(r) / r^m` with `m` the leading power.
    fn reduced_phi0(&self, r: f64) -> f64 {
        self.phi0(r) / r.powi(self.leading_power() as i32)
    }

    /// `tail_sum(r) / r^m` with `m` the leading power.
    fn reduced_tail_sum(&self, r: f64) -> f64 {
        self.tail_sum(r) / r.powi(self.leading_power() as i32)
    }
}

/// Built-in weight families. Serialized with a `family` tag using the CLI names.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum WeightFamily {
    /// `φ_0 = 1`, `φ_n = r^n` for `n ≥ N`, else 0.
    PowerTail {
        #[serde(rename = "N")]
        n: u32,
    },
    /// `φ_{2n} = r^{2n}`, odd weights vanish.
    #[serde(rename = "even")]
    EvenPowers,
    /// `φ_0 = 1`, `φ_{2n-1} = r^{2n-1}`, even weights (past 0) vanish.
    #[serde(rename = "odd")]
    OddPowers,
    /// `φ_0 = 1`, `φ_n = (n+1) r^n` for `n ≥ N`.
    LinearPlusOne {
        #[serde(rename = "N")]
        n: u32,
    },
    /// `φ_0 = 1`, `φ_n = n r^n` for `n ≥ N`.
    Linear {
        #[serde(rename = "N")]
        n: u32,
    },
    /// `φ_0 = 1`, `φ_n = n² r^n` for `n ≥ N`.
    Quadratic {
        #[serde(rename = "N")]
        n: u32,
    },
    /// Weights of the β-Cesàro transform, `β > 0`.
    BetaCesaro { beta: f64 },
    /// Weights of the α-Cesàro transform, `α > -1`.
    AlphaCesaro { alpha: f64 },
    /// `φ_n = r^{n+m}/(n+m+δ)`, `m ≥ 1`, `δ > -m`.
    Bernardi { m: u32, delta: f64 },
}

impl WeightFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |name, value: f64, reason| {
            Err(Error::InvalidParameter { name, value, reason })
        };
        match *self {
            WeightFamily::PowerTail { n }
            | WeightFamily::LinearPlusOne { n }
            | WeightFamily::Linear { n }
            | WeightFamily::Quadratic { n } => {
                if n == 0 {
                    return bad("N", 0.0, "must be at least 1");
                }
            }
            WeightFamily::BetaCesaro { beta } => {
                if !(beta > 0.0 && beta.is_finite()) {
                    return bad("beta", beta, "must be positive");
                }
            }
            WeightFamily::AlphaCesaro { alpha } => {
                if !(alpha > -1.0 && alpha.is_finite()) {
                    return bad("alpha", alpha, "must exceed -1");
                }
            }
            WeightFamily::Bernardi { m, delta } => {
                if m == 0 {
                    return bad("m", 0.0, "must be at least 1");
                }
                if !(delta > -(m as f64) && delta.is_finite()) {
                    return bad("delta", delta, "must exceed -m");
                }
            }
            WeightFamily::EvenPowers | WeightFamily::OddPowers => {}
        }
        Ok(())
    }

    /// CLI name of the family.
    pub fn name(&self) -> &'static str {
        match self {
            WeightFamily::PowerTail { .. } => "power-tail",
            WeightFamily::EvenPowers => "even",
            WeightFamily::OddPowers => "odd",
            WeightFamily::LinearPlusOne { .. } => "linear-plus-one",
            WeightFamily::Linear { .. } => "linear",
            WeightFamily::Quadratic { .. } => "quadratic",
            WeightFamily::BetaCesaro { .. } => "beta-cesaro",
            WeightFamily::AlphaCesaro { .. } => "alpha-cesaro",
            WeightFamily::Bernardi { .. } => "bernardi",
        }
    }

    /// Parameters as `key=value` pairs separated by `;` (empty for parameter-free families).
    pub fn params_string(&self) -> String {
        match *self {
            WeightFamily::PowerTail { n }
            | WeightFamily::LinearPlusOne { n }
            | WeightFamily::Linear { n }
            | WeightFamily::Quadratic { n } => format!("N={n}"),
            WeightFamily::EvenPowers | WeightFamily::OddPowers => String::new(),
            WeightFamily::BetaCesaro { beta } => format!("beta={beta}"),
            WeightFamily::AlphaCesaro { alpha } => format!("alpha={alpha}"),
            WeightFamily::Bernardi { m, delta } => format!("m={m};delta={delta}"),
        }
    }

    /// Families that arise from an integral operator (radii use `p = 1`).
    pub fn is_operator_family(&self) -> bool {
        matches!(
            self,
            WeightFamily::BetaCesaro { .. } | WeightFamily::AlphaCesaro { .. } | WeightFamily::Bernardi { .. }
        )
    }
}

impl std::fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let params = self.params_string();
        if params.is_empty() {
            f.write_str(self.name())
        } else {
            write!(f, "{}({})", self.name(), params)
        }
    }
}

#[inline]
fn powk(r: f64, k: usize) -> f64 {
    r.powi(k as i32)
}

/// `Σ_{n≥K} n r^n = r^K [K(1-r) + r] / (1-r)²`.
fn linear_tail(k0: usize, r: f64) -> f64 {
    let k = k0 as f64;
    powk(r, k0) * (k * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r))
}

/// `Σ_{n≥K} (n+1) r^n = r^K (1 + K - K r) / (1-r)²`.
fn linear_plus_one_tail(k0: usize, r: f64) -> f64 {
    let k = k0 as f64;
    powk(r, k0) * (1.0 + k - k * r) / ((1.0 - r) * (1.0 - r))
}

/// `Σ_{n≥K} n² r^n = r^K [(r+K)² + r + K²r² - 2Kr(r+K)] / (1-r)³`.
fn quadratic_tail(k0: usize, r: f64) -> f64 {
    let k = k0 as f64;
    let bracket = (r + k) * (r + k) + r + k * k * r * r - 2.0 * k * r * (r + k);
    powk(r, k0) * bracket / ((1.0 - r) * (1.0 - r) * (1.0 - r))
}

fn beta_cesaro_phi_k(beta: f64, k: usize, r: f64) -> f64 {
    // t_j = γ_j r^{k+j} / (k+j+1), γ_j = Γ(j+β)/(Γ(j+1)Γ(β))
    let kf = k as f64;
    ratio_series(
        powk(r, k) / (kf + 1.0),
        |j| {
            let j = j as f64;
            r * (j + beta) / (j + 1.0) * (kf + j + 1.0) / (kf + j + 2.0)
        },
        |i| {
            let i = i as f64;
            r * f64::max(1.0, (i + beta) / (i + 1.0))
        },
    )
}

fn alpha_cesaro_phi_k(alpha: f64, k: usize, r: f64) -> f64 {
    // t_j = A^α_j / A^{α+1}_{k+j} · r^{k+j}
    let kf = k as f64;
    let mut first = powk(r, k);
    for i in 1..=k {
        first /= (alpha + 1.0 + i as f64) / i as f64;
    }
    ratio_series(
        first,
        |j| {
            let j = j as f64;
            r * (alpha + j + 1.0) / (j + 1.0) * (kf + j + 1.0) / (alpha + kf + j + 2.0)
        },
        |i| {
            let i = i as f64;
            r * f64::max(1.0, (alpha + i + 1.0) / (i + 1.0))
        },
    )
}

impl Weights for WeightFamily {
    fn phi0(&self, r: f64) -> f64 {
        match *self {
            WeightFamily::BetaCesaro { beta } => beta_cesaro_phi0(beta, r),
            WeightFamily::AlphaCesaro { alpha } => (1.0 + alpha) * lerch_sum(r, alpha + 1.0),
            WeightFamily::Bernardi { m, delta } => r.powi(m as i32) / (m as f64 + delta),
            _ => 1.0,
        }
    }

    fn phi(&self, k: usize, r: f64) -> f64 {
        if k == 0 {
            return self.phi0(r);
        }
        let kf = k as f64;
        match *self {
            WeightFamily::PowerTail { n } => {
                if k >= n as usize {
                    powk(r, k)
                } else {
                    0.0
                }
            }
            WeightFamily::EvenPowers => {
                if k % 2 == 0 {
                    powk(r, k)
                } else {
                    0.0
                }
            }
            WeightFamily::OddPowers => {
                if k % 2 == 1 {
                    powk(r, k)
                } else {
                    0.0
                }
            }
            WeightFamily::LinearPlusOne { n } => {
                if k >= n as usize {
                    (kf + 1.0) * powk(r, k)
                } else {
                    0.0
                }
            }
            WeightFamily::Linear { n } => {
                if k >= n as usize {
                    kf * powk(r, k)
                } else {
                    0.0
                }
            }
            WeightFamily::Quadratic { n } => {
                if k >= n as usize {
                    kf * kf * powk(r, k)
                } else {
                    0.0
                }
            }
            WeightFamily::BetaCesaro { beta } => beta_cesaro_phi_k(beta, k, r),
            WeightFamily::AlphaCesaro { alpha } => alpha_cesaro_phi_k(alpha, k, r),
            WeightFamily::Bernardi { m, delta } => powk(r, k + m as usize) / (kf + m as f64 + delta),
        }
    }

    fn tail_sum(&self, r: f64) -> f64 {
        match *self {
            WeightFamily::PowerTail { n } => powk(r, n as usize) / (1.0 - r),
            WeightFamily::EvenPowers => r * r / (1.0 - r * r),
            WeightFamily::OddPowers => r / (1.0 - r * r),
            WeightFamily::LinearPlusOne { n } => linear_plus_one_tail(n as usize, r),
            WeightFamily::Linear { n } => linear_tail(n as usize, r),
            WeightFamily::Quadratic { n } => quadratic_tail(n as usize, r),
            WeightFamily::BetaCesaro { beta } => {
                if r == 0.0 {
                    0.0
                } else {
                    beta_cesaro_total(beta, r) - beta_cesaro_phi0(beta, r)
                }
            }
            WeightFamily::AlphaCesaro { .. } => {
                if r == 0.0 {
                    0.0
                } else {
                    1.0 / (1.0 - r) - self.phi0(r)
                }
            }
            WeightFamily::Bernardi { m, .. } => r.powi(m as i32) * self.reduced_tail_sum(r),
        }
    }

    fn tail_beyond(&self, order: usize, r: f64) -> f64 {
        let next = order + 1;
        match *self {
            WeightFamily::PowerTail { n } => powk(r, next.max(n as usize)) / (1.0 - r),
            WeightFamily::EvenPowers => powk(r, next + next % 2) / (1.0 - r * r),
            WeightFamily::OddPowers => powk(r, next + 1 - next % 2) / (1.0 - r * r),
            WeightFamily::LinearPlusOne { n } => linear_plus_one_tail(next.max(n as usize), r),
            WeightFamily::Linear { n } => linear_tail(next.max(n as usize), r),
            WeightFamily::Quadratic { n } => quadratic_tail(next.max(n as usize), r),
            // φ_n ≤ r^n (1-r)^{-β} / (n+1)
            WeightFamily::BetaCesaro { beta } => {
                powk(r, next) * (1.0 - r).powf(-beta) / ((next as f64 + 1.0) * (1.0 - r))
            }
            // A^α_{k-n} ≤ A^{α+1}_k, so φ_n ≤ r^n / (1-r)
            WeightFamily::AlphaCesaro { .. } => powk(r, next) / ((1.0 - r) * (1.0 - r)),
            WeightFamily::Bernardi { m, delta } => {
                powk(r, next + m as usize) / ((next as f64 + m as f64 + delta) * (1.0 - r))
            }
        }
    }

    fn leading_power(&self) -> u32 {
        match *self {
            WeightFamily::Bernardi { m, .. } => m,
            _ => 0,
        }
    }

    fn reduced_phi0(&self, r: f64) -> f64 {
        match *self {
            WeightFamily::Bernardi { m, delta } => 1.0 / (m as f64 + delta),
            _ => self.phi0(r),
        }
    }

    fn reduced_tail_sum(&self, r: f64) -> f64 {
        match *self {
            // Σ_{n≥1} r^n/(n+m+δ) = r Σ_{j≥0} r^j/(j+m+δ+1)
            WeightFamily::Bernardi { m, delta } => r * lerch_sum(r, m as f64 + delta + 1.0),
            _ => self.tail_sum(r),
        }
    }
}

/// `φ_0(r)` with domain checks.
pub fn phi0<W: Weights + ?Sized>(family: &W, r: f64) -> Result<f64> {
    check_unit_interval(r)?;
    Ok(family.phi0(r))
}

/// `φ_k(r)` with domain checks.
pub fn phi_k<W: Weights + ?Sized>(family: &W, k: usize, r: f64) -> Result<f64> {
    check_unit_interval(r)?;
    Ok(family.phi(k, r))
}

/// `Σ_{k≥1} φ_k(r)` with domain checks.
pub fn tail_sum<W: Weights + ?Sized>(family: &W, r: f64) -> Result<f64> {
    check_unit_interval(r)?;
    Ok(family.tail_sum(r))
}

/// Precomputed weights on a fixed `r` grid, shared by many Bohr sums.
#[derive(Debug, Clone)]
pub struct WeightTable {
    pub radii: Vec<f64>,
    pub phi0: Vec<f64>,
    /// `phi[i][k-1] = φ_k(radii[i])` for `1 ≤ k ≤ order`.
    pub phi: Vec<Vec<f64>>,
    /// Certified bound on `Σ_{k>order} φ_k(radii[i])`.
    pub tail_bound: Vec<f64>,
    pub order: usize,
}

impl WeightTable {
    pub fn new<W: Weights + ?Sized>(family: &W, radii: &[f64], order: usize) -> Result<Self> {
        for &r in radii {
            check_unit_interval(r)?;
        }
        Ok(Self {
            radii: radii.to_vec(),
            phi0: radii.iter().map(|&r| family.phi0(r)).collect(),
            phi: radii
                .iter()
                .map(|&r| (1..=order).map(|k| family.phi(k, r)).collect())
                .collect(),
            tail_bound: radii.iter().map(|&r| family.tail_beyond(order, r)).collect(),
            order,
        })
    }
}
