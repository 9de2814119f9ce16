//! Series helpers shared by the weight families and the operators.

use num_complex::Complex64;

use crate::quadrature::tanh_sinh;

/// Iteration cap for slowly convergent series (reached only for `r` within ~1e-6 of 1).
const MAX_TERMS: usize = 20_000_000;

/// Sums `t_0 + t_1 + …` given `t_0`, the ratio `t_{j+1}/t_j`, and a bound
/// `q(i)` on every ratio `t_{l+1}/t_l` with `l ≥ i`.
///
/// Stops when the certified tail `t_{j+1}/(1 - q(j+1))` drops below `1e-16`
/// times the accumulated sum.
pub(crate) fn ratio_series<R, Q>(first: f64, ratio: R, ratio_bound: Q) -> f64
where
    R: Fn(usize) -> f64,
    Q: Fn(usize) -> f64,
{
    let mut sum = 0.0;
    let mut term = first;
    for j in 0..MAX_TERMS {
        sum += term;
        let next = term * ratio(j);
        let q = ratio_bound(j + 1);
        if next < f64::MIN_POSITIVE || (q < 1.0 && next / (1.0 - q) <= 1e-16 * sum) {
            break;
        }
        term = next;
    }
    sum
}

/// `Σ_{n≥0} r^n / (n + c)` for `0 ≤ r < 1`, `c > 0`.
///
/// Direct summation for `r ≤ 0.95`; otherwise the integral
/// `∫_0^1 t^(c-1) / (1 - r t) dt` with `1 - r t = (1 - r) + r (1 - t)`.
pub(crate) fn lerch_sum(r: f64, c: f64) -> f64 {
    if r <= 0.95 {
        ratio_series(1.0 / c, |j| r * (j as f64 + c) / (j as f64 + 1.0 + c), |_| r)
    } else {
        let q = tanh_sinh(
            |t, comp| Complex64::new(t.powf(c - 1.0) / ((1.0 - r) + r * comp), 0.0),
            1e-15,
            1 << 16,
        );
        q.value.re
    }
}

/// `[1 - (1-r)^(1-β)] / ((1-β) r)` with its `r → 0` and `β → 1` limits.
pub(crate) fn beta_cesaro_phi0(beta: f64, r: f64) -> f64 {
    if r == 0.0 {
        return 1.0;
    }
    let l = (-r).ln_1p();
    if is_log_branch(beta) {
        -l / r
    } else {
        let b = 1.0 - beta;
        -(b * l).exp_m1() / (b * r)
    }
}

/// `[(1-r)^(-β) - 1] / (β r)`, the sum of all weights including `φ_0`.
pub(crate) fn beta_cesaro_total(beta: f64, r: f64) -> f64 {
    if r == 0.0 {
        return 1.0;
    }
    (-beta * (-r).ln_1p()).exp_m1() / (beta * r)
}

/// `β` within `1e-9` of 1 is treated as the classical Cesàro case.
#[inline]
pub(crate) fn is_log_branch(beta: f64) -> bool {
    (beta - 1.0).abs() < 1e-9
}
