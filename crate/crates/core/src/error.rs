use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("radius argument r = {0} is outside [0, 1)")]
    RadiusOutOfRange(f64),

    #[error("Blaschke zero {re}{im:+}i lies on or outside the unit circle")]
    ZeroOutsideDisk { re: f64, im: f64 },

    #[error("coefficient series is empty or contains a non-finite entry at index {0}")]
    NonFiniteCoefficient(usize),

    #[error("|c_0| = {0} exceeds 1; not a bounded function")]
    ConstantTermTooLarge(f64),

    #[error("gap stays positive on (0, 1): the inequality holds for every r < 1")]
    NoRoot,

    #[error("gap is not positive near 0; no interval of validity exists")]
    NotPositiveNearZero,

    #[error("sample window ({lo}, {hi}) leaves [0, 1)")]
    WindowOutOfRange { lo: f64, hi: f64 },

    #[error("Bernardi operator with m = {m} requires a_n = 0 for n < m; a_{index} is non-zero")]
    BernardiLeadingCoefficient { m: u32, index: usize },

    #[error("operator radius {radius} fails the operator's own radius equation (residual {residual:e})")]
    CrossCheck { radius: f64, residual: f64 },

    #[error("extremal parameter a = {a} must exceed gamma = {gamma}")]
    ExtremalBelowGamma { a: f64, gamma: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_unit_interval(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::RadiusOutOfRange(r))
    }
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    if p > 0.0 && p <= 2.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "p",
            value: p,
            reason: "must lie in (0, 2]",
        })
    }
}
