//! Randomized and deterministic suites over grids of `(family, γ, p)` cells.
//!
//! Every suite is a pure function of its [`SuiteConfig`]: random functions are
//! drawn from a ChaCha stream keyed by the seed and the position of `γ` in the
//! grid, cells run in parallel and are merged in grid order, so equal configs
//! give byte-identical reports.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bohr::{coefficient_violation, extremal_margin, radius_grid, report_from_table, MEMBERSHIP_TOL};
use crate::error::{check_unit_interval, Error, Result};
use crate::radius::{minimal_root, RadiusQuery, RadiusResult, DEFAULT_TOL};
use crate::series::{
    coefficients_of, extremal_coefficients, lemma_bound_report, BoundedFunction, CoefficientSeries, DomainParams,
    DEFAULT_ORDER,
};
use crate::weights::{WeightFamily, WeightTable, Weights};

/// Largest modulus of a generated Blaschke zero.
pub const ZERO_RADIUS: f64 = 0.8;
/// Largest number of zeros of a generated Blaschke product.
pub const MAX_ZEROS: usize = 5;
/// Distance beyond the radius at which sharpness is probed.
pub const SHARPNESS_OFFSET: f64 = 0.01;
/// Extremal parameter used for the sharpness verdict.
pub const SHARPNESS_A: f64 = 1.0 - 1e-3;
/// Values of `1 - a` for the first-order Richardson check.
pub const RICHARDSON_STEPS: [f64; 3] = [1e-2, 1e-3, 1e-4];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples_per_cell: usize,
    pub gamma_grid: Vec<f64>,
    pub p_grid: Vec<f64>,
    pub families: Vec<WeightFamily>,
    /// Slack on `A_f - φ_0` on top of the certified truncation bound.
    pub tolerance: f64,
    /// Verify a known non-member in every cell and report it separately.
    #[serde(default = "default_true")]
    pub negative_controls: bool,
    /// Radii per verification grid over `[0, R]`.
    #[serde(default = "default_grid_points")]
    pub grid_points: usize,
    /// Truncation order of the test functions.
    #[serde(default = "default_order")]
    pub order: usize,
}

fn default_true() -> bool {
    true
}

fn default_grid_points() -> usize {
    64
}

fn default_order() -> usize {
    DEFAULT_ORDER
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples_per_cell == 0 {
            return Err(Error::InvalidParameter {
                name: "samples_per_cell",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        if self.grid_points == 0 {
            return Err(Error::InvalidParameter {
                name: "grid_points",
                value: 0.0,
                reason: "must be at least 1",
            });
        }
        if !(self.tolerance >= 0.0 && self.tolerance.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "tolerance",
                value: self.tolerance,
                reason: "must be finite and non-negative",
            });
        }
        for &g in &self.gamma_grid {
            DomainParams::new(g)?;
        }
        for &p in &self.p_grid {
            crate::error::check_p(p)?;
        }
        for f in &self.families {
            f.validate()?;
        }
        Ok(())
    }

    /// The `(family, γ, p)` grid in report order. Operator families use `p = 1` only.
    pub fn queries(&self) -> Result<Vec<(usize, RadiusQuery)>> {
        let mut out = Vec::new();
        for family in &self.families {
            for (gi, &g) in self.gamma_grid.iter().enumerate() {
                let domain = DomainParams::new(g)?;
                if family.is_operator_family() {
                    out.push((gi, RadiusQuery::new(*family, domain, 1.0)?));
                } else {
                    for &p in &self.p_grid {
                        out.push((gi, RadiusQuery::new(*family, domain, p)?));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Every built-in family with representative parameters, `γ ∈ {0, 0.25, 0.5, 0.75}`,
/// `p ∈ {0.5, 1, 2}` and 500 random functions per cell.
pub fn default_config() -> SuiteConfig {
    SuiteConfig {
        seed: 20240917,
        samples_per_cell: 500,
        gamma_grid: vec![0.0, 0.25, 0.5, 0.75],
        p_grid: vec![0.5, 1.0, 2.0],
        families: vec![
            WeightFamily::PowerTail { n: 1 },
            WeightFamily::PowerTail { n: 3 },
            WeightFamily::EvenPowers,
            WeightFamily::OddPowers,
            WeightFamily::LinearPlusOne { n: 1 },
            WeightFamily::Linear { n: 2 },
            WeightFamily::Quadratic { n: 1 },
            WeightFamily::BetaCesaro { beta: 0.5 },
            WeightFamily::BetaCesaro { beta: 1.0 },
            WeightFamily::BetaCesaro { beta: 2.0 },
            WeightFamily::AlphaCesaro { alpha: -0.5 },
            WeightFamily::AlphaCesaro { alpha: 0.0 },
            WeightFamily::AlphaCesaro { alpha: 1.0 },
            WeightFamily::Bernardi { m: 1, delta: 1.0 },
            WeightFamily::Bernardi { m: 2, delta: 0.5 },
        ],
        tolerance: crate::bohr::EXCESS_TOL,
        negative_controls: true,
        grid_points: default_grid_points(),
        order: DEFAULT_ORDER,
    }
}

/// A random finite Blaschke product composed with the affine map onto the disk.
///
/// The number of zeros is uniform in `0..=5`, each zero uniform in area on
/// `|z| ≤ 0.8`, and the rotation uniform on the circle. The disk coefficients
/// decay at least like `((1-γ)/(1.25-γ))^k`.
pub fn random_bounded_function<R: Rng + ?Sized>(domain: DomainParams, rng: &mut R) -> BoundedFunction {
    let count = rng.gen_range(0..=MAX_ZEROS);
    let zeros = (0..count)
        .map(|_| {
            let rho = ZERO_RADIUS * rng.gen::<f64>().sqrt();
            Complex64::from_polar(rho, TAU * rng.gen::<f64>())
        })
        .collect();
    let rotation = Complex64::from_polar(1.0, TAU * rng.gen::<f64>());
    BoundedFunction::BlaschkeComposed {
        domain,
        zeros,
        rotation,
    }
}

/// The generator used by the suites for the `index`-th entry of the `γ` grid.
pub fn suite_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// Constants `0, ±1, 0.5` and the extremal maps with `a ∈ {0.5, 0.9, 0.999}`.
pub fn deterministic_functions(domain: DomainParams) -> Vec<BoundedFunction> {
    let mut out: Vec<BoundedFunction> = [0.0, 1.0, -1.0, 0.5]
        .iter()
        .map(|&c| BoundedFunction::Raw {
            series: CoefficientSeries::from_real(&[c]).expect("finite constant"),
        })
        .collect();
    out.extend([0.5, 0.9, 0.999].iter().map(|&a| BoundedFunction::Extremal { domain, a }));
    out
}

/// The all-ones polynomial of degree 15, far outside every `B(Ω_γ)`.
pub fn negative_control() -> BoundedFunction {
    BoundedFunction::Raw {
        series: CoefficientSeries::from_real(&[1.0; 16]).expect("finite"),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CellStatus {
    Pass,
    Fail,
    Skipped,
    /// Margin not positive, but the gap is not negative throughout the window either.
    Indeterminate,
}

/// Sharpness evidence of one cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SharpnessDetail {
    pub r: f64,
    pub a: f64,
    pub margin: f64,
    pub first_order_prediction: f64,
    /// `1 - a` for each Richardson sample.
    pub one_minus_a: Vec<f64>,
    /// `|margin - first_order_prediction| / (1 - a)` for each sample.
    pub richardson: Vec<f64>,
    /// Ratios of successive Richardson values; about 10 when the expansion holds.
    pub richardson_reduction: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub query: RadiusQuery,
    pub radius: Option<f64>,
    pub status: CellStatus,
    pub n_pass: usize,
    pub n_fail: usize,
    pub worst_excess: Option<f64>,
    /// Truncation bound that applied to the worst function.
    pub worst_truncation_bound: Option<f64>,
    pub worst_function_descriptor: Option<BoundedFunction>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sharpness: Option<SharpnessDetail>,
}

/// Outcome of the negative control in one cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControlReport {
    pub query: RadiusQuery,
    pub descriptor: BoundedFunction,
    pub max_excess: f64,
    pub coefficient_violation: f64,
    /// The verification rejected the control.
    pub detected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cells: Vec<CellReport>,
    pub controls: Vec<ControlReport>,
    /// Every control was rejected (vacuously true without controls).
    pub controls_detected: bool,
    /// Every cell has `n_fail = 0`.
    pub overall_pass: bool,
}

impl SuiteReport {
    fn assemble(suite: &str, seed: u64, cells: Vec<CellReport>, controls: Vec<ControlReport>) -> Self {
        let overall_pass = cells.iter().all(|c| c.n_fail == 0);
        let controls_detected = controls.iter().all(|c| c.detected);
        SuiteReport {
            suite: suite.to_string(),
            seed,
            cells,
            controls,
            controls_detected,
            overall_pass,
        }
    }
}

struct Pool {
    functions: Vec<BoundedFunction>,
    moduli: Vec<Vec<f64>>,
    violations: Vec<f64>,
}

fn build_pool(config: &SuiteConfig, gi: usize, domain: DomainParams) -> Result<Pool> {
    let mut rng = suite_rng(config.seed, gi);
    let mut functions = deterministic_functions(domain);
    functions.extend((0..config.samples_per_cell).map(|_| random_bounded_function(domain, &mut rng)));
    let series = functions
        .par_iter()
        .map(|f| coefficients_of(f, config.order))
        .collect::<Result<Vec<_>>>()?;
    let violations = series.iter().map(|s| coefficient_violation(s, domain)).collect();
    let moduli = series.iter().map(|s| s.moduli()).collect();
    Ok(Pool {
        functions,
        moduli,
        violations,
    })
}

fn skipped(query: RadiusQuery, radius: Option<f64>, reason: String) -> CellReport {
    CellReport {
        query,
        radius,
        status: CellStatus::Skipped,
        n_pass: 0,
        n_fail: 0,
        worst_excess: None,
        worst_truncation_bound: None,
        worst_function_descriptor: None,
        reason: Some(reason),
        sharpness: None,
    }
}

fn locate(query: &RadiusQuery) -> std::result::Result<RadiusResult, CellReport> {
    minimal_root(query, DEFAULT_TOL).map_err(|e| skipped(*query, None, e.to_string()))
}

/// Verifies the deterministic set and `samples_per_cell` random functions in every cell.
pub fn run_inequality_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let pools = config
        .gamma_grid
        .iter()
        .enumerate()
        .map(|(gi, &g)| build_pool(config, gi, DomainParams::new(g)?))
        .collect::<Result<Vec<_>>>()?;
    let control = negative_control();
    let control_moduli = coefficients_of(&control, config.order)?.moduli();

    let results = config
        .queries()?
        .into_par_iter()
        .map(|(gi, query)| inequality_cell(config, &pools[gi], &query, &control, &control_moduli))
        .collect::<Result<Vec<_>>>()?;

    let mut cells = Vec::with_capacity(results.len());
    let mut controls = Vec::new();
    for (cell, ctl) in results {
        cells.push(cell);
        controls.extend(ctl);
    }
    Ok(SuiteReport::assemble("inequality", config.seed, cells, controls))
}

fn inequality_cell(
    config: &SuiteConfig,
    pool: &Pool,
    query: &RadiusQuery,
    control: &BoundedFunction,
    control_moduli: &[f64],
) -> Result<(CellReport, Option<ControlReport>)> {
    let root = match locate(query) {
        Ok(r) => r,
        Err(cell) => return Ok((cell, None)),
    };
    let radius = root.radius;
    let table = WeightTable::new(&query.family, &radius_grid(radius, config.grid_points), config.order)?;

    let mut n_pass = 0;
    let mut n_fail = 0;
    let mut worst: Option<(f64, f64, usize)> = None;
    for (i, moduli) in pool.moduli.iter().enumerate() {
        let report = report_from_table(moduli, &table, query.p, pool.violations[i]);
        let ok = report.max_excess <= config.tolerance + report.truncation_bound
            && report.coefficient_violation <= MEMBERSHIP_TOL;
        if ok {
            n_pass += 1;
        } else {
            n_fail += 1;
        }
        let slack = report.max_excess - report.truncation_bound;
        if worst.map_or(true, |(w, _, _)| slack > w) {
            worst = Some((slack, report.truncation_bound, i));
        }
    }

    let control_report = if config.negative_controls {
        let violation = coefficient_violation(&CoefficientSeries::from_real(control_moduli)?, query.domain);
        let report = report_from_table(control_moduli, &table, query.p, violation);
        let accepted = report.max_excess <= config.tolerance + report.truncation_bound
            && report.coefficient_violation <= MEMBERSHIP_TOL;
        Some(ControlReport {
            query: *query,
            descriptor: control.clone(),
            max_excess: report.max_excess,
            coefficient_violation: report.coefficient_violation,
            detected: !accepted,
        })
    } else {
        None
    };

    let (slack, bound, index) = worst.expect("pool is never empty");
    let cell = CellReport {
        query: *query,
        radius: Some(radius),
        status: if n_fail == 0 { CellStatus::Pass } else { CellStatus::Fail },
        n_pass,
        n_fail,
        worst_excess: Some(slack + bound),
        worst_truncation_bound: Some(bound),
        worst_function_descriptor: Some(pool.functions[index].clone()),
        reason: None,
        sharpness: None,
    };
    Ok((cell, control_report))
}

/// Probes every cell just beyond its radius with the extremal map.
///
/// A cell passes iff the extremal margin at `r = R + 0.01`, `a = 1 - 1e-3` is
/// positive. Cells with `R + 0.01 ≥ 1` are skipped.
pub fn run_sharpness_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    config.validate()?;
    let cells = config
        .queries()?
        .into_par_iter()
        .map(|(_, query)| sharpness_cell(&query))
        .collect::<Result<Vec<_>>>()?;
    Ok(SuiteReport::assemble("sharpness", config.seed, cells, Vec::new()))
}

fn sharpness_cell(query: &RadiusQuery) -> Result<CellReport> {
    let root = match locate(query) {
        Ok(r) => r,
        Err(cell) => return Ok(cell),
    };
    let r = root.radius + SHARPNESS_OFFSET;
    if !(r < 1.0) {
        return Ok(skipped(*query, Some(root.radius), format!("radius + {SHARPNESS_OFFSET} is not below 1")));
    }
    let domain = query.domain;
    let m = extremal_margin(domain, SHARPNESS_A, &query.family, query.p, r)?;

    let mut one_minus_a = Vec::new();
    let mut richardson = Vec::new();
    for &h in &RICHARDSON_STEPS {
        let e = extremal_margin(domain, 1.0 - h, &query.family, query.p, r)?;
        one_minus_a.push(h);
        richardson.push((e.margin - e.first_order_prediction).abs() / h);
    }
    let richardson_reduction = richardson.windows(2).map(|w| w[0] / w[1]).collect();

    let status = if m.margin > 0.0 {
        CellStatus::Pass
    } else if root.sharp_window_ok {
        CellStatus::Fail
    } else {
        CellStatus::Indeterminate
    };
    let function = BoundedFunction::Extremal { domain, a: SHARPNESS_A };
    Ok(CellReport {
        query: *query,
        radius: Some(root.radius),
        status,
        n_pass: usize::from(status == CellStatus::Pass),
        n_fail: usize::from(status == CellStatus::Fail),
        worst_excess: Some(m.margin),
        worst_truncation_bound: None,
        worst_function_descriptor: Some(function),
        reason: (status == CellStatus::Indeterminate).then(|| "gap is not negative throughout the window".to_string()),
        sharpness: Some(SharpnessDetail {
            r,
            a: SHARPNESS_A,
            margin: m.margin,
            first_order_prediction: m.first_order_prediction,
            one_minus_a,
            richardson,
            richardson_reduction,
        }),
    })
}

/// Coefficient-bound check over random members and the extremal equality case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LemmaSuiteReport {
    pub draws: usize,
    /// Largest `|a_n| - (1-|a_0|²)/(1+γ)` over all draws.
    pub max_violation: f64,
    pub worst_function_descriptor: Option<BoundedFunction>,
    /// Largest `||c_1| - (1-|c_0|²)/(1+γ)|` over the extremal grid.
    pub extremal_equality_error: f64,
    pub pass: bool,
}

/// `draws` random members spread round-robin over the `γ` grid, plus extremal
/// maps with `a ∈ {0.05, 0.1, …, 0.95}` on every grid point.
pub fn run_lemma_suite(seed: u64, draws: usize, gamma_grid: &[f64]) -> Result<LemmaSuiteReport> {
    let domains = gamma_grid
        .iter()
        .map(|&g| DomainParams::new(g))
        .collect::<Result<Vec<_>>>()?;
    let mut max_violation = f64::NEG_INFINITY;
    let mut worst = None;
    if !domains.is_empty() {
        let mut rngs: Vec<ChaCha8Rng> = (0..domains.len()).map(|i| suite_rng(seed, i)).collect();
        let functions: Vec<BoundedFunction> = (0..draws)
            .map(|i| {
                let j = i % domains.len();
                random_bounded_function(domains[j], &mut rngs[j])
            })
            .collect();
        let violations = functions
            .par_iter()
            .map(|f| {
                let s = coefficients_of(f, DEFAULT_ORDER)?;
                Ok(lemma_bound_report(&s, f.domain().expect("composed"))?.max_violation)
            })
            .collect::<Result<Vec<f64>>>()?;
        for (f, v) in functions.into_iter().zip(violations) {
            if v > max_violation {
                max_violation = v;
                worst = Some(f);
            }
        }
    }
    let mut extremal_equality_error: f64 = 0.0;
    for d in &domains {
        for i in 1..20 {
            let s = extremal_coefficients(*d, i as f64 * 0.05, 1)?;
            let c0 = s.get(0).norm();
            extremal_equality_error = extremal_equality_error.max((s.get(1).norm() - d.coefficient_bound(c0)).abs());
        }
    }
    Ok(LemmaSuiteReport {
        draws,
        max_violation,
        worst_function_descriptor: worst,
        extremal_equality_error,
        pass: max_violation <= MEMBERSHIP_TOL && extremal_equality_error <= 1e-12,
    })
}

/// `Σ_{k=1}^{terms} φ_k(r)` by compensated summation of the individual weights.
pub fn brute_force_tail<W: Weights + ?Sized>(family: &W, r: f64, terms: usize) -> Result<f64> {
    check_unit_interval(r)?;
    if terms == 0 {
        return Err(Error::InvalidParameter {
            name: "terms",
            value: 0.0,
            reason: "must be at least 1",
        });
    }
    let mut sum = 0.0;
    let mut comp = 0.0;
    for k in 1..=terms {
        let t = family.phi(k, r);
        let s = sum + t;
        comp += if f64::abs(sum) >= f64::abs(t) { (sum - s) + t } else { (t - s) + sum };
        sum = s;
    }
    Ok(sum + comp)
}

/// Smallest `M` with `Σ_{k>M} φ_k(r) ≤ tol` by the certified tail bound (capped at `10^6`).
pub fn certified_terms<W: Weights + ?Sized>(family: &W, r: f64, tol: f64) -> usize {
    let mut m = 1;
    while m < 1_000_000 && !(family.tail_beyond(m, r) <= tol) {
        m = if m < 64 { m + 1 } else { m + m / 8 };
    }
    m
}
