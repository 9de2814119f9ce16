//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines are printed even when every criterion passes.

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use bohr::harness::{
    brute_force_tail, certified_terms, default_config, run_inequality_suite, run_lemma_suite, run_sharpness_suite,
    CellStatus,
};
use bohr::operators::{apply_coefficient_form, apply_integral_form, radius_equation, DEFAULT_QUADRATURE_NODES};
use bohr::weights::Weights;
use bohr::{
    blaschke_coefficients, minimal_root, operator_bohr_radius, operator_bound, p_bound_check, pochhammer_ratio,
    CoefficientSeries, DomainParams, OperatorSpec, RadiusQuery, WeightFamily,
};
use num_complex::Complex64;

type Outcome = Result<String, String>;

fn radius(family: WeightFamily, gamma: f64, p: f64) -> f64 {
    let q = RadiusQuery::new(family, DomainParams::new(gamma).unwrap(), p).unwrap();
    minimal_root(&q, 1e-12).unwrap().radius
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn classical_anchor() -> Outcome {
    let q = RadiusQuery::new(WeightFamily::PowerTail { n: 1 }, DomainParams::unit_disk(), 1.0).unwrap();
    let mut best = Duration::MAX;
    let mut r = 0.0;
    for _ in 0..20 {
        let t = Instant::now();
        r = minimal_root(&q, 1e-12).unwrap().radius;
        best = best.min(t.elapsed());
    }
    let err = (r - 1.0 / 3.0).abs();
    check(
        err <= 1e-10 && best < Duration::from_millis(1),
        format!("|R - 1/3| = {err:.1e}, runtime {best:.1?}"),
    )
}

fn shifted_disk_classical() -> Outcome {
    let mut worst: f64 = 0.0;
    for i in 0..10 {
        let g = i as f64 / 10.0;
        let r = radius(WeightFamily::PowerTail { n: 1 }, g, 1.0);
        worst = worst.max((r - (1.0 + g) / (3.0 + g)).abs());
    }
    check(worst <= 1e-10, format!("max |R - (1+γ)/(3+γ)| = {worst:.1e} over 10 values of γ"))
}

fn quadratic_closed_forms() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut n = 0;
    for i in 0..10 {
        let g = i as f64 / 10.0;
        for &p in &[0.25, 0.5, 1.0, 1.5, 2.0] {
            let c = p * (1.0 + g);
            let even = (c / (2.0 + c)).sqrt();
            // positive root of c x² + 2x - c = 0
            let odd = c / (1.0 + (1.0 + c * c).sqrt());
            worst = worst.max((radius(WeightFamily::EvenPowers, g, p) - even).abs());
            worst = worst.max((radius(WeightFamily::OddPowers, g, p) - odd).abs());
            n += 2;
        }
    }
    check(worst <= 1e-10, format!("max deviation {worst:.1e} over {n} (family, γ, p) cells"))
}

fn inequality_suite() -> Outcome {
    let config = default_config();
    let report = run_inequality_suite(&config).map_err(|e| e.to_string())?;
    let families: BTreeSet<&str> = report.cells.iter().map(|c| c.query.family.name()).collect();
    let samples = report.cells.iter().map(|c| c.n_pass + c.n_fail).min().unwrap_or(0);
    let failing = report.cells.iter().filter(|c| c.n_fail > 0).count();
    let skipped = report.cells.iter().filter(|c| c.status == CellStatus::Skipped).count();
    let worst = report
        .cells
        .iter()
        .filter_map(|c| Some(c.worst_excess? - c.worst_truncation_bound?))
        .fold(f64::NEG_INFINITY, f64::max);
    check(
        report.overall_pass
            && report.controls_detected
            && families.len() == 9
            && skipped == 0
            && samples >= config.samples_per_cell
            && report.cells.len() == 116,
        format!(
            "{} cells, {} families, ≥{} functions/cell, {} failing, worst excess over truncation bound {:.1e}, controls detected: {}",
            report.cells.len(),
            families.len(),
            samples,
            failing,
            worst,
            report.controls_detected
        ),
    )
}

fn sharpness_suite() -> Outcome {
    let report = run_sharpness_suite(&default_config()).map_err(|e| e.to_string())?;
    let mut probed = 0;
    let mut min_margin = f64::INFINITY;
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    let mut bad = Vec::new();
    for c in &report.cells {
        let Some(s) = &c.sharpness else { continue };
        probed += 1;
        min_margin = min_margin.min(s.margin);
        for &f in &s.richardson_reduction {
            lo = lo.min(f);
            hi = hi.max(f);
        }
        if !(s.margin > 0.0) || s.richardson_reduction.iter().any(|&f| !(5.0..=20.0).contains(&f)) {
            bad.push(format!("{} γ={} p={}", c.query.family, c.query.domain.gamma(), c.query.p));
        }
    }
    let skipped = report.cells.len() - probed;
    check(
        report.overall_pass && bad.is_empty() && probed > 0,
        format!(
            "{probed} cells probed ({skipped} skipped), min margin {min_margin:.2e}, Richardson reductions in [{lo:.2}, {hi:.2}]{}",
            if bad.is_empty() { String::new() } else { format!(", failing: {bad:?}") }
        ),
    )
}

fn lemma_suite() -> Outcome {
    let report = run_lemma_suite(2024, 10_000, &[0.0, 0.25, 0.5, 0.75]).map_err(|e| e.to_string())?;
    check(
        report.pass && report.max_violation <= 1e-10 && report.extremal_equality_error <= 1e-12,
        format!(
            "{} draws, max violation {:.2e}, extremal equality error {:.1e}",
            report.draws, report.max_violation, report.extremal_equality_error
        ),
    )
}

/// `z^m · B(z)` with a fixed three-zero Blaschke product `B`.
struct TestFunction {
    zeros: Vec<Complex64>,
    rotation: Complex64,
    shift: usize,
}

impl TestFunction {
    fn eval(&self, z: Complex64) -> Complex64 {
        let b = self
            .zeros
            .iter()
            .fold(self.rotation, |acc, zi| acc * (z - zi) / (1.0 - zi.conj() * z));
        z.powu(self.shift as u32) * b
    }

    fn series(&self, order: usize) -> CoefficientSeries {
        let b = blaschke_coefficients(&self.zeros, self.rotation, order).unwrap();
        let mut c = vec![Complex64::default(); self.shift];
        c.extend_from_slice(&b.coefficients()[..=order - self.shift]);
        CoefficientSeries::new(c).unwrap()
    }
}

fn operator_oracle() -> Outcome {
    let specs = [
        OperatorSpec::BetaCesaro { beta: 0.5 },
        OperatorSpec::BetaCesaro { beta: 1.0 },
        OperatorSpec::BetaCesaro { beta: 2.0 },
        OperatorSpec::AlphaCesaro { alpha: -0.5 },
        OperatorSpec::AlphaCesaro { alpha: 0.0 },
        OperatorSpec::AlphaCesaro { alpha: 1.0 },
        OperatorSpec::Bernardi { m: 1, delta: 1.0 },
        OperatorSpec::Bernardi { m: 2, delta: 0.5 },
    ];
    let points: Vec<Complex64> = (0..10)
        .map(|j| Complex64::from_polar(0.05 + 0.085 * j as f64, TAU * (0.1 + 0.137 * j as f64)))
        .collect();
    let mut worst: f64 = 0.0;
    for spec in &specs {
        let shift = match spec {
            OperatorSpec::Bernardi { m, .. } => *m as usize,
            _ => 0,
        };
        let f = TestFunction {
            zeros: vec![Complex64::new(0.5, 0.0), Complex64::new(-0.3, 0.4), Complex64::new(0.0, 0.2)],
            rotation: Complex64::from_polar(1.0, 0.7),
            shift,
        };
        let transformed = apply_coefficient_form(spec, &f.series(800)).map_err(|e| e.to_string())?;
        for &z in &points {
            let direct =
                apply_integral_form(spec, |w| f.eval(w), z, DEFAULT_QUADRATURE_NODES).map_err(|e| e.to_string())?;
            worst = worst.max((transformed.eval(z) - direct).norm());
        }
    }

    // f ≡ 1 (f = z^m for Bernardi) against the closed-form bound
    let mut worst_one: f64 = 0.0;
    for spec in &specs {
        for &r in &[0.1, 0.3, 0.5, 0.7, 0.9, 0.99] {
            let m = match spec {
                OperatorSpec::Bernardi { m, .. } => *m as i32,
                _ => 0,
            };
            let z = Complex64::new(r, 0.0);
            let integral =
                apply_integral_form(spec, |w| w.powi(m), z, DEFAULT_QUADRATURE_NODES).map_err(|e| e.to_string())?;
            let closed = match *spec {
                // [1 - (1-r)^{1-β}] / ((1-β) r), and -ln(1-r)/r at β = 1
                OperatorSpec::BetaCesaro { beta } if beta == 1.0 => -(1.0f64 - r).ln() / r,
                OperatorSpec::BetaCesaro { beta } => (1.0 - (1.0f64 - r).powf(1.0 - beta)) / ((1.0 - beta) * r),
                OperatorSpec::AlphaCesaro { alpha } => {
                    (alpha + 1.0) * (0..20000).map(|n| r.powi(n) / (n as f64 + alpha + 1.0)).sum::<f64>()
                }
                OperatorSpec::Bernardi { m, delta } => r.powi(m as i32) / (m as f64 + delta),
            };
            let bound = operator_bound(spec, r).map_err(|e| e.to_string())?;
            worst_one = worst_one.max((integral.re - closed).abs()).max((bound - closed).abs());
        }
    }
    check(
        worst <= 1e-8 && worst_one <= 1e-10,
        format!("coefficient vs integral form {worst:.1e} over 8 operators × 10 points; f ≡ 1 vs closed form {worst_one:.1e}"),
    )
}

fn algebraic_identities() -> Outcome {
    let mut worst_sum: f64 = 0.0;
    for &alpha in &[-0.5, 0.0, 1.0, 2.5] {
        let mut partial = 0.0;
        for n in 0..=50 {
            partial += pochhammer_ratio(n, alpha);
            let target = pochhammer_ratio(n, alpha + 1.0);
            worst_sum = worst_sum.max((partial - target).abs() / target.abs());
        }
    }

    let ones = CoefficientSeries::from_real(&[1.0; 51]).unwrap();
    let mut worst_row: f64 = 0.0;
    for spec in [
        OperatorSpec::BetaCesaro { beta: 1.0 },
        OperatorSpec::AlphaCesaro { alpha: -0.5 },
        OperatorSpec::AlphaCesaro { alpha: 0.0 },
        OperatorSpec::AlphaCesaro { alpha: 1.0 },
        OperatorSpec::AlphaCesaro { alpha: 2.5 },
    ] {
        let out = apply_coefficient_form(&spec, &ones).unwrap();
        for c in out.coefficients() {
            worst_row = worst_row.max((c - 1.0).norm());
        }
    }

    let mut min_slack = f64::INFINITY;
    for i in 0..1000 {
        let x = i as f64 / 1000.0;
        for j in 1..=20 {
            let p = j as f64 / 10.0;
            min_slack = min_slack.min(p_bound_check(x, p).unwrap());
        }
    }
    check(
        worst_sum <= 1e-12 && worst_row <= 1e-12 && min_slack >= -1e-15,
        format!(
            "A_k sum identity {worst_sum:.1e} (rel), Cesàro row sums {worst_row:.1e}, min (1-x^p)/(1-x²) - p/2 = {min_slack:.1e} on 1000×20"
        ),
    )
}

fn operator_radii() -> Outcome {
    let domain = DomainParams::unit_disk();
    let beta = operator_bohr_radius(&OperatorSpec::BetaCesaro { beta: 1.0 }, domain)
        .map_err(|e| e.to_string())?
        .radius;
    // 2x - (3+γ)(1-x) ln(1/(1-x)) at γ = 0, written out independently
    let residual = 2.0 * beta + 3.0 * (1.0 - beta) * (1.0 - beta).ln();
    let alpha = operator_bohr_radius(&OperatorSpec::AlphaCesaro { alpha: 0.0 }, domain)
        .map_err(|e| e.to_string())?
        .radius;
    let mut continuity: f64 = 0.0;
    for b in [1.0 - 1e-6, 1.0 + 1e-6] {
        let r = operator_bohr_radius(&OperatorSpec::BetaCesaro { beta: b }, domain)
            .map_err(|e| e.to_string())?
            .radius;
        continuity = continuity.max((r - beta).abs());
    }
    let library_residual = radius_equation(&OperatorSpec::BetaCesaro { beta: 1.0 }, 0.0, 1.0, beta);
    check(
        beta > 0.5 && beta < 0.55 && residual.abs() <= 1e-9 && (alpha - beta).abs() <= 1e-10 && continuity <= 1e-5,
        format!(
            "R = {beta:.12}, residual {:.1e} (library {:.1e}), |R_α=0 - R| = {:.1e}, β = 1 ± 1e-6 drift {continuity:.1e}",
            residual.abs(),
            library_residual.abs(),
            (alpha - beta).abs()
        ),
    )
}

/// `Σ_{n≥N} n² r^n` in the textbook arrangement.
fn quadratic_tail_textbook(n: u32, r: f64) -> f64 {
    let k = n as f64;
    r.powi(n as i32) * (k * k - (2.0 * k * k - 2.0 * k - 1.0) * r + (k - 1.0) * (k - 1.0) * r * r)
        / (1.0 - r).powi(3)
}

fn oracle_equivalence() -> Outcome {
    let mut families = default_config().families;
    families.extend([
        WeightFamily::PowerTail { n: 5 },
        WeightFamily::LinearPlusOne { n: 3 },
        WeightFamily::Linear { n: 1 },
        WeightFamily::Quadratic { n: 2 },
        WeightFamily::Quadratic { n: 5 },
        WeightFamily::BetaCesaro { beta: 3.7 },
        WeightFamily::AlphaCesaro { alpha: -0.9 },
        WeightFamily::Bernardi { m: 3, delta: -2.5 },
    ]);
    let mut worst: f64 = 0.0;
    let mut worst_at = String::new();
    for f in &families {
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            let terms = certified_terms(f, r, 1e-13);
            let brute = brute_force_tail(f, r, terms).map_err(|e| e.to_string())?;
            let d = (f.tail_sum(r) - brute).abs();
            if d > worst {
                worst = d;
                worst_at = format!("{f} r={r}");
            }
        }
    }
    let mut printed: f64 = 0.0;
    for n in 1..=8 {
        for i in 1..=9 {
            let r = i as f64 / 10.0;
            let q = WeightFamily::Quadratic { n };
            let textbook = quadratic_tail_textbook(n, r);
            printed = printed.max((q.tail_sum(r) - textbook).abs() / textbook);
        }
    }
    check(
        worst <= 1e-10 && printed <= 1e-13,
        format!(
            "{} families × 9 radii, max |closed - brute| = {worst:.1e} ({worst_at}); n² tail vs textbook form {printed:.1e} (rel)",
            families.len()
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("classical anchor", classical_anchor),
        ("shifted-disk classical radius", shifted_disk_classical),
        ("quadratic closed forms", quadratic_closed_forms),
        ("inequality suite", inequality_suite),
        ("sharpness suite", sharpness_suite),
        ("coefficient bound suite", lemma_suite),
        ("operator oracle", operator_oracle),
        ("algebraic identities", algebraic_identities),
        ("operator radii consistency", operator_radii),
        ("oracle equivalence", oracle_equivalence),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (tag, detail) = match std::panic::catch_unwind(run) {
            Ok(Ok(d)) => ("PASS", d),
            Ok(Err(d)) => ("FAIL", d),
            Err(_) => ("FAIL", "panicked".to_string()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("criterion {:>2} {tag} {name}: {detail} [{:.2?}]", i + 1, t.elapsed());
    }
    println!(
        "acceptance: {}/{} criteria passed in {:.2?}",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
