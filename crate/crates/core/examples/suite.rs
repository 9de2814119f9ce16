//! Runs the default inequality and sharpness suites and prints one line per cell.

use std::time::Instant;

use bohr::harness::{default_config, run_inequality_suite, run_sharpness_suite, CellReport};

fn line(c: &CellReport) -> String {
    format!(
        "{:<28} gamma={:<5} p={:<4} R={:<20} {:?} pass={} fail={} worst={:.3e}",
        c.query.family.to_string(),
        c.query.domain.gamma(),
        c.query.p,
        c.radius.map_or("-".into(), |r| format!("{r:.15}")),
        c.status,
        c.n_pass,
        c.n_fail,
        c.worst_excess.unwrap_or(f64::NAN),
    )
}

fn main() -> bohr::Result<()> {
    let config = default_config();

    let t = Instant::now();
    let report = run_inequality_suite(&config)?;
    for c in &report.cells {
        println!("{}", line(c));
    }
    println!(
        "inequality: {} cells, overall_pass={}, controls_detected={} ({:.2?})",
        report.cells.len(),
        report.overall_pass,
        report.controls_detected,
        t.elapsed()
    );

    let t = Instant::now();
    let report = run_sharpness_suite(&config)?;
    for c in &report.cells {
        let reduction = c
            .sharpness
            .as_ref()
            .map(|s| format!("{:.2?}", s.richardson_reduction))
            .unwrap_or_default();
        println!("{} richardson={}", line(c), reduction);
    }
    println!("sharpness: overall_pass={} ({:.2?})", report.overall_pass, t.elapsed());
    Ok(())
}
