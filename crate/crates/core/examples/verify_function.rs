//! Checks the weighted inequality for a few functions, at the radius and just beyond it.

use bohr::harness::{random_bounded_function, suite_rng};
use bohr::{minimal_root, verify_up_to_radius, BoundedFunction, CoefficientSeries, DomainParams, RadiusQuery, WeightFamily};
use num_complex::Complex64;

fn main() -> bohr::Result<()> {
    let domain = DomainParams::new(0.25)?;
    let query = RadiusQuery::new(WeightFamily::OddPowers, domain, 1.0)?;
    let radius = minimal_root(&query, 1e-12)?.radius;
    println!("odd powers, gamma = 0.25, p = 1: R = {radius:.12}\n");

    let functions = [
        ("constant 0.5", BoundedFunction::Raw { series: CoefficientSeries::from_real(&[0.5])? }),
        ("extremal a = 0.999", BoundedFunction::Extremal { domain, a: 0.999 }),
        (
            "Blaschke, zeros 0.5 and 0.2+0.6i",
            BoundedFunction::BlaschkeComposed {
                domain,
                zeros: vec![Complex64::new(0.5, 0.0), Complex64::new(0.2, 0.6)],
                rotation: Complex64::new(0.0, 1.0),
            },
        ),
        ("random (seed 7)", random_bounded_function(domain, &mut suite_rng(7, 0))),
        ("non-member 2z", BoundedFunction::Raw { series: CoefficientSeries::from_real(&[0.0, 2.0])? }),
    ];

    for (label, f) in &functions {
        for (upto, tag) in [(radius, "R"), (radius + 0.01, "R+0.01")] {
            let report = verify_up_to_radius(f, &query, upto, 101)?;
            println!(
                "{label:<34} up to {tag:<7} max excess {:>10.3e}  truncation {:.1e}  coefficient violation {:>9.2e}  {}",
                report.max_excess,
                report.truncation_bound,
                report.coefficient_violation,
                if report.pass { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
