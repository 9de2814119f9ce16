//! The coefficient bound |a_n| <= (1 - |a_0|^2)/(1 + gamma) on random members and the extremal maps.

use bohr::harness::{random_bounded_function, run_lemma_suite, suite_rng};
use bohr::series::{coefficients_of, extremal_coefficients, lemma_bound_report};
use bohr::{CoefficientSeries, DomainParams};

fn main() -> bohr::Result<()> {
    let domain = DomainParams::new(0.2)?;
    let extremal = extremal_coefficients(domain, 0.6, 20)?;
    let report = lemma_bound_report(&extremal, domain)?;
    println!("extremal gamma = 0.2, a = 0.6: violation {:.2e} at n = {:?}", report.max_violation, report.worst_index);

    let mut rng = suite_rng(11, 0);
    for _ in 0..5 {
        let f = random_bounded_function(domain, &mut rng);
        let r = lemma_bound_report(&coefficients_of(&f, 200)?, domain)?;
        println!("random member: violation {:.3e} at n = {:?}", r.max_violation, r.worst_index);
    }

    let non_member = CoefficientSeries::from_real(&[0.0, 2.0])?;
    let r = lemma_bound_report(&non_member, DomainParams::unit_disk())?;
    println!("2z on the disk: violation {} at n = {:?}", r.max_violation, r.worst_index);

    let suite = run_lemma_suite(2024, 10_000, &[0.0, 0.25, 0.5, 0.75])?;
    println!(
        "\n{} random members: max violation {:.2e}; extremal equality error {:.1e}; pass = {}",
        suite.draws, suite.max_violation, suite.extremal_equality_error, suite.pass
    );
    Ok(())
}
