//! The extremal maps push the Bohr sum above phi_0 as soon as r exceeds the radius.

use bohr::{extremal_margin, minimal_root, DomainParams, RadiusQuery, WeightFamily};

fn main() -> bohr::Result<()> {
    let domain = DomainParams::new(0.5)?;
    let family = WeightFamily::BetaCesaro { beta: 2.0 };
    let p = 1.0;
    let radius = minimal_root(&RadiusQuery::new(family, domain, p)?, 1e-12)?.radius;
    println!("{family}, gamma = 0.5: R = {radius:.12}\n");

    println!("{:>8} {:>14} {:>14}", "r - R", "margin", "first order");
    for dr in [-0.02, -0.01, 0.0, 0.01, 0.02] {
        let m = extremal_margin(domain, 1.0 - 1e-3, &family, p, radius + dr)?;
        println!("{dr:>8} {:>14.6e} {:>14.6e}", m.margin, m.first_order_prediction);
    }

    println!("\nRichardson check at r = R + 0.01:");
    let mut prev: Option<f64> = None;
    for h in [1e-2, 1e-3, 1e-4, 1e-5] {
        let m = extremal_margin(domain, 1.0 - h, &family, p, radius + 0.01)?;
        let rem = (m.margin - m.first_order_prediction).abs() / h;
        let ratio = prev.map(|q| format!("{:.3}", q / rem)).unwrap_or_default();
        println!("  1-a = {h:.0e}  |margin - prediction|/(1-a) = {rem:.6e}  reduction {ratio}");
        prev = Some(rem);
    }
    Ok(())
}
