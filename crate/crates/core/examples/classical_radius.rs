//! The classical Bohr radius 1/3 and its shifted-disk and weighted variants.

use bohr::{minimal_root, DomainParams, RadiusQuery, WeightFamily};

fn main() -> bohr::Result<()> {
    let classical = RadiusQuery::new(WeightFamily::PowerTail { n: 1 }, DomainParams::unit_disk(), 1.0)?;
    let r = minimal_root(&classical, 1e-12)?;
    println!("unit disk: R = {:.15} (1/3 = {:.15})", r.radius, 1.0 / 3.0);
    println!("  bracket {:?}, residual {:.2e}, sharp window ok: {}", r.bracket, r.residual, r.sharp_window_ok);

    println!("\npower-tail N=1 on shifted disks, p = 1:");
    for g in [0.0, 0.25, 0.5, 0.75, 0.9] {
        let q = RadiusQuery::new(WeightFamily::PowerTail { n: 1 }, DomainParams::new(g)?, 1.0)?;
        let r = minimal_root(&q, 1e-12)?.radius;
        println!("  gamma = {g:<4}  R = {r:.12}  (1+g)/(3+g) = {:.12}", (1.0 + g) / (3.0 + g));
    }

    println!("\nother families at gamma = 0.25, p = 2:");
    let domain = DomainParams::new(0.25)?;
    for family in [
        WeightFamily::EvenPowers,
        WeightFamily::OddPowers,
        WeightFamily::PowerTail { n: 4 },
        WeightFamily::LinearPlusOne { n: 2 },
        WeightFamily::Linear { n: 1 },
        WeightFamily::Quadratic { n: 3 },
    ] {
        let r = minimal_root(&RadiusQuery::new(family, domain, 2.0)?, 1e-12)?;
        println!("  {:<24} R = {:.12}", family.to_string(), r.radius);
    }
    Ok(())
}
