//! A user-defined weight sequence plugged into the radius and Bohr-sum machinery.

use bohr::harness::{random_bounded_function, suite_rng};
use bohr::weights::Weights;
use bohr::{bohr_sum, coefficients_of, extremal_margin, minimal_root, DomainParams, RadiusQuery};

/// `φ_k(r) = r^k / k!` for `k ≥ 1`, `φ_0 = 1`; the tail is `e^r - 1`.
struct Exponential;

impl Weights for Exponential {
    fn phi0(&self, _: f64) -> f64 {
        1.0
    }

    fn phi(&self, k: usize, r: f64) -> f64 {
        (1..=k).fold(1.0, |acc, i| acc * r / i as f64)
    }

    fn tail_sum(&self, r: f64) -> f64 {
        r.exp_m1()
    }

    fn tail_beyond(&self, order: usize, r: f64) -> f64 {
        // first dropped term over (1 - r/(order+2))
        self.phi(order + 1, r) / (1.0 - r / (order as f64 + 2.0))
    }
}

fn main() -> bohr::Result<()> {
    for g in [0.0, 0.5] {
        let domain = DomainParams::new(g)?;
        let q = RadiusQuery::custom(Exponential, domain, 1.0)?;
        let r = minimal_root(&q, 1e-12)?;
        // (1+γ) = 2 (e^x - 1)  ⇒  x = ln((3+γ)/2)
        println!("gamma = {g}: R = {:.12}, ln((3+g)/2) = {:.12}", r.radius, ((3.0 + g) / 2.0).ln());

        let f = random_bounded_function(domain, &mut suite_rng(3, 0));
        let s = coefficients_of(&f, 200)?;
        let b = bohr_sum(&s, &Exponential, 1.0, r.radius)?;
        println!("  random member at R: A_f = {:.12} <= 1", b.value);
        let m = extremal_margin(domain, 0.999, &Exponential, 1.0, r.radius + 0.01)?;
        println!("  extremal margin at R + 0.01: {:.3e}", m.margin);
    }
    Ok(())
}
