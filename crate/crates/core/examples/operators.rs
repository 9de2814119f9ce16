//! Cesàro and Bernardi operators: coefficient form against quadrature, bounds and radii.

use bohr::operators::{apply_integral_form, DEFAULT_QUADRATURE_NODES};
use bohr::{
    apply_coefficient_form, blaschke_coefficients, operator_bohr_radius, operator_bound, CoefficientSeries,
    DomainParams, OperatorSpec,
};
use num_complex::Complex64;

fn main() -> bohr::Result<()> {
    let zeros = [Complex64::new(0.4, 0.3), Complex64::new(-0.6, 0.0)];
    let b = blaschke_coefficients(&zeros, Complex64::new(1.0, 0.0), 600)?;
    let f = |w: Complex64| zeros.iter().fold(Complex64::new(1.0, 0.0), |acc, z| acc * (w - z) / (1.0 - z.conj() * w));
    // z·B(z) for the Bernardi operator with m = 1
    let mut shifted = vec![Complex64::default()];
    shifted.extend_from_slice(&b.coefficients()[..600]);
    let zb = CoefficientSeries::new(shifted)?;

    let z = Complex64::new(0.3, 0.5);
    let specs = [
        OperatorSpec::BetaCesaro { beta: 0.5 },
        OperatorSpec::BetaCesaro { beta: 1.0 },
        OperatorSpec::AlphaCesaro { alpha: -0.5 },
        OperatorSpec::AlphaCesaro { alpha: 1.0 },
        OperatorSpec::Bernardi { m: 1, delta: 1.0 },
    ];
    for spec in &specs {
        let (series, value) = match spec {
            OperatorSpec::Bernardi { .. } => (
                apply_coefficient_form(spec, &zb)?,
                apply_integral_form(spec, |w| w * f(w), z, DEFAULT_QUADRATURE_NODES)?,
            ),
            _ => (apply_coefficient_form(spec, &b)?, apply_integral_form(spec, f, z, DEFAULT_QUADRATURE_NODES)?),
        };
        let coeff = series.eval(z);
        println!("{spec:?}\n  coefficient form {coeff:.15}\n  integral form    {value:.15}\n  |difference|     {:.1e}", (coeff - value).norm());
        println!("  bound at r = 0.5: {:.15}", operator_bound(spec, 0.5)?);
        for g in [0.0, 0.5] {
            let r = operator_bohr_radius(spec, DomainParams::new(g)?)?;
            println!("  radius at gamma = {g}: {:.12}", r.radius);
        }
    }
    Ok(())
}
