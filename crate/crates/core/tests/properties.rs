use bohr::harness::{brute_force_tail, certified_terms, random_bounded_function, suite_rng};
use bohr::operators::{apply_coefficient_form, apply_integral_form, DEFAULT_QUADRATURE_NODES};
use bohr::series::{affine_compose, coefficients_of, extremal_coefficients, lemma_bound_report};
use bohr::weights::Weights;
use bohr::{
    blaschke_coefficients, bohr_sum, gap, minimal_root, p_bound_check, BoundedFunction, CoefficientSeries,
    DomainParams, OperatorSpec, RadiusQuery, WeightFamily,
};
use num_complex::Complex64;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = WeightFamily> {
    prop_oneof![
        (1u32..6).prop_map(|n| WeightFamily::PowerTail { n }),
        Just(WeightFamily::EvenPowers),
        Just(WeightFamily::OddPowers),
        (1u32..5).prop_map(|n| WeightFamily::LinearPlusOne { n }),
        (1u32..5).prop_map(|n| WeightFamily::Linear { n }),
        (1u32..5).prop_map(|n| WeightFamily::Quadratic { n }),
        (0.1f64..4.0).prop_map(|beta| WeightFamily::BetaCesaro { beta }),
        (-0.9f64..3.0).prop_map(|alpha| WeightFamily::AlphaCesaro { alpha }),
        (1u32..4, 0.0f64..3.0).prop_map(|(m, d)| WeightFamily::Bernardi { m, delta: d - 0.9 * m as f64 }),
    ]
}

fn zero() -> impl Strategy<Value = Complex64> {
    (0.0f64..0.95, 0.0f64..std::f64::consts::TAU).prop_map(|(r, t)| Complex64::from_polar(r, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn affine_compose_at_zero_gamma_is_identity(c in prop::collection::vec(-1.0f64..1.0, 1..40)) {
        let s = CoefficientSeries::from_real(&c).unwrap();
        prop_assert_eq!(affine_compose(&s, DomainParams::unit_disk()), s);
    }

    #[test]
    fn composed_blaschke_products_obey_coefficient_bound(
        zeros in prop::collection::vec(zero(), 0..6),
        theta in 0.0f64..6.3,
        gamma in 0.0f64..0.95,
    ) {
        let f = BoundedFunction::BlaschkeComposed {
            domain: DomainParams::new(gamma).unwrap(),
            zeros,
            rotation: Complex64::from_polar(1.0, theta),
        };
        let s = coefficients_of(&f, 200).unwrap();
        let report = lemma_bound_report(&s, DomainParams::new(gamma).unwrap()).unwrap();
        prop_assert!(report.max_violation <= 1e-10, "{:?}", report);
    }

    #[test]
    fn extremal_attains_bound_at_first_coefficient(gamma in 0.0f64..0.99, a in 1e-6f64..0.999) {
        let d = DomainParams::new(gamma).unwrap();
        let s = extremal_coefficients(d, a, 1).unwrap();
        let bound = d.coefficient_bound(s.get(0).norm());
        prop_assert!((s.get(1).norm() - bound).abs() <= 1e-12);
    }

    #[test]
    fn blaschke_partial_sums_bounded_on_disk(
        zeros in prop::collection::vec((0.0f64..0.8, 0.0f64..6.3).prop_map(|(r, t)| Complex64::from_polar(r, t)), 0..5),
        rho in 0.0f64..0.99,
        theta in 0.0f64..6.3,
    ) {
        let s = blaschke_coefficients(&zeros, Complex64::new(1.0, 0.0), 1500).unwrap();
        prop_assert!(s.eval(Complex64::from_polar(rho, theta)).norm() <= 1.0 + 1e-10);
    }

    #[test]
    fn series_matches_closed_form(seed in 0u64..10_000, gamma in 0.0f64..0.9, rho in 0.0f64..0.9, theta in 0.0f64..6.3) {
        let f = random_bounded_function(DomainParams::new(gamma).unwrap(), &mut suite_rng(seed, 0));
        let z = Complex64::from_polar(rho, theta);
        let s = coefficients_of(&f, 200).unwrap();
        // coefficients are bounded by 1, so the dropped tail is at most ρ^201/(1-ρ)
        let tail = rho.powi(201) / (1.0 - rho);
        prop_assert!((s.eval(z) - f.eval(z)).norm() <= tail + 1e-12);
    }

    #[test]
    fn extremal_series_matches_closed_form(gamma in 0.0f64..0.9, a in 0.0f64..0.99, rho in 0.0f64..0.9, theta in 0.0f64..6.3) {
        let f = BoundedFunction::Extremal { domain: DomainParams::new(gamma).unwrap(), a };
        let z = Complex64::from_polar(rho, theta);
        let s = coefficients_of(&f, 400).unwrap();
        prop_assert!((s.eval(z) - f.eval(z)).norm() <= 1e-12);
    }

    #[test]
    fn gap_sign_around_radius(f in family(), gamma in 0.0f64..0.9, p in 0.2f64..2.0, t in 0.01f64..0.99) {
        let q = RadiusQuery::new(f, DomainParams::new(gamma).unwrap(), p).unwrap();
        let Ok(r) = minimal_root(&q, 1e-12) else { return Ok(()) };
        prop_assert!(r.bracket.0 < r.bracket.1 && r.bracket.1 - r.bracket.0 <= 1e-12);
        prop_assert!(gap(&q, t * r.radius).unwrap() >= -1e-12, "gap negative below the radius");
    }

    #[test]
    fn inequality_holds_below_radius(
        f in family(), gamma in 0.0f64..0.9, p in 0.2f64..2.0, seed in 0u64..1000, t in 0.0f64..1.0,
    ) {
        let domain = DomainParams::new(gamma).unwrap();
        let q = RadiusQuery::new(f, domain, p).unwrap();
        let Ok(r) = minimal_root(&q, 1e-12) else { return Ok(()) };
        let g = random_bounded_function(domain, &mut suite_rng(seed, 3));
        let s = coefficients_of(&g, 200).unwrap();
        let x = t * r.radius;
        let b = bohr_sum(&s, &f, p, x).unwrap();
        prop_assert!(b.value - f.phi0(x) <= 1e-9 + b.truncation_bound);
    }

    #[test]
    fn brute_force_agrees_with_closed_form(f in family(), r in 0.0f64..0.9) {
        let terms = certified_terms(&f, r, 1e-14);
        let brute = brute_force_tail(&f, r, terms).unwrap();
        let closed = f.tail_sum(r);
        prop_assert!((brute - closed).abs() <= 1e-10 * closed.max(1.0), "{} vs {}", brute, closed);
    }

    #[test]
    fn p_bound_is_non_negative(x in 0.0f64..1.0, p in 1e-3f64..=2.0) {
        prop_assert!(p_bound_check(x, p).unwrap() >= -1e-15);
    }

    #[test]
    fn operator_forms_agree(
        which in 0usize..3,
        param in 0.1f64..2.5,
        zeros in prop::collection::vec((0.0f64..0.6, 0.0f64..6.3).prop_map(|(r, t)| Complex64::from_polar(r, t)), 0..4),
        rho in 0.0f64..0.8,
        theta in 0.0f64..6.3,
    ) {
        let spec = match which {
            0 => OperatorSpec::BetaCesaro { beta: param },
            1 => OperatorSpec::AlphaCesaro { alpha: param - 0.9 },
            _ => OperatorSpec::Bernardi { m: 1, delta: param },
        };
        let shift = usize::from(which == 2);
        let b = blaschke_coefficients(&zeros, Complex64::new(1.0, 0.0), 400).unwrap();
        let mut c = vec![Complex64::default(); shift];
        c.extend_from_slice(&b.coefficients()[..=400 - shift]);
        let series = CoefficientSeries::new(c).unwrap();
        let eval = |w: Complex64| {
            let v = zeros.iter().fold(Complex64::new(1.0, 0.0), |acc, zi| acc * (w - zi) / (1.0 - zi.conj() * w));
            if shift == 1 { w * v } else { v }
        };
        let z = Complex64::from_polar(rho, theta);
        let coeff = apply_coefficient_form(&spec, &series).unwrap().eval(z);
        let integral = apply_integral_form(&spec, eval, z, DEFAULT_QUADRATURE_NODES).unwrap();
        prop_assert!((coeff - integral).norm() <= 1e-9, "{:?}: {} vs {}", spec, coeff, integral);
    }

    #[test]
    fn coefficient_text_is_bit_exact(v in prop::collection::vec((any::<f64>(), any::<f64>()), 1..30)) {
        let finite: Vec<Complex64> = v
            .into_iter()
            .map(|(a, b)| Complex64::new(if a.is_finite() { a } else { 0.0 }, if b.is_finite() { b } else { 0.0 }))
            .collect();
        let s = CoefficientSeries::new(finite).unwrap();
        let back = bohr::cli::parse_coefficients(&bohr::cli::format_coefficients(&s)).unwrap();
        for (x, y) in s.coefficients().iter().zip(back.coefficients()) {
            prop_assert_eq!(x.re.to_bits(), y.re.to_bits());
            prop_assert_eq!(x.im.to_bits(), y.im.to_bits());
        }
    }
}
