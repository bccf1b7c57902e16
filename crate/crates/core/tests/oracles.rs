//! Closed forms checked against independent quadrature of their integral
//! representations, and the contour identity against direct principal values.

use std::f64::consts::PI;

use atomwall::check::{apm_family, dual_path_mismatch};
use atomwall::quadrature::{
    adaptive_semi_infinite, apm_direct, apm_identity, integrate, pv_integrate, ApmOptions, ApmSign,
    QuadratureSpec, Regulator,
};
use atomwall::specfun::{h0, h0rr};
use atomwall::vacuum::{v0fr_quadrature, v0rr_quadrature, vacuum_potentials, vg_quadrature};
use num_complex::Complex64;

const POINTS: [f64; 5] = [0.3, 1.0, 3.0, 10.0, 30.0];

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn radiation_reaction_kernel_from_its_integral() {
    for x0 in POINTS {
        let quad = PI * x0.powi(3) * v0rr_quadrature(x0).unwrap().value;
        assert!(rel(quad, h0rr(x0)) < 1e-8, "x0 = {x0}: {quad} vs {}", h0rr(x0));
    }
}

#[test]
fn full_kernel_from_its_integral() {
    for x0 in POINTS {
        let quad = PI * x0.powi(3) * vg_quadrature(x0).unwrap();
        assert!(rel(quad, h0(x0)) < 1e-8, "x0 = {x0}: {quad} vs {}", h0(x0));
    }
}

#[test]
fn field_fluctuation_part_from_its_integral() {
    for x0 in [0.3, 1.0, 3.0] {
        let v = vacuum_potentials(x0).unwrap();
        let r = v0fr_quadrature(x0).unwrap();
        assert!(rel(r.value, v.v0fr) < 1e-8, "x0 = {x0}");
        assert!((r.value - v.v0fr).abs() <= 3.0 * r.err_estimate.max(1e-15));
    }
}

#[test]
fn damped_sine_principal_value_two_ways() {
    // PV ∫₀^∞ sin(k) e^{−εk}/(k − k₀) dk: pole subtraction against the
    // antisymmetric split ∫₀^{2k₀} (g(k) − g(k₀))/(k − k₀) + ∫_{2k₀}^∞ g/(k − k₀).
    let (k0, eps) = (2.0, 0.1);
    let g = |k: f64| k.sin() * (-eps * k).exp();
    let spec = QuadratureSpec::default()
        .with_tolerances(1e-13, 1e-15)
        .with_period(2.0 * PI);
    let direct = pv_integrate(|k: f64| k.sin(), 0.0, f64::INFINITY, &spec.with_pole(k0).with_regulator(Regulator::Exponential(eps)))
        .unwrap()
        .into_result()
        .unwrap();
    let near = integrate(
        |k: f64| if k == k0 { k0.cos() * (-eps * k0).exp() - eps * g(k0) } else { (g(k) - g(k0)) / (k - k0) },
        0.0,
        2.0 * k0,
        &spec,
    )
    .unwrap()
    .into_result()
    .unwrap();
    let far = adaptive_semi_infinite(|k: f64| k.sin() / (k - k0), 2.0 * k0, &spec.with_regulator(Regulator::Exponential(eps)))
        .unwrap()
        .into_result()
        .unwrap();
    assert!((direct - (near + far)).abs() < 1e-8, "{direct} vs {}", near + far);
}

#[test]
fn contour_identity_examples() {
    let opts = ApmOptions::default();
    let one = |_: Complex64| Complex64::new(1.0, 0.0);
    for (lambda, k0) in [(0.5, 0.5), (1.0, 2.0), (3.0, 1.0)] {
        let a = apm_identity(one, lambda, k0, ApmSign::Minus, &opts).unwrap();
        let b = apm_direct(one, lambda, k0, ApmSign::Minus, &opts).unwrap();
        assert!((a - b).norm() < 1e-8, "λ = {lambda}, k0 = {k0}");
    }
    let square = |k: Complex64| k * k;
    for sign in [ApmSign::Plus, ApmSign::Minus] {
        let a = apm_identity(square, 1.0, 1.0, sign, &opts).unwrap();
        let b = apm_direct(square, 1.0, 1.0, sign, &opts).unwrap();
        assert!((a - b).norm() < 1e-7 * a.norm(), "{sign:?}");
    }
}

#[test]
fn contour_identity_over_the_test_family() {
    assert!(dual_path_mismatch().unwrap() < 1e-7);
    // The family is what the identity is meant for: its members satisfy the decay probe.
    for lambda in [0.5, 1.0, 5.0] {
        for member in apm_family(lambda) {
            let opts = ApmOptions {
                abel_scale: Some(member.abel_scale),
                ..ApmOptions::default()
            };
            assert!(apm_identity(&member.f, lambda, 1.0, ApmSign::Plus, &opts).is_ok(), "{}", member.name);
        }
    }
}

#[test]
fn large_lambda_leaves_the_pole_term() {
    let opts = ApmOptions::default();
    let f = |k: Complex64| k;
    let k0 = 1.0;
    let smooth = |lambda: f64| {
        let total = apm_identity(f, lambda, k0, ApmSign::Plus, &opts).unwrap();
        let pole = Complex64::new(0.0, -PI) * k0 * Complex64::from_polar(1.0, k0 * lambda);
        (total - pole).norm()
    };
    let (s2, s3) = (smooth(1e2), smooth(1e3));
    assert!(s3 < 0.2 * s2, "{s2} {s3}");
}
