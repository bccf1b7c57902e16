//! Engine contracts on a set of integrals with known values.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use atomwall::quadrature::{
    adaptive_semi_infinite, integrate, pv_integrate, regulated_limit, AbelOptions, IntegralResult, QuadratureSpec,
    Regulator,
};

struct Case {
    name: &'static str,
    exact: f64,
    run: Box<dyn Fn(&QuadratureSpec) -> IntegralResult>,
}

fn case(name: &'static str, exact: f64, run: impl Fn(&QuadratureSpec) -> IntegralResult + 'static) -> Case {
    Case {
        name,
        exact,
        run: Box::new(run),
    }
}

fn closed_form_set() -> Vec<Case> {
    vec![
        case("x^5 on [0, 1]", 1.0 / 6.0, |s| integrate(|x: f64| x.powi(5), 0.0, 1.0, s).unwrap()),
        case("exp on [0, 1]", 1f64.exp() - 1.0, |s| integrate(|x: f64| x.exp(), 0.0, 1.0, s).unwrap()),
        case("1/sqrt(x) on [0, 1]", 2.0, |s| integrate(|x: f64| 1.0 / x.sqrt(), 0.0, 1.0, s).unwrap()),
        case("ln x on [0, 1]", -1.0, |s| integrate(|x: f64| x.ln(), 0.0, 1.0, s).unwrap()),
        case("sqrt(x) on [0, 1]", 2.0 / 3.0, |s| integrate(|x: f64| x.sqrt(), 0.0, 1.0, s).unwrap()),
        case("1/(1+x^2) on [0, 1]", PI / 4.0, |s| integrate(|x: f64| 1.0 / (1.0 + x * x), 0.0, 1.0, s).unwrap()),
        case("sin^2(20x) on [0, pi]", FRAC_PI_2, |s| {
            integrate(|x: f64| (20.0 * x).sin().powi(2), 0.0, PI, s).unwrap()
        }),
        case("|x - 1/3| on [0, 1]", 5.0 / 18.0, |s| integrate(|x: f64| (x - 1.0 / 3.0).abs(), 0.0, 1.0, s).unwrap()),
        case("narrow peak on [-1, 1]", 2.0 * (100f64).atan() / 100.0, |s| {
            integrate(|x: f64| 1.0 / (1.0 + 1e4 * x * x), -1.0, 1.0, s).unwrap()
        }),
        case("e^-k on [0, inf)", 1.0, |s| adaptive_semi_infinite(|k: f64| (-k).exp(), 0.0, s).unwrap()),
        case("1/(1+k^2) on [0, inf)", FRAC_PI_2, |s| {
            adaptive_semi_infinite(|k: f64| 1.0 / (1.0 + k * k), 0.0, s).unwrap()
        }),
        case("k^3 Bose on [0, inf)", PI.powi(4) / 15.0, |s| {
            adaptive_semi_infinite(|k: f64| k.powi(3), 0.0, &s.with_regulator(Regulator::Bose(1.0))).unwrap()
        }),
        case("PV 1/(k - 1) on [0, 3]", LN_2, |s| {
            pv_integrate(|_: f64| 1.0, 0.0, 3.0, &s.with_pole(1.0)).unwrap()
        }),
        case("PV k^2/(k - 1) on [0, 2]", 4.0, |s| {
            pv_integrate(|k: f64| k * k, 0.0, 2.0, &s.with_pole(1.0)).unwrap()
        }),
        case("PV e^k/(k - 1/2) on [0, 1]", {
            // e^{1/2}[Ei(1/2) − Ei(−1/2)] = 2 e^{1/2} Shi(1/2)
            let shi: f64 = (0..20).map(|n| 0.5f64.powi(2 * n + 1) / ((2 * n + 1) as f64 * factorial(2 * n + 1))).sum();
            2.0 * 0.5f64.exp() * shi
        }, |s| pv_integrate(|k: f64| k.exp(), 0.0, 1.0, &s.with_pole(0.5)).unwrap()),
    ]
}

fn factorial(n: i32) -> f64 {
    (1..=n).map(f64::from).product()
}

#[test]
fn error_estimates_are_honest() {
    let mut total = 0;
    let mut honest = 0;
    let mut report = Vec::new();
    for c in closed_form_set() {
        for rel in [1e-4, 1e-6, 1e-8, 1e-10, 1e-12] {
            let spec = QuadratureSpec::default().with_tolerances(rel, 1e-300);
            let r = (c.run)(&spec);
            let err = (r.value - c.exact).abs();
            total += 1;
            if err <= 3.0 * r.err_estimate {
                honest += 1;
            } else {
                report.push(format!("{} at rel {rel:e}: true {err:e}, estimate {:e}", c.name, r.err_estimate));
            }
        }
    }
    assert!(honest as f64 >= 0.95 * total as f64, "{honest}/{total} honest; {report:#?}");
}

#[test]
fn converged_results_meet_their_tolerance() {
    for c in closed_form_set() {
        let spec = QuadratureSpec::default().with_tolerances(1e-9, 1e-300);
        let r = (c.run)(&spec);
        assert!(r.converged, "{}", c.name);
        assert!(r.err_estimate <= 1e-9 * r.value.abs(), "{}", c.name);
        assert!((r.value - c.exact).abs() <= 1e-8 * c.exact.abs(), "{}: {} vs {}", c.name, r.value, c.exact);
    }
}

#[test]
fn refinement_never_hurts() {
    // Doubling the bisection budget must not make the achieved error worse,
    // beyond the last bits of the sum.
    for c in closed_form_set() {
        let mut previous = f64::INFINITY;
        for budget in [1, 2, 4, 8, 16, 32, 64, 128] {
            let spec = QuadratureSpec::default()
                .with_tolerances(1e-15, 1e-300)
                .with_max_subdivisions(budget);
            let r = (c.run)(&spec);
            let err = (r.value - c.exact).abs();
            assert!(
                err <= previous + 8.0 * f64::EPSILON * c.exact.abs(),
                "{}: budget {budget} error {err:e} after {previous:e}",
                c.name
            );
            previous = err;
        }
    }
}

#[test]
fn pole_subtraction_is_exact() {
    // Dyadic endpoints keep the interval exactly symmetric about the pole.
    for (c, k0, d) in [(1.0, 1.0, 0.5), (-3.5, 2.0, 1.5), (1e6, 0.375, 0.125)] {
        let spec = QuadratureSpec::default().with_pole(k0);
        let r = pv_integrate(|_: f64| c, k0 - d, k0 + d, &spec).unwrap();
        assert!(r.value.abs() <= spec.abs_tol, "{c} {k0} {d}: {}", r.value);
    }
}

#[test]
fn budget_exhaustion_is_not_silent() {
    let spec = QuadratureSpec::default()
        .with_tolerances(1e-14, 1e-300)
        .with_max_subdivisions(3);
    let r = integrate(|x: f64| (1.0 / x).sin(), 1e-4, 1.0, &spec).unwrap();
    assert!(!r.converged);
    assert!(!r.usable());
    assert!(r.into_result().is_err());
}

#[test]
fn abel_summed_integrals() {
    let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-15).with_period(2.0 * PI);
    // ∫₀^∞ sin x/x dx = π/2
    let sinc = |k: f64| if k == 0.0 { 1.0 } else { k.sin() / k };
    let r = regulated_limit(sinc, 0.0, &spec, &AbelOptions::new(1.0)).unwrap();
    assert!((r.value - FRAC_PI_2).abs() < 1e-6);
    // Abel value of ∫₀^∞ cos x dx is 0 and of ∫₀^∞ sin x dx is 1.
    let r = regulated_limit(|k: f64| k.cos(), 0.0, &spec, &AbelOptions::new(1.0)).unwrap();
    assert!(r.value.abs() < 1e-8);
    let r = regulated_limit(|k: f64| k.sin(), 0.0, &spec, &AbelOptions::new(1.0)).unwrap();
    assert!((r.value - 1.0).abs() < 1e-8);
}
