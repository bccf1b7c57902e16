use std::f64::consts::PI;

use atomwall::specfun::{aux_f, aux_gcal, ci, geom_g, si, vacuum_kernels};
use atomwall::table::{Grid, Spacing, SweepTable};
use atomwall::thermal::{bose_occupation, delta_t_terms, p_ground, v_average, v_average_assembled, v_closed};
use atomwall::units::{denormalize, from_physical, AtomSpec, ReducedPoint};
use atomwall::vacuum::{vacuum_potentials, v0rr};
use proptest::prelude::*;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.log10()..hi.log10()).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn state_sum_identity(x0 in log_uniform(1e-3, 1e3)) {
        let v = vacuum_potentials(x0).unwrap();
        let scale = v.vg.abs().max(v.ve.abs()).max(2.0 * v.v0rr.abs());
        prop_assert!((v.vg + v.ve - 2.0 * v.v0rr).abs() <= 1e-13 * scale);
    }

    #[test]
    fn parts_add_up_to_the_ground_state(x0 in log_uniform(1e-3, 1e3)) {
        let v = vacuum_potentials(x0).unwrap();
        prop_assert!((v.vg - (v.v0rr + v.v0fr)).abs() <= 1e-13 * v.v0rr.abs().max(v.vg.abs()));
    }

    #[test]
    fn kernels_are_consistent(x in log_uniform(1e-3, 1e3)) {
        let k = vacuum_kernels(x);
        prop_assert!((k.h0 - (k.h0rr + k.h0fr)).abs() <= 1e-13 * k.h0rr.abs().max(k.h0.abs()).max(1.0));
    }

    #[test]
    fn sine_and_cosine_integral_derivatives(x in 0.05f64..80.0) {
        let h = 1e-5 * x.max(1.0);
        let dsi = (si(x + h) - si(x - h)) / (2.0 * h);
        let dci = (ci(x + h).unwrap() - ci(x - h).unwrap()) / (2.0 * h);
        prop_assert!((dsi - x.sin() / x).abs() < 1e-7 / x.min(1.0));
        prop_assert!((dci - x.cos() / x).abs() < 1e-7 / x.min(1.0));
    }

    #[test]
    fn auxiliary_function_derivatives(x in 0.05f64..80.0) {
        // ℱ′ = 𝒢 and 𝒢′ = 1/x − ℱ
        let h = 1e-5 * x.max(1.0);
        let df = (aux_f(x + h) - aux_f(x - h)) / (2.0 * h);
        let dg = (aux_gcal(x + h).unwrap() - aux_gcal(x - h).unwrap()) / (2.0 * h);
        prop_assert!((df - aux_gcal(x).unwrap()).abs() < 1e-7 / x.min(1.0));
        prop_assert!((dg - (1.0 / x - aux_f(x))).abs() < 1e-7 / (x * x).min(1.0));
    }

    #[test]
    fn sine_integral_is_odd(x in -50.0f64..50.0) {
        // Si(−x) = −Si(x), so si(x) + si(−x) = −π.
        prop_assert!((si(x) + si(-x) + PI).abs() < 1e-13);
    }

    #[test]
    fn geometric_factor_is_even_and_bounded(x in -200.0f64..200.0) {
        prop_assert_eq!(geom_g(x), geom_g(-x));
        prop_assert!(geom_g(x).abs() <= 1.0 / 3.0 + 1e-15);
    }

    #[test]
    fn averaging_paths_agree(x0 in log_uniform(0.1, 1e3), theta in log_uniform(0.05, 20.0)) {
        let a = v_average(x0, theta).unwrap();
        let b = v_average_assembled(x0, theta).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.abs(), "{} vs {}", a, b);
    }

    #[test]
    fn average_lies_between_lifshitz_and_zero(x0 in log_uniform(0.1, 1e3), theta in log_uniform(0.05, 20.0)) {
        let v = v_average(x0, theta).unwrap();
        prop_assert!(v < 0.0);
        prop_assert!(v >= -theta / x0.powi(3));
    }

    #[test]
    fn closed_form_from_the_delta_terms(x0 in log_uniform(0.1, 1e3), theta in log_uniform(0.05, 20.0)) {
        // coth(y) − 1 = 2/(e^{2y} − 1) turns vg + d1 + d2 + d3 into the closed form.
        let v = vacuum_potentials(x0).unwrap();
        let d = delta_t_terms(x0, theta).unwrap();
        let closed = v_closed(x0, theta).unwrap();
        let assembled = v.vg + d.sum();
        let scale = closed.abs().max(v.vg.abs()).max(v.v0rr.abs() * theta.max(1.0));
        prop_assert!((closed - assembled).abs() <= 1e-12 * scale, "{} vs {}", closed, assembled);
    }

    #[test]
    fn occupation_is_a_probability(theta in log_uniform(1e-3, 1e3)) {
        let p = p_ground(theta).unwrap();
        prop_assert!((0.5..=1.0).contains(&p));
    }

    #[test]
    fn bose_factor_recurrence(x in log_uniform(1e-4, 30.0)) {
        // n(x) e^x = n(x) + 1
        let n = bose_occupation(x).unwrap();
        prop_assert!((n * x.exp() - (n + 1.0)).abs() <= 1e-13 * (n + 1.0));
    }

    #[test]
    fn distance_round_trip(lambda0_um in 0.1f64..10.0, x0 in log_uniform(1e-3, 1e3)) {
        let atom = AtomSpec::from_wavelength(lambda0_um * 1e-6, 1e-29).unwrap();
        let back = atom.reduced_distance(atom.distance(x0));
        prop_assert!((back - x0).abs() <= 4.0 * f64::EPSILON * x0);
    }

    #[test]
    fn physical_inputs_round_trip(lambda0_um in 0.2f64..5.0, z_um in 0.01f64..20.0, t in 1.0f64..1000.0) {
        let (atom, p) = from_physical(lambda0_um, 20.0, z_um, t).unwrap();
        prop_assert!((atom.distance(p.x0) / 1e-6 - z_um).abs() <= 1e-12 * z_um);
        let again = ReducedPoint::new(p.x0, p.theta).unwrap();
        prop_assert!((again.z_over_lambda_t() - p.x0 * p.theta / 4.0).abs() <= 1e-12 * again.z_over_lambda_t());
    }

    #[test]
    fn london_normalization(lambda0_um in 0.2f64..5.0, alpha0 in 1.0f64..500.0, z_um in 1e-4f64..1e-2) {
        // −1/x0³ in ħcα0k0⁴ units is −ħω0α0/(8z³)
        let (atom, p) = from_physical(lambda0_um, alpha0, z_um, 0.0).unwrap();
        let e = denormalize(-1.0 / p.x0.powi(3), &atom).joules();
        let z = z_um * 1e-6;
        let expected = -atomwall::constants::HBAR * atom.omega0() * atom.alpha0() / (8.0 * z * z * z);
        prop_assert!((e / expected - 1.0).abs() < 1e-12);
    }

    #[test]
    fn csv_round_trips_every_value(values in prop::collection::vec(any::<f64>().prop_filter("finite", |v| v.is_finite()), 1..20)) {
        let rows: Vec<Vec<f64>> = values.iter().enumerate().map(|(i, &v)| vec![i as f64, v]).collect();
        let t = SweepTable::new("t", vec![], vec!["i".into(), "v".into()], rows).unwrap();
        let csv = t.to_csv();
        let parsed: Vec<f64> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
        prop_assert_eq!(parsed, values);
    }

    #[test]
    fn grids_are_strictly_increasing(lo in log_uniform(1e-4, 1.0), span in log_uniform(1.001, 1e6), n in 2usize..400, log in any::<bool>()) {
        let spacing = if log { Spacing::Log } else { Spacing::Linear };
        let v = Grid::new(lo, lo * span, n, spacing).unwrap().values();
        prop_assert_eq!(v.len(), n);
        prop_assert_eq!(v[0], lo);
        prop_assert_eq!(v[n - 1], lo * span);
        prop_assert!(v.windows(2).all(|w| w[1] > w[0]));
    }
}

#[test]
fn ground_state_is_attractive_on_the_figure_range() {
    let grid = Grid::new(1e-2, 1e2, 400, Spacing::Log).unwrap();
    for x0 in grid.values() {
        assert!(vacuum_potentials(x0).unwrap().vg < 0.0, "x0 = {x0}");
    }
}

#[test]
fn radiation_reaction_large_distance_envelope() {
    for m in [200.0, 301.0, 400.0] {
        let x = m * PI;
        let r = v0rr(x).unwrap() / (x.cos() / (2.0 * x));
        assert!((r - 1.0).abs() < 2e-2);
    }
}
