//! Zero-temperature potentials in units of `ħcα₀k₀⁴`, as functions of the
//! reduced distance `x₀ = 2k₀z`.
//!
//! The radiation-reaction part is state independent; the field-fluctuation
//! part enters the ground and excited state with opposite signs, so
//! `V_g = V_rr + V_fr` and `V_e = V_rr − V_fr = 2V_rr − V_g`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Result};
use crate::quadrature::{regulated_limit, AbelLimit, AbelOptions, Damping, QuadratureSpec};
use crate::specfun::{geom_g, vacuum_kernels};

/// Vacuum potentials and decay-rate ratio at one distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VacuumResult {
    pub x0: f64,
    pub v0rr: f64,
    pub v0fr: f64,
    pub vg: f64,
    pub ve: f64,
    /// Spontaneous emission rate relative to free space.
    pub gamma_ratio: f64,
}

fn cube(x: f64) -> f64 {
    x * x * x
}

/// Radiation-reaction potential `ℋ₀ʳʳ(x₀)/(π x₀³)`.
pub fn v0rr(x0: f64) -> Result<f64> {
    require_positive("x0", x0)?;
    Ok(vacuum_kernels(x0).h0rr / (PI * cube(x0)))
}

/// Field-fluctuation potential `[ℋ₀(x₀) − ℋ₀ʳʳ(x₀)]/(π x₀³)`.
pub fn v0fr(x0: f64) -> Result<f64> {
    require_positive("x0", x0)?;
    Ok(vacuum_kernels(x0).h0fr / (PI * cube(x0)))
}

/// Ground-state potential `ℋ₀(x₀)/(π x₀³)`.
pub fn vg(x0: f64) -> Result<f64> {
    require_positive("x0", x0)?;
    Ok(vacuum_kernels(x0).h0 / (PI * cube(x0)))
}

/// Excited-state potential `2V_rr − V_g`.
pub fn ve(x0: f64) -> Result<f64> {
    Ok(vacuum_potentials(x0)?.ve)
}

/// All vacuum quantities at `x₀`.
///
/// `vg` is computed from `ℋ₀` directly rather than as `v0rr + v0fr`: at large
/// `x₀` the two parts are oscillating terms of order `1/x₀` whose sum is of
/// order `1/x₀⁴`.
///
/// ```
/// let r = atomwall::vacuum::vacuum_potentials(1e-3).unwrap();
/// assert!((r.vg * 1e-9 + 1.0).abs() < 1e-2);
/// assert!((r.vg + r.ve - 2.0 * r.v0rr).abs() < 1e-13 * r.v0rr.abs());
/// ```
pub fn vacuum_potentials(x0: f64) -> Result<VacuumResult> {
    require_positive("x0", x0)?;
    let k = vacuum_kernels(x0);
    let scale = 1.0 / (PI * cube(x0));
    let v0rr = k.h0rr * scale;
    let vg = k.h0 * scale;
    Ok(VacuumResult {
        x0,
        v0rr,
        v0fr: k.h0fr * scale,
        vg,
        ve: 2.0 * v0rr - vg,
        gamma_ratio: 1.0 - geom_g(x0),
    })
}

/// Short-distance (London–van der Waals) limit `−1/x₀³`.
pub fn asymptotic_lvdw(x0: f64) -> f64 {
    -1.0 / cube(x0)
}

/// Retarded (Casimir–Polder) limit `−6/(π x₀⁴)`.
pub fn asymptotic_cp(x0: f64) -> f64 {
    -6.0 / (PI * x0.powi(4))
}

/// Large-distance excited-state form `6/(π x₀⁴) + cos(x₀)/x₀`.
pub fn asymptotic_resonant(x0: f64) -> f64 {
    6.0 / (PI * x0.powi(4)) + x0.cos() / x0
}

/// `Γ(z)/Γ_free = 1 − G(x₀)`.
pub fn spontaneous_rate_ratio(x0: f64) -> Result<f64> {
    require_positive("x0", x0)?;
    Ok(1.0 - geom_g(x0))
}

/// Energy-change rate of the ground state; the ground state cannot emit,
/// so this is identically zero.
pub fn ground_energy_rate() -> f64 {
    0.0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extremum {
    /// Near `x₀ = 2πn`.
    Maximum,
    /// Near `x₀ = 2π(n − ½)`.
    Minimum,
}

/// Locates the `n`-th maximum or minimum of the excited-state potential by
/// golden-section search on a bracket of width π around its nominal position.
///
/// ```
/// use atomwall::vacuum::{excited_state_extremum, Extremum};
/// let x = excited_state_extremum(5, Extremum::Maximum).unwrap();
/// assert!((x - 10.0 * std::f64::consts::PI).abs() < 0.2);
/// ```
pub fn excited_state_extremum(n: u32, kind: Extremum) -> Result<f64> {
    if n == 0 {
        return Err(crate::Error::InvalidInput("extremum index starts at 1".into()));
    }
    let nominal = match kind {
        Extremum::Maximum => 2.0 * PI * n as f64,
        Extremum::Minimum => 2.0 * PI * (n as f64 - 0.5),
    };
    let sign = match kind {
        Extremum::Maximum => -1.0,
        Extremum::Minimum => 1.0,
    };
    let objective = |x: f64| sign * vacuum_potentials(x).map(|r| r.ve).unwrap_or(f64::NAN);
    Ok(golden_section_min(objective, nominal - 0.5 * PI, nominal + 0.5 * PI, 1e-10))
}

fn golden_section_min(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let ratio = 0.5 * (5f64.sqrt() - 1.0);
    let mut c = b - ratio * (b - a);
    let mut d = a + ratio * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - ratio * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + ratio * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}

fn frequency_spec(x0: f64) -> QuadratureSpec {
    QuadratureSpec::default()
        .with_tolerances(1e-12, 1e-15)
        .with_pole(1.0)
        .with_period(2.0 * PI / x0)
        .with_max_subdivisions(20_000)
}

/// Damping starts one period past the pole at `u = 1`.
fn frequency_abel(x0: f64) -> AbelOptions {
    AbelOptions::new(x0)
        .with_damping(Damping::Gaussian { onset: 1.0 + 2.0 * PI / x0 })
        .with_sequence(0.0625, 0.7)
}

/// Radiation-reaction potential from its frequency integral
/// `(1/π) PV∫₀^∞ u⁴ G(u x₀)/(u² − 1) du`, summed in the Abel sense.
/// An independent check of [`v0rr`].
pub fn v0rr_quadrature(x0: f64) -> Result<AbelLimit<f64>> {
    require_positive("x0", x0)?;
    let h = |u: f64| u.powi(4) * geom_g(u * x0) / (PI * (u + 1.0));
    regulated_limit(h, 0.0, &frequency_spec(x0), &frequency_abel(x0))
}

/// Field-fluctuation potential from `(1/π) PV∫₀^∞ u³ G(u x₀)/(1 − u²) du`.
/// An independent check of [`v0fr`].
pub fn v0fr_quadrature(x0: f64) -> Result<AbelLimit<f64>> {
    require_positive("x0", x0)?;
    let h = |u: f64| -u.powi(3) * geom_g(u * x0) / (PI * (u + 1.0));
    regulated_limit(h, 0.0, &frequency_spec(x0), &frequency_abel(x0))
}

/// Ground-state potential as the sum of the two frequency integrals.
pub fn vg_quadrature(x0: f64) -> Result<f64> {
    Ok(v0rr_quadrature(x0)?.value + v0fr_quadrature(x0)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn rr_examples() {
        assert!(rel(v0rr(1e-3).unwrap(), -1e9) < 1e-4);
        let x = 2.0 * PI;
        let expected = -PI * (1.0 - 2.0 * PI * PI) / (PI * x.powi(3));
        assert!(rel(v0rr(x).unwrap(), expected) < 1e-14);
        for m in [200.0, 301.0, 400.0] {
            let x = m * PI;
            assert!(rel(v0rr(x).unwrap(), x.cos() / (2.0 * x)) < 2e-2);
        }
    }

    #[test]
    fn fr_examples() {
        let r = vacuum_potentials(1e-3).unwrap();
        assert!((r.v0fr / r.v0rr).abs() < 1e-2);
        let r = vacuum_potentials(1e3).unwrap();
        assert!(rel(r.vg, asymptotic_cp(1e3)) < 5e-3);
        for x in [0.01, 0.7, 5.0, 44.0] {
            let r = vacuum_potentials(x).unwrap();
            assert!((r.vg - (r.v0rr + r.v0fr)).abs() < 1e-13 * r.v0rr.abs().max(r.vg.abs()));
        }
    }

    #[test]
    fn limits_of_both_states() {
        let r = vacuum_potentials(1e-3).unwrap();
        assert!(rel(r.vg, asymptotic_lvdw(1e-3)) < 1e-2);
        assert!(rel(r.ve, asymptotic_lvdw(1e-3)) < 1e-2);
        let r = vacuum_potentials(1e3).unwrap();
        assert!(rel(r.vg, asymptotic_cp(1e3)) < 2e-3);
        let amplitude = 1e-3;
        assert!((r.ve - asymptotic_resonant(1e3)).abs() < 1e-2 * amplitude);
    }

    #[test]
    fn asymptotic_forms() {
        assert_eq!(asymptotic_lvdw(2.0), -0.125);
        assert_eq!(asymptotic_lvdw(1.0), -1.0);
        assert!((asymptotic_cp(1.0) + 6.0 / PI).abs() < 1e-15);
        let x = 7.3;
        assert!(rel(asymptotic_cp(x) / asymptotic_lvdw(x), 6.0 / PI / x) < 1e-15);
    }

    #[test]
    fn emission_ratio() {
        assert!((spontaneous_rate_ratio(1e-4).unwrap() - 2.0 / 3.0).abs() < 1e-6);
        assert!((spontaneous_rate_ratio(1e3).unwrap() - 1.0).abs() < 1e-2);
        assert!((spontaneous_rate_ratio(20.0 * PI).unwrap() - 1.0).abs() < 0.02);
        assert!(spontaneous_rate_ratio(0.0).is_err());
        assert_eq!(ground_energy_rate(), 0.0);
    }

    #[test]
    fn extrema_near_standing_wave_nodes() {
        for n in 5..=8 {
            let max = excited_state_extremum(n, Extremum::Maximum).unwrap();
            let min = excited_state_extremum(n, Extremum::Minimum).unwrap();
            assert!((max - 2.0 * PI * n as f64).abs() < 2.0 * PI / 40.0, "n={n} max {max}");
            assert!((min - 2.0 * PI * (n as f64 - 0.5)).abs() < 2.0 * PI / 40.0, "n={n} min {min}");
        }
        assert!(excited_state_extremum(0, Extremum::Maximum).is_err());
    }

    #[test]
    fn domain_errors() {
        assert!(v0rr(0.0).is_err());
        assert!(v0fr(-1.0).is_err());
        assert!(vacuum_potentials(f64::NAN).is_err());
    }

    #[test]
    fn frequency_integrals_reproduce_closed_forms() {
        for x0 in [1.0, 3.0] {
            let r = vacuum_potentials(x0).unwrap();
            let rr = v0rr_quadrature(x0).unwrap().value;
            let fr = v0fr_quadrature(x0).unwrap().value;
            assert!(rel(rr, r.v0rr) < 1e-8, "rr at {x0}: {rr} vs {}", r.v0rr);
            assert!(rel(fr, r.v0fr) < 1e-8, "fr at {x0}: {fr} vs {}", r.v0fr);
        }
    }
}
