//! Physical constants (CODATA 2018, SI) and the mathematical constants the
//! special functions need. Formulas never hard-code rounded values; they
//! read them from here.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Speed of light in vacuum, m/s (exact).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Boltzmann constant, J/K (exact).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Elementary charge expressed as the joule value of one electron volt (exact).
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

/// Vacuum permittivity, F/m.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Euler–Mascheroni constant to 30 significant digits.
#[allow(clippy::excessive_precision)]
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_606_512_090_082;

pub const MICROMETRE: f64 = 1e-6;
pub const ANGSTROM: f64 = 1e-10;

/// Converts an SI polarizability (C·m²/V) to the polarizability volume
/// (m³) used throughout the crate: `α_vol = α_SI / (4π ε₀)`.
pub fn polarizability_volume_from_si(alpha_si: f64) -> f64 {
    alpha_si / (4.0 * std::f64::consts::PI * VACUUM_PERMITTIVITY)
}
