//! Unit conventions and the value types shared by every other module.
//!
//! All potentials are computed in a dimensionless form. Distances enter
//! through `x0 = 2 k0 z`, temperature through `theta = 2 kB T / (ħ ω0)`,
//! and energies are expressed in units of `ħ c α0 k0⁴`. Physical units only
//! appear when an [`AtomSpec`] is built from laboratory inputs and when a
//! normalized value is converted back with [`denormalize`].
//!
//! The polarizability is a polarizability *volume* (Gaussian convention).
//! An SI polarizability converts through
//! [`polarizability_volume_from_si`](crate::constants::polarizability_volume_from_si).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::{
    ANGSTROM, BOLTZMANN, ELECTRON_VOLT, HBAR, MICROMETRE, SPEED_OF_LIGHT,
};
use crate::error::{require_positive, Error, Result};

/// A two-level atom with an isotropic static polarizability.
///
/// Lengths are stored in metres, the polarizability volume in m³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AtomSpec {
    k0: f64,
    omega0: f64,
    alpha0: f64,
    lambda0: f64,
}

impl AtomSpec {
    /// Builds an atom from its transition wavenumber (1/m) and static
    /// polarizability volume (m³).
    pub fn new(k0: f64, alpha0: f64) -> Result<Self> {
        require_positive("transition wavenumber k0", k0)?;
        require_positive("static polarizability alpha0", alpha0)?;
        Ok(Self {
            k0,
            omega0: SPEED_OF_LIGHT * k0,
            alpha0,
            lambda0: 2.0 * PI / k0,
        })
    }

    /// Builds an atom from its transition wavelength (m).
    pub fn from_wavelength(lambda0: f64, alpha0: f64) -> Result<Self> {
        require_positive("transition wavelength lambda0", lambda0)?;
        Self::new(2.0 * PI / lambda0, alpha0)
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn omega0(&self) -> f64 {
        self.omega0
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    /// The energy unit `ħ c α0 k0⁴` of every normalized potential.
    pub fn energy_unit(&self) -> Energy {
        Energy::from_joules(HBAR * SPEED_OF_LIGHT * self.alpha0 * self.k0.powi(4))
    }

    /// Free-space spontaneous emission rate `2 c α0 k0⁴`, in 1/s.
    pub fn free_space_rate(&self) -> f64 {
        2.0 * SPEED_OF_LIGHT * self.alpha0 * self.k0.powi(4)
    }

    /// Atom–wall distance (m) corresponding to `x0 = 2 k0 z`.
    pub fn distance(&self, x0: f64) -> f64 {
        x0 / (2.0 * self.k0)
    }

    /// `x0 = 2 k0 z` for a distance in metres.
    pub fn reduced_distance(&self, z: f64) -> f64 {
        2.0 * self.k0 * z
    }

    /// Normalized temperature `2 kB T / (ħ ω0)`.
    pub fn reduced_temperature(&self, temperature: f64) -> f64 {
        2.0 * BOLTZMANN * temperature / (HBAR * self.omega0)
    }
}

/// Thermal length `λ_T = ħ c / (kB T)` in metres.
pub fn thermal_length(temperature: f64) -> Result<f64> {
    require_positive("temperature", temperature)?;
    Ok(HBAR * SPEED_OF_LIGHT / (BOLTZMANN * temperature))
}

/// A dimensionless evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedPoint {
    /// `2 k0 z`.
    pub x0: f64,
    /// `2 kB T / (ħ ω0)`; zero for the vacuum.
    pub theta: f64,
}

impl ReducedPoint {
    pub fn new(x0: f64, theta: f64) -> Result<Self> {
        require_positive("reduced distance x0", x0)?;
        if !(theta >= 0.0 && theta.is_finite()) {
            return Err(Error::Domain(format!(
                "reduced temperature theta must be finite and non-negative, got {theta}"
            )));
        }
        Ok(Self { x0, theta })
    }

    pub fn vacuum(x0: f64) -> Result<Self> {
        Self::new(x0, 0.0)
    }

    /// `k0 λ_T = 2 / theta` (infinite in the vacuum).
    pub fn k0_lambda_t(&self) -> f64 {
        2.0 / self.theta
    }

    /// `η = λ_T / (2 z)`, defined only at finite temperature.
    pub fn eta(&self) -> Option<f64> {
        (self.theta > 0.0).then(|| 2.0 / (self.x0 * self.theta))
    }

    /// `z / λ_T`, zero in the vacuum.
    pub fn z_over_lambda_t(&self) -> f64 {
        self.x0 * self.theta / 4.0
    }
}

/// Laboratory inputs converted to the dimensionless description.
///
/// `lambda0_um` is the transition wavelength in μm, `alpha0_a3` the static
/// polarizability volume in Å³, `z_um` the atom–wall distance in μm and
/// `temperature_k` the field temperature in kelvin (zero for the vacuum).
pub fn from_physical(
    lambda0_um: f64,
    alpha0_a3: f64,
    z_um: f64,
    temperature_k: f64,
) -> Result<(AtomSpec, ReducedPoint)> {
    require_positive("distance z", z_um)?;
    if !(temperature_k >= 0.0 && temperature_k.is_finite()) {
        return Err(Error::Domain(format!(
            "temperature must be finite and non-negative, got {temperature_k}"
        )));
    }
    let atom = AtomSpec::from_wavelength(lambda0_um * MICROMETRE, alpha0_a3 * ANGSTROM.powi(3))?;
    let x0 = atom.reduced_distance(z_um * MICROMETRE);
    let theta = atom.reduced_temperature(temperature_k);
    Ok((atom, ReducedPoint::new(x0, theta)?))
}

/// An energy, stored in joules.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct Energy(f64);

impl Energy {
    pub fn from_joules(joules: f64) -> Self {
        Self(joules)
    }

    pub fn joules(self) -> f64 {
        self.0
    }

    pub fn electron_volts(self) -> f64 {
        self.0 / ELECTRON_VOLT
    }
}

/// Converts a potential in units of `ħ c α0 k0⁴` to an energy.
pub fn denormalize(v_norm: f64, atom: &AtomSpec) -> Energy {
    Energy::from_joules(v_norm * atom.energy_unit().joules())
}

/// Which atomic state a potential refers to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum State {
    Ground,
    Excited,
    /// Thermal mixture with the given ground-state occupation.
    ThermalAverage { p_ground: f64 },
}

/// A normalized potential split into its radiation-reaction (rr) part and
/// the vacuum and thermal field-fluctuation (fr) parts.
///
/// The rr part is common to both states; the fr parts enter the ground
/// state with a plus sign and the excited state with a minus sign.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialBreakdown {
    pub v_rr: f64,
    pub v_fr_vac: f64,
    pub v_thermal: f64,
    pub state: State,
}

impl PotentialBreakdown {
    pub fn new(v_rr: f64, v_fr_vac: f64, v_thermal: f64, state: State) -> Self {
        Self {
            v_rr,
            v_fr_vac,
            v_thermal,
            state,
        }
    }

    /// Same components, different state tag.
    pub fn with_state(self, state: State) -> Self {
        Self { state, ..self }
    }

    pub fn total(&self) -> f64 {
        let fr = self.v_fr_vac + self.v_thermal;
        match self.state {
            State::Ground => self.v_rr + fr,
            State::Excited => self.v_rr - fr,
            State::ThermalAverage { p_ground } => self.v_rr + (2.0 * p_ground - 1.0) * fr,
        }
    }
}
