//! Adaptive quadrature for the potentials: semi-infinite ranges with
//! exponential or Bose damping, principal values through a simple pole,
//! Abel-regulated oscillatory integrals and the real-axis contour identity.

mod abel;
mod adaptive;
mod apm;
mod pv;
mod rule;

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use abel::{abel_limit, regulated_limit, AbelLimit, AbelOptions, Damping};
pub use apm::{apm_direct, apm_identity, ApmOptions, ApmSign};
pub use pv::{adaptive_semi_infinite, integrate, pv_integrate};

/// Values the engine can integrate: `f64` and `Complex64`.
pub trait Scalar:
    Copy + Debug + Send + Sync + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> + AddAssign
{
    fn zero() -> Self;
    fn modulus(self) -> f64;
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
}

/// Damping weight multiplied into the integrand by the engine.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Regulator {
    #[default]
    None,
    /// `e^{−εk}`.
    Exponential(f64),
    /// Bose factor `1/(e^{kλ} − 1)` for thermal length `λ`.
    Bose(f64),
    /// `e^{−ε²(k − onset)²}` beyond `onset`, one before it.
    Gaussian { rate: f64, onset: f64 },
}

impl Regulator {
    pub fn weight(&self, k: f64) -> f64 {
        match *self {
            Regulator::None => 1.0,
            Regulator::Exponential(eps) => (-eps * k).exp(),
            Regulator::Bose(lambda) => bose_weight(k * lambda),
            Regulator::Gaussian { rate, onset } => {
                let t = rate * (k - onset).max(0.0);
                (-t * t).exp()
            }
        }
    }
}

/// `1/(e^x − 1)` without overflow for large `x`.
pub(crate) fn bose_weight(x: f64) -> f64 {
    if x > 1.0 {
        let e = (-x).exp();
        e / (1.0 - e)
    } else {
        1.0 / x.exp_m1()
    }
}

/// Tolerances, pole and damping for one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Location `c` of a simple pole: the integrand is taken to be `h(k)/(k − c)`.
    pub pole: Option<f64>,
    /// Half-width of the symmetric window folded around the pole.
    pub pole_window: Option<f64>,
    pub regulator: Regulator,
    /// Bisection budget.
    pub max_subdivisions: usize,
    /// Oscillation period of the integrand; initial panels are half a period wide.
    pub period: Option<f64>,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            pole: None,
            pole_window: None,
            regulator: Regulator::None,
            max_subdivisions: 2000,
            period: None,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tolerances(mut self, rel_tol: f64, abs_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_pole(mut self, pole: f64) -> Self {
        self.pole = Some(pole);
        self
    }

    pub fn with_pole_window(mut self, delta: f64) -> Self {
        self.pole_window = Some(delta);
        self
    }

    pub fn with_regulator(mut self, regulator: Regulator) -> Self {
        self.regulator = regulator;
        self
    }

    pub fn with_max_subdivisions(mut self, n: usize) -> Self {
        self.max_subdivisions = n;
        self
    }

    pub fn with_period(mut self, period: f64) -> Self {
        self.period = Some(period);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::InvalidInput(format!(
                "tolerances must be positive, got rel {} abs {}",
                self.rel_tol, self.abs_tol
            )));
        }
        match self.regulator {
            Regulator::Exponential(r) | Regulator::Bose(r) | Regulator::Gaussian { rate: r, .. }
                if !(r > 0.0 && r.is_finite()) =>
            {
                return Err(Error::InvalidInput(format!("regulator rate must be positive, got {r}")));
            }
            Regulator::Gaussian { onset, .. } if !onset.is_finite() => {
                return Err(Error::InvalidInput(format!("regulator onset must be finite, got {onset}")));
            }
            _ => {}
        }
        if let Some(p) = self.period {
            if !(p > 0.0 && p.is_finite()) {
                return Err(Error::InvalidInput(format!("period must be positive, got {p}")));
            }
        }
        if let Some(d) = self.pole_window {
            if !(d > 0.0) {
                return Err(Error::InvalidInput(format!("pole window must be positive, got {d}")));
            }
        }
        Ok(())
    }
}

/// Value and error estimate of one integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralResult<T = f64> {
    pub value: T,
    pub err_estimate: f64,
    pub subdivisions_used: usize,
    pub converged: bool,
    /// Refinement stopped because the remaining error is rounding noise
    /// (`50 ε ∫|f|` per panel); `err_estimate` is then the attainable accuracy.
    pub roundoff_limited: bool,
}

impl<T: Scalar> IntegralResult<T> {
    /// Converged, or as accurate as floating point allows.
    pub fn usable(&self) -> bool {
        self.converged || self.roundoff_limited
    }

    /// The value when [`usable`](Self::usable), otherwise a non-convergence
    /// error carrying the achieved estimate.
    pub fn into_result(self) -> Result<T> {
        if self.usable() {
            Ok(self.value)
        } else {
            Err(Error::NonConvergence {
                value: self.value.modulus(),
                err_estimate: self.err_estimate,
                subdivisions: self.subdivisions_used,
            })
        }
    }
}
