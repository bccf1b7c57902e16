//! Real-axis contour identity for principal-value integrals of the form
//!
//! ```text
//! 𝒜^{(±)} = PV ∫₀^∞ f(k) [1/(k + k₀) ∓ 1/(k − k₀)] e^{ikλ} dk
//!         = ∓iπ f(k₀) e^{ik₀λ} + ∫₀^∞ [f(k) e^{ikλ} ∓ f(−k) e^{−ikλ}]/(k + k₀) dk,
//! ```
//!
//! valid when `|f(k)| e^{−λ|Im k|} → 0` in the complex plane. The second
//! form has no pole; both are evaluated here, the oscillatory tails being
//! summed in the Abel sense.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{regulated_limit, AbelOptions, Damping, QuadratureSpec};
use crate::error::{require_positive, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApmSign {
    Plus,
    Minus,
}

impl ApmSign {
    fn value(self) -> f64 {
        match self {
            ApmSign::Plus => 1.0,
            ApmSign::Minus => -1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApmOptions {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub abel_levels: usize,
    /// Largest regulator and ratio of successive ones; see [`AbelOptions`].
    pub abel_first: f64,
    pub abel_ratio: f64,
    pub damping: Damping,
    /// Slowest oscillation frequency of the integrand; defaults to λ. An `f`
    /// carrying its own phase `e^{±iks}` should set `λ − s`.
    pub abel_scale: Option<f64>,
    pub max_subdivisions: usize,
}

impl Default for ApmOptions {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            abs_tol: 1e-15,
            abel_levels: 7,
            abel_first: 0.0625,
            abel_ratio: 0.7,
            damping: Damping::Gaussian { onset: 0.0 },
            abel_scale: None,
            max_subdivisions: 20_000,
        }
    }
}

impl ApmOptions {
    fn spec(&self, lambda: f64) -> QuadratureSpec {
        QuadratureSpec::default()
            .with_tolerances(self.rel_tol, self.abs_tol)
            .with_max_subdivisions(self.max_subdivisions)
            .with_period(2.0 * PI / lambda)
    }

    fn abel(&self, lambda: f64) -> AbelOptions {
        AbelOptions::new(self.abel_scale.unwrap_or(lambda)).with_levels(self.abel_levels)
            .with_sequence(self.abel_first, self.abel_ratio)
            .with_damping(self.damping)
    }
}

/// Probes `|f(x ± iy)| e^{−λy}` at `y = Y, 2Y` with `Y = 50/λ`; the product
/// must not grow.
fn check_decay<F: Fn(Complex64) -> Complex64>(f: &F, lambda: f64, k0: f64) -> Result<()> {
    let y = 50.0 / lambda;
    for x in [0.0, k0, -k0] {
        for side in [1.0, -1.0] {
            let probe = |t: f64| f(Complex64::new(x, side * t)).norm() * (-lambda * t).exp();
            let (near, far) = (probe(y), probe(2.0 * y));
            if !near.is_finite() || !far.is_finite() || far > near {
                return Err(Error::DecayCondition(format!(
                    "|f(k)| e^(-lambda |Im k|) grows along Re k = {x}: {near:e} at |Im k| = {y}, {far:e} at {}",
                    2.0 * y
                )));
            }
        }
    }
    Ok(())
}

/// `𝒜^{(±)}` through the pole-free form of the identity.
///
/// ```
/// use atomwall::quadrature::{apm_direct, apm_identity, ApmOptions, ApmSign};
/// use num_complex::Complex64;
///
/// let f = |k: Complex64| k * k;
/// let opts = ApmOptions::default();
/// let a = apm_identity(f, 1.0, 1.0, ApmSign::Plus, &opts).unwrap();
/// let b = apm_direct(f, 1.0, 1.0, ApmSign::Plus, &opts).unwrap();
/// assert!((a - b).norm() < 1e-7 * a.norm());
/// ```
pub fn apm_identity<F: Fn(Complex64) -> Complex64>(
    f: F,
    lambda: f64,
    k0: f64,
    sign: ApmSign,
    opts: &ApmOptions,
) -> Result<Complex64> {
    require_positive("lambda", lambda)?;
    require_positive("k0", k0)?;
    check_decay(&f, lambda, k0)?;
    let s = sign.value();
    let phase = |k: f64| Complex64::from_polar(1.0, k * lambda);

    let pole_term = Complex64::new(0.0, -s * PI) * f(Complex64::new(k0, 0.0)) * phase(k0);
    let remainder = |k: f64| {
        let plus = f(Complex64::new(k, 0.0)) * phase(k);
        let minus = f(Complex64::new(-k, 0.0)) * phase(-k);
        (plus - minus * s) / (k + k0)
    };
    let integral = regulated_limit(remainder, 0.0, &opts.spec(lambda), &opts.abel(lambda))?;
    Ok(pole_term + integral.value)
}

/// `𝒜^{(±)}` by direct principal-value quadrature through the pole at `k₀`.
pub fn apm_direct<F: Fn(Complex64) -> Complex64>(
    f: F,
    lambda: f64,
    k0: f64,
    sign: ApmSign,
    opts: &ApmOptions,
) -> Result<Complex64> {
    require_positive("lambda", lambda)?;
    require_positive("k0", k0)?;
    let s = sign.value();
    // f e^{ikλ}[1/(k+k₀) ∓ 1/(k−k₀)] = h(k)/(k − k₀)
    let h = |k: f64| {
        let factor = (k - k0) / (k + k0) - s;
        f(Complex64::new(k, 0.0)) * Complex64::from_polar(factor, k * lambda)
    };
    let spec = opts.spec(lambda).with_pole(k0);
    let integral = regulated_limit(h, 0.0, &spec, &opts.abel(lambda))?;
    Ok(integral.value)
}
