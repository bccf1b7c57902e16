//! Abel limits: integrals made convergent by `e^{−εk}` and extrapolated to ε → 0.
//!
//! For integrands built from `e^{±iωk}` times powers of `k` the regulated
//! integral is analytic in ε at the origin, so polynomial (Richardson)
//! extrapolation on a geometric sequence `ε_j = ε₀ rʲ` converges with error
//! of order `Π_j ε_j/ω`. Small ε costs precision instead: a regulated
//! `kⁿ` integrand cancels down from a size of order `ε^{−n−1}`.

use super::{pv_integrate, IntegralResult, QuadratureSpec, Regulator, Scalar};
use crate::error::{Error, Result};

/// Damping used for the regulated integrals.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Damping {
    /// `e^{−εk}`; the regulated value is a power series in ε.
    #[default]
    Exponential,
    /// `e^{−ε²(k − onset)²}` past `onset`; the regulated value has an
    /// asymptotic series in ε², so larger ε give the same accuracy and the
    /// cancellation stays mild. Features left of `onset`, such as a pole, are
    /// not damped at all.
    Gaussian { onset: f64 },
}

impl Damping {
    fn regulator(self, eps: f64) -> Regulator {
        match self {
            Damping::Exponential => Regulator::Exponential(eps),
            Damping::Gaussian { onset } => Regulator::Gaussian { rate: eps, onset },
        }
    }

    fn order(self) -> i32 {
        match self {
            Damping::Exponential => 1,
            Damping::Gaussian { .. } => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AbelOptions {
    /// Slowest oscillation frequency ω of the integrand.
    pub scale: f64,
    /// Number of ε values.
    pub levels: usize,
    /// Largest ε as a fraction of ω.
    pub first: f64,
    /// Ratio of successive ε values, in (0, 1).
    pub ratio: f64,
    pub damping: Damping,
}

impl AbelOptions {
    pub fn new(scale: f64) -> Self {
        Self {
            scale,
            levels: 7,
            first: 0.25,
            ratio: 0.5,
            damping: Damping::Exponential,
        }
    }

    pub fn with_damping(mut self, damping: Damping) -> Self {
        self.damping = damping;
        self
    }

    pub fn with_levels(mut self, levels: usize) -> Self {
        self.levels = levels;
        self
    }

    pub fn with_sequence(mut self, first: f64, ratio: f64) -> Self {
        self.first = first;
        self.ratio = ratio;
        self
    }

    pub fn epsilons(&self) -> Vec<f64> {
        (0..self.levels)
            .map(|j| self.first * self.scale * self.ratio.powi(j as i32))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AbelLimit<T> {
    pub value: T,
    pub err_estimate: f64,
    /// Regulated values, one per ε, largest ε first.
    pub regulated: Vec<(f64, T)>,
}

/// Richardson-extrapolates `g(ε)` to ε → 0 over the geometric sequence of
/// `opts`. The error estimate combines the last diagonal step with the
/// propagated integration errors.
pub fn abel_limit<T: Scalar>(opts: &AbelOptions, g: impl Fn(f64) -> Result<IntegralResult<T>>) -> Result<AbelLimit<T>> {
    let sequence_ok = opts.first > 0.0 && opts.first.is_finite() && opts.ratio > 0.0 && opts.ratio < 1.0;
    if !(opts.scale > 0.0 && opts.scale.is_finite()) || opts.levels < 2 || !sequence_ok {
        return Err(Error::InvalidInput(format!(
            "Abel extrapolation needs a positive scale and at least two levels, got {opts:?}"
        )));
    }
    let mut regulated = Vec::with_capacity(opts.levels);
    let mut integration_err: f64 = 0.0;
    for eps in opts.epsilons() {
        let r = g(eps)?;
        if !r.usable() {
            return Err(Error::NonConvergence {
                value: r.value.modulus(),
                err_estimate: r.err_estimate,
                subdivisions: r.subdivisions_used,
            });
        }
        integration_err = integration_err.max(r.err_estimate);
        regulated.push((eps, r.value));
    }

    // Tableau row by row; `row[j]` eliminates the first j powers of ε.
    let mut prev: Vec<T> = Vec::new();
    let mut diag = regulated[0].1;
    let mut step = 0.0;
    for (i, &(_, v)) in regulated.iter().enumerate() {
        let mut row = vec![v];
        for j in 1..=i {
            let factor = opts.ratio.powi(-(j as i32) * opts.damping.order());
            let next = row[j - 1] + (row[j - 1] - prev[j - 1]) * (1.0 / (factor - 1.0));
            row.push(next);
        }
        if i > 0 {
            step = (row[i] - diag).modulus();
            diag = row[i];
        }
        prev = row;
    }
    // The tableau amplifies input noise by less than ten for ratio-1/2 sequences.
    Ok(AbelLimit {
        value: diag,
        err_estimate: step + 10.0 * integration_err,
        regulated,
    })
}

/// Abel limit of `PV ∫_a^∞ h(k) w(εk)/(k − c) dk` (or the plain integral when
/// `spec` has no pole). Any regulator already in `spec` is replaced.
///
/// ```
/// use atomwall::quadrature::{regulated_limit, AbelOptions, QuadratureSpec};
///
/// let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-15).with_period(2.0 * std::f64::consts::PI);
/// let sinc = |k: f64| if k == 0.0 { 1.0 } else { k.sin() / k };
/// let r = regulated_limit(sinc, 0.0, &spec, &AbelOptions::new(1.0)).unwrap();
/// assert!((r.value - std::f64::consts::FRAC_PI_2).abs() < 1e-6);
/// ```
pub fn regulated_limit<T: Scalar, F: Fn(f64) -> T>(
    h: F,
    a: f64,
    spec: &QuadratureSpec,
    opts: &AbelOptions,
) -> Result<AbelLimit<T>> {
    abel_limit(opts, |eps| {
        let s = spec.with_regulator(opts.damping.regulator(eps));
        pv_integrate(&h, a, f64::INFINITY, &s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    #[test]
    fn exact_polynomial_is_recovered() {
        let opts = AbelOptions::new(1.0).with_levels(4);
        let r = abel_limit(&opts, |eps| {
            Ok(IntegralResult {
                value: 2.0 - 3.0 * eps + eps * eps * eps,
                err_estimate: 0.0,
                subdivisions_used: 0,
                converged: true,
                roundoff_limited: false,
            })
        })
        .unwrap();
        assert!((r.value - 2.0).abs() < 1e-14);
    }

    #[test]
    fn arctangent_limit() {
        // ∫₀^∞ sin(k)/k e^{−εk} dk = atan(1/ε)
        let opts = AbelOptions::new(1.0);
        let r = abel_limit(&opts, |eps| {
            Ok(IntegralResult {
                value: (1.0 / eps).atan(),
                err_estimate: 0.0,
                subdivisions_used: 0,
                converged: true,
                roundoff_limited: false,
            })
        })
        .unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-9, "{}", r.value - FRAC_PI_2);
        assert!((r.value - FRAC_PI_2).abs() <= r.err_estimate);
    }

    #[test]
    fn sine_integral_to_infinity() {
        let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-15).with_period(2.0 * PI);
        let sinc = |k: f64| if k == 0.0 { 1.0 } else { k.sin() / k };
        let r = regulated_limit(sinc, 0.0, &spec, &AbelOptions::new(1.0)).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-8, "{}", r.value - FRAC_PI_2);
    }

    #[test]
    fn gaussian_damping_sine_integral() {
        let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-15).with_period(2.0 * PI);
        let sinc = |k: f64| if k == 0.0 { 1.0 } else { k.sin() / k };
        let opts = AbelOptions::new(1.0).with_damping(Damping::Gaussian { onset: 0.0 }).with_sequence(0.0625, 0.7);
        let r = regulated_limit(sinc, 0.0, &spec, &opts).unwrap();
        assert!((r.value - FRAC_PI_2).abs() < 1e-10, "{}", r.value - FRAC_PI_2);
    }

    #[test]
    fn gaussian_damping_tames_cubic_growth() {
        // Abel value of ∫₀^∞ k³ cos k dk is Re 3!/(−i)⁴ = 6.
        let spec = QuadratureSpec::default().with_tolerances(1e-12, 1e-15).with_period(2.0 * PI);
        let opts = AbelOptions::new(1.0).with_damping(Damping::Gaussian { onset: 0.0 }).with_sequence(0.0625, 0.7);
        let r = regulated_limit(|k: f64| k.powi(3) * k.cos(), 0.0, &spec, &opts).unwrap();
        assert!((r.value - 6.0).abs() < 1e-7, "{}", r.value - 6.0);
    }

    #[test]
    fn non_convergence_propagates() {
        let opts = AbelOptions::new(1.0);
        let r: Result<AbelLimit<f64>> = abel_limit(&opts, |_| {
            Ok(IntegralResult {
                value: 1.0,
                err_estimate: 1.0,
                subdivisions_used: 5,
                converged: false,
                roundoff_limited: false,
            })
        });
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
        assert!(abel_limit(&AbelOptions::new(0.0), |_| Ok(IntegralResult {
            value: 0.0,
            err_estimate: 0.0,
            subdivisions_used: 0,
            converged: true,
            roundoff_limited: false,
        }))
        .is_err());
    }
}
