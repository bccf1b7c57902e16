//! Thermal corrections for a field in equilibrium at temperature `T`.
//!
//! Everything is expressed through `x₀ = 2k₀z` and `θ = 2k_BT/(ħω₀)`, so
//! that `k₀λ_T = 2/θ` and `z/λ_T = x₀θ/4`. Energies are in `ħcα₀k₀⁴`.
//!
//! The thermal field only modifies the field-fluctuation part: the ground
//! state gains `V_T` and the excited state loses it, so their sum stays
//! `2V_rr`.

use std::f64::consts::PI;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::quadrature::{bose_weight, pv_integrate, IntegralResult, QuadratureSpec, Regulator};
use crate::specfun::geom_g;
use crate::vacuum::{vacuum_potentials, VacuumResult};

/// `1/(e^x − 1)` for `x = kλ_T > 0`, without overflow at large `x`.
pub fn bose_occupation(k_lambda_t: f64) -> Result<f64> {
    require_positive("k lambda_T", k_lambda_t)?;
    Ok(bose_weight(k_lambda_t))
}

fn cube(x: f64) -> f64 {
    x * x * x
}

fn check_point(x0: f64, theta: f64) -> Result<()> {
    require_positive("x0", x0)?;
    require_positive("theta", theta)
}

/// Thermal field-fluctuation term by principal-value quadrature,
///
/// `V_T = (2/π) PV∫₀^∞ u³ G(u x₀) / ((1 − u²)(e^{2u/θ} − 1)) du`,
///
/// with `u = k/k₀`. The pole at `u = 1` is folded over a window
/// `min(1/2, θ/2)` and the range is cut where the Bose factor drops
/// below `e^{−40}`.
///
/// ```
/// use atomwall::thermal::{lifshitz, v_t_quadrature};
/// use atomwall::vacuum::vg;
///
/// // k₀λ_T = 50 (θ = 0.04), z = 2λ_T (x₀ = 200)
/// let (x0, theta) = (200.0, 0.04);
/// let v_t = v_t_quadrature(x0, theta).unwrap().value;
/// let ratio = (vg(x0).unwrap() + v_t) / lifshitz(x0, theta);
/// assert!((ratio - 1.0).abs() < 1e-3);
/// ```
pub fn v_t_quadrature(x0: f64, theta: f64) -> Result<IntegralResult<f64>> {
    check_point(x0, theta)?;
    // (1 − u²)^{-1} = −[(u + 1)(u − 1)]^{-1}
    let h = |u: f64| -2.0 / PI * u * u * u * geom_g(u * x0) / (u + 1.0);
    let vg_scale = vacuum_potentials(x0)?.vg.abs();
    let mut spec = QuadratureSpec::default()
        .with_tolerances(1e-10, 1e-16 * vg_scale.max(1.0))
        .with_pole(1.0)
        .with_regulator(Regulator::Bose(2.0 / theta))
        .with_max_subdivisions(20_000);
    let cutoff = (25.0 * theta).max(1.0 + 20.0 * theta);
    if x0 * cutoff > 4.0 * PI {
        spec = spec.with_period(2.0 * PI / x0);
    }
    let r = pv_integrate(h, 0.0, f64::INFINITY, &spec)?;
    let achieved_ok = r.err_estimate <= (1e-8 * r.value.abs()).max(1e-14 * vg_scale.max(1.0));
    if r.usable() || achieved_ok {
        Ok(IntegralResult {
            converged: r.converged || achieved_ok,
            ..r
        })
    } else {
        Err(Error::NonConvergence {
            value: r.value,
            err_estimate: r.err_estimate,
            subdivisions: r.subdivisions_used,
        })
    }
}

/// Small-distance form `C(T) − (2π)⁵/315 · (z/λ_T)² /λ_T⁴` with
/// `C(T) = 2π³/(45 (k₀λ_T)⁴)`, valid for `z ≪ λ_T`.
pub fn v_t_smallz(x0: f64, theta: f64) -> f64 {
    let xi = 2.0 / theta;
    let c = 2.0 * PI.powi(3) / (45.0 * xi.powi(4));
    let z_k0 = 0.5 * x0;
    c - (2.0 * PI).powi(5) / 315.0 * z_k0 * z_k0 / xi.powi(6)
}

/// Lifshitz large-distance potential `−θ/x₀³` (that is `−k_BTα₀/4z³`).
pub fn lifshitz(x0: f64, theta: f64) -> f64 {
    -theta / cube(x0)
}

/// The three pieces of the high-temperature decomposition of `V_T`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeltaTerms {
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

impl DeltaTerms {
    pub fn sum(&self) -> f64 {
        self.d1 + self.d2 + self.d3
    }
}

/// `d1 = −θ/x₀³ − θ V_rr`, `d2 = −V_fr`, `d3 = V_rr [θ − coth(1/θ)]`.
pub fn delta_t_terms(x0: f64, theta: f64) -> Result<DeltaTerms> {
    check_point(x0, theta)?;
    let v = vacuum_potentials(x0)?;
    Ok(delta_terms_from(&v, theta))
}

fn coth(x: f64) -> f64 {
    1.0 / x.tanh()
}

fn delta_terms_from(v: &VacuumResult, theta: f64) -> DeltaTerms {
    DeltaTerms {
        d1: lifshitz(v.x0, theta) - theta * v.v0rr,
        d2: -v.v0fr,
        d3: v.v0rr * (theta - coth(1.0 / theta)),
    }
}

/// Even-index Bernoulli numbers `B₂, B₄, …` as exact rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliTable {
    b2n: Vec<Ratio<i128>>,
}

impl BernoulliTable {
    /// Largest supported `n`; beyond it the rationals overflow `i128`.
    pub const MAX_TERMS: usize = 20;

    /// `B₂ … B₂ₙ` from `Σ_{k=0}^{m} C(m+1, k) B_k = 0`.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > Self::MAX_TERMS {
            return Err(Error::InvalidInput(format!(
                "Bernoulli table size must be in 1..={}, got {n}",
                Self::MAX_TERMS
            )));
        }
        let top = 2 * n;
        let mut b: Vec<Ratio<i128>> = Vec::with_capacity(top + 1);
        b.push(Ratio::from_integer(1));
        for m in 1..=top {
            let mut acc = Ratio::from_integer(0);
            let mut binom: i128 = 1; // C(m+1, k)
            for (k, bk) in b.iter().enumerate() {
                acc += *bk * binom;
                binom = binom * (m as i128 + 1 - k as i128) / (k as i128 + 1);
            }
            b.push(-acc / (m as i128 + 1));
        }
        Ok(Self {
            b2n: (1..=n).map(|j| b[2 * j]).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.b2n.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b2n.is_empty()
    }

    /// `B₂ₙ` for `n ≥ 1`.
    pub fn b2n(&self, n: usize) -> Ratio<i128> {
        self.b2n[n - 1]
    }

    pub fn b2n_f64(&self, n: usize) -> f64 {
        let r = self.b2n(n);
        *r.numer() as f64 / *r.denom() as f64
    }
}

/// Partial sum of `d3 = −(2/ξ) V_rr Σ_{n≥1} B₂ₙ ξ^{2n}/(2n)!` with `ξ = k₀λ_T`.
/// The series converges for `ξ < 2π`; the closed form in [`delta_t_terms`] is
/// the production path.
pub fn delta3_bernoulli(x0: f64, theta: f64, terms: usize, table: &BernoulliTable) -> Result<f64> {
    check_point(x0, theta)?;
    if terms > table.len() {
        return Err(Error::InvalidInput(format!(
            "{terms} terms requested from a table of {}",
            table.len()
        )));
    }
    let xi = 2.0 / theta;
    let mut power_over_factorial = 1.0; // ξ^{2n}/(2n)!
    let mut sum = 0.0;
    for n in 1..=terms {
        power_over_factorial *= xi * xi / ((2 * n - 1) as f64 * (2 * n) as f64);
        sum += table.b2n_f64(n) * power_over_factorial;
    }
    Ok(-(2.0 / xi) * vacuum_potentials(x0)?.v0rr * sum)
}

/// Closed-form ground-state potential `−θ/x₀³ − 2V_rr/(e^{2/θ} − 1)`.
pub fn v_closed(x0: f64, theta: f64) -> Result<f64> {
    check_point(x0, theta)?;
    Ok(closed_from(&vacuum_potentials(x0)?, theta))
}

fn closed_from(v: &VacuumResult, theta: f64) -> f64 {
    lifshitz(v.x0, theta) - 2.0 * v.v0rr * bose_weight(2.0 / theta)
}

/// Ground-state occupation `1/(1 + e^{−2/θ})`; one at `θ = 0`.
pub fn p_ground(theta: f64) -> Result<f64> {
    if !(theta >= 0.0) {
        return Err(Error::Domain(format!("theta must be non-negative, got {theta}")));
    }
    if theta == 0.0 {
        return Ok(1.0);
    }
    Ok(1.0 / (1.0 + (-2.0 / theta).exp()))
}

/// Thermally averaged potential in closed form, `−θ tanh(1/θ)/x₀³`.
///
/// ```
/// use atomwall::thermal::{lifshitz, v_average};
/// let (x0, theta) = (50.0, 0.4);
/// let rel = 1.0 - v_average(x0, theta).unwrap() / lifshitz(x0, theta);
/// assert!((rel - 0.0134).abs() < 5e-4);
/// ```
pub fn v_average(x0: f64, theta: f64) -> Result<f64> {
    check_point(x0, theta)?;
    Ok(lifshitz(x0, theta) * (1.0 / theta).tanh())
}

/// Averaged potential assembled as `tanh(1/θ) V_closed + 2V_rr/(e^{2/θ} + 1)`.
pub fn v_average_assembled(x0: f64, theta: f64) -> Result<f64> {
    check_point(x0, theta)?;
    let v = vacuum_potentials(x0)?;
    let t = (1.0 / theta).tanh();
    let fermi = {
        let e = (-2.0 / theta).exp();
        e / (1.0 + e)
    };
    Ok(t * closed_from(&v, theta) + 2.0 * v.v0rr * fermi)
}

/// Low-temperature average `V − 2e^{−2/θ}[V_fr + V_T]` with `V = V_closed`
/// and `V_T = V_closed − V_g`.
pub fn v_average_lowt(x0: f64, theta: f64) -> Result<f64> {
    check_point(x0, theta)?;
    let v = vacuum_potentials(x0)?;
    let closed = closed_from(&v, theta);
    Ok(closed - 2.0 * (-2.0 / theta).exp() * (v.v0fr + closed - v.vg))
}

/// Thermal quantities at one point, with `V_T` from quadrature.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalResult {
    pub x0: f64,
    pub theta: f64,
    pub vacuum: VacuumResult,
    pub v_t: f64,
    pub v_t_err: f64,
    /// `vg + v_t`.
    pub v_ground: f64,
    /// `ve − v_t`.
    pub v_excited: f64,
    /// Occupation-weighted average of the two states.
    pub v_average: f64,
    pub p_ground: f64,
}

pub fn thermal_potentials(x0: f64, theta: f64) -> Result<ThermalResult> {
    check_point(x0, theta)?;
    let vacuum = vacuum_potentials(x0)?;
    let r = v_t_quadrature(x0, theta)?;
    let p = p_ground(theta)?;
    let v_ground = vacuum.vg + r.value;
    let v_excited = vacuum.ve - r.value;
    Ok(ThermalResult {
        x0,
        theta,
        vacuum,
        v_t: r.value,
        v_t_err: r.err_estimate,
        v_ground,
        v_excited,
        v_average: p * v_ground + (1.0 - p) * v_excited,
        p_ground: p,
    })
}
