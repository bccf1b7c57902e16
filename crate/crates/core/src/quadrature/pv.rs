//! Principal values and semi-infinite ranges.
//!
//! The integration range is cut into pieces, each mapped onto a unit
//! interval of a single virtual coordinate so that one adaptive run
//! controls the global error:
//!
//! * `[a, c − δ]` and `[c + δ, b]` with integrand `h w/(k − c)`,
//! * the window around the pole folded onto `[0, δ]`, where the principal
//!   value is `∫₀^δ [h w(c + t) − h w(c − t)]/t dt` and has no singularity,
//! * an unbounded right end either truncated where the regulator has
//!   decayed below `e^{−40}` or mapped through `k = a + u/(1 − u)`.

use super::adaptive::integrate_panels;
use super::{IntegralResult, QuadratureSpec, Regulator, Scalar};
use crate::error::{Error, Result};

/// Caps the number of initial panels created from a period hint.
const MAX_INITIAL_PANELS: usize = 40_000;

#[derive(Debug, Clone, Copy)]
enum Piece {
    Linear { a: f64, b: f64 },
    Fold { c: f64, delta: f64 },
    Mapped { a: f64 },
}

struct Layout {
    pieces: Vec<Piece>,
    pole: Option<f64>,
    /// Truncation point and exponential rate, when the right end was cut.
    cutoff: Option<(f64, f64)>,
}

fn cutoff_point(spec: &QuadratureSpec, a: f64) -> Option<(f64, f64)> {
    let base = spec.pole.map_or(a, |c| c.max(a));
    match spec.regulator {
        Regulator::None => None,
        Regulator::Exponential(eps) => Some((base.max(0.0) + 60.0 / eps, eps)),
        Regulator::Bose(lambda) => Some(((a.max(0.0) + 50.0 / lambda).max(base + 40.0 / lambda), lambda)),
        Regulator::Gaussian { rate, onset } => {
            let start = onset.max(base).max(0.0);
            let k = start + 60f64.sqrt() / rate;
            Some((k, 2.0 * rate * rate * (k - onset)))
        }
    }
}

fn layout(spec: &QuadratureSpec, a: f64, b: f64) -> Result<Layout> {
    spec.validate()?;
    if !a.is_finite() || b.is_nan() || !(b > a) {
        return Err(Error::InvalidInput(format!("invalid integration range [{a}, {b}]")));
    }
    let cutoff = if b.is_infinite() { cutoff_point(spec, a) } else { None };
    let end = cutoff.map_or(b, |(k, _)| k);

    let mut pieces = Vec::new();
    match spec.pole {
        None => {
            if end.is_infinite() {
                pieces.push(Piece::Mapped { a });
            } else {
                pieces.push(Piece::Linear { a, b: end });
            }
        }
        Some(c) => {
            if !(c > a && c < end) {
                return Err(Error::InvalidInput(format!(
                    "pole {c} must lie strictly inside [{a}, {b}]"
                )));
            }
            let gap = if end.is_infinite() { c - a } else { (c - a).min(end - c) };
            let mut delta = spec.pole_window.unwrap_or(0.5 * gap).min(0.5 * gap);
            if let Regulator::Bose(lambda) = spec.regulator {
                if spec.pole_window.is_none() {
                    delta = delta.min(1.0 / lambda);
                }
            }
            pieces.push(Piece::Linear { a, b: c - delta });
            pieces.push(Piece::Fold { c, delta });
            if end.is_infinite() {
                pieces.push(Piece::Mapped { a: c + delta });
            } else {
                pieces.push(Piece::Linear { a: c + delta, b: end });
            }
        }
    }
    Ok(Layout {
        pieces,
        pole: spec.pole,
        cutoff,
    })
}

fn piece_breaks(piece: &Piece, period: Option<f64>, budget: usize) -> Vec<f64> {
    let length = match *piece {
        Piece::Linear { a, b } => b - a,
        Piece::Fold { delta, .. } => delta,
        Piece::Mapped { .. } => {
            return vec![0.0, 0.5, 0.75, 0.875, 0.9375, 1.0];
        }
    };
    let n = match period {
        Some(p) => ((2.0 * length / p).ceil() as usize).clamp(1, budget.max(1)),
        None => 1,
    };
    (0..=n).map(|j| j as f64 / n as f64).collect()
}

/// Evaluates the mapped integrand of piece `piece` at local coordinate `u ∈ [0, 1]`.
fn eval_piece<T: Scalar, F: Fn(f64) -> T>(piece: &Piece, u: f64, h: &F, w: &Regulator, pole: Option<f64>) -> T {
    let hw = |k: f64| h(k) * w.weight(k);
    let over_pole = |k: f64| pole.map_or(1.0, |c| 1.0 / (k - c));
    match *piece {
        Piece::Linear { a, b } => {
            let k = a + u * (b - a);
            hw(k) * (over_pole(k) * (b - a))
        }
        Piece::Fold { c, delta } => {
            let t = u * delta;
            if t == 0.0 {
                return T::zero();
            }
            (hw(c + t) - hw(c - t)) * (delta / t)
        }
        Piece::Mapped { a } => {
            if u >= 1.0 {
                return T::zero();
            }
            let one_minus = 1.0 - u;
            let k = a + u / one_minus;
            let jac = 1.0 / (one_minus * one_minus);
            let v = hw(k) * (over_pole(k) * jac);
            if v.modulus().is_finite() {
                v
            } else {
                T::zero()
            }
        }
    }
}

/// Principal value `PV ∫_a^b h(k) w(k)/(k − c) dk` when `spec.pole = Some(c)`,
/// plain `∫_a^b h(k) w(k) dk` otherwise; `w` is the regulator weight and `b`
/// may be `+∞`.
///
/// ```
/// use atomwall::quadrature::{pv_integrate, QuadratureSpec};
///
/// // PV ∫₀² dk/(k − 1) = 0
/// let spec = QuadratureSpec::default().with_pole(1.0);
/// let r = pv_integrate(|_k: f64| 1.0, 0.0, 2.0, &spec).unwrap();
/// assert!(r.value.abs() < 1e-14);
/// ```
pub fn pv_integrate<T: Scalar, F: Fn(f64) -> T>(h: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<IntegralResult<T>> {
    let layout = layout(spec, a, b)?;
    let n_pieces = layout.pieces.len();

    let mut breaks = vec![0.0];
    for (i, piece) in layout.pieces.iter().enumerate() {
        let local = piece_breaks(piece, spec.period, MAX_INITIAL_PANELS / n_pieces);
        breaks.extend(local.iter().skip(1).map(|u| i as f64 + u));
    }

    let regulator = spec.regulator;
    let pieces = &layout.pieces;
    let pole = layout.pole;
    let integrand = |s: f64| {
        let i = (s.floor() as usize).min(n_pieces - 1);
        eval_piece(&pieces[i], s - i as f64, &h, &regulator, pole)
    };
    let out = integrate_panels(&integrand, &breaks, spec.rel_tol, spec.abs_tol, spec.max_subdivisions);

    // The neglected tail of a truncated range, assuming at most polynomial growth of h.
    let tail = match layout.cutoff {
        Some((k, rate)) => {
            let mut g = h(k).modulus() * regulator.weight(k);
            if let Some(c) = pole {
                g /= (k - c).abs();
            }
            2.0 * g / rate
        }
        None => 0.0,
    };
    let err = out.err + tail;
    Ok(IntegralResult {
        value: out.value,
        err_estimate: err,
        subdivisions_used: out.subdivisions,
        converged: out.converged && err <= spec.abs_tol.max(spec.rel_tol * out.value.modulus()),
        roundoff_limited: out.roundoff_limited,
    })
}

/// `∫_a^b f(k) w(k) dk`, ignoring any pole in `spec`.
pub fn integrate<T: Scalar, F: Fn(f64) -> T>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<IntegralResult<T>> {
    let spec = QuadratureSpec { pole: None, pole_window: None, ..*spec };
    pv_integrate(f, a, b, &spec)
}

/// `∫_a^∞ f(k) w(k) dk`: truncated with a tail estimate when a regulator is
/// set, mapped onto a finite interval otherwise.
///
/// ```
/// use atomwall::quadrature::{adaptive_semi_infinite, QuadratureSpec, Regulator};
///
/// let spec = QuadratureSpec::default().with_regulator(Regulator::Bose(1.0));
/// let r = adaptive_semi_infinite(|k: f64| k.powi(3), 0.0, &spec).unwrap();
/// let exact = std::f64::consts::PI.powi(4) / 15.0;
/// assert!((r.value - exact).abs() < 1e-10);
/// ```
pub fn adaptive_semi_infinite<T: Scalar, F: Fn(f64) -> T>(f: F, a: f64, spec: &QuadratureSpec) -> Result<IntegralResult<T>> {
    pv_integrate(f, a, f64::INFINITY, spec)
}
