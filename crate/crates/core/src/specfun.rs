//! Sine and cosine integrals and the kernels built from them.
//!
//! Conventions:
//!
//! * `si(x) = −π/2 + ∫₀ˣ sin t / t dt` (the shifted sine integral, `si(∞) = 0`),
//! * `Ci(x) = γ + ln x + ∫₀ˣ (cos t − 1)/t dt`,
//! * `ℱ(x) = Ci(x) sin x − si(x) cos x` and `𝒢(x) = ℱ′(x) = Ci(x) cos x + si(x) sin x`.
//!
//! `ℱ` and `−𝒢` are the classical auxiliary functions `f` and `g`.
//!
//! Two different functions are conventionally written "G": the geometric
//! factor `sin x/x + 2 cos x/x² − 2 sin x/x³` of the wall mode sum, here
//! [`geom_g`], and the derivative of `ℱ`, here [`aux_gcal`].
//!
//! Evaluation uses three branches. Below `small_x_crossover` the power
//! series are summed directly; between the two crossovers the auxiliary
//! functions come from the continued fraction of `e^{z} E₁(z)` at `z = ix`;
//! above `asymptotic_crossover` their asymptotic series are used, truncated
//! before the smallest term.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::constants::EULER_GAMMA;
use crate::error::{Error, Result};

/// Branch selection and accuracy target for the special functions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy {
    /// Series below, continued fraction above.
    pub small_x_crossover: f64,
    /// Continued fraction below, asymptotic series above.
    pub asymptotic_crossover: f64,
    pub target_rel_err: f64,
}

impl Default for EvalPolicy {
    fn default() -> Self {
        Self {
            small_x_crossover: 4.0,
            asymptotic_crossover: 40.0,
            target_rel_err: 1e-12,
        }
    }
}

impl EvalPolicy {
    pub fn new(small_x_crossover: f64, asymptotic_crossover: f64, target_rel_err: f64) -> Result<Self> {
        if !(small_x_crossover > 0.0 && small_x_crossover.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "small_x_crossover must be positive, got {small_x_crossover}"
            )));
        }
        // The asymptotic series cannot reach the target much below x ≈ 35.
        if !(asymptotic_crossover >= 35.0 && asymptotic_crossover > small_x_crossover) {
            return Err(Error::InvalidInput(format!(
                "asymptotic_crossover must be >= 35 and above small_x_crossover, got {asymptotic_crossover}"
            )));
        }
        if !(target_rel_err > 0.0 && target_rel_err < 1e-6) {
            return Err(Error::InvalidInput(format!(
                "target_rel_err must lie in (0, 1e-6), got {target_rel_err}"
            )));
        }
        Ok(Self {
            small_x_crossover,
            asymptotic_crossover,
            target_rel_err,
        })
    }

    fn series_tol(&self) -> f64 {
        (self.target_rel_err * 1e-3).max(0.5 * f64::EPSILON)
    }

    fn branch(&self, x: f64) -> Branch {
        if x < self.small_x_crossover {
            Branch::Series
        } else if x < self.asymptotic_crossover {
            Branch::ContinuedFraction
        } else {
            Branch::Asymptotic
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Branch {
    Series,
    ContinuedFraction,
    Asymptotic,
}

/// Power series of `Si(x) = ∫₀ˣ sin t/t dt` and of `Ci(x) − γ − ln x`.
fn sici_series(x: f64, tol: f64) -> (f64, f64) {
    let x2 = x * x;

    let mut power = x; // (−1)ⁿ x^{2n+1}/(2n+1)!
    let mut si_sum = 0.0;
    for n in 0..200 {
        let term = power / (2 * n + 1) as f64;
        si_sum += term;
        if term.abs() <= tol * si_sum.abs() {
            break;
        }
        power *= -x2 / ((2 * n + 2) as f64 * (2 * n + 3) as f64);
    }

    let mut power = 1.0; // (−1)ⁿ x^{2n}/(2n)!
    let mut ci_sum = 0.0;
    for n in 1..200 {
        power *= -x2 / ((2 * n - 1) as f64 * (2 * n) as f64);
        let term = power / (2 * n) as f64;
        ci_sum += term;
        if term.abs() <= tol * ci_sum.abs() {
            break;
        }
    }
    (si_sum, ci_sum)
}

/// Auxiliary functions `(f, g)` from the continued fraction of
/// `e^{ix} E₁(ix) = g − i f`, evaluated with the modified Lentz method.
fn aux_fg_continued_fraction(x: f64, tol: f64) -> (f64, f64) {
    const TINY: f64 = 1e-300;
    let mut b = Complex64::new(1.0, x);
    let mut c = Complex64::new(1.0 / TINY, 0.0);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..10_000 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = (d * a + b).inv();
        c = b + c.inv() * a;
        let delta = c * d;
        h *= delta;
        if (delta.re - 1.0).abs() + delta.im.abs() < tol {
            break;
        }
    }
    (-h.im, h.re)
}

/// Asymptotic series `f ~ Σ (−1)ⁿ (2n)!/x^{2n+1}`, `g ~ Σ (−1)ⁿ (2n+1)!/x^{2n+2}`.
fn aux_fg_asymptotic(x: f64, tol: f64) -> (f64, f64) {
    let inv = 1.0 / x;
    let inv2 = inv * inv;

    let sum_until_smallest = |mut term: f64, ratio: &dyn Fn(usize) -> f64| {
        let mut sum = term;
        for n in 0..200 {
            let next = term * ratio(n);
            if next.abs() >= term.abs() || next.abs() <= tol * sum.abs() {
                if next.abs() < term.abs() {
                    sum += next;
                }
                break;
            }
            sum += next;
            term = next;
        }
        sum
    };

    let f = sum_until_smallest(inv, &|n| -(((2 * n + 1) * (2 * n + 2)) as f64) * inv2);
    let g = sum_until_smallest(inv2, &|n| -(((2 * n + 2) * (2 * n + 3)) as f64) * inv2);
    (f, g)
}

fn aux_fg(x: f64, policy: &EvalPolicy) -> (f64, f64) {
    match policy.branch(x) {
        Branch::Asymptotic => aux_fg_asymptotic(x, policy.series_tol()),
        _ => aux_fg_continued_fraction(x, policy.series_tol()),
    }
}

/// `(si(x), Ci(x))` for `x > 0` under the given policy.
pub fn sici_with(x: f64, policy: &EvalPolicy) -> (f64, f64) {
    debug_assert!(x > 0.0);
    match policy.branch(x) {
        Branch::Series => {
            let (si_part, ci_part) = sici_series(x, policy.series_tol());
            (si_part - FRAC_PI_2, (EULER_GAMMA + x.ln()) + ci_part)
        }
        _ => {
            let (f, g) = aux_fg(x, policy);
            let (s, c) = x.sin_cos();
            (-f * c - g * s, f * s - g * c)
        }
    }
}

/// Shifted sine integral `si(x) = Si(x) − π/2`.
///
/// Defined on the whole real line through `Si(−x) = −Si(x)`.
pub fn si(x: f64) -> f64 {
    if x == 0.0 {
        -FRAC_PI_2
    } else if x < 0.0 {
        -si(-x) - PI
    } else if x.is_infinite() {
        0.0
    } else {
        sici_with(x, &EvalPolicy::default()).0
    }
}

/// Cosine integral, defined for `x > 0`.
pub fn ci(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("Ci(x) requires x > 0, got {x}")));
    }
    if x.is_infinite() {
        return Ok(0.0);
    }
    Ok(sici_with(x, &EvalPolicy::default()).1)
}

/// `ℱ(x) = Ci(x) sin x − si(x) cos x` under the given policy, `x > 0`.
pub fn aux_f_with(x: f64, policy: &EvalPolicy) -> f64 {
    match policy.branch(x) {
        Branch::Series => {
            let (si_x, ci_x) = sici_with(x, policy);
            let (s, c) = x.sin_cos();
            ci_x * s - si_x * c
        }
        _ => aux_fg(x, policy).0,
    }
}

/// `𝒢(x) = ℱ′(x) = Ci(x) cos x + si(x) sin x` under the given policy, `x > 0`.
pub fn aux_gcal_with(x: f64, policy: &EvalPolicy) -> f64 {
    match policy.branch(x) {
        Branch::Series => {
            let (si_x, ci_x) = sici_with(x, policy);
            let (s, c) = x.sin_cos();
            ci_x * c + si_x * s
        }
        _ => -aux_fg(x, policy).1,
    }
}

/// `ℱ(x)`, continuous at the origin with `ℱ(0) = π/2`. NaN for `x < 0`.
pub fn aux_f(x: f64) -> f64 {
    if x == 0.0 {
        FRAC_PI_2
    } else if x < 0.0 || x.is_nan() {
        f64::NAN
    } else {
        aux_f_with(x, &EvalPolicy::default())
    }
}

/// `𝒢(x) = dℱ/dx`; diverges like `ln x` at the origin.
pub fn aux_gcal(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("𝒢(x) requires x > 0, got {x}")));
    }
    Ok(aux_gcal_with(x, &EvalPolicy::default()))
}

/// Taylor series of `G(x)/1 = Σ_{m≥1} 2m(1−2m)(−1)ᵐ x^{2m−2}/(2m+1)!`.
fn geom_g_series(x: f64) -> f64 {
    let x2 = x * x;
    let mut t = -1.0 / 6.0; // (−1)ᵐ x^{2m−2}/(2m+1)! at m = 1
    let mut sum = 0.0;
    for m in 1..100 {
        let mf = m as f64;
        let term = 2.0 * mf * (1.0 - 2.0 * mf) * t;
        sum += term;
        if term.abs() <= 0.5 * f64::EPSILON * sum.abs() {
            break;
        }
        t *= -x2 / ((2.0 * mf + 2.0) * (2.0 * mf + 3.0));
    }
    sum
}

/// Geometric factor of the wall mode sum,
/// `G(x) = sin x/x + 2 cos x/x² − 2 sin x/x³`, with `G(0) = 1/3`.
pub fn geom_g(x: f64) -> f64 {
    let x = x.abs();
    if x < 1.0 {
        geom_g_series(x)
    } else {
        let (s, c) = x.sin_cos();
        s / x + 2.0 * c / (x * x) - 2.0 * s / (x * x * x)
    }
}

/// Radiation-reaction kernel `ℋ₀ʳʳ(x) = −π (cos x + x sin x − x² cos x / 2)`.
pub fn h0rr(x: f64) -> f64 {
    let (s, c) = x.sin_cos();
    -PI * (c + x * s - 0.5 * x * x * c)
}

/// The three vacuum kernels at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VacuumKernels {
    /// Total kernel `ℋ₀ = (x²−2)ℱ + 2x𝒢 − x`.
    pub h0: f64,
    /// Radiation-reaction part `ℋ₀ʳʳ`.
    pub h0rr: f64,
    /// Field-fluctuation part `ℋ₀ − ℋ₀ʳʳ`.
    pub h0fr: f64,
}

/// Asymptotic series `ℋ₀(x) ~ Σ cₙ x^{−(2n+1)}` with
/// `cₙ = −(2n+2)(2n+3)(−1)ⁿ(2n)!`, i.e. `−6/x + 40/x³ − …`.
fn h0_asymptotic(x: f64, tol: f64) -> f64 {
    let inv2 = 1.0 / (x * x);
    let mut a = 1.0; // (−1)ⁿ (2n)!
    let mut power = 1.0 / x;
    let mut sum = 0.0;
    let mut last = f64::INFINITY;
    for n in 0..200 {
        let nf = n as f64;
        let term = -(2.0 * nf + 2.0) * (2.0 * nf + 3.0) * a * power;
        if term.abs() >= last {
            break;
        }
        sum += term;
        if term.abs() <= tol * sum.abs() {
            break;
        }
        last = term.abs();
        a *= -(2.0 * nf + 1.0) * (2.0 * nf + 2.0);
        power *= inv2;
    }
    sum
}

/// Vacuum kernels under the given policy, `x > 0`.
///
/// On the series branch `ℋ₀ = Ci·P − si·Q − x` with `P = x³ G(x)` and
/// `Q = (x²−2) cos x − 2x sin x`; since `ℋ₀ʳʳ = (π/2) Q` the fr part is
/// `Ci·P − Si·Q − x`, which is free of cancellation near the origin.
pub fn vacuum_kernels_with(x: f64, policy: &EvalPolicy) -> VacuumKernels {
    let rr = h0rr(x);
    match policy.branch(x) {
        Branch::Series => {
            let (si_part, ci_part) = sici_series(x, policy.series_tol());
            let ci_x = (EULER_GAMMA + x.ln()) + ci_part;
            let (s, c) = x.sin_cos();
            let p = x * x * x * geom_g(x);
            let q = (x * x - 2.0) * c - 2.0 * x * s;
            let fr = ci_x * p - si_part * q - x;
            VacuumKernels {
                h0: rr + fr,
                h0rr: rr,
                h0fr: fr,
            }
        }
        Branch::ContinuedFraction => {
            let (f, g) = aux_fg_continued_fraction(x, policy.series_tol());
            let h0 = (x * x - 2.0) * f - 2.0 * x * g - x;
            VacuumKernels {
                h0,
                h0rr: rr,
                h0fr: h0 - rr,
            }
        }
        Branch::Asymptotic => {
            let h0 = h0_asymptotic(x, policy.series_tol());
            VacuumKernels {
                h0,
                h0rr: rr,
                h0fr: h0 - rr,
            }
        }
    }
}

/// Vacuum kernels with the default policy. At `x = 0` the limits
/// `ℋ₀ = ℋ₀ʳʳ = −π` are returned.
pub fn vacuum_kernels(x: f64) -> VacuumKernels {
    if x == 0.0 {
        return VacuumKernels {
            h0: -PI,
            h0rr: -PI,
            h0fr: 0.0,
        };
    }
    if x < 0.0 || x.is_nan() {
        return VacuumKernels {
            h0: f64::NAN,
            h0rr: f64::NAN,
            h0fr: f64::NAN,
        };
    }
    vacuum_kernels_with(x, &EvalPolicy::default())
}

/// Total vacuum kernel `ℋ₀(x) = (x²−2)ℱ(x) + 2x𝒢(x) − x`, `ℋ₀(0) = −π`.
pub fn h0(x: f64) -> f64 {
    vacuum_kernels(x).h0
}

/// Field-fluctuation kernel `ℋ₀(x) − ℋ₀ʳʳ(x)`.
pub fn h0fr(x: f64) -> f64 {
    vacuum_kernels(x).h0fr
}
