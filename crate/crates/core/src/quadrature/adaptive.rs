//! Globally adaptive bisection over a set of initial panels.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::rule::{gk21, PanelEstimate};
use super::Scalar;

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: f64,
    b: f64,
    est: PanelEstimate<T>,
}

impl<T> Panel<T> {
    /// Further bisection cannot help: the estimate sits on its roundoff
    /// floor or the panel is as narrow as the abscissae allow.
    fn roundoff_limited(&self) -> bool {
        let floor = 50.0 * f64::EPSILON * self.est.resabs;
        let width = (self.b - self.a).abs();
        self.est.err <= floor * (1.0 + 1e-9) || width <= 200.0 * f64::EPSILON * self.a.abs().max(self.b.abs())
    }
}

impl<T> PartialEq for Panel<T> {
    fn eq(&self, other: &Self) -> bool {
        self.est.err == other.est.err
    }
}
impl<T> Eq for Panel<T> {}
impl<T> PartialOrd for Panel<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T> Ord for Panel<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.est.err.total_cmp(&other.est.err)
    }
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Outcome<T> {
    pub value: T,
    pub err: f64,
    pub subdivisions: usize,
    pub converged: bool,
    /// Stopped because every remaining panel sat on its roundoff floor.
    pub roundoff_limited: bool,
}

/// Integrates `f` over `[breaks[0], breaks.last()]`, starting from the panels
/// delimited by `breaks` and bisecting the panel with the largest error until
/// `err ≤ max(abs_tol, rel_tol·|value|)` or the bisection budget is spent.
pub(crate) fn integrate_panels<T: Scalar, F: Fn(f64) -> T + ?Sized>(
    f: &F,
    breaks: &[f64],
    rel_tol: f64,
    abs_tol: f64,
    max_subdivisions: usize,
) -> Outcome<T> {
    let mut heap: BinaryHeap<Panel<T>> = BinaryHeap::with_capacity(breaks.len() + max_subdivisions + 1);
    let mut settled: Vec<Panel<T>> = Vec::new();
    let mut value = T::zero();
    let mut err = 0.0;
    for w in breaks.windows(2) {
        let est = gk21(f, w[0], w[1]);
        value += est.value;
        err += est.err;
        heap.push(Panel { a: w[0], b: w[1], est });
    }

    let mut subdivisions = 0;
    let mut converged = false;
    let mut exhausted = false;
    loop {
        if err <= abs_tol.max(rel_tol * value.modulus()) {
            converged = true;
            break;
        }
        if subdivisions >= max_subdivisions {
            break;
        }
        let Some(worst) = heap.pop() else {
            exhausted = true;
            break;
        };
        if worst.roundoff_limited() {
            settled.push(worst);
            continue;
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = gk21(f, worst.a, mid);
        let right = gk21(f, mid, worst.b);
        value += left.value + right.value - worst.est.value;
        err += left.err + right.err - worst.est.err;
        heap.push(Panel { a: worst.a, b: mid, est: left });
        heap.push(Panel { a: mid, b: worst.b, est: right });
        subdivisions += 1;

        // Keep the running sums from drifting.
        if subdivisions % 256 == 0 {
            (value, err) = totals(heap.iter().chain(settled.iter()));
        }
    }

    let (value, err) = totals(heap.iter().chain(settled.iter()));
    Outcome {
        value,
        err,
        subdivisions,
        converged: converged && err <= abs_tol.max(rel_tol * value.modulus()),
        roundoff_limited: exhausted,
    }
}

fn totals<'a, T: Scalar + 'a>(panels: impl Iterator<Item = &'a Panel<T>>) -> (T, f64) {
    let mut value = T::zero();
    let mut err = 0.0;
    for p in panels {
        value += p.est.value;
        err += p.est.err;
    }
    (value, err)
}
