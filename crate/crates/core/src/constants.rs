//! The numeric constants `R(h)` and `N = max(2K+4, 2K+2δ)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Stopping threshold for the fixed-point iteration.
pub const FIXED_POINT_TOL: f64 = 1e-9;
pub const FIXED_POINT_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub h: f64,
    /// Solution of `m = 2h(6 + log₂(m+2))`.
    pub m: f64,
    /// `R(h) = m − 4h`.
    pub r: f64,
    pub r_ceil: f64,
    /// `K = 2R + 2`.
    pub k: f64,
    pub iterations: usize,
}

/// Solves `m = 2h(6 + log₂(m+2))` by iteration from `m₀ = 12h`.
pub fn solve_r(h: f64) -> Result<ConstantsReport> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::OutOfRange {
            name: "h",
            value: h as i64,
            expected: "h > 0",
        });
    }
    let f = |m: f64| 2.0 * h * (6.0 + (m + 2.0).log2());
    let mut m = 12.0 * h;
    let mut iterations = 0;
    loop {
        let next = f(m);
        iterations += 1;
        let done = (next - m).abs() < FIXED_POINT_TOL;
        m = next;
        if done || iterations >= FIXED_POINT_CAP {
            break;
        }
    }
    let r = m - 4.0 * h;
    Ok(ConstantsReport {
        h,
        m,
        r,
        r_ceil: r.ceil(),
        k: 2.0 * r + 2.0,
        iterations,
    })
}

/// `N = max(2K + 4, 2K + 2δ)`.
pub fn finiteness_constant(k: f64, delta: f64) -> f64 {
    (2.0 * k + 4.0).max(2.0 * k + 2.0 * delta)
}
