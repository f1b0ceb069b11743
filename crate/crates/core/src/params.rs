//! Global construction parameters.
//!
//! The whole construction is driven by the pair (α, b) with 0 ≤ α < 2 and
//! 1/3 ≤ b < 1 constrained to the admissibility window
//!
//!   1/9 ≤ ((1−b)/2)^{2−α} ≤ 1/3,
//!
//! which pins the homogeneity scale s0 = ((1−b)/2)^{−(2−α)} to [3, 9] and
//! makes the atomic-mass geometric sums Σ_k (4/s0²)^k convergent.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack used when checking the admissibility window, so that
/// boundary choices like (α=0, b=1/3) survive floating-point rounding.
const WINDOW_SLACK: f64 = 1e-12;

/// Parameters of the middle-b Cantor construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub alpha: f64,
    pub b: f64,
    /// Homogeneity scale s0 = ((1−b)/2)^{−(2−α)}, derived from (alpha, b).
    pub s0: f64,
    /// Generation cap m for the ω̈ midpoint atomization.
    pub depth_omega: usize,
    /// Generation cap for the σ̈ / σ̇ atom truncation.
    pub depth_sigma: usize,
    /// Off-center placement constant for the Riesz variant σ̇, if fixed.
    pub riesz_c: Option<f64>,
}

impl ConstructionParams {
    pub fn new(alpha: f64, b: f64, depth_omega: usize, depth_sigma: usize) -> Result<Self> {
        let s0 = derive_s0(alpha, b)?;
        if depth_omega < 1 || depth_sigma < 1 {
            return Err(Error::InvalidParameters(
                "truncation depths must be >= 1".into(),
            ));
        }
        Ok(Self {
            alpha,
            b,
            s0,
            depth_omega,
            depth_sigma,
            riesz_c: None,
        })
    }

    /// Desk-scale defaults: depth_omega = 14 (~16k ω-atoms),
    /// depth_sigma = 12 (~8k σ-atoms).
    pub fn with_defaults(alpha: f64, b: f64) -> Result<Self> {
        Self::new(alpha, b, 14, 12)
    }

    pub fn with_riesz_c(mut self, c: f64) -> Result<Self> {
        if !(0.0 < c && c < 1.0) {
            return Err(Error::InvalidParameters(format!(
                "riesz_c must lie in (0,1), got {c}"
            )));
        }
        self.riesz_c = Some(c);
        Ok(self)
    }

    /// Contraction ratio (1−b)/2 of the two surviving children.
    pub fn ratio(&self) -> f64 {
        (1.0 - self.b) / 2.0
    }

    /// Mass s_j^k = (2/s0²)^k of a generation-k σ atom.
    pub fn sigma_mass(&self, k: usize) -> f64 {
        (2.0 / (self.s0 * self.s0)).powi(k as i32)
    }

    /// Total σ̈ mass in the depth → ∞ limit, s0²/(s0²−4).
    pub fn sigma_total_mass_limit(&self) -> f64 {
        let s2 = self.s0 * self.s0;
        s2 / (s2 - 4.0)
    }
}

/// Checks the admissibility window and returns s0 = ((1−b)/2)^{α−2} ∈ [3, 9].
pub fn derive_s0(alpha: f64, b: f64) -> Result<f64> {
    if !(0.0..2.0).contains(&alpha) || !alpha.is_finite() {
        return Err(Error::InvalidParameters(format!(
            "alpha must lie in [0,2), got {alpha}"
        )));
    }
    if !(1.0 / 3.0 - WINDOW_SLACK..1.0).contains(&b) {
        return Err(Error::InvalidParameters(format!(
            "b must lie in [1/3,1), got {b}"
        )));
    }
    let w = ((1.0 - b) / 2.0).powf(2.0 - alpha);
    let lo = 1.0 / 9.0;
    let hi = 1.0 / 3.0;
    if w < lo * (1.0 - WINDOW_SLACK) || w > hi * (1.0 + WINDOW_SLACK) {
        return Err(Error::InvalidParameters(format!(
            "((1-b)/2)^(2-alpha) = {w} falls outside [1/9, 1/3] for alpha={alpha}, b={b}"
        )));
    }
    Ok(1.0 / w)
}

/// Smallest admissible b ≥ 1/3 for the given α: the window upper edge
/// ((1−b)/2)^{2−α} = 1/3 solved for b, clamped at 1/3.
pub fn auto_b(alpha: f64) -> Result<f64> {
    if !(0.0..2.0).contains(&alpha) {
        return Err(Error::InvalidParameters(format!(
            "alpha must lie in [0,2), got {alpha}"
        )));
    }
    let b = 1.0 - 2.0 * 3f64.powf(-1.0 / (2.0 - alpha));
    let b = b.max(1.0 / 3.0);
    derive_s0(alpha, b)?;
    Ok(b)
}
