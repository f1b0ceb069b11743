//! Maximal-function testing: ∫_I M^α(1_I σ̈)² dω̈ against σ̈(I).
//!
//! On a tree interval I = I_r^ℓ the restricted maximal function sits at
//! scale (2/s0)^ℓ on I ∩ E_b, so the square integral against ω̈ comes out
//! comparable to σ̈(I) with constants uniform in ℓ — the bounded side of the
//! testing dichotomy.

use serde::{Deserialize, Serialize};

use crate::kernels::{maximal_alpha, Interval1D};
use crate::sum::{par_map, tree_sum};
use crate::tree::Interval;

use super::MeasurePair1D;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MaximalTestPoint {
    pub interval: Interval1D,
    /// ∫_I M^α(1_I σ)² dω^(depth_omega).
    pub integral: f64,
    /// σ(I) under the truncation.
    pub sigma_mass: f64,
    /// integral / σ(I); 0 when σ(I) = 0.
    pub ratio: f64,
}

/// The square integral of the tree-restricted maximal function of 1_I σ
/// against the frozen ω atomization, over I.
pub fn maximal_square_integral(pair: &MeasurePair1D, iv: Interval) -> MaximalTestPoint {
    let tree = pair.weights.tree();
    let alpha = pair.params.alpha;
    let restricted = pair.sigma.restrict(iv);
    let sigma_mass = restricted.total_mass();
    let omega_atoms = pair.omega.atoms_in(iv);
    let terms = par_map(omega_atoms, |a| {
        let m = maximal_alpha(a.x, &restricted, tree, alpha);
        a.mass * m * m
    });
    let integral = tree_sum(&terms);
    MaximalTestPoint {
        interval: Interval1D::from_endpoints(iv),
        integral,
        sigma_mass,
        ratio: if sigma_mass > 0.0 {
            integral / sigma_mass
        } else {
            0.0
        },
    }
}

/// Ratios over both extreme tree intervals of each generation ℓ ≤ max_gen.
pub fn maximal_test_profile(pair: &MeasurePair1D, max_gen: usize) -> Vec<MaximalTestPoint> {
    let tree = pair.weights.tree();
    let mut out = Vec::new();
    for l in 0..=max_gen.min(tree.depth()) {
        for j in [0, tree.generation_count(l) - 1] {
            out.push(maximal_square_integral(pair, tree.interval(l, j)));
            if l == 0 {
                break; // the root has a single interval
            }
        }
    }
    out
}
