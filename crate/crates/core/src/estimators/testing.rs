//! Testing partial sums S(K) = Σ_{k≤K} Σ_j s_j^k · (kernel ω̈ at the σ atom
//! of G_j^k)², the finite surrogate of the divergent testing sums. The
//! generation index starts at k = 1; S(0) = 0.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{frac1d_atoms, riesz1d_atoms};
use crate::measure::Placement;
use crate::sum::{par_map, tree_sum};

use super::{DivergenceCurve, MeasurePair1D};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TestingKind {
    Frac,
    Riesz,
}

/// Partial sums S(1..=K) of the testing series, with evaluation points
/// taken from the pair's placement (gap centers for frac, ż points for the
/// Riesz variant).
pub fn testing_partial_sum(
    pair: &MeasurePair1D,
    k_max: usize,
    kind: TestingKind,
) -> Result<DivergenceCurve> {
    if k_max > pair.params.depth_sigma {
        return Err(Error::DepthOverflow {
            requested: k_max,
            available: pair.params.depth_sigma,
        });
    }
    if kind == TestingKind::Riesz && !matches!(pair.placement, Placement::Riesz { .. }) {
        return Err(Error::InvalidParameters(
            "riesz testing sum requires a riesz-placement pair".into(),
        ));
    }
    let tree = pair.weights.tree();
    let alpha = pair.params.alpha;
    let omega = pair.omega.atoms();
    let mut points = Vec::with_capacity(k_max);
    let mut running = 0.0;
    for k in 1..=k_max {
        let mass = pair.params.sigma_mass(k);
        let eval_points: Vec<f64> = (0..tree.generation_count(k))
            .map(|j| match pair.placement {
                Placement::Center => tree.gap(k, j).center,
                Placement::Riesz { c } => tree.riesz_point(k, j, c),
            })
            .collect();
        let terms = par_map(&eval_points, |&z| {
            let v = match kind {
                TestingKind::Frac => frac1d_atoms(z, omega, alpha, 0.0),
                TestingKind::Riesz => riesz1d_atoms(z, omega, alpha, 0.0),
            };
            mass * v * v
        });
        running += tree_sum(&terms);
        points.push((k, running));
    }
    Ok(DivergenceCurve::fit(points))
}
