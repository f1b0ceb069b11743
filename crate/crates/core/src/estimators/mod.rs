//! Constant estimators and search procedures: the Ä₂ variant, the 2D
//! Muckenhoupt constants, energies, testing/off-testing partial sums, the
//! Riesz placement constant search and the height search.

pub mod a2;
pub mod energy;
pub mod gamma;
pub mod lemma;
pub mod maximal;
pub mod offtest;
pub mod testing;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::kernels::{Cube2D, Interval1D};
use crate::measure::{sigma_atoms, AtomicMeasure1D, CantorWeights, Placement};
use crate::params::ConstructionParams;

/// A 1D measure pair ready for estimation: ω̈ carried on the tree (with its
/// generation-depth_omega atomization frozen) and a σ truncation.
#[derive(Debug, Clone)]
pub struct MeasurePair1D {
    pub params: ConstructionParams,
    pub weights: CantorWeights,
    /// ω^(depth_omega): the fixed midpoint atomization used by estimators.
    pub omega: AtomicMeasure1D,
    pub sigma: AtomicMeasure1D,
    pub placement: Placement,
}

impl MeasurePair1D {
    pub fn build(params: &ConstructionParams, placement: Placement) -> Result<Self> {
        let tree_depth = params.depth_omega.max(params.depth_sigma);
        let weights = CantorWeights::build(params, tree_depth)?;
        let omega = weights.atomize(params.depth_omega)?;
        let sigma = sigma_atoms(weights.tree(), params.depth_sigma, placement)?;
        Ok(Self {
            params: *params,
            weights,
            omega,
            sigma,
            placement,
        })
    }
}

/// Witness of a supremum search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "shape")]
pub enum Witness {
    Interval(Interval1D),
    Cube(Cube2D),
}

/// Outcome of a finite-family supremum search. The reported value is a
/// lower bound for the true supremum; `value` always equals the functional
/// re-evaluated on `witness`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupSearchResult {
    pub value: f64,
    pub witness: Witness,
    /// Class of the winning candidate, in deterministic scan order.
    pub witness_class: String,
    pub candidates_scanned: usize,
    pub family: String,
    pub truncation: TruncationInfo,
}

/// Truncation metadata attached to every estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TruncationInfo {
    pub depth_omega: usize,
    pub depth_sigma: usize,
    /// Geometric tail ratio 4/s0² of the dropped σ mass.
    pub sigma_tail_ratio: f64,
    /// Upper bound on the relative σ mass dropped by the truncation.
    pub sigma_tail_bound: f64,
}

impl TruncationInfo {
    pub fn for_params(p: &ConstructionParams) -> Self {
        let ratio = 4.0 / (p.s0 * p.s0);
        Self {
            depth_omega: p.depth_omega,
            depth_sigma: p.depth_sigma,
            sigma_tail_ratio: ratio,
            sigma_tail_bound: ratio.powi(p.depth_sigma as i32 + 1) / (1.0 - ratio),
        }
    }
}

/// Partial sums of a divergent series plus a least-squares line through
/// (K, S(K)).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DivergenceCurve {
    /// (K, S(K)) with S nondecreasing in K.
    pub points: Vec<(usize, f64)>,
    pub slope: f64,
    pub intercept: f64,
    /// Root-mean-square residual of the linear fit.
    pub rms_residual: f64,
}

impl DivergenceCurve {
    pub fn fit(points: Vec<(usize, f64)>) -> Self {
        let n = points.len() as f64;
        if points.len() < 2 {
            let intercept = points.first().map_or(0.0, |p| p.1);
            return Self {
                points,
                slope: 0.0,
                intercept,
                rms_residual: 0.0,
            };
        }
        let sx: f64 = points.iter().map(|p| p.0 as f64).sum();
        let sy: f64 = points.iter().map(|p| p.1).sum();
        let sxx: f64 = points.iter().map(|p| (p.0 as f64).powi(2)).sum();
        let sxy: f64 = points.iter().map(|p| p.0 as f64 * p.1).sum();
        let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        let intercept = (sy - slope * sx) / n;
        let ss: f64 = points
            .iter()
            .map(|p| (p.1 - slope * p.0 as f64 - intercept).powi(2))
            .sum();
        let rms_residual = (ss / n).sqrt();
        Self {
            points,
            slope,
            intercept,
            rms_residual,
        }
    }

    pub fn last_value(&self) -> f64 {
        self.points.last().map_or(0.0, |p| p.1)
    }

    /// Successive increments S(K) − S(K−1), including the first point from 0.
    pub fn increments(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.points.len());
        let mut prev = 0.0;
        for &(_, s) in &self.points {
            out.push(s - prev);
            prev = s;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn fit_exact_line() {
        let pts: Vec<(usize, f64)> = (1..=10).map(|k| (k, 3.0 * k as f64 + 2.0)).collect();
        let c = DivergenceCurve::fit(pts);
        assert_relative_eq!(c.slope, 3.0, max_relative = 1e-12);
        assert_relative_eq!(c.intercept, 2.0, max_relative = 1e-12);
        assert!(c.rms_residual < 1e-10);
        assert_eq!(c.increments()[0], 5.0);
    }
}
