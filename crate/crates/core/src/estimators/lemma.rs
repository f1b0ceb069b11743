//! Grid search for the Riesz placement constant c.
//!
//! For each candidate c we check that R̈ω̈ at the points
//! ż_j^k = a_j^k + c·b·((1−b)/2)^k is sandwiched between C1·(s0/2)^k and
//! C2·(s0/2)^k for all k ≤ k_max; by monotonicity of R̈ω̈ across a
//! generation it suffices to check the extreme indices j ∈ {1, 2^k}. The
//! winning c minimizes C2/C1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::riesz1d_atoms;

use super::MeasurePair1D;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaSearchResult {
    pub c: f64,
    pub c1: f64,
    pub c2: f64,
    pub k_max: usize,
    /// Normalized values R̈ω̈(ż_1^k)/(s0/2)^k and R̈ω̈(ż_{2^k}^k)/(s0/2)^k
    /// for k = 1..=k_max, for the winning c.
    pub ratios_first: Vec<f64>,
    pub ratios_last: Vec<f64>,
    /// Whether R̈ω̈(ż_1^k) ≤ R̈ω̈(ż_{2^k}^k) held for every k.
    pub monotone: bool,
}

fn extreme_ratios(pair: &MeasurePair1D, c: f64, k_max: usize) -> (Vec<f64>, Vec<f64>, bool) {
    let tree = pair.weights.tree();
    let alpha = pair.params.alpha;
    let omega = pair.omega.atoms();
    let scale_base = pair.params.s0 / 2.0;
    let mut first = Vec::with_capacity(k_max);
    let mut last = Vec::with_capacity(k_max);
    let mut monotone = true;
    for k in 1..=k_max {
        let scale = scale_base.powi(k as i32);
        let z1 = tree.riesz_point(k, 0, c);
        let z2 = tree.riesz_point(k, tree.generation_count(k) - 1, c);
        let v1 = riesz1d_atoms(z1, omega, alpha, 0.0);
        let v2 = riesz1d_atoms(z2, omega, alpha, 0.0);
        if v1 > v2 {
            monotone = false;
        }
        first.push(v1 / scale);
        last.push(v2 / scale);
    }
    (first, last, monotone)
}

pub fn lemma_search_c(
    pair: &MeasurePair1D,
    k_max: usize,
    grid: &[f64],
) -> Result<LemmaSearchResult> {
    if grid.is_empty() {
        return Err(Error::EmptyFamily);
    }
    if k_max + 4 > pair.params.depth_omega {
        return Err(Error::InvalidParameters(format!(
            "k_max = {k_max} needs depth_omega >= {} for resolution below scale k",
            k_max + 4
        )));
    }
    if grid.iter().any(|&c| !(0.0 < c && c < 1.0)) {
        return Err(Error::InvalidParameters(
            "grid points must lie in (0,1)".into(),
        ));
    }
    let mut best: Option<LemmaSearchResult> = None;
    for &c in grid {
        let (first, last, monotone) = extreme_ratios(pair, c, k_max);
        let c1 = first
            .iter()
            .chain(&last)
            .copied()
            .fold(f64::INFINITY, f64::min);
        let c2 = first
            .iter()
            .chain(&last)
            .copied()
            .fold(f64::NEG_INFINITY, f64::max);
        if !(c1 > 0.0) {
            continue; // lower bound fails for this c
        }
        let candidate = LemmaSearchResult {
            c,
            c1,
            c2,
            k_max,
            ratios_first: first,
            ratios_last: last,
            monotone,
        };
        // first-scanned wins among equal quality
        let better = match &best {
            None => true,
            Some(b) => candidate.c2 / candidate.c1 < b.c2 / b.c1,
        };
        if better {
            best = Some(candidate);
        }
    }
    best.ok_or(Error::NoAdmissibleC { k_max })
}

/// The default 9-point grid {0.05, 0.10, ..., 0.45}.
pub fn default_grid() -> Vec<f64> {
    (1..=9).map(|i| 0.05 * i as f64).collect()
}
