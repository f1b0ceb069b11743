//! Off-testing quotients on the planar assembly.
//!
//! For a square Q the off-testing quotient of the pair (σ, ω) is
//!
//!   (1/ω(Q)) Σ_{σ atoms outside Q} mass·(K(1_Q ω) at the atom)²,
//!
//! with K the planar fractional or first-coordinate Riesz kernel. On the
//! assembly squares Q_n = [a_n, a_n+1] × [−1, 0] the ω row sits on the top
//! edge (inside, closed convention) while every σ row floats at positive
//! height (outside), so the quotient over Q_n is at least the row-n
//! smoothed functional F(γ_n) — which the height search pins to a
//! prescribed target.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{frac2d, riesz2d, Cube2D};
use crate::measure::{build_planar, row_offsets, Placement, PlanarAtom, PlanarMeasure};
use crate::params::ConstructionParams;
use crate::sum::{par_map, tree_sum};

use super::gamma::{gamma_search, GammaSearchResult};
use super::testing::TestingKind;
use super::MeasurePair1D;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct OffTestQuotient {
    pub cube: Cube2D,
    pub kind: TestingKind,
    pub omega_mass: f64,
    pub sigma_atoms_outside: usize,
    pub quotient: f64,
}

/// The off-testing quotient of (σ, ω) over Q. Errors when ω puts no mass
/// on the closed square.
pub fn offtest_quotient(
    q: Cube2D,
    kind: TestingKind,
    sigma: &PlanarMeasure,
    omega: &PlanarMeasure,
    alpha: f64,
) -> Result<OffTestQuotient> {
    let inside: Vec<PlanarAtom> = omega
        .atoms()
        .iter()
        .filter(|a| q.contains(a.x, a.y))
        .copied()
        .collect();
    let omega_mass: f64 = inside.iter().map(|a| a.mass).sum();
    if !(omega_mass > 0.0) {
        return Err(Error::ZeroOmegaMass);
    }
    let outside: Vec<PlanarAtom> = sigma
        .atoms()
        .iter()
        .filter(|a| !q.contains(a.x, a.y))
        .copied()
        .collect();
    let terms = par_map(&outside, |a| -> Result<f64> {
        let v = match kind {
            TestingKind::Frac => frac2d((a.x, a.y), &inside, alpha)?,
            TestingKind::Riesz => riesz2d(1, (a.x, a.y), &inside, alpha)?,
        };
        Ok(a.mass * v * v)
    });
    let values: Vec<f64> = terms.into_iter().collect::<Result<_>>()?;
    Ok(OffTestQuotient {
        cube: q,
        kind,
        omega_mass,
        sigma_atoms_outside: outside.len(),
        quotient: tree_sum(&values) / omega_mass,
    })
}

/// The assembly square Q_n = [a_n, a_n + 1] × [−1, 0].
pub fn assembly_square(offsets: &[f64], n: usize) -> Cube2D {
    Cube2D::new((offsets[n] + 0.5, -0.5), 1.0)
}

/// A planar pair whose rows are tuned so that the quotient over Q_n clears
/// the n-th target.
#[derive(Debug, Clone)]
pub struct OffTestAssembly {
    pub params: ConstructionParams,
    pub kind: TestingKind,
    pub targets: Vec<f64>,
    pub heights: Vec<f64>,
    pub offsets: Vec<f64>,
    pub gamma_results: Vec<GammaSearchResult>,
    pub omega: PlanarMeasure,
    pub sigma: PlanarMeasure,
}

impl OffTestAssembly {
    /// Runs the height search for each target on the shared 1D pair, then
    /// lifts the rows to the plane at the found heights.
    pub fn build(
        params: &ConstructionParams,
        placement: Placement,
        kind: TestingKind,
        targets: &[f64],
    ) -> Result<Self> {
        if targets.is_empty() {
            return Err(Error::EmptyFamily);
        }
        if kind == TestingKind::Riesz && !matches!(placement, Placement::Riesz { .. }) {
            return Err(Error::InvalidParameters(
                "riesz off-testing requires riesz placement".into(),
            ));
        }
        let pair = MeasurePair1D::build(params, placement)?;
        let mut gamma_results = Vec::with_capacity(targets.len());
        for &t in targets {
            gamma_results.push(gamma_search(&pair, kind, t)?);
        }
        let heights: Vec<f64> = gamma_results.iter().map(|g| g.gamma).collect();
        let (omega, sigma) = build_planar(params, targets.len(), &heights, placement)?;
        Ok(Self {
            params: *params,
            kind,
            targets: targets.to_vec(),
            heights,
            offsets: row_offsets(params.alpha, targets.len()),
            gamma_results,
            omega,
            sigma,
        })
    }

    /// Quotients over Q_0, ..., Q_{N−1}.
    pub fn quotients(&self) -> Result<Vec<OffTestQuotient>> {
        (0..self.targets.len())
            .map(|n| {
                offtest_quotient(
                    assembly_square(&self.offsets, n),
                    self.kind,
                    &self.sigma,
                    &self.omega,
                    self.params.alpha,
                )
            })
            .collect()
    }
}
