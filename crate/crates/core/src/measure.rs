//! The measures of the construction.
//!
//! * ω̈ — the Cantor probability measure, held exactly on tree nodes
//!   (ω̈(I_j^k) = 2^{−k}) and integrated through its generation-m midpoint
//!   atomization ω^(m).
//! * σ̈ / σ̇ — atomic measures with mass s_j^k = (2/s0²)^k at the gap
//!   centers z̈_j^k (fractional case) or at the off-center points
//!   ż_j^k = a_j^k + c·b·((1−b)/2)^k (Riesz case).
//! * ω, σ on ℝ² — rows of the 1D measures at x-offsets a_n, heights 0 / γ_n.
//!
//! All truncations are explicit; the σ̈ mass tail is geometric with
//! ratio 4/s0².

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::ConstructionParams;
use crate::tree::{build_tree, CantorTree, Interval};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Atom {
    pub x: f64,
    pub mass: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    SigmaCenter,
    SigmaRiesz,
    OmegaAtomization,
    Custom,
}

/// Atom placement rule for the σ truncations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Placement {
    Center,
    Riesz { c: f64 },
}

/// Finite atomic measure on the line; atoms sorted by position.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AtomicMeasure1D {
    atoms: Vec<Atom>,
    provenance: Provenance,
}

impl AtomicMeasure1D {
    pub fn new(mut atoms: Vec<Atom>, provenance: Provenance) -> Result<Self> {
        atoms.sort_by(|a, b| a.x.total_cmp(&b.x));
        for w in atoms.windows(2) {
            if w[0].x == w[1].x {
                return Err(Error::InvalidParameters(format!(
                    "duplicate atom position {}",
                    w[0].x
                )));
            }
        }
        if atoms.iter().any(|a| !(a.mass > 0.0) || !a.x.is_finite()) {
            return Err(Error::InvalidParameters(
                "atom masses must be positive and positions finite".into(),
            ));
        }
        Ok(Self { atoms, provenance })
    }

    pub fn empty() -> Self {
        Self {
            atoms: Vec::new(),
            provenance: Provenance::Custom,
        }
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.mass).sum()
    }

    /// Atoms inside [left, right], closed on both ends.
    pub fn atoms_in(&self, iv: Interval) -> &[Atom] {
        let lo = self.atoms.partition_point(|a| a.x < iv.left);
        let hi = self.atoms.partition_point(|a| a.x <= iv.right);
        &self.atoms[lo..hi]
    }

    /// μ([left, right]) with the closed-both-ends membership convention.
    pub fn mass_in(&self, iv: Interval) -> f64 {
        self.atoms_in(iv).iter().map(|a| a.mass).sum()
    }

    /// Restriction 1_J μ as a new measure (empty result allowed).
    pub fn restrict(&self, iv: Interval) -> Self {
        Self {
            atoms: self.atoms_in(iv).to_vec(),
            provenance: self.provenance,
        }
    }

    pub fn dist_to_support(&self, x: f64) -> f64 {
        if self.atoms.is_empty() {
            return f64::INFINITY;
        }
        let i = self.atoms.partition_point(|a| a.x < x);
        let mut d = f64::INFINITY;
        if i < self.atoms.len() {
            d = d.min(self.atoms[i].x - x);
        }
        if i > 0 {
            d = d.min(x - self.atoms[i - 1].x);
        }
        d
    }

    /// First moment ∫ x dμ / μ(ℝ); None for the empty measure.
    pub fn mean(&self) -> Option<f64> {
        if self.atoms.is_empty() {
            return None;
        }
        let m: f64 = self.total_mass();
        Some(self.atoms.iter().map(|a| a.mass * a.x).sum::<f64>() / m)
    }
}

/// σ̈ (center placement) or σ̇ (Riesz placement) truncated at `depth`:
/// one atom per gap of generations 0..=depth, mass (2/s0²)^k.
pub fn sigma_atoms(
    tree: &CantorTree,
    depth: usize,
    placement: Placement,
) -> Result<AtomicMeasure1D> {
    tree.check_generation(depth)?;
    if let Placement::Riesz { c } = placement {
        if !(0.0 < c && c < 1.0) {
            return Err(Error::InvalidParameters(format!(
                "riesz placement constant must lie in (0,1), got {c}"
            )));
        }
    }
    let mut atoms = Vec::with_capacity((2 << depth) - 1);
    for k in 0..=depth {
        let mass = tree.params().sigma_mass(k);
        for j in 0..tree.generation_count(k) {
            let x = match placement {
                Placement::Center => tree.gap(k, j).center,
                Placement::Riesz { c } => tree.riesz_point(k, j, c),
            };
            atoms.push(Atom { x, mass });
        }
    }
    let provenance = match placement {
        Placement::Center => Provenance::SigmaCenter,
        Placement::Riesz { .. } => Provenance::SigmaRiesz,
    };
    AtomicMeasure1D::new(atoms, provenance)
}

/// The Cantor measure ω̈ carried on a tree, with node masses 2^{−k}.
#[derive(Debug, Clone)]
pub struct CantorWeights {
    tree: CantorTree,
}

impl CantorWeights {
    pub fn new(tree: CantorTree) -> Self {
        Self { tree }
    }

    pub fn build(params: &ConstructionParams, depth: usize) -> Result<Self> {
        Ok(Self::new(build_tree(params, depth)?))
    }

    pub fn tree(&self) -> &CantorTree {
        &self.tree
    }

    /// Exact node mass ω̈(I_j^k) = 2^{−k}.
    pub fn generation_mass(&self, k: usize) -> f64 {
        0.5f64.powi(k as i32)
    }

    /// Generation-m midpoint atomization ω^(m): mass 2^{−m} at the midpoint
    /// of each I_i^m.
    pub fn atomize(&self, m: usize) -> Result<AtomicMeasure1D> {
        self.tree.check_generation(m)?;
        let mass = self.generation_mass(m);
        let atoms = self
            .tree
            .intervals(m)
            .map(|iv| Atom {
                x: iv.center(),
                mass,
            })
            .collect();
        AtomicMeasure1D::new(atoms, Provenance::OmegaAtomization)
    }

    /// Adaptive atomization around an evaluation point x: a node I is kept
    /// whole (mass at its midpoint) once |I| ≤ tol·dist(x, I), otherwise it
    /// is split; nodes at the depth cap are kept. Atoms come out in
    /// ascending position order.
    pub fn atomize_adaptive(&self, x: f64, tol: f64) -> Vec<Atom> {
        let mut out = Vec::new();
        self.descend(x, tol, 0, 0, &mut out);
        out
    }

    fn descend(&self, x: f64, tol: f64, k: usize, j: usize, out: &mut Vec<Atom>) {
        let iv = self.tree.interval(k, j);
        let d = if iv.contains(x) {
            0.0
        } else {
            (iv.left - x).abs().min((iv.right - x).abs())
        };
        if (d > 0.0 && iv.length() <= tol * d) || k == self.tree.depth() {
            out.push(Atom {
                x: iv.center(),
                mass: self.generation_mass(k),
            });
        } else {
            self.descend(x, tol, k + 1, 2 * j, out);
            self.descend(x, tol, k + 1, 2 * j + 1, out);
        }
    }

    /// ω̈ mass of an arbitrary interval: exact 2^{−k} when the interval is a
    /// tree node, otherwise the ω^(depth) density integral over the overlap.
    pub fn node_mass(&self, iv: Interval) -> f64 {
        // Exact node lookup along the branch of the interval's center.
        for &(k, j) in &self.tree.branch(iv.center()) {
            let node = self.tree.interval(k, j);
            let scale = self.tree.generation_length(k);
            if (node.left - iv.left).abs() <= 1e-12 * scale
                && (node.right - iv.right).abs() <= 1e-12 * scale
            {
                return self.generation_mass(k);
            }
        }
        let m = self.tree.depth();
        let unit = self.generation_mass(m);
        let len = self.tree.generation_length(m);
        let mut total = 0.0;
        for node in self.tree.intervals(m) {
            let lo = node.left.max(iv.left);
            let hi = node.right.min(iv.right);
            if hi > lo {
                total += unit * (hi - lo) / len;
            }
        }
        total
    }
}

/// One horizontal row of a planar assembly: a 1D base measure translated to
/// x-offset a_n and lifted to the given height.
#[derive(Debug, Clone)]
pub struct PlanarRow {
    pub x_offset: f64,
    pub height: f64,
    pub base: AtomicMeasure1D,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanarAtom {
    pub x: f64,
    pub y: f64,
    pub mass: f64,
}

/// Rows of 1D measures on ℝ²; atoms flattened row-major for kernel sums.
#[derive(Debug, Clone)]
pub struct PlanarMeasure {
    rows: Vec<PlanarRow>,
    atoms: Vec<PlanarAtom>,
}

impl PlanarMeasure {
    pub fn new(rows: Vec<PlanarRow>) -> Self {
        let atoms = rows
            .iter()
            .flat_map(|r| {
                r.base.atoms().iter().map(move |a| PlanarAtom {
                    x: r.x_offset + a.x,
                    y: r.height,
                    mass: a.mass,
                })
            })
            .collect();
        Self { rows, atoms }
    }

    pub fn rows(&self) -> &[PlanarRow] {
        &self.rows
    }

    pub fn atoms(&self) -> &[PlanarAtom] {
        &self.atoms
    }

    pub fn total_mass(&self) -> f64 {
        self.atoms.iter().map(|a| a.mass).sum()
    }
}

/// Row offsets a_0 = 0, a_{n+1} = a_n + 1 + k_n with the separation
/// k_n = 4^{⌈2n·max{(2−α)^{−1}, 1}⌉} (exponent rounded up to an integer).
pub fn row_offsets(alpha: f64, n_rows: usize) -> Vec<f64> {
    let rate = (1.0 / (2.0 - alpha)).max(1.0);
    let mut offsets = Vec::with_capacity(n_rows);
    let mut a = 0.0;
    for n in 0..n_rows {
        offsets.push(a);
        let exp = (2.0 * n as f64 * rate).ceil();
        a += 1.0 + 4f64.powf(exp);
    }
    offsets
}

/// Builds the planar pair (ω, σ): ω rows are copies of the ω̈ atomization at
/// height 0, σ rows are copies of the σ truncation at heights γ_n.
pub fn build_planar(
    params: &ConstructionParams,
    n_rows: usize,
    heights: &[f64],
    placement: Placement,
) -> Result<(PlanarMeasure, PlanarMeasure)> {
    if n_rows == 0 || heights.len() != n_rows {
        return Err(Error::InvalidParameters(format!(
            "need {n_rows} heights, got {}",
            heights.len()
        )));
    }
    if let Some(&h) = heights.iter().find(|h| !(**h > 0.0)) {
        return Err(Error::InvalidHeight(h));
    }
    let tree_depth = params.depth_omega.max(params.depth_sigma);
    let weights = CantorWeights::build(params, tree_depth)?;
    let omega_base = weights.atomize(params.depth_omega)?;
    let sigma_base = sigma_atoms(weights.tree(), params.depth_sigma, placement)?;
    let offsets = row_offsets(params.alpha, n_rows);
    let omega_rows = offsets
        .iter()
        .map(|&a| PlanarRow {
            x_offset: a,
            height: 0.0,
            base: omega_base.clone(),
        })
        .collect();
    let sigma_rows = offsets
        .iter()
        .zip(heights)
        .map(|(&a, &h)| PlanarRow {
            x_offset: a,
            height: h,
            base: sigma_base.clone(),
        })
        .collect();
    Ok((
        PlanarMeasure::new(omega_rows),
        PlanarMeasure::new(sigma_rows),
    ))
}
