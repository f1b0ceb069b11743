//! Energy functionals over partitioned intervals and cubes.
//!
//! 1D variant, forward direction:
//!   (1/σ̈(I)) Σ_r ω̈(I_r)·E(I_r,ω̈)²·P̈(I_r, 1_I σ̈)²
//! with E(I,μ)² = ½ μ(I)^{−2} ∬ (x−x')²/|I|² dμ dμ = ‖x−m_I^μ‖²/(μ(I)|I|²),
//! the double-integral normalization (≤ ½ always). 2D (§-style):
//!   (1/σ(Q)) Σ_r (P^α(Q_r, 1_Q σ)/|Q_r|^{1/2})²·‖x−m^ω_{Q_r}‖²_{L²(1_{Q_r}ω)}
//! with the diagnostic E² normalized by n·|Q_r|^{2/n} in n = 2 so the ≤ ½
//! bound carries over. `Dual` exchanges σ and ω.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::{poisson_variant_standard_atoms, Cube2D, Interval1D};
use crate::measure::{AtomicMeasure1D, PlanarAtom, PlanarMeasure};
use crate::sum::par_map;

use super::{MeasurePair1D, SupSearchResult, TruncationInfo, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Forward,
    Dual,
}

/// One partition piece's contribution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnergyTerm {
    pub piece: Witness,
    /// Mass of the second-moment measure on the piece.
    pub mass: f64,
    /// Normalized second moment E², in [0, 1/2].
    pub e2: f64,
    /// Poisson factor P̈ (1D) or P^α (2D) of the restricted other measure.
    pub poisson: f64,
    pub value: f64,
    /// Mean m_I^μ of the second-moment measure (x only in 1D).
    pub mean: Option<(f64, f64)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EnergyValue {
    /// The normalized energy sum: Σ term / normalizing mass.
    pub value: f64,
    pub normalizing_mass: f64,
    pub terms: Vec<EnergyTerm>,
}

fn check_partition_1d(parent: Interval1D, pieces: &[Interval1D]) -> Result<()> {
    let pe = parent.endpoints();
    let mut sorted: Vec<_> = pieces.iter().map(|p| p.endpoints()).collect();
    sorted.sort_by(|a, b| a.left.total_cmp(&b.left));
    let tol = 1e-9 * parent.length;
    for w in sorted.windows(2) {
        if w[1].left < w[0].right - tol {
            return Err(Error::OverlappingPartition);
        }
    }
    for p in &sorted {
        if p.left < pe.left - tol || p.right > pe.right + tol {
            return Err(Error::OverlappingPartition);
        }
    }
    Ok(())
}

fn check_partition_2d(parent: Cube2D, pieces: &[Cube2D]) -> Result<()> {
    let tol = 1e-9 * parent.side;
    let ph = 0.5 * parent.side;
    for p in pieces {
        let h = 0.5 * p.side;
        if (p.center.0 - parent.center.0).abs() + h > ph + tol
            || (p.center.1 - parent.center.1).abs() + h > ph + tol
        {
            return Err(Error::OverlappingPartition);
        }
    }
    for (i, p) in pieces.iter().enumerate() {
        for q in &pieces[i + 1..] {
            let dx = (p.center.0 - q.center.0).abs();
            let dy = (p.center.1 - q.center.1).abs();
            let h = 0.5 * (p.side + q.side);
            if dx < h - tol && dy < h - tol {
                return Err(Error::OverlappingPartition);
            }
        }
    }
    Ok(())
}

/// Second moment of a 1D atom set about its mean: (mass, E², mean).
fn second_moment_1d(atoms: &[crate::measure::Atom], length: f64) -> (f64, f64, Option<f64>) {
    let mass: f64 = atoms.iter().map(|a| a.mass).sum();
    if mass == 0.0 {
        return (0.0, 0.0, None);
    }
    let mean = atoms.iter().map(|a| a.mass * a.x).sum::<f64>() / mass;
    let var = atoms
        .iter()
        .map(|a| a.mass * (a.x - mean).powi(2))
        .sum::<f64>();
    (mass, var / (mass * length * length), Some(mean))
}

/// 1D variant energy functional for one (I, partition) pair.
pub fn energy_functional_1d(
    parent: Interval1D,
    partition: &[Interval1D],
    sigma: &AtomicMeasure1D,
    omega: &AtomicMeasure1D,
    alpha: f64,
    direction: Direction,
) -> Result<EnergyValue> {
    check_partition_1d(parent, partition)?;
    let (poisson_mu, moment_mu) = match direction {
        Direction::Forward => (sigma, omega),
        Direction::Dual => (omega, sigma),
    };
    let restricted = poisson_mu.atoms_in(parent.endpoints());
    let normalizing_mass: f64 = restricted.iter().map(|a| a.mass).sum();
    let mut terms = Vec::with_capacity(partition.len());
    for &piece in partition {
        let atoms = moment_mu.atoms_in(piece.endpoints());
        let (mass, e2, mean) = second_moment_1d(atoms, piece.length);
        let poisson = poisson_variant_standard_atoms(piece, restricted, alpha);
        let value = mass * e2 * poisson * poisson;
        terms.push(EnergyTerm {
            piece: Witness::Interval(piece),
            mass,
            e2,
            poisson,
            value,
            mean: mean.map(|m| (m, 0.0)),
        });
    }
    let total: f64 = terms.iter().map(|t| t.value).sum();
    Ok(EnergyValue {
        value: if normalizing_mass > 0.0 {
            total / normalizing_mass
        } else {
            0.0
        },
        normalizing_mass,
        terms,
    })
}

/// 2D energy functional for one (Q, partition) pair.
pub fn energy_functional_2d(
    parent: Cube2D,
    partition: &[Cube2D],
    sigma: &PlanarMeasure,
    omega: &PlanarMeasure,
    alpha: f64,
    direction: Direction,
) -> Result<EnergyValue> {
    check_partition_2d(parent, partition)?;
    let (poisson_mu, moment_mu) = match direction {
        Direction::Forward => (sigma, omega),
        Direction::Dual => (omega, sigma),
    };
    let restricted: Vec<PlanarAtom> = poisson_mu
        .atoms()
        .iter()
        .filter(|a| parent.contains(a.x, a.y))
        .copied()
        .collect();
    let normalizing_mass: f64 = restricted.iter().map(|a| a.mass).sum();
    let moment_atoms: Vec<PlanarAtom> = moment_mu
        .atoms()
        .iter()
        .filter(|a| parent.contains(a.x, a.y))
        .copied()
        .collect();
    let mut terms = Vec::with_capacity(partition.len());
    for &piece in partition {
        let inside: Vec<&PlanarAtom> = moment_atoms
            .iter()
            .filter(|a| piece.contains(a.x, a.y))
            .collect();
        let mass: f64 = inside.iter().map(|a| a.mass).sum();
        let (e2, norm2, mean) = if mass > 0.0 {
            let mx = inside.iter().map(|a| a.mass * a.x).sum::<f64>() / mass;
            let my = inside.iter().map(|a| a.mass * a.y).sum::<f64>() / mass;
            let var: f64 = inside
                .iter()
                .map(|a| a.mass * ((a.x - mx).powi(2) + (a.y - my).powi(2)))
                .sum();
            // diagnostic E² normalized by n·side² (n = 2)
            (
                var / (mass * 2.0 * piece.side * piece.side),
                var,
                Some((mx, my)),
            )
        } else {
            (0.0, 0.0, None)
        };
        let poisson = crate::kernels::poisson2d_standard(piece, &restricted, alpha);
        let value = (poisson / piece.side).powi(2) * norm2;
        terms.push(EnergyTerm {
            piece: Witness::Cube(piece),
            mass,
            e2,
            poisson,
            value,
            mean,
        });
    }
    let total: f64 = terms.iter().map(|t| t.value).sum();
    Ok(EnergyValue {
        value: if normalizing_mass > 0.0 {
            total / normalizing_mass
        } else {
            0.0
        },
        normalizing_mass,
        terms,
    })
}

#[derive(Debug, Clone)]
pub enum PartitionPair {
    OneD(Interval1D, Vec<Interval1D>),
    TwoD(Cube2D, Vec<Cube2D>),
}

#[derive(Debug, Clone, Copy)]
pub struct PartitionFamilyConfig {
    /// Parent intervals are tree intervals up to this generation (1D).
    pub max_parent_generation: usize,
    /// Uniform dyadic partitions into 2^j pieces, j = 1..=this.
    pub max_dyadic_level: usize,
    /// Seeded random dyadic partitions per parent.
    pub randoms_per_parent: usize,
    pub seed: u64,
}

impl Default for PartitionFamilyConfig {
    fn default() -> Self {
        Self {
            max_parent_generation: 6,
            max_dyadic_level: 4,
            randoms_per_parent: 3,
            seed: 0x5eed,
        }
    }
}

fn random_dyadic_1d(parent: Interval1D, rng: &mut ChaCha8Rng, max_depth: usize) -> Vec<Interval1D> {
    let mut out = Vec::new();
    let mut stack = vec![(parent, 0usize)];
    while let Some((iv, d)) = stack.pop() {
        if d < max_depth && rng.gen_bool(0.6) {
            let half = 0.5 * iv.length;
            stack.push((Interval1D::new(iv.center - 0.5 * half, half), d + 1));
            stack.push((Interval1D::new(iv.center + 0.5 * half, half), d + 1));
        } else {
            out.push(iv);
        }
    }
    out
}

/// 1D partition family: tree-aligned partitions, uniform dyadic splits and
/// seeded random dyadic partitions of tree intervals.
pub fn partition_family_1d(
    pair: &MeasurePair1D,
    cfg: &PartitionFamilyConfig,
) -> Vec<PartitionPair> {
    let tree = pair.weights.tree();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let max_gen = cfg.max_parent_generation.min(tree.depth());
    for k in 0..=max_gen {
        for j in 0..tree.generation_count(k) {
            let parent_iv = tree.interval(k, j);
            let parent = Interval1D::from_endpoints(parent_iv);
            // trivial partition
            out.push(PartitionPair::OneD(parent, vec![parent]));
            // tree-aligned: descendants at generation k + d
            for d in 1..=3usize {
                if k + d > tree.depth() {
                    break;
                }
                let pieces: Vec<Interval1D> = (0..(1usize << d))
                    .map(|t| Interval1D::from_endpoints(tree.interval(k + d, (j << d) + t)))
                    .collect();
                out.push(PartitionPair::OneD(parent, pieces));
            }
            // uniform dyadic splits
            for lvl in 1..=cfg.max_dyadic_level {
                let n = 1usize << lvl;
                let len = parent.length / n as f64;
                let left = parent.center - 0.5 * parent.length;
                let pieces: Vec<Interval1D> = (0..n)
                    .map(|t| Interval1D::new(left + (t as f64 + 0.5) * len, len))
                    .collect();
                out.push(PartitionPair::OneD(parent, pieces));
            }
            for _ in 0..cfg.randoms_per_parent {
                out.push(PartitionPair::OneD(
                    parent,
                    random_dyadic_1d(parent, &mut rng, 4),
                ));
            }
        }
    }
    out
}

fn quadtree_split(q: Cube2D, level: usize) -> Vec<Cube2D> {
    let n = 1usize << level;
    let side = q.side / n as f64;
    let x0 = q.center.0 - 0.5 * q.side + 0.5 * side;
    let y0 = q.center.1 - 0.5 * q.side + 0.5 * side;
    let mut out = Vec::with_capacity(n * n);
    for iy in 0..n {
        for ix in 0..n {
            out.push(Cube2D::new(
                (x0 + ix as f64 * side, y0 + iy as f64 * side),
                side,
            ));
        }
    }
    out
}

fn random_quadtree(q: Cube2D, rng: &mut ChaCha8Rng, max_depth: usize) -> Vec<Cube2D> {
    let mut out = Vec::new();
    let mut stack = vec![(q, 0usize)];
    while let Some((c, d)) = stack.pop() {
        if d < max_depth && rng.gen_bool(0.5) {
            for sub in quadtree_split(c, 1) {
                stack.push((sub, d + 1));
            }
        } else {
            out.push(c);
        }
    }
    out
}

/// 2D partition family over the case geometries: cubes within one row and
/// cubes spanning two / three rows, each with trivial, uniform-quadtree and
/// seeded random-quadtree decompositions.
pub fn partition_family_2d(
    pair: &MeasurePair1D,
    omega: &PlanarMeasure,
    sigma: &PlanarMeasure,
    cfg: &PartitionFamilyConfig,
) -> Vec<PartitionPair> {
    let tree = pair.weights.tree();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let offsets: Vec<f64> = omega.rows().iter().map(|r| r.x_offset).collect();
    let heights: Vec<f64> = sigma.rows().iter().map(|r| r.height).collect();
    let mut cubes: Vec<Cube2D> = Vec::new();
    for (&a_n, &h_n) in offsets.iter().zip(&heights) {
        let max_gen = cfg.max_parent_generation.min(4).min(tree.depth());
        for k in 0..=max_gen {
            let count = tree.generation_count(k);
            let stride = (count / 8).max(1);
            for j in (0..count).step_by(stride) {
                let iv = tree.interval(k, j);
                cubes.push(Cube2D::new((a_n + iv.center(), 0.0), iv.length()));
            }
        }
        cubes.push(Cube2D::new((a_n + 0.5, 0.5 * h_n), (2.0 * h_n).max(1.2)));
    }
    for w in offsets.windows(2) {
        cubes.push(Cube2D::new(
            (0.5 * (w[0] + w[1] + 1.0), 0.0),
            w[1] + 1.0 - w[0],
        ));
    }
    for w in offsets.windows(3) {
        cubes.push(Cube2D::new(
            (0.5 * (w[0] + w[2] + 1.0), 0.0),
            w[2] + 1.0 - w[0],
        ));
    }
    let mut out = Vec::new();
    for q in cubes {
        out.push(PartitionPair::TwoD(q, vec![q]));
        for lvl in 1..=2usize {
            out.push(PartitionPair::TwoD(q, quadtree_split(q, lvl)));
        }
        for _ in 0..cfg.randoms_per_parent {
            out.push(PartitionPair::TwoD(q, random_quadtree(q, &mut rng, 2)));
        }
    }
    out
}

/// Maximum normalized energy over the sampled family, with the largest E²
/// seen across all terms.
pub struct EnergySupResult {
    pub sup: SupSearchResult,
    pub max_e2: f64,
}

pub fn energy_sup(
    pair: &MeasurePair1D,
    sigma_2d: Option<&PlanarMeasure>,
    omega_2d: Option<&PlanarMeasure>,
    direction: Direction,
    family: &[PartitionPair],
) -> Result<EnergySupResult> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let alpha = pair.params.alpha;
    let evals = par_map(family, |p| -> Result<(f64, f64, Witness)> {
        match p {
            PartitionPair::OneD(parent, pieces) => {
                let ev = energy_functional_1d(
                    *parent,
                    pieces,
                    &pair.sigma,
                    &pair.omega,
                    alpha,
                    direction,
                )?;
                let max_e2 = ev.terms.iter().map(|t| t.e2).fold(0.0, f64::max);
                Ok((ev.value, max_e2, Witness::Interval(*parent)))
            }
            PartitionPair::TwoD(parent, pieces) => {
                let (s, o) = match (sigma_2d, omega_2d) {
                    (Some(s), Some(o)) => (s, o),
                    _ => {
                        return Err(Error::InvalidParameters(
                            "2D partition supplied without planar measures".into(),
                        ))
                    }
                };
                let ev = energy_functional_2d(*parent, pieces, s, o, alpha, direction)?;
                let max_e2 = ev.terms.iter().map(|t| t.e2).fold(0.0, f64::max);
                Ok((ev.value, max_e2, Witness::Cube(*parent)))
            }
        }
    });
    let mut best = f64::NEG_INFINITY;
    let mut best_idx = 0usize;
    let mut max_e2 = 0.0f64;
    for (i, e) in evals.iter().enumerate() {
        let (v, e2, _) = e
            .as_ref()
            .map_err(|err| Error::InvalidParameters(err.to_string()))?;
        if *v > best {
            best = *v;
            best_idx = i;
        }
        max_e2 = max_e2.max(*e2);
    }
    let witness = match &evals[best_idx] {
        Ok((_, _, w)) => *w,
        Err(_) => unreachable!(),
    };
    Ok(EnergySupResult {
        sup: SupSearchResult {
            value: best,
            witness,
            witness_class: "parent".to_string(),
            candidates_scanned: family.len(),
            family: format!("energy {:?}", direction),
            truncation: TruncationInfo::for_params(&pair.params),
        },
        max_e2,
    })
}
