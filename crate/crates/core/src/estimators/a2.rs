//! Muckenhoupt-type constants: the 1D variant Ä₂ and the 2D 𝒜^α₂ / 𝒜^{α,*}₂.
//!
//! The suprema are sampled over finite candidate families designed from the
//! proof's case analysis: tree intervals, gaps, intervals inside gaps
//! (Case 1) and straddling intervals around gap boundaries (Cases 2–3) in
//! 1D; cubes meeting one, two or three rows in 2D. Reported values are
//! lower bounds with stability diagnostics.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::kernels::{poisson_variant_reproducing_atoms, Cube2D, Interval1D};
use crate::measure::{AtomicMeasure1D, PlanarMeasure};
use crate::sum::par_map;

use super::{MeasurePair1D, SupSearchResult, TruncationInfo, Witness};

/// Relative tolerance of the adaptive ω̈ quadrature. The midpoint rule is
/// second order on the symmetric node masses, so the value error is ~tol².
pub const OMEGA_QUAD_TOL: f64 = 1e-3;

/// Product 𝒫̈(I,σ)·𝒫̈(I,ω) for two explicit atomic measures.
pub fn a2_variant_product(
    i: Interval1D,
    sigma: &AtomicMeasure1D,
    omega: &AtomicMeasure1D,
    alpha: f64,
) -> f64 {
    poisson_variant_reproducing_atoms(i, sigma.atoms(), alpha)
        * poisson_variant_reproducing_atoms(i, omega.atoms(), alpha)
}

/// Product for a pair, with ω̈ integrated through the adaptive atomization
/// keyed at the interval center.
pub fn a2_variant_product_pair(pair: &MeasurePair1D, i: Interval1D) -> f64 {
    let alpha = pair.params.alpha;
    let omega_atoms = pair.weights.atomize_adaptive(i.center, OMEGA_QUAD_TOL);
    poisson_variant_reproducing_atoms(i, pair.sigma.atoms(), alpha)
        * poisson_variant_reproducing_atoms(i, &omega_atoms, alpha)
}

/// Candidate intervals with the class labels used for tie-breaking.
#[derive(Debug, Clone)]
pub struct IntervalCandidate {
    pub interval: Interval1D,
    pub class: &'static str,
}

#[derive(Debug, Clone, Copy)]
pub struct IntervalFamilyConfig {
    /// Tree intervals and gaps are taken for all generations up to this.
    pub max_generation: usize,
    /// Case 1–3 geometries are sampled for generations up to this.
    pub case_generation: usize,
    /// Seeded random sub-gap intervals per gap.
    pub random_per_gap: usize,
    pub seed: u64,
}

impl IntervalFamilyConfig {
    pub fn for_depth(depth: usize) -> Self {
        Self {
            max_generation: depth,
            case_generation: depth.min(8),
            random_per_gap: 2,
            seed: 0x5eed,
        }
    }
}

/// Builds the Ä₂ candidate family in deterministic scan order:
/// by generation, then index, then family class.
pub fn interval_family(pair: &MeasurePair1D, cfg: &IntervalFamilyConfig) -> Vec<IntervalCandidate> {
    let tree = pair.weights.tree();
    let max_gen = cfg.max_generation.min(tree.depth());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    for k in 0..=max_gen {
        for j in 0..tree.generation_count(k) {
            let iv = tree.interval(k, j);
            out.push(IntervalCandidate {
                interval: Interval1D::from_endpoints(iv),
                class: "tree",
            });
            let gap = tree.gap(k, j);
            let gap_len = gap.b - gap.a;
            out.push(IntervalCandidate {
                interval: Interval1D::new(gap.center, gap_len),
                class: "gap",
            });
            if k <= cfg.case_generation {
                // Case 1: intervals inside the gap around its center.
                for f in [0.8, 0.4, 0.15] {
                    out.push(IntervalCandidate {
                        interval: Interval1D::new(gap.center, f * gap_len),
                        class: "case1-centered",
                    });
                }
                for _ in 0..cfg.random_per_gap {
                    let c = gap.a + rng.gen_range(0.05..0.95) * gap_len;
                    let max_half = (c - gap.a).min(gap.b - c);
                    let len = rng.gen_range(0.05..1.0) * 2.0 * max_half;
                    out.push(IntervalCandidate {
                        interval: Interval1D::new(c, len.max(1e-15)),
                        class: "case1-random",
                    });
                }
                // Cases 2–3: straddling the gap boundary / covering the gap.
                let node_len = iv.length();
                for anchor in [gap.a, gap.b] {
                    for f in [0.5, 2.0, 8.0] {
                        out.push(IntervalCandidate {
                            interval: Interval1D::new(anchor, f * node_len),
                            class: "straddle",
                        });
                    }
                }
                out.push(IntervalCandidate {
                    interval: Interval1D::new(gap.center, 3.0 * node_len),
                    class: "straddle",
                });
            }
        }
    }
    out
}

/// Sampled sup of the Ä₂ product over the family.
pub fn a2_variant_sup(
    pair: &MeasurePair1D,
    family: &[IntervalCandidate],
) -> Result<SupSearchResult> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let values = par_map(family, |c| a2_variant_product_pair(pair, c.interval));
    let (best_idx, best) =
        values
            .iter()
            .enumerate()
            .fold((0, f64::NEG_INFINITY), |acc, (i, &v)| {
                if v > acc.1 {
                    (i, v)
                } else {
                    acc // first-scanned witness wins among equal values
                }
            });
    Ok(SupSearchResult {
        value: best,
        witness: Witness::Interval(family[best_idx].interval),
        witness_class: family[best_idx].class.to_string(),
        candidates_scanned: family.len(),
        family: "a2-1d: tree/gap/case1/straddle intervals".to_string(),
        truncation: TruncationInfo::for_params(&pair.params),
    })
}

/// 2D Muckenhoupt quotient for one cube:
/// 𝒫^α(Q, 1_{Q^c}σ)·ω(Q)/|Q|^{1−α/2} (`dual` exchanges σ and ω).
pub fn a2_2d(
    q: Cube2D,
    sigma: &PlanarMeasure,
    omega: &PlanarMeasure,
    alpha: f64,
    dual: bool,
) -> f64 {
    let (poisson_side, mass_side) = if dual { (omega, sigma) } else { (sigma, omega) };
    let mass_q: f64 = mass_side
        .atoms()
        .iter()
        .filter(|a| q.contains(a.x, a.y))
        .map(|a| a.mass)
        .sum();
    if mass_q == 0.0 {
        return 0.0;
    }
    // reproducing Poisson of the complementary restriction
    let e2 = alpha - 2.0;
    let scale = q.side.powf(2.0 - alpha);
    let mut acc = 0.0;
    for a in poisson_side.atoms() {
        if q.contains(a.x, a.y) {
            continue;
        }
        let dx = a.x - q.center.0;
        let dy = a.y - q.center.1;
        let t = q.side + (dx * dx + dy * dy).sqrt();
        let t2 = t * t;
        let kern = if e2 == -1.0 {
            1.0 / t2
        } else if e2 == -2.0 {
            1.0 / (t2 * t2)
        } else if e2 == -1.5 {
            1.0 / (t2 * t2.sqrt())
        } else if e2 == -0.5 {
            1.0 / t2.sqrt()
        } else {
            t2.powf(e2)
        };
        acc += a.mass * kern;
    }
    scale * acc * mass_q / q.side.powf(2.0 - alpha)
}

#[derive(Debug, Clone)]
pub struct CubeCandidate {
    pub cube: Cube2D,
    pub class: &'static str,
}

#[derive(Debug, Clone, Copy)]
pub struct CubeFamilyConfig {
    /// Single-row cubes follow tree scales down to this generation.
    pub max_generation: usize,
    /// Extra seeded random cubes.
    pub randoms: usize,
    pub seed: u64,
}

impl Default for CubeFamilyConfig {
    fn default() -> Self {
        Self {
            max_generation: 5,
            randoms: 400,
            seed: 0x5eed,
        }
    }
}

/// Cube family over a planar assembly: single-row cubes at tree scales (on
/// the ω line, on the σ line, and spanning both), plus cubes spanning two
/// and three consecutive rows, plus seeded randoms.
pub fn cube_family(
    pair: &MeasurePair1D,
    omega: &PlanarMeasure,
    sigma: &PlanarMeasure,
    cfg: &CubeFamilyConfig,
) -> Vec<CubeCandidate> {
    let tree = pair.weights.tree();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    let offsets: Vec<f64> = omega.rows().iter().map(|r| r.x_offset).collect();
    let heights: Vec<f64> = sigma.rows().iter().map(|r| r.height).collect();
    for (n, (&a_n, &h_n)) in offsets.iter().zip(&heights).enumerate() {
        let max_gen = cfg.max_generation.min(tree.depth());
        for k in 0..=max_gen {
            let count = tree.generation_count(k);
            let stride = (count / 32).max(1);
            for j in (0..count).step_by(stride) {
                let iv = tree.interval(k, j);
                let cx = a_n + iv.center();
                let len = iv.length();
                out.push(CubeCandidate {
                    cube: Cube2D::new((cx, 0.0), len),
                    class: "one-row-omega",
                });
                out.push(CubeCandidate {
                    cube: Cube2D::new((cx, h_n), len),
                    class: "one-row-sigma",
                });
                let span = len.max(h_n) * 1.5;
                out.push(CubeCandidate {
                    cube: Cube2D::new((cx, 0.5 * h_n), span),
                    class: "one-row-span",
                });
            }
        }
        out.push(CubeCandidate {
            cube: Cube2D::new((a_n + 0.5, 0.0), 1.0),
            class: "one-row-cover",
        });
        out.push(CubeCandidate {
            cube: Cube2D::new((a_n + 0.5, 0.5 * h_n), 2.0),
            class: "one-row-cover",
        });
        let _ = n;
    }
    for w in offsets.windows(2) {
        let span = w[1] + 1.0 - w[0];
        for f in [1.0, 1.3] {
            out.push(CubeCandidate {
                cube: Cube2D::new((0.5 * (w[0] + w[1] + 1.0), 0.0), f * span),
                class: "two-row",
            });
        }
    }
    for w in offsets.windows(3) {
        let span = w[2] + 1.0 - w[0];
        for f in [1.0, 1.3] {
            out.push(CubeCandidate {
                cube: Cube2D::new((0.5 * (w[0] + w[2] + 1.0), 0.0), f * span),
                class: "three-row",
            });
        }
    }
    let min_len = tree.generation_length(cfg.max_generation.min(tree.depth()));
    for _ in 0..cfg.randoms {
        let n = rng.gen_range(0..offsets.len());
        let cx = offsets[n] + rng.gen_range(0.0..1.0);
        let cy = rng.gen_range(-0.2..heights[n] + 0.2);
        let side = min_len * (2.0 / min_len).powf(rng.gen_range(0.0..1.0f64));
        out.push(CubeCandidate {
            cube: Cube2D::new((cx, cy), side),
            class: "random",
        });
    }
    out
}

/// Sampled sup of the 2D Muckenhoupt quotient over a cube family.
pub fn a2_2d_sup(
    pair: &MeasurePair1D,
    sigma: &PlanarMeasure,
    omega: &PlanarMeasure,
    family: &[CubeCandidate],
    dual: bool,
) -> Result<SupSearchResult> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let alpha = pair.params.alpha;
    let values = par_map(family, |c| a2_2d(c.cube, sigma, omega, alpha, dual));
    let (best_idx, best) =
        values
            .iter()
            .enumerate()
            .fold(
                (0, f64::NEG_INFINITY),
                |acc, (i, &v)| {
                    if v > acc.1 {
                        (i, v)
                    } else {
                        acc
                    }
                },
            );
    Ok(SupSearchResult {
        value: best,
        witness: Witness::Cube(family[best_idx].cube),
        witness_class: family[best_idx].class.to_string(),
        candidates_scanned: family.len(),
        family: if dual {
            "a2-2d dual: one/two/three-row cubes".to_string()
        } else {
            "a2-2d: one/two/three-row cubes".to_string()
        },
        truncation: TruncationInfo::for_params(&pair.params),
    })
}
