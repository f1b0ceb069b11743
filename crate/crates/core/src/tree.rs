//! The middle-b Cantor tree rooted at [0,1].
//!
//! Generation k holds 2^k closed intervals I_j^k of common length
//! ((1−b)/2)^k. Each interval splits into two children of length
//! ((1−b)/2)^{k+1} separated by the removed open middle gap G_j^k of
//! length b·|I_j^k| with center z̈_j^k.

use crate::error::{Error, Result};
use crate::params::ConstructionParams;

/// Closed interval of the tree, or a user-supplied query interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub left: f64,
    pub right: f64,
}

impl Interval {
    pub fn new(left: f64, right: f64) -> Self {
        debug_assert!(left < right, "malformed interval [{left}, {right}]");
        Self { left, right }
    }

    pub fn length(&self) -> f64 {
        self.right - self.left
    }

    pub fn center(&self) -> f64 {
        0.5 * (self.left + self.right)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.left <= x && x <= self.right
    }
}

/// Removed open middle gap G_j^k = (a, b) with center z̈_j^k.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gap {
    pub a: f64,
    pub b: f64,
    pub center: f64,
}

#[derive(Debug, Clone)]
pub struct CantorTree {
    params: ConstructionParams,
    depth: usize,
    /// Left endpoints of the generation-k intervals, k = 0..=depth,
    /// in increasing order, indexed j = 0..2^k left to right.
    lefts: Vec<Vec<f64>>,
}

pub fn build_tree(params: &ConstructionParams, depth: usize) -> Result<CantorTree> {
    let r = params.ratio();
    let mut lefts: Vec<Vec<f64>> = Vec::with_capacity(depth + 1);
    lefts.push(vec![0.0]);
    for k in 0..depth {
        let len = r.powi(k as i32);
        let child_len = r.powi(k as i32 + 1);
        let mut next = Vec::with_capacity(2 << k);
        for &l in &lefts[k] {
            next.push(l);
            next.push(l + len - child_len);
        }
        lefts.push(next);
    }
    Ok(CantorTree {
        params: *params,
        depth,
        lefts,
    })
}

impl CantorTree {
    pub fn params(&self) -> &ConstructionParams {
        &self.params
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Common length ((1−b)/2)^k of the generation-k intervals.
    pub fn generation_length(&self, k: usize) -> f64 {
        self.params.ratio().powi(k as i32)
    }

    pub fn generation_count(&self, k: usize) -> usize {
        1 << k
    }

    pub fn check_generation(&self, k: usize) -> Result<()> {
        if k > self.depth {
            return Err(Error::DepthOverflow {
                requested: k,
                available: self.depth,
            });
        }
        Ok(())
    }

    /// I_j^k with 0-based index `j` in 0..2^k.
    pub fn interval(&self, k: usize, j: usize) -> Interval {
        let l = self.lefts[k][j];
        Interval::new(l, l + self.generation_length(k))
    }

    /// G_j^k: the open middle-b portion of I_j^k.
    pub fn gap(&self, k: usize, j: usize) -> Gap {
        let l = self.lefts[k][j];
        let len = self.generation_length(k);
        let child_len = len * self.params.ratio();
        Gap {
            a: l + child_len,
            b: l + len - child_len,
            center: l + 0.5 * len,
        }
    }

    /// Riesz placement point ż_j^k = a_j^k + c·b·((1−b)/2)^k.
    pub fn riesz_point(&self, k: usize, j: usize, c: f64) -> f64 {
        self.gap(k, j).a + c * self.params.b * self.generation_length(k)
    }

    pub fn intervals(&self, k: usize) -> impl Iterator<Item = Interval> + '_ {
        (0..self.generation_count(k)).map(move |j| self.interval(k, j))
    }

    /// Indices (k, j) of the tree intervals containing x, walking the branch
    /// from the root down; stops once x falls into a removed gap.
    pub fn branch(&self, x: f64) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if !(0.0..=1.0).contains(&x) {
            return out;
        }
        let mut j = 0usize;
        out.push((0, 0));
        for k in 0..self.depth {
            let iv = self.interval(k, j);
            let child_len = self.generation_length(k + 1);
            if x <= iv.left + child_len {
                j *= 2;
            } else if x >= iv.right - child_len {
                j = 2 * j + 1;
            } else {
                break; // x sits in the gap G_j^k
            }
            out.push((k + 1, j));
        }
        out
    }
}
