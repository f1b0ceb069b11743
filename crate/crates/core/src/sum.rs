//! Deterministic reductions.
//!
//! Parallel stages map candidates to an indexed `Vec` and reduce with a
//! fixed pairwise tree, so results do not depend on thread count or
//! scheduling.

use rayon::prelude::*;

/// Pairwise tree sum in fixed order.
pub fn tree_sum(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let (a, b) = values.split_at(n / 2);
            tree_sum(a) + tree_sum(b)
        }
    }
}

/// Parallel map preserving input order.
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.par_iter().map(f).collect()
}

/// Parallel map followed by the deterministic tree sum.
pub fn par_sum<T, F>(items: &[T], f: F) -> f64
where
    T: Sync,
    F: Fn(&T) -> f64 + Sync + Send,
{
    tree_sum(&par_map(items, f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_sum_matches_sequential_on_benign_input() {
        let v: Vec<f64> = (1..=100).map(|i| i as f64).collect();
        assert_eq!(tree_sum(&v), 5050.0);
        assert_eq!(tree_sum(&[]), 0.0);
    }

    #[test]
    fn par_sum_is_deterministic() {
        let v: Vec<f64> = (0..10_000).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let a = par_sum(&v, |x| *x);
        let b = par_sum(&v, |x| *x);
        assert_eq!(a, b);
        assert_eq!(a, tree_sum(&v));
    }
}
