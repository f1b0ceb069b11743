//! Construction of a pair of fractal/atomic measures in one and two
//! dimensions and numerical certification of their two-weight behavior:
//! Muckenhoupt-type and energy constants stay bounded while the
//! off-testing constants for the fractional integral and the Riesz
//! transforms grow without bound.

// validation sites use `!(x > 0.0)` deliberately so NaN is rejected
// together with nonpositive values
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod estimators;
pub mod kernels;
pub mod measure;
pub mod params;
pub mod report;
pub mod snapshot;
pub mod sum;
pub mod tree;

pub use error::{Error, Result};
pub use kernels::{Cube2D, Interval1D, KernelKind, KernelSpec};
pub use measure::{
    build_planar, sigma_atoms, Atom, AtomicMeasure1D, CantorWeights, Placement, PlanarAtom,
    PlanarMeasure, PlanarRow, Provenance,
};
pub use params::{auto_b, derive_s0, ConstructionParams};
pub use tree::{build_tree, CantorTree, Gap, Interval};
