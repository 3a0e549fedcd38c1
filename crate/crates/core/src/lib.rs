//! Exact set arithmetic and structure checks for small-doubling subsets of
//! `Z × Z/dZ`.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: cyclic groups, residue sets, subgroups and cosets.
//! * [`sumset`]: bit-parallel set addition, doubling ratios, stabilizers.
//! * [`classical`]: executable forms of the classical sumset theorems
//!   (Cauchy–Davenport, Kneser, Freiman `3k-4`, ...).
//! * [`hall`]: systems of distinct representatives and the projection bounds
//!   they certify.
//! * [`rectify`]: the `b + c - a` closure and the affine solver.
//! * [`layered`]: layered sets `∪ {a_i} × B_i` and the structure finder.

mod bits;
pub mod classical;
mod error;
pub mod group;
pub mod hall;
pub mod layered;
pub mod rectify;
pub mod sumset;

pub use classical::{CheckOutcome, Witness};
pub use error::{Error, LayerInvariant, Result};
pub use group::{Coset, CyclicGroup, ResidueSet, Subgroup};
pub use hall::{IntervalProfile, SdrCertificate, SdrOutcome};
pub use layered::{
    Conclusion, Ineq7Comparison, Ineq7Status, Layer, LayeredSet, LayeredSumset, SizePartition,
    StructureOutcome, StructureWitness, ThresholdConfig,
};
pub use rectify::{AffineAssignment, ClosureState, PairClassPartition};
pub use sumset::{DoublingReport, IntegerSet, SumsetStrategy};

/// Exact rational used for doubling ratios and thresholds.
pub type Ratio = num_rational::Ratio<usize>;
