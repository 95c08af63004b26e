//! Exact invariants for one-component doodle diagrams.
//!
//! A doodle diagram is encoded as a signed Gauss code: a cyclic word in which
//! every crossing label occurs exactly twice, plus a sign per crossing. From
//! the code we build the rotation system of a regular neighborhood
//! ([`surface`]), trace its boundary to get the minimal genus, compute the
//! homology intersection pairings of the primitive smoothing loops
//! ([`homology`]), and assemble the skew-symmetric augmented matrix whose
//! irreducible representative obstructs the doodle from being classical
//! ([`skewmat`]). The [`virtualize`] module predicts, at the matrix level,
//! the effect of rerouting a single crossing, and [`corpus`] bundles the
//! randomized consistency suites behind the `verify`/`corpus` CLI verbs.

pub mod corpus;
pub mod gauss;
pub mod homology;
pub mod skewmat;
pub mod surface;
pub mod virtualize;

pub use gauss::{CodeError, MoveKind, MoveSite, Sign, SignedGaussCode};
pub use skewmat::{AugSkewMatrix, ReductionStep, ReductionTrace, Verdict};
pub use surface::{RotationSystem, SurfaceSummary};
