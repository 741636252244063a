//! Exact-arithmetic representation theory of affine quivers of type A.
//!
//! The crate models cycle-shaped quivers with arbitrary acyclic orientation,
//! their representations over the rationals, reflection and Coxeter functors,
//! the non-homogeneous tubes and their equivalence with nilpotent cyclic-quiver
//! representations, the canonical parametrization of strata by pairs
//! `(sigma, lambda)`, and the counting identities that tie the parametrization
//! to graded root-multiset dimensions.
//!
//! Start with the runnable programs under `examples/`; the `quiverlab` binary
//! exposes the same operations behind file-based subcommands.

pub mod caps;
pub mod cli;
pub mod linalg;
pub mod param;
pub mod quiver;
pub mod rep;
pub mod roots;
pub mod series;
pub mod tubes;

pub use linalg::{Fp, FpMat, Matrix, QMat, Rat};
pub use quiver::{DimVector, Quiver, QuiverError};
pub use rep::{FullRep, GradedMap, Rep};
