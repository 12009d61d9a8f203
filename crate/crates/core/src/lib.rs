//! Computational toolkit for finite permutation groups, centred on
//! normaliser-induced automorphism orbits of transitive groups.
//!
//! The crate provides:
//! - permutations with cycle notation and stabilizer chains ([`perm`], [`group`]),
//! - structural operations: conjugacy classes, centres, derived series ([`structure`]),
//! - constructors for the standard small families and coset actions ([`construct`]),
//! - automorphism machinery: full automorphism groups, permutation
//!   automorphisms, orbit statistics ([`autos`]),
//! - finite abelian groups in primary coordinates ([`abelian`]),
//! - a family of 2-groups defined by bilinear collection rules ([`gn`]),
//! - a subgroup census of small symmetric groups ([`census`]),
//! - certified order bounds with exact values and log2 brackets ([`bounds`]),
//! - machine-readable verification reports ([`report`], [`selftest`]).
//!
//! Conventions, fixed repo-wide: permutations act on the right (`omega^g`),
//! conjugation is `g^s = s^-1 g s`, products are read left to right
//! (`compose(p, q)` applies `p` first), points are 0-based internally and
//! 1-based in cycle notation.

pub mod abelian;
pub mod autos;
pub mod bounds;
pub mod census;
pub mod construct;
pub mod error;
pub mod gn;
pub mod group;
pub mod perm;
pub mod report;
pub mod selftest;
pub mod structure;

pub use error::{Error, Result};
pub use group::{ElementTable, PermutationGroup, StabilizerChain, SubgroupHandle};
pub use perm::Permutation;
