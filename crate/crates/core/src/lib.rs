//! Exact invariant theory for the classical groups.
//!
//! The crate builds the contraction invariants of `GL(n)`, `O(n)` and
//! `Sp(n)` acting on several copies of `V = Q^n` (and its dual), computes
//! graded spaces of invariant polynomials exactly over the rationals, and
//! certifies degree by degree that the contractions span them.
//!
//! Modules, bottom up:
//!
//! * [`exact`]: rationals and dense matrices with exact elimination.
//! * [`poly`]: sparse polynomials over copy-indexed coordinates.
//! * [`grp`]: group specifications, membership, Cayley samplers, finite closure.
//! * [`act`]: the action on polynomials, invariance and Reynolds averaging.
//! * [`fft`]: contractions, invariant subspaces, certificates, decompositions.
//! * [`cli`]: expression grammar, reports and the command-line driver.

pub mod act;
pub mod cli;
pub mod error;
pub mod exact;
pub mod fft;
pub mod grp;
pub mod poly;

pub use error::{Error, Result};
