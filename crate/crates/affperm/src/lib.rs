//! Affine permutations of type A and their canonical cyclic decompositions.
//!
//! The crate is organised bottom-up:
//!
//! - [`affine_core`]: permutations by window, words, length, descents;
//! - [`cyclic`]: cyclically decreasing/increasing elements `d_A`, `u_A`;
//! - [`kcode`]: maximal decompositions and the four k-codes;
//! - [`insertion`]: insertion of letters into k-codes, recording tableaux;
//! - [`shapes`]: k-bounded partitions, cores, boundaries, k-conjugation;
//! - [`nilcox`]: sums over the nil-Coxeter monoid and k-Schur functions;
//! - [`io`]: parsers for words, windows, partitions and codes;
//! - [`selftest`]: bounded verification suites.

pub mod affine_core;
pub mod cyclic;
pub mod error;
pub mod insertion;
pub mod io;
pub mod kcode;
pub mod nilcox;
pub mod selftest;
pub mod shapes;

pub use affine_core::{AffinePerm, Rank, Residue};
pub use cyclic::ResidueSet;
pub use error::{Error, Result};
pub use insertion::{InsertionTrace, RecordingTableau};
pub use kcode::{CyclicDecomposition, Direction, KCode, Side};
pub use nilcox::{KSchurTable, NilCoxSum};
pub use shapes::{BoundedPartition, CorePartition, SkewShape};
