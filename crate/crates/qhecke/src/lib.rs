//! Combinatorics of Young composition tableaux and 0-Hecke modules.
//!
//! The crate covers compositions and permutations, tableau families and
//! their enumerators, a column-recording insertion for Young composition
//! tableaux, a Greene-type shape predictor, quasisymmetric functions over the
//! fundamental basis, 0-Hecke modules given by action tables, and
//! distinguished filtrations of the tableau modules built from them.
//!
//! Conventions: rows are numbered from the bottom and columns from the left,
//! both starting at 1. Permutations are in one-line notation.

pub mod comb_core;
pub mod error;
pub mod filtration;
pub mod greene;
pub mod hecke;
pub mod insertion;
pub mod permutation;
pub mod qsym;
pub mod tableaux;

pub use comb_core::{Cell, Composition};
pub use error::{Error, Result};
pub use permutation::Perm;
pub use tableaux::{Family, Filling};
