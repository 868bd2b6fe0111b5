//! Weighted Coxeter groups, Hecke algebras with unequal parameters and their
//! Kazhdan–Lusztig theory, computed exactly.

pub mod afun;
pub mod cells;
pub mod conjectures;
pub mod coxeter;
pub mod dihedral_oracle;
pub mod error;
pub mod hecke;
pub mod jring;
pub mod kl;
pub mod oracle_diff;
pub mod rings;
pub mod symbols;

pub use cells::{CellKind, CellPartition, Region};
pub use coxeter::{CoxeterMatrix, CoxeterSystem, Element, EngineHint, EngineKind, Gen, Side};
pub use error::{Error, Result};
pub use rings::{BiLaurent, Laurent};
