//! Vector matroids over prime fields and the splitting family of constructions.
//!
//! Everything in this crate is computed directly from a representing matrix:
//! ranks come from row reduction over GF(p), circuits and bases from
//! exhaustive enumeration. The [`theorems`] module builds the closed-form
//! circuit, basis and rank families of an es-splitting matroid and compares
//! them against those brute-force answers.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod connectivity;
pub mod error;
pub mod eulerian;
pub mod field;
pub mod linalg;
pub mod matroid;
pub mod set;
pub mod split;
pub mod theorems;

pub use connectivity::Separation;
pub use error::{Error, Result};
pub use eulerian::CircuitDecomposition;
pub use field::{PrimeField, Scalar};
pub use linalg::{DependencySpace, LabeledMatrix, Rref};
pub use matroid::{Circuit, Limits, ValidationReport, VectorMatroid};
pub use set::{ElementSet, Label};
pub use split::{CircuitClass, CircuitTag, SplitSpec};
