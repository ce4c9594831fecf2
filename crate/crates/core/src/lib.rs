//! Entropic inequalities for matrix elements of SU(2) and SU(1,1) irreducible
//! representations.
//!
//! Squared moduli of a unitary representation matrix form a bistochastic
//! matrix, so any one column is a probability distribution. Relabelling its
//! index as a pair turns it into a joint distribution of two artificial
//! subsystems, and Shannon (or Tsallis, `q > 1`) subadditivity then becomes
//! an inequality for Jacobi polynomials (SU(2)) or Gauss hypergeometric
//! functions (SU(1,1)). This crate evaluates both sides numerically.

// Fixtures and coefficients are quoted to 17 significant digits.
#![allow(clippy::excessive_precision)]

pub mod cli;
pub mod entropy;
pub mod error;
pub mod halfint;
pub mod probability;
pub mod specfun;
pub mod su11;
pub mod su2;

pub use entropy::{EntropyKind, QParam, SubadditivityReport};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use probability::{BistochasticMatrix, JointTable, ProbabilityVector, SeriesKind};
