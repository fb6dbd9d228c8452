//! Exact computations with finite-dimensional monoidal Hom-Hopf algebras.
//!
//! Structures are given by structure constants over the rationals or a prime
//! field. The crate verifies their axioms, solves for total and normalized
//! integrals as affine linear systems, and constructs certified splittings of
//! relative Hom-Hopf modules.

pub mod adjunction;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod format;
pub mod hom_core;
pub mod hom_rep;
pub mod integrals;
pub mod linalg;
pub mod maschke;
pub mod report;
pub mod separability;
pub mod tensor;

pub use error::{Error, Result};
pub use linalg::{AffineSolutionSet, Field, Matrix, Scalar};
pub use report::{AxiomReport, Violation};
