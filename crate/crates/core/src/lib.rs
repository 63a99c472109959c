//! Exact computations of derivations and local derivations of Lie algebras
//! given by structure constants, with the Schrödinger algebras `s_n` as the
//! main subject.

pub mod cli;
pub mod dercalc;
pub mod error;
pub mod exactla;
pub mod io;
pub mod latex;
pub mod liecore;
pub mod locder;
pub mod proofreplay;
pub mod scalar;

pub use dercalc::{DerSpace, LinearMap};
pub use error::{Error, Result};
pub use exactla::{Mat, Subspace};
pub use liecore::{LieAlgebra, SchrodingerBasis};
pub use scalar::Scalar;
