//! Exact second cohomology and central extensions of structure-constant algebras.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod error;
pub mod exact;
pub mod extension;
pub mod orbitlab;

pub use error::{Error, Result};
pub use exact::{Matrix, ParamPoly, Scalar, Subspace, Vector};
