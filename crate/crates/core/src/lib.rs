//! Exact computation of the discrete C, P, T symmetries of the Dirac equation
//! and of the finite groups they generate.

pub mod classify;
pub mod cpt;
pub mod error;
pub mod gamma;
pub mod group;
pub mod linalg;
pub mod listings;
pub mod matrix;
pub mod operator;
pub mod quaternion;
pub mod report;
pub mod scalar;
pub mod solver;

pub use error::{Error, Result};
pub use scalar::ExactScalar;
