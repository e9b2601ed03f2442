//! Borel-Schur algebras as explicit structure-constant algebras.
//!
//! The crate builds `S(n,r)` and `S⁺(n,r)` from the double-coset
//! multiplication rule, extracts quivers with relations, and runs the
//! computational checks behind the finite / tame / wild classification.

pub mod basicalg;
pub mod classifier;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod posetrep;
pub mod quiverkit;
pub mod reptype;
pub mod schur;
pub mod symcomb;

pub use error::{Error, Result};
pub use reptype::RepType;
