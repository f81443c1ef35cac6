//! Exact computation of twisted, crossed-product and equivariant cyclic homology
//! for small finite-dimensional algebras over Q with finite group actions.

pub mod error;
pub mod linalg;

pub use error::{Error, Result};
pub mod algebra;
pub mod fixtures;
pub mod ops;
pub mod twisted;
pub mod crossed;
pub mod sequences;
