//! Exact linear algebra over Q.

pub mod complex;
pub mod echelon;
pub mod quotient;
pub mod rational;
pub mod sparse;

pub use complex::{
    homology, homology_dims, induced_on_homology, quotient_complex, total_complex, total_map,
    BicomplexSpec, ChainComplexQ, CochainComplexQ, HomologyCoords, HomologyResult, MixedComplex,
};
pub use echelon::{column_space_basis, kernel_basis, rank, rref, Rref, SpanCoords};
pub use quotient::{descend_map, quotient_by, QuotientPresentation};
pub use rational::{format_rational, parse_rational, q, q_frac, Rational};
pub use sparse::{SparseMatrix, SparseVec};
