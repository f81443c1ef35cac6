//! Comparison of the `b + uB` complex with the total complex of `(b, B)`.

use crate::error::Result;
use crate::linalg::{homology_dims, MixedComplex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub bicomplex_dims: Vec<usize>,
    pub u_complex_dims: Vec<usize>,
}

impl LemmaReport {
    pub fn equal(&self) -> bool {
        self.bicomplex_dims == self.u_complex_dims
    }
}

/// Homology dims of both complexes through `max_degree`; needs `mixed.top() > max_degree`.
pub fn u_complex_equivalence(mixed: &MixedComplex, max_degree: usize) -> Result<LemmaReport> {
    let n_int = max_degree + 1;
    let (tot, u) = rayon::join(
        || mixed.total(n_int, "bicomplex total"),
        || mixed.u_complex(n_int, "u-complex"),
    );
    let (tot, u) = (tot?, u?);
    let (a, b) = rayon::join(|| homology_dims(&tot), || homology_dims(&u));
    Ok(LemmaReport { bicomplex_dims: a, u_complex_dims: b })
}
