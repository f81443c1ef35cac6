//! Cyclic quotient of the unnormalized complex `k[G] ⊗ A^{⊗(n+1)}`.

use rayon::prelude::*;

use super::coinvariant::coinvariant_relations;
use crate::algebra::{Algebra, FiniteGroupAction, TensorBasisIndex};
use crate::error::Result;
use crate::linalg::{homology, quotient_complex, quotient_by, ChainComplexQ, HomologyResult, QuotientPresentation, SparseMatrix};
use crate::ops;
use crate::twisted::one_minus;

/// The quotient complex and its presentations.
#[derive(Clone, Debug)]
pub struct LambdaComplex {
    pub index: Vec<TensorBasisIndex>,
    pub quotients: Vec<QuotientPresentation>,
    pub complex: ChainComplexQ,
    pub coinvariants: bool,
}

pub fn lambda_index(a: &Algebra, g: &FiniteGroupAction, n: usize) -> TensorBasisIndex {
    TensorBasisIndex::full(g.order(), a.dim(), 1, n + 1)
}

/// `t(g / a) = (-1)^n (g / g^{-1}(a_n), a_0, …, a_{n-1})` on degree `n`.
pub fn lambda_t(a: &Algebra, g: &FiniteGroupAction, n: usize) -> SparseMatrix {
    let ix = lambda_index(a, g, n);
    ops::cyclic_t(&ix, &ix, g.actions(), |gs| g.inverse(gs[0]))
}

/// `b` twisted by `g^{-1}` on the `g` block, degree `n → n - 1`.
pub fn lambda_b(a: &Algebra, g: &FiniteGroupAction, n: usize) -> SparseMatrix {
    ops::hochschild_b(
        a,
        &lambda_index(a, g, n),
        &lambda_index(a, g, n - 1),
        g.actions(),
        |gs| g.inverse(gs[0]),
    )
}

/// Quotient by `(1 - t)`, and also by the group action when `coinvariants` is set.
pub fn lambda_complex(
    a: &Algebra,
    g: &FiniteGroupAction,
    n_internal: usize,
    coinvariants: bool,
) -> Result<LambdaComplex> {
    let index: Vec<TensorBasisIndex> = (0..=n_internal).map(|n| lambda_index(a, g, n)).collect();
    let quotients: Vec<QuotientPresentation> = (0..=n_internal)
        .into_par_iter()
        .map(|n| {
            let mut rels = one_minus(&lambda_t(a, g, n));
            if coinvariants {
                rels = rels.hstack(&coinvariant_relations(&index[n], g));
            }
            quotient_by(index[n].len(), &rels)
        })
        .collect();
    let diffs: Vec<SparseMatrix> = (1..=n_internal).into_par_iter().map(|n| lambda_b(a, g, n)).collect();
    let full = ChainComplexQ::new(index.iter().map(|i| i.len()).collect(), diffs, "tensor complex")?;
    let context = if coinvariants {
        "cyclic quotient with group coinvariants"
    } else {
        "cyclic quotient"
    };
    let complex = quotient_complex(&full, &quotients, context)?;
    Ok(LambdaComplex { index, quotients, complex, coinvariants })
}

pub fn connes_lambda_complex(
    a: &Algebra,
    g: &FiniteGroupAction,
    max_degree: usize,
    coinvariants: bool,
) -> Result<HomologyResult> {
    Ok(homology(&lambda_complex(a, g, max_degree + 1, coinvariants)?.complex))
}
