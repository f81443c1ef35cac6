//! Twisted Hochschild and cyclic homology of an algebra with respect to one automorphism.

use rayon::prelude::*;

use crate::algebra::{require_unit_first, Algebra, AlgebraMap, TensorBasisIndex};
use crate::error::Result;
use crate::linalg::{
    homology, homology_dims, quotient_by, ChainComplexQ, HomologyResult, MixedComplex,
    QuotientPresentation, SparseMatrix,
};
use crate::ops;

/// `A^{⊗(n+1)}`.
pub fn full_index(a: &Algebra, n: usize) -> TensorBasisIndex {
    TensorBasisIndex::full(1, a.dim(), 0, n + 1)
}

/// `A ⊗ Ā^{⊗n}`.
pub fn normalized_index(a: &Algebra, n: usize) -> TensorBasisIndex {
    TensorBasisIndex::normalized(1, a.dim(), 0, n + 1)
}

fn one_map(g: &AlgebraMap) -> [AlgebraMap; 1] {
    [g.clone()]
}

/// `T_g = g^{⊗(n+1)}` on `A^{⊗(n+1)}`.
pub fn twist_matrix(a: &Algebra, g: &AlgebraMap, n: usize) -> SparseMatrix {
    let idx = full_index(a, n);
    ops::twist(&idx, &idx, &one_map(g), |_| 0)
}

/// Twisted `b: A^{⊗(n+1)} → A^{⊗n}`, `n ≥ 1`.
pub fn twisted_b(a: &Algebra, g: &AlgebraMap, n: usize) -> SparseMatrix {
    assert!(n >= 1);
    ops::hochschild_b(a, &full_index(a, n), &full_index(a, n - 1), &one_map(g), |_| 0)
}

/// Twisted `b` induced on the normalized modules `A ⊗ Ā^{⊗n} → A ⊗ Ā^{⊗(n-1)}`.
pub fn twisted_b_normalized(a: &Algebra, g: &AlgebraMap, n: usize) -> Result<SparseMatrix> {
    assert!(n >= 1);
    require_unit_first(a)?;
    Ok(ops::hochschild_b(
        a,
        &normalized_index(a, n),
        &normalized_index(a, n - 1),
        &one_map(g),
        |_| 0,
    ))
}

/// Normalized twisted `B: A ⊗ Ā^{⊗n} → A ⊗ Ā^{⊗(n+1)}`.
#[allow(non_snake_case)]
pub fn twisted_B(a: &Algebra, g: &AlgebraMap, n: usize) -> Result<SparseMatrix> {
    require_unit_first(a)?;
    Ok(ops::connes_b(
        a,
        &normalized_index(a, n),
        &normalized_index(a, n + 1),
        &one_map(g),
        |_| 0,
    ))
}

/// `T_g`, `b` and `B` on the normalized modules of degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct TwistedOperatorSet {
    /// `t[n]` on degree `n`.
    pub t: Vec<SparseMatrix>,
    /// `b[n]` from degree `n` to `n - 1`; `b[0]` is the 0-row map.
    pub b: Vec<SparseMatrix>,
    /// `big_b[n]` from degree `n` to `n + 1`, for `n < top`.
    pub big_b: Vec<SparseMatrix>,
}

pub fn twisted_operators(a: &Algebra, g: &AlgebraMap, top: usize) -> Result<TwistedOperatorSet> {
    require_unit_first(a)?;
    let maps = one_map(g);
    let idx: Vec<TensorBasisIndex> = (0..=top + 1).map(|n| normalized_index(a, n)).collect();
    let t = (0..=top).into_par_iter().map(|n| ops::twist(&idx[n], &idx[n], &maps, |_| 0)).collect();
    let b = (0..=top)
        .into_par_iter()
        .map(|n| {
            if n == 0 {
                SparseMatrix::zeros(0, idx[0].len())
            } else {
                ops::hochschild_b(a, &idx[n], &idx[n - 1], &maps, |_| 0)
            }
        })
        .collect();
    let big_b = (0..top)
        .into_par_iter()
        .map(|n| ops::connes_b(a, &idx[n], &idx[n + 1], &maps, |_| 0))
        .collect();
    Ok(TwistedOperatorSet { t, b, big_b })
}

/// The quotient mixed complex `(A ⊗ Ā^{⊗n} / (1 - T_g), b, B)` through `n_internal`.
#[derive(Clone, Debug)]
pub struct HkBicomplex {
    pub n_internal: usize,
    pub quotients: Vec<QuotientPresentation>,
    pub mixed: MixedComplex,
}

impl HkBicomplex {
    pub fn total(&self) -> Result<ChainComplexQ> {
        self.mixed.total(self.n_internal, "twisted cyclic total complex")
    }

    pub fn hochschild(&self) -> Result<ChainComplexQ> {
        self.mixed.hochschild("twisted Hochschild complex")
    }
}

/// Relations `(1 - T)` for each operator matrix `t`.
pub(crate) fn one_minus(t: &SparseMatrix) -> SparseMatrix {
    SparseMatrix::identity(t.ncols()).sub(t)
}

pub fn hk_bicomplex(a: &Algebra, g: &AlgebraMap, n: usize) -> Result<HkBicomplex> {
    twisted_quotient_complex(a, g, std::slice::from_ref(g), n + 1, "twisted mixed complex modulo (1 - T_g)")
}

/// Normalized `(b, B)` twisted by `twist`, on the quotient by `(1 - T_h)` for every `h`
/// in `acting`, through degree `n_internal`.
pub fn twisted_quotient_complex(
    a: &Algebra,
    twist: &AlgebraMap,
    acting: &[AlgebraMap],
    n_internal: usize,
    context: &str,
) -> Result<HkBicomplex> {
    let ops = twisted_operators(a, twist, n_internal)?;
    let mixed = MixedComplex::new_unchecked(
        ops.t.iter().map(|t| t.ncols()).collect(),
        ops.b[1..].to_vec(),
        ops.big_b,
    );
    let quotients: Vec<QuotientPresentation> = (0..=n_internal)
        .into_par_iter()
        .map(|n| {
            let idx = normalized_index(a, n);
            let rels: Vec<SparseMatrix> = acting
                .iter()
                .map(|h| one_minus(&ops::twist(&idx, &idx, std::slice::from_ref(h), |_| 0)))
                .collect();
            let all = rels.iter().fold(SparseMatrix::zeros(idx.len(), 0), |acc, m| acc.hstack(m));
            quotient_by(idx.len(), &all)
        })
        .collect();
    let mixed = mixed.quotient(&quotients, context)?;
    Ok(HkBicomplex { n_internal, quotients, mixed })
}

/// `HH^g_n(A)` for `n ≤ max_degree`.
pub fn twisted_hochschild(a: &Algebra, g: &AlgebraMap, max_degree: usize) -> Result<HomologyResult> {
    Ok(homology(&hk_bicomplex(a, g, max_degree)?.hochschild()?))
}

/// `HC^g_n(A)` for `n ≤ max_degree`, with bases.
pub fn twisted_cyclic(a: &Algebra, g: &AlgebraMap, max_degree: usize) -> Result<HomologyResult> {
    Ok(homology(&hk_bicomplex(a, g, max_degree)?.total()?))
}

/// `dim HC^g_n(A)` for `n ≤ max_degree`.
pub fn twisted_cyclic_dims(a: &Algebra, g: &AlgebraMap, max_degree: usize) -> Result<Vec<usize>> {
    Ok(homology_dims(&hk_bicomplex(a, g, max_degree)?.total()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{ground_field, sign_flip, truncated_polynomial};
    use crate::linalg::{q, SparseVec};

    fn e(ix: &TensorBasisIndex, slots: &[usize]) -> SparseVec {
        SparseVec::unit(ix.encode(&[], slots).unwrap())
    }

    #[test]
    fn twist_examples() {
        let a = truncated_polynomial(2);
        let id = AlgebraMap::identity(2);
        assert_eq!(twist_matrix(&a, &id, 2), SparseMatrix::identity(8));
        let s = sign_flip(2);
        let t = twist_matrix(&a, &s, 1);
        let ix = full_index(&a, 1);
        assert_eq!(t.apply(&e(&ix, &[1, 1])), e(&ix, &[1, 1]));
        assert_eq!(t.apply(&e(&ix, &[0, 1])), e(&ix, &[0, 1]).scale(&q(-1)));
    }

    #[test]
    fn b_examples() {
        let a = truncated_polynomial(2);
        assert!(twisted_b(&a, &AlgebraMap::identity(2), 1).is_zero());
        let b = twisted_b(&a, &sign_flip(2), 1);
        let ix = full_index(&a, 1);
        let x = SparseVec::unit(1);
        assert_eq!(b.apply(&e(&ix, &[0, 1])), x.scale(&q(2)));
        assert!(b.apply(&e(&ix, &[1, 1])).is_zero());
    }

    #[test]
    #[allow(non_snake_case)]
    fn B_examples() {
        let a = truncated_polynomial(2);
        let s = sign_flip(2);
        let big_b = twisted_B(&a, &s, 0).unwrap();
        assert!(big_b.apply(&SparseVec::unit(0)).is_zero());
        let ix = normalized_index(&a, 1);
        assert_eq!(big_b.apply(&SparseVec::unit(1)), e(&ix, &[0, 1]).scale(&q(-1)));
        let plain = twisted_B(&a, &AlgebraMap::identity(2), 0).unwrap();
        assert_eq!(plain.apply(&SparseVec::unit(1)), e(&ix, &[0, 1]));
    }

    #[test]
    fn operator_identities_hold() {
        let a = truncated_polynomial(3);
        let s = sign_flip(3);
        let ops = twisted_operators(&a, &s, 4).unwrap();
        for n in 1..4 {
            assert!(ops.b[n - 1].mul(&ops.b[n]).is_zero(), "b∘b in degree {n}");
        }
        for n in 0..3 {
            if n >= 1 {
                assert_eq!(ops.t[n - 1].mul(&ops.b[n]), ops.b[n].mul(&ops.t[n]), "[T,b] in degree {n}");
            }
            assert_eq!(ops.t[n + 1].mul(&ops.big_b[n]), ops.big_b[n].mul(&ops.t[n]), "[T,B] in degree {n}");
        }
        // the descended operators pass the mixed-complex checks
        assert!(hk_bicomplex(&a, &s, 3).unwrap().mixed.check("descended").is_ok());
    }

    #[test]
    fn quotient_examples() {
        let a = truncated_polynomial(2);
        let hk = hk_bicomplex(&a, &sign_flip(2), 3).unwrap();
        assert_eq!(hk.quotients[1].dim(), 1);
        let f = ground_field();
        let hk = hk_bicomplex(&f.algebra, &AlgebraMap::identity(1), 3).unwrap();
        assert_eq!(hk.quotients[0].dim(), 1);
        assert!(hk.quotients[1..].iter().all(|qp| qp.dim() == 0));
        let plain = hk_bicomplex(&a, &AlgebraMap::identity(2), 2).unwrap();
        assert_eq!(plain.quotients[2].dim(), normalized_index(&a, 2).len());
    }

    #[test]
    fn inverse_twist_gives_same_relations() {
        let a = crate::fixtures::diag3();
        let g = crate::fixtures::diag3_permutation([2, 3, 1]);
        let gi = crate::fixtures::diag3_permutation([3, 1, 2]);
        for n in 0..3 {
            let ix = normalized_index(&a, n);
            let r1 = one_minus(&ops::twist(&ix, &ix, &[g.clone()], |_| 0));
            let r2 = one_minus(&ops::twist(&ix, &ix, &[gi.clone()], |_| 0));
            assert_eq!(quotient_by(ix.len(), &r1).relation_basis(), quotient_by(ix.len(), &r2).relation_basis());
        }
    }

    #[test]
    fn homology_examples() {
        let f = ground_field();
        let id = AlgebraMap::identity(1);
        assert_eq!(twisted_hochschild(&f.algebra, &id, 3).unwrap().dims, vec![1, 0, 0, 0]);
        assert_eq!(twisted_cyclic_dims(&f.algebra, &id, 4).unwrap(), vec![1, 0, 1, 0, 1]);
        let a = truncated_polynomial(2);
        assert_eq!(twisted_hochschild(&a, &sign_flip(2), 1).unwrap().dims[0], 1);
        assert_eq!(twisted_hochschild(&a, &AlgebraMap::identity(2), 1).unwrap().dims[0], 2);
    }
}
