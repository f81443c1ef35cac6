//! Quotients of coordinate spaces by subspaces, and maps descended to them.

use num_traits::One;

use super::echelon::rref;
use super::sparse::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// `ambient / span(relations)`, presented with a basis of standard vectors.
///
/// Quotient coordinate `k` is the class of ambient basis vector `kept[k]`; the kept
/// indices are exactly the non-pivot rows of the reduced relation matrix.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    ambient_dim: usize,
    relation_basis: SparseMatrix,
    kept: Vec<usize>,
    section: SparseMatrix,
    projection: SparseMatrix,
}

impl QuotientPresentation {
    /// The trivial quotient (no relations).
    pub fn identity(n: usize) -> Self {
        quotient_by(n, &SparseMatrix::zeros(n, 0))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    pub fn relation_basis(&self) -> &SparseMatrix {
        &self.relation_basis
    }

    /// Ambient index represented by quotient coordinate `k`.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    pub fn section(&self) -> &SparseMatrix {
        &self.section
    }

    pub fn projection(&self) -> &SparseMatrix {
        &self.projection
    }

    pub fn project(&self, v: &SparseVec) -> SparseVec {
        self.projection.apply(v)
    }

    pub fn lift(&self, v: &SparseVec) -> SparseVec {
        self.section.apply(v)
    }

    /// True if `v` lies in the span of the relations.
    pub fn kills(&self, v: &SparseVec) -> bool {
        self.project(v).is_zero()
    }
}

/// Deterministic presentation of `Q^ambient_dim / span(columns of relations)`.
pub fn quotient_by(ambient_dim: usize, relations: &SparseMatrix) -> QuotientPresentation {
    assert_eq!(relations.nrows(), ambient_dim, "relations must live in the ambient space");
    let r = rref(relations.columns().iter().cloned());
    let mut pivot_row = vec![None; ambient_dim];
    for (k, &p) in r.pivots.iter().enumerate() {
        pivot_row[p] = Some(k);
    }
    let kept: Vec<usize> = (0..ambient_dim).filter(|&i| pivot_row[i].is_none()).collect();
    let mut coord = vec![usize::MAX; ambient_dim];
    for (k, &i) in kept.iter().enumerate() {
        coord[i] = k;
    }
    let section = SparseMatrix::from_columns(
        ambient_dim,
        kept.iter().map(|&i| SparseVec::unit(i)).collect(),
    );
    // e_p ≡ e_p - row_p, which is supported on kept indices only
    let proj_cols: Vec<SparseVec> = (0..ambient_dim)
        .map(|i| match pivot_row[i] {
            None => SparseVec::unit(coord[i]),
            Some(k) => SparseVec::from_pairs(
                r.rows[k]
                    .iter()
                    .filter(|(j, _)| *j != i)
                    .map(|(j, v)| (coord[*j], -v.clone())),
            ),
        })
        .collect();
    QuotientPresentation {
        ambient_dim,
        relation_basis: SparseMatrix::from_columns(ambient_dim, r.rows),
        section,
        projection: SparseMatrix::from_columns(kept.len(), proj_cols),
        kept,
    }
}

/// The map induced by `f` from `src` to `dst`: `dst.projection ∘ f ∘ src.section`.
///
/// Fails unless `f` sends every relation of `src` into the relations of `dst`.
pub fn descend_map(
    f: &SparseMatrix,
    src: &QuotientPresentation,
    dst: &QuotientPresentation,
    context: &str,
) -> Result<SparseMatrix> {
    if f.ncols() != src.ambient_dim() || f.nrows() != dst.ambient_dim() {
        return Err(Error::Shape(format!(
            "{context}: map is {}x{}, quotients have ambient {} -> {}",
            f.nrows(),
            f.ncols(),
            src.ambient_dim(),
            dst.ambient_dim()
        )));
    }
    for (j, rel) in src.relation_basis().columns().iter().enumerate() {
        let img = dst.project(&f.apply(rel));
        if !img.is_zero() {
            return Err(not_descending(context, j, rel));
        }
    }
    Ok(dst.projection().mul(&f.mul(src.section())))
}

fn not_descending(context: &str, j: usize, rel: &SparseVec) -> Error {
    let lead = rel.lowest().unwrap_or_default();
    Error::WellDefinedness {
        context: context.to_string(),
        detail: format!("image of relation #{j} (leading ambient index {lead}) is not a relation"),
    }
}

pub fn is_identity(m: &SparseMatrix) -> bool {
    m.nrows() == m.ncols()
        && m.columns().iter().enumerate().all(|(j, c)| {
            c.nnz() == 1 && c.entries()[0].0 == j && c.entries()[0].1.is_one()
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    #[test]
    fn spec_examples() {
        let rel = SparseMatrix::from_dense(&[vec![q(1)], vec![q(-1)]]);
        let qp = quotient_by(2, &rel);
        assert_eq!(qp.dim(), 1);
        assert!(qp.kills(&SparseVec::from_pairs([(0, q(1)), (1, q(-1))])));

        let qp = quotient_by(3, &SparseMatrix::zeros(3, 0));
        assert_eq!(qp.dim(), 3);
        assert!(is_identity(qp.projection()));

        let qp = quotient_by(2, &SparseMatrix::identity(2));
        assert_eq!(qp.dim(), 0);
    }

    #[test]
    fn projection_section_is_identity() {
        let rel = SparseMatrix::from_dense(&[
            vec![q(1), q(0)],
            vec![q(2), q(1)],
            vec![q(0), q(3)],
            vec![q(5), q(0)],
        ]);
        let qp = quotient_by(4, &rel);
        assert_eq!(qp.dim(), 2);
        assert!(is_identity(&qp.projection().mul(qp.section())));
        assert!(qp.projection().mul(&rel).is_zero());
    }

    #[test]
    fn descend_identity_and_killing_map() {
        let rel = SparseMatrix::from_dense(&[vec![q(1)], vec![q(-1)]]);
        let qp = quotient_by(2, &rel);
        let id = descend_map(&SparseMatrix::identity(2), &qp, &qp, "id").unwrap();
        assert!(is_identity(&id));
        // 1 - T for the swap T: image is the relation itself
        let one_minus_t = SparseMatrix::from_dense(&[vec![q(1), q(-1)], vec![q(-1), q(1)]]);
        assert!(descend_map(&one_minus_t, &qp, &qp, "1-T").unwrap().is_zero());
        // a map that does not preserve the relation
        let bad = SparseMatrix::from_dense(&[vec![q(1), q(0)], vec![q(0), q(2)]]);
        assert!(matches!(
            descend_map(&bad, &qp, &qp, "bad"),
            Err(Error::WellDefinedness { .. })
        ));
    }
}
