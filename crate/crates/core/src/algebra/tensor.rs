//! Lexicographic enumeration of `k[G^{p+1}] ⊗ A^{⊗(q+1)}` with optionally reduced slots.

use super::{Algebra, FiniteGroupAction};
use crate::error::{Error, Result};
use rayon::prelude::*;

use crate::linalg::{Rational, SparseMatrix, SparseVec};

/// Mixed-radix index over group slots then algebra slots, most significant first.
///
/// A reduced algebra slot ranges over basis indices `1..d` (the span of the
/// non-unit basis vectors, standing for `Ā = A/k·1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorBasisIndex {
    r: usize,
    d: usize,
    group_slots: usize,
    reduced: Vec<bool>,
    len: usize,
}

impl TensorBasisIndex {
    pub fn new(r: usize, d: usize, group_slots: usize, reduced: Vec<bool>) -> Self {
        let mut len = r.pow(group_slots as u32);
        for &red in &reduced {
            len *= if red { d - 1 } else { d };
        }
        TensorBasisIndex { r, d, group_slots, reduced, len }
    }

    /// `A ⊗ Ā^{⊗(slots-1)}` behind `group_slots` group factors.
    pub fn normalized(r: usize, d: usize, group_slots: usize, slots: usize) -> Self {
        Self::new(r, d, group_slots, (0..slots).map(|k| k > 0).collect())
    }

    pub fn full(r: usize, d: usize, group_slots: usize, slots: usize) -> Self {
        Self::new(r, d, group_slots, vec![false; slots])
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn group_slots(&self) -> usize {
        self.group_slots
    }

    pub fn algebra_slots(&self) -> usize {
        self.reduced.len()
    }

    pub fn reduced_flags(&self) -> &[bool] {
        &self.reduced
    }

    pub fn group_order(&self) -> usize {
        self.r
    }

    pub fn algebra_dim(&self) -> usize {
        self.d
    }

    /// Index of a pure tensor; `None` if a reduced slot holds the unit.
    pub fn encode(&self, groups: &[usize], slots: &[usize]) -> Option<usize> {
        debug_assert_eq!(groups.len(), self.group_slots);
        debug_assert_eq!(slots.len(), self.reduced.len());
        let mut idx = 0;
        for &g in groups {
            idx = idx * self.r + g;
        }
        for (&i, &red) in slots.iter().zip(&self.reduced) {
            if red {
                if i == 0 {
                    return None;
                }
                idx = idx * (self.d - 1) + (i - 1);
            } else {
                idx = idx * self.d + i;
            }
        }
        Some(idx)
    }

    pub fn decode(&self, mut idx: usize) -> (Vec<usize>, Vec<usize>) {
        let mut slots = vec![0; self.reduced.len()];
        for k in (0..self.reduced.len()).rev() {
            if self.reduced[k] {
                slots[k] = idx % (self.d - 1) + 1;
                idx /= self.d - 1;
            } else {
                slots[k] = idx % self.d;
                idx /= self.d;
            }
        }
        let mut groups = vec![0; self.group_slots];
        for k in (0..self.group_slots).rev() {
            groups[k] = idx % self.r;
            idx /= self.r;
        }
        (groups, slots)
    }

    /// Adds `coeff · (groups / v_0 ⊗ … ⊗ v_q)` to `out`, dropping terms that put the
    /// unit in a reduced slot.
    pub fn accumulate(
        &self,
        groups: &[usize],
        slot_vecs: &[&SparseVec],
        coeff: &Rational,
        out: &mut Vec<(usize, Rational)>,
    ) {
        let mut g_idx = 0;
        for &g in groups {
            g_idx = g_idx * self.r + g;
        }
        self.expand(0, g_idx, slot_vecs, coeff.clone(), out);
    }

    fn expand(
        &self,
        k: usize,
        idx: usize,
        slot_vecs: &[&SparseVec],
        coeff: Rational,
        out: &mut Vec<(usize, Rational)>,
    ) {
        if k == slot_vecs.len() {
            out.push((idx, coeff));
            return;
        }
        for (i, c) in slot_vecs[k].iter() {
            let next = if self.reduced[k] {
                if *i == 0 {
                    continue;
                }
                idx * (self.d - 1) + (i - 1)
            } else {
                idx * self.d + i
            };
            self.expand(k + 1, next, slot_vecs, &coeff * c, out);
        }
    }

    /// Matrix with `nrows` rows whose column `j` is produced by `f(groups, slots, out)`
    /// for the decoded basis tensor `j`; columns are built in parallel.
    pub fn build_map<F>(&self, nrows: usize, f: F) -> SparseMatrix
    where
        F: Fn(&[usize], &[usize], &mut Vec<(usize, Rational)>) + Sync,
    {
        let cols: Vec<SparseVec> = (0..self.len)
            .into_par_iter()
            .map(|j| {
                let (groups, slots) = self.decode(j);
                let mut out = Vec::new();
                f(&groups, &slots, &mut out);
                SparseVec::from_pairs(out)
            })
            .collect();
        SparseMatrix::from_columns(nrows, cols)
    }

    /// Basis label such as `(g, e / x ⊗ 1)`.
    pub fn label(&self, idx: usize, a: &Algebra, g: Option<&FiniteGroupAction>) -> String {
        let (groups, slots) = self.decode(idx);
        let s = slots
            .iter()
            .map(|&i| a.basis_names()[i].as_str())
            .collect::<Vec<_>>()
            .join(" ⊗ ");
        match g {
            Some(g) if !groups.is_empty() => {
                let gs = groups
                    .iter()
                    .map(|&x| g.element_names()[x].as_str())
                    .collect::<Vec<_>>()
                    .join(", ");
                format!("({gs} / {s})")
            }
            _ => format!("({s})"),
        }
    }
}

/// Index for `k[G^{p+1}] ⊗ A^{⊗(q+1)}`; reduction requires the unit to be `e_0`.
pub fn tensor_index(
    g: &FiniteGroupAction,
    a: &Algebra,
    p: usize,
    q: usize,
    reduced: Vec<bool>,
) -> Result<TensorBasisIndex> {
    if reduced.len() != q + 1 {
        return Err(Error::Shape(format!("{} reduced flags for {} slots", reduced.len(), q + 1)));
    }
    if reduced.iter().any(|&x| x) && !a.unit_is_first_basis_vector() {
        return Err(Error::ReducedBasis {
            detail: "the algebra unit is not basis vector 0".into(),
        });
    }
    Ok(TensorBasisIndex::new(g.order(), a.dim(), p + 1, reduced))
}

/// Fails unless the algebra unit is basis vector 0.
pub fn require_unit_first(a: &Algebra) -> Result<()> {
    if a.unit_is_first_basis_vector() {
        Ok(())
    } else {
        Err(Error::ReducedBasis { detail: "the algebra unit is not basis vector 0".into() })
    }
}
