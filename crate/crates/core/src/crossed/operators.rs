//! Operators on the normalized modules `k[G^{p+1}] ⊗ A ⊗ Ā^{⊗q}`.

use num_traits::One;

use crate::algebra::{require_unit_first, Algebra, FiniteGroupAction, TensorBasisIndex};
use crate::error::Result;
use crate::linalg::{complex::sign, Rational, SparseMatrix, SparseVec};
use crate::ops;

/// Basis index of bidegree `(p, q)`.
pub fn gj_index(a: &Algebra, g: &FiniteGroupAction, p: usize, q: usize) -> TensorBasisIndex {
    TensorBasisIndex::normalized(g.order(), a.dim(), p + 1, q + 1)
}

/// Operator builder bound to one algebra and group action.
#[derive(Clone, Copy)]
pub struct GjOperators<'a> {
    pub algebra: &'a Algebra,
    pub group: &'a FiniteGroupAction,
}

impl<'a> GjOperators<'a> {
    pub fn new(algebra: &'a Algebra, group: &'a FiniteGroupAction) -> Result<Self> {
        require_unit_first(algebra)?;
        Ok(GjOperators { algebra, group })
    }

    pub fn index(&self, p: usize, q: usize) -> TensorBasisIndex {
        gj_index(self.algebra, self.group, p, q)
    }

    fn product(&self) -> impl Fn(&[usize]) -> usize + Sync + '_ {
        move |gs: &[usize]| self.group.product(gs)
    }

    fn inverse_product(&self) -> impl Fn(&[usize]) -> usize + Sync + '_ {
        move |gs: &[usize]| self.group.inverse(self.group.product(gs))
    }

    /// `T(g_0..g_p / a) = (g_0..g_p / g(a_0), …, g(a_q))`, `g = g_0⋯g_p`.
    pub fn t(&self, p: usize, q: usize) -> SparseMatrix {
        let ix = self.index(p, q);
        ops::twist(&ix, &ix, self.group.actions(), self.product())
    }

    /// `b` twisted by `(g_0⋯g_p)^{-1}`, `(p, q) → (p, q-1)`.
    pub fn b(&self, p: usize, q: usize) -> SparseMatrix {
        assert!(q >= 1);
        ops::hochschild_b(
            self.algebra,
            &self.index(p, q),
            &self.index(p, q - 1),
            self.group.actions(),
            self.inverse_product(),
        )
    }

    /// The normalized operator `Σ_i (-1)^{qi} (1, h(a_i), …, h(a_q), a_0, …, a_{i-1})`
    /// with `h = (g_0⋯g_p)^{-1}`, `(p, q) → (p, q+1)`.
    pub fn b_connes_raw(&self, p: usize, q: usize) -> SparseMatrix {
        ops::connes_b(
            self.algebra,
            &self.index(p, q),
            &self.index(p, q + 1),
            self.group.actions(),
            self.inverse_product(),
        )
    }

    /// Horizontal operator `-T ∘ sN_h`, `(p, q) → (p, q+1)`; satisfies `bB + Bb = 1 - T`
    /// and agrees with `-b_connes_raw` modulo `(1 - T)`.
    pub fn big_b(&self, p: usize, q: usize) -> SparseMatrix {
        let sn = ops::connes_b_cyclic(
            self.algebra,
            &self.index(p, q),
            &self.index(p, q + 1),
            self.group.actions(),
            self.inverse_product(),
        );
        self.t(p, q + 1).mul(&sn).neg()
    }

    /// Group-direction boundary, `(p, q) → (p-1, q)`, stored with the sign `(-1)^q` so
    /// that it anticommutes with `b` and `B`; the 0-row map when `p = 0`.
    pub fn bbar(&self, p: usize, q: usize) -> SparseMatrix {
        let src = self.index(p, q);
        if p == 0 {
            return SparseMatrix::zeros(0, src.len());
        }
        let dst = self.index(p - 1, q);
        let g = self.group;
        let outer = sign(q);
        src.build_map(dst.len(), |groups, slots, out| {
            let units: Vec<SparseVec> = slots.iter().map(|&k| SparseVec::unit(k)).collect();
            let plain: Vec<&SparseVec> = units.iter().collect();
            let mut merged = Vec::with_capacity(p);
            for i in 0..p {
                merged.clear();
                merged.extend_from_slice(&groups[..i]);
                merged.push(g.mul(groups[i], groups[i + 1]));
                merged.extend_from_slice(&groups[i + 2..]);
                dst.accumulate(&merged, &plain, &(&outer * sign(i)), out);
            }
            let last = groups[p];
            merged.clear();
            merged.push(g.mul(last, groups[0]));
            merged.extend_from_slice(&groups[1..p]);
            let moved: Vec<&SparseVec> = slots.iter().map(|&k| g.action(last).image(k)).collect();
            dst.accumulate(&merged, &moved, &(&outer * sign(p)), out);
        })
    }

    /// `B̄(g_0..g_p / a) = Σ_i (-1)^{ip} (e, g_{p-i+1}, …, g_p, g_0, …, g_{p-i} / h_i(a))`
    /// with `h_i = g_{p-i+1}⋯g_p`, `(p, q) → (p+1, q)`.
    pub fn bbar_connes(&self, p: usize, q: usize) -> SparseMatrix {
        let src = self.index(p, q);
        let dst = self.index(p + 1, q);
        let g = self.group;
        src.build_map(dst.len(), |groups, slots, out| {
            let mut moved_groups = Vec::with_capacity(p + 2);
            for i in 0..=p {
                moved_groups.clear();
                moved_groups.push(g.identity());
                moved_groups.extend_from_slice(&groups[p + 1 - i..]);
                moved_groups.extend_from_slice(&groups[..p + 1 - i]);
                let h = g.product(&groups[p + 1 - i..]);
                let vecs: Vec<&SparseVec> = slots.iter().map(|&k| g.action(h).image(k)).collect();
                dst.accumulate(&moved_groups, &vecs, &sign(i * p), out);
            }
        })
    }

    /// `β(g_0..g_p / a) = (g_1..g_p, g_0⋯g_p / a)`; a permutation matrix.
    pub fn beta(&self, p: usize, q: usize) -> SparseMatrix {
        let ix = self.index(p, q);
        let g = self.group;
        let one = Rational::one();
        ix.build_map(ix.len(), |groups, slots, out| {
            let mut moved: Vec<usize> = groups[1..].to_vec();
            moved.push(g.product(groups));
            let idx = ix.encode(&moved, slots).expect("slots are already normalized");
            out.push((idx, one.clone()));
        })
    }

    /// Group action `h·(g / a) = (h g h^{-1} / h(a_0), …, h(a_q))` on `(0, q)`.
    pub fn conjugation_action(&self, h: usize, q: usize) -> SparseMatrix {
        conjugation_on(&self.index(0, q), self.group, h)
    }
}

/// `h·(g / a) = (h g h^{-1} / h(a_0), …)` on any index with one group slot.
pub fn conjugation_on(ix: &TensorBasisIndex, g: &FiniteGroupAction, h: usize) -> SparseMatrix {
    let one = Rational::one();
    ix.build_map(ix.len(), |groups, slots, out| {
        let vecs: Vec<&SparseVec> = slots.iter().map(|&k| g.action(h).image(k)).collect();
        ix.accumulate(&[g.conjugate(h, groups[0])], &vecs, &one, out);
    })
}
