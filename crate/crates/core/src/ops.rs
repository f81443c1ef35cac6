//! Matrices of the tensor-level operators shared by the twisted and crossed complexes.
//!
//! Every builder keeps the group slots of a basis tensor fixed and acts on the
//! algebra slots; `twist_of(groups)` selects which automorphism in `maps` plays
//! the role of the twist for that tensor.

use num_traits::One;

use crate::algebra::{Algebra, AlgebraMap, TensorBasisIndex};
use crate::linalg::{complex::sign, Rational, SparseMatrix, SparseVec};

fn units(d: usize) -> Vec<SparseVec> {
    (0..d).map(SparseVec::unit).collect()
}

/// `(groups / a_0, …, a_q) ↦ (groups / t(a_0), …, t(a_q))`.
pub fn twist<F>(src: &TensorBasisIndex, dst: &TensorBasisIndex, maps: &[AlgebraMap], twist_of: F) -> SparseMatrix
where
    F: Fn(&[usize]) -> usize + Sync,
{
    let one = Rational::one();
    src.build_map(dst.len(), |groups, slots, out| {
        let t = &maps[twist_of(groups)];
        let vecs: Vec<&SparseVec> = slots.iter().map(|&i| t.image(i)).collect();
        dst.accumulate(groups, &vecs, &one, out);
    })
}

/// Twisted Hochschild boundary `Σ_{i<n} (-1)^i d_i + (-1)^n d_n` with
/// `d_i` multiplying slots `i, i+1` and `d_n(a) = (t(a_n) a_0, a_1, …, a_{n-1})`.
pub fn hochschild_b<F>(
    a: &Algebra,
    src: &TensorBasisIndex,
    dst: &TensorBasisIndex,
    maps: &[AlgebraMap],
    twist_of: F,
) -> SparseMatrix
where
    F: Fn(&[usize]) -> usize + Sync,
{
    let e = units(a.dim());
    src.build_map(dst.len(), |groups, slots, out| {
        let n = slots.len() - 1;
        for i in 0..n {
            let mut vecs: Vec<&SparseVec> = Vec::with_capacity(n);
            vecs.extend(slots[..i].iter().map(|&k| &e[k]));
            vecs.push(a.mul_basis(slots[i], slots[i + 1]));
            vecs.extend(slots[i + 2..].iter().map(|&k| &e[k]));
            dst.accumulate(groups, &vecs, &sign(i), out);
        }
        let t = &maps[twist_of(groups)];
        let wrapped = a.mul(t.image(slots[n]), &e[slots[0]]);
        let mut vecs: Vec<&SparseVec> = Vec::with_capacity(n);
        vecs.push(&wrapped);
        vecs.extend(slots[1..n].iter().map(|&k| &e[k]));
        dst.accumulate(groups, &vecs, &sign(n), out);
    })
}

/// Normalized twisted Connes operator
/// `Σ_{i=0}^n (-1)^{ni} (1, t(a_i), …, t(a_n), a_0, …, a_{i-1})`.
pub fn connes_b<F>(
    a: &Algebra,
    src: &TensorBasisIndex,
    dst: &TensorBasisIndex,
    maps: &[AlgebraMap],
    twist_of: F,
) -> SparseMatrix
where
    F: Fn(&[usize]) -> usize + Sync,
{
    let e = units(a.dim());
    src.build_map(dst.len(), |groups, slots, out| {
        let n = slots.len() - 1;
        let t = &maps[twist_of(groups)];
        for i in 0..=n {
            let mut vecs: Vec<&SparseVec> = Vec::with_capacity(n + 2);
            vecs.push(&e[0]);
            vecs.extend(slots[i..].iter().map(|&k| t.image(k)));
            vecs.extend(slots[..i].iter().map(|&k| &e[k]));
            dst.accumulate(groups, &vecs, &sign(n * i), out);
        }
    })
}

/// Signed cyclic operator
/// `t(groups / a) = (-1)^n (groups / s(a_n), a_0, …, a_{n-1})`.
pub fn cyclic_t<F>(src: &TensorBasisIndex, dst: &TensorBasisIndex, maps: &[AlgebraMap], twist_of: F) -> SparseMatrix
where
    F: Fn(&[usize]) -> usize + Sync,
{
    let d = src.algebra_dim();
    let e = units(d);
    src.build_map(dst.len(), |groups, slots, out| {
        let n = slots.len() - 1;
        let s = &maps[twist_of(groups)];
        let mut vecs: Vec<&SparseVec> = Vec::with_capacity(n + 1);
        vecs.push(s.image(slots[n]));
        vecs.extend(slots[..n].iter().map(|&k| &e[k]));
        dst.accumulate(groups, &vecs, &sign(n), out);
    })
}

/// Twisted Connes operator `s N` on normalized chains:
/// `Σ_{j=1}^{n+1} (-1)^{nj} (1, t(a_j), …, t(a_n), a_0, …, a_{j-1})`.
///
/// It differs from [`connes_b`] by `s (1 - T_t)` where `s(a) = (1, a)`.
pub fn connes_b_cyclic<F>(
    a: &Algebra,
    src: &TensorBasisIndex,
    dst: &TensorBasisIndex,
    maps: &[AlgebraMap],
    twist_of: F,
) -> SparseMatrix
where
    F: Fn(&[usize]) -> usize + Sync,
{
    let e = units(a.dim());
    src.build_map(dst.len(), |groups, slots, out| {
        let n = slots.len() - 1;
        let t = &maps[twist_of(groups)];
        for j in 1..=n + 1 {
            let mut vecs: Vec<&SparseVec> = Vec::with_capacity(n + 2);
            vecs.push(&e[0]);
            vecs.extend(slots[j..].iter().map(|&k| t.image(k)));
            vecs.extend(slots[..j].iter().map(|&k| &e[k]));
            dst.accumulate(groups, &vecs, &sign(n * j), out);
        }
    })
}
