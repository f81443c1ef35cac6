//! Chain complexes over Q, their homology, bicomplex totalization and mixed complexes.

use std::collections::HashMap;

use num_traits::One;
use rayon::prelude::*;

use super::echelon::{column_space_basis, kernel_basis, rank, SpanCoords};
use super::quotient::{descend_map, QuotientPresentation};
use super::rational::Rational;
use super::sparse::{offsets, SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// A bounded chain complex `C_top → … → C_0`. `diff(n)` maps degree `n` to `n - 1`.
#[derive(Clone, Debug)]
pub struct ChainComplexQ {
    dims: Vec<usize>,
    diffs: Vec<SparseMatrix>,
}

fn first_residual(m: &SparseMatrix) -> String {
    match m.first_nonzero() {
        Some((i, j, v)) => format!(
            "entry (row {i}, col {j}) = {}",
            super::rational::format_rational(&v)
        ),
        None => "zero".into(),
    }
}

impl ChainComplexQ {
    /// `diffs[k]` is the differential out of degree `k + 1`. Checks shapes and `d∘d = 0`.
    pub fn new(dims: Vec<usize>, diffs: Vec<SparseMatrix>, context: &str) -> Result<Self> {
        assert!(!dims.is_empty(), "a complex needs at least degree 0");
        assert_eq!(diffs.len() + 1, dims.len(), "one differential per positive degree");
        for (k, d) in diffs.iter().enumerate() {
            let n = k + 1;
            if d.ncols() != dims[n] || d.nrows() != dims[n - 1] {
                return Err(Error::Shape(format!(
                    "{context}: d_{n} is {}x{}, expected {}x{}",
                    d.nrows(),
                    d.ncols(),
                    dims[n - 1],
                    dims[n]
                )));
            }
        }
        let mut all = vec![SparseMatrix::zeros(0, dims[0])];
        all.extend(diffs);
        let c = ChainComplexQ { dims, diffs: all };
        c.check_square_zero(context)?;
        Ok(c)
    }

    fn check_square_zero(&self, context: &str) -> Result<()> {
        let bad = (2..=self.top())
            .into_par_iter()
            .map(|n| (n, self.diffs[n - 1].mul(&self.diffs[n])))
            .find_first(|(_, dd)| !dd.is_zero());
        match bad {
            Some((n, dd)) => Err(Error::Complex {
                context: context.to_string(),
                degree: n,
                detail: first_residual(&dd),
            }),
            None => Ok(()),
        }
    }

    /// Highest stored degree (`N_internal`).
    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, n: usize) -> usize {
        self.dims[n]
    }

    /// Differential out of degree `n`; for `n = 0` the 0-row zero map.
    pub fn diff(&self, n: usize) -> &SparseMatrix {
        &self.diffs[n]
    }

    /// Degrees `0..=upto`.
    pub fn truncate(&self, upto: usize) -> ChainComplexQ {
        ChainComplexQ {
            dims: self.dims[..=upto].to_vec(),
            diffs: self.diffs[..=upto].to_vec(),
        }
    }

    /// Applies the same basis permutation per degree; `perms[n][i]` is the new index of `e_i`.
    pub fn permuted(&self, perms: &[Vec<usize>]) -> ChainComplexQ {
        let diffs = (0..=self.top())
            .map(|n| {
                if n == 0 {
                    self.diffs[0].clone()
                } else {
                    self.diffs[n].conjugate_by_permutation(&perms[n - 1], &perms[n])
                }
            })
            .collect();
        ChainComplexQ {
            dims: self.dims.clone(),
            diffs,
        }
    }
}

/// Homology with explicit bases; degrees above `valid_through` are not computed.
#[derive(Clone, Debug)]
pub struct HomologyResult {
    pub dims: Vec<usize>,
    pub cycle_basis: Vec<SparseMatrix>,
    pub boundary_basis: Vec<SparseMatrix>,
    /// Cycles whose classes form a basis of homology.
    pub representatives: Vec<SparseMatrix>,
    pub valid_through: usize,
}

impl HomologyResult {
    /// Coordinates of a cycle's class in the representative basis.
    pub fn coordinates(&self) -> Vec<HomologyCoords> {
        (0..self.dims.len())
            .map(|n| HomologyCoords::new(&self.boundary_basis[n], &self.representatives[n]))
            .collect()
    }
}

/// Reduction of cycles modulo boundaries onto the representative basis.
#[derive(Clone, Debug)]
pub struct HomologyCoords {
    nb: usize,
    nreps: usize,
    span: SpanCoords,
}

impl HomologyCoords {
    pub fn new(boundaries: &SparseMatrix, reps: &SparseMatrix) -> Self {
        let mut gens: Vec<SparseVec> = boundaries.columns().to_vec();
        gens.extend(reps.columns().iter().cloned());
        HomologyCoords {
            nb: boundaries.ncols(),
            nreps: reps.ncols(),
            span: SpanCoords::new(&gens),
        }
    }

    /// Class of `z` in representative coordinates; `None` if `z` is not in cycles' span.
    pub fn class_of(&self, z: &SparseVec) -> Option<SparseVec> {
        let c = self.span.coordinates(z)?;
        Some(SparseVec::from_sorted(
            c.into_entries()
                .into_iter()
                .filter(|(i, _)| *i >= self.nb)
                .map(|(i, v)| (i - self.nb, v))
                .collect(),
        ))
    }

    pub fn is_boundary(&self, z: &SparseVec) -> bool {
        self.class_of(z).is_some_and(|c| c.is_zero())
    }

    pub fn dim(&self) -> usize {
        self.nreps
    }
}

/// Homology through degree `top - 1` with cycle, boundary and representative bases.
pub fn homology(c: &ChainComplexQ) -> HomologyResult {
    let top = c.top();
    let valid = top.saturating_sub(1);
    let degrees: Vec<usize> = if top == 0 { vec![] } else { (0..=valid).collect() };
    let per: Vec<(SparseMatrix, SparseMatrix, SparseMatrix)> = degrees
        .par_iter()
        .map(|&n| {
            let cycles = if n == 0 {
                SparseMatrix::identity(c.dim(0))
            } else {
                kernel_basis(c.diff(n))
            };
            let bounds = column_space_basis(c.diff(n + 1));
            let mut gens: Vec<SparseVec> = bounds.columns().to_vec();
            gens.extend(cycles.columns().iter().cloned());
            let span = SpanCoords::new(&gens);
            let dependent: std::collections::HashSet<usize> =
                span.dependent().iter().copied().collect();
            let reps: Vec<SparseVec> = (0..cycles.ncols())
                .filter(|j| !dependent.contains(&(bounds.ncols() + j)))
                .map(|j| cycles.col(j).clone())
                .collect();
            let reps = SparseMatrix::from_columns(c.dim(n), reps);
            (cycles, bounds, reps)
        })
        .collect();
    let mut out = HomologyResult {
        dims: Vec::new(),
        cycle_basis: Vec::new(),
        boundary_basis: Vec::new(),
        representatives: Vec::new(),
        valid_through: valid,
    };
    for (z, b, r) in per {
        out.dims.push(r.ncols());
        out.cycle_basis.push(z);
        out.boundary_basis.push(b);
        out.representatives.push(r);
    }
    out
}

/// Homology dimensions only (ranks, no bases), through degree `top - 1`.
pub fn homology_dims(c: &ChainComplexQ) -> Vec<usize> {
    let top = c.top();
    if top == 0 {
        return Vec::new();
    }
    let ranks: Vec<usize> = (0..=top).into_par_iter().map(|n| rank(c.diff(n))).collect();
    (0..top)
        .map(|n| c.dim(n) - ranks[n] - ranks[n + 1])
        .collect()
}

/// Matrices of the maps induced on homology by a chain map of degree `shift`.
///
/// `f[n]` maps source degree `n` to target degree `n + shift`. The chain-map identity
/// `d f = f d` is checked on every degree where both sides are defined; the returned
/// matrix for degree `n` has `dst.dims[n + shift]` rows and `src.dims[n]` columns.
pub fn induced_on_homology(
    f: &[SparseMatrix],
    src: &ChainComplexQ,
    dst: &ChainComplexQ,
    src_h: &HomologyResult,
    dst_h: &HomologyResult,
    shift: isize,
    context: &str,
) -> Result<Vec<SparseMatrix>> {
    let tgt = |n: usize| -> Option<usize> {
        let t = n as isize + shift;
        (t >= 0).then_some(t as usize)
    };
    for n in 1..f.len().min(src.top() + 1) {
        let Some(t) = tgt(n) else { continue };
        if t > dst.top() || t == 0 && dst.top() < 1 {
            continue;
        }
        if tgt(n - 1).is_none() {
            continue;
        }
        let lhs = dst.diff(t).mul(&f[n]);
        let rhs = f[n - 1].mul(src.diff(n));
        let diff = lhs.sub(&rhs);
        if !diff.is_zero() {
            return Err(Error::ChainMap {
                context: context.to_string(),
                degree: n,
                detail: first_residual(&diff),
            });
        }
    }
    let coords = dst_h.coordinates();
    let mut out = Vec::new();
    for n in 0..src_h.dims.len().min(f.len()) {
        let Some(t) = tgt(n).filter(|&t| t < dst_h.dims.len()) else {
            out.push(SparseMatrix::zeros(0, src_h.dims[n]));
            continue;
        };
        let mut cols = Vec::with_capacity(src_h.dims[n]);
        for z in src_h.representatives[n].columns() {
            let w = f[n].apply(z);
            let cls = coords[t].class_of(&w).ok_or_else(|| Error::ChainMap {
                context: context.to_string(),
                degree: n,
                detail: "image of a cycle is not a cycle".into(),
            })?;
            cols.push(cls);
        }
        out.push(SparseMatrix::from_columns(dst_h.dims[t], cols));
    }
    Ok(out)
}

/// The quotient complex by per-degree subspaces; each differential is descended.
pub fn quotient_complex(
    c: &ChainComplexQ,
    qs: &[QuotientPresentation],
    context: &str,
) -> Result<ChainComplexQ> {
    let dims: Vec<usize> = qs.iter().map(|q| q.dim()).collect();
    let diffs = (1..=c.top())
        .map(|n| descend_map(c.diff(n), &qs[n], &qs[n - 1], &format!("{context}, d_{n}")))
        .collect::<Result<Vec<_>>>()?;
    ChainComplexQ::new(dims, diffs, context)
}

/// A first-quadrant bicomplex in the commuting-square convention:
/// `d^h d^v = d^v d^h`; the total differential is `d^h + (-1)^p d^v`.
#[derive(Clone, Debug, Default)]
pub struct BicomplexSpec {
    dims: HashMap<(usize, usize), usize>,
    horizontal: HashMap<(usize, usize), SparseMatrix>,
    vertical: HashMap<(usize, usize), SparseMatrix>,
}

impl BicomplexSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set_module(&mut self, p: usize, q: usize, dim: usize) {
        self.dims.insert((p, q), dim);
    }

    pub fn module_dim(&self, p: usize, q: usize) -> usize {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    /// `d^h: C_{p,q} → C_{p-1,q}`.
    pub fn set_horizontal(&mut self, p: usize, q: usize, m: SparseMatrix) {
        self.horizontal.insert((p, q), m);
    }

    /// `d^v: C_{p,q} → C_{p,q-1}`.
    pub fn set_vertical(&mut self, p: usize, q: usize, m: SparseMatrix) {
        self.vertical.insert((p, q), m);
    }

    /// `(p, q, offset)` of each summand of total degree `n`, ordered by `p`.
    pub fn layout(&self, n: usize) -> Vec<(usize, usize, usize)> {
        let mut off = 0;
        (0..=n)
            .filter(|&p| self.dims.contains_key(&(p, n - p)))
            .map(|p| {
                let o = off;
                off += self.module_dim(p, n - p);
                (p, n - p, o)
            })
            .collect()
    }
}

/// Total complex through degree `n_internal`, checking `d∘d = 0`.
pub fn total_complex(b: &BicomplexSpec, n_internal: usize, context: &str) -> Result<ChainComplexQ> {
    let dims: Vec<usize> = (0..=n_internal)
        .map(|n| b.layout(n).iter().map(|(p, q, _)| b.module_dim(*p, *q)).sum())
        .collect();
    let mut diffs = Vec::new();
    for n in 1..=n_internal {
        let src = b.layout(n);
        let dst = b.layout(n - 1);
        let mut triplets: Vec<(usize, usize, Rational)> = Vec::new();
        for &(p, q, so) in &src {
            let place = |m: &SparseMatrix, tp: usize, tq: usize, sign: bool, t: &mut Vec<_>| {
                if let Some(&(_, _, to)) = dst.iter().find(|(a, c, _)| *a == tp && *c == tq) {
                    for (j, col) in m.columns().iter().enumerate() {
                        for (i, v) in col.iter() {
                            let v = if sign { -v.clone() } else { v.clone() };
                            t.push((to + i, so + j, v));
                        }
                    }
                }
            };
            if p > 0 {
                if let Some(m) = b.horizontal.get(&(p, q)) {
                    place(m, p - 1, q, false, &mut triplets);
                }
            }
            if q > 0 {
                if let Some(m) = b.vertical.get(&(p, q)) {
                    place(m, p, q - 1, p % 2 == 1, &mut triplets);
                }
            }
        }
        diffs.push(SparseMatrix::from_triplets(dims[n - 1], dims[n], triplets));
    }
    ChainComplexQ::new(dims, diffs, context)
}

/// A mixed complex `(M, b, B)`: `b` lowers degree, `B` raises it,
/// `b² = B² = bB + Bb = 0`.
#[derive(Clone, Debug)]
pub struct MixedComplex {
    dims: Vec<usize>,
    b: Vec<SparseMatrix>,
    big_b: Vec<SparseMatrix>,
}

impl MixedComplex {
    /// `b[k]` maps degree `k+1 → k`; `big_b[k]` maps degree `k → k+1`.
    pub fn new(
        dims: Vec<usize>,
        b: Vec<SparseMatrix>,
        big_b: Vec<SparseMatrix>,
        context: &str,
    ) -> Result<Self> {
        assert_eq!(b.len() + 1, dims.len());
        assert_eq!(big_b.len() + 1, dims.len());
        let m = MixedComplex { dims, b, big_b };
        m.check(context)?;
        Ok(m)
    }

    /// Same data without the identity checks, for operators that only become a mixed
    /// complex after passing to a quotient.
    pub fn new_unchecked(dims: Vec<usize>, b: Vec<SparseMatrix>, big_b: Vec<SparseMatrix>) -> Self {
        assert_eq!(b.len() + 1, dims.len());
        assert_eq!(big_b.len() + 1, dims.len());
        MixedComplex { dims, b, big_b }
    }

    pub fn check(&self, context: &str) -> Result<()> {
        let top = self.top();
        for n in 2..=top {
            let bb = self.b(n - 1).mul(self.b(n));
            if !bb.is_zero() {
                return Err(Error::Complex {
                    context: format!("{context}: b∘b"),
                    degree: n,
                    detail: first_residual(&bb),
                });
            }
        }
        for n in 0..top.saturating_sub(1) {
            let bb = self.big_b(n + 1).mul(self.big_b(n));
            if !bb.is_zero() {
                return Err(Error::Complex {
                    context: format!("{context}: B∘B"),
                    degree: n,
                    detail: first_residual(&bb),
                });
            }
        }
        for n in 0..top {
            // bB + Bb on degree n
            let mut s = self.b(n + 1).mul(self.big_b(n));
            if n >= 1 {
                s = s.add(&self.big_b(n - 1).mul(self.b(n)));
            }
            if !s.is_zero() {
                return Err(Error::Complex {
                    context: format!("{context}: bB+Bb"),
                    degree: n,
                    detail: first_residual(&s),
                });
            }
        }
        Ok(())
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `b: M_n → M_{n-1}` for `n ≥ 1`.
    pub fn b(&self, n: usize) -> &SparseMatrix {
        &self.b[n - 1]
    }

    /// `B: M_n → M_{n+1}` for `n < top`.
    pub fn big_b(&self, n: usize) -> &SparseMatrix {
        &self.big_b[n]
    }

    /// The `(M, b)` column.
    pub fn hochschild(&self, context: &str) -> Result<ChainComplexQ> {
        ChainComplexQ::new(self.dims.clone(), self.b.clone(), context)
    }

    /// Connes bicomplex `C_{p,q} = M_{q-p}`, with `(-1)^p b` stored vertically so
    /// that the commuting-square total differential is `b + B`.
    pub fn connes_bicomplex(&self, n_internal: usize) -> BicomplexSpec {
        assert!(n_internal <= self.top());
        let mut bc = BicomplexSpec::new();
        for n in 0..=n_internal {
            for p in 0..=n / 2 {
                let q = n - p;
                let m = q - p;
                bc.set_module(p, q, self.dims[m]);
                if m >= 1 {
                    let b = self.b(m);
                    bc.set_vertical(p, q, if p % 2 == 1 { b.neg() } else { b.clone() });
                }
                if p >= 1 {
                    bc.set_horizontal(p, q, self.big_b(m).clone());
                }
            }
        }
        bc
    }

    /// Total complex of the Connes bicomplex through `n_internal`.
    pub fn total(&self, n_internal: usize, context: &str) -> Result<ChainComplexQ> {
        total_complex(&self.connes_bicomplex(n_internal), n_internal, context)
    }

    /// `⊕_j M_{n-2j} u^{-j}` with differential `b + uB`, assembled directly.
    pub fn u_complex(&self, n_internal: usize, context: &str) -> Result<ChainComplexQ> {
        assert!(n_internal <= self.top());
        let comps = |n: usize| -> Vec<usize> { (0..=n / 2).map(|j| n - 2 * j).collect() };
        let dims: Vec<usize> = (0..=n_internal)
            .map(|n| comps(n).iter().map(|&m| self.dims[m]).sum())
            .collect();
        let mut diffs = Vec::new();
        for n in 1..=n_internal {
            let src = comps(n);
            let dst = comps(n - 1);
            let src_off = offsets(&src.iter().map(|&m| self.dims[m]).collect::<Vec<_>>());
            let dst_off = offsets(&dst.iter().map(|&m| self.dims[m]).collect::<Vec<_>>());
            let mut t = Vec::new();
            for (j, &m) in src.iter().enumerate() {
                // b keeps the power of u
                if m >= 1 && j < dst.len() {
                    push_block(&mut t, self.b(m), dst_off[j], src_off[j]);
                }
                // u·B lowers the u-exponent: u^{-j} -> u^{-(j-1)}
                if j >= 1 {
                    push_block(&mut t, self.big_b(m), dst_off[j - 1], src_off[j]);
                }
            }
            diffs.push(SparseMatrix::from_triplets(dims[n - 1], dims[n], t));
        }
        ChainComplexQ::new(dims, diffs, context)
    }

    /// Quotient of every degree, with `b` and `B` descended.
    pub fn quotient(&self, qs: &[QuotientPresentation], context: &str) -> Result<MixedComplex> {
        let top = self.top();
        let b = (1..=top)
            .map(|n| descend_map(self.b(n), &qs[n], &qs[n - 1], &format!("{context}, b on degree {n}")))
            .collect::<Result<Vec<_>>>()?;
        let big_b = (0..top)
            .map(|n| descend_map(self.big_b(n), &qs[n], &qs[n + 1], &format!("{context}, B on degree {n}")))
            .collect::<Result<Vec<_>>>()?;
        MixedComplex::new(qs.iter().map(|q| q.dim()).collect(), b, big_b, context)
    }
}

/// Total-complex map `⊕_j M_{n-2j} → ⊕_j M'_{n-2j}` acting by `maps[m]` on each
/// component, times `(-1)^j` on component `j` when `alternate` is set.
pub fn total_map(maps: &[SparseMatrix], n_internal: usize, alternate: bool) -> Vec<SparseMatrix> {
    (0..=n_internal)
        .map(|n| {
            let parts: Vec<SparseMatrix> = (0..=n / 2)
                .map(|j| {
                    let m = &maps[n - 2 * j];
                    if alternate && j % 2 == 1 {
                        m.neg()
                    } else {
                        m.clone()
                    }
                })
                .collect();
            SparseMatrix::direct_sum(&parts.iter().collect::<Vec<_>>())
        })
        .collect()
}

pub(crate) fn push_block(
    t: &mut Vec<(usize, usize, Rational)>,
    m: &SparseMatrix,
    row_off: usize,
    col_off: usize,
) {
    for (j, col) in m.columns().iter().enumerate() {
        for (i, v) in col.iter() {
            t.push((row_off + i, col_off + j, v.clone()));
        }
    }
}

/// An increasing complex `C_0 → C_1 → … → C_top`; `d[n]` maps degree `n` to `n + 1`.
#[derive(Clone, Debug)]
pub struct CochainComplexQ {
    dims: Vec<usize>,
    d: Vec<SparseMatrix>,
}

impl CochainComplexQ {
    pub fn new(dims: Vec<usize>, d: Vec<SparseMatrix>, context: &str) -> Result<Self> {
        assert_eq!(d.len() + 1, dims.len());
        let c = CochainComplexQ { dims, d };
        // reuse the chain-complex checks on the reversed grading
        c.reversed(context)?;
        Ok(c)
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn d(&self, n: usize) -> &SparseMatrix {
        &self.d[n]
    }

    /// Chain complex with degree `k` holding `C_{top-k}`, padded by a zero module so
    /// that every degree below `top` has a well-defined homology.
    fn reversed(&self, context: &str) -> Result<ChainComplexQ> {
        let top = self.top();
        let mut dims: Vec<usize> = (0..=top).rev().map(|n| self.dims[n]).collect();
        dims.push(0);
        let mut diffs: Vec<SparseMatrix> = (1..=top).map(|k| self.d[top - k].clone()).collect();
        diffs.push(SparseMatrix::zeros(self.dims[0], 0));
        ChainComplexQ::new(dims, diffs, context)
    }

    /// Homology `ker d_n / im d_{n-1}` for `n = 0..top-1`, with bases, indexed by `n`.
    pub fn homology(&self, context: &str) -> Result<HomologyResult> {
        let top = self.top();
        let rev = self.reversed(context)?;
        let h = homology(&rev);
        let mut out = HomologyResult {
            dims: Vec::new(),
            cycle_basis: Vec::new(),
            boundary_basis: Vec::new(),
            representatives: Vec::new(),
            valid_through: top.saturating_sub(1),
        };
        for n in 0..top {
            let k = top - n;
            out.dims.push(h.dims[k]);
            out.cycle_basis.push(h.cycle_basis[k].clone());
            out.boundary_basis.push(h.boundary_basis[k].clone());
            out.representatives.push(h.representatives[k].clone());
        }
        Ok(out)
    }
}

/// Standard sign `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    fn zero_complex(dims: &[usize]) -> ChainComplexQ {
        let diffs = (1..dims.len())
            .map(|n| SparseMatrix::zeros(dims[n - 1], dims[n]))
            .collect();
        ChainComplexQ::new(dims.to_vec(), diffs, "zero").unwrap()
    }

    #[test]
    fn zero_differentials() {
        let c = zero_complex(&[1, 1, 1, 1]);
        let h = homology(&c);
        assert_eq!(h.dims, vec![1, 1, 1]);
        assert_eq!(h.valid_through, 2);
        assert_eq!(homology_dims(&c), vec![1, 1, 1]);
    }

    #[test]
    fn identity_differential() {
        let c = ChainComplexQ::new(vec![1, 1], vec![SparseMatrix::identity(1)], "id").unwrap();
        let h = homology(&c);
        assert_eq!(h.dims, vec![0]);
        assert_eq!(h.valid_through, 0);
    }

    #[test]
    fn rejects_nonzero_square() {
        let d = SparseMatrix::identity(1);
        let err = ChainComplexQ::new(vec![1, 1, 1], vec![d.clone(), d], "bad").unwrap_err();
        assert!(matches!(err, Error::Complex { degree: 2, .. }));
    }

    #[test]
    fn single_column_bicomplex_is_the_column() {
        let mut bc = BicomplexSpec::new();
        let d = SparseMatrix::from_dense(&[vec![q(1), q(-1)]]);
        bc.set_module(0, 0, 1);
        bc.set_module(0, 1, 2);
        bc.set_module(0, 2, 0);
        bc.set_vertical(0, 1, d.clone());
        bc.set_vertical(0, 2, SparseMatrix::zeros(2, 0));
        let t = total_complex(&bc, 2, "col").unwrap();
        assert_eq!(t.dims(), &[1, 2, 0]);
        assert_eq!(t.diff(1), &d);
    }

    #[test]
    fn two_columns_with_zero_horizontal() {
        let mut bc = BicomplexSpec::new();
        for p in 0..2 {
            for q in 0..3 {
                bc.set_module(p, q, 1);
                if q > 0 {
                    bc.set_vertical(p, q, SparseMatrix::zeros(1, 1));
                }
            }
        }
        let t = total_complex(&bc, 3, "two").unwrap();
        assert_eq!(t.dims(), &[1, 2, 2, 1]);
        assert_eq!(homology_dims(&t), vec![1, 2, 2]);
    }

    #[test]
    fn sign_convention_on_odd_columns() {
        // commuting square: d^h d^v = d^v d^h = 1, so the total needs the sign twist
        let one = SparseMatrix::identity(1);
        let mut bc = BicomplexSpec::new();
        for (p, qq) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            bc.set_module(p, qq, 1);
        }
        bc.set_horizontal(1, 0, one.clone());
        bc.set_horizontal(1, 1, one.clone());
        bc.set_vertical(0, 1, one.clone());
        bc.set_vertical(1, 1, one);
        let t = total_complex(&bc, 2, "square").unwrap();
        assert_eq!(homology_dims(&t), vec![0, 0]);
    }

    #[test]
    fn mixed_complex_of_ground_field() {
        // M_n = Q for n = 0 only: b = 0, B = 0; Tot has homology Q in each even degree
        let dims = vec![1, 0, 0, 0, 0];
        let b = (1..5).map(|n| SparseMatrix::zeros(dims[n - 1], dims[n])).collect();
        let bb = (0..4).map(|n| SparseMatrix::zeros(dims[n + 1], dims[n])).collect();
        let m = MixedComplex::new(dims, b, bb, "Q").unwrap();
        let tot = m.total(4, "tot").unwrap();
        assert_eq!(homology_dims(&tot), vec![1, 0, 1, 0]);
        let u = m.u_complex(4, "u").unwrap();
        assert_eq!(tot.dims(), u.dims());
        for n in 1..=4 {
            assert_eq!(tot.diff(n), u.diff(n));
        }
    }

    #[test]
    fn identity_map_induces_identity_and_boundary_map_zero() {
        let d = SparseMatrix::from_dense(&[vec![q(1), q(-1)], vec![q(-1), q(1)]]);
        let c = ChainComplexQ::new(vec![2, 2, 0], vec![d.clone(), SparseMatrix::zeros(2, 0)], "c")
            .unwrap();
        let h = homology(&c);
        assert_eq!(h.dims, vec![1, 1]);
        let ids = vec![SparseMatrix::identity(2), SparseMatrix::identity(2), SparseMatrix::zeros(0, 0)];
        let ind = induced_on_homology(&ids, &c, &c, &h, &h, 0, "id").unwrap();
        assert!(crate::linalg::quotient::is_identity(&ind[0]));
        assert!(crate::linalg::quotient::is_identity(&ind[1]));
        // f = d h + h d with h_0 = id : C_0 -> C_1
        let hmap = SparseMatrix::identity(2);
        let f0 = d.mul(&hmap);
        let f1 = hmap.mul(&d);
        let f = vec![f0, f1, SparseMatrix::zeros(0, 0)];
        let ind = induced_on_homology(&f, &c, &c, &h, &h, 0, "null").unwrap();
        assert!(ind.iter().all(|m| m.is_zero()));
    }

    #[test]
    fn non_chain_map_is_rejected() {
        let d = SparseMatrix::from_dense(&[vec![q(1), q(-1)]]);
        let c = ChainComplexQ::new(vec![1, 2], vec![d], "c").unwrap();
        let h = homology(&c);
        let f = vec![SparseMatrix::identity(1), SparseMatrix::from_dense(&[vec![q(1), q(0)], vec![q(0), q(0)]])];
        assert!(matches!(
            induced_on_homology(&f, &c, &c, &h, &h, 0, "bad"),
            Err(Error::ChainMap { .. })
        ));
    }

    #[test]
    fn cochain_homology() {
        // 0 -> Q --(1)--> Q -> Q^2 -> 0 truncated at degree 3
        let d0 = SparseMatrix::identity(1);
        let d1 = SparseMatrix::zeros(2, 1);
        let d2 = SparseMatrix::zeros(1, 2);
        let c = CochainComplexQ::new(vec![1, 1, 2, 1], vec![d0, d1, d2], "co").unwrap();
        let h = c.homology("co").unwrap();
        assert_eq!(h.dims, vec![0, 0, 2]);
    }
}
