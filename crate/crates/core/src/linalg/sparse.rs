//! Column-major sparse matrices over Q.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, Rational};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: vec![(i, Rational::one())],
        }
    }

    /// Builds from unsorted, possibly repeated `(index, value)` pairs.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            if v.is_zero() {
                continue;
            }
            let slot = acc.entry(i).or_insert_with(Rational::zero);
            *slot += v;
        }
        Self::from_map(acc)
    }

    pub fn from_map(map: BTreeMap<usize, Rational>) -> Self {
        Self {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    /// Caller guarantees sorted, distinct, nonzero.
    pub(crate) fn from_sorted(entries: Vec<(usize, Rational)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, v)| !v.is_zero()));
        Self { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn lowest(&self) -> Option<usize> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Rational, other: &SparseVec) -> SparseVec {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&Rational::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-Rational::one(), other)
    }

    /// Reindexes entries; `f` must be injective on the support.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().map(|(i, v)| (f(*i), v.clone())))
    }

    pub fn shift(&self, offset: usize) -> SparseVec {
        Self {
            entries: self.entries.iter().map(|(i, v)| (i + offset, v.clone())).collect(),
        }
    }

    /// Keeps entries with index in `lo..hi`, shifted down by `lo`.
    pub fn window(&self, lo: usize, hi: usize) -> SparseVec {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| *i >= lo && *i < hi)
                .map(|(i, v)| (i - lo, v.clone()))
                .collect(),
        }
    }

    pub fn dot_dense(&self, dense: &[Rational]) -> Rational {
        self.entries.iter().map(|(i, v)| v * &dense[*i]).sum()
    }
}

/// Sparse matrix over Q stored as a list of sparse columns.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl fmt::Debug for SparseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseMatrix({}x{}) [", self.rows, self.cols.len())?;
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                write!(f, " ({i},{j})={}", format_rational(v))?;
            }
        }
        write!(f, " ]")
    }
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![SparseVec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.max_index().map_or(true, |m| m < rows)));
        Self { rows, cols }
    }

    pub fn from_triplets<I: IntoIterator<Item = (usize, usize, Rational)>>(
        rows: usize,
        cols: usize,
        triplets: I,
    ) -> Self {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); cols];
        for (i, j, v) in triplets {
            assert!(i < rows && j < cols, "triplet ({i},{j}) out of range");
            buckets[j].push((i, v));
        }
        Self {
            rows,
            cols: buckets.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    /// Dense row-major input, mostly for tests.
    pub fn from_dense(data: &[Vec<Rational>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, |r| r.len());
        Self::from_triplets(
            rows,
            cols,
            data.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.ncols()]; self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.cols[j].get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// First nonzero entry in column-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize, Rational)> {
        self.cols.iter().enumerate().find_map(|(j, c)| {
            c.entries().first().map(|(i, v)| (*i, j, v.clone()))
        })
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
        for (j, x) in v.iter() {
            for (i, a) in self.cols[*j].iter() {
                *acc.entry(*i).or_insert_with(Rational::zero) += a * x;
            }
        }
        SparseVec::from_map(acc)
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(
            self.ncols(),
            rhs.nrows(),
            "product shape mismatch {}x{} * {}x{}",
            self.rows,
            self.ncols(),
            rhs.rows,
            rhs.ncols()
        );
        SparseMatrix {
            rows: self.rows,
            cols: rhs.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn add(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.axpy(&Rational::one(), rhs)
    }

    pub fn sub(&self, rhs: &SparseMatrix) -> SparseMatrix {
        self.axpy(&-Rational::one(), rhs)
    }

    /// `self + c * rhs`.
    pub fn axpy(&self, c: &Rational, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.rows, self.ncols()), (rhs.rows, rhs.ncols()), "sum shape mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: self
                .cols
                .iter()
                .zip(&rhs.cols)
                .map(|(a, b)| a.axpy(c, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseMatrix {
        self.scale(&-Rational::one())
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (j, c) in self.cols.iter().enumerate() {
            for (i, v) in c.iter() {
                buckets[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.ncols(),
            cols: buckets.into_iter().map(SparseVec::from_sorted).collect(),
        }
    }

    /// Selects the given columns, in order.
    pub fn select_columns(&self, idx: &[usize]) -> SparseMatrix {
        SparseMatrix {
            rows: self.rows,
            cols: idx.iter().map(|&j| self.cols[j].clone()).collect(),
        }
    }

    pub fn hstack(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        let mut cols = self.cols.clone();
        cols.extend(rhs.cols.iter().cloned());
        SparseMatrix { rows: self.rows, cols }
    }

    /// Assembles a block matrix. `blocks[i][j]` maps column block j to row block i;
    /// `None` means zero.
    pub fn block(
        row_dims: &[usize],
        col_dims: &[usize],
        blocks: &[Vec<Option<&SparseMatrix>>],
    ) -> SparseMatrix {
        let row_off: Vec<usize> = offsets(row_dims);
        let rows: usize = row_dims.iter().sum();
        let mut cols = Vec::with_capacity(col_dims.iter().sum());
        for (bj, &cd) in col_dims.iter().enumerate() {
            for j in 0..cd {
                let mut parts = Vec::new();
                for (bi, &rd) in row_dims.iter().enumerate() {
                    if let Some(m) = blocks[bi][bj] {
                        assert_eq!(
                            (m.nrows(), m.ncols()),
                            (rd, cd),
                            "block ({bi},{bj}) has wrong shape"
                        );
                        parts.extend(m.col(j).iter().map(|(i, v)| (i + row_off[bi], v.clone())));
                    }
                }
                parts.sort_by_key(|(i, _)| *i);
                cols.push(SparseVec::from_sorted(parts));
            }
        }
        SparseMatrix { rows, cols }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(parts: &[&SparseMatrix]) -> SparseMatrix {
        let mut rows = 0;
        let mut cols = Vec::new();
        for m in parts {
            cols.extend(m.cols.iter().map(|c| c.shift(rows)));
            rows += m.rows;
        }
        SparseMatrix { rows, cols }
    }

    /// Permutes basis: P e_i = e_{perm[i]} applied on both sides, `P M P^{-1}`.
    pub fn conjugate_by_permutation(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseMatrix {
        let mut cols = vec![SparseVec::new(); self.ncols()];
        for (j, c) in self.cols.iter().enumerate() {
            cols[col_perm[j]] = c.map_indices(|i| row_perm[i]);
        }
        SparseMatrix { rows: self.rows, cols }
    }
}

pub fn offsets(dims: &[usize]) -> Vec<usize> {
    let mut acc = 0;
    dims.iter()
        .map(|d| {
            let o = acc;
            acc += d;
            o
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::q;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[0, 1]]);
        let b = m(&[&[1, 0], &[3, 1]]);
        assert_eq!(a.mul(&b), m(&[&[7, 2], &[3, 1]]));
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, 1]]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn axpy_cancels_entries() {
        let v = SparseVec::from_pairs([(0, q(1)), (3, q(2))]);
        let w = SparseVec::from_pairs([(3, q(1)), (5, q(1))]);
        let r = v.axpy(&q(-2), &w);
        assert_eq!(r.entries(), &[(0, q(1)), (5, q(-2))]);
    }

    #[test]
    fn block_assembly() {
        let i2 = SparseMatrix::identity(2);
        let z = m(&[&[5], &[6]]);
        let blk = SparseMatrix::block(&[2], &[2, 1], &[vec![Some(&i2), Some(&z)]]);
        assert_eq!(blk, m(&[&[1, 0, 5], &[0, 1, 6]]));
        let ds = SparseMatrix::direct_sum(&[&i2, &z]);
        assert_eq!(ds.nrows(), 4);
        assert_eq!(ds.ncols(), 3);
        assert_eq!(ds.get(3, 2), q(6));
    }
}
