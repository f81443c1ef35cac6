//! Exact elimination: ranks, reduced echelon forms, kernels and span coordinates.
//!
//! Pivots are always chosen at the lowest nonzero index, so every basis produced
//! here is a deterministic function of the input vectors and their order.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::sparse::{SparseMatrix, SparseVec};

/// Integer arithmetic used by fraction-free elimination.
trait ExactInt: Clone + Sized {
    fn from_big(x: &BigInt) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn mul(&self, other: &Self) -> Option<Self>;
    fn sub(&self, other: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn neg(&self) -> Option<Self>;
}

impl ExactInt for i128 {
    fn from_big(x: &BigInt) -> Option<Self> {
        // keep headroom so one product of two entries cannot wrap silently
        x.to_i128().filter(|v| v.unsigned_abs() < (1u128 << 100))
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        self.checked_mul(*other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        self.checked_sub(*other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
}

impl ExactInt for BigInt {
    fn from_big(x: &BigInt) -> Option<Self> {
        Some(x.clone())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
}

type IntVec<T> = Vec<(usize, T)>;

/// Clears denominators and removes the content of a rational vector.
fn primitive_part(v: &SparseVec) -> Vec<(usize, BigInt)> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    let ints: Vec<(usize, BigInt)> = v
        .iter()
        .map(|(i, x)| (*i, x.numer() * (&lcm / x.denom())))
        .collect();
    let g = ints
        .iter()
        .fold(BigInt::zero(), |acc, (_, x)| Integer::gcd(&acc, x));
    if Zero::is_zero(&g) || One::is_one(&g) {
        ints
    } else {
        ints.into_iter().map(|(i, x)| (i, x / &g)).collect()
    }
}

fn to_int_vec<T: ExactInt>(v: &[(usize, BigInt)]) -> Option<IntVec<T>> {
    v.iter().map(|(i, x)| T::from_big(x).map(|y| (*i, y))).collect()
}

/// `a * v - b * w`, merged; `None` on overflow.
fn combine<T: ExactInt>(a: &T, v: &IntVec<T>, b: &T, w: &IntVec<T>) -> Option<IntVec<T>> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            out.push((v[i].0, a.mul(&v[i].1)?));
            i += 1;
        } else if take_w {
            out.push((w[j].0, b.mul(&w[j].1)?.neg()?));
            j += 1;
        } else {
            let s = a.mul(&v[i].1)?.sub(&b.mul(&w[j].1)?)?;
            if !s.is_zero() {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn make_primitive<T: ExactInt>(v: &mut IntVec<T>) {
    let mut g: Option<T> = None;
    for (_, x) in v.iter() {
        g = Some(match g {
            None => x.clone(),
            Some(acc) => acc.gcd(x),
        });
        if g.as_ref().is_some_and(|g| g.is_unit()) {
            return;
        }
    }
    if let Some(g) = g {
        if !g.is_zero() && !g.is_unit() {
            for (_, x) in v.iter_mut() {
                *x = x.div_exact(&g);
            }
        }
    }
}

/// Fraction-free rank; `None` if the integer type overflowed.
fn rank_with<T: ExactInt>(vectors: &[Vec<(usize, BigInt)>]) -> Option<usize> {
    let mut pivots: HashMap<usize, IntVec<T>> = HashMap::new();
    for raw in vectors {
        let mut v: IntVec<T> = to_int_vec(raw)?;
        while let Some(&(low, _)) = v.first() {
            let Some(p) = pivots.get(&low) else { break };
            let a = p[0].1.clone();
            let b = v[0].1.clone();
            let g = a.gcd(&b);
            let (a, b) = (a.div_exact(&g), b.div_exact(&g));
            v = combine(&a, &v, &b, p)?;
            make_primitive(&mut v);
        }
        if let Some(&(low, _)) = v.first() {
            pivots.insert(low, v);
        }
    }
    Some(pivots.len())
}

/// Exact rank over Q via fraction-free elimination with lowest-index pivoting.
///
/// Runs on machine integers first and falls back to big integers on overflow.
pub fn rank(m: &SparseMatrix) -> usize {
    if m.nrows() == 0 || m.ncols() == 0 {
        return 0;
    }
    // eliminate along whichever side gives the shorter vectors
    let vecs: Vec<Vec<(usize, BigInt)>> = if m.nrows() <= m.ncols() {
        m.columns().iter().map(primitive_part).collect()
    } else {
        m.transpose().columns().iter().map(primitive_part).collect()
    };
    rank_with::<i128>(&vecs).unwrap_or_else(|| {
        rank_with::<BigInt>(&vecs).expect("big integer elimination cannot overflow")
    })
}

/// Reduced echelon form of a list of vectors: each row has pivot coefficient 1 at its
/// lowest index and zeros at every other pivot index. Rows are sorted by pivot.
#[derive(Clone, Debug)]
pub struct Rref {
    pub rows: Vec<SparseVec>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the row space; the result has no entries at pivot indices.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(p);
            if !c.is_zero() {
                v = v.axpy(&-c, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }
}

pub fn rref(vectors: impl IntoIterator<Item = SparseVec>) -> Rref {
    let mut pivot_of: HashMap<usize, usize> = HashMap::new();
    let mut rows: Vec<SparseVec> = Vec::new();
    for mut v in vectors {
        while let Some(low) = v.lowest() {
            match pivot_of.get(&low) {
                Some(&k) => {
                    let c = v.get(low);
                    v = v.axpy(&-c, &rows[k]);
                }
                None => break,
            }
        }
        if let Some(low) = v.lowest() {
            let inv = Rational::one() / v.get(low);
            pivot_of.insert(low, rows.len());
            rows.push(v.scale(&inv));
        }
    }
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&k| rows[k].lowest().unwrap());
    let mut rows: Vec<SparseVec> = order.into_iter().map(|k| rows[k].clone()).collect();
    let pivots: Vec<usize> = rows.iter().map(|r| r.lowest().unwrap()).collect();
    // back substitution, highest pivot first
    for k in (0..rows.len()).rev() {
        let p = pivots[k];
        for i in 0..k {
            let c = rows[i].get(p);
            if !c.is_zero() {
                rows[i] = rows[i].axpy(&-c, &rows[k]);
            }
        }
    }
    Rref { rows, pivots }
}

/// Basis of ker(M) as columns; one vector per free column of the row-reduced matrix.
pub fn kernel_basis(m: &SparseMatrix) -> SparseMatrix {
    let n = m.ncols();
    let r = rref(m.transpose().into_columns());
    let is_pivot: Vec<bool> = {
        let mut f = vec![false; n];
        for &p in &r.pivots {
            f[p] = true;
        }
        f
    };
    // column f of the kernel: e_f - sum_k R[k][f] e_{pivot k}
    let mut by_free: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); n];
    for (row, &p) in r.rows.iter().zip(&r.pivots) {
        for (j, v) in row.iter() {
            if *j != p {
                by_free[*j].push((p, -v.clone()));
            }
        }
    }
    let cols: Vec<SparseVec> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut e = std::mem::take(&mut by_free[f]);
            e.push((f, Rational::one()));
            SparseVec::from_pairs(e)
        })
        .collect();
    SparseMatrix::from_columns(n, cols)
}

/// Basis of the column space (the reduced rows of the transposed elimination).
pub fn column_space_basis(m: &SparseMatrix) -> SparseMatrix {
    let r = rref(m.columns().iter().cloned());
    SparseMatrix::from_columns(m.nrows(), r.rows)
}

/// Expresses vectors in terms of a fixed list of independent generators.
#[derive(Clone, Debug)]
pub struct SpanCoords {
    generators: usize,
    pivot_of: HashMap<usize, usize>,
    rows: Vec<SparseVec>,
    /// `rows[k] = sum_j combos[k][j] * generator_j`
    combos: Vec<SparseVec>,
    dependent: Vec<usize>,
}

impl SpanCoords {
    pub fn new(gens: &[SparseVec]) -> Self {
        let mut s = SpanCoords {
            generators: gens.len(),
            pivot_of: HashMap::new(),
            rows: Vec::new(),
            combos: Vec::new(),
            dependent: Vec::new(),
        };
        for (j, g) in gens.iter().enumerate() {
            let (v, c) = s.reduce_tracked(g.clone(), SparseVec::unit(j));
            match v.lowest() {
                Some(low) => {
                    let inv = Rational::one() / v.get(low);
                    s.pivot_of.insert(low, s.rows.len());
                    s.rows.push(v.scale(&inv));
                    s.combos.push(c.scale(&inv));
                }
                None => s.dependent.push(j),
            }
        }
        s
    }

    /// Generators that were linearly dependent on earlier ones.
    pub fn dependent(&self) -> &[usize] {
        &self.dependent
    }

    pub fn num_generators(&self) -> usize {
        self.generators
    }

    fn reduce_tracked(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        // walk ascending; each row only touches indices >= its pivot
        let mut pos = 0;
        while pos < v.nnz() {
            let (idx, coef) = v.entries()[pos].clone();
            match self.pivot_of.get(&idx) {
                Some(&k) => {
                    v = v.axpy(&-coef.clone(), &self.rows[k]);
                    combo = combo.axpy(&-coef, &self.combos[k]);
                }
                None => pos += 1,
            }
        }
        (v, combo)
    }

    /// Coefficients `c` with `v = sum_j c_j generator_j`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rest, combo) = self.reduce_tracked(v.clone(), SparseVec::new());
        if rest.is_zero() {
            Some(combo.scale(&-Rational::one()))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational::{q, q_frac};

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn ranks_of_small_cases() {
        assert_eq!(rank(&SparseMatrix::identity(3)), 3);
        assert_eq!(rank(&m(&[&[1, 1], &[1, 1]])), 1);
        assert_eq!(rank(&SparseMatrix::zeros(4, 7)), 0);
    }

    #[test]
    fn kernel_small_cases() {
        assert_eq!(kernel_basis(&SparseMatrix::identity(3)).ncols(), 0);
        let k = kernel_basis(&SparseMatrix::zeros(3, 3));
        assert_eq!(k.ncols(), 3);
        assert_eq!(rank(&k), 3);
        let k = kernel_basis(&m(&[&[1, -1]]));
        assert_eq!(k.ncols(), 1);
        assert_eq!(k.col(0), &SparseVec::from_pairs([(0, q(1)), (1, q(1))]));
    }

    #[test]
    fn big_integer_fallback_agrees() {
        // entries near 2^90 force the i128 path to give up mid-elimination
        let big = Rational::from_integer(BigInt::one() << 90usize);
        let a = SparseMatrix::from_dense(&[
            vec![big.clone(), q(1), q(3)],
            vec![q(1), big.clone(), q(5)],
            vec![big.clone() + q(1), big.clone() + q(1), q(8)],
        ]);
        assert_eq!(rank(&a), 2);
    }

    #[test]
    fn rational_entries() {
        let a = SparseMatrix::from_dense(&[
            vec![q_frac(1, 2), q_frac(1, 3)],
            vec![q_frac(3, 2), q(1)],
        ]);
        assert_eq!(rank(&a), 1);
    }

    #[test]
    fn span_coordinates() {
        let g = vec![
            SparseVec::from_pairs([(0, q(1)), (1, q(1))]),
            SparseVec::from_pairs([(1, q(1)), (2, q(2))]),
        ];
        let s = SpanCoords::new(&g);
        let v = SparseVec::from_pairs([(0, q(2)), (1, q(5)), (2, q(6))]);
        let c = s.coordinates(&v).unwrap();
        assert_eq!(c, SparseVec::from_pairs([(0, q(2)), (1, q(3))]));
        assert!(s.coordinates(&SparseVec::unit(2)).is_none());
    }
}
