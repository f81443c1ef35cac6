//! Finite-dimensional algebras, automorphisms, finite group actions, crossed products
//! and tensor basis enumeration.

mod group;
mod tensor;

pub use group::{conjugacy_data, validate_action, ConjugacyData, FiniteGroupAction};
pub use tensor::{require_unit_first, tensor_index, TensorBasisIndex};

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{format_rational, rank, SparseMatrix, SparseVec};

/// Unital associative algebra over Q given by structure constants.
#[derive(Clone, Debug, PartialEq)]
pub struct Algebra {
    basis_names: Vec<String>,
    unit: SparseVec,
    mult: Vec<Vec<SparseVec>>,
}

impl Algebra {
    /// Builds and validates. `mult[i][j]` is the coordinate vector of `e_i e_j`.
    pub fn new(basis_names: Vec<String>, unit: SparseVec, mult: Vec<Vec<SparseVec>>) -> Result<Self> {
        let a = Self::new_unchecked(basis_names, unit, mult)?;
        validate_algebra(&a)?;
        Ok(a)
    }

    /// Checks shapes only.
    pub fn new_unchecked(
        basis_names: Vec<String>,
        unit: SparseVec,
        mult: Vec<Vec<SparseVec>>,
    ) -> Result<Self> {
        let d = basis_names.len();
        if d == 0 {
            return Err(Error::Shape("algebra of dimension 0".into()));
        }
        if mult.len() != d || mult.iter().any(|row| row.len() != d) {
            return Err(Error::Shape(format!("multiplication table must be {d}x{d}")));
        }
        let in_range = |v: &SparseVec| v.max_index().is_none_or(|m| m < d);
        if !in_range(&unit) || !mult.iter().flatten().all(in_range) {
            return Err(Error::Shape(format!("coordinate index out of range for dimension {d}")));
        }
        Ok(Algebra { basis_names, unit, mult })
    }

    /// The ground field Q.
    pub fn ground_field() -> Self {
        Algebra {
            basis_names: vec!["1".into()],
            unit: SparseVec::unit(0),
            mult: vec![vec![SparseVec::unit(0)]],
        }
    }

    pub fn dim(&self) -> usize {
        self.basis_names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mult[i][j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut pairs = Vec::new();
        for (i, x) in a.iter() {
            for (j, y) in b.iter() {
                let xy = x * y;
                for (k, z) in self.mult[*i][*j].iter() {
                    pairs.push((*k, &xy * z));
                }
            }
        }
        SparseVec::from_pairs(pairs)
    }

    /// True when the unit is exactly `e_0`, as reduced tensor slots require.
    pub fn unit_is_first_basis_vector(&self) -> bool {
        self.unit == SparseVec::unit(0)
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.dim()).all(|i| (0..i).all(|j| self.mult[i][j] == self.mult[j][i]))
    }
}

/// Checks associativity on all basis triples and the two unit laws.
pub fn validate_algebra(a: &Algebra) -> Result<()> {
    let d = a.dim();
    for i in 0..d {
        let e = SparseVec::unit(i);
        if a.mul(&a.unit, &e) != e || a.mul(&e, &a.unit) != e {
            return Err(Error::Algebra {
                law: "unit law",
                detail: format!("unit·{0} or {0}·unit differs from {0}", a.basis_names[i]),
            });
        }
    }
    for i in 0..d {
        for j in 0..d {
            let ij = &a.mult[i][j];
            for k in 0..d {
                let left = a.mul(ij, &SparseVec::unit(k));
                let right = a.mul(&SparseVec::unit(i), &a.mult[j][k]);
                if left != right {
                    let n = &a.basis_names;
                    return Err(Error::Algebra {
                        law: "associativity",
                        detail: format!("({0}·{1})·{2} ≠ {0}·({1}·{2})", n[i], n[j], n[k]),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Linear endomorphism of an algebra in its basis; column `j` is the image of `e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraMap {
    matrix: SparseMatrix,
}

impl AlgebraMap {
    pub fn new(matrix: SparseMatrix) -> Self {
        AlgebraMap { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        AlgebraMap { matrix: SparseMatrix::identity(dim) }
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn image(&self, j: usize) -> &SparseVec {
        self.matrix.col(j)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap { matrix: self.matrix.mul(&other.matrix) }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == SparseMatrix::identity(self.matrix.ncols())
    }

    /// Checks unitality, multiplicativity on basis pairs and invertibility.
    pub fn validate(&self, a: &Algebra, name: &str) -> Result<()> {
        let d = a.dim();
        let err = |detail: String| Error::Action { element: name.to_string(), detail };
        if self.matrix.nrows() != d || self.matrix.ncols() != d {
            return Err(err(format!("matrix is not {d}x{d}")));
        }
        if self.apply(a.unit()) != *a.unit() {
            return Err(err("does not fix the unit".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = self.apply(a.mul_basis(i, j));
                let rhs = a.mul(self.image(i), self.image(j));
                if lhs != rhs {
                    let n = a.basis_names();
                    return Err(err(format!("g({0}·{1}) ≠ g({0})·g({1})", n[i], n[j])));
                }
            }
        }
        if rank(&self.matrix) != d {
            return Err(err("not invertible".into()));
        }
        Ok(())
    }

    /// Multiplicative order, if at most `bound`.
    pub fn order(&self, bound: usize) -> Option<usize> {
        let mut p = self.clone();
        for k in 1..=bound {
            if p.is_identity() {
                return Some(k);
            }
            p = p.compose(self);
        }
        None
    }
}

/// `A ⋊ G` on the basis `e_i ⋊ g` (index `g·d + i`), with
/// `(a ⋊ g)(b ⋊ h) = a·g(b) ⋊ gh`.
pub fn crossed_product(a: &Algebra, g: &FiniteGroupAction) -> Result<Algebra> {
    validate_algebra(a)?;
    validate_action(a, g)?;
    let d = a.dim();
    let r = g.order();
    let mut names = Vec::with_capacity(d * r);
    for x in 0..r {
        for i in 0..d {
            names.push(format!("{}⋊{}", a.basis_names()[i], g.element_names()[x]));
        }
    }
    let mut mult = vec![vec![SparseVec::new(); d * r]; d * r];
    for x in 0..r {
        for i in 0..d {
            for y in 0..r {
                let xy = g.mul(x, y);
                for j in 0..d {
                    let gb = g.action(x).image(j);
                    let prod = a.mul(&SparseVec::unit(i), gb);
                    mult[x * d + i][y * d + j] = prod.shift(xy * d);
                }
            }
        }
    }
    let unit = a.unit().shift(g.identity() * d);
    let out = Algebra::new_unchecked(names, unit, mult)?;
    validate_algebra(&out)?;
    Ok(out)
}

/// Human-readable element `Σ c_i e_i`.
pub fn format_element(a: &Algebra, v: &SparseVec) -> String {
    if v.is_zero() {
        return "0".into();
    }
    v.iter()
        .map(|(i, c)| {
            if c.is_one() {
                a.basis_names()[*i].clone()
            } else {
                format!("({})·{}", format_rational(c), a.basis_names()[*i])
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}
