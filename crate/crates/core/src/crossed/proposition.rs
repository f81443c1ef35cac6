//! The bigraded complex modulo `(1 - T)`, assembled as a mixed complex with
//! `b + b̄` lowering and `B` raising total degree.

use std::collections::HashMap;

use rayon::prelude::*;

use super::operators::GjOperators;
use crate::algebra::{Algebra, FiniteGroupAction};
use crate::error::Result;
use crate::linalg::{
    descend_map, homology, homology_dims, quotient_by, HomologyResult, MixedComplex,
    QuotientPresentation, SparseMatrix,
};
use crate::twisted::one_minus;

/// Quotient modules per bidegree and the assembled mixed complex.
#[derive(Clone, Debug)]
pub struct PropositionComplex {
    pub n_internal: usize,
    pub quotients: HashMap<(usize, usize), QuotientPresentation>,
    pub mixed: MixedComplex,
}

impl PropositionComplex {
    /// Quotient dimension of the `(p, q)` block.
    pub fn block_dim(&self, p: usize, q: usize) -> usize {
        self.quotients[&(p, q)].dim()
    }

    /// Block dimensions of total degree `n`, ordered by `p`.
    pub fn degree_blocks(&self, n: usize) -> Vec<usize> {
        (0..=n).map(|p| self.block_dim(p, n - p)).collect()
    }
}

fn bidegrees(n_internal: usize) -> Vec<(usize, usize)> {
    (0..=n_internal)
        .flat_map(|n| (0..=n).map(move |p| (p, n - p)))
        .collect()
}

enum Op {
    B,
    Bbar,
    Connes,
}

pub fn proposition_complex(
    a: &Algebra,
    g: &FiniteGroupAction,
    n_internal: usize,
) -> Result<PropositionComplex> {
    let ops = GjOperators::new(a, g)?;
    let quotients: HashMap<(usize, usize), QuotientPresentation> = bidegrees(n_internal)
        .par_iter()
        .map(|&(p, q)| {
            let t = ops.t(p, q);
            ((p, q), quotient_by(t.ncols(), &one_minus(&t)))
        })
        .collect();

    let mut jobs = Vec::new();
    for &(p, q) in &bidegrees(n_internal) {
        if q >= 1 {
            jobs.push((Op::B, p, q));
        }
        if p >= 1 {
            jobs.push((Op::Bbar, p, q));
        }
        if p + q < n_internal {
            jobs.push((Op::Connes, p, q));
        }
    }
    let descended: Vec<((u8, usize, usize), SparseMatrix)> = jobs
        .par_iter()
        .map(|(op, p, q)| {
            let (p, q) = (*p, *q);
            let (m, tgt, tag, what) = match op {
                Op::B => (ops.b(p, q), (p, q - 1), 0u8, "b"),
                Op::Bbar => (ops.bbar(p, q), (p - 1, q), 1u8, "b̄"),
                Op::Connes => (ops.big_b(p, q), (p, q + 1), 2u8, "B"),
            };
            let ctx = format!("{what} on bidegree ({p},{q}) modulo (1 - T)");
            let d = descend_map(&m, &quotients[&(p, q)], &quotients[&tgt], &ctx)?;
            Ok(((tag, p, q), d))
        })
        .collect::<Result<_>>()?;
    let descended: HashMap<(u8, usize, usize), SparseMatrix> = descended.into_iter().collect();

    let block_dims = |n: usize| -> Vec<usize> { (0..=n).map(|p| quotients[&(p, n - p)].dim()).collect() };
    let dims: Vec<usize> = (0..=n_internal).map(|n| block_dims(n).iter().sum()).collect();

    let mut b_tot = Vec::new();
    for n in 1..=n_internal {
        let mut blocks: Vec<Vec<Option<&SparseMatrix>>> = vec![vec![None; n + 1]; n];
        for p in 0..=n {
            let q = n - p;
            if q >= 1 {
                blocks[p][p] = descended.get(&(0, p, q));
            }
            if p >= 1 {
                blocks[p - 1][p] = descended.get(&(1, p, q));
            }
        }
        b_tot.push(SparseMatrix::block(&block_dims(n - 1), &block_dims(n), &blocks));
    }
    let mut big_b_tot = Vec::new();
    for n in 0..n_internal {
        let mut blocks: Vec<Vec<Option<&SparseMatrix>>> = vec![vec![None; n + 1]; n + 2];
        for p in 0..=n {
            blocks[p][p] = descended.get(&(2, p, n - p));
        }
        big_b_tot.push(SparseMatrix::block(&block_dims(n + 1), &block_dims(n), &blocks));
    }
    let mixed = MixedComplex::new(dims, b_tot, big_b_tot, "bigraded complex modulo (1 - T)")?;
    Ok(PropositionComplex { n_internal, quotients, mixed })
}

/// `HC_n(A ⋊ G)` for `n ≤ max_degree` through the quotient bigraded complex.
pub fn proposition_bicomplex(
    a: &Algebra,
    g: &FiniteGroupAction,
    max_degree: usize,
) -> Result<(PropositionComplex, HomologyResult)> {
    let pc = proposition_complex(a, g, max_degree + 1)?;
    let tot = pc.mixed.total(pc.n_internal, "bigraded total complex")?;
    let h = homology(&tot);
    Ok((pc, h))
}

pub fn proposition_dims(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<Vec<usize>> {
    let pc = proposition_complex(a, g, max_degree + 1)?;
    Ok(homology_dims(&pc.mixed.total(pc.n_internal, "bigraded total complex")?))
}
