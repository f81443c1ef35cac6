//! The `p = 0` row of the bigraded complex, modulo `(1 - T)` or modulo the whole group,
//! its decomposition over conjugacy classes, and the comparison map from twisted
//! cyclic homology.

use rayon::prelude::*;

use super::operators::{conjugation_on, GjOperators};
use crate::algebra::{conjugacy_data, Algebra, FiniteGroupAction, TensorBasisIndex};
use crate::error::Result;
use crate::linalg::{
    descend_map, homology, homology_dims, induced_on_homology, quotient_by, rank, total_map,
    ChainComplexQ, HomologyResult, MixedComplex, QuotientPresentation, SparseMatrix,
};
use crate::twisted::{hk_bicomplex, normalized_index, one_minus, twisted_quotient_complex, HkBicomplex};

/// `(k[G] ⊗ A ⊗ Ā^{⊗n} / R, b, B)` for a family of relations `R`.
#[derive(Clone, Debug)]
pub struct RowComplex {
    pub n_internal: usize,
    pub index: Vec<TensorBasisIndex>,
    pub quotients: Vec<QuotientPresentation>,
    pub mixed: MixedComplex,
}

impl RowComplex {
    pub fn total(&self) -> Result<ChainComplexQ> {
        self.mixed.total(self.n_internal, "row total complex")
    }

    pub fn hochschild(&self) -> Result<ChainComplexQ> {
        self.mixed.hochschild("row Hochschild complex")
    }
}

fn row_complex<R>(
    a: &Algebra,
    g: &FiniteGroupAction,
    n_internal: usize,
    relations: R,
    context: &str,
) -> Result<RowComplex>
where
    R: Fn(&GjOperators, usize) -> SparseMatrix + Sync,
{
    let ops = GjOperators::new(a, g)?;
    let index: Vec<TensorBasisIndex> = (0..=n_internal).map(|n| ops.index(0, n)).collect();
    let quotients: Vec<QuotientPresentation> = (0..=n_internal)
        .into_par_iter()
        .map(|n| quotient_by(index[n].len(), &relations(&ops, n)))
        .collect();
    let b: Vec<SparseMatrix> = (1..=n_internal).into_par_iter().map(|n| ops.b(0, n)).collect();
    let big_b: Vec<SparseMatrix> = (0..n_internal).into_par_iter().map(|n| ops.big_b(0, n)).collect();
    let raw = MixedComplex::new_unchecked(index.iter().map(|i| i.len()).collect(), b, big_b);
    let mixed = raw.quotient(&quotients, context)?;
    Ok(RowComplex { n_internal, index, quotients, mixed })
}

/// Row modulo `(1 - T)`.
pub fn hcg_complex(a: &Algebra, g: &FiniteGroupAction, n_internal: usize) -> Result<RowComplex> {
    row_complex(a, g, n_internal, |ops, n| one_minus(&ops.t(0, n)), "row modulo (1 - T)")
}

/// Span of `m - h·m` over all `h`.
pub(crate) fn coinvariant_relations(ix: &TensorBasisIndex, g: &FiniteGroupAction) -> SparseMatrix {
    (0..g.order())
        .filter(|&h| h != g.identity())
        .map(|h| one_minus(&conjugation_on(ix, g, h)))
        .fold(SparseMatrix::zeros(ix.len(), 0), |acc, m| acc.hstack(&m))
}

/// Row modulo the group action `h·(g / a) = (h g h^{-1} / h(a))`.
pub fn coinvariant_complex(a: &Algebra, g: &FiniteGroupAction, n_internal: usize) -> Result<RowComplex> {
    row_complex(
        a,
        g,
        n_internal,
        |ops, n| coinvariant_relations(&ops.index(0, n), ops.group),
        "row modulo the group action",
    )
}

#[allow(non_snake_case)]
pub fn hcG_bicomplex(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<HomologyResult> {
    Ok(homology(&hcg_complex(a, g, max_degree + 1)?.total()?))
}

pub fn coinvariant_bicomplex(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<HomologyResult> {
    Ok(homology(&coinvariant_complex(a, g, max_degree + 1)?.total()?))
}

pub fn coinvariant_dims(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<Vec<usize>> {
    Ok(homology_dims(&coinvariant_complex(a, g, max_degree + 1)?.total()?))
}

/// `(A ⊗ Ā^{⊗n} / G^c, b, B)` twisted by `c^{-1}`.
pub fn stalk_complex(
    a: &Algebra,
    g: &FiniteGroupAction,
    c: usize,
    n_internal: usize,
) -> Result<HkBicomplex> {
    let centralizer: Vec<_> = (0..g.order())
        .filter(|&h| g.mul(h, c) == g.mul(c, h))
        .map(|h| g.action(h).clone())
        .collect();
    twisted_quotient_complex(
        a,
        g.action(g.inverse(c)),
        &centralizer,
        n_internal,
        &format!("stalk over {}", g.element_names()[c]),
    )
}

/// Homology of one stalk.
#[derive(Clone, Debug)]
pub struct StalkHomology {
    pub representative: usize,
    pub class: Vec<usize>,
    pub centralizer: Vec<usize>,
    pub homology: HomologyResult,
}

/// One stalk per conjugacy class, each through `max_degree`.
pub fn conjugacy_decomposition(
    a: &Algebra,
    g: &FiniteGroupAction,
    max_degree: usize,
) -> Result<Vec<StalkHomology>> {
    let cd = conjugacy_data(g);
    cd.representatives
        .par_iter()
        .enumerate()
        .map(|(k, &c)| {
            let st = stalk_complex(a, g, c, max_degree + 1)?;
            Ok(StalkHomology {
                representative: c,
                class: cd.classes[k].clone(),
                centralizer: cd.centralizers[k].clone(),
                homology: homology(&st.total()?),
            })
        })
        .collect()
}

/// Per-degree outcome of the comparison map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremDegree {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub stalk_dim: usize,
    /// Rank of the composite with the projection onto the stalk over `g^{-1}`.
    pub stalk_rank: usize,
    pub injective: bool,
    /// The composite with the stalk projection is an isomorphism, so the image is a
    /// direct summand isomorphic to that stalk.
    pub summand: bool,
}

#[derive(Clone, Debug)]
pub struct TheoremMapReport {
    pub element: usize,
    pub degrees: Vec<TheoremDegree>,
    /// Induced matrices into the coinvariant homology.
    pub induced: Vec<SparseMatrix>,
}

/// Ambient map `A ⊗ Ā^{⊗m} → k[G] ⊗ A ⊗ Ā^{⊗m}`, `a ↦ (x / a)`.
fn insert_group(src: &TensorBasisIndex, dst: &TensorBasisIndex, x: usize) -> SparseMatrix {
    let one = crate::linalg::q(1);
    src.build_map(dst.len(), |_, slots, out| {
        out.push((dst.encode(&[x], slots).expect("same normalization"), one.clone()));
    })
}

/// Ambient map `k[G] ⊗ A ⊗ Ā^{⊗m} → A ⊗ Ā^{⊗m}` sending `(k c k^{-1} / a)` to
/// `k^{-1}(a)` and the other classes to zero.
fn stalk_projection(
    src: &TensorBasisIndex,
    dst: &TensorBasisIndex,
    g: &FiniteGroupAction,
    c: usize,
) -> SparseMatrix {
    let one = crate::linalg::q(1);
    src.build_map(dst.len(), |groups, slots, out| {
        if let Some(k) = (0..g.order()).find(|&k| g.conjugate(k, c) == groups[0]) {
            let kinv = g.action(g.inverse(k));
            let vecs: Vec<_> = slots.iter().map(|&i| kinv.image(i)).collect();
            dst.accumulate(&[], &vecs, &one, out);
        }
    })
}

/// The map `HC^x(A) → H(coinvariant row)` induced by `a ↦ (x^{-1} / a)`, with the rank
/// certificate against the stalk over `x^{-1}`.
pub fn theorem_map_f(
    a: &Algebra,
    g: &FiniteGroupAction,
    x: usize,
    max_degree: usize,
) -> Result<TheoremMapReport> {
    let n_int = max_degree + 1;
    let xinv = g.inverse(x);
    let src = hk_bicomplex(a, g.action(x), max_degree)?;
    let coinv = coinvariant_complex(a, g, n_int)?;
    let stalk = stalk_complex(a, g, xinv, n_int)?;

    let f_mixed: Vec<SparseMatrix> = (0..=n_int)
        .into_par_iter()
        .map(|m| {
            let amb = insert_group(&normalized_index(a, m), &coinv.index[m], xinv);
            descend_map(&amb, &src.quotients[m], &coinv.quotients[m], &format!("inclusion in degree {m}"))
        })
        .collect::<Result<_>>()?;
    let pi_mixed: Vec<SparseMatrix> = (0..=n_int)
        .into_par_iter()
        .map(|m| {
            let amb = stalk_projection(&coinv.index[m], &normalized_index(a, m), g, xinv);
            descend_map(&amb, &coinv.quotients[m], &stalk.quotients[m], &format!("stalk projection in degree {m}"))
        })
        .collect::<Result<_>>()?;
    // the row operator B agrees with minus the twisted one modulo the relations
    let f_tot = total_map(&f_mixed, n_int, true);
    let pi_tot = total_map(&pi_mixed, n_int, true);

    let src_tot = src.total()?;
    let coinv_tot = coinv.total()?;
    let stalk_tot = stalk.total()?;
    let (src_h, coinv_h, stalk_h) = (homology(&src_tot), homology(&coinv_tot), homology(&stalk_tot));
    let induced = induced_on_homology(&f_tot, &src_tot, &coinv_tot, &src_h, &coinv_h, 0, "comparison map")?;
    let composite: Vec<SparseMatrix> = pi_tot.iter().zip(&f_tot).map(|(p, f)| p.mul(f)).collect();
    let induced_stalk =
        induced_on_homology(&composite, &src_tot, &stalk_tot, &src_h, &stalk_h, 0, "stalk composite")?;
    let degrees = (0..=max_degree)
        .map(|n| {
            let r = rank(&induced[n]);
            let sr = rank(&induced_stalk[n]);
            let sd = src_h.dims[n];
            TheoremDegree {
                degree: n,
                source_dim: sd,
                target_dim: coinv_h.dims[n],
                rank: r,
                stalk_dim: stalk_h.dims[n],
                stalk_rank: sr,
                injective: r == sd,
                summand: sr == sd && sd == stalk_h.dims[n],
            }
        })
        .collect();
    Ok(TheoremMapReport { element: x, degrees, induced })
}
