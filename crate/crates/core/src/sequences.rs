//! G-Hochschild homology, the periodicity sequence, G-de Rham homology and the
//! Karoubi sequence, all on the coinvariant row complex.

use rayon::prelude::*;

use crate::algebra::{Algebra, FiniteGroupAction, TensorBasisIndex};
use crate::crossed::{coinvariant_complex, RowComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    descend_map, homology, induced_on_homology, kernel_basis, q, quotient_by, quotient_complex,
    rank, ChainComplexQ, CochainComplexQ, HomologyResult, QuotientPresentation,
    SparseMatrix, SparseVec, SpanCoords,
};

/// One node `X → Y → Z` of a long sequence, judged at `Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessNode {
    pub label: String,
    /// Rank of the incoming map.
    pub image_dim: usize,
    /// Nullity of the outgoing map.
    pub kernel_dim: usize,
    pub composite_zero: bool,
}

impl ExactnessNode {
    pub fn exact(&self) -> bool {
        self.composite_zero && self.image_dim == self.kernel_dim
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExactnessReport {
    pub nodes: Vec<ExactnessNode>,
    pub notes: Vec<String>,
}

impl ExactnessReport {
    pub fn all_exact(&self) -> bool {
        self.nodes.iter().all(ExactnessNode::exact)
    }

    pub fn all_composites_zero(&self) -> bool {
        self.nodes.iter().all(|n| n.composite_zero)
    }
}

fn node(label: String, incoming: &SparseMatrix, outgoing: &SparseMatrix, dim: usize) -> ExactnessNode {
    let composite = if outgoing.ncols() == incoming.nrows() {
        outgoing.mul(incoming)
    } else {
        SparseMatrix::zeros(0, 0)
    };
    ExactnessNode {
        label,
        image_dim: rank(incoming),
        kernel_dim: dim - rank(outgoing),
        composite_zero: composite.is_zero(),
    }
}

/// `HH^G_n(A)` for `n ≤ max_degree`.
pub fn g_hochschild(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<HomologyResult> {
    Ok(homology(&coinvariant_complex(a, g, max_degree + 1)?.hochschild()?))
}

/// Dimensions of both homologies together with the exactness verdicts.
#[derive(Clone, Debug)]
pub struct SbiReport {
    pub hh_dims: Vec<usize>,
    pub hc_dims: Vec<usize>,
    pub report: ExactnessReport,
}

fn column_inclusion(row: &RowComplex, tot: &ChainComplexQ) -> Vec<SparseMatrix> {
    (0..=tot.top())
        .map(|n| {
            let m = row.mixed.dims()[n];
            SparseMatrix::from_columns(tot.dim(n), (0..m).map(SparseVec::unit).collect())
        })
        .collect()
}

/// `Tot_n → Tot_{n-2}` dropping component 0; empty maps below degree 2.
fn periodicity(row: &RowComplex, tot: &ChainComplexQ) -> Vec<SparseMatrix> {
    (0..=tot.top())
        .map(|n| {
            if n < 2 {
                return SparseMatrix::zeros(0, tot.dim(n));
            }
            let m = row.mixed.dims()[n];
            let cols = (0..tot.dim(n))
                .map(|j| if j < m { SparseVec::new() } else { SparseVec::unit(j - m) })
                .collect();
            SparseMatrix::from_columns(tot.dim(n - 2), cols)
        })
        .collect()
}

/// `Tot_m → M_{m+1}`, `x ↦ (-1)^m B x_0`.
fn connecting(row: &RowComplex, tot: &ChainComplexQ, upto: usize) -> Vec<SparseMatrix> {
    (0..upto)
        .map(|m| {
            let dm = row.mixed.dims()[m];
            let big_b = row.mixed.big_b(m);
            let big_b = if m % 2 == 1 { big_b.neg() } else { big_b.clone() };
            let cols = (0..tot.dim(m))
                .map(|j| if j < dm { big_b.col(j).clone() } else { SparseVec::new() })
                .collect();
            SparseMatrix::from_columns(big_b.nrows(), cols)
        })
        .collect()
}

/// `… → HH_n → HC_n → HC_{n-2} → HH_{n-1} → …` for the coinvariant row complex.
pub fn sbi_sequence(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<SbiReport> {
    let n_int = max_degree + 1;
    let row = coinvariant_complex(a, g, n_int)?;
    let hoch = row.hochschild()?;
    let tot = row.total()?;
    let (hh, hc) = rayon::join(|| homology(&hoch), || homology(&tot));
    let i_maps = induced_on_homology(&column_inclusion(&row, &tot), &hoch, &tot, &hh, &hc, 0, "I")?;
    let s_maps = induced_on_homology(&periodicity(&row, &tot), &tot, &tot, &hc, &hc, -2, "S")?;
    let d_maps = induced_on_homology(&connecting(&row, &tot, n_int), &tot, &hoch, &hc, &hh, 1, "B")?;
    let top = max_degree;
    let zero_into = |rows: usize, cols: usize| SparseMatrix::zeros(rows, cols);
    let mut report = ExactnessReport::default();
    for n in 0..=top {
        // HH_n: incoming B from HC_{n-1}, outgoing I_n
        let incoming = if n >= 1 { d_maps[n - 1].clone() } else { zero_into(hh.dims[0], 0) };
        report.nodes.push(node(format!("HH_{n}"), &incoming, &i_maps[n], hh.dims[n]));
        // HC_n after I: outgoing S_n
        report.nodes.push(node(format!("HC_{n} (I→S)"), &i_maps[n], &s_maps[n], hc.dims[n]));
        // HC_n after S: incoming S_{n+2}, outgoing B_n
        if n + 2 <= top && n < top {
            report.nodes.push(node(format!("HC_{n} (S→B)"), &s_maps[n + 2], &d_maps[n], hc.dims[n]));
        }
    }
    report.notes.push(
        "connecting map lands in HH_{n-1}; the printed HH_{n-2} index is not used".to_string(),
    );
    Ok(SbiReport { hh_dims: hh.dims, hc_dims: hc.dims, report })
}

/// `d(x / a_0, ā_1, …, ā_n) = (x / 1, ā_0, …, ā_n)` on `k[G] ⊗ A ⊗ Ā^{⊗n}`.
pub fn derham_d(src: &TensorBasisIndex, dst: &TensorBasisIndex) -> SparseMatrix {
    let one = q(1);
    src.build_map(dst.len(), |groups, slots, out| {
        let mut moved = Vec::with_capacity(slots.len() + 1);
        moved.push(0);
        moved.extend_from_slice(slots);
        if let Some(i) = dst.encode(groups, &moved) {
            out.push((i, one.clone()));
        }
    })
}

/// The abelianized complex `C̄ / (im(bd + db) + im b)` with the induced `d`.
#[derive(Clone, Debug)]
pub struct DeRhamComplex {
    pub row: RowComplex,
    /// `d` on the coinvariant modules, degree `n → n + 1`.
    pub d: Vec<SparseMatrix>,
    pub abelianized: Vec<QuotientPresentation>,
    pub complex: CochainComplexQ,
}

/// Built through degree `top`; homology is valid below `top`.
pub fn derham_complex(a: &Algebra, g: &FiniteGroupAction, top: usize) -> Result<DeRhamComplex> {
    let row = coinvariant_complex(a, g, top + 1)?;
    let d: Vec<SparseMatrix> = (0..=top)
        .into_par_iter()
        .map(|n| {
            let amb = derham_d(&row.index[n], &row.index[n + 1]);
            descend_map(&amb, &row.quotients[n], &row.quotients[n + 1], &format!("d on degree {n}"))
        })
        .collect::<Result<_>>()?;
    let abelianized: Vec<QuotientPresentation> = (0..=top)
        .into_par_iter()
        .map(|n| {
            let b_next = row.mixed.b(n + 1);
            let mut bd = b_next.mul(&d[n]);
            if n >= 1 {
                bd = bd.add(&d[n - 1].mul(row.mixed.b(n)));
            }
            quotient_by(bd.nrows(), &bd.hstack(b_next))
        })
        .collect();
    for n in 0..top {
        if !d[n + 1].mul(&d[n]).is_zero() {
            return Err(Error::Complex {
                context: "de Rham d∘d before abelianizing".into(),
                degree: n,
                detail: "nonzero".into(),
            });
        }
    }
    let d_ab: Vec<SparseMatrix> = (0..top)
        .map(|n| descend_map(&d[n], &abelianized[n], &abelianized[n + 1], &format!("abelianized d on degree {n}")))
        .collect::<Result<_>>()?;
    let complex = CochainComplexQ::new(abelianized.iter().map(|q| q.dim()).collect(), d_ab, "abelianized de Rham")?;
    Ok(DeRhamComplex { row, d, abelianized, complex })
}

/// `HDR^G_n(A)` for `n ≤ max_degree`.
pub fn derham_homology(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<HomologyResult> {
    derham_complex(a, g, max_degree + 1)?.complex.homology("abelianized de Rham")
}

/// Dimensions of the three terms and the verdicts for `n ≤ max_degree - 1`.
#[derive(Clone, Debug)]
pub struct KaroubiReport {
    pub hdr_dims: Vec<usize>,
    pub hc_bar_dims: Vec<usize>,
    pub hh_bar_dims: Vec<usize>,
    pub report: ExactnessReport,
}

/// Classes `(x / 1)` in the degree-0 coinvariant module.
fn ground_classes(row: &RowComplex) -> SparseMatrix {
    let ix = &row.index[0];
    let cols = (0..ix.group_order())
        .map(|x| row.quotients[0].project(&SparseVec::unit(ix.encode(&[x], &[0]).unwrap())))
        .collect();
    SparseMatrix::from_columns(row.quotients[0].dim(), cols)
}

/// `0 → HDR_n → H̄C_n → H̄H_{n+1}`.
///
/// `H̄C` is the homology of the total complex with the ground classes `(x / 1)`
/// removed from the components of positive `u`-weight. The left map is the inverse of
/// `[z] ↦ [z_0]` from the kernel of the right map to `HDR`, which is checked to be
/// well defined; the right map is `[z] ↦ (-1)^n [B z_0]`.
pub fn karoubi_sequence(a: &Algebra, g: &FiniteGroupAction, max_degree: usize) -> Result<KaroubiReport> {
    let n_int = max_degree + 1;
    let dr = derham_complex(a, g, max_degree + 1)?;
    let row = &dr.row;
    let hdr = dr.complex.homology("abelianized de Rham")?;
    let hdr_coords = hdr.coordinates();

    let tot = row.mixed.total(n_int, "total complex")?;
    let ground = ground_classes(row);
    let quotients: Vec<QuotientPresentation> = (0..=n_int)
        .map(|n| {
            let mut rels = Vec::new();
            for j in 1..=n / 2 {
                if n == 2 * j {
                    let off: usize = (0..j).map(|k| row.mixed.dims()[n - 2 * k]).sum();
                    rels.extend(ground.columns().iter().map(|c| c.shift(off)));
                }
            }
            quotient_by(tot.dim(n), &SparseMatrix::from_columns(tot.dim(n), rels))
        })
        .collect();
    let reduced = quotient_complex(&tot, &quotients, "total complex without ground classes")?;
    let hoch = row.hochschild()?;
    let (hc, hh) = rayon::join(|| homology(&reduced), || homology(&hoch));

    let right_amb = connecting(row, &tot, n_int);
    let right: Vec<SparseMatrix> = (0..n_int)
        .map(|n| {
            let idq = QuotientPresentation::identity(right_amb[n].nrows());
            descend_map(&right_amb[n], &quotients[n], &idq, "right map")
        })
        .collect::<Result<_>>()?;
    let right_h = induced_on_homology(&right, &reduced, &hoch, &hc, &hh, 1, "right map")?;

    let mut report = ExactnessReport::default();
    for n in 0..max_degree {
        let m_n = row.mixed.dims()[n];
        let first_component = |z: &SparseVec| -> SparseVec {
            let lifted = quotients[n].lift(z);
            dr.abelianized[n].project(&lifted.window(0, m_n))
        };
        // boundaries must go to d-exact forms
        for bnd in hc.boundary_basis[n].columns() {
            if !hdr_coords[n].is_boundary(&first_component(bnd)) {
                return Err(Error::WellDefinedness {
                    context: format!("H̄C_{n} → HDR_{n}"),
                    detail: "a boundary maps to a non-exact form".into(),
                });
            }
        }
        let kernel = kernel_basis(&right_h[n]);
        let mut phi_cols = Vec::with_capacity(kernel.ncols());
        for v in kernel.columns() {
            let z = hc.representatives[n].apply(v);
            let cls = hdr_coords[n].class_of(&first_component(&z)).ok_or_else(|| Error::WellDefinedness {
                context: format!("H̄C_{n} → HDR_{n}"),
                detail: "first component is not d-closed".into(),
            })?;
            phi_cols.push(cls);
        }
        let phi = SparseMatrix::from_columns(hdr.dims[n], phi_cols);
        let phi_rank = rank(&phi);
        let bijective = phi_rank == hdr.dims[n] && phi_rank == kernel.ncols();
        // left map: kernel · phi^{-1}, defined when phi is bijective
        let left = if bijective {
            let span = SpanCoords::new(phi.columns());
            let cols = (0..hdr.dims[n])
                .map(|i| {
                    let c = span.coordinates(&SparseVec::unit(i)).expect("phi is onto");
                    kernel.apply(&c)
                })
                .collect();
            SparseMatrix::from_columns(hc.dims[n], cols)
        } else {
            SparseMatrix::zeros(hc.dims[n], 0)
        };
        let composite_zero = right_h[n].mul(&left).is_zero();
        let left_rank = rank(&left);
        report.nodes.push(ExactnessNode {
            label: format!("HDR_{n}"),
            image_dim: 0,
            kernel_dim: hdr.dims[n] - left_rank.min(hdr.dims[n]),
            composite_zero: true,
        });
        report.nodes.push(ExactnessNode {
            label: format!("H̄C_{n}"),
            image_dim: left_rank,
            kernel_dim: kernel.ncols(),
            composite_zero,
        });
    }
    Ok(KaroubiReport {
        hdr_dims: hdr.dims,
        hc_bar_dims: hc.dims,
        hh_bar_dims: hh.dims,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraMap;
    use crate::fixtures::{ground_field, trunc_poly_z2, truncated_polynomial};
    use crate::twisted::twisted_hochschild;

    #[test]
    fn derham_d_examples() {
        let ix: Vec<TensorBasisIndex> = (0..3).map(|n| TensorBasisIndex::normalized(1, 2, 1, n + 1)).collect();
        let d0 = derham_d(&ix[0], &ix[1]);
        assert!(d0.apply(&SparseVec::unit(ix[0].encode(&[0], &[0]).unwrap())).is_zero());
        let dx = d0.apply(&SparseVec::unit(ix[0].encode(&[0], &[1]).unwrap()));
        assert_eq!(dx, SparseVec::unit(ix[1].encode(&[0], &[0, 1]).unwrap()));
        assert!(derham_d(&ix[1], &ix[2]).mul(&d0).is_zero());
    }

    #[test]
    fn ground_field_sequences() {
        let f = ground_field();
        let sbi = sbi_sequence(&f.algebra, &f.group, 3).unwrap();
        assert_eq!(sbi.hh_dims, vec![1, 0, 0, 0]);
        assert_eq!(sbi.hc_dims, vec![1, 0, 1, 0]);
        assert!(sbi.report.all_exact());
        assert_eq!(derham_homology(&f.algebra, &f.group, 3).unwrap().dims, vec![1, 0, 0, 0]);
        let k = karoubi_sequence(&f.algebra, &f.group, 3).unwrap();
        assert_eq!(k.hdr_dims[0], 1);
        assert_eq!(k.hc_bar_dims[0], 1);
        assert_eq!(k.hh_bar_dims[1], 0);
        assert!(k.report.all_exact());
    }

    #[test]
    fn trivial_group_hochschild_is_plain() {
        let a = truncated_polynomial(3);
        let g = FiniteGroupAction::trivial(3);
        assert_eq!(
            g_hochschild(&a, &g, 3).unwrap().dims,
            twisted_hochschild(&a, &AlgebraMap::identity(3), 3).unwrap().dims
        );
    }

    #[test]
    fn z2_sequences_are_exact() {
        let f = trunc_poly_z2();
        assert!(sbi_sequence(&f.algebra, &f.group, 3).unwrap().report.all_exact());
        let k = karoubi_sequence(&f.algebra, &f.group, 3).unwrap();
        assert!(k.report.all_exact());
        assert_eq!(k.hdr_dims, derham_homology(&f.algebra, &f.group, 3).unwrap().dims);
    }
}
