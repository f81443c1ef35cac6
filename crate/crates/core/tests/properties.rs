use proptest::prelude::*;

use thl_core::linalg::{
    descend_map, homology, kernel_basis, q, quotient_by, rank, ChainComplexQ, SparseMatrix,
};

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = SparseMatrix> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, cols), rows)
        .prop_map(|m| SparseMatrix::from_dense(&m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect::<Vec<_>>()))
}

fn any_matrix() -> impl Strategy<Value = SparseMatrix> {
    (1usize..7, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))
}

/// A complex `0 → C_2 → C_1 → C_0` with `d_2` factoring through `ker d_1`.
fn any_complex() -> impl Strategy<Value = ChainComplexQ> {
    (1usize..5, 1usize..6, 1usize..5)
        .prop_flat_map(|(c0, c1, c2)| (matrix(c0, c1), matrix(c1, c2), Just(c2)))
        .prop_map(|(d1, raw, c2)| {
            let ker = kernel_basis(&d1);
            let mix = SparseMatrix::from_dense(
                &(0..ker.ncols())
                    .map(|i| (0..c2).map(|j| q(raw.get(i % raw.nrows(), j).numer().try_into().unwrap_or(0i64))).collect())
                    .collect::<Vec<_>>(),
            );
            let d2 = if ker.ncols() == 0 { SparseMatrix::zeros(d1.ncols(), c2) } else { ker.mul(&mix) };
            let d3 = SparseMatrix::zeros(c2, 0);
            ChainComplexQ::new(vec![d1.nrows(), d1.ncols(), c2, 0], vec![d1, d2, d3], "random").unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn rank_plus_nullity(m in any_matrix()) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.ncols(), m.ncols());
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn quotient_section_and_projection(m in any_matrix()) {
        let qp = quotient_by(m.nrows(), &m);
        prop_assert_eq!(qp.dim() + rank(&m), m.nrows());
        prop_assert!(qp.projection().mul(&m).is_zero());
        prop_assert_eq!(qp.projection().mul(qp.section()), SparseMatrix::identity(qp.dim()));
        let id = descend_map(&SparseMatrix::identity(m.nrows()), &qp, &qp, "identity").unwrap();
        prop_assert_eq!(id, SparseMatrix::identity(qp.dim()));
    }

    #[test]
    fn euler_characteristic(c in any_complex()) {
        let h = homology(&c);
        let chi = |d: &[usize]| d.iter().enumerate().map(|(n, &x)| if n % 2 == 0 { x as i64 } else { -(x as i64) }).sum::<i64>();
        prop_assert_eq!(h.dims.len(), 3);
        prop_assert_eq!(chi(&h.dims), chi(&c.dims()[..3]));
    }

    #[test]
    fn homology_ignores_basis_order(
        (c, perms) in any_complex().prop_flat_map(|c| {
            let ps: Vec<_> = c.dims().iter().map(|&n| permutation(n)).collect();
            (Just(c), ps)
        })
    ) {
        let p = c.permuted(&perms);
        prop_assert_eq!(homology(&c).dims, homology(&p).dims);
    }
}
