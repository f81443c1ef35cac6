//! Brute-force cross-checks: cyclic homology through the Connes quotient complex,
//! built from raw structure constants with its own elimination routine.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use thl_core::algebra::{Algebra, AlgebraMap, FiniteGroupAction};
use thl_core::crossed::{coinvariant_dims, conjugacy_decomposition, proposition_dims};
use thl_core::fixtures::fixture;
use thl_core::linalg::Rational;
use thl_core::twisted::{twisted_cyclic_dims, twisted_hochschild};

/// Structure constants `mult[i][j]` as dense integer vectors.
struct Table {
    d: usize,
    mult: Vec<Vec<Vec<i64>>>,
}

fn integer(x: &Rational) -> i64 {
    assert!(x.denom().is_one());
    x.numer().try_into().unwrap()
}

fn dense(v: &thl_core::linalg::SparseVec, d: usize) -> Vec<i64> {
    let mut out = vec![0; d];
    for (i, c) in v.iter() {
        out[*i] = integer(c);
    }
    out
}

fn table_of(a: &Algebra) -> Table {
    let d = a.dim();
    let mult = (0..d).map(|i| (0..d).map(|j| dense(a.mul_basis(i, j), d)).collect()).collect();
    Table { d, mult }
}

/// `(e_i x)(e_j y) = e_i x(e_j) xy`, basis `(x, i) ↦ x d + i`.
fn crossed_table(a: &Algebra, g: &FiniteGroupAction) -> Table {
    let base = table_of(a);
    let (d, r) = (a.dim(), g.order());
    let mut mult = vec![vec![vec![0; d * r]; d * r]; d * r];
    for x in 0..r {
        for y in 0..r {
            let xy = g.mul(x, y);
            for i in 0..d {
                for j in 0..d {
                    let moved = dense(g.action(x).image(j), d);
                    for (k, &c) in moved.iter().enumerate() {
                        for (l, &m) in base.mult[i][k].iter().enumerate() {
                            mult[x * d + i][y * d + j][xy * d + l] += c * m;
                        }
                    }
                }
            }
        }
    }
    Table { d: d * r, mult }
}

fn decode(mut idx: usize, d: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in (0..len).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
    out
}

fn encode(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * d + x)
}

/// Classes of pure tensors in `A^{⊗(n+1)} / (1 - t)` with
/// `t(a_0, …, a_n) = (-1)^n (λ(a_n) a_n, a_0, …, a_{n-1})` for a diagonal twist `λ`.
struct Classes {
    reps: Vec<usize>,
    /// tensor ↦ (representative position, sign), or `None` if the class is zero
    class: Vec<Option<(usize, i64)>>,
}

fn classes(d: usize, n: usize, lambda: &[i64]) -> Classes {
    let len = n + 1;
    let total = d.pow(len as u32);
    let parity = if n % 2 == 0 { 1 } else { -1 };
    let mut class = vec![None; total];
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for start in 0..total {
        if seen[start] {
            continue;
        }
        // [r^k w] = f_k [w]
        let mut orbit = vec![(start, 1i64)];
        let mut cur = decode(start, d, len);
        let mut f = 1;
        let consistent = loop {
            let last = cur[n];
            f *= parity * lambda[last];
            cur.rotate_right(1);
            let idx = encode(&cur, d);
            if idx == start {
                break f == 1;
            }
            orbit.push((idx, f));
        };
        for &(idx, _) in &orbit {
            seen[idx] = true;
        }
        if !consistent {
            continue;
        }
        let (rep, rep_f) = *orbit.iter().min_by_key(|(i, _)| *i).unwrap();
        let pos = reps.len();
        reps.push(rep);
        for &(idx, fk) in &orbit {
            // [idx] = fk [w], [rep] = rep_f [w]
            class[idx] = Some((pos, fk * rep_f));
        }
    }
    Classes { reps, class }
}

/// Columns of the map induced by the twisted `b` from degree `n` to `n - 1`.
fn lambda_b(t: &Table, n: usize, lambda: &[i64], src: &Classes, dst: &Classes) -> Vec<BTreeMap<usize, Rational>> {
    let d = t.d;
    src.reps
        .iter()
        .map(|&w| {
            let a = decode(w, d, n + 1);
            let mut out: BTreeMap<usize, i64> = BTreeMap::new();
            let mut push = |tensor: &[usize], c: i64| {
                if let Some((pos, s)) = dst.class[encode(tensor, d)] {
                    *out.entry(pos).or_insert(0) += c * s;
                }
            };
            for i in 0..n {
                let sgn = if i % 2 == 0 { 1 } else { -1 };
                for (k, &c) in t.mult[a[i]][a[i + 1]].iter().enumerate() {
                    if c != 0 {
                        let mut face: Vec<usize> = a[..i].to_vec();
                        face.push(k);
                        face.extend_from_slice(&a[i + 2..]);
                        push(&face, sgn * c);
                    }
                }
            }
            let sgn = if n % 2 == 0 { 1 } else { -1 };
            for (k, &c) in t.mult[a[n]][a[0]].iter().enumerate() {
                if c != 0 {
                    let mut face = vec![k];
                    face.extend_from_slice(&a[1..n]);
                    push(&face, sgn * c * lambda[a[n]]);
                }
            }
            out.into_iter()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (i, Rational::from_integer(c.into())))
                .collect()
        })
        .collect()
}

/// Rank by incremental echelon reduction.
fn rank(cols: Vec<BTreeMap<usize, Rational>>) -> usize {
    let mut pivots: HashMap<usize, BTreeMap<usize, Rational>> = HashMap::new();
    for mut v in cols {
        loop {
            let Some((&lead, c)) = v.iter().next() else { break };
            let c = c.clone();
            match pivots.get(&lead) {
                Some(p) => {
                    for (i, x) in p {
                        let e = v.entry(*i).or_insert_with(Rational::zero);
                        *e -= &c * x;
                        if e.is_zero() {
                            v.remove(i);
                        }
                    }
                }
                None => {
                    let inv = c.recip();
                    let normalized = v.into_iter().map(|(i, x)| (i, x * &inv)).collect();
                    pivots.insert(lead, normalized);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `HC_n` for `n ≤ max_degree` from the Connes quotient complex.
fn connes_dims(t: &Table, lambda: &[i64], max_degree: usize) -> Vec<usize> {
    let cls: Vec<Classes> = (0..=max_degree + 1).map(|n| classes(t.d, n, lambda)).collect();
    let ranks: Vec<usize> = (1..=max_degree + 1)
        .map(|n| rank(lambda_b(t, n, lambda, &cls[n], &cls[n - 1])))
        .collect();
    (0..=max_degree)
        .map(|n| {
            let out = if n == 0 { 0 } else { ranks[n - 1] };
            cls[n].reps.len() - out - ranks[n]
        })
        .collect()
}

fn crossed_oracle(name: &str, max_degree: usize) -> Vec<usize> {
    let f = fixture(name).unwrap();
    let t = crossed_table(&f.algebra, &f.group);
    connes_dims(&t, &vec![1; t.d], max_degree)
}

/// Eigenvalues of a diagonal `±1` automorphism.
fn diagonal(g: &AlgebraMap, d: usize) -> Vec<i64> {
    (0..d)
        .map(|j| {
            let col = dense(g.image(j), d);
            assert!(col.iter().enumerate().all(|(i, &c)| i == j || c == 0));
            col[j]
        })
        .collect()
}

#[test]
fn ground_field_connes_complex() {
    let f = fixture("ground-field").unwrap();
    let t = table_of(&f.algebra);
    assert_eq!(connes_dims(&t, &[1], 4), vec![1, 0, 1, 0, 1]);
    assert_eq!(twisted_cyclic_dims(&f.algebra, &AlgebraMap::identity(1), 4).unwrap(), vec![1, 0, 1, 0, 1]);
}

#[test]
fn plain_cyclic_homology_of_truncated_polynomials() {
    for name in ["trunc-poly-z2", "trunc-cubic-z2"] {
        let f = fixture(name).unwrap();
        let t = table_of(&f.algebra);
        let d = f.algebra.dim();
        let expected = connes_dims(&t, &vec![1; d], 3);
        assert_eq!(twisted_cyclic_dims(&f.algebra, &AlgebraMap::identity(d), 3).unwrap(), expected, "{name}");
    }
}

#[test]
fn twisted_cyclic_homology_for_sign_flips() {
    for name in ["trunc-poly-z2", "trunc-cubic-z2"] {
        let f = fixture(name).unwrap();
        let g = f.group.action(1);
        let d = f.algebra.dim();
        let expected = connes_dims(&table_of(&f.algebra), &diagonal(g, d), 3);
        assert_eq!(twisted_cyclic_dims(&f.algebra, g, 3).unwrap(), expected, "{name}");
    }
}

#[test]
fn crossed_product_small_fixtures() {
    for name in ["ground-field", "trunc-poly-z2"] {
        let f = fixture(name).unwrap();
        let oracle = crossed_oracle(name, 3);
        assert_eq!(proposition_dims(&f.algebra, &f.group, 3).unwrap(), oracle, "{name}");
        assert_eq!(coinvariant_dims(&f.algebra, &f.group, 3).unwrap(), oracle, "{name}");
    }
    assert_eq!(crossed_oracle("trunc-poly-z2", 3), vec![2, 1, 2, 1]);
}

#[test]
fn crossed_product_larger_fixtures() {
    for name in ["trunc-cubic-z2", "diag3-z3"] {
        let f = fixture(name).unwrap();
        let oracle = crossed_oracle(name, 2);
        assert_eq!(coinvariant_dims(&f.algebra, &f.group, 2).unwrap(), oracle, "{name}");
        let stalks = conjugacy_decomposition(&f.algebra, &f.group, 2).unwrap();
        let summed: Vec<usize> = (0..=2).map(|n| stalks.iter().map(|s| s.homology.dims[n]).sum()).collect();
        assert_eq!(summed, oracle, "{name}");
    }
}

#[test]
fn hochschild_of_ground_field() {
    let f = fixture("ground-field").unwrap();
    assert_eq!(twisted_hochschild(&f.algebra, &AlgebraMap::identity(1), 3).unwrap().dims, vec![1, 0, 0, 0]);
}
