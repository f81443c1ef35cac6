//! Built-in example algebras with finite group actions.

use crate::algebra::{Algebra, AlgebraMap, FiniteGroupAction};
use crate::linalg::{q, SparseMatrix, SparseVec};

/// A named algebra with a group action and default run parameters.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub algebra: Algebra,
    pub group: FiniteGroupAction,
    pub default_degree: usize,
    /// Group element used as the twist `g` by single-automorphism commands.
    pub default_twist: &'static str,
}

pub const FIXTURE_NAMES: [&str; 5] = [
    "ground-field",
    "trunc-poly-z2",
    "diag3-z3",
    "diag3-s3",
    "trunc-cubic-z2",
];

pub fn fixture(name: &str) -> Option<Fixture> {
    Some(match name {
        "ground-field" => ground_field(),
        "trunc-poly-z2" => trunc_poly_z2(),
        "diag3-z3" => diag3_z3(),
        "diag3-s3" => diag3_s3(),
        "trunc-cubic-z2" => trunc_cubic_z2(),
        _ => return None,
    })
}

pub fn all_fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES.iter().map(|n| fixture(n).unwrap()).collect()
}

fn vec_of(coords: &[i64]) -> SparseVec {
    SparseVec::from_pairs(coords.iter().enumerate().map(|(i, &c)| (i, q(c))))
}

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Columns are images of basis vectors.
fn map_from_images(images: &[&[i64]]) -> AlgebraMap {
    let d = images.len();
    AlgebraMap::new(SparseMatrix::from_columns(d, images.iter().map(|c| vec_of(c)).collect()))
}

/// `Q[x]/(x^n)` on the basis `1, x, …, x^{n-1}`.
pub fn truncated_polynomial(n: usize) -> Algebra {
    let names = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let mult = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i + j < n { SparseVec::unit(i + j) } else { SparseVec::new() })
                .collect()
        })
        .collect();
    Algebra::new(names, SparseVec::unit(0), mult).expect("truncated polynomial algebra")
}

/// `x ↦ -x` on `Q[x]/(x^n)`.
pub fn sign_flip(n: usize) -> AlgebraMap {
    let cols = (0..n)
        .map(|k| SparseVec::from_pairs([(k, if k % 2 == 0 { q(1) } else { q(-1) })]))
        .collect();
    AlgebraMap::new(SparseMatrix::from_columns(n, cols))
}

/// `Q³` on the basis `1, f2, f3` of orthogonal idempotents completed by the unit.
pub fn diag3() -> Algebra {
    let z = SparseVec::new;
    let u = SparseVec::unit;
    let mult = vec![
        vec![u(0), u(1), u(2)],
        vec![u(1), u(1), z()],
        vec![u(2), z(), u(2)],
    ];
    Algebra::new(names(&["1", "f2", "f3"]), u(0), mult).expect("Q^3")
}

/// Image of `f_i` (1-based) in the basis `1, f2, f3`.
fn f(i: usize) -> Vec<i64> {
    match i {
        1 => vec![1, -1, -1],
        2 => vec![0, 1, 0],
        3 => vec![0, 0, 1],
        _ => unreachable!(),
    }
}

/// Automorphism `f_i ↦ f_{π(i)}` of `Q³`.
pub fn diag3_permutation(pi: [usize; 3]) -> AlgebraMap {
    let one = [1, 0, 0];
    let a = f(pi[1]);
    let b = f(pi[2]);
    map_from_images(&[&one, &a, &b])
}

pub fn ground_field() -> Fixture {
    Fixture {
        name: "ground-field",
        description: "Q with the trivial group",
        algebra: Algebra::ground_field(),
        group: FiniteGroupAction::trivial(1),
        default_degree: 3,
        default_twist: "e",
    }
}

pub fn trunc_poly_z2() -> Fixture {
    Fixture {
        name: "trunc-poly-z2",
        description: "Q[x]/(x^2) with Z/2 acting by x -> -x",
        algebra: truncated_polynomial(2),
        group: FiniteGroupAction::cyclic(&sign_flip(2), 2).expect("Z/2"),
        default_degree: 3,
        default_twist: "g",
    }
}

pub fn diag3_z3() -> Fixture {
    Fixture {
        name: "diag3-z3",
        description: "Q^3 with Z/3 cyclically shifting coordinates",
        algebra: diag3(),
        group: FiniteGroupAction::cyclic(&diag3_permutation([2, 3, 1]), 3).expect("Z/3"),
        default_degree: 3,
        default_twist: "g",
    }
}

/// Permutations of `{1,2,3}` as `π(1), π(2), π(3)`.
const S3: [(&str, [usize; 3]); 6] = [
    ("e", [1, 2, 3]),
    ("(12)", [2, 1, 3]),
    ("(13)", [3, 2, 1]),
    ("(23)", [1, 3, 2]),
    ("(123)", [2, 3, 1]),
    ("(132)", [3, 1, 2]),
];

pub fn diag3_s3() -> Fixture {
    let compose = |a: [usize; 3], b: [usize; 3]| [a[b[0] - 1], a[b[1] - 1], a[b[2] - 1]];
    let index = |p: [usize; 3]| S3.iter().position(|(_, x)| *x == p).unwrap();
    let table = S3
        .iter()
        .map(|(_, a)| S3.iter().map(|(_, b)| index(compose(*a, *b))).collect())
        .collect();
    let action = S3.iter().map(|(_, p)| diag3_permutation(*p)).collect();
    let group = FiniteGroupAction::new(S3.iter().map(|(n, _)| n.to_string()).collect(), table, action)
        .expect("S3");
    Fixture {
        name: "diag3-s3",
        description: "Q^3 with S3 permuting coordinates",
        algebra: diag3(),
        group,
        default_degree: 2,
        default_twist: "(123)",
    }
}

pub fn trunc_cubic_z2() -> Fixture {
    Fixture {
        name: "trunc-cubic-z2",
        description: "Q[x]/(x^3) with Z/2 acting by x -> -x",
        algebra: truncated_polynomial(3),
        group: FiniteGroupAction::cyclic(&sign_flip(3), 2).expect("Z/2"),
        default_degree: 3,
        default_twist: "g",
    }
}
