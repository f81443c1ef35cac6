//! Exact operator identities on the normalized bigraded modules.

use rayon::prelude::*;

use super::operators::GjOperators;
use crate::algebra::{Algebra, FiniteGroupAction, TensorBasisIndex};
use crate::error::Result;
use crate::linalg::{format_rational, SparseMatrix};

/// First nonzero entry of a failed identity, labeled by basis tensors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub source: String,
    pub target: String,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub p: usize,
    pub q: usize,
    pub residual: Option<Residual>,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.residual.is_none()
    }
}

pub const IDENTITY_NAMES: [&str; 8] = [
    "b∘b",
    "B∘B",
    "b̄∘b̄",
    "bB+Bb-(1-T)",
    "b̄B+Bb̄",
    "[T,b]",
    "[T,b̄]",
    "[T,B]",
];

/// Names of the checks on the unreduced pair `(b + b̄, B + T B̄)`.
pub const PAIR_NAMES: [&str; 3] = ["pair d∘d", "pair D∘D", "pair dD+Dd-(1-T)"];

struct Ctx<'a> {
    ops: GjOperators<'a>,
}

impl Ctx<'_> {
    fn ix(&self, p: usize, q: usize) -> TensorBasisIndex {
        self.ops.index(p, q)
    }

    fn check(&self, name: &'static str, p: usize, q: usize, m: SparseMatrix, tgt: (usize, usize)) -> IdentityCheck {
        let residual = m.first_nonzero().map(|(i, j, v)| {
            let (a, g) = (self.ops.algebra, self.ops.group);
            Residual {
                source: self.ix(p, q).label(j, a, Some(g)),
                target: self.ix(tgt.0, tgt.1).label(i, a, Some(g)),
                coefficient: format_rational(&v),
            }
        });
        IdentityCheck { name, p, q, residual }
    }

    fn one_minus_t(&self, p: usize, q: usize) -> SparseMatrix {
        SparseMatrix::identity(self.ix(p, q).len()).sub(&self.ops.t(p, q))
    }

    fn at(&self, p: usize, q: usize) -> Vec<IdentityCheck> {
        let o = &self.ops;
        let mut out = Vec::new();
        let t = o.t(p, q);
        let big_b = o.big_b(p, q);
        if q >= 2 {
            out.push(self.check("b∘b", p, q, o.b(p, q - 1).mul(&o.b(p, q)), (p, q - 2)));
        }
        out.push(self.check("B∘B", p, q, o.big_b(p, q + 1).mul(&big_b), (p, q + 2)));
        if p >= 2 {
            out.push(self.check("b̄∘b̄", p, q, o.bbar(p - 1, q).mul(&o.bbar(p, q)), (p - 2, q)));
        }
        let mut anti = o.b(p, q + 1).mul(&big_b);
        if q >= 1 {
            anti = anti.add(&o.big_b(p, q - 1).mul(&o.b(p, q)));
        }
        out.push(self.check("bB+Bb-(1-T)", p, q, anti.sub(&self.one_minus_t(p, q)), (p, q)));
        if p >= 1 {
            let m = o.bbar(p, q + 1).mul(&big_b).add(&o.big_b(p - 1, q).mul(&o.bbar(p, q)));
            out.push(self.check("b̄B+Bb̄", p, q, m, (p - 1, q + 1)));
        }
        if q >= 1 {
            let b = o.b(p, q);
            out.push(self.check("[T,b]", p, q, o.t(p, q - 1).mul(&b).sub(&b.mul(&t)), (p, q - 1)));
        }
        if p >= 1 {
            let bb = o.bbar(p, q);
            out.push(self.check("[T,b̄]", p, q, o.t(p - 1, q).mul(&bb).sub(&bb.mul(&t)), (p - 1, q)));
        }
        out.push(self.check("[T,B]", p, q, o.t(p, q + 1).mul(&big_b).sub(&big_b.mul(&t)), (p, q + 1)));
        out
    }

    /// `T B̄` with `B̄` carrying the same `(-1)^q` as `b̄`.
    fn t_bbar_connes(&self, p: usize, q: usize) -> SparseMatrix {
        let m = self.ops.t(p + 1, q).mul(&self.ops.bbar_connes(p, q));
        if q % 2 == 1 {
            m.neg()
        } else {
            m
        }
    }

    /// Components of the pair identities leaving `(p, q)`.
    fn pair_at(&self, p: usize, q: usize) -> Vec<IdentityCheck> {
        let o = &self.ops;
        let mut out = Vec::new();
        let tb = self.t_bbar_connes(p, q);
        let big_b = o.big_b(p, q);
        // d∘d: components (p, q-2), (p-1, q-1), (p-2, q)
        let mut dd = Vec::new();
        if q >= 2 {
            dd.push((o.b(p, q - 1).mul(&o.b(p, q)), (p, q - 2)));
        }
        if p >= 1 && q >= 1 {
            let m = o.bbar(p, q - 1).mul(&o.b(p, q)).add(&o.b(p - 1, q).mul(&o.bbar(p, q)));
            dd.push((m, (p - 1, q - 1)));
        }
        if p >= 2 {
            dd.push((o.bbar(p - 1, q).mul(&o.bbar(p, q)), (p - 2, q)));
        }
        out.push(self.first_failure("pair d∘d", p, q, dd));
        // D∘D: components (p, q+2), (p+1, q+1), (p+2, q)
        let dd = vec![
            (o.big_b(p, q + 1).mul(&big_b), (p, q + 2)),
            (
                self.t_bbar_connes(p, q + 1).mul(&big_b).add(&o.big_b(p + 1, q).mul(&tb)),
                (p + 1, q + 1),
            ),
            (self.t_bbar_connes(p + 1, q).mul(&tb), (p + 2, q)),
        ];
        out.push(self.first_failure("pair D∘D", p, q, dd));
        // dD + Dd - (1 - T): components (p, q), (p+1, q-1), (p-1, q+1)
        let mut same = o.b(p, q + 1).mul(&big_b).sub(&self.one_minus_t(p, q));
        if q >= 1 {
            same = same.add(&o.big_b(p, q - 1).mul(&o.b(p, q)));
        }
        same = same.add(&o.bbar(p + 1, q).mul(&tb));
        if p >= 1 {
            same = same.add(&self.t_bbar_connes(p - 1, q).mul(&o.bbar(p, q)));
        }
        let mut comps = vec![(same, (p, q))];
        if q >= 1 {
            let m = o.b(p + 1, q).mul(&tb).add(&self.t_bbar_connes(p, q - 1).mul(&o.b(p, q)));
            comps.push((m, (p + 1, q - 1)));
        }
        if p >= 1 {
            let m = o.bbar(p, q + 1).mul(&big_b).add(&o.big_b(p - 1, q).mul(&o.bbar(p, q)));
            comps.push((m, (p - 1, q + 1)));
        }
        out.push(self.first_failure("pair dD+Dd-(1-T)", p, q, comps));
        out
    }

    fn first_failure(
        &self,
        name: &'static str,
        p: usize,
        q: usize,
        comps: Vec<(SparseMatrix, (usize, usize))>,
    ) -> IdentityCheck {
        comps
            .into_iter()
            .map(|(m, tgt)| self.check(name, p, q, m, tgt))
            .find(|c| !c.passed())
            .unwrap_or(IdentityCheck { name, p, q, residual: None })
    }
}

fn bidegrees(max_total: usize) -> Vec<(usize, usize)> {
    (0..=max_total).flat_map(|n| (0..=n).map(move |p| (p, n - p))).collect()
}

/// The named identities on every bidegree with `p + q ≤ max_total`.
pub fn verify_identities(a: &Algebra, g: &FiniteGroupAction, max_total: usize) -> Result<Vec<IdentityCheck>> {
    let ctx = Ctx { ops: GjOperators::new(a, g)? };
    let per: Vec<Vec<IdentityCheck>> = bidegrees(max_total).par_iter().map(|&(p, q)| ctx.at(p, q)).collect();
    Ok(per.into_iter().flatten().collect())
}

/// Identities for the unreduced pair `(b + b̄, B + T B̄)` on every bidegree with
/// `p + q ≤ max_total`.
pub fn verify_pair_identities(
    a: &Algebra,
    g: &FiniteGroupAction,
    max_total: usize,
) -> Result<Vec<IdentityCheck>> {
    let ctx = Ctx { ops: GjOperators::new(a, g)? };
    let per: Vec<Vec<IdentityCheck>> =
        bidegrees(max_total).par_iter().map(|&(p, q)| ctx.pair_at(p, q)).collect();
    Ok(per.into_iter().flatten().collect())
}
