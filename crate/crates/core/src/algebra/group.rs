//! Finite groups by multiplication table, acting on an algebra.

use super::{Algebra, AlgebraMap};
use crate::error::{Error, Result};

/// A finite group with an action on an algebra by automorphisms.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteGroupAction {
    element_names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    action: Vec<AlgebraMap>,
}

impl FiniteGroupAction {
    /// Validates the group law; the action itself is checked by [`validate_action`].
    pub fn new(
        element_names: Vec<String>,
        table: Vec<Vec<usize>>,
        action: Vec<AlgebraMap>,
    ) -> Result<Self> {
        let r = element_names.len();
        let group_err = |detail: String| Error::Action { element: "group law".into(), detail };
        if r == 0 || table.len() != r || table.iter().any(|row| row.len() != r) {
            return Err(group_err(format!("multiplication table must be {r}x{r}")));
        }
        if action.len() != r {
            return Err(group_err(format!("{} action maps for {r} elements", action.len())));
        }
        if table.iter().flatten().any(|&x| x >= r) {
            return Err(group_err("table entry out of range".into()));
        }
        let identity = (0..r)
            .find(|&e| (0..r).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| group_err("no identity element".into()))?;
        for x in 0..r {
            for y in 0..r {
                for z in 0..r {
                    if table[table[x][y]][z] != table[x][table[y][z]] {
                        let n = &element_names;
                        return Err(group_err(format!(
                            "({0}{1}){2} ≠ {0}({1}{2})",
                            n[x], n[y], n[z]
                        )));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(r);
        for x in 0..r {
            let inv = (0..r)
                .find(|&y| table[x][y] == identity)
                .ok_or_else(|| group_err(format!("{} has no inverse", element_names[x])))?;
            inverse.push(inv);
        }
        Ok(FiniteGroupAction { element_names, table, identity, inverse, action })
    }

    /// The trivial group acting on an algebra of dimension `dim`.
    pub fn trivial(dim: usize) -> Self {
        FiniteGroupAction {
            element_names: vec!["e".into()],
            table: vec![vec![0]],
            identity: 0,
            inverse: vec![0],
            action: vec![AlgebraMap::identity(dim)],
        }
    }

    /// Cyclic group generated by an automorphism of finite order `n`; element `k` is `g^k`.
    pub fn cyclic(generator: &AlgebraMap, n: usize) -> Result<Self> {
        let mut action = vec![AlgebraMap::identity(generator.matrix().ncols())];
        for k in 1..n {
            action.push(generator.compose(&action[k - 1]));
        }
        if !generator.compose(&action[n - 1]).is_identity() {
            return Err(Error::Action {
                element: "g".into(),
                detail: format!("g^{n} is not the identity"),
            });
        }
        let names = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
        Self::new(names, table, action)
    }

    pub fn order(&self) -> usize {
        self.element_names.len()
    }

    pub fn element_names(&self) -> &[String] {
        &self.element_names
    }

    pub fn element_index(&self, name: &str) -> Result<usize> {
        self.element_names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    /// Product of a sequence, left to right.
    pub fn product(&self, xs: &[usize]) -> usize {
        xs.iter().fold(self.identity, |acc, &x| self.table[acc][x])
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.inverse[x]
    }

    pub fn action(&self, x: usize) -> &AlgebraMap {
        &self.action[x]
    }

    pub fn actions(&self) -> &[AlgebraMap] {
        &self.action
    }

    /// `h x h^{-1}`.
    pub fn conjugate(&self, h: usize, x: usize) -> usize {
        self.table[self.table[h][x]][self.inverse[h]]
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != self.identity {
            y = self.table[y][x];
            k += 1;
        }
        k
    }

    /// The cyclic subgroup generated by `x`, sorted.
    pub fn generated_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = vec![self.identity];
        let mut y = x;
        while y != self.identity {
            out.push(y);
            y = self.table[y][x];
        }
        out.sort_unstable();
        out
    }
}

/// Checks that every element acts by a valid automorphism and that
/// `action[gh] = action[g] ∘ action[h]`, `action[e] = id`.
pub fn validate_action(a: &Algebra, g: &FiniteGroupAction) -> Result<()> {
    for (x, m) in g.action.iter().enumerate() {
        m.validate(a, &g.element_names[x])?;
    }
    if !g.action[g.identity].is_identity() {
        return Err(Error::Action {
            element: g.element_names[g.identity].clone(),
            detail: "identity element does not act trivially".into(),
        });
    }
    let r = g.order();
    for x in 0..r {
        for y in 0..r {
            if g.action[g.table[x][y]] != g.action[x].compose(&g.action[y]) {
                return Err(Error::Action {
                    element: format!("({}, {})", g.element_names[x], g.element_names[y]),
                    detail: "action is not a homomorphism".into(),
                });
            }
        }
    }
    Ok(())
}

/// Conjugacy classes with their representatives (smallest index) and centralizers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
    pub centralizers: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn class_of(&self, x: usize) -> usize {
        self.classes.iter().position(|c| c.contains(&x)).expect("classes partition the group")
    }
}

pub fn conjugacy_data(g: &FiniteGroupAction) -> ConjugacyData {
    let r = g.order();
    let mut seen = vec![false; r];
    let mut out = ConjugacyData { classes: vec![], representatives: vec![], centralizers: vec![] };
    for x in 0..r {
        if seen[x] {
            continue;
        }
        let mut class: Vec<usize> = (0..r).map(|h| g.conjugate(h, x)).collect();
        class.sort_unstable();
        class.dedup();
        for &y in &class {
            seen[y] = true;
        }
        let centralizer = (0..r).filter(|&h| g.mul(h, x) == g.mul(x, h)).collect();
        out.classes.push(class);
        out.representatives.push(x);
        out.centralizers.push(centralizer);
    }
    out
}
