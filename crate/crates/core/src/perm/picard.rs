use serde::Serialize;

use super::PermutativeStructure;
use crate::fincat::constructions::Product;
use crate::fincat::{classify_functor, Functor, ObjId};
use crate::quotient::UnionFind;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PicardReport {
    /// `(⊗, p₁): G × G → G × G` is an equivalence.
    pub shear1: bool,
    /// `(⊗, p₂): G × G → G × G` is an equivalence.
    pub shear2: bool,
    /// Every object has a tensor inverse up to isomorphism.
    pub inverses: bool,
    /// The three verdicts agree.
    pub consistent: bool,
    /// Least object without a tensor inverse.
    pub missing_inverse: Option<ObjId>,
}

impl PicardReport {
    pub fn all(&self) -> bool {
        self.shear1 && self.shear2 && self.inverses
    }
}

fn shear(g: &PermutativeStructure, keep_left: bool) -> Functor {
    let base = g.base();
    let prod = Product::new(base, base);
    let (n, m) = (base.object_count(), base.arrow_count());
    let objects = prod
        .category
        .objects()
        .map(|x| {
            let (a, b) = (x / n, x % n);
            prod.object(g.tensor_obj(a, b).unwrap(), if keep_left { a } else { b })
        })
        .collect();
    let arrows = prod
        .category
        .arrows()
        .map(|f| {
            let (u, v) = (f / m, f % m);
            prod.arrow(g.tensor_arr(u, v).unwrap(), if keep_left { u } else { v })
        })
        .collect();
    Functor::new_unchecked(
        prod.category.clone(),
        prod.category.clone(),
        objects,
        arrows,
    )
}

/// Both shear criteria and the inverse criterion.
pub fn is_picard(g: &PermutativeStructure) -> Result<PicardReport> {
    let base = g.base();
    if let Some(f) = base.arrows().find(|&f| !base.is_iso(f)) {
        return Err(Error::NotAGroupoid {
            arrow: base.arrow_name(f),
        });
    }
    if !g.is_total() {
        return Err(Error::PartialTensor);
    }
    let shear1 = classify_functor(&shear(g, true)).equivalence;
    let shear2 = classify_functor(&shear(g, false)).equivalence;
    let unit = g.unit();
    let missing_inverse = base.objects().find(|&a| {
        !base.objects().any(|b| {
            !base.hom(g.tensor_obj(a, b).unwrap(), unit).is_empty()
                && !base.hom(g.tensor_obj(b, a).unwrap(), unit).is_empty()
        })
    });
    let inverses = missing_inverse.is_none();
    Ok(PicardReport {
        shear1,
        shear2,
        inverses,
        consistent: shear1 == shear2 && shear2 == inverses,
        missing_inverse,
    })
}

/// A finite group by its operation table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianGroupTable {
    pub order: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GroupViolation {
    Associativity(usize, usize, usize),
    Commutativity(usize, usize),
    Identity(usize),
    Inverse(usize),
}

impl AbelianGroupTable {
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn trivial() -> AbelianGroupTable {
        AbelianGroupTable {
            order: 1,
            identity: 0,
            table: vec![vec![0]],
        }
    }

    pub fn cyclic(n: usize) -> AbelianGroupTable {
        AbelianGroupTable {
            order: n,
            identity: 0,
            table: (0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect(),
        }
    }

    pub fn violations(&self) -> Vec<GroupViolation> {
        let n = self.order;
        let mut out = Vec::new();
        for a in 0..n {
            if self.op(self.identity, a) != a || self.op(a, self.identity) != a {
                out.push(GroupViolation::Identity(a));
            }
            if !(0..n).any(|b| self.op(a, b) == self.identity) {
                out.push(GroupViolation::Inverse(a));
            }
            for b in 0..n {
                if self.op(a, b) != self.op(b, a) {
                    out.push(GroupViolation::Commutativity(a, b));
                }
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        out.push(GroupViolation::Associativity(a, b, c));
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }
}

/// A bijection `φ` with `φ(ab) = φ(a)φ(b)`, found by backtracking.
pub fn groups_isomorphic(g: &AbelianGroupTable, h: &AbelianGroupTable) -> Option<Vec<usize>> {
    if g.order != h.order {
        return None;
    }
    let n = g.order;
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    phi[g.identity] = h.identity;
    used[h.identity] = true;
    fn go(
        g: &AbelianGroupTable,
        h: &AbelianGroupTable,
        a: usize,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = g.order;
        if a == n {
            return true;
        }
        if phi[a] != usize::MAX {
            return go(g, h, a + 1, phi, used);
        }
        for x in 0..n {
            if used[x] {
                continue;
            }
            phi[a] = x;
            used[x] = true;
            let ok = (0..n).all(|b| {
                (0..n).all(|c| {
                    let (pb, pc, pbc) = (phi[b], phi[c], phi[g.op(b, c)]);
                    pb == usize::MAX || pc == usize::MAX || pbc == usize::MAX || h.op(pb, pc) == pbc
                })
            });
            if ok && go(g, h, a + 1, phi, used) {
                return true;
            }
            phi[a] = usize::MAX;
            used[x] = false;
        }
        false
    }
    go(g, h, 0, &mut phi, &mut used).then_some(phi)
}

/// Iso classes of objects under the induced tensor, and automorphisms of the
/// unit under composition. Class labels follow the least object in each class.
pub fn pi0_pi1(g: &PermutativeStructure) -> Result<(AbelianGroupTable, AbelianGroupTable)> {
    let report = is_picard(g)?;
    if !report.all() {
        return Err(Error::NotPicard);
    }
    let base = g.base();
    let mut uf = UnionFind::new(base.object_count());
    for f in base.arrows() {
        uf.union(base.dom(f), base.cod(f));
    }
    let (label, count) = uf.canonical_labels();
    let mut rep = vec![usize::MAX; count];
    for x in base.objects().rev() {
        rep[label[x]] = x;
    }
    let pi0 = AbelianGroupTable {
        order: count,
        identity: label[g.unit()],
        table: (0..count)
            .map(|a| {
                (0..count)
                    .map(|b| label[g.tensor_obj(rep[a], rep[b]).unwrap()])
                    .collect()
            })
            .collect(),
    };
    let e = g.unit();
    let aut = base.hom(e, e).to_vec();
    let pos = |f: usize| aut.iter().position(|&x| x == f).unwrap();
    let pi1 = AbelianGroupTable {
        order: aut.len(),
        identity: pos(base.identity(e)),
        table: aut
            .iter()
            .map(|&a| aut.iter().map(|&b| pos(base.compose(b, a))).collect())
            .collect(),
    };
    for (name, t) in [("pi0", &pi0), ("pi1", &pi1)] {
        if let Some(v) = t.violations().first() {
            return Err(Error::Invalid(format!(
                "{name} is not an abelian group: {v:?}"
            )));
        }
    }
    Ok((pi0, pi1))
}

#[cfg(test)]
mod tests {
    use super::super::corpus;
    use super::*;

    #[test]
    fn picard_verdicts_on_the_corpus() {
        for (name, g) in corpus::groupoids() {
            let r = is_picard(&g).unwrap();
            assert!(r.consistent, "{name}: {r:?}");
            assert_eq!(r.all(), name != "max_monoid", "{name}");
        }
    }

    #[test]
    fn stable_invariants() {
        let z2 = AbelianGroupTable::cyclic(2);
        let z3 = AbelianGroupTable::cyclic(3);
        let one = AbelianGroupTable::trivial();
        let cases = [
            (corpus::discrete_cyclic(2), &z2, &one),
            (corpus::one_object_cyclic(3), &one, &z3),
            (corpus::z2_times_bz3(), &z2, &z3),
        ];
        for (g, a, b) in cases {
            let (p0, p1) = pi0_pi1(&g).unwrap();
            assert!(groups_isomorphic(&p0, a).is_some());
            assert!(groups_isomorphic(&p1, b).is_some());
        }
        assert!(matches!(
            pi0_pi1(&corpus::max_monoid()),
            Err(Error::NotPicard)
        ));
    }

    #[test]
    fn klein_is_not_cyclic() {
        let klein = pi0_pi1(&corpus::discrete_klein()).unwrap().0;
        assert!(groups_isomorphic(&klein, &AbelianGroupTable::cyclic(4)).is_none());
        assert!(groups_isomorphic(&klein, &klein).is_some());
    }
}
