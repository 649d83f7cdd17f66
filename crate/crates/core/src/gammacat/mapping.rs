use std::sync::Arc;

use super::{hom_index, GammaMorphism, TruncatedGammaCategory};
use crate::fincat::functor_cat::assemble_with;
use crate::fincat::{ArrowId, FiniteCategory, Functor, ObjId};
use crate::gammaop::BasedMap;
use crate::{Error, Limits, Result};

/// All levels side by side, with the offsets of each level.
struct Total {
    category: Arc<FiniteCategory>,
    obj_offset: Vec<usize>,
    arr_offset: Vec<usize>,
}

impl Total {
    fn new(x: &TruncatedGammaCategory) -> Total {
        let mut obj_offset = vec![0];
        let mut arr_offset = vec![0];
        let mut endpoints = Vec::new();
        let mut identity = Vec::new();
        for c in x.levels() {
            let (o, a) = (*obj_offset.last().unwrap(), *arr_offset.last().unwrap());
            endpoints.extend(c.arrows().map(|f| (c.dom(f) + o, c.cod(f) + o)));
            identity.extend(c.objects().map(|y| c.identity(y) + a));
            obj_offset.push(o + c.object_count());
            arr_offset.push(a + c.arrow_count());
        }
        let level_of = |f: ArrowId| arr_offset.partition_point(|&off| off <= f) - 1;
        let category =
            FiniteCategory::from_fn(*obj_offset.last().unwrap(), endpoints, identity, |g, f| {
                let k = level_of(f);
                let a = arr_offset[k];
                x.levels()[k].compose(g - a, f - a) + a
            });
        Total {
            category: Arc::new(category),
            obj_offset,
            arr_offset,
        }
    }

    fn level_of_object(&self, x: ObjId) -> usize {
        self.obj_offset.partition_point(|&off| off <= x) - 1
    }
}

struct Search<'a> {
    tx: &'a Total,
    ty: &'a Total,
    actions: Vec<Vec<(&'a Functor, &'a Functor, usize)>>,
    limit: usize,
}

impl Search<'_> {
    /// Assigns global object `v ↦ w` and pushes every forced consequence.
    fn assign_object(&self, map: &mut [Option<ObjId>], v: ObjId, w: ObjId) -> bool {
        let mut stack = vec![(v, w)];
        while let Some((v, w)) = stack.pop() {
            match map[v] {
                Some(old) if old == w => continue,
                Some(_) => return false,
                None => map[v] = Some(w),
            }
            let k = self.tx.level_of_object(v);
            let (lv, lw) = (v - self.tx.obj_offset[k], w - self.ty.obj_offset[k]);
            for &(xf, yf, m) in &self.actions[k] {
                stack.push((
                    xf.obj(lv) + self.tx.obj_offset[m],
                    yf.obj(lw) + self.ty.obj_offset[m],
                ));
            }
        }
        true
    }

    fn assign_arrow(&self, map: &mut [Option<ArrowId>], u: ArrowId, v: ArrowId) -> bool {
        let (cx, cy) = (&self.tx.category, &self.ty.category);
        let mut stack = vec![(u, v)];
        while let Some((u, v)) = stack.pop() {
            match map[u] {
                Some(old) if old == v => continue,
                Some(_) => return false,
                None => map[u] = Some(v),
            }
            let k = self.tx.arr_offset.partition_point(|&off| off <= u) - 1;
            let (lu, lv) = (u - self.tx.arr_offset[k], v - self.ty.arr_offset[k]);
            for &(xf, yf, m) in &self.actions[k] {
                stack.push((
                    xf.arr(lu) + self.tx.arr_offset[m],
                    yf.arr(lv) + self.ty.arr_offset[m],
                ));
            }
            for &g in cx.out_arrows(cx.cod(u)) {
                if let Some(gv) = map[g] {
                    match cy.try_compose(gv, v) {
                        Some(c) => stack.push((cx.compose(g, u), c)),
                        None => return false,
                    }
                }
            }
            for &f in cx.in_arrows(cx.dom(u)) {
                if let Some(fv) = map[f] {
                    match cy.try_compose(v, fv) {
                        Some(c) => stack.push((cx.compose(u, f), c)),
                        None => return false,
                    }
                }
            }
        }
        true
    }

    fn objects(&self, map: Vec<Option<ObjId>>, out: &mut Vec<Functor>) -> Result<()> {
        let Some(v) = map.iter().position(Option::is_none) else {
            let obj: Vec<ObjId> = map.into_iter().map(Option::unwrap).collect();
            let (cx, cy) = (&self.tx.category, &self.ty.category);
            let mut arr = vec![None; cx.arrow_count()];
            for a in cx.objects() {
                if !self.assign_arrow(&mut arr, cx.identity(a), cy.identity(obj[a])) {
                    return Ok(());
                }
            }
            return self.arrows(&obj, arr, out);
        };
        let k = self.tx.level_of_object(v);
        for w in self.ty.obj_offset[k]..self.ty.obj_offset[k + 1] {
            let mut next = map.clone();
            if self.assign_object(&mut next, v, w) {
                self.objects(next, out)?;
            }
        }
        Ok(())
    }

    fn arrows(
        &self,
        obj: &[ObjId],
        arr: Vec<Option<ArrowId>>,
        out: &mut Vec<Functor>,
    ) -> Result<()> {
        let (cx, cy) = (&self.tx.category, &self.ty.category);
        let Some(u) = arr.iter().position(Option::is_none) else {
            let arr: Vec<ArrowId> = arr.into_iter().map(Option::unwrap).collect();
            let f = Functor::new_unchecked(cx.clone(), cy.clone(), obj.to_vec(), arr);
            if f.violations().is_empty() {
                if out.len() >= self.limit {
                    return Err(Error::SizeLimit {
                        what: "Γ-morphisms",
                        limit: self.limit,
                    });
                }
                out.push(f);
            }
            return Ok(());
        };
        for &v in cy.hom(obj[cx.dom(u)], obj[cx.cod(u)]) {
            let mut next = arr.clone();
            if self.assign_arrow(&mut next, u, v) {
                self.arrows(obj, next, out)?;
            }
        }
        Ok(())
    }
}

/// The category of Γ-morphisms `X → Y` and levelwise natural
/// transformations compatible with the action.
#[derive(Clone, Debug)]
pub struct MapCategory {
    pub category: Arc<FiniteCategory>,
    pub morphisms: Vec<GammaMorphism>,
    /// For each arrow: `components[k][x]` is the component at object `x` of
    /// level `k`.
    pub transformations: Vec<Vec<Vec<ArrowId>>>,
}

pub fn map_category(
    x: &TruncatedGammaCategory,
    y: &TruncatedGammaCategory,
    limits: &Limits,
) -> Result<MapCategory> {
    if x.truncation() != y.truncation() {
        return Err(Error::Mismatch(format!(
            "truncations {} and {}",
            x.truncation(),
            y.truncation()
        )));
    }
    let (tx, ty) = (Total::new(x), Total::new(y));
    let n = x.truncation();
    let mut actions = vec![Vec::new(); n + 1];
    for (f, xf) in x.actions() {
        if !f.is_identity() {
            actions[f.source].push((xf, y.action(f)?, f.target));
        }
    }
    let search = Search {
        tx: &tx,
        ty: &ty,
        actions,
        limit: limits.max_functors,
    };
    let mut functors = Vec::new();
    search.objects(vec![None; tx.category.object_count()], &mut functors)?;

    let compatible = |alpha: &[ArrowId]| -> bool {
        search.actions.iter().enumerate().all(|(k, acts)| {
            (tx.obj_offset[k]..tx.obj_offset[k + 1]).all(|v| {
                let a = alpha[v] - ty.arr_offset[k];
                let lv = v - tx.obj_offset[k];
                acts.iter().all(|&(xf, yf, m)| {
                    alpha[xf.obj(lv) + tx.obj_offset[m]] == yf.arr(a) + ty.arr_offset[m]
                })
            })
        })
    };
    let inner = assemble_with(functors.clone(), limits, |f, g| {
        crate::fincat::enumerate_transformations(f, g)
            .into_iter()
            .filter(|alpha| compatible(alpha))
            .collect()
    })?;
    let morphisms = functors.iter().map(|f| split(f, x, y, &tx, &ty)).collect();
    let transformations = inner
        .transformations
        .iter()
        .map(|t| {
            (0..=n)
                .map(|k| {
                    (tx.obj_offset[k]..tx.obj_offset[k + 1])
                        .map(|v| t.components[v] - ty.arr_offset[k])
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(MapCategory {
        category: inner.category,
        morphisms,
        transformations,
    })
}

fn split(
    f: &Functor,
    x: &TruncatedGammaCategory,
    y: &TruncatedGammaCategory,
    tx: &Total,
    ty: &Total,
) -> GammaMorphism {
    let components = (0..=x.truncation())
        .map(|k| {
            let (ox, ax) = (tx.obj_offset[k], tx.arr_offset[k]);
            let (oy, ay) = (ty.obj_offset[k], ty.arr_offset[k]);
            let c = &x.levels()[k];
            Functor::new_unchecked(
                c.clone(),
                y.levels()[k].clone(),
                c.objects().map(|v| f.obj(v + ox) - oy).collect(),
                c.arrows().map(|u| f.arr(u + ax) - ay).collect(),
            )
        })
        .collect();
    GammaMorphism { components }
}

/// Evaluation `Map(Γⁿ, X) → X(n⁺)` at the identity of `n⁺`.
pub fn yoneda_evaluation(
    maps: &MapCategory,
    x: &TruncatedGammaCategory,
    n: usize,
) -> Result<Functor> {
    let id = hom_index(&BasedMap::identity(n));
    let target = x.level(n)?.clone();
    let objects = maps
        .morphisms
        .iter()
        .map(|m| m.components[n].obj(id))
        .collect();
    let arrows = maps.transformations.iter().map(|t| t[n][id]).collect();
    Ok(Functor::new_unchecked(
        maps.category.clone(),
        target,
        objects,
        arrows,
    ))
}

#[cfg(test)]
mod tests {
    use super::super::{constant, representable, to_terminal};
    use super::*;
    use crate::fincat::classify_functor;
    use crate::fincat::constructions::{terminal, walking_iso};

    #[test]
    fn yoneda_on_representables() {
        let limits = Limits::default();
        for (n, k) in [(1, 1), (1, 2), (0, 2), (2, 1)] {
            let x = representable(k, 2).unwrap();
            let maps = map_category(&representable(n, 2).unwrap(), &x, &limits).unwrap();
            let ev = yoneda_evaluation(&maps, &x, n).unwrap();
            assert!(ev.violations().is_empty());
            assert!(ev.is_isomorphism(), "Γ{n} → Γ{k}");
        }
    }

    #[test]
    fn yoneda_on_a_constant() {
        let limits = Limits::default();
        let x = constant(Arc::new(walking_iso()), 2);
        let maps = map_category(&representable(1, 2).unwrap(), &x, &limits).unwrap();
        let ev = yoneda_evaluation(&maps, &x, 1).unwrap();
        assert!(ev.is_isomorphism());
        assert!(classify_functor(&ev).equivalence);
    }

    #[test]
    fn into_terminal_is_terminal() {
        let g = representable(2, 2).unwrap();
        let (t, _) = to_terminal(&g);
        let maps = map_category(&g, &t, &Limits::default()).unwrap();
        assert_eq!(maps.category.object_count(), 1);
        assert_eq!(maps.category.arrow_count(), 1);
        let _ = terminal();
    }
}
