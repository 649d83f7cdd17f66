//! `K(C)(n⁺)` as decomposition diagrams: objects `c_S` for `S ⊆ {1..n}`,
//! splitting isomorphisms `ρ_{S,T}: c_{S∪T} → c_S ⊗ c_T` for disjoint pairs
//! and a trivialization `ρ_∅: c_∅ → 1`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::lgroupoid::{build_l, LGroupoid};
use crate::fincat::{ArrowId, FiniteCategory, Functor, ObjId};
use crate::gammacat::{segal_local_checks, GammaMorphism, LocalityReport, TruncatedGammaCategory};
use crate::gammaop::BasedMap;
use crate::perm::{
    is_picard, strict_sm_functor_category, PermutativeStructure, PicardReport,
    StrictFunctorCategory,
};
use crate::quotient::UnionFind;
use crate::{Error, Limits, Result};

const NONE: ArrowId = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecompositionDiagram {
    pub n: usize,
    /// `c_S`, indexed by the bitmask of `S`.
    pub objects: Vec<ObjId>,
    /// `ρ_{S,T}` at `S·2ⁿ + T` for disjoint `S`, `T`; unused entries hold `usize::MAX`.
    pub splittings: Vec<ArrowId>,
    /// `ρ_∅: c_∅ → 1`.
    pub trivialization: ArrowId,
}

impl DecompositionDiagram {
    pub fn object(&self, subset: usize) -> ObjId {
        self.objects[subset]
    }

    pub fn splitting(&self, s: usize, t: usize) -> ArrowId {
        self.splittings[s << self.n | t]
    }
}

/// One level of the nerve.
#[derive(Clone, Debug)]
pub struct NerveLevel {
    pub n: usize,
    pub diagrams: Vec<DecompositionDiagram>,
    /// Components `φ_S` of each arrow, indexed by subset bitmask.
    pub families: Vec<Vec<ArrowId>>,
    pub category: Arc<FiniteCategory>,
    index: HashMap<DecompositionDiagram, ObjId>,
    arrow_index: HashMap<(ObjId, ObjId, Vec<ArrowId>), ArrowId>,
}

#[derive(Clone, Debug)]
pub struct SegalNerve {
    pub gamma: TruncatedGammaCategory,
    pub levels: Vec<NerveLevel>,
}

fn lowest(mask: usize) -> usize {
    mask & mask.wrapping_neg()
}

struct Ctx<'a> {
    c: &'a PermutativeStructure,
    n: usize,
}

impl Ctx<'_> {
    fn base(&self) -> &FiniteCategory {
        self.c.base()
    }

    fn tensor_arr(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        self.c.tensor_arr(f, g)
    }

    fn inverse(&self, f: ArrowId) -> Option<ArrowId> {
        self.base().inverse(f)
    }

    /// Fills in every splitting from the chosen `ρ_{a, S∖a}` (with `a` the
    /// least element of `S`), the symmetry and the unit.
    fn derive_splittings(
        &self,
        objects: &[ObjId],
        chosen: &[ArrowId],
        triv: ArrowId,
    ) -> Option<Vec<ArrowId>> {
        let size = 1usize << self.n;
        let c = self.base();
        let mut rho = vec![NONE; size * size];
        let triv_inv = self.inverse(triv)?;
        for s in 0..size {
            // ρ_{∅,S} = ρ_∅⁻¹ ⊗ id, ρ_{S,∅} = id ⊗ ρ_∅⁻¹
            rho[s] = self.tensor_arr(triv_inv, c.identity(objects[s]))?;
            if s != 0 {
                rho[s * size] = self.tensor_arr(c.identity(objects[s]), triv_inv)?;
            }
        }
        for s in 1..size {
            if s.count_ones() < 2 {
                continue;
            }
            let a = lowest(s);
            rho[a * size + (s ^ a)] = chosen[s];
            // subsets t ∋ a, ordered by size so that smaller ones are ready
            let mut ts: Vec<usize> = (1..s)
                .filter(|&t| t & s == t && t & a != 0 && t != a)
                .collect();
            ts.sort_by_key(|t| t.count_ones());
            for t in ts {
                let u = s ^ t;
                let rest = t ^ a;
                // (ρ_{a,T'} ⊗ id_U) ∘ ρ_{T,U} = (id_a ⊗ ρ_{T',U}) ∘ ρ_{a,T'∪U}
                let left = self.tensor_arr(rho[a * size + rest], c.identity(objects[u]))?;
                let right = self.tensor_arr(c.identity(objects[a]), rho[rest * size + u])?;
                let path = c.try_compose(right, rho[a * size + (rest | u)])?;
                rho[t * size + u] = c.try_compose(self.inverse(left)?, path)?;
            }
            for t in (1..s).filter(|&t| t & s == t && t & a == 0) {
                let u = s ^ t;
                let gamma = self.c.symmetry(objects[u], objects[t])?;
                rho[t * size + u] = c.try_compose(gamma, rho[u * size + t])?;
            }
        }
        Some(rho)
    }

    /// All constraints on a fully specified diagram.
    fn coherent(&self, d: &DecompositionDiagram) -> bool {
        let size = 1usize << self.n;
        let c = self.base();
        let o = &d.objects;
        let unit = self.c.unit();
        if c.dom(d.trivialization) != o[0]
            || c.cod(d.trivialization) != unit
            || !c.is_iso(d.trivialization)
        {
            return false;
        }
        for s in 0..size {
            for t in (0..size).filter(|&t| t & s == 0) {
                let r = d.splitting(s, t);
                if r == NONE
                    || c.dom(r) != o[s | t]
                    || Some(c.cod(r)) != self.c.tensor_obj(o[s], o[t])
                    || !c.is_iso(r)
                {
                    return false;
                }
                let Some(gamma) = self.c.symmetry(o[s], o[t]) else {
                    return false;
                };
                if c.try_compose(gamma, r) != Some(d.splitting(t, s)) {
                    return false;
                }
                for u in (0..size).filter(|&u| u & (s | t) == 0) {
                    let left = self
                        .tensor_arr(r, c.identity(o[u]))
                        .and_then(|x| c.try_compose(x, d.splitting(s | t, u)));
                    let right = self
                        .tensor_arr(c.identity(o[s]), d.splitting(t, u))
                        .and_then(|x| c.try_compose(x, d.splitting(s, t | u)));
                    if left.is_none() || left != right {
                        return false;
                    }
                }
            }
        }
        let inv = c.inverse(d.trivialization).unwrap();
        let left = self.tensor_arr(inv, c.identity(o[0]));
        let right = self.tensor_arr(c.identity(o[0]), inv);
        left.is_some() && left == right && left == Some(d.splitting(0, 0))
    }

    fn diagrams(&self, limits: &Limits) -> Result<Vec<DecompositionDiagram>> {
        let size = 1usize << self.n;
        let c = self.base();
        let unit = self.c.unit();
        let mut out = Vec::new();
        let mut objects = vec![0; size];
        let mut chosen = vec![NONE; size];
        let singletons: Vec<usize> = (0..self.n).map(|i| 1 << i).collect();
        let composites: Vec<usize> = (1..size).filter(|s: &usize| s.count_ones() >= 2).collect();

        let trivs: Vec<ArrowId> = c
            .in_arrows(unit)
            .iter()
            .copied()
            .filter(|&f| c.is_iso(f))
            .collect();
        for &triv in &trivs {
            objects[0] = c.dom(triv);
            let mut assignment = vec![0usize; self.n];
            loop {
                for (i, &s) in singletons.iter().enumerate() {
                    objects[s] = assignment[i];
                }
                self.composite_choices(
                    &composites,
                    0,
                    &mut objects,
                    &mut chosen,
                    triv,
                    &mut out,
                    limits,
                )?;
                // next singleton assignment
                let mut i = 0;
                while i < self.n {
                    assignment[i] += 1;
                    if assignment[i] < c.object_count() {
                        break;
                    }
                    assignment[i] = 0;
                    i += 1;
                }
                if i == self.n {
                    break;
                }
            }
        }
        Ok(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn composite_choices(
        &self,
        composites: &[usize],
        at: usize,
        objects: &mut Vec<ObjId>,
        chosen: &mut Vec<ArrowId>,
        triv: ArrowId,
        out: &mut Vec<DecompositionDiagram>,
        limits: &Limits,
    ) -> Result<()> {
        let c = self.base();
        let size = 1usize << self.n;
        if at == composites.len() {
            let Some(splittings) = self.derive_splittings(objects, chosen, triv) else {
                return Ok(());
            };
            let d = DecompositionDiagram {
                n: self.n,
                objects: objects.clone(),
                splittings: splittings
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| {
                        if (i / size) & (i % size) == 0 {
                            r
                        } else {
                            NONE
                        }
                    })
                    .collect(),
                trivialization: triv,
            };
            if self.coherent(&d) {
                if out.len() >= limits.max_objects {
                    return Err(Error::SizeLimit {
                        what: "decomposition diagrams",
                        limit: limits.max_objects,
                    });
                }
                out.push(d);
            }
            return Ok(());
        }
        let s = composites[at];
        let a = lowest(s);
        let Some(target) = self.c.tensor_obj(objects[a], objects[s ^ a]) else {
            return Ok(());
        };
        for &r in c.in_arrows(target) {
            if !c.is_iso(r) {
                continue;
            }
            objects[s] = c.dom(r);
            chosen[s] = r;
            self.composite_choices(composites, at + 1, objects, chosen, triv, out, limits)?;
        }
        Ok(())
    }

    /// `φ` from its singleton components, or `None` if it does not commute
    /// with the splittings.
    fn family(
        &self,
        src: &DecompositionDiagram,
        tgt: &DecompositionDiagram,
        singles: &[ArrowId],
    ) -> Option<Vec<ArrowId>> {
        let size = 1usize << self.n;
        let c = self.base();
        let mut phi = vec![NONE; size];
        phi[0] = c.try_compose(c.inverse(tgt.trivialization)?, src.trivialization)?;
        for (i, &f) in singles.iter().enumerate() {
            phi[1 << i] = f;
        }
        for s in (1..size).filter(|s: &usize| s.count_ones() >= 2) {
            let a = lowest(s);
            let t = self.tensor_arr(phi[a], phi[s ^ a])?;
            let path = c.try_compose(t, src.splitting(a, s ^ a))?;
            phi[s] = c.try_compose(c.inverse(tgt.splitting(a, s ^ a))?, path)?;
        }
        for s in 0..size {
            for t in (0..size).filter(|&t| t & s == 0) {
                let left = c.try_compose(tgt.splitting(s, t), phi[s | t]);
                let right = self
                    .tensor_arr(phi[s], phi[t])
                    .and_then(|x| c.try_compose(x, src.splitting(s, t)));
                if left.is_none() || left != right {
                    return None;
                }
            }
        }
        Some(phi)
    }

    fn level(&self, limits: &Limits) -> Result<NerveLevel> {
        let diagrams = self.diagrams(limits)?;
        let c = self.base();
        let index: HashMap<DecompositionDiagram, ObjId> = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        let mut endpoints = Vec::new();
        let mut families: Vec<Vec<ArrowId>> = Vec::new();
        for (i, src) in diagrams.iter().enumerate() {
            for (j, tgt) in diagrams.iter().enumerate() {
                let homs: Vec<&[ArrowId]> = (0..self.n)
                    .map(|k| c.hom(src.objects[1 << k], tgt.objects[1 << k]))
                    .collect();
                if homs.iter().any(|h| h.is_empty()) {
                    continue;
                }
                let mut pick = vec![0usize; self.n];
                loop {
                    let singles: Vec<ArrowId> =
                        pick.iter().zip(&homs).map(|(&p, h)| h[p]).collect();
                    if let Some(phi) = self.family(src, tgt, &singles) {
                        if endpoints.len() >= limits.max_arrows {
                            return Err(Error::SizeLimit {
                                what: "nerve arrows",
                                limit: limits.max_arrows,
                            });
                        }
                        endpoints.push((i, j));
                        families.push(phi);
                    }
                    let mut k = 0;
                    while k < self.n {
                        pick[k] += 1;
                        if pick[k] < homs[k].len() {
                            break;
                        }
                        pick[k] = 0;
                        k += 1;
                    }
                    if k == self.n {
                        break;
                    }
                }
            }
        }
        let arrow_index: HashMap<(ObjId, ObjId, Vec<ArrowId>), ArrowId> = families
            .iter()
            .zip(&endpoints)
            .enumerate()
            .map(|(a, (phi, &(i, j)))| ((i, j, phi.clone()), a))
            .collect();
        let identity = diagrams
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let phi = d.objects.iter().map(|&x| c.identity(x)).collect();
                arrow_index[&(i, i, phi)]
            })
            .collect();
        let category =
            FiniteCategory::from_fn(diagrams.len(), endpoints.clone(), identity, |g, f| {
                let phi: Vec<ArrowId> = families[f]
                    .iter()
                    .zip(&families[g])
                    .map(|(&a, &b)| c.compose(b, a))
                    .collect();
                arrow_index[&(endpoints[f].0, endpoints[g].1, phi)]
            });
        Ok(NerveLevel {
            n: self.n,
            diagrams,
            families,
            category: Arc::new(category),
            index,
            arrow_index,
        })
    }
}

/// Bitmask of `f⁻¹(T)` for every `T ⊆ {1..m}`.
fn preimage_masks(f: &BasedMap) -> Vec<usize> {
    (0..1usize << f.target)
        .map(|t| {
            (1..=f.source)
                .filter(|&i| {
                    let j = f.apply(i);
                    j != 0 && t >> (j - 1) & 1 == 1
                })
                .fold(0, |acc, i| acc | 1 << (i - 1))
        })
        .collect()
}

fn act(f: &BasedMap, src: &NerveLevel, tgt: &NerveLevel) -> Functor {
    let pre = preimage_masks(f);
    let size = 1usize << f.target;
    let objects: Vec<ObjId> = src
        .diagrams
        .iter()
        .map(|c| {
            let d = DecompositionDiagram {
                n: f.target,
                objects: pre.iter().map(|&p| c.objects[p]).collect(),
                splittings: (0..size * size)
                    .map(|i| {
                        let (s, t) = (i / size, i % size);
                        if s & t == 0 {
                            c.splitting(pre[s], pre[t])
                        } else {
                            NONE
                        }
                    })
                    .collect(),
                trivialization: c.trivialization,
            };
            tgt.index[&d]
        })
        .collect();
    let (ids, cod): (Vec<_>, Vec<_>) = src
        .category
        .arrows()
        .map(|a| (src.category.dom(a), src.category.cod(a)))
        .unzip();
    let arrows = src
        .families
        .iter()
        .enumerate()
        .map(|(a, phi)| {
            let moved: Vec<ArrowId> = pre.iter().map(|&p| phi[p]).collect();
            tgt.arrow_index[&(objects[ids[a]], objects[cod[a]], moved)]
        })
        .collect();
    Functor::new_unchecked(src.category.clone(), tgt.category.clone(), objects, arrows)
}

/// `K(C)` truncated at `truncation`.
pub fn segal_nerve(
    c: &PermutativeStructure,
    truncation: usize,
    limits: &Limits,
) -> Result<SegalNerve> {
    if !c.is_total() {
        return Err(Error::PartialTensor);
    }
    let levels: Vec<NerveLevel> = (0..=truncation)
        .into_par_iter()
        .map(|n| Ctx { c, n }.level(limits))
        .collect::<Result<_>>()?;
    let cats = levels.iter().map(|l| l.category.clone()).collect();
    let gamma = TruncatedGammaCategory::new(truncation, cats, |f| {
        act(f, &levels[f.source], &levels[f.target])
    });
    Ok(SegalNerve { gamma, levels })
}

/// `K(F): K(C) → K(D)` for a strict symmetric monoidal functor `F`.
pub fn nerve_map(f: &Functor, source: &SegalNerve, target: &SegalNerve) -> Result<GammaMorphism> {
    let components = source
        .levels
        .iter()
        .zip(&target.levels)
        .map(|(s, t)| {
            let objects: Option<Vec<ObjId>> = s
                .diagrams
                .iter()
                .map(|d| {
                    let image = DecompositionDiagram {
                        n: d.n,
                        objects: d.objects.iter().map(|&x| f.obj(x)).collect(),
                        splittings: d
                            .splittings
                            .iter()
                            .map(|&r| if r == NONE { NONE } else { f.arr(r) })
                            .collect(),
                        trivialization: f.arr(d.trivialization),
                    };
                    t.index.get(&image).copied()
                })
                .collect();
            let objects =
                objects.ok_or_else(|| Error::Invalid("functor is not strict monoidal".into()))?;
            let arrows: Option<Vec<ArrowId>> = s
                .families
                .iter()
                .enumerate()
                .map(|(a, phi)| {
                    let key = (
                        objects[s.category.dom(a)],
                        objects[s.category.cod(a)],
                        phi.iter().map(|&x| f.arr(x)).collect(),
                    );
                    t.arrow_index.get(&key).copied()
                })
                .collect();
            let arrows =
                arrows.ok_or_else(|| Error::Invalid("functor is not strict monoidal".into()))?;
            Ok(Functor::new_unchecked(
                s.category.clone(),
                t.category.clone(),
                objects,
                arrows,
            ))
        })
        .collect::<Result<_>>()?;
    Ok(GammaMorphism { components })
}

/// Automorphism-group order of each isomorphism class, sorted.
pub fn iso_class_profile(cat: &FiniteCategory) -> Vec<usize> {
    let mut uf = UnionFind::new(cat.object_count());
    for f in cat.arrows().filter(|&f| cat.is_iso(f)) {
        uf.union(cat.dom(f), cat.cod(f));
    }
    let (label, count) = uf.canonical_labels();
    let mut seen = vec![false; count];
    let mut out = Vec::new();
    for x in cat.objects() {
        if !std::mem::replace(&mut seen[label[x]], true) {
            out.push(cat.hom(x, x).iter().filter(|&&f| cat.is_iso(f)).count());
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub n: usize,
    pub length_bound: usize,
    pub model_objects: usize,
    pub model_arrows: usize,
    pub functors: usize,
    pub transformations: usize,
    pub model_profile: Vec<usize>,
    pub functor_profile: Vec<usize>,
    /// Restricting a strict functor to subsets and splittings is an
    /// isomorphism of categories onto the model.
    pub restriction_isomorphism: bool,
    pub agree: bool,
}

/// Compares the decomposition-diagram level `n` with strict symmetric
/// monoidal functors out of `L(n)` at `length_bound`.
pub fn nerve_oracle(
    c: &PermutativeStructure,
    n: usize,
    length_bound: usize,
    limits: &Limits,
) -> Result<OracleReport> {
    if length_bound < 3 {
        return Err(Error::Invalid(
            "the oracle needs length bound at least 3".into(),
        ));
    }
    let level = Ctx { c, n }.level(limits)?;
    let l = build_l(n, length_bound, limits)?;
    let hom = strict_sm_functor_category(l.structure(), c, limits)?;
    let restriction = restrict(&l, &level, &hom, c);
    let restriction_isomorphism = restriction
        .as_ref()
        .is_some_and(|r| r.violations().is_empty() && r.is_isomorphism());
    let model_profile = iso_class_profile(&level.category);
    let functor_profile = iso_class_profile(hom.category());
    Ok(OracleReport {
        n,
        length_bound,
        model_objects: level.category.object_count(),
        model_arrows: level.category.arrow_count(),
        functors: hom.category().object_count(),
        transformations: hom.category().arrow_count(),
        agree: model_profile == functor_profile && restriction_isomorphism,
        model_profile,
        functor_profile,
        restriction_isomorphism,
    })
}

fn restrict(
    l: &LGroupoid,
    level: &NerveLevel,
    hom: &StrictFunctorCategory,
    c: &PermutativeStructure,
) -> Option<Functor> {
    let n = l.n;
    let size = 1usize << n;
    let subset =
        |mask: usize| -> Vec<usize> { (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect() };
    let single: Vec<ObjId> = (0..size)
        .map(|s| l.subset_object(&[&subset(s)]))
        .collect::<Option<_>>()?;
    let base = l.base();
    let unit_arrow = *base.hom(l.structure().unit(), single[0]).first()?;
    let mut splits = vec![NONE; size * size];
    for s in 0..size {
        for t in (0..size).filter(|&t| t & s == 0) {
            let pair = l.subset_object(&[&subset(s), &subset(t)])?;
            splits[s * size + t] = *base.hom(single[s | t], pair).first()?;
        }
    }
    let objects: Vec<ObjId> = hom
        .functors()
        .iter()
        .map(|f| {
            let d = DecompositionDiagram {
                n,
                objects: single.iter().map(|&x| f.obj(x)).collect(),
                splittings: splits
                    .iter()
                    .map(|&r| if r == NONE { NONE } else { f.arr(r) })
                    .collect(),
                trivialization: c.base().inverse(f.arr(unit_arrow))?,
            };
            level.index.get(&d).copied()
        })
        .collect::<Option<_>>()?;
    let cat = hom.category();
    let arrows: Vec<ArrowId> = hom
        .inner
        .transformations
        .iter()
        .enumerate()
        .map(|(a, t)| {
            let phi = single.iter().map(|&x| t.components[x]).collect();
            level
                .arrow_index
                .get(&(objects[cat.dom(a)], objects[cat.cod(a)], phi))
                .copied()
        })
        .collect::<Option<_>>()?;
    Some(Functor::new_unchecked(
        cat.clone(),
        level.category.clone(),
        objects,
        arrows,
    ))
}

/// `K(C)` passes the cc-Picard checks exactly when `C` is Picard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KPicardReport {
    pub locality: LocalityReport,
    pub picard: PicardReport,
    pub agree: bool,
}

pub fn check_k_picard(
    c: &PermutativeStructure,
    truncation: usize,
    limits: &Limits,
) -> Result<KPicardReport> {
    let picard = is_picard(c)?;
    let nerve = segal_nerve(c, truncation, limits)?;
    let locality = segal_local_checks(&nerve.gamma, limits)?;
    Ok(KPicardReport {
        agree: locality.cc_picard == picard.all(),
        locality,
        picard,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammacat::validate_gamma;
    use crate::perm::corpus;

    #[test]
    fn discrete_z2_levels() {
        let k = segal_nerve(&corpus::discrete_cyclic(2), 2, &Limits::default()).unwrap();
        let sizes: Vec<usize> = k.gamma.levels().iter().map(|c| c.object_count()).collect();
        assert_eq!(sizes, vec![1, 2, 4]);
        assert!(validate_gamma(&k.gamma).is_empty());
    }

    #[test]
    fn level0_is_contractible() {
        for (name, c) in corpus::all() {
            let k = segal_nerve(&c, 0, &Limits::default()).unwrap();
            let l0 = k.gamma.level(0).unwrap();
            assert!(l0.object_count() > 0, "{name}");
            assert!(
                l0.objects()
                    .all(|a| l0.objects().all(|b| l0.hom(a, b).len() == 1)),
                "{name}"
            );
        }
    }

    #[test]
    fn max_monoid_fails_only_condition_three() {
        let r = check_k_picard(&corpus::max_monoid(), 2, &Limits::default()).unwrap();
        assert!(r.locality.cc_monoidal);
        assert!(!r.locality.cc_picard);
        assert_eq!(r.locality.failed_conditions, vec![3]);
        assert!(r.agree);
    }

    #[test]
    fn oracle_on_small_cases() {
        let limits = Limits::default();
        for (c, n) in [
            (corpus::discrete_cyclic(2), 1),
            (corpus::terminal_structure(), 2),
            (corpus::one_object_cyclic(2), 1),
        ] {
            let r = nerve_oracle(&c, n, 3, &limits).unwrap();
            assert!(r.agree, "{r:?}");
        }
    }

    #[test]
    fn identity_nerve_map() {
        let c = corpus::one_object_cyclic(3);
        let k = segal_nerve(&c, 2, &Limits::default()).unwrap();
        let id = Functor::identity(c.base().clone());
        let m = nerve_map(&id, &k, &k).unwrap();
        assert_eq!(m, GammaMorphism::identity(&k.gamma));
    }
}
