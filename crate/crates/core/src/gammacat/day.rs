//! Day convolution of truncated Γ-categories.
//!
//! Level `n` is the coend over `k, l ≤ N` of
//! `Γ^op(k⁺ ∧ l⁺, n⁺) × X(k⁺) × Y(l⁺)`. Restricting `k, l` to the truncation
//! is exact when `X` and `Y` are generated in degrees `≤ N`, which holds for
//! the representables `Γᵏ` with `k ≤ N`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{discrete_gamma, hom_index, GammaMorphism, TruncatedGammaCategory};
use crate::fincat::{ArrowId, FiniteCategory, Functor, ObjId};
use crate::gammaop::{compose, hom_set, smash, smash_pair, BasedMap};
use crate::quotient::UnionFind;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DayMode {
    /// Set-level coend; requires discrete inputs.
    DiscreteExact,
    /// Object coend plus arrow generators closed under composition inside
    /// each summand.
    Presented,
}

/// One level of a presented convolution.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DayPresentation {
    pub level: usize,
    pub objects: usize,
    pub generators: usize,
    pub relations: usize,
    /// Every composable pair of generators has a composite inside one
    /// summand, so the generators already form the colimit category.
    pub confirmed: bool,
    pub work: usize,
}

#[derive(Clone, Debug)]
pub struct DayResult {
    /// Present when every level is confirmed.
    pub gamma: Option<TruncatedGammaCategory>,
    pub presentations: Vec<DayPresentation>,
    /// Class of each object `(k, l, φ, x, y)` at every level; `φ` is an index
    /// into `hom_set(k·l, n)`.
    classes: Vec<(Elements, Vec<ObjId>)>,
}

impl DayResult {
    pub fn class(
        &self,
        n: usize,
        k: usize,
        l: usize,
        phi: &BasedMap,
        x: ObjId,
        y: ObjId,
    ) -> Option<ObjId> {
        let (els, label) = self.classes.get(n)?;
        Some(label[els.find(k, l, hom_index(phi), x, y)?])
    }

    pub fn confirmed(&self) -> bool {
        self.gamma.is_some()
    }
}

struct Level {
    objects: usize,
    objs: Elements,
    label: Vec<ObjId>,
    /// Present when confirmed: the level category and the class of each
    /// arrow element.
    category: Option<Arc<FiniteCategory>>,
    arrows: Option<(Elements, Vec<ArrowId>)>,
    presentation: DayPresentation,
}

/// Elements `(k, l, φ, a, b)` of the coend for one level, with `a` and `b`
/// ranging over objects or over arrows.
#[derive(Clone, Debug)]
struct Elements {
    keys: Vec<(usize, usize, usize, usize, usize)>,
    /// Start offset, number of `φ`, and sizes of each `(k, l)` block.
    blocks: Vec<(usize, usize, usize, usize)>,
    side: usize,
}

impl Elements {
    fn at(&self, k: usize, l: usize, phi: usize, a: usize, b: usize) -> usize {
        let (start, _, left, right) = self.blocks[k * self.side + l];
        start + (phi * left + a) * right + b
    }

    fn find(&self, k: usize, l: usize, phi: usize, a: usize, b: usize) -> Option<usize> {
        if k >= self.side || l >= self.side {
            return None;
        }
        let (_, phis, left, right) = self.blocks[k * self.side + l];
        (phi < phis && a < left && b < right).then(|| self.at(k, l, phi, a, b))
    }
}

fn elements(
    n: usize,
    truncation: usize,
    homs: &HashMap<(usize, usize), Vec<BasedMap>>,
    left: &dyn Fn(usize) -> usize,
    right: &dyn Fn(usize) -> usize,
    work_bound: usize,
) -> Option<Elements> {
    let mut keys = Vec::new();
    let mut blocks = Vec::new();
    for k in 0..=truncation {
        for l in 0..=truncation {
            blocks.push((keys.len(), homs[&(k * l, n)].len(), left(k), right(l)));
            for phi in 0..homs[&(k * l, n)].len() {
                for a in 0..left(k) {
                    for b in 0..right(l) {
                        keys.push((k, l, phi, a, b));
                        if keys.len() > work_bound {
                            return None;
                        }
                    }
                }
            }
        }
    }
    Some(Elements {
        keys,
        blocks,
        side: truncation + 1,
    })
}

/// Identifies `(k', l', φ', X(a)x, Y(b)y) ~ (k, l, φ'∘(a∧b), x, y)` for
/// every `a`, `b`, one coordinate at a time.
fn coend_relations(
    els: &Elements,
    uf: &mut UnionFind,
    n: usize,
    x: &TruncatedGammaCategory,
    y: &TruncatedGammaCategory,
    homs: &HashMap<(usize, usize), Vec<BasedMap>>,
    on_arrows: bool,
) -> usize {
    let truncation = x.truncation();
    let mut relations = 0;
    let apply = |f: &Functor, a: usize| if on_arrows { f.arr(a) } else { f.obj(a) };
    // pullbacks of each φ' along f ∧ id and id ∧ g depend only on (k, l)
    type Moves = Vec<(BasedMap, usize, Vec<(usize, usize)>)>;
    let moves = |k: usize, l: usize, left: bool| -> Moves {
        let (from, other) = if left { (k, l) } else { (l, k) };
        let mut out = Vec::new();
        for to in 0..=truncation {
            for f in hom_set(from, to) {
                let along = if left {
                    smash(&f, &BasedMap::identity(other))
                } else {
                    smash(&BasedMap::identity(other), &f)
                };
                let pairs = homs[&(to * other, n)]
                    .iter()
                    .enumerate()
                    .map(|(p2, phi2)| (p2, hom_index(&compose(phi2, &along).unwrap())))
                    .collect();
                out.push((f, to, pairs));
            }
        }
        out
    };
    let mut table: HashMap<(usize, usize), (Moves, Moves)> = HashMap::new();
    // each (k, l, a, b) appears once with φ = 0
    for &(k, l, phi, a, b) in &els.keys {
        if phi != 0 {
            continue;
        }
        let (left, right) = table
            .entry((k, l))
            .or_insert_with(|| (moves(k, l, true), moves(k, l, false)));
        for (f, k2, pairs) in left.iter() {
            let xa = apply(&x.action[f], a);
            for &(p2, pulled) in pairs {
                uf.union(els.at(*k2, l, p2, xa, b), els.at(k, l, pulled, a, b));
                relations += 1;
            }
        }
        for (g, l2, pairs) in right.iter() {
            let yb = apply(&y.action[g], b);
            for &(p2, pulled) in pairs {
                uf.union(els.at(k, *l2, p2, a, yb), els.at(k, l, pulled, a, b));
                relations += 1;
            }
        }
    }
    relations
}

fn compute_level(
    n: usize,
    x: &TruncatedGammaCategory,
    y: &TruncatedGammaCategory,
    homs: &HashMap<(usize, usize), Vec<BasedMap>>,
    work_bound: usize,
) -> Result<Level> {
    let truncation = x.truncation();
    let xo = |k: usize| x.levels()[k].object_count();
    let yo = |l: usize| y.levels()[l].object_count();
    let objs = elements(n, truncation, homs, &xo, &yo, work_bound).ok_or(Error::SizeLimit {
        what: "coend elements",
        limit: work_bound,
    })?;
    let mut uf = UnionFind::new(objs.keys.len());
    let relations = coend_relations(&objs, &mut uf, n, x, y, homs, false);
    let (label, count) = uf.canonical_labels();

    let xa = |k: usize| x.levels()[k].arrow_count();
    let ya = |l: usize| y.levels()[l].arrow_count();
    let unconfirmed = |generators, work| DayPresentation {
        level: n,
        objects: count,
        generators,
        relations,
        confirmed: false,
        work,
    };
    let Some(arrs) = elements(n, truncation, homs, &xa, &ya, work_bound) else {
        return Ok(Level {
            objects: count,
            objs,
            label,
            category: None,
            arrows: None,
            presentation: unconfirmed(0, work_bound),
        });
    };
    let mut auf = UnionFind::new(arrs.keys.len());
    let relations = relations + coend_relations(&arrs, &mut auf, n, x, y, homs, true);
    let object_class = |(k, l, phi, u, v): (usize, usize, usize, usize, usize), source: bool| {
        let (cx, cy) = (&x.levels()[k], &y.levels()[l]);
        let (a, b) = if source {
            (cx.dom(u), cy.dom(v))
        } else {
            (cx.cod(u), cy.cod(v))
        };
        label[objs.at(k, l, phi, a, b)]
    };

    // congruence closure under composition inside each summand
    let mut work = 0usize;
    let mut comp: HashMap<(usize, usize), usize> = HashMap::new();
    loop {
        let mut changed = false;
        comp.clear();
        for (i, &(k, l, phi, u, v)) in arrs.keys.iter().enumerate() {
            let (cx, cy) = (&x.levels()[k], &y.levels()[l]);
            for &u2 in cx.out_arrows(cx.cod(u)) {
                for &v2 in cy.out_arrows(cy.cod(v)) {
                    work += 1;
                    if work > work_bound {
                        return Ok(Level {
                            objects: count,
                            objs,
                            label,
                            category: None,
                            arrows: None,
                            presentation: unconfirmed(auf.canonical_labels().1, work),
                        });
                    }
                    let j = arrs.at(k, l, phi, u2, v2);
                    let c = arrs.at(k, l, phi, cx.compose(u2, u), cy.compose(v2, v));
                    let key = (auf.find(j), auf.find(i));
                    let c = auf.find(c);
                    match comp.get(&key) {
                        Some(&prev) if auf.find(prev) != c => {
                            auf.union(prev, c);
                            changed = true;
                        }
                        Some(_) => {}
                        None => {
                            comp.insert(key, c);
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let (alabel, acount) = auf.canonical_labels();
    let mut rep = vec![usize::MAX; acount];
    for (i, &c) in alabel.iter().enumerate().rev() {
        rep[c] = i;
    }
    let endpoints: Vec<(ObjId, ObjId)> = rep
        .iter()
        .map(|&i| {
            (
                object_class(arrs.keys[i], true),
                object_class(arrs.keys[i], false),
            )
        })
        .collect();
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (&(g, f), &c) in &comp {
        table.insert((alabel[g], alabel[f]), alabel[c]);
    }
    let confirmed = (0..acount).all(|f| {
        (0..acount)
            .filter(|&g| endpoints[g].0 == endpoints[f].1)
            .all(|g| table.contains_key(&(g, f)))
    });
    let presentation = DayPresentation {
        level: n,
        objects: count,
        generators: acount,
        relations,
        confirmed,
        work,
    };
    if !confirmed {
        return Ok(Level {
            objects: count,
            objs,
            label,
            category: None,
            arrows: None,
            presentation,
        });
    }
    let mut identity = vec![usize::MAX; count];
    for (&(k, l, phi, a, b), &c) in objs.keys.iter().zip(&label) {
        identity[c] = alabel[arrs.at(
            k,
            l,
            phi,
            x.levels()[k].identity(a),
            y.levels()[l].identity(b),
        )];
    }
    let category = FiniteCategory::from_fn(count, endpoints, identity, |g, f| table[&(g, f)]);
    Ok(Level {
        objects: count,
        objs,
        label,
        category: Some(Arc::new(category)),
        arrows: Some((arrs, alabel)),
        presentation,
    })
}

/// `X ∗ Y` up to the common truncation.
pub fn day_convolution(
    x: &TruncatedGammaCategory,
    y: &TruncatedGammaCategory,
    mode: DayMode,
    work_bound: usize,
) -> Result<DayResult> {
    let truncation = x.truncation();
    if y.truncation() != truncation {
        return Err(Error::Mismatch(format!(
            "truncations {} and {}",
            truncation,
            y.truncation()
        )));
    }
    if mode == DayMode::DiscreteExact && !(x.is_discrete() && y.is_discrete()) {
        return Err(Error::Invalid("exact mode needs discrete inputs".into()));
    }
    let mut homs = HashMap::new();
    for k in 0..=truncation {
        for l in 0..=truncation {
            for n in 0..=truncation {
                homs.entry((k * l, n)).or_insert_with(|| hom_set(k * l, n));
            }
        }
    }
    let levels: Vec<Level> = (0..=truncation)
        .into_par_iter()
        .map(|n| compute_level(n, x, y, &homs, work_bound))
        .collect::<Result<_>>()?;
    let presentations = levels.iter().map(|l| l.presentation.clone()).collect();
    let gamma = if levels.iter().all(|l| l.category.is_some()) {
        let cats: Vec<Arc<FiniteCategory>> =
            levels.iter().map(|l| l.category.clone().unwrap()).collect();
        let cats2 = cats.clone();
        let (levels_ref, homs_ref) = (&levels, &homs);
        Some(TruncatedGammaCategory::new(truncation, cats, move |g| {
            let (src, tgt) = (&levels_ref[g.source], &levels_ref[g.target]);
            let side = truncation + 1;
            let moved: Vec<Vec<usize>> = (0..side * side)
                .map(|i| {
                    homs_ref[&((i / side) * (i % side), g.source)]
                        .iter()
                        .map(|phi| hom_index(&compose(g, phi).unwrap()))
                        .collect()
                })
                .collect();
            let push = |from: &Elements,
                        to: &Elements,
                        label: &[usize],
                        target: &[usize],
                        out: &mut [usize]| {
                for (&(k, l, phi, a, b), &c) in from.keys.iter().zip(label) {
                    out[c] = target[to.at(k, l, moved[k * side + l][phi], a, b)];
                }
            };
            let mut objects = vec![0; src.objects];
            push(&src.objs, &tgt.objs, &src.label, &tgt.label, &mut objects);
            let mut arrows = vec![0; cats2[g.source].arrow_count()];
            let ((sa, sl), (ta, tl)) = (src.arrows.as_ref().unwrap(), tgt.arrows.as_ref().unwrap());
            push(sa, ta, sl, tl, &mut arrows);
            Functor::new_unchecked(
                cats2[g.source].clone(),
                cats2[g.target].clone(),
                objects,
                arrows,
            )
        }))
    } else {
        None
    };
    let classes = levels.into_iter().map(|l| (l.objs, l.label)).collect();
    Ok(DayResult {
        gamma,
        presentations,
        classes,
    })
}

fn discrete_morphism(
    source: &TruncatedGammaCategory,
    target: &TruncatedGammaCategory,
    image: impl Fn(usize, usize) -> Option<usize>,
) -> Option<GammaMorphism> {
    let components = (0..=source.truncation())
        .map(|n| {
            let objects: Option<Vec<usize>> = (0..source.levels()[n].object_count())
                .map(|x| image(n, x))
                .collect();
            let objects = objects?;
            let arrows = objects
                .iter()
                .map(|&o| target.levels()[n].identity(o))
                .collect();
            Some(Functor::new_unchecked(
                source.levels()[n].clone(),
                target.levels()[n].clone(),
                objects,
                arrows,
            ))
        })
        .collect::<Option<Vec<_>>>()?;
    Some(GammaMorphism { components })
}

/// `Γᵏˡ → Γᵏ ∗ Γˡ`, `h ↦ [h, id, id]`. An isomorphism when the
/// representable law holds.
pub fn representable_comparison(
    k: usize,
    l: usize,
    truncation: usize,
    work_bound: usize,
) -> Result<(TruncatedGammaCategory, DayResult, GammaMorphism)> {
    let gk = super::representable(k, truncation)?;
    let gl = super::representable(l, truncation)?;
    let gkl = super::representable(k * l, truncation)?;
    let day = day_convolution(&gk, &gl, DayMode::DiscreteExact, work_bound)?;
    let conv = day
        .gamma
        .clone()
        .expect("discrete inputs are always confirmed");
    let (ik, il) = (
        hom_index(&BasedMap::identity(k)),
        hom_index(&BasedMap::identity(l)),
    );
    let homs: Vec<Vec<BasedMap>> = (0..=truncation).map(|n| hom_set(k * l, n)).collect();
    let f = discrete_morphism(&gkl, &conv, |n, h| day.class(n, k, l, &homs[n][h], ik, il))
        .ok_or_else(|| Error::Invalid("comparison element missing".into()))?;
    Ok((gkl, day, f))
}

/// The twist `l⁺ ∧ k⁺ → k⁺ ∧ l⁺`.
fn twist(l: usize, k: usize) -> BasedMap {
    let mut images = Vec::with_capacity(k * l);
    for j in 1..=l {
        for i in 1..=k {
            images.push(smash_pair(i, j, l));
        }
    }
    BasedMap {
        source: l * k,
        target: k * l,
        images,
    }
}

/// `X ∗ Y → Y ∗ X`, `[φ, x, y] ↦ [φ ∘ τ, y, x]`, for discrete inputs.
/// `None` if the assignment is not well defined on classes.
pub fn day_symmetry(xy: &DayResult, yx: &DayResult, truncation: usize) -> Option<GammaMorphism> {
    let (a, b) = (xy.gamma.as_ref()?, yx.gamma.as_ref()?);
    let mut components = Vec::new();
    for n in 0..=truncation {
        let mut image = vec![None; a.levels()[n].object_count()];
        let mut swaps: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let (els, label) = &xy.classes[n];
        let (rels, rlabel) = &yx.classes[n];
        for (&(k, l, phi, x, y), &c) in els.keys.iter().zip(label) {
            let swapped = swaps.entry((k, l)).or_insert_with(|| {
                hom_set(k * l, n)
                    .iter()
                    .map(|f| hom_index(&compose(f, &twist(l, k)).unwrap()))
                    .collect()
            })[phi];
            let d = rlabel[rels.find(l, k, swapped, y, x)?];
            match image[c] {
                Some(old) if old != d => return None,
                _ => image[c] = Some(d),
            }
        }
        let objects: Vec<usize> = image.into_iter().collect::<Option<_>>()?;
        let arrows = objects.iter().map(|&o| b.levels()[n].identity(o)).collect();
        components.push(Functor::new_unchecked(
            a.levels()[n].clone(),
            b.levels()[n].clone(),
            objects,
            arrows,
        ));
    }
    Some(GammaMorphism { components })
}

/// `X → Γ¹ ∗ X`, `x ↦ [id, id₁, x]`.
pub fn unit_comparison(x: &TruncatedGammaCategory, day: &DayResult) -> Option<GammaMorphism> {
    let conv = day.gamma.as_ref()?;
    let id1 = hom_index(&BasedMap::identity(1));
    discrete_morphism(x, conv, |n, o| {
        day.class(n, 1, n, &BasedMap::identity(n), id1, o)
    })
}

/// The discrete Γ-set of a finite pointed set `A`: `n⁺ ↦ A^n` with the
/// evident action, basepoint `0`.
pub fn discrete_power(size: usize, truncation: usize) -> TruncatedGammaCategory {
    let sizes: Vec<usize> = (0..=truncation).map(|k| size.pow(k as u32)).collect();
    discrete_gamma(truncation, &sizes, move |f, x| {
        let digits: Vec<usize> = (0..f.source)
            .map(|i| x / size.pow((f.source - 1 - i) as u32) % size)
            .collect();
        (1..=f.target).fold(0, |acc, j| {
            // sum of the coordinates mapped to j, in Z/size
            let s = (1..=f.source)
                .filter(|&i| f.apply(i) == j)
                .map(|i| digits[i - 1])
                .sum::<usize>()
                % size;
            acc * size + s
        })
    })
}

#[cfg(test)]
mod tests {
    use super::super::{representable, validate_gamma};
    use super::*;

    const WORK: usize = 5_000_000;

    #[test]
    fn representable_law() {
        for (k, l) in [(1, 1), (1, 2), (2, 1), (0, 0), (0, 2)] {
            let (gkl, day, f) = representable_comparison(k, l, 2, WORK).unwrap();
            let conv = day.gamma.as_ref().unwrap();
            assert!(validate_gamma(conv).is_empty());
            assert!(f.naturality_failure(&gkl, conv).is_none(), "{k},{l}");
            assert!(f.is_isomorphism(), "{k},{l}");
        }
    }

    #[test]
    fn unit_point() {
        let g0 = representable(0, 2).unwrap();
        let day = day_convolution(&g0, &g0, DayMode::DiscreteExact, WORK).unwrap();
        for c in day.gamma.unwrap().levels() {
            assert_eq!(c.object_count(), 1);
        }
    }

    #[test]
    fn symmetric_and_unital_on_discrete_pairs() {
        let xs = [
            representable(1, 2).unwrap(),
            representable(2, 2).unwrap(),
            discrete_power(2, 2),
        ];
        for x in &xs {
            assert!(validate_gamma(x).is_empty());
            let g1 = representable(1, 2).unwrap();
            let d = day_convolution(&g1, x, DayMode::DiscreteExact, WORK).unwrap();
            let u = unit_comparison(x, &d).unwrap();
            assert!(u.naturality_failure(x, d.gamma.as_ref().unwrap()).is_none());
            assert!(u.is_isomorphism());
            for y in &xs {
                let xy = day_convolution(x, y, DayMode::DiscreteExact, WORK).unwrap();
                let yx = day_convolution(y, x, DayMode::DiscreteExact, WORK).unwrap();
                let s = day_symmetry(&xy, &yx, 2).unwrap();
                let (a, b) = (xy.gamma.as_ref().unwrap(), yx.gamma.as_ref().unwrap());
                assert!(s.naturality_failure(a, b).is_none());
                assert!(s.is_isomorphism());
            }
        }
    }

    #[test]
    fn presented_mode_agrees_on_discrete_inputs() {
        let g1 = representable(1, 2).unwrap();
        let exact = day_convolution(&g1, &g1, DayMode::DiscreteExact, WORK).unwrap();
        let presented = day_convolution(&g1, &g1, DayMode::Presented, WORK).unwrap();
        assert!(presented.presentations.iter().all(|p| p.confirmed));
        assert!(super::super::same_gamma(
            exact.gamma.as_ref().unwrap(),
            presented.gamma.as_ref().unwrap()
        ));
    }

    #[test]
    fn presented_mode_on_a_constant_groupoid() {
        let c = Arc::new(crate::fincat::constructions::walking_iso());
        let x = super::super::constant(c, 2);
        let g0 = representable(0, 2).unwrap();
        let d = day_convolution(&g0, &x, DayMode::Presented, WORK).unwrap();
        assert_eq!(d.presentations.len(), 3);
        if let Some(g) = &d.gamma {
            assert!(validate_gamma(g).is_empty());
        }
        let tiny = day_convolution(&g0, &x, DayMode::Presented, 10);
        assert!(tiny.is_err() || tiny.unwrap().presentations.iter().any(|p| !p.confirmed));
    }
}
