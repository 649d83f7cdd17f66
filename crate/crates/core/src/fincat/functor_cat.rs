use std::collections::HashMap;
use std::sync::Arc;

use super::{ArrowId, FiniteCategory, Functor, NaturalTransformation, ObjId};
use crate::{Error, Limits, Result};

/// All functors `C → D`, in lexicographic order of `(object map, arrow map)`.
pub fn enumerate_functors(
    c: &Arc<FiniteCategory>,
    d: &Arc<FiniteCategory>,
    limit: usize,
) -> Result<Vec<Functor>> {
    // Constraint `(g, f, g∘f)` is checked once the largest of the three ids
    // has been assigned.
    let mut checks: Vec<Vec<(ArrowId, ArrowId, ArrowId)>> = vec![Vec::new(); c.arrow_count()];
    for f in c.arrows() {
        for &g in c.out_arrows(c.cod(f)) {
            let gf = c.compose(g, f);
            checks[f.max(g).max(gf)].push((g, f, gf));
        }
    }
    let mut out = Vec::new();
    let mut objects = vec![0; c.object_count()];
    enumerate_objects(c, d, 0, &mut objects, &checks, limit, &mut out)?;
    Ok(out)
}

fn enumerate_objects(
    c: &Arc<FiniteCategory>,
    d: &Arc<FiniteCategory>,
    x: ObjId,
    objects: &mut Vec<ObjId>,
    checks: &[Vec<(ArrowId, ArrowId, ArrowId)>],
    limit: usize,
    out: &mut Vec<Functor>,
) -> Result<()> {
    if x == c.object_count() {
        let mut arrows = vec![0; c.arrow_count()];
        return enumerate_arrows(c, d, 0, objects, &mut arrows, checks, limit, out);
    }
    for y in d.objects() {
        objects[x] = y;
        enumerate_objects(c, d, x + 1, objects, checks, limit, out)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn enumerate_arrows(
    c: &Arc<FiniteCategory>,
    d: &Arc<FiniteCategory>,
    f: ArrowId,
    objects: &[ObjId],
    arrows: &mut Vec<ArrowId>,
    checks: &[Vec<(ArrowId, ArrowId, ArrowId)>],
    limit: usize,
    out: &mut Vec<Functor>,
) -> Result<()> {
    if f == c.arrow_count() {
        if out.len() >= limit {
            return Err(Error::SizeLimit {
                what: "functors",
                limit,
            });
        }
        out.push(Functor::new_unchecked(
            c.clone(),
            d.clone(),
            objects.to_vec(),
            arrows.clone(),
        ));
        return Ok(());
    }
    let (a, b) = (objects[c.dom(f)], objects[c.cod(f)]);
    let candidates: Vec<ArrowId> = if c.is_identity(f) {
        vec![d.identity(a)]
    } else {
        d.hom(a, b).to_vec()
    };
    for image in candidates {
        arrows[f] = image;
        let ok = checks[f]
            .iter()
            .all(|&(g, h, gh)| d.compose(arrows[g], arrows[h]) == arrows[gh]);
        if ok {
            enumerate_arrows(c, d, f + 1, objects, arrows, checks, limit, out)?;
        }
    }
    Ok(())
}

/// All natural transformations `F ⇒ G`, as component vectors in
/// lexicographic order.
pub fn enumerate_transformations(f: &Functor, g: &Functor) -> Vec<Vec<ArrowId>> {
    let c = f.source();
    // naturality at arrow a: x → y is checked once max(x, y) is assigned
    let mut checks: Vec<Vec<ArrowId>> = vec![Vec::new(); c.object_count()];
    for a in c.arrows() {
        checks[c.dom(a).max(c.cod(a))].push(a);
    }
    let mut out = Vec::new();
    let mut components = vec![0; c.object_count()];
    fn go(
        f: &Functor,
        g: &Functor,
        x: ObjId,
        components: &mut Vec<ArrowId>,
        checks: &[Vec<ArrowId>],
        out: &mut Vec<Vec<ArrowId>>,
    ) {
        let c = f.source();
        let d = f.target();
        if x == c.object_count() {
            out.push(components.clone());
            return;
        }
        for &t in d.hom(f.obj(x), g.obj(x)) {
            components[x] = t;
            let ok = checks[x].iter().all(|&a| {
                d.compose(g.arr(a), components[c.dom(a)])
                    == d.compose(components[c.cod(a)], f.arr(a))
            });
            if ok {
                go(f, g, x + 1, components, checks, out);
            }
        }
    }
    go(f, g, 0, &mut components, &checks, &mut out);
    out
}

/// A functor category with its objects and arrows spelled out.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub category: Arc<FiniteCategory>,
    pub functors: Vec<Functor>,
    pub transformations: Vec<NaturalTransformation>,
}

/// `[C, D]`: functors and natural transformations with vertical composition.
pub fn functor_category(
    c: &Arc<FiniteCategory>,
    d: &Arc<FiniteCategory>,
    limits: &Limits,
) -> Result<FunctorCategory> {
    let functors = enumerate_functors(c, d, limits.max_objects)?;
    assemble(functors, limits)
}

/// Builds the category whose objects are `functors` (pairwise parallel) and
/// whose arrows are all natural transformations between them.
pub(crate) fn assemble(functors: Vec<Functor>, limits: &Limits) -> Result<FunctorCategory> {
    assemble_with(functors, limits, enumerate_transformations)
}

/// As [`assemble`], with the arrows between two objects supplied by
/// `transformations`.
pub(crate) fn assemble_with(
    functors: Vec<Functor>,
    limits: &Limits,
    transformations: impl Fn(&Functor, &Functor) -> Vec<Vec<ArrowId>>,
) -> Result<FunctorCategory> {
    if functors.len() > limits.max_objects {
        return Err(Error::SizeLimit {
            what: "objects",
            limit: limits.max_objects,
        });
    }
    let mut endpoints = Vec::new();
    let mut components: Vec<Vec<ArrowId>> = Vec::new();
    let mut index: HashMap<(ObjId, ObjId, Vec<ArrowId>), ArrowId> = HashMap::new();
    let mut identity = Vec::with_capacity(functors.len());
    for (i, fi) in functors.iter().enumerate() {
        for (j, fj) in functors.iter().enumerate() {
            for comps in transformations(fi, fj) {
                if endpoints.len() >= limits.max_arrows {
                    return Err(Error::SizeLimit {
                        what: "arrows",
                        limit: limits.max_arrows,
                    });
                }
                index.insert((i, j, comps.clone()), endpoints.len());
                endpoints.push((i, j));
                components.push(comps);
            }
        }
        let src = fi.source();
        let id: Vec<ArrowId> = src
            .objects()
            .map(|x| fi.target().identity(fi.obj(x)))
            .collect();
        identity.push(index[&(i, i, id)]);
    }
    let d = functors.first().map(|f| f.target().clone());
    let category = FiniteCategory::from_fn(functors.len(), endpoints.clone(), identity, |g, f| {
        let d = d.as_ref().unwrap();
        let comps: Vec<ArrowId> = components[f]
            .iter()
            .zip(&components[g])
            .map(|(&a, &b)| d.compose(b, a))
            .collect();
        index[&(endpoints[f].0, endpoints[g].1, comps)]
    });
    let transformations = endpoints
        .iter()
        .zip(components)
        .map(|(&(i, j), components)| NaturalTransformation {
            source: functors[i].clone(),
            target: functors[j].clone(),
            components,
        })
        .collect();
    Ok(FunctorCategory {
        category: Arc::new(category),
        functors,
        transformations,
    })
}

#[cfg(test)]
mod tests {
    use super::super::constructions::*;
    use super::*;
    use crate::fincat::classify::is_groupoid;

    #[test]
    fn arrow_into_walking_iso() {
        let i = Arc::new(arrow_category());
        let j = Arc::new(walking_iso());
        let fc = functor_category(&i, &j, &Limits::default()).unwrap();
        assert_eq!(fc.category.object_count(), 4);
        assert!(fc.category.check_laws().is_empty());
        assert!(fc.functors.iter().all(|f| f.violations().is_empty()));
    }

    #[test]
    fn empty_source_gives_terminal() {
        let e = Arc::new(empty());
        let j = Arc::new(walking_iso());
        let fc = functor_category(&e, &j, &Limits::default()).unwrap();
        assert_eq!(fc.category.object_count(), 1);
        assert_eq!(fc.category.arrow_count(), 1);
    }

    #[test]
    fn endofunctors_of_walking_iso_form_a_groupoid() {
        let j = Arc::new(walking_iso());
        let fc = functor_category(&j, &j, &Limits::default()).unwrap();
        assert!(is_groupoid(&fc.category));
        assert!(fc.transformations.iter().all(|t| t.is_natural()));
    }

    #[test]
    fn functor_counts_match_brute_force() {
        // functors between posets are monotone maps
        let c3 = Arc::new(chain(3));
        let c2 = Arc::new(chain(2));
        assert_eq!(enumerate_functors(&c3, &c2, 1000).unwrap().len(), 4);
        assert_eq!(enumerate_functors(&c2, &c3, 1000).unwrap().len(), 6);
        let z2 = Arc::new(cyclic_group(2));
        let z4 = Arc::new(cyclic_group(4));
        assert_eq!(enumerate_functors(&z4, &z2, 1000).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&z2, &z4, 1000).unwrap().len(), 2);
    }

    #[test]
    fn limit_is_enforced() {
        let d = Arc::new(discrete(5));
        assert!(enumerate_functors(&d, &d, 100).is_err());
    }
}
