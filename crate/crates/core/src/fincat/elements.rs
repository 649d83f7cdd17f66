use std::collections::HashMap;
use std::sync::Arc;

use super::{ArrowId, FiniteCategory, Functor, ObjId};
use crate::{Error, Result};

/// A functor from `base` into categories: a fiber per object and a
/// transition functor per arrow.
#[derive(Clone, Debug)]
pub struct CatDiagram {
    pub base: Arc<FiniteCategory>,
    pub fibers: Vec<Arc<FiniteCategory>>,
    pub transition: Vec<Functor>,
}

impl CatDiagram {
    /// The diagram constant at `fiber`.
    pub fn constant(base: Arc<FiniteCategory>, fiber: Arc<FiniteCategory>) -> CatDiagram {
        let fibers = vec![fiber.clone(); base.object_count()];
        let transition = base
            .arrows()
            .map(|_| Functor::identity(fiber.clone()))
            .collect();
        CatDiagram {
            base,
            fibers,
            transition,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let b = &self.base;
        if self.fibers.len() != b.object_count() || self.transition.len() != b.arrow_count() {
            return Err(Error::Invalid("diagram table sizes".into()));
        }
        for f in b.arrows() {
            let t = &self.transition[f];
            if !same(t.source(), &self.fibers[b.dom(f)])
                || !same(t.target(), &self.fibers[b.cod(f)])
            {
                return Err(Error::Mismatch(format!(
                    "transition of arrow {}",
                    b.arrow_name(f)
                )));
            }
            if !t.violations().is_empty() {
                return Err(Error::Invalid(format!(
                    "transition of {} is not a functor",
                    b.arrow_name(f)
                )));
            }
        }
        for x in b.objects() {
            if self.transition[b.identity(x)] != Functor::identity(self.fibers[x].clone()) {
                return Err(Error::Invalid(format!(
                    "identity of object {x} not sent to identity"
                )));
            }
        }
        for f in b.arrows() {
            for &g in b.out_arrows(b.cod(f)) {
                let composite = self.transition[g].after(&self.transition[f]);
                if composite != self.transition[b.compose(g, f)] {
                    return Err(Error::Invalid(format!(
                        "composite ({}, {}) not preserved",
                        b.arrow_name(g),
                        b.arrow_name(f)
                    )));
                }
            }
        }
        Ok(())
    }
}

fn same(a: &Arc<FiniteCategory>, b: &Arc<FiniteCategory>) -> bool {
    Arc::ptr_eq(a, b)
        || (a.object_count() == b.object_count() && a.arrow_count() == b.arrow_count())
}

#[derive(Clone, Debug)]
pub struct ElementsCategory {
    pub category: Arc<FiniteCategory>,
    /// `(c, d)` with `d` an object of the fiber over `c`.
    pub objects: Vec<(ObjId, ObjId)>,
    /// `(f, α)` with `α: F(f)(d) → b` in the fiber over `cod f`.
    pub arrows: Vec<(ArrowId, ArrowId)>,
    pub projection: Functor,
}

/// The Grothendieck construction of a diagram of categories.
pub fn category_of_elements(diagram: &CatDiagram) -> Result<ElementsCategory> {
    diagram.validate()?;
    let base = &diagram.base;
    let mut objects = Vec::new();
    let mut object_index: HashMap<(ObjId, ObjId), ObjId> = HashMap::new();
    for c in base.objects() {
        for d in diagram.fibers[c].objects() {
            object_index.insert((c, d), objects.len());
            objects.push((c, d));
        }
    }
    let mut arrows = Vec::new();
    let mut endpoints = Vec::new();
    let mut arrow_index: HashMap<(ArrowId, ArrowId), ArrowId> = HashMap::new();
    for (src, &(c, d)) in objects.iter().enumerate() {
        for &f in base.out_arrows(c) {
            let moved = diagram.transition[f].obj(d);
            let fiber = &diagram.fibers[base.cod(f)];
            for &alpha in fiber.out_arrows(moved) {
                arrow_index.insert((f, alpha), arrows.len());
                arrows.push((f, alpha));
                endpoints.push((src, object_index[&(base.cod(f), fiber.cod(alpha))]));
            }
        }
    }
    let identity = objects
        .iter()
        .map(|&(c, d)| arrow_index[&(base.identity(c), diagram.fibers[c].identity(d))])
        .collect();
    let names = arrows
        .iter()
        .map(|&(f, a)| {
            format!(
                "({},{})",
                base.arrow_name(f),
                diagram.fibers[base.cod(f)].arrow_name(a)
            )
        })
        .collect();
    let category = FiniteCategory::from_fn(objects.len(), endpoints, identity, |second, first| {
        let (f, alpha) = arrows[first];
        let (g, beta) = arrows[second];
        let fiber = &diagram.fibers[base.cod(g)];
        let moved = diagram.transition[g].arr(alpha);
        arrow_index[&(base.compose(g, f), fiber.compose(beta, moved))]
    })
    .with_names(names);
    let category = Arc::new(category);
    let projection = Functor::new_unchecked(
        category.clone(),
        base.clone(),
        objects.iter().map(|o| o.0).collect(),
        arrows.iter().map(|a| a.0).collect(),
    );
    Ok(ElementsCategory {
        category,
        objects,
        arrows,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::super::constructions::*;
    use super::*;

    #[test]
    fn constant_terminal_recovers_the_base() {
        let c = Arc::new(chain(3));
        let diagram = CatDiagram::constant(c.clone(), Arc::new(terminal()));
        let el = category_of_elements(&diagram).unwrap();
        assert!(el.category.check_laws().is_empty());
        assert!(el.projection.violations().is_empty());
        assert!(el.projection.is_isomorphism());
    }

    #[test]
    fn arrow_category_over_walking_iso() {
        let i = Arc::new(arrow_category());
        let one = Arc::new(terminal());
        let j = Arc::new(walking_iso());
        let include = pick_object(&j, 0);
        let diagram = CatDiagram {
            base: i.clone(),
            fibers: vec![one.clone(), j.clone()],
            transition: vec![
                Functor::identity(one.clone()),
                Functor::identity(j.clone()),
                include,
            ],
        };
        let el = category_of_elements(&diagram).unwrap();
        assert_eq!(el.category.object_count(), 3);
        assert!(el.category.check_laws().is_empty());
        assert!(el.projection.violations().is_empty());
        let hit: std::collections::BTreeSet<_> = el.projection.object_map().iter().collect();
        assert_eq!(hit.len(), 2);
    }
}
