use std::collections::HashMap;
use std::sync::Arc;

use super::{ArrowId, FiniteCategory, Functor, ObjId};

/// The factorization `F = P_Y ∘ i_X` through the category of isomorphisms
/// `y: F(A) ≅ B`.
#[derive(Clone, Debug)]
pub struct MappingPath {
    pub category: Arc<FiniteCategory>,
    /// `(y, A, B)` with `y: F(A) → B` an isomorphism.
    pub objects: Vec<(ArrowId, ObjId, ObjId)>,
    /// `(a, b)` with `a: A → A'` and `b: B → B'` such that `y' ∘ F(a) = b ∘ y`.
    pub arrows: Vec<(ArrowId, ArrowId)>,
    pub include: Functor,
    pub project: Functor,
}

pub fn mapping_path_factorization(f: &Functor) -> MappingPath {
    let (x, y) = (f.source(), f.target());
    let mut objects = Vec::new();
    let mut object_index: HashMap<(ArrowId, ObjId), ObjId> = HashMap::new();
    for a in x.objects() {
        for &iso in y.out_arrows(f.obj(a)) {
            if y.is_iso(iso) {
                object_index.insert((iso, a), objects.len());
                objects.push((iso, a, y.cod(iso)));
            }
        }
    }
    // b is determined by a: b = y' ∘ F(a) ∘ y⁻¹
    let mut arrows = Vec::new();
    let mut endpoints = Vec::new();
    let mut arrow_index: HashMap<(ObjId, ArrowId), ArrowId> = HashMap::new();
    for (src, &(iso, a, _)) in objects.iter().enumerate() {
        let back = y.inverse(iso).expect("iso");
        for &u in x.out_arrows(a) {
            let fa = y.compose(f.arr(u), back);
            for &iso2 in y.out_arrows(f.obj(x.cod(u))) {
                if !y.is_iso(iso2) {
                    continue;
                }
                let b = y.compose(iso2, fa);
                let tgt = object_index[&(iso2, x.cod(u))];
                arrow_index.insert((src, u * y.arrow_count() + iso2), arrows.len());
                arrows.push((u, b));
                endpoints.push((src, tgt));
            }
        }
    }
    let identity: Vec<ArrowId> = objects
        .iter()
        .enumerate()
        .map(|(i, &(iso, a, _))| arrow_index[&(i, x.identity(a) * y.arrow_count() + iso)])
        .collect();
    let category = FiniteCategory::from_fn(objects.len(), endpoints.clone(), identity, |g, h| {
        let src = endpoints[h].0;
        let tgt = endpoints[g].1;
        let composite = x.compose(arrows[g].0, arrows[h].0);
        arrow_index[&(src, composite * y.arrow_count() + objects[tgt].0)]
    });
    let category = Arc::new(category);
    let include = Functor::new_unchecked(
        x.clone(),
        category.clone(),
        x.objects()
            .map(|a| object_index[&(y.identity(f.obj(a)), a)])
            .collect(),
        x.arrows()
            .map(|u| {
                let src = object_index[&(y.identity(f.obj(x.dom(u))), x.dom(u))];
                arrow_index[&(src, u * y.arrow_count() + y.identity(f.obj(x.cod(u))))]
            })
            .collect(),
    );
    let project = Functor::new_unchecked(
        category.clone(),
        y.clone(),
        objects.iter().map(|o| o.2).collect(),
        arrows.iter().map(|a| a.1).collect(),
    );
    MappingPath {
        category,
        objects,
        arrows,
        include,
        project,
    }
}
