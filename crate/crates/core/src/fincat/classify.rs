use std::collections::HashMap;

use super::pi1::{pi1, Pi1Mode, PresentedGroupoid};
use super::{ArrowId, Functor, ObjId};
use crate::Limits;

/// Why a functor fails to be fully faithful on the hom-set `a → b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomFailure {
    pub source: ObjId,
    pub target: ObjId,
    pub kind: HomFailureKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomFailureKind {
    /// Two distinct arrows with the same image.
    NotInjective(ArrowId, ArrowId),
    /// An arrow `F a → F b` with no preimage.
    NotSurjective(ArrowId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorClassification {
    pub monic_on_objects: bool,
    pub fully_faithful: bool,
    pub essentially_surjective: bool,
    pub equivalence: bool,
    pub isofibration: bool,
    pub groupoidal_equivalence: bool,
    /// False when the fundamental groupoids could not be computed within the
    /// coset limit; `groupoidal_equivalence` is then a conservative `false`.
    pub groupoidal_certified: bool,
    /// Two objects with the same image, when not monic.
    pub object_collision: Option<(ObjId, ObjId)>,
    pub hom_failure: Option<HomFailure>,
    /// For each target object: the least `(a, iso: F a → b)` hitting it.
    pub iso_witnesses: Vec<Option<(ObjId, ArrowId)>>,
    /// `(a, y)`: an iso `y` out of `F a` with no isomorphic lift at `a`.
    pub lift_failure: Option<(ObjId, ArrowId)>,
}

pub fn classify_functor(f: &Functor) -> FunctorClassification {
    classify_with(f, &Limits::default())
}

pub fn classify_with(f: &Functor, limits: &Limits) -> FunctorClassification {
    let mut c = basic_flags(f);
    let (s, t) = (f.source(), f.target());
    if is_groupoid(s) && is_groupoid(t) {
        c.groupoidal_equivalence = c.equivalence;
        c.groupoidal_certified = true;
    } else {
        let (ge, certified) = via_pi1(f, limits);
        c.groupoidal_equivalence = ge;
        c.groupoidal_certified = certified;
    }
    c
}

/// Groupoidal equivalence computed through localized fundamental groupoids,
/// even when both sides are already groupoids. Returns the verdict and
/// whether it is certified.
pub fn groupoidal_equivalence_via_pi1(f: &Functor) -> (bool, bool) {
    via_pi1(f, &Limits::default())
}

fn via_pi1(f: &Functor, limits: &Limits) -> (bool, bool) {
    let word_bound = 6;
    let ps = pi1(
        f.source(),
        Pi1Mode::Localized,
        word_bound,
        limits.coset_limit,
    );
    let pt = pi1(
        f.target(),
        Pi1Mode::Localized,
        word_bound,
        limits.coset_limit,
    );
    match ps.induced(f, &pt) {
        Some(g) => (basic_flags(&g).equivalence, true),
        None => (false, components_differ(f, &ps, &pt)),
    }
}

/// A mismatch on connected components certifies non-equivalence even when
/// the vertex groups are out of reach.
fn components_differ(f: &Functor, ps: &PresentedGroupoid, pt: &PresentedGroupoid) -> bool {
    if ps.component_count() != pt.component_count() {
        return true;
    }
    let t = f.target();
    let mut uf = crate::quotient::UnionFind::new(t.object_count());
    for a in t.arrows() {
        uf.union(t.dom(a), t.cod(a));
    }
    let (label, count) = uf.canonical_labels();
    let mut hit = vec![false; count];
    for x in f.source().objects() {
        hit[label[f.obj(x)]] = true;
    }
    hit.iter().any(|h| !h)
}

pub fn is_groupoid(cat: &super::FiniteCategory) -> bool {
    cat.arrows().all(|f| cat.is_iso(f))
}

pub(crate) fn basic_flags(f: &Functor) -> FunctorClassification {
    let (s, t) = (&**f.source(), &**f.target());

    let mut first_with_image: HashMap<ObjId, ObjId> = HashMap::new();
    let mut object_collision = None;
    for x in s.objects() {
        if let Some(&y) = first_with_image.get(&f.obj(x)) {
            object_collision.get_or_insert((y, x));
        } else {
            first_with_image.insert(f.obj(x), x);
        }
    }

    let mut hom_failure = None;
    'homs: for a in s.objects() {
        for b in s.objects() {
            let source_hom = s.hom(a, b);
            let target_hom = t.hom(f.obj(a), f.obj(b));
            let mut preimage: HashMap<ArrowId, ArrowId> = HashMap::with_capacity(source_hom.len());
            for &u in source_hom {
                if let Some(&v) = preimage.get(&f.arr(u)) {
                    hom_failure = Some(HomFailure {
                        source: a,
                        target: b,
                        kind: HomFailureKind::NotInjective(v, u),
                    });
                    break 'homs;
                }
                preimage.insert(f.arr(u), u);
            }
            if let Some(&missing) = target_hom.iter().find(|y| !preimage.contains_key(y)) {
                hom_failure = Some(HomFailure {
                    source: a,
                    target: b,
                    kind: HomFailureKind::NotSurjective(missing),
                });
                break 'homs;
            }
        }
    }

    let mut iso_witnesses: Vec<Option<(ObjId, ArrowId)>> = vec![None; t.object_count()];
    for a in s.objects() {
        for &y in t.out_arrows(f.obj(a)) {
            if t.is_iso(y) && iso_witnesses[t.cod(y)].is_none() {
                iso_witnesses[t.cod(y)] = Some((a, y));
            }
        }
    }

    let mut lift_failure = None;
    'lift: for a in s.objects() {
        let mut lifted: Vec<bool> = vec![false; t.arrow_count()];
        for &x in s.out_arrows(a) {
            if s.is_iso(x) {
                lifted[f.arr(x)] = true;
            }
        }
        for &y in t.out_arrows(f.obj(a)) {
            if t.is_iso(y) && !lifted[y] {
                lift_failure = Some((a, y));
                break 'lift;
            }
        }
    }

    let fully_faithful = hom_failure.is_none();
    let essentially_surjective = iso_witnesses.iter().all(Option::is_some);
    FunctorClassification {
        monic_on_objects: object_collision.is_none(),
        fully_faithful,
        essentially_surjective,
        equivalence: fully_faithful && essentially_surjective,
        isofibration: lift_failure.is_none(),
        groupoidal_equivalence: false,
        groupoidal_certified: false,
        object_collision,
        hom_failure,
        iso_witnesses,
        lift_failure,
    }
}
