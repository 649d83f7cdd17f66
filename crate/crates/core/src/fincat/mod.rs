//! Small categories given by total composition tables.
//!
//! A [`FiniteCategory`] stores every arrow explicitly. Hom-set equality is
//! equality of arrow ids; nothing is quotiented. All checks in this module are
//! exhaustive over the table.

mod classify;
pub mod constructions;
mod coset;
mod elements;
pub(crate) mod functor_cat;
mod path_object;
pub mod pi1;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

pub use classify::{
    classify_functor, classify_with, groupoidal_equivalence_via_pi1, is_groupoid,
    FunctorClassification, HomFailure, HomFailureKind,
};
pub use elements::{category_of_elements, CatDiagram, ElementsCategory};
pub use functor_cat::{
    enumerate_functors, enumerate_transformations, functor_category, FunctorCategory,
};
pub use path_object::{mapping_path_factorization, MappingPath};
pub use pi1::{pi1, Letter, Pi1Mode, PresentedGroupoid, Word};

pub type ObjId = usize;
pub type ArrowId = usize;

#[derive(Clone)]
pub struct FiniteCategory {
    object_count: usize,
    dom: Vec<ObjId>,
    cod: Vec<ObjId>,
    identity: Vec<ArrowId>,
    out_arrows: Vec<Vec<ArrowId>>,
    in_arrows: Vec<Vec<ArrowId>>,
    /// Position of each arrow inside `out_arrows[dom]`.
    out_pos: Vec<u32>,
    /// `table[offset[f] + out_pos[g]] = g ∘ f` for every `g` out of `cod f`.
    offset: Vec<usize>,
    table: Vec<u32>,
    hom: HashMap<(ObjId, ObjId), Vec<ArrowId>>,
    inverse: Vec<Option<ArrowId>>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCategory")
            .field("objects", &self.object_count)
            .field("arrows", &self.dom.len())
            .finish()
    }
}

/// Table equality; names are ignored.
impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.object_count == other.object_count
            && self.dom == other.dom
            && self.cod == other.cod
            && self.identity == other.identity
            && self.table == other.table
    }
}

impl Eq for FiniteCategory {}

impl FiniteCategory {
    /// Builds a category from arrow endpoints, identities and a composition
    /// rule. `compose(g, f)` is called for every composable pair.
    ///
    /// The laws are not checked here; see [`FiniteCategory::check_laws`].
    pub fn from_fn(
        object_count: usize,
        endpoints: Vec<(ObjId, ObjId)>,
        identity: Vec<ArrowId>,
        mut compose: impl FnMut(ArrowId, ArrowId) -> ArrowId,
    ) -> FiniteCategory {
        assert_eq!(identity.len(), object_count, "one identity per object");
        let (dom, cod): (Vec<_>, Vec<_>) = endpoints.into_iter().unzip();
        let n_arrows = dom.len();
        let mut out_arrows = vec![Vec::new(); object_count];
        let mut in_arrows = vec![Vec::new(); object_count];
        let mut out_pos = vec![0u32; n_arrows];
        let mut hom: HashMap<(ObjId, ObjId), Vec<ArrowId>> = HashMap::new();
        for f in 0..n_arrows {
            out_pos[f] = out_arrows[dom[f]].len() as u32;
            out_arrows[dom[f]].push(f);
            in_arrows[cod[f]].push(f);
            hom.entry((dom[f], cod[f])).or_default().push(f);
        }
        let mut offset = Vec::with_capacity(n_arrows);
        let mut total = 0usize;
        for f in 0..n_arrows {
            offset.push(total);
            total += out_arrows[cod[f]].len();
        }
        let mut table = Vec::with_capacity(total);
        for f in 0..n_arrows {
            for &g in &out_arrows[cod[f]] {
                table.push(compose(g, f) as u32);
            }
        }
        let mut cat = FiniteCategory {
            object_count,
            dom,
            cod,
            identity,
            out_arrows,
            in_arrows,
            out_pos,
            offset,
            table,
            hom,
            inverse: Vec::new(),
            names: None,
        };
        cat.inverse = (0..n_arrows).map(|f| cat.find_inverse(f)).collect();
        cat
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.arrow_count());
        self.names = Some(names);
        self
    }

    fn find_inverse(&self, f: ArrowId) -> Option<ArrowId> {
        let (a, b) = (self.dom[f], self.cod[f]);
        self.hom(b, a).iter().copied().find(|&g| {
            self.compose(g, f) == self.identity[a] && self.compose(f, g) == self.identity[b]
        })
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn arrow_count(&self) -> usize {
        self.dom.len()
    }

    pub fn objects(&self) -> std::ops::Range<ObjId> {
        0..self.object_count
    }

    pub fn arrows(&self) -> std::ops::Range<ArrowId> {
        0..self.dom.len()
    }

    pub fn dom(&self, f: ArrowId) -> ObjId {
        self.dom[f]
    }

    pub fn cod(&self, f: ArrowId) -> ObjId {
        self.cod[f]
    }

    pub fn identity(&self, x: ObjId) -> ArrowId {
        self.identity[x]
    }

    pub fn is_identity(&self, f: ArrowId) -> bool {
        self.identity[self.dom[f]] == f
    }

    /// `g ∘ f`. Panics when `cod f != dom g`.
    pub fn compose(&self, g: ArrowId, f: ArrowId) -> ArrowId {
        assert_eq!(self.cod[f], self.dom[g], "compose: not composable");
        self.table[self.offset[f] + self.out_pos[g] as usize] as ArrowId
    }

    pub fn try_compose(&self, g: ArrowId, f: ArrowId) -> Option<ArrowId> {
        (self.cod[f] == self.dom[g]).then(|| self.compose(g, f))
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &[ArrowId] {
        self.hom.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn out_arrows(&self, x: ObjId) -> &[ArrowId] {
        &self.out_arrows[x]
    }

    pub fn in_arrows(&self, x: ObjId) -> &[ArrowId] {
        &self.in_arrows[x]
    }

    pub fn inverse(&self, f: ArrowId) -> Option<ArrowId> {
        self.inverse[f]
    }

    pub fn is_iso(&self, f: ArrowId) -> bool {
        self.inverse[f].is_some()
    }

    /// Least arrow id among the isomorphisms `a → b`.
    pub fn least_iso(&self, a: ObjId, b: ObjId) -> Option<ArrowId> {
        self.hom(a, b).iter().copied().find(|&f| self.is_iso(f))
    }

    pub fn arrow_name(&self, f: ArrowId) -> String {
        match &self.names {
            Some(names) => names[f].clone(),
            None => format!("#{f}"),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Number of composable pairs, i.e. the size of the composition table.
    pub fn composable_pairs(&self) -> usize {
        self.table.len()
    }

    /// Every violation of the identity and associativity laws.
    pub fn check_laws(&self) -> Vec<LawViolation> {
        let mut out = Vec::new();
        let name = |f| self.arrow_name(f);
        for f in self.arrows() {
            let (a, b) = (self.dom[f], self.cod[f]);
            if self.compose(self.identity[b], f) != f {
                out.push(LawViolation::IdentityLaw {
                    arrow: name(f),
                    side: Side::Left,
                });
            }
            if self.compose(f, self.identity[a]) != f {
                out.push(LawViolation::IdentityLaw {
                    arrow: name(f),
                    side: Side::Right,
                });
            }
        }
        for f in self.arrows() {
            for &g in self.out_arrows(self.cod[f]) {
                let gf = self.compose(g, f);
                for &h in self.out_arrows(self.cod[g]) {
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f) {
                        out.push(LawViolation::Associativity {
                            h: name(h),
                            g: name(g),
                            f: name(f),
                        });
                    }
                }
            }
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.arrow_count() == self.object_count
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A failed check on a composition table, naming the offending arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawViolation {
    DuplicateArrow { id: String },
    UnknownArrow { id: String },
    ObjectOutOfRange { arrow: String, object: usize },
    IdentityCount { expected: usize, found: usize },
    IdentityNotEndo { object: usize, arrow: String },
    NonComposable { g: String, f: String },
    ConflictingComposite { g: String, f: String },
    MissingComposite { g: String, f: String },
    CompositeEndpoints { g: String, f: String, gf: String },
    IdentityLaw { arrow: String, side: Side },
    Associativity { h: String, g: String, f: String },
}

impl fmt::Display for LawViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LawViolation::*;
        match self {
            DuplicateArrow { id } => write!(out, "duplicate arrow id `{id}`"),
            UnknownArrow { id } => write!(out, "unknown arrow id `{id}`"),
            ObjectOutOfRange { arrow, object } => {
                write!(out, "arrow `{arrow}` refers to missing object {object}")
            }
            IdentityCount { expected, found } => {
                write!(out, "expected {expected} identities, found {found}")
            }
            IdentityNotEndo { object, arrow } => {
                write!(
                    out,
                    "identity of object {object} is `{arrow}`, which is not an endomorphism of it"
                )
            }
            NonComposable { g, f } => write!(out, "non-composable pair ({g}, {f}) in table"),
            ConflictingComposite { g, f } => write!(
                out,
                "pair ({g}, {f}) listed twice with different composites"
            ),
            MissingComposite { g, f } => {
                write!(out, "composite of composable pair ({g}, {f}) is missing")
            }
            CompositeEndpoints { g, f, gf } => {
                write!(out, "composite {gf} of ({g}, {f}) has the wrong endpoints")
            }
            IdentityLaw { arrow, side } => match side {
                Side::Left => write!(out, "identity law: id ∘ {arrow} != {arrow}"),
                Side::Right => write!(out, "identity law: {arrow} ∘ id != {arrow}"),
            },
            Associativity { h, g, f } => {
                write!(out, "associativity fails on ({h}, {g}, {f})")
            }
        }
    }
}

/// Tables exactly as they appear in a category file, with string arrow ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub objects: usize,
    pub arrows: Vec<(String, usize, usize)>,
    pub identities: Vec<String>,
    /// `(g, f, g ∘ f)`
    pub compose: Vec<(String, String, String)>,
}

/// Validates raw tables, returning either the category or every violation.
pub fn validate_category(raw: &RawCategory) -> Result<FiniteCategory, Vec<LawViolation>> {
    let mut errors = Vec::new();
    let mut index: HashMap<&str, ArrowId> = HashMap::new();
    let mut endpoints = Vec::with_capacity(raw.arrows.len());
    for (id, dom, cod) in &raw.arrows {
        if index.insert(id.as_str(), endpoints.len()).is_some() {
            errors.push(LawViolation::DuplicateArrow { id: id.clone() });
        }
        for &o in [dom, cod] {
            if o >= raw.objects {
                errors.push(LawViolation::ObjectOutOfRange {
                    arrow: id.clone(),
                    object: o,
                });
            }
        }
        endpoints.push((*dom, *cod));
    }
    let lookup = |id: &String, errors: &mut Vec<LawViolation>| -> Option<ArrowId> {
        let found = index.get(id.as_str()).copied();
        if found.is_none() {
            errors.push(LawViolation::UnknownArrow { id: id.clone() });
        }
        found
    };
    if raw.identities.len() != raw.objects {
        errors.push(LawViolation::IdentityCount {
            expected: raw.objects,
            found: raw.identities.len(),
        });
    }
    let mut identity = Vec::with_capacity(raw.objects);
    for (x, id) in raw.identities.iter().enumerate() {
        if let Some(f) = lookup(id, &mut errors) {
            if endpoints[f] != (x, x) {
                errors.push(LawViolation::IdentityNotEndo {
                    object: x,
                    arrow: id.clone(),
                });
            }
            identity.push(f);
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }

    let mut table: HashMap<(ArrowId, ArrowId), ArrowId> = HashMap::new();
    for (g, f, gf) in &raw.compose {
        let (Some(g_id), Some(f_id), Some(gf_id)) = (
            lookup(g, &mut errors),
            lookup(f, &mut errors),
            lookup(gf, &mut errors),
        ) else {
            continue;
        };
        if endpoints[f_id].1 != endpoints[g_id].0 {
            errors.push(LawViolation::NonComposable {
                g: g.clone(),
                f: f.clone(),
            });
            continue;
        }
        if endpoints[gf_id] != (endpoints[f_id].0, endpoints[g_id].1) {
            errors.push(LawViolation::CompositeEndpoints {
                g: g.clone(),
                f: f.clone(),
                gf: gf.clone(),
            });
        }
        if let Some(prev) = table.insert((g_id, f_id), gf_id) {
            if prev != gf_id {
                errors.push(LawViolation::ConflictingComposite {
                    g: g.clone(),
                    f: f.clone(),
                });
            }
        }
    }
    let names: Vec<String> = raw.arrows.iter().map(|a| a.0.clone()).collect();
    for f in 0..endpoints.len() {
        for g in 0..endpoints.len() {
            if endpoints[f].1 == endpoints[g].0 && !table.contains_key(&(g, f)) {
                errors.push(LawViolation::MissingComposite {
                    g: names[g].clone(),
                    f: names[f].clone(),
                });
            }
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let cat = FiniteCategory::from_fn(raw.objects, endpoints, identity, |g, f| table[&(g, f)])
        .with_names(names);
    let violations = cat.check_laws();
    if violations.is_empty() {
        Ok(cat)
    } else {
        Err(violations)
    }
}

impl FiniteCategory {
    /// The tables of this category in file order: arrows by id, composites
    /// sorted by `(g, f)` ids.
    pub fn to_raw(&self) -> RawCategory {
        let name = |f| self.arrow_name(f);
        let arrows = self
            .arrows()
            .map(|f| (name(f), self.dom[f], self.cod[f]))
            .collect();
        let identities = self.objects().map(|x| name(self.identity[x])).collect();
        let mut pairs = Vec::with_capacity(self.table.len());
        for f in self.arrows() {
            for &g in self.out_arrows(self.cod[f]) {
                pairs.push((g, f));
            }
        }
        pairs.sort_unstable();
        let compose = pairs
            .into_iter()
            .map(|(g, f)| (name(g), name(f), name(self.compose(g, f))))
            .collect();
        RawCategory {
            objects: self.object_count,
            arrows,
            identities,
            compose,
        }
    }
}

/// A functor between finite categories, stored as object and arrow tables.
#[derive(Clone)]
pub struct Functor {
    source: Arc<FiniteCategory>,
    target: Arc<FiniteCategory>,
    object_map: Vec<ObjId>,
    arrow_map: Vec<ArrowId>,
}

impl fmt::Debug for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Functor")
            .field("object_map", &self.object_map)
            .field("arrow_map", &self.arrow_map)
            .finish()
    }
}

impl PartialEq for Functor {
    fn eq(&self, other: &Self) -> bool {
        self.object_map == other.object_map && self.arrow_map == other.arrow_map
    }
}

impl Eq for Functor {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctorViolation {
    TableSize,
    Endpoints { arrow: String },
    Identity { object: ObjId },
    Composite { g: String, f: String },
}

impl fmt::Display for FunctorViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorViolation::TableSize => {
                write!(out, "object or arrow table has the wrong length")
            }
            FunctorViolation::Endpoints { arrow } => {
                write!(out, "image of `{arrow}` has the wrong endpoints")
            }
            FunctorViolation::Identity { object } => {
                write!(out, "identity of object {object} is not preserved")
            }
            FunctorViolation::Composite { g, f } => {
                write!(out, "composite of ({g}, {f}) is not preserved")
            }
        }
    }
}

impl Functor {
    pub fn new(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        object_map: Vec<ObjId>,
        arrow_map: Vec<ArrowId>,
    ) -> Result<Functor, Vec<FunctorViolation>> {
        let functor = Functor::new_unchecked(source, target, object_map, arrow_map);
        let violations = functor.violations();
        if violations.is_empty() {
            Ok(functor)
        } else {
            Err(violations)
        }
    }

    pub fn new_unchecked(
        source: Arc<FiniteCategory>,
        target: Arc<FiniteCategory>,
        object_map: Vec<ObjId>,
        arrow_map: Vec<ArrowId>,
    ) -> Functor {
        Functor {
            source,
            target,
            object_map,
            arrow_map,
        }
    }

    pub fn identity(cat: Arc<FiniteCategory>) -> Functor {
        let object_map = cat.objects().collect();
        let arrow_map = cat.arrows().collect();
        Functor::new_unchecked(cat.clone(), cat, object_map, arrow_map)
    }

    /// The functor from `source` onto the single object of `target`.
    pub fn to_terminal(source: Arc<FiniteCategory>, target: Arc<FiniteCategory>) -> Functor {
        assert_eq!(target.arrow_count(), 1);
        let object_map = vec![0; source.object_count()];
        let arrow_map = vec![0; source.arrow_count()];
        Functor::new_unchecked(source, target, object_map, arrow_map)
    }

    pub fn source(&self) -> &Arc<FiniteCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteCategory> {
        &self.target
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.object_map[x]
    }

    pub fn arr(&self, f: ArrowId) -> ArrowId {
        self.arrow_map[f]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.object_map
    }

    pub fn arrow_map(&self) -> &[ArrowId] {
        &self.arrow_map
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Functor) -> Functor {
        assert!(
            Arc::ptr_eq(&first.target, &self.source)
                || (first.target.object_count() == self.source.object_count()
                    && first.target.arrow_count() == self.source.arrow_count()),
            "functor composition: endpoint mismatch"
        );
        Functor::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            first
                .object_map
                .iter()
                .map(|&x| self.object_map[x])
                .collect(),
            first.arrow_map.iter().map(|&f| self.arrow_map[f]).collect(),
        )
    }

    /// Checks preservation of endpoints, identities and every composite.
    pub fn violations(&self) -> Vec<FunctorViolation> {
        let (s, t) = (&*self.source, &*self.target);
        if self.object_map.len() != s.object_count() || self.arrow_map.len() != s.arrow_count() {
            return vec![FunctorViolation::TableSize];
        }
        if self.object_map.iter().any(|&x| x >= t.object_count())
            || self.arrow_map.iter().any(|&f| f >= t.arrow_count())
        {
            return vec![FunctorViolation::TableSize];
        }
        let mut out = Vec::new();
        for f in s.arrows() {
            let image = self.arrow_map[f];
            if t.dom(image) != self.object_map[s.dom(f)]
                || t.cod(image) != self.object_map[s.cod(f)]
            {
                out.push(FunctorViolation::Endpoints {
                    arrow: s.arrow_name(f),
                });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for x in s.objects() {
            if self.arrow_map[s.identity(x)] != t.identity(self.object_map[x]) {
                out.push(FunctorViolation::Identity { object: x });
            }
        }
        for f in s.arrows() {
            for &g in s.out_arrows(s.cod(f)) {
                let lhs = self.arrow_map[s.compose(g, f)];
                let rhs = t.compose(self.arrow_map[g], self.arrow_map[f]);
                if lhs != rhs {
                    out.push(FunctorViolation::Composite {
                        g: s.arrow_name(g),
                        f: s.arrow_name(f),
                    });
                }
            }
        }
        out
    }

    pub fn is_isomorphism(&self) -> bool {
        let bijective = |map: &[usize], n: usize| {
            let mut seen = vec![false; n];
            map.len() == n && map.iter().all(|&x| !std::mem::replace(&mut seen[x], true))
        };
        bijective(&self.object_map, self.target.object_count())
            && bijective(&self.arrow_map, self.target.arrow_count())
    }
}

/// A natural transformation between parallel functors.
#[derive(Clone, Debug)]
pub struct NaturalTransformation {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<ArrowId>,
}

impl NaturalTransformation {
    /// First arrow whose naturality square fails, if any.
    pub fn naturality_failure(&self) -> Option<ArrowId> {
        let c = self.source.source();
        let d = self.source.target();
        for x in c.objects() {
            let comp = self.components[x];
            if d.dom(comp) != self.source.obj(x) || d.cod(comp) != self.target.obj(x) {
                return Some(c.identity(x));
            }
        }
        c.arrows().find(|&f| {
            let (a, b) = (c.dom(f), c.cod(f));
            d.compose(self.target.arr(f), self.components[a])
                != d.compose(self.components[b], self.source.arr(f))
        })
    }

    pub fn is_natural(&self) -> bool {
        self.naturality_failure().is_none()
    }
}
