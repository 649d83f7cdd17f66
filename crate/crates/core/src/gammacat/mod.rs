//! Γ-categories truncated to degrees `0..=N`.

mod day;
mod locality;
mod mapping;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::fincat::constructions::{discrete, terminal};
use crate::fincat::{classify_functor, FiniteCategory, Functor};
use crate::gammaop::{compose, hom_set, projection, smash, BasedMap, Side};
use crate::{Error, Result};

pub use day::{
    day_convolution, day_symmetry, discrete_power, representable_comparison, unit_comparison,
    DayMode, DayPresentation, DayResult,
};
pub use locality::{segal_local_checks, Level0Status, LocalityReport, MapVerdict};
pub use mapping::{map_category, yoneda_evaluation, MapCategory};

#[derive(Clone, Debug)]
pub struct TruncatedGammaCategory {
    truncation: usize,
    levels: Vec<Arc<FiniteCategory>>,
    action: BTreeMap<BasedMap, Functor>,
}

/// Every based map between degrees `≤ n`, by source, target, then images.
pub fn based_maps_up_to(n: usize) -> Vec<BasedMap> {
    (0..=n)
        .flat_map(|k| (0..=n).flat_map(move |m| hom_set(k, m)))
        .collect()
}

impl TruncatedGammaCategory {
    /// Builds the action by calling `action` on every based map of degree
    /// `≤ truncation`.
    pub fn new(
        truncation: usize,
        levels: Vec<Arc<FiniteCategory>>,
        action: impl Fn(&BasedMap) -> Functor,
    ) -> TruncatedGammaCategory {
        assert_eq!(levels.len(), truncation + 1);
        let action = based_maps_up_to(truncation)
            .into_iter()
            .map(|f| {
                let x = action(&f);
                (f, x)
            })
            .collect();
        TruncatedGammaCategory {
            truncation,
            levels,
            action,
        }
    }

    /// Unvalidated assembly from explicit tables, e.g. parsed from a file.
    pub fn from_parts(
        truncation: usize,
        levels: Vec<Arc<FiniteCategory>>,
        action: BTreeMap<BasedMap, Functor>,
    ) -> Result<TruncatedGammaCategory> {
        if levels.len() != truncation + 1 {
            return Err(Error::Invalid(format!(
                "expected {} levels, got {}",
                truncation + 1,
                levels.len()
            )));
        }
        if let Some(f) = action
            .keys()
            .find(|f| f.source > truncation || f.target > truncation)
        {
            return Err(Error::DegreeOutOfRange {
                degree: f.source.max(f.target),
                truncation,
            });
        }
        Ok(TruncatedGammaCategory {
            truncation,
            levels,
            action,
        })
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn level(&self, k: usize) -> Result<&Arc<FiniteCategory>> {
        self.levels.get(k).ok_or(Error::DegreeOutOfRange {
            degree: k,
            truncation: self.truncation,
        })
    }

    pub fn levels(&self) -> &[Arc<FiniteCategory>] {
        &self.levels
    }

    pub fn action(&self, f: &BasedMap) -> Result<&Functor> {
        let degree = f.source.max(f.target);
        if degree > self.truncation {
            return Err(Error::DegreeOutOfRange {
                degree,
                truncation: self.truncation,
            });
        }
        self.action
            .get(f)
            .ok_or_else(|| Error::Invalid(format!("no action recorded for {f}")))
    }

    pub fn actions(&self) -> impl Iterator<Item = (&BasedMap, &Functor)> {
        self.action.iter()
    }

    pub fn is_discrete(&self) -> bool {
        self.levels.iter().all(|c| c.is_discrete())
    }

    /// The same Γ-category cut down to a smaller truncation.
    pub fn restrict(&self, truncation: usize) -> Result<TruncatedGammaCategory> {
        if truncation > self.truncation {
            return Err(Error::DegreeOutOfRange {
                degree: truncation,
                truncation: self.truncation,
            });
        }
        let action = self
            .action
            .iter()
            .filter(|(f, _)| f.source <= truncation && f.target <= truncation)
            .map(|(f, x)| (f.clone(), x.clone()))
            .collect();
        Ok(TruncatedGammaCategory {
            truncation,
            levels: self.levels[..=truncation].to_vec(),
            action,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GammaViolation {
    MissingAction { map: String },
    Endpoints { map: String },
    NotAFunctor { map: String, detail: String },
    Identity { map: String },
    Composition { g: String, f: String },
}

impl fmt::Display for GammaViolation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaViolation::MissingAction { map } => write!(out, "no action for {map}"),
            GammaViolation::Endpoints { map } => write!(out, "action of {map} has wrong endpoints"),
            GammaViolation::NotAFunctor { map, detail } => {
                write!(out, "action of {map} is not a functor: {detail}")
            }
            GammaViolation::Identity { map } => write!(out, "action of {map} is not the identity"),
            GammaViolation::Composition { g, f } => {
                write!(out, "X(g∘f) differs from X(g)∘X(f) at (g, f) = ({g}, {f})")
            }
        }
    }
}

/// Checks that every action is a functor between the right levels, that
/// identities act trivially, and that composition is respected.
pub fn validate_gamma(x: &TruncatedGammaCategory) -> Vec<GammaViolation> {
    let n = x.truncation;
    let mut out = Vec::new();
    let maps = based_maps_up_to(n);
    let mut usable = HashMap::new();
    for f in &maps {
        let map = f.to_string();
        let Some(xf) = x.action.get(f) else {
            out.push(GammaViolation::MissingAction { map });
            continue;
        };
        if !Arc::ptr_eq(xf.source(), &x.levels[f.source]) && **xf.source() != *x.levels[f.source]
            || !Arc::ptr_eq(xf.target(), &x.levels[f.target])
                && **xf.target() != *x.levels[f.target]
        {
            out.push(GammaViolation::Endpoints { map });
            continue;
        }
        if let Some(v) = xf.violations().first() {
            out.push(GammaViolation::NotAFunctor {
                map,
                detail: v.to_string(),
            });
            continue;
        }
        if f.is_identity() && *xf != Functor::identity(x.levels[f.source].clone()) {
            out.push(GammaViolation::Identity { map });
        }
        usable.insert(f.clone(), xf);
    }
    for f in &maps {
        for g in maps.iter().filter(|g| g.source == f.target) {
            let (Some(xf), Some(xg)) = (usable.get(f), usable.get(g)) else {
                continue;
            };
            let gf = compose(g, f).expect("composable");
            let Some(xgf) = usable.get(&gf) else { continue };
            if xg.after(xf) != **xgf {
                out.push(GammaViolation::Composition {
                    g: g.to_string(),
                    f: f.to_string(),
                });
            }
        }
    }
    out.dedup();
    out
}

/// The constant Γ-category at `c`.
pub fn constant(c: Arc<FiniteCategory>, truncation: usize) -> TruncatedGammaCategory {
    let levels = vec![c.clone(); truncation + 1];
    TruncatedGammaCategory::new(truncation, levels, |_| Functor::identity(c.clone()))
}

/// A discrete Γ-category given by finite sets and maps between them.
pub fn discrete_gamma(
    truncation: usize,
    sizes: &[usize],
    action: impl Fn(&BasedMap, usize) -> usize,
) -> TruncatedGammaCategory {
    let levels: Vec<Arc<FiniteCategory>> = sizes.iter().map(|&s| Arc::new(discrete(s))).collect();
    let lv = levels.clone();
    TruncatedGammaCategory::new(truncation, levels, move |f| {
        let objects: Vec<usize> = (0..sizes[f.source]).map(|x| action(f, x)).collect();
        Functor::new_unchecked(
            lv[f.source].clone(),
            lv[f.target].clone(),
            objects.clone(),
            objects,
        )
    })
}

/// Position of a based map in [`hom_set`].
pub(crate) fn hom_index(f: &BasedMap) -> usize {
    let m = f.target + 1;
    f.images.iter().fold(0, |acc, &i| acc * m + i)
}

/// `Γⁿ = Γ^op(n⁺, −)`, discrete at every level.
pub fn representable(n: usize, truncation: usize) -> Result<TruncatedGammaCategory> {
    if n > truncation {
        return Err(Error::DegreeOutOfRange {
            degree: n,
            truncation,
        });
    }
    let sizes: Vec<usize> = (0..=truncation).map(|k| hom_set(n, k).len()).collect();
    let homs: Vec<Vec<BasedMap>> = (0..=truncation).map(|k| hom_set(n, k)).collect();
    Ok(discrete_gamma(truncation, &sizes, |f, x| {
        hom_index(&compose(f, &homs[f.source][x]).expect("composable"))
    }))
}

/// Levelwise family of functors between two Γ-categories.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaMorphism {
    pub components: Vec<Functor>,
}

impl GammaMorphism {
    pub fn identity(x: &TruncatedGammaCategory) -> GammaMorphism {
        GammaMorphism {
            components: x
                .levels
                .iter()
                .map(|c| Functor::identity(c.clone()))
                .collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GammaMorphism) -> GammaMorphism {
        GammaMorphism {
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(s, f)| s.after(f))
                .collect(),
        }
    }

    /// The least based map at which `Y(f)∘F = F∘X(f)` fails, or a bad
    /// component.
    pub fn naturality_failure(
        &self,
        x: &TruncatedGammaCategory,
        y: &TruncatedGammaCategory,
    ) -> Option<String> {
        if x.truncation != y.truncation || self.components.len() != x.truncation + 1 {
            return Some("truncations differ".into());
        }
        for (k, c) in self.components.iter().enumerate() {
            if **c.source() != *x.levels[k] || **c.target() != *y.levels[k] {
                return Some(format!("component {k} has wrong endpoints"));
            }
            if !c.violations().is_empty() {
                return Some(format!("component {k} is not a functor"));
            }
        }
        for (f, xf) in &x.action {
            let yf = &y.action[f];
            if yf.after(&self.components[f.source]) != self.components[f.target].after(xf) {
                return Some(f.to_string());
            }
        }
        None
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Functor::is_isomorphism)
    }
}

/// Levelwise groupoidal equivalence.
pub fn strict_equivalence(f: &GammaMorphism) -> bool {
    f.components
        .iter()
        .all(|c| classify_functor(c).groupoidal_equivalence)
}

/// The unique morphism into the constant terminal Γ-category.
pub fn to_terminal(x: &TruncatedGammaCategory) -> (TruncatedGammaCategory, GammaMorphism) {
    let t = constant(Arc::new(terminal()), x.truncation);
    let components = x
        .levels
        .iter()
        .zip(&t.levels)
        .map(|(a, b)| Functor::to_terminal(a.clone(), b.clone()))
        .collect();
    (t, GammaMorphism { components })
}

/// `Γⁿ ∨ Γᵐ` with its two injections.
#[derive(Clone, Debug)]
pub struct Wedge {
    pub object: TruncatedGammaCategory,
    pub left: GammaMorphism,
    pub right: GammaMorphism,
}

/// Levelwise pushout of `Γⁿ ← Γ⁰ → Γᵐ`: the two zero maps are identified.
/// At level `k` the objects are `hom(n,k)` followed by the non-zero maps of
/// `hom(m,k)`.
pub fn wedge(n: usize, m: usize, truncation: usize) -> Result<Wedge> {
    let gn = representable(n, truncation)?;
    let gm = representable(m, truncation)?;
    let left_size = |k: usize| hom_set(n, k).len();
    let index_right = move |g: &BasedMap| -> usize {
        let i = hom_index(g);
        if i == 0 {
            0
        } else {
            left_size(g.target) + i - 1
        }
    };
    let sizes: Vec<usize> = (0..=truncation)
        .map(|k| left_size(k) + hom_set(m, k).len() - 1)
        .collect();
    let homs_n: Vec<Vec<BasedMap>> = (0..=truncation).map(|k| hom_set(n, k)).collect();
    let homs_m: Vec<Vec<BasedMap>> = (0..=truncation).map(|k| hom_set(m, k)).collect();
    let element = |k: usize, x: usize| -> (bool, BasedMap) {
        if x < homs_n[k].len() {
            (true, homs_n[k][x].clone())
        } else {
            (false, homs_m[k][x - homs_n[k].len() + 1].clone())
        }
    };
    let object = discrete_gamma(truncation, &sizes, |f, x| {
        let (is_left, g) = element(f.source, x);
        let fg = compose(f, &g).expect("composable");
        if is_left {
            hom_index(&fg)
        } else {
            index_right(&fg)
        }
    });
    let inj = |src: &TruncatedGammaCategory,
               index: &dyn Fn(&BasedMap) -> usize,
               homs: &[Vec<BasedMap>]| {
        GammaMorphism {
            components: (0..=truncation)
                .map(|k| {
                    let objs: Vec<usize> = homs[k].iter().map(index).collect();
                    Functor::new_unchecked(
                        src.levels[k].clone(),
                        object.levels[k].clone(),
                        objs.clone(),
                        objs,
                    )
                })
                .collect(),
        }
    };
    let left = inj(&gn, &hom_index, &homs_n);
    let right = inj(&gm, &index_right, &homs_m);
    Ok(Wedge {
        object,
        left,
        right,
    })
}

/// `h: Γᵏ ∨ Γˡ → Γᵏ⁺ˡ`, precomposition with the two projections out of
/// `(k+l)⁺`.
pub fn h_map(
    k: usize,
    l: usize,
    truncation: usize,
) -> Result<(Wedge, TruncatedGammaCategory, GammaMorphism)> {
    let w = wedge(k, l, truncation)?;
    let target = representable(k + l, truncation)?;
    let (pl, pr) = (projection(k, l, Side::Left), projection(k, l, Side::Right));
    let components = (0..=truncation)
        .map(|j| {
            let left = hom_set(k, j);
            let right = hom_set(l, j);
            let objs: Vec<usize> = left
                .iter()
                .map(|g| hom_index(&compose(g, &pl).unwrap()))
                .chain(
                    right
                        .iter()
                        .skip(1)
                        .map(|g| hom_index(&compose(g, &pr).unwrap())),
                )
                .collect();
            Functor::new_unchecked(
                w.object.levels[j].clone(),
                target.levels[j].clone(),
                objs.clone(),
                objs,
            )
        })
        .collect();
    Ok((w, target, GammaMorphism { components }))
}

/// `X(n⁺ ∧ −)` up to `truncation`, which must satisfy `n·truncation ≤ N`.
pub fn precompose_smash(
    x: &TruncatedGammaCategory,
    n: usize,
    truncation: usize,
) -> Result<TruncatedGammaCategory> {
    let needed = n * truncation;
    if needed > x.truncation {
        return Err(Error::DegreeOutOfRange {
            degree: needed,
            truncation: x.truncation,
        });
    }
    let id = BasedMap::identity(n);
    let levels = (0..=truncation).map(|k| x.levels[n * k].clone()).collect();
    Ok(TruncatedGammaCategory::new(truncation, levels, |f| {
        x.action[&smash(&id, f)].clone()
    }))
}

/// The internal hom out of `Γⁿ`, realised as [`precompose_smash`].
pub fn internal_hom(
    n: usize,
    x: &TruncatedGammaCategory,
    truncation: usize,
) -> Result<TruncatedGammaCategory> {
    precompose_smash(x, n, truncation)
}

/// Table equality of two Γ-categories.
pub fn same_gamma(x: &TruncatedGammaCategory, y: &TruncatedGammaCategory) -> bool {
    x.truncation == y.truncation
        && x.levels.iter().zip(&y.levels).all(|(a, b)| **a == **b)
        && x.action.len() == y.action.len()
        && x.action.iter().all(|(f, xf)| {
            y.action.get(f).is_some_and(|yf| {
                xf.object_map() == yf.object_map() && xf.arrow_map() == yf.arrow_map()
            })
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::constructions::walking_iso;

    #[test]
    fn representables_validate() {
        for n in 0..=2 {
            let g = representable(n, 3).unwrap();
            assert!(validate_gamma(&g).is_empty());
        }
        let g1 = representable(1, 2).unwrap();
        assert_eq!(g1.level(1).unwrap().object_count(), 2);
        assert_eq!(g1.level(2).unwrap().object_count(), 3);
        assert!(matches!(
            representable(3, 2),
            Err(Error::DegreeOutOfRange { .. })
        ));
    }

    #[test]
    fn constant_validates() {
        let c = constant(Arc::new(walking_iso()), 2);
        assert!(validate_gamma(&c).is_empty());
    }

    #[test]
    fn perturbed_action_is_named() {
        let g = representable(1, 2).unwrap();
        let mut action = g.action.clone();
        let m2 = crate::gammaop::multiplication();
        let bad = action[&m2].clone();
        let objs: Vec<usize> = bad.object_map().iter().map(|_| 0).collect();
        action.insert(
            m2.clone(),
            Functor::new_unchecked(
                bad.source().clone(),
                bad.target().clone(),
                objs.clone(),
                objs,
            ),
        );
        let x = TruncatedGammaCategory::from_parts(2, g.levels.clone(), action).unwrap();
        let v = validate_gamma(&x);
        assert!(v.iter().any(
            |v| matches!(v, GammaViolation::Composition { g, .. } if g == &m2.to_string())
                || matches!(v, GammaViolation::Composition { f, .. } if f == &m2.to_string())
        ));
    }

    #[test]
    fn wedge_and_h() {
        let w = wedge(1, 1, 2).unwrap();
        assert!(validate_gamma(&w.object).is_empty());
        assert_eq!(w.object.level(1).unwrap().object_count(), 3);
        assert!(w
            .left
            .naturality_failure(&representable(1, 2).unwrap(), &w.object)
            .is_none());
        assert!(w
            .right
            .naturality_failure(&representable(1, 2).unwrap(), &w.object)
            .is_none());
        let (w, target, h) = h_map(1, 1, 2).unwrap();
        assert!(h.naturality_failure(&w.object, &target).is_none());
        let at1 = &h.components[1];
        assert_eq!(at1.target().object_count(), 4);
        let mut images = at1.object_map().to_vec();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), 3);
    }

    #[test]
    fn h_restricts_to_projections() {
        for k in 0..=3 {
            for l in 0..=3 - k {
                let (w, _, h) = h_map(k, l, 3).unwrap();
                for (side, inj) in [(Side::Left, &w.left), (Side::Right, &w.right)] {
                    let p = projection(k, l, side);
                    let composite = h.after(inj);
                    for (j, c) in composite.components.iter().enumerate() {
                        let src = hom_set(p.target, j);
                        for (x, g) in src.iter().enumerate() {
                            assert_eq!(c.obj(x), hom_index(&compose(g, &p).unwrap()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn smash_precomposition() {
        let g1 = representable(1, 2).unwrap();
        assert!(same_gamma(&precompose_smash(&g1, 1, 2).unwrap(), &g1));
        assert!(same_gamma(&internal_hom(1, &g1, 2).unwrap(), &g1));
        let g1_4 = representable(1, 4).unwrap();
        let p = precompose_smash(&g1_4, 2, 2).unwrap();
        assert!(validate_gamma(&p).is_empty());
        assert_eq!(p.level(1).unwrap().object_count(), 3);
        assert!(precompose_smash(&g1, 2, 2).is_err());
    }

    #[test]
    fn equivalence_verdicts() {
        let g1 = representable(1, 2).unwrap();
        assert!(strict_equivalence(&GammaMorphism::identity(&g1)));
        let (t, f) = to_terminal(&g1);
        assert!(f.naturality_failure(&g1, &t).is_none());
        assert!(!strict_equivalence(&f));
    }
}
