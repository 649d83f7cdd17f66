use serde::Serialize;

use super::TruncatedGammaCategory;
use crate::fincat::constructions::Product;
use crate::fincat::{classify_with, is_groupoid, FiniteCategory, Functor, HomFailureKind};
use crate::gammaop::{multiplication, projection, Side};
use crate::{Error, Limits, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Level0Status {
    Contractible,
    Empty,
    Other,
}

/// Verdict on one comparison functor `X(n⁺) → X(k⁺) × X(l⁺)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MapVerdict {
    pub name: String,
    pub equivalence: bool,
    /// False when the verdict could not be certified within the coset limit.
    pub certified: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalityReport {
    pub truncation: usize,
    pub groupoid_levels: Vec<bool>,
    pub segal_maps: Vec<MapVerdict>,
    pub p_infinity_maps: Vec<MapVerdict>,
    pub level0: Level0Status,
    /// Every level is a groupoid.
    pub condition1: bool,
    /// Every Segal map with `k + l ≤ N` is an equivalence; at `(0, 0)` this
    /// accepts an empty as well as a contractible `X(0⁺)`.
    pub condition2: bool,
    /// Condition (2) with `X(0⁺)` additionally required to be contractible.
    pub condition2_contractible: bool,
    /// Both P∞ maps are equivalences.
    pub condition3: bool,
    pub cc_monoidal: bool,
    pub cc_picard: bool,
    pub failed_conditions: Vec<u8>,
}

fn level0_status(c: &FiniteCategory) -> Level0Status {
    if c.object_count() == 0 {
        Level0Status::Empty
    } else if c
        .objects()
        .all(|a| c.objects().all(|b| c.hom(a, b).len() == 1))
    {
        Level0Status::Contractible
    } else {
        Level0Status::Other
    }
}

fn verdict(name: String, f: &Functor, limits: &Limits) -> MapVerdict {
    let c = classify_with(f, limits);
    let (s, t) = (f.source(), f.target());
    let witness = if c.groupoidal_equivalence {
        None
    } else if let Some(b) = c.iso_witnesses.iter().position(Option::is_none) {
        Some(format!("target object {b} is not isomorphic to any image"))
    } else if let Some(h) = &c.hom_failure {
        Some(match h.kind {
            HomFailureKind::NotInjective(u, v) => format!(
                "arrows {} and {} in hom({}, {}) have the same image",
                s.arrow_name(u),
                s.arrow_name(v),
                h.source,
                h.target
            ),
            HomFailureKind::NotSurjective(y) => format!(
                "arrow {} in hom(F{}, F{}) has no preimage",
                t.arrow_name(y),
                h.source,
                h.target
            ),
        })
    } else {
        Some("the induced functor on fundamental groupoids is not an equivalence".into())
    };
    MapVerdict {
        name,
        equivalence: c.groupoidal_equivalence,
        certified: c.groupoidal_certified,
        witness,
    }
}

fn paired(
    x: &TruncatedGammaCategory,
    first: &crate::gammaop::BasedMap,
    second: &crate::gammaop::BasedMap,
) -> Result<Functor> {
    let a = x.action(first)?;
    let b = x.action(second)?;
    let prod = Product::new(a.target(), b.target());
    Ok(prod.pair(a, b))
}

/// Groupoid levels, Segal maps for all `k + l ≤ N`, and the two P∞ maps
/// `(m₂, δ²₁)`, `(m₂, δ²₂)` into `X(1⁺)²`.
pub fn segal_local_checks(x: &TruncatedGammaCategory, limits: &Limits) -> Result<LocalityReport> {
    let n = x.truncation();
    if n < 2 {
        return Err(Error::TruncationTooSmall(n));
    }
    let groupoid_levels: Vec<bool> = x.levels().iter().map(|c| is_groupoid(c)).collect();
    let mut segal_maps = Vec::new();
    for total in 0..=n {
        for k in 0..=total {
            let l = total - k;
            let f = paired(
                x,
                &projection(k, l, Side::Left),
                &projection(k, l, Side::Right),
            )?;
            segal_maps.push(verdict(format!("segal({k},{l})"), &f, limits));
        }
    }
    let m2 = multiplication();
    let p_infinity_maps = [
        ("(m2,delta(2,1))", Side::Left),
        ("(m2,delta(2,2))", Side::Right),
    ]
    .into_iter()
    .map(|(name, side)| {
        let f = paired(x, &m2, &projection(1, 1, side))?;
        Ok(verdict(name.to_string(), &f, limits))
    })
    .collect::<Result<Vec<_>>>()?;
    let level0 = level0_status(x.level(0)?);
    let condition1 = groupoid_levels.iter().all(|&g| g);
    let condition2 = segal_maps.iter().all(|v| v.equivalence);
    let condition2_contractible = condition2 && level0 == Level0Status::Contractible;
    let condition3 = p_infinity_maps.iter().all(|v| v.equivalence);
    let failed_conditions = [(1, condition1), (2, condition2), (3, condition3)]
        .into_iter()
        .filter(|&(_, ok)| !ok)
        .map(|(i, _)| i)
        .collect();
    Ok(LocalityReport {
        truncation: n,
        groupoid_levels,
        segal_maps,
        p_infinity_maps,
        level0,
        condition1,
        condition2,
        condition2_contractible,
        condition3,
        cc_monoidal: condition1 && condition2,
        cc_picard: condition1 && condition2 && condition3,
        failed_conditions,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{constant, representable};
    use super::*;
    use crate::fincat::constructions::{discrete, empty, terminal};
    use std::sync::Arc;

    #[test]
    fn representable_fails_segal_at_one_one() {
        let g1 = representable(1, 2).unwrap();
        let r = segal_local_checks(&g1, &Limits::default()).unwrap();
        assert!(r.condition1);
        assert!(!r.condition2);
        let v = r
            .segal_maps
            .iter()
            .find(|v| v.name == "segal(1,1)")
            .unwrap();
        assert!(!v.equivalence);
        assert!(v.witness.as_ref().unwrap().contains("not isomorphic"));
    }

    #[test]
    fn level0_cases() {
        let t = segal_local_checks(&constant(Arc::new(terminal()), 2), &Limits::default()).unwrap();
        assert_eq!(t.level0, Level0Status::Contractible);
        assert!(t.cc_picard);
        let e = segal_local_checks(&constant(Arc::new(empty()), 2), &Limits::default()).unwrap();
        assert_eq!(e.level0, Level0Status::Empty);
        assert!(e.condition2);
        assert!(!e.condition2_contractible);
        let d =
            segal_local_checks(&constant(Arc::new(discrete(2)), 2), &Limits::default()).unwrap();
        assert_eq!(d.level0, Level0Status::Other);
        assert!(!d.condition2);
    }

    #[test]
    fn too_small() {
        let g = representable(1, 1).unwrap();
        assert_eq!(
            segal_local_checks(&g, &Limits::default()).unwrap_err(),
            Error::TruncationTooSmall(1)
        );
    }
}
