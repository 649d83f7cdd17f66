use std::collections::BTreeMap;

use picard_core::fincat::classify_functor;
use picard_core::gammaop::{compose, hom_set};
use picard_core::perm::{
    corpus, enumerate_strict_functors, groups_isomorphic, is_picard, is_strict, pi0_pi1,
    validate_oplax, OplaxData,
};
use picard_core::segal::{build_l, build_lbar, l_action, LGroupoid};
use picard_core::Limits;

#[test]
fn picard_verdicts_are_consistent() {
    for (name, g) in corpus::groupoids() {
        let r = is_picard(&g).unwrap();
        assert!(r.consistent, "{name}: {r:?}");
        assert_eq!(r.shear1, r.shear2, "{name}");
        assert_eq!(r.shear1, r.inverses, "{name}");
    }
}

#[test]
fn unit_automorphisms_commute_on_the_corpus() {
    for (name, g) in corpus::all() {
        let c = g.base();
        let autos = c.hom(g.unit(), g.unit());
        for &a in autos {
            for &b in autos {
                assert_eq!(c.compose(a, b), c.compose(b, a), "{name}");
            }
        }
        if let Ok((p0, p1)) = pi0_pi1(&g) {
            assert!(p0.is_commutative() && p1.is_commutative(), "{name}");
            assert!(
                p0.violations().is_empty() && p1.violations().is_empty(),
                "{name}"
            );
        }
    }
}

#[test]
fn distinct_invariants_rule_out_strict_equivalences() {
    let picard: Vec<_> = corpus::groupoids()
        .into_iter()
        .filter_map(|(name, g)| pi0_pi1(&g).ok().map(|inv| (name, g, inv)))
        .collect();
    let mut separated = 0;
    for (a, g, (g0, g1)) in &picard {
        for (b, h, (h0, h1)) in &picard {
            let same = groups_isomorphic(g0, h0).is_some() && groups_isomorphic(g1, h1).is_some();
            let found = enumerate_strict_functors(g, h, 100_000)
                .unwrap()
                .iter()
                .any(|f| classify_functor(f).equivalence);
            if !same {
                assert!(!found, "{a} → {b}");
                separated += 1;
            }
            if a == b {
                assert!(found, "{a}");
            }
        }
    }
    assert!(separated > 0);
}

#[test]
fn strict_functors_satisfy_the_oplax_axioms() {
    for (a, p) in corpus::all() {
        for (b, q) in corpus::all() {
            for f in enumerate_strict_functors(&p, &q, 100_000).unwrap() {
                assert!(is_strict(&p, &q, &f), "{a} → {b}");
                let d = OplaxData::strict(f, &q);
                assert!(validate_oplax(&p, &q, &d).is_empty(), "{a} → {b}");
            }
        }
    }
}

fn check_contravariant(ls: &[LGroupoid], max: usize) {
    let mut actions = BTreeMap::new();
    for n in 0..=max {
        for m in 0..=max {
            for f in hom_set(n, m) {
                let lf = l_action(&ls[m], &ls[n], &f).unwrap();
                assert!(lf.violations().is_empty(), "{f}");
                assert!(is_strict(ls[m].structure(), ls[n].structure(), &lf), "{f}");
                actions.insert(f, lf);
            }
        }
    }
    for (f, lf) in &actions {
        for g in (0..=max).flat_map(|k| hom_set(f.target, k)) {
            let gf = compose(&g, f).unwrap();
            assert_eq!(&lf.after(&actions[&g]), &actions[&gf], "{g} ∘ {f}");
        }
    }
}

#[test]
fn subset_groupoids_are_contravariant_up_to_degree_three() {
    let limits = Limits::default();
    let ls: Vec<LGroupoid> = (0..=3).map(|n| build_l(n, 2, &limits).unwrap()).collect();
    check_contravariant(&ls, 3);
}

#[test]
fn map_groupoids_are_contravariant_up_to_degree_two() {
    let limits = Limits::default();
    let ls: Vec<LGroupoid> = (0..=2)
        .map(|n| build_lbar(n, 2, 1, &limits).unwrap())
        .collect();
    check_contravariant(&ls, 2);
}
