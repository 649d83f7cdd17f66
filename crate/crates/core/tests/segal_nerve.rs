use picard_core::fincat::classify_functor;
use picard_core::gammacat::{
    segal_local_checks, strict_equivalence, validate_gamma, GammaMorphism,
};
use picard_core::perm::{corpus, evaluation, is_picard, strict_sm_functor_category};
use picard_core::segal::{build_l, check_k_picard, nerve_oracle, segal_nerve};
use picard_core::Limits;

#[test]
fn evaluation_out_of_l1_is_an_equivalence_and_stable() {
    let limits = Limits::default();
    for bound in [3, 4] {
        let l1 = build_l(1, bound, &limits).unwrap();
        let one = l1.subset_object(&[&[1]]).unwrap();
        for (name, g) in corpus::groupoids() {
            let hom = strict_sm_functor_category(l1.structure(), &g, &limits).unwrap();
            let ev = evaluation(&hom, g.base(), one);
            assert!(ev.violations().is_empty(), "{name}");
            assert!(classify_functor(&ev).equivalence, "{name} at bound {bound}");
        }
    }
}

#[test]
fn nerve_is_cc_picard_exactly_for_picard_inputs() {
    let limits = Limits::default();
    for (name, c) in corpus::groupoids() {
        let r = check_k_picard(&c, 2, &limits).unwrap();
        assert!(r.agree, "{name}: {r:?}");
        assert!(r.locality.cc_monoidal, "{name}");
        if !r.picard.all() {
            assert_eq!(r.locality.failed_conditions, vec![3], "{name}");
        }
    }
}

#[test]
fn nerves_validate() {
    for (name, c) in corpus::all() {
        let k = segal_nerve(&c, 2, &Limits::default()).unwrap();
        assert!(validate_gamma(&k.gamma).is_empty(), "{name}");
    }
}

#[test]
fn oracle_agrees_up_to_degree_two() {
    let limits = Limits::default();
    for c in [
        corpus::terminal_structure(),
        corpus::discrete_cyclic(2),
        corpus::one_object_cyclic(2),
    ] {
        for n in 0..=2 {
            let r = nerve_oracle(&c, n, 3, &limits).unwrap();
            assert!(r.agree, "{r:?}");
        }
    }
}

#[test]
fn z2_nerve_details() {
    let c = corpus::discrete_cyclic(2);
    let k = segal_nerve(&c, 2, &Limits::default()).unwrap();
    let r = segal_local_checks(&k.gamma, &Limits::default()).unwrap();
    assert!(r.cc_picard);
    assert!(is_picard(&c).unwrap().all());
    assert!(strict_equivalence(&GammaMorphism::identity(&k.gamma)));
}
