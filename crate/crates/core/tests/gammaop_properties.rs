use picard_core::gammaop::{
    all_inert_active_factorizations, compose, factorize, hom_set, smash, BasedMap,
};
use proptest::prelude::*;

#[test]
fn factorization_exists_and_is_unique_up_to_degree_four() {
    let mut checked = 0;
    for n in 0..=4 {
        for m in 0..=4 {
            for f in hom_set(n, m) {
                let fac = factorize(&f);
                assert!(fac.inert.is_inert() && fac.active.is_active());
                assert_eq!(compose(&fac.active, &fac.inert).unwrap(), f);
                let all = all_inert_active_factorizations(&f);
                assert_eq!(all, vec![(fac.inert.clone(), fac.active.clone())], "{f:?}");
                checked += 1;
            }
        }
    }
    assert_eq!(
        checked,
        (0..=4)
            .map(|n| (0..=4u32).map(|m| (m as usize + 1).pow(n)).sum::<usize>())
            .sum::<usize>()
    );
}

fn based_map(max: usize) -> impl Strategy<Value = BasedMap> {
    (0..=max, 0..=max).prop_flat_map(|(n, m)| {
        proptest::collection::vec(0..=m, n)
            .prop_map(move |images| BasedMap::new(n, m, images).unwrap())
    })
}

fn map_into(n: usize, max: usize) -> impl Strategy<Value = BasedMap> {
    (0..=max).prop_flat_map(move |m| {
        proptest::collection::vec(0..=m, n)
            .prop_map(move |images| BasedMap::new(n, m, images).unwrap())
    })
}

proptest! {
    #[test]
    fn composition_is_associative(
        (f, g, h) in based_map(4).prop_flat_map(|f| {
            let t = f.target;
            (Just(f), map_into(t, 4))
        }).prop_flat_map(|(f, g)| {
            let t = g.target;
            (Just(f), Just(g), map_into(t, 4))
        })
    ) {
        let left = compose(&h, &compose(&g, &f).unwrap()).unwrap();
        let right = compose(&compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn smash_is_associative(f in based_map(2), g in based_map(2), h in based_map(2)) {
        prop_assert_eq!(smash(&smash(&f, &g), &h), smash(&f, &smash(&g, &h)));
    }

    #[test]
    fn smash_is_functorial(
        (f, f2) in based_map(3).prop_flat_map(|f| { let t = f.target; (Just(f), map_into(t, 3)) }),
        (g, g2) in based_map(3).prop_flat_map(|g| { let t = g.target; (Just(g), map_into(t, 3)) }),
    ) {
        let together = smash(&compose(&f2, &f).unwrap(), &compose(&g2, &g).unwrap());
        let apart = compose(&smash(&f2, &g2), &smash(&f, &g)).unwrap();
        prop_assert_eq!(together, apart);
    }

    #[test]
    fn support_is_the_preimage_of_the_nonzero_part(f in based_map(5)) {
        let fac = factorize(&f);
        let all: Vec<usize> = (1..=f.target).collect();
        prop_assert_eq!(&fac.support, &f.preimage(&all));
        prop_assert_eq!(fac.inert.target, fac.support.len());
    }
}
