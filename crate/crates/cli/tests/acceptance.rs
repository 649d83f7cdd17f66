mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use picard_core::fincat::constructions::{arrow_category, small_corpus, walking_iso, Product};
use picard_core::fincat::pi1::normal_forms_all_orders;
use picard_core::fincat::{
    classify_functor, enumerate_functors, mapping_path_factorization, pi1, validate_category,
    Functor, Letter, Pi1Mode, RawCategory,
};
use picard_core::gammacat::{
    day_convolution, day_symmetry, discrete_power, internal_hom, map_category, representable,
    representable_comparison, same_gamma, yoneda_evaluation, DayMode, TruncatedGammaCategory,
};
use picard_core::gammaop::{all_inert_active_factorizations, compose, factorize, hom_set};
use picard_core::perm::{
    corpus, enumerate_strict_functors, evaluation, groups_isomorphic, is_picard, pi0_pi1, product,
    strict_sm_functor_category, validate_oplax, AbelianGroupTable, OplaxAxiom, OplaxData,
};
use picard_core::segal::{build_l, check_k_picard, nerve_oracle, segal_nerve};
use picard_core::Limits;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn factorization() -> Result<String, String> {
    let mut maps = 0;
    let mut homs = 0;
    for n in 0..=4 {
        for m in 0..=4 {
            homs += 1;
            for f in hom_set(n, m) {
                let fac = factorize(&f);
                ensure(compose(&fac.active, &fac.inert).as_ref() == Ok(&f), || {
                    format!("{f} does not recompose")
                })?;
                ensure(fac.inert.is_inert() && fac.active.is_active(), || {
                    format!("{f}: wrong factor types")
                })?;
                let all = all_inert_active_factorizations(&f);
                ensure(all == vec![(fac.inert.clone(), fac.active.clone())], || {
                    format!("{f}: {} factorizations", all.len())
                })?;
                maps += 1;
            }
        }
    }
    Ok(format!("{maps} maps over {homs} hom-sets"))
}

fn parallel_pair() -> RawCategory {
    let s = |x: &str| x.to_string();
    RawCategory {
        objects: 2,
        arrows: vec![
            (s("id0"), 0, 0),
            (s("id1"), 1, 1),
            (s("a"), 0, 1),
            (s("b"), 0, 1),
        ],
        identities: vec![s("id0"), s("id1")],
        compose: vec![
            (s("id0"), s("id0"), s("id0")),
            (s("id1"), s("id1"), s("id1")),
            (s("id1"), s("a"), s("a")),
            (s("id1"), s("b"), s("b")),
            (s("a"), s("id0"), s("a")),
            (s("b"), s("id0"), s("b")),
        ],
    }
}

fn fundamental_groupoids() -> Result<String, String> {
    let i = Arc::new(arrow_category());
    let p = pi1(&i, Pi1Mode::Words, 4, 100_000);
    let g = p.category().ok_or("Π₁(I) did not close")?.clone();
    ensure(p.authoritative && g.arrow_count() == 4, || {
        format!("Π₁(I) has {} arrows", g.arrow_count())
    })?;
    let j = Arc::new(walking_iso());
    let to_j = Functor::new(
        g.clone(),
        j,
        vec![0, 1],
        g.arrows().map(|f| g.dom(f) * 2 + g.cod(f)).collect(),
    )
    .map_err(|v| format!("comparison with J is not a functor: {v:?}"))?;
    ensure(to_j.is_isomorphism(), || {
        "Π₁(I) is not isomorphic to J".into()
    })?;

    let prod = Product::new(&i, &i);
    let square = pi1(&prod.category, Pi1Mode::Localized, 4, 100_000);
    let sq = square.category().ok_or("Π₁(I×I) did not close")?;
    ensure((sq.object_count(), sq.arrow_count()) == (4, 16), || {
        format!(
            "Π₁(I×I) has {} objects, {} arrows",
            sq.object_count(),
            sq.arrow_count()
        )
    })?;
    let side = pi1(&i, Pi1Mode::Localized, 4, 100_000);
    let side_cat = side.category().ok_or("Π₁(I) did not close")?.clone();
    let target = Product::new(&side_cat, &side_cat);
    let l = square.induced(&prod.left, &side).ok_or("left projection")?;
    let r = square
        .induced(&prod.right, &side)
        .ok_or("right projection")?;
    ensure(target.pair(&l, &r).is_isomorphism(), || {
        "product comparison is not an isomorphism".into()
    })?;

    let cat = validate_category(&parallel_pair()).map_err(|v| format!("{v:?}"))?;
    let alphabet = [
        Letter::forward(2),
        Letter::forward(3),
        Letter {
            arrow: 2,
            inverse: true,
        },
        Letter {
            arrow: 3,
            inverse: true,
        },
    ];
    let mut words = 0usize;
    for len in 0..=6u32 {
        for code in 0..4usize.pow(len) {
            let mut c = code;
            let letters: Vec<Letter> = (0..len)
                .map(|_| {
                    let l = alphabet[c % 4];
                    c /= 4;
                    l
                })
                .collect();
            let forms = normal_forms_all_orders(&cat, &letters);
            ensure(forms.len() == 1, || {
                format!("word {letters:?} has {} normal forms", forms.len())
            })?;
            words += 1;
        }
    }
    Ok(format!("Π₁(I) ≅ J, Π₁(I×I) 4/16, {words} words confluent"))
}

fn mapping_paths() -> Result<String, String> {
    let cats: Vec<_> = small_corpus()
        .into_iter()
        .filter(|(_, c)| c.object_count() <= 4)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut done = 0;
    while done < 50 {
        let (a, c) = &cats[rng.random_range(0..cats.len())];
        let (b, d) = &cats[rng.random_range(0..cats.len())];
        let functors = enumerate_functors(c, d, 100_000).map_err(|e| e.to_string())?;
        if functors.is_empty() {
            continue;
        }
        let f = &functors[rng.random_range(0..functors.len())];
        let mp = mapping_path_factorization(f);
        let composite = mp.project.after(&mp.include);
        ensure(
            composite.object_map() == f.object_map() && composite.arrow_map() == f.arrow_map(),
            || format!("{a} → {b}: P∘i differs from F"),
        )?;
        ensure(classify_functor(&mp.include).equivalence, || {
            format!("{a} → {b}: i is not an equivalence")
        })?;
        ensure(classify_functor(&mp.project).isofibration, || {
            format!("{a} → {b}: P is not an isofibration")
        })?;
        done += 1;
    }
    Ok(format!("{done} functors"))
}

fn picard_agreement() -> Result<String, String> {
    let cases = [
        ("discrete Z/2", corpus::discrete_cyclic(2), true),
        ("discrete Z/3", corpus::discrete_cyclic(3), true),
        ("discrete Z/2×Z/2", corpus::discrete_klein(), true),
        ("one-object Z/3", corpus::one_object_cyclic(3), true),
        ("({0,1}, max)", corpus::max_monoid(), false),
        ("Z/2 × BZ/3", corpus::z2_times_bz3(), true),
        (
            "Z/2 × Z/2",
            product(&corpus::discrete_cyclic(2), &corpus::discrete_cyclic(2)),
            true,
        ),
    ];
    for (name, g, expected) in &cases {
        let r = is_picard(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.shear1 == r.shear2 && r.shear2 == r.inverses, || {
            format!("{name}: {r:?}")
        })?;
        ensure(r.inverses == *expected, || {
            format!("{name}: expected {expected}")
        })?;
    }
    Ok(format!("{} structures", cases.len()))
}

fn evaluation_equivalence() -> Result<String, String> {
    let limits = Limits::default();
    let mut count = 0;
    for (name, g) in corpus::groupoids() {
        let mut verdicts = Vec::new();
        for bound in [3, 4] {
            let l1 = build_l(1, bound, &limits).map_err(|e| e.to_string())?;
            let one = l1.subset_object(&[&[1]]).ok_or("no object {1}")?;
            let hom = strict_sm_functor_category(l1.structure(), &g, &limits)
                .map_err(|e| e.to_string())?;
            verdicts.push(classify_functor(&evaluation(&hom, g.base(), one)).equivalence);
        }
        ensure(verdicts == [true, true], || {
            format!("{name}: verdicts {verdicts:?}")
        })?;
        count += 1;
    }
    Ok(format!("{count} groupoids at bounds 3 and 4"))
}

fn nerve_locality() -> Result<String, String> {
    let limits = Limits::default();
    let mut count = 0;
    for (name, c) in corpus::groupoids() {
        let r = check_k_picard(&c, 2, &limits).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.agree, || {
            format!(
                "{name}: cc-Picard {} vs Picard {}",
                r.locality.cc_picard,
                r.picard.all()
            )
        })?;
        if !r.picard.all() {
            ensure(r.locality.failed_conditions == [3], || {
                format!("{name}: failed {:?}", r.locality.failed_conditions)
            })?;
        }
        count += 1;
    }
    Ok(format!("{count} structures including the max monoid"))
}

fn nerve_model() -> Result<String, String> {
    let limits = Limits::default();
    for (name, c) in [
        ("terminal", corpus::terminal_structure()),
        ("discrete Z/2", corpus::discrete_cyclic(2)),
        ("one-object Z/2", corpus::one_object_cyclic(2)),
    ] {
        for n in 0..=2 {
            let r = nerve_oracle(&c, n, 3, &limits).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.agree && r.model_profile == r.functor_profile, || {
                format!("{name} at {n}: {r:?}")
            })?;
        }
    }
    Ok("3 structures, degrees 0..=2".into())
}

fn discrete_gammas() -> Vec<(String, TruncatedGammaCategory)> {
    let mut out: Vec<(String, TruncatedGammaCategory)> = (0..=2)
        .map(|n| (format!("Γ{n}"), representable(n, 2).unwrap()))
        .collect();
    out.push(("A^n, |A| = 2".into(), discrete_power(2, 2)));
    for (name, c) in corpus::all() {
        let k = segal_nerve(&c, 2, &Limits::default()).unwrap().gamma;
        if k.is_discrete() {
            out.push((format!("K({name})"), k));
        }
    }
    out
}

fn day_laws() -> Result<String, String> {
    for (k, l) in [(1, 1), (1, 2)] {
        let (gkl, day, f) =
            representable_comparison(k, l, 2, 1_000_000).map_err(|e| e.to_string())?;
        let conv = day.gamma.as_ref().ok_or("convolution not confirmed")?;
        ensure(
            f.naturality_failure(&gkl, conv).is_none() && f.is_isomorphism(),
            || format!("Γ{k}∗Γ{l} is not Γ{}", k * l),
        )?;
    }
    let xs = discrete_gammas();
    let mut pairs = 0;
    for (a, x) in &xs {
        for (b, y) in &xs {
            let xy = day_convolution(x, y, DayMode::DiscreteExact, 1_000_000)
                .map_err(|e| e.to_string())?;
            let yx = day_convolution(y, x, DayMode::DiscreteExact, 1_000_000)
                .map_err(|e| e.to_string())?;
            let s = day_symmetry(&xy, &yx, 2)
                .ok_or_else(|| format!("{a}∗{b}: twist not well defined"))?;
            ensure(s.is_isomorphism(), || {
                format!("{a}∗{b}: twist is not an isomorphism")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("2 representable laws, {pairs} symmetric pairs"))
}

fn internal_homs() -> Result<String, String> {
    let limits = Limits::default();
    let mut xs = discrete_gammas();
    xs.push((
        "constant J".into(),
        picard_core::gammacat::constant(Arc::new(walking_iso()), 2),
    ));
    for (name, c) in corpus::groupoids() {
        let k = segal_nerve(&c, 2, &limits)
            .map_err(|e| e.to_string())?
            .gamma;
        if !k.is_discrete() {
            xs.push((format!("K({name})"), k));
        }
    }
    let g1 = representable(1, 2).map_err(|e| e.to_string())?;
    for (name, x) in &xs {
        let hom = internal_hom(1, x, 2).map_err(|e| e.to_string())?;
        ensure(same_gamma(&hom, x), || {
            format!("{name}: internal hom out of Γ1 differs")
        })?;
        let maps = map_category(&g1, x, &limits).map_err(|e| format!("{name}: {e}"))?;
        let ev = yoneda_evaluation(&maps, x, 1).map_err(|e| e.to_string())?;
        ensure(ev.is_isomorphism(), || {
            format!("{name}: Map(Γ1, X) → X(1⁺) is not an isomorphism")
        })?;
    }
    Ok(format!("{} Γ-categories", xs.len()))
}

fn stable_invariants() -> Result<String, String> {
    let (z2, z3, one) = (
        AbelianGroupTable::cyclic(2),
        AbelianGroupTable::cyclic(3),
        AbelianGroupTable::trivial(),
    );
    for (name, g, a, b) in [
        ("discrete Z/2", corpus::discrete_cyclic(2), &z2, &one),
        ("one-object Z/3", corpus::one_object_cyclic(3), &one, &z3),
        ("Z/2 × BZ/3", corpus::z2_times_bz3(), &z2, &z3),
    ] {
        let (p0, p1) = pi0_pi1(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(
            groups_isomorphic(&p0, a).is_some() && groups_isomorphic(&p1, b).is_some(),
            || format!("{name}: wrong invariants"),
        )?;
    }
    for (name, g) in corpus::all() {
        let c = g.base();
        let autos = c.hom(g.unit(), g.unit());
        let commute = autos
            .iter()
            .all(|&a| autos.iter().all(|&b| c.compose(a, b) == c.compose(b, a)));
        ensure(commute, || format!("{name}: π₁ is not commutative"))?;
    }
    let picard: Vec<_> = corpus::groupoids()
        .into_iter()
        .filter_map(|(n, g)| pi0_pi1(&g).ok().map(|inv| (n, g, inv)))
        .collect();
    let mut separated = 0;
    for (a, g, (g0, g1)) in &picard {
        for (b, h, (h0, h1)) in &picard {
            if groups_isomorphic(g0, h0).is_some() && groups_isomorphic(g1, h1).is_some() {
                continue;
            }
            let functors = enumerate_strict_functors(g, h, 200_000).map_err(|e| e.to_string())?;
            ensure(
                !functors.iter().any(|f| classify_functor(f).equivalence),
                || format!("{a} → {b}: an equivalence exists despite different invariants"),
            )?;
            separated += 1;
        }
    }
    Ok(format!("3 named inputs, {separated} separated pairs"))
}

fn oplax() -> Result<String, String> {
    let mut strict = 0;
    for (a, p) in corpus::all() {
        for (b, q) in corpus::all() {
            for f in enumerate_strict_functors(&p, &q, 200_000).map_err(|e| e.to_string())? {
                let d = OplaxData::strict(f, &q);
                let failures = validate_oplax(&p, &q, &d);
                ensure(failures.is_empty(), || format!("{a} → {b}: {failures:?}"))?;
                strict += 1;
            }
        }
    }
    let p = corpus::terminal_structure();
    let q = corpus::sigma_z2();
    let functor = Functor::new(p.base().clone(), q.base().clone(), vec![0], vec![0])
        .map_err(|e| format!("{e:?}"))?;
    let d = OplaxData {
        functor,
        lambda: vec![1],
        epsilon: 0,
    };
    let failures = validate_oplax(&p, &q, &d);
    ensure(
        failures.len() == 1 && failures[0].axiom == OplaxAxiom::Ol1 && failures[0].tuple == [0, 0],
        || format!("unexpected verdict {failures:?}"),
    )?;
    Ok(format!(
        "{strict} strict functors accepted, (λ = -1, ε = +1) rejected at OL.1 on (0, 0)"
    ))
}

fn determinism() -> Result<String, String> {
    let mut runs = 0;
    for (name, args, _) in common::FIXTURE_RUNS {
        let (_, first, _) = common::picard(args);
        for _ in 0..2 {
            let (_, again, _) = common::picard(args);
            ensure(again == first, || format!("{name}: repeated run differs"))?;
        }
        let mut one = args.to_vec();
        one.extend(["--threads", "1"]);
        let mut eight = args.to_vec();
        eight.extend(["--threads", "8"]);
        let (_, a, _) = common::picard(&one);
        let (_, b, _) = common::picard(&eight);
        ensure(a == b && a == first, || {
            format!("{name}: output depends on threads")
        })?;
        runs += 5;
    }
    Ok(format!(
        "{runs} runs over {} fixtures",
        common::FIXTURE_RUNS.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [(&str, Check, u64); 12] = [
        ("inert-active factorization", factorization, 5),
        ("fundamental groupoid suite", fundamental_groupoids, 10),
        ("mapping path factorization", mapping_paths, 10),
        ("Picard characterization agreement", picard_agreement, 5),
        ("evaluation equivalence", evaluation_equivalence, 30),
        ("Segal nerve locality", nerve_locality, 60),
        ("nerve model oracle", nerve_model, 60),
        ("Day convolution laws", day_laws, 10),
        ("internal hom identities", internal_homs, 10),
        ("stable invariants", stable_invariants, 30),
        ("oplax validator", oplax, 1),
        ("CLI determinism", determinism, 30),
    ];
    let mut failed = Vec::new();
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let verdict = match verdict {
            Ok(detail) if elapsed > Duration::from_secs(*budget) => {
                Err(format!("{detail}; over budget"))
            }
            other => other,
        };
        let (tag, detail) = match &verdict {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => ("FAIL", e.clone()),
        };
        let _ = writeln!(
            std::io::stderr(),
            "criterion {:>2} {tag}: {name} ({:.2} s of {budget} s) {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
        if verdict.is_err() {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
