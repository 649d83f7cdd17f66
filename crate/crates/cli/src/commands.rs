use std::path::Path;
use std::sync::Arc;

use picard_core::fincat::constructions::walking_iso;
use picard_core::fincat::pi1::render_word;
use picard_core::fincat::{
    classify_functor, is_groupoid, mapping_path_factorization, pi1, FunctorClassification,
    HomFailureKind, Pi1Mode,
};
use picard_core::gammacat::{
    constant, day_convolution, discrete_power, representable, segal_local_checks, validate_gamma,
    DayMode, LocalityReport,
};
use picard_core::gammaop::{all_inert_active_factorizations, compose, factorize, BasedMap};
use picard_core::perm::{corpus, is_picard, pi0_pi1, validate_oplax, AbelianGroupTable};
use picard_core::segal::{nerve_oracle, segal_nerve};
use picard_core::{Error, Limits};
use serde_json::{json, Value};

use crate::formats::{
    canonical, load, CategoryFile, FunctorFile, GammaFile, OplaxFile, PermutativeFile,
};
use crate::report::{Failure, InputDigest, Outcome};

/// Inputs read so far, in order.
#[derive(Default)]
pub struct Inputs(pub Vec<InputDigest>);

impl Inputs {
    pub fn read<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> Result<T, Failure> {
        let loaded = load::<T>(path)?;
        self.0.push(InputDigest {
            path: path.display().to_string(),
            sha256: loaded.sha256,
        });
        Ok(loaded.value)
    }
}

pub type CmdResult = Result<Outcome, Failure>;

/// Property failures that stem from exhausting a bound rather than from bad input.
fn bounded(e: Error) -> Result<Outcome, Failure> {
    match e {
        Error::SizeLimit { .. } | Error::BoundExceeded(_) => {
            let mut out = Outcome::new(Value::Null);
            out.failures.push(e.to_string());
            Ok(out)
        }
        other => Err(other.into()),
    }
}

macro_rules! attempt {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return bounded(e),
        }
    };
}

pub fn validate(inputs: &mut Inputs, path: &Path, canonical_out: &mut Option<String>) -> CmdResult {
    let file: CategoryFile = inputs.read(path)?;
    match picard_core::fincat::validate_category(&file.to_raw()) {
        Ok(c) => {
            *canonical_out = Some(canonical(&CategoryFile::from_category(&c)));
            Ok(Outcome::new(json!({
                "objects": c.object_count(),
                "arrows": c.arrow_count(),
                "composable_pairs": c.composable_pairs(),
                "violations": Vec::<String>::new(),
            })))
        }
        Err(v) => {
            let violations: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            let mut out = Outcome::new(json!({ "violations": violations }));
            out.failures
                .push(format!("category laws fail: {}", violations[0]));
            Ok(out)
        }
    }
}

pub fn groupoid(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: CategoryFile = inputs.read(path)?;
    let c = file.build("")?;
    let missing = c.arrows().find(|&f| !c.is_iso(f)).map(|f| c.arrow_name(f));
    let mut out = Outcome::new(json!({
        "groupoid": is_groupoid(&c),
        "non_invertible": missing,
    }));
    out.require(
        missing.is_none(),
        format!(
            "arrow {} has no inverse",
            missing.clone().unwrap_or_default()
        ),
    );
    Ok(out)
}

fn classification_json(c: &FunctorClassification, f: &picard_core::fincat::Functor) -> Value {
    let (s, t) = (f.source(), f.target());
    let hom_failure = c.hom_failure.as_ref().map(|h| match h.kind {
        HomFailureKind::NotInjective(u, v) => json!({
            "source": h.source, "target": h.target, "kind": "not_injective",
            "arrows": [s.arrow_name(u), s.arrow_name(v)],
        }),
        HomFailureKind::NotSurjective(y) => json!({
            "source": h.source, "target": h.target, "kind": "not_surjective",
            "arrows": [t.arrow_name(y)],
        }),
    });
    let iso_witnesses: Vec<Value> = c
        .iso_witnesses
        .iter()
        .map(|w| match w {
            Some((a, y)) => json!({ "object": a, "iso": t.arrow_name(*y) }),
            None => Value::Null,
        })
        .collect();
    json!({
        "monic_on_objects": c.monic_on_objects,
        "fully_faithful": c.fully_faithful,
        "essentially_surjective": c.essentially_surjective,
        "equivalence": c.equivalence,
        "isofibration": c.isofibration,
        "groupoidal_equivalence": c.groupoidal_equivalence,
        "groupoidal_certified": c.groupoidal_certified,
        "object_collision": c.object_collision,
        "hom_failure": hom_failure,
        "iso_witnesses": iso_witnesses,
        "lift_failure": c.lift_failure.map(|(a, y)| json!({ "object": a, "iso": t.arrow_name(y) })),
    })
}

pub const PROPERTIES: [&str; 6] = [
    "monic_on_objects",
    "fully_faithful",
    "essentially_surjective",
    "equivalence",
    "isofibration",
    "groupoidal_equivalence",
];

pub fn classify(inputs: &mut Inputs, path: &Path, require: &[String]) -> CmdResult {
    let file: FunctorFile = inputs.read(path)?;
    let f = file.build()?;
    let c = classify_functor(&f);
    let report = classification_json(&c, &f);
    let mut out = Outcome::new(&report);
    for p in require {
        out.require(
            report[p.as_str()] == Value::Bool(true),
            format!("{p} fails"),
        );
    }
    Ok(out)
}

pub fn fundamental_groupoid(
    inputs: &mut Inputs,
    path: &Path,
    mode: Pi1Mode,
    word_bound: usize,
    limits: &Limits,
) -> CmdResult {
    let file: CategoryFile = inputs.read(path)?;
    let c = file.build("")?;
    let p = pi1(&c, mode, word_bound, limits.coset_limit);
    let words: Vec<Value> = p
        .words()
        .iter()
        .map(|w| json!({ "start": w.start, "word": render_word(&c, w) }))
        .collect();
    let (objects, arrows) = p
        .category()
        .map(|g| (Some(g.object_count()), Some(g.arrow_count())))
        .unwrap_or((None, None));
    let mut out = Outcome::new(json!({
        "mode": match mode { Pi1Mode::Words => "words", Pi1Mode::Localized => "localized" },
        "word_bound": word_bound,
        "authoritative": p.authoritative,
        "bound_exceeded": p.bound_exceeded,
        "components": p.component_count(),
        "objects": objects,
        "arrows": arrows,
        "words": words,
    }));
    out.require(
        p.authoritative,
        "the presentation does not close within the bounds",
    );
    Ok(out)
}

pub fn path_object(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: FunctorFile = inputs.read(path)?;
    let f = file.build()?;
    let mp = mapping_path_factorization(&f);
    let composite = mp.project.after(&mp.include);
    let exact = composite.object_map() == f.object_map() && composite.arrow_map() == f.arrow_map();
    let include = classify_functor(&mp.include).equivalence;
    let project = classify_functor(&mp.project).isofibration;
    let y = f.target();
    let objects: Vec<Value> = mp
        .objects
        .iter()
        .map(|&(iso, a, b)| json!({ "iso": y.arrow_name(iso), "source_object": a, "target_object": b }))
        .collect();
    let mut out = Outcome::new(json!({
        "objects": objects,
        "arrows": mp.category.arrow_count(),
        "factorization_exact": exact,
        "include_equivalence": include,
        "project_isofibration": project,
    }));
    out.require(
        exact,
        "projection after inclusion differs from the input functor",
    );
    out.require(include, "the inclusion is not an equivalence");
    out.require(project, "the projection is not an isofibration");
    Ok(out)
}

pub fn perm_validate(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: PermutativeFile = inputs.read(path)?;
    match file.build("")? {
        Ok(p) => Ok(Outcome::new(json!({
            "objects": p.base().object_count(),
            "arrows": p.base().arrow_count(),
            "unit": p.unit(),
            "groupoid": p.is_groupoid(),
            "violations": Vec::<String>::new(),
        }))),
        Err(v) => {
            let mut out = Outcome::new(json!({ "violations": v }));
            out.failures
                .push(format!("permutative axioms fail: {}", v[0]));
            Ok(out)
        }
    }
}

pub fn perm_picard(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: PermutativeFile = inputs.read(path)?;
    let p = file.build_valid("")?;
    let r = attempt!(is_picard(&p));
    let mut out = Outcome::new(&r);
    out.require(r.shear1, "shear (⊗, p1) is not an equivalence");
    out.require(r.shear2, "shear (⊗, p2) is not an equivalence");
    out.require(
        r.inverses,
        format!(
            "object {} has no tensor inverse",
            r.missing_inverse.unwrap_or_default()
        ),
    );
    Ok(out)
}

fn group_json(g: &AbelianGroupTable) -> Value {
    json!({ "order": g.order, "identity": g.identity, "table": g.table })
}

pub fn perm_pi(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: PermutativeFile = inputs.read(path)?;
    let p = file.build_valid("")?;
    match pi0_pi1(&p) {
        Ok((p0, p1)) => Ok(Outcome::new(
            json!({ "pi0": group_json(&p0), "pi1": group_json(&p1) }),
        )),
        Err(Error::NotPicard) => {
            let mut out = Outcome::new(Value::Null);
            out.failures.push("not a Picard groupoid".into());
            Ok(out)
        }
        Err(e) => bounded(e),
    }
}

pub fn perm_oplax(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: OplaxFile = inputs.read(path)?;
    let (p, q, d) = file.build()?;
    let failures = validate_oplax(&p, &q, &d);
    let name = |a: Option<usize>| a.map(|a| q.base().arrow_name(a));
    let listed: Vec<Value> = failures
        .iter()
        .map(|f| {
            json!({
                "axiom": f.axiom.to_string(),
                "tuple": f.tuple,
                "left": name(f.left),
                "right": name(f.right),
            })
        })
        .collect();
    let mut out = Outcome::new(json!({ "failures": listed }));
    for f in &failures {
        out.failures
            .push(format!("{} fails at {:?}", f.axiom, f.tuple));
    }
    Ok(out)
}

pub fn gamma_validate(inputs: &mut Inputs, path: &Path) -> CmdResult {
    let file: GammaFile = inputs.read(path)?;
    let x = file.build()?;
    let violations: Vec<String> = validate_gamma(&x).iter().map(|v| v.to_string()).collect();
    let levels: Vec<Value> = x
        .levels()
        .iter()
        .map(|c| json!({ "objects": c.object_count(), "arrows": c.arrow_count() }))
        .collect();
    let mut out = Outcome::new(json!({ "levels": levels, "violations": violations }));
    out.failures.extend(violations);
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum LocalCheck {
    CcPicard,
    CcMonoidal,
    None,
}

fn locality_failures(r: &LocalityReport, check: LocalCheck, out: &mut Outcome) {
    let wanted: &[u8] = match check {
        LocalCheck::CcPicard => &[1, 2, 3],
        LocalCheck::CcMonoidal => &[1, 2],
        LocalCheck::None => &[],
    };
    for &k in wanted.iter().filter(|k| r.failed_conditions.contains(k)) {
        let witness = match k {
            1 => r
                .groupoid_levels
                .iter()
                .position(|g| !g)
                .map(|n| format!("level {n} is not a groupoid")),
            2 => r
                .segal_maps
                .iter()
                .find(|m| !m.equivalence)
                .map(|m| format!("{}: {}", m.name, m.witness.clone().unwrap_or_default())),
            _ => r
                .p_infinity_maps
                .iter()
                .find(|m| !m.equivalence)
                .map(|m| format!("{}: {}", m.name, m.witness.clone().unwrap_or_default())),
        };
        out.failures.push(format!(
            "condition ({k}) fails: {}",
            witness.unwrap_or_default()
        ));
    }
}

pub fn gamma_local(
    inputs: &mut Inputs,
    path: &Path,
    check: LocalCheck,
    limits: &Limits,
) -> CmdResult {
    let file: GammaFile = inputs.read(path)?;
    let x = file.build()?;
    let violations = validate_gamma(&x);
    if let Some(v) = violations.first() {
        return Err(Failure::input("/action", format!("not a Γ-category: {v}")));
    }
    let r = attempt!(segal_local_checks(&x, limits));
    let mut out = Outcome::new(&r);
    locality_failures(&r, check, &mut out);
    Ok(out)
}

pub fn nerve(
    inputs: &mut Inputs,
    path: &Path,
    truncation: usize,
    check: LocalCheck,
    oracle: bool,
    length_bound: usize,
    limits: &Limits,
) -> CmdResult {
    let file: PermutativeFile = inputs.read(path)?;
    let c = file.build_valid("")?;
    let k = attempt!(segal_nerve(&c, truncation, limits));
    let levels: Vec<Value> = k
        .levels
        .iter()
        .map(|l| json!({ "degree": l.n, "objects": l.category.object_count(), "arrows": l.category.arrow_count() }))
        .collect();
    let locality = if truncation >= 2 {
        Some(attempt!(segal_local_checks(&k.gamma, limits)))
    } else {
        None
    };
    let oracles = if oracle {
        let mut v = Vec::new();
        for n in 0..=truncation {
            v.push(attempt!(nerve_oracle(&c, n, length_bound, limits)));
        }
        Some(v)
    } else {
        None
    };
    let mut out = Outcome::new(json!({
        "levels": levels,
        "locality": locality,
        "oracle": oracles,
    }));
    match &locality {
        Some(r) => locality_failures(r, check, &mut out),
        None if check != LocalCheck::None => out.failures.push(format!(
            "locality needs truncation at least 2, got {truncation}"
        )),
        None => {}
    }
    for o in oracles.iter().flatten() {
        out.require(
            o.agree,
            format!("model and strict functors disagree at degree {}", o.n),
        );
    }
    Ok(out)
}

pub fn day(
    inputs: &mut Inputs,
    left: &Path,
    right: &Path,
    mode: DayMode,
    work_bound: usize,
    emit: &mut Option<String>,
) -> CmdResult {
    let x: GammaFile = inputs.read(left)?;
    let y: GammaFile = inputs.read(right)?;
    let (x, y) = (x.build()?, y.build()?);
    for (side, g) in [("left", &x), ("right", &y)] {
        if let Some(v) = validate_gamma(g).first() {
            return Err(Failure::input(
                "/action",
                format!("{side} input is not a Γ-category: {v}"),
            ));
        }
    }
    let d = attempt!(day_convolution(&x, &y, mode, work_bound));
    let levels: Vec<Value> = match &d.gamma {
        Some(g) => g
            .levels()
            .iter()
            .enumerate()
            .map(|(n, c)| json!({ "degree": n, "objects": c.object_count(), "arrows": c.arrow_count() }))
            .collect(),
        None => Vec::new(),
    };
    if let Some(g) = &d.gamma {
        *emit = Some(canonical(&GammaFile::from_gamma(g)));
    }
    let mut out = Outcome::new(json!({
        "confirmed": d.confirmed(),
        "levels": levels,
        "presentations": d.presentations,
    }));
    out.require(
        d.confirmed(),
        "the presented colimit is not confirmed as a category",
    );
    Ok(out)
}

pub fn factorize_map(text: &str) -> CmdResult {
    let f: BasedMap = text
        .parse()
        .map_err(|e: Error| Failure::input("", e.to_string()))?;
    let fac = factorize(&f);
    let recomposes = compose(&fac.active, &fac.inert).as_ref() == Ok(&f);
    let unique = all_inert_active_factorizations(&f).len() == 1;
    let mut out = Outcome::new(json!({
        "map": f.to_string(),
        "support": fac.support,
        "inert": fac.inert.to_string(),
        "active": fac.active.to_string(),
        "recomposes": recomposes,
        "unique": unique,
    }));
    out.require(recomposes, "active ∘ inert differs from the map");
    out.require(unique, "the factorization is not unique");
    Ok(out)
}

pub fn corpus_list() -> Outcome {
    let perm: Vec<&str> = corpus::all().into_iter().map(|(n, _)| n).collect();
    let gamma: Vec<String> = [
        "representable0",
        "representable1",
        "representable2",
        "power2",
        "constant_iso",
    ]
    .into_iter()
    .map(String::from)
    .chain(perm.iter().map(|n| format!("nerve_{n}")))
    .collect();
    Outcome::new(json!({ "perm": perm, "gamma": gamma }))
}

fn unknown(name: &str) -> Failure {
    Failure::input("", format!("no built-in example named `{name}`"))
}

pub fn corpus_perm(name: &str, text: &mut Option<String>) -> CmdResult {
    let (_, p) = corpus::all()
        .into_iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| unknown(name))?;
    let file = PermutativeFile::from_structure(&p)
        .ok_or_else(|| Failure::input("", "tensor is partial"))?;
    *text = Some(canonical(&file));
    Ok(Outcome::default())
}

pub fn corpus_gamma(name: &str, truncation: usize, text: &mut Option<String>) -> CmdResult {
    let x = match name {
        "representable0" => representable(0, truncation)?,
        "representable1" => representable(1, truncation)?,
        "representable2" => representable(2, truncation)?,
        "power2" => discrete_power(2, truncation),
        "constant_iso" => constant(Arc::new(walking_iso()), truncation),
        _ => {
            let perm = name.strip_prefix("nerve_").ok_or_else(|| unknown(name))?;
            let (_, p) = corpus::all()
                .into_iter()
                .find(|(n, _)| *n == perm)
                .ok_or_else(|| unknown(name))?;
            segal_nerve(&p, truncation, &Limits::default())?.gamma
        }
    };
    *text = Some(canonical(&GammaFile::from_gamma(&x)));
    Ok(Outcome::default())
}
