//! Permutative categories: strictly associative and unital symmetric
//! monoidal structures on finite categories.
//!
//! Truncated structures (free permutative categories, the groupoids `L(n)`)
//! have a partial tensor product: `tensor_obj` and `tensor_arr` return `None`
//! when the result would fall outside the truncation. The axiom checks only
//! look at instances where every term is defined.

pub mod corpus;
mod free;
mod monoidal_pi1;
mod oplax;
mod picard;
mod strict;

use std::fmt;
use std::sync::Arc;

use crate::fincat::{validate_category, ArrowId, FiniteCategory, LawViolation, ObjId, RawCategory};

pub use free::free_permutative;
pub use monoidal_pi1::pi1_monoidal;
pub use oplax::{validate_oplax, OplaxAxiom, OplaxData, OplaxFailure};
pub use picard::{
    groups_isomorphic, is_picard, pi0_pi1, AbelianGroupTable, GroupViolation, PicardReport,
};
pub use strict::{
    enumerate_monoidal_transformations, enumerate_strict_functors, evaluation, is_strict,
    strict_sm_functor_category, StrictFunctorCategory,
};

const NONE: u32 = u32::MAX;

#[derive(Clone)]
pub struct PermutativeStructure {
    base: Arc<FiniteCategory>,
    unit: ObjId,
    tensor_obj: Vec<u32>,
    tensor_arr: Vec<u32>,
    symmetry: Vec<u32>,
    /// Objects of length one in truncated free constructions.
    generators: Option<Vec<ObjId>>,
}

impl fmt::Debug for PermutativeStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermutativeStructure")
            .field("base", &self.base)
            .field("unit", &self.unit)
            .finish()
    }
}

fn opt(x: u32) -> Option<usize> {
    (x != NONE).then_some(x as usize)
}

fn pack(x: Option<usize>) -> u32 {
    x.map_or(NONE, |v| v as u32)
}

impl PermutativeStructure {
    /// Builds the tables from closures; the axioms are not checked here.
    pub fn from_fn(
        base: Arc<FiniteCategory>,
        unit: ObjId,
        tensor_obj: impl Fn(ObjId, ObjId) -> Option<ObjId>,
        tensor_arr: impl Fn(ArrowId, ArrowId) -> Option<ArrowId>,
        symmetry: impl Fn(ObjId, ObjId) -> Option<ArrowId>,
    ) -> PermutativeStructure {
        let (n, m) = (base.object_count(), base.arrow_count());
        let mut to = Vec::with_capacity(n * n);
        let mut sy = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                to.push(pack(tensor_obj(a, b)));
                sy.push(pack(symmetry(a, b)));
            }
        }
        let mut ta = Vec::with_capacity(m * m);
        for f in 0..m {
            for g in 0..m {
                ta.push(pack(tensor_arr(f, g)));
            }
        }
        PermutativeStructure {
            base,
            unit,
            tensor_obj: to,
            tensor_arr: ta,
            symmetry: sy,
            generators: None,
        }
    }

    pub fn with_generators(mut self, generators: Vec<ObjId>) -> Self {
        self.generators = Some(generators);
        self
    }

    pub fn base(&self) -> &Arc<FiniteCategory> {
        &self.base
    }

    pub fn unit(&self) -> ObjId {
        self.unit
    }

    pub fn generators(&self) -> Option<&[ObjId]> {
        self.generators.as_deref()
    }

    pub fn tensor_obj(&self, a: ObjId, b: ObjId) -> Option<ObjId> {
        opt(self.tensor_obj[a * self.base.object_count() + b])
    }

    pub fn tensor_arr(&self, f: ArrowId, g: ArrowId) -> Option<ArrowId> {
        opt(self.tensor_arr[f * self.base.arrow_count() + g])
    }

    pub fn symmetry(&self, a: ObjId, b: ObjId) -> Option<ArrowId> {
        opt(self.symmetry[a * self.base.object_count() + b])
    }

    /// Whether the tensor product is defined on every pair.
    pub fn is_total(&self) -> bool {
        !self.tensor_obj.contains(&NONE)
            && !self.tensor_arr.contains(&NONE)
            && !self.symmetry.contains(&NONE)
    }

    pub fn is_groupoid(&self) -> bool {
        self.base.arrows().all(|f| self.base.is_iso(f))
    }

    /// Every axiom violation, at most `limit` per axiom.
    pub fn violations(&self) -> Vec<PermViolation> {
        check_axioms(self, 8)
    }

    pub fn to_raw(&self) -> Option<RawPermutative> {
        if !self.is_total() {
            return None;
        }
        let c = &self.base;
        let name = |f| c.arrow_name(f);
        Some(RawPermutative {
            category: c.to_raw(),
            unit: self.unit,
            tensor_obj: c
                .objects()
                .map(|a| {
                    c.objects()
                        .map(|b| self.tensor_obj(a, b).unwrap())
                        .collect()
                })
                .collect(),
            tensor_arr: c
                .arrows()
                .map(|f| {
                    c.arrows()
                        .map(|g| name(self.tensor_arr(f, g).unwrap()))
                        .collect()
                })
                .collect(),
            symmetry: c
                .objects()
                .map(|a| {
                    c.objects()
                        .map(|b| name(self.symmetry(a, b).unwrap()))
                        .collect()
                })
                .collect(),
        })
    }
}

/// The cartesian product of two permutative structures, indexed as in
/// [`crate::fincat::constructions::Product`].
pub fn product(p: &PermutativeStructure, q: &PermutativeStructure) -> PermutativeStructure {
    let prod = crate::fincat::constructions::Product::new(p.base(), q.base());
    let (qn, qm) = (q.base.object_count(), q.base.arrow_count());
    let obj = |a: ObjId, b: ObjId| a * qn + b;
    let arr = |f: ArrowId, g: ArrowId| f * qm + g;
    PermutativeStructure::from_fn(
        prod.category.clone(),
        obj(p.unit, q.unit),
        |x, y| {
            Some(obj(
                p.tensor_obj(x / qn, y / qn)?,
                q.tensor_obj(x % qn, y % qn)?,
            ))
        },
        |f, g| {
            Some(arr(
                p.tensor_arr(f / qm, g / qm)?,
                q.tensor_arr(f % qm, g % qm)?,
            ))
        },
        |x, y| {
            Some(arr(
                p.symmetry(x / qn, y / qn)?,
                q.symmetry(x % qn, y % qn)?,
            ))
        },
    )
}

/// Tables as they appear in a permutative file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawPermutative {
    pub category: RawCategory,
    pub unit: ObjId,
    pub tensor_obj: Vec<Vec<ObjId>>,
    /// `tensor_arr[f][g]`, arrows named by id.
    pub tensor_arr: Vec<Vec<String>>,
    pub symmetry: Vec<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PermAxiom {
    TableShape,
    Endpoints,
    Unit,
    Associativity,
    Functoriality,
    SymmetryEndpoints,
    SymmetryInvolution,
    SymmetryUnit,
    Hexagon,
    SymmetryNaturality,
}

impl PermAxiom {
    pub fn label(self) -> &'static str {
        match self {
            PermAxiom::TableShape => "table shape",
            PermAxiom::Endpoints => "endpoints",
            PermAxiom::Unit => "unit",
            PermAxiom::Associativity => "associativity",
            PermAxiom::Functoriality => "functoriality",
            PermAxiom::SymmetryEndpoints => "symmetry endpoints",
            PermAxiom::SymmetryInvolution => "symmetry involution",
            PermAxiom::SymmetryUnit => "symmetry unit",
            PermAxiom::Hexagon => "hexagon",
            PermAxiom::SymmetryNaturality => "symmetry naturality",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermViolation {
    pub axiom: PermAxiom,
    /// Human-readable witness: the object indices or arrow ids involved.
    pub witness: String,
}

impl fmt::Display for PermViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.axiom.label(), self.witness)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    Category(Vec<LawViolation>),
    Axioms(Vec<PermViolation>),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::Category(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("; "))
            }
            PermError::Axioms(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join("; "))
            }
        }
    }
}

/// Reads the tables without checking the axioms.
pub fn build_permutative(raw: &RawPermutative) -> Result<PermutativeStructure, PermError> {
    let base = Arc::new(validate_category(&raw.category).map_err(PermError::Category)?);
    let (n, m) = (base.object_count(), base.arrow_count());
    let shape = |w: String| {
        PermError::Axioms(vec![PermViolation {
            axiom: PermAxiom::TableShape,
            witness: w,
        }])
    };
    if raw.unit >= n {
        return Err(shape(format!("unit {} out of range", raw.unit)));
    }
    let square = |rows: usize, lens: Vec<usize>, what: &str| -> Result<(), PermError> {
        if lens.len() != rows || lens.iter().any(|&l| l != rows) {
            return Err(shape(format!("{what} must be {rows}x{rows}")));
        }
        Ok(())
    };
    square(
        n,
        raw.tensor_obj.iter().map(Vec::len).collect(),
        "tensor_obj",
    )?;
    square(
        m,
        raw.tensor_arr.iter().map(Vec::len).collect(),
        "tensor_arr",
    )?;
    square(n, raw.symmetry.iter().map(Vec::len).collect(), "symmetry")?;
    let index: std::collections::HashMap<&str, ArrowId> = raw
        .category
        .arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.0.as_str(), i))
        .collect();
    let lookup = |s: &String| -> Result<ArrowId, PermError> {
        index
            .get(s.as_str())
            .copied()
            .ok_or_else(|| shape(format!("unknown arrow id `{s}`")))
    };
    if let Some(bad) = raw.tensor_obj.iter().flatten().find(|&&x| x >= n) {
        return Err(shape(format!("object {bad} out of range in tensor_obj")));
    }
    let tensor_arr: Vec<Vec<ArrowId>> = raw
        .tensor_arr
        .iter()
        .map(|row| row.iter().map(lookup).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    let symmetry: Vec<Vec<ArrowId>> = raw
        .symmetry
        .iter()
        .map(|row| row.iter().map(lookup).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()?;
    Ok(PermutativeStructure::from_fn(
        base,
        raw.unit,
        |a, b| Some(raw.tensor_obj[a][b]),
        |f, g| Some(tensor_arr[f][g]),
        |a, b| Some(symmetry[a][b]),
    ))
}

/// Reads the tables and checks every axiom.
pub fn validate_permutative(raw: &RawPermutative) -> Result<PermutativeStructure, PermError> {
    let p = build_permutative(raw)?;
    let v = check_axioms(&p, usize::MAX);
    if v.is_empty() {
        Ok(p)
    } else {
        Err(PermError::Axioms(v))
    }
}

fn check_axioms(p: &PermutativeStructure, per_axiom: usize) -> Vec<PermViolation> {
    let c = &*p.base;
    let e = p.unit;
    let mut rep = Reporter {
        out: Vec::new(),
        counts: std::collections::HashMap::new(),
        per_axiom,
    };
    let mut report = |axiom: PermAxiom, witness: String| rep.push(axiom, witness);
    let name = |f: ArrowId| c.arrow_name(f);

    // endpoints of ⊗ on arrows and of γ
    for f in c.arrows() {
        for g in c.arrows() {
            if let Some(fg) = p.tensor_arr(f, g) {
                let dom = p.tensor_obj(c.dom(f), c.dom(g));
                let cod = p.tensor_obj(c.cod(f), c.cod(g));
                if dom != Some(c.dom(fg)) || cod != Some(c.cod(fg)) {
                    report(PermAxiom::Endpoints, format!("({} ⊗ {})", name(f), name(g)));
                }
            }
        }
    }
    if !rep.out.is_empty() {
        return rep.out;
    }
    let mut report = |axiom: PermAxiom, witness: String| rep.push(axiom, witness);
    for a in c.objects() {
        for b in c.objects() {
            if let (Some(s), Some(ab), Some(ba)) =
                (p.symmetry(a, b), p.tensor_obj(a, b), p.tensor_obj(b, a))
            {
                if c.dom(s) != ab || c.cod(s) != ba {
                    report(PermAxiom::SymmetryEndpoints, format!("objects ({a}, {b})"));
                }
            }
        }
    }

    // unit
    let id_e = c.identity(e);
    for a in c.objects() {
        if p.tensor_obj(e, a) != Some(a) || p.tensor_obj(a, e) != Some(a) {
            report(PermAxiom::Unit, format!("object {a}"));
        }
    }
    for f in c.arrows() {
        if p.tensor_arr(id_e, f) != Some(f) || p.tensor_arr(f, id_e) != Some(f) {
            report(PermAxiom::Unit, format!("arrow {}", name(f)));
        }
    }

    // associativity
    for a in c.objects() {
        for b in c.objects() {
            let Some(ab) = p.tensor_obj(a, b) else {
                continue;
            };
            for x in c.objects() {
                let (Some(l), Some(bx)) = (p.tensor_obj(ab, x), p.tensor_obj(b, x)) else {
                    continue;
                };
                if let Some(r) = p.tensor_obj(a, bx) {
                    if l != r {
                        report(PermAxiom::Associativity, format!("objects ({a}, {b}, {x})"));
                    }
                }
            }
        }
    }
    for f in c.arrows() {
        for g in c.arrows() {
            let Some(fg) = p.tensor_arr(f, g) else {
                continue;
            };
            for h in c.arrows() {
                let (Some(l), Some(gh)) = (p.tensor_arr(fg, h), p.tensor_arr(g, h)) else {
                    continue;
                };
                if let Some(r) = p.tensor_arr(f, gh) {
                    if l != r {
                        report(
                            PermAxiom::Associativity,
                            format!("arrows ({}, {}, {})", name(f), name(g), name(h)),
                        );
                    }
                }
            }
        }
    }

    // ⊗ is a functor
    for a in c.objects() {
        for b in c.objects() {
            if let Some(ab) = p.tensor_obj(a, b) {
                if p.tensor_arr(c.identity(a), c.identity(b)) != Some(c.identity(ab)) {
                    report(
                        PermAxiom::Functoriality,
                        format!("identities of ({a}, {b})"),
                    );
                }
            }
        }
    }
    for f in c.arrows() {
        for g in c.arrows() {
            let Some(fg) = p.tensor_arr(f, g) else {
                continue;
            };
            for &f2 in c.out_arrows(c.cod(f)) {
                for &g2 in c.out_arrows(c.cod(g)) {
                    let Some(f2g2) = p.tensor_arr(f2, g2) else {
                        continue;
                    };
                    let lhs = c.compose(f2g2, fg);
                    let rhs = p.tensor_arr(c.compose(f2, f), c.compose(g2, g));
                    if rhs != Some(lhs) {
                        report(
                            PermAxiom::Functoriality,
                            format!(
                                "interchange ({} ⊗ {}) ∘ ({} ⊗ {})",
                                name(f2),
                                name(g2),
                                name(f),
                                name(g)
                            ),
                        );
                    }
                }
            }
        }
    }

    // symmetry
    for a in c.objects() {
        if let Some(s) = p.symmetry(a, e) {
            if s != c.identity(a) {
                report(PermAxiom::SymmetryUnit, format!("object {a}"));
            }
        }
        for b in c.objects() {
            if let (Some(s), Some(t), Some(ab)) =
                (p.symmetry(a, b), p.symmetry(b, a), p.tensor_obj(a, b))
            {
                if c.try_compose(t, s) != Some(c.identity(ab)) {
                    report(PermAxiom::SymmetryInvolution, format!("objects ({a}, {b})"));
                }
            }
        }
    }
    for a in c.objects() {
        for b in c.objects() {
            let Some(ab) = p.tensor_obj(a, b) else {
                continue;
            };
            for x in c.objects() {
                let Some(lhs) = p.symmetry(ab, x) else {
                    continue;
                };
                let rhs = (|| {
                    let first = p.tensor_arr(c.identity(a), p.symmetry(b, x)?)?;
                    let second = p.tensor_arr(p.symmetry(a, x)?, c.identity(b))?;
                    c.try_compose(second, first)
                })();
                if let Some(rhs) = rhs {
                    if lhs != rhs {
                        report(PermAxiom::Hexagon, format!("objects ({a}, {b}, {x})"));
                    }
                }
            }
        }
    }
    for f in c.arrows() {
        for g in c.arrows() {
            let (Some(fg), Some(gf)) = (p.tensor_arr(f, g), p.tensor_arr(g, f)) else {
                continue;
            };
            let (Some(s1), Some(s2)) = (
                p.symmetry(c.dom(f), c.dom(g)),
                p.symmetry(c.cod(f), c.cod(g)),
            ) else {
                continue;
            };
            if c.try_compose(s2, fg) != c.try_compose(gf, s1) {
                report(
                    PermAxiom::SymmetryNaturality,
                    format!("arrows ({}, {})", name(f), name(g)),
                );
            }
        }
    }
    rep.out
}

struct Reporter {
    out: Vec<PermViolation>,
    counts: std::collections::HashMap<PermAxiom, usize>,
    per_axiom: usize,
}

impl Reporter {
    fn push(&mut self, axiom: PermAxiom, witness: String) {
        let k = self.counts.entry(axiom).or_insert(0);
        if *k < self.per_axiom {
            self.out.push(PermViolation { axiom, witness });
        }
        *k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::corpus;
    use super::*;

    #[test]
    fn corpus_structures_are_valid() {
        for (name, p) in corpus::all() {
            let v = p.violations();
            assert!(v.is_empty(), "{name}: {v:?}");
        }
    }

    #[test]
    fn raw_round_trip() {
        let p = corpus::discrete_cyclic(2);
        let raw = p.to_raw().unwrap();
        let q = validate_permutative(&raw).unwrap();
        assert_eq!(q.to_raw().unwrap(), raw);
    }

    #[test]
    fn wrong_symmetry_is_an_involution_failure() {
        // discrete max monoid with γ(1,1) pointing at the identity of 0
        let p = corpus::max_monoid();
        let mut raw = p.to_raw().unwrap();
        raw.symmetry[1][1] = raw.category.identities[0].clone();
        let err = validate_permutative(&raw).unwrap_err();
        let PermError::Axioms(v) = err else { panic!() };
        assert!(v.iter().any(|x| x.axiom == PermAxiom::SymmetryInvolution
            && x.to_string().contains("symmetry involution")
            && x.witness == "objects (1, 1)"));
    }

    #[test]
    fn nonassociative_table_is_caught() {
        let p = corpus::discrete_cyclic(3);
        let mut raw = p.to_raw().unwrap();
        raw.tensor_obj[1][1] = 0;
        let err = validate_permutative(&raw).unwrap_err();
        assert!(err.to_string().contains("associativity") || err.to_string().contains("endpoints"));
    }
}
