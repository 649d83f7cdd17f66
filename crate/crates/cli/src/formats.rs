//! On-disk schemas and their conversion to core types.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use picard_core::fincat::{validate_category, ArrowId, FiniteCategory, Functor, RawCategory};
use picard_core::gammacat::TruncatedGammaCategory;
use picard_core::gammaop::BasedMap;
use picard_core::perm::{
    validate_permutative, OplaxData, PermError, PermutativeStructure, RawPermutative,
};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::report::Failure;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub id: String,
    pub dom: usize,
    pub cod: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComposeEntry {
    pub g: String,
    pub f: String,
    pub gf: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryFile {
    pub objects: usize,
    pub arrows: Vec<ArrowEntry>,
    pub identities: Vec<String>,
    pub compose: Vec<ComposeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermutativeFile {
    pub objects: usize,
    pub arrows: Vec<ArrowEntry>,
    pub identities: Vec<String>,
    pub compose: Vec<ComposeEntry>,
    pub unit: usize,
    pub tensor_obj: Vec<Vec<usize>>,
    pub tensor_arr: Vec<Vec<String>>,
    pub symmetry: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub map: String,
    pub on_objects: Vec<usize>,
    pub on_arrows: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GammaFile {
    pub truncation: usize,
    pub levels: Vec<CategoryFile>,
    pub action: Vec<ActionEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorFile {
    pub source: CategoryFile,
    pub target: CategoryFile,
    pub on_objects: Vec<usize>,
    pub on_arrows: Vec<String>,
}

/// `lambda[a][b]: F(a ⊗ b) → F(a) ⊗ F(b)` and `epsilon: F(1) → 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OplaxFile {
    pub source: PermutativeFile,
    pub target: PermutativeFile,
    pub on_objects: Vec<usize>,
    pub on_arrows: Vec<String>,
    pub lambda: Vec<Vec<String>>,
    pub epsilon: String,
}

/// A parsed input together with its digest.
pub struct Loaded<T> {
    pub value: T,
    pub sha256: String,
}

fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for segment in path.iter() {
        out.push('/');
        match segment {
            Segment::Seq { index } => out.push_str(&index.to_string()),
            Segment::Map { key } => out.push_str(&key.replace('~', "~0").replace('/', "~1")),
            Segment::Enum { variant } => out.push_str(variant),
            Segment::Unknown => out.push('?'),
        }
    }
    out
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<Loaded<T>, Failure> {
    let bytes = std::fs::read(path)
        .map_err(|e| Failure::input("", format!("cannot read {}: {e}", path.display())))?;
    let sha256 = hex(&Sha256::digest(&bytes));
    let text = std::str::from_utf8(&bytes).map_err(|_| Failure::input("", "file is not UTF-8"))?;
    let de = &mut serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(de).map_err(|e| {
        let ptr = pointer(e.path());
        Failure::input(ptr, e.into_inner().to_string())
    })?;
    Ok(Loaded { value, sha256 })
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// Sorted keys, two-space indent, trailing newline.
pub fn canonical<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

impl CategoryFile {
    pub fn to_raw(&self) -> RawCategory {
        RawCategory {
            objects: self.objects,
            arrows: self
                .arrows
                .iter()
                .map(|a| (a.id.clone(), a.dom, a.cod))
                .collect(),
            identities: self.identities.clone(),
            compose: self
                .compose
                .iter()
                .map(|c| (c.g.clone(), c.f.clone(), c.gf.clone()))
                .collect(),
        }
    }

    pub fn from_category(c: &FiniteCategory) -> CategoryFile {
        let raw = c.to_raw();
        CategoryFile {
            objects: raw.objects,
            arrows: raw
                .arrows
                .into_iter()
                .map(|(id, dom, cod)| ArrowEntry { id, dom, cod })
                .collect(),
            identities: raw.identities,
            compose: raw
                .compose
                .into_iter()
                .map(|(g, f, gf)| ComposeEntry { g, f, gf })
                .collect(),
        }
    }

    /// Validates the tables; law violations are reported against `at`.
    pub fn build(&self, at: &str) -> Result<Arc<FiniteCategory>, Failure> {
        validate_category(&self.to_raw())
            .map(Arc::new)
            .map_err(|v| {
                let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                Failure::input(at, format!("not a category: {}", msgs.join("; ")))
            })
    }
}

impl PermutativeFile {
    /// `None` when the tensor is partial.
    pub fn from_structure(p: &PermutativeStructure) -> Option<PermutativeFile> {
        let raw = p.to_raw()?;
        let c = CategoryFile::from_category(p.base());
        Some(PermutativeFile {
            objects: c.objects,
            arrows: c.arrows,
            identities: c.identities,
            compose: c.compose,
            unit: raw.unit,
            tensor_obj: raw.tensor_obj,
            tensor_arr: raw.tensor_arr,
            symmetry: raw.symmetry,
        })
    }

    pub fn to_raw(&self) -> RawPermutative {
        let category = CategoryFile {
            objects: self.objects,
            arrows: self.arrows.clone(),
            identities: self.identities.clone(),
            compose: self.compose.clone(),
        };
        RawPermutative {
            category: category.to_raw(),
            unit: self.unit,
            tensor_obj: self.tensor_obj.clone(),
            tensor_arr: self.tensor_arr.clone(),
            symmetry: self.symmetry.clone(),
        }
    }

    /// Broken category tables are input failures; broken axioms come back
    /// as the inner `Err`.
    pub fn build(&self, at: &str) -> Result<Result<PermutativeStructure, Vec<String>>, Failure> {
        match validate_permutative(&self.to_raw()) {
            Ok(p) => Ok(Ok(p)),
            Err(PermError::Category(v)) => {
                let msgs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                Err(Failure::input(
                    at,
                    format!("not a category: {}", msgs.join("; ")),
                ))
            }
            Err(PermError::Axioms(v)) => Ok(Err(v.iter().map(|x| x.to_string()).collect())),
        }
    }

    /// Like [`PermutativeFile::build`] but axiom failures are input errors.
    pub fn build_valid(&self, at: &str) -> Result<PermutativeStructure, Failure> {
        self.build(at)?.map_err(|v| {
            Failure::input(at, format!("not a permutative category: {}", v.join("; ")))
        })
    }
}

fn arrow_index(c: &FiniteCategory) -> HashMap<String, ArrowId> {
    c.arrows().map(|f| (c.arrow_name(f), f)).collect()
}

/// Object and arrow tables with range and name checks.
fn functor_tables(
    source: &Arc<FiniteCategory>,
    target: &Arc<FiniteCategory>,
    on_objects: &[usize],
    on_arrows: &[String],
    at: &str,
) -> Result<Functor, Failure> {
    if on_objects.len() != source.object_count() {
        return Err(Failure::input(
            format!("{at}/on_objects"),
            format!(
                "expected {} entries, got {}",
                source.object_count(),
                on_objects.len()
            ),
        ));
    }
    if let Some(i) = on_objects.iter().position(|&x| x >= target.object_count()) {
        return Err(Failure::input(
            format!("{at}/on_objects/{i}"),
            "object out of range",
        ));
    }
    if on_arrows.len() != source.arrow_count() {
        return Err(Failure::input(
            format!("{at}/on_arrows"),
            format!(
                "expected {} entries, got {}",
                source.arrow_count(),
                on_arrows.len()
            ),
        ));
    }
    let index = arrow_index(target);
    let arrows = on_arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            index.get(a).copied().ok_or_else(|| {
                Failure::input(
                    format!("{at}/on_arrows/{i}"),
                    format!("unknown arrow id `{a}`"),
                )
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Functor::new_unchecked(
        source.clone(),
        target.clone(),
        on_objects.to_vec(),
        arrows,
    ))
}

impl FunctorFile {
    /// The functor, or an input failure naming the first broken law.
    pub fn build(&self) -> Result<Functor, Failure> {
        let source = self.source.build("/source")?;
        let target = self.target.build("/target")?;
        let f = functor_tables(&source, &target, &self.on_objects, &self.on_arrows, "")?;
        if let Some(v) = f.violations().first() {
            return Err(Failure::input("", format!("not a functor: {v}")));
        }
        Ok(f)
    }
}

impl GammaFile {
    pub fn build(&self) -> Result<TruncatedGammaCategory, Failure> {
        if self.levels.len() != self.truncation + 1 {
            return Err(Failure::input(
                "/levels",
                format!(
                    "expected {} levels, got {}",
                    self.truncation + 1,
                    self.levels.len()
                ),
            ));
        }
        let levels: Vec<Arc<FiniteCategory>> = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, l)| l.build(&format!("/levels/{i}")))
            .collect::<Result<_, _>>()?;
        let mut action = BTreeMap::new();
        for (i, entry) in self.action.iter().enumerate() {
            let at = format!("/action/{i}");
            let map: BasedMap = entry.map.parse().map_err(|e: picard_core::Error| {
                Failure::input(format!("{at}/map"), e.to_string())
            })?;
            if map.source > self.truncation || map.target > self.truncation {
                return Err(Failure::input(
                    format!("{at}/map"),
                    "degree outside the truncation",
                ));
            }
            let f = functor_tables(
                &levels[map.source],
                &levels[map.target],
                &entry.on_objects,
                &entry.on_arrows,
                &at,
            )?;
            if action.insert(map, f).is_some() {
                return Err(Failure::input(format!("{at}/map"), "duplicate map"));
            }
        }
        TruncatedGammaCategory::from_parts(self.truncation, levels, action)
            .map_err(|e| Failure::input("", e.to_string()))
    }

    pub fn from_gamma(x: &TruncatedGammaCategory) -> GammaFile {
        GammaFile {
            truncation: x.truncation(),
            levels: x
                .levels()
                .iter()
                .map(|c| CategoryFile::from_category(c))
                .collect(),
            action: x
                .actions()
                .map(|(f, xf)| ActionEntry {
                    map: f.to_string(),
                    on_objects: xf.object_map().to_vec(),
                    on_arrows: xf
                        .arrow_map()
                        .iter()
                        .map(|&a| xf.target().arrow_name(a))
                        .collect(),
                })
                .collect(),
        }
    }
}

impl OplaxFile {
    pub fn build(
        &self,
    ) -> Result<(PermutativeStructure, PermutativeStructure, OplaxData), Failure> {
        let p = self.source.build_valid("/source")?;
        let q = self.target.build_valid("/target")?;
        let functor = functor_tables(p.base(), q.base(), &self.on_objects, &self.on_arrows, "")?;
        if let Some(v) = functor.violations().first() {
            return Err(Failure::input("", format!("not a functor: {v}")));
        }
        let n = p.base().object_count();
        let index = arrow_index(q.base());
        let lookup = |a: &String, at: String| {
            index
                .get(a)
                .copied()
                .ok_or_else(|| Failure::input(at, format!("unknown arrow id `{a}`")))
        };
        if self.lambda.len() != n || self.lambda.iter().any(|row| row.len() != n) {
            return Err(Failure::input("/lambda", format!("lambda must be {n}x{n}")));
        }
        let mut lambda = Vec::with_capacity(n * n);
        for (a, row) in self.lambda.iter().enumerate() {
            for (b, id) in row.iter().enumerate() {
                lambda.push(lookup(id, format!("/lambda/{a}/{b}"))?);
            }
        }
        let epsilon = lookup(&self.epsilon, "/epsilon".into())?;
        Ok((
            p,
            q,
            OplaxData {
                functor,
                lambda,
                epsilon,
            },
        ))
    }
}
