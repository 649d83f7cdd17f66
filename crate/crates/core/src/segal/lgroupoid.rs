//! Groupoids of labelled sequences.
//!
//! An object is a finite sequence of entries, each entry carrying a sorted
//! list of labels in `{1..n}`. Its slots are the concatenated labels. An arrow
//! is a bijection of slots preserving labels; composition, tensor (by
//! concatenation) and symmetry (block swap) are the evident ones.
//!
//! With entries the subsets of `{1..n}` this is `L(n)`; with entries the based
//! maps out of `n⁺`, labelled by their support, it is `L̄(n)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::fincat::{ArrowId, FiniteCategory, Functor, ObjId};
use crate::gammaop::{hom_set, BasedMap};
use crate::perm::PermutativeStructure;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Entry {
    Subset(Vec<usize>),
    Map(BasedMap),
}

impl Entry {
    pub fn labels(&self) -> Vec<usize> {
        match self {
            Entry::Subset(s) => s.clone(),
            Entry::Map(f) => f.support(),
        }
    }

    /// Precomposition with `f`: preimage of a subset, or `g ∘ f`.
    fn pull_back(&self, f: &BasedMap) -> Entry {
        match self {
            Entry::Subset(s) => Entry::Subset(f.preimage(s)),
            Entry::Map(g) => Entry::Map(crate::gammaop::compose(g, f).expect("composable")),
        }
    }

    fn render(&self) -> String {
        match self {
            Entry::Subset(s) => {
                let parts: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", parts.join(","))
            }
            Entry::Map(f) => f.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct SlotArrow {
    source: ObjId,
    target: ObjId,
    /// slot `i` of the source goes to slot `perm[i]` of the target
    perm: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct LGroupoid {
    pub n: usize,
    pub length_bound: usize,
    entries: Vec<Entry>,
    entry_index: HashMap<Entry, usize>,
    /// Each object as a list of entry indices.
    objects: Vec<Vec<usize>>,
    object_index: HashMap<Vec<usize>, ObjId>,
    slots: Vec<Vec<usize>>,
    arrows: Vec<SlotArrow>,
    arrow_index: HashMap<SlotArrow, ArrowId>,
    structure: PermutativeStructure,
}

/// `L(n)` truncated to sequences of length at most `length_bound`.
pub fn build_l(n: usize, length_bound: usize, limits: &Limits) -> Result<LGroupoid> {
    let entries = (0..1usize << n)
        .map(|mask| Entry::Subset((1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()))
        .collect();
    build(n, length_bound, entries, limits)
}

/// `L̄(n)` truncated to sequences of length at most `length_bound` whose
/// entries have codomain degree at most `degree_bound`.
pub fn build_lbar(
    n: usize,
    length_bound: usize,
    degree_bound: usize,
    limits: &Limits,
) -> Result<LGroupoid> {
    let entries = (0..=degree_bound)
        .flat_map(|k| hom_set(n, k))
        .map(Entry::Map)
        .collect();
    build(n, length_bound, entries, limits)
}

fn build(n: usize, length_bound: usize, entries: Vec<Entry>, limits: &Limits) -> Result<LGroupoid> {
    let entry_index: HashMap<Entry, usize> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    let labels: Vec<Vec<usize>> = entries.iter().map(Entry::labels).collect();

    let mut objects: Vec<Vec<usize>> = vec![Vec::new()];
    let mut frontier = vec![0usize];
    for _ in 0..length_bound {
        let mut next = Vec::new();
        for &o in &frontier {
            for e in 0..entries.len() {
                let mut s = objects[o].clone();
                s.push(e);
                next.push(objects.len());
                objects.push(s);
                if objects.len() > limits.max_objects {
                    return Err(Error::SizeLimit {
                        what: "objects",
                        limit: limits.max_objects,
                    });
                }
            }
        }
        frontier = next;
    }
    let object_index: HashMap<Vec<usize>, ObjId> = objects
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let slots: Vec<Vec<usize>> = objects
        .iter()
        .map(|s| s.iter().flat_map(|&e| labels[e].iter().copied()).collect())
        .collect();

    // objects grouped by label multiset
    let mut groups: BTreeMap<Vec<usize>, Vec<ObjId>> = BTreeMap::new();
    for (o, sl) in slots.iter().enumerate() {
        let mut key = sl.clone();
        key.sort_unstable();
        groups.entry(key).or_default().push(o);
    }
    let mut group_of = vec![0usize; objects.len()];
    let group_members: Vec<Vec<ObjId>> = groups.into_values().collect();
    for (gi, members) in group_members.iter().enumerate() {
        for &o in members {
            group_of[o] = gi;
        }
    }

    let mut arrows = Vec::new();
    for s in 0..objects.len() {
        for &t in &group_members[group_of[s]] {
            for perm in label_bijections(&slots[s], &slots[t]) {
                arrows.push(SlotArrow {
                    source: s,
                    target: t,
                    perm,
                });
                if arrows.len() > limits.max_arrows {
                    return Err(Error::SizeLimit {
                        what: "arrows",
                        limit: limits.max_arrows,
                    });
                }
            }
        }
    }
    let arrow_index: HashMap<SlotArrow, ArrowId> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i))
        .collect();
    let identity = (0..objects.len())
        .map(|o| {
            arrow_index[&SlotArrow {
                source: o,
                target: o,
                perm: (0..slots[o].len()).collect(),
            }]
        })
        .collect();
    let endpoints = arrows.iter().map(|a| (a.source, a.target)).collect();
    let base = FiniteCategory::from_fn(objects.len(), endpoints, identity, |g, f| {
        let (fa, ga) = (&arrows[f], &arrows[g]);
        arrow_index[&SlotArrow {
            source: fa.source,
            target: ga.target,
            perm: fa.perm.iter().map(|&i| ga.perm[i]).collect(),
        }]
    });
    let base = Arc::new(base);

    let tensor_obj = |a: ObjId, b: ObjId| -> Option<ObjId> {
        let mut s = objects[a].clone();
        s.extend_from_slice(&objects[b]);
        object_index.get(&s).copied()
    };
    let tensor_arr = |f: ArrowId, g: ArrowId| -> Option<ArrowId> {
        let (fa, ga) = (&arrows[f], &arrows[g]);
        let source = tensor_obj(fa.source, ga.source)?;
        let target = tensor_obj(fa.target, ga.target)?;
        let k = fa.perm.len();
        let mut perm = fa.perm.clone();
        perm.extend(ga.perm.iter().map(|&p| p + k));
        Some(
            arrow_index[&SlotArrow {
                source,
                target,
                perm,
            }],
        )
    };
    let symmetry = |a: ObjId, b: ObjId| -> Option<ArrowId> {
        let source = tensor_obj(a, b)?;
        let target = tensor_obj(b, a)?;
        let (k, l) = (slots[a].len(), slots[b].len());
        let perm = (0..k).map(|i| l + i).chain(0..l).collect();
        Some(
            arrow_index[&SlotArrow {
                source,
                target,
                perm,
            }],
        )
    };
    let generators: Vec<ObjId> = (0..entries.len()).map(|e| object_index[&vec![e]]).collect();
    let structure = PermutativeStructure::from_fn(base, 0, tensor_obj, tensor_arr, symmetry)
        .with_generators(generators);
    Ok(LGroupoid {
        n,
        length_bound,
        entries,
        entry_index,
        objects,
        object_index,
        slots,
        arrows,
        arrow_index,
        structure,
    })
}

/// Every label-preserving bijection from `from` to `to`, lexicographic.
fn label_bijections(from: &[usize], to: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; from.len()];
    let mut used = vec![false; to.len()];
    fn go(
        i: usize,
        from: &[usize],
        to: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == from.len() {
            out.push(perm.clone());
            return;
        }
        for j in 0..to.len() {
            if !used[j] && to[j] == from[i] {
                used[j] = true;
                perm[i] = j;
                go(i + 1, from, to, perm, used, out);
                used[j] = false;
            }
        }
    }
    if from.len() == to.len() {
        go(0, from, to, &mut perm, &mut used, &mut out);
    }
    out
}

impl LGroupoid {
    pub fn structure(&self) -> &PermutativeStructure {
        &self.structure
    }

    pub fn base(&self) -> &Arc<FiniteCategory> {
        self.structure.base()
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn object(&self, entries: &[Entry]) -> Option<ObjId> {
        let idx: Option<Vec<usize>> = entries
            .iter()
            .map(|e| self.entry_index.get(e).copied())
            .collect();
        self.object_index.get(&idx?).copied()
    }

    pub fn subset_object(&self, subsets: &[&[usize]]) -> Option<ObjId> {
        let entries: Vec<Entry> = subsets.iter().map(|s| Entry::Subset(s.to_vec())).collect();
        self.object(&entries)
    }

    pub fn object_entries(&self, o: ObjId) -> Vec<Entry> {
        self.objects[o]
            .iter()
            .map(|&e| self.entries[e].clone())
            .collect()
    }

    pub fn render_object(&self, o: ObjId) -> String {
        let parts: Vec<String> = self.objects[o]
            .iter()
            .map(|&e| self.entries[e].render())
            .collect();
        format!("({})", parts.join(","))
    }

    /// The arrow `s → t` with slot map `perm`, if it exists.
    pub fn arrow(&self, source: ObjId, target: ObjId, perm: Vec<usize>) -> Option<ArrowId> {
        self.arrow_index
            .get(&SlotArrow {
                source,
                target,
                perm,
            })
            .copied()
    }

    pub fn slot_labels(&self, o: ObjId) -> &[usize] {
        &self.slots[o]
    }
}

/// The functor `this(m) → target(n)` induced by `f: n⁺ → m⁺`, pulling each
/// entry back along `f` and moving slots with their labels.
pub fn l_action(this: &LGroupoid, target: &LGroupoid, f: &BasedMap) -> Result<Functor> {
    if f.target != this.n || f.source != target.n {
        return Err(Error::Mismatch(format!(
            "{f} does not go from {} to {}",
            target.n, this.n
        )));
    }
    if target.length_bound < this.length_bound {
        return Err(Error::Invalid("length bounds are incompatible".into()));
    }
    let mut entry_map = Vec::with_capacity(this.entries.len());
    for e in &this.entries {
        let pulled = e.pull_back(f);
        let idx = target.entry_index.get(&pulled).copied().ok_or_else(|| {
            Error::Invalid(format!(
                "entry {} outside the target bounds",
                pulled.render()
            ))
        })?;
        entry_map.push(idx);
    }
    let object_map: Vec<ObjId> = this
        .objects
        .iter()
        .map(|s| target.object_index[&s.iter().map(|&e| entry_map[e]).collect::<Vec<_>>()])
        .collect();

    // slot (entry j, label y) of a source object becomes the slots
    // (entry j, label i) with f(i) = y of its image
    let slot_position = |g: &LGroupoid, o: ObjId| -> HashMap<(usize, usize), usize> {
        let mut pos = HashMap::new();
        let mut k = 0;
        for (j, &e) in g.objects[o].iter().enumerate() {
            for &label in &g.entries[e].labels() {
                pos.insert((j, label), k);
                k += 1;
            }
        }
        pos
    };
    let entry_of_slot = |g: &LGroupoid, o: ObjId| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (j, &e) in g.objects[o].iter().enumerate() {
            for &label in &g.entries[e].labels() {
                out.push((j, label));
            }
        }
        out
    };
    let mut arrow_map = Vec::with_capacity(this.arrows.len());
    for a in &this.arrows {
        let src_slots = entry_of_slot(this, a.source);
        let tgt_slots = entry_of_slot(this, a.target);
        let (ns, nt) = (object_map[a.source], object_map[a.target]);
        let new_src = entry_of_slot(target, ns);
        let new_tgt_pos = slot_position(target, nt);
        let old_src_pos = slot_position(this, a.source);
        let perm: Vec<usize> = new_src
            .iter()
            .map(|&(j, i)| {
                let y = f.apply(i);
                let old = old_src_pos[&(j, y)];
                let (j2, _) = tgt_slots[a.perm[old]];
                new_tgt_pos[&(j2, i)]
            })
            .collect();
        let _ = &src_slots;
        let id = target
            .arrow(ns, nt, perm)
            .ok_or_else(|| Error::Invalid("image arrow missing".into()))?;
        arrow_map.push(id);
    }
    Ok(Functor::new_unchecked(
        this.base().clone(),
        target.base().clone(),
        object_map,
        arrow_map,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gammaop::{compose, multiplication, projection, Side};

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn l1_small_counts() {
        let l = build_l(1, 2, &Limits::default()).unwrap();
        assert_eq!(l.base().object_count(), 7);
        let twice = l.subset_object(&[&[1], &[1]]).unwrap();
        assert_eq!(l.base().hom(twice, twice).len(), 2);
        for s in [&[][..], &[1][..]] {
            let o = l.subset_object(&[s]).unwrap();
            assert_eq!(l.base().hom(o, o).len(), 1);
        }
        assert!(l.structure().violations().is_empty());
        assert!(l.base().check_laws().is_empty());
    }

    #[test]
    fn hom_sets_match_the_factorial_formula() {
        for n in 0..=2 {
            for bound in 1..=3 {
                let l = build_l(n, bound, &Limits::default()).unwrap();
                let c = l.base();
                assert!(c.arrows().all(|f| c.is_iso(f)));
                for s in c.objects() {
                    for t in c.objects() {
                        let mut a = l.slot_labels(s).to_vec();
                        let mut b = l.slot_labels(t).to_vec();
                        a.sort_unstable();
                        b.sort_unstable();
                        let expected = if a == b {
                            (1..=n)
                                .map(|x| factorial(a.iter().filter(|&&y| y == x).count()))
                                .product()
                        } else {
                            0
                        };
                        assert_eq!(c.hom(s, t).len(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn l2_is_permutative() {
        let l = build_l(2, 2, &Limits::default()).unwrap();
        assert!(l.structure().violations().is_empty());
    }

    #[test]
    fn action_examples() {
        let limits = Limits::default();
        let l1 = build_l(1, 2, &limits).unwrap();
        let l2 = build_l(2, 2, &limits).unwrap();
        let one = l1.subset_object(&[&[1]]).unwrap();
        let d = l_action(&l1, &l2, &projection(1, 1, Side::Left)).unwrap();
        assert!(d.violations().is_empty());
        assert_eq!(d.obj(one), l2.subset_object(&[&[1]]).unwrap());
        let m = l_action(&l1, &l2, &multiplication()).unwrap();
        assert!(m.violations().is_empty());
        assert_eq!(m.obj(one), l2.subset_object(&[&[1, 2]]).unwrap());
        let id = l_action(&l2, &l2, &BasedMap::identity(2)).unwrap();
        assert_eq!(id, Functor::identity(l2.base().clone()));
    }

    #[test]
    fn action_is_contravariant() {
        let limits = Limits::default();
        let ls: Vec<LGroupoid> = (0..=2).map(|n| build_l(n, 2, &limits).unwrap()).collect();
        for n in 0..=2 {
            for m in 0..=2 {
                for k in 0..=2 {
                    for f in hom_set(n, m) {
                        for g in hom_set(m, k) {
                            let gf = compose(&g, &f).unwrap();
                            let lf = l_action(&ls[m], &ls[n], &f).unwrap();
                            let lg = l_action(&ls[k], &ls[m], &g).unwrap();
                            let lgf = l_action(&ls[k], &ls[n], &gf).unwrap();
                            assert_eq!(lf.after(&lg), lgf);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lbar_is_permutative_and_acted_on() {
        let limits = Limits::default();
        let b1 = build_lbar(1, 2, 1, &limits).unwrap();
        let b2 = build_lbar(2, 2, 1, &limits).unwrap();
        assert!(b1.structure().violations().is_empty());
        let f = l_action(&b1, &b2, &multiplication()).unwrap();
        assert!(f.violations().is_empty());
        assert!(crate::perm::is_strict(b1.structure(), b2.structure(), &f));
    }
}
