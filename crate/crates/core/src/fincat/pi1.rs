//! Fundamental groupoids of finite categories.
//!
//! Two constructions are offered:
//!
//! * [`Pi1Mode::Words`]: reduced paths in the underlying graph with formal
//!   inverses, composed by concatenation and cancellation only.
//! * [`Pi1Mode::Localized`]: the groupoid obtained by inverting every arrow,
//!   which also identifies a path `f, g` with the composite `g ∘ f`. Vertex
//!   groups are computed by coset enumeration over a spanning tree.
//!
//! Both carry, for every arrow, a representative path in the source category
//! so that functors can be transported along either construction.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use super::coset::{self, EnumeratedGroup};
use super::{ArrowId, FiniteCategory, Functor, ObjId};
use crate::quotient::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pi1Mode {
    Words,
    Localized,
}

/// An arrow of the source category, possibly formally inverted. Formal
/// inverses only occur on non-invertible arrows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub arrow: ArrowId,
    pub inverse: bool,
}

impl Letter {
    pub fn forward(arrow: ArrowId) -> Letter {
        Letter {
            arrow,
            inverse: false,
        }
    }

    pub fn dom(self, cat: &FiniteCategory) -> ObjId {
        if self.inverse {
            cat.cod(self.arrow)
        } else {
            cat.dom(self.arrow)
        }
    }

    pub fn cod(self, cat: &FiniteCategory) -> ObjId {
        if self.inverse {
            cat.dom(self.arrow)
        } else {
            cat.cod(self.arrow)
        }
    }

    /// The letter cancelling this one. Invertible arrows use their actual
    /// inverse.
    pub fn invert(self, cat: &FiniteCategory) -> Letter {
        match (self.inverse, cat.inverse(self.arrow)) {
            (true, _) => Letter::forward(self.arrow),
            (false, Some(g)) => Letter::forward(g),
            (false, None) => Letter {
                arrow: self.arrow,
                inverse: true,
            },
        }
    }

    /// Normalizes a formally inverted letter on an invertible arrow.
    pub fn normalize(self, cat: &FiniteCategory) -> Letter {
        match (self.inverse, cat.inverse(self.arrow)) {
            (true, Some(g)) => Letter::forward(g),
            _ => self,
        }
    }
}

/// A path in path order: the first letter is traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    pub start: ObjId,
    pub letters: Vec<Letter>,
}

impl Word {
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn end(&self, cat: &FiniteCategory) -> ObjId {
        self.letters.last().map_or(self.start, |l| l.cod(cat))
    }
}

/// Cancels adjacent inverse pairs and drops identity letters.
pub fn reduce(cat: &FiniteCategory, letters: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        let l = l.normalize(cat);
        if !l.inverse && cat.is_identity(l.arrow) {
            continue;
        }
        if stack.last().is_some_and(|&top| top.invert(cat) == l) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    stack
}

/// Every normal form reachable by cancelling adjacent inverse pairs in any
/// order. Confluence means the result always has exactly one element.
pub fn normal_forms_all_orders(cat: &FiniteCategory, letters: &[Letter]) -> HashSet<Vec<Letter>> {
    fn go(
        cat: &FiniteCategory,
        word: Vec<Letter>,
        seen: &mut HashSet<Vec<Letter>>,
        out: &mut HashSet<Vec<Letter>>,
    ) {
        if !seen.insert(word.clone()) {
            return;
        }
        let mut reducible = false;
        for i in 0..word.len() {
            if !word[i].inverse && cat.is_identity(word[i].arrow) {
                reducible = true;
                let mut next = word.clone();
                next.remove(i);
                go(cat, next, seen, out);
            } else if i + 1 < word.len() && word[i].invert(cat) == word[i + 1] {
                reducible = true;
                let mut next = word.clone();
                next.drain(i..i + 2);
                go(cat, next, seen, out);
            }
        }
        if !reducible {
            out.insert(word);
        }
    }
    let start: Vec<Letter> = letters.iter().map(|l| l.normalize(cat)).collect();
    let mut seen = HashSet::new();
    let mut out = HashSet::new();
    go(cat, start, &mut seen, &mut out);
    out
}

/// A groupoid built from a finite category, together with the comparison
/// data needed to map into and out of it.
#[derive(Clone, Debug)]
pub struct PresentedGroupoid {
    pub mode: Pi1Mode,
    pub word_bound: usize,
    source: Arc<FiniteCategory>,
    category: Option<Arc<FiniteCategory>>,
    words: Vec<Word>,
    unit: Vec<Option<ArrowId>>,
    /// The construction closed and `category` is exact.
    pub authoritative: bool,
    /// Words mode: reduced words at the bound are not closed under
    /// composition. Localized mode: some normal form is longer than the bound.
    pub bound_exceeded: bool,
    components: usize,
}

impl PresentedGroupoid {
    pub fn source(&self) -> &Arc<FiniteCategory> {
        &self.source
    }

    /// The groupoid itself, when the construction closed.
    pub fn category(&self) -> Option<&Arc<FiniteCategory>> {
        self.category.as_ref()
    }

    /// Representative path for each arrow, indexed like the arrows of
    /// [`Self::category`] when present.
    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn length_of(&self, arrow: ArrowId) -> usize {
        self.words[arrow].len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// The canonical functor from the source category, when it exists.
    pub fn unit_functor(&self) -> Option<Functor> {
        let cat = self.category.clone()?;
        let arrows = self.unit.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(Functor::new_unchecked(
            self.source.clone(),
            cat,
            self.source.objects().collect(),
            arrows,
        ))
    }

    /// Evaluates a path of source letters inside the groupoid.
    pub fn eval(&self, start: ObjId, letters: &[Letter]) -> Option<ArrowId> {
        let cat = self.category.as_ref()?;
        let mut acc = cat.identity(start);
        for l in letters {
            let image = self.unit[l.arrow]?;
            let step = if l.inverse {
                cat.inverse(image)?
            } else {
                image
            };
            acc = cat.try_compose(step, acc)?;
        }
        Some(acc)
    }

    /// The functor induced by `f` between two fundamental groupoids.
    pub fn induced(&self, f: &Functor, target: &PresentedGroupoid) -> Option<Functor> {
        let source_cat = self.category.clone()?;
        let target_cat = target.category.clone()?;
        let mut arrows = Vec::with_capacity(self.words.len());
        for w in &self.words {
            let mapped: Vec<Letter> = w
                .letters
                .iter()
                .map(|l| Letter {
                    arrow: f.arr(l.arrow),
                    inverse: l.inverse,
                })
                .collect();
            arrows.push(target.eval(f.obj(w.start), &mapped)?);
        }
        Some(Functor::new_unchecked(
            source_cat,
            target_cat,
            self.source.objects().map(|x| f.obj(x)).collect(),
            arrows,
        ))
    }
}

/// Builds the fundamental groupoid of `cat`.
///
/// In words mode `word_bound` caps the enumerated word length. In localized
/// mode `coset_limit` caps each vertex-group enumeration and `word_bound`
/// only feeds [`PresentedGroupoid::bound_exceeded`].
pub fn pi1(
    cat: &Arc<FiniteCategory>,
    mode: Pi1Mode,
    word_bound: usize,
    coset_limit: usize,
) -> PresentedGroupoid {
    assert!(word_bound >= 1, "word bound must be positive");
    match mode {
        Pi1Mode::Words => words_mode(cat, word_bound),
        Pi1Mode::Localized => localized_mode(cat, word_bound, coset_limit),
    }
}

fn component_count(cat: &FiniteCategory) -> usize {
    let mut uf = UnionFind::new(cat.object_count());
    for f in cat.arrows() {
        uf.union(cat.dom(f), cat.cod(f));
    }
    uf.canonical_labels().1
}

/// Letters leaving `x`, in a fixed order.
fn letters_from(cat: &FiniteCategory, x: ObjId) -> Vec<Letter> {
    let mut out: Vec<Letter> = cat
        .out_arrows(x)
        .iter()
        .filter(|&&f| !cat.is_identity(f))
        .map(|&f| Letter::forward(f))
        .collect();
    out.extend(
        cat.in_arrows(x)
            .iter()
            .filter(|&&f| !cat.is_identity(f) && !cat.is_iso(f))
            .map(|&f| Letter {
                arrow: f,
                inverse: true,
            }),
    );
    out.sort();
    out
}

fn words_mode(cat: &Arc<FiniteCategory>, bound: usize) -> PresentedGroupoid {
    let mut words: Vec<Word> = Vec::new();
    let mut frontier: Vec<Word> = Vec::new();
    let outgoing: Vec<Vec<Letter>> = cat.objects().map(|x| letters_from(cat, x)).collect();
    for x in cat.objects() {
        let w = Word {
            start: x,
            letters: Vec::new(),
        };
        words.push(w.clone());
        frontier.push(w);
    }
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &frontier {
            let end = w.end(cat);
            for &l in &outgoing[end] {
                if w.letters.last().is_some_and(|&top| top.invert(cat) == l) {
                    continue;
                }
                let mut letters = w.letters.clone();
                letters.push(l);
                next.push(Word {
                    start: w.start,
                    letters,
                });
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words.sort_by(|a, b| (a.start, a.len(), &a.letters).cmp(&(b.start, b.len(), &b.letters)));
    let index: HashMap<&Word, ArrowId> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();

    let unit: Vec<Option<ArrowId>> = cat
        .arrows()
        .map(|f| {
            let letters = reduce(cat, &[Letter::forward(f)]);
            index
                .get(&Word {
                    start: cat.dom(f),
                    letters,
                })
                .copied()
        })
        .collect();

    let ends: Vec<ObjId> = words.iter().map(|w| w.end(cat)).collect();
    let mut by_start: Vec<Vec<ArrowId>> = vec![Vec::new(); cat.object_count()];
    for (i, w) in words.iter().enumerate() {
        by_start[w.start].push(i);
    }
    let mut closed = true;
    let mut table: HashMap<(ArrowId, ArrowId), ArrowId> = HashMap::new();
    'outer: for (f, wf) in words.iter().enumerate() {
        for &g in &by_start[ends[f]] {
            let mut letters = wf.letters.clone();
            letters.extend_from_slice(&words[g].letters);
            let letters = reduce(cat, &letters);
            let key = Word {
                start: wf.start,
                letters,
            };
            match index.get(&key) {
                Some(&gf) => {
                    table.insert((g, f), gf);
                }
                None => {
                    closed = false;
                    break 'outer;
                }
            }
        }
    }
    let category = closed.then(|| {
        let endpoints = words
            .iter()
            .zip(&ends)
            .map(|(w, &e)| (w.start, e))
            .collect();
        let identity = cat
            .objects()
            .map(|x| {
                index[&Word {
                    start: x,
                    letters: Vec::new(),
                }]
            })
            .collect();
        let names = words.iter().map(|w| render_word(cat, w)).collect();
        Arc::new(
            FiniteCategory::from_fn(cat.object_count(), endpoints, identity, |g, f| {
                table[&(g, f)]
            })
            .with_names(names),
        )
    });
    PresentedGroupoid {
        mode: Pi1Mode::Words,
        word_bound: bound,
        source: cat.clone(),
        authoritative: closed,
        bound_exceeded: !closed,
        category,
        words,
        unit,
        components: component_count(cat),
    }
}

pub fn render_word(cat: &FiniteCategory, w: &Word) -> String {
    if w.letters.is_empty() {
        return format!("()@{}", w.start);
    }
    let parts: Vec<String> = w
        .letters
        .iter()
        .map(|l| {
            if l.inverse {
                format!("{}^-1", cat.arrow_name(l.arrow))
            } else {
                cat.arrow_name(l.arrow)
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

struct Component {
    objects: Vec<ObjId>,
    /// Tree path from the root to each object, in path order.
    tree_path: HashMap<ObjId, Vec<Letter>>,
    generators: Vec<ArrowId>,
    group: EnumeratedGroup,
}

fn localized_mode(
    cat: &Arc<FiniteCategory>,
    bound: usize,
    coset_limit: usize,
) -> PresentedGroupoid {
    let n = cat.object_count();
    let mut uf = UnionFind::new(n);
    for f in cat.arrows() {
        uf.union(cat.dom(f), cat.cod(f));
    }
    let (label, count) = uf.canonical_labels();
    let mut members: Vec<Vec<ObjId>> = vec![Vec::new(); count];
    for x in cat.objects() {
        members[label[x]].push(x);
    }

    let mut components = Vec::with_capacity(count);
    let mut generator_index: Vec<Option<usize>> = vec![None; cat.arrow_count()];
    let mut tree_arrow = vec![false; cat.arrow_count()];
    let mut failed = false;
    for objects in members {
        let root = objects[0];
        let mut tree_path: HashMap<ObjId, Vec<Letter>> = HashMap::new();
        tree_path.insert(root, Vec::new());
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let steps = cat
                .out_arrows(x)
                .iter()
                .map(|&f| (f, Letter::forward(f), cat.cod(f)))
                .chain(cat.in_arrows(x).iter().map(|&f| {
                    (
                        f,
                        Letter {
                            arrow: f,
                            inverse: true,
                        },
                        cat.dom(f),
                    )
                }));
            let steps: Vec<_> = steps.collect();
            for (f, letter, y) in steps {
                if !tree_path.contains_key(&y) {
                    let mut path = tree_path[&x].clone();
                    path.push(letter);
                    tree_path.insert(y, path);
                    tree_arrow[f] = true;
                    queue.push_back(y);
                }
            }
        }
        let mut generators = Vec::new();
        for &x in &objects {
            for &f in cat.out_arrows(x) {
                if !cat.is_identity(f) && !tree_arrow[f] {
                    generator_index[f] = Some(generators.len());
                    generators.push(f);
                }
            }
        }
        let gen_word = |f: ArrowId| -> Vec<usize> {
            generator_index[f].map(|i| vec![2 * i]).unwrap_or_default()
        };
        let mut relators = Vec::new();
        for &x in &objects {
            for &f in cat.out_arrows(x) {
                for &g in cat.out_arrows(cat.cod(f)) {
                    let gf = cat.compose(g, f);
                    let mut r = gen_word(f);
                    r.extend(gen_word(g));
                    r.extend(gen_word(gf).into_iter().rev().map(|c| c ^ 1));
                    let r = free_reduce_cols(r);
                    if !r.is_empty() {
                        relators.push(r);
                    }
                }
            }
        }
        relators.sort();
        relators.dedup();
        let group = match coset::enumerate(generators.len(), &relators, coset_limit) {
            Some(g) => g,
            None => {
                failed = true;
                break;
            }
        };
        components.push(Component {
            objects,
            tree_path,
            generators,
            group,
        });
    }

    if failed {
        return PresentedGroupoid {
            mode: Pi1Mode::Localized,
            word_bound: bound,
            source: cat.clone(),
            category: None,
            words: Vec::new(),
            unit: vec![None; cat.arrow_count()],
            authoritative: false,
            bound_exceeded: true,
            components: count,
        };
    }

    // Arrows (a, b, g) with g in the vertex group at the component root.
    let mut endpoints = Vec::new();
    let mut words = Vec::new();
    let mut arrow_of: HashMap<(ObjId, ObjId, usize), ArrowId> = HashMap::new();
    let mut owner = vec![0usize; n];
    let mut max_len = 0;
    for (ci, comp) in components.iter().enumerate() {
        for &x in &comp.objects {
            owner[x] = ci;
        }
        for &a in &comp.objects {
            for &b in &comp.objects {
                for g in 0..comp.group.order() {
                    let mut letters = invert_path(cat, &comp.tree_path[&a]);
                    for &col in &comp.group.normal_form[g] {
                        let f = comp.generators[col / 2];
                        let loop_letters = generator_loop(cat, &comp.tree_path, f);
                        if col % 2 == 0 {
                            letters.extend(loop_letters);
                        } else {
                            letters.extend(invert_path(cat, &loop_letters));
                        }
                    }
                    letters.extend(comp.tree_path[&b].iter().copied());
                    let letters = reduce(cat, &letters);
                    max_len = max_len.max(comp.group.normal_form[g].len());
                    arrow_of.insert((a, b, g), endpoints.len());
                    endpoints.push((a, b));
                    words.push(Word { start: a, letters });
                }
            }
        }
    }
    let element: Vec<usize> = {
        let mut e = vec![0; endpoints.len()];
        for (&(_, _, g), &id) in &arrow_of {
            e[id] = g;
        }
        e
    };
    let identity: Vec<ArrowId> = cat.objects().map(|x| arrow_of[&(x, x, 0)]).collect();
    let names = words.iter().map(|w| render_word(cat, w)).collect();
    let groupoid = FiniteCategory::from_fn(n, endpoints.clone(), identity, |g, f| {
        let (a, _) = endpoints[f];
        let (_, c) = endpoints[g];
        let comp = &components[owner[a]];
        arrow_of[&(a, c, comp.group.mul(element[f], element[g]))]
    })
    .with_names(names);
    let unit = cat
        .arrows()
        .map(|f| {
            let (x, y) = (cat.dom(f), cat.cod(f));
            let comp = &components[owner[x]];
            let g = match generator_index[f] {
                Some(i) => comp.group.apply(0, &[2 * i]),
                None => 0,
            };
            Some(arrow_of[&(x, y, g)])
        })
        .collect();
    PresentedGroupoid {
        mode: Pi1Mode::Localized,
        word_bound: bound,
        source: cat.clone(),
        category: Some(Arc::new(groupoid)),
        words,
        unit,
        authoritative: true,
        bound_exceeded: max_len > bound,
        components: count,
    }
}

fn free_reduce_cols(word: Vec<usize>) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::with_capacity(word.len());
    for c in word {
        if out.last() == Some(&(c ^ 1)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

fn invert_path(cat: &FiniteCategory, path: &[Letter]) -> Vec<Letter> {
    path.iter().rev().map(|l| l.invert(cat)).collect()
}

/// The loop at the root through generator `f`: tree path to `dom f`, then
/// `f`, then back along the tree.
fn generator_loop(
    cat: &FiniteCategory,
    tree_path: &HashMap<ObjId, Vec<Letter>>,
    f: ArrowId,
) -> Vec<Letter> {
    let mut letters = tree_path[&cat.dom(f)].clone();
    letters.push(Letter::forward(f));
    letters.extend(invert_path(cat, &tree_path[&cat.cod(f)]));
    letters
}

#[cfg(test)]
mod tests {
    use super::super::classify::classify_functor;
    use super::super::constructions::*;
    use super::*;

    fn arc(c: FiniteCategory) -> Arc<FiniteCategory> {
        Arc::new(c)
    }

    #[test]
    fn words_mode_on_the_arrow_category() {
        let i = arc(arrow_category());
        let p = pi1(&i, Pi1Mode::Words, 4, 1000);
        assert!(p.authoritative);
        let g = p.category().unwrap();
        assert_eq!(g.arrow_count(), 4);
        assert_eq!(g.hom(0, 1).len(), 1);
        assert_eq!(g.hom(0, 0).len(), 1);
        assert!(g.arrows().all(|f| g.is_iso(f)));
        assert!(g.check_laws().is_empty());
        let j = arc(walking_iso());
        let iso = Functor::new(
            g.clone(),
            j,
            vec![0, 1],
            g.arrows()
                .map(|f| {
                    let (a, b) = (g.dom(f), g.cod(f));
                    a * 2 + b
                })
                .collect(),
        )
        .unwrap();
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn words_mode_on_a_cyclic_group_does_not_close() {
        // a and a² are mutually inverse letters, so reduced words form ℤ.
        let c3 = arc(cyclic_group(3));
        let p = pi1(&c3, Pi1Mode::Words, 4, 1000);
        assert!(!p.authoritative);
        assert!(p.bound_exceeded);
    }

    #[test]
    fn localized_mode_fixes_groups() {
        for n in 1..6 {
            let c = arc(cyclic_group(n));
            let p = pi1(&c, Pi1Mode::Localized, 4, 1000);
            assert!(p.authoritative);
            let eta = p.unit_functor().unwrap();
            assert!(eta.violations().is_empty());
            assert!(eta.is_isomorphism());
        }
    }

    #[test]
    fn localized_square_matches_product() {
        let i = arc(arrow_category());
        let prod = Product::new(&i, &i);
        let square = pi1(&prod.category, Pi1Mode::Localized, 4, 1000);
        let side = pi1(&i, Pi1Mode::Localized, 4, 1000);
        let g = square.category().unwrap();
        assert_eq!((g.object_count(), g.arrow_count()), (4, 16));
        let side_cat = side.category().unwrap().clone();
        let target = Product::new(&side_cat, &side_cat);
        let l = square.induced(&prod.left, &side).unwrap();
        let r = square.induced(&prod.right, &side).unwrap();
        let comparison = target.pair(&l, &r);
        assert!(comparison.violations().is_empty());
        assert!(comparison.is_isomorphism());
    }

    #[test]
    fn words_mode_square_is_not_closed() {
        let i = arc(arrow_category());
        let prod = Product::new(&i, &i);
        let square = pi1(&prod.category, Pi1Mode::Words, 4, 1000);
        assert!(!square.authoritative);
    }

    #[test]
    fn unit_functor_is_valid_and_represents_words() {
        let i = arc(chain(3));
        let p = pi1(&i, Pi1Mode::Localized, 4, 1000);
        let g = p.category().unwrap();
        assert_eq!(g.arrow_count(), 9);
        for (id, w) in p.words().iter().enumerate() {
            assert_eq!(p.eval(w.start, &w.letters), Some(id));
        }
        let eta = p.unit_functor().unwrap();
        assert!(eta.violations().is_empty());
        let c = classify_functor(&eta);
        assert!(c.groupoidal_equivalence);
    }

    #[test]
    fn reduction_is_confluent_on_parallel_pair() {
        // two parallel arrows a, b: 0 → 1
        let raw = crate::fincat::RawCategory {
            objects: 2,
            arrows: vec![
                ("id0".into(), 0, 0),
                ("id1".into(), 1, 1),
                ("a".into(), 0, 1),
                ("b".into(), 0, 1),
            ],
            identities: vec!["id0".into(), "id1".into()],
            compose: vec![
                ("id0".into(), "id0".into(), "id0".into()),
                ("id1".into(), "id1".into(), "id1".into()),
                ("id1".into(), "a".into(), "a".into()),
                ("id1".into(), "b".into(), "b".into()),
                ("a".into(), "id0".into(), "a".into()),
                ("b".into(), "id0".into(), "b".into()),
            ],
        };
        let cat = crate::fincat::validate_category(&raw).unwrap();
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
        let mut word = [0usize; 6];
        for len in 0..=6 {
            for code in 0..4usize.pow(len as u32) {
                let mut c = code;
                for slot in word.iter_mut().take(len) {
                    *slot = c % 4;
                    c /= 4;
                }
                let letters: Vec<Letter> = word[..len].iter().map(|&k| alphabet[k]).collect();
                let forms = normal_forms_all_orders(&cat, &letters);
                assert_eq!(forms.len(), 1);
                assert!(forms.contains(&reduce(&cat, &letters)));
            }
        }
    }
}
