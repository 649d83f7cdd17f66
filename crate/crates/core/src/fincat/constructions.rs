//! Standard small categories and the cartesian structure.

use std::sync::Arc;

use super::{ArrowId, FiniteCategory, Functor, ObjId};

pub fn empty() -> FiniteCategory {
    FiniteCategory::from_fn(0, Vec::new(), Vec::new(), |_, _| unreachable!())
}

pub fn terminal() -> FiniteCategory {
    discrete(1)
}

pub fn discrete(n: usize) -> FiniteCategory {
    FiniteCategory::from_fn(
        n,
        (0..n).map(|x| (x, x)).collect(),
        (0..n).collect(),
        |g, _| g,
    )
    .with_names((0..n).map(|x| format!("id{x}")).collect())
}

/// The arrow category `0 → 1`: arrows `id0`, `id1`, `f`.
pub fn arrow_category() -> FiniteCategory {
    chain(2).with_names(vec!["id0".into(), "id1".into(), "f".into()])
}

/// Two objects and a unique arrow between any two of them.
pub fn walking_iso() -> FiniteCategory {
    indiscrete(2).with_names(vec!["id0".into(), "f".into(), "g".into(), "id1".into()])
}

/// The poset `0 < 1 < … < n-1`. Identities come first, then arrows `i → j`
/// for `i < j` in lexicographic order.
pub fn chain(n: usize) -> FiniteCategory {
    let mut endpoints: Vec<(ObjId, ObjId)> = (0..n).map(|x| (x, x)).collect();
    for i in 0..n {
        for j in i + 1..n {
            endpoints.push((i, j));
        }
    }
    let index = |a: ObjId, b: ObjId| endpoints.iter().position(|&e| e == (a, b)).unwrap();
    let names = endpoints
        .iter()
        .map(|&(a, b)| {
            if a == b {
                format!("id{a}")
            } else {
                format!("a{a}_{b}")
            }
        })
        .collect();
    FiniteCategory::from_fn(n, endpoints.clone(), (0..n).collect(), |g, f| {
        index(endpoints[f].0, endpoints[g].1)
    })
    .with_names(names)
}

/// `n` objects with exactly one arrow `a → b` for every pair, numbered `a·n + b`.
pub fn indiscrete(n: usize) -> FiniteCategory {
    let endpoints = (0..n * n).map(|i| (i / n, i % n)).collect();
    let identity = (0..n).map(|x| x * n + x).collect();
    FiniteCategory::from_fn(n, endpoints, identity, |g, f| (f / n) * n + g % n)
}

/// One object whose arrows are the elements `0..order` of a monoid with
/// identity `unit`; `mul(g, f)` is the composite `g ∘ f`.
pub fn one_object(
    order: usize,
    unit: usize,
    mul: impl Fn(usize, usize) -> usize,
) -> FiniteCategory {
    FiniteCategory::from_fn(1, vec![(0, 0); order], vec![unit], mul)
        .with_names((0..order).map(|g| format!("g{g}")).collect())
}

pub fn cyclic_group(n: usize) -> FiniteCategory {
    one_object(n, 0, |g, f| (g + f) % n)
}

/// Named categories with at most four objects.
pub fn small_corpus() -> Vec<(&'static str, Arc<FiniteCategory>)> {
    let arrow = Arc::new(arrow_category());
    let iso = Arc::new(walking_iso());
    vec![
        ("empty", Arc::new(empty())),
        ("terminal", Arc::new(terminal())),
        ("discrete2", Arc::new(discrete(2))),
        ("arrow", arrow.clone()),
        ("walking_iso", iso.clone()),
        ("chain3", Arc::new(chain(3))),
        ("indiscrete3", Arc::new(indiscrete(3))),
        ("z2", Arc::new(cyclic_group(2))),
        ("z3", Arc::new(cyclic_group(3))),
        ("arrow_squared", Product::new(&arrow, &arrow).category),
        (
            "iso_plus_point",
            Coproduct::new(&iso, &Arc::new(terminal())).category,
        ),
    ]
}

/// A binary product with its projections. Object `(a, b)` has index
/// `a·|D| + b`; arrow `(f, g)` has index `f·|D₁| + g`.
#[derive(Clone, Debug)]
pub struct Product {
    pub category: Arc<FiniteCategory>,
    pub left: Functor,
    pub right: Functor,
}

impl Product {
    pub fn new(c: &Arc<FiniteCategory>, d: &Arc<FiniteCategory>) -> Product {
        let category = Arc::new(product_category(c, d));
        let (no, na) = (d.object_count(), d.arrow_count());
        let left = Functor::new_unchecked(
            category.clone(),
            c.clone(),
            category.objects().map(|x| x / no).collect(),
            category.arrows().map(|f| f / na).collect(),
        );
        let right = Functor::new_unchecked(
            category.clone(),
            d.clone(),
            category.objects().map(|x| x % no).collect(),
            category.arrows().map(|f| f % na).collect(),
        );
        Product {
            category,
            left,
            right,
        }
    }

    pub fn object(&self, a: ObjId, b: ObjId) -> ObjId {
        a * self.right.target().object_count() + b
    }

    pub fn arrow(&self, f: ArrowId, g: ArrowId) -> ArrowId {
        f * self.right.target().arrow_count() + g
    }

    /// The functor `⟨F, G⟩` into the product.
    pub fn pair(&self, f: &Functor, g: &Functor) -> Functor {
        let source = f.source().clone();
        Functor::new_unchecked(
            source.clone(),
            self.category.clone(),
            source
                .objects()
                .map(|x| self.object(f.obj(x), g.obj(x)))
                .collect(),
            source
                .arrows()
                .map(|a| self.arrow(f.arr(a), g.arr(a)))
                .collect(),
        )
    }
}

pub fn product_category(c: &FiniteCategory, d: &FiniteCategory) -> FiniteCategory {
    let (no, na) = (d.object_count(), d.arrow_count());
    let mut endpoints = Vec::with_capacity(c.arrow_count() * na);
    for f in c.arrows() {
        for g in d.arrows() {
            endpoints.push((c.dom(f) * no + d.dom(g), c.cod(f) * no + d.cod(g)));
        }
    }
    let identity = (0..c.object_count() * no)
        .map(|x| c.identity(x / no) * na + d.identity(x % no))
        .collect();
    let mut cat = FiniteCategory::from_fn(c.object_count() * no, endpoints, identity, |g, f| {
        c.compose(g / na, f / na) * na + d.compose(g % na, f % na)
    });
    if c.names().is_some() || d.names().is_some() {
        let names = (0..c.arrow_count() * na)
            .map(|f| format!("({},{})", c.arrow_name(f / na), d.arrow_name(f % na)))
            .collect();
        cat = cat.with_names(names);
    }
    cat
}

/// Disjoint union with its two injections. The objects and arrows of `D`
/// follow those of `C`.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub category: Arc<FiniteCategory>,
    pub left: Functor,
    pub right: Functor,
}

impl Coproduct {
    pub fn new(c: &Arc<FiniteCategory>, d: &Arc<FiniteCategory>) -> Coproduct {
        let (co, ca) = (c.object_count(), c.arrow_count());
        let mut endpoints: Vec<(ObjId, ObjId)> = c.arrows().map(|f| (c.dom(f), c.cod(f))).collect();
        endpoints.extend(d.arrows().map(|f| (d.dom(f) + co, d.cod(f) + co)));
        let mut identity: Vec<ArrowId> = c.objects().map(|x| c.identity(x)).collect();
        identity.extend(d.objects().map(|x| d.identity(x) + ca));
        let names = c
            .arrows()
            .map(|f| format!("l.{}", c.arrow_name(f)))
            .chain(d.arrows().map(|f| format!("r.{}", d.arrow_name(f))))
            .collect();
        let category = Arc::new(
            FiniteCategory::from_fn(co + d.object_count(), endpoints, identity, |g, f| {
                if f < ca {
                    c.compose(g, f)
                } else {
                    d.compose(g - ca, f - ca) + ca
                }
            })
            .with_names(names),
        );
        let left = Functor::new_unchecked(
            c.clone(),
            category.clone(),
            c.objects().collect(),
            c.arrows().collect(),
        );
        let right = Functor::new_unchecked(
            d.clone(),
            category.clone(),
            d.objects().map(|x| x + co).collect(),
            d.arrows().map(|f| f + ca).collect(),
        );
        Coproduct {
            category,
            left,
            right,
        }
    }
}

/// The functor from a one-object category picking `object` of `target`.
pub fn pick_object(target: &Arc<FiniteCategory>, object: ObjId) -> Functor {
    Functor::new_unchecked(
        Arc::new(terminal()),
        target.clone(),
        vec![object],
        vec![target.identity(object)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_categories_satisfy_the_laws() {
        for cat in [
            empty(),
            terminal(),
            discrete(3),
            arrow_category(),
            walking_iso(),
            chain(4),
            indiscrete(3),
            cyclic_group(5),
        ] {
            assert!(cat.check_laws().is_empty());
        }
    }

    #[test]
    fn chain_counts() {
        let c = chain(4);
        assert_eq!(c.arrow_count(), 10);
        assert_eq!(c.hom(1, 3).len(), 1);
        assert!(c.hom(3, 1).is_empty());
    }

    #[test]
    fn products_and_coproducts() {
        let i = Arc::new(arrow_category());
        let j = Arc::new(walking_iso());
        let p = Product::new(&i, &i);
        assert_eq!(p.category.object_count(), 4);
        assert_eq!(p.category.arrow_count(), 9);
        assert!(p.category.check_laws().is_empty());
        assert!(p.left.violations().is_empty());
        let id = Functor::identity(i.clone());
        let diagonal = p.pair(&id, &id);
        assert!(diagonal.violations().is_empty());

        let s = Coproduct::new(&j, &i);
        assert_eq!(s.category.object_count(), 4);
        assert_eq!(s.category.arrow_count(), 7);
        assert!(s.category.check_laws().is_empty());
        assert!(s.right.violations().is_empty());
    }

    #[test]
    fn walking_iso_is_inverse_closed() {
        let j = walking_iso();
        assert!(j.arrows().all(|f| j.is_iso(f)));
        assert_eq!(j.inverse(1), Some(2));
    }
}
