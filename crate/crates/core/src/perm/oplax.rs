use std::fmt;

use super::PermutativeStructure;
use crate::fincat::{ArrowId, Functor, ObjId};

/// An oplax symmetric monoidal functor between strict structures.
/// `lambda[a·n + b]: F(a ⊗ b) → F(a) ⊗ F(b)`, `epsilon: F(1) → 1`.
#[derive(Clone, Debug)]
pub struct OplaxData {
    pub functor: Functor,
    pub lambda: Vec<ArrowId>,
    pub epsilon: ArrowId,
}

impl OplaxData {
    /// Identity structure maps; valid exactly when the functor is strict.
    pub fn strict(functor: Functor, target: &PermutativeStructure) -> OplaxData {
        let n = functor.source().object_count();
        let lambda = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                let fa = functor.obj(a);
                let fb = functor.obj(b);
                target
                    .tensor_obj(fa, fb)
                    .map(|x| target.base().identity(x))
                    .unwrap_or(usize::MAX)
            })
            .collect();
        let epsilon = target.base().identity(target.unit());
        OplaxData {
            functor,
            lambda,
            epsilon,
        }
    }

    fn lambda(&self, a: ObjId, b: ObjId) -> ArrowId {
        self.lambda[a * self.functor.source().object_count() + b]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OplaxAxiom {
    Endpoints,
    Naturality,
    /// `(ε ⊗ id) ∘ λ(1, c) = id`
    Ol1,
    /// `γ ∘ λ(a, b) = λ(b, a) ∘ F(γ)`
    Ol2,
    /// `(λ ⊗ id) ∘ λ(a ⊗ b, c) = (id ⊗ λ) ∘ λ(a, b ⊗ c)`
    Ol3,
}

impl fmt::Display for OplaxAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OplaxAxiom::Endpoints => "endpoints",
            OplaxAxiom::Naturality => "naturality",
            OplaxAxiom::Ol1 => "OL.1",
            OplaxAxiom::Ol2 => "OL.2",
            OplaxAxiom::Ol3 => "OL.3",
        })
    }
}

/// The first failing tuple for one axiom, with the two legs of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplaxFailure {
    pub axiom: OplaxAxiom,
    /// Object indices (arrow ids for naturality).
    pub tuple: Vec<usize>,
    pub left: Option<ArrowId>,
    pub right: Option<ArrowId>,
}

/// Checks every diagram on every tuple; returns the first failure per axiom.
pub fn validate_oplax(
    p: &PermutativeStructure,
    q: &PermutativeStructure,
    d: &OplaxData,
) -> Vec<OplaxFailure> {
    let f = &d.functor;
    let (c, e) = (&**p.base(), &**q.base());
    let mut out = Vec::new();
    let fail = |axiom, tuple: Vec<usize>, left, right| OplaxFailure {
        axiom,
        tuple,
        left,
        right,
    };

    for a in c.objects() {
        for b in c.objects() {
            let Some(ab) = p.tensor_obj(a, b) else {
                continue;
            };
            let l = d.lambda(a, b);
            let ok = l < e.arrow_count()
                && e.dom(l) == f.obj(ab)
                && Some(e.cod(l)) == q.tensor_obj(f.obj(a), f.obj(b));
            if !ok {
                out.push(fail(OplaxAxiom::Endpoints, vec![a, b], Some(l), None));
                return out;
            }
        }
    }
    if e.dom(d.epsilon) != f.obj(p.unit()) || e.cod(d.epsilon) != q.unit() {
        out.push(fail(
            OplaxAxiom::Endpoints,
            vec![p.unit()],
            Some(d.epsilon),
            None,
        ));
        return out;
    }

    'nat: for u in c.arrows() {
        for v in c.arrows() {
            let Some(uv) = p.tensor_arr(u, v) else {
                continue;
            };
            let left = e.compose(d.lambda(c.cod(u), c.cod(v)), f.arr(uv));
            let right = q
                .tensor_arr(f.arr(u), f.arr(v))
                .and_then(|fu_fv| e.try_compose(fu_fv, d.lambda(c.dom(u), c.dom(v))));
            if right != Some(left) {
                out.push(fail(OplaxAxiom::Naturality, vec![u, v], Some(left), right));
                break 'nat;
            }
        }
    }

    let unit = p.unit();
    for x in c.objects() {
        let l = d.lambda(unit, x);
        let left = q
            .tensor_arr(d.epsilon, e.identity(f.obj(x)))
            .and_then(|t| e.try_compose(t, l));
        let right = Some(e.identity(f.obj(x)));
        if left != right {
            out.push(fail(OplaxAxiom::Ol1, vec![unit, x], left, right));
            break;
        }
    }

    'ol2: for a in c.objects() {
        for b in c.objects() {
            let (Some(_), Some(g)) = (p.tensor_obj(a, b), p.symmetry(a, b)) else {
                continue;
            };
            let sym = q.symmetry(f.obj(a), f.obj(b));
            let left = sym.and_then(|s| e.try_compose(s, d.lambda(a, b)));
            let right = e.try_compose(d.lambda(b, a), f.arr(g));
            if left != right || left.is_none() {
                out.push(fail(OplaxAxiom::Ol2, vec![a, b], left, right));
                break 'ol2;
            }
        }
    }

    'ol3: for a in c.objects() {
        for b in c.objects() {
            let Some(ab) = p.tensor_obj(a, b) else {
                continue;
            };
            for x in c.objects() {
                let (Some(bx), Some(_)) = (p.tensor_obj(b, x), p.tensor_obj(ab, x)) else {
                    continue;
                };
                let left = q
                    .tensor_arr(d.lambda(a, b), e.identity(f.obj(x)))
                    .and_then(|t| e.try_compose(t, d.lambda(ab, x)));
                let right = q
                    .tensor_arr(e.identity(f.obj(a)), d.lambda(b, x))
                    .and_then(|t| e.try_compose(t, d.lambda(a, bx)));
                if left != right || left.is_none() {
                    out.push(fail(OplaxAxiom::Ol3, vec![a, b, x], left, right));
                    break 'ol3;
                }
            }
        }
    }
    out
}
