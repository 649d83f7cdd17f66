//! Strict symmetric monoidal functors and monoidal natural transformations,
//! enumerated by branching on the least undetermined object or arrow and
//! propagating everything forced by strictness.

use std::sync::Arc;

use super::PermutativeStructure;
use crate::fincat::{ArrowId, FiniteCategory, Functor, FunctorCategory, ObjId};
use crate::{Error, Limits, Result};

struct Ctx<'a> {
    p: &'a PermutativeStructure,
    q: &'a PermutativeStructure,
    limit: usize,
}

fn propagate_objects(ctx: &Ctx, obj: &mut [Option<ObjId>], start: ObjId) -> bool {
    let (p, q) = (ctx.p, ctx.q);
    let n = p.base().object_count();
    let mut work = vec![start];
    while let Some(x) = work.pop() {
        for y in 0..n {
            let Some(fy) = obj[y] else { continue };
            let fx = obj[x].unwrap();
            for (a, b, fa, fb) in [(x, y, fx, fy), (y, x, fy, fx)] {
                let Some(ab) = p.tensor_obj(a, b) else {
                    continue;
                };
                let Some(v) = q.tensor_obj(fa, fb) else {
                    return false;
                };
                match obj[ab] {
                    Some(w) if w != v => return false,
                    Some(_) => {}
                    None => {
                        obj[ab] = Some(v);
                        work.push(ab);
                    }
                }
            }
        }
    }
    true
}

/// Assigns `F(f) = v` and everything it forces. Returns false on conflict.
fn assign_arrow(
    ctx: &Ctx,
    obj: &[ObjId],
    arr: &mut [Option<ArrowId>],
    f: ArrowId,
    v: ArrowId,
) -> bool {
    let (p, q) = (ctx.p, ctx.q);
    let (c, d) = (&**p.base(), &**q.base());
    let mut work = vec![(f, v)];
    while let Some((f, v)) = work.pop() {
        if d.dom(v) != obj[c.dom(f)] || d.cod(v) != obj[c.cod(f)] {
            return false;
        }
        match arr[f] {
            Some(w) if w != v => return false,
            Some(_) => continue,
            None => arr[f] = Some(v),
        }
        for &g in c.out_arrows(c.cod(f)) {
            if let Some(fg) = arr[g] {
                work.push((c.compose(g, f), d.compose(fg, v)));
            }
        }
        for &h in c.in_arrows(c.dom(f)) {
            if let Some(fh) = arr[h] {
                work.push((c.compose(f, h), d.compose(v, fh)));
            }
        }
        for g in c.arrows() {
            let Some(fg) = arr[g] else { continue };
            for (a, b, fa, fb) in [(f, g, v, fg), (g, f, fg, v)] {
                if let Some(ab) = p.tensor_arr(a, b) {
                    match q.tensor_arr(fa, fb) {
                        Some(w) => work.push((ab, w)),
                        None => return false,
                    }
                }
            }
        }
        if let Some(inv) = c.inverse(f) {
            match d.inverse(v) {
                Some(w) => work.push((inv, w)),
                None => return false,
            }
        }
    }
    true
}

/// All strict symmetric monoidal functors `P → Q`, in branching order.
pub fn enumerate_strict_functors(
    p: &PermutativeStructure,
    q: &PermutativeStructure,
    limit: usize,
) -> Result<Vec<Functor>> {
    let ctx = Ctx { p, q, limit };
    let n = p.base().object_count();
    let mut obj = vec![None; n];
    obj[p.unit()] = Some(q.unit());
    let mut out = Vec::new();
    if propagate_objects(&ctx, &mut obj, p.unit()) {
        branch_objects(&ctx, obj, &mut out)?;
    }
    Ok(out)
}

fn branch_objects(ctx: &Ctx, obj: Vec<Option<ObjId>>, out: &mut Vec<Functor>) -> Result<()> {
    match obj.iter().position(Option::is_none) {
        Some(x) => {
            for y in ctx.q.base().objects() {
                let mut next = obj.clone();
                next[x] = Some(y);
                if propagate_objects(ctx, &mut next, x) {
                    branch_objects(ctx, next, out)?;
                }
            }
            Ok(())
        }
        None => {
            let obj: Vec<ObjId> = obj.into_iter().map(Option::unwrap).collect();
            let (p, q) = (ctx.p, ctx.q);
            let c = p.base();
            let mut arr = vec![None; c.arrow_count()];
            for x in c.objects() {
                if !assign_arrow(
                    ctx,
                    &obj,
                    &mut arr,
                    c.identity(x),
                    q.base().identity(obj[x]),
                ) {
                    return Ok(());
                }
            }
            for a in c.objects() {
                for b in c.objects() {
                    if let Some(s) = p.symmetry(a, b) {
                        let Some(t) = q.symmetry(obj[a], obj[b]) else {
                            return Ok(());
                        };
                        if !assign_arrow(ctx, &obj, &mut arr, s, t) {
                            return Ok(());
                        }
                    }
                }
            }
            branch_arrows(ctx, &obj, arr, out)
        }
    }
}

fn branch_arrows(
    ctx: &Ctx,
    obj: &[ObjId],
    arr: Vec<Option<ArrowId>>,
    out: &mut Vec<Functor>,
) -> Result<()> {
    let (p, q) = (ctx.p, ctx.q);
    let c = p.base();
    match arr.iter().position(Option::is_none) {
        Some(f) => {
            for &v in q.base().hom(obj[c.dom(f)], obj[c.cod(f)]) {
                let mut next = arr.clone();
                if assign_arrow(ctx, obj, &mut next, f, v) {
                    branch_arrows(ctx, obj, next, out)?;
                }
            }
            Ok(())
        }
        None => {
            let functor = Functor::new_unchecked(
                c.clone(),
                q.base().clone(),
                obj.to_vec(),
                arr.into_iter().map(Option::unwrap).collect(),
            );
            if functor.violations().is_empty() && is_strict(p, q, &functor) {
                if out.len() >= ctx.limit {
                    return Err(Error::SizeLimit {
                        what: "strict functors",
                        limit: ctx.limit,
                    });
                }
                out.push(functor);
            }
            Ok(())
        }
    }
}

/// Whether `f` preserves unit, tensor and symmetry on the nose wherever the
/// source tensor is defined.
pub fn is_strict(p: &PermutativeStructure, q: &PermutativeStructure, f: &Functor) -> bool {
    let c = p.base();
    if f.obj(p.unit()) != q.unit() {
        return false;
    }
    for a in c.objects() {
        for b in c.objects() {
            if let Some(ab) = p.tensor_obj(a, b) {
                if q.tensor_obj(f.obj(a), f.obj(b)) != Some(f.obj(ab)) {
                    return false;
                }
                let s = p.symmetry(a, b).expect("symmetry defined with tensor");
                if q.symmetry(f.obj(a), f.obj(b)) != Some(f.arr(s)) {
                    return false;
                }
            }
        }
    }
    c.arrows().all(|u| {
        c.arrows().all(|v| match p.tensor_arr(u, v) {
            Some(uv) => q.tensor_arr(f.arr(u), f.arr(v)) == Some(f.arr(uv)),
            None => true,
        })
    })
}

/// All monoidal natural transformations `F ⇒ G` between strict functors.
pub fn enumerate_monoidal_transformations(
    p: &PermutativeStructure,
    q: &PermutativeStructure,
    f: &Functor,
    g: &Functor,
) -> Vec<Vec<ArrowId>> {
    let c = p.base();
    let d = q.base();
    let n = c.object_count();
    let mut comp: Vec<Option<ArrowId>> = vec![None; n];
    let mut out = Vec::new();

    fn propagate(
        p: &PermutativeStructure,
        q: &PermutativeStructure,
        comp: &mut [Option<ArrowId>],
        start: ObjId,
    ) -> bool {
        let n = comp.len();
        let mut work = vec![start];
        while let Some(x) = work.pop() {
            for y in 0..n {
                let (Some(cx), Some(cy)) = (comp[x], comp[y]) else {
                    continue;
                };
                for (a, b, ca, cb) in [(x, y, cx, cy), (y, x, cy, cx)] {
                    let Some(ab) = p.tensor_obj(a, b) else {
                        continue;
                    };
                    let Some(v) = q.tensor_arr(ca, cb) else {
                        return false;
                    };
                    match comp[ab] {
                        Some(w) if w != v => return false,
                        Some(_) => {}
                        None => {
                            comp[ab] = Some(v);
                            work.push(ab);
                        }
                    }
                }
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        p: &PermutativeStructure,
        q: &PermutativeStructure,
        c: &FiniteCategory,
        d: &FiniteCategory,
        f: &Functor,
        g: &Functor,
        comp: Vec<Option<ArrowId>>,
        out: &mut Vec<Vec<ArrowId>>,
    ) {
        match comp.iter().position(Option::is_none) {
            Some(x) => {
                for &t in d.hom(f.obj(x), g.obj(x)) {
                    let mut next = comp.clone();
                    next[x] = Some(t);
                    if propagate(p, q, &mut next, x) {
                        go(p, q, c, d, f, g, next, out);
                    }
                }
            }
            None => {
                let comp: Vec<ArrowId> = comp.into_iter().map(Option::unwrap).collect();
                let endpoints = c
                    .objects()
                    .all(|x| d.dom(comp[x]) == f.obj(x) && d.cod(comp[x]) == g.obj(x));
                let natural = endpoints
                    && c.arrows().all(|a| {
                        d.compose(g.arr(a), comp[c.dom(a)]) == d.compose(comp[c.cod(a)], f.arr(a))
                    });
                if natural {
                    out.push(comp);
                }
            }
        }
    }

    let unit = p.unit();
    if f.obj(unit) != g.obj(unit) {
        return out;
    }
    comp[unit] = Some(d.identity(f.obj(unit)));
    if propagate(p, q, &mut comp, unit) {
        go(p, q, c, d, f, g, comp, &mut out);
    }
    out
}

#[derive(Clone, Debug)]
pub struct StrictFunctorCategory {
    pub inner: FunctorCategory,
}

impl StrictFunctorCategory {
    pub fn category(&self) -> &Arc<FiniteCategory> {
        &self.inner.category
    }

    pub fn functors(&self) -> &[Functor] {
        &self.inner.functors
    }
}

/// `Hom⊗(P, Q)`: strict symmetric monoidal functors and monoidal natural
/// transformations.
pub fn strict_sm_functor_category(
    p: &PermutativeStructure,
    q: &PermutativeStructure,
    limits: &Limits,
) -> Result<StrictFunctorCategory> {
    let functors = enumerate_strict_functors(p, q, limits.max_functors)?;
    let inner = crate::fincat::functor_cat::assemble_with(functors, limits, |f, g| {
        enumerate_monoidal_transformations(p, q, f, g)
    })?;
    Ok(StrictFunctorCategory { inner })
}

/// Evaluation at an object of the source: `F ↦ F(x)`, `α ↦ α_x`.
pub fn evaluation(cat: &StrictFunctorCategory, target: &Arc<FiniteCategory>, at: ObjId) -> Functor {
    let inner = &cat.inner;
    Functor::new_unchecked(
        inner.category.clone(),
        target.clone(),
        inner.functors.iter().map(|f| f.obj(at)).collect(),
        inner
            .transformations
            .iter()
            .map(|t| t.components[at])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::super::oplax::{validate_oplax, OplaxData};
    use super::super::{corpus, free_permutative};
    use super::*;
    use crate::fincat::classify_functor;
    use crate::fincat::constructions::terminal;

    #[test]
    fn evaluation_from_free_on_a_point() {
        let free = free_permutative(&terminal(), 3, &Limits::default()).unwrap();
        let g = free.generators().unwrap()[0];
        for (name, q) in corpus::groupoids() {
            let hom = strict_sm_functor_category(&free, &q, &Limits::default()).unwrap();
            let ev = evaluation(&hom, q.base(), g);
            assert!(ev.violations().is_empty(), "{name}");
            assert!(classify_functor(&ev).equivalence, "{name}");
        }
    }

    #[test]
    fn into_terminal_is_terminal() {
        let t = corpus::terminal_structure();
        for (_, p) in corpus::all() {
            let hom = strict_sm_functor_category(&p, &t, &Limits::default()).unwrap();
            assert_eq!(hom.category().object_count(), 1);
            assert_eq!(hom.category().arrow_count(), 1);
        }
    }

    #[test]
    fn strict_functors_pass_the_oplax_check() {
        let all = corpus::all();
        for (_, p) in &all {
            for (_, q) in &all {
                for f in enumerate_strict_functors(p, q, 10_000).unwrap() {
                    let d = OplaxData::strict(f, q);
                    assert!(validate_oplax(p, q, &d).is_empty());
                }
            }
        }
    }

    #[test]
    fn endofunctors_of_z3() {
        // group endomorphisms of ℤ/3
        let p = corpus::discrete_cyclic(3);
        assert_eq!(enumerate_strict_functors(&p, &p, 100).unwrap().len(), 3);
        let q = corpus::one_object_cyclic(3);
        assert_eq!(enumerate_strict_functors(&q, &q, 100).unwrap().len(), 3);
    }
}
