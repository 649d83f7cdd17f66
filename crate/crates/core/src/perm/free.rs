use std::collections::HashMap;
use std::sync::Arc;

use super::PermutativeStructure;
use crate::fincat::{ArrowId, FiniteCategory, ObjId};
use crate::{Error, Limits, Result};

/// All permutations of `0..r` in lexicographic order.
pub(crate) fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        out.push(current.clone());
        // next permutation
        let Some(i) = (0..r.saturating_sub(1))
            .rev()
            .find(|&i| current[i] < current[i + 1])
        else {
            break;
        };
        let j = (i + 1..r).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// An arrow of the free permutative category: slot `i` of the source goes to
/// slot `perm[i]` of the target along `arrows[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct FreeArrow {
    source: ObjId,
    perm: Vec<usize>,
    arrows: Vec<ArrowId>,
}

/// The free permutative category on `c`, truncated to sequences of length at
/// most `length_bound`. The tensor product is undefined when the lengths add
/// up past the bound. Generators are the sequences of length one.
pub fn free_permutative(
    c: &FiniteCategory,
    length_bound: usize,
    limits: &Limits,
) -> Result<PermutativeStructure> {
    if length_bound == 0 {
        return Err(Error::Invalid("length bound must be positive".into()));
    }
    let mut objects: Vec<Vec<ObjId>> = vec![Vec::new()];
    let mut by_length = vec![vec![0usize]];
    for len in 1..=length_bound {
        let mut level = Vec::new();
        for &prev in &by_length[len - 1] {
            for x in c.objects() {
                let mut s = objects[prev].clone();
                s.push(x);
                level.push(objects.len());
                objects.push(s);
                if objects.len() > limits.max_objects {
                    return Err(Error::SizeLimit {
                        what: "objects",
                        limit: limits.max_objects,
                    });
                }
            }
        }
        by_length.push(level);
    }
    // objects are sorted by length then lexicographically
    let object_index: HashMap<Vec<ObjId>, ObjId> = objects
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();

    let mut arrows: Vec<FreeArrow> = Vec::new();
    let mut endpoints = Vec::new();
    for (src, s) in objects.iter().enumerate() {
        let r = s.len();
        for perm in permutations(r) {
            // arrows[i]: s[i] → anything; the target is read off the codomains
            let choices: Vec<&[ArrowId]> = s.iter().map(|&x| c.out_arrows(x)).collect();
            let mut pick = vec![0usize; r];
            'odometer: loop {
                let chosen: Vec<ArrowId> = (0..r).map(|i| choices[i][pick[i]]).collect();
                let mut target = vec![0; r];
                for i in 0..r {
                    target[perm[i]] = c.cod(chosen[i]);
                }
                endpoints.push((src, object_index[&target]));
                arrows.push(FreeArrow {
                    source: src,
                    perm: perm.clone(),
                    arrows: chosen,
                });
                if arrows.len() > limits.max_arrows {
                    return Err(Error::SizeLimit {
                        what: "arrows",
                        limit: limits.max_arrows,
                    });
                }
                for i in (0..r).rev() {
                    pick[i] += 1;
                    if pick[i] < choices[i].len() {
                        continue 'odometer;
                    }
                    pick[i] = 0;
                }
                break;
            }
        }
    }
    let arrow_index: HashMap<FreeArrow, ArrowId> = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.clone(), i))
        .collect();
    let identity: Vec<ArrowId> = objects
        .iter()
        .enumerate()
        .map(|(i, s)| {
            arrow_index[&FreeArrow {
                source: i,
                perm: (0..s.len()).collect(),
                arrows: s.iter().map(|&x| c.identity(x)).collect(),
            }]
        })
        .collect();
    let names: Vec<String> = arrows
        .iter()
        .map(|a| {
            let parts: Vec<String> = a.arrows.iter().map(|&f| c.arrow_name(f)).collect();
            format!("{:?}[{}]", a.perm, parts.join(","))
        })
        .collect();
    let base = FiniteCategory::from_fn(objects.len(), endpoints, identity, |g, f| {
        let (fa, ga) = (&arrows[f], &arrows[g]);
        let r = fa.perm.len();
        let perm = (0..r).map(|i| ga.perm[fa.perm[i]]).collect();
        let chosen = (0..r)
            .map(|i| c.compose(ga.arrows[fa.perm[i]], fa.arrows[i]))
            .collect();
        arrow_index[&FreeArrow {
            source: fa.source,
            perm,
            arrows: chosen,
        }]
    })
    .with_names(names);
    let base = Arc::new(base);

    let tensor_obj = |a: ObjId, b: ObjId| -> Option<ObjId> {
        let mut s = objects[a].clone();
        s.extend_from_slice(&objects[b]);
        object_index.get(&s).copied()
    };
    let tensor_arr = |f: ArrowId, g: ArrowId| -> Option<ArrowId> {
        let (fa, ga) = (&arrows[f], &arrows[g]);
        let k = fa.perm.len();
        let source = tensor_obj(fa.source, ga.source)?;
        let mut perm = fa.perm.clone();
        perm.extend(ga.perm.iter().map(|&p| p + k));
        let mut chosen = fa.arrows.clone();
        chosen.extend_from_slice(&ga.arrows);
        Some(
            arrow_index[&FreeArrow {
                source,
                perm,
                arrows: chosen,
            }],
        )
    };
    let symmetry = |a: ObjId, b: ObjId| -> Option<ArrowId> {
        let (k, l) = (objects[a].len(), objects[b].len());
        let source = tensor_obj(a, b)?;
        let perm = (0..k).map(|i| l + i).chain(0..l).collect();
        let chosen = objects[source].iter().map(|&x| c.identity(x)).collect();
        Some(
            arrow_index[&FreeArrow {
                source,
                perm,
                arrows: chosen,
            }],
        )
    };
    let generators = by_length.get(1).cloned().unwrap_or_default();
    Ok(
        PermutativeStructure::from_fn(base, 0, tensor_obj, tensor_arr, symmetry)
            .with_generators(generators),
    )
}
