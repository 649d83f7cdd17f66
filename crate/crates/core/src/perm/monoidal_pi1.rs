use super::PermutativeStructure;
use crate::fincat::{pi1, Letter, Pi1Mode, PresentedGroupoid};
use crate::{Error, Limits, Result};

/// The fundamental groupoid of the base with the tensor product transported
/// letter by letter: `u ⊗ v` is the path `u ⊗ id` followed by `id ⊗ v`.
///
/// Uses the localized construction; the result is `None` where the source
/// tensor is undefined.
pub fn pi1_monoidal(
    p: &PermutativeStructure,
    word_bound: usize,
    limits: &Limits,
) -> Result<(PermutativeStructure, PresentedGroupoid)> {
    let c = p.base();
    let presented = pi1(c, Pi1Mode::Localized, word_bound, limits.coset_limit);
    let g = presented
        .category()
        .cloned()
        .ok_or_else(|| Error::BoundExceeded("vertex groups exceed the coset limit".into()))?;
    let words = presented.words().to_vec();
    let whisker =
        |letters: &[Letter], right: Option<usize>, left: Option<usize>| -> Option<Vec<Letter>> {
            letters
                .iter()
                .map(|l| {
                    let arrow = match (left, right) {
                        (Some(x), None) => p.tensor_arr(c.identity(x), l.arrow)?,
                        (None, Some(y)) => p.tensor_arr(l.arrow, c.identity(y))?,
                        _ => unreachable!(),
                    };
                    Some(Letter {
                        arrow,
                        inverse: l.inverse,
                    })
                })
                .collect()
        };
    let tensor_arr = |u: usize, v: usize| -> Option<usize> {
        let (wu, wv) = (&words[u], &words[v]);
        let (a, b) = (g.dom(u), g.cod(u));
        let (x, _) = (g.dom(v), g.cod(v));
        let start = p.tensor_obj(a, x)?;
        let mut path = whisker(&wu.letters, Some(x), None)?;
        path.extend(whisker(&wv.letters, None, Some(b))?);
        presented.eval(start, &path)
    };
    let unit_arrows = presented
        .unit_functor()
        .ok_or_else(|| Error::BoundExceeded("unit functor unavailable".into()))?;
    let structure = PermutativeStructure::from_fn(
        g.clone(),
        p.unit(),
        |a, b| p.tensor_obj(a, b),
        tensor_arr,
        |a, b| p.symmetry(a, b).map(|s| unit_arrows.arr(s)),
    );
    let structure = match p.generators() {
        Some(gens) => structure.with_generators(gens.to_vec()),
        None => structure,
    };
    Ok((structure, presented))
}
