//! The skeletal category of finite based sets `n⁺ = {0, 1, …, n}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A based map `n⁺ → m⁺`. `images[i - 1]` is the image of `i`; the
/// basepoint is sent to the basepoint implicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasedMap {
    pub source: usize,
    pub target: usize,
    pub images: Vec<usize>,
}

impl BasedMap {
    pub fn new(source: usize, target: usize, images: Vec<usize>) -> Result<BasedMap> {
        if images.len() != source {
            return Err(Error::Invalid(format!(
                "expected {source} images, got {}",
                images.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&i| i > target) {
            return Err(Error::Invalid(format!("image {bad} outside 0..={target}")));
        }
        Ok(BasedMap {
            source,
            target,
            images,
        })
    }

    pub fn identity(n: usize) -> BasedMap {
        BasedMap {
            source: n,
            target: n,
            images: (1..=n).collect(),
        }
    }

    pub fn zero(n: usize, m: usize) -> BasedMap {
        BasedMap {
            source: n,
            target: m,
            images: vec![0; n],
        }
    }

    pub fn apply(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.images[i - 1]
        }
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Elements not sent to the basepoint, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.source).filter(|&i| self.apply(i) != 0).collect()
    }

    /// `f⁻¹(T)` for `T ⊆ {1..m}`, as a sorted list.
    pub fn preimage(&self, subset: &[usize]) -> Vec<usize> {
        (1..=self.source)
            .filter(|&i| subset.contains(&self.apply(i)))
            .collect()
    }

    /// Support projection: order-preserving bijection from the support onto
    /// `{1..m}`.
    pub fn is_inert(&self) -> bool {
        let hit: Vec<usize> = self.images.iter().copied().filter(|&x| x != 0).collect();
        hit.len() == self.target && hit.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// Only the basepoint goes to the basepoint.
    pub fn is_active(&self) -> bool {
        self.images.iter().all(|&x| x != 0)
    }

    pub fn is_bijective(&self) -> bool {
        self.source == self.target && {
            let mut seen = vec![false; self.target + 1];
            self.images
                .iter()
                .all(|&x| x != 0 && !std::mem::replace(&mut seen[x], true))
        }
    }
}

impl fmt::Display for BasedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|i| i.to_string()).collect();
        write!(f, "{}>{}:[{}]", self.source, self.target, parts.join(","))
    }
}

impl FromStr for BasedMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<BasedMap> {
        let bad = || {
            Error::Invalid(format!(
                "malformed based map `{s}`, expected n>m:[i1,...,in]"
            ))
        };
        let (ends, list) = s.trim().split_once(':').ok_or_else(bad)?;
        let (n, m) = ends.split_once('>').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let m: usize = m.trim().parse().map_err(|_| bad())?;
        let inner = list
            .trim()
            .strip_prefix('[')
            .and_then(|l| l.strip_suffix(']'))
            .ok_or_else(bad)?;
        let images = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|x| x.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        };
        BasedMap::new(n, m, images)
    }
}

/// Every based map `n⁺ → m⁺`, lexicographic in the image vector.
pub fn hom_set(n: usize, m: usize) -> Vec<BasedMap> {
    let count = (m + 1).pow(n as u32);
    let mut out = Vec::with_capacity(count);
    let mut images = vec![0; n];
    for _ in 0..count {
        out.push(BasedMap {
            source: n,
            target: m,
            images: images.clone(),
        });
        for slot in images.iter_mut().rev() {
            if *slot < m {
                *slot += 1;
                break;
            }
            *slot = 0;
        }
    }
    out
}

/// `g ∘ f`.
pub fn compose(g: &BasedMap, f: &BasedMap) -> Result<BasedMap> {
    if f.target != g.source {
        return Err(Error::Mismatch(format!("cannot compose {g} after {f}")));
    }
    Ok(BasedMap {
        source: f.source,
        target: g.target,
        images: f.images.iter().map(|&i| g.apply(i)).collect(),
    })
}

/// Position of `(i, j)` in `(k·l)⁺`; zero if either coordinate is zero.
pub fn smash_pair(i: usize, j: usize, l: usize) -> usize {
    if i == 0 || j == 0 {
        0
    } else {
        (i - 1) * l + j
    }
}

/// Inverse of [`smash_pair`] on non-basepoint elements.
pub fn smash_unpair(x: usize, l: usize) -> (usize, usize) {
    ((x - 1) / l + 1, (x - 1) % l + 1)
}

pub fn smash_objects(k: usize, l: usize) -> usize {
    k * l
}

/// `f ∧ g`.
pub fn smash(f: &BasedMap, g: &BasedMap) -> BasedMap {
    let (k, l) = (f.source, g.source);
    let mut images = Vec::with_capacity(k * l);
    for i in 1..=k {
        for j in 1..=l {
            images.push(smash_pair(f.apply(i), g.apply(j), g.target));
        }
    }
    BasedMap {
        source: k * l,
        target: f.target * g.target,
        images,
    }
}

/// The inert-active factorization `f = active ∘ inert`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub support: Vec<usize>,
    pub inert: BasedMap,
    pub active: BasedMap,
}

pub fn factorize(f: &BasedMap) -> Factorization {
    let support = f.support();
    let k = support.len();
    let mut inert_images = vec![0; f.source];
    for (pos, &i) in support.iter().enumerate() {
        inert_images[i - 1] = pos + 1;
    }
    let inert = BasedMap {
        source: f.source,
        target: k,
        images: inert_images,
    };
    let active = BasedMap {
        source: k,
        target: f.target,
        images: support.iter().map(|&i| f.apply(i)).collect(),
    };
    Factorization {
        support,
        inert,
        active,
    }
}

/// Every `(inert, active)` pair with `active ∘ inert = f`, searched over all
/// middle objects `k⁺` with `k ≤ n`.
pub fn all_inert_active_factorizations(f: &BasedMap) -> Vec<(BasedMap, BasedMap)> {
    let mut out = Vec::new();
    for k in 0..=f.source {
        let actives: Vec<BasedMap> = hom_set(k, f.target)
            .into_iter()
            .filter(BasedMap::is_active)
            .collect();
        for inert in hom_set(f.source, k).into_iter().filter(BasedMap::is_inert) {
            for active in &actives {
                if compose(active, &inert).as_ref() == Ok(f) {
                    out.push((inert.clone(), active.clone()));
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Named maps: `m2`, `delta(2,1)`, `delta(2,2)`, `proj(k,l,left|right)`.
pub fn standard_map(name: &str) -> Result<BasedMap> {
    let unknown = || Error::UnknownStandardMap(name.to_string());
    let s: String = name.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "m2" {
        return Ok(multiplication());
    }
    let args = |prefix: &str| -> Option<Vec<String>> {
        let inner = s
            .strip_prefix(prefix)?
            .strip_prefix('(')?
            .strip_suffix(')')?;
        Some(inner.split(',').map(str::to_string).collect())
    };
    if let Some(a) = args("delta") {
        return match a.as_slice() {
            [n, i] if n == "2" && i == "1" => Ok(projection(1, 1, Side::Left)),
            [n, i] if n == "2" && i == "2" => Ok(projection(1, 1, Side::Right)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args("proj") {
        if let [k, l, side] = a.as_slice() {
            let k: usize = k.parse().map_err(|_| unknown())?;
            let l: usize = l.parse().map_err(|_| unknown())?;
            let side = match side.as_str() {
                "left" | "k" => Side::Left,
                "right" | "l" => Side::Right,
                _ => return Err(unknown()),
            };
            return Ok(projection(k, l, side));
        }
    }
    Err(unknown())
}

/// `2⁺ → 1⁺` sending both points to 1.
pub fn multiplication() -> BasedMap {
    BasedMap {
        source: 2,
        target: 1,
        images: vec![1, 1],
    }
}

/// `(k+l)⁺ → k⁺` keeping the first `k` points, or `(k+l)⁺ → l⁺` keeping the
/// last `l`.
pub fn projection(k: usize, l: usize, side: Side) -> BasedMap {
    let images = (1..=k + l)
        .map(|i| match side {
            Side::Left if i <= k => i,
            Side::Right if i > k => i - k,
            _ => 0,
        })
        .collect();
    BasedMap {
        source: k + l,
        target: match side {
            Side::Left => k,
            Side::Right => l,
        },
        images,
    }
}
