//! Small named permutative categories used throughout the tests.

use std::sync::Arc;

use super::{product, PermutativeStructure};
use crate::fincat::constructions::{discrete, indiscrete, one_object, terminal};

/// A finite abelian group as a discrete permutative category.
pub fn discrete_group(order: usize, add: impl Fn(usize, usize) -> usize) -> PermutativeStructure {
    let base = Arc::new(discrete(order));
    PermutativeStructure::from_fn(
        base,
        0,
        |a, b| Some(add(a, b)),
        |f, g| Some(add(f, g)),
        |a, b| Some(add(a, b)),
    )
}

pub fn discrete_cyclic(n: usize) -> PermutativeStructure {
    discrete_group(n, move |a, b| (a + b) % n)
}

/// `ℤ/2 × ℤ/2` with elements encoded as two bits.
pub fn discrete_klein() -> PermutativeStructure {
    discrete_group(4, |a, b| a ^ b)
}

/// The commutative monoid `({0, 1}, max)` as a discrete category.
pub fn max_monoid() -> PermutativeStructure {
    discrete_group(2, |a, b| a.max(b))
}

/// One object whose automorphism group is `ℤ/n`, tensor given by addition.
pub fn one_object_cyclic(n: usize) -> PermutativeStructure {
    let base = Arc::new(one_object(n, 0, move |g, f| (g + f) % n));
    PermutativeStructure::from_fn(
        base,
        0,
        |_, _| Some(0),
        move |f, g| Some((f + g) % n),
        |_, _| Some(0),
    )
}

/// `Σ(ℤ/2)` with arrows written multiplicatively as `+1` (id 0), `-1` (id 1).
pub fn sigma_z2() -> PermutativeStructure {
    let base = Arc::new(one_object(2, 0, |g, f| g ^ f).with_names(vec!["+1".into(), "-1".into()]));
    PermutativeStructure::from_fn(base, 0, |_, _| Some(0), |f, g| Some(f ^ g), |_, _| Some(0))
}

/// Objects `ℤ/2`, every automorphism group `ℤ/2`, symmetry on `(1, 1)` the
/// non-identity automorphism. Object `a` has index `a`; arrow `(a, s)` has
/// index `2a + s`.
pub fn super_line() -> PermutativeStructure {
    let base = Arc::new(
        crate::fincat::constructions::product_category(
            &discrete(2),
            &one_object(2, 0, |g, f| g ^ f),
        )
        .with_names(vec!["0+".into(), "0-".into(), "1+".into(), "1-".into()]),
    );
    PermutativeStructure::from_fn(
        base,
        0,
        |a, b| Some(a ^ b),
        |f, g| Some(2 * ((f / 2) ^ (g / 2)) + ((f % 2) ^ (g % 2))),
        |a, b| Some(2 * (a ^ b) + (a & b)),
    )
}

pub fn terminal_structure() -> PermutativeStructure {
    PermutativeStructure::from_fn(
        Arc::new(terminal()),
        0,
        |_, _| Some(0),
        |_, _| Some(0),
        |_, _| Some(0),
    )
}

/// The indiscrete category on `{0, 1}` with tensor `xor`; equivalent to the
/// terminal structure.
pub fn indiscrete_xor() -> PermutativeStructure {
    let base = Arc::new(indiscrete(2));
    PermutativeStructure::from_fn(
        base,
        0,
        |a, b| Some(a ^ b),
        |f, g| {
            let (a, b) = (f / 2, f % 2);
            let (c, d) = (g / 2, g % 2);
            Some((a ^ c) * 2 + (b ^ d))
        },
        |a, b| Some((a ^ b) * 3),
    )
}

/// Discrete `ℤ/2` times one-object `ℤ/3`.
pub fn z2_times_bz3() -> PermutativeStructure {
    product(&discrete_cyclic(2), &one_object_cyclic(3))
}

/// Every named structure.
pub fn all() -> Vec<(&'static str, PermutativeStructure)> {
    vec![
        ("terminal", terminal_structure()),
        ("discrete_z2", discrete_cyclic(2)),
        ("discrete_z3", discrete_cyclic(3)),
        ("discrete_klein", discrete_klein()),
        ("max_monoid", max_monoid()),
        ("one_object_z2", one_object_cyclic(2)),
        ("one_object_z3", one_object_cyclic(3)),
        ("sigma_z2", sigma_z2()),
        ("super_line", super_line()),
        ("indiscrete_xor", indiscrete_xor()),
        ("z2_times_bz3", z2_times_bz3()),
        (
            "z2_times_z2",
            product(&discrete_cyclic(2), &discrete_cyclic(2)),
        ),
    ]
}

/// The permutative groupoids of [`all`].
pub fn groupoids() -> Vec<(&'static str, PermutativeStructure)> {
    all().into_iter().filter(|(_, p)| p.is_groupoid()).collect()
}
