//! Exhaustive, desk-scale computations with permutative categories, Picard
//! groupoids and Γ-categories.
//!
//! Everything here works on explicit finite tables. Infinite objects (free
//! permutative categories, the groupoids `L(n)`, Γ-categories) are handled
//! through explicit truncation bounds, and every verdict is a statement about
//! the truncation it was computed on.

pub mod error;
pub mod fincat;
pub mod gammacat;
pub mod gammaop;
pub mod perm;
pub mod quotient;
pub mod segal;

pub use error::{Error, Result};

/// Caps on the exponential enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_objects: usize,
    pub max_arrows: usize,
    pub max_functors: usize,
    /// Coset table size allowed when computing vertex groups of a localization.
    pub coset_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_objects: 20_000,
            max_arrows: 2_000_000,
            max_functors: 200_000,
            coset_limit: 100_000,
        }
    }
}
