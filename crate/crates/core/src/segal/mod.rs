//! The Segal groupoids `L(n)`, `L̄(n)` and the Segal nerve of a permutative
//! category.

mod lgroupoid;
mod nerve;

pub use lgroupoid::{build_l, build_lbar, l_action, Entry, LGroupoid};
pub use nerve::{
    check_k_picard, iso_class_profile, nerve_map, nerve_oracle, segal_nerve, DecompositionDiagram,
    KPicardReport, NerveLevel, OracleReport, SegalNerve,
};
