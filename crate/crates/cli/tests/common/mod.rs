#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

/// Runs the binary from the fixture directory so reports carry relative paths.
pub fn picard(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_picard"))
        .args(args)
        .current_dir(fixture(""))
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("utf-8 report"),
        String::from_utf8(out.stderr).expect("utf-8 diagnostics"),
    )
}

pub fn report(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("report is JSON")
}

/// One invocation per fixture, with its expected exit code.
pub const FIXTURE_RUNS: &[(&str, &[&str], i32)] = &[
    ("i_category.json", &["validate", "i_category.json"], 0),
    (
        "missing_composite.json",
        &["validate", "missing_composite.json"],
        1,
    ),
    ("unknown_key.json", &["validate", "unknown_key.json"], 2),
    (
        "functor_i_to_j.json",
        &[
            "classify",
            "functor_i_to_j.json",
            "--require",
            "equivalence",
        ],
        1,
    ),
    (
        "functor_j_collapse.json",
        &["pathobj", "functor_j_collapse.json"],
        0,
    ),
    (
        "z2_discrete.json",
        &["perm", "picard", "z2_discrete.json"],
        0,
    ),
    (
        "max_monoid.json",
        &[
            "nerve",
            "--input",
            "max_monoid.json",
            "--truncation",
            "2",
            "--check",
            "cc-picard",
        ],
        1,
    ),
    (
        "one_object_z3.json",
        &["perm", "pi", "one_object_z3.json"],
        0,
    ),
    ("z2_times_bz3.json", &["perm", "pi", "z2_times_bz3.json"], 0),
    ("klein.json", &["perm", "validate", "klein.json"], 0),
    (
        "sigma_z2.json",
        &["nerve", "sigma_z2.json", "--check", "cc-picard"],
        0,
    ),
    ("terminal.json", &["nerve", "terminal.json", "--oracle"], 0),
    (
        "oplax_minus_one.json",
        &["perm", "oplax", "oplax_minus_one.json"],
        1,
    ),
    (
        "oplax_strict.json",
        &["perm", "oplax", "oplax_strict.json"],
        0,
    ),
    (
        "gamma_nonfunctorial.json",
        &["gamma", "validate", "gamma_nonfunctorial.json"],
        1,
    ),
    (
        "gamma_power2.json",
        &["gamma", "local", "gamma_power2.json"],
        0,
    ),
    (
        "gamma_nerve_z2.json",
        &["gamma", "local", "gamma_nerve_z2.json"],
        0,
    ),
    (
        "gamma_nerve_max_monoid.json",
        &["gamma", "local", "gamma_nerve_max_monoid.json"],
        1,
    ),
    (
        "gamma_unit.json",
        &["day", "gamma_unit.json", "gamma_power2.json"],
        0,
    ),
    (
        "gamma_representable2.json",
        &[
            "day",
            "gamma_unit.json",
            "gamma_representable2.json",
            "--mode",
            "presented",
        ],
        0,
    ),
];
