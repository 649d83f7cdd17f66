mod common;

use common::{fixture, picard, report, FIXTURE_RUNS};

#[test]
fn every_fixture_is_exercised() {
    let mut names: Vec<String> = std::fs::read_dir(fixture(""))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    names.sort();
    for name in names {
        assert!(
            FIXTURE_RUNS.iter().any(|(f, _, _)| *f == name),
            "{name} has no run"
        );
    }
}

#[test]
fn fixture_runs_exit_as_expected() {
    for (_, args, code) in FIXTURE_RUNS {
        let (got, out, err) = picard(args);
        assert_eq!(got, *code, "{args:?}: {err}");
        let r = report(&out);
        let status = ["pass", "fail", "invalid_input"][*code as usize];
        assert_eq!(r["status"], status, "{args:?}");
        assert_eq!(
            r["failures"].as_array().unwrap().is_empty(),
            *code != 1,
            "{args:?}"
        );
    }
}

#[test]
fn picard_report_on_a_group() {
    let (code, out, _) = picard(&["perm", "picard", "z2_discrete.json"]);
    assert_eq!(code, 0);
    let r = report(&out);
    for key in ["shear1", "shear2", "inverses"] {
        assert_eq!(r["result"][key], true);
    }
    assert_eq!(r["inputs"][0]["path"], "z2_discrete.json");
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn max_monoid_nerve_fails_condition_three_only() {
    let (code, out, _) = picard(&[
        "nerve",
        "--input",
        "max_monoid.json",
        "--truncation",
        "2",
        "--check",
        "cc-picard",
    ]);
    assert_eq!(code, 1);
    let r = report(&out);
    let failures = r["failures"].as_array().unwrap();
    assert_eq!(failures.len(), 1);
    assert!(failures[0]
        .as_str()
        .unwrap()
        .starts_with("condition (3) fails"));
    assert_eq!(
        r["result"]["locality"]["failed_conditions"],
        serde_json::json!([3])
    );
}

#[test]
fn factorize_prints_support_and_factors() {
    let (code, out, _) = picard(&["gammaop", "factorize", "3>2:[1,0,2]"]);
    assert_eq!(code, 0);
    let r = report(&out)["result"].clone();
    assert_eq!(r["support"], serde_json::json!([1, 3]));
    assert_eq!(r["inert"], "3>2:[1,0,2]");
    assert_eq!(r["active"], "2>2:[1,2]");
    let (code, _, _) = picard(&["gammaop", "factorize", "3>2:[1,0]"]);
    assert_eq!(code, 2);
}

#[test]
fn canonical_category_round_trips() {
    let original = std::fs::read_to_string(fixture("i_category.json")).unwrap();
    let (code, printed, _) = picard(&["validate", "--canonical", "i_category.json"]);
    assert_eq!(code, 0);
    assert_eq!(printed, original);
}

#[test]
fn printing_canonicalizes() {
    let dir = tempfile::tempdir().unwrap();
    let messy = dir.path().join("messy.json");
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("i_category.json")).unwrap())
            .unwrap();
    std::fs::write(&messy, serde_json::to_string(&value).unwrap()).unwrap();
    let (_, once, _) = picard(&["validate", "--canonical", messy.to_str().unwrap()]);
    let again = dir.path().join("again.json");
    std::fs::write(&again, &once).unwrap();
    let (_, twice, _) = picard(&["validate", "--canonical", again.to_str().unwrap()]);
    assert_eq!(once, twice);
}

#[test]
fn unknown_key_is_located() {
    let (code, out, err) = picard(&["validate", "unknown_key.json"]);
    assert_eq!(code, 2);
    assert_eq!(report(&out)["error"]["pointer"], "/arrows/2/label");
    assert!(err.contains("/arrows/2/label"));
}

#[test]
fn non_functorial_action_names_the_pair() {
    let (code, out, _) = picard(&["gamma", "validate", "gamma_nonfunctorial.json"]);
    assert_eq!(code, 1);
    let r = report(&out);
    let first = r["failures"][0].as_str().unwrap();
    assert!(first.contains("(g, f) = ("), "{first}");
    assert!(first.contains("2>1:[1,1]"), "{first}");
}

#[test]
fn oplax_fixture_fails_the_unit_diagram() {
    let (code, out, _) = picard(&["perm", "oplax", "oplax_minus_one.json"]);
    assert_eq!(code, 1);
    let f = &report(&out)["result"]["failures"][0];
    assert_eq!(f["axiom"], "OL.1");
    assert_eq!(f["tuple"], serde_json::json!([0, 0]));
    assert_eq!(
        (f["left"].as_str(), f["right"].as_str()),
        (Some("-1"), Some("+1"))
    );
}

#[test]
fn output_flag_writes_the_same_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let (_, stdout, _) = picard(&["perm", "pi", "one_object_z3.json"]);
    let (code, quiet, _) = picard(&[
        "perm",
        "pi",
        "one_object_z3.json",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(quiet.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout);
}

#[test]
fn timing_is_opt_in() {
    let (_, plain, _) = picard(&["perm", "pi", "one_object_z3.json"]);
    assert!(report(&plain).get("timing_ms").is_none());
    let (_, timed, _) = picard(&["perm", "pi", "one_object_z3.json", "--timing"]);
    assert!(report(&timed)["timing_ms"].is_u64());
}

#[test]
fn emitted_convolution_is_a_gamma_category() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("conv.json");
    let (code, _, _) = picard(&[
        "day",
        "gamma_unit.json",
        "gamma_power2.json",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let (code, _, err) = picard(&["gamma", "validate", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let (code, _, _) = picard(&["gamma", "local", path.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn words_mode_reports_when_it_does_not_close() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z3.json");
    let (_, text, _) = picard(&["corpus", "perm", "one_object_z3"]);
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let obj = v.as_object_mut().unwrap();
    for key in ["unit", "tensor_obj", "tensor_arr", "symmetry"] {
        obj.remove(key);
    }
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let (code, out, _) = picard(&["pi1", path.to_str().unwrap(), "--mode", "words"]);
    assert_eq!(code, 1);
    assert_eq!(report(&out)["result"]["authoritative"], false);
    let (code, _, _) = picard(&["pi1", path.to_str().unwrap()]);
    assert_eq!(code, 0);
}

#[test]
fn bad_bounds_are_rejected() {
    let (code, _, _) = picard(&["pi1", "i_category.json", "--word-bound", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn missing_file_is_invalid_input() {
    let (code, out, _) = picard(&["groupoid", "nowhere.json"]);
    assert_eq!(code, 2);
    assert_eq!(report(&out)["status"], "invalid_input");
}
