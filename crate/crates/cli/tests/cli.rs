//! End-to-end tests of the `hopfmodel` binary: contract examples, JSON
//! round trips, and exit-status conventions.

use std::process::{Command, Output};

use serde_json::Value;

fn hopfmodel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfmodel"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Run and demand success, returning parsed stdout.
fn run_json(args: &[&str]) -> Value {
    let out = hopfmodel(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON value")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn eta_eval_sends_the_two_cell_to_the_standard_generator() {
    let value = run_json(&[
        "eta",
        "eval",
        "--class",
        "1",
        "--input",
        r#"{"cell":"y","word":[],"deg":2}"#,
    ]);
    let expected: Value = serde_json::from_str(
        r#"{"deg":1,"factors":[{"gen":{"deg":2,"terms":[{"word":[],"r":2,"coeffs":[1]}]},"exp":1}]}"#,
    )
    .unwrap();
    assert_eq!(value, expected);
}

#[test]
fn s2_list_counts_simplices_per_degree() {
    for (degree, count) in [("0", 1), ("1", 1), ("2", 2), ("3", 4), ("4", 7)] {
        let value = run_json(&["s2", "list", "--degree", degree]);
        assert_eq!(
            value.as_array().map(Vec::len),
            Some(count),
            "degree {degree}"
        );
    }
}

#[test]
fn op_normalize_handles_text_and_json_input() {
    let value = run_json(&["op", "normalize", "--source", "2", "--word", "d1 d0"]);
    assert_eq!(value, serde_json::json!({"src": 2, "ops": [["d",0],["d",2]]}));

    // A canonical word is already its own normal form.
    let replayed = run_json(&["op", "normalize", "--input", &value.to_string()]);
    assert_eq!(replayed, value);

    let collapsed = run_json(&[
        "op",
        "normalize",
        "--input",
        r#"{"src":1,"ops":[["d",1],["s",0]]}"#,
    ]);
    assert_eq!(collapsed, serde_json::json!({"src": 1, "ops": []}));
}

#[test]
fn gamma_face_output_feeds_back_as_input() {
    let x = r#"{"deg":3,"terms":[{"word":[0],"r":2,"coeffs":[1]},{"word":[1],"r":2,"coeffs":[2]}]}"#;
    let face = run_json(&["gamma", "face", "--index", "1", "--input", x]);
    // d_1 adds the first two coordinates: 1 + 2 = 3 times the chain generator.
    assert_eq!(
        face,
        serde_json::json!({"deg": 2, "terms": [{"word": [], "r": 2, "coeffs": [3]}]})
    );

    // The printed value is a valid payload for the next command.
    let lifted = run_json(&["gamma", "deg", "--index", "0", "--input", &face.to_string()]);
    let replay = run_json(&["gamma", "face", "--index", "0", "--input", &lifted.to_string()]);
    assert_eq!(replay, face);
}

#[test]
fn gamma_basis_and_nchains_report_gamma_of_the_sphere() {
    let basis = run_json(&["gamma", "basis", "--degree", "4"]);
    assert_eq!(basis.as_array().map(Vec::len), Some(6));

    let nchains = run_json(&["gamma", "nchains", "--max-degree", "6"]);
    assert_eq!(
        nchains,
        serde_json::json!({"ranks": {"2": 1}, "differentials": {}})
    );
}

#[test]
fn loop_commands_compose_into_a_fill_and_check_cycle() {
    let one = r#"{"deg":1,"factors":[{"gen":{"deg":2,"terms":[{"word":[],"r":2,"coeffs":[1]}]},"exp":1}]}"#;
    let horn = format!(r#"{{"1":{one},"2":{{"deg":1,"factors":[]}}}}"#);
    let filler = run_json(&[
        "loop",
        "fill-horn",
        "--degree",
        "2",
        "--missing",
        "0",
        "--input",
        &horn,
    ]);

    // The filler really has the requested faces.
    let d1 = run_json(&["loop", "face", "--index", "1", "--input", &filler.to_string()]);
    assert_eq!(d1, serde_json::from_str::<Value>(one).unwrap());
    let d2 = run_json(&["loop", "face", "--index", "2", "--input", &filler.to_string()]);
    assert_eq!(d2, serde_json::json!({"deg": 1, "factors": []}));
}

#[test]
fn loop_mul_and_degree_follow_the_group_law() {
    let three = r#"{"deg":1,"factors":[{"gen":{"deg":2,"terms":[{"word":[],"r":2,"coeffs":[3]}]},"exp":1}]}"#;
    let inverse_one = r#"{"deg":1,"factors":[{"gen":{"deg":2,"terms":[{"word":[],"r":2,"coeffs":[1]}]},"exp":-1}]}"#;
    let product = run_json(&["loop", "mul", "--input", &format!("[{three},{inverse_one}]")]);

    let degree = run_json(&["loop", "degree", "--input", &product.to_string()]);
    assert_eq!(degree, serde_json::json!(2));
}

#[test]
fn hopf_face_act_and_project_round_trip() {
    let t = r#"{"fiber":{"deg":2,"factors":[]},"base":{"cell":"y","word":[],"deg":2},"class":1}"#;

    // d_0 twists: the fiber picks up eta(y) = the standard generator.
    let face = run_json(&["hopf", "face", "--index", "0", "--input", t]);
    assert_eq!(face["class"], serde_json::json!(1));
    assert_eq!(face["fiber"]["factors"].as_array().map(Vec::len), Some(1));
    assert_eq!(face["base"]["cell"], serde_json::json!("pt"));

    // The action moves only the fiber, and projection forgets it.
    let h = r#"{"deg":2,"factors":[{"gen":{"deg":3,"terms":[{"word":[1],"r":2,"coeffs":[1]}]},"exp":1}]}"#;
    let moved = run_json(&["hopf", "act", "--input", t, "--action", h]);
    let projected = run_json(&["hopf", "project", "--input", &moved.to_string()]);
    assert_eq!(
        projected,
        serde_json::json!({"cell": "y", "word": [], "deg": 2})
    );

    let universal = run_json(&["hopf", "to-universal", "--input", &moved.to_string()]);
    assert_eq!(universal["base"]["deg"], serde_json::json!(2));
}

#[test]
fn hopf_lift_horn_fills_over_the_base_filler() {
    let f0 = r#"{"fiber":{"deg":1,"factors":[{"gen":{"deg":2,"terms":[{"word":[],"r":2,"coeffs":[1]}]},"exp":1}]},"base":{"cell":"pt","word":[0],"deg":1}}"#;
    let f2 = r#"{"fiber":{"deg":1,"factors":[]},"base":{"cell":"pt","word":[0],"deg":1}}"#;
    let payload = format!(
        r#"{{"class":1,"faces":{{"0":{f0},"2":{f2}}},"filler":{{"cell":"y","word":[],"deg":2}}}}"#
    );
    let lifted = run_json(&[
        "hopf",
        "lift-horn",
        "--degree",
        "2",
        "--missing",
        "1",
        "--input",
        &payload,
    ]);
    assert_eq!(lifted["base"], serde_json::json!({"cell": "y", "word": [], "deg": 2}));

    // Replaying the given faces on the lift reproduces them.
    let d0 = run_json(&["hopf", "face", "--index", "0", "--input", &lifted.to_string()]);
    assert_eq!(d0["fiber"], serde_json::from_str::<Value>(f0).unwrap()["fiber"]);
}

#[test]
fn verify_all_passes_at_defaults_and_is_seed_reproducible() {
    let out = hopfmodel(&["verify", "all", "--seed", "42"]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));

    let first = hopfmodel(&["verify", "all", "--seed", "7", "--max-degree", "4", "--samples", "60", "--json"]);
    let second = hopfmodel(&["verify", "all", "--seed", "7", "--max-degree", "4", "--samples", "60", "--json"]);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(first.stdout, second.stdout, "seeded reports are byte-identical");

    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["seed"], serde_json::json!(7));
    assert_eq!(report["suites"].as_array().map(Vec::len), Some(12));
}

#[test]
fn verify_golden_and_bundle_exit_zero() {
    let golden = hopfmodel(&["verify", "golden", "--json"]);
    assert_eq!(exit_code(&golden), 0);
    let report: Value = serde_json::from_slice(&golden.stdout).unwrap();
    assert_eq!(report["suites"][0]["name"], serde_json::json!("golden-tables"));

    let bundle = hopfmodel(&["verify", "bundle", "--class", "-2", "--search-bound", "2"]);
    assert_eq!(exit_code(&bundle), 0);
}

#[test]
fn twist_check_passes_for_several_classes() {
    for class in ["-1", "0", "2"] {
        let out = hopfmodel(&[
            "twist",
            "check",
            "--class",
            class,
            "--max-degree",
            "4",
            "--samples",
            "40",
        ]);
        assert_eq!(exit_code(&out), 0, "class {class}");
    }
}

#[test]
fn export_model_counts_match_the_sphere_census() {
    let export = run_json(&[
        "export",
        "model",
        "--class",
        "1",
        "--max-degree",
        "3",
        "--fiber-samples",
        "2",
        "--seed",
        "5",
    ]);
    let degrees = export["degrees"].as_array().unwrap();
    assert_eq!(degrees.len(), 4);
    for (slice, base_count) in degrees.iter().zip([1, 1, 2, 4]) {
        assert_eq!(slice["base_count"], serde_json::json!(base_count));
        let simplices = slice["simplices"].as_array().unwrap();
        assert_eq!(simplices.len(), 2 * base_count, "bases x fibers");
        // Every exported simplex re-parses as a valid payload.
        for s in simplices {
            let echoed = run_json(&["hopf", "project", "--input", &s.to_string()]);
            assert_eq!(echoed["deg"], slice["degree"]);
        }
    }
}

#[test]
fn malformed_json_exits_two_with_a_position() {
    let out = hopfmodel(&["eta", "eval", "--input", r#"{"cell":"#]);
    assert_eq!(exit_code(&out), 2);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(
        stderr.contains("line 1 column"),
        "message names the position: {stderr}"
    );
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag.
    assert_eq!(exit_code(&hopfmodel(&["s2", "list", "--degree", "3", "--bogus"])), 2);
    // Missing payload.
    assert_eq!(exit_code(&hopfmodel(&["eta", "eval"])), 2);
    // Domain validation: a payload whose declared degree is wrong.
    let out = hopfmodel(&[
        "s2",
        "face",
        "--index",
        "0",
        "--input",
        r#"{"cell":"y","word":[0],"deg":2}"#,
    ]);
    assert_eq!(exit_code(&out), 2);
    // Bounds validation on suites.
    assert_eq!(exit_code(&hopfmodel(&["verify", "all", "--max-degree", "1"])), 2);
}
