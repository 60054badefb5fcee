use std::path::PathBuf;
use std::process::{Command, Output};

use clap::Parser;
use qcgl_cli::{execute, Cli, Outcome, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    let cli = Cli::try_parse_from(std::iter::once("qcgl").chain(args.iter().copied())).expect("arguments parse");
    execute(&cli)
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full);
    (out.code, serde_json::from_str(&out.stdout).expect("stdout is JSON"))
}

fn binary(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qcgl"));
    cmd.args(args).env_remove("QCGL_SEED").env_remove("QCGL_ALGEBRA");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn schema() -> jsonschema::Validator {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema/output.schema.json");
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).expect("schema compiles")
}

#[test]
fn qcommute_examples() {
    assert_eq!(run(&["qcommute", "x[1,2]", "x[1,1]"]).stdout, "-1\n");
    assert_eq!(run(&["qcommute", "x[1,1]", "x[1,2]"]).stdout, "1\n");
    assert_eq!(run(&["qcommute", "x[1,2]", "x[2,1]"]).stdout, "0\n");
    assert_eq!(run(&["qcommute", "x[1,1]", "x[1,1]+x[2,2]"]).stdout, "none\n");
}

#[test]
fn normal_forms() {
    assert_eq!(run(&["nf", "x[2,1]*x[1,1]"]).stdout, "q^-1*x[1,1]*x[2,1]\n");
    assert_eq!(
        run(&["nf", "x[2,2]*x[1,1]"]).stdout,
        "x[1,1]*x[2,2] - (q^2-1)/q*x[1,2]*x[2,1]\n"
    );
    assert_eq!(run(&["--algebra", "uq-sl3-plus", "nf", "e2*e1"]).stdout, "-q*e3 + q*e1*e2\n");
    assert_eq!(run(&["nf", "--laurent", "X^-1*x[1,2]"]).stdout, "q*x[1,2]*X^-1\n");
    assert_eq!(run(&["nf", "(x[1,2])^0"]).stdout, "1\n");
    assert_eq!(run(&["nf", "g_2*g_1"]).stdout, "q^-1*x[1,1]*x[1,2]\n");
}

#[test]
fn normal_form_text_is_a_fixed_point() {
    for input in ["x[2,2]*x[2,1]*x[1,2]*x[1,1]", "(x[1,2] - x[2,1])^3", "[1,2|1,2]^2 + 1/(q+1)*x[2,2]"] {
        let first = run(&["nf", input]);
        assert_eq!(first.code, EXIT_OK);
        let text = first.stdout.trim_end().to_string();
        assert_eq!(run(&["nf", &text]).stdout.trim_end(), text);
    }
}

#[test]
fn minors_and_determinant() {
    assert_eq!(run(&["minor", "1,2", "1,2"]).stdout, "x[1,1]*x[2,2] - q*x[1,2]*x[2,1]\n");
    assert_eq!(run(&["minor", "2", "1"]).stdout, "x[2,1]\n");
    let (_, det3) = run_json(&["--algebra", "qmat:3,3", "minor", "1,2,3", "1,2,3"]);
    assert_eq!(det3["result"]["terms"].as_array().unwrap().len(), 6);
    let out = run(&["minor", "1,2", "1,3"]);
    assert_eq!(out.code, EXIT_USAGE);
}

#[test]
fn normality_and_weights() {
    let (code, v) = run_json(&["normal", "x[1,2]"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(v["result"]["normal"], true);
    let exps: Vec<i64> = v["result"]["exponents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["exponent"].as_i64().unwrap())
        .collect();
    assert_eq!(exps, vec![-1, 0, 0, 1]);
    assert_eq!(run(&["weight", "x[1,1]*x[2,2]"]).stdout, "(1, 1, 1, 1)\n");
    assert_eq!(run(&["weight", "x[1,2]"]).stdout, "(1, 0, 0, 1)\n");
    assert_eq!(run(&["weight", "x[1,1]+x[1,2]"]).stdout, "inhomogeneous\n");
}

#[test]
fn cauchon_commands() {
    assert_eq!(run(&["cauchon", "count", "2", "2"]).stdout, "14\n");
    assert_eq!(run(&["cauchon", "count", "2", "3"]).stdout, "46\n");
    assert_eq!(run(&["cauchon", "count", "3", "2"]).stdout, "46\n");
    assert_eq!(run(&["cauchon", "list", "1", "2"]).stdout, "..\n\n.#\n\n#.\n\n##\n");
    let (_, v) = run_json(&["cauchon", "histogram", "2", "2"]);
    let counts: Vec<u64> = v["result"]["histogram"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![1, 3, 5, 4, 1]);
    assert_eq!(run(&["cauchon", "count", "5", "5"]).code, EXIT_USAGE);
}

#[test]
fn theta_outputs() {
    assert_eq!(run(&["theta", "x[1,1]"]).stdout, "x[1,1] - q*x[1,2]*x[2,1]*X^-1\n");
    assert_eq!(run(&["theta", "--alt", "x[1,1]"]).stdout, "x[1,1] - q*x[1,2]*x[2,1]*X^-1\n");
    assert_eq!(run(&["theta", "x[1,2]*x[2,1]"]).stdout, "x[1,2]*x[2,1]\n");
    let out = run(&["theta", "x[2,2]"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("level"));
}

#[test]
fn axioms_report() {
    let out = run(&["axioms"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.ends_with("torsionfree: yes\n"));
    assert_eq!(out.stdout.lines().filter(|l| l.ends_with(": ok")).count(), 4);
    for preset in ["qplane", "uq-sl3-plus", "qmat:2,3"] {
        let (code, v) = run_json(&["--algebra", preset, "axioms"]);
        assert_eq!(code, EXIT_OK, "{preset}");
        assert_eq!(v["result"]["all_pass"], true);
    }
}

#[test]
fn verify_suite() {
    let out = run(&["verify", "paper", "--size", "2,2"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out.stdout.ends_with("9/9 criteria passed\n"));
    assert_eq!(out.stdout.matches("[PASS]").count(), 9);
    assert_eq!(out.stdout.matches("2x2").count(), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["nf", "x[1,1"]).code, EXIT_USAGE);
    assert_eq!(run(&["nf", "y"]).code, EXIT_USAGE);
    assert_eq!(run(&["nf", "1/(q-q)"]).code, EXIT_USAGE);
    assert_eq!(run(&["--algebra", "qmat:0,2", "nf", "1"]).code, EXIT_USAGE);
    assert_eq!(run(&["--steps-budget", "2", "nf", "x[2,2]*x[2,1]*x[1,2]*x[1,1]"]).code, EXIT_FAILED);
    assert_eq!(run(&["--nilpotence-bound", "1", "theta", "x[1,1]^2"]).code, EXIT_FAILED);
    assert!(Cli::try_parse_from(["qcgl", "bogus"]).is_err());
    assert_eq!(binary(&["bogus"], &[]).status.code(), Some(EXIT_USAGE));
    assert_eq!(binary(&["cauchon", "count", "2", "2"], &[]).status.code(), Some(EXIT_OK));
}

#[test]
fn json_errors_carry_kind_and_position() {
    let (code, v) = run_json(&["nf", "x[1,1] * * x[2,2]"]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(v["ok"], false);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["position"], 9);
    let (code, v) = run_json(&["--steps-budget", "2", "nf", "x[2,2]*x[2,1]*x[1,2]*x[1,1]"]);
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(v["error"]["kind"], "step_budget_exceeded");
    assert!(v["error"].get("position").is_none());
}

#[test]
fn json_output_matches_schema() {
    let validator = schema();
    let cases: &[&[&str]] = &[
        &["nf", "x[2,1]*x[1,1]"],
        &["nf", "--laurent", "X^-1*x[1,1]"],
        &["minor", "1,2", "1,2"],
        &["qcommute", "x[1,2]", "x[1,1]"],
        &["qcommute", "x[1,1]", "x[1,1]+x[2,2]"],
        &["normal", "x[1,1]"],
        &["weight", "x[1,1]+x[1,2]"],
        &["weight", "x[2,2]"],
        &["cauchon", "count", "2", "2"],
        &["cauchon", "list", "2", "2"],
        &["cauchon", "histogram", "2", "3"],
        &["theta", "x[1,1]"],
        &["theta", "--alt", "x[1,1]"],
        &["verify", "paper", "--size", "2,2"],
        &["axioms"],
        &["--algebra", "uq-sl3-plus", "axioms"],
        &["algebra", "qplane"],
        &["algebra", "preset", "uq-sl3-plus"],
        &["algebra", "qmat", "2", "3"],
        &["nf", "x[1,1] * * x[2,2]"],
        &["theta", "x[2,2]"],
        &["--nilpotence-bound", "1", "theta", "x[1,1]^2"],
    ];
    for args in cases {
        let (_, v) = run_json(args);
        let errors: Vec<String> = validator.iter_errors(&v).map(|e| e.to_string()).collect();
        assert!(errors.is_empty(), "{args:?}: {errors:?}\n{v:#}");
    }
    let bad = serde_json::json!({ "command": "qcommute", "ok": true, "result": { "exponent": "one" } });
    assert!(!validator.is_valid(&bad));
}

#[test]
fn algebra_spec_files_round_trip() {
    let dir = std::env::temp_dir().join(format!("qcgl-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (args, probe, expected) in [
        (vec!["algebra", "qmat", "2", "3"], "x[2,3]*x[1,1]", "x[1,1]*x[2,3] - (q^2-1)/q*x[1,3]*x[2,1]"),
        (vec!["algebra", "qplane"], "y*x", "q*x*y"),
        (vec!["algebra", "preset", "uq-sl3-plus"], "e2*e1", "-q*e3 + q*e1*e2"),
    ] {
        let out = run(&args);
        assert_eq!(out.code, EXIT_OK);
        let path = dir.join("spec.json");
        std::fs::write(&path, &out.stdout).unwrap();
        let p = path.to_str().unwrap();
        assert_eq!(run(&["--spec", p, "nf", probe]).stdout.trim_end(), expected);
        let again = run(&["algebra", "file", p]);
        assert_eq!(again.stdout, out.stdout);
    }
    let path = dir.join("broken.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(run(&["--spec", path.to_str().unwrap(), "axioms"]).code, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn seed_comes_from_flag_or_environment() {
    let seed_of = |out: &Output| -> u64 {
        let v: Value = serde_json::from_slice(&out.stdout).unwrap();
        v["result"]["seed"].as_u64().unwrap()
    };
    let args = ["--json", "verify", "paper", "--size", "1,2"];
    assert_eq!(seed_of(&binary(&args, &[("QCGL_SEED", "7")])), 7);
    let mut with_flag = args.to_vec();
    with_flag.extend(["--seed", "9"]);
    assert_eq!(seed_of(&binary(&with_flag, &[("QCGL_SEED", "7")])), 9);
    assert_eq!(seed_of(&binary(&args, &[])), qcgl::verify::DEFAULT_SEED);
}

#[test]
fn algebra_from_environment() {
    let out = binary(&["nf", "y*x"], &[("QCGL_ALGEBRA", "qplane")]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "q*x*y\n");
}

#[test]
fn output_is_deterministic() {
    let strip = |v: &mut Value| {
        for c in v["result"]["criteria"].as_array_mut().unwrap() {
            c["elapsed"] = Value::Null;
        }
    };
    let (_, mut a) = run_json(&["--seed", "3", "verify", "paper", "--size", "2,2"]);
    let (_, mut b) = run_json(&["--seed", "3", "verify", "paper", "--size", "2,2"]);
    strip(&mut a);
    strip(&mut b);
    assert_eq!(a, b);
    let x = binary(&["--json", "cauchon", "list", "2", "3"], &[]);
    let y = binary(&["--json", "cauchon", "list", "2", "3"], &[]);
    assert_eq!(x.stdout, y.stdout);
}
