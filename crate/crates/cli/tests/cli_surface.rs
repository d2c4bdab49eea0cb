//! Behavioral tests for the binary: every subcommand, all three formats,
//! cap resolution, exit codes, and report determinism, driven through real
//! process invocations.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ringlab"));
    cmd.args(args);
    cmd.env_remove("RINGLAB_CAP");
    for (key, value) in envs {
        cmd.env(key, value);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn run_json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = run(args, &[]);
    assert_eq!(code, 0, "stderr: {stderr}");
    serde_json::from_str(&stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ringlab-cli-{}-{name}", std::process::id()));
    fs::write(&path, content).expect("write temp file");
    path
}

#[test]
fn ring_info_reports_structure_in_all_formats() {
    let (code, stdout, _) = run(&["ring", "info", "Z12"], &[]);
    assert_eq!(code, 0);
    assert!(stdout.contains("order: 12"));
    assert!(stdout.contains("local: no"));
    assert!(stdout.contains("maximal ideals (2):"));

    let v = run_json(&["ring", "info", "Z8 (+) {0,4}", "--format", "json"]);
    assert_eq!(v["order"], 16);
    assert_eq!(v["units"], 8);
    assert_eq!(v["local"], true);
    assert_eq!(v["reduced"], false);
    assert_eq!(v["spec"], "Z8 (+) {0,4}");
    assert_eq!(v["maximal_ideals"].as_array().unwrap().len(), 1);

    let (code, csv, _) = run(&["ring", "info", "Z8 (+) {0,4}", "--format", "csv"], &[]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    assert_eq!(
        lines.next(),
        Some("spec,order,units,local,reduced,nilradical,maximal_ideals,validated")
    );
    // The spec contains a comma, so the CSV field is quoted.
    assert!(lines.next().unwrap().starts_with("\"Z8 (+) {0,4}\",16,8,true,false,"));
}

#[test]
fn ring_info_output_re_parses_to_the_same_construction() {
    for spec in ["Z12", "Z8 (+) {0,4}", "Z2 x Z3 x Z4", "Z16/(8)", "(Z2 x Z4) x Z3"] {
        let v = run_json(&["ring", "info", spec, "--format", "json"]);
        let canonical = v["spec"].as_str().expect("spec field").to_string();
        let again = run_json(&["ring", "info", &canonical, "--format", "json"]);
        assert_eq!(again["spec"], canonical, "canonical form must be a fixed point");
        assert_eq!(again["order"], v["order"]);
    }
}

#[test]
fn bad_specs_and_oversized_rings_exit_two() {
    let (code, _, stderr) = run(&["ring", "info", "Z12 x"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("token 3"), "stderr: {stderr}");

    let (code, _, stderr) = run(&["ring", "info", "Z300"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("cap"), "stderr: {stderr}");

    let (code, _, _) = run(&["ring", "info", "Z300", "--cap", "512"], &[]);
    assert_eq!(code, 0);

    let (code, _, stderr) = run(&["ring", "info", "Z4", "--cap", "1"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("at least 2"), "stderr: {stderr}");

    let (code, _, stderr) = run(&["verify", "--parallelism", "0"], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("at least 1"), "stderr: {stderr}");

    let (code, _, _) = run(&["nonsense"], &[]);
    assert_eq!(code, 2);
}

#[test]
fn cap_env_var_overrides_default_and_the_flag_wins() {
    let (code, _, _) = run(&["ring", "info", "Z300"], &[("RINGLAB_CAP", "512")]);
    assert_eq!(code, 0);

    let (code, _, stderr) = run(
        &["ring", "info", "Z300", "--cap", "16"],
        &[("RINGLAB_CAP", "512")],
    );
    assert_eq!(code, 2, "explicit flag must beat the environment");
    assert!(stderr.contains("cap"), "stderr: {stderr}");

    let (code, _, stderr) = run(&["ring", "info", "Z4"], &[("RINGLAB_CAP", "abc")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("RINGLAB_CAP"), "stderr: {stderr}");
}

#[test]
fn classify_single_ideal_matches_the_known_profile() {
    let v = run_json(&["classify", "Z16", "--gens", "8", "--format", "json"]);
    assert_eq!(v["ring"], "Z16");
    let row = &v["ideals"][0];
    assert_eq!(row["members"], serde_json::json!([0, 8]));
    assert_eq!(row["profile"]["weakly_one_absorbing_prime"], false);
    assert_eq!(row["profile"]["primary"], true);
    assert_eq!(
        row["profile"]["witnesses"]["weakly_one_absorbing_prime"],
        serde_json::json!([2, 2, 2])
    );

    let (code, text, _) = run(&["classify", "Z16", "--gens", "8"], &[]);
    assert_eq!(code, 0);
    assert!(text.contains("weakly_one_absorbing_prime: no  witness (2, 2, 2)"));
    assert!(text.contains("primary: yes"));
}

#[test]
fn classify_without_gens_covers_every_ideal() {
    let (code, text, _) = run(&["classify", "Z12"], &[]);
    assert_eq!(code, 0);
    assert_eq!(text.matches("ideal {").count(), 6);
    assert!(text.contains("ideal {0, 4, 8} in Z12"));
}

#[test]
fn classify_csv_flattens_witness_tuples() {
    let (code, csv, _) = run(&["classify", "Z16", "--gens", "8", "--format", "csv"], &[]);
    assert_eq!(code, 0);
    let mut lines = csv.lines();
    let header = lines.next().unwrap();
    assert!(header.starts_with("ring,members,prime,"));
    assert!(header.ends_with(",witnesses"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("Z16,0;8,"));
    assert!(row.contains("weakly_one_absorbing_prime=2;2;2"));
}

#[test]
fn ideals_list_shows_the_lattice() {
    let v = run_json(&["ideals", "list", "Z12", "--format", "json"]);
    assert_eq!(v["count"], 6);
    assert_eq!(v["order"], 12);
    let maximal: Vec<bool> = v["ideals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| row["maximal"].as_bool().unwrap())
        .collect();
    assert_eq!(maximal.iter().filter(|&&m| m).count(), 2);

    let (code, csv, _) = run(&["ideals", "list", "Z12", "--format", "csv"], &[]);
    assert_eq!(code, 0);
    assert_eq!(csv.lines().count(), 7);
    assert!(csv.contains("Z12,2,3,true,false,false,0;4;8"));
}

#[test]
fn search_finds_the_known_separations() {
    let corpus = temp_file("search.corpus", "Z8\nZ12\nZ16\nZ2 x Z2 x Z2\n");
    let path = corpus.to_str().unwrap();

    let v = run_json(&[
        "search",
        "weakly_one_absorbing_prime && !weakly_prime",
        "--corpus",
        path,
        "--format",
        "json",
    ]);
    assert_eq!(v["rings_scanned"], 4);
    let hits = v["hits"].as_array().unwrap();
    assert!(hits
        .iter()
        .any(|h| h["ring"] == "Z12" && h["members"] == serde_json::json!([0, 4, 8])));

    let v = run_json(&[
        "search",
        "weakly_two_absorbing && !weakly_one_absorbing_prime",
        "--corpus",
        path,
        "--format",
        "json",
    ]);
    let hits = v["hits"].as_array().unwrap();
    // The three coordinate axes of the field cube, plus {0,6} in Z12
    // (where (3,3,2) violates the stronger property).
    assert_eq!(hits.len(), 4);
    assert!(hits
        .iter()
        .any(|h| h["ring"] == "Z2 x Z2 x Z2" && h["members"] == serde_json::json!([0, 4])));
    assert!(hits
        .iter()
        .any(|h| h["ring"] == "Z12" && h["members"] == serde_json::json!([0, 6])));
    assert_eq!(
        hits.iter().filter(|h| h["ring"] == "Z2 x Z2 x Z2").count(),
        3,
        "exactly the three axes qualify in the cube"
    );

    let v = run_json(&["search", "prime && !weakly_prime", "--corpus", path, "--format", "json"]);
    assert_eq!(v["hits"].as_array().unwrap().len(), 0);

    let (code, text, _) = run(
        &["search", "weakly_one_absorbing_prime && !weakly_prime", "--corpus", path],
        &[],
    );
    assert_eq!(code, 0);
    assert!(text.contains("Z12  {0, 4, 8}"));

    fs::remove_file(corpus).ok();
}

#[test]
fn search_respects_operator_precedence() {
    let corpus = temp_file("precedence.corpus", "Z12\n");
    let path = corpus.to_str().unwrap();

    // && binds tighter than ||: (!prime && prime) || primary is primary,
    // so prime primary ideals such as the maximal {0,2,4,6,8,10} must hit.
    let v = run_json(&[
        "search",
        "!prime && prime || primary",
        "--corpus",
        path,
        "--format",
        "json",
    ]);
    assert!(v["hits"]
        .as_array()
        .unwrap()
        .iter()
        .any(|h| h["members"] == serde_json::json!([0, 2, 4, 6, 8, 10])));

    fs::remove_file(corpus).ok();
}

#[test]
fn search_rejects_malformed_expressions() {
    for (expr, fragment) in [
        ("(prime", "missing ')'"),
        ("prime &&", "unexpected end"),
        ("prime & weakly_prime", "expected '&&'"),
        ("prime )", "trailing input"),
        ("prime ? weakly_prime", "unexpected character"),
        ("bogus", "unknown flag"),
        ("", "empty expression"),
    ] {
        let (code, _, stderr) = run(&["search", expr, "--corpus", "unused.txt"], &[]);
        assert_eq!(code, 2, "expr {expr:?}");
        assert!(stderr.contains(fragment), "expr {expr:?}: stderr {stderr}");
    }
}

#[test]
fn verify_on_a_corpus_file_emits_the_full_report() {
    let corpus = temp_file("verify.corpus", "Z8\nZ12\n");
    let path = corpus.to_str().unwrap();

    let v = run_json(&["verify", "--corpus", path, "--format", "json"]);
    assert_eq!(v["config"]["cap"], 256);
    assert_eq!(v["config"]["corpus_source"].as_str().unwrap(), path);
    let rows = v["corpus"].as_array().unwrap();
    assert_eq!(rows.len(), 3, "two file rings plus the constructed family");
    assert_eq!(rows[0]["spec"], "Z8");
    assert_eq!(rows[1]["spec"], "Z12");
    assert!(rows[2]["spec"].as_str().unwrap().contains("idealization"));
    assert!(rows.iter().all(|r| r["status"] == "ok"));
    assert_eq!(v["summary"]["counterexamples"], 0);
    assert!(v["results"].as_array().unwrap().len() >= 30);

    let v = run_json(&["verify", "--corpus", path, "--check", "colon", "--format", "json"]);
    let per_check = v["summary"]["per_check"].as_object().unwrap();
    assert_eq!(per_check.keys().collect::<Vec<_>>(), vec!["colon-weakly-prime"]);

    fs::remove_file(corpus).ok();
}

#[test]
fn verify_writes_the_report_to_a_file_when_asked() {
    let corpus = temp_file("output.corpus", "Z8\n");
    let out_path = std::env::temp_dir()
        .join(format!("ringlab-cli-{}-report.json", std::process::id()));
    let (code, stdout, stderr) = run(
        &[
            "verify",
            "--corpus",
            corpus.to_str().unwrap(),
            "--check",
            "colon",
            "--format",
            "json",
            "--output",
            out_path.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.is_empty(), "report must go to the file, not stdout");
    let v: Value =
        serde_json::from_str(&fs::read_to_string(&out_path).expect("report file")).unwrap();
    assert_eq!(v["summary"]["counterexamples"], 0);

    fs::remove_file(corpus).ok();
    fs::remove_file(out_path).ok();
}

#[test]
fn verify_rejects_bad_corpus_lines_with_positions() {
    let corpus = temp_file("bad.corpus", "Z8\nZnope\n");
    let (code, _, stderr) = run(&["verify", "--corpus", corpus.to_str().unwrap()], &[]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
    fs::remove_file(corpus).ok();
}

#[test]
fn verify_reports_build_failures_and_exits_two() {
    let corpus = temp_file("buildfail.corpus", "Z8\nZ300\n");
    let path = corpus.to_str().unwrap();

    let (code, text, _) = run(&["verify", "--corpus", path], &[]);
    assert_eq!(code, 2);
    assert!(text.contains("build error"), "text: {text}");
    assert!(text.contains("Z300"));
    assert!(text.contains("1 failed to build"));

    let (code, stdout, _) = run(&["verify", "--corpus", path, "--format", "json"], &[]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["summary"]["errors"], 1);

    fs::remove_file(corpus).ok();
}

#[test]
fn verify_runs_are_deterministic_modulo_timing() {
    let corpus = temp_file("det.corpus", "Z8\nZ12\nZ2 x Z4\n");
    let path = corpus.to_str().unwrap();

    let strip = |mut v: Value| -> Value {
        v["config"]["generated_unix"] = Value::Null;
        for result in v["results"].as_array_mut().unwrap() {
            result["millis"] = Value::Null;
        }
        v
    };
    let first = strip(run_json(&["verify", "--corpus", path, "--format", "json"]));
    let second = strip(run_json(&["verify", "--corpus", path, "--format", "json"]));
    assert_eq!(first, second);

    fs::remove_file(corpus).ok();
}

#[test]
fn verify_csv_lists_one_row_per_verdict() {
    let corpus = temp_file("csv.corpus", "Z8\n");
    let (code, csv, _) = run(
        &["verify", "--corpus", corpus.to_str().unwrap(), "--check", "colon", "--format", "csv"],
        &[],
    );
    assert_eq!(code, 0);
    let lines: Vec<&str> = csv.lines().collect();
    assert!(lines[0].starts_with("ring,check,outcome,instances,millis,"));
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("Z8,colon-weakly-prime,Verified,5,"));
    fs::remove_file(corpus).ok();
}

#[test]
fn open_question_reports_without_judging() {
    let corpus = temp_file("oq.corpus", "Z8\nZ12\nZ16\n");
    let path = corpus.to_str().unwrap();

    let v = run_json(&["open-question", "--corpus", path, "--format", "json"]);
    assert_eq!(v["rings_scanned"], 3);
    assert!(v["instances_checked"].as_u64().unwrap() > 0);
    assert!(v["hits"].is_array());
    assert_eq!(v["build_errors"].as_array().unwrap().len(), 0);

    let (code, text, _) = run(&["open-question", "--corpus", path], &[]);
    assert_eq!(code, 0);
    assert!(text.contains("open question scan: 3 rings"));

    fs::remove_file(corpus).ok();
}

#[test]
fn default_corpus_verify_headline_path() {
    let (code, text, stderr) = run(&["verify", "--check", "colon"], &[]);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(text.contains("rings: 135 (135 ok, 0 failed to build)"), "text: {text}");
    assert!(text.contains("colon-weakly-prime"));
    assert!(text.contains("0 counterexamples"));
}
