//! End-to-end tests against the built binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pig2dom"))
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

const FIG4: &str = "straight 10\n3 4 5 7 7 8 9 10 10 10\n";
const P5: &str = "straight 5\n2 3 4 5 5\n";

#[test]
fn solve_fixture_all_algorithms() {
    for algo in ["reduced", "reference", "oracle"] {
        let out = run_stdin(&["solve", "-a", algo, "-"], FIG4);
        assert_eq!(out.status.code(), Some(0), "{algo}");
        let text = stdout(&out);
        assert!(text.starts_with("size 6\n"), "{algo}: {text}");
    }
}

#[test]
fn solve_json_schema() {
    let out = run_stdin(&["solve", "--json", "-"], FIG4);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["size"], 6);
    assert_eq!(v["algorithm"], "reduced");
    assert_eq!(v["vertices"], serde_json::json!([2, 3, 4, 7, 8, 9]));
    assert!(v["elapsed_ms"].is_number());
    let blocks = v["blocks"].as_array().unwrap();
    assert_eq!(blocks.len(), 1);
    assert_eq!(blocks[0]["repr"], serde_json::json!([2, 3]));
    assert_eq!(blocks[0]["size"], 6);
    assert!(v.get("permutation").is_none());
}

#[test]
fn solve_infeasible_exit_code() {
    let out = run_stdin(&["solve", "-"], P5);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).trim(), "INFEASIBLE");
    let out = run_stdin(&["solve", "--json", "-"], P5);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["infeasible"], true);
}

#[test]
fn solve_empty_graph() {
    let out = run_stdin(&["solve", "-"], "straight 0\n");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "size 0\nwitness\n");
}

#[test]
fn parse_errors_exit_1_with_line_numbers() {
    let out = run_stdin(&["solve", "-"], "straight 3\n3 x 3\n");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr).into_owned();
    assert!(err.contains("line 2"), "{err}");

    let out = run_stdin(&["solve", "-f", "edges", "-"], FIG4);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn intervals_dialect_reports_input_labels() {
    // Fig. 1's interval family, scrambled; the witness must come back in
    // input positions.
    let text = "intervals 7\n9 13\n1 5\n2 6\n3 8\n10 14\n4 11\n7 12\n";
    let out = run_stdin(&["solve", "--json", "-"], text);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let perm = v["permutation"].as_array().unwrap();
    assert_eq!(perm.len(), 7);
    // Sorted order is [1,5],[2,6],[3,8],[4,11],[7,12],[9,13],[10,14]:
    // input positions 2,3,4,6,7,1,5.
    assert_eq!(
        v["permutation"],
        serde_json::json!([2, 3, 4, 6, 7, 1, 5])
    );
}

#[test]
fn check_valid_and_invalid() {
    let out = run_stdin(&["check", "--set", "2,3,4,8,9,10", "-"], FIG4);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "VALID");

    let out = run_stdin(&["check", "--set", "2,3,4,8,9", "-"], FIG4);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).trim(), "INVALID");

    let out = run_stdin(&["check", "--set", "2,99", "-"], FIG4);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn export_d_matches_figure_arcs() {
    let out = run_stdin(&["export", "--which", "d", "-"], FIG4);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"5|6\" -> \"14|15\" [label=\"6\"];"), "{text}");
    assert!(text.contains("\"14|15\" -> \"t\""));
}

#[test]
fn export_r_styles_compacts() {
    let out = run_stdin(&["export", "--which", "r", "-"], FIG4);
    let text = stdout(&out);
    assert!(text.contains("style=dashed"));
}

#[test]
fn gen_solve_round_trip() {
    let dir = std::env::temp_dir().join(format!("pig2dom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("inst.straight");
    let out = bin()
        .args([
            "gen",
            "--model",
            "straight",
            "--n",
            "30",
            "--density",
            "0.4",
            "--seed",
            "11",
            "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin().arg("solve").arg(&path).output().unwrap();
    assert!(matches!(out.status.code(), Some(0) | Some(2)));

    // Deterministic: regenerating yields byte-identical content.
    let first = std::fs::read_to_string(&path).unwrap();
    bin()
        .args([
            "gen",
            "--model",
            "straight",
            "--n",
            "30",
            "--density",
            "0.4",
            "--seed",
            "11",
            "--out",
        ])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(first, std::fs::read_to_string(&path).unwrap());
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn gen_intervals_parses_back() {
    let out = bin()
        .args([
            "gen", "--model", "intervals", "--n", "12", "--density", "0.5", "--seed", "3",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("intervals 12\n"));
    let solved = run_stdin(&["solve", "-"], &text);
    assert!(matches!(solved.status.code(), Some(0) | Some(2)));
}

#[test]
fn xval_passes_and_respects_oracle_guard() {
    let out = bin()
        .args(["xval", "--trials", "60", "--nmax", "12", "--seed", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("mismatches 0"));

    let out = bin()
        .args(["xval", "--trials", "1", "--nmax", "30"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn xval_zero_nmax_is_vacuous() {
    let out = bin()
        .args(["xval", "--trials", "1", "--nmax", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("trials 1"));
}

#[test]
fn env_seed_is_honored() {
    let with_env = bin()
        .env("PIG2DOM_SEED", "1234")
        .args(["gen", "--model", "straight", "--n", "20", "--density", "0.5"])
        .output()
        .unwrap();
    let with_flag = bin()
        .args([
            "gen", "--model", "straight", "--n", "20", "--density", "0.5", "--seed", "1234",
        ])
        .output()
        .unwrap();
    assert_eq!(stdout(&with_env), stdout(&with_flag));
}

#[test]
fn bench_prints_rows() {
    let out = bin()
        .args([
            "bench",
            "--family",
            "path-power",
            "--k",
            "8",
            "--sizes",
            "2000,4000",
            "--reps",
            "1",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("2000 "));
    assert!(rows[1].starts_with("4000 "));
}

#[test]
fn usage_errors_exit_1_help_exits_0() {
    let out = bin().args(["solve"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let out = bin().args(["--help"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
