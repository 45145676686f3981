//! End-to-end tests running the built binary: output formats, determinism,
//! and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn dyadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dyadic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = dyadic(args);
    assert!(
        out.status.success(),
        "`{args:?}` failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    dyadic(args).status.code().expect("exit code")
}

#[test]
fn count_values() {
    assert_eq!(stdout(&["count", "sym", "odd", "7"]).trim(), "8");
    assert_eq!(stdout(&["count", "sym", "chiral", "9"]).trim(), "20");
    assert_eq!(
        stdout(&["count", "sym", "chiral", "5", "--valuation", "2"]).trim(),
        "2"
    );
    assert_eq!(stdout(&["count", "hyp", "odd", "3"]).trim(), "8");
    let table = stdout(&["count", "hyp", "det-table", "2"]);
    assert_eq!(table, "N1 = 1\nNeps = 1\nNsgn0 = 1\nNsgn1 = 2\np2 = 5\n");
    let demi = stdout(&["count", "demi", "det-table", "4"]);
    assert!(
        demi.contains("Nsgn = 8") && demi.contains("irr = 13"),
        "{demi}"
    );
}

#[test]
fn count_jsonl_parses() {
    let line = stdout(&["--format", "jsonl", "count", "sym", "odd", "7"]);
    let value: serde_json::Value = serde_json::from_str(line.trim()).expect("valid JSON");
    assert_eq!(value["command"], "count");
    assert_eq!(value["params"]["n"], 7);
    assert_eq!(value["payload"], "8");
}

#[test]
fn sampling_is_reproducible() {
    let args = ["sample", "sym", "odd", "4095", "--seed", "1"];
    let first = stdout(&args);
    let second = stdout(&args);
    assert_eq!(first, second, "same seed, same bytes");
    let other = stdout(&["sample", "sym", "odd", "4095", "--seed", "2"]);
    assert_ne!(first, other, "different seed, different draw");

    assert_eq!(stdout(&["sample", "sym", "odd", "1"]).trim(), "1");

    let frob = stdout(&["sample", "sym", "odd", "4095", "--seed", "1", "--frobenius"]);
    assert!(frob.starts_with("([") && frob.contains("], ["), "{frob}");
}

#[test]
fn sampled_bipartitions_are_odd() {
    let out = stdout(&["sample", "hyp", "odd", "3", "--count", "8", "--seed", "7"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    for line in lines {
        let (alpha, beta) = line.split_once('|').expect("bipartition text");
        let parse = |s: &str| -> dyadic::partition::Partition {
            if s == "-" {
                dyadic::partition::Partition::empty()
            } else {
                dyadic::partition::Partition::new(
                    s.split(',').map(|p| p.parse().unwrap()).collect(),
                )
            }
        };
        let bp = dyadic::hyperoct::BiPartition::new(parse(alpha), parse(beta));
        assert_eq!(bp.size(), 3);
        assert!(dyadic::hyperoct::is_odd_bipartition(&bp), "{line}");
    }
}

#[test]
fn chiral_sampling_threshold() {
    let out = dyadic(&["sample", "sym", "chiral", "80", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("threshold 40"), "{stderr}");

    // Restricting to the odd chiral family lifts the bound.
    let line = stdout(&["sample", "sym", "chiral", "80", "--seed", "3", "--clause1"]);
    assert!(!line.trim().is_empty());

    // A config file can raise the threshold.
    let dir = std::env::temp_dir().join("dyadic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("config.toml");
    std::fs::write(&config, "chiral_fallback_threshold = 100\n").unwrap();
    let line = stdout(&[
        "--config",
        config.to_str().unwrap(),
        "sample",
        "sym",
        "chiral",
        "80",
        "--seed",
        "3",
    ]);
    assert!(!line.trim().is_empty());
}

#[test]
fn enumeration_output() {
    let out = stdout(&["enumerate", "sym", "odd", "4"]);
    assert_eq!(out, "4\n3,1\n2,1,1\n1,1,1,1\n");
    let chiral = stdout(&["enumerate", "sym", "chiral", "3"]);
    let mut lines: Vec<&str> = chiral.lines().collect();
    lines.sort_unstable();
    assert_eq!(lines, vec!["1,1,1", "2,1"]);
    assert_eq!(stdout(&["enumerate", "hyp", "odd", "0"]), "-|-\n");
    assert_eq!(exit_code(&["enumerate", "sym", "odd", "100"]), 2);
}

#[test]
fn tree_exports() {
    let dot = stdout(&["tree", "macdonald", "12", "--format", "dot"]);
    assert!(dot.starts_with("graph \"macdonald\" {"), "{dot}");
    assert!(dot.contains("--"));

    let json = stdout(&["tree", "macdonald", "6", "--format", "json"]);
    let graph = dyadic::bratteli::from_json(json.trim()).expect("importable JSON");
    assert_eq!(graph.level_sizes(), vec![1, 1, 2, 2, 4, 4, 8]);

    assert_eq!(exit_code(&["tree", "young", "200"]), 2);
}

#[test]
fn tree_verification() {
    let report = stdout(&["tree", "macdonald", "16", "--verify"]);
    assert!(report.contains("verdict: PASS"), "{report}");

    let y2d = stdout(&["tree", "y2d", "3", "--verify"]);
    assert!(y2d.contains("NOT-A-TREE"), "{y2d}");
    assert!(y2d.contains("1|1,1 -- 1+ -- -|1 -- 1-"), "{y2d}");

    let pascal = stdout(&["tree", "pascal", "15", "--verify"]);
    assert!(pascal.contains("verdict: PASS"), "{pascal}");
}

#[test]
fn figures_output() {
    let growth = stdout(&["figures", "growth", "8"]);
    let mut lines = growth.lines();
    assert_eq!(lines.next(), Some("n,a_n,b_n_plus_2,ratio"));
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(
        rows[3][..3],
        ["4".to_string(), "4".to_string(), "4".to_string()]
    );
    for row in &rows {
        let ratio: f64 = row[3].parse().unwrap();
        assert!((0.4..=1.0).contains(&ratio), "ratio {ratio}");
    }

    let bn = stdout(&["figures", "bn-plot", "18"]);
    let mut lines = bn.lines();
    assert_eq!(lines.next(), Some("n,N1,Neps,Nsgn0,Nsgn1"));
    let p2 = dyadic::hyperoct::p2_table(18);
    for row in lines {
        let cells: Vec<u64> = row.split(',').map(|c| c.parse().unwrap()).collect();
        let total: u64 = cells[1..].iter().sum();
        let expected: u64 = (&p2[cells[0] as usize]).try_into().unwrap();
        assert_eq!(total, expected, "row sum at n = {}", cells[0]);
    }
}

#[test]
fn figures_to_file() {
    let dir = std::env::temp_dir().join("dyadic-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("growth.csv");
    let _ = std::fs::remove_file(&path);
    stdout(&["--out", path.to_str().unwrap(), "figures", "growth", "4"]);
    let written = std::fs::read_to_string(Path::new(&path)).unwrap();
    assert!(written.starts_with("n,a_n,b_n_plus_2,ratio\n"));
    assert_eq!(written.lines().count(), 5);
}

#[test]
fn verify_command() {
    let out = stdout(&["verify", "--max-n", "10", "--suites", "counts,ratio,trees"]);
    assert!(out.contains("suite counts: ok"), "{out}");
    assert!(out.contains("suite ratio: ok"), "{out}");
    assert!(out.contains("suite trees: ok"), "{out}");
    assert!(
        out.contains("b(4097)/p(4097) = 2.4236148775415833e-47"),
        "{out}"
    );

    let big_ratio = stdout(&["verify", "--max-n", "4096", "--suites", "ratio"]);
    assert!(big_ratio.contains("suite ratio: ok"), "{big_ratio}");

    assert_eq!(exit_code(&["verify", "--suites", "nonsense"]), 2);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(exit_code(&["count", "sym", "chiral", "0"]), 2);
    assert_eq!(exit_code(&["count", "demi", "det-table", "3"]), 2);
    assert_eq!(exit_code(&["count", "sym", "det-table", "5"]), 2);
    assert_eq!(exit_code(&["count", "demi", "odd", "5"]), 2);
    assert_eq!(exit_code(&["sample", "sym", "chiral", "1"]), 2);
    assert_eq!(exit_code(&["bogus"]), 2);
}
