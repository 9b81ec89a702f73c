// SPDX-License-Identifier: Apache-2.0

//! End-to-end checks of the `centrality` binary: output bytes, metadata,
//! exit codes, and flag validation.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use centrality_core::{check_connected, load_edge_list};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_centrality"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("stderr is UTF-8")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    let mut f = std::fs::File::create(&path).unwrap();
    f.write_all(content.as_bytes()).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn exact_path3_csv_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "0 1\n1 2\n");
    let out = run(&["exact", &file]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "vertex,centrality,rank\n1,1,1\n0,0.6666666666666666,2\n2,0.6666666666666666,2\n"
    );
}

#[test]
fn exact_complete_graph_shares_rank_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let out = run(&["exact", &file]);
    assert_eq!(
        stdout(&out),
        "vertex,centrality,rank\n0,1,1\n1,1,1\n2,1,1\n3,1,1\n"
    );
}

#[test]
fn exact_json_has_meta_and_rows() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "0 1\n1 2\n");
    let out = run(&["exact", &file, "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["method"], "exact");
    assert_eq!(doc["meta"]["n"], 3);
    assert_eq!(doc["meta"]["m"], 2);
    assert_eq!(doc["rows"][0]["vertex"], 1);
    assert_eq!(doc["rows"][0]["centrality"], 1.0);
    assert_eq!(doc["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn exact_reads_stdin_with_dash() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_centrality"))
        .args(["exact", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.as_mut().unwrap().write_all(b"0 1\n1 2\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("1,1,1"));
}

#[test]
fn disconnected_input_exits_3_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "split.txt", "0 1\n2 3\n");
    let out = run(&["exact", &file]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("vertex 2 is unreachable"), "{}", stderr(&out));

    // The witness for a sampled run depends on which source is scanned
    // first, but some unreachable vertex must be named.
    let out = run(&["approx", &file, "--k", "2"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("is unreachable"), "{}", stderr(&out));
}

#[test]
fn malformed_input_exits_2_with_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "bad.txt", "0 1\nbogus 2\n");
    let out = run(&["exact", &file]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));

    let neg = write_file(dir.path(), "neg.txt", "0 1 -2\n");
    let out = run(&["exact", &neg]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 1"), "{}", stderr(&out));
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["exact", "/definitely/not/here.txt"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors_exit_1() {
    // Unknown flag, missing required flag, and bad enum value.
    assert_eq!(code(&run(&["exact", "--bogus"])), 1);
    assert_eq!(code(&run(&["sample-size", "--epsilon", "0.1"])), 1);
    assert_eq!(code(&run(&["sample-size", "--n", "10", "--epsilon", "0.1", "--format", "xml"])), 1);
    assert_eq!(code(&run(&[])), 1);
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&["--version"])), 0);
    assert_eq!(code(&run(&["approx", "--help"])), 0);
}

#[test]
fn approx_requires_exactly_one_mode() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "0 1\n1 2\n");
    let out = run(&["approx", &file]);
    assert_eq!(code(&out), 1);
    let out = run(&["approx", &file, "--epsilon", "0.3", "--k", "5"]);
    assert_eq!(code(&out), 1);
    let out = run(&["approx", &file, "--k", "5", "--sources", "0,1"]);
    assert_eq!(code(&out), 1);
    let out = run(&["approx", &file, "--delta", "0.01"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("--delta"), "{}", stderr(&out));
}

#[test]
fn approx_injected_sources_reproduce_exact_values() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "0 1\n1 2\n");
    let exact = stdout(&run(&["exact", &file]));
    let approx = stdout(&run(&["approx", &file, "--sources", "0,1,2"]));
    let (_meta, table) = approx.split_once("vertex,centrality,rank\n").unwrap();
    assert!(exact.ends_with(table));
    assert!(approx.contains("# sources=0,1,2\n"));
    assert!(approx.contains("# k=3\n"));
}

#[test]
fn approx_seeded_runs_are_reproducible_and_seed_sensitive() {
    let dir = tempfile::tempdir().unwrap();
    let mut ring = String::new();
    for v in 0..12 {
        ring.push_str(&format!("{} {}\n", v, (v + 1) % 12));
    }
    let file = write_file(dir.path(), "c12.txt", &ring);
    let a = run(&["approx", &file, "--k", "4", "--seed", "9"]);
    let b = run(&["approx", &file, "--k", "4", "--seed", "9"]);
    let c = run(&["approx", &file, "--k", "4", "--seed", "10"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    assert!(stdout(&a).contains("# seed=9\n"));
}

#[test]
fn approx_epsilon_mode_reports_plan_in_meta() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "0 1\n1 2\n");
    let out = run(&["approx", &file, "--epsilon", "1", "--delta", "0.5", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["method"], "sampled");
    assert_eq!(doc["meta"]["epsilon"], 1.0);
    assert_eq!(doc["meta"]["delta_vertex"], 0.5);
    assert_eq!(doc["meta"]["seed"], 0);
    assert!(doc["meta"]["k"].as_u64().unwrap() >= 1);
}

#[test]
fn approx_csv_and_json_agree_on_values() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "star.txt", "0 1\n0 2\n0 3\n0 4\n");
    let csv = stdout(&run(&["approx", &file, "--k", "3", "--seed", "2"]));
    let json = stdout(&run(&["approx", &file, "--k", "3", "--seed", "2", "--format", "json"]));
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    let table: Vec<&str> = csv
        .lines()
        .filter(|l| !l.starts_with('#'))
        .skip(1)
        .collect();
    assert_eq!(rows.len(), table.len());
    for (row, line) in rows.iter().zip(&table) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(row["vertex"].to_string(), fields[0]);
        assert_eq!(row["rank"].to_string(), fields[2]);
        let json_c = row["centrality"].as_f64().unwrap();
        let csv_c: f64 = fields[1].parse().unwrap();
        assert_eq!(json_c, csv_c);
    }
}

#[test]
fn audit_passes_and_exits_0_on_a_well_sized_run() {
    let out = run(&[
        "audit", "--spec", "complete:6", "--epsilon", "0.5", "--trials", "20", "--seed", "3",
        "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["aggregate"]["passed"], true);
    assert_eq!(doc["meta"]["trials"], 20);
    assert_eq!(doc["trials"].as_array().unwrap().len(), 20);
}

#[test]
fn audit_undersized_run_exits_4() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n");
    let out = run(&[
        "audit", &file, "--epsilon", "0.01", "--trials", "5", "--k", "1", "--seed", "1",
    ]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("passed=false"), "{}", stdout(&out));
    assert!(stderr(&out).contains("audit failed"), "{}", stderr(&out));
}

#[test]
fn audit_requires_exactly_one_graph_source() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "p3.txt", "0 1\n1 2\n");
    let out = run(&["audit", "--epsilon", "0.3"]);
    assert_eq!(code(&out), 1);
    let out = run(&["audit", &file, "--spec", "path:5", "--epsilon", "0.3"]);
    assert_eq!(code(&out), 1);
}

#[test]
fn audit_cap_blocks_large_graphs_until_raised() {
    let out = run(&[
        "audit", "--spec", "path:200", "--epsilon", "0.3", "--trials", "2", "--cap", "100",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("cap"), "{}", stderr(&out));
    let out = run(&[
        "audit", "--spec", "path:200", "--epsilon", "0.9", "--trials", "2", "--cap", "300",
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
}

#[test]
fn gen_writes_sorted_edge_lines() {
    let out = run(&["gen", "path:3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0 1 1\n1 2 1\n");
}

#[test]
fn gen_is_deterministic_per_seed_and_loadable() {
    let a = run(&["gen", "ws:100,6,0.1", "--seed", "7"]);
    let b = run(&["gen", "ws:100,6,0.1", "--seed", "7"]);
    let c = run(&["gen", "ws:100,6,0.1", "--seed", "8"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    let (graph, _) = load_edge_list(out_bytes(&a), false).unwrap();
    assert_eq!(graph.n(), 100);
    assert_eq!(graph.edge_count(), 300);
    assert!(check_connected(&graph).connected);
}

fn out_bytes(o: &Output) -> &[u8] {
    &o.stdout
}

#[test]
fn gen_writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ring.txt");
    let out = run(&["gen", "cycle:4", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0 1 1\n0 3 1\n1 2 1\n2 3 1\n");
}

#[test]
fn gen_requires_seed_for_random_specs() {
    let out = run(&["gen", "er:10,0.5"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("seed"), "{}", stderr(&out));
}

#[test]
fn gen_rejects_bad_specs_as_usage_errors() {
    assert_eq!(code(&run(&["gen", "blob:9"])), 1);
    assert_eq!(code(&run(&["gen", "cycle:2"])), 1);
}

#[test]
fn sample_size_frozen_case_csv() {
    let out = run(&["sample-size", "--n", "1000", "--epsilon", "0.1", "--delta", "0.000001"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n,epsilon,delta_vertex,delta_graph,k\n1000,0.1,0.000001,0.001,727\n"
    );
}

#[test]
fn sample_size_defaults_delta_to_inverse_n_squared() {
    let out = run(&["sample-size", "--n", "100", "--epsilon", "0.2", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["delta_vertex"], 0.0001);
    assert_eq!(doc["delta_graph"], 0.01);
    assert_eq!(code(&out), 0);
}

#[test]
fn sample_size_rejects_tiny_graphs_as_precondition() {
    let out = run(&["sample-size", "--n", "1", "--epsilon", "0.1"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn bench_reports_one_record_per_spec_with_warning_when_sampling_cannot_win() {
    let out = run(&[
        "bench", "--spec", "path:30", "--spec", "cycle:40", "--epsilon", "0.1", "--seed", "2",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "spec,n,m,k,k_over_n,exact_secs,approx_secs,speedup"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2);
    assert!(rows[0].starts_with("\"path:30\",30,29,"));
    assert!(rows[1].starts_with("\"cycle:40\",40,40,"));
    // epsilon 0.1 demands more samples than these graphs have vertices.
    assert!(stderr(&out).contains("exact sweep is cheaper"), "{}", stderr(&out));
}

#[test]
fn bench_json_shape() {
    let out = run(&[
        "bench", "--spec", "star:25", "--epsilon", "0.5", "--delta", "0.05", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["meta"]["epsilon"], 0.5);
    assert_eq!(doc["meta"]["delta_vertex"], 0.05);
    let records = doc["records"].as_array().unwrap();
    assert_eq!(records.len(), 1);
    assert_eq!(records[0]["spec"], "star:25");
    assert_eq!(records[0]["n"], 25);
    assert!(records[0]["exact_secs"].as_f64().unwrap() > 0.0);
}

#[test]
fn self_loops_and_duplicates_are_noted_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "messy.txt", "0 0 1\n0 1 2\n1 0 1\n1 2 1\n");
    let out = run(&["exact", &file]);
    assert_eq!(code(&out), 0);
    let err = stderr(&out);
    assert!(err.contains("1 self-loop"), "{err}");
    assert!(err.contains("1 duplicate edge"), "{err}");
}

#[test]
fn approx_plans_727_samples_for_a_thousand_vertex_graph() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("ws1000.txt");
    let gen = run(&["gen", "ws:1000,6,0.1", "--seed", "1", "-o", file.to_str().unwrap()]);
    assert_eq!(code(&gen), 0);
    let out = run(&[
        "approx",
        file.to_str().unwrap(),
        "--epsilon",
        "0.1",
        "--delta",
        "1e-6",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("# k=727"), "{text}");
    assert!(text.contains("# epsilon=0.1"), "{text}");
    assert!(text.contains("# delta_vertex=0.000001"), "{text}");
}
