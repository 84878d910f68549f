//! End-to-end runs of the `lincirc` binary.

use std::path::Path;
use std::process::{Command, Output};

use lincirc_tools::format::{parse_circuit, parse_matrix};
use serde_json::Value;
use tempfile::TempDir;

fn lincirc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lincirc")).args(args).output().unwrap()
}

fn json(bytes: &[u8]) -> Value {
    serde_json::from_slice(bytes).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(bytes)))
}

fn ok(args: &[&str]) -> Value {
    let out = lincirc(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    json(&out.stdout)
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_str().unwrap().to_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    std::fs::write(&p, text).unwrap();
    p
}

fn read(p: &str) -> String {
    std::fs::read_to_string(Path::new(p)).unwrap()
}

#[test]
fn gen_complement_identity() {
    let dir = TempDir::new().unwrap();
    let out = path(&dir, "ci8.txt");
    let r = ok(&["gen", "--kind", "complement-identity", "--n", "8", "--out", &out]);
    assert_eq!(r["weight"], 56);
    assert_eq!(r["kind"], "complement-identity");
    assert_eq!(r["seed"], 0);
    assert_eq!(parse_matrix(&read(&out)).unwrap().weight(), 56);
}

#[test]
fn artifact_on_stdout_moves_report_to_stderr() {
    let out = lincirc(&["gen", "--kind", "identity", "--n", "3"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "MATRIX 3 3\n100\n010\n001\n");
    assert_eq!(json(&out.stderr)["weight"], 3);
}

#[test]
fn random_gen_is_seeded() {
    let a = lincirc(&["gen", "--kind", "random", "--n", "10", "--seed", "5"]).stdout;
    let b = lincirc(&["gen", "--kind", "random", "--n", "10", "--seed", "5"]).stdout;
    let c = lincirc(&["gen", "--kind", "random", "--n", "10", "--seed", "6"]).stdout;
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn satcount_small_formula() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "f.cnf", "c x1 or x2\np cnf 2 1\n1 2 0\n");
    for via in ["direct", "pipeline"] {
        let r = ok(&["satcount", "--in", &f, "--via", via]);
        assert_eq!(r["count_or_parity"], 3, "{via}");
        let r = ok(&["satcount", "--in", &f, "--via", via, "--mode", "parity"]);
        assert_eq!(r["count_or_parity"], 1, "{via}");
    }
}

#[test]
fn satcount_odd_variable_count_and_threads() {
    let dir = TempDir::new().unwrap();
    // (x1 or x2) and (not x2 or x3): 4 of 8 assignments
    let f = write(&dir, "f.cnf", "p cnf 3 2\n1 2 0\n-2 3 0\n");
    for threads in ["1", "3"] {
        let r = ok(&["satcount", "--in", &f, "--via", "direct", "--threads", threads]);
        assert_eq!(r["count_or_parity"], 4);
    }
    assert_eq!(ok(&["satcount", "--in", &f])["count_or_parity"], 4);
}

#[test]
fn lupanov_build_on_all_ones() {
    let dir = TempDir::new().unwrap();
    let m = path(&dir, "ones.txt");
    ok(&["gen", "--kind", "ones", "--n", "256", "--out", &m]);
    let c = path(&dir, "ones.circ");
    let r = ok(&["build", "--method", "lupanov", "--in", &m, "--b", "5", "--out", &c]);
    let wires = r["circuit"]["wires"].as_u64().unwrap();
    assert!(wires <= 20_000, "{wires}");
    assert_eq!(r["trivial_wires"], 65_536);
    assert_eq!(parse_circuit(&read(&c)).unwrap().wire_count() as u64, wires);
}

#[test]
fn build_rewrite_eval_chain() {
    let dir = TempDir::new().unwrap();
    let m = path(&dir, "a.txt");
    ok(&["gen", "--kind", "random", "--rows", "6", "--cols", "9", "--seed", "3", "--out", &m]);
    let or = path(&dir, "or.circ");
    ok(&["build", "--method", "lupanov", "--in", &m, "--out", &or]);
    let xor = path(&dir, "xor.circ");
    let r = ok(&["rewrite", "--in", &or, "--target", "xor", "--out", &xor]);
    assert_eq!(r["strategy"], "depth1");
    let back = path(&dir, "back.txt");
    ok(&["eval", "--in", &xor, "--extract", "--out", &back]);
    assert_eq!(read(&back), read(&m));
    let r = ok(&["eval", "--in", &xor, "--ones"]);
    assert_eq!(r["output"].as_array().unwrap().len(), 6);
}

#[test]
fn tensor_build_uses_logarithmic_cover() {
    let dir = TempDir::new().unwrap();
    let b = path(&dir, "b.txt");
    let a = path(&dir, "a.txt");
    ok(&["gen", "--kind", "complement-identity", "--n", "4", "--out", &b]);
    ok(&["gen", "--kind", "identity", "--n", "4", "--out", &a]);
    let r = ok(&["build", "--method", "tensor", "--in", &a, "--left", &b, "--out", &path(&dir, "t.circ")]);
    assert_eq!(r["cover_size"], 4);
    let kron = path(&dir, "k.txt");
    ok(&["gen", "--kind", "kronecker", "--left", &b, "--right", &a, "--out", &kron]);
    let extracted = path(&dir, "e.txt");
    ok(&["eval", "--in", &path(&dir, "t.circ"), "--extract", "--out", &extracted]);
    assert_eq!(read(&extracted), read(&kron));
}

#[test]
fn analyze_matrix_and_circuit() {
    let dir = TempDir::new().unwrap();
    let m = path(&dir, "i4.txt");
    ok(&["gen", "--kind", "identity", "--n", "4", "--out", &m]);
    let r = ok(&["analyze", "--in", &m, "--s", "1", "--t", "1"]);
    assert_eq!(r["matrix"]["freeness"]["free"], true);
    assert_eq!(r["matrix"]["mp_bound"]["bound"], 4);
    assert_eq!(r["matrix"]["rank_sum"]["exact"], 4);
    let c = write(&dir, "bad.circ", "CIRCUIT SUM 2 2 1\n3: 1 2\n4: 3 1\nOUTPUTS: 4\n");
    let r = ok(&["analyze", "--in", &c]);
    assert_eq!(r["violations"].as_array().unwrap().len(), 1);
    assert_eq!(r["circuit"]["wires"], 4);
    assert!(r["matrix"].is_null());
}

#[test]
fn oracle_reports_all_rings() {
    let dir = TempDir::new().unwrap();
    let m = path(&dir, "ci3.txt");
    ok(&["gen", "--kind", "complement-identity", "--n", "3", "--out", &m]);
    let r = ok(&["oracle", "--in", &m]);
    assert_eq!((r["c_or"].clone(), r["c_sum"].clone(), r["c_xor"].clone()), (6.into(), 6.into(), 6.into()));
    let w = path(&dir, "w.circ");
    let r = ok(&["oracle", "--in", &m, "--ring", "sum", "--out", &w]);
    assert_eq!(r["c_sum"], 6);
    assert!(r["c_or"].is_null());
    assert_eq!(parse_circuit(&read(&w)).unwrap().wire_count(), 6);
    let r = ok(&["oracle", "--in", &m, "--budget", "5"]);
    assert!(r["c_or"].is_null());
    assert_eq!(r["unresolved_at_least"], 6);
}

#[test]
fn uniformity_command() {
    let r = ok(&["uniformity", "--samples", "4000", "--seed", "9"]);
    assert_eq!(r["dof"], 15);
    assert_eq!(r["seed"], 9);
    assert_eq!(r["counts"].as_array().unwrap().iter().map(|c| c.as_u64().unwrap()).sum::<u64>(), 4000);
}

#[test]
fn kuniform_build() {
    let dir = TempDir::new().unwrap();
    let c = path(&dir, "k.circ");
    let r = ok(&[
        "build", "--method", "kuniform", "--ring", "xor", "--t", "3", "--n", "8", "--k", "2", "--seed", "4", "--out", &c,
    ]);
    assert_eq!(r["circuit"]["semiring"], "XOR");
    assert_eq!(r["circuit"]["n_inputs"], 8);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(lincirc(&["eval", "--in", &path(&dir, "missing")]).status.code(), Some(2));
    assert_eq!(lincirc(&["gen", "--kind", "nonsense"]).status.code(), Some(2));
    let bad = write(&dir, "bad.txt", "MATRIX 2 2\n10\n");
    let out = lincirc(&["analyze", "--in", &bad]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unexpected end of input"));
    let zero = write(&dir, "z.txt", "MATRIX 2 2\n10\n00\n");
    assert_eq!(lincirc(&["oracle", "--in", &zero]).status.code(), Some(1));
    let big = write(&dir, "big.cnf", "p cnf 40 1\n1 0\n");
    assert_eq!(lincirc(&["satcount", "--in", &big]).status.code(), Some(1));
}
