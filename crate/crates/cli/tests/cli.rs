use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

const LOOP: &str = "vertices: v\narrows: a: v -> v\nrelations: a a\n";
const TWO_CYCLE: &str = "vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a b, b a\n";
const A3: &str = "vertices: 1 2 3\narrows: a: 1 -> 2, b: 2 -> 3\nrelations: a b\n";

fn quiver(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn hhcalc(args: &[&str], file: &NamedTempFile) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hhcalc"));
    cmd.arg(args[0]).arg(file.path()).args(&args[1..]);
    cmd.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn dims_column(v: &serde_json::Value, source: &str) -> Vec<u64> {
    v["rows"].as_array().unwrap().iter().map(|r| r[source]["dim"].as_u64().unwrap()).collect()
}

#[test]
fn loop_dims_in_char_two() {
    let f = quiver(LOOP);
    let o = hhcalc(&["dims", "--max-degree", "4", "--both", "--char", "2", "--json"], &f);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(dims_column(&v, "oracle"), vec![2; 5]);
    assert_eq!(dims_column(&v, "formula"), vec![2; 5]);
    assert_eq!(v["all_agree"], true);
}

#[test]
fn a3_dims_table() {
    let f = quiver(A3);
    let o = hhcalc(&["dims", "--max-degree", "5", "--both"], &f);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("all degrees agree"));
    let v = json(&hhcalc(&["dims", "--max-degree", "5", "--both", "--json"], &f));
    assert_eq!(dims_column(&v, "oracle"), vec![1, 0, 0, 0, 0, 0]);
}

#[test]
fn single_source_modes() {
    let f = quiver(TWO_CYCLE);
    let v = json(&hhcalc(&["dims", "--max-degree", "3", "--formula", "--json"], &f));
    assert_eq!(v["mode"], "formula");
    assert!(v["rows"][0]["oracle"].is_null());
    assert_eq!(dims_column(&v, "formula"), vec![1; 4]);
    let v = json(&hhcalc(&["dims", "--max-degree", "3", "--oracle", "--json"], &f));
    assert!(v["rows"][0]["formula"].is_null());
    assert_eq!(dims_column(&v, "oracle"), vec![1; 4]);
}

#[test]
fn two_cycle_cup_witness() {
    let f = quiver(TWO_CYCLE);
    let o = hhcalc(&["witness", "--max-degree", "4", "--kind", "cup", "--json"], &f);
    assert_eq!(o.status.code(), Some(0));
    let w = &json(&o)["witness"];
    assert_eq!(w["omega"], "(ab, e_1)");
    assert_eq!(w["verified"], true);
    assert_eq!(w["recheck"], true);
}

#[test]
fn bracket_witness_and_characteristic_guard() {
    let f = quiver(TWO_CYCLE);
    let o = hhcalc(&["witness", "--max-degree", "4", "--kind", "bracket", "--json"], &f);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["witness"]["coefficient"], "-1");
    let o = hhcalc(&["witness", "--max-degree", "4", "--kind", "bracket", "--char", "3"], &f);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn no_witness_on_a3() {
    let f = quiver(A3);
    let o = hhcalc(&["witness", "--max-degree", "4", "--json"], &f);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["witness"].is_null());
}

#[test]
fn product_tables() {
    let f = quiver(TWO_CYCLE);
    let v = json(&hhcalc(&["cup", "--deg", "2", "2", "--json"], &f));
    assert_eq!(v["target_degree"], 4);
    assert_eq!(v["products"][0]["class"][0], "1");
    let v = json(&hhcalc(&["bracket", "--deg", "3", "5", "--json"], &f));
    assert_eq!(v["target_degree"], 7);
    assert_eq!(v["products"][0]["class"][0], "-1");
    let o = hhcalc(&["bracket", "--deg", "0", "0"], &f);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validate_reports_and_exit_codes() {
    let f = quiver(TWO_CYCLE);
    let v = json(&hhcalc(&["validate", "--json"], &f));
    assert_eq!(v["valid"], true);
    assert_eq!(v["gentle"], true);

    let bad = quiver("vertices: 1 2\narrows: a: 1 -> 2, b: 1 -> 2, c: 1 -> 2\n");
    let o = hhcalc(&["validate"], &bad);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("3 outgoing arrows"));
    assert_eq!(hhcalc(&["dims", "--max-degree", "2"], &bad).status.code(), Some(3));

    let infinite = quiver("vertices: 1\narrows: x: 1 -> 1\n");
    let v = json(&hhcalc(&["validate", "--json"], &infinite));
    assert_eq!(v["finite_dimensional"], false);
}

#[test]
fn invalid_input_exits_two() {
    let f = quiver("vertices: 1 2\narrows: a: 1 -> 2, b: 2 -> 1\nrelations: a c\n");
    let o = hhcalc(&["dims", "--max-degree", "2"], &f);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`c`"));
    let g = quiver(LOOP);
    assert_eq!(hhcalc(&["dims", "--max-degree", "2", "--char", "4"], &g).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_hhcalc"))
        .args(["dims", "/nonexistent/q", "--max-degree", "1"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let f = quiver(TWO_CYCLE);
    let o = hhcalc(&["selftest", "--max-degree", "4", "--json"], &f);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(json(&o)["passed"], true);
}

#[test]
fn output_is_deterministic() {
    let f = quiver(TWO_CYCLE);
    for args in [
        &["dims", "--max-degree", "5", "--json"][..],
        &["dims", "--max-degree", "5"][..],
        &["selftest", "--max-degree", "3"][..],
        &["cup", "--deg", "1", "2"][..],
    ] {
        assert_eq!(hhcalc(args, &f).stdout, hhcalc(args, &f).stdout, "{args:?}");
    }
}
