use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn ballcut(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ballcut"))
        .args(args)
        .output()
        .unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn gen(dir: &TempDir, name: &str, extra: &[&str]) -> PathBuf {
    let out = dir.path().join(name);
    let mut args = vec!["gen", "--out", path_str(&out)];
    args.extend_from_slice(extra);
    let o = ballcut(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    out
}

fn row5(dir: &TempDir) -> PathBuf {
    gen(dir, "row.txt", &["--layout", "row", "--n", "5", "--spacing", "3"])
}

fn halve(input: &Path, extra: &[&str]) -> (i32, Value) {
    let mut args = vec!["halve", "--in", path_str(input), "--no-timing"];
    args.extend_from_slice(extra);
    let o = ballcut(&args);
    let json = serde_json::from_slice(&o.stdout).unwrap_or(Value::Null);
    (o.status.code().unwrap(), json)
}

fn verify(input: &Path, report: &Value, m: u64) -> Output {
    let normal: Vec<String> = report["normal"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap().to_string())
        .collect();
    let offset = report["offset"].as_f64().unwrap().to_string();
    let m = m.to_string();
    ballcut(&[
        "verify", "--in", path_str(input), "--normal", &normal.join(","), "--offset", &offset,
        "--m", &m,
    ])
}

#[test]
fn gen_grid_and_row() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(
        &dir,
        "g.txt",
        &["--dim", "2", "--layout", "grid", "--side", "10", "--spacing", "2.5", "--seed", "42"],
    );
    let text = std::fs::read_to_string(g).unwrap();
    assert_eq!(text.lines().next(), Some("2 100"));
    assert_eq!(text.lines().count(), 101);
    let row = std::fs::read_to_string(row5(&dir)).unwrap();
    assert_eq!(row, "2 5\n0.0 0.0\n3.0 0.0\n6.0 0.0\n9.0 0.0\n12.0 0.0\n");
}

#[test]
fn gen_rejects_small_spacing() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("x.txt");
    let o = ballcut(&["gen", "--side", "3", "--spacing", "2.0", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!out.exists());
}

#[test]
fn planar_halves_the_row() {
    let dir = tempfile::tempdir().unwrap();
    let row = row5(&dir);
    let (code, r) = halve(&row, &["--algo", "planar"]);
    assert_eq!(code, 0);
    assert_eq!(r["left_closed"], 3);
    assert_eq!(r["right_closed"], 3);
    assert_eq!(r["intersected"], 1);
    assert_eq!(r["intersected_ids"], serde_json::json!([2]));
    let raw = ballcut(&["halve", "--in", path_str(&row), "--no-timing"]).stdout;
    let raw = String::from_utf8(raw).unwrap();
    let order = [
        "algorithm", "n", "d", "normal", "offset", "left_closed", "right_closed", "intersected",
        "intersected_ids", "guarantees", "iterations", "warnings", "wall_ms",
    ];
    let positions: Vec<usize> = order
        .iter()
        .map(|k| raw.find(&format!("\n  \"{k}\":")).expect(k))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn nd_alpha_meets_guarantees() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(&dir, "g.txt", &["--layout", "grid", "--n", "10000", "--seed", "42"]);
    let (code, r) = halve(&g, &["--algo", "nd", "--alpha", "0.25"]);
    assert_eq!(code, 0);
    let min_side = r["guarantees"]["min_side"].as_u64().unwrap();
    let max_cut = r["guarantees"]["max_cut"].as_f64().unwrap();
    assert_eq!(min_side, 2500);
    assert!(r["left_closed"].as_u64().unwrap() >= min_side);
    assert!(r["right_closed"].as_u64().unwrap() >= min_side);
    assert!(r["intersected"].as_f64().unwrap() <= max_cut);
    assert!(verify(&g, &r, min_side).status.success());
}

#[test]
fn nd_on_tiny_instance_warns() {
    let dir = tempfile::tempdir().unwrap();
    let (code, r) = halve(&row5(&dir), &["--algo", "nd"]);
    assert_eq!(code, 2);
    assert!(!r["warnings"].as_array().unwrap().is_empty());
    assert!(r["guarantees"]["max_cut"].is_null());
}

#[test]
fn halve_reports_errors() {
    let dir = tempfile::tempdir().unwrap();
    let g = gen(&dir, "g3.txt", &["--dim", "3", "--side", "3"]);
    let (code, _) = halve(&g, &["--algo", "planar"]);
    assert_eq!(code, 1);
    let (code, _) = halve(&dir.path().join("missing.txt"), &[]);
    assert_eq!(code, 1);
}

#[test]
fn halve_output_passes_verify() {
    let dir = tempfile::tempdir().unwrap();
    for (name, extra) in [
        ("a.txt", ["--layout", "grid", "--n", "301"]),
        ("b.txt", ["--layout", "clusters", "--n", "400"]),
    ] {
        let input = gen(&dir, name, &extra);
        for algo in ["planar", "nd"] {
            let (_, r) = halve(&input, &["--algo", algo]);
            let m = r["guarantees"]["min_side"].as_u64().unwrap();
            assert!(verify(&input, &r, m).status.success(), "{name} {algo}");
        }
    }
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let two = dir.path().join("two.txt");
    std::fs::write(&two, "2 2\n-3 0\n3 0\n").unwrap();
    let ok = ballcut(&["verify", "--in", path_str(&two), "--normal", "2,0", "--offset", "0", "--m", "1"]);
    assert!(ok.status.success());
    let text = String::from_utf8_lossy(&ok.stdout);
    assert!(text.contains("left 1") && text.contains("right 1") && text.contains("PASS"));
    let fail = ballcut(&["verify", "--in", path_str(&two), "--normal", "1,0", "--offset", "0", "--m", "3"]);
    assert_eq!(fail.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&fail.stdout).contains("FAIL"));
    let bad = ballcut(&["verify", "--in", path_str(&two), "--normal", "1,x", "--offset", "0", "--m", "1"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn verify_finds_an_18_disk_separator() {
    // three rows of six disks; the line x = 7.5 leaves 9 centers per side
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.txt");
    let mut text = String::from("2 18\n");
    for row in 0..3 {
        for col in 0..6 {
            text.push_str(&format!("{} {}\n", 3 * col, 3 * row));
        }
    }
    std::fs::write(&path, text).unwrap();
    let o = ballcut(&["verify", "--in", path_str(&path), "--normal", "1,0", "--offset", "7.5", "--m", "6"]);
    assert!(o.status.success());
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("b.csv");
    let o = ballcut(&[
        "bench", "--algo", "planar", "--sizes", "200,100", "--reps", "2", "--out", path_str(&out),
    ]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,algo,mean_ms,intersected,intersected_over_sqrt_nlogn,iterations");
    assert!(lines[1].starts_with("100,planar,"));
    assert!(lines[2].starts_with("200,planar,"));
    let empty = ballcut(&["bench", "--algo", "nd", "--sizes", ""]);
    assert_eq!(empty.status.code(), Some(1));
}

#[test]
fn plot_row_and_trace() {
    let dir = tempfile::tempdir().unwrap();
    let row = row5(&dir);
    let (_, r) = halve(&row, &["--algo", "planar"]);
    let result = dir.path().join("r.json");
    std::fs::write(&result, r.to_string()).unwrap();
    let svg = dir.path().join("row.svg");
    let o = ballcut(&[
        "plot", "--in", path_str(&row), "--result", path_str(&result), "--out", path_str(&svg),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(text.matches("<circle").count(), 5);
    assert_eq!(text.matches("<line").count(), 1);
    assert_eq!(text.matches(r#"class="intersected""#).count(), 1);
    assert!(text.contains("viewBox"));

    let g = gen(&dir, "g.txt", &["--layout", "grid", "--n", "401", "--seed", "3"]);
    let trace = dir.path().join("t.jsonl");
    let (_, r) = halve(&g, &["--algo", "planar", "--min-lines", "4", "--trace", path_str(&trace)]);
    std::fs::write(&result, r.to_string()).unwrap();
    let svg = dir.path().join("g.svg");
    let o = ballcut(&[
        "plot", "--in", path_str(&g), "--result", path_str(&result), "--trace", path_str(&trace),
        "--out", path_str(&svg),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let iterations = r["iterations"].as_u64().unwrap() as usize;
    assert!(iterations > 0);
    let plots = std::fs::read_dir(dir.path())
        .unwrap()
        .filter(|e| {
            let name = e.as_ref().unwrap().file_name();
            let name = name.to_string_lossy();
            name.starts_with("g_iter") && name.ends_with(".svg")
        })
        .count();
    assert_eq!(plots, iterations);
    let first = std::fs::read_to_string(dir.path().join("g_iter1.svg")).unwrap();
    assert!(first.contains(r#"class="trapezoid""#) && first.contains(r#"class="tube""#));
}
