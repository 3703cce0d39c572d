use std::process::{Command, Output};

use knotwidth::triangulation::{Triangulation, COMPLEMENT_PATH_WIDTH};

fn knotwidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotwidth"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generated_pd_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let out = knotwidth(&["gen-torus", "3", "2"]);
    assert!(out.status.success());
    let path = dir.path().join("trefoil.pd");
    std::fs::write(&path, &out.stdout).unwrap();
    let parsed = knotwidth(&["parse", path.to_str().unwrap()]);
    assert!(parsed.status.success());
    assert!(stdout(&parsed).contains("crossings: 3"));
}

#[test]
fn trefoil_report_holds_every_inequality() {
    let out = knotwidth(&["report", "torus:3,2"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    assert!(s.contains("[ok] splitting cost <= 8k+8"));
    assert!(!s.contains("FAIL"));
}

#[test]
fn pretzel_report_mentions_natural_width() {
    let out = knotwidth(&["report", "pretzel:-2,3,7"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("width: {4,4,4}"));
}

#[test]
fn exact_only_rejects_large_diagrams() {
    let out = knotwidth(&["report", "sum:20", "--exact-only"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn heuristic_fallback_warns() {
    let out = knotwidth(&["carve", "sum:6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn bad_cap_and_bad_input_are_errors() {
    assert_eq!(
        knotwidth(&["carve", "torus:3,2", "--exact-cap", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(knotwidth(&["parse", "torus:4,2"]).status.code(), Some(2));
    assert_eq!(
        knotwidth(&["parse", "no-such-thing"]).status.code(),
        Some(2)
    );
}

#[test]
fn empty_grid_is_a_header() {
    let out = knotwidth(&["grid", "torus", "--max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 1);
}

#[test]
fn torus_grid_passes_and_is_deterministic() {
    let a = knotwidth(&["grid", "torus", "--max", "6", "--threads", "1"]);
    let b = knotwidth(&["grid", "torus", "--max", "6", "--threads", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let s = stdout(&a);
    assert!(s.lines().skip(1).all(|l| l.contains(",pass,")));
}

#[test]
fn random_grid_depends_only_on_seed() {
    let a = knotwidth(&["grid", "random", "--max", "4", "--seed", "7"]);
    let b = knotwidth(&["grid", "random", "--max", "4", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn triangulation_grid_has_constant_width() {
    let out = knotwidth(&["grid", "triangulation", "--max", "12", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let s = stdout(&out);
    let mut rdr = csv::Reader::from_reader(s.as_bytes());
    let widths: Vec<usize> = rdr
        .records()
        .map(|r| r.unwrap()[7].parse().unwrap())
        .collect();
    assert!(!widths.is_empty());
    assert!(widths.iter().all(|&w| w == COMPLEMENT_PATH_WIDTH));
}

#[test]
fn triangulation_text_round_trips() {
    let out = knotwidth(&["triangulate", "9", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let t = Triangulation::from_text(&stdout(&out)).unwrap();
    assert!(t.homology_h1().unwrap().is_integers());
}

#[test]
fn report_writes_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = knotwidth(&["report", "torus:5,2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    for f in [
        "diagram.json",
        "graph.dot",
        "carving.json",
        "curves.json",
        "spheres.json",
        "splitting.json",
        "report.md",
    ] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
}
