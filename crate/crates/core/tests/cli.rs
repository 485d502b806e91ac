use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use vertex_unfold::io::{parse_layout_json, read_complex};
use vertex_unfold::{complex::validate_pseudomanifold, verify_layout};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn vunfold(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vunfold"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn text(b: &[u8]) -> String {
    String::from_utf8_lossy(b).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_reports_structure() {
    let out = vunfold(&["check", s(&data("triforce.json"))]);
    assert_eq!(out.status.code(), Some(0));
    let stdout = text(&out.stdout);
    assert!(stdout.contains("facets: 4"));
    assert!(stdout.contains("checkered: true"));
    assert!(!stdout.contains("\x1b["));
}

#[test]
fn invalid_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let quad = dir.path().join("quad.obj");
    std::fs::write(&quad, "v 0 0 0\nv 1 0 0\nv 1 1 0\nv 0 1 0\nf 1 2 3 4\n").unwrap();
    let out = vunfold(&["path", s(&quad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("non-triangular face"));

    let split = dir.path().join("split.json");
    std::fs::write(&split, r#"{"dim":2,"vertex_count":6,"facets":[[0,1,2],[3,4,5]]}"#).unwrap();
    assert_eq!(vunfold(&["check", s(&split)]).status.code(), Some(2));
    assert_eq!(vunfold(&["check", s(&dir.path().join("none.off"))]).status.code(), Some(2));
}

#[test]
fn missing_cycles_exit_3_with_reason() {
    for (file, reason) in [("triforce.json", "CheckeredPolygon"), ("tetrahedron.json", "SingleSimplex")] {
        let out = vunfold(&["cycle", s(&data(file))]);
        assert_eq!(out.status.code(), Some(3), "{file}");
        assert!(text(&out.stderr).contains(reason), "{file}");
        assert_eq!(vunfold(&["path", s(&data(file))]).status.code(), Some(0));
    }
}

#[test]
fn cycle_start_facet() {
    let out = vunfold(&["cycle", s(&data("octahedron.off")), "--start-facet", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).split_whitespace().nth(1) == Some("[5]"));
    let out = vunfold(&["cycle", s(&data("octahedron.off")), "--start-facet", "99"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unfold_cube_writes_certified_files() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("cube.svg");
    let json = dir.path().join("cube.json");
    let cube = data("cube.off");
    let out = vunfold(&["unfold", s(&cube), "--svg", s(&svg), "--json", s(&json)]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let drawing = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(drawing.matches("<polygon").count(), 12);

    let doc = parse_layout_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let (c, bytes) = read_complex(&cube).unwrap();
    assert!(verify_layout(&doc.layout, &c, 1e-9).is_ok());
    assert_eq!(doc.provenance.input_sha256, vertex_unfold::io::input_hash(&bytes));

    let again = dir.path().join("again.svg");
    vunfold(&["unfold", s(&cube), "--svg", s(&again)]);
    assert_eq!(std::fs::read(&svg).unwrap(), std::fs::read(&again).unwrap());
}

#[test]
fn unfold_options() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("o.svg");
    let oct = data("octahedron.off");
    let out = vunfold(&["unfold", s(&oct), "--cycle", "--gap", "0.1", "--noncrossing", "--svg", s(&svg)]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("strips: 8"));
    let out = vunfold(&["unfold", s(&oct), "--cycle", "--path"]);
    assert_eq!(out.status.code(), Some(2));
    let out = vunfold(&["unfold", s(&data("triforce.json")), "--cycle"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn solid_layouts_refuse_svg() {
    let dir = tempfile::tempdir().unwrap();
    let input = data("simplex4_boundary.json");
    let svg = dir.path().join("x.svg");
    let json = dir.path().join("x.json");
    let out = vunfold(&["unfold", s(&input), "--svg", s(&svg)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!svg.exists());
    let out = vunfold(&["unfold", s(&input), "--json", s(&json)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(parse_layout_json(&std::fs::read_to_string(&json).unwrap()).unwrap().layout.dim, 3);
}

#[test]
fn gen_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.off");
    let b = dir.path().join("b.off");
    for p in [&a, &b] {
        let out = vunfold(&["gen", "--points", "100", "--seed", "3", "--out", s(p)]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (c, _) = read_complex(&a).unwrap();
    assert!(validate_pseudomanifold(&c).is_ok());
    assert_eq!(c.facet_count(), 2 * c.vertex_count() - 4);
}

#[test]
fn bench_prints_rows() {
    let out = vunfold(&["bench", "--sizes", "100,200", "--reps", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);
    assert_eq!(rows[0]["facets"], 100);
}
