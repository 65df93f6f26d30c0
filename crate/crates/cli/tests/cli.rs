use std::path::{Path, PathBuf};
use std::process::Command;

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let fx = fixtures();
    let mut full = vec!["bordered", "--fixtures", fx.to_str().unwrap()];
    full.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = bordered_cli::run(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (code, out, err) = run(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn copy_dir(from: &Path, to: &Path) {
    std::fs::create_dir_all(to).unwrap();
    for e in std::fs::read_dir(from).unwrap().flatten() {
        let target = to.join(e.file_name());
        if e.path().is_dir() {
            copy_dir(&e.path(), &target);
        } else {
            std::fs::copy(e.path(), target).unwrap();
        }
    }
}

#[test]
fn h1_of_the_slope_two_gluing() {
    assert_eq!(run(&["h1", "1,0,2,-1"]), (0, "Z/8\n".into(), String::new()));
    assert_eq!(run(&["h1", "1,1,2,0"]).1, "Z/2 ⊕ Z/4\n");
    assert_eq!(json(&["h1", "1,0,2,-1"])["order"], "8");
    assert_eq!(run(&["h1", "1,0,2"]).0, 2);
}

#[test]
fn fill_t25_at_four() {
    assert_eq!(run(&["fill", "T2-5", "4/1"]).1, "4 classes × dim 1\n");
    let v = json(&["fill", "T2-3", "2/3"]);
    assert_eq!(v["l_space"], false);
    assert_eq!(run(&["fill", "T2-5", "-2/3"]).0, 0);
    assert_eq!(run(&["fill", "T2-5", "x"]).0, 2);
}

#[test]
fn dinv_lens_and_surgery() {
    let (code, out, _) = run(&["dinv", "8", "1"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.ends_with(" 7/4")));
    let v = json(&["dinv", "8", "T2-5"]);
    let ds: Vec<&str> = v["values"].as_array().unwrap().iter().map(|x| x["d"].as_str().unwrap()).collect();
    assert_eq!(ds, ["-1/4", "-9/8", "1/4", "-1/8", "-1/4", "-1/8", "1/4", "-9/8"]);
    assert_eq!(run(&["dinv", "8", "2"]).0, 2);
}

#[test]
fn pair_dimensions() {
    for d in ["cfd.N.s0.twisted-2", "cfd.N.s1.twisted-2"] {
        assert_eq!(json(&["pair", "cfa.trefoil.mu-lambda", d])["dimension"], 4);
    }
    // a type D entry on the left is converted to type A first
    assert_eq!(json(&["pair", "cfd.trefoil.mu-lambda", "cfd.N.s0.twisted-2"])["dimension"], 4);
    // a cyclic type D structure cannot be paired
    assert_eq!(run(&["pair", "cfa.trefoil.mu-lambda", "cfd.N.s0"]).0, 1);
}

#[test]
fn pair_with_empty_type_d() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "# no generators\n").unwrap();
    let v = json(&["pair", "cfa.trefoil.mu-lambda", empty.to_str().unwrap()]);
    assert_eq!(v["dimension"], 0);
    // one unconnected ι0 generator pairs with each ι0 generator of the trefoil
    std::fs::write(&empty, "generator lonely i0\n").unwrap();
    let v = json(&["pair", "cfa.trefoil.mu-lambda", empty.to_str().unwrap()]);
    assert_eq!(v["dimension"], 3);
}

#[test]
fn invalid_files_report_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "generator a i0\ngenerator b i1\nedge a b r2\n").unwrap();
    let (code, _, err) = run(&["grade", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    assert_eq!(run(&["grade", "no-such-entry"]).0, 2);
}

#[test]
fn grade_s0() {
    let v = json(&["grade", "cfd.N.s0.twisted-2"]);
    assert_eq!(v["indeterminacy"], "(-1;4,-2)");
    assert_eq!(v["gradings"]["a4"], "(-1;-3,1)");
}

#[test]
fn reduce_twist_convert_export() {
    let (code, out, _) = run(&["reduce", "cfd.N.s1.unreduced"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("generator")).count(), 4);

    let v = json(&["twist", "cfd.N.s1", "twist:1,0:1"]);
    assert_eq!(v["type_d"]["generators"].as_array().unwrap().len(), 4);
    assert_eq!(run(&["twist", "cfd.N.s1", "spin"]).0, 2);

    let (_, a, _) = run(&["convert", "cfd.trefoil.mu-lambda", "--to", "type-a"]);
    assert!(a.contains("op x1 r3 r2 r1 y1"));
    let (_, c, _) = run(&["convert", "cfd.N.s1", "--to", "curve"]);
    assert!(c.starts_with("component"));

    assert!(run(&["export", "cfd.N.s0.twisted-2", "--format", "dot"]).1.contains("digraph"));
    assert!(run(&["export", "curve.N.s1", "--format", "svg", "--slope", "2/1"]).1.contains("<svg"));
    let e: serde_json::Value = serde_json::from_str(&run(&["export", "gluing.prototype.slope2"]).1).unwrap();
    assert_eq!(e["data"]["matrix"], serde_json::json!([1, 0, 2, -1]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["pair", "cfa.trefoil.mu-lambda", "cfd.N.s1.twisted-2", "--json"][..],
        &["grade", "cfa.trefoil.mu-lambda", "--base", "x1", "--json"],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn verification_passes_on_the_bundled_catalog() {
    let (code, out, _) = run(&["verify-paper"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("gap 3/2 absent from d-invariant differences: PASS"));
}

#[test]
fn verification_catches_a_deleted_edge() {
    let dir = tempfile::tempdir().unwrap();
    copy_dir(&fixtures(), dir.path());
    let file = dir.path().join("type_d/cfd.N.s0.twisted-2.txt");
    let text = std::fs::read_to_string(&file).unwrap();
    let mutated: String = text.lines().filter(|l| *l != "edge a1 b2 r3").map(|l| format!("{l}\n")).collect();
    assert_ne!(mutated, text);
    std::fs::write(&file, mutated).unwrap();

    let out = Command::new(env!("CARGO_BIN_EXE_bordered"))
        .args(["--fixtures", dir.path().to_str().unwrap(), "verify-paper"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("s0 homology dimension: FAIL"), "{stdout}");
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_bordered");
    let ok = Command::new(bin).args(["h1", "1,0,2,-1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "Z/8\n");
    let bad = Command::new(bin).args(["frobnicate"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
