use std::process::Command;

use splinekit::cli::run;
use splinekit::formats::{delta_s_document, load_triangulation};
use splinekit::registry::claim;

fn call(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["splinekit"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn data(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("splinekit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, contents).unwrap();
    p
}

#[test]
fn binary_prints_spline_dimension() {
    let out = Command::new(env!("CARGO_BIN_EXE_splinekit"))
        .args(["spline", "dim", "--tri", "deltaS", "--r", "1", "--d", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "23\n");
}

#[test]
fn shipped_document_is_the_builtin_complex() {
    let text = std::fs::read_to_string(data("delta_s.json")).unwrap();
    assert_eq!(text.trim_end(), delta_s_document().to_json());
    let t = load_triangulation(std::path::Path::new(&data("delta_s.json"))).unwrap();
    assert_eq!((t.f2(), t.f1_interior(), t.f0_interior()), (8, 9, 2));
    let (code, out, _) = call(&["spline", "dim", "--tri", &data("delta_s.json"), "--r", "1", "--d", "3"]);
    assert_eq!((code, out.as_str()), (0, "23\n"));
    let (code, out, _) = call(&["deltastar", "tri", "--emit"]);
    assert_eq!(code, 0);
    assert_eq!(out, text);
}

#[test]
fn malformed_document_exits_2_with_position() {
    let p = temp_file("bad.json", "{\"vertices\": [[0, 0],\n  [1, 2], [0, \"1/0\"]], \"triangles\": [[0, 1, 2]]}");
    let (code, _, err) = call(&["spline", "dim", "--tri", p.to_str().unwrap(), "--r", "1", "--d", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    let (code, _, err) = call(&["spline", "dim", "--tri", "/nonexistent/tri.json", "--r", "1", "--d", "2"]);
    assert_eq!(code, 2);
    assert!(err.contains("nonexistent"));
    let p = temp_file("flat.json", r#"{"vertices": [[0,0],[1,1],[2,2]], "triangles": [[0,1,2]]}"#);
    let (code, _, _) = call(&["spline", "check", "--tri", p.to_str().unwrap(), "--r-max", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn size_guard() {
    let (code, out, err) = call(&["spline", "dim", "--r", "7", "--d", "2"]);
    assert_eq!((code, out.as_str()), (3, ""));
    assert!(err.contains("--force"));
    let (code, out, _) = call(&["spline", "dim", "--r", "7", "--d", "2", "--force"]);
    assert_eq!((code, out.as_str()), (0, "6\n"));
    let (code, _, _) = call(&["verify", "--r-max", "1", "--spline-r-max", "7"]);
    assert_eq!(code, 3);
    let (code, _, _) = call(&["structmat", "positivity", "--r", "15"]);
    assert_eq!(code, 3);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["spline", "dim", "--r", "x", "--d", "1"]).0, 2);
    assert_eq!(call(&["deltastar", "k-dim", "--r", "0"]).0, 2);
    assert_eq!(call(&["frobnicate"]).0, 2);
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_report_is_complete_and_deterministic() {
    let (code, a, _) = call(&["verify", "--r-max", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let (_, b, _) = call(&["verify", "--r-max", "2", "--format", "json"]);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema"], "splinekit-report/1");
    let rows = v["rows"].as_array().unwrap();
    assert!(rows.len() > 40);
    for row in rows {
        assert_eq!(row["pass"], true, "{row}");
        let c = claim(row["claim"].as_str().unwrap()).expect("registered claim");
        assert_eq!(row["locator"], c.locator);
    }
    for want in ["k-dim", "symmetry", "min-degree", "slicing", "decomposition", "conjecture", "sharpness"] {
        assert!(rows.iter().any(|r| r["claim"] == want), "{want}");
    }
    let (_, c, _) = call(&["verify", "--r-max", "2", "--format", "json", "--seed", "7"]);
    assert_ne!(a, c);
    let tsv = call(&["verify", "--r-max", "1"]).1;
    assert!(tsv.starts_with("claim\tlocator\tr\td\tcomputed\texpected\tpass\n"));
    assert!(!tsv.contains("FAIL"));
}

#[test]
fn deltastar_commands() {
    let (code, out, _) = call(&["deltastar", "k-dim", "--r", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("k-dim\tdeltastar/k-dimension\t3\t-\t2\t2\tpass"));
    assert_eq!(call(&["deltastar", "epsilon", "--r", "2"]).0, 0);
    assert_eq!(call(&["deltastar", "verify", "--r-max", "3"]).0, 0);
    assert_eq!(call(&["deltastar", "tri"]).0, 0);
    assert_eq!(call(&["deltastar", "slice", "--r", "2", "--poly", "y^2"]).0, 0);
    assert_eq!(call(&["deltastar", "slice", "--r", "2", "--poly", "x*z"]).0, 1);
    assert_eq!(call(&["deltastar", "slice", "--r", "2", "--poly", "x*z + y"]).0, 2);
}

#[test]
fn spline_check_rows() {
    let (code, out, _) = call(&["spline", "check", "--r-max", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("formula-below-range\tsplinecore/formula-below-2r+1\t1\t2\t10 (L = 9)"));
    assert!(out.contains("formula-in-range\tsplinecore/formula-for-d-at-least-2r+1\t1\t3\t23\t23\tpass"));
}

#[test]
fn structmat_commands() {
    assert_eq!(call(&["structmat", "schur", "--lambda", "2,1", "--t", "3"]), (0, "8\n".into(), String::new()));
    let (code, out, _) = call(&["structmat", "schur", "--lambda", "2,2", "--t", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["determinant"], "20");
    assert_eq!(v["equal"], true);
    assert_eq!(call(&["structmat", "schur", "--lambda", "3", "--t", "3"]).0, 2);
    assert_eq!(call(&["structmat", "kdim", "--r", "4"]).0, 0);
    assert_eq!(call(&["structmat", "positivity", "--r", "5", "--max-order", "3"]).0, 0);

    let w = temp_file("w.txt", "1,0;1,1");
    let c = temp_file("c.txt", "0,0\n1,0\n");
    let (code, out, _) = call(&["structmat", "roth", "--w", w.to_str().unwrap(), "--c", c.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.starts_with("X\t0,0;0,-1\nY\t0,-1;0,0\n"), "{out}");
    let (code, _, _) = call(&["structmat", "roth", "--w", w.to_str().unwrap(), "--c", c.to_str().unwrap(), "--mode", "lower"]);
    assert_eq!(code, 1);
    let u = temp_file("u.txt", "-1,-1/2;-1/2,-1/5");
    let (code, out, _) = call(&[
        "structmat", "roth", "--w", u.to_str().unwrap(), "--c", c.to_str().unwrap(), "--mode", "lower", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["residual_zero"], true);
    let bad = temp_file("bad.txt", "1,2;3");
    assert_eq!(call(&["structmat", "roth", "--w", bad.to_str().unwrap(), "--c", c.to_str().unwrap()]).0, 2);
    let swap = temp_file("swap.txt", "0,1;1,0");
    assert_eq!(call(&["structmat", "roth", "--w", swap.to_str().unwrap(), "--c", c.to_str().unwrap()]).0, 1);
}
