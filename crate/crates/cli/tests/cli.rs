use std::path::Path;
use std::process::{Command, Output};

fn jacobi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jacobi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn gen_a3_writes_document_and_spectrum() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a3.json");
    let o = jacobi(&["gen", "--family", "A", "--n", "3", "--out", path_str(&out)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "spectrum: 0 2 4\nsubmatrix: 1 3\n");

    let v = json(&std::fs::read_to_string(&out).unwrap());
    assert_eq!(v["kind"], "symmetric_tridiagonal");
    assert_eq!(v["diag"], serde_json::json!([2.0, 2.0, 2.0]));
    assert_eq!(v["offdiag"][0].as_f64(), Some(1.0));
    assert_eq!(v["offdiag"][1].as_f64(), Some(1.7320508075688772));
}

#[test]
fn gen_w_to_stdout() {
    let o = jacobi(&["gen", "--family", "W", "--n", "3", "--a0", "1", "--c", "2"]);
    assert!(o.status.success());
    let v = json(&stdout(&o));
    assert_eq!(v["diag"], serde_json::json!([5.0, 5.0, 5.0]));
    assert_eq!(v["offdiag"][0].as_f64(), Some(-2.0));
    assert!((v["offdiag"][1].as_f64().unwrap() + 2.0 * 3f64.sqrt()).abs() < 1e-15);
    assert!(String::from_utf8_lossy(&o.stderr).contains("spectrum: 1 5 9"));
}

#[test]
fn gen_rejects_bad_parameters() {
    assert_eq!(jacobi(&["gen", "--family", "A", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        jacobi(&["gen", "--family", "W", "--n", "3", "--c", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(jacobi(&["gen", "--family", "kac", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn eig_prints_both_spectra() {
    let dir = tempfile::tempdir().unwrap();
    for (n, full, sub) in [("3", "0 2 4", "1 3"), ("2", "0 2", "1")] {
        let file = dir.path().join(format!("a{n}.json"));
        assert!(jacobi(&["gen", "--family", "A", "--n", n, "--out", path_str(&file)])
            .status
            .success());
        let o = jacobi(&["eig", path_str(&file)]);
        assert!(o.status.success());
        let text = stdout(&o);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], full);
        assert_eq!(lines[1], sub);
        assert!(lines[2].starts_with("min_gap: 2"));
    }
}

#[test]
fn eig_on_kac_document() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k.json");
    assert!(jacobi(&["gen", "--family", "kac", "--n", "4", "--shift", "1", "--out", path_str(&file)])
        .status
        .success());
    let o = jacobi(&["eig", path_str(&file)]);
    assert_eq!(stdout(&o).lines().next(), Some("-3 -1 1 3 5"));
}

#[test]
fn eig_rejects_truncated_json() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.json");
    std::fs::write(&file, r#"{"kind": "symmetric_tridiagonal", "order": 3, "diag": [2, 2"#).unwrap();
    assert_eq!(jacobi(&["eig", path_str(&file)]).status.code(), Some(2));
    assert_eq!(jacobi(&["eig", "/nonexistent/x.json"]).status.code(), Some(2));
}

#[test]
fn inverse_round_trips_a3() {
    let dir = tempfile::tempdir().unwrap();
    let spectra = dir.path().join("s.json");
    let out = dir.path().join("m.json");
    std::fs::write(&spectra, r#"{"lambda":[0,2,4],"mu":[1,3]}"#).unwrap();
    let o = jacobi(&["inverse", path_str(&spectra), "--out", path_str(&out)]);
    assert!(o.status.success());
    let text = stdout(&o);
    let residuals: Vec<f64> = text
        .trim()
        .strip_prefix("residuals: ")
        .unwrap()
        .split(' ')
        .map(|x| x.parse().unwrap())
        .collect();
    assert!(residuals.iter().all(|r| *r <= 1e-10), "{residuals:?}");

    let v = json(&std::fs::read_to_string(&out).unwrap());
    let diag: Vec<f64> = serde_json::from_value(v["diag"].clone()).unwrap();
    let off: Vec<f64> = serde_json::from_value(v["offdiag"].clone()).unwrap();
    for d in diag {
        assert!((d - 2.0).abs() < 1e-14);
    }
    assert!((off[0] + 1.0).abs() < 1e-14);
    assert!((off[1] + 3f64.sqrt()).abs() < 1e-14);
}

#[test]
fn inverse_2x2_with_plain_variant() {
    let dir = tempfile::tempdir().unwrap();
    let spectra = dir.path().join("s.json");
    std::fs::write(&spectra, r#"{"lambda":[0,2],"mu":[1]}"#).unwrap();
    let o = jacobi(&["inverse", path_str(&spectra), "--variant", "plain"]);
    assert!(o.status.success());
    let v = json(&stdout(&o));
    assert_eq!(v["order"], 2);
    let off = v["offdiag"][0].as_f64().unwrap();
    assert!((off + 1.0).abs() < 1e-15);
}

#[test]
fn inverse_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let spectra = dir.path().join("s.json");
    std::fs::write(&spectra, r#"{"lambda":[0,2],"mu":[2]}"#).unwrap();
    let o = jacobi(&["inverse", path_str(&spectra)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("index 1"));

    std::fs::write(&spectra, r#"{"lambda":[0,2,4],"mu":[1]}"#).unwrap();
    assert_eq!(jacobi(&["inverse", path_str(&spectra)]).status.code(), Some(3));

    std::fs::write(&spectra, r#"{"lambda":[0,1],"mu":[1e-300]}"#).unwrap();
    assert_eq!(jacobi(&["inverse", path_str(&spectra)]).status.code(), Some(4));

    std::fs::write(&spectra, r#"{"lambda":"#).unwrap();
    assert_eq!(jacobi(&["inverse", path_str(&spectra)]).status.code(), Some(2));
}

#[test]
fn springmass_tables() {
    let o = jacobi(&["springmass", "--n", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(&lines[..3], &["i,m_i,k_i", "1,4,6", "2,1,2"]);
    assert_eq!(lines[3], "# free_end: 1 3");
    assert_eq!(lines[4], "# fixed_end: 2");

    let o = jacobi(&["springmass", "--n", "3"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).take(3).collect();
    assert_eq!(rows, ["1,12,30", "2,3,6", "3,1,3"]);

    let o = jacobi(&["springmass", "--n", "3", "--alpha", "2", "--format", "json"]);
    let v = json(&stdout(&o));
    assert_eq!(v["masses"], serde_json::json!([48.0, 12.0, 4.0]));
    assert_eq!(v["stiffnesses"], serde_json::json!([120.0, 24.0, 12.0]));
    assert_eq!(v["alpha"], 2.0);

    assert_eq!(jacobi(&["springmass", "--n", "1"]).status.code(), Some(2));
    assert_eq!(jacobi(&["springmass", "--n", "5000"]).status.code(), Some(2));
}

#[test]
fn bench_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("bench.csv");
    let o = jacobi(&[
        "bench", "--family", "A", "--n-min", "2", "--n-max", "20", "--algorithms", "full_reorth",
        "--out", path_str(&out),
    ]);
    assert!(o.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,family,algorithm,max_entry_error,max_eig_residual,min_gap,runtime_ns")
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 19);
    for (i, r) in rows.iter().enumerate() {
        assert_eq!(r[0], (i + 2).to_string());
        assert_eq!(r[1], "A");
        assert_eq!(r[2], "full_reorth");
        assert!(r[3].parse::<f64>().unwrap() <= 1e-8);
        assert_eq!(r[5].parse::<f64>().unwrap(), 2.0);
    }

    let o = jacobi(&["bench", "--n-min", "5", "--n-max", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bench_w_family_both_algorithms() {
    let o = jacobi(&[
        "bench", "--family", "W", "--a0", "-3", "--c", "0.5", "--n-min", "4", "--n-max", "10",
        "--step", "3",
    ]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 6);
    assert!(rows[0].starts_with("4,W,plain,"));
    assert!(rows[1].starts_with("4,W,full_reorth,"));
    assert!(rows.iter().all(|r| r.split(',').nth(5) == Some("1.0")));
}

#[test]
fn verify_proof_reports() {
    let o = jacobi(&["verify-proof", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&stdout(&o));
    assert_eq!(v["n"], 2);
    assert_eq!(v["pass"], true);
    assert!(v["residuals"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r.as_f64().unwrap() < 1e-15));

    let o = jacobi(&["verify-proof", "--n", "30", "--tol", "1e-10"]);
    assert_eq!(o.status.code(), Some(0));

    assert_eq!(jacobi(&["verify-proof", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        jacobi(&["verify-proof", "--n", "12", "--tol", "1e-40"]).status.code(),
        Some(4)
    );
}
