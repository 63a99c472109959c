use std::fs;
use std::path::Path;
use std::process::Command;

use lieder::cli::run;
use lieder::io::load_algebra;
use lieder::liecore::build_schrodinger;
use serde_json::Value;

fn lieder(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lieder").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn build(dir: &Path, n: usize) -> String {
    let p = dir.join(format!("s{n}.json"));
    let (code, _, _) = lieder(&[
        "algebra",
        "build",
        "schrodinger",
        "--n",
        &n.to_string(),
        "--out",
        path_str(&p),
    ]);
    assert_eq!(code, 0);
    p.to_str().unwrap().to_string()
}

fn write_map(dir: &Path, name: &str, dim: usize, entries: &[(usize, usize, &str)]) -> String {
    let mut m = vec![vec!["0".to_string(); dim]; dim];
    for &(r, c, v) in entries {
        m[r][c] = v.to_string();
    }
    let p = dir.join(name);
    fs::write(&p, serde_json::json!({"dim": dim, "matrix": m}).to_string()).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn build_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for n in 1..=4 {
        let p = build(dir.path(), n);
        let loaded = load_algebra(Path::new(&p), false).unwrap();
        assert_eq!(
            loaded,
            build_schrodinger(n).unwrap().with_name(format!("s{n}"))
        );
    }
}

#[test]
fn verify_theorem_report() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = build(dir.path(), 3);
    let (code, out, _) = lieder(&["der", "verify-theorem", &s3, "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        (
            v["dim_der"].as_u64(),
            v["dim_inn"].as_u64(),
            v["n_outer"].as_u64()
        ),
        (Some(13), Some(12), Some(1))
    );
    assert_eq!(v["direct_sum"], true);
}

#[test]
fn classify_reports_proven_equal() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = build(dir.path(), 3);
    let (code, out, _) = lieder(&[
        "locder", "classify", &s3, "--seed", "42", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "proven_equal");
    assert_eq!(v["dim_der"], 13);
    assert_eq!(v["dim_candidate"], 13);
    assert_eq!(v["seed"], 42);
    assert!(v["witnesses"].as_array().unwrap().is_empty());
    let (code, out, _) = lieder(&["locder", "classify", &s3]);
    assert_eq!(code, 0);
    assert!(out.contains("proven_equal"));
}

#[test]
fn classify_excess_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("h1.json");
    let (code, _, _) = lieder(&[
        "algebra",
        "build",
        "heisenberg",
        "--n",
        "1",
        "--out",
        path_str(&p),
    ]);
    assert_eq!(code, 0);
    let (code, out, _) = lieder(&["locder", "classify", path_str(&p), "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "candidate_excess");
}

#[test]
fn map_commands() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = build(dir.path(), 3);
    // z -> u_1
    let ez = write_map(dir.path(), "ez.json", 13, &[(4, 3, "1")]);
    // sigma
    let mut entries = vec![(3, 3, "1")];
    entries.extend((4..10).map(|i| (i, i, "1/2")));
    let sigma = write_map(dir.path(), "sigma.json", 13, &entries);

    assert_eq!(lieder(&["der", "check-map", &s3, &sigma]).0, 0);
    let (code, out, _) = lieder(&["der", "check-map", &s3, &ez, "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["is_derivation"], false);

    let (code, out, _) = lieder(&["locder", "witness", &s3, &ez, "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    let w: Vec<&str> = v["witness"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect();
    assert_eq!(w[3], "1");
    assert_eq!(w.iter().filter(|x| **x != "0").count(), 1);
    assert_eq!(lieder(&["locder", "witness", &s3, &sigma]).0, 0);

    let z = "0,0,0,1,0,0,0,0,0,0,0,0,0";
    assert_eq!(lieder(&["locder", "certify", &s3, &ez, "--point", z]).0, 2);
    let (code, out, _) = lieder(&[
        "locder",
        "certify",
        &s3,
        &sigma,
        "--point",
        "1,-1/2,0,1,2,0,0,0,0,0,0,0,0",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["local"], true);

    let (code, out, _) = lieder(&["replay", "run", &s3, &sigma]);
    assert_eq!(code, 0);
    assert!(out.contains("decomposition valid: true"));
    let (code, out, _) = lieder(&["replay", "run", &s3, &ez, "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["decomposition_valid"], false);
    assert!(v["failure"].as_str().unwrap().contains("image of z"));
}

#[test]
fn latex_output() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = build(dir.path(), 3);
    let tex = dir.path().join("der.tex");
    let (code, _, _) = lieder(&[
        "der",
        "basis",
        &s3,
        "--format",
        "latex",
        "--out",
        path_str(&tex),
    ]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&tex).unwrap();
    assert!(text.starts_with('%'));
    assert!(text.contains("\\begin{array}{ccccccccccccc}"));
    assert!(text.contains("a_h+\\frac{\\lambda}{2}"));
    assert!(text.contains("13 parameters"));
    let (code, out, _) = lieder(&["der", "basis", &s3, "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 13);
    assert_eq!(v["outer"][0]["name"], "sigma");
}

#[test]
fn algebra_check_and_info() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"dim":3,"labels":["a","b","c"],"brackets":[[0,1,[[2,"1"]]],[1,2,[[1,"1"]]]]}"#,
    )
    .unwrap();
    let (code, out, _) = lieder(&["algebra", "check", path_str(&bad), "--format", "json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["jacobi"], false);
    let (code, _, err) = lieder(&["algebra", "info", path_str(&bad)]);
    assert_eq!(code, 2);
    assert!(err.contains("Jacobi"));
    assert_eq!(
        lieder(&["algebra", "info", path_str(&bad), "--skip-jacobi"]).0,
        0
    );

    let s2 = build(dir.path(), 2);
    let (code, out, _) = lieder(&["algebra", "info", &s2, "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dim"], 9);
    assert_eq!(v["schrodinger_n"], 2);
    assert_eq!(v["dim_center"], 1);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(lieder(&["frobnicate"]).0, 1);
    assert_eq!(lieder(&["algebra", "build", "schrodinger"]).0, 1);
    assert_eq!(
        lieder(&["algebra", "build", "schrodinger", "--n", "0"]).0,
        1
    );
    assert_eq!(
        lieder(&["algebra", "build", "schrodinger", "--n", "x"]).0,
        1
    );
    assert_eq!(lieder(&["algebra", "info", "/nonexistent/file.json"]).0, 1);
    let garbage = dir.path().join("g.json");
    fs::write(&garbage, "{").unwrap();
    assert_eq!(lieder(&["algebra", "info", path_str(&garbage)]).0, 1);
    let s3 = build(dir.path(), 3);
    assert_eq!(lieder(&["algebra", "info", &s3, "--format", "latex"]).0, 1);
    let small = write_map(dir.path(), "small.json", 2, &[]);
    assert_eq!(lieder(&["der", "check-map", &s3, &small]).0, 1);
    let p = dir.path().join("sl2.json");
    lieder(&["algebra", "build", "sl2", "--out", path_str(&p)]);
    let zero3 = write_map(dir.path(), "zero3.json", 3, &[]);
    assert_eq!(lieder(&["replay", "run", path_str(&p), &zero3]).0, 1);
    assert_eq!(lieder(&["der", "verify-theorem", path_str(&p)]).0, 1);
    assert_eq!(lieder(&["--help"]).0, 0);
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let s1 = build(dir.path(), 1);
    let bin = env!("CARGO_BIN_EXE_lieder");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(status(&["locder", "classify", &s1]), Some(0));
    assert_eq!(status(&["nope"]), Some(1));
    let ez = write_map(dir.path(), "ez.json", 6, &[(4, 3, "1")]);
    assert_eq!(status(&["replay", "run", &s1, &ez]), Some(2));
}
