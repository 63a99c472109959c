use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use lieder_ffi::*;

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    lieder_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(lieder_last_error())
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn schrodinger_round_trip() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(lieder_algebra_schrodinger(3, &mut alg), LiederStatus::Ok);
        let mut dim = 0;
        assert_eq!(lieder_algebra_dim(alg, &mut dim), LiederStatus::Ok);
        assert_eq!(dim, 13);
        let mut bad = 1;
        assert_eq!(
            lieder_algebra_jacobi_violations(alg, &mut bad),
            LiederStatus::Ok
        );
        assert_eq!(bad, 0);

        let mut json = ptr::null_mut();
        assert_eq!(lieder_algebra_to_json(alg, &mut json), LiederStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(
            lieder_algebra_from_json(text.as_ptr(), false, &mut back),
            LiederStatus::Ok
        );
        let mut dim2 = 0;
        lieder_algebra_dim(back, &mut dim2);
        assert_eq!(dim2, 13);
        lieder_algebra_free(back);
        lieder_algebra_free(alg);
    }
}

#[test]
fn derivations_and_reports() {
    unsafe {
        let mut alg = ptr::null_mut();
        lieder_algebra_schrodinger(2, &mut alg);
        let mut der = ptr::null_mut();
        assert_eq!(lieder_der_compute(alg, &mut der), LiederStatus::Ok);
        let mut d = 0;
        lieder_der_dim(der, &mut d);
        assert_eq!(d, 10);

        let mut out = ptr::null_mut();
        assert_eq!(lieder_der_verify_theorem(alg, &mut out), LiederStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(report["dim_inn"], 8);
        assert_eq!(report["n_outer"], 2);
        assert_eq!(report["direct_sum"], true);

        assert_eq!(
            lieder_locder_classify(alg, der, 42, 5, 200, &mut out),
            LiederStatus::Ok
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(report["status"], "proven_equal");

        // tau: s_12 -> z
        let mut m = vec![vec!["0"; 9]; 9];
        m[3][8] = "1";
        let map = CString::new(serde_json::json!({"dim": 9, "matrix": m}).to_string()).unwrap();
        let mut is_der = false;
        assert_eq!(
            lieder_is_derivation(alg, map.as_ptr(), &mut is_der),
            LiederStatus::Ok
        );
        assert!(is_der);
        assert_eq!(
            lieder_replay(alg, der, map.as_ptr(), &mut out),
            LiederStatus::Ok
        );
        let trace: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
        assert_eq!(trace["decomposition_valid"], true);
        assert_eq!(trace["stage2_tau"], "1");

        lieder_der_free(der);
        lieder_algebra_free(alg);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            lieder_algebra_schrodinger(0, &mut alg),
            LiederStatus::InvalidParameter
        );
        assert!(!last_error().is_empty());
        assert_eq!(
            lieder_algebra_schrodinger(1, ptr::null_mut()),
            LiederStatus::NullPointer
        );
        let mut dim = 0;
        assert_eq!(
            lieder_algebra_dim(ptr::null(), &mut dim),
            LiederStatus::NullPointer
        );

        let garbage = CString::new("{not json").unwrap();
        assert_eq!(
            lieder_algebra_from_json(garbage.as_ptr(), false, &mut alg),
            LiederStatus::Parse
        );
        let non_lie = CString::new(
            r#"{"dim":3,"labels":["a","b","c"],"brackets":[[0,1,[[2,"1"]]],[1,2,[[1,"1"]]]]}"#,
        )
        .unwrap();
        assert_eq!(
            lieder_algebra_from_json(non_lie.as_ptr(), false, &mut alg),
            LiederStatus::JacobiViolation
        );
        assert!(last_error().contains("Jacobi"));
        assert_eq!(
            lieder_algebra_from_json(non_lie.as_ptr(), true, &mut alg),
            LiederStatus::Ok
        );
        let mut out = ptr::null_mut();
        assert_eq!(
            lieder_der_verify_theorem(alg, &mut out),
            LiederStatus::NotSchrodinger
        );
        let short = CString::new(r#"{"dim":2,"matrix":[["0","0"],["0","0"]]}"#).unwrap();
        let mut flag = false;
        assert_eq!(
            lieder_is_derivation(alg, short.as_ptr(), &mut flag),
            LiederStatus::DimensionMismatch
        );
        lieder_algebra_free(alg);
        lieder_string_free(ptr::null_mut());
        lieder_algebra_free(ptr::null_mut());
        lieder_der_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/lieder.h");
    let text = std::fs::read_to_string(&header).expect("header is generated by the build script");
    for f in [
        "lieder_algebra_schrodinger",
        "lieder_algebra_from_json",
        "lieder_der_compute",
        "lieder_locder_classify",
        "lieder_replay",
        "lieder_string_free",
        "lieder_last_error",
    ] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let Ok(status) = Command::new("cc")
        .args(["-std=c99", "-fsyntax-only", "-x", "c"])
        .arg(&header)
        .status()
    else {
        eprintln!("no C compiler found; syntax check skipped");
        return;
    };
    assert!(status.success());
}
