use std::ffi::{CStr, CString};
use std::ptr;

use galilei_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    galilei_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(galilei_last_error())
        .to_string_lossy()
        .into_owned()
}

#[test]
fn series_coefficients_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            galilei_series_new(GalileiMethod::Enum, 4, 0, 8, &mut s),
            GalileiStatus::Ok
        );
        let mut len = 0;
        assert_eq!(galilei_series_len(s, &mut len), GalileiStatus::Ok);
        assert_eq!(len, 9);
        let coeffs: Vec<String> = (0..len)
            .map(|i| {
                let mut c = ptr::null_mut();
                assert_eq!(galilei_series_coeff(s, i, &mut c), GalileiStatus::Ok);
                take(c)
            })
            .collect();
        assert_eq!(coeffs[..5], ["1", "1", "3", "5", "8"]);

        let mut c = ptr::null_mut();
        assert_eq!(
            galilei_series_coeff(s, 9, &mut c),
            GalileiStatus::OutOfRange
        );
        assert!(last_error().contains("beyond order"));
        galilei_series_free(s);
    }
}

#[test]
fn failures_report_status_and_message() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(
            galilei_series_new(GalileiMethod::Recur, 1, 1, 4, &mut s),
            GalileiStatus::ComputationFailed
        );
        assert!(s.is_null());
        assert!(last_error().contains("k >= 2"));

        assert_eq!(
            galilei_series_new(GalileiMethod::Enum, 4, 0, 4, ptr::null_mut()),
            GalileiStatus::NullArgument
        );

        let mut n = 0;
        assert_eq!(
            galilei_young_rank(0, &mut n),
            GalileiStatus::InvalidArgument
        );
        assert_eq!(galilei_young_rank(6, &mut n), GalileiStatus::Ok);
        assert_eq!(n, 6);
        assert!(galilei_last_error().is_null());
    }
}

#[test]
fn radical_filtration_by_label() {
    unsafe {
        let top = CString::new("V'(0)").unwrap();
        let mut out = ptr::null_mut();
        assert_eq!(
            galilei_radical_filtration(top.as_ptr(), 2, &mut out),
            GalileiStatus::Ok
        );
        assert_eq!(take(out), "V'(0) / V(4) / V(8)");

        let bad = CString::new("U(1)").unwrap();
        assert_eq!(
            galilei_radical_filtration(bad.as_ptr(), 2, &mut out),
            GalileiStatus::InvalidArgument
        );
    }
}

#[test]
fn suites_expose_verdicts_as_json() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(galilei_suite_run(9, true, &mut s), GalileiStatus::Ok);
        let mut passed = false;
        assert_eq!(galilei_suite_passed(s, &mut passed), GalileiStatus::Ok);
        assert!(passed);
        let mut json = ptr::null_mut();
        assert_eq!(galilei_suite_json(s, &mut json), GalileiStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
        assert_eq!(v["id"], 9);
        assert!(!v["verdicts"].as_array().unwrap().is_empty());
        galilei_suite_free(s);

        assert_eq!(
            galilei_suite_run(42, true, &mut s),
            GalileiStatus::InvalidArgument
        );
    }
}

#[test]
fn header_declares_every_export() {
    let header = include_str!("../include/galilei.h");
    let src = include_str!("../src/lib.rs");
    for line in src.lines().filter(|l| l.contains("extern \"C\" fn ")) {
        let name = line.split("fn ").nth(1).unwrap().split('(').next().unwrap();
        assert!(
            header.contains(&format!("{name}(")),
            "{name} missing from header"
        );
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/galilei.h");
    match std::process::Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c", header])
        .status()
    {
        Ok(status) => assert!(status.success()),
        Err(_) => eprintln!("no C compiler found, skipping"),
    }
}
