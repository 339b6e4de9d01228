use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use nilcomplex_ffi::*;

fn context(field: &str, q: &str, n: usize) -> *mut NcContext {
    let (f, q) = (CString::new(field).unwrap(), CString::new(q).unwrap());
    let mut ctx = ptr::null_mut();
    assert_eq!(unsafe { nc_context_new(f.as_ptr(), q.as_ptr(), n, &mut ctx) }, NcStatus::Ok);
    ctx
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(nc_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn context_flags() {
    let ctx = context("zmod:7", "2", 3);
    let (mut a0, mut a1) = (false, false);
    assert_eq!(unsafe { nc_context_assumptions(ctx, &mut a0, &mut a1) }, NcStatus::Ok);
    assert!(a0 && a1);
    unsafe { nc_context_free(ctx) };
    let ctx = context("cyclotomic:3", "zeta", 3);
    unsafe { nc_context_free(ctx) };
}

#[test]
fn bad_field_sets_last_error() {
    let (f, q) = (CString::new("zmod:8").unwrap(), CString::new("1").unwrap());
    let mut ctx = ptr::null_mut();
    assert_eq!(unsafe { nc_context_new(f.as_ptr(), q.as_ptr(), 3, &mut ctx) }, NcStatus::ParseError);
    assert!(ctx.is_null());
    assert!(last_error().contains('8'));
}

#[test]
fn null_handles_are_rejected() {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { nc_complex_homology(ptr::null(), &mut out) }, NcStatus::NullPointer);
    assert_eq!(unsafe { nc_table_len(ptr::null()) }, 0);
}

#[test]
fn module_homology_and_corrupted_differential() {
    let ctx = context("zmod:7", "2", 3);
    // One Jordan string of length 2: H_(1) and H_(2) are both one-dimensional.
    let d = [0i64, 1, 0, 0];
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { nc_module_new(ctx, 2, d.as_ptr(), &mut m) }, NcStatus::Ok);
    let mut dims = [0usize; 2];
    assert_eq!(unsafe { nc_module_homology_dims(m, dims.as_mut_ptr(), 2) }, NcStatus::Ok);
    assert_eq!(dims, [1, 1]);
    unsafe { nc_module_free(m) };

    let bad = [1i64];
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { nc_module_new(ctx, 1, bad.as_ptr(), &mut m) }, NcStatus::NotNilpotent);
    assert!(m.is_null());
    assert!(last_error().contains("witness") || last_error().contains("e0"));
    unsafe { nc_context_free(ctx) };
}

#[test]
fn complex_json_round_trip() {
    let json = CString::new(r#"{"ctx": {"field": {"prime": 7}, "q": 2, "N": 3}, "lo": 0, "hi": 2, "dims": [1,1,1], "d": [[[1]],[[0]]]}"#).unwrap();
    let mut c = ptr::null_mut();
    assert_eq!(unsafe { nc_complex_from_json(json.as_ptr(), &mut c) }, NcStatus::Ok);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { nc_complex_homology(c, &mut t) }, NcStatus::Ok);
    assert_eq!(unsafe { nc_table_len(t) }, 6);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { nc_table_to_json(t, &mut s) }, NcStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(unsafe { CStr::from_ptr(s) }.to_str().unwrap()).unwrap();
    assert_eq!(v["N"], 3);
    unsafe {
        nc_string_free(s);
        nc_table_free(t);
        nc_complex_free(c);
    }
}

#[test]
fn circle_table_and_hochschild() {
    let ctx = context("zmod:3", "1", 3);
    let preset = CString::new("triangle").unwrap();
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { nc_simplicial_homology(ctx, preset.as_ptr(), 0, 6, &mut t) }, NcStatus::Ok);
    let mut nonzero = Vec::new();
    for i in 0..unsafe { nc_table_len(t) } {
        let (mut level, mut degree, mut dim, mut valid) = (0, 0, 0, false);
        assert_eq!(unsafe { nc_table_cell(t, i, &mut level, &mut degree, &mut dim, &mut valid) }, NcStatus::Ok);
        if valid && dim > 0 {
            nonzero.push((level, -degree, dim));
        }
    }
    nonzero.sort();
    assert_eq!(nonzero, vec![(1, 0, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1)]);
    unsafe { nc_table_free(t) };
    unsafe { nc_context_free(ctx) };

    let ctx = context("zmod:7", "2", 3);
    let alg = CString::new("dual_numbers").unwrap();
    assert_eq!(unsafe { nc_hochschild_check(ctx, alg.as_ptr(), 1, 5) }, NcStatus::Ok);
    let ctx_bad = context("zmod:7", "3", 3);
    assert_eq!(unsafe { nc_hochschild_check(ctx_bad, alg.as_ptr(), 1, 5) }, NcStatus::AssumptionViolation);
    unsafe {
        nc_context_free(ctx);
        nc_context_free(ctx_bad);
    }
}

#[test]
fn header_declares_every_entry_point() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/nilcomplex.h")).unwrap();
    for name in [
        "nc_last_error",
        "nc_string_free",
        "nc_context_new",
        "nc_module_new",
        "nc_complex_from_json",
        "nc_simplicial_homology",
        "nc_hochschild_check",
        "nc_table_to_json",
        "NC_STATUS_NOT_NILPOTENT",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

/// Compiles a C program against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let profile_dir = exe.parent().unwrap().parent().unwrap();
    let lib = profile_dir.join("libnilcomplex_ffi.a");
    assert!(lib.exists(), "static library not found at {}", lib.display());
    let out = std::env::temp_dir().join(format!("nilcomplex_c_smoke_{}", std::process::id()));
    let status = Command::new("cc")
        .arg(manifest.join("tests/c_smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success());
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success());
    // Four nonzero cells on the circle; status 4 for the non-nilpotent matrix.
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "4 4");
}
