use bsk_ffi::*;
use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

fn last_error() -> String {
    unsafe { CStr::from_ptr(bsk_last_error()) }.to_string_lossy().into_owned()
}

unsafe fn take_string(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_string_lossy().into_owned();
    bsk_string_free(s);
    out
}

#[test]
fn algebra_round_trip() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(bsk_algebra_new(3, 2, 0, false, &mut a), BskStatus::Ok);
        let mut dim = 0;
        assert_eq!(bsk_algebra_dim(a, &mut dim), BskStatus::Ok);
        assert_eq!(dim, 21);

        let idx = |i: &str, j: &str| {
            let (i, j) = (CString::new(i).unwrap(), CString::new(j).unwrap());
            let mut k = usize::MAX;
            assert_eq!(bsk_algebra_index_of(a, i.as_ptr(), j.as_ptr(), &mut k), BskStatus::Ok);
            k
        };
        let (h, l) = (idx("12", "22"), idx("22", "23"));
        let mut coefs = vec![7i64; dim];
        assert_eq!(bsk_algebra_product(a, h, l, coefs.as_mut_ptr(), dim), BskStatus::Ok);
        let mut want = vec![0i64; dim];
        want[idx("12", "23")] = 1;
        want[idx("12", "32")] = 1;
        assert_eq!(coefs, want);

        let mut label = ptr::null_mut();
        assert_eq!(bsk_algebra_label(a, h, &mut label), BskStatus::Ok);
        assert_eq!(take_string(label), "ξ_{12,22}");

        let mut triples = 0;
        assert_eq!(bsk_algebra_check_associativity(a, &mut triples), BskStatus::Ok);
        assert_eq!(triples, 115);

        let mut json = ptr::null_mut();
        assert_eq!(bsk_algebra_quiver_json(a, &mut json), BskStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert!(v.is_object());

        bsk_algebra_free(a);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(bsk_algebra_new(2, 2, 4, false, &mut a), BskStatus::InvalidArgument);
        assert!(a.is_null());
        assert!(last_error().contains("characteristic 4"));
        assert_eq!(bsk_algebra_new(2, 2, 0, false, ptr::null_mut()), BskStatus::NullPointer);
        assert_eq!(bsk_algebra_new(40, 40, 0, false, &mut a), BskStatus::ScaleCap);

        let mut dim = 0;
        assert_eq!(bsk_algebra_dim(ptr::null(), &mut dim), BskStatus::NullPointer);

        assert_eq!(bsk_algebra_new(2, 2, 0, false, &mut a), BskStatus::Ok);
        let mut buf = [0i64; 1];
        assert_eq!(bsk_algebra_product(a, 0, 0, buf.as_mut_ptr(), 1), BskStatus::InvalidArgument);
        let (i, j) = (CString::new("21").unwrap(), CString::new("11").unwrap());
        let mut k = 0;
        assert_eq!(bsk_algebra_index_of(a, i.as_ptr(), j.as_ptr(), &mut k), BskStatus::InvalidArgument);
        bsk_algebra_free(a);
        bsk_algebra_free(ptr::null_mut());
        bsk_string_free(ptr::null_mut());
    }
}

#[test]
fn classification() {
    unsafe {
        let mut t = BskRepType::Finite;
        assert_eq!(bsk_classify(2, 5, 3, &mut t), BskStatus::Ok);
        assert_eq!(t, BskRepType::Tame);
        assert_eq!(bsk_classify(4, 3, 0, &mut t), BskStatus::Ok);
        assert_eq!(t, BskRepType::Wild);
        assert_eq!(bsk_classify(0, 3, 0, &mut t), BskStatus::InvalidArgument);

        let mut json = ptr::null_mut();
        assert_eq!(bsk_evidence_json(3, 2, 0, &mut json), BskStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["rep_type"], "tame");
        assert_eq!(v["status"], "verified");
    }
}

#[test]
fn posets() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(bsk_poset_gamma_m(&mut g), BskStatus::Ok);
        let (mut len, mut w, mut wild) = (0, 0, false);
        assert_eq!(bsk_poset_len(g, &mut len), BskStatus::Ok);
        assert_eq!(len, 33);
        assert_eq!(bsk_poset_width(g, &mut w), BskStatus::Ok);
        assert!(w >= 4);
        assert_eq!(bsk_poset_nazarova_wild(g, &mut wild), BskStatus::Ok);
        assert!(!wild);
        bsk_poset_free(g);

        let chain = CString::new(r#"{"elements":["a","b","c"],"covers":[["a","b"],["b","c"]]}"#).unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(bsk_poset_from_json(chain.as_ptr(), &mut c), BskStatus::Ok);
        assert_eq!(bsk_poset_width(c, &mut w), BskStatus::Ok);
        assert_eq!(w, 1);
        assert_eq!(bsk_poset_nazarova_wild(c, &mut wild), BskStatus::Ok);
        assert!(!wild);
        bsk_poset_free(c);

        let bad = CString::new(r#"{"elements":["a"],"covers":[["a","a"]]}"#).unwrap();
        assert_eq!(bsk_poset_from_json(bad.as_ptr(), &mut c), BskStatus::InvalidArgument);
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_api() {
    let h = std::fs::read_to_string(manifest_dir().join("include/bsk.h")).unwrap();
    for name in [
        "typedef struct BskAlgebra BskAlgebra;",
        "typedef struct BskPoset BskPoset;",
        "BSK_STATUS_SCALE_CAP = 3",
        "bsk_algebra_new(",
        "bsk_algebra_product(",
        "bsk_classify(",
        "bsk_poset_nazarova_wild(",
        "bsk_string_free(",
        "bsk_last_error(",
    ] {
        assert!(h.contains(name), "header lacks {name}");
    }
}

fn find_staticlib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libbsk_ffi.a");
    lib.exists().then_some(lib)
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok_and(|o| o.status.success())
}

#[test]
fn c_program_links_and_runs() {
    let (Some(lib), true) = (find_staticlib(), have_cc()) else {
        eprintln!("skipping: no C compiler or static library");
        return;
    };
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("ffi_c");
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("smoke.c");
    std::fs::write(
        &src,
        r#"#include <stdio.h>
#include "bsk.h"
int main(void) {
    BskAlgebra *a = NULL;
    size_t dim = 0;
    if (bsk_algebra_new(2, 3, 2, false, &a) != BSK_STATUS_OK) return 1;
    if (bsk_algebra_dim(a, &dim) != BSK_STATUS_OK) return 2;
    bsk_algebra_free(a);
    BskRepType t;
    if (bsk_classify(2, 5, 3, &t) != BSK_STATUS_OK || t != BSK_REP_TYPE_TAME) return 3;
    if (bsk_classify(2, 5, 4, &t) != BSK_STATUS_INVALID_ARGUMENT) return 4;
    printf("dim=%zu err=%s\n", dim, bsk_last_error());
    return 0;
}
"#,
    )
    .unwrap();
    let bin = dir.join("smoke");
    let status = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&bin)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&bin).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("dim=10 "), "{text}");
    assert!(text.contains("characteristic 4"));
}
