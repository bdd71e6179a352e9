use std::ffi::{c_char, CStr};
use std::path::Path;
use std::process::Command;
use std::ptr;

use matchpoly_ffi::*;

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    mp_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(mp_last_error()).to_str().unwrap().to_owned()
}

#[test]
fn hermite_sequence_coefficients() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(mp_sequence_generate(MP_FAMILY_HERMITE, 3, 10, &mut seq), MpStatus::Ok);
        assert_eq!(mp_sequence_len(seq), 11);
        let mut degree = 0;
        assert_eq!(mp_sequence_degree(seq, 10, &mut degree), MpStatus::Ok);
        assert_eq!(degree, 10);
        let coeff = |power| {
            let mut s = ptr::null_mut();
            assert_eq!(mp_sequence_coefficient(seq, 10, power, &mut s), MpStatus::Ok);
            take(s)
        };
        assert_eq!(coeff(2), "226800");
        assert_eq!(coeff(6), "-2520");
        assert_eq!(coeff(10), "1");
        assert_eq!(coeff(11), "0");
        let mut text = ptr::null_mut();
        assert_eq!(mp_sequence_text(seq, 10, &mut text), MpStatus::Ok);
        assert_eq!(take(text), "x^10 - 2520x^6 + 226800x^2");
        mp_sequence_free(seq);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(mp_sequence_generate(MP_FAMILY_LAGUERRE, 2, 4, &mut seq), MpStatus::InvalidArgument);
        assert!(seq.is_null());
        assert!(last_error().contains("odd"));
        assert_eq!(mp_sequence_generate(9, 1, 4, &mut seq), MpStatus::InvalidArgument);
        assert_eq!(
            mp_sequence_generate(MP_FAMILY_HERMITE, 1, 4, ptr::null_mut()),
            MpStatus::NullPointer
        );

        assert_eq!(mp_sequence_generate(MP_FAMILY_CHEBYSHEV_U, 1, 3, &mut seq), MpStatus::Ok);
        assert_eq!(last_error(), "");
        let mut s = ptr::null_mut();
        assert_eq!(mp_sequence_coefficient(seq, 4, 0, &mut s), MpStatus::IndexOutOfRange);
        assert_eq!(mp_sequence_coefficient(ptr::null(), 0, 0, &mut s), MpStatus::NullPointer);
        mp_sequence_free(seq);

        assert_eq!(mp_sequence_len(ptr::null()), 0);
        mp_sequence_free(ptr::null_mut());
        mp_string_free(ptr::null_mut());
    }
}

#[test]
fn moments_agree_across_methods() {
    unsafe {
        for method in [MP_METHOD_CLOSED, MP_METHOD_PATHS, MP_METHOD_ENUMERATE] {
            let mut s = ptr::null_mut();
            assert_eq!(mp_moment(MP_FAMILY_HERMITE, 3, 8, method, &mut s), MpStatus::Ok);
            assert_eq!(take(s), "5040");
        }
        let mut s = ptr::null_mut();
        assert_eq!(
            mp_moment(MP_FAMILY_HERMITE, 3, 12, MP_METHOD_ENUMERATE, &mut s),
            MpStatus::BoundExceeded
        );
        assert_eq!(mp_moment(MP_FAMILY_HERMITE, 3, 12, 7, &mut s), MpStatus::InvalidArgument);
    }
}

#[test]
fn counts_and_fuss_catalan() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(mp_count_coverings(MP_GRAPH_PATH, 6, 1, false, &mut s), MpStatus::Ok);
        assert_eq!(take(s), "13");
        assert_eq!(mp_count_coverings(MP_GRAPH_COMPLETE, 6, 1, true, &mut s), MpStatus::Ok);
        assert_eq!(take(s), "15");
        assert_eq!(mp_count_coverings(MP_GRAPH_BIPARTITE, 13, 1, true, &mut s), MpStatus::BoundExceeded);
        assert_eq!(mp_count_coverings(MP_GRAPH_PATH, 3, 0, true, &mut s), MpStatus::InvalidArgument);
        assert_eq!(mp_fuss_catalan(3, 2, &mut s), MpStatus::Ok);
        assert_eq!(take(s), "12");
    }
}

#[test]
fn verify_report() {
    unsafe {
        let mut json = ptr::null_mut();
        let mut passed = false;
        assert_eq!(mp_verify(MP_CHECK_GF, 1, 8, 12, &mut json, &mut passed), MpStatus::Ok);
        assert!(passed);
        let json = take(json);
        assert!(json.contains("\"outcomes\""));
        assert!(json.contains("UM-lfrac"));
        let mut json = ptr::null_mut();
        assert_eq!(mp_verify(42, 1, 8, -1, &mut json, &mut passed), MpStatus::InvalidArgument);
        assert_eq!(mp_verify(MP_CHECK_GF, 1, 8, -1, &mut json, ptr::null_mut()), MpStatus::NullPointer);
    }
}

#[test]
fn version_is_set() {
    let v = unsafe { CStr::from_ptr(mp_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/matchpoly.h")).unwrap();
    for name in [
        "typedef struct MpSequence MpSequence;",
        "MP_STATUS_BOUND_EXCEEDED",
        "mp_sequence_generate",
        "mp_sequence_coefficient",
        "mp_moment",
        "mp_count_coverings",
        "mp_fuss_catalan",
        "mp_verify",
        "mp_last_error",
        "mp_string_free",
        "mp_sequence_free",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found, skipping");
        return;
    };
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let src = std::env::temp_dir().join(format!("matchpoly_header_{}.c", std::process::id()));
    std::fs::write(
        &src,
        "#include \"matchpoly.h\"\nint main(void) { MpSequence *s = 0; return (int)mp_sequence_len(s); }\n",
    )
    .unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&dir)
        .arg(&src)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&src);
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
