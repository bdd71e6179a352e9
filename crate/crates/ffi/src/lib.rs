//! C ABI over the matchpoly library.
//!
//! Every fallible function returns an [`MpStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`mp_last_error`]. Big integers cross the boundary as
//! NUL-terminated decimal strings that the caller releases with
//! [`mp_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, UnwindSafe};

use matchpoly::coverings::{count_complete_coverings, count_coverings, HostGraph};
use matchpoly::exact::fuss_catalan;
use matchpoly::family::generate;
use matchpoly::moments::{closed_form_moment, lukasiewicz_moment, WeightSchema};
use matchpoly::verify::{combinatorial_moment, combinatorial_moment_limit, verify, CheckKind};
use matchpoly::{Error, Family, FamilyKind, Polynomial};

/// Status codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MpStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BoundExceeded = 3,
    IndexOutOfRange = 4,
    Internal = 5,
}

pub const MP_FAMILY_CHEBYSHEV_U: u32 = 0;
pub const MP_FAMILY_CHEBYSHEV_T: u32 = 1;
pub const MP_FAMILY_HERMITE: u32 = 2;
pub const MP_FAMILY_LAGUERRE: u32 = 3;

pub const MP_GRAPH_PATH: u32 = 0;
pub const MP_GRAPH_CYCLE: u32 = 1;
pub const MP_GRAPH_COMPLETE: u32 = 2;
pub const MP_GRAPH_BIPARTITE: u32 = 3;

pub const MP_METHOD_CLOSED: u32 = 0;
pub const MP_METHOD_PATHS: u32 = 1;
pub const MP_METHOD_ENUMERATE: u32 = 2;

pub const MP_CHECK_RECURRENCE: u32 = 0;
pub const MP_CHECK_ORTHOGONALITY: u32 = 1;
pub const MP_CHECK_INVOLUTION: u32 = 2;
pub const MP_CHECK_BIJECTION: u32 = 3;
pub const MP_CHECK_GF: u32 = 4;
pub const MP_CHECK_ALL: u32 = 5;

/// Opaque handle to `P_0 ..= P_n` of one family.
pub struct MpSequence {
    polys: Vec<Polynomial>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(MpStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::BoundExceeded(_) => MpStatus::BoundExceeded,
            _ => MpStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn guard<F>(f: F) -> MpStatus
where
    F: FnOnce() -> Result<(), Failure> + UnwindSafe,
{
    match catch_unwind(f) {
        Ok(Ok(())) => {
            set_error("");
            MpStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MpStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(MpStatus::NullPointer, format!("{what} is null"))
}

fn bad(msg: String) -> Failure {
    Failure(MpStatus::InvalidArgument, msg)
}

fn family(code: u32, t: u32) -> Result<Family, Failure> {
    let kind = match code {
        MP_FAMILY_CHEBYSHEV_U => FamilyKind::ChebyshevU,
        MP_FAMILY_CHEBYSHEV_T => FamilyKind::ChebyshevT,
        MP_FAMILY_HERMITE => FamilyKind::Hermite,
        MP_FAMILY_LAGUERRE => FamilyKind::Laguerre,
        other => return Err(bad(format!("unknown family code {other}"))),
    };
    Ok(Family::new(kind, t)?)
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|_| Failure(MpStatus::Internal, "string contains NUL".into()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn mp_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mp_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Generate `P_0 ..= P_n_max` for `family` at order `t`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_sequence_generate(family_code: u32, t: u32, n_max: usize, out: *mut *mut MpSequence) -> MpStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let fam = family(family_code, t)?;
        let seq = Box::new(MpSequence {
            polys: generate(fam, n_max),
        });
        *out = Box::into_raw(seq);
        Ok(())
    })
}

/// Number of polynomials in the sequence, 0 for null.
///
/// # Safety
/// `seq` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn mp_sequence_len(seq: *const MpSequence) -> usize {
    seq.as_ref().map_or(0, |s| s.polys.len())
}

unsafe fn poly<'a>(seq: *const MpSequence, index: usize) -> Result<&'a Polynomial, Failure> {
    let s = seq.as_ref().ok_or_else(|| null("seq"))?;
    s.polys.get(index).ok_or_else(|| {
        Failure(
            MpStatus::IndexOutOfRange,
            format!("index {index} is out of range for {} polynomials", s.polys.len()),
        )
    })
}

/// Degree of `P_index`.
///
/// # Safety
/// `seq` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_sequence_degree(seq: *const MpSequence, index: usize, out: *mut usize) -> MpStatus {
    guard(|| {
        let p = poly(seq, index)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = p.degree().unwrap_or(0);
        Ok(())
    })
}

/// Coefficient of `x^power` in `P_index` as a decimal string.
///
/// # Safety
/// `seq` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_sequence_coefficient(
    seq: *const MpSequence,
    index: usize,
    power: usize,
    out: *mut *mut c_char,
) -> MpStatus {
    guard(|| {
        let p = poly(seq, index)?;
        write_string(out, p.coeff(power).to_string())
    })
}

/// `P_index` rendered as text, e.g. `x^2 - 1`.
///
/// # Safety
/// `seq` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_sequence_text(seq: *const MpSequence, index: usize, out: *mut *mut c_char) -> MpStatus {
    guard(|| {
        let p = poly(seq, index)?;
        write_string(out, p.to_string())
    })
}

/// Release a sequence. Null is ignored.
///
/// # Safety
/// `seq` must come from [`mp_sequence_generate`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mp_sequence_free(seq: *mut MpSequence) {
    if !seq.is_null() {
        drop(Box::from_raw(seq));
    }
}

/// Moment `mu_n` computed by `method`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_moment(family_code: u32, t: u32, n: usize, method: u32, out: *mut *mut c_char) -> MpStatus {
    guard(|| {
        let fam = family(family_code, t)?;
        let value = match method {
            MP_METHOD_CLOSED => closed_form_moment(fam, n),
            MP_METHOD_PATHS => lukasiewicz_moment(&WeightSchema::for_family(fam), n, 0),
            MP_METHOD_ENUMERATE => {
                let limit = combinatorial_moment_limit(fam);
                if n > limit {
                    return Err(Failure(
                        MpStatus::BoundExceeded,
                        format!("direct enumeration stops at n = {limit}"),
                    ));
                }
                combinatorial_moment(fam, n)
            }
            other => return Err(bad(format!("unknown method code {other}"))),
        };
        write_string(out, value.to_string())
    })
}

/// Number of coverings of a host graph by t-paths.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_count_coverings(
    graph: u32,
    n: usize,
    t: u32,
    complete_only: bool,
    out: *mut *mut c_char,
) -> MpStatus {
    guard(|| {
        if t == 0 {
            return Err(Error::ZeroOrder.into());
        }
        let host = match graph {
            MP_GRAPH_PATH => HostGraph::Path(n),
            MP_GRAPH_CYCLE => HostGraph::Cycle(n),
            MP_GRAPH_COMPLETE => HostGraph::Complete(n),
            MP_GRAPH_BIPARTITE => HostGraph::CompleteBipartite(n),
            other => return Err(bad(format!("unknown graph code {other}"))),
        };
        if host.vertex_count() > 24 {
            return Err(Failure(MpStatus::BoundExceeded, format!("{host} has more than 24 vertices")));
        }
        let count = if complete_only {
            count_complete_coverings(host, t)
        } else {
            count_coverings(host, t)
        };
        write_string(out, count.to_string())
    })
}

/// Fuss-Catalan number `C(n, t)`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mp_fuss_catalan(n: u64, t: u64, out: *mut *mut c_char) -> MpStatus {
    guard(|| write_string(out, fuss_catalan(n, t).to_string()))
}

/// Run a verification suite and return its report as JSON. A negative
/// `trunc` selects the per-identity default truncation.
///
/// # Safety
/// `out_json` and `out_passed` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn mp_verify(
    check: u32,
    t: u32,
    bound: usize,
    trunc: i64,
    out_json: *mut *mut c_char,
    out_passed: *mut bool,
) -> MpStatus {
    guard(|| {
        if out_passed.is_null() {
            return Err(null("out_passed"));
        }
        let kind = match check {
            MP_CHECK_RECURRENCE => CheckKind::Recurrence,
            MP_CHECK_ORTHOGONALITY => CheckKind::Orthogonality,
            MP_CHECK_INVOLUTION => CheckKind::Involution,
            MP_CHECK_BIJECTION => CheckKind::Bijection,
            MP_CHECK_GF => CheckKind::Gf,
            MP_CHECK_ALL => CheckKind::All,
            other => return Err(bad(format!("unknown check code {other}"))),
        };
        let trunc = usize::try_from(trunc).ok();
        let report = verify(kind, t, bound, trunc)?;
        write_string(out_json, report.to_json())?;
        *out_passed = report.passed();
        Ok(())
    })
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn mp_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
