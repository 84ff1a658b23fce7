//! C interface to the `burniat` crate.
//!
//! Every fallible call returns a [`BurniatStatus`]. On failure a message is
//! kept per thread and can be read with [`burniat_last_error`]. Strings
//! returned through out-parameters are owned by the caller and released with
//! [`burniat_string_free`]; arrangement handles with
//! [`burniat_arrangement_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use burniat::pipeline::{
    compute_pi1_from_arrangement, compute_pi1_variant, invariant_section_dimension, moduli_dimension_report,
    render_json, verify_theorem_table,
};
use burniat::plane::{parse_arrangement, reference_arrangement, to_json};
use burniat::Error;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BurniatStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArrangement = 4,
    InvalidKSquared = 5,
    ClassMismatch = 6,
    Internal = 7,
}

/// A validated nine-line arrangement.
pub struct BurniatArrangement {
    inner: burniat::plane::BurniatArrangement,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> BurniatStatus {
    match e {
        Error::Parse { .. } => BurniatStatus::ParseError,
        Error::InvalidKSquared(_) => BurniatStatus::InvalidKSquared,
        Error::ClassMismatch { .. } => BurniatStatus::ClassMismatch,
        Error::InvalidArrangement(_) | Error::NotBurniat(_) | Error::ZeroVector | Error::TooFewTriplePoints(_) => {
            BurniatStatus::InvalidArrangement
        }
        _ => BurniatStatus::Internal,
    }
}

fn fail(status: BurniatStatus, msg: &str) -> BurniatStatus {
    set_error(msg);
    status
}

fn guard(f: impl FnOnce() -> Result<(), (BurniatStatus, String)>) -> BurniatStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BurniatStatus::Ok,
        Ok(Err((s, msg))) => fail(s, &msg),
        Err(_) => fail(BurniatStatus::Internal, "internal panic"),
    }
}

fn lift(e: Error) -> (BurniatStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (BurniatStatus, String)> {
    if s.is_null() {
        return Err((BurniatStatus::NullPointer, "null string".into()));
    }
    CStr::from_ptr(s).to_str().map_err(|e| (BurniatStatus::InvalidUtf8, e.to_string()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (BurniatStatus, String)> {
    if out.is_null() {
        return Err((BurniatStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|e| (BurniatStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn check_out<T>(out: *mut T) -> Result<(), (BurniatStatus, String)> {
    if out.is_null() {
        Err((BurniatStatus::NullPointer, "null output pointer".into()))
    } else {
        Ok(())
    }
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn burniat_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn burniat_status_message(status: BurniatStatus) -> *const c_char {
    let s: &'static CStr = match status {
        BurniatStatus::Ok => c"ok",
        BurniatStatus::NullPointer => c"null pointer",
        BurniatStatus::InvalidUtf8 => c"invalid UTF-8",
        BurniatStatus::ParseError => c"parse error",
        BurniatStatus::InvalidArrangement => c"invalid arrangement",
        BurniatStatus::InvalidKSquared => c"K^2 out of range",
        BurniatStatus::ClassMismatch => c"arrangement has a different K^2",
        BurniatStatus::Internal => c"internal error",
    };
    s.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn burniat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates an arrangement from its JSON form.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_arrangement_parse(
    json: *const c_char,
    out: *mut *mut BurniatArrangement,
) -> BurniatStatus {
    guard(|| {
        check_out(out)?;
        let inner = parse_arrangement(read_str(json)?).map_err(lift)?;
        let report = inner.validate();
        if !report.is_valid() {
            return Err((BurniatStatus::InvalidArrangement, report.violations.join("; ")));
        }
        *out = Box::into_raw(Box::new(BurniatArrangement { inner }));
        Ok(())
    })
}

/// The shipped arrangement for `k_squared`; `nodal` matters only for 4.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_arrangement_reference(
    k_squared: i64,
    nodal: bool,
    out: *mut *mut BurniatArrangement,
) -> BurniatStatus {
    guard(|| {
        check_out(out)?;
        let inner = reference_arrangement(k_squared, nodal).map_err(lift)?;
        *out = Box::into_raw(Box::new(BurniatArrangement { inner }));
        Ok(())
    })
}

/// # Safety
/// `h` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn burniat_arrangement_free(h: *mut BurniatArrangement) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// `K²` of the surface and whether it is of nodal type.
///
/// # Safety
/// `h` must be a live handle; `k_squared` and `nodal` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_arrangement_classify(
    h: *const BurniatArrangement,
    k_squared: *mut i64,
    nodal: *mut bool,
) -> BurniatStatus {
    guard(|| {
        let a = h.as_ref().ok_or((BurniatStatus::NullPointer, "null handle".to_string()))?;
        check_out(k_squared)?;
        check_out(nodal)?;
        let c = a.inner.classify().map_err(lift)?;
        *k_squared = c.k_squared;
        *nodal = c.nodal;
        Ok(())
    })
}

/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_arrangement_to_json(
    h: *const BurniatArrangement,
    out: *mut *mut c_char,
) -> BurniatStatus {
    guard(|| {
        let a = h.as_ref().ok_or((BurniatStatus::NullPointer, "null handle".to_string()))?;
        write_string(out, to_json(&a.inner).map_err(lift)?)
    })
}

/// The `π₁` row for `k_squared` from the stated relation vectors, as JSON.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_pi1_json(k_squared: i64, nodal: bool, out: *mut *mut c_char) -> BurniatStatus {
    guard(|| {
        check_out(out)?;
        let row = compute_pi1_variant(k_squared, nodal).map_err(lift)?;
        write_string(out, render_json("pi1", row.matches_expected, &row))
    })
}

/// The `π₁` row with relations read off an arrangement of the given `K²`.
///
/// # Safety
/// `h` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_pi1_from_arrangement_json(
    h: *const BurniatArrangement,
    k_squared: i64,
    out: *mut *mut c_char,
) -> BurniatStatus {
    guard(|| {
        let a = h.as_ref().ok_or((BurniatStatus::NullPointer, "null handle".to_string()))?;
        check_out(out)?;
        let row = compute_pi1_from_arrangement(k_squared, &a.inner).map_err(lift)?;
        write_string(out, render_json("pi1", row.matches_expected, &row))
    })
}

/// The full table with discrepancy checks, as JSON. `passed` receives
/// whether every check held.
///
/// # Safety
/// `out` and `passed` must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_verify_theorem_json(out: *mut *mut c_char, passed: *mut bool) -> BurniatStatus {
    guard(|| {
        check_out(out)?;
        check_out(passed)?;
        let t = verify_theorem_table().map_err(lift)?;
        let ok = t.report.all_pass();
        write_string(out, render_json("verify-theorem", ok, &t))?;
        *passed = ok;
        Ok(())
    })
}

/// Dimension of the `G²`-invariant sections and of the primary family.
///
/// # Safety
/// Both pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn burniat_moduli_dimensions(sections: *mut u32, dimension: *mut u32) -> BurniatStatus {
    guard(|| {
        check_out(sections)?;
        check_out(dimension)?;
        *sections = invariant_section_dimension() as u32;
        *dimension = moduli_dimension_report().dimension as u32;
        Ok(())
    })
}
