//! C ABI surface over the clawmat library.
//!
//! Conventions: objects are opaque handles freed by their `_free` function;
//! every fallible call returns a `ClawmatStatus`; on failure the message is
//! retrievable via `clawmat_last_error`. Strings returned through out
//! parameters are NUL-terminated, owned by the library, and must be released
//! with `clawmat_string_free`. All entry points catch panics and convert
//! them to `CLAWMAT_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clawmat::claw::{find_k_claw, max_claw};
use clawmat::constructions::{BuiltFamily, FamilySpec};
use clawmat::error::Error;
use clawmat::ground::GroundSubset;
use clawmat::matroid::Matroid;
use clawmat::verify::{verify_graph_theorem, verify_lowrank};

/// Status codes returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum ClawmatStatus {
    /// success
    Ok = 0,
    /// invalid argument or unparsable input
    InvalidInput = 1,
    /// object size beyond the supported fixed capacities
    Capacity = 2,
    /// a null pointer was passed where an object was required
    NullPointer = 3,
    /// an internal panic was caught; the library state is still usable
    Panic = 4,
    /// campaign ran but the observed data contradicts the prediction
    Mismatch = 5,
    /// campaign stopped before covering the configured range
    Incomplete = 6,
}

/// Opaque matroid handle.
pub struct ClawmatMatroid {
    inner: Matroid,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let sanitized: String = msg.chars().filter(|&c| c != '\0').collect();
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(sanitized).unwrap());
}

fn status_of(err: &Error) -> ClawmatStatus {
    match err {
        Error::Capacity(_) => ClawmatStatus::Capacity,
        _ => ClawmatStatus::InvalidInput,
    }
}

fn guard<F: FnOnce() -> ClawmatStatus>(f: F) -> ClawmatStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&msg);
            ClawmatStatus::Panic
        }
    }
}

/// Copies the last error message for this thread into `buf` (NUL-terminated,
/// truncated to `cap` bytes). Returns the full message length in bytes.
#[no_mangle]
pub extern "C" fn clawmat_last_error(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        let bytes = msg.as_bytes();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap - 1);
            unsafe {
                ptr::copy_nonoverlapping(bytes.as_ptr() as *const c_char, buf, n);
                *buf.add(n) = 0;
            }
        }
        bytes.len()
    })
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ClawmatStatus> {
    if s.is_null() {
        set_error("null string argument");
        return Err(ClawmatStatus::NullPointer);
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        ClawmatStatus::InvalidInput
    })
}

fn give_matroid(m: Matroid, out: *mut *mut ClawmatMatroid) -> ClawmatStatus {
    if out.is_null() {
        set_error("null out parameter");
        return ClawmatStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(ClawmatMatroid { inner: m })) };
    ClawmatStatus::Ok
}

fn give_string(s: String, out: *mut *mut c_char) -> ClawmatStatus {
    if out.is_null() {
        set_error("null out parameter");
        return ClawmatStatus::NullPointer;
    }
    let c = CString::new(s.replace('\0', "")).unwrap();
    unsafe { *out = c.into_raw() };
    ClawmatStatus::Ok
}

/// Parses a matroid from its text format (binary column or basis-list form).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_parse(
    text: *const c_char,
    out: *mut *mut ClawmatMatroid,
) -> ClawmatStatus {
    guard(|| {
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        match Matroid::parse(text) {
            Ok(m) => give_matroid(m, out),
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Builds a named matroid family from a spec string such as `pg:4`,
/// `mrt:5,2`, or `cc:3,3+1`. Graph-valued specs are rejected here.
///
/// # Safety
/// `spec` must be a valid NUL-terminated string; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn clawmat_family_build(
    spec: *const c_char,
    out: *mut *mut ClawmatMatroid,
) -> ClawmatStatus {
    guard(|| {
        let spec = match read_str(spec) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let built = FamilySpec::parse(spec).and_then(|f| f.build());
        match built {
            Ok(BuiltFamily::Matroid(m)) => give_matroid(m, out),
            Ok(BuiltFamily::Graph(_)) => {
                set_error("spec builds a graph, not a matroid");
                ClawmatStatus::InvalidInput
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Releases a matroid handle. Null is a no-op.
///
/// # Safety
/// `m` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_free(m: *mut ClawmatMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned through an out parameter. Null is a no-op.
///
/// # Safety
/// `s` must have come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn clawmat_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn borrow<'a>(m: *const ClawmatMatroid) -> Result<&'a Matroid, ClawmatStatus> {
    if m.is_null() {
        set_error("null matroid handle");
        return Err(ClawmatStatus::NullPointer);
    }
    Ok(&(*m).inner)
}

/// Ground set size, or -1 on a null handle.
///
/// # Safety
/// `m` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_size(m: *const ClawmatMatroid) -> c_int {
    match borrow(m) {
        Ok(m) => m.n() as c_int,
        Err(_) => -1,
    }
}

/// Rank of the subset given as a bitmask over element indices, or -1 on
/// error (null handle, mask outside the ground set).
///
/// # Safety
/// `m` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_rank(m: *const ClawmatMatroid, subset: u64) -> c_int {
    let m = match borrow(m) {
        Ok(m) => m,
        Err(_) => return -1,
    };
    let set = match GroundSubset::from_bits(subset, m.n()) {
        Ok(s) => s,
        Err(e) => {
            set_error(&e.to_string());
            return -1;
        }
    };
    match m.rank(&set) {
        Ok(r) => r as c_int,
        Err(e) => {
            set_error(&e.to_string());
            -1
        }
    }
}

/// Size of a largest claw (independent flat), or -1 on error.
///
/// # Safety
/// `m` must be a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_max_claw(m: *const ClawmatMatroid) -> c_int {
    let mut result = -1;
    let status = guard(|| {
        let m = match borrow(m) {
            Ok(m) => m,
            Err(s) => return s,
        };
        match max_claw(m) {
            Ok(rep) => {
                result = rep.max_claw_size as c_int;
                ClawmatStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    });
    if status == ClawmatStatus::Ok {
        result
    } else {
        -1
    }
}

/// Writes 1 to `out` when the matroid has a claw of exactly `k` elements,
/// 0 otherwise.
///
/// # Safety
/// `m` must be a live handle; `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_has_k_claw(
    m: *const ClawmatMatroid,
    k: usize,
    out: *mut c_int,
) -> ClawmatStatus {
    guard(|| {
        let m = match borrow(m) {
            Ok(m) => m,
            Err(s) => return s,
        };
        if out.is_null() {
            set_error("null out parameter");
            return ClawmatStatus::NullPointer;
        }
        match find_k_claw(m, k) {
            Ok(found) => {
                *out = found.is_some() as c_int;
                ClawmatStatus::Ok
            }
            Err(e) => {
                set_error(&e.to_string());
                status_of(&e)
            }
        }
    })
}

/// Serializes the matroid into its text format.
///
/// # Safety
/// `m` must be a live handle; `out` a valid pointer; free the result with
/// `clawmat_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clawmat_matroid_serialize(
    m: *const ClawmatMatroid,
    out: *mut *mut c_char,
) -> ClawmatStatus {
    guard(|| {
        let m = match borrow(m) {
            Ok(m) => m,
            Err(s) => return s,
        };
        give_string(m.serialize(), out)
    })
}

fn verdict_status(exit_code: i32) -> ClawmatStatus {
    match exit_code {
        0 => ClawmatStatus::Ok,
        3 => ClawmatStatus::Incomplete,
        _ => ClawmatStatus::Mismatch,
    }
}

/// Runs the induced-forest-free graph campaign and returns the JSON report.
/// `Ok` means the prediction matched; `Mismatch`/`Incomplete` mirror the
/// campaign verdict and still fill `json_out`.
///
/// # Safety
/// `json_out` must be a valid pointer; free the result with
/// `clawmat_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clawmat_verify_graph(
    n: usize,
    t: usize,
    json_out: *mut *mut c_char,
) -> ClawmatStatus {
    guard(|| match verify_graph_theorem(n, t, None) {
        Ok(rep) => {
            let s = give_string(rep.to_json(), json_out);
            if s != ClawmatStatus::Ok {
                return s;
            }
            verdict_status(rep.exit_code())
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    })
}

/// Runs the loopless lower-bound campaign and returns the JSON report.
/// Status semantics match `clawmat_verify_graph`.
///
/// # Safety
/// `json_out` must be a valid pointer; free the result with
/// `clawmat_string_free`.
#[no_mangle]
pub unsafe extern "C" fn clawmat_verify_lowrank(
    r: usize,
    t: usize,
    n_max: usize,
    json_out: *mut *mut c_char,
) -> ClawmatStatus {
    guard(|| match verify_lowrank(r, t, n_max, None) {
        Ok(rep) => {
            let s = give_string(rep.to_json(), json_out);
            if s != ClawmatStatus::Ok {
                return s;
            }
            verdict_status(rep.exit_code())
        }
        Err(e) => {
            set_error(&e.to_string());
            status_of(&e)
        }
    })
}
