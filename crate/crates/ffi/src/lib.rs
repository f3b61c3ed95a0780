//! C interface to `matdec`.
//!
//! Instances are parsed from the text format into an opaque [`MatdecMatroid`]
//! handle. Every fallible function returns a [`MatdecStatus`]; on failure the
//! message is kept per thread and read with [`matdec_last_error_message`].
//! Element ids are passed as `uint32_t` arrays.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matdec::decomp::{branch_width, decomposition_width};
use matdec::io::{parse_instance, write_instance};
use matdec::matroid::{connectivity, rank};
use matdec::pigeonhole::{class_count, Relation};
use matdec::zoo::Instance;
use matdec::{Error, SharedMatroid, Subset};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatdecStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    Domain = 3,
    SizeGuard = 4,
    Unsupported = 5,
    NotInGround = 6,
    InvalidUtf8 = 7,
    BufferTooSmall = 8,
    InvalidArgument = 9,
    Panic = 10,
}

/// `relation` values for [`matdec_class_count`].
pub const MATDEC_RELATION_SIM: u32 = 0;
pub const MATDEC_RELATION_REFINED: u32 = 1;

/// A parsed instance together with its independence oracle.
pub struct MatdecMatroid {
    instance: Instance,
    oracle: SharedMatroid,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> MatdecStatus {
    match e {
        Error::NotInGround(_) => MatdecStatus::NotInGround,
        Error::SizeGuard { .. } => MatdecStatus::SizeGuard,
        Error::Domain(_) => MatdecStatus::Domain,
        Error::Parse { .. } => MatdecStatus::Parse,
        Error::Unsupported(_) => MatdecStatus::Unsupported,
    }
}

/// Runs `f`, recording failures and turning panics into [`MatdecStatus::Panic`].
fn guarded(f: impl FnOnce() -> Result<(), (MatdecStatus, String)>) -> MatdecStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MatdecStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MatdecStatus::Panic
        }
    }
}

type Failure = (MatdecStatus, String);

fn lib(e: Error) -> Failure {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> Failure {
    (MatdecStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a>(m: *const MatdecMatroid) -> Result<&'a MatdecMatroid, Failure> {
    m.as_ref().ok_or_else(|| null("matroid"))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut().ok_or_else(|| null("output pointer"))
}

/// The subset with the given ids; `ids` may be null when `len` is 0.
unsafe fn subset(m: &MatdecMatroid, ids: *const u32, len: usize) -> Result<Subset, Failure> {
    let ids: &[u32] = if len == 0 {
        &[]
    } else if ids.is_null() {
        return Err(null("ids"));
    } else {
        std::slice::from_raw_parts(ids, len)
    };
    m.oracle
        .ground()
        .subset_of_ids(ids.iter().copied())
        .map_err(lib)
}

/// Parses a NUL-terminated instance text into a new handle stored in `*out`.
/// The handle must be released with [`matdec_free`].
///
/// # Safety
/// `text` must be NUL-terminated; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn matdec_parse(
    text: *const c_char,
    out: *mut *mut MatdecMatroid,
) -> MatdecStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        if text.is_null() {
            return Err(null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| (MatdecStatus::InvalidUtf8, e.to_string()))?;
        let instance = parse_instance(text).map_err(lib)?;
        let oracle = instance.oracle().map_err(lib)?;
        *out = Box::into_raw(Box::new(MatdecMatroid { instance, oracle }));
        Ok(())
    })
}

/// Releases a handle from [`matdec_parse`]. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn matdec_free(m: *mut MatdecMatroid) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn matdec_ground_size(
    m: *const MatdecMatroid,
    out: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        *out_ref(out)? = m.oracle.ground().len();
        Ok(())
    })
}

/// Copies the ground set ids in ascending order into `buf`. `*len` receives
/// the ground set size; if it exceeds `cap` nothing is copied and
/// [`MatdecStatus::BufferTooSmall`] is returned.
///
/// # Safety
/// `buf` must be valid for `cap` writes (or null when `cap` is 0).
#[no_mangle]
pub unsafe extern "C" fn matdec_ground_ids(
    m: *const MatdecMatroid,
    buf: *mut u32,
    cap: usize,
    len: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        let ids = m.oracle.ground().ids();
        *out_ref(len)? = ids.len();
        if ids.len() > cap {
            return Err((
                MatdecStatus::BufferTooSmall,
                format!("need room for {} ids", ids.len()),
            ));
        }
        if !ids.is_empty() {
            if buf.is_null() {
                return Err(null("buffer"));
            }
            ptr::copy_nonoverlapping(ids.as_ptr(), buf, ids.len());
        }
        Ok(())
    })
}

/// # Safety
/// `ids` must be valid for `len` reads; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn matdec_is_independent(
    m: *const MatdecMatroid,
    ids: *const u32,
    len: usize,
    out: *mut bool,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        let x = subset(m, ids, len)?;
        *out_ref(out)? = m.oracle.is_independent(x);
        Ok(())
    })
}

/// # Safety
/// As [`matdec_is_independent`].
#[no_mangle]
pub unsafe extern "C" fn matdec_rank(
    m: *const MatdecMatroid,
    ids: *const u32,
    len: usize,
    out: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        let x = subset(m, ids, len)?;
        *out_ref(out)? = rank(&*m.oracle, x).map_err(lib)?;
        Ok(())
    })
}

/// `r(U) + r(E - U) - r(E)` for the set `U` of the given ids.
///
/// # Safety
/// As [`matdec_is_independent`].
#[no_mangle]
pub unsafe extern "C" fn matdec_connectivity(
    m: *const MatdecMatroid,
    ids: *const u32,
    len: usize,
    out: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        let u = subset(m, ids, len)?;
        *out_ref(out)? = connectivity(&*m.oracle, u).map_err(lib)?;
        Ok(())
    })
}

/// Number of classes of subsets of `U` under the exact boundary equivalence
/// ([`MATDEC_RELATION_SIM`]) or the instance's efficient refinement
/// ([`MATDEC_RELATION_REFINED`]).
///
/// # Safety
/// As [`matdec_is_independent`].
#[no_mangle]
pub unsafe extern "C" fn matdec_class_count(
    m: *const MatdecMatroid,
    ids: *const u32,
    len: usize,
    relation: u32,
    out: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        let u = subset(m, ids, len)?;
        let rel = match relation {
            MATDEC_RELATION_SIM => Relation::Sim,
            MATDEC_RELATION_REFINED => Relation::Refined,
            other => {
                return Err((
                    MatdecStatus::InvalidArgument,
                    format!("unknown relation {other}"),
                ))
            }
        };
        *out_ref(out)? = class_count(&m.instance, u, rel).map_err(lib)?;
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn matdec_branch_width(
    m: *const MatdecMatroid,
    out: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        *out_ref(out)? = branch_width(&*m.oracle).map_err(lib)?;
        Ok(())
    })
}

/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn matdec_decomposition_width(
    m: *const MatdecMatroid,
    out: *mut usize,
) -> MatdecStatus {
    guarded(|| {
        let m = handle(m)?;
        *out_ref(out)? = decomposition_width(&*m.oracle).map_err(lib)?;
        Ok(())
    })
}

/// Writes the canonical text of the instance to `*out`, to be released with
/// [`matdec_string_free`].
///
/// # Safety
/// `m` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn matdec_write_instance(
    m: *const MatdecMatroid,
    out: *mut *mut c_char,
) -> MatdecStatus {
    guarded(|| {
        let out = out_ref(out)?;
        *out = ptr::null_mut();
        let m = handle(m)?;
        let text = CString::new(write_instance(&m.instance))
            .map_err(|e| (MatdecStatus::Domain, e.to_string()))?;
        *out = text.into_raw();
        Ok(())
    })
}

/// Releases a string from [`matdec_write_instance`]. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn matdec_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Copies the calling thread's last error message (NUL-terminated, truncated
/// to fit) into `buf` and returns the length it needs including the NUL.
///
/// # Safety
/// `buf` must be valid for `cap` writes, or null when `cap` is 0.
#[no_mangle]
pub unsafe extern "C" fn matdec_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let e = e.borrow();
        let bytes = e.as_bytes_with_nul();
        if !buf.is_null() && cap > 0 {
            let n = bytes.len().min(cap);
            ptr::copy_nonoverlapping(bytes.as_ptr().cast(), buf, n);
            *buf.add(n - 1) = 0;
        }
        bytes.len()
    })
}
