//! C interface to `galilei`.
//!
//! Every call returns a [`GalileiStatus`]. On anything other than
//! `GALILEI_STATUS_OK`, [`galilei_last_error`] describes the failure for the
//! calling thread. Objects are returned as opaque handles that the caller
//! releases with the matching `_free` function; strings are released with
//! [`galilei_string_free`]. Rational coefficients cross the boundary as
//! decimal strings such as `"-3/4"`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, UnwindSafe};
use std::ptr;

use galilei::exact::TruncatedSeries;
use galilei::genfun::{f_series, Method};
use galilei::quiver::radical_filtration;
use galilei::sl2rep::SimpleHC;
use galilei::verify::{run_suite, Options, Suite, SUITES};
use galilei::younglat::rank_at;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GalileiStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidArgument = 2,
    ComputationFailed = 3,
    OutOfRange = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GalileiMethod {
    Enum = 0,
    Recur = 1,
    Closed = 2,
}

impl From<GalileiMethod> for Method {
    fn from(m: GalileiMethod) -> Method {
        match m {
            GalileiMethod::Enum => Method::Enum,
            GalileiMethod::Recur => Method::Recur,
            GalileiMethod::Closed => Method::Closed,
        }
    }
}

/// Truncated power series with rational coefficients.
pub struct GalileiSeries(TruncatedSeries);

/// Outcome of one acceptance suite.
pub struct GalileiSuite(Suite);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Fail(GalileiStatus, String);

type Result<T> = std::result::Result<T, Fail>;

fn fail<T>(status: GalileiStatus, msg: impl Into<String>) -> Result<T> {
    Err(Fail(status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<()> + UnwindSafe) -> GalileiStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(f) {
        Ok(Ok(())) => GalileiStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".to_string());
            set_error(msg);
            GalileiStatus::Panic
        }
    }
}

unsafe fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T> {
    match p.as_mut() {
        Some(r) => Ok(r),
        None => fail(GalileiStatus::NullArgument, "output pointer is null"),
    }
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T> {
    match p.as_ref() {
        Some(r) => Ok(r),
        None => fail(GalileiStatus::NullArgument, "handle is null"),
    }
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message for the last failed call on this thread, or null. The pointer stays
/// valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn galilei_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn galilei_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `F^(k)_l` through degree `degree`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn galilei_series_new(
    method: GalileiMethod,
    k: u32,
    l: u32,
    degree: usize,
    out: *mut *mut GalileiSeries,
) -> GalileiStatus {
    guard(|| {
        let out = out_ref(out)?;
        let s = f_series(method.into(), k, l, degree)
            .or_else(|e| fail(GalileiStatus::ComputationFailed, e.to_string()))?;
        *out = Box::into_raw(Box::new(GalileiSeries(s)));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from [`galilei_series_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn galilei_series_free(s: *mut GalileiSeries) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of stored coefficients (the truncation order plus one).
///
/// # Safety
/// `s` must be a live series handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_series_len(
    s: *const GalileiSeries,
    out: *mut usize,
) -> GalileiStatus {
    guard(|| {
        *out_ref(out)? = handle(s)?.0.order() + 1;
        Ok(())
    })
}

/// Coefficient `i` as a newly allocated string.
///
/// # Safety
/// `s` must be a live series handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_series_coeff(
    s: *const GalileiSeries,
    i: usize,
    out: *mut *mut c_char,
) -> GalileiStatus {
    guard(|| {
        let s = &handle(s)?.0;
        let out = out_ref(out)?;
        if i > s.order() {
            return fail(
                GalileiStatus::OutOfRange,
                format!("index {i} beyond order {}", s.order()),
            );
        }
        *out = to_c_string(s.coeff(i).to_string());
        Ok(())
    })
}

/// Rank of `M_n` evaluated at `x = n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_young_rank(n: u32, out: *mut usize) -> GalileiStatus {
    guard(|| {
        let out = out_ref(out)?;
        if n == 0 {
            return fail(GalileiStatus::InvalidArgument, "n must be at least 1");
        }
        *out = rank_at(n);
        Ok(())
    })
}

/// Radical layers of the projective cover of `top` (for example `"V'(0)"`
/// or `"V(5)"`), rendered as `"V'(0) / V(4) / ..."`.
///
/// # Safety
/// `top` must be a nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_radical_filtration(
    top: *const c_char,
    depth: usize,
    out: *mut *mut c_char,
) -> GalileiStatus {
    guard(|| {
        let out = out_ref(out)?;
        if top.is_null() {
            return fail(GalileiStatus::NullArgument, "top is null");
        }
        let Ok(label) = CStr::from_ptr(top).to_str() else {
            return fail(GalileiStatus::InvalidArgument, "top is not UTF-8");
        };
        let top: SimpleHC = label
            .parse()
            .or_else(|e| fail(GalileiStatus::InvalidArgument, format!("{e}")))?;
        *out = to_c_string(radical_filtration(top, depth).to_string());
        Ok(())
    })
}

/// Runs acceptance suite `id` (1 to 9).
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_suite_run(
    id: u8,
    quick: bool,
    out: *mut *mut GalileiSuite,
) -> GalileiStatus {
    guard(|| {
        let out = out_ref(out)?;
        if !SUITES.iter().any(|(i, _, _)| *i == id) {
            return fail(GalileiStatus::InvalidArgument, format!("no suite {id}"));
        }
        *out = Box::into_raw(Box::new(GalileiSuite(run_suite(id, Options { quick }))));
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a handle from [`galilei_suite_run`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn galilei_suite_free(s: *mut GalileiSuite) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Whether every claim of the suite passed.
///
/// # Safety
/// `s` must be a live suite handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_suite_passed(
    s: *const GalileiSuite,
    out: *mut bool,
) -> GalileiStatus {
    guard(|| {
        *out_ref(out)? = handle(s)?.0.pass();
        Ok(())
    })
}

/// The suite with its results and verdicts as a JSON document.
///
/// # Safety
/// `s` must be a live suite handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn galilei_suite_json(
    s: *const GalileiSuite,
    out: *mut *mut c_char,
) -> GalileiStatus {
    guard(|| {
        let s = handle(s)?;
        let out = out_ref(out)?;
        let json = serde_json::to_string(&s.0)
            .or_else(|e| fail(GalileiStatus::ComputationFailed, e.to_string()))?;
        *out = to_c_string(json);
        Ok(())
    })
}
