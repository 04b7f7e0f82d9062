//! C interface to sl3spider.
//!
//! Every function returns a [`SpiderStatus`]; results come back through
//! out-pointers. Objects are opaque handles released with their `_free`
//! function, and strings handed out by the library are released with
//! [`spider_string_free`]. After a failure, [`spider_last_error`] describes
//! it on the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sl3spider::cli::BRANCH_BUDGET;
use sl3spider::homocalc;
use sl3spider::projector::projector_for_word;
use sl3spider::qring::{LaurentPoly, RationalFunc};
use sl3spider::tangle::{colored_invariant, evaluate, TangleDiagram};
use sl3spider::twistlimit::stabilization_report;
use sl3spider::web::{WebSum, Word};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpiderStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    BudgetExceeded = 3,
    Internal = 4,
}

/// A parsed tangle diagram.
pub struct SpiderTangle(TangleDiagram);

/// A linear combination of webs.
pub struct SpiderWebSum(Sum);

enum Sum {
    Laurent(WebSum<LaurentPoly>),
    Rational(WebSum<RationalFunc>),
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

struct Fail(SpiderStatus, String);

fn invalid(e: impl ToString) -> Fail {
    Fail(SpiderStatus::InvalidInput, e.to_string())
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SpiderStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SpiderStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            SpiderStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(SpiderStatus::NullArgument, "null string argument".into()));
    }
    CStr::from_ptr(p).to_str().map_err(|_| invalid("argument is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(SpiderStatus::NullArgument, "null handle".into()))
}

unsafe fn put<T>(out: *mut *mut T, v: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SpiderStatus::NullArgument, "null out-pointer".into()));
    }
    *out = Box::into_raw(Box::new(v));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail(SpiderStatus::NullArgument, "null out-pointer".into()));
    }
    *out = CString::new(s).map_err(invalid)?.into_raw();
    Ok(())
}

fn parse_word(s: &str) -> Result<Word, Fail> {
    s.parse().map_err(invalid)
}

fn check_budget(crossings: usize, force: bool) -> Result<(), Fail> {
    let branches = 1u64.checked_shl(crossings as u32).unwrap_or(u64::MAX);
    if !force && (crossings >= 64 || branches > BRANCH_BUDGET) {
        return Err(Fail(
            SpiderStatus::BudgetExceeded,
            format!("{crossings} crossings exceed the budget of {BRANCH_BUDGET} resolution branches"),
        ));
    }
    Ok(())
}

/// Message for the last failure on this thread, or null. Owned by the
/// library and valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn spider_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn spider_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the text slice format.
#[no_mangle]
pub unsafe extern "C" fn spider_tangle_parse(src: *const c_char, out: *mut *mut SpiderTangle) -> SpiderStatus {
    guard(|| {
        let d = TangleDiagram::parse(text(src)?).map_err(invalid)?;
        d.validate().map_err(invalid)?;
        put(out, SpiderTangle(d))
    })
}

#[no_mangle]
pub unsafe extern "C" fn spider_tangle_free(t: *mut SpiderTangle) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

#[no_mangle]
pub unsafe extern "C" fn spider_tangle_to_string(t: *const SpiderTangle, out: *mut *mut c_char) -> SpiderStatus {
    guard(|| put_string(out, handle(t)?.0.to_string()))
}

#[no_mangle]
pub unsafe extern "C" fn spider_tangle_crossings(t: *const SpiderTangle, out: *mut usize) -> SpiderStatus {
    guard(|| {
        let n = handle(t)?.0.crossing_counts().map_err(invalid)?.total();
        if out.is_null() {
            return Err(Fail(SpiderStatus::NullArgument, "null out-pointer".into()));
        }
        *out = n;
        Ok(())
    })
}

/// Skein evaluation. Jobs over the branch budget are refused unless
/// `force` is set.
#[no_mangle]
pub unsafe extern "C" fn spider_evaluate(t: *const SpiderTangle, force: bool, out: *mut *mut SpiderWebSum) -> SpiderStatus {
    guard(|| {
        let d = &handle(t)?.0;
        check_budget(d.crossing_counts().map_err(invalid)?.total(), force)?;
        let s = evaluate(d).map_err(invalid)?;
        put(out, SpiderWebSum(Sum::Laurent(s)))
    })
}

/// Clasp for a sign word such as `"++-"`.
#[no_mangle]
pub unsafe extern "C" fn spider_projector(word: *const c_char, out: *mut *mut SpiderWebSum) -> SpiderStatus {
    guard(|| {
        let w = parse_word(text(word)?)?;
        put(out, SpiderWebSum(Sum::Rational(projector_for_word(&w))))
    })
}

#[no_mangle]
pub unsafe extern "C" fn spider_websum_free(s: *mut SpiderWebSum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

#[no_mangle]
pub unsafe extern "C" fn spider_websum_len(s: *const SpiderWebSum, out: *mut usize) -> SpiderStatus {
    guard(|| {
        let n = match &handle(s)?.0 {
            Sum::Laurent(s) => s.len(),
            Sum::Rational(s) => s.len(),
        };
        if out.is_null() {
            return Err(Fail(SpiderStatus::NullArgument, "null out-pointer".into()));
        }
        *out = n;
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spider_websum_to_json(s: *const SpiderWebSum, out: *mut *mut c_char) -> SpiderStatus {
    guard(|| {
        let v = match &handle(s)?.0 {
            Sum::Laurent(s) => s.to_json(),
            Sum::Rational(s) => s.to_json(),
        };
        put_string(out, v.to_string())
    })
}

/// Colored invariant as JSON; `labels` holds one sign word per component,
/// separated by commas.
#[no_mangle]
pub unsafe extern "C" fn spider_colored_json(
    t: *const SpiderTangle,
    labels: *const c_char,
    out: *mut *mut c_char,
) -> SpiderStatus {
    guard(|| {
        let d = &handle(t)?.0;
        let labels = text(labels)?
            .split(',')
            .map(|s| parse_word(s.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        let s = colored_invariant(d, &labels).map_err(invalid)?;
        put_string(out, s.to_json().to_string())
    })
}

#[no_mangle]
pub unsafe extern "C" fn spider_twist_limit_json(
    word: *const c_char,
    kmax: usize,
    order: i64,
    out: *mut *mut c_char,
) -> SpiderStatus {
    guard(|| {
        let w = parse_word(text(word)?)?;
        if kmax == 0 || order < 0 {
            return Err(invalid("kmax must be positive and order non-negative"));
        }
        check_budget(kmax * w.len() * w.len().saturating_sub(1), false)?;
        put_string(out, stabilization_report(&w, kmax, order).to_json().to_string())
    })
}

/// Gaussian elimination on a serialized complex; `through < 0` means the
/// top degree.
#[no_mangle]
pub unsafe extern "C" fn spider_homocalc_simplify_json(
    complex: *const c_char,
    through: i64,
    out: *mut *mut c_char,
) -> SpiderStatus {
    guard(|| {
        let v: serde_json::Value = serde_json::from_str(text(complex)?).map_err(invalid)?;
        let through = (through >= 0).then_some(through);
        let r = homocalc::simplify_json(&v, through).map_err(invalid)?;
        put_string(out, r.to_string())
    })
}
