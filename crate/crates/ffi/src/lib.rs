//! C ABI for `ppt-core`.
//!
//! Triples cross the boundary as opaque `PptTripleHandle` pointers; integers
//! cross as NUL-terminated decimal strings.
//! Every fallible call returns a [`PptStatus`]; on failure the message is
//! available from [`ppt_last_error_message`] on the same thread.
//!
//! # Memory
//!
//! - Handles returned through out-parameters are owned by the caller and
//!   must be released with [`ppt_triple_free`].
//! - Strings returned by this library must be released with
//!   [`ppt_string_free`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use num_bigint::BigUint;
use ppt_core::cli::{info_json, rhind_json, to_json};
use ppt_core::{Error, Forest, PathCode, PptTriple, TreeKind};

/// Result of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PptStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidTriple = 4,
    NotPythagorean = 5,
    NotPrimitive = 6,
    MalformedPath = 7,
    DomainError = 8,
    DepthLimit = 9,
    /// A cross-check between two independent computations failed.
    InvariantViolation = 10,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PptTree {
    BarningHall = 0,
    New = 1,
}

impl From<PptTree> for TreeKind {
    fn from(t: PptTree) -> Self {
        match t {
            PptTree::BarningHall => TreeKind::BarningHall,
            PptTree::New => TreeKind::New,
        }
    }
}

/// Opaque primitive triple.
pub struct PptTripleHandle(PptTriple);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(status: PptStatus, msg: impl Into<String>) -> PptStatus {
    let msg = CString::new(msg.into().replace('\0', "")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
    status
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PptStatus {
    match e {
        Error::InvalidTriple(_) => PptStatus::InvalidTriple,
        Error::NotPrimitiveHat { .. } | Error::NotPrimitive(_) => PptStatus::NotPrimitive,
        Error::NotPythagorean { .. } => PptStatus::NotPythagorean,
        Error::Domain(_) => PptStatus::DomainError,
        Error::MalformedPath(_) => PptStatus::MalformedPath,
        Error::DepthLimit { .. } => PptStatus::DepthLimit,
        Error::Invariant(_) => PptStatus::InvariantViolation,
    }
}

fn fail(e: Error) -> PptStatus {
    set_error(status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PptStatus> {
    if s.is_null() {
        return Err(set_error(PptStatus::NullArgument, "null string argument"));
    }
    // SAFETY: caller guarantees a valid NUL-terminated string.
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| set_error(PptStatus::InvalidUtf8, "argument is not UTF-8"))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

fn boxed(t: PptTriple) -> *mut PptTripleHandle {
    Box::into_raw(Box::new(PptTripleHandle(t)))
}

unsafe fn handle<'a>(h: *const PptTripleHandle) -> Result<&'a PptTriple, PptStatus> {
    if h.is_null() {
        return Err(set_error(PptStatus::NullArgument, "null triple handle"));
    }
    // SAFETY: caller guarantees a live handle from this library.
    Ok(unsafe { &(*h).0 })
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn ppt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn ppt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ppt_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: originated from CString::into_raw in this crate.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Parses a primitive triple from decimal strings; legs may be swapped.
///
/// # Safety
/// `a`, `b`, `c` must be NUL-terminated strings and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ppt_triple_new(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    out: *mut *mut PptTripleHandle,
) -> PptStatus {
    clear_error();
    if out.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    let a = try_status!(unsafe { read_big(a) });
    let b = try_status!(unsafe { read_big(b) });
    let c = try_status!(unsafe { read_big(c) });
    match PptTriple::new(a, b, c) {
        Ok(t) => {
            // SAFETY: checked non-null above.
            unsafe { *out = boxed(t) };
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Builds a primitive triple from machine integers.
///
/// # Safety
/// `out` must be a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn ppt_triple_from_u64(a: u64, b: u64, c: u64, out: *mut *mut PptTripleHandle) -> PptStatus {
    clear_error();
    if out.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    match PptTriple::new(a, b, c) {
        Ok(t) => {
            unsafe { *out = boxed(t) };
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// # Safety
/// `h` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ppt_triple_free(h: *mut PptTripleHandle) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// `"a,b,c"` in canonical order (odd leg, even leg, hypotenuse); free with
/// `ppt_string_free`. NULL on a null handle.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppt_triple_to_string(h: *const PptTripleHandle) -> *mut c_char {
    match unsafe { handle(h) } {
        Ok(t) => into_c_string(t.to_string()),
        Err(_) => ptr::null_mut(),
    }
}

/// One component (0 = odd leg, 1 = even leg, 2 = hypotenuse) as a decimal
/// string; NULL on a bad index or null handle.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn ppt_triple_component(h: *const PptTripleHandle, index: u32) -> *mut c_char {
    let Ok(t) = (unsafe { handle(h) }) else {
        return ptr::null_mut();
    };
    match index {
        0 => into_c_string(t.a().to_string()),
        1 => into_c_string(t.b().to_string()),
        2 => into_c_string(t.c().to_string()),
        _ => {
            set_error(PptStatus::DomainError, format!("component index {index} out of range"));
            ptr::null_mut()
        }
    }
}

/// Writes the A, B, C children to `out[0..3]`.
///
/// # Safety
/// `h` must be a live handle and `out` must point to three writable slots.
#[no_mangle]
pub unsafe extern "C" fn ppt_children(
    tree: PptTree,
    h: *const PptTripleHandle,
    out: *mut *mut PptTripleHandle,
) -> PptStatus {
    clear_error();
    let t = try_status!(unsafe { handle(h) });
    if out.is_null() {
        return set_error(PptStatus::NullArgument, "null out array");
    }
    match Forest::default().children(tree.into(), t) {
        Ok(kids) => {
            for (i, k) in kids.into_iter().enumerate() {
                unsafe { *out.add(i) = boxed(k) };
            }
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Writes the parent to `*out_parent` and its letter (`'A'`, `'B'`, `'C'`)
/// to `*out_letter`. At the root both are set to NULL and `0`.
///
/// # Safety
/// `h` must be a live handle; out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ppt_parent(
    tree: PptTree,
    h: *const PptTripleHandle,
    out_parent: *mut *mut PptTripleHandle,
    out_letter: *mut c_char,
) -> PptStatus {
    clear_error();
    let t = try_status!(unsafe { handle(h) });
    if out_parent.is_null() || out_letter.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    match Forest::default().parent(tree.into(), t) {
        Ok(Some((p, l))) => {
            unsafe {
                *out_parent = boxed(p);
                *out_letter = l.as_char() as c_char;
            }
            PptStatus::Ok
        }
        Ok(None) => {
            unsafe {
                *out_parent = ptr::null_mut();
                *out_letter = 0;
            }
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Follows a path code (letters A/B/C, either case) from the root.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ppt_navigate(tree: PptTree, path: *const c_char, out: *mut *mut PptTripleHandle) -> PptStatus {
    clear_error();
    let text = try_status!(unsafe { read_str(path) });
    if out.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    let code: PathCode = match text.parse() {
        Ok(c) => c,
        Err(e) => return fail(e),
    };
    match Forest::default().navigate(tree.into(), &code) {
        Ok(t) => {
            unsafe { *out = boxed(t) };
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

/// Writes the path code of `h` (empty for the root) to `*out_path`; free it
/// with `ppt_string_free`.
///
/// # Safety
/// `h` must be a live handle and `out_path` writable.
#[no_mangle]
pub unsafe extern "C" fn ppt_locate(tree: PptTree, h: *const PptTripleHandle, out_path: *mut *mut c_char) -> PptStatus {
    clear_error();
    let t = try_status!(unsafe { handle(h) });
    if out_path.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    match Forest::default().locate(tree.into(), t) {
        Ok(code) => {
            unsafe { *out_path = into_c_string(code.to_string()) };
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

fn write_json(value: Result<serde_json::Value, Error>, out: *mut *mut c_char) -> PptStatus {
    match value {
        Ok(v) => {
            // SAFETY: callers check `out` for null.
            unsafe { *out = into_c_string(to_json(v)) };
            PptStatus::Ok
        }
        Err(e) => fail(e),
    }
}

unsafe fn read_big(s: *const c_char) -> Result<BigUint, PptStatus> {
    let text = unsafe { read_str(s) }?;
    text.trim()
        .parse::<BigUint>()
        .map_err(|_| set_error(PptStatus::ParseError, format!("{text:?} is not a non-negative integer")))
}

/// The `info` report for any Pythagorean triple, as the CLI's JSON.
///
/// # Safety
/// `a`, `b`, `c` must be NUL-terminated strings and `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn ppt_info_json(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    out_json: *mut *mut c_char,
) -> PptStatus {
    clear_error();
    if out_json.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    let a = try_status!(unsafe { read_big(a) });
    let b = try_status!(unsafe { read_big(b) });
    let c = try_status!(unsafe { read_big(c) });
    write_json(info_json(&a, &b, &c, &Forest::default()), out_json)
}

/// Two-term decompositions of `2/n` for odd `n ≥ 3`, as the CLI's JSON.
///
/// # Safety
/// `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ppt_rhind_json(n: u64, out_json: *mut *mut c_char) -> PptStatus {
    clear_error();
    if out_json.is_null() {
        return set_error(PptStatus::NullArgument, "null out pointer");
    }
    write_json(rhind_json(n), out_json)
}
