//! C ABI over `orbicomplex`.
//!
//! Triangulations and split results are opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns an
//! [`OrbStatus`]; the message of the last failure on the calling thread is
//! available from [`orb_last_error`].

use orbicomplex::orbtri::{format, from_signature, iso_signature, validate, OrbifoldTriangulation};
use orbicomplex::spine::{complexity_weight, exceptional_complexity, ExceptionalKind};
use orbicomplex::surgery::{efficient_split_with, ordinary_sum, SplitOptions, SplitResult};
use orbicomplex::OrbError;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidTriangulation = 4,
    NotAnOrbifold = 5,
    InvalidOrder = 6,
    OrderMismatch = 7,
    Rejected = 8,
    Incomplete = 9,
    OutOfRange = 10,
    Other = 11,
    Panic = 12,
}

/// Exceptional orbifold families, for [`orb_exceptional_complexity`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrbKind {
    S3 = 0,
    S3Circle = 1,
    S3Theta = 2,
    P3Circle = 3,
    L31Circle = 4,
}

/// Opaque decorated triangulation.
pub struct OrbTriangulation(OrbifoldTriangulation);

/// Opaque result of splitting into irreducible summands.
pub struct OrbSplit(SplitResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &OrbError) -> OrbStatus {
    match e {
        OrbError::Parse { .. } | OrbError::MalformedPermutation { .. } => OrbStatus::Parse,
        OrbError::Involution { .. } | OrbError::Invalid(_) => OrbStatus::InvalidTriangulation,
        OrbError::NotAnOrbifold(_) => OrbStatus::NotAnOrbifold,
        OrbError::InvalidOrder(_) | OrbError::InvalidOrders(..) => OrbStatus::InvalidOrder,
        OrbError::OrderMismatch(_) => OrbStatus::OrderMismatch,
        OrbError::Rejected(_) => OrbStatus::Rejected,
        OrbError::Incomplete(_) | OrbError::BoundExceeded { .. } => OrbStatus::Incomplete,
        _ => OrbStatus::Other,
    }
}

/// Runs `f`, recording errors and turning panics into [`OrbStatus::Panic`].
fn guard(f: impl FnOnce() -> Result<(), (OrbStatus, String)>) -> OrbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => OrbStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            OrbStatus::Panic
        }
    }
}

fn lib_err(e: OrbError) -> (OrbStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (OrbStatus, String) {
    (OrbStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, (OrbStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (OrbStatus::InvalidUtf8, "argument is not UTF-8".into()))
}

unsafe fn tri_arg<'a>(h: *const OrbTriangulation) -> Result<&'a OrbifoldTriangulation, (OrbStatus, String)> {
    h.as_ref().map(|t| &t.0).ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, v: T) -> Result<(), (OrbStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), (OrbStatus, String)> {
    let c = CString::new(s).map_err(|_| (OrbStatus::Other, "string contains NUL".into()))?;
    put(out, c.into_raw())
}

/// Message of the last failed call on this thread, or NULL. Valid until the next
/// failing call on the same thread.
#[no_mangle]
pub extern "C" fn orb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses the `.orb` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_parse(text: *const c_char, out: *mut *mut OrbTriangulation) -> OrbStatus {
    guard(|| {
        let tri = format::parse(str_arg(text)?).map_err(lib_err)?;
        put(out, Box::into_raw(Box::new(OrbTriangulation(tri))))
    })
}

/// Decodes an isomorphism signature.
///
/// # Safety
/// `sig` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_from_signature(sig: *const c_char, out: *mut *mut OrbTriangulation) -> OrbStatus {
    guard(|| {
        let tri = from_signature(str_arg(sig)?).map_err(lib_err)?;
        put(out, Box::into_raw(Box::new(OrbTriangulation(tri))))
    })
}

/// # Safety
/// `h` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_free(h: *mut OrbTriangulation) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_tet_count(h: *const OrbTriangulation, out: *mut usize) -> OrbStatus {
    guard(|| put(out, tri_arg(h)?.tet_count()))
}

/// Writes the `.orb` text of `h`; free with [`orb_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_serialize(h: *const OrbTriangulation, out: *mut *mut c_char) -> OrbStatus {
    guard(|| put_string(out, format::serialize(tri_arg(h)?)))
}

/// Writes the isomorphism signature of `h`; free with [`orb_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_signature(h: *const OrbTriangulation, out: *mut *mut c_char) -> OrbStatus {
    guard(|| put_string(out, iso_signature(tri_arg(h)?)))
}

/// Returns `Ok` when every structural check passes; otherwise the failing check's code.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn orb_tri_validate(h: *const OrbTriangulation) -> OrbStatus {
    guard(|| validate(tri_arg(h)?).into_result().map_err(lib_err))
}

/// Complexity weight of the dual spine, split into vertex count and singular contribution.
///
/// # Safety
/// `h` must be a live handle and both outputs writable.
#[no_mangle]
pub unsafe extern "C" fn orb_complexity_weight(
    h: *const OrbTriangulation,
    vertex_count: *mut u64,
    singular_contribution: *mut u64,
) -> OrbStatus {
    guard(|| {
        let w = complexity_weight(tri_arg(h)?);
        put(vertex_count, w.vertex_count)?;
        put(singular_contribution, w.singular_contribution)
    })
}

/// Closed-form complexity of an exceptional orbifold. Unused orders are ignored.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn orb_exceptional_complexity(kind: OrbKind, p: u32, q: u32, r: u32, out: *mut u64) -> OrbStatus {
    guard(|| {
        let k = match kind {
            OrbKind::S3 => ExceptionalKind::S3o,
            OrbKind::S3Circle => ExceptionalKind::S3c(p),
            OrbKind::S3Theta => ExceptionalKind::S3v(p, q, r),
            OrbKind::P3Circle => ExceptionalKind::P3Fp(p),
            OrbKind::L31Circle => ExceptionalKind::L31Fp(p),
        };
        put(out, exceptional_complexity(k).map_err(lib_err)?)
    })
}

/// Ordinary connected sum along non-singular balls.
///
/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_ordinary_sum(
    a: *const OrbTriangulation,
    b: *const OrbTriangulation,
    out: *mut *mut OrbTriangulation,
) -> OrbStatus {
    guard(|| {
        let s = ordinary_sum(tri_arg(a)?, tri_arg(b)?).map_err(lib_err)?;
        put(out, Box::into_raw(Box::new(OrbTriangulation(s))))
    })
}

/// Splits into irreducible summands; `seed` breaks ties between equal-weight spheres.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_split(h: *const OrbTriangulation, seed: u64, out: *mut *mut OrbSplit) -> OrbStatus {
    guard(|| {
        let opts = SplitOptions { seed, ..SplitOptions::default() };
        let r = efficient_split_with(tri_arg(h)?, &opts).map_err(lib_err)?;
        put(out, Box::into_raw(Box::new(OrbSplit(r))))
    })
}

/// # Safety
/// `s` must be NULL or a split handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn orb_split_free(s: *mut OrbSplit) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of summands, and whether some sphere was left undecided.
///
/// # Safety
/// `s` must be a live split handle and outputs writable.
#[no_mangle]
pub unsafe extern "C" fn orb_split_summary(s: *const OrbSplit, summands: *mut usize, incomplete: *mut bool) -> OrbStatus {
    guard(|| {
        let r = &s.as_ref().ok_or_else(null)?.0;
        put(summands, r.summands.len())?;
        put(incomplete, r.incomplete)
    })
}

/// Copy of summand `i` as a new triangulation handle.
///
/// # Safety
/// `s` must be a live split handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_split_summand(s: *const OrbSplit, i: usize, out: *mut *mut OrbTriangulation) -> OrbStatus {
    guard(|| {
        let r = &s.as_ref().ok_or_else(null)?.0;
        let sm = r
            .summands
            .get(i)
            .ok_or_else(|| (OrbStatus::OutOfRange, format!("summand {i} of {}", r.summands.len())))?;
        put(out, Box::into_raw(Box::new(OrbTriangulation(sm.tri.clone()))))
    })
}

/// Number of `p`-cyclic sums involving a singular circle.
///
/// # Safety
/// `s` must be a live split handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn orb_split_nu(s: *const OrbSplit, p: u32, out: *mut usize) -> OrbStatus {
    guard(|| {
        let r = &s.as_ref().ok_or_else(null)?.0;
        put(out, r.nu().get(&p).copied().unwrap_or(0))
    })
}
