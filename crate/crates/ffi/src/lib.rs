//! C ABI for cexkit.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free` function. Every fallible call returns a
//! [`CexStatus`]; the message of the last failure on the calling thread is
//! available from [`cex_last_error`]. Strings returned to the caller are
//! released with [`cex_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use cexkit::algebra::{fingerprint, is_iso_witness, matrix_from_text, matrix_to_text, Algebra};
use cexkit::catalog::{make_algebra, Family, FamilySpec};
use cexkit::cohomology::{cohomology_basis, Cocycle};
use cexkit::extension::{central_extend, reconstruct};
use cexkit::orbitlab::{ff_iso_search, verify_action};
use cexkit::{Error, Matrix};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CexStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    InvalidSpec = 5,
    NotCocycle = 6,
    Singular = 7,
    ZeroAnnihilator = 8,
    Guard = 9,
    Unsupported = 10,
    Io = 11,
    Algebra = 12,
    Panic = 13,
}

/// Structure-constant algebra.
pub struct CexAlgebra(Algebra);

/// Tuple of bilinear forms `θ = (θ_1, ..., θ_s)`.
pub struct CexCocycle(Cocycle);

/// Rational matrix.
pub struct CexMatrix(Matrix);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> CexStatus {
    match e {
        Error::Parse(_) => CexStatus::Parse,
        Error::Dimension(_) => CexStatus::Dimension,
        Error::InvalidSpec(_) => CexStatus::InvalidSpec,
        Error::NotCocycle(_) => CexStatus::NotCocycle,
        Error::Singular => CexStatus::Singular,
        Error::ZeroAnnihilator => CexStatus::ZeroAnnihilator,
        Error::Guard(_) => CexStatus::Guard,
        Error::Unsupported(_) => CexStatus::Unsupported,
        Error::Io(_) => CexStatus::Io,
        _ => CexStatus::Algebra,
    }
}

/// Runs `f`, converting errors and panics into status codes.
fn guarded(f: impl FnOnce() -> Result<(), CexStatus>) -> CexStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => CexStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            CexStatus::Panic
        }
    }
}

fn fail(e: Error) -> CexStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn null(what: &str) -> CexStatus {
    set_error(&format!("null pointer: {what}"));
    CexStatus::NullPointer
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, CexStatus> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error(&format!("{what} is not valid UTF-8"));
        CexStatus::InvalidUtf8
    })
}

unsafe fn obj<'a, T>(p: *const T, what: &str) -> Result<&'a T, CexStatus> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<(), CexStatus> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread; empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn cex_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cex_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library.
///
/// # Safety
/// `s` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cex_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Catalog member such as `mu1_2:7` or `mu2_2:6:alpha=1/2`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_algebra_from_spec(spec: *const c_char, out: *mut *mut CexAlgebra) -> CexStatus {
    guarded(|| {
        let spec: FamilySpec = str_arg(spec, "spec")?.parse().map_err(fail)?;
        let a = make_algebra(&spec).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CexAlgebra(a))), "out")
    })
}

/// Parses the algebra text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_algebra_from_text(text: *const c_char, out: *mut *mut CexAlgebra) -> CexStatus {
    guarded(|| {
        let a = Algebra::from_text(str_arg(text, "text")?).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CexAlgebra(a))), "out")
    })
}

/// Canonical text form; release with `cex_string_free`.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_algebra_to_text(a: *const CexAlgebra, out: *mut *mut c_char) -> CexStatus {
    guarded(|| {
        let a = obj(a, "algebra")?;
        put(out, c_string(a.0.to_text()), "out")
    })
}

/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_algebra_dim(a: *const CexAlgebra, out: *mut usize) -> CexStatus {
    guarded(|| put(out, obj(a, "algebra")?.0.dim(), "out"))
}

/// Whether the product is associative.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_algebra_is_associative(a: *const CexAlgebra, out: *mut bool) -> CexStatus {
    guarded(|| put(out, obj(a, "algebra")?.0.is_associative(), "out"))
}

/// # Safety
/// `a` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cex_algebra_free(a: *mut CexAlgebra) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// `dim Z²`, `dim B²`, `dim H²`.
///
/// # Safety
/// `a` must be a live handle and the outputs writable pointers.
#[no_mangle]
pub unsafe extern "C" fn cex_cohomology_dims(
    a: *const CexAlgebra,
    z2: *mut usize,
    b2: *mut usize,
    h2: *mut usize,
) -> CexStatus {
    guarded(|| {
        let (z, b, h) = cohomology_basis(&obj(a, "algebra")?.0).dims();
        put(z2, z, "z2")?;
        put(b2, b, "b2")?;
        put(h2, h, "h2")
    })
}

/// The `H²` basis representatives as one cocycle with `dim H²` components.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_h2_representatives(a: *const CexAlgebra, out: *mut *mut CexCocycle) -> CexStatus {
    guarded(|| {
        let a = &obj(a, "algebra")?.0;
        let reps = cohomology_basis(a).h2_reps;
        let theta = Cocycle::new(a.dim(), reps).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CexCocycle(theta))), "out")
    })
}

/// Parses the cocycle text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_cocycle_from_text(text: *const c_char, out: *mut *mut CexCocycle) -> CexStatus {
    guarded(|| {
        let c = Cocycle::from_text(str_arg(text, "text")?).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CexCocycle(c))), "out")
    })
}

/// Canonical text form; release with `cex_string_free`.
///
/// # Safety
/// `c` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_cocycle_to_text(c: *const CexCocycle, out: *mut *mut c_char) -> CexStatus {
    guarded(|| put(out, c_string(obj(c, "cocycle")?.0.to_text()), "out"))
}

/// # Safety
/// `c` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cex_cocycle_free(c: *mut CexCocycle) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Central extension `A_θ`.
///
/// # Safety
/// `a` and `theta` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_central_extend(
    a: *const CexAlgebra,
    theta: *const CexCocycle,
    out: *mut *mut CexAlgebra,
) -> CexStatus {
    guarded(|| {
        let ext = central_extend(&obj(a, "algebra")?.0, &obj(theta, "cocycle")?.0).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CexAlgebra(ext))), "out")
    })
}

/// Splits `b` as `A'_θ` with `A' = b / Ann(b)`; `witness` maps `b` onto `A'_θ`.
///
/// # Safety
/// `b` must be a live handle and the outputs writable pointers.
#[no_mangle]
pub unsafe extern "C" fn cex_reconstruct(
    b: *const CexAlgebra,
    a_prime: *mut *mut CexAlgebra,
    theta: *mut *mut CexCocycle,
    witness: *mut *mut CexMatrix,
) -> CexStatus {
    guarded(|| {
        let r = reconstruct(&obj(b, "algebra")?.0).map_err(fail)?;
        if a_prime.is_null() || theta.is_null() || witness.is_null() {
            return Err(null("output"));
        }
        put(a_prime, Box::into_raw(Box::new(CexAlgebra(r.a_prime))), "a_prime")?;
        put(theta, Box::into_raw(Box::new(CexCocycle(r.theta))), "theta")?;
        put(witness, Box::into_raw(Box::new(CexMatrix(r.witness))), "witness")
    })
}

/// Parses the matrix text format.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_matrix_from_text(text: *const c_char, out: *mut *mut CexMatrix) -> CexStatus {
    guarded(|| {
        let m = matrix_from_text(str_arg(text, "text")?).map_err(fail)?;
        put(out, Box::into_raw(Box::new(CexMatrix(m))), "out")
    })
}

/// Canonical text form; release with `cex_string_free`.
///
/// # Safety
/// `m` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_matrix_to_text(m: *const CexMatrix, out: *mut *mut c_char) -> CexStatus {
    guarded(|| put(out, c_string(matrix_to_text(&obj(m, "matrix")?.0)), "out"))
}

/// # Safety
/// `m` must come from this library and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn cex_matrix_free(m: *mut CexMatrix) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Whether `m` (column `j` = image of `e_j`) is an isomorphism `a → b`.
///
/// # Safety
/// `a`, `b`, `m` must be live handles and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_is_iso_witness(
    a: *const CexAlgebra,
    b: *const CexAlgebra,
    m: *const CexMatrix,
    out: *mut bool,
) -> CexStatus {
    guarded(|| {
        let ok = is_iso_witness(&obj(a, "a")?.0, &obj(b, "b")?.0, &obj(m, "matrix")?.0);
        put(out, ok, "out")
    })
}

/// Fingerprint as a JSON object; release with `cex_string_free`.
///
/// # Safety
/// `a` must be a live handle and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_fingerprint_json(a: *const CexAlgebra, out: *mut *mut c_char) -> CexStatus {
    guarded(|| {
        let fp = fingerprint(&obj(a, "algebra")?.0);
        let s = serde_json::to_string(&fp).map_err(|e| fail(Error::Parse(e.to_string())))?;
        put(out, c_string(s), "out")
    })
}

/// Exhaustive isomorphism search over `F_p` (dim ≤ 5, p ∈ {2, 3}).
/// `found` is set to whether an isomorphism exists.
///
/// # Safety
/// `a`, `b` must be live handles and `found` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_iso_search(a: *const CexAlgebra, b: *const CexAlgebra, p: u64, found: *mut bool) -> CexStatus {
    guarded(|| {
        let r = ff_iso_search(&obj(a, "a")?.0, &obj(b, "b")?.0, p).map_err(fail)?;
        put(found, r.witness.is_some(), "found")
    })
}

/// Whether the symbolic automorphism action of `family` (e.g. `mu1_3`) at
/// dimension `n` equals the stated formula.
///
/// # Safety
/// `family` must be a NUL-terminated string and `passed` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn cex_verify_action(family: *const c_char, n: usize, passed: *mut bool) -> CexStatus {
    guarded(|| {
        let f: Family = str_arg(family, "family")?.parse().map_err(fail)?;
        let r = verify_action(f, n).map_err(fail)?;
        put(passed, r.passed(), "passed")
    })
}
