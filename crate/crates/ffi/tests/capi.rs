use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cexkit_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(cex_last_error()) }.to_str().unwrap().to_string()
}

fn take_string(p: *mut c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { cex_string_free(p) };
    s
}

fn algebra(spec: &str) -> *mut CexAlgebra {
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { cex_algebra_from_spec(cstr(spec).as_ptr(), &mut a) }, CexStatus::Ok);
    a
}

#[test]
fn null_filiform_dims() {
    // dim (Z², B², H²) of μ₀⁵ is (5, 4, 1)
    let a = algebra("mu0:5");
    let (mut z, mut b, mut h) = (0, 0, 0);
    assert_eq!(unsafe { cex_cohomology_dims(a, &mut z, &mut b, &mut h) }, CexStatus::Ok);
    assert_eq!((z, b, h), (5, 4, 1));
    unsafe { cex_algebra_free(a) };
}

#[test]
fn extension_of_null_filiform_is_the_next_one() {
    let a = algebra("mu0:4");
    let mut theta = ptr::null_mut();
    assert_eq!(unsafe { cex_h2_representatives(a, &mut theta) }, CexStatus::Ok);
    let mut ext = ptr::null_mut();
    assert_eq!(unsafe { cex_central_extend(a, theta, &mut ext) }, CexStatus::Ok);
    let mut dim = 0;
    assert_eq!(unsafe { cex_algebra_dim(ext, &mut dim) }, CexStatus::Ok);
    assert_eq!(dim, 5);
    let mut assoc = false;
    assert_eq!(unsafe { cex_algebra_is_associative(ext, &mut assoc) }, CexStatus::Ok);
    assert!(assoc);
    let b = algebra("mu0:5");
    let mut fa = ptr::null_mut();
    let mut fb = ptr::null_mut();
    unsafe {
        assert_eq!(cex_fingerprint_json(ext, &mut fa), CexStatus::Ok);
        assert_eq!(cex_fingerprint_json(b, &mut fb), CexStatus::Ok);
    }
    assert_eq!(take_string(fa), take_string(fb));
    let mut found = false;
    assert_eq!(unsafe { cex_iso_search(ext, b, 2, &mut found) }, CexStatus::Ok);
    assert!(found);
    unsafe {
        cex_algebra_free(a);
        cex_algebra_free(b);
        cex_algebra_free(ext);
        cex_cocycle_free(theta);
    }
}

#[test]
fn text_round_trips() {
    let a = algebra("mu1_3:6");
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { cex_algebra_to_text(a, &mut t) }, CexStatus::Ok);
    let text = take_string(t);
    let mut b = ptr::null_mut();
    assert_eq!(unsafe { cex_algebra_from_text(cstr(&text).as_ptr(), &mut b) }, CexStatus::Ok);
    let mut t2 = ptr::null_mut();
    assert_eq!(unsafe { cex_algebra_to_text(b, &mut t2) }, CexStatus::Ok);
    assert_eq!(take_string(t2), text);
    unsafe {
        cex_algebra_free(a);
        cex_algebra_free(b);
    }
}

#[test]
fn reconstruct_gives_a_verified_witness() {
    let b = algebra("mu1_1:6");
    let (mut ap, mut theta, mut w) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    assert_eq!(unsafe { cex_reconstruct(b, &mut ap, &mut theta, &mut w) }, CexStatus::Ok);
    let mut ext = ptr::null_mut();
    assert_eq!(unsafe { cex_central_extend(ap, theta, &mut ext) }, CexStatus::Ok);
    let mut ok = false;
    assert_eq!(unsafe { cex_is_iso_witness(b, ext, w, &mut ok) }, CexStatus::Ok);
    assert!(ok);
    let mut mt = ptr::null_mut();
    assert_eq!(unsafe { cex_matrix_to_text(w, &mut mt) }, CexStatus::Ok);
    let text = take_string(mt);
    let mut w2 = ptr::null_mut();
    assert_eq!(unsafe { cex_matrix_from_text(cstr(&text).as_ptr(), &mut w2) }, CexStatus::Ok);
    let mut ok2 = false;
    assert_eq!(unsafe { cex_is_iso_witness(b, ext, w2, &mut ok2) }, CexStatus::Ok);
    assert!(ok2);
    let mut ct = ptr::null_mut();
    assert_eq!(unsafe { cex_cocycle_to_text(theta, &mut ct) }, CexStatus::Ok);
    let mut theta2 = ptr::null_mut();
    assert_eq!(unsafe { cex_cocycle_from_text(cstr(&take_string(ct)).as_ptr(), &mut theta2) }, CexStatus::Ok);
    unsafe {
        cex_algebra_free(b);
        cex_algebra_free(ap);
        cex_algebra_free(ext);
        cex_cocycle_free(theta);
        cex_cocycle_free(theta2);
        cex_matrix_free(w);
        cex_matrix_free(w2);
    }
}

#[test]
fn error_codes_and_messages() {
    let mut a = ptr::null_mut();
    assert_eq!(unsafe { cex_algebra_from_spec(cstr("mu9_1:5").as_ptr(), &mut a) }, CexStatus::InvalidSpec);
    assert!(last_error().contains("unknown family"));
    assert!(a.is_null());
    assert_eq!(unsafe { cex_algebra_from_spec(ptr::null(), &mut a) }, CexStatus::NullPointer);
    assert_eq!(unsafe { cex_algebra_from_text(cstr("{").as_ptr(), &mut a) }, CexStatus::Parse);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { cex_algebra_from_text(bad.as_ptr().cast(), &mut a) }, CexStatus::InvalidUtf8);
    let big = algebra("mu0:6");
    let mut found = false;
    assert_eq!(unsafe { cex_iso_search(big, big, 2, &mut found) }, CexStatus::Guard);
    let mut dim = 0;
    assert_eq!(unsafe { cex_algebra_dim(ptr::null(), &mut dim) }, CexStatus::NullPointer);
    assert_eq!(unsafe { cex_algebra_dim(big, ptr::null_mut()) }, CexStatus::NullPointer);
    let null_alg = algebra("mu0:1");
    let (mut ap, mut theta, mut w) = (ptr::null_mut(), ptr::null_mut(), ptr::null_mut());
    let s = unsafe { cex_reconstruct(null_alg, &mut ap, &mut theta, &mut w) };
    assert_eq!(s, CexStatus::Ok, "{}", last_error());
    let mut passed = false;
    assert_eq!(unsafe { cex_verify_action(cstr("mu1_1").as_ptr(), 5, &mut passed) }, CexStatus::Ok);
    assert!(passed);
    unsafe {
        cex_algebra_free(big);
        cex_algebra_free(null_alg);
        cex_algebra_free(ap);
        cex_cocycle_free(theta);
        cex_matrix_free(w);
        cex_algebra_free(ptr::null_mut());
        cex_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(cex_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
