use std::ffi::{CStr, CString};
use std::ptr;

use burniat::plane::REFERENCE_FIXTURES;
use burniat_ffi::*;

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    burniat_string_free(s);
    out
}

#[test]
fn pi1_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(burniat_pi1_json(2, false, &mut s), BurniatStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
        assert_eq!(v["result"]["pi1"], "(Z/2)^3");
        assert!(burniat_last_error().is_null());
    }
}

#[test]
fn invalid_k_squared_sets_error() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(burniat_pi1_json(9, false, &mut s), BurniatStatus::InvalidKSquared);
        assert!(s.is_null());
        let msg = CStr::from_ptr(burniat_last_error()).to_str().unwrap();
        assert!(msg.contains('9'), "{msg}");
    }
}

#[test]
fn arrangement_handles() {
    unsafe {
        for f in REFERENCE_FIXTURES {
            let json = CString::new(f.json).unwrap();
            let mut h = ptr::null_mut();
            assert_eq!(burniat_arrangement_parse(json.as_ptr(), &mut h), BurniatStatus::Ok);
            let (mut k, mut nodal) = (0i64, false);
            assert_eq!(burniat_arrangement_classify(h, &mut k, &mut nodal), BurniatStatus::Ok);
            assert_eq!((k, nodal), (f.k_squared, f.nodal));
            let mut s = ptr::null_mut();
            assert_eq!(burniat_pi1_from_arrangement_json(h, k, &mut s), BurniatStatus::Ok);
            let v: serde_json::Value = serde_json::from_str(&take(s)).unwrap();
            assert_eq!(v["passed"], true);
            burniat_arrangement_free(h);
        }
    }
}

#[test]
fn class_mismatch_and_bad_input() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(burniat_arrangement_reference(3, false, &mut h), BurniatStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(burniat_pi1_from_arrangement_json(h, 2, &mut s), BurniatStatus::ClassMismatch);
        burniat_arrangement_free(h);

        let bad = CString::new("{\"version\": 1}").unwrap();
        let mut h = ptr::null_mut();
        assert_eq!(burniat_arrangement_parse(bad.as_ptr(), &mut h), BurniatStatus::ParseError);
        assert!(h.is_null());
        assert_eq!(burniat_arrangement_parse(ptr::null(), &mut h), BurniatStatus::NullPointer);
        assert_eq!(burniat_pi1_json(2, false, ptr::null_mut()), BurniatStatus::NullPointer);
        assert_eq!(burniat_arrangement_classify(ptr::null(), ptr::null_mut(), ptr::null_mut()), BurniatStatus::NullPointer);
    }
}

#[test]
fn theorem_and_dimensions() {
    unsafe {
        let (mut s, mut passed) = (ptr::null_mut(), false);
        assert_eq!(burniat_verify_theorem_json(&mut s, &mut passed), BurniatStatus::Ok);
        assert!(passed);
        assert!(take(s).contains("burniat-report/1"));
        let (mut a, mut b) = (0u32, 0u32);
        assert_eq!(burniat_moduli_dimensions(&mut a, &mut b), BurniatStatus::Ok);
        assert_eq!((a, b), (2, 4));
    }
}

#[test]
fn status_messages_are_static() {
    let m = unsafe { CStr::from_ptr(burniat_status_message(BurniatStatus::ClassMismatch)) };
    assert!(m.to_str().unwrap().contains("K^2"));
}
