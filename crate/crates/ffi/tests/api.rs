use std::ffi::{CStr, CString};
use std::ptr;

use rankcodes_ffi::*;

fn last_error() -> String {
    let p = rc_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { rc_string_free(p) };
    s
}

#[test]
fn subspace_round_trip() {
    unsafe {
        let mut field = ptr::null_mut();
        assert_eq!(rc_field_new(2, 1, 6, &mut field), RcStatus::Ok);
        let mut code = ptr::null_mut();
        assert_eq!(rc_subspace_code_new(field, 4, 2, 2, &mut code), RcStatus::Ok);

        let msg = [7u32, 40];
        let mut v = ptr::null_mut();
        assert_eq!(rc_subspace_code_encode(code, msg.as_ptr(), 2, &mut v), RcStatus::Ok);
        assert_eq!(rc_subspace_dim(v), 4);

        let mut json = ptr::null_mut();
        assert_eq!(rc_subspace_to_json(v, &mut json), RcStatus::Ok);
        let text = CString::new(take_string(json)).unwrap();
        let mut back = ptr::null_mut();
        assert_eq!(rc_subspace_from_json(field, text.as_ptr(), &mut back), RcStatus::Ok);
        assert_eq!(rc_subspace_dim(back), 4);

        let mut u = ptr::null_mut();
        assert_eq!(rc_operator_channel(back, 2, 1, 3, &mut u), RcStatus::Ok);
        let mut sol = ptr::null_mut();
        assert_eq!(rc_subspace_code_list_decode(code, u, &mut sol), RcStatus::Ok);
        let mut found = false;
        assert_eq!(rc_solution_contains(sol, msg.as_ptr(), 2, &mut found), RcStatus::Ok);
        assert!(found);
        assert!((0..=6).contains(&rc_solution_dim(sol)));

        rc_solution_free(sol);
        rc_subspace_free(u);
        rc_subspace_free(back);
        rc_subspace_free(v);
        rc_subspace_code_free(code);
        rc_field_free(field);
    }
}

#[test]
fn folded_round_trip() {
    unsafe {
        let mut field = ptr::null_mut();
        let desc = CString::new(r#"{"p":2,"m":8}"#).unwrap();
        assert_eq!(rc_field_from_json(desc.as_ptr(), &mut field), RcStatus::Ok);
        let mut code = ptr::null_mut();
        assert_eq!(rc_folded_code_new(field, 8, 2, 4, 2, &mut code), RcStatus::Ok);
        assert_eq!(rc_folded_code_max_errors(code), 1);

        let msg = [3u32, 200];
        let mut x = [0u32; 8];
        assert_eq!(rc_folded_code_encode(code, msg.as_ptr(), 2, x.as_mut_ptr(), 8), RcStatus::Ok);
        let mut y = [0u32; 8];
        assert_eq!(rc_rank_error_channel(code, x.as_ptr(), 8, 1, 11, y.as_mut_ptr(), 8), RcStatus::Ok);
        assert_ne!(x, y);

        let mut sol = ptr::null_mut();
        assert_eq!(rc_folded_code_list_decode(code, y.as_ptr(), 8, &mut sol), RcStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(rc_solution_to_json(sol, &mut json), RcStatus::Ok);
        let parsed: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(parsed["k"], 2);
        let mut found = false;
        assert_eq!(rc_solution_contains(sol, msg.as_ptr(), 2, &mut found), RcStatus::Ok);
        assert!(found);

        rc_solution_free(sol);
        rc_folded_code_free(code);
        rc_field_free(field);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut field = ptr::null_mut();
        assert_eq!(rc_field_new(4, 1, 3, &mut field), RcStatus::InvalidArgument);
        assert!(last_error().contains('4'));
        assert!(field.is_null());

        assert_eq!(rc_field_new(2, 1, 4, ptr::null_mut()), RcStatus::NullPointer);
        let bad = CString::new("{not json").unwrap();
        assert_eq!(rc_field_from_json(bad.as_ptr(), &mut field), RcStatus::Format);

        assert_eq!(rc_field_new(2, 1, 4, &mut field), RcStatus::Ok);
        let mut out = 0u32;
        assert_eq!(rc_field_mul(field, 2, 9, &mut out), RcStatus::Ok);
        assert_eq!(rc_field_mul(field, 16, 1, &mut out), RcStatus::InvalidArgument);

        let mut code = ptr::null_mut();
        assert_eq!(rc_folded_code_new(field, 4, 2, 2, 1, &mut code), RcStatus::Ok);
        let msg = [1u32, 2];
        let mut small = [0u32; 3];
        assert_eq!(rc_folded_code_encode(code, msg.as_ptr(), 2, small.as_mut_ptr(), 3), RcStatus::BufferTooSmall);
        let mut buf = [0u32; 4];
        assert_eq!(rc_folded_code_encode(code, msg.as_ptr(), 1, buf.as_mut_ptr(), 4), RcStatus::InvalidArgument);
        assert_eq!(rc_folded_code_max_errors(ptr::null()), -1);
        assert_eq!(rc_solution_dim(ptr::null()), -1);

        rc_folded_code_free(code);
        rc_field_free(field);
        rc_field_free(ptr::null_mut());
    }
}
