use std::ffi::{c_char, CStr, CString};
use std::ptr;

use matdec_ffi::*;

fn parse(text: &str) -> *mut MatdecMatroid {
    let c = CString::new(text).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { matdec_parse(c.as_ptr(), &mut m) },
        MatdecStatus::Ok
    );
    assert!(!m.is_null());
    m
}

fn last_error() -> String {
    let mut buf = [0 as c_char; 256];
    let need = unsafe { matdec_last_error_message(buf.as_mut_ptr(), buf.len()) };
    assert!(need >= 1);
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_str()
        .unwrap()
        .to_string()
}

#[test]
fn queries_on_u24() {
    let m = parse("uniform\nr=2 n=4\n");
    unsafe {
        let mut n = 0;
        assert_eq!(matdec_ground_size(m, &mut n), MatdecStatus::Ok);
        assert_eq!(n, 4);

        let mut ids = [0u32; 4];
        let mut len = 0;
        assert_eq!(
            matdec_ground_ids(m, ids.as_mut_ptr(), 4, &mut len),
            MatdecStatus::Ok
        );
        assert_eq!(ids, [1, 2, 3, 4]);
        assert_eq!(
            matdec_ground_ids(m, ids.as_mut_ptr(), 2, &mut len),
            MatdecStatus::BufferTooSmall
        );
        assert_eq!(len, 4);

        let mut ind = false;
        assert_eq!(
            matdec_is_independent(m, [1, 3].as_ptr(), 2, &mut ind),
            MatdecStatus::Ok
        );
        assert!(ind);
        assert_eq!(
            matdec_is_independent(m, [1, 2, 3].as_ptr(), 3, &mut ind),
            MatdecStatus::Ok
        );
        assert!(!ind);
        assert_eq!(
            matdec_is_independent(m, ptr::null(), 0, &mut ind),
            MatdecStatus::Ok
        );
        assert!(ind);

        let mut r = 0;
        assert_eq!(
            matdec_rank(m, [1, 2, 3].as_ptr(), 3, &mut r),
            MatdecStatus::Ok
        );
        assert_eq!(r, 2);
        assert_eq!(
            matdec_connectivity(m, [1, 2].as_ptr(), 2, &mut r),
            MatdecStatus::Ok
        );
        assert_eq!(r, 2);
        assert_eq!(
            matdec_class_count(m, [1, 2].as_ptr(), 2, MATDEC_RELATION_SIM, &mut r),
            MatdecStatus::Ok
        );
        assert_eq!(r, 3);
        assert_eq!(
            matdec_class_count(m, [1, 2].as_ptr(), 2, MATDEC_RELATION_REFINED, &mut r),
            MatdecStatus::Ok
        );
        assert_eq!(r, 3);
        assert_eq!(
            matdec_class_count(m, ptr::null(), 0, 7, &mut r),
            MatdecStatus::InvalidArgument
        );
        assert_eq!(matdec_branch_width(m, &mut r), MatdecStatus::Ok);
        assert_eq!(r, 3);
        assert_eq!(matdec_decomposition_width(m, &mut r), MatdecStatus::Ok);
        assert_eq!(r, 3);

        let mut s = ptr::null_mut();
        assert_eq!(matdec_write_instance(m, &mut s), MatdecStatus::Ok);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), "uniform\nr=2 n=4\n");
        matdec_string_free(s);
        matdec_free(m);
    }
}

#[test]
fn errors_set_status_and_message() {
    unsafe {
        let bad = CString::new("uniform\nr=2\n").unwrap();
        let mut m = ptr::null_mut();
        assert_eq!(matdec_parse(bad.as_ptr(), &mut m), MatdecStatus::Parse);
        assert!(m.is_null());
        assert!(last_error().starts_with("line 2"));

        assert_eq!(matdec_parse(ptr::null(), &mut m), MatdecStatus::NullPointer);
        let mut n = 0;
        assert_eq!(
            matdec_ground_size(ptr::null(), &mut n),
            MatdecStatus::NullPointer
        );

        let m = parse("latticepath\nP=EN\nQ=NE\n");
        let mut ind = false;
        assert_eq!(
            matdec_is_independent(m, [9].as_ptr(), 1, &mut ind),
            MatdecStatus::NotInGround
        );
        assert!(last_error().contains('9'));
        assert_eq!(
            matdec_class_count(m, [1].as_ptr(), 1, MATDEC_RELATION_REFINED, &mut n),
            MatdecStatus::Unsupported
        );
        // A short buffer still receives a terminated prefix.
        let mut buf = [1 as c_char; 4];
        let need = matdec_last_error_message(buf.as_mut_ptr(), 4);
        assert!(need > 4);
        assert_eq!(buf[3], 0);
        matdec_free(m);

        let big = parse("uniform\nr=3 n=30\n");
        assert_eq!(matdec_branch_width(big, &mut n), MatdecStatus::SizeGuard);
        matdec_free(big);
        matdec_free(ptr::null_mut());
    }
}
