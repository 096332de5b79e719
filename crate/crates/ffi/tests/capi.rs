use std::ffi::CStr;
use std::ptr;

use hydroxi_ffi::*;

#[test]
fn decomposition_round_trip() {
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(hx_decompose(1, 0, 3, 20, &mut report), HxStatus::Ok);
        assert!(!report.is_null());

        let mut len = 0usize;
        assert_eq!(hx_decomposition_len(report, &mut len), HxStatus::Ok);
        assert_eq!(len, 6);

        let (mut n, mut l, mut s, mut v) = (0u32, 0u32, 0i8, 0.0f64);
        assert_eq!(hx_decomposition_entry(report, 2, &mut n, &mut l, &mut s, &mut v), HxStatus::Ok);
        assert_eq!((n, l, s), (2, 1, -1));
        assert!((v + 0.462_042_548_879_215_5).abs() < 1e-15);

        let mut text = ptr::null_mut();
        assert_eq!(hx_decomposition_entry_square(report, 2, &mut text), HxStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "(512/243)/(pi^2)");
        hx_string_free(text);

        let mut p2 = 0.0;
        assert_eq!(hx_decomposition_p_squared(report, 2, &mut p2), HxStatus::Ok);
        assert!((p2 - v * v).abs() < 1e-15);
        assert_eq!(hx_decomposition_p_squared(report, 0, &mut p2), HxStatus::OutOfRange);
        assert_eq!(hx_decomposition_p_squared(report, 4, &mut p2), HxStatus::OutOfRange);
        assert_eq!(hx_decomposition_entry(report, 6, &mut n, &mut l, &mut s, &mut v), HxStatus::OutOfRange);
        assert!(last_error().unwrap().contains("entry 6"));

        let mut bound = 0.0;
        assert_eq!(hx_decomposition_continuum_lower_bound(report, &mut bound), HxStatus::Ok);
        let mut p3 = 0.0;
        hx_decomposition_p_squared(report, 3, &mut p3);
        assert!((bound - (1.0 - p3)).abs() < 1e-15);

        hx_decomposition_free(report);
        hx_decomposition_free(ptr::null_mut());
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut report = ptr::null_mut();
        assert_eq!(hx_decompose(1, 1, 3, 20, &mut report), HxStatus::InvalidArgument);
        assert!(report.is_null());
        assert!(last_error().is_some());
        assert_eq!(hx_decompose(1, 0, 61, 20, &mut report), HxStatus::ResourceCap);
        assert_eq!(hx_decompose(1, 0, 3, 20, ptr::null_mut()), HxStatus::NullPointer);
        let mut len = 0usize;
        assert_eq!(hx_decomposition_len(ptr::null(), &mut len), HxStatus::NullPointer);
        assert_eq!(last_error().unwrap(), "report is null");
    }
}

#[test]
fn wavefunctions() {
    unsafe {
        let mut wf = ptr::null_mut();
        assert_eq!(hx_wavefunction_new(1, 0, HxKind::Regular, &mut wf), HxStatus::Ok);
        let mut v = 0.0;
        assert_eq!(hx_wavefunction_eval(wf, 0.0, 1.0, &mut v), HxStatus::Ok);
        assert!((v - 1.0 / std::f64::consts::PI.sqrt()).abs() < 1e-15);
        hx_wavefunction_free(wf);

        assert_eq!(hx_wavefunction_new(1, 0, HxKind::Pseudo, &mut wf), HxStatus::Ok);
        assert_eq!(hx_wavefunction_eval(wf, 1.0, std::f64::consts::FRAC_PI_2, &mut v), HxStatus::Ok);
        assert!(v.abs() < 1e-15);
        assert_eq!(hx_wavefunction_eval(wf, 1.0, 0.0, &mut v), HxStatus::OutOfRange);
        assert_eq!(hx_wavefunction_eval(wf, -1.0, 1.0, &mut v), HxStatus::OutOfRange);
        hx_wavefunction_free(wf);

        assert_eq!(hx_wavefunction_new(2, 2, HxKind::Pseudo, &mut wf), HxStatus::InvalidArgument);
    }
}

#[test]
fn residual_and_version() {
    unsafe {
        let mut res = 0.0;
        assert_eq!(hx_residual_check(1, 0, 2.0, 1.0, 1e-3, &mut res), HxStatus::Ok);
        assert!(res < 1e-4);
        assert_eq!(hx_residual_check(1, 0, 2.0, 1e-3, 1e-3, &mut res), HxStatus::OutOfRange);
        let v = CStr::from_ptr(hx_version()).to_str().unwrap();
        assert_eq!(v, env!("CARGO_PKG_VERSION"));
    }
}

#[test]
fn errors_are_per_thread() {
    unsafe {
        let mut report = ptr::null_mut();
        hx_decompose(1, 1, 3, 20, &mut report);
    }
    let other = std::thread::spawn(last_error).join().unwrap();
    assert!(other.is_none());
    assert!(last_error().is_some());
}
