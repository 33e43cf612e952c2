use std::ffi::{CStr, CString};
use std::ptr;

use hypersph_ffi::*;

fn last_error() -> String {
    let p = hs_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn scalar_functions() {
    let mut v = f64::NAN;
    unsafe {
        assert_eq!(hs_gamma(5.0, &mut v), HsStatus::Ok);
        assert!((v - 24.0).abs() < 1e-12);
        assert!(hs_last_error_message().is_null());

        assert_eq!(hs_legendre_p(2.0, 0.5, &mut v), HsStatus::Ok);
        assert_eq!(v, -0.125);

        assert_eq!(hs_hyper_assoc_legendre(1.0, 2f64.sqrt(), 0.5, 1, 0.0, &mut v), HsStatus::Ok);
        assert_eq!(v, 1.0);

        assert_eq!(hs_spherical_bessel_j(0, 2.0, &mut v), HsStatus::Ok);
        assert!((v - 2f64.sin() / 2.0).abs() < 1e-14);
    }
}

#[test]
fn errors_set_status_and_message() {
    let mut v = 7.0;
    unsafe {
        assert_eq!(hs_gamma(-2.0, &mut v), HsStatus::GammaPole);
        assert_eq!(v, 7.0, "output untouched on failure");
        assert!(last_error().contains("pole"));

        assert_eq!(hs_hyp2f1(0.5, 0.5, 1.0, 1.5, &mut v), HsStatus::Divergent);
        assert_eq!(hs_bessel_y(1.0, 0.0, &mut v), HsStatus::Singular);
        assert_eq!(hs_hyper_assoc_legendre(1.0, 1.0, 0.5, 0, 0.1, &mut v), HsStatus::InvalidArgument);
        assert_eq!(hs_gamma(2.0, ptr::null_mut()), HsStatus::NullPointer);

        // success clears the message
        assert_eq!(hs_gamma(2.0, &mut v), HsStatus::Ok);
        assert!(hs_last_error_message().is_null());
    }
}

#[test]
fn dispersion_frequency_domain() {
    let (a, inv_b, inv_c2) = (0.3, 0.7, 1.9);
    let coeffs = [a, inv_b, inv_c2];
    let (mut re, mut im) = (0.0, 0.0);
    unsafe {
        assert_eq!(hs_dispersion(coeffs.as_ptr(), 3, 2.0, 0.0, -1, &mut re, &mut im), HsStatus::Ok);
        assert_eq!(hs_dispersion(coeffs.as_ptr(), 3, 2.0, 0.0, 2, &mut re, &mut im), HsStatus::InvalidArgument);
    }
    assert!((re - (4.0 * inv_c2 - a)).abs() < 1e-14);
    assert!((im - 2.0 * inv_b).abs() < 1e-14);
}

#[test]
fn coordinate_arrays_round_trip() {
    let q = [1.5, 0.4, 2.2, 5.0];
    let mut x = [0.0; 4];
    let mut back = [0.0; 4];
    let mut h = [0.0; 4];
    unsafe {
        let hs = HsSystem::Hyperspherical as i32;
        assert_eq!(hs_to_cartesian(hs, q.as_ptr(), 4, x.as_mut_ptr()), HsStatus::Ok);
        assert_eq!(hs_from_cartesian(hs, x.as_ptr(), 4, back.as_mut_ptr()), HsStatus::Ok);
        assert_eq!(hs_scale_factors(hs, q.as_ptr(), 4, h.as_mut_ptr()), HsStatus::Ok);
        assert_eq!(hs_to_cartesian(9, q.as_ptr(), 4, x.as_mut_ptr()), HsStatus::InvalidArgument);
        assert_eq!(hs_to_cartesian(hs, [-1.0, 0.1, 0.1, 0.1].as_ptr(), 4, x.as_mut_ptr()), HsStatus::InvalidPoint);
    }
    for (a, b) in q.iter().zip(&back) {
        assert!((a - b).abs() < 1e-12);
    }
    assert!((x.iter().map(|v| v * v).sum::<f64>().sqrt() - 1.5).abs() < 1e-12);
    assert_eq!(h[0], 1.0);
    assert!((h[3] - 1.5 * 0.4f64.sin() * 2.2f64.sin()).abs() < 1e-14);
}

#[test]
fn mode_handle_lifecycle() {
    let json = CString::new(
        r#"{"system":"hypercylindrical","dim":4,"m":1,"q_chain":[2],"k":1.2,"K":0.5,"bessel_kind":"J"}"#,
    )
    .unwrap();
    let mut handle: *mut HsModeSpec = ptr::null_mut();
    unsafe {
        assert_eq!(hs_mode_spec_from_json(json.as_ptr(), &mut handle), HsStatus::Ok);
        assert!(!handle.is_null());
        assert_eq!(hs_mode_spec_dim(handle), 4);

        let mut k2 = 0.0;
        assert_eq!(hs_mode_wavenumber_squared(handle, &mut k2), HsStatus::Ok);
        assert!((k2 - 1.69).abs() < 1e-14);

        let coords = [1.1, 0.9, 0.3, 0.2];
        let (mut re, mut im) = (0.0, 0.0);
        assert_eq!(hs_mode_eval(handle, coords.as_ptr(), 4, 0.0, &mut re, &mut im), HsStatus::Ok);
        assert!(re.is_finite() && im.is_finite() && (re, im) != (0.0, 0.0));
        assert_eq!(hs_mode_eval(handle, coords.as_ptr(), 3, 0.0, &mut re, &mut im), HsStatus::InvalidPoint);

        let mut text: *mut std::ffi::c_char = ptr::null_mut();
        assert_eq!(hs_mode_spec_to_json(handle, &mut text), HsStatus::Ok);
        let doc: serde_json::Value = serde_json::from_str(CStr::from_ptr(text).to_str().unwrap()).unwrap();
        assert_eq!(doc["K"], 0.5);
        assert_eq!(doc["schema"], 1);
        hs_string_free(text);

        hs_mode_spec_free(handle);
        hs_mode_spec_free(ptr::null_mut());
        assert_eq!(hs_mode_spec_dim(ptr::null()), 0);
    }
}

#[test]
fn bad_mode_documents() {
    let mut handle: *mut HsModeSpec = ptr::null_mut();
    unsafe {
        let unknown = CString::new(r#"{"system":"hs","dim":3,"m":0,"q_chain":[1],"k":1,"bessel_kind":"J","x":1}"#).unwrap();
        assert_eq!(hs_mode_spec_from_json(unknown.as_ptr(), &mut handle), HsStatus::Json);
        let garbage = CString::new("{").unwrap();
        assert_eq!(hs_mode_spec_from_json(garbage.as_ptr(), &mut handle), HsStatus::Json);
        assert_eq!(hs_mode_spec_from_json(ptr::null(), &mut handle), HsStatus::NullPointer);
    }
    assert!(handle.is_null());
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(hs_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
