//! C interface to `hypersph`.
//!
//! Every fallible function returns an [`HsStatus`] and writes its result
//! through out-pointers, which are left untouched on failure. The message of
//! the most recent failure on the calling thread is available from
//! [`hs_last_error_message`]. Panics never cross the boundary; they surface as
//! [`HsStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypersph::coords::{
    from_cartesian_hc, from_cartesian_hs, scale_factors_hc, scale_factors_hs, to_cartesian_hc, to_cartesian_hs,
    CartesianPoint, CoordinateSystem, HypercylindricalPoint, HypersphericalPoint,
};
use hypersph::legendre::{self, Branch, HyperLegendreParams};
use hypersph::physics::{self, ModeSpec, PhysicsCoefficients, Sign};
use hypersph::specfun::{self, Hyp2F1Call, SphericalKind};
use hypersph::Error;
use num_complex::Complex64;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidPoint = 3,
    OutOfDomain = 4,
    GammaPole = 5,
    Divergent = 6,
    LowerParameterPole = 7,
    NonConvergence = 8,
    Singular = 9,
    ComplexParameters = 10,
    Unsupported = 11,
    InvalidSpec = 12,
    Json = 13,
    Io = 14,
    Panic = 15,
}

/// Coordinate system selector, passed as `int32_t`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsSystem {
    Hyperspherical = 0,
    Hypercylindrical = 1,
}

fn system_of(raw: i32) -> Result<CoordinateSystem, Failure> {
    match raw {
        x if x == HsSystem::Hyperspherical as i32 => Ok(CoordinateSystem::Hyperspherical),
        x if x == HsSystem::Hypercylindrical as i32 => Ok(CoordinateSystem::Hypercylindrical),
        other => Err(invalid(format!("unknown coordinate system {other}"))),
    }
}

/// Opaque handle to a validated mode specification.
pub struct HsModeSpec {
    spec: ModeSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> HsStatus {
    match e {
        Error::InvalidPoint(_) => HsStatus::InvalidPoint,
        Error::GammaPole(_) => HsStatus::GammaPole,
        Error::Divergent(_) => HsStatus::Divergent,
        Error::LowerParameterPole(_) => HsStatus::LowerParameterPole,
        Error::NonConvergence(_) => HsStatus::NonConvergence,
        Error::OutOfDomain(_) => HsStatus::OutOfDomain,
        Error::Singular(_) => HsStatus::Singular,
        Error::ComplexParameters(_) => HsStatus::ComplexParameters,
        Error::Unsupported(_) => HsStatus::Unsupported,
        Error::InvalidSpec(_) => HsStatus::InvalidSpec,
        Error::Json(_) => HsStatus::Json,
        Error::Io(_) | Error::Csv(_) => HsStatus::Io,
    }
}

enum Failure {
    Lib(Error),
    Status(HsStatus, String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Status(HsStatus::InvalidArgument, msg.into())
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HsStatus::Ok
        }
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_last_error(msg);
            s
        }
        Err(_) => {
            set_last_error("internal panic".into());
            HsStatus::Panic
        }
    }
}

fn out_ref<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    // SAFETY: the caller guarantees a non-null `p` is valid for writes.
    unsafe { p.as_mut() }.ok_or(Failure::Status(HsStatus::NullPointer, "null output pointer".into()))
}

fn in_slice<'a>(p: *const f64, n: usize) -> Result<&'a [f64], Failure> {
    if n == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::Status(HsStatus::NullPointer, "null input array".into()));
    }
    // SAFETY: the caller guarantees `p` points to `n` readable doubles.
    Ok(unsafe { std::slice::from_raw_parts(p, n) })
}

fn out_slice<'a>(p: *mut f64, n: usize) -> Result<&'a mut [f64], Failure> {
    if p.is_null() {
        return Err(Failure::Status(HsStatus::NullPointer, "null output array".into()));
    }
    // SAFETY: the caller guarantees `p` points to `n` writable doubles.
    Ok(unsafe { std::slice::from_raw_parts_mut(p, n) })
}

fn scalar(out: *mut f64, f: impl FnOnce() -> hypersph::Result<f64>) -> HsStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = f()?;
        Ok(())
    })
}

/// Message of the last failed call on this thread, or null if it succeeded.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn hs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// `Γ(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_gamma(x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || specfun::gamma_fn(x))
}

/// Gauss hypergeometric `F(α, β; γ; z)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_hyp2f1(alpha: f64, beta: f64, gamma: f64, z: f64, out: *mut f64) -> HsStatus {
    scalar(out, || specfun::hyp2f1(Hyp2F1Call::new(alpha, beta, gamma, z)))
}

/// `J_σ(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_bessel_j(sigma: f64, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || specfun::bessel_j(sigma, x))
}

/// `Y_σ(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_bessel_y(sigma: f64, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || specfun::bessel_y(sigma, x))
}

/// Spherical `j_q(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_spherical_bessel_j(q: u32, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || specfun::spherical_bessel(SphericalKind::J, q, x))
}

/// Spherical `y_q(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_spherical_bessel_y(q: u32, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || specfun::spherical_bessel(SphericalKind::Y, q, x))
}

/// `P_ν(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_legendre_p(nu: f64, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || legendre::legendre_p(nu, x))
}

/// Associated `P_ν^μ(x)` without the Condon-Shortley phase.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_assoc_legendre_p(nu: f64, mu: f64, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || legendre::assoc_legendre_p(nu, mu, x))
}

/// Hyperspherical `P_{ν,λ}(x)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_hyper_legendre(nu: f64, lambda: f64, x: f64, out: *mut f64) -> HsStatus {
    scalar(out, || legendre::hyper_legendre(nu, lambda, x))
}

/// Hyperspherical associated `P_{ν,λ}^μ(x)`; `branch` is +1 or -1.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_hyper_assoc_legendre(nu: f64, mu: f64, lambda: f64, branch: i32, x: f64, out: *mut f64) -> HsStatus {
    guard(|| {
        let branch = match branch {
            1 => Branch::Plus,
            -1 => Branch::Minus,
            b => return Err(invalid(format!("branch {b} is not +1 or -1"))),
        };
        let out = out_ref(out)?;
        *out = legendre::hyper_assoc_legendre(&HyperLegendreParams::new(nu, mu, lambda, branch), x)?;
        Ok(())
    })
}

/// Squared radial wavenumber for time-operator coefficients `A_0 … A_{n-1}`.
/// `sign` is +1 or -1 and selects `∂_t → ±iω`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_dispersion(
    coefficients: *const f64,
    n: usize,
    omega_re: f64,
    omega_im: f64,
    sign: i32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HsStatus {
    guard(|| {
        let sign = match sign {
            1 => Sign::Plus,
            -1 => Sign::Minus,
            s => return Err(invalid(format!("sign {s} is not +1 or -1"))),
        };
        let c = PhysicsCoefficients::Extended { coefficients: in_slice(coefficients, n)?.to_vec() };
        let re = out_ref(out_re)?;
        let im = out_ref(out_im)?;
        let k2 = physics::dispersion(&c, Complex64::new(omega_re, omega_im), sign)?;
        *re = k2.re;
        *im = k2.im;
        Ok(())
    })
}

/// Maps `dim` generalized coordinates in system order to Cartesian ones.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_to_cartesian(system: i32, coords: *const f64, dim: usize, out: *mut f64) -> HsStatus {
    guard(|| {
        let q = in_slice(coords, dim)?;
        let x = match system_of(system)? {
            CoordinateSystem::Hyperspherical => to_cartesian_hs(&HypersphericalPoint::from_coords(q)?),
            CoordinateSystem::Hypercylindrical => to_cartesian_hc(&HypercylindricalPoint::from_coords(q)?),
        };
        out_slice(out, dim)?.copy_from_slice(x.coords());
        Ok(())
    })
}

/// Inverse of [`hs_to_cartesian`]; the longitude lands in `[0, 2π)`.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_from_cartesian(system: i32, x: *const f64, dim: usize, out: *mut f64) -> HsStatus {
    guard(|| {
        let p = CartesianPoint::new(in_slice(x, dim)?.to_vec())?;
        let q = match system_of(system)? {
            CoordinateSystem::Hyperspherical => from_cartesian_hs(&p).coords(),
            CoordinateSystem::Hypercylindrical => from_cartesian_hc(&p)?.coords(),
        };
        out_slice(out, dim)?.copy_from_slice(&q);
        Ok(())
    })
}

/// Writes the `dim` scale factors at a point given in generalized coordinates.
///
/// # Safety
/// Pointer arguments must be valid for the element counts passed with them.
#[no_mangle]
pub unsafe extern "C" fn hs_scale_factors(system: i32, coords: *const f64, dim: usize, out: *mut f64) -> HsStatus {
    guard(|| {
        let q = in_slice(coords, dim)?;
        let h = match system_of(system)? {
            CoordinateSystem::Hyperspherical => scale_factors_hs(&HypersphericalPoint::from_coords(q)?),
            CoordinateSystem::Hypercylindrical => scale_factors_hc(&HypercylindricalPoint::from_coords(q)?),
        };
        out_slice(out, dim)?.copy_from_slice(h.values());
        Ok(())
    })
}

/// Parses and validates a JSON mode document. Release with [`hs_mode_spec_free`].
///
/// # Safety
/// `json` must be null or a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn hs_mode_spec_from_json(json: *const c_char, out: *mut *mut HsModeSpec) -> HsStatus {
    guard(|| {
        if json.is_null() {
            return Err(Failure::Status(HsStatus::NullPointer, "null JSON string".into()));
        }
        let out = out_ref(out)?;
        // SAFETY: checked non-null; NUL termination is the caller's contract.
        let text = unsafe { CStr::from_ptr(json) }.to_str().map_err(|e| invalid(format!("JSON is not UTF-8: {e}")))?;
        let spec = ModeSpec::from_json(text)?;
        spec.validate()?;
        *out = Box::into_raw(Box::new(HsModeSpec { spec }));
        Ok(())
    })
}

/// Releases a handle; null is ignored.
///
/// # Safety
/// `spec` must be null or come from [`hs_mode_spec_from_json`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hs_mode_spec_free(spec: *mut HsModeSpec) {
    if !spec.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { Box::from_raw(spec) });
    }
}

fn spec_ref<'a>(spec: *const HsModeSpec) -> Result<&'a ModeSpec, Failure> {
    // SAFETY: the caller guarantees a non-null handle is live.
    unsafe { spec.as_ref() }
        .map(|h| &h.spec)
        .ok_or(Failure::Status(HsStatus::NullPointer, "null mode handle".into()))
}

/// Serializes a handle as pretty JSON. Release the string with [`hs_string_free`].
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_mode_spec_to_json(spec: *const HsModeSpec, out: *mut *mut c_char) -> HsStatus {
    guard(|| {
        let text = spec_ref(spec)?.to_json()?;
        let out = out_ref(out)?;
        *out = CString::new(text).map_err(|e| invalid(e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Dimension of the mode's space, or 0 for a null handle.
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_mode_spec_dim(spec: *const HsModeSpec) -> usize {
    spec_ref(spec).map_or(0, |s| s.dim)
}

/// `k² + K²`, the eigenvalue of `-∇²` on the mode.
///
/// # Safety
/// `spec` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_mode_wavenumber_squared(spec: *const HsModeSpec, out: *mut f64) -> HsStatus {
    guard(|| {
        let s = spec_ref(spec)?;
        *out_ref(out)? = physics::wavenumber_squared(s);
        Ok(())
    })
}

/// Evaluates the mode at `dim` generalized coordinates and time `t`.
///
/// # Safety
/// `spec` must be null or a live handle; `coords` must hold `dim` doubles.
#[no_mangle]
pub unsafe extern "C" fn hs_mode_eval(
    spec: *const HsModeSpec,
    coords: *const f64,
    dim: usize,
    t: f64,
    out_re: *mut f64,
    out_im: *mut f64,
) -> HsStatus {
    guard(|| {
        let s = spec_ref(spec)?;
        let q = in_slice(coords, dim)?;
        let re = out_ref(out_re)?;
        let im = out_ref(out_im)?;
        let v = physics::mode_eval(s, q, t)?;
        *re = v.re;
        *im = v.im;
        Ok(())
    })
}

/// Releases a string returned by this library; null is ignored.
///
/// # Safety
/// `s` must be null or come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: ownership returns from the caller.
        drop(unsafe { CString::from_raw(s) });
    }
}
