//! Double-precision special-function kernels: Gamma, the Gauss series
//! `₂F₁`, and Bessel/Neumann functions of real order.

mod bessel;
mod gamma;
mod hyp2f1;

pub use bessel::{
    bessel_j, bessel_y, hankel, spherical_bessel, BesselKind, BesselOrder, SphericalKind,
    BESSEL_X_MAX,
};
pub use gamma::gamma_fn;
pub use hyp2f1::{hyp2f1, hyp2f1_euler, hyp2f1_series, Hyp2F1Call, MAX_TERMS};

/// True when `x` is an integer `<= 0`.
pub(crate) fn is_non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}
