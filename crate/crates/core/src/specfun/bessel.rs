use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{gamma_fn, is_non_positive_integer};

/// Upper end of the argument range on which the power series is validated.
pub const BESSEL_X_MAX: f64 = 30.0;

const REL_TOL: f64 = 1e-16;
const MAX_TERMS: usize = 500;

// orders this close to an integer use the symmetric limit for Y
const INTEGER_ORDER_WINDOW: f64 = 1e-8;
const LIMIT_OFFSET: f64 = 1e-5;

/// Non-negative real order `σ` of a cylinder function.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub fn new(sigma: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma >= 0.0) {
            return Err(Error::OutOfDomain(format!("Bessel order {sigma} must be finite and >= 0")));
        }
        Ok(BesselOrder(sigma))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for BesselOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// First (`J`) or second (`Y`) kind cylinder function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BesselKind {
    J,
    Y,
}

impl BesselKind {
    pub fn eval(self, sigma: f64, x: f64) -> Result<f64> {
        match self {
            BesselKind::J => bessel_j(sigma, x),
            BesselKind::Y => bessel_y(sigma, x),
        }
    }
}

impl FromStr for BesselKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "J" | "j" => Ok(BesselKind::J),
            "Y" | "y" => Ok(BesselKind::Y),
            other => Err(Error::InvalidSpec(format!("unknown Bessel kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SphericalKind {
    J,
    Y,
}

/// Bessel function of the first kind `J_σ(x)` for `σ >= 0`, `0 <= x <= 30`.
pub fn bessel_j(sigma: f64, x: f64) -> Result<f64> {
    BesselOrder::new(sigma)?;
    check_argument(x)?;
    j_series(sigma, x)
}

/// Neumann function `Y_σ(x) = (J_σ cos σπ - J_{-σ}) / sin σπ` for `x > 0`.
///
/// Within `1e-8` of an integer order the value is the average of the formula
/// at `σ ± 1e-5`, accurate to about `1e-6`.
pub fn bessel_y(sigma: f64, x: f64) -> Result<f64> {
    BesselOrder::new(sigma)?;
    if x == 0.0 {
        return Err(Error::Singular("Y_σ(x) is singular at x = 0".into()));
    }
    check_argument(x)?;
    if (sigma - sigma.round()).abs() < INTEGER_ORDER_WINDOW {
        let n = sigma.round();
        let upper = y_non_integer(n + LIMIT_OFFSET, x)?;
        let lower = y_non_integer(n - LIMIT_OFFSET, x)?;
        return Ok(0.5 * (upper + lower));
    }
    y_non_integer(sigma, x)
}

/// Hankel functions `H^(1) = J + iY` (`kind = 1`) and `H^(2) = J - iY`.
pub fn hankel(kind: u8, sigma: f64, x: f64) -> Result<Complex64> {
    let j = bessel_j(sigma, x)?;
    let y = bessel_y(sigma, x)?;
    match kind {
        1 => Ok(Complex64::new(j, y)),
        2 => Ok(Complex64::new(j, -y)),
        _ => Err(Error::OutOfDomain(format!("Hankel kind {kind} is not 1 or 2"))),
    }
}

/// Spherical Bessel functions `j_q(x) = √(π/2x) J_{q+1/2}(x)` and
/// `y_q(x) = √(π/2x) Y_{q+1/2}(x)`.
pub fn spherical_bessel(kind: SphericalKind, q: u32, x: f64) -> Result<f64> {
    let sigma = q as f64 + 0.5;
    match kind {
        SphericalKind::J => {
            check_argument(x)?;
            if x == 0.0 {
                return Ok(if q == 0 { 1.0 } else { 0.0 });
            }
            Ok((PI / (2.0 * x)).sqrt() * bessel_j(sigma, x)?)
        }
        SphericalKind::Y => {
            if x == 0.0 {
                return Err(Error::Singular("y_q(x) is singular at x = 0".into()));
            }
            Ok((PI / (2.0 * x)).sqrt() * bessel_y(sigma, x)?)
        }
    }
}

fn check_argument(x: f64) -> Result<()> {
    if !(0.0..=BESSEL_X_MAX).contains(&x) {
        return Err(Error::OutOfDomain(format!(
            "Bessel argument {x} outside the series domain [0, {BESSEL_X_MAX}]"
        )));
    }
    Ok(())
}

fn y_non_integer(nu: f64, x: f64) -> Result<f64> {
    let s = (nu * PI).sin();
    Ok((j_series(nu, x)? * (nu * PI).cos() - j_series(-nu, x)?) / s)
}

/// `Σ (-1)^k (x/2)^{2k+ν} / (k! Γ(k+ν+1))` for any real `ν`.
fn j_series(nu: f64, x: f64) -> Result<f64> {
    if is_non_positive_integer(nu) && nu != 0.0 {
        // J_{-n} = (-1)^n J_n
        let n = -nu;
        let sign = if (n as i64) % 2 == 0 { 1.0 } else { -1.0 };
        return Ok(sign * j_series(n, x)?);
    }
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let half = 0.5 * x;
    let quarter_sq = -half * half;

    let mut term = half.powf(nu) / gamma_fn(nu + 1.0)?;
    let mut sum = term;
    for k in 1..MAX_TERMS {
        let kf = k as f64;
        term *= quarter_sq / (kf * (kf + nu));
        sum += term;
        if kf > half && term.abs() <= REL_TOL * sum.abs() {
            return Ok(sum);
        }
        if term == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(MAX_TERMS))
}
