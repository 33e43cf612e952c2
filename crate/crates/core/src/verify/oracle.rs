//! Second implementations of the series kernels for cross-checking.
//!
//! These share no code with [`crate::specfun`]: terms are accumulated with
//! Kahan summation, truncation is at `1e-17` relative, no transformation is
//! applied, and the Gamma function comes from `statrs`.

use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

const ORACLE_TOL: f64 = 1e-17;
const ORACLE_CAP: usize = 1_000_000;

#[derive(Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, v: f64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

fn non_positive_integer(x: f64) -> bool {
    x <= 0.0 && x.fract() == 0.0
}

/// Direct Gauss series, terminating or `|z| < 1`.
pub fn oracle_hyp2f1(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let terminates = non_positive_integer(a) || non_positive_integer(b);
    if !terminates && z.abs() >= 1.0 {
        return Err(Error::Divergent(z.abs()));
    }
    let mut acc = Kahan::default();
    acc.add(1.0);
    let mut term = 1.0f64;
    let mut quiet = 0;
    for k in 0..ORACLE_CAP {
        let kf = k as f64;
        if c + kf == 0.0 {
            return Err(Error::LowerParameterPole(c));
        }
        term = term * (a + kf) / (c + kf) * (b + kf) / (kf + 1.0) * z;
        if term == 0.0 {
            return Ok(acc.sum);
        }
        acc.add(term);
        // demand a few consecutive small terms before stopping
        if term.abs() < ORACLE_TOL * acc.sum.abs() {
            quiet += 1;
            if quiet >= 3 {
                return Ok(acc.sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence(ORACLE_CAP))
}

/// `J_σ(x)` for `σ >= 0`, `x >= 0`.
pub fn oracle_bessel_j(sigma: f64, x: f64) -> Result<f64> {
    if sigma < 0.0 || x < 0.0 {
        return Err(Error::OutOfDomain(format!("oracle J needs σ, x >= 0, got {sigma}, {x}")));
    }
    if x == 0.0 {
        return Ok(if sigma == 0.0 { 1.0 } else { 0.0 });
    }
    let y = x * x / 4.0;
    let mut term = (x / 2.0).powf(sigma) / gamma(sigma + 1.0);
    let mut acc = Kahan::default();
    acc.add(term);
    for k in 1..ORACLE_CAP {
        let kf = k as f64;
        term = -term * y / kf / (kf + sigma);
        acc.add(term);
        if kf > x && term.abs() < ORACLE_TOL * acc.sum.abs() {
            return Ok(acc.sum);
        }
    }
    Err(Error::NonConvergence(ORACLE_CAP))
}
