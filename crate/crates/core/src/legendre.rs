//! The four-member Legendre hierarchy, all reduced to the Gauss series.
//!
//! | function                      | ODE in `θ` (`x = cos θ`)                                      |
//! |-------------------------------|---------------------------------------------------------------|
//! | `P_ν(x)`                      | `G'' + cot θ G' + ν(ν+1) G = 0`                               |
//! | `P_ν^μ(x)`                    | `G'' + cot θ G' + [ν(ν+1) - μ² csc² θ] G = 0`                 |
//! | `P_{ν,λ}(x)`                  | `G'' + (1+2λ) cot θ G' + ν(ν+1) G = 0`                        |
//! | `P_{ν,λ}^μ(x)`                | `G'' + (1+2λ) cot θ G' + [ν(ν+1) - μ² csc² θ] G = 0`          |
//!
//! The hyperspherical associated family is evaluated as
//! `(1 - x²)^ϑ F(α, β; 1/2; x²)` where `ϑ² + λϑ - μ²/4 = 0` and `α, β` are the
//! roots of `χ² - (2ϑ + λ + 1/2) χ + ϑ² + ϑ/2 + λϑ - ν(ν+1)/4 = 0`, so
//! `2{α, β} = 2ϑ + λ + 1/2 ± √((λ + 1/2)² + ν(ν+1))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::specfun::{gamma_fn, hyp2f1, Hyp2F1Call};
use crate::verify::SecondOrderOde;

/// Root of `ϑ² + λϑ - μ²/4 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    #[default]
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Branch::Plus),
            "minus" | "-" => Ok(Branch::Minus),
            other => Err(Error::InvalidSpec(format!("unknown branch `{other}`"))),
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

/// Degree `ν`, order `μ`, dimension `λ` and branch of one hyperspherical
/// associated Legendre solution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HyperLegendreParams {
    pub nu: f64,
    pub mu: f64,
    pub lambda: f64,
    pub branch: Branch,
}

impl HyperLegendreParams {
    pub fn new(nu: f64, mu: f64, lambda: f64, branch: Branch) -> Self {
        HyperLegendreParams { nu, mu, lambda, branch }
    }
}

/// Exponent `ϑ` and the Gauss parameters for the `x²` reduction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReducedParams {
    pub vartheta: f64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma_lower: f64,
}

/// Legendre function `P_ν(x) = F(-ν, 1+ν; 1; (1-x)/2)`.
///
/// Integer degrees use the three-term recurrence, which avoids the
/// cancellation of the terminating series near `x = -1`.
pub fn legendre_p(nu: f64, x: f64) -> Result<f64> {
    check_closed_interval(x)?;
    if nu.fract() == 0.0 && nu.abs() < 1e6 {
        let degree = if nu < 0.0 { -nu - 1.0 } else { nu };
        return Ok(integer_order(degree as u32, 0, x));
    }
    if x == -1.0 {
        return Err(Error::Divergent(1.0));
    }
    hyp2f1(Hyp2F1Call::new(-nu, 1.0 + nu, 1.0, (1.0 - x) / 2.0))
}

/// Associated Legendre function of the first kind on `-1 < x < 1`.
///
/// Non-integer `μ` uses the real Ferrers form
/// `[(1+x)/(1-x)]^{μ/2} F(-ν, ν+1; 1-μ; (1-x)/2) / Γ(1-μ)`. Integer `μ = m`
/// with integer `ν = ℓ` is `(1-x²)^{m/2} dᵐ/dxᵐ P_ℓ(x)` by upward recurrence,
/// without the Condon–Shortley phase; it vanishes for `m > ℓ`.
pub fn assoc_legendre_p(nu: f64, mu: f64, x: f64) -> Result<f64> {
    if !(x > -1.0 && x < 1.0) {
        return Err(Error::OutOfDomain(format!(
            "associated Legendre argument {x} outside (-1, 1)"
        )));
    }
    if !(mu >= 0.0) {
        return Err(Error::OutOfDomain(format!("order μ = {mu} must be >= 0")));
    }
    if mu == 0.0 {
        return legendre_p(nu, x);
    }
    if mu.fract() == 0.0 {
        if nu.fract() != 0.0 {
            return Err(Error::Unsupported(format!(
                "integer order μ = {mu} with non-integer degree ν = {nu}"
            )));
        }
        // P_ν = P_{-ν-1}
        let degree = if nu < 0.0 { -nu - 1.0 } else { nu };
        return Ok(integer_order(degree as u32, mu as u32, x));
    }
    let prefactor = ((1.0 + x) / (1.0 - x)).powf(mu / 2.0) / gamma_fn(1.0 - mu)?;
    Ok(prefactor * hyp2f1(Hyp2F1Call::new(-nu, nu + 1.0, 1.0 - mu, (1.0 - x) / 2.0))?)
}

fn integer_order(l: u32, m: u32, x: f64) -> f64 {
    if m > l {
        return 0.0;
    }
    let s = (1.0 - x * x).sqrt();
    // P_m^m = (2m-1)!! (1-x²)^{m/2}
    let mut pmm = 1.0;
    for k in 0..m {
        pmm *= (2 * k + 1) as f64 * s;
    }
    if l == m {
        return pmm;
    }
    let mut prev = pmm;
    let mut cur = x * (2 * m + 1) as f64 * pmm;
    for ll in (m + 1)..l {
        let llf = ll as f64;
        let next = ((2.0 * llf + 1.0) * x * cur - (llf + m as f64) * prev) / (llf - m as f64 + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Hyperspherical Legendre function `P_{ν,λ}(x) = F(α, β; 1+λ; (1-x)/2)` with
/// `α, β = λ + 1/2 ± √((λ+1/2)² + ν(ν+1))`.
pub fn hyper_legendre(nu: f64, lambda: f64, x: f64) -> Result<f64> {
    if !(x > -1.0 && x <= 1.0) {
        return Err(Error::OutOfDomain(format!(
            "hyperspherical Legendre argument {x} outside (-1, 1]"
        )));
    }
    let radicand = (lambda + 0.5).powi(2) + nu * (nu + 1.0);
    if radicand < 0.0 {
        return Err(Error::ComplexParameters(radicand));
    }
    let root = radicand.sqrt();
    let centre = lambda + 0.5;
    hyp2f1(Hyp2F1Call::new(centre + root, centre - root, 1.0 + lambda, (1.0 - x) / 2.0))
}

/// Exponent and Gauss parameters of the `x²` reduction for one branch.
pub fn hyper_assoc_params(p: &HyperLegendreParams) -> Result<ReducedParams> {
    let HyperLegendreParams { nu, mu, lambda, branch } = *p;
    let vartheta = -lambda / 2.0 + branch.sign() * ((lambda * lambda + mu * mu) / 4.0).sqrt();
    let radicand = (lambda + 0.5).powi(2) + nu * (nu + 1.0);
    if radicand < 0.0 {
        return Err(Error::ComplexParameters(radicand));
    }
    let centre = 2.0 * vartheta + lambda + 0.5;
    let root = radicand.sqrt();
    Ok(ReducedParams {
        vartheta,
        alpha: (centre + root) / 2.0,
        beta: (centre - root) / 2.0,
        gamma_lower: 0.5,
    })
}

/// `P_{ν,λ}^μ(x) = (1 - x²)^ϑ F(α, β; 1/2; x²)` on `-1 < x < 1`.
///
/// The value at `x = 0` is 1 for every parameter set and the function is even.
/// The two branches give the same function: Euler's transformation maps
/// `(1-z)^ϑ F(α, β; 1/2; z)` onto the other root `-λ-ϑ` with parameters
/// `1/2-β, 1/2-α`.
pub fn hyper_assoc_legendre(p: &HyperLegendreParams, x: f64) -> Result<f64> {
    hyper_assoc_with(&hyper_assoc_params(p)?, x)
}

/// Evaluates the `x²` reduction for explicitly supplied parameters.
pub fn hyper_assoc_with(rp: &ReducedParams, x: f64) -> Result<f64> {
    if !(x.abs() < 1.0) {
        return Err(Error::Divergent(x.abs()));
    }
    let z = x * x;
    let f = hyp2f1(Hyp2F1Call::new(rp.alpha, rp.beta, rp.gamma_lower, z))?;
    Ok((1.0 - z).powf(rp.vartheta) * f)
}

/// Coefficients of the hyperspherical associated Legendre equation in the
/// latitude: `G'' + (1+2λ) cot θ G' + [ν(ν+1) - μ² csc² θ] G`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LegendreOde {
    pub nu: f64,
    pub mu: f64,
    pub lambda: f64,
}

impl LegendreOde {
    pub fn legendre(nu: f64) -> Self {
        LegendreOde { nu, mu: 0.0, lambda: 0.0 }
    }

    pub fn associated(nu: f64, mu: f64) -> Self {
        LegendreOde { nu, mu, lambda: 0.0 }
    }

    pub fn hyperspherical(nu: f64, lambda: f64) -> Self {
        LegendreOde { nu, mu: 0.0, lambda }
    }

    pub fn hyperspherical_associated(nu: f64, mu: f64, lambda: f64) -> Self {
        LegendreOde { nu, mu, lambda }
    }
}

impl SecondOrderOde for LegendreOde {
    fn coefficients(&self, theta: f64) -> (f64, f64, f64) {
        let (s, c) = theta.sin_cos();
        (
            1.0,
            (1.0 + 2.0 * self.lambda) * c / s,
            self.nu * (self.nu + 1.0) - self.mu * self.mu / (s * s),
        )
    }
}

/// Residual form of the defining equation for `p`, for the verification
/// harness.
pub fn hyper_assoc_ode_residual_form(p: &HyperLegendreParams) -> LegendreOde {
    LegendreOde::hyperspherical_associated(p.nu, p.mu, p.lambda)
}

/// Both branches sampled at one latitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    /// Latitude angle `θ`; the functions are evaluated at `cos θ`.
    pub x: f64,
    pub value_plus: f64,
    pub value_minus: f64,
}

/// Tabulates `P_{ν,λ}^μ(cos θ)` for both branches over the given angles.
pub fn hyper_assoc_table(nu: f64, mu: f64, lambda: f64, angles: &[f64]) -> Result<Vec<TableRow>> {
    let plus = hyper_assoc_params(&HyperLegendreParams::new(nu, mu, lambda, Branch::Plus))?;
    let minus = hyper_assoc_params(&HyperLegendreParams::new(nu, mu, lambda, Branch::Minus))?;
    angles
        .iter()
        .map(|&theta| {
            let c = theta.cos();
            Ok(TableRow {
                x: theta,
                value_plus: hyper_assoc_with(&plus, c)?,
                value_minus: hyper_assoc_with(&minus, c)?,
            })
        })
        .collect()
}

fn check_closed_interval(x: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&x) {
        return Err(Error::OutOfDomain(format!("Legendre argument {x} outside [-1, 1]")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const SQRT2: f64 = std::f64::consts::SQRT_2;

    #[test]
    fn legendre_polynomials() {
        assert_eq!(legendre_p(3.7, 1.0).unwrap(), 1.0);
        assert_relative_eq!(legendre_p(1.0, 0.5).unwrap(), 0.5, max_relative = 1e-15);
        assert_relative_eq!(legendre_p(2.0, 0.5).unwrap(), -0.125, max_relative = 1e-15);
        assert_relative_eq!(legendre_p(2.0, -1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert!(legendre_p(0.5, -1.0).is_err());
        assert!(legendre_p(1.0, 1.5).is_err());
    }

    #[test]
    fn associated_integer_order() {
        assert_relative_eq!(assoc_legendre_p(2.0, 0.0, 0.5).unwrap(), -0.125, max_relative = 1e-15);
        assert_relative_eq!(assoc_legendre_p(1.0, 1.0, 0.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(
            assoc_legendre_p(2.0, 1.0, 0.5).unwrap(),
            3.0 * 0.5 * 0.75f64.sqrt(),
            max_relative = 1e-15
        );
        // P_3^2 = 15 x (1 - x²)
        assert_relative_eq!(
            assoc_legendre_p(3.0, 2.0, 0.3).unwrap(),
            15.0 * 0.3 * 0.91,
            max_relative = 1e-14
        );
        assert_eq!(assoc_legendre_p(1.0, 2.0, 0.3).unwrap(), 0.0);
        assert!(matches!(assoc_legendre_p(1.5, 1.0, 0.3), Err(Error::Unsupported(_))));
        assert!(assoc_legendre_p(1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn ferrers_form_matches_standard_half_order_case() {
        // P_ν^{1/2}(cos θ) = √(2/(π sin θ)) cos((ν + 1/2) θ)
        for &(nu, theta) in &[(1.0, 0.7), (2.0, 1.3), (0.5, 2.1)] {
            let x: f64 = f64::cos(theta);
            let expected = (2.0 / (std::f64::consts::PI * theta.sin())).sqrt()
                * ((nu + 0.5) * theta).cos();
            assert_relative_eq!(assoc_legendre_p(nu, 0.5, x).unwrap(), expected, max_relative = 1e-12);
        }
    }

    #[test]
    fn hyperspherical_legendre() {
        assert_eq!(hyper_legendre(2.3, 0.7, 1.0).unwrap(), 1.0);
        assert_relative_eq!(hyper_legendre(1.0, 0.0, 0.3).unwrap(), 0.3, max_relative = 1e-14);
        for nu in 0..=5 {
            for x in crate::verify::linspace(-0.95, 1.0, 21) {
                let a = hyper_legendre(nu as f64, 0.0, x).unwrap();
                let b = legendre_p(nu as f64, x).unwrap();
                assert!((a - b).abs() < 1e-12, "ν={nu} x={x}: {a} vs {b}");
            }
        }
        assert!(matches!(hyper_legendre(-0.5, -0.5, 0.2), Err(Error::ComplexParameters(_))));
        assert!(hyper_legendre(1.0, 0.5, -1.0).is_err());
    }

    #[test]
    fn reduced_parameters() {
        let rp = hyper_assoc_params(&HyperLegendreParams::new(1.0, 0.0, 0.0, Branch::Plus)).unwrap();
        assert_eq!(rp.vartheta, 0.0);
        assert_relative_eq!(rp.alpha, 1.0);
        assert_relative_eq!(rp.beta, -0.5);

        let rp = hyper_assoc_params(&HyperLegendreParams::new(1.0, SQRT2, 0.5, Branch::Plus)).unwrap();
        let s3 = 3f64.sqrt();
        assert_relative_eq!(rp.vartheta, 0.5, max_relative = 1e-15);
        assert_relative_eq!(rp.alpha, (2.0 + s3) / 2.0, max_relative = 1e-15);
        assert_relative_eq!(rp.beta, (2.0 - s3) / 2.0, max_relative = 1e-15);
        assert_eq!(rp.gamma_lower, 0.5);

        for lambda in [0.0, 0.5, 1.0, 2.5] {
            let rp = hyper_assoc_params(&HyperLegendreParams::new(2.0, 0.0, lambda, Branch::Plus))
                .unwrap();
            assert_eq!(rp.vartheta, 0.0);
            assert_relative_eq!(rp.alpha + rp.beta, lambda + 0.5, max_relative = 1e-14);
            assert_relative_eq!(rp.alpha * rp.beta, -6.0 / 4.0, max_relative = 1e-14);
        }
    }

    #[test]
    fn reduced_parameters_satisfy_their_defining_relations() {
        for &(nu, mu, lambda) in &[(1.0, SQRT2, 0.5), (3.0, 6f64.sqrt(), 1.0), (2.0, 0.3, 1.5)] {
            for branch in [Branch::Plus, Branch::Minus] {
                let rp = hyper_assoc_params(&HyperLegendreParams::new(nu, mu, lambda, branch)).unwrap();
                let t = rp.vartheta;
                assert!((t * t + lambda * t - mu * mu / 4.0).abs() < 1e-13);
                assert!((rp.alpha + rp.beta - (2.0 * t + lambda + 0.5)).abs() < 1e-13);
                let product = t * t + t / 2.0 + lambda * t - nu * (nu + 1.0) / 4.0;
                assert!((rp.alpha * rp.beta - product).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn hyper_associated_values() {
        let p = HyperLegendreParams::new(1.0, SQRT2, 0.5, Branch::Plus);
        assert_eq!(hyper_assoc_legendre(&p, 0.0).unwrap(), 1.0);
        // 30-digit series reference
        assert_relative_eq!(
            hyper_assoc_legendre(&p, 0.5).unwrap(),
            1.014_661_792_981_271_5,
            max_relative = 1e-14
        );
        assert_eq!(
            hyper_assoc_legendre(&p, 0.37).unwrap(),
            hyper_assoc_legendre(&p, -0.37).unwrap()
        );
        assert!(matches!(hyper_assoc_legendre(&p, 1.0), Err(Error::Divergent(_))));
    }

    #[test]
    fn branches_coincide() {
        for &(nu, mu, lambda) in &[(1.0, SQRT2, 0.5), (3.0, 6f64.sqrt(), 1.0), (2.0, 0.7, 0.0)] {
            let plus = HyperLegendreParams::new(nu, mu, lambda, Branch::Plus);
            let minus = HyperLegendreParams::new(nu, mu, lambda, Branch::Minus);
            let (rp, rm) = (hyper_assoc_params(&plus).unwrap(), hyper_assoc_params(&minus).unwrap());
            assert!((rp.vartheta + rm.vartheta + lambda).abs() < 1e-14);
            assert!((rm.alpha - (0.5 - rp.beta)).abs() < 1e-13);
            for x in [0.1, 0.5, 0.9] {
                let (a, b) = (hyper_assoc_legendre(&plus, x).unwrap(), hyper_assoc_legendre(&minus, x).unwrap());
                assert!((a - b).abs() < 1e-12 * a.abs().max(1.0), "{nu} {mu} {lambda} {x}");
            }
        }
    }

    #[test]
    fn ode_reductions() {
        let general = hyper_assoc_ode_residual_form(&HyperLegendreParams::new(2.0, 0.0, 0.0, Branch::Plus));
        assert_eq!(general, LegendreOde::legendre(2.0));
        let assoc = LegendreOde::hyperspherical_associated(2.0, 1.5, 0.0);
        assert_eq!(assoc, LegendreOde::associated(2.0, 1.5));
        let hyper = LegendreOde::hyperspherical_associated(2.0, 0.0, 0.5);
        assert_eq!(hyper, LegendreOde::hyperspherical(2.0, 0.5));
        let (a, b, c) = LegendreOde::legendre(2.0).coefficients(1.0);
        assert_eq!(a, 1.0);
        assert_relative_eq!(b, 1.0f64.cos() / 1.0f64.sin());
        assert_eq!(c, 6.0);
    }
}
