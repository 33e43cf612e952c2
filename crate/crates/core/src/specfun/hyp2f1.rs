use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::is_non_positive_integer;

/// Hard cap on the number of series terms.
pub const MAX_TERMS: usize = 100_000;

const REL_TOL: f64 = 1e-16;

/// One evaluation request `F(α, β; γ; z)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Hyp2F1Call {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub z: f64,
}

impl Hyp2F1Call {
    pub fn new(alpha: f64, beta: f64, gamma: f64, z: f64) -> Self {
        Hyp2F1Call { alpha, beta, gamma, z }
    }

    /// Degree of the polynomial when `α` or `β` is a non-positive integer.
    pub fn terminating_degree(&self) -> Option<usize> {
        [self.alpha, self.beta]
            .into_iter()
            .filter(|p| is_non_positive_integer(*p))
            .map(|p| (-p) as usize)
            .min()
    }
}

/// Gauss hypergeometric function.
///
/// Sums `Σ (α)_k (β)_k / ((γ)_k k!) z^k` with incrementally updated term
/// ratios. Terminating series are summed as polynomials for any `z`. For
/// `0.5 < z < 1` the Euler transformation
/// `F(α,β;γ;z) = (1-z)^{γ-α-β} F(γ-α, γ-β; γ; z)` is applied first.
pub fn hyp2f1(c: Hyp2F1Call) -> Result<f64> {
    if c.z == 0.0 {
        return Ok(1.0);
    }
    if c.terminating_degree().is_some() {
        return hyp2f1_series(c);
    }
    if c.z > 0.5 && c.z < 1.0 {
        return hyp2f1_euler(c);
    }
    hyp2f1_series(c)
}

/// Direct power series without any transformation.
pub fn hyp2f1_series(c: Hyp2F1Call) -> Result<f64> {
    check_call(&c)?;
    sum_series(c.alpha, c.beta, c.gamma, c.z)
}

/// Always evaluates through the Euler transformation.
pub fn hyp2f1_euler(c: Hyp2F1Call) -> Result<f64> {
    check_call(&c)?;
    let Hyp2F1Call { alpha, beta, gamma, z } = c;
    let prefactor = (1.0 - z).powf(gamma - alpha - beta);
    Ok(prefactor * sum_series(gamma - alpha, gamma - beta, gamma, z)?)
}

fn check_call(c: &Hyp2F1Call) -> Result<()> {
    let degree = c.terminating_degree();
    if degree.is_none() && c.z.abs() >= 1.0 {
        return Err(Error::Divergent(c.z.abs()));
    }
    if is_non_positive_integer(c.gamma) {
        // (γ)_k vanishes from k = 1 - γ on; a polynomial of lower degree is fine
        let first_zero = (1.0 - c.gamma) as usize;
        match degree {
            Some(d) if d < first_zero => {}
            _ => return Err(Error::LowerParameterPole(c.gamma)),
        }
    }
    Ok(())
}

fn sum_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    // every Pochhammer factor has settled its sign past this index
    let settle = [-a, -b, -c, 0.0]
        .into_iter()
        .fold(0.0f64, f64::max)
        .ceil() as usize
        + 1;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * z;
        sum += term;
        if term == 0.0 {
            return Ok(sum);
        }
        if k >= settle && term.abs() < REL_TOL * sum.abs() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence(MAX_TERMS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn f(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
        hyp2f1(Hyp2F1Call::new(a, b, c, z))
    }

    #[test]
    fn origin_is_one() {
        assert_eq!(f(0.3, -2.7, 4.1, 0.0).unwrap(), 1.0);
        assert_eq!(f(1.0, 1.0, -3.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn terminating_three_terms() {
        // 1 - 3·0.5 + 6·0.25
        assert_relative_eq!(f(-2.0, 3.0, 1.0, 0.5).unwrap(), -0.5, max_relative = 1e-15);
    }

    #[test]
    fn geometric_identity() {
        // F(1, β; β; z) = 1/(1 - z)
        assert_relative_eq!(f(1.0, 2.0, 2.0, 0.5).unwrap(), 2.0, max_relative = 1e-14);
        assert_relative_eq!(f(1.0, 2.0, 2.0, 0.9).unwrap(), 10.0, max_relative = 1e-13);
        assert_relative_eq!(f(1.0, 2.0, 2.0, -0.9).unwrap(), 1.0 / 1.9, max_relative = 1e-13);
    }

    #[test]
    fn reference_values() {
        // 30-digit references
        assert_relative_eq!(
            f(0.3, 0.7, 1.5, 0.8).unwrap(),
            1.197_763_356_807_134,
            max_relative = 1e-13
        );
        assert_relative_eq!(
            f(1.5, -0.5, 0.5, 0.9).unwrap(),
            -2.529_822_128_134_704,
            max_relative = 1e-13
        );
    }

    #[test]
    fn terminating_beyond_unit_disk() {
        // F(-1, b; c; z) = 1 - b z / c
        assert_relative_eq!(f(-1.0, 2.0, 4.0, 3.0).unwrap(), -0.5, max_relative = 1e-15);
    }

    #[test]
    fn divergence_and_poles() {
        assert!(matches!(f(0.5, 0.5, 1.0, 1.0), Err(Error::Divergent(_))));
        assert!(matches!(f(0.5, 0.5, 1.0, -1.2), Err(Error::Divergent(_))));
        assert!(matches!(f(0.5, 0.5, -2.0, 0.3), Err(Error::LowerParameterPole(_))));
        // degree 1 stops before (γ)_3 = 0 for γ = -2
        assert_relative_eq!(f(-1.0, 1.0, -2.0, 0.5).unwrap(), 1.25, max_relative = 1e-15);
        assert!(matches!(f(-4.0, 1.0, -2.0, 0.5), Err(Error::LowerParameterPole(_))));
    }

    #[test]
    fn small_leading_factor_does_not_stop_early() {
        // (α)_1 is tiny, later terms are not
        let direct = f(-1e-12, 3.0, 1.0, 0.4).unwrap();
        assert!(direct != 1.0);
        assert!((direct - 1.0).abs() < 1e-11);
    }
}
