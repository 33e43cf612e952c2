use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::is_non_positive_integer;

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function for real `x`, with reflection below `x = 1/2`.
///
/// Non-positive integers are poles and return [`Error::GammaPole`].
pub fn gamma_fn(x: f64) -> Result<f64> {
    if x.is_nan() || is_non_positive_integer(x) {
        return Err(Error::GammaPole(x));
    }
    if x < 0.5 {
        // Γ(x) Γ(1 - x) = π / sin(πx)
        return Ok(PI / ((PI * x).sin() * lanczos(1.0 - x)));
    }
    Ok(lanczos(x))
}

fn lanczos(x: f64) -> f64 {
    let x = x - 1.0;
    let mut a = LANCZOS_COEFFS[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * a
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn factorials() {
        assert_relative_eq!(gamma_fn(1.0).unwrap(), 1.0, max_relative = 1e-14);
        assert_relative_eq!(gamma_fn(5.0).unwrap(), 24.0, max_relative = 1e-14);
        let mut fact = 1.0f64;
        for n in 1..=20 {
            assert_relative_eq!(gamma_fn(n as f64).unwrap(), fact, max_relative = 1e-13);
            fact *= n as f64;
        }
    }

    #[test]
    fn half_integer() {
        // √π from a 30-digit reference
        assert_relative_eq!(
            gamma_fn(0.5).unwrap(),
            1.772_453_850_905_516,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            gamma_fn(-0.5).unwrap(),
            -2.0 * 1.772_453_850_905_516,
            max_relative = 1e-14
        );
    }

    #[test]
    fn poles() {
        for x in [0.0, -1.0, -7.0] {
            assert!(matches!(gamma_fn(x), Err(Error::GammaPole(_))));
        }
    }

    #[test]
    fn recurrence_on_validated_range() {
        let mut x = 0.5;
        while x < 50.0 {
            let lhs = gamma_fn(x + 1.0).unwrap();
            let rhs = x * gamma_fn(x).unwrap();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
            x += 0.37;
        }
    }
}
