//! Finite-difference oracles used to certify the analytic machinery.
//!
//! Everything here is deliberately independent of the closed forms it checks:
//! derivatives come from 5-point central stencils, the Laplacian is assembled
//! term by term from the curvilinear metric, and [`oracle`] re-sums the series
//! kernels with compensated summation.

pub mod oracle;
pub mod suite;

use std::f64::consts::PI;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::coords::CoordinateSystem;
use crate::error::{Error, Result};

pub use oracle::{oracle_bessel_j, oracle_hyp2f1};
pub use suite::{run_criterion, run_suite, Check, CheckItem, Suite, SuiteOptions, SuiteReport};

/// Default finite-difference step.
pub const DEFAULT_STEP: f64 = 1e-3;

/// A linear second-order ODE `a(u) f'' + b(u) f' + c(u) f = 0`.
pub trait SecondOrderOde {
    fn coefficients(&self, u: f64) -> (f64, f64, f64);

    /// Open interval on which the coefficients are regular.
    fn domain(&self) -> (f64, f64) {
        (0.0, PI)
    }
}

/// Outcome of evaluating an ODE residual over a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub grid: Vec<f64>,
    pub step: f64,
    pub max_residual: f64,
    pub mean_residual: f64,
    /// Largest `|f|` on the grid.
    pub scale: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResidualReport {
    /// `max_residual / scale`.
    pub fn relative(&self) -> f64 {
        self.max_residual / self.scale
    }
}

/// 5-point central difference of order 1 or 2 at `x`.
pub fn fd_derivative<F>(f: F, x: f64, order: u8, h: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    fd_generic(&f, x, order, h)
}

/// Same stencils for any vector-like value, e.g. complex modes.
pub fn fd_generic<V, F>(f: &F, x: f64, order: u8, h: f64) -> Result<V>
where
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V>,
    F: Fn(f64) -> Result<V>,
{
    let m2 = f(x - 2.0 * h)?;
    let m1 = f(x - h)?;
    let p1 = f(x + h)?;
    let p2 = f(x + 2.0 * h)?;
    match order {
        1 => Ok((m2 - p2 + (p1 - m1) * 8.0) * (1.0 / (12.0 * h))),
        2 => {
            let c = f(x)?;
            Ok(((m1 + p1) * 16.0 - (m2 + p2) - c * 30.0) * (1.0 / (12.0 * h * h)))
        }
        _ => Err(Error::Unsupported(format!("derivative order {order}"))),
    }
}

/// Residual of `ode` for the function `f` at each grid point.
pub fn ode_residual<O, F>(ode: &O, f: F, grid: &[f64], h: f64, tolerance: f64) -> Result<ResidualReport>
where
    O: SecondOrderOde + ?Sized,
    F: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = ode.domain();
    let mut max_residual = 0.0f64;
    let mut total = 0.0;
    let mut scale = 0.0f64;
    for &u in grid {
        if !(u - 2.0 * h > lo && u + 2.0 * h < hi) {
            return Err(Error::OutOfDomain(format!(
                "grid point {u} within 2h of the boundary of ({lo}, {hi})"
            )));
        }
        let value = f(u)?;
        let d1 = fd_derivative(&f, u, 1, h)?;
        let d2 = fd_derivative(&f, u, 2, h)?;
        let (a, b, c) = ode.coefficients(u);
        let r = (a * d2 + b * d1 + c * value).abs();
        max_residual = max_residual.max(r);
        total += r;
        scale = scale.max(value.abs());
    }
    let relative = max_residual / scale;
    Ok(ResidualReport {
        grid: grid.to_vec(),
        step: h,
        max_residual,
        mean_residual: total / grid.len() as f64,
        scale,
        tolerance,
        pass: relative < tolerance,
    })
}

/// `count` evenly spaced points on `[start, stop]`, both ends included.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (stop - start) / (count - 1) as f64;
            (0..count)
                .map(|i| if i == count - 1 { stop } else { start + step * i as f64 })
                .collect()
        }
    }
}

/// Finite-difference Laplacian in generalized coordinates.
///
/// `coords` is in system order (`[r, θ…, φ]` or `[r, θ…, φ, z]`). Each term is
/// `h_u⁻² [f_uu + ∂_u ln(√g / h_u²) f_u]`, with both derivatives from 5-point
/// stencils. The point needs a margin of `2h` from `r = 0` and from the poles of
/// every latitude.
pub fn laplacian_fd<V, F>(system: CoordinateSystem, dim: usize, f: F, coords: &[f64], h: f64) -> Result<V>
where
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V>,
    F: Fn(&[f64]) -> Result<V>,
{
    if dim < system.min_dim() || coords.len() != dim {
        return Err(Error::InvalidPoint(format!(
            "{system} Laplacian needs {dim} >= {} coordinates, got {}",
            system.min_dim(),
            coords.len()
        )));
    }
    let lat = system.latitudes(dim);
    let r = coords[0];
    let thetas = &coords[1..1 + lat];
    if !(r > 2.0 * h) {
        return Err(Error::Singular(format!("radius {r} within 2h of the origin")));
    }
    for (i, t) in thetas.iter().enumerate() {
        if !(*t > 2.0 * h && *t < PI - 2.0 * h) {
            return Err(Error::Singular(format!("latitude θ_{} = {t} within 2h of a pole", i + 1)));
        }
    }

    // the hypercylindrical chain lives on N-1 axes
    let chain_dim = match system {
        CoordinateSystem::Hyperspherical => dim,
        CoordinateSystem::Hypercylindrical => dim - 1,
    } as f64;

    let partial = |i: usize, order: u8| -> Result<V> {
        let along = |u: f64| {
            let mut shifted = coords.to_vec();
            shifted[i] = u;
            f(&shifted)
        };
        fd_generic(&along, coords[i], order, h)
    };

    let mut total = partial(0, 2)? + partial(0, 1)? * ((chain_dim - 1.0) / r);
    // 1/h² of the current coordinate: r² Π_{j<n} sin² θ_j
    let mut metric = r * r;
    for (j, t) in thetas.iter().enumerate() {
        let n = (j + 1) as f64;
        let term = partial(1 + j, 2)? + partial(1 + j, 1)? * ((chain_dim - n - 1.0) / t.tan());
        total = total + term * (1.0 / metric);
        metric *= t.sin().powi(2);
    }
    total = total + partial(1 + lat, 2)? * (1.0 / metric);
    if system == CoordinateSystem::Hypercylindrical {
        total = total + partial(dim - 1, 2)?;
    }
    Ok(total)
}

/// Finite-difference Laplacian in Cartesian coordinates.
pub fn laplacian_fd_cartesian<V, F>(f: F, x: &[f64], h: f64) -> Result<V>
where
    V: Copy + Add<Output = V> + Sub<Output = V> + Mul<f64, Output = V>,
    F: Fn(&[f64]) -> Result<V>,
{
    let mut total: Option<V> = None;
    for i in 0..x.len() {
        let along = |u: f64| {
            let mut shifted = x.to_vec();
            shifted[i] = u;
            f(&shifted)
        };
        let d2 = fd_generic(&along, x[i], 2, h)?;
        total = Some(match total {
            Some(t) => t + d2,
            None => d2,
        });
    }
    total.ok_or_else(|| Error::InvalidPoint("empty cartesian point".into()))
}

/// Observed order of accuracy when halving `h`, from errors against `exact`.
pub fn observed_order<F>(f: F, x: f64, order: u8, h: f64, exact: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let coarse = (fd_derivative(&f, x, order, h)? - exact).abs();
    let fine = (fd_derivative(&f, x, order, h / 2.0)? - exact).abs();
    Ok((coarse / fine).log2())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coords::{to_cartesian_hc, to_cartesian_hs, HypercylindricalPoint, HypersphericalPoint};
    use num_complex::Complex64;

    #[test]
    fn stencils() {
        let f = |x: f64| Ok(x.sin());
        assert!((fd_derivative(f, 0.0, 1, 1e-3).unwrap() - 1.0).abs() < 1e-10);
        let cube = |x: f64| Ok(x * x * x);
        assert!((fd_derivative(cube, 2.0, 2, 1e-3).unwrap() - 12.0).abs() < 1e-8);
        let e = |x: f64| Ok(x.exp());
        // at h = 1e-3 roundoff alone is about 1e-9
        assert!((fd_derivative(e, 1.0, 2, 5e-3).unwrap() - std::f64::consts::E).abs() < 1e-9);
        assert!(fd_derivative(e, 1.0, 3, 1e-3).is_err());
    }

    #[test]
    fn stencil_convergence_rate() {
        let f = |x: f64| Ok((0.7 * x).sin() * x.exp());
        let x = 0.4f64;
        let d1 = 0.7 * (0.7 * x).cos() * x.exp() + (0.7 * x).sin() * x.exp();
        let d2 = (1.0 - 0.49) * (0.7 * x).sin() * x.exp() + 1.4 * (0.7 * x).cos() * x.exp();
        assert!(observed_order(f, x, 1, 1e-2, d1).unwrap() >= 3.5);
        assert!(observed_order(f, x, 2, 1e-2, d2).unwrap() >= 3.5);
    }

    #[test]
    fn complex_stencil() {
        let f = |x: f64| Ok(Complex64::new(0.0, x).exp());
        let d = fd_generic(&f, 0.3, 1, 1e-3).unwrap();
        let exact = Complex64::i() * Complex64::new(0.0, 0.3).exp();
        assert!((d - exact).norm() < 1e-10);
    }

    #[test]
    fn radial_square() {
        for dim in 2..=7 {
            let f = |c: &[f64]| Ok(c[0] * c[0]);
            let mut p = vec![1.3];
            p.extend(std::iter::repeat_n(1.1, dim - 2));
            p.push(0.4);
            let l: f64 = laplacian_fd(CoordinateSystem::Hyperspherical, dim, f, &p, 1e-3).unwrap();
            assert!((l - 2.0 * dim as f64).abs() < 1e-6, "N={dim}: {l}");
        }
    }

    #[test]
    fn linear_functions_are_harmonic() {
        for dim in 2..=6 {
            for axis in 0..dim {
                let f = |c: &[f64]| Ok(to_cartesian_hs(&HypersphericalPoint::from_coords(c)?).coords()[axis]);
                let mut p = vec![1.7];
                p.extend((0..dim - 2).map(|i| 0.6 + 0.3 * i as f64));
                p.push(2.2);
                let l: f64 = laplacian_fd(CoordinateSystem::Hyperspherical, dim, f, &p, 1e-3).unwrap();
                assert!(l.abs() < 1e-6, "hs N={dim} x_{axis}: {l}");
            }
        }
        for dim in 3..=6 {
            for axis in 0..dim {
                let f = |c: &[f64]| Ok(to_cartesian_hc(&HypercylindricalPoint::from_coords(c)?).coords()[axis]);
                let mut p = vec![1.2];
                p.extend((0..dim - 3).map(|i| 0.9 + 0.4 * i as f64));
                p.push(4.0);
                p.push(-0.3);
                let l: f64 = laplacian_fd(CoordinateSystem::Hypercylindrical, dim, f, &p, 1e-3).unwrap();
                assert!(l.abs() < 1e-6, "hc N={dim} x_{axis}: {l}");
            }
        }
    }

    #[test]
    fn polar_reduction() {
        // r³ cos φ: (9 - 1) r cos φ
        let f = |c: &[f64]| Ok(c[0].powi(3) * c[1].cos());
        let p = [1.4, 0.8];
        let l: f64 = laplacian_fd(CoordinateSystem::Hyperspherical, 2, f, &p, 1e-3).unwrap();
        assert!((l - 8.0 * 1.4 * 0.8f64.cos()).abs() < 1e-7);
    }

    #[test]
    fn laplacian_is_linear() {
        let f = |c: &[f64]| Ok(c[0].powi(2) * c[1].cos());
        let g = |c: &[f64]| Ok((c[0] * c[2]).sin());
        let fg = |c: &[f64]| Ok(2.5 * f(c)? - 0.75 * g(c)?);
        let p = [1.1, 0.9, 2.0];
        let sys = CoordinateSystem::Hyperspherical;
        let lf: f64 = laplacian_fd(sys, 3, f, &p, 1e-3).unwrap();
        let lg: f64 = laplacian_fd(sys, 3, g, &p, 1e-3).unwrap();
        let lfg: f64 = laplacian_fd(sys, 3, fg, &p, 1e-3).unwrap();
        assert!((lfg - (2.5 * lf - 0.75 * lg)).abs() < 1e-8);
    }

    #[test]
    fn margin_is_enforced() {
        let f = |c: &[f64]| Ok(c[0]);
        let sys = CoordinateSystem::Hyperspherical;
        assert!(laplacian_fd::<f64, _>(sys, 3, f, &[1e-3, 1.0, 0.0], 1e-3).is_err());
        assert!(laplacian_fd::<f64, _>(sys, 3, f, &[1.0, 1e-3, 0.0], 1e-3).is_err());
        assert!(laplacian_fd::<f64, _>(sys, 3, f, &[1.0, 1.0], 1e-3).is_err());
    }

    #[test]
    fn cartesian_laplacian() {
        let f = |x: &[f64]| Ok(x[0] * x[0] + 3.0 * x[1] * x[1] - x[2]);
        let l: f64 = laplacian_fd_cartesian(f, &[0.3, -1.0, 2.0], 1e-3).unwrap();
        assert!((l - 8.0).abs() < 1e-7);
    }

    #[test]
    fn linspace_ends() {
        let g = linspace(0.3, PI - 0.3, 50);
        assert_eq!(g.len(), 50);
        assert_eq!(g[0], 0.3);
        assert_eq!(g[49], PI - 0.3);
    }
}
