//! Hyperspherical and hypercylindrical coordinates in N dimensions.
//!
//! Hyperspherical coordinates are one radius `r`, the latitudes
//! `θ_1 … θ_{N-2}` in `[0, π]` and one longitude `φ` in `[0, 2π)`:
//!
//! ```text
//! x_1     = r cos θ_1
//! x_n     = r sin θ_1 … sin θ_{n-1} cos θ_n
//! x_{N-1} = r sin θ_1 … sin θ_{N-2} cos φ
//! x_N     = r sin θ_1 … sin θ_{N-2} sin φ
//! ```
//!
//! Hypercylindrical coordinates use the same chain on the first `N-1`
//! Cartesian axes (with `N-3` latitudes and `r` the distance to the axis) and
//! keep `z = x_N` as a Cartesian coordinate.
//!
//! Both systems are orthogonal; a point exposes its coordinate base vectors,
//! scale factors and the square root of the metric determinant.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which curvilinear system a set of generalized coordinates belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoordinateSystem {
    Hyperspherical,
    Hypercylindrical,
}

impl CoordinateSystem {
    /// Smallest dimension the system is defined for.
    pub fn min_dim(self) -> usize {
        match self {
            CoordinateSystem::Hyperspherical => 2,
            CoordinateSystem::Hypercylindrical => 3,
        }
    }

    /// Number of latitudes in dimension `dim`.
    pub fn latitudes(self, dim: usize) -> usize {
        dim.saturating_sub(self.min_dim())
    }
}

impl FromStr for CoordinateSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hs" | "hyperspherical" => Ok(CoordinateSystem::Hyperspherical),
            "hc" | "hypercylindrical" => Ok(CoordinateSystem::Hypercylindrical),
            other => Err(Error::InvalidSpec(format!("unknown coordinate system `{other}`"))),
        }
    }
}

impl fmt::Display for CoordinateSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoordinateSystem::Hyperspherical => f.write_str("hyperspherical"),
            CoordinateSystem::Hypercylindrical => f.write_str("hypercylindrical"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CartesianPoint {
    coords: Vec<f64>,
}

impl CartesianPoint {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint(format!(
                "cartesian dimension {} < 2",
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint("non-finite cartesian coordinate".into()));
        }
        Ok(CartesianPoint { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypersphericalPoint {
    r: f64,
    thetas: Vec<f64>,
    phi: f64,
}

impl HypersphericalPoint {
    /// Builds a point of dimension `thetas.len() + 2`, rejecting values outside
    /// the canonical ranges.
    pub fn new(r: f64, thetas: Vec<f64>, phi: f64) -> Result<Self> {
        check_radius(r)?;
        check_latitudes(&thetas)?;
        check_longitude(phi)?;
        Ok(HypersphericalPoint { r, thetas, phi })
    }

    /// Builds a point from generalized coordinates `[r, θ_1, …, θ_{N-2}, φ]`.
    /// The longitude is wrapped into `[0, 2π)`.
    pub fn from_coords(coords: &[f64]) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::InvalidPoint("hyperspherical point needs N >= 2".into()));
        }
        let n = coords.len();
        Self::new(coords[0], coords[1..n - 1].to_vec(), wrap_longitude(coords[n - 1]))
    }

    pub fn dim(&self) -> usize {
        self.thetas.len() + 2
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Generalized coordinates in system order `[r, θ_1, …, θ_{N-2}, φ]`.
    pub fn coords(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dim());
        out.push(self.r);
        out.extend_from_slice(&self.thetas);
        out.push(self.phi);
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct HypercylindricalPoint {
    r: f64,
    thetas: Vec<f64>,
    phi: f64,
    z: f64,
}

impl HypercylindricalPoint {
    /// Builds a point of dimension `thetas.len() + 3`.
    pub fn new(r: f64, thetas: Vec<f64>, phi: f64, z: f64) -> Result<Self> {
        check_radius(r)?;
        check_latitudes(&thetas)?;
        check_longitude(phi)?;
        if !z.is_finite() {
            return Err(Error::InvalidPoint("axial coordinate must be finite".into()));
        }
        Ok(HypercylindricalPoint { r, thetas, phi, z })
    }

    /// Builds a point from generalized coordinates `[r, θ_1, …, θ_{N-3}, φ, z]`.
    /// The longitude is wrapped into `[0, 2π)`.
    pub fn from_coords(coords: &[f64]) -> Result<Self> {
        if coords.len() < 3 {
            return Err(Error::InvalidPoint("hypercylindrical point needs N >= 3".into()));
        }
        let n = coords.len();
        Self::new(
            coords[0],
            coords[1..n - 2].to_vec(),
            wrap_longitude(coords[n - 2]),
            coords[n - 1],
        )
    }

    pub fn dim(&self) -> usize {
        self.thetas.len() + 3
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn thetas(&self) -> &[f64] {
        &self.thetas
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    /// Generalized coordinates in system order `[r, θ_1, …, θ_{N-3}, φ, z]`.
    pub fn coords(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.dim());
        out.push(self.r);
        out.extend_from_slice(&self.thetas);
        out.push(self.phi);
        out.push(self.z);
        out
    }
}

/// Coordinate base vectors `∂x/∂u_i`, Cartesian components, one per coordinate
/// in system order.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    vectors: Vec<Vec<f64>>,
}

impl Frame {
    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn norms(&self) -> Vec<f64> {
        self.vectors.iter().map(|v| norm(v)).collect()
    }

    /// Largest `|e_i · e_j|` over distinct pairs, divided by `|e_i| |e_j|`.
    /// Pairs containing a zero vector are skipped.
    pub fn max_normalized_dot(&self) -> f64 {
        let norms = self.norms();
        let mut worst = 0.0f64;
        for i in 0..self.vectors.len() {
            for j in (i + 1)..self.vectors.len() {
                let scale = norms[i] * norms[j];
                if scale == 0.0 {
                    continue;
                }
                worst = worst.max(dot(&self.vectors[i], &self.vectors[j]).abs() / scale);
            }
        }
        worst
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScaleFactors {
    h: Vec<f64>,
}

impl ScaleFactors {
    pub fn values(&self) -> &[f64] {
        &self.h
    }

    /// `|g|^{1/2}`, the product of all scale factors.
    pub fn product(&self) -> f64 {
        self.h.iter().product()
    }
}

pub fn to_cartesian_hs(p: &HypersphericalPoint) -> CartesianPoint {
    CartesianPoint {
        coords: chain_to_cartesian(p.r, &p.thetas, p.phi),
    }
}

/// Inverse of [`to_cartesian_hs`]. The zero vector maps to `r = 0` with all
/// angles zero.
pub fn from_cartesian_hs(x: &CartesianPoint) -> HypersphericalPoint {
    let (r, thetas, phi) = chain_from_cartesian(&x.coords);
    HypersphericalPoint { r, thetas, phi }
}

pub fn to_cartesian_hc(p: &HypercylindricalPoint) -> CartesianPoint {
    let mut coords = chain_to_cartesian(p.r, &p.thetas, p.phi);
    coords.push(p.z);
    CartesianPoint { coords }
}

/// Inverse of [`to_cartesian_hc`]; `z = x_N` and `r` is the distance to the
/// axis. A zero transverse part gives `r = 0` with all angles zero.
pub fn from_cartesian_hc(x: &CartesianPoint) -> Result<HypercylindricalPoint> {
    let n = x.dim();
    if n < 3 {
        return Err(Error::InvalidPoint(format!(
            "hypercylindrical coordinates need N >= 3, got {n}"
        )));
    }
    let (r, thetas, phi) = chain_from_cartesian(&x.coords[..n - 1]);
    Ok(HypercylindricalPoint {
        r,
        thetas,
        phi,
        z: x.coords[n - 1],
    })
}

pub fn base_vectors_hs(p: &HypersphericalPoint) -> Frame {
    Frame {
        vectors: chain_base_vectors(p.r, &p.thetas, p.phi),
    }
}

pub fn base_vectors_hc(p: &HypercylindricalPoint) -> Frame {
    let n = p.dim();
    let mut vectors: Vec<Vec<f64>> = chain_base_vectors(p.r, &p.thetas, p.phi)
        .into_iter()
        .map(|mut v| {
            v.push(0.0);
            v
        })
        .collect();
    let mut ez = vec![0.0; n];
    ez[n - 1] = 1.0;
    vectors.push(ez);
    Frame { vectors }
}

/// `{1, r, r sin θ_1, …, r sin θ_1 … sin θ_{N-2}}`.
pub fn scale_factors_hs(p: &HypersphericalPoint) -> ScaleFactors {
    ScaleFactors {
        h: chain_scale_factors(p.r, &p.thetas),
    }
}

/// `{1, r, r sin θ_1, …, r sin θ_1 … sin θ_{N-3}, 1}`.
pub fn scale_factors_hc(p: &HypercylindricalPoint) -> ScaleFactors {
    let mut h = chain_scale_factors(p.r, &p.thetas);
    h.push(1.0);
    ScaleFactors { h }
}

pub fn metric_det_sqrt_hs(p: &HypersphericalPoint) -> f64 {
    scale_factors_hs(p).product()
}

pub fn metric_det_sqrt_hc(p: &HypercylindricalPoint) -> f64 {
    scale_factors_hc(p).product()
}

/// Wraps an angle into `[0, 2π)`.
pub fn wrap_longitude(phi: f64) -> f64 {
    let w = phi.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if w >= TAU {
        0.0
    } else {
        w + 0.0
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::InvalidPoint(format!("radius {r} must be finite and >= 0")));
    }
    Ok(())
}

fn check_latitudes(thetas: &[f64]) -> Result<()> {
    for (i, t) in thetas.iter().enumerate() {
        if !(0.0..=PI).contains(t) {
            return Err(Error::InvalidPoint(format!(
                "latitude θ_{} = {t} outside [0, π]",
                i + 1
            )));
        }
    }
    Ok(())
}

fn check_longitude(phi: f64) -> Result<()> {
    if !(0.0..TAU).contains(&phi) {
        return Err(Error::InvalidPoint(format!("longitude {phi} outside [0, 2π)")));
    }
    Ok(())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Trailing factor of component `i` in the sine chain: `cos θ_i` for a
/// latitude slot, `cos φ`/`sin φ` for the last two.
fn chain_tail(thetas: &[f64], phi: f64, i: usize) -> f64 {
    let l = thetas.len();
    if i < l {
        thetas[i].cos()
    } else if i == l {
        phi.cos()
    } else {
        phi.sin()
    }
}

fn chain_to_cartesian(r: f64, thetas: &[f64], phi: f64) -> Vec<f64> {
    let n = thetas.len() + 2;
    let mut out = Vec::with_capacity(n);
    let mut s = r;
    for i in 0..n {
        out.push(s * chain_tail(thetas, phi, i));
        if i < thetas.len() {
            s *= thetas[i].sin();
        }
    }
    out
}

fn chain_from_cartesian(x: &[f64]) -> (f64, Vec<f64>, f64) {
    let n = x.len();
    // suffix[i] = x_i^2 + ... + x_{n-1}^2
    let mut suffix = vec![0.0; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + x[i] * x[i];
    }
    let r = suffix[0].sqrt();
    if r == 0.0 {
        return (0.0, vec![0.0; n - 2], 0.0);
    }
    let thetas = (0..n - 2)
        .map(|i| {
            let rest = suffix[i + 1].sqrt();
            if rest == 0.0 && x[i] == 0.0 {
                0.0
            } else {
                rest.atan2(x[i])
            }
        })
        .collect();
    let (a, b) = (x[n - 2], x[n - 1]);
    let phi = if a == 0.0 && b == 0.0 {
        0.0
    } else {
        wrap_longitude(b.atan2(a))
    };
    (r, thetas, phi)
}

fn chain_base_vectors(r: f64, thetas: &[f64], phi: f64) -> Vec<Vec<f64>> {
    let l = thetas.len();
    let n = l + 2;
    let sines: Vec<f64> = thetas.iter().map(|t| t.sin()).collect();
    let cosines: Vec<f64> = thetas.iter().map(|t| t.cos()).collect();

    let mut vectors = Vec::with_capacity(n);
    vectors.push(chain_to_cartesian(1.0, thetas, phi));

    // latitude j: components i < j vanish, i = j carries -sin θ_j, and i > j
    // have sin θ_j replaced by cos θ_j in their product
    for j in 0..l {
        let mut v = vec![0.0; n];
        let lead: f64 = r * sines[..j].iter().product::<f64>();
        v[j] = -lead * sines[j];
        let mut s = lead * cosines[j];
        for (i, slot) in v.iter_mut().enumerate().skip(j + 1) {
            *slot = s * chain_tail(thetas, phi, i);
            if i < l {
                s *= sines[i];
            }
        }
        vectors.push(v);
    }

    let mut v = vec![0.0; n];
    let lead: f64 = r * sines.iter().product::<f64>();
    v[n - 2] = -lead * phi.sin();
    v[n - 1] = lead * phi.cos();
    vectors.push(v);
    vectors
}

fn chain_scale_factors(r: f64, thetas: &[f64]) -> Vec<f64> {
    let mut h = Vec::with_capacity(thetas.len() + 2);
    h.push(1.0);
    let mut s = r;
    h.push(s);
    for t in thetas {
        s *= t.sin();
        h.push(s);
    }
    h
}
