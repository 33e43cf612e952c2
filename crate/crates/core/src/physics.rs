//! Separated modes of the generalized equation of mathematical physics.
//!
//! A mode with time dependence `exp(±iωt)` reduces the field equation to the
//! Helmholtz equation `∇²F + k²F = 0`, with `k²` given by [`dispersion`]. In
//! hyperspherical coordinates the separated solution is
//!
//! ```text
//! F = r^{1-N/2} Z_σ(kr) · e^{i(mφ - ωt)} · P_{q_{N-2}}^{|m|}(cos θ_{N-2})
//!     · Π_{n=3}^{N-1} P_{ν_n,λ_n}^{μ_n}(cos θ_{N-n})
//! ```
//!
//! and the hypercylindrical mode uses the same chain on `N-1` axes times
//! `e^{iKz}`, with total wavenumber `k² + K²`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::coords::{CartesianPoint, CoordinateSystem, HypercylindricalPoint, HypersphericalPoint};
use crate::error::{Error, Result};
use crate::legendre::{assoc_legendre_p, hyper_assoc_legendre, Branch, HyperLegendreParams};
use crate::specfun::{BesselKind, BesselOrder};
use crate::verify::SecondOrderOde;

/// Schema version written into every [`ModeSpec`] document.
pub const MODE_SCHEMA: u32 = 1;

/// Sign of an exponent `exp(±i·…)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Sign::Plus),
            "minus" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidSpec(format!("unknown sign `{other}`"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        })
    }
}

/// Coefficients of the time operator.
///
/// The original form is `∇²F = a F + (1/b) ∂_t F + (1/c²) ∂_t² F`; the extended
/// form is `∇²F = Σ_l A_l ∂_t^l F`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "lowercase")]
pub enum PhysicsCoefficients {
    Original { a: f64, inv_b: f64, inv_c2: f64 },
    Extended { coefficients: Vec<f64> },
}

impl PhysicsCoefficients {
    pub fn to_extended(&self) -> Vec<f64> {
        match self {
            PhysicsCoefficients::Original { a, inv_b, inv_c2 } => vec![*a, *inv_b, *inv_c2],
            PhysicsCoefficients::Extended { coefficients } => coefficients.clone(),
        }
    }
}

/// Squared radial wavenumber for time dependence `exp(sign·iωt)`.
///
/// `k² = -A_0 - Σ_{l≥1} A_l (sign·iω)^l`. With `sign = Minus` the original
/// form gives `k² = ω²/c² + iω/b - a`.
pub fn dispersion(c: &PhysicsCoefficients, omega: Complex64, sign: Sign) -> Result<Complex64> {
    match c {
        PhysicsCoefficients::Original { a, inv_b, inv_c2 } => {
            let s = Complex64::new(0.0, sign.value()) * omega;
            Ok(-(*a) - *inv_b * s - *inv_c2 * (s * s))
        }
        PhysicsCoefficients::Extended { coefficients } => {
            if coefficients.is_empty() {
                return Err(Error::InvalidSpec("empty coefficient list".into()));
            }
            let s = Complex64::new(0.0, sign.value()) * omega;
            let mut power = Complex64::new(1.0, 0.0);
            let mut total = Complex64::new(0.0, 0.0);
            for a in coefficients {
                total += *a * power;
                power *= s;
            }
            Ok(-total)
        }
    }
}

/// Order of the radial cylinder function for the first chain constant `q`.
///
/// Hyperspherical: `σ² = q(q+1) + (N/2 - 1)²`; hypercylindrical:
/// `σ² = q(q+1) + (N/2 - 3/2)²`.
pub fn bessel_order(system: CoordinateSystem, dim: usize, q: u32) -> Result<BesselOrder> {
    check_dim(system, dim)?;
    if q == 0 {
        return Err(Error::InvalidSpec("chain constants start at q = 1".into()));
    }
    let shift = match system {
        CoordinateSystem::Hyperspherical => dim as f64 / 2.0 - 1.0,
        CoordinateSystem::Hypercylindrical => dim as f64 / 2.0 - 1.5,
    };
    let q = q as f64;
    BesselOrder::new((q * (q + 1.0) + shift * shift).sqrt())
}

/// One latitude carried by a hyperspherical associated Legendre function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub n: usize,
    /// 1-based latitude index `θ_j`, `j = N - n`.
    pub latitude: usize,
    pub nu: f64,
    pub mu: f64,
    pub lambda: f64,
}

/// Separation parameters of every latitude.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Chain {
    pub entries: Vec<ChainEntry>,
    /// Degree of the ordinary associated Legendre function on the last
    /// latitude, absent when the system has no latitudes.
    pub last_degree: Option<u32>,
}

pub fn chain_params(system: CoordinateSystem, dim: usize, q_chain: &[u32]) -> Result<Chain> {
    check_dim(system, dim)?;
    let len = system.latitudes(dim);
    if q_chain.len() != len {
        return Err(Error::InvalidSpec(format!(
            "{system} dimension {dim} needs {len} chain constants, got {}",
            q_chain.len()
        )));
    }
    if q_chain.contains(&0) {
        return Err(Error::InvalidSpec("chain constants start at q = 1".into()));
    }
    let (first_n, offset) = match system {
        CoordinateSystem::Hyperspherical => (3, 2.0),
        CoordinateSystem::Hypercylindrical => (4, 3.0),
    };
    let entries = (first_n..dim)
        .map(|n| {
            let j = dim - n;
            let next = q_chain[j] as f64;
            ChainEntry {
                n,
                latitude: j,
                nu: q_chain[j - 1] as f64,
                mu: (next * (next + 1.0)).sqrt(),
                lambda: (n as f64 - offset) / 2.0,
            }
        })
        .collect();
    Ok(Chain {
        entries,
        last_degree: q_chain.last().copied(),
    })
}

fn check_dim(system: CoordinateSystem, dim: usize) -> Result<()> {
    if dim < system.min_dim() {
        return Err(Error::InvalidSpec(format!(
            "{system} coordinates need N >= {}, got {dim}",
            system.min_dim()
        )));
    }
    Ok(())
}

fn default_phi_sign() -> Sign {
    Sign::Plus
}

fn default_time_sign() -> Sign {
    Sign::Minus
}

fn default_schema() -> u32 {
    MODE_SCHEMA
}

/// One separated solution, serializable as a versioned JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModeSpec {
    #[serde(default = "default_schema")]
    pub schema: u32,
    pub system: CoordinateSystem,
    pub dim: usize,
    pub m: i64,
    pub q_chain: Vec<u32>,
    pub k: f64,
    /// Axial wavenumber, hypercylindrical only.
    #[serde(rename = "K", default)]
    pub axial_k: f64,
    /// Complex frequency as `[re, im]`.
    #[serde(default)]
    pub omega: Complex64,
    pub bessel_kind: BesselKind,
    #[serde(default = "default_phi_sign")]
    pub phi_sign: Sign,
    #[serde(default = "default_time_sign")]
    pub time_sign: Sign,
}

impl ModeSpec {
    /// Mode with `ω = 0`, `K = 0` and the default signs.
    pub fn new(system: CoordinateSystem, dim: usize, m: i64, q_chain: Vec<u32>, k: f64, bessel_kind: BesselKind) -> Self {
        ModeSpec {
            schema: MODE_SCHEMA,
            system,
            dim,
            m,
            q_chain,
            k,
            axial_k: 0.0,
            omega: Complex64::new(0.0, 0.0),
            bessel_kind,
            phi_sign: Sign::Plus,
            time_sign: Sign::Minus,
        }
    }

    pub fn with_axial(mut self, axial_k: f64) -> Self {
        self.axial_k = axial_k;
        self
    }

    pub fn with_omega(mut self, omega: Complex64) -> Self {
        self.omega = omega;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.schema != MODE_SCHEMA {
            return Err(Error::InvalidSpec(format!("unsupported schema {}", self.schema)));
        }
        chain_params(self.system, self.dim, &self.q_chain)?;
        if !(self.k.is_finite() && self.k > 0.0) {
            return Err(Error::InvalidSpec(format!("radial wavenumber k = {} must be > 0", self.k)));
        }
        if !self.axial_k.is_finite() {
            return Err(Error::InvalidSpec("axial wavenumber must be finite".into()));
        }
        if self.system == CoordinateSystem::Hyperspherical && self.axial_k != 0.0 {
            return Err(Error::InvalidSpec("axial wavenumber K applies to hypercylindrical modes only".into()));
        }
        if !(self.omega.re.is_finite() && self.omega.im.is_finite()) {
            return Err(Error::InvalidSpec("frequency must be finite".into()));
        }
        Ok(())
    }

    /// Bessel order of the radial factor; `|m|` when there are no latitudes.
    pub fn sigma(&self) -> Result<f64> {
        match self.q_chain.first() {
            Some(q) => Ok(bessel_order(self.system, self.dim, *q)?.value()),
            None => Ok(self.m.unsigned_abs() as f64),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let spec: ModeSpec = serde_json::from_str(s)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// `k² + K²`, the eigenvalue in `∇²F = -(k² + K²) F`.
pub fn wavenumber_squared(spec: &ModeSpec) -> f64 {
    spec.k * spec.k + spec.axial_k * spec.axial_k
}

/// The separate factors of a mode at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeFactors {
    /// `r^p Z_σ(kr)`.
    pub radial: f64,
    /// `exp(i(±mφ ± ωt))`.
    pub phase: Complex64,
    /// `exp(iKz)`; one for hyperspherical modes.
    pub axial: Complex64,
    /// Latitude factors in order `θ_1, θ_2, …`.
    pub latitudes: Vec<f64>,
}

impl ModeFactors {
    pub fn product(&self) -> Complex64 {
        let angular: f64 = self.latitudes.iter().product();
        self.phase * self.axial * (self.radial * angular)
    }
}

/// Evaluates each factor of `spec` at generalized coordinates `coords`
/// (system order) and time `t`.
pub fn mode_factors(spec: &ModeSpec, coords: &[f64], t: f64) -> Result<ModeFactors> {
    spec.validate()?;
    let dim = spec.dim;
    if coords.len() != dim {
        return Err(Error::InvalidPoint(format!("mode of dimension {dim} got {} coordinates", coords.len())));
    }
    if coords.iter().any(|c| !c.is_finite()) {
        return Err(Error::InvalidPoint("non-finite coordinate".into()));
    }
    let lat = spec.system.latitudes(dim);
    let r = coords[0];
    if !(r > 0.0) {
        return Err(Error::Singular(format!("mode evaluation needs r > 0, got {r}")));
    }
    let thetas = &coords[1..1 + lat];
    for (i, th) in thetas.iter().enumerate() {
        if !(*th > 0.0 && *th < PI) {
            return Err(Error::Singular(format!("latitude θ_{} = {th} not in (0, π)", i + 1)));
        }
    }
    let phi = coords[1 + lat];

    let power = match spec.system {
        CoordinateSystem::Hyperspherical => 1.0 - dim as f64 / 2.0,
        CoordinateSystem::Hypercylindrical => (3.0 - dim as f64) / 2.0,
    };
    let radial = r.powf(power) * spec.bessel_kind.eval(spec.sigma()?, spec.k * r)?;

    let angle = spec.phi_sign.value() * spec.m as f64 * phi;
    let phase = (Complex64::new(0.0, angle) + Complex64::new(0.0, spec.time_sign.value()) * spec.omega * t).exp();

    let axial = match spec.system {
        CoordinateSystem::Hyperspherical => Complex64::new(1.0, 0.0),
        CoordinateSystem::Hypercylindrical => Complex64::new(0.0, spec.axial_k * coords[dim - 1]).exp(),
    };

    let chain = chain_params(spec.system, dim, &spec.q_chain)?;
    let mut latitudes = vec![0.0; lat];
    for e in &chain.entries {
        let p = HyperLegendreParams::new(e.nu, e.mu, e.lambda, Branch::Plus);
        latitudes[e.latitude - 1] = hyper_assoc_legendre(&p, thetas[e.latitude - 1].cos())?;
    }
    if let Some(q) = chain.last_degree {
        let order = spec.m.unsigned_abs() as f64;
        latitudes[lat - 1] = assoc_legendre_p(q as f64, order, thetas[lat - 1].cos())?;
    }

    Ok(ModeFactors { radial, phase, axial, latitudes })
}

/// Value of the mode at generalized coordinates `coords` and time `t`.
pub fn mode_eval(spec: &ModeSpec, coords: &[f64], t: f64) -> Result<Complex64> {
    Ok(mode_factors(spec, coords, t)?.product())
}

pub fn mode_eval_hs(spec: &ModeSpec, p: &HypersphericalPoint, t: f64) -> Result<Complex64> {
    if spec.system != CoordinateSystem::Hyperspherical {
        return Err(Error::InvalidSpec("hyperspherical point for a hypercylindrical mode".into()));
    }
    mode_eval(spec, &p.coords(), t)
}

pub fn mode_eval_hc(spec: &ModeSpec, p: &HypercylindricalPoint, t: f64) -> Result<Complex64> {
    if spec.system != CoordinateSystem::Hypercylindrical {
        return Err(Error::InvalidSpec("hypercylindrical point for a hyperspherical mode".into()));
    }
    mode_eval(spec, &p.coords(), t)
}

/// Radial equation `R'' + (N-1)/r R' + [k² - q(q+1)/r²] R = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialOde {
    pub dim: usize,
    pub q: u32,
    pub k: f64,
}

impl SecondOrderOde for RadialOde {
    fn coefficients(&self, r: f64) -> (f64, f64, f64) {
        let q = self.q as f64;
        (1.0, (self.dim as f64 - 1.0) / r, self.k * self.k - q * (q + 1.0) / (r * r))
    }

    fn domain(&self) -> (f64, f64) {
        (0.0, f64::INFINITY)
    }
}

/// `r^{1-N/2} Z_σ(kr)` for the hyperspherical radial equation.
pub fn radial_function(kind: BesselKind, dim: usize, q: u32, k: f64, r: f64) -> Result<f64> {
    let sigma = bessel_order(CoordinateSystem::Hyperspherical, dim, q)?.value();
    Ok(r.powf(1.0 - dim as f64 / 2.0) * kind.eval(sigma, k * r)?)
}

/// `Π C_n cos(k_n x_n - α_n)`.
pub fn cartesian_mode(k: &[f64], phases: &[f64], amplitudes: &[f64], x: &CartesianPoint) -> Result<f64> {
    let n = x.dim();
    if k.len() != n || phases.len() != n || amplitudes.len() != n {
        return Err(Error::InvalidSpec(format!(
            "cartesian mode needs {n} wavenumbers, phases and amplitudes"
        )));
    }
    Ok(x
        .coords()
        .iter()
        .zip(k)
        .zip(phases)
        .zip(amplitudes)
        .map(|(((xi, ki), ai), ci)| ci * (ki * xi - ai).cos())
        .product())
}

/// `Σ k_n²`.
pub fn cartesian_wavenumber_squared(k: &[f64]) -> f64 {
    k.iter().map(|v| v * v).sum()
}
