//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check or file output
//! fails, 2 for usage and domain errors.

use std::f64::consts::PI;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::coords::CoordinateSystem;
use crate::error::{Error, Result};
use crate::legendre::{
    assoc_legendre_p, hyper_assoc_legendre, hyper_assoc_table, hyper_legendre, legendre_p,
    HyperLegendreParams, TableRow,
};
use crate::physics::{mode_eval, ModeSpec, Sign, MODE_SCHEMA};
use crate::specfun::{bessel_j, bessel_y, hyp2f1, spherical_bessel, BesselKind, Hyp2F1Call, SphericalKind};
use crate::verify::{linspace, run_suite, Suite, SuiteOptions, SuiteReport};

#[derive(Debug, Parser)]
#[command(name = "hypersph", version, about = "Hyperspherical harmonics, Legendre hierarchy and Helmholtz modes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function at one point.
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Tabulate both branches of the hyperspherical associated Legendre function.
    Table(TableArgs),
    /// Run acceptance checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum EvalTarget {
    /// Gauss hypergeometric function F(α, β; γ; z).
    Hyp2f1 {
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        beta: f64,
        #[arg(long, allow_hyphen_values = true)]
        gamma: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
    },
    /// Cylinder functions J, Y or spherical j, y.
    Bessel {
        /// J, Y (cylinder) or j, y (spherical, integer order).
        #[arg(long)]
        kind: String,
        #[arg(long)]
        order: f64,
        #[arg(long)]
        x: f64,
    },
    /// Legendre function P_ν(x).
    Legendre {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Associated Legendre function P_ν^μ(x).
    Assoc {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Hyperspherical Legendre function P_{ν,λ}(x).
    Hyper {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Hyperspherical associated Legendre function P_{ν,λ}^μ(x).
    HyperAssoc {
        #[arg(long, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        mu: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, default_value = "plus")]
        branch: String,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Separated Helmholtz mode; prints the real and imaginary parts.
    Mode(Box<ModeArgs>),
}

#[derive(Debug, Args)]
pub struct ModeArgs {
    /// ModeSpec JSON document; replaces the individual mode flags.
    #[arg(long, conflicts_with_all = ["system", "dim", "chain", "m", "k", "axial_k", "omega", "kind"])]
    pub spec: Option<PathBuf>,
    /// hs or hc.
    #[arg(long)]
    pub system: Option<String>,
    #[arg(long)]
    pub dim: Option<usize>,
    /// Comma-separated chain constants q_1,q_2,…
    #[arg(long, allow_hyphen_values = true)]
    pub chain: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub m: Option<i64>,
    #[arg(long)]
    pub k: Option<f64>,
    /// Axial wavenumber (hypercylindrical).
    #[arg(long = "K", allow_hyphen_values = true)]
    pub axial_k: Option<f64>,
    /// Frequency `re` or `re,im`.
    #[arg(long, allow_hyphen_values = true)]
    pub omega: Option<String>,
    /// Radial function kind, J or Y.
    #[arg(long)]
    pub kind: Option<String>,
    #[arg(long, default_value = "plus")]
    pub phi_sign: String,
    #[arg(long, default_value = "minus")]
    pub time_sign: String,
    /// Generalized coordinates in system order, comma-separated.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub t: f64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// `fig0`: ν = q, μ = √(s(s+1)), λ = 1/2 on [0.3, π-0.3] with 201 rows.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub q: u32,
    #[arg(long, default_value_t = 1)]
    pub s: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub nu: Option<f64>,
    #[arg(long)]
    pub mu: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    /// First angle.
    #[arg(long)]
    pub start: Option<f64>,
    /// Last angle.
    #[arg(long)]
    pub stop: Option<f64>,
    #[arg(long)]
    pub count: Option<usize>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// coords, specfun, legendre, physics or all.
    pub suite: String,
    /// Print the aggregated report as JSON.
    #[arg(long)]
    pub json: bool,
    /// Only run the negative/positive parameter controls.
    #[arg(long)]
    pub erratum_check: bool,
    /// Dimension range `lo..hi` (inclusive) for the coordinate checks.
    #[arg(long)]
    pub dims: Option<String>,
}

/// Parses arguments from the environment and runs the command.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    ExitCode::from(run(cli, &mut out))
}

/// Runs a parsed command, writing results to `out`. Returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> u8 {
    let result = match cli.command {
        Command::Eval { target } => eval(target).and_then(|line| {
            writeln!(out, "{line}")?;
            Ok(0)
        }),
        Command::Table(args) => table(args, out),
        Command::Verify(args) => verify(args, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Io(_) | Error::Csv(_) => 1,
                _ => 2,
            }
        }
    }
}

/// Formats with 15 significant digits, dropping trailing zeros.
pub fn format_value(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{}", if v == 0.0 { 0.0 } else { v });
    }
    let sci = format!("{v:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        trim_zeros(&format!("{v:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

fn eval(target: EvalTarget) -> Result<String> {
    let v = match target {
        EvalTarget::Hyp2f1 { alpha, beta, gamma, z } => hyp2f1(Hyp2F1Call::new(alpha, beta, gamma, z))?,
        EvalTarget::Bessel { kind, order, x } => match kind.as_str() {
            "J" => bessel_j(order, x)?,
            "Y" => bessel_y(order, x)?,
            "j" | "y" => {
                if !(order >= 0.0 && order.fract() == 0.0) {
                    return Err(Error::OutOfDomain(format!("spherical order {order} must be a non-negative integer")));
                }
                let k = if kind == "j" { SphericalKind::J } else { SphericalKind::Y };
                spherical_bessel(k, order as u32, x)?
            }
            other => return Err(Error::InvalidSpec(format!("unknown Bessel kind `{other}`"))),
        },
        EvalTarget::Legendre { nu, x } => legendre_p(nu, x)?,
        EvalTarget::Assoc { nu, mu, x } => assoc_legendre_p(nu, mu, x)?,
        EvalTarget::Hyper { nu, lambda, x } => hyper_legendre(nu, lambda, x)?,
        EvalTarget::HyperAssoc { nu, mu, lambda, branch, x } => {
            let p = HyperLegendreParams::new(nu, mu, lambda, branch.parse()?);
            hyper_assoc_legendre(&p, x)?
        }
        EvalTarget::Mode(args) => {
            let c = mode(*args)?;
            return Ok(format!("{} {}", format_value(c.re), format_value(c.im)));
        }
    };
    Ok(format_value(v))
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::InvalidSpec(format!("cannot parse `{p}` in {what}")))
        })
        .collect()
}

fn required<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::InvalidSpec(format!("missing --{flag} (or pass --spec)")))
}

/// Builds the ModeSpec described by the flags.
pub fn mode_spec_from_args(args: &ModeArgs) -> Result<ModeSpec> {
    if let Some(path) = &args.spec {
        return ModeSpec::from_json(&fs::read_to_string(path)?);
    }
    let system: CoordinateSystem = required(args.system.as_deref(), "system")?.parse()?;
    let omega = match args.omega.as_deref() {
        None => Complex64::new(0.0, 0.0),
        Some(s) => match parse_list::<f64>(s, "--omega")?.as_slice() {
            [re] => Complex64::new(*re, 0.0),
            [re, im] => Complex64::new(*re, *im),
            _ => return Err(Error::InvalidSpec("--omega takes `re` or `re,im`".into())),
        },
    };
    let kind: BesselKind = required(args.kind.as_deref(), "kind")?.parse()?;
    let spec = ModeSpec {
        schema: MODE_SCHEMA,
        system,
        dim: required(args.dim, "dim")?,
        m: required(args.m, "m")?,
        q_chain: parse_list(args.chain.as_deref().unwrap_or(""), "--chain")?,
        k: required(args.k, "k")?,
        axial_k: args.axial_k.unwrap_or(0.0),
        omega,
        bessel_kind: kind,
        phi_sign: args.phi_sign.parse::<Sign>()?,
        time_sign: args.time_sign.parse::<Sign>()?,
    };
    spec.validate()?;
    Ok(spec)
}

fn mode(args: ModeArgs) -> Result<Complex64> {
    let spec = mode_spec_from_args(&args)?;
    let point: Vec<f64> = parse_list(&args.point, "--point")?;
    mode_eval(&spec, &point, args.t)
}

/// Resolved table request.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRequest {
    pub nu: f64,
    pub mu: f64,
    pub lambda: f64,
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl TableRequest {
    pub fn from_args(a: &TableArgs) -> Result<Self> {
        let req = match a.preset.as_deref() {
            Some("fig0") => {
                if a.q == 0 || a.s == 0 {
                    return Err(Error::InvalidSpec("fig0 needs q, s >= 1".into()));
                }
                let s = a.s as f64;
                TableRequest {
                    nu: a.q as f64,
                    mu: (s * (s + 1.0)).sqrt(),
                    lambda: 0.5,
                    start: a.start.unwrap_or(0.3),
                    stop: a.stop.unwrap_or(PI - 0.3),
                    count: a.count.unwrap_or(201),
                }
            }
            Some(other) => return Err(Error::InvalidSpec(format!("unknown preset `{other}`"))),
            None => TableRequest {
                nu: required(a.nu, "nu")?,
                mu: required(a.mu, "mu")?,
                lambda: required(a.lambda, "lambda")?,
                start: required(a.start, "start")?,
                stop: required(a.stop, "stop")?,
                count: required(a.count, "count")?,
            },
        };
        req.validate()?;
        Ok(req)
    }

    pub fn validate(&self) -> Result<()> {
        if self.count < 2 {
            return Err(Error::InvalidSpec(format!("count {} must be >= 2", self.count)));
        }
        for end in [self.start, self.stop] {
            if !(end > 0.0 && end < PI) {
                return Err(Error::OutOfDomain(format!("angle {end} outside (0, π)")));
            }
        }
        if !(self.mu >= 0.0) {
            return Err(Error::OutOfDomain(format!("order μ = {} must be >= 0", self.mu)));
        }
        Ok(())
    }

    pub fn rows(&self) -> Result<Vec<TableRow>> {
        hyper_assoc_table(self.nu, self.mu, self.lambda, &linspace(self.start, self.stop, self.count))
    }
}

/// Writes rows as CSV with header `x,value_plus,value_minus`.
pub fn write_csv<W: Write>(rows: &[TableRow], w: W) -> Result<()> {
    let mut writer = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
    for row in rows {
        writer.serialize(row)?;
    }
    writer.flush()?;
    Ok(())
}

fn table(args: TableArgs, out: &mut dyn Write) -> Result<u8> {
    let rows = TableRequest::from_args(&args)?.rows()?;
    match &args.out {
        Some(path) => write_csv(&rows, fs::File::create(path)?)?,
        None => write_csv(&rows, out)?,
    }
    Ok(0)
}

fn parse_dims(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidSpec(format!("--dims expects `lo..hi`, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if lo < 2 || hi < lo {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn verify(args: VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let suite: Suite = args.suite.parse()?;
    if args.erratum_check && !matches!(suite, Suite::Legendre | Suite::All) {
        return Err(Error::InvalidSpec("--erratum-check belongs to the legendre suite".into()));
    }
    let opts = SuiteOptions {
        dims: args.dims.as_deref().map(parse_dims).transpose()?,
        erratum_check: args.erratum_check,
    };
    let report = run_suite(suite, &opts);
    if args.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
    } else {
        write_report(&report, out)?;
    }
    if !report.pass {
        for check in report.checks.iter().filter(|c| !c.pass) {
            eprintln!("check {} ({}) failed: {}", check.id, check.name, check.failures().join("; "));
        }
    }
    Ok(if report.pass { 0 } else { 1 })
}

/// Human-readable summary, one line per check and item.
pub fn write_report(report: &SuiteReport, out: &mut dyn Write) -> Result<()> {
    for check in &report.checks {
        let verdict = if check.pass { "PASS" } else { "FAIL" };
        writeln!(out, "{verdict} [{:>2}] {} ({:.3} s)", check.id, check.name, check.elapsed_s)?;
        for item in &check.items {
            let rel = match item.expect {
                crate::verify::suite::Expect::Below => "<=",
                crate::verify::suite::Expect::Above => ">",
            };
            let mark = if item.pass { "ok " } else { "BAD" };
            writeln!(out, "    {mark} {}: {:.3e} {rel} {:.1e}", item.label, item.value, item.bound)?;
        }
    }
    writeln!(out, "{} {}", report.suite, if report.pass { "PASS" } else { "FAIL" })?;
    Ok(())
}
