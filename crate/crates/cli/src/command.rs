//! Argument parsing and dispatch for the `mgamma` binary.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mellin_gamma::axioms::{evaluate_candidate, AxiomReport, CandidateDensity, DEFAULT_VERDICT_TOLERANCE};
use mellin_gamma::bm::{bm_transport, DEFAULT_TERMS};
use mellin_gamma::cocycle::{cocycle_residual, CocycleKind, ShiftPair};
use mellin_gamma::polar::{
    gamma_identity_check, mc_ball_volume, mc_gauge_exponential, ExponentialOptions, HomogeneousGauge, McConfig,
    DEFAULT_MAX_DIM,
};
use mellin_gamma::radial::{self, coefficient, integrate_functional, mellin_transform, volume_table};
use mellin_gamma::{Dimension, QuadratureConfig};
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::format::{to_csv, to_json, to_plain, Cell};
use crate::knots::load_test_function;
use crate::selftest::{run_selftest, SelftestOptions};

/// Seed used when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Parser)]
#[command(
    name = "mgamma",
    version,
    about = "Continuous-dimension radial integration: volumes, Mellin transforms, shift cocycles and gauge checks"
)]
pub struct Cli {
    /// Output encoding (default: json, or csv for tables).
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Seed for Monte Carlo estimates.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Unit-ball volume V(x), coefficient C(x) and sphere area at one x or over a range.
    Volume(VolumeArgs),
    /// Density C(x) u^{x/2-1} of the radial measure.
    Density(DensityArgs),
    /// Radial integral of a piecewise-linear profile.
    Integrate(IntegrateArgs),
    /// Mellin transform of a piecewise-linear profile.
    Mellin(MellinArgs),
    /// Check a candidate density against scaling covariance and Gaussian normalization.
    Axioms(AxiomsArgs),
    /// Dimension-shift transports and their cocycle residual.
    Cocycle(CocycleArgs),
    /// Ball-volume transport by the Euler-product route.
    Bm(BmArgs),
    /// Monte Carlo checks for homogeneous gauges.
    Polar(PolarArgs),
    /// Run every invariant suite and report pass/fail.
    Selftest(SelftestArgs),
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    /// Single dimension.
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["from", "to", "step"])]
    pub x: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["to", "step"])]
    pub from: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["from", "step"])]
    pub to: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["from", "to"])]
    pub step: Option<f64>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["u_from", "u_to", "u_step"])]
    pub u: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["u_to", "u_step"])]
    pub u_from: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["u_from", "u_step"])]
    pub u_to: Option<f64>,
    #[arg(long, allow_negative_numbers = true, requires_all = ["u_from", "u_to"])]
    pub u_step: Option<f64>,
}

#[derive(Debug, Args)]
pub struct QuadratureArgs {
    #[arg(long, default_value_t = 1e-10)]
    pub rel_tol: f64,
    #[arg(long, default_value_t = 1e-14)]
    pub abs_tol: f64,
    #[arg(long, default_value_t = 2000)]
    pub max_subdivisions: usize,
    /// Integrate in u directly instead of t = ln u.
    #[arg(long)]
    pub no_log_substitution: bool,
}

impl QuadratureArgs {
    fn config(&self) -> QuadratureConfig {
        QuadratureConfig {
            rel_tol: self.rel_tol,
            abs_tol: self.abs_tol,
            max_subdivisions: self.max_subdivisions,
            log_substitution: !self.no_log_substitution,
        }
    }
}

#[derive(Debug, Args)]
pub struct IntegrateArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// Knot CSV with header `u,phi`; `-` reads standard input.
    #[arg(long)]
    pub knots: String,
    #[command(flatten)]
    pub quad: QuadratureArgs,
}

#[derive(Debug, Args)]
pub struct MellinArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    /// Knot CSV with header `u,phi`; `-` reads standard input.
    #[arg(long)]
    pub knots: String,
    #[command(flatten)]
    pub quad: QuadratureArgs,
}

#[derive(Debug, Args)]
pub struct AxiomsArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    /// classified | exponential | power:C,A | logmod:AMP | scaled:F | all
    #[arg(long, default_value = "classified")]
    pub candidate: String,
    /// Residual above which a check fails.
    #[arg(long, default_value_t = DEFAULT_VERDICT_TOLERANCE)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    #[value(name = "R")]
    R,
    #[value(name = "T")]
    T,
    #[value(name = "Ta")]
    Ta,
}

#[derive(Debug, Args)]
pub struct CocycleArgs {
    #[arg(long, value_enum)]
    pub kind: KindArg,
    /// Sublevel height for kind Ta.
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    /// Second shift; when given, the cocycle residual is reported.
    #[arg(long, allow_negative_numbers = true)]
    pub s: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BmArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    pub n: u64,
    /// Also print the closed-form transport and the relative gap.
    #[arg(long)]
    pub compare: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolarCheck {
    GammaIdentity,
    Volume,
    Exponential,
}

#[derive(Debug, Args)]
pub struct PolarArgs {
    /// euclidean:D or diagpow:B1,B2,...
    #[arg(long, default_value = "euclidean:2")]
    pub gauge: String,
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
    #[arg(long, value_enum, default_value = "gamma-identity")]
    pub check: PolarCheck,
    /// Independent sample streams (fixed so output does not depend on thread count).
    #[arg(long, default_value_t = 64)]
    pub partitions: u64,
    /// Half-width of the truncation cube for exponential integrals.
    #[arg(long)]
    pub truncation_radius: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    /// Samples per Monte Carlo invariant.
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Compute(mellin_gamma::Error),
}

impl From<mellin_gamma::Error> for Failure {
    fn from(e: mellin_gamma::Error) -> Self {
        Failure::Compute(e)
    }
}

/// Named columns with one or more rows.
struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    /// Print a lone row as an object rather than a one-element array.
    single: bool,
    default_format: OutputFormat,
}

impl Table {
    fn one(columns: Vec<&'static str>, row: Vec<Cell>) -> Self {
        Table {
            columns,
            rows: vec![row],
            single: true,
            default_format: OutputFormat::Json,
        }
    }

    fn many(columns: Vec<&'static str>, rows: Vec<Vec<Cell>>) -> Self {
        Table {
            columns,
            rows,
            single: false,
            default_format: OutputFormat::Csv,
        }
    }

    fn render(&self, format: Option<OutputFormat>) -> String {
        match format.unwrap_or(self.default_format) {
            OutputFormat::Json if self.single => to_json(&Record(&self.columns, &self.rows[0])),
            OutputFormat::Json => to_json(&Records(&self.columns, &self.rows)),
            OutputFormat::Csv => to_csv(&self.columns, &self.rows),
            OutputFormat::Plain => to_plain(&self.columns, &self.rows),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Cell::Num(v) => s.serialize_f64(*v),
            Cell::Int(v) => s.serialize_u64(*v),
            Cell::Text(t) => s.serialize_str(t),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::Missing => s.serialize_none(),
        }
    }
}

struct Record<'a>(&'a [&'static str], &'a [Cell]);

impl Serialize for Record<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

struct Records<'a>(&'a [&'static str], &'a [Vec<Cell>]);

impl Serialize for Records<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.1.len()))?;
        for row in self.1 {
            seq.serialize_element(&Record(self.0, row))?;
        }
        seq.end()
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

/// Parse `argv` (program name first) and execute.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help and --version
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let result = match &cli.command {
        Command::Selftest(args) => {
            let report = run_selftest(&SelftestOptions {
                seed,
                samples: args.n,
                ..SelftestOptions::default()
            });
            let stdout = match cli.format {
                None | Some(OutputFormat::Json) => to_json(&report),
                Some(OutputFormat::Csv) => to_csv(&report.columns(), &report.rows()),
                Some(OutputFormat::Plain) => to_plain(&report.columns(), &report.rows()),
            };
            return Outcome {
                code: if report.passed { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            };
        }
        Command::Volume(a) => volume(a),
        Command::Density(a) => density(a),
        Command::Integrate(a) => integrate(a),
        Command::Mellin(a) => mellin(a),
        Command::Axioms(a) => axioms(a),
        Command::Cocycle(a) => cocycle(a),
        Command::Bm(a) => bm(a),
        Command::Polar(a) => polar(a, seed),
    };
    match result {
        Ok(table) => Outcome {
            code: 0,
            stdout: table.render(cli.format),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Compute(e)) => Outcome {
            code: 1,
            stdout: to_json(&ErrorReport {
                error: ErrorBody {
                    kind: e.kind(),
                    message: e.to_string(),
                },
            }),
            stderr: String::new(),
        },
    }
}

fn dim(x: f64) -> Result<Dimension, Failure> {
    Ok(Dimension::new(x)?)
}

fn volume(a: &VolumeArgs) -> Result<Table, Failure> {
    let columns = vec!["x", "V", "C", "omega"];
    match (a.x, a.from, a.to, a.step) {
        (Some(x), ..) => {
            let d = dim(x)?;
            Ok(Table::one(
                columns,
                vec![
                    x.into(),
                    radial::ball_volume(d).into(),
                    coefficient(d).into(),
                    radial::sphere_area(d).into(),
                ],
            ))
        }
        (None, Some(lo), Some(hi), Some(step)) => {
            let rows = volume_table(lo, hi, step)?
                .into_iter()
                .map(|r| vec![r.x.into(), r.volume.into(), r.coefficient.into(), r.omega.into()])
                .collect();
            Ok(Table::many(columns, rows))
        }
        _ => Err(Failure::Usage("volume needs --x or all of --from, --to, --step".into())),
    }
}

fn grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>, Failure> {
    if !(lo.is_finite() && hi.is_finite() && step.is_finite() && step > 0.0 && hi >= lo) {
        return Err(Failure::Usage("range needs finite from <= to and step > 0".into()));
    }
    let count = ((hi - lo) / step * (1.0 + 1e-12)).floor() as u64 + 1;
    if count > 1_000_000 {
        return Err(Failure::Usage("range has more than 1e6 points".into()));
    }
    Ok((0..count).map(|k| lo + k as f64 * step).collect())
}

fn density(a: &DensityArgs) -> Result<Table, Failure> {
    let d = dim(a.x)?;
    let columns = vec!["x", "u", "density"];
    let row = |u: f64| -> Result<Vec<Cell>, Failure> { Ok(vec![a.x.into(), u.into(), radial::density(d, u)?.into()]) };
    match (a.u, a.u_from, a.u_to, a.u_step) {
        (Some(u), ..) => Ok(Table::one(columns, row(u)?)),
        (None, Some(lo), Some(hi), Some(step)) => {
            let rows = grid(lo, hi, step)?.into_iter().map(row).collect::<Result<_, _>>()?;
            Ok(Table::many(columns, rows))
        }
        _ => Err(Failure::Usage("density needs --u or all of --u-from, --u-to, --u-step".into())),
    }
}

fn quad_config(q: &QuadratureArgs) -> Result<QuadratureConfig, Failure> {
    let cfg = q.config();
    cfg.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(cfg)
}

fn integrate(a: &IntegrateArgs) -> Result<Table, Failure> {
    let cfg = quad_config(&a.quad)?;
    let phi = load_test_function(&a.knots).map_err(|e| Failure::Usage(e.to_string()))?;
    let q = integrate_functional(dim(a.x)?, &phi, &cfg)?;
    Ok(Table::one(
        vec!["x", "value", "error", "subdivisions"],
        vec![a.x.into(), q.value.into(), q.total_error().into(), (q.subdivisions as u64).into()],
    ))
}

fn mellin(a: &MellinArgs) -> Result<Table, Failure> {
    let cfg = quad_config(&a.quad)?;
    let phi = load_test_function(&a.knots).map_err(|e| Failure::Usage(e.to_string()))?;
    let q = mellin_transform(&phi, a.s, &cfg)?;
    Ok(Table::one(
        vec!["s", "value", "error", "subdivisions"],
        vec![a.s.into(), q.value.into(), q.total_error().into(), (q.subdivisions as u64).into()],
    ))
}

fn parse_numbers(text: &str, what: &str) -> Result<Vec<f64>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| Failure::Usage(format!("{what}: `{t}` is not a number")))
        })
        .collect()
}

fn candidates(spec: &str, x: Dimension) -> Result<Vec<CandidateDensity>, Failure> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let one_number = |what: &str| -> Result<f64, Failure> {
        match arg.map(|a| parse_numbers(a, what)).transpose()? {
            Some(v) if v.len() == 1 => Ok(v[0]),
            _ => Err(Failure::Usage(format!("candidate {name} takes one number: {name}:VALUE"))),
        }
    };
    Ok(match name {
        "classified" => vec![CandidateDensity::classified(x)],
        "exponential" => vec![CandidateDensity::exponential()],
        "logmod" => vec![CandidateDensity::log_modulated(x, one_number("logmod amplitude")?)],
        "scaled" => vec![CandidateDensity::classified(x).scaled(one_number("scale factor")?)],
        "power" => match arg.map(|a| parse_numbers(a, "power law")).transpose()? {
            Some(v) if v.len() == 2 => vec![CandidateDensity::power_law(v[0], v[1])],
            _ => return Err(Failure::Usage("candidate power takes two numbers: power:C,A".into())),
        },
        "all" => {
            let shifted = Dimension::new(x.get() + 2.0)?;
            vec![
                CandidateDensity::classified(x),
                CandidateDensity::log_modulated(x, 0.5),
                CandidateDensity::power_law(coefficient(shifted), shifted.half()),
                CandidateDensity::classified(x).scaled(2.0),
                CandidateDensity::exponential(),
            ]
        }
        _ => return Err(Failure::Usage(format!("unknown candidate `{spec}`"))),
    })
}

fn axioms(a: &AxiomsArgs) -> Result<Table, Failure> {
    if a.tol.is_nan() || a.tol <= 0.0 {
        return Err(Failure::Usage("--tol must be positive".into()));
    }
    let x = dim(a.x)?;
    let list = candidates(&a.candidate, x)?;
    let cfg = QuadratureConfig::default();
    let columns = vec!["label", "x", "scaling_residual", "gaussian_residual", "haar_flatness", "verdict"];
    let row = |r: AxiomReport| -> Vec<Cell> {
        vec![
            r.label.into(),
            r.x.into(),
            r.scaling_residual.into(),
            r.gaussian_residual.into(),
            r.haar_flatness.into(),
            r.verdict.as_str().into(),
        ]
    };
    let mut rows = Vec::new();
    for w in &list {
        rows.push(row(evaluate_candidate(w, x, a.tol, &cfg)?));
    }
    if rows.len() == 1 {
        Ok(Table::one(columns, rows.pop().expect("one row")))
    } else {
        let mut t = Table::many(columns, rows);
        t.default_format = OutputFormat::Json;
        Ok(t)
    }
}

fn cocycle(a: &CocycleArgs) -> Result<Table, Failure> {
    let (kind, label) = match (a.kind, a.a) {
        (KindArg::R, None) => (CocycleKind::R, "R".to_string()),
        (KindArg::T, None) => (CocycleKind::T, "T".to_string()),
        (KindArg::Ta, Some(h)) => (CocycleKind::Ta(h), format!("Ta:{}", crate::format::g17(h))),
        (KindArg::Ta, None) => return Err(Failure::Usage("--kind Ta requires --a".into())),
        (_, Some(_)) => return Err(Failure::Usage("--a applies only to --kind Ta".into())),
    };
    let value = kind.value(&ShiftPair::new(a.x, a.r)?)?;
    let residual = a.s.map(|s| cocycle_residual(kind, a.x, a.r, s)).transpose()?;
    Ok(Table::one(
        vec!["kind", "x", "r", "s", "value", "residual"],
        vec![
            label.into(),
            a.x.into(),
            a.r.into(),
            a.s.into(),
            value.into(),
            residual.into(),
        ],
    ))
}

fn bm(a: &BmArgs) -> Result<Table, Failure> {
    if a.n < 2 {
        return Err(Failure::Usage("--n must be at least 2".into()));
    }
    let estimate = bm_transport(dim(a.x)?, a.r, a.n)?;
    let mut columns = vec!["x", "r", "n", "bm"];
    let mut row: Vec<Cell> = vec![a.x.into(), a.r.into(), a.n.into(), estimate.into()];
    if a.compare {
        let closed = CocycleKind::T.value(&ShiftPair::new(a.x, a.r)?)?;
        columns.extend(["gamma", "rel_gap"]);
        row.push(closed.into());
        row.push(((estimate - closed) / closed).abs().into());
    }
    Ok(Table::one(columns, row))
}

/// `euclidean:D` or `diagpow:B1,B2,...`.
pub fn parse_gauge(spec: &str) -> Result<HomogeneousGauge, String> {
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| format!("gauge `{spec}` must look like euclidean:D or diagpow:B1,B2,..."))?;
    match name {
        "euclidean" => {
            let d: usize = arg
                .trim()
                .parse()
                .map_err(|_| format!("euclidean dimension `{arg}` is not a positive integer"))?;
            if d == 0 || d > DEFAULT_MAX_DIM {
                return Err(format!("euclidean dimension must be in 1..={DEFAULT_MAX_DIM}"));
            }
            HomogeneousGauge::euclidean(d).map_err(|e| e.to_string())
        }
        "diagpow" => {
            let b: Vec<f64> = arg
                .split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| format!("exponent `{t}` is not a number")))
                .collect::<Result<_, _>>()?;
            if b.len() > DEFAULT_MAX_DIM {
                return Err(format!("at most {DEFAULT_MAX_DIM} exponents"));
            }
            HomogeneousGauge::diagonal_power(&b).map_err(|e| e.to_string())
        }
        _ => Err(format!("unknown gauge family `{name}`")),
    }
}

fn z(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff.abs() / se
    } else if diff == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

fn polar(a: &PolarArgs, seed: u64) -> Result<Table, Failure> {
    let gauge = parse_gauge(&a.gauge).map_err(Failure::Usage)?;
    if a.n == 0 || a.partitions == 0 {
        return Err(Failure::Usage("--n and --partitions must be positive".into()));
    }
    if let Some(r) = a.truncation_radius {
        if !(r.is_finite() && r > 0.0) {
            return Err(Failure::Usage("--truncation-radius must be positive".into()));
        }
    }
    let cfg = McConfig {
        samples: a.n,
        seed,
        partitions: a.partitions,
    };
    let opts = ExponentialOptions {
        truncation_radius: a.truncation_radius,
        ..ExponentialOptions::default()
    };
    let (estimate, std_error, reference, z_score) = match a.check {
        PolarCheck::GammaIdentity => {
            let rep = gamma_identity_check(&gauge, &opts, &cfg)?;
            (rep.volume.mean, rep.volume.std_error, rep.predicted_volume, rep.z_score)
        }
        PolarCheck::Volume => {
            let vbox = gauge.volume_box().expect("shipped gauges have a bounding box");
            let est = mc_ball_volume(&gauge, &vbox, &cfg)?;
            let reference = gauge.reference_volume().expect("shipped gauges have a closed form");
            (est.mean, est.std_error, reference, z(est.mean - reference, est.std_error))
        }
        PolarCheck::Exponential => {
            let mc_only = ExponentialOptions {
                closed_form: false,
                ..opts
            };
            let est = mc_gauge_exponential(&gauge, &mc_only, &cfg)?;
            let reference = gauge.reference_exponential().expect("shipped gauges have a closed form");
            (est.mean, est.std_error, reference, z(est.mean - reference, est.std_error))
        }
    };
    Ok(Table::one(
        vec!["gauge", "mu_P", "estimate", "std_error", "reference", "z_score"],
        vec![
            gauge.label().into(),
            gauge.mu().into(),
            estimate.into(),
            std_error.into(),
            reference.into(),
            z_score.into(),
        ],
    ))
}
