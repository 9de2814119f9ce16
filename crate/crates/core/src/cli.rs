//! Command-line front end: `radius`, `table`, `verify`, `operator` and `suite`.
//!
//! Every command prints JSON (or CSV for `table --format csv`) with floats at
//! 17 significant digits. Exit codes: 0 success, 1 verification failure,
//! 2 usage error, 3 no root.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bohr::{verify_up_to_radius, BohrReport};
use crate::error::Error;
use crate::harness::{default_config, run_inequality_suite, run_sharpness_suite, suite_rng, SuiteConfig};
use crate::harness::random_bounded_function;
use crate::operators::{apply_coefficient_form, operator_bohr_radius_with_p, operator_bound, OperatorSpec};
use crate::radius::{minimal_root, RadiusQuery, RadiusResult, DEFAULT_TOL};
use crate::series::{BoundedFunction, CoefficientSeries, DomainParams};
use crate::weights::WeightFamily;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NO_ROOT: i32 = 3;

/// Environment variable that overrides the suite seed.
pub const SEED_ENV: &str = "BOHR_SEED";

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "bohr", version, about = "Sharp generalized Bohr radii on shifted disks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sharp radius of one weight family.
    Radius(RadiusArgs),
    /// Radii over a sweep of γ, p and family parameters.
    Table(TableArgs),
    /// Check the weighted inequality for one function up to the radius.
    Verify(VerifyArgs),
    /// β-Cesàro, α-Cesàro and Bernardi operators.
    Operator(OperatorArgs),
    /// Randomized inequality or sharpness suite.
    Suite(SuiteArgs),
}

/// Family name and parameters. In `table`, each parameter may be a list.
#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    /// power-tail, even, odd, linear-plus-one, linear, quadratic, beta-cesaro, alpha-cesaro, bernardi
    #[arg(long)]
    pub family: String,
    #[arg(long = "N")]
    pub n: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub delta: Option<String>,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub p: f64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Jsonl,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Comma list (`0,0.5`) or range (`start:stop[:step]`).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub gamma: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub p: String,
    /// Step for ranges written as `start:stop`.
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `constant:<c>`, `extremal:<a>`, `blaschke:<seed|z1,z2,…>` or `coeffs:<file>`.
    #[arg(long = "fn")]
    pub function: String,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub p: f64,
    /// Radii in the verification grid.
    #[arg(long, default_value_t = 101)]
    pub grid: usize,
    /// Verify up to `R + r_beyond` instead of `R`.
    #[arg(long, default_value_t = 0.0)]
    pub r_beyond: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("spec").required(true).args(["beta_cesaro", "alpha_cesaro", "bernardi"])))]
pub struct OperatorArgs {
    #[arg(long, value_name = "BETA", allow_negative_numbers = true)]
    pub beta_cesaro: Option<f64>,
    #[arg(long, value_name = "ALPHA", allow_negative_numbers = true)]
    pub alpha_cesaro: Option<f64>,
    #[arg(long, num_args = 2, value_names = ["M", "DELTA"], allow_negative_numbers = true)]
    pub bernardi: Option<Vec<String>>,
    #[command(subcommand)]
    pub action: OperatorAction,
}

#[derive(Debug, Subcommand)]
pub enum OperatorAction {
    /// Transform a coefficient file.
    Apply {
        #[arg(long)]
        input: PathBuf,
        /// Destination file; the coefficients go to stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sharp bound on `|operator f(z)|` at `|z| = r`.
    Bound {
        #[arg(long)]
        r: f64,
    },
    /// Bohr-type radius of the operator.
    Radius {
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        gamma: f64,
        #[arg(long, default_value_t = 1.0)]
        p: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteKind {
    Inequality,
    Sharpness,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    /// JSON config; the built-in default when omitted.
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "inequality")]
    pub kind: SuiteKind,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

/// Command failure with its exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    NoRoot(String),
    Failed(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::NoRoot(_) => EXIT_NO_ROOT,
            CliError::Failed(_) => EXIT_FAIL,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::NoRoot(m) | CliError::Failed(m) | CliError::Io(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NoRoot | Error::NotPositiveNearZero => CliError::NoRoot(e.to_string()),
            Error::CrossCheck { .. } => CliError::Failed(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// JSON formatter that prints every finite float as `{:.16e}`.
#[derive(Debug, Default, Clone, Copy)]
pub struct SignificantDigits;

impl serde_json::ser::Formatter for SignificantDigits {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        write!(writer, "{}", fmt_f64(value))
    }
}

/// A float at 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Serializes `value` on one line with [`SignificantDigits`].
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SignificantDigits);
    value.serialize(&mut ser).expect("in-memory JSON serialization");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

/// Envelope shared by every JSON output.
#[derive(Debug, Serialize)]
pub struct OutputRecord<T: Serialize> {
    pub command: String,
    pub parameters: Value,
    pub version: &'static str,
    pub seed: Option<u64>,
    #[serde(flatten)]
    pub result: T,
}

impl<T: Serialize> OutputRecord<T> {
    pub fn new(command: &str, parameters: Value, seed: Option<u64>, result: T) -> Self {
        OutputRecord {
            command: command.to_string(),
            parameters,
            version: VERSION,
            seed,
            result,
        }
    }
}

/// Parses one coefficient per line as `re im`; blank lines are ignored.
pub fn parse_coefficients(text: &str) -> CliResult<CoefficientSeries> {
    let mut coefficients = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let parse = |s: Option<&str>| -> CliResult<f64> {
            s.ok_or_else(|| CliError::Usage(format!("line {}: expected `re im`", i + 1)))?
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("line {}: {e}", i + 1)))
        };
        let re = parse(fields.next())?;
        let im = parse(fields.next())?;
        if fields.next().is_some() {
            return Err(CliError::Usage(format!("line {}: expected exactly two fields", i + 1)));
        }
        coefficients.push(Complex64::new(re, im));
    }
    Ok(CoefficientSeries::new(coefficients)?)
}

/// One `re im` line per coefficient; parses back bit-exactly.
pub fn format_coefficients(series: &CoefficientSeries) -> String {
    series
        .coefficients()
        .iter()
        .map(|c| format!("{} {}\n", fmt_f64(c.re), fmt_f64(c.im)))
        .collect()
}

pub fn read_coefficients(path: &Path) -> CliResult<CoefficientSeries> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_coefficients(&text)
}

/// Values from `a,b,c` or `start:stop[:step]` (stop inclusive). An empty
/// string, or a range with `start > stop`, is empty.
pub fn parse_values(spec: &str, default_step: Option<f64>) -> CliResult<Vec<f64>> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Ok(Vec::new());
    }
    let num = |s: &str| {
        s.trim()
            .parse::<f64>()
            .map_err(|e| CliError::Usage(format!("`{s}`: {e}")))
    };
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let (start, stop, step) = match parts.as_slice() {
            [a, b] => (
                num(a)?,
                num(b)?,
                default_step.ok_or_else(|| CliError::Usage(format!("range `{spec}` needs a step")))?,
            ),
            [a, b, c] => (num(a)?, num(b)?, num(c)?),
            _ => return Err(CliError::Usage(format!("malformed range `{spec}`"))),
        };
        if !(step > 0.0 && step.is_finite()) {
            return Err(CliError::Usage(format!("range step must be positive, got {step}")));
        }
        let mut out = Vec::new();
        let mut i = 0u32;
        loop {
            let x = start + i as f64 * step;
            if x > stop + 1e-9 * step {
                break;
            }
            out.push(x);
            i += 1;
        }
        Ok(out)
    } else {
        spec.split(',').map(num).collect()
    }
}

fn as_u32(x: f64, name: &str) -> CliResult<u32> {
    if x >= 0.0 && x.fract() == 0.0 && x <= u32::MAX as f64 {
        Ok(x as u32)
    } else {
        Err(CliError::Usage(format!("--{name} must be a non-negative integer, got {x}")))
    }
}

impl FamilyArgs {
    fn values(&self, field: &Option<String>, name: &str) -> CliResult<Vec<f64>> {
        match field {
            Some(s) => parse_values(s, None),
            None => Err(CliError::Usage(format!("family `{}` requires --{name}", self.family))),
        }
    }

    /// Every family obtained from the cartesian product of the parameter lists.
    pub fn families(&self) -> CliResult<Vec<WeightFamily>> {
        let out: Vec<WeightFamily> = match self.family.as_str() {
            "even" => vec![WeightFamily::EvenPowers],
            "odd" => vec![WeightFamily::OddPowers],
            "power-tail" | "linear-plus-one" | "linear" | "quadratic" => {
                let mut v = Vec::new();
                for x in self.values(&self.n, "N")? {
                    let n = as_u32(x, "N")?;
                    v.push(match self.family.as_str() {
                        "power-tail" => WeightFamily::PowerTail { n },
                        "linear-plus-one" => WeightFamily::LinearPlusOne { n },
                        "linear" => WeightFamily::Linear { n },
                        _ => WeightFamily::Quadratic { n },
                    });
                }
                v
            }
            "beta-cesaro" => self
                .values(&self.beta, "beta")?
                .into_iter()
                .map(|beta| WeightFamily::BetaCesaro { beta })
                .collect(),
            "alpha-cesaro" => self
                .values(&self.alpha, "alpha")?
                .into_iter()
                .map(|alpha| WeightFamily::AlphaCesaro { alpha })
                .collect(),
            "bernardi" => {
                let deltas = self.values(&self.delta, "delta")?;
                let mut v = Vec::new();
                for x in self.values(&self.m, "m")? {
                    let m = as_u32(x, "m")?;
                    v.extend(deltas.iter().map(|&delta| WeightFamily::Bernardi { m, delta }));
                }
                v
            }
            other => return Err(CliError::Usage(format!("unknown family `{other}`"))),
        };
        for f in &out {
            f.validate()?;
        }
        Ok(out)
    }

    pub fn family(&self) -> CliResult<WeightFamily> {
        let mut all = self.families()?;
        if all.len() != 1 {
            return Err(CliError::Usage("family parameters must be single values here".into()));
        }
        Ok(all.remove(0))
    }
}

/// Parses argv, runs the command and writes to `out`/`err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}

/// Entry point of the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn execute(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    match command {
        Command::Radius(a) => cmd_radius(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Operator(a) => cmd_operator(a, out),
        Command::Suite(a) => cmd_suite(a, out, err),
    }
}

fn family_parameters(family: &WeightFamily) -> Value {
    serde_json::to_value(family).expect("families serialize")
}

pub fn cmd_radius(args: &RadiusArgs, out: &mut dyn Write) -> CliResult<i32> {
    let family = args.family.family()?;
    let domain = DomainParams::new(args.gamma)?;
    let query = RadiusQuery::new(family, domain, args.p)?;
    let result = minimal_root(&query, args.tol)?;
    let parameters = json!({
        "family": family_parameters(&family),
        "gamma": args.gamma,
        "p": args.p,
        "tol": args.tol,
    });
    writeln!(out, "{}", to_json(&OutputRecord::new("radius", parameters, None, result)))?;
    Ok(EXIT_OK)
}

/// One row of a radius table.
#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub family: String,
    pub params: String,
    pub gamma: f64,
    pub p: f64,
    pub radius: Option<f64>,
    pub residual: Option<f64>,
    pub sharp_window_ok: Option<bool>,
    pub tolerance: f64,
    pub error: Option<String>,
}

pub const TABLE_HEADER: &str = "family,params,gamma,p,radius,residual,sharp_window_ok,error";

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl TableRow {
    pub fn csv(&self) -> String {
        let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.family,
            csv_field(&self.params),
            fmt_f64(self.gamma),
            fmt_f64(self.p),
            opt(self.radius),
            opt(self.residual),
            self.sharp_window_ok.map(|b| b.to_string()).unwrap_or_default(),
            csv_field(self.error.as_deref().unwrap_or("")),
        )
    }
}

/// Rows ordered by `(γ, p)` and then by family parameter, computed in parallel.
pub fn table_rows(families: &[WeightFamily], gammas: &[f64], ps: &[f64], tol: f64) -> Vec<TableRow> {
    let mut cells = Vec::new();
    for &g in gammas {
        for &p in ps {
            for f in families {
                cells.push((*f, g, p));
            }
        }
    }
    cells.sort_by(|a, b| (a.1, a.2).partial_cmp(&(b.1, b.2)).unwrap_or(std::cmp::Ordering::Equal));
    cells
        .into_par_iter()
        .map(|(family, gamma, p)| {
            let result: Result<RadiusResult, Error> = DomainParams::new(gamma)
                .and_then(|d| RadiusQuery::new(family, d, p))
                .and_then(|q| minimal_root(&q, tol));
            let (radius, residual, window, error) = match result {
                Ok(r) => (Some(r.radius), Some(r.residual), Some(r.sharp_window_ok), None),
                Err(e) => (None, None, None, Some(e.to_string())),
            };
            TableRow {
                family: family.name().to_string(),
                params: family.params_string(),
                gamma,
                p,
                radius,
                residual,
                sharp_window_ok: window,
                tolerance: tol,
                error,
            }
        })
        .collect()
}

pub fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> CliResult<i32> {
    let families = args.family.families()?;
    let gammas = parse_values(&args.gamma, args.step)?;
    let ps = parse_values(&args.p, args.step)?;
    let rows = table_rows(&families, &gammas, &ps, args.tol);
    match args.format {
        TableFormat::Csv => {
            writeln!(out, "{TABLE_HEADER}")?;
            for row in &rows {
                writeln!(out, "{}", row.csv())?;
            }
        }
        TableFormat::Jsonl => {
            for row in &rows {
                writeln!(out, "{}", to_json(row))?;
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses a `--fn` descriptor. Returns the function and, for seeded Blaschke products, the seed.
pub fn parse_function(descriptor: &str, domain: DomainParams) -> CliResult<(BoundedFunction, Option<u64>)> {
    let (kind, arg) = descriptor
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("function descriptor `{descriptor}` has no `kind:`")))?;
    let complex = |s: &str| {
        s.trim()
            .parse::<Complex64>()
            .map_err(|e| CliError::Usage(format!("`{s}`: {e}")))
    };
    match kind {
        "constant" => Ok((
            BoundedFunction::Raw {
                series: CoefficientSeries::new(vec![complex(arg)?])?,
            },
            None,
        )),
        "extremal" => {
            let a = arg
                .trim()
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("`{arg}`: {e}")))?;
            if !(0.0..1.0).contains(&a) {
                return Err(CliError::Usage(format!("extremal parameter a = {a} must lie in [0, 1)")));
            }
            Ok((BoundedFunction::Extremal { domain, a }, None))
        }
        "blaschke" => {
            if let Ok(seed) = arg.trim().parse::<u64>() {
                let f = random_bounded_function(domain, &mut suite_rng(seed, 0));
                return Ok((f, Some(seed)));
            }
            let zeros = if arg.trim().is_empty() {
                Vec::new()
            } else {
                arg.split(',').map(complex).collect::<CliResult<Vec<_>>>()?
            };
            if let Some(z) = zeros.iter().find(|z| !(z.norm() < 1.0)) {
                return Err(Error::ZeroOutsideDisk { re: z.re, im: z.im }.into());
            }
            Ok((
                BoundedFunction::BlaschkeComposed {
                    domain,
                    zeros,
                    rotation: Complex64::new(1.0, 0.0),
                },
                None,
            ))
        }
        "coeffs" => Ok((
            BoundedFunction::Raw {
                series: read_coefficients(Path::new(arg))?,
            },
            None,
        )),
        other => Err(CliError::Usage(format!("unknown function kind `{other}`"))),
    }
}

#[derive(Debug, Serialize)]
struct VerifyResult {
    radius: RadiusResult,
    verified_up_to: f64,
    function: BoundedFunction,
    #[serde(flatten)]
    report: BohrReport,
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult<i32> {
    let family = args.family.family()?;
    let domain = DomainParams::new(args.gamma)?;
    let query = RadiusQuery::new(family, domain, args.p)?;
    let (function, seed) = parse_function(&args.function, domain)?;
    if !(args.r_beyond >= 0.0) {
        return Err(CliError::Usage(format!("--r-beyond must be non-negative, got {}", args.r_beyond)));
    }
    let radius = minimal_root(&query, DEFAULT_TOL)?;
    let upto = radius.radius + args.r_beyond;
    if !(upto < 1.0) {
        return Err(CliError::Usage(format!("R + r_beyond = {upto} is not below 1")));
    }
    let report = verify_up_to_radius(&function, &query, upto, args.grid)?;
    let pass = report.pass;
    let parameters = json!({
        "fn": args.function,
        "family": family_parameters(&family),
        "gamma": args.gamma,
        "p": args.p,
        "grid": args.grid,
        "r_beyond": args.r_beyond,
    });
    let result = VerifyResult {
        radius,
        verified_up_to: upto,
        function,
        report,
    };
    writeln!(out, "{}", to_json(&OutputRecord::new("verify", parameters, seed, result)))?;
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

impl OperatorArgs {
    pub fn spec(&self) -> CliResult<OperatorSpec> {
        let spec = if let Some(beta) = self.beta_cesaro {
            OperatorSpec::BetaCesaro { beta }
        } else if let Some(alpha) = self.alpha_cesaro {
            OperatorSpec::AlphaCesaro { alpha }
        } else if let Some(v) = &self.bernardi {
            let m = v[0]
                .parse::<u32>()
                .map_err(|e| CliError::Usage(format!("--bernardi M `{}`: {e}", v[0])))?;
            let delta = v[1]
                .parse::<f64>()
                .map_err(|e| CliError::Usage(format!("--bernardi DELTA `{}`: {e}", v[1])))?;
            OperatorSpec::Bernardi { m, delta }
        } else {
            return Err(CliError::Usage("no operator given".into()));
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn cmd_operator(args: &OperatorArgs, out: &mut dyn Write) -> CliResult<i32> {
    let spec = args.spec()?;
    let spec_value = serde_json::to_value(spec).expect("operator specs serialize");
    match &args.action {
        OperatorAction::Apply { input, output } => {
            let series = read_coefficients(input)?;
            let transformed = apply_coefficient_form(&spec, &series)?;
            let text = format_coefficients(&transformed);
            match output {
                Some(path) => {
                    std::fs::write(path, &text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                    let parameters = json!({
                        "operator": spec_value,
                        "input": input.display().to_string(),
                        "output": path.display().to_string(),
                    });
                    let result = json!({ "truncation_order": transformed.order() });
                    writeln!(out, "{}", to_json(&OutputRecord::new("operator apply", parameters, None, result)))?;
                }
                None => out.write_all(text.as_bytes())?,
            }
        }
        OperatorAction::Bound { r } => {
            let bound = operator_bound(&spec, *r)?;
            let parameters = json!({ "operator": spec_value, "r": r });
            let result = json!({ "bound": bound, "tolerance": 1e-14 });
            writeln!(out, "{}", to_json(&OutputRecord::new("operator bound", parameters, None, result)))?;
        }
        OperatorAction::Radius { gamma, p } => {
            let domain = DomainParams::new(*gamma)?;
            let result = operator_bohr_radius_with_p(&spec, domain, *p)?;
            let parameters = json!({ "operator": spec_value, "gamma": gamma, "p": p });
            writeln!(out, "{}", to_json(&OutputRecord::new("operator radius", parameters, None, result)))?;
        }
    }
    Ok(EXIT_OK)
}

/// Reads a suite config (or the default) and applies the seed override.
pub fn load_suite_config(path: Option<&Path>, seed_override: Option<&str>) -> CliResult<SuiteConfig> {
    let mut config = match path {
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            serde_json::from_str::<SuiteConfig>(&text)
                .map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?
        }
        None => default_config(),
    };
    if let Some(s) = seed_override {
        config.seed = s
            .trim()
            .parse()
            .map_err(|e| CliError::Usage(format!("{SEED_ENV}=`{s}`: {e}")))?;
    }
    config.validate()?;
    Ok(config)
}

pub fn cmd_suite(args: &SuiteArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<i32> {
    let seed_override = std::env::var(SEED_ENV).ok();
    let config = load_suite_config(args.config.as_deref(), seed_override.as_deref())?;
    let report = match args.kind {
        SuiteKind::Inequality => run_inequality_suite(&config)?,
        SuiteKind::Sharpness => run_sharpness_suite(&config)?,
    };
    if !report.controls_detected {
        writeln!(err, "warning: a negative control was accepted")?;
    }
    let pass = report.overall_pass;
    let parameters = serde_json::to_value(&config).expect("configs serialize");
    let text = to_json(&OutputRecord::new("suite", parameters, Some(config.seed), report));
    match &args.output {
        Some(path) => std::fs::write(path, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("bohr").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn value_lists_and_ranges() {
        assert_eq!(parse_values("0.5,1,2", None).unwrap(), vec![0.5, 1.0, 2.0]);
        assert_eq!(parse_values("0:0.9:0.1", None).unwrap().len(), 10);
        assert_eq!(parse_values("0:1", Some(0.25)).unwrap().len(), 5);
        assert!(parse_values("", None).unwrap().is_empty());
        assert!(parse_values("1:0:0.1", None).unwrap().is_empty());
        assert!(parse_values("0:1", None).is_err());
        assert!(parse_values("0:1:0", None).is_err());
    }

    #[test]
    fn floats_have_seventeen_digits() {
        assert_eq!(fmt_f64(1.0 / 3.0), "3.3333333333333331e-1");
        assert_eq!(to_json(&json!({ "x": 0.5 })), r#"{"x":5.0000000000000000e-1}"#);
        assert_eq!(to_json(&json!({ "x": f64::NAN })), r#"{"x":null}"#);
    }

    #[test]
    fn coefficient_text_round_trip() {
        let s = CoefficientSeries::new(vec![Complex64::new(0.1, -1.0 / 3.0), Complex64::new(f64::MIN_POSITIVE, 7e300)])
            .unwrap();
        assert_eq!(parse_coefficients(&format_coefficients(&s)).unwrap(), s);
        assert!(parse_coefficients("1 2 3").is_err());
        assert!(parse_coefficients("1").is_err());
        assert!(parse_coefficients("").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_str(&["radius", "--family", "power-tail", "--N", "1", "--gamma", "1.5"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["radius", "--family", "power-tail"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["radius", "--family", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_str(&["--version"]).0, EXIT_OK);
        let (code, out, _) = run_str(&["radius", "--family", "odd"]);
        assert_eq!(code, EXIT_OK);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert!((v["radius"].as_f64().unwrap() - (2f64.sqrt() - 1.0)).abs() < 1e-10);
    }

    #[test]
    fn table_rows_sorted() {
        let (code, out, _) = run_str(&["table", "--family", "beta-cesaro", "--beta", "0.5,1,2", "--gamma", "0", "--p", "1"]);
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], TABLE_HEADER);
        assert_eq!(lines.len(), 4);
        let (_, out, _) = run_str(&["table", "--family", "even", "--gamma", ""]);
        assert_eq!(out.trim(), TABLE_HEADER);
    }
}
