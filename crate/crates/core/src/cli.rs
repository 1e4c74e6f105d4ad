//! Command-line front end: `eval`, `integrate` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failed, 2 domain error (pole,
//! argument outside a domain), 3 convergence failure, 4 malformed arguments
//! or grid overrides.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use crate::error::Error;
use crate::eval::EvalResult;
use crate::format;
use crate::identities::{self, CheckSettings, IdentityId, ParamGrid};
use crate::quadrature::QuadratureSettings;
use crate::series::{self, FunctionId, SeriesSettings};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_USAGE: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Pole(_) | Error::NearPole { .. } | Error::Domain(_) | Error::Overflow { .. } => {
            EXIT_DOMAIN
        }
        Error::Convergence { .. } | Error::NonFinite { .. } => EXIT_CONVERGENCE,
        Error::InvalidSettings(_) => EXIT_USAGE,
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "malmsten",
    version,
    about = "Dirichlet eta/lambda/beta/zeta and Malmstén's integral identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Args)]
struct CommonFlags {
    /// Target tolerance (series and/or quadrature)
    #[arg(long)]
    eps: Option<f64>,
    /// Maximum quadrature refinement level (1..=12)
    #[arg(long)]
    max_level: Option<usize>,
    /// Maximum number of series terms
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Significant digits in table output
    #[arg(long, default_value_t = 15)]
    precision: usize,
}

impl CommonFlags {
    fn series(&self) -> SeriesSettings {
        let mut cfg = SeriesSettings::default();
        if let Some(eps) = self.eps {
            cfg.target_eps = eps;
        }
        if let Some(n) = self.max_terms {
            cfg.max_terms = n;
        }
        cfg
    }

    fn quadrature(&self) -> QuadratureSettings {
        let mut cfg = QuadratureSettings::default();
        if let Some(eps) = self.eps {
            cfg.target_eps = eps;
        }
        if let Some(l) = self.max_level {
            cfg.max_level = l;
        }
        cfg
    }

    fn checks(&self) -> CheckSettings {
        CheckSettings {
            quadrature: self.quadrature(),
            series: self.series(),
        }
    }
}

/// Integrands accepted by `integrate`; each prints the bare integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// ∫_0^∞ (e^{au}-e^{-au})/(e^{πu}-e^{-πu}) u^{-s} du
    Formula30Lhs,
    /// ∫_0^1 ln^{s-1}(1/y)/(1+2y cos a+y²) dy
    Formula30Rhs,
    /// ∫_0^∞ u^{1-s}/(e^{πu}-e^{-πu}) du
    LimitLhs,
    /// ∫_0^1 ln^{s-1}(1/y)/(1+y)² dy
    LimitRhs,
    /// ∫_0^∞ e^{-y} y^{1-s} dy
    GammaPower,
    /// ∫_0^1 ln^{s-1}(1/y) y^{n-1} dy
    GammaLog,
    /// ∫_0^1 ln ln(1/x)/(1+x²) dx
    Vardi,
    /// ∫_0^1 ln ln(1/y)/(1+2y cos a+y²) dy
    Kummer,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate eta, lambda, beta or zeta at a complex point
    Eval {
        function: String,
        /// Argument as RE, RE+IMi or RE-IMi
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Integrate one of the identity integrands
    Integrate {
        #[arg(value_enum)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long)]
        n: Option<u64>,
        #[command(flatten)]
        flags: CommonFlags,
    },
    /// Check identities on a parameter grid
    Verify {
        /// Identity names, or `all`
        ids: Vec<String>,
        /// Comma-separated a values
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Comma-separated s values for the strip and Gamma-integral identities
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        /// Comma-separated s values for the functional equations
        #[arg(long = "fe-s", allow_hyphen_values = true)]
        fe_s: Option<String>,
        /// Comma-separated n values
        #[arg(long)]
        n: Option<String>,
        #[command(flatten)]
        flags: CommonFlags,
    },
}

struct Output {
    stdout: String,
    stderr: String,
    code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(err: &Error) -> Self {
        Self {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: exit_code(err),
        }
    }
}

fn complex_json(z: Complex64) -> serde_json::Value {
    json!({ "re": z.re, "im": z.im })
}

fn render_result(
    label: serde_json::Value,
    r: &EvalResult,
    fmt: OutputFormat,
    digits: usize,
) -> String {
    match fmt {
        OutputFormat::Json => {
            let mut obj = label;
            let map = obj.as_object_mut().expect("label is an object");
            map.insert("value".into(), complex_json(r.value));
            map.insert("err_estimate".into(), json!(r.err_estimate));
            map.insert("method".into(), json!(r.method.as_str()));
            map.insert("work".into(), json!(r.work));
            format!(
                "{}\n",
                serde_json::to_string_pretty(&obj).expect("finite values")
            )
        }
        OutputFormat::Csv => format!(
            "value_re,value_im,err_estimate,method,work\n{:?},{:?},{:?},{},{}\n",
            r.value.re, r.value.im, r.err_estimate, r.method, r.work
        ),
        OutputFormat::Table => format!(
            "value         {}\nerr_estimate  {:.3e}\nmethod        {}\nwork          {}\n",
            format::complex(r.value, digits),
            r.err_estimate,
            r.method,
            r.work
        ),
    }
}

fn cmd_eval(function: &str, s: &str, flags: &CommonFlags) -> Output {
    let parsed = function
        .parse::<FunctionId>()
        .and_then(|id| format::parse_complex(s).map(|s| (id, s)));
    let (id, s) = match parsed {
        Ok(v) => v,
        Err(e) => return Output::error(&e),
    };
    match series::evaluate(id, s, &flags.series()) {
        Ok(r) => {
            let label = json!({ "function": id.as_str(), "s": complex_json(s) });
            let fmt = flags.format.unwrap_or(OutputFormat::Table);
            Output::ok(render_result(label, &r, fmt, flags.precision))
        }
        Err(e) => Output::error(&e),
    }
}

fn required<T>(v: Option<T>, name: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::InvalidSettings(format!("--{name} is required for this integrand")))
}

fn cmd_integrate(
    family: Family,
    a: Option<f64>,
    s: Option<&str>,
    n: Option<u64>,
    flags: &CommonFlags,
) -> Output {
    let cfg = flags.checks();
    let s = match s.map(format::parse_complex).transpose() {
        Ok(s) => s,
        Err(e) => return Output::error(&e),
    };
    let run = || -> Result<EvalResult, Error> {
        match family {
            Family::Formula30Lhs => {
                identities::formula30_lhs_integral(required(a, "a")?, required(s, "s")?, &cfg)
            }
            Family::Formula30Rhs => {
                identities::formula30_rhs_integral(required(a, "a")?, required(s, "s")?, &cfg)
            }
            Family::LimitLhs => identities::limit_lhs_integral(required(s, "s")?, &cfg),
            Family::LimitRhs => identities::limit_rhs_integral(required(s, "s")?, &cfg),
            Family::GammaPower => identities::gamma_power_integral(required(s, "s")?, &cfg),
            Family::GammaLog => {
                identities::gamma_log_integral(required(n, "n")?, required(s, "s")?, &cfg)
            }
            Family::Vardi => identities::vardi_integral(&cfg),
            Family::Kummer => identities::kummer_integral(required(a, "a")?, &cfg),
        }
    };
    match run() {
        Ok(r) => {
            let name = family
                .to_possible_value()
                .map(|v| v.get_name().to_string())
                .unwrap_or_default();
            let mut label = json!({ "integrand": name });
            let map = label.as_object_mut().expect("object");
            if let Some(a) = a {
                map.insert("a".into(), json!(a));
            }
            if let Some(s) = s {
                map.insert("s".into(), complex_json(s));
            }
            if let Some(n) = n {
                map.insert("n".into(), json!(n));
            }
            let fmt = flags.format.unwrap_or(OutputFormat::Table);
            Output::ok(render_result(label, &r, fmt, flags.precision))
        }
        Err(e) => Output::error(&e),
    }
}

fn parse_list<T>(text: &str, item: impl Fn(&str) -> Result<T, Error>) -> Result<Vec<T>, Error> {
    text.split(',').map(|t| item(t.trim())).collect()
}

fn parse_real(t: &str) -> Result<f64, Error> {
    t.parse()
        .map_err(|_| Error::InvalidSettings(format!("cannot parse number {t:?}")))
}

fn parse_count(t: &str) -> Result<u64, Error> {
    t.parse()
        .map_err(|_| Error::InvalidSettings(format!("cannot parse positive integer {t:?}")))
}

struct GridOverrides<'a> {
    a: Option<&'a str>,
    s: Option<&'a str>,
    fe_s: Option<&'a str>,
    n: Option<&'a str>,
}

fn build_grid(o: &GridOverrides<'_>) -> Result<ParamGrid, Error> {
    let mut grid = ParamGrid::default();
    if let Some(t) = o.a {
        grid.a_values = parse_list(t, parse_real)?;
    }
    if let Some(t) = o.s {
        grid.s_values = parse_list(t, format::parse_complex)?;
    }
    if let Some(t) = o.fe_s {
        grid.fe_s_values = parse_list(t, format::parse_complex)?;
    }
    if let Some(t) = o.n {
        grid.n_values = parse_list(t, parse_count)?;
    }
    Ok(grid)
}

fn parse_ids(names: &[String]) -> Result<Vec<IdentityId>, Error> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    names.iter().map(|n| n.parse()).collect()
}

fn cmd_verify(names: &[String], overrides: &GridOverrides<'_>, flags: &CommonFlags) -> Output {
    let prepared = parse_ids(names).and_then(|ids| build_grid(overrides).map(|g| (ids, g)));
    let (ids, grid) = match prepared {
        Ok(v) => v,
        Err(e) => return Output::error(&e),
    };
    // a malformed override is a usage error even when it is a domain violation
    let report = match identities::run_grid(&grid, &ids, &flags.checks()) {
        Ok(r) => r,
        Err(e) => {
            let e = match e {
                Error::Domain(m) => Error::InvalidSettings(m),
                other => other,
            };
            return Output::error(&e);
        }
    };
    let stdout = match flags.format.unwrap_or(OutputFormat::Json) {
        OutputFormat::Json => format!("{}\n", report.to_json()),
        OutputFormat::Csv => report.to_csv(),
        OutputFormat::Table => report.to_table(flags.precision),
    };
    Output {
        stdout,
        stderr: String::new(),
        code: if report.overall_pass {
            EXIT_OK
        } else {
            EXIT_VERIFY_FAILED
        },
    }
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let out = match &cli.command {
        Command::Eval { function, s, flags } => cmd_eval(function, s, flags),
        Command::Integrate {
            family,
            a,
            s,
            n,
            flags,
        } => cmd_integrate(*family, *a, s.as_deref(), *n, flags),
        Command::Verify {
            ids,
            a,
            s,
            fe_s,
            n,
            flags,
        } => {
            let overrides = GridOverrides {
                a: a.as_deref(),
                s: s.as_deref(),
                fe_s: fe_s.as_deref(),
                n: n.as_deref(),
            };
            cmd_verify(ids, &overrides, flags)
        }
    };
    let _ = stdout.write_all(out.stdout.as_bytes());
    let _ = stderr.write_all(out.stderr.as_bytes());
    out.code
}
