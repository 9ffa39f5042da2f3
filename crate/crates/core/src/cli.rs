//! Command-line front end: `verify`, `quad`, `bounds`, `audit`, `kernels`.
//!
//! Exit codes: 0 success, 1 a residual or ASSERT bound failed, 2 invalid
//! configuration.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::appell::{parse_seq, power_sequence, HarmonicSeq};
use crate::bounds::{self, conjugate, p_label};
use crate::error::Error;
use crate::funcmodel::SmoothFn;
use crate::kernels::{self, KernelVariant};
use crate::oracle;
use crate::rational::{format_rational, int, parse_rational, to_f64, Rational, RationalPoly};
use crate::report::{
    AuditConstants, AuditData, BoundConstant, BoundReportOut, BoundsData, ConvergenceOut, ConvergenceRow, NumOut,
    QuadData, Report, VerifyCase, VerifyData, F17,
};
use crate::rules::{self, FinkFactorial, NodePreset, Number, RuleSpec, RuleVariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

const VERIFY_MAX_DEGREE: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "finkquad", version, about = "Two-point quadrature rules with exact remainders and error-bound audits")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the quadrature identity over a grid of functions, orders and nodes.
    Verify(CommonArgs),
    /// Apply one rule, optionally with a composite convergence table.
    Quad(CommonArgs),
    /// Evaluate the asserted `L_p` bounds.
    Bounds(CommonArgs),
    /// Run every bound, asserted and audited, for one configuration.
    Audit(CommonArgs),
    /// Tabulate the kernels as CSV.
    Kernels(CommonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    #[value(name = "G", alias = "g")]
    G,
    #[value(name = "TF", alias = "tf")]
    Tf,
    #[value(name = "fink", alias = "FINK")]
    Fink,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KernelArg {
    Canonical,
    Printed,
}

impl From<KernelArg> for KernelVariant {
    fn from(k: KernelArg) -> Self {
        match k {
            KernelArg::Canonical => KernelVariant::Canonical,
            KernelArg::Printed => KernelVariant::AsPrinted,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NodeArg {
    Left,
    Quarter,
    Midpoint,
}

impl From<NodeArg> for NodePreset {
    fn from(n: NodeArg) -> Self {
        match n {
            NodeArg::Left => NodePreset::Left,
            NodeArg::Quarter => NodePreset::Quarter,
            NodeArg::Midpoint => NodePreset::Midpoint,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FactorialArg {
    /// `(n-k)/k!`
    K,
    /// `(n-k)/n!`
    N,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Function: poly:<c0,c1,..>, exp:<r>, sin:<w>:<phase>, cos:<w>:<phase>, recip:<c>.
    #[arg(long = "fn")]
    pub func: Option<String>,
    /// Harmonic sequence: power:<center> or seq:<poly>;<poly>;...
    #[arg(long)]
    pub seq: Option<String>,
    /// Rule order(s), comma separated.
    #[arg(long)]
    pub n: Option<String>,
    /// Node(s), comma separated exact rationals or decimals.
    #[arg(long, conflicts_with = "node", allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, value_enum)]
    pub node: Option<NodeArg>,
    #[arg(long, value_enum, default_value = "G")]
    pub variant: VariantArg,
    #[arg(long, value_enum, default_value = "canonical")]
    pub kernel: KernelArg,
    /// Factorial convention of the one-point rule.
    #[arg(long, value_enum, default_value = "k")]
    pub factorial: FactorialArg,
    /// Norm exponent(s) of f^(n), comma separated; `inf` for the sup norm.
    #[arg(long)]
    pub p: Option<String>,
    /// Conjugate exponent; alternative to --p.
    #[arg(long)]
    pub q: Option<String>,
    /// Composite panel counts, comma separated.
    #[arg(long)]
    pub panels: Option<String>,
    /// Tolerance for numeric residuals.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub b: String,
    /// Number of grid points for `kernels`.
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    /// Write output here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Invalid configuration, tagged with the offending flag.
#[derive(Debug)]
pub struct ConfigError {
    pub field: &'static str,
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "--{}: {}", self.field, self.message)
    }
}

enum Failure {
    Config(ConfigError),
    Runtime(Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_)
            | Error::NodeRange { .. }
            | Error::InvalidSequence(_)
            | Error::Parse(_)
            | Error::OrderExceeded { .. }
            | Error::Unrepresentable(_) => Failure::Config(ConfigError { field: "config", message: e.to_string() }),
            other => Failure::Runtime(other),
        }
    }
}

fn cfg<T>(field: &'static str, r: crate::Result<T>) -> Result<T, ConfigError> {
    r.map_err(|e| ConfigError { field, message: e.to_string() })
}

fn bad(field: &'static str, message: impl Into<String>) -> ConfigError {
    ConfigError { field, message: message.into() }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|p| !p.is_empty())
}

fn parse_orders(s: &str) -> Result<Vec<usize>, ConfigError> {
    let orders = split_list(s)
        .map(|p| p.parse::<usize>().map_err(|_| bad("n", format!("'{p}' is not a non-negative integer"))))
        .collect::<Result<Vec<_>, _>>()?;
    if orders.is_empty() || orders.contains(&0) {
        return Err(bad("n", "orders must be positive"));
    }
    Ok(orders)
}

fn parse_exponent(field: &'static str, s: &str) -> Result<f64, ConfigError> {
    let v = match s.trim() {
        "inf" | "infinity" | "∞" => f64::INFINITY,
        other => other.parse::<f64>().map_err(|_| bad(field, format!("'{other}' is not a number")))?,
    };
    if !(v >= 1.0) {
        return Err(bad(field, format!("exponent must be >= 1, got {s}")));
    }
    Ok(v)
}

/// Validated view of the shared flags.
struct Config {
    args: CommonArgs,
    a: Rational,
    b: Rational,
}

impl Config {
    fn new(args: CommonArgs) -> Result<Config, ConfigError> {
        let a = cfg("a", parse_rational(&args.a))?;
        let b = cfg("b", parse_rational(&args.b))?;
        if a >= b {
            return Err(bad("b", format!("interval needs a < b, got [{}, {}]", args.a, args.b)));
        }
        if !(args.tol > 0.0) {
            return Err(bad("tol", "tolerance must be positive"));
        }
        Ok(Config { args, a, b })
    }

    fn mid(&self) -> Rational {
        (&self.a + &self.b) / int(2)
    }

    fn func(&self) -> Result<Option<SmoothFn>, ConfigError> {
        match &self.args.func {
            None => Ok(None),
            Some(s) => {
                let f = cfg("fn", SmoothFn::parse(s))?;
                cfg("fn", f.check_interval(to_f64(&self.a), to_f64(&self.b)))?;
                Ok(Some(f))
            }
        }
    }

    fn require_func(&self) -> Result<SmoothFn, ConfigError> {
        self.func()?.ok_or_else(|| bad("fn", "a function is required"))
    }

    fn orders(&self, default: &[usize]) -> Result<Vec<usize>, ConfigError> {
        match &self.args.n {
            None => Ok(default.to_vec()),
            Some(s) => parse_orders(s),
        }
    }

    fn single_order(&self, default: usize) -> Result<usize, ConfigError> {
        match self.orders(&[default])?.as_slice() {
            [n] => Ok(*n),
            _ => Err(bad("n", "this command takes a single order")),
        }
    }

    fn nodes(&self, default: Vec<Rational>) -> Result<Vec<Rational>, ConfigError> {
        if let Some(node) = self.args.node {
            return Ok(vec![NodePreset::from(node).node(&self.a, &self.b)]);
        }
        match &self.args.x {
            None => Ok(default),
            Some(s) => {
                let xs = split_list(s).map(|p| cfg("x", parse_rational(p))).collect::<Result<Vec<_>, _>>()?;
                if xs.is_empty() {
                    return Err(bad("x", "empty node list"));
                }
                Ok(xs)
            }
        }
    }

    fn single_node(&self) -> Result<Rational, ConfigError> {
        match self.nodes(vec![self.mid()])?.as_slice() {
            [x] => Ok(x.clone()),
            _ => Err(bad("x", "this command takes a single node")),
        }
    }

    /// Sequence for order `n`: `--seq`, else powers about the midpoint.
    fn seq(&self, n: usize) -> Result<HarmonicSeq, ConfigError> {
        match &self.args.seq {
            Some(s) => cfg("seq", parse_seq(s, n + 1)),
            None => Ok(power_sequence(&self.mid(), n + 1)),
        }
    }

    fn variant(&self, n: usize) -> Result<RuleVariant, ConfigError> {
        Ok(match self.args.variant {
            VariantArg::G => RuleVariant::G,
            VariantArg::Tf => RuleVariant::TF(self.seq(n)?),
            VariantArg::Fink => RuleVariant::Fink,
        })
    }

    fn rule(&self, n: usize, x: &Rational) -> Result<RuleSpec, ConfigError> {
        let factorial = match self.args.factorial {
            FactorialArg::K => FinkFactorial::K,
            FactorialArg::N => FinkFactorial::PrintedN,
        };
        let spec = RuleSpec::new(n, self.a.clone(), self.b.clone(), x.clone(), self.variant(n)?)
            .with_kernel(self.args.kernel.into())
            .with_fink_factorial(factorial);
        cfg("x", spec.validate())?;
        Ok(spec)
    }

    /// Exponents from `--p` or `--q` (as conjugates); both must agree.
    fn exponents(&self) -> Result<Vec<f64>, ConfigError> {
        let ps = match &self.args.p {
            Some(s) => Some(split_list(s).map(|p| parse_exponent("p", p)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        let qs = match &self.args.q {
            Some(s) => Some(split_list(s).map(|q| parse_exponent("q", q)).collect::<Result<Vec<_>, _>>()?),
            None => None,
        };
        match (ps, qs) {
            (Some(ps), None) => Ok(ps),
            (None, Some(qs)) => Ok(qs.into_iter().map(conjugate).collect()),
            (None, None) => Ok(vec![1.0, 2.0, f64::INFINITY]),
            (Some(ps), Some(qs)) => {
                let agree = ps.len() == qs.len()
                    && ps.iter().zip(&qs).all(|(p, q)| {
                        let c = conjugate(*p);
                        c == *q || (c - q).abs() <= 1e-12 * q.abs()
                    });
                if agree {
                    Ok(ps)
                } else {
                    Err(bad("q", "--q must list the conjugates of --p"))
                }
            }
        }
    }

    fn panels(&self) -> Result<Option<Vec<usize>>, ConfigError> {
        match &self.args.panels {
            None => Ok(None),
            Some(s) => {
                let ps = split_list(s)
                    .map(|p| match p.parse::<usize>() {
                        Ok(v) if v > 0 => Ok(v),
                        _ => Err(bad("panels", format!("'{p}' is not a positive integer"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if ps.is_empty() {
                    return Err(bad("panels", "empty panel list"));
                }
                Ok(Some(ps))
            }
        }
    }
}

/// Command output: JSON report or CSV text.
enum Output {
    Json(Report),
    Csv(String),
}

/// Parses `args` (program name first) and runs the command, writing the
/// result to stdout or `--out` and diagnostics to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (args, result) = match cli.command {
        Command::Verify(a) => (a.clone(), Config::new(a).map_err(Failure::from).and_then(|c| cmd_verify(&c))),
        Command::Quad(a) => (a.clone(), Config::new(a).map_err(Failure::from).and_then(|c| cmd_quad(&c))),
        Command::Bounds(a) => (a.clone(), Config::new(a).map_err(Failure::from).and_then(|c| cmd_bounds(&c))),
        Command::Audit(a) => (a.clone(), Config::new(a).map_err(Failure::from).and_then(|c| cmd_audit(&c))),
        Command::Kernels(a) => (a.clone(), Config::new(a).map_err(Failure::from).and_then(|c| cmd_kernels(&c))),
    };
    let output = match result {
        Ok(o) => o,
        Err(Failure::Config(e)) => {
            let _ = writeln!(err, "finkquad: invalid configuration: {e}");
            return EXIT_CONFIG;
        }
        Err(Failure::Runtime(e)) => {
            let _ = writeln!(err, "finkquad: {e}");
            return EXIT_FAILURE;
        }
    };
    let (text, code) = match output {
        Output::Json(report) => match report.to_json() {
            Ok(json) => (json + "\n", if report.ok { EXIT_OK } else { EXIT_FAILURE }),
            Err(e) => {
                let _ = writeln!(err, "finkquad: {e}");
                return EXIT_FAILURE;
            }
        },
        Output::Csv(text) => (text, EXIT_OK),
    };
    let written = match &args.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| format!("writing stdout: {e}")),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "finkquad: {e}");
        return EXIT_CONFIG;
    }
    code
}

fn num_out(n: &Number) -> NumOut {
    NumOut::from(n)
}

fn monomial_grid() -> Vec<SmoothFn> {
    (0..=VERIFY_MAX_DEGREE).map(|m| SmoothFn::poly(RationalPoly::monomial(int(1), m))).collect()
}

fn cmd_verify(c: &Config) -> Result<Output, Failure> {
    let funcs = match c.func()? {
        Some(f) => vec![f],
        None => monomial_grid(),
    };
    let orders = c.orders(&[1, 2, 3, 4, 5])?;
    let default_nodes = match c.args.variant {
        VariantArg::Fink => vec![c.a.clone(), c.mid(), c.b.clone()],
        _ => NodePreset::ALL.iter().map(|p| p.node(&c.a, &c.b)).collect(),
    };
    let nodes = c.nodes(default_nodes)?;
    let mut cases = Vec::new();
    for f in &funcs {
        for &n in &orders {
            for x in &nodes {
                let spec = c.rule(n, x)?;
                let residual = rules::identity_residual(&spec, f)?;
                let passed = match &residual {
                    Number::Exact(r) => r == &int(0),
                    Number::Approx(r) => r.abs() <= c.args.tol,
                };
                cases.push(VerifyCase {
                    rule: spec.variant.name().to_string(),
                    kernel: spec.kernel.as_str().to_string(),
                    func: f.to_string(),
                    n,
                    x: format_rational(x),
                    a: format_rational(&c.a),
                    b: format_rational(&c.b),
                    residual: num_out(&residual),
                    passed,
                });
            }
        }
    }
    let failures = cases.iter().filter(|c| !c.passed).count();
    Ok(Output::Json(Report::verify(VerifyData { tol: F17(c.args.tol), cases, failures })))
}

fn cmd_quad(c: &Config) -> Result<Output, Failure> {
    let f = c.require_func()?;
    let n = c.single_order(2)?;
    let x = c.single_node()?;
    let spec = c.rule(n, &x)?;
    let result = rules::quad_two_point(&spec, &f)?;
    let integral = rules::reference_integral(&f, &c.a, &c.b)?;
    let convergence = match c.panels()? {
        Some(panels) if panels.iter().any(|&p| p > 1) => {
            let mut rows = Vec::new();
            for &p in &panels {
                let r = rules::composite_rule(&spec, &f, p)?;
                rows.push(ConvergenceRow { panels: p, value: num_out(&r.value), error: F17(r.remainder.to_f64().abs()) });
            }
            let samples: Vec<(usize, f64)> = rows.iter().map(|r| (r.panels, r.error.0)).collect();
            let (slope, excluded, note) = match oracle::convergence_order(&samples, to_f64(&(&c.b - &c.a))) {
                Ok(fit) => (Some(F17(fit.slope)), fit.excluded, None),
                Err(e) => (None, Vec::new(), Some(e.to_string())),
            };
            Some(ConvergenceOut { rows, slope, excluded, note })
        }
        _ => None,
    };
    Ok(Output::Json(Report::quad(QuadData {
        rule: spec.variant.name().to_string(),
        kernel: spec.kernel.as_str().to_string(),
        func: f.to_string(),
        n,
        x: format_rational(&x),
        a: format_rational(&c.a),
        b: format_rational(&c.b),
        value: num_out(&result.value),
        remainder: num_out(&result.remainder),
        exact: result.exact,
        integral_ref: num_out(&integral),
        convergence,
    })))
}

fn cmd_bounds(c: &Config) -> Result<Output, Failure> {
    let n = c.single_order(2)?;
    let x = c.single_node()?;
    cfg("x", kernels::check_node(&x, &c.a, &c.b))?;
    let seq = c.seq(n)?;
    let (af, bf, xf) = (to_f64(&c.a), to_f64(&c.b), to_f64(&x));
    let mut constants = Vec::new();
    let mut reports = Vec::new();
    let f = c.func()?;
    for p in c.exponents()? {
        let label = p_label(p);
        constants.push(BoundConstant { name: "lp".into(), p: label.clone(), value: F17(bounds::bound_lp(n, p, xf, af, bf)?) });
        constants.push(BoundConstant {
            name: "lp_seq".into(),
            p: label.clone(),
            value: F17(bounds::bound_lp_seq(n, xf, af, bf, &seq, p)?),
        });
        constants.push(BoundConstant {
            name: "lp_seq_sup".into(),
            p: label,
            value: F17(bounds::bound_lp_seq_sup(n, conjugate(p), xf, af, bf, &seq)?),
        });
        if let Some(f) = &f {
            reports.push(bounds::report_lp(f, n, p, &x, &c.a, &c.b)?);
            reports.push(bounds::report_lp_seq(f, n, p, &x, &c.a, &c.b, &seq)?);
            reports.push(bounds::report_lp_seq_sup(f, n, p, &x, &c.a, &c.b, &seq)?);
        }
    }
    let assert_failures = reports.iter().filter(|r| r.is_assert_failure()).count();
    Ok(Output::Json(Report::bounds(BoundsData {
        n,
        x: format_rational(&x),
        a: format_rational(&c.a),
        b: format_rational(&c.b),
        seq: seq.to_string(),
        constants,
        reports: reports.iter().map(BoundReportOut::from).collect(),
        assert_failures,
    })))
}

fn cmd_audit(c: &Config) -> Result<Output, Failure> {
    let f = c.require_func()?;
    let n = c.single_order(2)?;
    if n < 2 {
        return Err(bad("n", "audit needs n >= 2").into());
    }
    let x = c.single_node()?;
    let seq = c.seq(n)?;
    let out = bounds::audit(&f, n, &x, &c.a, &c.b, Some(&seq))?;
    Ok(Output::Json(Report::audit(AuditData {
        func: f.to_string(),
        n,
        x: format_rational(&x),
        a: format_rational(&c.a),
        b: format_rational(&c.b),
        seq: seq.to_string(),
        constants: AuditConstants {
            a: format_rational(&bounds::const_a(n)?),
            b: format_rational(&bounds::const_b(n)?),
        },
        assert_failures: out.assert_failures(),
        reports: out.reports.iter().map(BoundReportOut::from).collect(),
        notes: out.notes,
    })))
}

#[derive(Serialize)]
struct CsvRow {
    t: f64,
    #[serde(rename = "S")]
    s: f64,
    p: f64,
    #[serde(rename = "K_canonical")]
    k_canonical: f64,
    #[serde(rename = "K_printed")]
    k_printed: f64,
}

fn cmd_kernels(c: &Config) -> Result<Output, Failure> {
    let n = c.single_order(2)?;
    let x = c.single_node()?;
    let rows = kernels::tabulate(n, to_f64(&x), to_f64(&c.a), to_f64(&c.b), c.args.points)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        let row = CsvRow { t: r.t, s: r.s, p: r.p, k_canonical: r.k_canonical, k_printed: r.k_printed };
        w.serialize(row).map_err(|e| Error::Parse(format!("csv: {e}")))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(format!("csv: {e}")))?;
    Ok(Output::Csv(String::from_utf8(bytes).map_err(|e| Error::Parse(format!("csv: {e}")))?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("finkquad").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exponents_parse() {
        assert_eq!(parse_exponent("p", "inf").unwrap(), f64::INFINITY);
        assert_eq!(parse_exponent("p", "2").unwrap(), 2.0);
        assert!(parse_exponent("p", "0.5").is_err());
        assert!(parse_exponent("p", "x").is_err());
    }

    #[test]
    fn orders_parse() {
        assert_eq!(parse_orders("1, 2,3").unwrap(), vec![1, 2, 3]);
        assert!(parse_orders("0").is_err());
        assert!(parse_orders("").is_err());
        assert!(parse_orders("two").is_err());
    }

    #[test]
    fn config_errors_exit_2() {
        assert_eq!(run_capture(&["quad", "--fn", "poly:0,1", "--a", "1", "--b", "0"]).0, EXIT_CONFIG);
        assert_eq!(run_capture(&["quad", "--fn", "bogus:1"]).0, EXIT_CONFIG);
        assert_eq!(run_capture(&["quad", "--fn", "poly:1", "--x", "0.9"]).0, EXIT_CONFIG);
        assert_eq!(run_capture(&["quad", "--fn", "poly:1", "--x", "0", "--node", "left"]).0, EXIT_CONFIG);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_CONFIG);
        let (code, _, err) = run_capture(&["audit", "--fn", "exp:1", "--n", "1"]);
        assert_eq!(code, EXIT_CONFIG);
        assert!(err.contains("--n"), "{err}");
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = run_capture(&["--help"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("verify"));
    }

    #[test]
    fn kernels_csv_header() {
        let (code, out, _) = run_capture(&["kernels", "--n", "2", "--x", "0", "--points", "3"]);
        assert_eq!(code, EXIT_OK);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("t,S,p,K_canonical,K_printed"));
        assert_eq!(lines.count(), 3);
    }
}
