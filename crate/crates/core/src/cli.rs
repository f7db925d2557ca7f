//! Command-line front end: point evaluation, constants, verification runs
//! and CSV tables.
//!
//! Exit status is 0 on success, 1 when a verification run fails and 2 on
//! usage, domain and pole errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::argamma::identities::{Extra, IdentityId};
use crate::argamma::{self, ArithParams};
use crate::seqgamma::{gamma_seq, EvalResult, EvalStatus, SequenceSpec, TruncationPolicy};
use crate::verify::{self, SuiteConfig};
use crate::{GammaError, Result};

/// Significant digits of plain-text numbers.
pub const PLAIN_DIGITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    Eval,
    Constants,
    Verify,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Function {
    GammaAr,
    GammaArProduct,
    SinAr,
    PsiAr,
    GammaSeqArith,
}

impl Function {
    fn name(self) -> &'static str {
        match self {
            Function::GammaAr => "gamma_ar",
            Function::GammaArProduct => "gamma_ar_product",
            Function::SinAr => "sin_ar",
            Function::PsiAr => "psi_ar",
            Function::GammaSeqArith => "gamma_seq_arith",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Plain,
    Structured,
    Csv,
}

/// Everything a single invocation needs. Every field is optional so that a
/// config file and the command line can each supply part of it;
/// [`CliConfig::normalized`] fills the defaults.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CliConfig {
    pub command: Option<Command>,
    pub function: Option<Function>,
    pub a: Option<f64>,
    pub r: Option<f64>,
    pub s_re: Option<f64>,
    pub s_im: Option<f64>,
    pub tol: Option<f64>,
    pub max_terms: Option<u64>,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub h: Option<f64>,
    pub lambda: Option<f64>,
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub suite: Option<String>,
    pub from: Option<f64>,
    pub to: Option<f64>,
    pub step: Option<f64>,
    pub format: Option<Format>,
}

macro_rules! overlay {
    ($dst:ident, $src:ident; $($f:ident),*) => {
        $( if $src.$f.is_some() { $dst.$f = $src.$f.clone(); } )*
    };
}

impl CliConfig {
    /// Fields set in `other` replace those in `self`.
    pub fn overlay(mut self, other: &CliConfig) -> Self {
        overlay!(self, other; command, function, a, r, s_re, s_im, tol, max_terms,
            n, k, h, lambda, b, alpha, suite, from, to, step, format);
        self
    }

    /// Fills defaults: `a = r = 1`, `s_im = 0`, `tol = 1e-12`, plain output
    /// except CSV for tables, suite `all`. Idempotent.
    pub fn normalized(mut self) -> Self {
        let policy = TruncationPolicy::default();
        let verify_cmd = self.command == Some(Command::Verify);
        if !verify_cmd {
            self.a.get_or_insert(1.0);
            self.r.get_or_insert(1.0);
        }
        if matches!(self.command, Some(Command::Eval)) {
            self.s_im.get_or_insert(0.0);
        }
        if matches!(self.command, Some(Command::Eval | Command::Table)) {
            self.tol.get_or_insert(policy.tol);
            self.max_terms.get_or_insert(policy.max_terms);
        }
        if verify_cmd {
            self.suite.get_or_insert_with(|| "all".into());
        }
        let default_format = match self.command {
            Some(Command::Table) => Format::Csv,
            _ => Format::Plain,
        };
        self.format.get_or_insert(default_format);
        self
    }

    fn extra(&self) -> Extra {
        Extra {
            n: self.n,
            k: self.k,
            lambda: self.lambda,
            h: self.h,
            b: self.b,
            alpha: self.alpha,
        }
    }

    fn params(&self) -> Result<ArithParams> {
        ArithParams::new(self.a.unwrap_or(1.0), self.r.unwrap_or(1.0))
    }

    fn policy(&self) -> Result<TruncationPolicy> {
        let default = TruncationPolicy::default();
        let policy = TruncationPolicy::with_tol(self.tol.unwrap_or(default.tol))
            .max_terms(self.max_terms.unwrap_or(default.max_terms));
        policy.validate()?;
        Ok(policy)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "gengamma",
    version,
    about = "Generalized gamma functions Γ_{a,r}(s)"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// JSON file with default values for any option.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Evaluate one function at one point.
    Eval {
        #[arg(value_enum)]
        function: Option<Function>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_negative_numbers = true)]
        s_re: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        s_im: Option<f64>,
        #[command(flatten)]
        trunc: TruncArgs,
    },
    /// Print the constants of a parameter set.
    Constants {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run the identity registry.
    Verify {
        /// `all` or one identity name.
        #[arg(long)]
        suite: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        extra: ExtraArgs,
    },
    /// Tabulate a function over a real range.
    Table {
        #[arg(value_enum)]
        function: Option<Function>,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_negative_numbers = true)]
        from: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        to: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        step: Option<f64>,
        #[command(flatten)]
        trunc: TruncArgs,
    },
}

#[derive(Debug, Args)]
struct ParamArgs {
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
}

#[derive(Debug, Args)]
struct TruncArgs {
    /// Absolute tolerance of product evaluations.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    max_terms: Option<u64>,
}

#[derive(Debug, Args)]
struct ExtraArgs {
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    h: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
}

impl Cli {
    fn into_config(self) -> (Option<PathBuf>, CliConfig) {
        let mut c = CliConfig {
            format: self.format,
            ..CliConfig::default()
        };
        match self.command {
            Sub::Eval {
                function,
                params,
                s_re,
                s_im,
                trunc,
            } => {
                c.command = Some(Command::Eval);
                c.function = function;
                (c.a, c.r) = (params.a, params.r);
                (c.s_re, c.s_im) = (s_re, s_im);
                (c.tol, c.max_terms) = (trunc.tol, trunc.max_terms);
            }
            Sub::Constants { params } => {
                c.command = Some(Command::Constants);
                (c.a, c.r) = (params.a, params.r);
            }
            Sub::Verify {
                suite,
                params,
                extra,
            } => {
                c.command = Some(Command::Verify);
                c.suite = suite;
                (c.a, c.r) = (params.a, params.r);
                (c.n, c.k, c.h) = (extra.n, extra.k, extra.h);
                (c.lambda, c.b, c.alpha) = (extra.lambda, extra.b, extra.alpha);
            }
            Sub::Table {
                function,
                params,
                from,
                to,
                step,
                trunc,
            } => {
                c.command = Some(Command::Table);
                c.function = function;
                (c.a, c.r) = (params.a, params.r);
                (c.from, c.to, c.step) = (from, to, step);
                (c.tol, c.max_terms) = (trunc.tol, trunc.max_terms);
            }
        }
        (self.config, c)
    }
}

enum Failure {
    Verification,
    Usage(String),
}

impl From<GammaError> for Failure {
    fn from(e: GammaError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

type CmdResult = std::result::Result<(), Failure>;

/// Parses `args` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let (path, flags) = cli.into_config();
    let config = match path.map(|p| load_config(&p)).transpose() {
        Ok(file) => file.unwrap_or_default().overlay(&flags).normalized(),
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    match execute(&config, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load_config(path: &PathBuf) -> std::result::Result<CliConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
}

/// Runs a normalized configuration.
fn execute(config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    match config.command {
        Some(Command::Eval) => cmd_eval(config, out),
        Some(Command::Constants) => cmd_constants(config, out),
        Some(Command::Verify) => cmd_verify(config, out),
        Some(Command::Table) => cmd_table(config, out),
        None => Err(Failure::Usage("no command given".into())),
    }
}

/// `x` rounded to `digits` significant digits, without trailing zeros.
pub fn format_sig(x: f64, digits: usize) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x);
    let mag = rounded.abs();
    if rounded == 0.0 || (1e-5..1e15).contains(&mag) {
        rounded.to_string()
    } else {
        let s = format!("{:.*e}", digits.saturating_sub(1), rounded);
        let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
        let mant = if mant.contains('.') {
            mant.trim_end_matches('0').trim_end_matches('.')
        } else {
            mant
        };
        format!("{mant}e{exp}")
    }
}

fn plain(x: f64) -> String {
    format_sig(x, PLAIN_DIGITS)
}

fn plain_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{} {sign} {}i", plain(z.re), plain(z.im.abs()))
}

/// A value together with the product diagnostics, if any.
struct Evaluation {
    value: Complex64,
    product: Option<(f64, u64, EvalStatus)>,
}

impl From<EvalResult<Complex64>> for Evaluation {
    fn from(r: EvalResult<Complex64>) -> Self {
        Self {
            value: r.value,
            product: Some((r.abs_error_bound, r.terms_used, r.status)),
        }
    }
}

fn evaluate(config: &CliConfig, f: Function, s: Complex64) -> Result<Evaluation> {
    let closed = |v: Complex64| Evaluation {
        value: v,
        product: None,
    };
    let (a, r) = (config.a.unwrap_or(1.0), config.r.unwrap_or(1.0));
    match f {
        Function::GammaAr => argamma::gamma_ar(&config.params()?, s).map(closed),
        Function::SinAr => argamma::sin_ar(&config.params()?, s).map(closed),
        Function::PsiAr => argamma::psi_ar(&config.params()?, s).map(closed),
        Function::GammaArProduct => {
            argamma::gamma_ar_product(&config.params()?, s, &config.policy()?).map(Into::into)
        }
        Function::GammaSeqArith => {
            gamma_seq(&SequenceSpec::arithmetic(a, r), s, &config.policy()?).map(Into::into)
        }
    }
}

fn require<T: Copy>(value: Option<T>, name: &str) -> std::result::Result<T, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{name}")))
}

fn cmd_eval(config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let f = require(config.function, "function")?;
    let s = Complex64::new(require(config.s_re, "s-re")?, config.s_im.unwrap_or(0.0));
    let e = evaluate(config, f, s)?;
    match config.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            writeln!(out, "{}", plain_complex(e.value))?;
            if let Some((bound, terms, status)) = e.product {
                writeln!(out, "abs_error_bound: {}", plain(bound))?;
                writeln!(out, "terms_used: {terms}")?;
                writeln!(out, "status: {status}")?;
            }
        }
        Format::Structured => {
            let mut doc = json!({
                "function": f.name(),
                "a": config.a, "r": config.r,
                "s_re": s.re, "s_im": s.im,
                "re": e.value.re, "im": e.value.im,
            });
            if let Some((bound, terms, status)) = e.product {
                doc["abs_error_bound"] = json!(bound);
                doc["terms_used"] = json!(terms);
                doc["status"] = json!(status.to_string());
            }
            writeln!(out, "{doc}")?;
        }
        Format::Csv => match e.product {
            Some((bound, terms, status)) => {
                writeln!(out, "re,im,abs_error_bound,terms_used,status")?;
                writeln!(
                    out,
                    "{},{},{bound},{terms},{status}",
                    e.value.re, e.value.im
                )?;
            }
            None => {
                writeln!(out, "re,im")?;
                writeln!(out, "{},{}", e.value.re, e.value.im)?;
            }
        },
    }
    Ok(())
}

fn cmd_constants(config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let p = config.params()?;
    let gamma = argamma::gamma_ar_constant(&p)?;
    let alpha = argamma::alpha_const(&p)?;
    let at_r = argamma::gamma_ar_at_r(&p)?;
    let mu = if p.a() > 1.0 {
        Some(argamma::mu_ar(&p)?)
    } else {
        None
    };
    let dup = argamma::duplication_constant(&p)?;
    match config.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            writeln!(out, "gamma_ar_constant: {}", plain(gamma))?;
            writeln!(out, "alpha: {}", plain(alpha))?;
            writeln!(out, "gamma_ar_at_r: {}", plain(at_r))?;
            match mu {
                Some(mu) => writeln!(out, "mu: {}", plain(mu))?,
                None => writeln!(out, "mu: undefined (needs a > 1)")?,
            }
            writeln!(out, "duplication_constant: {}", plain(dup))?;
        }
        Format::Structured => {
            let doc = json!({
                "a": p.a(), "r": p.r(),
                "gamma_ar_constant": gamma, "alpha": alpha, "gamma_ar_at_r": at_r,
                "mu": mu, "duplication_constant": dup,
            });
            writeln!(out, "{doc}")?;
        }
        Format::Csv => {
            writeln!(
                out,
                "a,r,gamma_ar_constant,alpha,gamma_ar_at_r,mu,duplication_constant"
            )?;
            let mu = mu.map(|m| m.to_string()).unwrap_or_default();
            writeln!(out, "{},{},{gamma},{alpha},{at_r},{mu},{dup}", p.a(), p.r())?;
        }
    }
    Ok(())
}

fn extra_label(e: &Extra) -> String {
    let mut s = String::new();
    let mut push = |k: &str, v: Option<String>| {
        if let Some(v) = v {
            if !s.is_empty() {
                s.push(';');
            }
            let _ = write!(s, "{k}={v}");
        }
    };
    push("n", e.n.map(|v| v.to_string()));
    push("k", e.k.map(|v| v.to_string()));
    push("lambda", e.lambda.map(|v| v.to_string()));
    push("h", e.h.map(|v| v.to_string()));
    push("b", e.b.map(|v| v.to_string()));
    push("alpha", e.alpha.map(|v| v.to_string()));
    s
}

fn suite_config(config: &CliConfig) -> std::result::Result<SuiteConfig, Failure> {
    let suite = config.suite.clone().unwrap_or_else(|| "all".into());
    let mut sc = SuiteConfig::default();
    if suite != "all" {
        let id: IdentityId = suite.parse()?;
        sc.identities = Some(vec![suite]);
        sc.params = match (config.a, config.r) {
            (None, None) => None,
            (a, r) => Some(vec![(a.unwrap_or(1.0), r.unwrap_or(1.0))]),
        };
        let (cases, why) = verify::cases_for(id, &{
            let mut probe = sc.clone();
            probe.extra = Some(config.extra()).filter(|e| !e.is_empty());
            probe
        });
        if cases.is_empty() {
            return Err(why.unwrap_or(GammaError::EmptyGrid).into());
        }
    } else if let (Some(a), Some(r)) = (config.a, config.r) {
        sc.params = Some(vec![(a, r)]);
        ArithParams::new(a, r)?;
    }
    let extra = config.extra();
    sc.extra = (!extra.is_empty()).then_some(extra);
    Ok(sc)
}

fn cmd_verify(config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let report = verify::run_all(&suite_config(config)?);
    match config.format.unwrap_or(Format::Plain) {
        Format::Plain => {
            for r in &report.reports {
                let verdict = if r.pass { "PASS" } else { "FAIL" };
                let extra = extra_label(&r.extra);
                let extra = if extra.is_empty() {
                    String::new()
                } else {
                    format!(" {extra}")
                };
                match &r.error {
                    Some(e) => writeln!(
                        out,
                        "{verdict} {} a={} r={}{extra}: {e}",
                        r.identity, r.a, r.r
                    )?,
                    None => writeln!(
                        out,
                        "{verdict} {} a={} r={}{extra} points={} max_rel_residual={}",
                        r.identity,
                        r.a,
                        r.r,
                        r.points_tested,
                        r.max_rel_residual.map_or("-".into(), plain),
                    )?,
                }
            }
            let passed = report.reports.iter().filter(|r| r.pass).count();
            let verdict = if report.overall_pass { "pass" } else { "fail" };
            writeln!(
                out,
                "overall: {verdict} ({passed}/{} reports)",
                report.reports.len()
            )?;
        }
        Format::Structured => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).map_err(|e| Failure::Usage(e.to_string()))?
            )?;
        }
        Format::Csv => {
            writeln!(
                out,
                "identity,a,r,extra,points_tested,max_rel_residual,threshold,pass,worst_point_re,worst_point_im"
            )?;
            let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
            for r in &report.reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{}",
                    r.identity,
                    r.a,
                    r.r,
                    extra_label(&r.extra),
                    r.points_tested,
                    opt(r.max_rel_residual),
                    r.threshold,
                    r.pass,
                    opt(r.worst_point_re),
                    opt(r.worst_point_im),
                )?;
            }
        }
    }
    if report.overall_pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

/// Points `from, from + step, …` up to `to`, rounded to 12 significant
/// digits so that decimal steps print cleanly.
fn table_points(from: f64, to: f64, step: f64) -> Vec<f64> {
    let mut points = Vec::new();
    let slack = 1e-9 * step;
    let mut i = 0u32;
    loop {
        let s = from + f64::from(i) * step;
        if s > to + slack {
            break;
        }
        points.push(format!("{s:.11e}").parse().unwrap_or(s));
        i += 1;
    }
    points
}

fn cmd_table(config: &CliConfig, out: &mut dyn Write) -> CmdResult {
    let f = require(config.function, "function")?;
    let from = require(config.from, "from")?;
    let to = require(config.to, "to")?;
    let step = require(config.step, "step")?;
    if !(step > 0.0 && step.is_finite() && from.is_finite() && to.is_finite()) {
        return Err(Failure::Usage(
            "table needs finite bounds and step > 0".into(),
        ));
    }
    if (to - from) / step > 1e7 {
        return Err(Failure::Usage("table range has more than 1e7 rows".into()));
    }
    if f != Function::GammaSeqArith {
        config.params()?;
    }
    config.policy()?;
    let mut rows = Vec::new();
    let mut excluded = 0usize;
    for s in table_points(from, to, step) {
        match evaluate(config, f, Complex64::new(s, 0.0)) {
            Ok(e) => rows.push((s, e.value)),
            Err(GammaError::Domain(msg)) => return Err(Failure::Usage(msg)),
            Err(_) => excluded += 1,
        }
    }
    match config.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            writeln!(out, "s,re,im")?;
            for (s, v) in &rows {
                writeln!(out, "{s},{},{}", v.re, v.im)?;
            }
            if excluded > 0 {
                writeln!(out, "# excluded: {excluded}")?;
            }
        }
        Format::Plain => {
            for (s, v) in &rows {
                writeln!(out, "{}\t{}", plain(*s), plain_complex(*v))?;
            }
            if excluded > 0 {
                writeln!(out, "# excluded: {excluded}")?;
            }
        }
        Format::Structured => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(s, v)| json!({"s": s, "re": v.re, "im": v.im}))
                .collect();
            let doc = json!({"function": f.name(), "a": config.a, "r": config.r, "rows": rows, "excluded": excluded});
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["gengamma"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn format_sig_trims() {
        assert_eq!(format_sig(6.0, 10), "6");
        assert_eq!(format_sig(2.0 / std::f64::consts::PI, 10), "0.6366197724");
        assert_eq!(format_sig(1.5e-20, 10), "1.5e-20");
        assert_eq!(format_sig(-2.5e300, 10), "-2.5e300");
    }

    #[test]
    fn eval_factorial() {
        let (code, out, _) = run_str(&["eval", "gamma_ar", "--a", "1", "--r", "1", "--s-re", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "6 + 0i");
    }

    #[test]
    fn eval_negative_pole() {
        let (code, out, err) = run_str(&["eval", "gamma_ar", "--s-re", "-1"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert_eq!(err.lines().count(), 1);
        assert!(err.contains("pole"));
    }

    #[test]
    fn constants_reject_zero_a() {
        assert_eq!(run_str(&["constants", "--a", "0", "--r", "1"]).0, 2);
    }

    #[test]
    fn verify_bogus_suite() {
        assert_eq!(run_str(&["verify", "--suite", "bogus"]).0, 2);
    }

    #[test]
    fn normalized_is_idempotent() {
        let c = CliConfig {
            command: Some(Command::Table),
            ..CliConfig::default()
        }
        .normalized();
        assert_eq!(c.clone().normalized(), c);
        assert_eq!(c.format, Some(Format::Csv));
    }

    #[test]
    fn table_points_hit_the_end() {
        assert_eq!(table_points(0.0, 1.0, 0.1).len(), 11);
        assert_eq!(table_points(0.0, 1.0, 0.1)[3], 0.3);
        assert!(table_points(1.0, 0.0, 0.5).is_empty());
    }
}
