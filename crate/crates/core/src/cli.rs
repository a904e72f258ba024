//! Command-line front end.
//!
//! ```text
//! pqml eval   --alpha 1 --beta 1 --gamma 1 --c 2 --z 1
//! pqml beta   --x 2 --y 2 --p 0.3 --q 0.8
//! pqml wright --upper 2,1 --lower 1,0.8 --lower 3,1 --z 0.4
//! pqml mellin --alpha 1 --beta 1 --gamma 1.2 --c 2.5 --s 1.5 --r 2 --z 0.5
//! pqml fracderiv --integrand monomial --a 2 --lambda -0.5 --x 1 --p 0.3 --q 0.6
//! pqml table  --alpha 0.8 --beta 1 --gamma 1.2 --c 2.5 --p 0.3 --q 0.6 --z-from -1 --z-to 1 --steps 41
//! pqml verify [--config suite.toml] [--identity ID]... [--report out.json] [--extended]
//! ```
//!
//! `--output` selects `plain` (default), `csv` or `structured` (JSON).
//! Plain output prints `--precision` digits after the decimal point (15 by
//! default) and switches to scientific notation outside `[1e-4, 1e16)`; CSV
//! and JSON always print the shortest representation that reads back to the
//! same `f64`.
//!
//! The default evaluator tolerance can be overridden with `--rel-tol` or,
//! failing that, the `PQML_REL_TOL` environment variable. It applies to both
//! quadrature and series summation, and to `verify` as the evaluator
//! tolerance.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failing identity,
//! 2 on argument, configuration or domain errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{domain, Error, Result};
use crate::extbeta::{beta_p, beta_pq};
use crate::fracderiv::{frac_image_pair, rl_apply, ExtKernelParams, FracOrder, IntegrandKind, IntegrandSpec};
use crate::mlcore::{
    ml_extended_p, ml_integral_halfline, ml_integral_trig, ml_integral_unit, ml_prabhakar, ExtendedMl, MLParams,
};
use crate::numcore::{EvalResult, QuadConfig, SeriesConfig};
use crate::transforms::{mellin_brute_force, mellin_numeric, MellinPoint};
use crate::verifier::{run_suite, GridSpec, SuiteConfig};
use crate::wright::{mellin_closed_form_variant, wright_psi, MellinVariant, WrightSpec};

/// Environment variable overriding the default evaluator tolerance.
pub const REL_TOL_ENV: &str = "PQML_REL_TOL";

/// CSV header of `table`.
pub const TABLE_HEADER: &str = "z,value,abs_err_est,terms";

#[derive(Debug, Parser)]
#[command(name = "pqml", version, about = "Extended (p,q)-Mittag-Leffler functions and identity checks")]
pub struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = Output::Plain)]
    pub output: Output,
    /// digits after the decimal point in plain output
    #[arg(long, global = true, default_value_t = 15, value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,
    /// evaluator relative tolerance (overrides PQML_REL_TOL)
    #[arg(long, global = true)]
    pub rel_tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Plain,
    Csv,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a Mittag-Leffler function at one or more points
    Eval(EvalArgs),
    /// Classical or extended beta function
    Beta(BetaCmd),
    /// Wright generalized hypergeometric series
    Wright(WrightCmd),
    /// Mellin transform in (p, q)
    Mellin(MellinCmd),
    /// Classical or extended Riemann-Liouville operator
    Fracderiv(FracCmd),
    /// Run the identity suite
    Verify(VerifyCmd),
    /// Sweep z over a range and print CSV
    Table(TableCmd),
}

#[derive(Debug, Clone, Args)]
pub struct MlArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub q: f64,
}

impl MlArgs {
    fn params(&self) -> Result<MLParams> {
        MLParams::new(self.alpha, self.beta, self.gamma, self.c, self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    /// two-parameter extension E^{γ,c}_{α,β}(z; p, q)
    Pq,
    /// one-parameter extension; --q must equal --p or be omitted
    P,
    /// Prabhakar E^γ_{α,β}(z); --c, --p, --q are ignored
    Prabhakar,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Series,
    Unit,
    HalfLine,
    Trig,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub ml: MlArgs,
    /// evaluation points; repeat the flag or give a comma list
    #[arg(long, required = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub z: Vec<f64>,
    #[arg(long, value_enum, default_value_t = Function::Pq)]
    pub function: Function,
    /// evaluation route for the two-parameter function
    #[arg(long, value_enum, default_value_t = Route::Series)]
    pub route: Route,
    /// order of the z-derivative (series route only)
    #[arg(long, default_value_t = 0)]
    pub derivative: usize,
}

#[derive(Debug, Args)]
pub struct BetaCmd {
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub y: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p: f64,
    /// defaults to --p with the two-parameter kernel
    #[arg(long, allow_negative_numbers = true)]
    pub q: Option<f64>,
    /// use the one-parameter kernel e^{-p/(t(1-t))}
    #[arg(long)]
    pub one_param: bool,
}

#[derive(Debug, Args)]
pub struct WrightCmd {
    /// numerator pair "a,A"; repeatable
    #[arg(long, value_parser = parse_pair, allow_negative_numbers = true)]
    pub upper: Vec<(f64, f64)>,
    /// denominator pair "b,B"; repeatable
    #[arg(long, value_parser = parse_pair, allow_negative_numbers = true)]
    pub lower: Vec<(f64, f64)>,
    #[arg(long, required = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub z: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MellinRoute {
    /// Wright-function closed form
    Closed,
    /// closed form with the (β, γ) lower pair
    AsPrinted,
    /// single quadrature after integrating out p and q analytically
    Numeric,
    /// nested quadrature over p, q and t
    BruteForce,
}

#[derive(Debug, Args)]
pub struct MellinCmd {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub c: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub s: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    #[arg(long, required = true, value_delimiter = ',', allow_negative_numbers = true)]
    pub z: Vec<f64>,
    #[arg(long, value_enum, default_value_t = MellinRoute::Closed)]
    pub route: MellinRoute,
}

#[derive(Debug, Args)]
pub struct FracCmd {
    /// operator order; negative for fractional integrals
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: f64,
    /// evaluation point (ignored with --delta, which uses --z)
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub x: f64,
    /// kernel parameter p
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub p: f64,
    /// kernel parameter q
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub q: f64,
    #[arg(long, default_value = "monomial")]
    pub integrand: IntegrandKind,
    /// power of the τ^a prefactor
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    /// argument scale or exponential rate
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub k: f64,
    #[arg(long, default_value_t = 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,
    #[arg(long, default_value_t = 2.0)]
    pub c: f64,
    /// p of an extended-ml integrand
    #[arg(long, default_value_t = 0.0)]
    pub ml_p: f64,
    /// q of an extended-ml integrand
    #[arg(long, default_value_t = 0.0)]
    pub ml_q: f64,
    /// evaluate both sides of the image of τ^{δ-1} E^λ_{α,β}(τ) instead
    #[arg(long)]
    pub delta: Option<f64>,
    #[arg(long, default_value_t = 1.0)]
    pub z: f64,
}

#[derive(Debug, Args)]
pub struct VerifyCmd {
    /// TOML suite configuration
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// run only these identities; repeatable
    #[arg(long)]
    pub identity: Vec<String>,
    /// write the JSON report here
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// use the larger parameter grid
    #[arg(long)]
    pub extended: bool,
}

#[derive(Debug, Args)]
pub struct TableCmd {
    #[command(flatten)]
    pub ml: MlArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub z_from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub z_to: f64,
    #[arg(long, default_value_t = 21)]
    pub steps: usize,
}

fn parse_pair(s: &str) -> std::result::Result<(f64, f64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected \"a,A\", got {s:?}"))?;
    let a: f64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: f64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    Ok((a, b))
}

/// Parses `args` (program name first), runs the command and returns the
/// exit status. Reads [`REL_TOL_ENV`].
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(REL_TOL_ENV).ok();
    dispatch_with_env(args, env.as_deref(), out, err)
}

/// [`dispatch`] with the environment tolerance passed explicitly.
pub fn dispatch_with_env<I, T>(args: I, env_rel_tol: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, env_rel_tol, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

struct Ctx {
    output: Output,
    precision: usize,
    qcfg: QuadConfig,
    scfg: SeriesConfig,
    rel_tol: Option<f64>,
}

impl Ctx {
    fn num(&self, v: f64) -> String {
        match self.output {
            Output::Plain => fmt_plain(v, self.precision),
            _ => fmt_exact(v),
        }
    }
}

/// Fixed notation with `precision` decimals for `1e-4 <= |v| < 1e16` (and
/// zero), scientific otherwise.
pub fn fmt_plain(v: f64, precision: usize) -> String {
    if !v.is_finite() {
        return fmt_exact(v);
    }
    let a = v.abs();
    if a == 0.0 || (1e-4..1e16).contains(&a) {
        format!("{v:.precision$}")
    } else {
        format!("{v:.precision$e}")
    }
}

/// Shortest decimal that reads back to the same `f64`.
pub fn fmt_exact(v: f64) -> String {
    if v.is_nan() {
        "NaN".into()
    } else if v.is_infinite() {
        if v > 0.0 { "inf" } else { "-inf" }.into()
    } else {
        format!("{v:?}")
    }
}

fn resolve_rel_tol(flag: Option<f64>, env: Option<&str>) -> Result<Option<f64>> {
    let tol = match (flag, env) {
        (Some(t), _) => Some(t),
        (None, Some(s)) => Some(s.trim().parse::<f64>().map_err(|e| domain(format!("{REL_TOL_ENV}={s:?}: {e}")))?),
        (None, None) => None,
    };
    if let Some(t) = tol {
        if !(t > 0.0 && t < 1.0) {
            return Err(domain(format!("relative tolerance must lie in (0, 1), got {t}")));
        }
    }
    Ok(tol)
}

fn execute(cli: &Cli, env_rel_tol: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let rel_tol = resolve_rel_tol(cli.rel_tol, env_rel_tol)?;
    let mut qcfg = QuadConfig::default();
    let mut scfg = SeriesConfig::default();
    if let Some(t) = rel_tol {
        qcfg.rel_tol = t;
        scfg.rel_tol = t;
    }
    let ctx = Ctx { output: cli.output, precision: usize::from(cli.precision), qcfg, scfg, rel_tol };
    let io = |e: std::io::Error| Error::Io { path: PathBuf::from("<stdout>"), source: e };
    match &cli.command {
        Command::Eval(a) => cmd_eval(a, &ctx, out).map_err(io_or(io)),
        Command::Beta(a) => cmd_beta(a, &ctx, out).map_err(io_or(io)),
        Command::Wright(a) => cmd_wright(a, &ctx, out).map_err(io_or(io)),
        Command::Mellin(a) => cmd_mellin(a, &ctx, out).map_err(io_or(io)),
        Command::Fracderiv(a) => cmd_frac(a, &ctx, out).map_err(io_or(io)),
        Command::Table(a) => cmd_table(a, &ctx, out).map_err(io_or(io)),
        Command::Verify(a) => cmd_verify(a, &ctx, out).map_err(io_or(io)),
    }
}

/// Command failures: either a library error or a failed write.
enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn io_or(io: impl Fn(std::io::Error) -> Error) -> impl Fn(Failure) -> Error {
    move |f| match f {
        Failure::Lib(e) => e,
        Failure::Io(e) => io(e),
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn result_json(r: &EvalResult) -> Value {
    json!({
        "value": finite_or_null(r.value),
        "abs_err_est": finite_or_null(r.abs_err_est),
        "effort": r.effort,
        "status": r.status.to_string(),
    })
}

fn finite_or_null(v: f64) -> Value {
    if v.is_finite() {
        json!(v)
    } else {
        Value::Null
    }
}

/// Prints one result per labelled point in the selected format.
fn emit(
    ctx: &Ctx,
    out: &mut dyn Write,
    label_names: &[&str],
    rows: &[(Vec<f64>, EvalResult)],
    effort_name: &str,
) -> std::io::Result<()> {
    match ctx.output {
        Output::Plain => {
            for (labels, r) in rows {
                if rows.len() > 1 {
                    let l: Vec<String> =
                        label_names.iter().zip(labels).map(|(n, v)| format!("{n}={}", fmt_exact(*v))).collect();
                    write!(out, "{}  ", l.join(" "))?;
                }
                writeln!(
                    out,
                    "{}  (abs_err_est {:.2e}, {} {}, {})",
                    ctx.num(r.value),
                    r.abs_err_est,
                    r.effort,
                    effort_name,
                    r.status
                )?;
            }
        }
        Output::Csv => {
            writeln!(out, "{},value,abs_err_est,{effort_name},status", label_names.join(","))?;
            for (labels, r) in rows {
                let l: Vec<String> = labels.iter().map(|v| fmt_exact(*v)).collect();
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    l.join(","),
                    fmt_exact(r.value),
                    fmt_exact(r.abs_err_est),
                    r.effort,
                    r.status
                )?;
            }
        }
        Output::Structured => {
            let arr: Vec<Value> = rows
                .iter()
                .map(|(labels, r)| {
                    let mut v = result_json(r);
                    for (n, x) in label_names.iter().zip(labels) {
                        v[*n] = finite_or_null(*x);
                    }
                    v
                })
                .collect();
            writeln!(out, "{}", Value::Array(arr))?;
        }
    }
    Ok(())
}

fn cmd_eval(a: &EvalArgs, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let mut params = a.ml.params()?;
    if a.derivative > 0 && (a.function != Function::Pq || a.route != Route::Series) {
        return Err(domain("--derivative needs --function pq with the series route").into());
    }
    let z_max = a.z.iter().fold(0.0_f64, |m, z| m.max(z.abs()));
    let mut rows = Vec::with_capacity(a.z.len());
    match (a.function, a.route) {
        (Function::Pq, Route::Series) => {
            let t = ExtendedMl::pq(&params, z_max, a.derivative, &ctx.scfg, &ctx.qcfg)?;
            for &z in &a.z {
                rows.push((vec![z], t.derivative(z, a.derivative)));
            }
        }
        (Function::Pq, route) => {
            for &z in &a.z {
                let r = match route {
                    Route::Unit => ml_integral_unit(&params, z, &ctx.qcfg)?,
                    Route::HalfLine => ml_integral_halfline(&params, z, &ctx.qcfg)?,
                    _ => ml_integral_trig(&params, z, &ctx.qcfg)?,
                };
                rows.push((vec![z], r));
            }
        }
        (Function::P, _) => {
            if a.ml.q != 0.0 && a.ml.q != a.ml.p {
                return Err(domain("--function p takes a single parameter; omit --q or set it equal to --p").into());
            }
            params.q = params.p;
            for &z in &a.z {
                rows.push((vec![z], ml_extended_p(&params, z, &ctx.scfg, &ctx.qcfg)?));
            }
        }
        (Function::Prabhakar, _) => {
            for &z in &a.z {
                rows.push((vec![z], ml_prabhakar(params.alpha, params.beta, params.gamma, z, &ctx.scfg)?));
            }
        }
    }
    emit(ctx, out, &["z"], &rows, "terms")?;
    Ok(0)
}

fn cmd_beta(a: &BetaCmd, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let r = if a.one_param {
        if a.q.is_some_and(|q| q != a.p) {
            return Err(domain("--one-param takes only --p").into());
        }
        beta_p(a.x, a.y, a.p, &ctx.qcfg)?
    } else {
        beta_pq(a.x, a.y, a.p, a.q.unwrap_or(a.p), &ctx.qcfg)?
    };
    let q = a.q.unwrap_or(a.p);
    emit(ctx, out, &["x", "y", "p", "q"], &[(vec![a.x, a.y, a.p, q], r)], "evaluations")?;
    Ok(0)
}

fn cmd_wright(a: &WrightCmd, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let spec = WrightSpec::new(a.upper.clone(), a.lower.clone())?;
    let mut rows = Vec::new();
    for &z in &a.z {
        rows.push((vec![z], wright_psi(&spec, z, &ctx.scfg)?));
    }
    emit(ctx, out, &["z"], &rows, "terms")?;
    Ok(0)
}

fn cmd_mellin(a: &MellinCmd, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let params = MLParams::new(a.alpha, a.beta, a.gamma, a.c, 0.0, 0.0)?;
    let pt = MellinPoint::new(a.s, a.r)?;
    let mut rows = Vec::new();
    for &z in &a.z {
        let r = match a.route {
            MellinRoute::Closed => mellin_closed_form_variant(&params, a.s, a.r, z, MellinVariant::Derived, &ctx.scfg)?,
            MellinRoute::AsPrinted => {
                mellin_closed_form_variant(&params, a.s, a.r, z, MellinVariant::AsPrinted, &ctx.scfg)?
            }
            MellinRoute::Numeric => mellin_numeric(&params, pt, z, &ctx.qcfg)?,
            MellinRoute::BruteForce => {
                let q = if ctx.rel_tol.is_some() { ctx.qcfg } else { ctx.qcfg.with_rel_tol(1e-7) };
                mellin_brute_force(&params, pt, z, &q)?
            }
        };
        rows.push((vec![a.s, a.r, z], r));
    }
    emit(ctx, out, &["s", "r", "z"], &rows, "evaluations")?;
    Ok(0)
}

fn cmd_frac(a: &FracCmd, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let kp = ExtKernelParams::new(a.p, a.q)?;
    if let Some(delta) = a.delta {
        let (lhs, rhs) = frac_image_pair(delta, a.lambda, a.alpha, a.beta, kp, a.z, &ctx.qcfg, &ctx.scfg)?;
        let gap = crate::verifier::rel_err(lhs.value, rhs.value);
        match ctx.output {
            Output::Plain => {
                writeln!(
                    out,
                    "operator side  {}  (abs_err_est {:.2e}, {})",
                    ctx.num(lhs.value),
                    lhs.abs_err_est,
                    lhs.status
                )?;
                writeln!(
                    out,
                    "closed form    {}  (abs_err_est {:.2e}, {})",
                    ctx.num(rhs.value),
                    rhs.abs_err_est,
                    rhs.status
                )?;
                writeln!(out, "relative gap   {gap:.3e}")?;
            }
            Output::Csv => {
                writeln!(out, "z,delta,lambda,lhs,rhs,rel_gap")?;
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    fmt_exact(a.z),
                    fmt_exact(delta),
                    fmt_exact(a.lambda),
                    fmt_exact(lhs.value),
                    fmt_exact(rhs.value),
                    fmt_exact(gap)
                )?;
            }
            Output::Structured => {
                let v = json!({
                    "z": a.z, "delta": delta, "lambda": a.lambda,
                    "lhs": result_json(&lhs), "rhs": result_json(&rhs), "rel_gap": finite_or_null(gap),
                });
                writeln!(out, "{v}")?;
            }
        }
        return Ok(0);
    }
    let order = FracOrder::new(a.lambda)?;
    let spec = match a.integrand {
        IntegrandKind::Monomial => IntegrandSpec::monomial(a.a),
        IntegrandKind::Exponential => IntegrandSpec::exponential(a.a, a.k),
        IntegrandKind::PrabhakarMl => IntegrandSpec::prabhakar(a.a, a.alpha, a.beta, a.gamma, a.k),
        IntegrandKind::ExtendedMl => {
            let ml = MLParams::new(a.alpha, a.beta, a.gamma, a.c, a.ml_p, a.ml_q)?;
            IntegrandSpec::extended(a.a, ml, a.k)
        }
    };
    if !(a.x > 0.0) {
        return Err(domain(format!("x must be positive, got {}", a.x)).into());
    }
    let f = spec.prepare(a.x)?;
    let r = rl_apply(&|t: f64| f.eval(t), order, a.x, kp, &ctx.qcfg)?;
    emit(ctx, out, &["x", "lambda"], &[(vec![a.x, a.lambda], r)], "evaluations")?;
    Ok(0)
}

fn cmd_table(a: &TableCmd, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let params = a.ml.params()?;
    if a.steps < 2 {
        return Err(domain("--steps must be at least 2").into());
    }
    if !(a.z_from.is_finite() && a.z_to.is_finite()) {
        return Err(domain("z range must be finite").into());
    }
    let z_max = a.z_from.abs().max(a.z_to.abs());
    let t = ExtendedMl::pq(&params, z_max, 0, &ctx.scfg, &ctx.qcfg)?;
    let last = (a.steps - 1) as f64;
    let zs: Vec<f64> = (0..a.steps)
        .map(|i| {
            let i = i as f64;
            (a.z_from * (last - i) + a.z_to * i) / last
        })
        .collect();
    if ctx.output == Output::Structured {
        let arr: Vec<Value> = zs
            .iter()
            .map(|&z| {
                let mut v = result_json(&t.eval(z));
                v["z"] = json!(z);
                v
            })
            .collect();
        writeln!(out, "{}", Value::Array(arr))?;
        return Ok(0);
    }
    writeln!(out, "{TABLE_HEADER}")?;
    for z in zs {
        let r = t.eval(z);
        writeln!(out, "{},{},{},{}", fmt_exact(z), fmt_exact(r.value), fmt_exact(r.abs_err_est), r.effort)?;
    }
    Ok(0)
}

fn cmd_verify(a: &VerifyCmd, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let mut cfg = match &a.config {
        Some(p) => SuiteConfig::load(p)?,
        None => SuiteConfig::default(),
    };
    if a.extended {
        cfg.grid = GridSpec::extended();
    }
    if !a.identity.is_empty() {
        cfg.identities = a.identity.clone();
    }
    if let Some(t) = ctx.rel_tol {
        cfg.rel_tol = t;
    }
    let outcome = run_suite(&cfg)?;
    if let Some(path) = &a.report {
        std::fs::write(path, outcome.to_json()).map_err(|e| Error::Io { path: path.clone(), source: e })?;
    }
    match ctx.output {
        Output::Plain => write!(out, "{}", outcome.summary_table())?,
        Output::Structured => write!(out, "{}", outcome.to_json())?,
        Output::Csv => {
            writeln!(out, "identity_id,grid_size,max_rel_err,median_rel_err,tolerance,pass")?;
            for r in &outcome.reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.identity_id,
                    r.grid_size,
                    fmt_exact(r.max_rel_err),
                    fmt_exact(r.median_rel_err),
                    fmt_exact(r.tolerance),
                    r.pass
                )?;
            }
        }
    }
    Ok(if outcome.corrected_pass() { 0 } else { 1 })
}
