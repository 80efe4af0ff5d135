//! Command-line front end for the `mpschur` library.
//!
//! [`run`] parses arguments, writes results to the given sinks and returns the
//! process exit code: [`EXIT_OK`], [`EXIT_VERIFY_FAILED`], [`EXIT_USAGE`] or
//! [`EXIT_DATA`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mpschur::multiparam::{
    characters, combinatorial_eval, factorized_eval, interpolate, s_mp, sergeev_pragacz_eval, transition_expand,
    RibbonFactors,
};
use mpschur::rational::{format_rational, parse_rational_list};
use mpschur::tableaux::{dim_skew, dim_straight, enumerate_diagonal_strict};
use mpschur::verify::{parse_suites, run_suites, Suite, VerifyConfig};
use mpschur::{EvalPoint, ParamSequence, Partition, Rational, SchurExpansion, SkewShape, WindowPolicy};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mpschur", version, about = "Exact multiparameter Schur functions")]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Warn instead of failing when a custom sequence is read outside its window.
    #[arg(long, global = true)]
    pub permissive: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Schur expansion of s_{mu;a}.
    Expand {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_params)]
        params: ParamSequence,
        #[arg(long, value_enum, default_value_t = Basis::Schur)]
        basis: Basis,
    },
    /// Exact value of s_{mu;a} at a point (x; y).
    Eval {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_params)]
        params: ParamSequence,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_enum, default_value_t = Method::Jt)]
        method: Method,
    },
    /// dim nu, dim(mu, nu), or both sides of the dimension ratio identity.
    Dim {
        #[arg(long, value_parser = parse_partition)]
        mu: Option<Partition>,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, requires = "mu")]
        ratio: bool,
    },
    /// Diagonal-strict tableaux of shape mu, one per line.
    Tableaux {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_entry: u32,
    },
    /// The ribbon polynomial f_{nu;a}(u, v) in factored form.
    Ribbon {
        #[arg(long, value_parser = parse_skew)]
        shape: SkewShape,
        #[arg(long, value_parser = parse_params)]
        params: ParamSequence,
    },
    /// Coefficients of s_{mu;a} over the functions s_{nu;b}.
    Transition {
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_params)]
        from: ParamSequence,
        #[arg(long, value_parser = parse_params)]
        to: ParamSequence,
    },
    /// Coefficients c(lambda) with f = sum c(lambda) s_{lambda;a}.
    Interpolate {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_parser = parse_params)]
        params: ParamSequence,
        /// JSON file holding f in the Schur basis.
        #[arg(long)]
        input: PathBuf,
    },
    /// Run identity suites and print a pass/fail table.
    Verify {
        /// `t1`, `t2`, `t4`..`t16`, a range like `t10..t16`, `all`, or a comma list.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        #[arg(long, default_value_t = VerifyConfig::default().seed)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Comma-separated rationals.
    #[arg(long, value_parser = parse_rats, allow_hyphen_values = true, default_value = "")]
    pub x: RatList,
    #[arg(long, value_parser = parse_rats, allow_hyphen_values = true, default_value = "")]
    pub y: RatList,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Schur,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Jacobi-Trudi determinant
    Jt,
    /// sum over diagonal-strict tableaux
    Comb,
    /// antisymmetrization
    Sp,
    /// factorized form, needs exactly d(mu) coordinate pairs
    Fact,
    /// every method that accepts the point; they must agree
    All,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Jt => "jt",
            Method::Comb => "comb",
            Method::Sp => "sp",
            Method::Fact => "fact",
            Method::All => "all",
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, mpschur::Error> {
    s.parse()
}

fn parse_params(s: &str) -> Result<ParamSequence, mpschur::Error> {
    s.parse()
}

fn parse_skew(s: &str) -> Result<SkewShape, mpschur::Error> {
    s.parse()
}

/// A comma-separated list of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatList(pub Vec<Rational>);

fn parse_rats(s: &str) -> Result<RatList, mpschur::Error> {
    parse_rational_list(s).map(RatList)
}

/// Failure of a command after parsing.
#[derive(Debug)]
pub enum Failure {
    Core(mpschur::Error),
    Usage(String),
    Verify(String),
    Io(std::io::Error),
}

impl From<mpschur::Error> for Failure {
    fn from(e: mpschur::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Core(e) if e.is_data_error() => EXIT_DATA,
            Failure::Core(_) | Failure::Usage(_) | Failure::Io(_) => EXIT_USAGE,
            Failure::Verify(_) => EXIT_VERIFY_FAILED,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(s) | Failure::Verify(s) => f.write_str(s),
            Failure::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
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
    match execute(&cli, out) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn policy(cli: &Cli, a: &ParamSequence) -> ParamSequence {
    let p = if cli.permissive { WindowPolicy::Permissive } else { WindowPolicy::Strict };
    a.clone().with_policy(p)
}

fn emit(out: &mut dyn Write, json: bool, value: Value, text: &str) -> Result<(), Failure> {
    if json {
        writeln!(out, "{}", serde_json::to_string(&value).expect("serializable"))?;
    } else {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Expand { mu, params, basis: Basis::Schur } => {
            let e = s_mp(mu, &policy(cli, params))?.to_schur()?;
            emit(out, cli.json, e.to_json(), &e.to_string())
        }
        Command::Eval { mu, params, point, method } => {
            let a = policy(cli, params);
            let pt = EvalPoint::new(point.x.0.clone(), point.y.0.clone());
            eval(cli, out, mu, &a, &pt, *method)
        }
        Command::Dim { mu, nu, ratio } => dim(cli, out, mu.as_ref(), nu, *ratio),
        Command::Tableaux { mu, max_entry } => {
            for t in enumerate_diagonal_strict(mu, *max_entry as usize) {
                if cli.json {
                    writeln!(out, "{}", json!({ "rows": t.rows() }))?;
                } else {
                    let rows: Vec<String> =
                        t.rows().iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")).collect();
                    writeln!(out, "{}", rows.join(" / "))?;
                }
            }
            Ok(())
        }
        Command::Ribbon { shape, params } => {
            let a = policy(cli, params);
            let factors = RibbonFactors::of_shape(shape)?;
            let text = factors.substituted(&a)?;
            let value = json!({
                "factors": factors.symbolic(),
                "substituted": text,
                "poly": factors.expand(&a)?.to_json(),
            });
            emit(out, cli.json, value, &text)
        }
        Command::Transition { mu, from, to } => {
            let e = SchurExpansion::from_terms(transition_expand(mu, &policy(cli, from), &policy(cli, to))?);
            emit(out, cli.json, e.to_json(), &e.to_string())
        }
        Command::Interpolate { degree, params, input } => {
            let raw = std::fs::read_to_string(input)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let value: Value =
                serde_json::from_str(&raw).map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            let f = SchurExpansion::from_json(&value)?.to_symfunc()?;
            let coeffs = interpolate(&f, &policy(cli, params), *degree)?;
            let e = SchurExpansion::from_terms(coeffs);
            emit(out, cli.json, e.to_json(), &e.to_string())
        }
        Command::Verify { suite, max_size, seed } => {
            let suites = parse_suites(suite).map_err(|e| Failure::Usage(e.to_string()))?;
            verify(cli, out, &suites, VerifyConfig { max_size: *max_size, seed: *seed })
        }
    }
}

fn eval_one(mu: &Partition, a: &ParamSequence, pt: &EvalPoint, method: Method) -> Result<Rational, Failure> {
    Ok(match method {
        Method::Jt => s_mp(mu, a)?.eval_super(pt),
        Method::Comb => combinatorial_eval(mu, a, pt)?,
        Method::Sp => sergeev_pragacz_eval(mu, a, pt)?,
        Method::Fact => {
            if pt.pairs() != mu.depth() {
                return Err(Failure::Usage(format!(
                    "method fact needs exactly d(mu) = {} coordinate pairs, got {}",
                    mu.depth(),
                    pt.pairs()
                )));
            }
            factorized_eval(mu, a, pt)?
        }
        Method::All => unreachable!("expanded by the caller"),
    })
}

fn eval(cli: &Cli, out: &mut dyn Write, mu: &Partition, a: &ParamSequence, pt: &EvalPoint, method: Method) -> Result<(), Failure> {
    if method != Method::All {
        let v = eval_one(mu, a, pt, method)?;
        let s = format_rational(&v);
        return emit(out, cli.json, json!({ "method": method.name(), "value": s }), &s);
    }
    let mut methods = vec![Method::Jt, Method::Comb, Method::Sp];
    if pt.pairs() == mu.depth() {
        methods.push(Method::Fact);
    }
    let values = methods.iter().map(|&m| eval_one(mu, a, pt, m)).collect::<Result<Vec<_>, _>>()?;
    let agree = values.windows(2).all(|w| w[0] == w[1]);
    if cli.json {
        let entries: Vec<Value> = methods
            .iter()
            .zip(&values)
            .map(|(m, v)| json!({ "method": m.name(), "value": format_rational(v) }))
            .collect();
        writeln!(out, "{}", json!({ "agree": agree, "values": entries }))?;
    } else {
        for (m, v) in methods.iter().zip(&values) {
            writeln!(out, "{:<5} {}", m.name(), format_rational(v))?;
        }
    }
    if agree {
        Ok(())
    } else {
        Err(Failure::Verify("evaluation methods disagree".into()))
    }
}

fn dim(cli: &Cli, out: &mut dyn Write, mu: Option<&Partition>, nu: &Partition, ratio: bool) -> Result<(), Failure> {
    match (mu, ratio) {
        (None, _) => {
            let d = dim_straight(nu).to_string();
            emit(out, cli.json, json!({ "nu": nu.parts(), "dim": d }), &d)
        }
        (Some(mu), false) => {
            let d = dim_skew(mu, nu).to_string();
            emit(out, cli.json, json!({ "mu": mu.parts(), "nu": nu.parts(), "dim": d }), &d)
        }
        (Some(mu), true) => {
            let r = characters::dim_ratio_check(mu, nu)?;
            let (lhs, rhs) = (format_rational(&r.lhs), format_rational(&r.rhs));
            let text = format!("{lhs} {} {rhs}", if r.equal() { "=" } else { "!=" });
            emit(out, cli.json, json!({ "lhs": lhs, "rhs": rhs, "equal": r.equal() }), &text)?;
            if r.equal() {
                Ok(())
            } else {
                Err(Failure::Verify("dimension ratio identity fails".into()))
            }
        }
    }
}

fn verify(cli: &Cli, out: &mut dyn Write, suites: &[Suite], config: VerifyConfig) -> Result<(), Failure> {
    let reports = run_suites(suites, config);
    if cli.json {
        let rows: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "suite": r.suite.name(),
                    "description": r.suite.description(),
                    "cases": r.cases,
                    "passed": r.passed(),
                    "failures": r.failures,
                })
            })
            .collect();
        writeln!(out, "{}", Value::Array(rows))?;
    } else {
        let width = reports.iter().map(|r| r.cases.to_string().len()).max().unwrap_or(1);
        for r in &reports {
            let status = if r.passed() { "pass" } else { "FAIL" };
            writeln!(out, "{:<4} {status} {:>width$} cases  {}", r.suite.name(), r.cases, r.suite.description())?;
            for f in &r.failures {
                writeln!(out, "       {f}")?;
            }
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verify(format!("failed suites: {}", failed.join(", "))))
    }
}
