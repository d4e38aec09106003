use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qwatson::catalog::{catalog, EpsRule};
use qwatson::exact::{fmt_rational, parse_rational, rational_sqrt};
use qwatson::{
    phi_eval, run_suite, EvalError, IdentityId, ParamPoint, Rational, SampleConfig, SeriesSpec,
    VerifyError,
};

/// Exact rational checking of terminating q-Watson type identities.
#[derive(Parser)]
#[command(name = "qwatson", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the identity catalog.
    List,
    /// Check identities at seeded random rational points.
    Verify(VerifyArgs),
    /// Evaluate one identity, or a raw series, at a given point.
    Eval(EvalArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Check every catalog identity.
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Identity to check; repeatable.
    #[arg(long)]
    id: Vec<String>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Non-degenerate trials per identity.
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 4)]
    eps_max: usize,
    /// Largest numerator or denominator of a sampled rational.
    #[arg(long, default_value_t = 10)]
    height: u64,
    /// Also write the report as JSON to this file.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct EvalArgs {
    /// Catalog identity to evaluate.
    #[arg(long, conflicts_with_all = ["upper", "lower", "arg", "bound"])]
    id: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: String,
    /// Square root of a.
    #[arg(long = "A", allow_hyphen_values = true)]
    sqrt_a: Option<String>,
    /// Square root of c.
    #[arg(long = "C", allow_hyphen_values = true)]
    sqrt_c: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Defaults to the identity's own eps for corollaries, else 0.
    #[arg(long)]
    eps: Option<usize>,
    /// Raw series: comma-separated numerator parameters.
    #[arg(long, allow_hyphen_values = true, requires = "bound")]
    upper: Option<String>,
    /// Raw series: comma-separated denominator parameters.
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    lower: String,
    /// Raw series: the argument z.
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    arg: String,
    /// Raw series: last summation index.
    #[arg(long)]
    bound: Option<usize>,
}

enum Failure {
    /// Bad flags or configuration (exit 2).
    Usage(String),
    /// Evaluation hit a vanishing denominator (exit 3).
    Degenerate(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (msg, code) = match self {
            Failure::Usage(m) => (m, 2),
            Failure::Degenerate(m) => (m, 3),
        };
        eprintln!("error: {msg}");
        ExitCode::from(code)
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        if e.is_degenerate() {
            Failure::Degenerate(format!("degenerate point: {e}"))
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

fn parse(flag: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

fn parse_list(flag: &str, text: &str) -> Result<Vec<Rational>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse(flag, s))
        .collect()
}

fn parse_id(key: &str) -> Result<IdentityId, Failure> {
    key.parse().map_err(|e: qwatson::ParseError| {
        Failure::Usage(format!("{e}; run `qwatson list` for the catalog"))
    })
}

fn list() {
    for case in catalog() {
        println!(
            "{:<8} — {:<40} [{}] {}",
            case.id.key(),
            case.paper_ref,
            case.constraints.summary(),
            case.description
        );
    }
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let ids = if args.all {
        IdentityId::ALL.to_vec()
    } else if args.id.is_empty() {
        return Err(Failure::Usage("pass --all or at least one --id".into()));
    } else {
        args.id
            .iter()
            .map(|k| parse_id(k))
            .collect::<Result<_, _>>()?
    };
    let config = SampleConfig {
        seed: args.seed,
        trials: args.trials,
        n_max: args.n_max,
        eps_max: args.eps_max,
        height: args.height,
        ..SampleConfig::default()
    };
    let report = run_suite(&config, &ids).map_err(|e| match e {
        VerifyError::Eval(e) => Failure::from(e),
        other => Failure::Usage(other.to_string()),
    })?;
    print!("{}", report.render_table());
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json() + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn eval_raw(args: &EvalArgs, upper: &str) -> Result<ExitCode, Failure> {
    let q = parse("q", &args.q)?;
    let spec = SeriesSpec::new(
        parse_list("upper", upper)?,
        parse_list("lower", &args.lower)?,
        parse("arg", &args.arg)?,
        args.bound.expect("clap requires --bound with --upper"),
    );
    let value = phi_eval(&spec, &q)?;
    println!("VALUE={}", fmt_rational(&value));
    Ok(ExitCode::SUCCESS)
}

fn eval_identity(args: &EvalArgs, key: &str) -> Result<ExitCode, Failure> {
    let id = parse_id(key)?;
    let case = id.case();
    let required = |flag: &str, v: &Option<String>| {
        v.clone()
            .ok_or_else(|| Failure::Usage(format!("--{flag} is required with --id")))
    };
    let q = parse("q", &args.q)?;
    let sqrt_a = parse("A", &required("A", &args.sqrt_a)?)?;
    let sqrt_c = parse("C", &required("C", &args.sqrt_c)?)?;
    let n = args
        .n
        .ok_or_else(|| Failure::Usage("--n is required with --id".into()))?;
    let eps = args.eps.unwrap_or(match case.constraints.eps {
        EpsRule::Fixed(e) => e,
        _ => 0,
    });
    if case.constraints.square_q && rational_sqrt(&q).is_none() {
        return Err(Failure::Usage(format!(
            "{id} needs sqrt(qac) = sqrt(q)*A*C to be rational, so --q must be the square \
             of a rational (got q={}; its square q={} would do)",
            fmt_rational(&q),
            fmt_rational(&(&q * &q))
        )));
    }
    let point = ParamPoint::new(q, sqrt_a, sqrt_c, n, eps)?;
    case.constraints
        .check(&point)
        .map_err(|e| Failure::Usage(format!("{id} {e}")))?;
    let lhs = case.lhs(&point)?;
    let rhs = case.rhs(&point)?;
    let verdict = if lhs == rhs { "EQUAL" } else { "NOT EQUAL" };
    println!(
        "LHS={} RHS={} {verdict}",
        fmt_rational(&lhs),
        fmt_rational(&rhs)
    );
    Ok(if lhs == rhs {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn eval(args: EvalArgs) -> Result<ExitCode, Failure> {
    match (&args.id, &args.upper) {
        (Some(key), _) => eval_identity(&args, key),
        (None, Some(upper)) => eval_raw(&args, upper),
        (None, None) => Err(Failure::Usage(
            "pass --id, or --upper/--lower/--arg/--bound for a raw series".into(),
        )),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List => {
            list();
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => verify(args),
        Command::Eval(args) => eval(args),
    };
    result.unwrap_or_else(Failure::exit)
}
