//! Command-line front end: evaluate polynomials and sequences, sum the
//! series by partial summation / closed form / analytic continuation, run
//! the verification suites, and emit the closed-form tables.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
//! error. Data goes to stdout, diagnostics to stderr.

mod literal;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use chebseries::chebpoly::{gegenbauer_poly, scaled_deriv_poly, u_poly, IntPolynomial};
use chebseries::exactnum::GaussianRational;
use chebseries::sequences::{base_term, convolved_term, ConvolvedId, SequenceKind};
use chebseries::series::{
    closed_form_rational, closed_form_surd, partial_sum, truncation_error_bound, Direction,
    SeriesQuery,
};
use chebseries::tables::{table_rows, TableId, TableSpec};
use chebseries::verify::{run_token, VerifyOptions};
use chebseries::Error as CoreError;
use literal::{format_complex, Literal};

#[derive(Parser)]
#[command(
    name = "chebseries",
    version,
    about = "Exact series of order-coupled Chebyshev-U derivatives: evaluation, summation, verification"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV instead of text (table output)
    #[arg(long, global = true, conflicts_with = "json")]
    csv: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq)]
enum OutputFormat {
    Text,
    Json,
    Csv,
}

impl Cli {
    fn format(&self) -> OutputFormat {
        if self.json {
            return OutputFormat::Json;
        }
        if self.csv {
            return OutputFormat::Csv;
        }
        match std::env::var("CHEBSERIES_FORMAT").ok().as_deref() {
            Some("json") => OutputFormat::Json,
            Some("csv") => OutputFormat::Csv,
            _ => OutputFormat::Text,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a polynomial or a sequence term
    Eval {
        #[command(subcommand)]
        object: EvalObject,
    },
    /// Evaluate a series sum
    Sum(SumArgs),
    /// Run a verification suite: lemma2, lemma3, thm4, cor1, cor2, cor3,
    /// lemma4, eq14, euler, gamma, sequences, or all
    Verify(VerifyArgs),
    /// Emit the closed-form tables
    Table(TableArgs),
}

fn parse_literal(s: &str) -> Result<Literal, String> {
    s.parse()
}

#[derive(Subcommand)]
enum EvalObject {
    /// Chebyshev polynomial of the second kind U_n (any integer index)
    Upoly {
        #[arg(short, long, allow_hyphen_values = true)]
        n: i64,
        /// Evaluation point; omit to print the polynomial itself
        #[arg(long, value_parser = parse_literal, allow_hyphen_values = true)]
        at: Option<Literal>,
    },
    /// Scaled derivative of order s: U_{N+s-1}^(s)(z) / (2^s s!)
    Deriv {
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        s: u32,
        #[arg(long, value_parser = parse_literal, allow_hyphen_values = true)]
        at: Option<Literal>,
    },
    /// Gegenbauer polynomial C_n^(alpha) for integer alpha >= 1
    Gegenbauer {
        #[arg(short, long)]
        n: u32,
        #[arg(long)]
        alpha: u32,
        #[arg(long, value_parser = parse_literal, allow_hyphen_values = true)]
        at: Option<Literal>,
    },
    /// Term of a base sequence
    Sequence {
        #[arg(long)]
        kind: KindArg,
        /// Section index (required for kind = phi)
        #[arg(short, long)]
        k: Option<u32>,
        #[arg(short, long)]
        n: u32,
    },
    /// Convolved sequence number
    Convolved {
        #[arg(long)]
        kind: KindArg,
        #[arg(short, long)]
        k: Option<u32>,
        #[arg(short, long)]
        n: u32,
        #[arg(short, long)]
        s: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(alias = "fibonacci")]
    Fib,
    Lucas,
    Pell,
    Phi,
}

#[derive(Args)]
struct SumArgs {
    #[arg(short, long)]
    n: u32,
    #[arg(short, long, value_parser = parse_literal, allow_hyphen_values = true)]
    z: Literal,
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "pos")]
    direction: DirArg,
    /// Last summation index for --mode partial
    #[arg(long)]
    terms: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Partial,
    Closed,
    Surd,
    Regularized,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirArg {
    Pos,
    Neg,
}

impl DirArg {
    fn direction(self) -> Direction {
        match self {
            DirArg::Pos => Direction::PosPower,
            DirArg::Neg => Direction::NegPower,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite token (see `verify --help`), or `all`
    suite: String,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long)]
    s_max: Option<u32>,
    #[arg(long)]
    eps: Option<f64>,
    /// Seed for the randomized sweeps
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Args)]
struct TableArgs {
    /// Which table: 1 (ascending weights, |z| < 1) or 2 (descending, |z| > 1)
    #[arg(long)]
    table: u8,
    #[arg(long, default_value_t = 4)]
    n_max: u32,
    /// Exact sample points to evaluate each row at (repeatable)
    #[arg(long = "z", value_parser = parse_literal, allow_hyphen_values = true)]
    z_samples: Vec<Literal>,
}

/// A CLI failure carrying its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn domain(message: impl Into<String>) -> Self {
        Failure {
            code: 3,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::Parse(_) => 2,
            CoreError::IdentityViolation(_) => 1,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "snake_case")]
enum Exactness {
    Exact,
    Float,
}

#[derive(Serialize)]
struct ValueOutput {
    value: String,
    exactness: Exactness,
    #[serde(skip_serializing_if = "Option::is_none")]
    provenance: Option<String>,
}

impl ValueOutput {
    fn exact(g: &GaussianRational) -> Self {
        ValueOutput {
            value: g.to_string(),
            exactness: Exactness::Exact,
            provenance: None,
        }
    }

    fn float(z: chebseries::exactnum::ComplexDouble) -> Self {
        ValueOutput {
            value: format_complex(z),
            exactness: Exactness::Float,
            provenance: None,
        }
    }

    fn with_provenance(mut self, p: String) -> Self {
        self.provenance = Some(p);
        self
    }

    fn print(&self, format: OutputFormat) -> Result<(), Failure> {
        match format {
            OutputFormat::Json => println!(
                "{}",
                serde_json::to_string(self).expect("serializable output")
            ),
            _ => match &self.provenance {
                Some(p) => println!("{} ({p})", self.value),
                None => println!("{}", self.value),
            },
        }
        Ok(())
    }
}

fn eval_polynomial(
    poly: IntPolynomial,
    at: Option<Literal>,
    format: OutputFormat,
) -> Result<(), Failure> {
    let output = match at {
        None => ValueOutput {
            value: poly.to_string(),
            exactness: Exactness::Exact,
            provenance: None,
        },
        Some(Literal::Exact(z)) => ValueOutput::exact(&poly.eval_exact(&z)),
        Some(Literal::Float(z)) => ValueOutput::float(poly.eval_complex(z)),
    };
    output.print(format)
}

fn sequence_kind(kind: KindArg, k: Option<u32>) -> Result<SequenceKind, Failure> {
    match kind {
        KindArg::Fib => Ok(SequenceKind::Fibonacci),
        KindArg::Lucas => Ok(SequenceKind::Lucas),
        KindArg::Pell => Ok(SequenceKind::Pell),
        KindArg::Phi => {
            let k = k.ok_or_else(|| Failure::usage("kind = phi requires --k"))?;
            if k < 1 {
                return Err(Failure::usage("--k must be at least 1"));
            }
            Ok(SequenceKind::PhiSection(k))
        }
    }
}

fn run_eval(object: EvalObject, format: OutputFormat) -> Result<(), Failure> {
    match object {
        EvalObject::Upoly { n, at } => eval_polynomial(u_poly(n), at, format),
        EvalObject::Deriv { n, s, at } => {
            if n < 1 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            eval_polynomial(scaled_deriv_poly(n, s), at, format)
        }
        EvalObject::Gegenbauer { n, alpha, at } => {
            if alpha < 1 {
                return Err(Failure::usage("--alpha must be at least 1"));
            }
            eval_polynomial(gegenbauer_poly(n, alpha), at, format)
        }
        EvalObject::Sequence { kind, k, n } => {
            if n < 1 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            if k.is_some() && !matches!(kind, KindArg::Phi) {
                return Err(Failure::usage("--k only applies to kind = phi"));
            }
            let term = base_term(sequence_kind(kind, k)?, n);
            ValueOutput::exact(&GaussianRational::from_bigint(term)).print(format)
        }
        EvalObject::Convolved { kind, k, n, s } => {
            if n < 1 {
                return Err(Failure::usage("--n must be at least 1"));
            }
            if matches!(kind, KindArg::Lucas) {
                return Err(Failure::usage("convolved values cover fib, pell, and phi"));
            }
            if k.is_some() && !matches!(kind, KindArg::Phi) {
                return Err(Failure::usage("--k only applies to kind = phi"));
            }
            let id = ConvolvedId::new(sequence_kind(kind, k)?, n, s);
            ValueOutput::exact(&GaussianRational::from_bigint(convolved_term(id))).print(format)
        }
    }
}

fn direction_name(direction: Direction) -> &'static str {
    match direction {
        Direction::PosPower => "ascending",
        Direction::NegPower => "descending",
    }
}

fn run_sum(args: SumArgs, format: OutputFormat) -> Result<(), Failure> {
    if args.n < 1 {
        return Err(Failure::usage("--n must be at least 1"));
    }
    let direction = args.direction.direction();
    match args.mode {
        ModeArg::Partial => {
            let terms = args
                .terms
                .ok_or_else(|| Failure::usage("--mode partial requires --terms"))?;
            let z = args.z.exact().ok_or_else(|| {
                Failure::domain("partial summation needs an exact point; floats have no exact sum")
            })?;
            let value = partial_sum(&SeriesQuery::new(args.n, z.clone(), direction, terms))?;
            let remainder = truncation_error_bound(args.n, z, direction, terms)
                .ok()
                .map(|b| {
                    format!(
                        ", remainder <= {:.3e}",
                        chebseries::exactnum::rational_to_f64(&b)
                    )
                })
                .unwrap_or_default();
            ValueOutput::exact(&value)
                .with_provenance(format!(
                    "partial sum, {} weights, terms 0..={terms}{remainder}",
                    direction_name(direction)
                ))
                .print(format)
        }
        ModeArg::Closed => {
            let z = args.z.exact().ok_or_else(|| {
                Failure::domain("closed-form mode needs an exact point; use --mode surd for floats")
            })?;
            let value = closed_form_rational(args.n, z, direction)?;
            ValueOutput::exact(&value)
                .with_provenance(format!(
                    "{}-weight rational closed form",
                    direction_name(direction)
                ))
                .print(format)
        }
        ModeArg::Surd => {
            let value = closed_form_surd(args.n, args.z.to_complex(), direction)?;
            ValueOutput::float(value)
                .with_provenance(format!("{}-weight surd closed form", direction_name(direction)))
                .print(format)
        }
        ModeArg::Regularized => match args.z {
            Literal::Exact(ref z) => {
                if z.norm_sqr() != chebseries::exactnum::BigRational::from_integer(1.into()) {
                    return Err(Failure::domain(
                        "regularized sums live on the boundary |z| = 1",
                    ));
                }
                let value = closed_form_rational(args.n, z, direction)?;
                ValueOutput::exact(&value)
                    .with_provenance(format!(
                        "{}-weight rational closed form continued to the boundary",
                        direction_name(direction)
                    ))
                    .print(format)
            }
            Literal::Float(z) => {
                if (z.norm() - 1.0).abs() > 1e-9 {
                    return Err(Failure::domain(
                        "regularized sums live on the boundary |z| = 1",
                    ));
                }
                let value = closed_form_surd(args.n, z, direction)?;
                ValueOutput::float(value)
                    .with_provenance(format!(
                        "{}-weight surd closed form continued to the boundary",
                        direction_name(direction)
                    ))
                    .print(format)
            }
        },
    }
}

fn run_verify(args: VerifyArgs, format: OutputFormat) -> Result<(), Failure> {
    let opts = VerifyOptions {
        n_max: args.n_max,
        s_max: args.s_max,
        eps: args.eps,
        seed: args.seed,
    };
    let reports = run_token(&args.suite, &opts)
        .ok_or_else(|| Failure::usage(format!("unknown suite `{}`", args.suite)))?;
    let all_passed = reports.iter().all(|r| r.passed());
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("serializable reports")
        ),
        _ => {
            for report in &reports {
                println!(
                    "{}: {} ({} cases, {} failures)",
                    report.suite,
                    if report.passed() { "PASS" } else { "FAIL" },
                    report.cases_run,
                    report.failures.len()
                );
                for failure in report.failures.iter().take(10) {
                    println!(
                        "  {}: expected {}, got {}",
                        failure.case, failure.expected, failure.actual
                    );
                }
                if report.failures.len() > 10 {
                    println!("  ... and {} more", report.failures.len() - 10);
                }
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "verification failed".into(),
        })
    }
}

fn run_table(args: TableArgs, format: OutputFormat) -> Result<(), Failure> {
    let table = match args.table {
        1 => TableId::One,
        2 => TableId::Two,
        other => return Err(Failure::usage(format!("no table {other}; use 1 or 2"))),
    };
    let mut samples = Vec::new();
    for z in args.z_samples {
        match z {
            Literal::Exact(g) => samples.push(g),
            Literal::Float(_) => {
                return Err(Failure::usage("table samples must be exact literals"))
            }
        }
    }
    let spec = TableSpec {
        table,
        n_max: args.n_max,
        z_samples: samples.clone(),
    };
    let rows = table_rows(&spec)?;
    match format {
        OutputFormat::Json => println!(
            "{}",
            serde_json::to_string_pretty(&rows).expect("serializable rows")
        ),
        OutputFormat::Csv => {
            let header: Vec<String> = ["n".to_string(), "sum".to_string()]
                .into_iter()
                .chain(samples.iter().map(|z| format!("z={z}")))
                .collect();
            println!("{}", header.join(","));
            for row in rows {
                let mut cells = vec![row.n.to_string(), row.formula];
                cells.extend(row.values);
                println!("{}", cells.join(","));
            }
        }
        OutputFormat::Text => {
            for row in rows {
                let mut line = format!("N={}  {}", row.n, row.formula);
                if !row.values.is_empty() {
                    line.push_str("  [");
                    line.push_str(&row.values.join(", "));
                    line.push(']');
                }
                println!("{line}");
            }
        }
    }
    Ok(())
}

fn main() {
    let cli = Cli::parse();
    let format = cli.format();
    let outcome = match cli.command {
        Command::Eval { object } => run_eval(object, format),
        Command::Sum(args) => run_sum(args, format),
        Command::Verify(args) => run_verify(args, format),
        Command::Table(args) => run_table(args, format),
    };
    if let Err(failure) = outcome {
        if !failure.message.is_empty() {
            eprintln!("error: {}", failure.message);
        }
        std::process::exit(failure.code);
    }
}
