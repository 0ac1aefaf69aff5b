//! Command-line front end. [`run`] takes arguments and output streams and
//! returns the exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 invalid input for `check` or a failed
//! verification / I/O problem, 2 syntax or usage error, 3 `X → Y` not valid,
//! 4 truth-table oracle cap exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bench::{self, BenchConfig, BenchStrategy, RunSummary};
use crate::error::Error;
use crate::generator::{GenConfig, Generator};
use crate::interpolate::{interpolate_with, simplify, InterpolateOptions, Strategy};
use crate::logic::{ClausalForm, NormalFormPair};
use crate::normalize::{to_cnf, to_dnf};
use crate::notation::{
    parse_cnf_list, parse_dnf_list, parse_formula, parse_variable, render_refutation, render_trace, Render, Style,
    Vocabulary,
};
use crate::refutation::refute;
use crate::semantics::Oracle;

#[derive(Debug, Parser)]
#[command(
    name = "craig-refute",
    version,
    about = "Propositional Craig interpolation by literal elimination"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute an interpolant for a valid X → Y.
    Interpolate(InterpolateArgs),
    /// Decide validity of X → Y by truth table.
    Check(CheckArgs),
    /// Search for a refutation of Z → ⊥ (or of the clausal form of X → Y).
    Refute(RefuteArgs),
    /// Print random valid pairs, one `X<TAB>Y` per line.
    Gen(GenArgs),
    /// Run the timing experiment and write a CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct Sides {
    /// Antecedent: clause list such as "[D.p..Ns., D.q.]", or an infix formula with --infix.
    #[arg(long)]
    x: String,
    /// Consequent: co-clause list such as "[C.p..Nr.]", or an infix formula with --infix.
    #[arg(long)]
    y: String,
    /// Read --x and --y as infix formulas and normalize them.
    #[arg(long)]
    infix: bool,
    #[arg(long, default_value_t = crate::semantics::DEFAULT_ORACLE_CAP)]
    max_oracle_vars: usize,
}

#[derive(Debug, Args)]
struct InterpolateArgs {
    #[command(flatten)]
    sides: Sides,
    /// random | first | scripted:v1,v2,...
    #[arg(long, default_value = "random")]
    strategy: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    simplify: bool,
    #[arg(long)]
    trace: bool,
    /// Re-check the result with the truth-table oracle.
    #[arg(long)]
    verify: bool,
    /// Skip the validity check of X → Y.
    #[arg(long)]
    no_precondition: bool,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    sides: Sides,
}

#[derive(Debug, Args)]
struct RefuteArgs {
    /// Clause list Z, read as Z → ⊥.
    #[arg(long, conflicts_with_all = ["x", "y"], required_unless_present_all = ["x", "y"])]
    z: Option<String>,
    #[arg(long, requires = "y")]
    x: Option<String>,
    #[arg(long, requires = "x")]
    y: Option<String>,
}

#[derive(Debug, Args)]
struct GenShape {
    /// Conjuncts in X.
    #[arg(long, default_value_t = 10)]
    c: usize,
    /// Disjuncts in Y.
    #[arg(long, default_value_t = 10)]
    d: usize,
    #[arg(long, default_value_t = 4)]
    max_vars: usize,
    /// Treat --c and --d as upper bounds, drawing each side's size uniformly.
    #[arg(long)]
    up_to: bool,
    #[arg(long, default_value_t = 0.5)]
    negation_prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    attempt_limit: u64,
}

impl GenShape {
    fn config(&self) -> GenConfig {
        GenConfig {
            negation_prob: self.negation_prob,
            up_to: self.up_to,
            attempt_limit: self.attempt_limit,
            ..GenConfig::new(self.c, self.d, self.max_vars, self.seed)
        }
    }
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    shape: GenShape,
    #[arg(long, default_value_t = 1)]
    count: usize,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    shape: GenShape,
    /// Number of instances.
    #[arg(long, short = 'n', default_value_t = 100)]
    count: usize,
    /// random | first
    #[arg(long, default_value = "random")]
    strategy: String,
    #[arg(long)]
    verify: bool,
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_)
            | Error::NotEliminable(_)
            | Error::ScriptExhausted
            | Error::BothSidesEmpty
            | Error::InvalidConfig(_)
            | Error::SplitOutOfRange { .. } => 2,
            Error::NotValid(_) => 3,
            Error::OracleCap { .. } => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<crate::notation::ParseError> for Failure {
    fn from(e: crate::notation::ParseError) -> Self {
        Error::from(e).into()
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type Outcome = Result<i32, Failure>;

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = if code == 0 {
                write!(out, "{}", e.render())
            } else {
                write!(err, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Interpolate(a) => cmd_interpolate(a, out),
        Command::Check(a) => cmd_check(a, out),
        Command::Refute(a) => cmd_refute(a, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Bench(a) => cmd_bench(a, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn read_sides(s: &Sides, vocab: &mut Vocabulary) -> Result<NormalFormPair, Failure> {
    if s.infix {
        let x = parse_formula(&s.x, vocab)?;
        let y = parse_formula(&s.y, vocab)?;
        Ok(NormalFormPair::new(to_cnf(&x), to_dnf(&y)))
    } else {
        let x = parse_cnf_list(&s.x, vocab)?;
        let y = parse_dnf_list(&s.y, vocab)?;
        Ok(NormalFormPair::new(x, y))
    }
}

fn parse_strategy(spec: &str, seed: u64, vocab: &mut Vocabulary) -> Result<Strategy, Failure> {
    match spec {
        "random" => Ok(Strategy::SeededRandom(seed)),
        "first" => Ok(Strategy::FirstAvailable),
        _ => match spec.strip_prefix("scripted:") {
            Some(list) => {
                let order = split_names(list)
                    .into_iter()
                    .filter(|name| !name.is_empty())
                    .map(|name| parse_variable(name, vocab))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Strategy::Scripted(order))
            }
            None => Err(usage(format!(
                "unknown strategy '{spec}' (random, first, scripted:v1,v2,...)"
            ))),
        },
    }
}

// commas inside P(a,b) do not separate names
fn split_names(list: &str) -> Vec<&str> {
    let mut names = Vec::new();
    let (mut depth, mut start) = (0usize, 0usize);
    for (i, c) in list.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                names.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    names.push(list[start..].trim());
    names
}

fn w(out: &mut dyn Write, text: std::fmt::Arguments<'_>) -> Result<(), Failure> {
    out.write_fmt(text).map_err(|e| Failure {
        code: 1,
        message: format!("writing output: {e}"),
    })
}

fn cmd_interpolate(a: InterpolateArgs, out: &mut dyn Write) -> Outcome {
    let mut vocab = Vocabulary::new();
    let g = read_sides(&a.sides, &mut vocab)?;
    let strategy = parse_strategy(&a.strategy, a.seed, &mut vocab)?;
    let options = InterpolateOptions {
        check_precondition: !a.no_precondition,
        oracle: Oracle::with_cap(a.sides.max_oracle_vars),
    };
    let result = interpolate_with(&g.x, &g.y, &strategy, &options)?;
    let i = &result.interpolant;
    w(out, format_args!("strategy: {strategy}\n"))?;
    if a.trace {
        w(out, format_args!("{}", render_trace(&result.trace)))?;
    }
    w(
        out,
        format_args!("eliminations: {}\n", result.trace.elimination_count()),
    )?;
    w(out, format_args!("interpolant: {}\n", i.render(Style::Bracket)))?;
    w(out, format_args!("infix: {}\n", i.render(Style::Infix)))?;
    if a.simplify {
        w(out, format_args!("simplified: {}\n", simplify(i).render(Style::Infix)))?;
    }
    if a.verify {
        if options.oracle.is_interpolant(&g.x, &g.y, i)? {
            w(out, format_args!("verified: yes\n"))?;
        } else {
            w(out, format_args!("verified: NO\n"))?;
            return Ok(1);
        }
    }
    Ok(0)
}

fn cmd_check(a: CheckArgs, out: &mut dyn Write) -> Outcome {
    let g = read_sides(&a.sides, &mut Vocabulary::new())?;
    match Oracle::with_cap(a.sides.max_oracle_vars).falsifying_valuation(&g)? {
        None => {
            w(out, format_args!("VALID\n"))?;
            Ok(0)
        }
        Some(v) => {
            w(out, format_args!("INVALID\nfalsified by: {v}\n"))?;
            Ok(1)
        }
    }
}

fn cmd_refute(a: RefuteArgs, out: &mut dyn Write) -> Outcome {
    let mut vocab = Vocabulary::new();
    let z = match (&a.z, &a.x, &a.y) {
        (Some(z), _, _) => ClausalForm::new(parse_cnf_list(z, &mut vocab)?),
        (None, Some(x), Some(y)) => {
            NormalFormPair::new(parse_cnf_list(x, &mut vocab)?, parse_dnf_list(y, &mut vocab)?).to_clausal()
        }
        _ => return Err(usage("give either --z or both --x and --y")),
    };
    match refute(&z) {
        None => w(out, format_args!("VALID\n"))?,
        Some(tree) => {
            w(out, format_args!("{}", render_refutation(&tree)))?;
            w(out, format_args!("countermodel: {}\n", tree.countermodel()))?;
        }
    }
    Ok(0)
}

fn cmd_gen(a: GenArgs, out: &mut dyn Write) -> Outcome {
    let mut generator = Generator::new(a.shape.config())?;
    for _ in 0..a.count {
        let g = generator.gen_pair()?.pair;
        w(
            out,
            format_args!("{}\t{}\n", g.x.render(Style::Bracket), g.y.render(Style::Bracket)),
        )?;
    }
    Ok(0)
}

fn cmd_bench(a: BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let strategy = match a.strategy.as_str() {
        "random" => BenchStrategy::Random,
        "first" => BenchStrategy::FirstAvailable,
        other => return Err(usage(format!("unknown bench strategy '{other}' (random, first)"))),
    };
    let config = BenchConfig {
        count: a.count,
        gen: a.shape.config(),
        strategy,
        verify: a.verify,
        jobs: a.jobs,
    };
    let records = bench::run_bench(&config)?;
    match &a.out {
        Some(path) => bench::write_csv_file(&records, path)?,
        None => bench::write_csv(&records, &mut *out)?,
    }
    let s = RunSummary::from_records(&records);
    // keep stdout pure CSV when no file was given
    let report: &mut dyn Write = match &a.out {
        Some(path) => {
            w(
                out,
                format_args!("wrote {} rows to {}\n", records.len(), path.display()),
            )?;
            out
        }
        None => err,
    };
    w(report, format_args!("n: {}\n", s.n))?;
    w(report, format_args!("mean time: {:.6} s\n", s.mean_time))?;
    w(
        report,
        format_args!("mean interpolant size: {:.1}\n", s.mean_size_interp),
    )?;
    w(
        report,
        format_args!(
            "fit time = {:.3e} * size_xy + {:.3e} (r2 {:.3})\n",
            s.slope, s.intercept, s.r2
        ),
    )?;
    w(
        report,
        format_args!(
            "published reference: {} s / {} (c,d <= 10, 4 vars); {} s / {} (c=d=20, 10 vars)\n",
            bench::PUBLISHED_SMALL.0,
            bench::PUBLISHED_SMALL.1,
            bench::PUBLISHED_LARGE.0,
            bench::PUBLISHED_LARGE.1
        ),
    )?;
    Ok(0)
}
