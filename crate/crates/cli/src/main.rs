//! `terw`: build an index-two-abelian group and check its association-scheme
//! dimensions, character table and Wedderburn blocks.

mod commands;
mod spec;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use commands::{Format, Outcome, EXIT_GUARD, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};
use spec::{parse_factors, parse_list, GroupSpec, Kind, SValue, SpecError};
use terwilliger::scheme::COUNT_GUARD;

const DEFAULT_GUARD: usize = 64;
const MIN_GUARD: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "terw",
    version,
    about = "Terwilliger algebras of groups with an abelian subgroup of index two"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug, Clone)]
struct Opts {
    /// JSON file with the group fields; flags override its values.
    #[arg(long, global = true)]
    spec: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    kind: Option<Kind>,
    /// Prime-power factors of A, e.g. `2^2,3`.
    #[arg(long, global = true)]
    factors: Option<String>,
    /// Exponents of the involution: a list for general groups, one integer for g2.
    #[arg(long, global = true)]
    s: Option<String>,
    /// Coordinates of b^2 in A.
    #[arg(long, global = true)]
    y: Option<String>,
    #[arg(long, global = true)]
    n: Option<u64>,
    #[arg(long, global = true)]
    t: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Run the brute-force cross-checks as well.
    #[arg(long, global = true)]
    oracle: bool,
    /// Largest |G| for the matrix paths (default 64, or TERW_GUARD).
    #[arg(long, global = true)]
    guard: Option<usize>,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// n, d, the d_i and n_i, and the orders of A' and B.
    Info,
    /// Conjugacy classes.
    Classes,
    /// Character table.
    Chartable,
    /// Every dimension path and the triple-transitivity verdict.
    Dims,
    /// Wedderburn block multiplicities from all three routes.
    Wedderburn,
    /// Every check, with oracles on.
    Verify,
    /// One CSV row per instance of a family over a range of sizes.
    Sweep {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        Failure {
            code: EXIT_INVALID,
            message: e.0,
        }
    }
}

impl From<terwilliger::Error> for Failure {
    fn from(e: terwilliger::Error) -> Self {
        Failure {
            code: commands::exit_code(&e),
            message: e.to_string(),
        }
    }
}

fn resolve_guard(flag: Option<usize>) -> Result<usize, Failure> {
    let guard = match (flag, std::env::var("TERW_GUARD")) {
        (Some(g), _) => g,
        (None, Ok(v)) => v
            .trim()
            .parse()
            .map_err(|_| SpecError(format!("TERW_GUARD=`{v}` is not an integer")))?,
        (None, Err(_)) => DEFAULT_GUARD,
    };
    if guard < MIN_GUARD {
        return Err(SpecError(format!("guard must be at least {MIN_GUARD}, got {guard}")).into());
    }
    Ok(guard)
}

fn resolve_spec(opts: &Opts) -> Result<GroupSpec, Failure> {
    let mut spec = match &opts.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| SpecError(format!("cannot read {}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| SpecError(format!("bad spec file {}: {e}", path.display())))?
        }
        None => GroupSpec {
            kind: opts
                .kind
                .ok_or_else(|| SpecError("give --spec or --kind".into()))?,
            factors: None,
            s: None,
            y: None,
            n: None,
            t: None,
        },
    };
    if let Some(kind) = opts.kind {
        spec.kind = kind;
    }
    if let Some(f) = &opts.factors {
        spec.factors = Some(parse_factors(f)?);
    }
    if let Some(s) = &opts.s {
        let v = parse_list(s)?;
        spec.s = Some(match (spec.kind, v.as_slice()) {
            (Kind::G2, [x]) => SValue::Scalar(*x),
            _ => SValue::Vector(v),
        });
    }
    if let Some(y) = &opts.y {
        spec.y = Some(parse_list(y)?);
    }
    if opts.n.is_some() {
        spec.n = opts.n;
    }
    if opts.t.is_some() {
        spec.t = opts.t;
    }
    Ok(spec)
}

fn sweep(kind: Kind, from: u64, to: u64, guard: usize) -> Result<Outcome, Failure> {
    let specs: Vec<GroupSpec> = (from..=to)
        .flat_map(|n| commands::sweep_instances(kind, n))
        .collect();
    let rows: Vec<Result<commands::SweepRow, Failure>> = specs
        .par_iter()
        .map(|spec| {
            let g = spec.build()?;
            if g.order() > COUNT_GUARD {
                return Err(terwilliger::Error::GuardExceeded {
                    order: g.order(),
                    guard: COUNT_GUARD,
                }
                .into());
            }
            Ok(commands::sweep_row(spec, &g, guard)?)
        })
        .collect();
    let mut body = commands::SWEEP_HEADER.join(",") + "\n";
    let mut code = EXIT_OK;
    for row in rows {
        let row = row?;
        if !row.passed {
            code = EXIT_MISMATCH;
        }
        body += &row.cells.join(",");
        body.push('\n');
    }
    Ok(Outcome { body, code })
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let opts = &cli.opts;
    let guard = resolve_guard(opts.guard)?;
    if let Command::Sweep { from, to } = &cli.command {
        let kind = resolve_spec(opts)?.kind;
        return sweep(kind, *from, *to, guard);
    }
    let spec = resolve_spec(opts)?;
    let g = spec.build()?;
    if g.order() > COUNT_GUARD {
        return Err(terwilliger::Error::GuardExceeded {
            order: g.order(),
            guard: COUNT_GUARD,
        }
        .into());
    }
    let fmt = opts.format;
    Ok(match &cli.command {
        Command::Info => commands::info(&spec, &g, fmt),
        Command::Classes => commands::classes(&spec, &g, fmt, opts.oracle, guard)?,
        Command::Chartable => commands::chartable(&spec, &g, fmt, opts.oracle)?,
        Command::Dims => commands::dims(&spec, &g, fmt, opts.oracle, guard)?,
        Command::Wedderburn => commands::wedderburn(&spec, &g, fmt, opts.oracle, guard)?,
        Command::Verify => commands::verify(&spec, &g, fmt, guard)?,
        Command::Sweep { .. } => unreachable!("handled above"),
    })
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, body).map_err(|e| Failure {
            code: EXIT_INVALID,
            message: format!("cannot write {}: {e}", path.display()),
        }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let code = match run(&cli).and_then(|o| emit(&cli.opts.out, &o.body).map(|()| o.code)) {
        Ok(code) => code,
        Err(f) => {
            let label = match f.code {
                EXIT_GUARD => "guard exceeded",
                EXIT_MISMATCH => "mismatch",
                _ => "invalid input",
            };
            eprintln!("terw: {label}: {}", f.message);
            f.code
        }
    };
    ExitCode::from(code as u8)
}
