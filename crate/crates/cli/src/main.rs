use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;
use tropci::{json, render, selftest, CliError, Command, Options, EXIT_INPUT, EXIT_SELFTEST};

#[derive(Parser)]
#[command(
    name = "tropci",
    version,
    about = "Exact invariants of tropical complete intersections"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand)]
enum Sub {
    /// Mixed volume of n lattice polytopes, or the sublattice variant for fewer
    Mv(Common),
    /// Euler characteristic of a generic complete intersection by the BKK formula
    Bkk(Common),
    /// Tropical fan of a nondegenerate complete intersection from its Newton polytopes
    Tropicalize(Common),
    /// Corner locus of a PL function on a weighted fan, with its balancing check
    Divisor(Common),
    /// Euler characteristic by the direct formula, and by the recursion given majorants
    Euler(Common),
    /// Tropical characteristic class, component by codimension
    Chiclass(Common),
    /// Newton polyhedra of boundary data
    NewtonPolyhedra(Common),
    /// Newtonian criterion for boundary data, with violating pairs
    Newtonian(Common),
    /// Number of irreducible components of a generic complete intersection
    Components(Common),
    /// Betti numbers where available, and the connectivity of full-dimensional systems
    Betti(Common),
    /// Restriction of a tropical complete intersection to the star of a ray
    Restrict(Common),
    /// Calabi-Yau compactness conditions against a reflexive polytope
    CyCheck(Common),
    /// Pick oracle 2 - 2I - B for a lattice polygon, by enumeration
    OraclePick(Common),
    /// Planar mixed area oracle area(P+Q) - area(P) - area(Q)
    OracleMv2d(Common),
    /// Randomized invariant suite with a fixed seed
    Selftest(Common),
}

#[derive(Args)]
struct Common {
    /// Read the JSON input from this file (standard input otherwise)
    #[arg(long, value_name = "PATH", conflicts_with = "json")]
    input: Option<String>,
    /// Inline JSON input
    #[arg(long, value_name = "JSON")]
    json: Option<String>,
    /// PL functions (a JSON list, inline or in a file) whose carriers refine every input fan
    #[arg(long, value_name = "PATH|JSON")]
    refine_with: Option<String>,
    /// Random seed; defaults to TROPCI_SEED, then a fixed value
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, hide = true, value_parser = ["weight", "sign"])]
    inject: Option<String>,
}

impl Sub {
    fn split(self) -> (Command, Common) {
        match self {
            Sub::Mv(c) => (Command::Mv, c),
            Sub::Bkk(c) => (Command::Bkk, c),
            Sub::Tropicalize(c) => (Command::Tropicalize, c),
            Sub::Divisor(c) => (Command::Divisor, c),
            Sub::Euler(c) => (Command::Euler, c),
            Sub::Chiclass(c) => (Command::Chiclass, c),
            Sub::NewtonPolyhedra(c) => (Command::NewtonPolyhedra, c),
            Sub::Newtonian(c) => (Command::Newtonian, c),
            Sub::Components(c) => (Command::Components, c),
            Sub::Betti(c) => (Command::Betti, c),
            Sub::Restrict(c) => (Command::Restrict, c),
            Sub::CyCheck(c) => (Command::CyCheck, c),
            Sub::OraclePick(c) => (Command::OraclePick, c),
            Sub::OracleMv2d(c) => (Command::OracleMv2d, c),
            Sub::Selftest(c) => (Command::Selftest, c),
        }
    }
}

fn parse_json(text: &str, what: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("{what}: {e}")))
}

fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{path}: {e}")))
}

fn read_input(c: &Common) -> Result<Value, CliError> {
    if let Some(j) = &c.json {
        return parse_json(j, "--json");
    }
    if let Some(p) = &c.input {
        return parse_json(&read_file(p)?, p);
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::Io(format!("standard input: {e}")))?;
    parse_json(&s, "standard input")
}

fn options(c: &Common) -> Result<Options, CliError> {
    let refine_with = match &c.refine_with {
        None => Vec::new(),
        Some(arg) => {
            let text = if arg.trim_start().starts_with('[') {
                arg.clone()
            } else {
                read_file(arg)?
            };
            let v = parse_json(&text, "--refine-with")?;
            v.as_array()
                .ok_or_else(|| CliError::Parse("--refine-with must be a JSON list".into()))?
                .iter()
                .map(json::function)
                .collect::<Result<_, _>>()?
        }
    };
    let seed = match (c.seed, std::env::var("TROPCI_SEED")) {
        (Some(s), _) => Some(s),
        (None, Ok(s)) => Some(
            s.trim()
                .parse()
                .map_err(|_| CliError::Parse(format!("TROPCI_SEED is not a seed: {s}")))?,
        ),
        (None, Err(_)) => None,
    };
    let inject = c.inject.as_deref().and_then(selftest::Injection::from_name);
    Ok(Options {
        refine_with,
        seed,
        inject,
    })
}

fn execute(cmd: Command, c: &Common) -> Result<Value, CliError> {
    let opts = options(c)?;
    let input = if cmd.takes_input() {
        read_input(c)?
    } else {
        Value::Null
    };
    tropci::run(cmd, &input, &opts)
}

/// Prints to standard output; a closed pipe is not an error.
fn emit(v: &Value) {
    let _ = writeln!(std::io::stdout().lock(), "{}", render(v));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let (cmd, common) = cli.command.split();
    match execute(cmd, &common) {
        Ok(v) => {
            emit(&v);
            if cmd == Command::Selftest && v["passed"] != Value::Bool(true) {
                return ExitCode::from(EXIT_SELFTEST as u8);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            emit(&e.to_json());
            eprintln!("tropci {}: {e}", cmd.name());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
