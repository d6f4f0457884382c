//! Thin CLI over the library: run a script (from a path or stdin) or one
//! of the named verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 internal invariant violation.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use orient_rr::cli::{self, Flags};
use orient_rr::fgl::Theory;

#[derive(Parser)]
#[command(
    name = "orient-rr",
    about = "Symbolic oriented-cohomology engine: characteristic classes, Gysin pushforwards and Riemann-Roch verification",
    args_conflicts_with_subcommands = true
)]
struct Args {
    /// Script file path, or `-` for stdin
    script: Option<String>,

    #[command(subcommand)]
    command: Option<Command>,

    /// Theory: additive | multiplicative | universal:k
    #[arg(long, global = true)]
    theory: Option<String>,

    /// Truncation order for all series computations
    #[arg(long, global = true, default_value_t = 10)]
    truncation: u32,

    /// Dimension bound for verification sweeps
    #[arg(long, global = true, default_value_t = 3)]
    max_dim: u32,

    /// Force JSON output (always on for check commands)
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite
    Check {
        /// fgl | pbf | thom | classes | duality | gysin | grr | hrr | all
        suite: String,
    },
}

fn main() -> ExitCode {
    let args = Args::parse();
    let theory = match args.theory.as_deref() {
        None => None,
        Some(t) => match Theory::parse(t) {
            Some(t) => Some(t),
            None => {
                eprintln!("unknown theory `{t}`; expected additive, multiplicative or universal:k");
                return ExitCode::from(2);
            }
        },
    };
    let flags = Flags {
        theory,
        truncation: args.truncation,
        max_dim: args.max_dim,
        json: args.json,
    };

    let text = match (&args.command, &args.script) {
        (Some(Command::Check { suite }), _) => {
            if !cli::parse::CHECK_SUBJECTS.contains(&suite.as_str()) {
                eprintln!(
                    "unknown check `{suite}`; expected one of {}",
                    cli::parse::CHECK_SUBJECTS.join(", ")
                );
                return ExitCode::from(2);
            }
            format!("check {suite};")
        }
        (None, Some(path)) => {
            let read = if path == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf).map(|_| buf)
            } else {
                std::fs::read_to_string(path)
            };
            match read {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("cannot read `{path}`: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        (None, None) => {
            eprintln!("usage: orient-rr <script|-> [flags]  or  orient-rr check <suite> [flags]");
            return ExitCode::from(2);
        }
    };

    let script = match cli::parse(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let report = cli::run(&script, &flags);
    if report.wants_json(&flags) {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_plain());
    }
    match report.exit_code() {
        0 => ExitCode::SUCCESS,
        code => ExitCode::from(code as u8),
    }
}
