use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use sympsnf::Integer;
use sympsnf_cli::commands::{self, GenKind, GenParams, PrimeSelection};
use sympsnf_cli::format::parse_integer;
use sympsnf_cli::{CliError, CliResult, Format, Outcome};

/// Exact symplectic Smith normal form of rational symplectic matrices.
///
/// Exit codes: 0 success, 1 failed verification or coset mismatch, 2 input
/// error, 3 input not symplectic.
#[derive(Parser)]
#[command(name = "sympsnf", version)]
struct Cli {
    /// Emit JSON (rationals as "p/q" strings).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Spz,
    Spq,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose g = σ·diag(d, d⁻¹)·σ'. Use "-" to read standard input.
    Decompose {
        path: PathBuf,
        /// Also report per-prime exponents at every prime dividing d_n.
        #[arg(long)]
        locals: bool,
        /// Also print the generator words of σ and σ'.
        #[arg(long)]
        words: bool,
    },
    /// Smith normal form of an integer matrix.
    Snf { path: PathBuf },
    /// Check a decomposition file against a matrix.
    Verify { matrix: PathBuf, decomposition: PathBuf },
    /// Per-prime exponents of the double coset.
    #[command(group(ArgGroup::new("which").required(true).args(["primes", "support"])))]
    Local {
        path: PathBuf,
        /// Comma-separated primes.
        #[arg(long, value_delimiter = ',')]
        primes: Vec<String>,
        /// Report every prime with a nonzero exponent.
        #[arg(long)]
        support: bool,
    },
    /// Print a seeded random symplectic matrix.
    Gen {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Kind::Spq)]
        kind: Kind,
        /// Number of generators in each random word.
        #[arg(long, default_value_t = 20)]
        length: usize,
        /// Bound on the largest entry of the planted chain d.
        #[arg(long, default_value_t = 10_000)]
        dmax: u64,
    },
    /// Decide whether two matrices lie in the same Sp(n,Z) double coset.
    CosetEq { first: PathBuf, second: PathBuf },
}

fn read(path: &Path) -> CliResult<String> {
    let result = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> CliResult<Outcome> {
    let format = if cli.json { Format::Json } else { Format::Text };
    match cli.command {
        Command::Decompose { path, locals, words } => commands::decompose(&read(&path)?, format, locals, words),
        Command::Snf { path } => commands::snf(&read(&path)?, format),
        Command::Verify { matrix, decomposition } => commands::verify(&read(&matrix)?, &read(&decomposition)?, format),
        Command::Local { path, primes, support } => {
            let selection = if support {
                PrimeSelection::Support
            } else {
                PrimeSelection::List(
                    primes
                        .iter()
                        .map(|p| parse_integer(p.trim()))
                        .collect::<CliResult<Vec<Integer>>>()?,
                )
            };
            commands::local(&read(&path)?, &selection, format)
        }
        Command::Gen {
            n,
            seed,
            kind,
            length,
            dmax,
        } => {
            let kind = match kind {
                Kind::Spz => GenKind::Spz,
                Kind::Spq => GenKind::Spq,
            };
            commands::gen(
                &GenParams {
                    n,
                    seed,
                    kind,
                    length,
                    dmax,
                },
                format,
            )
        }
        Command::CosetEq { first, second } => commands::coset_eq(&read(&first)?, &read(&second)?, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                sympsnf_cli::EXIT_INPUT as u8
            } else {
                0
            });
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            let _ = stdout.write_all(out.stdout.as_bytes());
            let _ = stdout.flush();
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("sympsnf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
