use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use maxord::cli::{self, Command, Flags, Format, Invocation, EXIT_ERROR};
use maxord::Error;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Cmd {
    Center,
    Decompose,
    MaximalOrder,
    Certify,
    Radical,
    Disc,
    EndoOrder,
    SerreClass,
    SerreLattice,
    MinimalIsogeny,
    Selftest,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Fmt {
    Json,
    Text,
}

/// Maximal orders over Z and F_p[t], and lattice-level Serre tensor constructions.
#[derive(Debug, Parser)]
#[command(name = "maxord", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Input JSON document (for selftest: an optional fixture directory).
    input: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Extra candidate primes, e.g. "2,3" or "t,t+1".
    #[arg(long)]
    primes: Option<String>,
    /// JSON file with primitive central idempotents.
    #[arg(long)]
    idempotents_file: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Fmt::Json)]
    format: Fmt,
    /// Skip the semisimplicity check.
    #[arg(long)]
    trusted: bool,
    /// radical: also list the two-sided ideals and test the power law.
    #[arg(long)]
    ideals: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let name = args
        .command
        .to_possible_value()
        .expect("no skipped variants");
    let command: Command = name.get_name().parse().expect("subcommand names match");
    let inv = Invocation {
        command,
        input: args.input,
        idempotents_file: args.idempotents_file,
        flags: Flags {
            primes: args.primes,
            idempotents: None,
            seed: args.seed,
            trusted: args.trusted,
            ideals: args.ideals,
        },
    };
    let format = match args.format {
        Fmt::Json => Format::Json,
        Fmt::Text => Format::Text,
    };
    let outcome = cli::run(&inv);
    let text = cli::render(&outcome.document, format);
    let code = match &args.output {
        None => {
            print!("{text}");
            outcome.exit_code
        }
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => outcome.exit_code,
            Err(e) => {
                let err = Error::Parse {
                    location: path.display().to_string(),
                    message: format!("cannot write output: {e}"),
                };
                print!(
                    "{}",
                    cli::render(&cli::error_document(&err, "--output"), format)
                );
                EXIT_ERROR
            }
        },
    };
    ExitCode::from(code as u8)
}
