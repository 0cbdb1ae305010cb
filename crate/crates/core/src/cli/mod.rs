//! Command dispatch behind the `maxord` binary: every command reads one JSON
//! document and produces one JSON document.
//!
//! Exit codes: 0 on success, 2 when a check is answered in the negative
//! (for example `certify` on a non-maximal order), 1 on errors, which are
//! reported as `{"error": {"code", "message", "location"}}`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::io::{load_json, resolve_references};

mod commands;
mod selftest;
mod text;

pub use text::render_text;

/// The commands of the front end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Command {
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

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Center,
        Command::Decompose,
        Command::MaximalOrder,
        Command::Certify,
        Command::Radical,
        Command::Disc,
        Command::EndoOrder,
        Command::SerreClass,
        Command::SerreLattice,
        Command::MinimalIsogeny,
        Command::Selftest,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Center => "center",
            Command::Decompose => "decompose",
            Command::MaximalOrder => "maximal-order",
            Command::Certify => "certify",
            Command::Radical => "radical",
            Command::Disc => "disc",
            Command::EndoOrder => "endo-order",
            Command::SerreClass => "serre-class",
            Command::SerreLattice => "serre-lattice",
            Command::MinimalIsogeny => "minimal-isogeny",
            Command::Selftest => "selftest",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::parse("command", format!("unknown command '{s}'")))
    }
}

/// Output rendering.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            _ => Err(Error::parse("--format", format!("unknown format '{s}'"))),
        }
    }
}

/// Options shared by the commands.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    /// Extra candidate primes, comma separated (`"2,3"`, `"t,t+1"`).
    pub primes: Option<String>,
    /// Contents of the idempotents file: a matrix, or `{"idempotents": matrix}`.
    pub idempotents: Option<Value>,
    pub seed: u64,
    /// Skip the semisimplicity check.
    pub trusted: bool,
    /// `radical`: also enumerate two-sided ideals and test the power law.
    pub ideals: bool,
}

/// A parsed command line.
#[derive(Clone, Debug)]
pub struct Invocation {
    pub command: Command,
    /// Input document; for `selftest`, an optional fixture directory.
    pub input: Option<PathBuf>,
    pub idempotents_file: Option<PathBuf>,
    pub flags: Flags,
}

/// A result document and whether it reports a negative answer.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub document: Value,
    pub negative: bool,
    /// The command ran but found mismatches (`selftest`).
    pub failed: bool,
}

impl Report {
    fn positive(document: Value) -> Report {
        Report {
            document,
            negative: false,
            failed: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_ERROR
        } else if self.negative {
            EXIT_NEGATIVE
        } else {
            EXIT_OK
        }
    }
}

/// What the binary prints and the status it exits with.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub document: Value,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

/// Structured error record.
pub fn error_document(e: &Error, default_location: &str) -> Value {
    json!({
        "error": {
            "code": e.code(),
            "message": e.message(),
            "location": e.location().unwrap_or(default_location),
        }
    })
}

pub fn run(inv: &Invocation) -> Outcome {
    let location = inv
        .input
        .as_ref()
        .map(|p| p.display().to_string())
        .unwrap_or_else(|| "$".into());
    match run_inner(inv) {
        Ok(r) => Outcome {
            exit_code: r.exit_code(),
            document: r.document,
        },
        Err(e) => Outcome {
            exit_code: EXIT_ERROR,
            document: error_document(&e, &location),
        },
    }
}

fn run_inner(inv: &Invocation) -> Result<Report> {
    let mut flags = inv.flags.clone();
    if let Some(f) = &inv.idempotents_file {
        flags.idempotents = Some(load_json(f)?);
    }
    if inv.command == Command::Selftest {
        return selftest::run(inv.input.as_deref(), flags.seed);
    }
    let path = inv
        .input
        .as_ref()
        .ok_or_else(|| Error::parse("input", format!("{} needs an input file", inv.command)))?;
    let mut doc = load_json(path)?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    resolve_references(&mut doc, &base)?;
    execute(inv.command, &doc, &flags)
}

/// Runs a command on an in-memory document (file references must already
/// be resolved).
pub fn execute(command: Command, input: &Value, flags: &Flags) -> Result<Report> {
    commands::execute(command, input, flags)
}

/// Renders a document in the requested format. JSON output has sorted keys
/// and puts arrays of scalars on one line, so equal documents give identical
/// bytes.
pub fn render(document: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = String::new();
            write_json(&mut s, document, 0);
            s.push('\n');
            s
        }
        Format::Text => render_text(document),
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn write_json(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_json(out, x, indent + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        Value::Array(items) if !items.is_empty() && !items.iter().all(is_scalar) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                out.push_str(&pad);
                write_json(out, x, indent + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        _ => out.push_str(&v.to_string()),
    }
}
