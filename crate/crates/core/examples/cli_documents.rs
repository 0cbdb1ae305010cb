//! Drives the JSON front end in memory: builds an input document, runs
//! `maximal-order` and `certify`, and prints the rendered results.

use maxord::cli::{execute, render, Command, Flags, Format};
use serde_json::json;

fn main() -> maxord::Result<()> {
    let input = json!({"algebra": {"quaternion": {"a": "-1", "b": "-1"}}});
    let report = execute(Command::MaximalOrder, &input, &Flags::default())?;
    print!("{}", render(&report.document, Format::Json));

    let flags = Flags {
        primes: Some("2".into()),
        ..Flags::default()
    };
    let report = execute(Command::Certify, &input, &flags)?;
    print!("{}", render(&report.document, Format::Text));
    println!("exit code {}", report.exit_code());
    Ok(())
}
