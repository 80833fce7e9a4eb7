//! Command-line front end for `torus-pinch`.
//!
//! Exit codes: 0 on success, 1 when a verification finds a violation, 2 on
//! usage or domain errors. `--json` replaces the human-readable output with
//! a single [`report::ReportDocument`].

pub mod commands;
pub mod report;
pub mod tables;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::commands::{Cli, Outcome};
use crate::report::{ReportDocument, Status};

/// Parses `args` (program name first) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return e.exit_code();
        }
    };

    let (json, quiet) = (cli.json, cli.quiet);
    let Outcome {
        command,
        inputs,
        results,
        status,
        text,
    } = commands::execute(cli.command);

    if status == Status::Error {
        if let Some(msg) = results.get("error").and_then(|v| v.as_str()) {
            let _ = writeln!(err, "error: {msg}");
        }
    }

    if json {
        let doc = ReportDocument::new(&command, inputs, results, status);
        let _ = writeln!(out, "{}", doc.to_json());
    } else if !quiet && !text.is_empty() {
        let _ = write!(out, "{text}");
    }
    status.exit_code()
}
