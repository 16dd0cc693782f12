//! `tir`: plot-ready exports for total internal reflection of a scalar
//! beam — wavefield maps, Airy sector comparisons, Stokes-switching
//! demos, lateral-shift scans, character maps, and the acceptance suite.
//!
//! Output is deterministic: the same config produces byte-identical
//! files, and every file header carries an FNV-1a hash of the resolved
//! config so results stay traceable. Exit codes: 0 success, 2 config,
//! 3 domain, 4 tolerance (verify found failures), 5 io.

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

mod config;
mod output;
mod scenarios;

use config::{Failure, Format};
use scenarios::Rendered;

fn main() -> ExitCode {
    match run(config::Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: config::Cli) -> Result<(), Failure> {
    let rc = config::resolve(cli)?;
    let canonical = serde_json::to_string(&rc).expect("config serializes");
    let hash = output::fnv1a(canonical.as_bytes());

    let (text, tolerance_ok) = match scenarios::run(&rc, hash)? {
        Rendered::Data(table) => {
            let text = match rc.format {
                Format::Csv => output::render_csv(hash, &rc.summary(), &table),
                Format::Json => output::render_json(hash, &rc.summary(), &table),
            };
            (text, true)
        }
        Rendered::Verdict { text, passed } => (text, passed),
    };

    match &rc.out {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| Failure::Io(format!("writing {}: {e}", path.display())))?,
        // A closed pipe (`tir ... | head`) is the reader's call, not an
        // error worth reporting.
        None => match std::io::stdout().write_all(text.as_bytes()) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(()),
            other => other?,
        },
    }

    if tolerance_ok {
        Ok(())
    } else {
        Err(Failure::Tolerance(
            "acceptance criteria failed; see the emitted report".into(),
        ))
    }
}
