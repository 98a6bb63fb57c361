//! The `kselect` command line: cluster-number selection on CSV data,
//! replicated simulation experiments, degrees-of-freedom curves and the
//! sampling oracle. Reports are CSV or JSON (`"schema": "kselect/1"`).
//!
//! Exit status: 0 success, 1 internal error, 2 bad input data, 3 bad
//! configuration.

// `!(x > 0.0)` style checks are meant to reject NaN too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
pub mod commands;
pub mod error;
pub mod input;
pub mod output;

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, OutputArgs};
use error::{CliError, CliResult};

fn output_args(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Select(a) => &a.output,
        Command::Simulate(a) => &a.output,
        Command::DfCurve(a) => &a.output,
        Command::Oracle(a) => &a.output,
    }
}

fn dispatch(cmd: &Command) -> CliResult<String> {
    match cmd {
        Command::Select(a) => commands::select(a),
        Command::Simulate(a) => commands::simulate(a),
        Command::DfCurve(a) => commands::df_curve(a),
        Command::Oracle(a) => commands::oracle(a),
    }
}

/// Runs the parsed command on a pool of the requested size and writes its
/// report.
pub fn execute(cli: &Cli) -> CliResult<()> {
    let out = output_args(&cli.command);
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = out.threads {
        if t == 0 {
            return Err(CliError::Config("--threads must be at least 1".into()));
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| CliError::Internal(e.to_string()))?;
    let text = pool.install(|| dispatch(&cli.command))?;
    output::emit(&text, out.out.as_deref())
}

/// Entry point used by the binary; returns the exit status.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("kselect: {e}");
            e.exit_code()
        }
    }
}
