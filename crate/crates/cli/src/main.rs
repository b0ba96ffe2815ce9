//! `dtt`: build, validate and apply discrete trigonometric transform
//! matrices from the command line.
//!
//! Exit codes: 0 on success (orthogonal, for `check`); 1 when a checked
//! property fails (non-orthogonal matrix, sweep theorem violation,
//! inverse gate); 2 on usage, parse or I/O errors.

mod args;
mod commands;
mod formats;

use clap::Parser;

use args::{Cli, Command};

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(args) => commands::run_gen(args),
        Command::Check(args) => commands::run_check(args),
        Command::Sweep(args) => commands::run_sweep(args),
        Command::Apply(args) => commands::run_apply(args),
        Command::Bench(args) => commands::run_bench(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}
