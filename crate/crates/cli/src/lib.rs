//! Command line and file formats for `distgirth-core`: DIMACS graphs, JSON
//! reports and certificates, flat config files.

use std::io::Write;

use clap::{CommandFactory, FromArgMatches};

pub mod cli;
pub mod commands;
pub mod config;
pub mod dimacs;
pub mod formats;

pub use commands::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// Runs the command line `args` (program name first) and returns the exit
/// code: 0 on success, 2 when a check fails or a certificate is rejected,
/// 1 on usage and I/O errors.
pub fn run(args: Vec<String>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match try_run(args, stdout, stderr) {
        Ok(Verdict::Success) => EXIT_OK,
        Ok(Verdict::Failure) => EXIT_FAILED,
        Err(e) => {
            match e.downcast_ref::<clap::Error>() {
                Some(ce) if !ce.use_stderr() => {
                    let _ = write!(stdout, "{ce}");
                    return EXIT_OK;
                }
                Some(ce) => {
                    let _ = write!(stderr, "{ce}");
                }
                None => {
                    let _ = writeln!(stderr, "error: {e:#}");
                }
            }
            EXIT_ERROR
        }
    }
}

fn try_run(
    mut args: Vec<String>,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> anyhow::Result<Verdict> {
    if let Some(path) = config::take_config_flag(&mut args)? {
        let map = config::read(&path)?;
        let command = cli::Cli::command();
        // the subcommand is the first argument after the program name that is not a flag
        if let Some(pos) = args
            .iter()
            .skip(1)
            .position(|a| !a.starts_with('-'))
            .map(|p| p + 1)
        {
            let Some(sub) = command.find_subcommand(&args[pos]) else {
                anyhow::bail!("unknown subcommand `{}`", args[pos]);
            };
            let long_flags = |c: &clap::Command| -> Vec<(String, bool)> {
                c.get_arguments()
                    .filter_map(|a| {
                        a.get_long()
                            .map(|l| (l.to_string(), a.get_action().takes_values()))
                    })
                    .collect()
            };
            let known = long_flags(sub);
            let all: Vec<String> = command
                .get_subcommands()
                .flat_map(|c| long_flags(c).into_iter().map(|(l, _)| l))
                .collect();
            let flags = config::to_flags(&map, &known, &all)?;
            args.splice(pos + 1..pos + 1, flags);
        }
    }
    let matches = cli::Cli::command().try_get_matches_from(args)?;
    let parsed = cli::Cli::from_arg_matches(&matches)?;
    commands::dispatch(parsed.command, stdout, stderr)
}
