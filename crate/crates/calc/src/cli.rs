//! Command-line driver: `--eval`, `--file` and the REPL.

use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use crate::error::CalcError;
use crate::eval::EvalResult;
use crate::format::{format_json_line, format_result, OutputMode};
use crate::{eval_str, DEFAULT_TOL};

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when an expression fails to evaluate.
pub const EXIT_EVAL: i32 = 1;
/// Exit status for lex and parse errors.
pub const EXIT_PARSE: i32 = 2;
/// Exit status for I/O and usage errors.
pub const EXIT_USAGE: i32 = 3;

const REPL_HELP: &str = "\
Enter an expression to evaluate it, e.g. u*u or inv((1,2,3)).
constants: one u v delta j oneD oneG iG zero
functions: conj norm A B projD projG inv reduce split
operators: + - * / ^n   triples: (a, b, c)
commands:  :mode tuple|split|json   :help   :quit";

/// Calculator for the three-dimensional algebra with basis {1, u, v},
/// u*u = v, v*v = -u, u*v = -1.
#[derive(Debug, Parser)]
#[command(name = "ternion", version, about)]
struct Args {
    /// Evaluate one expression and print the result.
    #[arg(
        long,
        value_name = "EXPR",
        conflicts_with = "file",
        allow_hyphen_values = true
    )]
    eval: Option<String>,
    /// Evaluate one expression per nonblank line; lines starting with '#' are skipped.
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Print one JSON object per result (same as --mode json).
    #[arg(long)]
    json: bool,
    /// Output mode.
    #[arg(long, value_enum, default_value_t = OutputMode::Tuple)]
    mode: OutputMode,
    /// Relative tolerance for deciding invertibility.
    #[arg(long, default_value_t = DEFAULT_TOL, allow_hyphen_values = true)]
    tol: f64,
}

/// Run with the process's standard streams.
pub fn run_cli<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    run_with_io(
        args,
        &mut stdin.lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        interactive,
    )
}

/// Run against arbitrary streams. `args` includes the program name. With
/// `interactive` set, the REPL prints a `> ` prompt.
pub fn run_with_io<I, S>(
    args: I,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
    interactive: bool,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    if !(args.tol.is_finite() && args.tol >= 0.0) {
        let _ = writeln!(err, "error: --tol must be a finite nonnegative number");
        return EXIT_USAGE;
    }
    let mut session = Session {
        mode: if args.json {
            OutputMode::Json
        } else {
            args.mode
        },
        tol: args.tol,
        status: EXIT_OK,
    };
    let result = if let Some(expr) = &args.eval {
        let outcome = eval_str(expr, session.tol);
        session.emit(expr, &outcome, out, err)
    } else if let Some(path) = &args.file {
        match std::fs::read_to_string(path) {
            Ok(text) => text.lines().try_for_each(|l| session.line(l, out, err)),
            Err(e) => {
                let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
    } else {
        session.repl(input, out, err, interactive)
    };
    match result {
        Ok(()) => session.status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

struct Session {
    mode: OutputMode,
    tol: f64,
    /// Worst status so far: parse errors outrank evaluation errors.
    status: i32,
}

impl Session {
    /// Evaluate and print one input line; blank and `#` lines are skipped.
    fn line(&mut self, line: &str, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<()> {
        let expr = line.trim();
        if expr.is_empty() || expr.starts_with('#') {
            return Ok(());
        }
        let outcome = eval_str(expr, self.tol);
        self.emit(expr, &outcome, out, err)
    }

    fn emit(
        &mut self,
        expr: &str,
        outcome: &Result<EvalResult, CalcError>,
        out: &mut dyn Write,
        err: &mut dyn Write,
    ) -> io::Result<()> {
        if let Err(e) = outcome {
            self.status = self.status.max(e.exit_code());
        }
        match (self.mode, outcome) {
            (OutputMode::Json, _) => writeln!(out, "{}", format_json_line(expr, outcome)),
            (mode, Ok(r)) => writeln!(out, "{}", format_result(r, mode)),
            (_, Err(e)) => writeln!(err, "error: {e}"),
        }
    }

    fn repl(
        &mut self,
        input: &mut dyn BufRead,
        out: &mut dyn Write,
        err: &mut dyn Write,
        interactive: bool,
    ) -> io::Result<()> {
        let mut buf = String::new();
        loop {
            if interactive {
                write!(out, "> ")?;
                out.flush()?;
            }
            buf.clear();
            if input.read_line(&mut buf)? == 0 {
                return Ok(());
            }
            let line = buf.trim();
            match line.strip_prefix(':') {
                Some(cmd) => {
                    let mut words = cmd.split_whitespace();
                    match (words.next(), words.next(), words.next()) {
                        (Some("quit" | "q"), None, _) => return Ok(()),
                        (Some("help"), None, _) => writeln!(out, "{REPL_HELP}")?,
                        (Some("mode"), Some(m), None) => match m.parse() {
                            Ok(mode) => self.mode = mode,
                            Err(msg) => writeln!(err, "error: {msg}")?,
                        },
                        _ => writeln!(err, "error: unknown command :{cmd} (try :help)")?,
                    }
                }
                None => self.line(line, out, err)?,
            }
        }
    }
}
