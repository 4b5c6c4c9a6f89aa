//! The `mfsr` command line: argument handling, JSON reports and their text
//! rendering. `run` takes its streams as arguments so tests can drive it
//! without spawning a process.

mod report;
mod text;

pub use report::{
    canonical, check_report, decompose_report, glue_report, list_report, render_json, saturate_report,
    verify_report, CheckOptions, Failure,
};

use clap::{Parser, Subcommand, ValueEnum};
use mfsr_catalog::{verify_all, Catalog, VerifyOptions};
use mfsr_repspec::SymplecticRep;
use serde_json::Value;
use std::io::{Read, Write};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "mfsr", version, about = "Decide whether symplectic representations are multiplicity free")]
struct Cli {
    /// output format
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct CheckArgs {
    /// representation in the DSL, or "-" to read it from stdin
    expr: String,
    /// fail instead of warning when the input is not saturated
    #[arg(long)]
    require_saturated: bool,
    /// choose weights with a seeded random policy instead of the default one
    #[arg(long)]
    seed: Option<u64>,
    /// report the elapsed time
    #[arg(long)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide multiplicity freeness; report rank, isotropy or a dependency
    Check(CheckArgs),
    /// As check, with every reduction step
    Trace(CheckArgs),
    /// Canonical components with their duality classes
    Decompose {
        expr: String,
    },
    /// The saturated representation with the same semisimple module
    Saturate {
        expr: String,
    },
    /// Identify sl(2) factors of two representations and compare the direct
    /// verdict with the link criterion
    Glue {
        left: String,
        right: String,
        /// LEFT_FACTOR:RIGHT_FACTOR, factor indices of the two sides
        #[arg(long = "pair", required = true, value_parser = parse_pair)]
        pairs: Vec<(usize, usize)>,
    },
    /// Catalog tables
    Tables {
        #[command(subcommand)]
        cmd: TablesCommand,
    },
}

#[derive(Subcommand, Debug)]
enum TablesCommand {
    /// Replay catalog rows for every parameter tuple up to the cap
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(0..))]
        cap: i64,
        #[arg(long)]
        table: Option<String>,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        timing: bool,
    },
    /// Row ids and metadata
    List {
        #[arg(long)]
        table: Option<String>,
    },
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or("expected LEFT:RIGHT")?;
    let n = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x}: {e}"));
    Ok((n(a)?, n(b)?))
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    stdin_used: bool,
}

impl Io<'_> {
    fn source(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(Failure::usage("stdin can be read only once"));
        }
        self.stdin_used = true;
        let mut s = String::new();
        self.stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
        Ok(s.trim().to_string())
    }

    fn compile(&mut self, arg: &str) -> Result<(String, SymplecticRep), Failure> {
        let src = self.source(arg)?;
        match mfsr_dsl::compile(&src) {
            Ok(rep) => Ok((src.clone(), rep)),
            Err(e) => Err(Failure::usage(e.render(&src))),
        }
    }

    fn emit(&mut self, format: Format, report: &Value) -> Result<(), Failure> {
        let s = match format {
            Format::Json => render_json(report),
            Format::Text => text::render(report),
        };
        self.out
            .write_all(s.as_bytes())
            .map_err(|e| Failure::internal(format!("writing output: {e}")))?;
        if format == Format::Text {
            for w in report["warnings"].as_array().into_iter().flatten() {
                let _ = writeln!(self.err, "warning: {}", w.as_str().unwrap_or_default());
            }
        }
        Ok(())
    }
}

/// Run the command line on `args` (including the program name) and return
/// the exit status.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let s = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(s.as_bytes()) } else { err.write_all(s.as_bytes()) };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        err,
        stdin_used: false,
    };
    match dispatch(cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: Cli, io: &mut Io<'_>) -> Result<i32, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Check(a) => check(io, format, a, false),
        Command::Trace(a) => check(io, format, a, true),
        Command::Decompose { expr } => {
            let (src, rep) = io.compile(&expr)?;
            io.emit(format, &decompose_report(&src, &rep)?)?;
            Ok(EXIT_OK)
        }
        Command::Saturate { expr } => {
            let (src, rep) = io.compile(&expr)?;
            io.emit(format, &saturate_report(&src, &rep)?)?;
            Ok(EXIT_OK)
        }
        Command::Glue { left, right, pairs } => {
            let (ls, l) = io.compile(&left)?;
            let (rs, r) = io.compile(&right)?;
            io.emit(format, &glue_report(&ls, &l, &rs, &r, &pairs)?)?;
            Ok(EXIT_OK)
        }
        Command::Tables { cmd } => {
            let catalog = Catalog::from_env().map_err(Failure::from)?;
            let table = match &cmd {
                TablesCommand::Verify { table, .. } | TablesCommand::List { table } => table.as_deref(),
            };
            if let Some(t) = table {
                if !catalog.entries.iter().any(|e| e.table == t) {
                    return Err(Failure::usage(format!("no table `{t}` (known: {})", mfsr_catalog::TABLES.join(", "))));
                }
            }
            match cmd {
                TablesCommand::Verify { cap, table, jobs, timing } => {
                    let opts = VerifyOptions {
                        cap,
                        table: table.clone(),
                        jobs,
                        timing,
                    };
                    let summary = verify_all(&catalog, &opts).map_err(Failure::from)?;
                    io.emit(format, &verify_report(&summary, table.as_deref())?)?;
                    Ok(if summary.passed { EXIT_OK } else { EXIT_MISMATCH })
                }
                TablesCommand::List { table } => {
                    io.emit(format, &list_report(&catalog, table.as_deref())?)?;
                    Ok(EXIT_OK)
                }
            }
        }
    }
}

fn check(io: &mut Io<'_>, format: Format, a: CheckArgs, trace: bool) -> Result<i32, Failure> {
    let (src, rep) = io.compile(&a.expr)?;
    let opts = CheckOptions {
        trace,
        seed: a.seed,
        timing: a.timing,
    };
    let report = check_report(&src, &rep, &opts)?;
    if a.require_saturated && report["saturation"]["saturated"] == Value::Bool(false) {
        let why: Vec<&str> = report["saturation"]["violations"]
            .as_array()
            .into_iter()
            .flatten()
            .filter_map(|v| v.as_str())
            .collect();
        let _ = writeln!(io.err, "error: input is not saturated: {}", why.join("; "));
        return Ok(EXIT_MISMATCH);
    }
    io.emit(format, &report)?;
    Ok(EXIT_OK)
}
