//! Command-line front end for `decindex`.
//!
//! [`run`] takes the argument list and explicit I/O handles so the whole
//! surface can be driven in-process from tests; `main` just wires it to the
//! process streams.

pub mod bench;
pub mod record;
pub mod verify;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};
use decindex::{
    canonicalize, cumulative_upto, enumerate, level_count, parse_decimal, strict_cumulative_upto,
    strict_level_count, BigIndex, BigTuple, BigUint, Error, Index, Mode, DEFAULT_MAX_RENDER_DIGITS,
};
use rayon::prelude::*;

use crate::record::{ErrorRecord, Record};

pub mod exit {
    pub const SUCCESS: i32 = 0;
    pub const IO: i32 = 1;
    pub const INPUT: i32 = 2;
    pub const CANONICALITY: i32 = 3;
    pub const RENDER_BUDGET: i32 = 4;
    pub const VERIFICATION: i32 = 5;
}

/// Lines handed to the worker pool at a time; output is flushed per chunk.
const BATCH_CHUNK: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "decindex", version, about = "Index finite decimals by natural numbers and back")]
pub struct Cli {
    /// Use the value bijection that skips tuples whose n3 ends in zero.
    #[arg(long, global = true)]
    pub strict: bool,

    /// Emit one JSON object per line.
    #[arg(long, global = true)]
    pub json: bool,

    /// Refuse to render decimal text longer than this many characters.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RENDER_DIGITS)]
    pub max_render_digits: usize,

    /// Read batch input from FILE instead of standard input.
    #[arg(long = "in", global = true, value_name = "FILE")]
    pub input: Option<PathBuf>,

    /// Write output to FILE instead of standard output.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decimal text to index.
    Encode {
        #[arg(allow_hyphen_values = true)]
        value: Option<String>,
        /// Read one decimal per line.
        #[arg(long)]
        batch: bool,
    },
    /// Index to decimal text.
    Decode {
        #[arg(allow_hyphen_values = true)]
        index: Option<String>,
        /// Read one index per line.
        #[arg(long)]
        batch: bool,
    },
    /// Every index in an inclusive range, in order.
    Enumerate {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Level sizes and cumulative totals.
    #[command(group(ArgGroup::new("what").required(true).args(["level", "upto", "table"])))]
    Count {
        /// Number of tuples at level K.
        #[arg(long, value_name = "K")]
        level: Option<String>,
        /// Number of tuples at levels 0..=K.
        #[arg(long, value_name = "K")]
        upto: Option<String>,
        /// CSV of per-level and cumulative counts for levels 0..=K.
        #[arg(long, value_name = "K")]
        table: Option<u64>,
    },
    /// Check the closed forms against brute force and round trips.
    Verify {
        #[arg(long, default_value_t = 1000)]
        max_index: u64,
        #[arg(long, default_value_t = decindex::oracle::DEFAULT_MAX_LEVEL)]
        max_level: u64,
    },
    /// Operation counts and timings for encode/decode by index size.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = bench::DEFAULT_INDICES.map(String::from))]
        indices: Vec<String>,
        #[arg(long, default_value_t = 2000)]
        reps: u32,
    },
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotStrictCanonical { .. } => exit::CANONICALITY,
        Error::RenderBudgetExceeded { .. } => exit::RENDER_BUDGET,
        _ => exit::INPUT,
    }
}

struct LineFailure {
    code: i32,
    message: String,
    /// Output line to emit in place of a normal result, if any.
    fallback: Option<String>,
}

impl LineFailure {
    fn input(message: impl Into<String>) -> Self {
        LineFailure {
            code: exit::INPUT,
            message: message.into(),
            fallback: None,
        }
    }

    fn from_error(err: &Error) -> Self {
        LineFailure {
            code: exit_code(err),
            message: err.to_string(),
            fallback: None,
        }
    }
}

struct Settings {
    mode: Mode,
    json: bool,
    budget: usize,
}

fn parse_index(text: &str) -> Result<BigIndex, LineFailure> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(LineFailure::input(format!("not a natural number: {text:?}")));
    }
    let value: BigUint = text.parse().map_err(|_| LineFailure::input(format!("not a natural number: {text:?}")))?;
    Index::new(value).map_err(|e| LineFailure::from_error(&e))
}

fn parse_level(text: &str) -> Result<BigUint, LineFailure> {
    let text = text.trim();
    if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(LineFailure::input(format!("not a level: {text:?}")));
    }
    text.parse().map_err(|_| LineFailure::input(format!("not a level: {text:?}")))
}

fn encode_line(text: &str, s: &Settings) -> Result<String, LineFailure> {
    let decimal = parse_decimal(text.trim()).map_err(|e| LineFailure::from_error(&e.into()))?;
    let tuple: BigTuple = canonicalize(&decimal).map_err(|e| LineFailure::from_error(&e))?;
    let index = s.mode.encode(&tuple).map_err(|e| LineFailure::from_error(&e))?;
    Ok(if s.json {
        Record::new(s.mode, &index, &tuple, s.budget).to_json()
    } else {
        index.to_string()
    })
}

fn decode_line(text: &str, s: &Settings) -> Result<String, LineFailure> {
    let index = parse_index(text)?;
    render_index(&index, s)
}

fn render_index(index: &BigIndex, s: &Settings) -> Result<String, LineFailure> {
    let tuple = s.mode.decode(index);
    let record = Record::new(s.mode, index, &tuple, s.budget);
    match (&record.value, s.json) {
        (_, true) if record.value.is_some() => Ok(record.to_json()),
        (Some(value), false) => Ok(value.clone()),
        _ => {
            let err = decindex::reconstruct(&tuple, s.budget).expect_err("value is missing");
            Err(LineFailure {
                code: exit::RENDER_BUDGET,
                message: err.to_string(),
                fallback: Some(record.to_json()),
            })
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: Box<dyn Write + 'a>,
    err: &'a mut dyn Write,
}

fn emit_failure(io: &mut Io<'_>, s: &Settings, line: Option<usize>, f: &LineFailure) -> io::Result<()> {
    write_failure(&mut *io.out, &mut *io.err, s, line, f)
}

fn write_failure(
    out: &mut dyn Write,
    err: &mut dyn Write,
    s: &Settings,
    line: Option<usize>,
    f: &LineFailure,
) -> io::Result<()> {
    match line {
        Some(n) => writeln!(err, "error: line {n}: {}", f.message)?,
        None => writeln!(err, "error: {}", f.message)?,
    }
    if let Some(fallback) = &f.fallback {
        writeln!(out, "{fallback}")?;
    } else if let Some(n) = line {
        if s.json {
            let rec = ErrorRecord {
                line: n,
                error: f.message.clone(),
                exit_code: f.code,
            };
            writeln!(out, "{}", serde_json::to_string(&rec).expect("serializes"))?;
        } else {
            writeln!(out, "error: {}", f.message)?;
        }
    }
    Ok(())
}

/// Maps every input line in parallel, writing results in input order.
/// Returns the exit code of the first failing line, or success.
fn run_batch(
    io: &mut Io<'_>,
    input: Option<&PathBuf>,
    s: &Settings,
    f: fn(&str, &Settings) -> Result<String, LineFailure>,
) -> io::Result<i32> {
    let Io { stdin, out, err } = io;
    let mut reader: Box<dyn BufRead + '_> = match input {
        Some(path) => Box::new(BufReader::new(File::open(path)?)),
        None => Box::new(&mut **stdin),
    };
    let mut code = exit::SUCCESS;
    let mut line_no = 0usize;
    loop {
        let mut chunk = Vec::with_capacity(BATCH_CHUNK);
        let mut buf = String::new();
        while chunk.len() < BATCH_CHUNK {
            buf.clear();
            if reader.read_line(&mut buf)? == 0 {
                break;
            }
            chunk.push(buf.trim_end_matches(['\n', '\r']).to_string());
        }
        if chunk.is_empty() {
            break;
        }
        let results: Vec<_> = chunk.par_iter().map(|line| f(line, s)).collect();
        for result in results {
            line_no += 1;
            match result {
                Ok(line) => writeln!(out, "{line}")?,
                Err(failure) => {
                    if code == exit::SUCCESS {
                        code = failure.code;
                    }
                    write_failure(&mut **out, &mut **err, s, Some(line_no), &failure)?;
                }
            }
        }
    }
    Ok(code)
}

fn single_or_batch(
    io: &mut Io<'_>,
    cli: &Cli,
    s: &Settings,
    positional: &Option<String>,
    batch: bool,
    f: fn(&str, &Settings) -> Result<String, LineFailure>,
) -> io::Result<i32> {
    match positional {
        Some(_) if batch || cli.input.is_some() => {
            writeln!(io.err, "error: give either a positional argument or --batch, not both")?;
            Ok(exit::INPUT)
        }
        Some(arg) => match f(arg, s) {
            Ok(line) => {
                writeln!(io.out, "{line}")?;
                Ok(exit::SUCCESS)
            }
            Err(failure) => {
                emit_failure(io, s, None, &failure)?;
                Ok(failure.code)
            }
        },
        None if batch || cli.input.is_some() => run_batch(io, cli.input.as_ref(), s, f),
        None => {
            writeln!(io.err, "error: expected an argument or --batch")?;
            Ok(exit::INPUT)
        }
    }
}

fn cmd_enumerate(io: &mut Io<'_>, s: &Settings, from: &str, to: &str) -> io::Result<i32> {
    let bounds = parse_index(from).and_then(|a| parse_index(to).map(|b| (a, b)));
    let records = bounds.and_then(|(a, b)| {
        enumerate(a, b, s.mode, s.budget).map_err(|e| LineFailure::from_error(&e))
    });
    let records = match records {
        Ok(r) => r,
        Err(failure) => {
            emit_failure(io, s, None, &failure)?;
            return Ok(failure.code);
        }
    };
    let mut code = exit::SUCCESS;
    for rec in records {
        match (&rec.text, s.json) {
            (Some(text), false) => writeln!(io.out, "{text}")?,
            _ => {
                if rec.text.is_none() && code == exit::SUCCESS {
                    code = exit::RENDER_BUDGET;
                    writeln!(io.err, "error: index {} exceeds the render budget", rec.index)?;
                }
                writeln!(io.out, "{}", Record::new(s.mode, &rec.index, &rec.tuple, s.budget).to_json())?;
            }
        }
    }
    Ok(code)
}

fn cmd_count(
    io: &mut Io<'_>,
    s: &Settings,
    level: Option<&str>,
    upto: Option<&str>,
    table: Option<u64>,
) -> io::Result<i32> {
    if let Some(max) = table {
        writeln!(io.out, "K,level_count,cumulative_upto,strict_level_count")?;
        for k in 0..=max {
            let k = BigUint::from(k);
            writeln!(
                io.out,
                "{},{},{},{}",
                k,
                level_count(&k),
                cumulative_upto(&k),
                strict_level_count(&k)
            )?;
        }
        return Ok(exit::SUCCESS);
    }
    let (text, cumulative) = match (level, upto) {
        (Some(k), _) => (k, false),
        (None, Some(k)) => (k, true),
        (None, None) => unreachable!("clap requires one of --level/--upto/--table"),
    };
    let k = match parse_level(text) {
        Ok(k) => k,
        Err(failure) => {
            emit_failure(io, s, None, &failure)?;
            return Ok(failure.code);
        }
    };
    let value = match (s.mode, cumulative) {
        (Mode::Tuple, false) => level_count(&k),
        (Mode::Tuple, true) => cumulative_upto(&k),
        (Mode::Strict, false) => strict_level_count(&k),
        (Mode::Strict, true) => strict_cumulative_upto(&k),
    };
    writeln!(io.out, "{value}")?;
    Ok(exit::SUCCESS)
}

fn cmd_bench(io: &mut Io<'_>, indices: &[String], reps: u32) -> io::Result<i32> {
    let mut parsed = Vec::with_capacity(indices.len());
    for text in indices {
        match parse_index(text) {
            Ok(i) => parsed.push(i.into_inner()),
            Err(failure) => {
                writeln!(io.err, "error: {}", failure.message)?;
                return Ok(failure.code);
            }
        }
    }
    let report = bench::run_bench(&parsed, reps);
    write!(io.out, "{}", report.render())?;
    Ok(exit::SUCCESS)
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> io::Result<i32> {
    let s = Settings {
        mode: if cli.strict { Mode::Strict } else { Mode::Tuple },
        json: cli.json,
        budget: cli.max_render_digits,
    };
    match &cli.command {
        Command::Encode { value, batch } => single_or_batch(io, cli, &s, value, *batch, encode_line),
        Command::Decode { index, batch } => single_or_batch(io, cli, &s, index, *batch, decode_line),
        Command::Enumerate { from, to } => cmd_enumerate(io, &s, from, to),
        Command::Count { level, upto, table } => {
            cmd_count(io, &s, level.as_deref(), upto.as_deref(), *table)
        }
        Command::Verify {
            max_index,
            max_level,
        } => {
            let report = verify::run_verification(verify::VerifyOptions {
                max_index: *max_index,
                max_level: *max_level,
                mode: s.mode,
            });
            write!(io.out, "{}", report.render())?;
            Ok(if report.passed() {
                exit::SUCCESS
            } else {
                exit::VERIFICATION
            })
        }
        Command::Bench { indices, reps } => cmd_bench(io, indices, *reps),
    }
}

/// Runs the CLI and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::INPUT } else { exit::SUCCESS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };

    let out: Box<dyn Write + '_> = match &cli.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                let _ = writeln!(stderr, "error: cannot create {}: {e}", path.display());
                return exit::IO;
            }
        },
        None => Box::new(BufWriter::new(stdout)),
    };
    let mut io = Io {
        stdin,
        out,
        err: stderr,
    };
    let result = dispatch(&cli, &mut io).and_then(|code| io.out.flush().map(|()| code));
    match result {
        Ok(code) => code,
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => exit::SUCCESS,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit::IO
        }
    }
}
