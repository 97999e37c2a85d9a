//! `abrun`: report abelian runs of a byte string read from a file or stdin.

use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use abelian_runs::all_runs::{
    all_abelian_runs_with, all_anchored_runs, name_fragments, AllRunsOptions, AnchoredRunRec,
    NamingMode,
};
use abelian_runs::fixed_norm::NormScanner;
use abelian_runs::fixed_period::{Kill, Mode, ScannerState};
use abelian_runs::oracle::oracle_all_runs_with;
use abelian_runs::{parikh_of, Alphabet, ParikhVector, Run};
use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

const ALPHABET_HELP: &str = "Symbols in the order used for period vectors, e.g. \"acgt\". \
Without it the whole input is read first and symbols are ordered by first occurrence.";

#[derive(Parser)]
#[command(name = "abrun", version, about = "Find abelian runs in a byte string")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Online scan for one period vector (--period) or for every period of one norm (--norm).
    Run(RunArgs),
    /// Offline computation of every abelian run, sorted by (norm, start).
    RunAll(RunAllArgs),
}

#[derive(Args)]
struct Common {
    /// Input file; reads stdin when absent. One trailing newline is ignored.
    input: Option<PathBuf>,
    #[arg(long, help = ALPHABET_HELP)]
    alphabet: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Print a column header before TSV records.
    #[arg(long)]
    header: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("target").required(true).args(["period", "norm"])))]
struct RunArgs {
    #[command(flatten)]
    common: Common,
    /// Period vector as comma-separated counts, e.g. "2,2".
    #[arg(long)]
    period: Option<String>,
    /// Report runs for every period vector of this norm.
    #[arg(long)]
    norm: Option<usize>,
    #[arg(long, value_enum, default_value_t = ScanMode::Abelian)]
    mode: ScanMode,
    /// Dump the scanner state after every step to stderr (--period only).
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct RunAllArgs {
    #[command(flatten)]
    common: Common,
    /// How period vectors are named internally.
    #[arg(long, value_enum, default_value_t = Naming::Randomized)]
    mode: Naming,
    /// Seed for randomized naming.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Engine::Main)]
    engine: Engine,
    /// Process fragment lengths in parallel.
    #[arg(long)]
    parallel: bool,
    /// Print every anchored run instead of the abelian ones.
    #[arg(long, hide = true)]
    anchored: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanMode {
    Anchored,
    Abelian,
}

#[derive(Clone, Copy, ValueEnum)]
enum Naming {
    Randomized,
    Deterministic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Main,
    Oracle,
}

/// Bad input or flags; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use abelian_runs::Error as E;
    if err.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match err.downcast_ref::<E>() {
        Some(
            E::UnknownSymbol { .. }
            | E::DuplicateSymbol(_)
            | E::DimensionMismatch { .. }
            | E::ZeroNorm
            | E::ParsePeriod(_)
            | E::UnsupportedMode(_),
        ) => 2,
        _ => 1,
    }
}

#[derive(Serialize)]
struct Record {
    start: usize,
    head: usize,
    tail: usize,
    end: usize,
    period: String,
    anchor: usize,
    cores: usize,
    norm: usize,
}

impl From<&Run> for Record {
    fn from(r: &Run) -> Self {
        Record {
            start: r.start,
            head: r.head,
            tail: r.tail,
            end: r.end,
            period: r.period.to_string(),
            anchor: r.anchor(),
            cores: r.cores(),
            norm: r.norm(),
        }
    }
}

struct Sink<W: Write> {
    out: W,
    format: Format,
    flush: bool,
}

impl<W: Write> Sink<W> {
    fn new(out: W, common: &Common, flush: bool) -> Result<Self> {
        let mut sink = Sink { out, format: common.format, flush };
        if common.header && matches!(common.format, Format::Tsv) {
            writeln!(sink.out, "start\thead\ttail\tend\tperiod\tanchor\tcores\tnorm")?;
        }
        Ok(sink)
    }

    fn emit(&mut self, run: &Run) -> Result<()> {
        let rec = Record::from(run);
        match self.format {
            Format::Tsv => writeln!(
                self.out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                rec.start, rec.head, rec.tail, rec.end, rec.period, rec.anchor, rec.cores, rec.norm
            )?,
            Format::Json => {
                serde_json::to_writer(&mut self.out, &rec)?;
                self.out.write_all(b"\n")?;
            }
        }
        if self.flush {
            self.out.flush()?;
        }
        Ok(())
    }

    fn emit_all(&mut self, runs: &[Run]) -> Result<()> {
        runs.iter().try_for_each(|r| self.emit(r))
    }

    fn close(mut self) -> Result<()> {
        self.out.flush()?;
        Ok(())
    }
}

fn open(input: &Option<PathBuf>) -> Result<Box<dyn Read>> {
    Ok(match input {
        Some(path) => Box::new(File::open(path).with_context(|| format!("cannot open {}", path.display()))?),
        None => Box::new(io::stdin().lock()),
    })
}

fn read_all(input: &Option<PathBuf>) -> Result<Vec<u8>> {
    let mut word = Vec::new();
    open(input)?.read_to_end(&mut word)?;
    if word.last() == Some(&b'\n') {
        word.pop();
    }
    Ok(word)
}

/// Feeds input bytes to `f` one at a time, holding back a final newline.
fn stream(input: &Option<PathBuf>, mut f: impl FnMut(u8) -> Result<()>) -> Result<()> {
    let mut reader = BufReader::new(open(input)?);
    let mut held = false;
    loop {
        let buf = reader.fill_buf()?;
        if buf.is_empty() {
            return Ok(());
        }
        let len = buf.len();
        for &c in buf {
            if held {
                f(b'\n')?;
                held = false;
            }
            if c == b'\n' {
                held = true;
            } else {
                f(c)?;
            }
        }
        reader.consume(len);
    }
}

fn explicit_alphabet(common: &Common) -> Result<Option<Alphabet>> {
    common
        .alphabet
        .as_ref()
        .map(|s| Alphabet::from_symbols(s.as_bytes()).map_err(|e| usage(format!("--alphabet: {e}"))))
        .transpose()
}

fn trace_line(step: &str, st: &ScannerState) {
    eprintln!("i={step} {}", st.snapshot());
}

fn trace_kill(step: usize, st: &ScannerState, kill: &Kill) {
    let b = kill.value.map_or_else(|| "∞".to_string(), |v| v.to_string());
    eprintln!("i={step} retire b={b} {}", st.snapshot());
}

fn run_period(args: &RunArgs, period: &str) -> Result<()> {
    let period: ParikhVector = period.parse().map_err(|e| usage(format!("--period: {e}")))?;
    let mode = match args.mode {
        ScanMode::Anchored => Mode::Anchored,
        ScanMode::Abelian => Mode::Abelian,
    };
    let stdout = io::stdout().lock();

    let (alphabet, word) = match explicit_alphabet(&args.common)? {
        Some(a) => (a, None),
        None => {
            let word = read_all(&args.common.input)?;
            if word.is_empty() {
                return Sink::new(stdout, &args.common, false)?.close();
            }
            (Alphabet::from_word(&word), Some(word))
        }
    };
    if alphabet.len() != period.dim() {
        return Err(usage(format!(
            "period has {} entries but the alphabet {:?} has {} symbols; pass --alphabet to fix the order",
            period.dim(),
            String::from_utf8_lossy(alphabet.symbols()),
            alphabet.len()
        )));
    }
    let mut scanner = ScannerState::new(period, &alphabet, mode)?;
    let mut sink = Sink::new(BufWriter::new(stdout), &args.common, word.is_none())?;
    if args.trace {
        trace_line("-", &scanner);
    }
    let step = |scanner: &mut ScannerState, sink: &mut Sink<_>, symbol: Option<u8>| -> Result<()> {
        let i = scanner.position();
        let mut found = Vec::new();
        let mut collect = |st: &ScannerState, kill: &Kill| {
            if args.trace {
                trace_kill(i, st, kill);
            }
            if let Some(r) = &kill.run {
                found.push(r.clone());
            }
        };
        match symbol {
            Some(c) => scanner.push_with(c, &mut collect)?,
            None => scanner.finish_with(&mut collect)?,
        }
        if args.trace {
            trace_line(&i.to_string(), scanner);
        }
        sink.emit_all(&found)
    };
    match word {
        Some(word) => {
            for &c in &word {
                step(&mut scanner, &mut sink, Some(c))?;
            }
        }
        None => stream(&args.common.input, |c| step(&mut scanner, &mut sink, Some(c)))?,
    }
    step(&mut scanner, &mut sink, None)?;
    sink.close()
}

fn run_norm(args: &RunArgs, p: usize) -> Result<()> {
    if args.trace {
        return Err(usage("--trace needs --period"));
    }
    let mode = match args.mode {
        ScanMode::Anchored => Mode::Anchored,
        ScanMode::Abelian => Mode::Abelian,
    };
    let stdout = io::stdout().lock();
    match explicit_alphabet(&args.common)? {
        Some(alphabet) => {
            let mut scanner = NormScanner::new(p, alphabet, mode)?;
            let mut sink = Sink::new(BufWriter::new(stdout), &args.common, true)?;
            stream(&args.common.input, |c| sink.emit_all(&scanner.push(c)?))?;
            sink.emit_all(&scanner.finish()?)?;
            sink.close()
        }
        None => {
            let word = read_all(&args.common.input)?;
            let mut scanner = NormScanner::new(p, Alphabet::from_word(&word), mode)?;
            let mut sink = Sink::new(BufWriter::new(stdout), &args.common, false)?;
            for &c in &word {
                sink.emit_all(&scanner.push(c)?)?;
            }
            sink.emit_all(&scanner.finish()?)?;
            sink.close()
        }
    }
}

fn anchored_as_runs(word: &[u8], alphabet: &Alphabet, recs: &[AnchoredRunRec]) -> Result<Vec<Run>> {
    recs.iter()
        .map(|r| {
            let core = r.core_start();
            let period = parikh_of(&word[core..core + r.norm], alphabet)?;
            Ok(Run::new(r.start, r.head, r.tail, r.end, period))
        })
        .collect()
}

fn run_all(args: &RunAllArgs) -> Result<()> {
    let word = read_all(&args.common.input)?;
    let alphabet = match explicit_alphabet(&args.common)? {
        Some(a) => a,
        None => Alphabet::from_word(&word),
    };
    let naming = match args.mode {
        Naming::Randomized => NamingMode::Randomized,
        Naming::Deterministic => NamingMode::Deterministic,
    };
    let runs = match (args.engine, args.anchored) {
        (Engine::Oracle, true) => return Err(usage("--anchored is not available with --engine oracle")),
        (Engine::Oracle, false) => oracle_all_runs_with(&word, &alphabet),
        (Engine::Main, false) => {
            let mut opts = AllRunsOptions::new(naming).parallel(args.parallel);
            if let Some(seed) = args.seed {
                opts = opts.seed(seed);
            }
            all_abelian_runs_with(&word, &alphabet, opts)?
        }
        (Engine::Main, true) => {
            // Validate symbols before naming fragments.
            parikh_of(&word, &alphabet)?;
            let namer = name_fragments(&word, naming, args.seed);
            let mut recs = all_anchored_runs(&word, &namer, args.parallel);
            recs.sort_by_key(|r| (r.norm, r.start, r.end, r.head));
            recs.dedup();
            anchored_as_runs(&word, &alphabet, &recs)?
        }
    };
    let mut sink = Sink::new(BufWriter::new(io::stdout().lock()), &args.common, false)?;
    sink.emit_all(&runs)?;
    sink.close()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Run(args) => match (&args.period, args.norm) {
            (Some(period), _) => run_period(args, period),
            (None, Some(p)) => run_norm(args, p),
            (None, None) => unreachable!("clap enforces --period or --norm"),
        },
        Command::RunAll(args) => run_all(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("abrun: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
