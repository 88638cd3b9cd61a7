use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use approxquasi::bench::{self, BenchConfig};
use approxquasi::edit;
use approxquasi::gadget::{self, ConsensusInstance, CoverSearch};
use approxquasi::hamming;
use approxquasi::lcpk::pref_k;
use approxquasi::oracle::DEFAULT_BUDGET;
use approxquasi::penalty::PenaltyFile;
use approxquasi::report::ThresholdReport;
use approxquasi::restricted::{restricted_covers_ed, restricted_seeds_ed};
use approxquasi::text::DEFAULT_WILDCARD_BYTE;
use approxquasi::{Alphabet, Cost, Error, Metric, PenaltyMatrix, Text};

const EXIT_USAGE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_VALIDATION: u8 = 3;

#[derive(Parser)]
#[command(name = "approxquasi", version, about = "Approximate covers, seeds and k-coverage of strings")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Input character standing for the wildcard symbol.
    #[arg(long, global = true, default_value_t = DEFAULT_WILDCARD_BYTE as char)]
    wildcard: char,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Distance {
    Hamming,
    Levenshtein,
    Edit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Prefix,
    Factor,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    ExactBorder,
    ApproxBorder,
}

#[derive(Args)]
struct DistanceArgs {
    #[arg(long, value_enum, default_value_t = Distance::Hamming)]
    distance: Distance,
    /// Penalty matrix file, or `unit` for unit costs (edit distance only).
    #[arg(long)]
    penalty: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// k-coverage of every prefix or every factor of the input.
    Coverage {
        #[command(flatten)]
        dist: DistanceArgs,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Mode::Prefix)]
        mode: Mode,
    },
    /// Minimal threshold of every proper factor as an approximate cover.
    Covers(RestrictedArgs),
    /// Minimal threshold of every factor with 2|C| ≤ |T| as an approximate seed.
    Seeds(RestrictedArgs),
    /// Border of maximal Hamming k-coverage.
    Enhanced {
        #[command(flatten)]
        dist: DistanceArgs,
        #[arg(long)]
        k: u32,
        #[arg(long, value_enum, default_value_t = Variant::ExactBorder)]
        variant: Variant,
    },
    /// Hardness gadgets built from Hamming consensus instances.
    Gadget {
        #[command(subcommand)]
        action: GadgetAction,
    },
    /// Timing of the main algorithms over doubling input sizes.
    Bench {
        /// Small sizes, one attempt; for smoke testing.
        #[arg(long)]
        quick: bool,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Args)]
struct RestrictedArgs {
    #[command(flatten)]
    dist: DistanceArgs,
    /// Largest threshold searched (Hamming) or reported (edit distances).
    #[arg(long)]
    k: Option<u32>,
    /// Hamming: raise k from 0 until some factor qualifies.
    #[arg(long)]
    escalate: bool,
}

#[derive(Subcommand)]
enum GadgetAction {
    /// Emit the cover instance T and its target length c.
    BuildCover { instance: PathBuf },
    /// Emit the seed instance T' and its target length c'.
    BuildSeed { instance: PathBuf },
    /// Run the structural checks and the forward reduction check.
    Verify {
        instance: PathBuf,
        /// Cap on exhaustive enumerations.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: EXIT_INPUT, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self { code: EXIT_INPUT, message: e.to_string() }
    }
}

/// Fixed columns, one row per record; rendered as TSV or JSON.
struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Value>>,
}

impl Table {
    fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Tsv => {
                writeln!(out, "{}", self.columns.join("\t"))?;
                for row in &self.rows {
                    let cells: Vec<String> = row
                        .iter()
                        .map(|v| match v {
                            Value::Null => "none".to_string(),
                            Value::String(s) => s.clone(),
                            other => other.to_string(),
                        })
                        .collect();
                    writeln!(out, "{}", cells.join("\t"))?;
                }
            }
            Format::Json => {
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let obj: Map<String, Value> =
                            self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect();
                        Value::Object(obj)
                    })
                    .collect();
                writeln!(out, "{}", json!({ "columns": self.columns, "rows": rows }))?;
            }
        }
        Ok(())
    }
}

fn read_first_line() -> io::Result<Vec<u8>> {
    let mut buf = Vec::new();
    io::stdin().read_to_end(&mut buf)?;
    let end = buf.iter().position(|&b| b == b'\n').unwrap_or(buf.len());
    buf.truncate(end);
    if buf.last() == Some(&b'\r') {
        buf.pop();
    }
    Ok(buf)
}

/// Encoded input plus whatever the chosen distance needs.
struct Input {
    alphabet: Alphabet,
    text: Text,
    penalty: Option<PenaltyMatrix>,
    distance: Distance,
}

impl Input {
    fn load(dist: &DistanceArgs, wildcard: u8) -> Result<Self, Failure> {
        match (dist.distance, &dist.penalty) {
            (Distance::Edit, None) => return Err(Failure::usage("--distance edit requires --penalty FILE|unit")),
            (Distance::Hamming | Distance::Levenshtein, Some(_)) => {
                return Err(Failure::usage("--penalty only applies to --distance edit"))
            }
            _ => {}
        }
        let line = read_first_line()?;
        let (alphabet, penalty) = match dist.penalty.as_deref() {
            Some("unit") | None => {
                let alphabet = Alphabet::from_input(&line, wildcard);
                let p = PenaltyMatrix::unit(alphabet.size());
                (alphabet, dist.penalty.as_ref().map(|_| p))
            }
            Some(path) => {
                let src = std::fs::read_to_string(path)
                    .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{path}: {e}") })?;
                let (alphabet, p) = PenaltyFile::parse(&src)?.into_matrix(wildcard)?;
                (alphabet, Some(p))
            }
        };
        let text = alphabet.encode(&line)?;
        Ok(Self { alphabet, text, penalty, distance: dist.distance })
    }

    /// Metric for the edit-distance family; `None` for Hamming.
    fn edit_metric(&self) -> Option<Metric<'_>> {
        match self.distance {
            Distance::Hamming => None,
            Distance::Levenshtein => Some(Metric::Levenshtein),
            Distance::Edit => Some(Metric::Edit(self.penalty.as_ref().expect("loaded with a penalty"))),
        }
    }

    fn matrix(&self) -> PenaltyMatrix {
        self.penalty.clone().unwrap_or_else(|| PenaltyMatrix::unit(self.alphabet.size()))
    }
}

fn cmd_coverage(input: &Input, k: u32, mode: Mode) -> Result<Table, Failure> {
    let t = &input.text;
    let n = t.len();
    let factor_rows = |table: &mut Table, cov: &approxquasi::report::FactorCoverage| {
        for (a, b, c) in cov.iter() {
            if mode == Mode::Factor || a == 0 {
                match mode {
                    Mode::Prefix => table.push(vec![json!(b + 1), json!(c)]),
                    Mode::Factor => table.push(vec![json!(a), json!(b), json!(c)]),
                }
            }
        }
    };
    let mut table = match mode {
        Mode::Prefix => Table::new(&["length", "coverage"]),
        Mode::Factor => Table::new(&["start", "end", "coverage"]),
    };
    if n == 0 {
        return Ok(table);
    }
    match (input.edit_metric(), mode) {
        (None, Mode::Prefix) => {
            let cov = hamming::prefix_coverage(t, &pref_k(t, k as usize))?;
            for (len, c) in cov.iter().enumerate().skip(1) {
                table.push(vec![json!(len), json!(c)]);
            }
        }
        (None, Mode::Factor) => factor_rows(&mut table, &hamming::factor_coverage_all(t, k as usize)),
        (Some(metric), _) => factor_rows(&mut table, &edit::factor_coverage(t, metric, k as Cost)?),
    }
    Ok(table)
}

fn threshold_table(input: &Input, report: &ThresholdReport, limit: Option<Cost>) -> Table {
    let shown = |x: Option<Cost>| x.filter(|&v| limit.is_none_or(|k| v <= k));
    let best = report.entries.iter().filter_map(|e| shown(e.threshold)).min();
    let mut table = Table::new(&["factor", "start", "end", "threshold", "minimal"]);
    for e in &report.entries {
        let th = shown(e.threshold);
        table.push(vec![
            json!(input.alphabet.decode(&e.factor)),
            json!(e.start()),
            json!(e.end()),
            th.map_or(Value::Null, |v| json!(v)),
            json!(u8::from(th.is_some() && th == best)),
        ]);
    }
    table
}

fn cmd_restricted(input: &Input, args: &RestrictedArgs, seeds: bool) -> Result<Table, Failure> {
    let t = &input.text;
    if input.edit_metric().is_some() {
        if args.escalate {
            return Err(Failure::usage("--escalate applies to --distance hamming only"));
        }
        let p = input.matrix();
        let report = if seeds { restricted_seeds_ed(t, &p)? } else { restricted_covers_ed(t, &p)? };
        return Ok(threshold_table(input, &report, args.k.map(Cost::from)));
    }
    let run = |k: usize| if seeds { hamming::k_restricted_seeds(t, k) } else { hamming::k_restricted_covers(t, k) };
    let report = match (args.k, args.escalate) {
        (_, true) => {
            let mut k = 0;
            loop {
                let report = run(k);
                if report.minimal_threshold().is_some() || k >= t.len() {
                    break report;
                }
                k += 1;
            }
        }
        (Some(k), false) => run(k as usize),
        (None, false) => return Err(Failure::usage("--distance hamming needs --k or --escalate")),
    };
    Ok(threshold_table(input, &report, None))
}

fn cmd_enhanced(input: &Input, k: u32, variant: Variant) -> Result<Table, Failure> {
    if input.distance != Distance::Hamming {
        return Err(Failure::usage("enhanced covers are defined for --distance hamming only"));
    }
    let t = &input.text;
    let best = match variant {
        Variant::ExactBorder => hamming::enhanced_cover_exact_border(t, k as usize),
        Variant::ApproxBorder => hamming::enhanced_cover_approx_border(t, k as usize),
    };
    let mut table = Table::new(&["factor", "start", "length", "coverage"]);
    match best {
        Some(e) => table.push(vec![
            json!(input.alphabet.decode(&t.symbols()[e.start..e.start + e.len])),
            json!(e.start),
            json!(e.len),
            json!(e.coverage),
        ]),
        None => table.push(vec![Value::Null; 4]),
    }
    Ok(table)
}

fn load_instance(path: &PathBuf) -> Result<ConsensusInstance, Failure> {
    let src = std::fs::read_to_string(path)
        .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{}: {e}", path.display()) })?;
    Ok(ConsensusInstance::parse(&src)?)
}

/// The table, and whether every check passed.
fn cmd_gadget(action: &GadgetAction) -> Result<(Table, bool), Failure> {
    let mut table;
    match action {
        GadgetAction::BuildCover { instance } | GadgetAction::BuildSeed { instance } => {
            let inst = load_instance(instance)?;
            let enc = match action {
                GadgetAction::BuildCover { .. } => gadget::build_cover_instance(&inst),
                _ => gadget::build_seed_instance(&inst),
            };
            table = Table::new(&["text", "c"]);
            table.push(vec![json!(gadget::render(&enc.text)), json!(enc.target_len)]);
            Ok((table, true))
        }
        GadgetAction::Verify { instance, budget } => {
            let inst = load_instance(instance)?;
            table = Table::new(&["check", "passed", "detail"]);
            let windows = gadget::validate_window_ones(&inst);
            let detail = windows.first().map_or(String::new(), |v| format!("string {} has {} ones", v.index, v.ones));
            table.push(vec![json!("window-ones"), json!(windows.is_empty()), json!(detail)]);
            let lemma = gadget::validate_prefix_suffix(&inst);
            let detail = lemma
                .first()
                .map_or(String::new(), |v| format!("i={} j={} p={} distance={}", v.i, v.j, v.p, v.distance));
            table.push(vec![json!("prefix-suffix"), json!(lemma.is_empty()), json!(detail)]);
            let verdict = gadget::reduction_forward_check(&inst, *budget)?;
            let consensus = verdict.consensus.as_deref().map_or("none".to_string(), gadget::render);
            table.push(vec![json!("consensus"), json!(true), json!(consensus)]);
            if verdict.consensus.is_some() {
                let starts: Vec<String> = verdict.start_occ.iter().map(usize::to_string).collect();
                table.push(vec![json!("cover-forward"), json!(verdict.cover_ok), json!(starts.join(","))]);
                table.push(vec![json!("seed-forward"), json!(verdict.seed_ok), json!("")]);
            }
            let search = match &verdict.search {
                CoverSearch::Skipped { candidates, budget } => format!("skipped: {candidates} candidates > {budget}"),
                CoverSearch::NoCover => "no cover".to_string(),
                CoverSearch::Found { cover, decoded } => {
                    format!("cover {} decodes to {}", gadget::render(cover), gadget::render(decoded))
                }
            };
            let holds = verdict.holds(&inst);
            table.push(vec![json!("cover-search"), json!(holds), json!(search)]);
            Ok((table, holds && windows.is_empty() && lemma.is_empty()))
        }
    }
}

fn cmd_bench(quick: bool, seed: u64) -> Table {
    let cfg = if quick {
        BenchConfig { seed, reps: 1, retries: 0, prefix_n: 1 << 10, hamming_n: 64, levenshtein_n: 12, q_n: 8 }
    } else {
        BenchConfig { seed, ..Default::default() }
    };
    let (trends, q) = bench::run(&cfg);
    let mut table = Table::new(&["algorithm", "n", "seconds_n", "seconds_2n", "ratio", "exponent", "bound", "status"]);
    for t in &trends {
        table.push(vec![
            json!(t.name),
            json!(t.n),
            json!(format!("{:.6}", t.seconds_n)),
            json!(format!("{:.6}", t.seconds_2n)),
            json!(format!("{:.3}", t.ratio())),
            json!(format!("{:.3}", t.exponent())),
            json!(format!("{:.1}", t.bound + t.tolerance)),
            json!(if t.passed() { "ok" } else { "WARN" }),
        ]);
    }
    for x in &q {
        let ratio = x.fast_seconds / x.quadratic_seconds.max(1e-9);
        table.push(vec![
            json!("q-table-fast-vs-quadratic"),
            json!(x.n),
            json!(format!("{:.6}", x.quadratic_seconds)),
            json!(format!("{:.6}", x.fast_seconds)),
            json!(format!("{ratio:.3}")),
            Value::Null,
            Value::Null,
            json!("info"),
        ]);
    }
    table
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if !cli.wildcard.is_ascii() {
        return Err(Failure::usage("--wildcard must be a single ASCII character"));
    }
    let wildcard = cli.wildcard as u8;
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .map_err(|e| Failure::usage(e.to_string()))?;
    }
    let (table, ok) = match &cli.command {
        Command::Coverage { dist, k, mode } => (cmd_coverage(&Input::load(dist, wildcard)?, *k, *mode)?, true),
        Command::Covers(args) => (cmd_restricted(&Input::load(&args.dist, wildcard)?, args, false)?, true),
        Command::Seeds(args) => (cmd_restricted(&Input::load(&args.dist, wildcard)?, args, true)?, true),
        Command::Enhanced { dist, k, variant } => (cmd_enhanced(&Input::load(dist, wildcard)?, *k, *variant)?, true),
        Command::Gadget { action } => cmd_gadget(action)?,
        Command::Bench { quick, seed } => (cmd_bench(*quick, *seed), true),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    table.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VALIDATION),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
