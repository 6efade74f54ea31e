//! The `fpm` command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 miner disagreement.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::apriori::mine_apriori;
use crate::dhp::{mine_dhp, HashConfig, DEFAULT_BASE, DEFAULT_BUCKETS};
use crate::error::{Error, Result};
use crate::ingest::{
    generate_synthetic, parse_transactions, write_transactions, GeneratorSpec, InputFormat,
    Separator,
};
use crate::model::{SupportThreshold, TransactionDatabase};
use crate::oracle::enumerate_frequent;
use crate::report::{compare, render, render_itemsets, render_mining, Format, MiningReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

/// Set to `0` to disable text styling.
pub const COLOR_ENV: &str = "FPM_COLOR";

#[derive(Debug, Parser)]
#[command(
    name = "fpm",
    version,
    about = "Frequent itemset mining with Apriori and DHP"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Mine frequent itemsets with one algorithm.
    Mine(MineArgs),
    /// Run both algorithms and print the per-level comparison.
    Compare(CompareArgs),
    /// Enumerate frequent itemsets by brute force.
    Oracle(OracleArgs),
    /// Write a synthetic transaction file.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgoArg {
    Apriori,
    Dhp,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeparatorArg {
    Auto,
    Comma,
    Whitespace,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ThresholdArgs {
    /// Absolute minimum support count.
    #[arg(long, value_name = "N")]
    min_support: Option<usize>,
    /// Minimum support as a fraction of transactions, rounded up.
    #[arg(long, value_name = "F")]
    min_support_ratio: Option<f64>,
}

impl ThresholdArgs {
    fn resolve(&self, db: &TransactionDatabase) -> Result<SupportThreshold> {
        match (self.min_support, self.min_support_ratio) {
            (Some(n), _) => SupportThreshold::new(n),
            (None, Some(ratio)) => SupportThreshold::from_ratio(ratio, db.len()),
            (None, None) => unreachable!("clap requires one threshold"),
        }
    }
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Transaction file, one transaction per line; `-` reads stdin.
    #[arg(long, value_name = "PATH")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "auto")]
    separator: SeparatorArg,
}

impl InputArgs {
    fn load(&self) -> Result<TransactionDatabase> {
        let format = InputFormat::new(match self.separator {
            SeparatorArg::Auto => Separator::Auto,
            SeparatorArg::Comma => Separator::Comma,
            SeparatorArg::Whitespace => Separator::Whitespace,
        });
        if self.input == Path::new("-") {
            return parse_transactions(io::stdin().lock(), format);
        }
        let file = File::open(&self.input)
            .map_err(|e| Error::Io(format!("{}: {e}", self.input.display())))?;
        parse_transactions(io::BufReader::new(file), format)
    }
}

#[derive(Debug, Args)]
struct HashArgs {
    /// Number of DHP hash buckets.
    #[arg(long, default_value_t = DEFAULT_BUCKETS)]
    buckets: usize,
    /// Radix of the item-order hash polynomial.
    #[arg(long, default_value_t = DEFAULT_BASE)]
    base: u64,
    /// Stop bucket filtering after this level's scan.
    #[arg(long, value_name = "K")]
    hash_until_level: Option<usize>,
}

impl HashArgs {
    fn config(&self) -> Result<HashConfig> {
        Ok(HashConfig::new(self.buckets, self.base)?.hash_until_level(self.hash_until_level))
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Include itemset listings, not just counts.
    #[arg(long)]
    list_itemsets: bool,
}

#[derive(Debug, Args)]
struct MineArgs {
    #[arg(long, value_enum)]
    algo: AlgoArg,
    #[command(flatten)]
    threshold: ThresholdArgs,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    hash: HashArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    threshold: ThresholdArgs,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    hash: HashArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[command(flatten)]
    threshold: ThresholdArgs,
    #[command(flatten)]
    input: InputArgs,
    /// Largest itemset size to enumerate.
    #[arg(long, value_name = "K")]
    max_k: Option<usize>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    items: usize,
    #[arg(long)]
    txns: usize,
    #[arg(long)]
    mean_size: f64,
    #[arg(long)]
    seed: u64,
    /// Destination file; `-` writes stdout.
    #[arg(long, value_name = "PATH")]
    output: PathBuf,
}

/// Entry point for the binary: real stdio, styling when stdout is a terminal.
pub fn main_with_env() -> i32 {
    let styled = io::stdout().is_terminal() && std::env::var(COLOR_ENV).map_or(true, |v| v != "0");
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = BufWriter::new(stdout.lock());
    let code = run(std::env::args_os(), &mut out, &mut stderr.lock(), styled);
    let _ = out.flush();
    code
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, styled: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli.command, out, styled) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "fpm: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(error: &Error) -> i32 {
    match error {
        e if e.is_disagreement() => EXIT_DISAGREEMENT,
        Error::InvalidThreshold(_) | Error::InvalidHashConfig(_) | Error::Spec(_) => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

fn execute(command: Command, out: &mut dyn Write, styled: bool) -> Result<()> {
    match command {
        Command::Mine(args) => {
            let db = args.input.load()?;
            let threshold = args.threshold.resolve(&db)?;
            let config = args.hash.config()?;
            let (result, config) = match args.algo {
                AlgoArg::Apriori => (mine_apriori(&db, threshold), None),
                AlgoArg::Dhp => (mine_dhp(&db, threshold, &config), Some(&config)),
            };
            let mut report = MiningReport::new(&db, &result, config);
            if !args.output.list_itemsets {
                report = report.without_listings();
            }
            let format = args.output.format.into();
            emit(out, &render_mining(&report, format), format, styled)
        }
        Command::Compare(args) => {
            let db = args.input.load()?;
            let threshold = args.threshold.resolve(&db)?;
            let mut report = compare(&db, threshold, &args.hash.config()?)?;
            if !args.output.list_itemsets {
                report = report.without_listings();
            }
            let format = args.output.format.into();
            emit(out, &render(&report, format), format, styled)
        }
        Command::Oracle(args) => {
            let db = args.input.load()?;
            let threshold = args.threshold.resolve(&db)?;
            let found = enumerate_frequent(&db, threshold, args.max_k)?;
            out.write_all(render_itemsets(db.order(), &found).as_bytes())?;
            Ok(())
        }
        Command::Gen(args) => {
            let db = generate_synthetic(&GeneratorSpec {
                items: args.items,
                transactions: args.txns,
                mean_size: args.mean_size,
                seed: args.seed,
            })?;
            if args.output == Path::new("-") {
                return write_transactions(&db, out, Separator::Comma);
            }
            let file = File::create(&args.output)
                .map_err(|e| Error::Io(format!("{}: {e}", args.output.display())))?;
            let mut file = BufWriter::new(file);
            write_transactions(&db, &mut file, Separator::Comma)?;
            file.flush()?;
            Ok(())
        }
    }
}

/// Writes rendered output; text titles are bolded when styling is on.
fn emit(out: &mut dyn Write, rendered: &str, format: Format, styled: bool) -> Result<()> {
    match (format, styled, rendered.split_once('\n')) {
        (Format::Text, true, Some((title, rest))) => {
            write!(out, "\x1b[1m{title}\x1b[0m\n{rest}")?;
        }
        _ => out.write_all(rendered.as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_by_error_kind() {
        let disagreement = Error::MinerDisagreement {
            level: 2,
            only_apriori: vec!["A,B / 2".into()],
            only_dhp: vec![],
        };
        assert_eq!(exit_code(&disagreement), EXIT_DISAGREEMENT);
        let domination = Error::CandidateDomination {
            level: 2,
            apriori: 3,
            dhp: 4,
        };
        assert_eq!(exit_code(&domination), EXIT_DISAGREEMENT);
        assert_eq!(exit_code(&Error::InvalidThreshold("x".into())), EXIT_USAGE);
        assert_eq!(
            exit_code(&Error::Parse {
                line: 1,
                message: "x".into()
            }),
            EXIT_DATA
        );
        assert_eq!(exit_code(&Error::Encoding { line: 1 }), EXIT_DATA);
    }

    #[test]
    fn styling_bolds_only_text_titles() {
        let mut out = Vec::new();
        emit(&mut out, "title\nbody\n", Format::Text, true).unwrap();
        assert_eq!(out, b"\x1b[1mtitle\x1b[0m\nbody\n");
        let mut out = Vec::new();
        emit(&mut out, "{}\n", Format::Json, true).unwrap();
        assert_eq!(out, b"{}\n");
    }
}
