//! Command-line front end: family enumeration, single-partition bijections,
//! cover tables, and the verification report writer.
//!
//! Exit codes: 0 success, 1 at least one identity check failed, 2 bad
//! arguments or violated preconditions, 3 I/O failure. Data goes to stdout
//! (or --out for verify reports), diagnostics to stderr.

mod render;
mod vocab;

use beckworks::gapfree::{self, Parity};
use beckworks::verify::{self, IdentityReport};
use beckworks::{beck_one, beck_two, exec, families, glaisher, Partition};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use render::{Format, ReportFormat};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "beckworks",
    version,
    about = "Partition identity toolkit: enumeration, bijections, covers, and brute-force verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a partition family at one weight.
    Enumerate {
        /// Weight to enumerate at.
        #[arg(long)]
        n: u64,
        /// Family name; see the README for the vocabulary.
        #[arg(long)]
        family: String,
        /// Base parameter for the k-indexed families.
        #[arg(long)]
        k: Option<u64>,
        /// Count parameter for the franklin families.
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply a bijection to one partition and print the image.
    Map {
        #[arg(long)]
        bijection: Bijection,
        /// Base parameter; required by the glaisher maps.
        #[arg(long)]
        k: Option<u64>,
        /// The partition, in the canonical text grammar, e.g. "(1^3,2,4)".
        #[arg(long)]
        partition: String,
    },
    /// Print the cover table behind one of the counting identities.
    Decompose {
        #[arg(long)]
        theorem: Theorem,
        /// Weight to decompose at.
        #[arg(long)]
        n: u64,
        /// Base parameter; required by beck1 (k >= 2) and beck2 (k >= 1).
        #[arg(long)]
        k: Option<u64>,
        /// Cover parity; required by beck3.
        #[arg(long)]
        parity: Option<ParityArg>,
        /// Omit empty groups and unproductive rows, as the published tables do.
        #[arg(long)]
        paper_table: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate identities over a weight range and write report lines.
    Verify {
        /// Identity name from the catalog, repeatable; defaults to all.
        #[arg(long = "identity")]
        identities: Vec<String>,
        /// Check weights 1..=n-max; defaults to each identity's own depth.
        #[arg(long)]
        n_max: Option<u64>,
        /// Base range as A..B (inclusive) or a single value.
        #[arg(long)]
        k: Option<String>,
        /// Franklin count range as A..B (inclusive) or a single value.
        #[arg(long)]
        m: Option<String>,
        /// Write report lines to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Bijection {
    GlaisherSplit,
    GlaisherMerge,
    Conjugate,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    Beck1,
    Beck2,
    Beck3,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Odd,
    Even,
}

impl From<ParityArg> for Parity {
    fn from(p: ParityArg) -> Parity {
        match p {
            ParityArg::Odd => Parity::Odd,
            ParityArg::Even => Parity::Even,
        }
    }
}

enum CliError {
    Usage(String),
    Io(String),
}

fn usage(e: beckworks::Error) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_error(e: io::Error) -> CliError {
    CliError::Io(e.to_string())
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Enumerate {
            n,
            family,
            k,
            m,
            format,
        } => cmd_enumerate(n, &family, k, m, format),
        Command::Map {
            bijection,
            k,
            partition,
        } => cmd_map(bijection, k, &partition),
        Command::Decompose {
            theorem,
            n,
            k,
            parity,
            paper_table,
            format,
        } => cmd_decompose(theorem, n, k, parity, paper_table, format),
        Command::Verify {
            identities,
            n_max,
            k,
            m,
            out,
            format,
        } => cmd_verify(&identities, n_max, k.as_deref(), m.as_deref(), out, format),
    }
}

fn cmd_enumerate(
    n: u64,
    family: &str,
    k: Option<u64>,
    m: Option<u64>,
    format: Format,
) -> Result<i32, CliError> {
    let spec = vocab::resolve_family(family, k, m).map_err(CliError::Usage)?;
    let items = families::enumerate(n, spec).map_err(usage)?;
    let stdout = io::stdout();
    render::write_partitions(&mut stdout.lock(), &items, format).map_err(io_error)?;
    Ok(0)
}

fn cmd_map(bijection: Bijection, k: Option<u64>, partition: &str) -> Result<i32, CliError> {
    let p = Partition::parse(partition).map_err(usage)?;
    let image = match bijection {
        Bijection::GlaisherSplit => {
            let k =
                k.ok_or_else(|| CliError::Usage("bijection glaisher-split requires --k".into()))?;
            glaisher::split(&p, k).map_err(usage)?
        }
        Bijection::GlaisherMerge => {
            let k =
                k.ok_or_else(|| CliError::Usage("bijection glaisher-merge requires --k".into()))?;
            glaisher::merge(&p, k).map_err(usage)?
        }
        Bijection::Conjugate => {
            if k.is_some() {
                return Err(CliError::Usage(
                    "bijection conjugate does not take --k".into(),
                ));
            }
            p.conjugate()
        }
    };
    let stdout = io::stdout();
    writeln!(stdout.lock(), "{image}").map_err(io_error)?;
    Ok(0)
}

fn cmd_decompose(
    theorem: Theorem,
    n: u64,
    k: Option<u64>,
    parity: Option<ParityArg>,
    paper_table: bool,
    format: Format,
) -> Result<i32, CliError> {
    let (decomposition, image_first) = match theorem {
        Theorem::Beck1 | Theorem::Beck2 => {
            if parity.is_some() {
                return Err(CliError::Usage("--parity applies only to beck3".into()));
            }
            let name = if theorem == Theorem::Beck1 {
                "beck1"
            } else {
                "beck2"
            };
            let k = k.ok_or_else(|| CliError::Usage(format!("theorem {name} requires --k")))?;
            let d = match theorem {
                Theorem::Beck1 => beck_one::decompose(n, k),
                _ => beck_two::decompose(n, k),
            }
            .map_err(usage)?;
            (d, false)
        }
        Theorem::Beck3 => {
            if k.is_some() {
                return Err(CliError::Usage("theorem beck3 does not take --k".into()));
            }
            let parity =
                parity.ok_or_else(|| CliError::Usage("theorem beck3 requires --parity".into()))?;
            let d = gapfree::cover(n, parity.into()).map_err(usage)?;
            (d, true)
        }
    };
    let rows = render::table_rows(&decomposition, image_first, paper_table);
    let stdout = io::stdout();
    render::write_table(&mut stdout.lock(), &rows, image_first, format).map_err(io_error)?;
    Ok(0)
}

fn cmd_verify(
    identities: &[String],
    n_max: Option<u64>,
    k: Option<&str>,
    m: Option<&str>,
    out: Option<PathBuf>,
    format: ReportFormat,
) -> Result<i32, CliError> {
    if n_max == Some(0) {
        return Err(CliError::Usage("--n-max must be at least 1".into()));
    }
    let k_range = k
        .map(vocab::parse_range)
        .transpose()
        .map_err(CliError::Usage)?;
    let m_range = m
        .map(vocab::parse_range)
        .transpose()
        .map_err(CliError::Usage)?;
    let ids = vocab::resolve_identities(identities, k_range, m_range).map_err(CliError::Usage)?;
    let cap = vocab::thread_cap_from_env().map_err(CliError::Usage)?;

    let reports = exec::with_thread_cap(cap, || -> beckworks::Result<Vec<IdentityReport>> {
        let mut all = Vec::new();
        for &id in &ids {
            let depth = n_max.unwrap_or_else(|| verify::default_n_max(id));
            all.extend(verify::run_suite(&[id], depth)?);
        }
        Ok(all)
    })
    .map_err(usage)?;

    match out {
        Some(path) => {
            let file = std::fs::File::create(&path)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            render::write_reports(&mut w, &reports, format).map_err(io_error)?;
            w.flush().map_err(io_error)?;
        }
        None => {
            let stdout = io::stdout();
            render::write_reports(&mut stdout.lock(), &reports, format).map_err(io_error)?;
        }
    }

    match verify::first_failure(&reports) {
        None => {
            eprintln!("{} reports: all pass", reports.len());
            Ok(0)
        }
        Some(failure) => {
            let mut detail = format!(
                "{} n={} lhs={} rhs={}",
                failure.id.name(),
                failure.n,
                failure.lhs,
                failure.rhs
            );
            if let Some(rhs2) = failure.rhs2 {
                detail.push_str(&format!(" rhs2={rhs2}"));
            }
            if let Some(cx) = &failure.counterexample {
                detail.push_str(&format!(" counterexample={cx}"));
            }
            eprintln!("{} reports: first failure {detail}", reports.len());
            Ok(1)
        }
    }
}
