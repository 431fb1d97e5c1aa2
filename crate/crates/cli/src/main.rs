//! Command-line front end: enumeration dumps, classification listings, count
//! tables, verification runs, and figure export.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 verification failure,
//! 3 resource guard tripped.

use clap::{Args, Parser, Subcommand, ValueEnum};
use silted::classify::{count_report, count_report_csv, full_verify};
use silted::derived::{enumerate_two_term_silting, h0};
use silted::modules::enumerate_stt_with;
use silted::quiver::BoundQuiverAlgebra;
use silted::surface::{enumerate_triangulations, enumerate_triangulations_with};
use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "silted",
    about = "Enumerate and classify tilted and silted algebras of linearly oriented type A",
    version
)]
struct Cli {
    /// Rank guard: requests above this value are refused (hard ceiling 14)
    #[arg(long, global = true, default_value_t = 10)]
    limit: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream geometric objects as JSON lines in a fixed deterministic order
    Enumerate(EnumerateArgs),
    /// Stream bound quiver algebras, optionally one representative per class
    Classify(ClassifyArgs),
    /// Print the count table with closed-form and enumerated values
    Count(CountArgs),
    /// Run every cross-model invariant and report pass/fail per row
    Verify(VerifyArgs),
    /// Write a figure or data file for one enumerated object
    Export(ExportArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    what: EnumerateWhat,
    /// Print only the number of objects
    #[arg(long)]
    count_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    Triangulations,
    TiltingTriangulations,
    Stt,
    TwoTermSilting,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    what: ClassifyWhat,
    /// Deduplicate by isomorphism and report multiplicities
    #[arg(long)]
    dedup: bool,
    /// Restrict to non-connected silted algebras
    #[arg(long)]
    non_connected_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyWhat {
    Tilted,
    Silted,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n_max: usize,
    /// Emit the machine-readable report instead of one line per check
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ExportArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    what: ExportWhat,
    /// Index into the deterministic enumeration order
    #[arg(long)]
    id: usize,
    #[arg(long, value_enum)]
    format: ExportFormat,
    /// Output directory; the SILTED_OUT_DIR environment variable overrides
    /// the default of the current directory
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportWhat {
    Triangulation,
    ArcSystem,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
    Tikz,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn guard(n: usize, limit: usize) -> Result<(), ExitCode> {
    if limit > silted::MAX_RANK {
        eprintln!(
            "error: limit {limit} exceeds the hard ceiling {}",
            silted::MAX_RANK
        );
        return Err(ExitCode::from(EXIT_GUARD));
    }
    if n == 0 || n > limit {
        eprintln!("error: rank {n} outside the guarded range 1..={limit} (raise --limit, ceiling {})", silted::MAX_RANK);
        return Err(ExitCode::from(EXIT_GUARD));
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let limit = cli.limit;
    match cli.command {
        Command::Enumerate(args) => {
            if let Err(code) = guard(args.n, limit) {
                return Ok(code);
            }
            enumerate(args).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify(args) => {
            if let Err(code) = guard(args.n, limit) {
                return Ok(code);
            }
            classify(args).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Count(args) => {
            if let Err(code) = guard(args.n_max, limit) {
                return Ok(code);
            }
            let rows = count_report(args.n_max).map_err(|e| e.to_string())?;
            match args.format {
                TableFormat::Csv => print!("{}", count_report_csv(&rows)),
                TableFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&rows).map_err(|e| e.to_string())?)
                }
            }
            if rows.iter().all(silted::classify::CountRow::all_match) {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("count verification failed: some rows do not match");
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Verify(args) => {
            if let Err(code) = guard(args.n_max, limit) {
                return Ok(code);
            }
            let report = full_verify(args.n_max).map_err(|e| e.to_string())?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?);
            } else {
                for row in &report.rows {
                    println!(
                        "{} n={} {}: {}",
                        if row.pass { "PASS" } else { "FAIL" },
                        row.n,
                        row.name,
                        row.detail
                    );
                }
            }
            if report.all_pass() {
                println!("verify: all {} checks passed", report.rows.len());
                Ok(ExitCode::SUCCESS)
            } else {
                let failed = report.rows.iter().filter(|r| !r.pass).count();
                eprintln!("verify: {failed} checks FAILED");
                Ok(ExitCode::from(EXIT_VERIFY))
            }
        }
        Command::Export(args) => {
            if let Err(code) = guard(args.n, limit) {
                return Ok(code);
            }
            export(args)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn enumerate(args: EnumerateArgs) -> silted::Result<()> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut count = 0u128;
    let mut emit = |line: String| {
        count += 1;
        if !args.count_only {
            writeln!(out, "{line}").expect("stdout");
        }
    };
    match args.what {
        EnumerateWhat::Triangulations => enumerate_triangulations_with(args.n, |t| {
            emit(serde_json::to_string(t).expect("serialize"))
        })?,
        EnumerateWhat::TiltingTriangulations => enumerate_triangulations_with(args.n, |t| {
            if t.contains_extras_chord() {
                emit(serde_json::to_string(t).expect("serialize"))
            }
        })?,
        EnumerateWhat::Stt => {
            enumerate_stt_with(args.n, |p| emit(serde_json::to_string(p).expect("serialize")))?
        }
        EnumerateWhat::TwoTermSilting => silted::derived::enumerate_two_term_silting_with(
            args.n,
            |s| emit(serde_json::to_string(s).expect("serialize")),
        )?,
    }
    if args.count_only {
        writeln!(out, "{count}").expect("stdout");
    }
    Ok(())
}

fn classify(args: ClassifyArgs) -> silted::Result<()> {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    // gather one algebra per geometric object, in enumeration order
    let mut algebras: Vec<BoundQuiverAlgebra> = Vec::new();
    match args.what {
        ClassifyWhat::Tilted => {
            for t in enumerate_triangulations(args.n)? {
                if t.contains_extras_chord() {
                    algebras.push(t.induced_algebra()?);
                }
            }
        }
        ClassifyWhat::Silted => {
            for sys in enumerate_two_term_silting(args.n)? {
                algebras.push(h0(&sys.induced_graded_algebra()?)?);
            }
        }
    }
    if args.non_connected_only {
        algebras.retain(|a| !a.is_connected());
    }
    if args.dedup {
        let mut classes: BTreeMap<Vec<u8>, (BoundQuiverAlgebra, usize)> = BTreeMap::new();
        for a in algebras {
            let form = a.canonical_form();
            classes.entry(form).or_insert((a, 0)).1 += 1;
        }
        for (_, (algebra, multiplicity)) in classes {
            let line = serde_json::json!({
                "algebra": algebra,
                "multiplicity": multiplicity,
            });
            writeln!(out, "{line}").expect("stdout");
        }
    } else {
        for a in algebras {
            writeln!(out, "{}", serde_json::to_string(&a).expect("serialize")).expect("stdout");
        }
    }
    Ok(())
}

fn export(args: ExportArgs) -> Result<(), String> {
    let dir = args
        .out_dir
        .or_else(|| std::env::var_os("SILTED_OUT_DIR").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let (stem, content) = match args.what {
        ExportWhat::Triangulation => {
            let all = enumerate_triangulations(args.n).map_err(|e| e.to_string())?;
            let t = all
                .get(args.id)
                .ok_or_else(|| format!("id {} out of range (0..{})", args.id, all.len()))?;
            let content = match args.format {
                ExportFormat::Json => serde_json::to_string_pretty(t).map_err(|e| e.to_string())?,
                ExportFormat::Tikz => t.to_tikz(),
                ExportFormat::Dot => {
                    // the induced algebra when defined, otherwise the
                    // endomorphism algebra of the attached module
                    let algebra = t
                        .induced_algebra()
                        .unwrap_or_else(|_| t.module_pair().modules.endomorphism_algebra());
                    algebra.to_dot()
                }
            };
            (format!("triangulation_n{}_id{}", args.n, args.id), content)
        }
        ExportWhat::ArcSystem => {
            let all = enumerate_two_term_silting(args.n).map_err(|e| e.to_string())?;
            let sys = all
                .get(args.id)
                .ok_or_else(|| format!("id {} out of range (0..{})", args.id, all.len()))?;
            let content = match args.format {
                ExportFormat::Json => {
                    serde_json::to_string_pretty(sys).map_err(|e| e.to_string())?
                }
                ExportFormat::Tikz => sys.to_tikz(),
                ExportFormat::Dot => sys
                    .induced_graded_algebra()
                    .map_err(|e| e.to_string())?
                    .to_dot(),
            };
            (format!("arc_system_n{}_id{}", args.n, args.id), content)
        }
    };
    let extension = match args.format {
        ExportFormat::Json => "json",
        ExportFormat::Dot => "dot",
        ExportFormat::Tikz => "tex",
    };
    let path = dir.join(format!("{stem}.{extension}"));
    std::fs::write(&path, content).map_err(|e| format!("writing {}: {e}", path.display()))?;
    println!("{}", path.display());
    Ok(())
}
