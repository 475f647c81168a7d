//! `oopsie`: check JDBC getter and setter calls against a database schema.

use std::io::{IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use oopsie_core::checker::render::{render_json, render_text};
use oopsie_core::{check_program, load_conversion_table, load_schema, CheckOptions, Mode, Severity, SourceFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Sound,
    Degraded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FailOn {
    Error,
    Warning,
}

#[derive(Debug, Parser)]
#[command(name = "oopsie", version, about = "Schema-aware static checker for JDBC getter and setter calls")]
struct Args {
    /// SQL DDL file with the CREATE TABLE statements of the database.
    #[arg(long, value_name = "FILE")]
    schema: PathBuf,

    #[arg(long, value_enum, default_value_t = ModeArg::Sound)]
    mode: ModeArg,

    /// Overrides for the built-in JDBC conversion table.
    #[arg(long, value_name = "FILE")]
    mapping: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Report supported but not recommended conversions as warnings.
    #[arg(long)]
    supported_as_warning: bool,

    /// Lowest severity that makes the run fail.
    #[arg(long, value_enum, default_value_t = FailOn::Error)]
    fail_on: FailOn,

    /// Print access tallies to standard error.
    #[arg(long)]
    stats: bool,

    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,

    /// Java files or directories searched recursively for `.java` files.
    #[arg(required = true, value_name = "PATH")]
    sources: Vec<PathBuf>,
}

fn collect_sources(paths: &[PathBuf]) -> Result<Vec<SourceFile>> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            for entry in walkdir::WalkDir::new(p).sort_by_file_name() {
                let entry = entry.with_context(|| format!("cannot walk {}", p.display()))?;
                if entry.file_type().is_file() && entry.path().extension().is_some_and(|e| e == "java") {
                    files.push(entry.into_path());
                }
            }
        } else if p.is_file() {
            files.push(p.clone());
        } else {
            bail!("no such file or directory: {}", p.display());
        }
    }
    files
        .into_iter()
        .map(|f| {
            let text = std::fs::read_to_string(&f).with_context(|| format!("cannot read {}", f.display()))?;
            Ok(SourceFile::new(f, text))
        })
        .collect()
}

fn read(path: &Path, what: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {what} {}", path.display()))
}

fn run(args: Args) -> Result<bool> {
    let catalog = load_schema(&read(&args.schema, "schema")?)
        .with_context(|| format!("invalid schema {}", args.schema.display()))?;
    let mapping = args.mapping.as_deref().map(|p| read(p, "mapping")).transpose()?;
    let table = load_conversion_table(mapping.as_deref()).context("invalid mapping")?;
    let sources = collect_sources(&args.sources)?;
    let options = CheckOptions {
        mode: match args.mode {
            ModeArg::Sound => Mode::Sound,
            ModeArg::Degraded => Mode::Degraded,
        },
        supported_as_warning: args.supported_as_warning,
        jobs: args.jobs,
    };
    let report = check_program(&sources, &catalog, &table, &options)?;

    let out = match args.format {
        Format::Json => render_json(&report.diagnostics),
        Format::Text => {
            let color = std::env::var("OOPSIE_COLOR").map_or(true, |v| v != "0") && std::io::stdout().is_terminal();
            render_text(&report.diagnostics, color)
        }
    };
    std::io::stdout().write_all(out.as_bytes())?;

    if args.stats {
        let s = report.stats;
        eprintln!("checked getters: {}", s.getters_checked);
        eprintln!("checked setters: {}", s.setters_checked);
        eprintln!("out of scope: {}", s.out_of_scope);
        eprintln!("unchecked: {}", s.unchecked);
        eprintln!("methods analyzed: {}", s.methods_analyzed);
        eprintln!("methods skipped: {}", s.methods_skipped);
    }

    let threshold = match args.fail_on {
        FailOn::Error => Severity::Error,
        FailOn::Warning => Severity::Warning,
    };
    Ok(report.diagnostics.iter().any(|d| d.severity >= threshold))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(e) => {
            eprintln!("oopsie: {e:#}");
            ExitCode::from(2)
        }
    }
}
