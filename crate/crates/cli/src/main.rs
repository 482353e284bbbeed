use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use chaos_core::families::{Arrangement, BasicEntrySequence, FatPointSpec};
use chaos_core::parse::parse_poly;
use chaos_core::pipeline::{
    analyze, verify_suite, AnalyzeOptions, FatPointEntry, InputSpec, InstanceSpec, SuiteLevel, Task,
};
use chaos_core::{ErrorClass, FieldSpec, PolyRing};
use clap::{Parser, Subcommand, ValueEnum};

/// Exit code when an analysis ran but some check failed.
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "chaos", version, about = "Invariants of linearly presented height-2 ideals in k[x, y, z]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one instance file.
    Analyze {
        file: PathBuf,
        /// Where to write the JSON report; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated task list, overriding the file.
        #[arg(long, value_delimiter = ',')]
        tasks: Option<Vec<String>>,
        #[arg(long)]
        seed: Option<u64>,
        /// Record per-stage wall-clock timings in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Run the built-in fixture corpus.
    VerifySuite {
        #[arg(long, value_enum, default_value = "fast")]
        level: Level,
        /// Also write the full summary as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write an instance file for one of the model families.
    Family {
        #[command(subcommand)]
        kind: FamilyKind,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Fast,
    Full,
}

#[derive(Subcommand)]
enum FamilyKind {
    /// Monomial ideal from a basic entry sequence such as `xyy`.
    Sequence { letters: String },
    /// Reciprocal ideal of a line arrangement, one linear form per argument.
    Arrangement {
        #[arg(required = true)]
        forms: Vec<String>,
    },
    /// Fat points written `form,form:mult`, e.g. `x,y:2`.
    Fatpoints {
        #[arg(required = true)]
        points: Vec<String>,
    },
}

/// Failure carrying the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn classify(error: anyhow::Error) -> Failure {
    let code = match error.downcast_ref::<chaos_core::Error>().map(|e| e.class()) {
        Some(ErrorClass::Input) => EXIT_INPUT,
        Some(ErrorClass::Hypothesis) => EXIT_HYPOTHESIS,
        Some(ErrorClass::Internal) => EXIT_INTERNAL,
        None if error.downcast_ref::<std::io::Error>().is_some() => EXIT_INPUT,
        None => EXIT_INTERNAL,
    };
    Failure { code, error }
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run_analyze(
    file: &Path,
    out: Option<&Path>,
    tasks: Option<Vec<String>>,
    seed: Option<u64>,
    timing: bool,
) -> Result<u8> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let mut inst = InstanceSpec::from_json(&text)?;
    if let Some(tasks) = tasks {
        inst.tasks = tasks.iter().map(|t| Task::parse(t)).collect::<chaos_core::Result<_>>()?;
    }
    if let Some(seed) = seed {
        inst.seed = seed;
    }
    let report = analyze(&inst, &AnalyzeOptions { timing })?;
    match out {
        Some(path) => {
            write_or_print(Some(path), &report.to_json())?;
            print!("{}", report.summary());
        }
        None => {
            println!("{}", report.to_json());
            eprint!("{}", report.summary());
        }
    }
    Ok(if report.all_passed() { 0 } else { EXIT_CHECK_FAILED })
}

fn run_suite(level: Level, json: Option<&Path>) -> Result<u8> {
    let level = match level {
        Level::Fast => SuiteLevel::Fast,
        Level::Full => SuiteLevel::Full,
    };
    let summary = verify_suite(level)?;
    print!("{}", summary.render());
    if let Some(path) = json {
        write_or_print(Some(path), &summary.to_json())?;
    }
    Ok(if summary.all_passed() { 0 } else { EXIT_CHECK_FAILED })
}

fn parse_fat_point(text: &str) -> Result<FatPointEntry> {
    let (forms, mult) = match text.rsplit_once(':') {
        Some((f, m)) => (f, m.trim().parse::<u32>().with_context(|| format!("multiplicity in `{text}`"))?),
        None => (text, 1),
    };
    let prime: Vec<String> = forms.split(',').map(|s| s.trim().to_string()).collect();
    if prime.len() != 2 {
        bail!(chaos_core::Error::Schema(format!("`{text}` must list two linear forms")));
    }
    Ok(FatPointEntry { prime, mult })
}

fn run_family(kind: FamilyKind, out: Option<&Path>) -> Result<u8> {
    let ring = PolyRing::xyz(FieldSpec::Rational);
    // validate before writing so that bad input never reaches a file
    let input = match kind {
        FamilyKind::Sequence { letters } => {
            BasicEntrySequence::new(&letters)?;
            InputSpec::Sequence { letters }
        }
        FamilyKind::Arrangement { forms } => {
            Arrangement::parse(&ring, &forms)?;
            InputSpec::Arrangement { forms }
        }
        FamilyKind::Fatpoints { points } => {
            let points = points.iter().map(|p| parse_fat_point(p)).collect::<Result<Vec<_>>>()?;
            let parsed = points
                .iter()
                .map(|p| {
                    let prime = p.prime.iter().map(|f| parse_poly(&ring, f)).collect::<chaos_core::Result<_>>()?;
                    Ok((prime, p.mult))
                })
                .collect::<chaos_core::Result<Vec<_>>>()?;
            FatPointSpec::new(&ring, parsed)?;
            InputSpec::FatPoints { points }
        }
    };
    write_or_print(out, &InstanceSpec::new(input).to_json())?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            file,
            out,
            tasks,
            seed,
            timing,
        } => run_analyze(&file, out.as_deref(), tasks, seed, timing),
        Command::VerifySuite { level, json } => run_suite(level, json.as_deref()),
        Command::Family { kind, out } => run_family(kind, out.as_deref()),
    };
    match result.map_err(classify) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
