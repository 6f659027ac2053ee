//! rimcalc — Alexander polynomials and the rim-surgery calculus from the
//! command line.
//!
//! All output is canonical JSON (compact, lexicographically sorted keys) on
//! stdout; errors go to stderr. Exit codes:
//!
//! * 0 — success;
//! * 2 — input could not be parsed (bad knot spec, bad file, unknown preset);
//! * 3 — the independent Alexander engines disagreed, or the exact algebra
//!   failed internally (these are bugs or corrupted inputs, never warnings);
//! * 4 — a theorem hypothesis failed (not an SW-pair, bad characteristic
//!   numbers, unnormalized polynomial, inconsistent invariants).
//!
//! Knots are written in a small grammar: a format word followed by the code,
//! e.g. `"braid 2: 1 1 1"`, `"pd X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"`,
//! `"dt 4 6 2"`, or `"torus 2,3"`. The `alex` subcommand instead takes one
//! format per flag. Pair presets resolve against the `RIMCALC_DATA`
//! directory when that variable is set, otherwise against the built-in
//! presets (k3, e3, rank2_demo); a value containing a path separator or a
//! `.json` suffix is read as a file path directly.

use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use rimcalc::alexander::{alexander, alexander_torus, AlexanderReport};
use rimcalc::canonical_json;
use rimcalc::knot::{parse_presentation, torus_knot, KnotPresentation};
use rimcalc::swtheory::{
    basic_class_collections, obstruction_by_delta, rim_surgery_sw, PairDescriptor,
};
use rimcalc::table::{bundled_table, read_table};
use rimcalc::{Error, Result};

#[derive(Parser)]
#[command(
    name = "rimcalc",
    version,
    about = "Alexander polynomials and the rim-surgery Seiberg-Witten calculus"
)]
struct Cli {
    /// Output is always canonical JSON; accepted for compatibility.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Alexander polynomial of one knot via all applicable engines
    Alex(AlexArgs),
    /// Compare two rim-surgered surface pairs through their Alexander polynomials
    Compare(CompareArgs),
    /// Apply rim surgery to a preset pair and report the surgered invariant
    Surger(SurgerArgs),
    /// Decide the symplectic-isotopy obstruction for a rim-surgered surface
    Obstruct(ObstructArgs),
    /// Batch-process a knot table, one JSON line per row
    Table(TableArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("input").required(true).args(["braid", "pd", "dt", "torus", "file"])))]
struct AlexArgs {
    /// Braid word, e.g. "2: 1 1 1"
    #[arg(long)]
    braid: Option<String>,
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"
    #[arg(long)]
    pd: Option<String>,
    /// DT code, e.g. "4 6 2"
    #[arg(long)]
    dt: Option<String>,
    /// Torus knot parameters "p,q" (adds the closed-form engine)
    #[arg(long)]
    torus: Option<String>,
    /// Read a "<format> <code>" spec from a file
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Args)]
struct CompareArgs {
    /// First knot as "<format> <code>"
    knot1: String,
    /// Second knot as "<format> <code>"
    knot2: String,
    /// Pair preset name or descriptor file
    #[arg(long)]
    pair: String,
}

#[derive(Args)]
struct SurgerArgs {
    /// Knot as "<format> <code>"
    knot: String,
    /// Pair preset name or descriptor file
    #[arg(long)]
    pair: String,
}

#[derive(Args)]
struct ObstructArgs {
    /// Knot as "<format> <code>"
    knot: String,
    /// Pair preset name or descriptor file
    #[arg(long)]
    pair: String,
}

#[derive(Args)]
struct TableArgs {
    /// CSV file with name,format,code rows; the bundled table when omitted
    path: Option<PathBuf>,
    /// Pair preset for the per-row obstruction verdict
    #[arg(long, default_value = "k3")]
    pair: String,
}

fn main() {
    let cli = Cli::parse();
    let _ = cli.json;
    std::process::exit(match run(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    });
}

/// Exit-code buckets; nothing else is ever returned.
fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SyntaxError(_)
        | Error::NotAKnot(_)
        | Error::InvalidLabels(_)
        | Error::NotCoprime(_)
        | Error::Io(_) => 2,
        Error::EngineDisagreement(_)
        | Error::DivisionNotExact(_)
        | Error::RankMismatch(_)
        | Error::NotUnitNormalizable(_)
        | Error::NonSymmetrizable(_) => 3,
        Error::NotAnSWPair(_)
        | Error::BadCharacteristics(_)
        | Error::SignatureUnknown(_)
        | Error::NotNormalized(_)
        | Error::InconsistentInputs(_) => 4,
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Alex(args) => cmd_alex(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Surger(args) => cmd_surger(args),
        Command::Obstruct(args) => cmd_obstruct(args),
        Command::Table(args) => cmd_table(args),
    }
}

/// Parses the "<format> <code>" knot grammar.
fn parse_knot_spec(text: &str) -> Result<KnotPresentation> {
    let text = text.trim();
    let (format, code) = text
        .split_once(char::is_whitespace)
        .unwrap_or((text, ""));
    if format.eq_ignore_ascii_case("torus") {
        let (p, q) = parse_torus_params(code)?;
        return Ok(KnotPresentation::Braid(torus_knot(p, q)?));
    }
    parse_presentation(code, format.parse()?)
}

fn parse_torus_params(text: &str) -> Result<(i64, i64)> {
    let parts: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .collect();
    if parts.len() != 2 {
        return Err(Error::SyntaxError(format!(
            "torus parameters must be \"p,q\", got {text:?}"
        )));
    }
    let parse = |s: &str| {
        s.parse::<i64>()
            .map_err(|_| Error::SyntaxError(format!("bad torus parameter {s:?}")))
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}

#[derive(Serialize)]
struct AlexOutput {
    alexander: rimcalc::laurent::LaurentPolynomial,
    engines: Vec<&'static str>,
    engines_agree: bool,
}

fn print_alex_report(report: AlexanderReport) {
    let out = AlexOutput {
        alexander: report.alexander,
        engines: report.engines.iter().map(|e| e.engine).collect(),
        engines_agree: true,
    };
    println!("{}", canonical_json(&out));
}

fn cmd_alex(args: AlexArgs) -> Result<()> {
    let report = if let Some(text) = args.braid {
        alexander(&parse_presentation(&text, "braid".parse()?)?)?
    } else if let Some(text) = args.pd {
        alexander(&parse_presentation(&text, "pd".parse()?)?)?
    } else if let Some(text) = args.dt {
        alexander(&parse_presentation(&text, "dt".parse()?)?)?
    } else if let Some(text) = args.torus {
        let (p, q) = parse_torus_params(&text)?;
        alexander_torus(p, q)?
    } else if let Some(path) = args.file {
        alexander(&parse_knot_spec(&std::fs::read_to_string(path)?)?)?
    } else {
        unreachable!("clap enforces exactly one input");
    };
    print_alex_report(report);
    Ok(())
}

const BUILTIN_PRESETS: &[(&str, &str)] = &[
    (
        "k3",
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/presets/k3.json")),
    ),
    (
        "e3",
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/presets/e3.json")),
    ),
    (
        "rank2_demo",
        include_str!(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../data/presets/rank2_demo.json"
        )),
    ),
];

/// Resolves a `--pair` value to a descriptor: a path when it looks like one,
/// a file under `RIMCALC_DATA` when that is set, a built-in preset otherwise.
fn resolve_pair(name: &str) -> Result<PairDescriptor> {
    if name.contains(std::path::MAIN_SEPARATOR) || name.ends_with(".json") {
        return PairDescriptor::from_json(&std::fs::read_to_string(name)?);
    }
    if let Ok(dir) = std::env::var("RIMCALC_DATA") {
        let path = Path::new(&dir).join(format!("{name}.json"));
        if !path.is_file() {
            return Err(Error::Io(format!(
                "preset {name:?} not found in RIMCALC_DATA ({})",
                path.display()
            )));
        }
        return PairDescriptor::from_json(&std::fs::read_to_string(path)?);
    }
    match BUILTIN_PRESETS.iter().find(|(n, _)| *n == name) {
        Some((_, text)) => PairDescriptor::from_json(text),
        None => Err(Error::Io(format!(
            "unknown preset {name:?}; built-ins are {}",
            BUILTIN_PRESETS
                .iter()
                .map(|(n, _)| *n)
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

/// Adds the preset name to a report serialized as a JSON object.
fn with_pair_name<T: Serialize>(pair: &str, report: &T) -> serde_json::Value {
    let mut value = serde_json::to_value(report).expect("report serializes");
    value
        .as_object_mut()
        .expect("reports are objects")
        .insert("pair".into(), json!(pair));
    value
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let pair = resolve_pair(&args.pair)?;
    let k1 = parse_knot_spec(&args.knot1)?;
    let k2 = parse_knot_spec(&args.knot2)?;
    let report = rimcalc::swtheory::distinguish(&pair, &k1, &k2)?;
    println!("{}", with_pair_name(&args.pair, &report));
    Ok(())
}

#[derive(Serialize)]
struct SurgerOutput {
    delta: rimcalc::laurent::LaurentPolynomial,
    surgered: rimcalc::swtheory::SWInvariant,
    collections: rimcalc::swtheory::CollectionsReport,
}

fn cmd_surger(args: SurgerArgs) -> Result<()> {
    let pair = resolve_pair(&args.pair)?;
    pair.validate_structure()?;
    let knot = parse_knot_spec(&args.knot)?;
    let delta = alexander(&knot)?.alexander;
    let surgered = rim_surgery_sw(&pair, &delta)?;
    let collections =
        basic_class_collections(&pair.base_sw, &surgered, &pair.rim_class, Some(&delta))?;
    let out = SurgerOutput {
        delta,
        surgered,
        collections,
    };
    println!("{}", with_pair_name(&args.pair, &out));
    Ok(())
}

fn cmd_obstruct(args: ObstructArgs) -> Result<()> {
    let pair = resolve_pair(&args.pair)?;
    let knot = parse_knot_spec(&args.knot)?;
    let report = rimcalc::swtheory::symplectic_isotopy_obstruction(&pair, &knot)?;
    println!("{}", with_pair_name(&args.pair, &report));
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<()> {
    let pair = resolve_pair(&args.pair)?;
    pair.validate()?;
    let entries = match &args.path {
        Some(p) => read_table(p)?,
        None => bundled_table()?,
    };
    let mut first_error: Option<Error> = None;
    for entry in &entries {
        let row = entry
            .presentation()
            .and_then(|k| alexander(&k))
            .and_then(|report| {
                let obstruction = obstruction_by_delta(&pair, &report.alexander)?;
                Ok(json!({
                    "name": entry.name,
                    "format": entry.format.to_string(),
                    "alexander": serde_json::to_value(&report.alexander).unwrap(),
                    "verdict": serde_json::to_value(obstruction.verdict).unwrap(),
                }))
            });
        match row {
            Ok(value) => println!("{value}"),
            Err(e) => {
                println!(
                    "{}",
                    json!({
                        "name": entry.name,
                        "format": entry.format.to_string(),
                        "error": e.to_string(),
                    })
                );
                first_error.get_or_insert(e);
            }
        }
    }
    match first_error {
        None => Ok(()),
        Some(e) => Err(e),
    }
}
