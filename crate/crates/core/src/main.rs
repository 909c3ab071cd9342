use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use quandlekit::agreement::{sample_agreement, DEFAULT_SEED};
use quandlekit::axioms::{
    self, check_bondle, check_eq_bondles, check_osq, check_osq_rmaps, check_stuquandle,
    convert_binop_to_rmaps, convert_rmaps_to_binop, BondleMode, OsqMode, StuquandleMode,
};
use quandlekit::constructions::{
    affine_mesh, dihedral_quandle, power_bondle, power_osq, projection_quandle, trivial_stuquandle,
};
use quandlekit::enumerate::{
    enumerate_osq_extensions, enumerate_quandles, search_eq_bondles_counterexample,
};
use quandlekit::format::{self, Meta};
use quandlekit::{CheckReport, Role, StructureBundle};

const OK: u8 = 0;
const FAILS: u8 = 1;
const INPUT_ERROR: u8 = 2;
const NOT_FOUND: u8 = 3;

const INDEXING: &str = "0-based: element k of a 1-based table is written k-1";

const AFTER_HELP: &str = "\
Tables are JSON arrays of rows over the carrier {0, .., n-1}; row x, column y
holds x op y. Tables printed 1-based elsewhere must be shifted: element k is
written k-1.

Exit codes: 0 ok or found, 1 property fails, 2 input error, 3 not found.";

#[derive(Parser)]
#[command(
    name = "quandlekit",
    version,
    about = "Check, build and enumerate finite quandle structures"
)]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a bundle file is a structure of the given kind.
    Check(CheckArgs),
    /// Switch an oriented singquandle between its binary and R-map forms.
    Convert(ConvertArgs),
    /// Build a member of a standard family.
    Construct(ConstructArgs),
    /// Write a catalog of small structures as JSON Lines.
    Enumerate(EnumerateArgs),
    /// Look for the smallest structure with a property.
    Search(SearchArgs),
    /// Compare the equivalent axiom systems on seeded random bundles.
    Agree(AgreeArgs),
}

#[derive(Args)]
struct Source {
    /// Input file; standard input when absent or `-`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Print the Cayley tables to standard error.
    #[arg(long)]
    pretty: bool,
}

impl Source {
    fn read(&self) -> Result<String> {
        match self.input.as_deref() {
            None => read_stdin(),
            Some(p) if p == Path::new("-") => read_stdin(),
            Some(p) => {
                fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))
            }
        }
    }

    fn bundle(&self) -> Result<StructureBundle> {
        let (b, _) = format::parse_bundle(&self.read()?)?;
        if self.pretty {
            pretty(&b);
        }
        Ok(b)
    }
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .context("cannot read standard input")?;
    Ok(s)
}

fn pretty(b: &StructureBundle) {
    for (role, table) in b.roles() {
        eprintln!("{role}:\n{table}");
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Quandle,
    Osq,
    Stuquandle,
    Bondle,
    EqBondles,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, value_enum)]
    kind: CheckKind,
    /// osq: full|reduced|rmaps; stuquandle: binops|rmaps|corollary; bondle: binops|rmaps|theorem.
    #[arg(long)]
    mode: Option<String>,
    #[command(flatten)]
    source: Source,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToRmaps,
    ToBinop,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(value_enum)]
    direction: Direction,
    #[command(flatten)]
    source: Source,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Projection,
    Dihedral,
    Mesh,
    PowerOsq,
    PowerBondle,
    TrivialStuquandle,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    family: Family,
    /// Carrier size for projection and dihedral.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    n: Option<i64>,
    #[arg(long, allow_negative_numbers = true)]
    m: Option<i64>,
    /// Skip the generation condition on mesh constants.
    #[arg(long)]
    relaxed: bool,
    #[command(flatten)]
    source: Source,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Quandle,
    OsqExtensions,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    kind: EnumerateKind,
    /// Carrier size for quandle catalogs.
    #[arg(long)]
    order: Option<usize>,
    /// Quandle bundle to extend, for osq-extensions.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    output: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    EqBondlesFails,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(value_enum)]
    property: Property,
    #[arg(long)]
    max_order: usize,
    #[arg(long)]
    pretty: bool,
}

#[derive(Args)]
struct AgreeArgs {
    #[arg(long)]
    order: usize,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli.command, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<u8> {
    match command {
        Command::Check(a) => check(a, out),
        Command::Convert(a) => convert(a, out),
        Command::Construct(a) => construct(a, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Search(a) => search(a, out),
        Command::Agree(a) => agree(a, out),
    }
}

fn meta(entries: impl IntoIterator<Item = (&'static str, Value)>) -> Meta {
    let mut m = Meta::new();
    m.insert("indexing".into(), Value::from(INDEXING));
    for (k, v) in entries {
        m.insert(k.into(), v);
    }
    m
}

fn mode<T: Copy>(given: Option<&str>, kind: &str, choices: &[(&str, T)]) -> Result<T> {
    let Some(given) = given else {
        return Ok(choices[0].1);
    };
    match choices.iter().find(|(name, _)| *name == given) {
        Some(&(_, m)) => Ok(m),
        None => {
            let names: Vec<_> = choices.iter().map(|(n, _)| *n).collect();
            bail!(
                "mode `{given}` is not valid for {kind}; expected one of {}",
                names.join(", ")
            )
        }
    }
}

fn check(a: CheckArgs, out: &mut impl Write) -> Result<u8> {
    let given = a.mode.as_deref();
    let no_mode = |kind| match given {
        Some(m) => bail!("{kind} takes no mode, got `{m}`"),
        None => Ok(()),
    };
    let report: CheckReport = match a.kind {
        CheckKind::Quandle => {
            no_mode("quandle")?;
            axioms::check_quandle(&a.source.bundle()?)
        }
        CheckKind::Osq => {
            let m = mode(
                given,
                "osq",
                &[
                    ("full", Some(OsqMode::Full)),
                    ("reduced", Some(OsqMode::Reduced)),
                    ("rmaps", None),
                ],
            )?;
            let b = a.source.bundle()?;
            match m {
                Some(m) => check_osq(&b, m)?,
                None => {
                    check_osq_rmaps(&b, &convert_binop_to_rmaps(b.require(Role::Dot)?, b.star()))?
                }
            }
        }
        CheckKind::Stuquandle => {
            let m = mode(
                given,
                "stuquandle",
                &[
                    ("binops", StuquandleMode::Binops),
                    ("rmaps", StuquandleMode::Rmaps),
                    ("corollary", StuquandleMode::Corollary),
                ],
            )?;
            check_stuquandle(&a.source.bundle()?, m)?
        }
        CheckKind::Bondle => {
            let m = mode(
                given,
                "bondle",
                &[
                    ("binops", BondleMode::Binops),
                    ("rmaps", BondleMode::Rmaps),
                    ("theorem", BondleMode::Theorem),
                ],
            )?;
            check_bondle(&a.source.bundle()?, m)?
        }
        CheckKind::EqBondles => {
            no_mode("eq-bondles")?;
            let b = a.source.bundle()?;
            check_eq_bondles(b.require(Role::Bullet)?, b.star())?
        }
    };
    out.write_all(format::report_to_json(&report).as_bytes())?;
    Ok(if report.is_ok() { OK } else { FAILS })
}

fn convert(a: ConvertArgs, out: &mut impl Write) -> Result<u8> {
    let text = a.source.read()?;
    match a.direction {
        Direction::ToRmaps => {
            let (b, _) = format::parse_bundle(&text)?;
            let maps = convert_binop_to_rmaps(b.require(Role::Dot)?, b.star());
            let quandle = b
                .clone()
                .without(Role::Dot)
                .without(Role::Circ)
                .without(Role::Bullet);
            if a.source.pretty {
                pretty(&b);
                eprintln!("r1:\n{}\nr2:\n{}", maps.first, maps.second);
            }
            let m = meta([("direction", json!("to-rmaps"))]);
            out.write_all(format::rmaps_to_json(&quandle, &maps, Some(m)).as_bytes())?;
        }
        Direction::ToBinop => {
            let input = format::parse_rmaps(&text)?;
            let dot = convert_rmaps_to_binop(&input.r1);
            let b = input.quandle.with(Role::Dot, dot)?;
            if a.source.pretty {
                pretty(&b);
            }
            let m = meta([("direction", json!("to-binop"))]);
            out.write_all(format::bundle_to_json(&b, Some(m)).as_bytes())?;
        }
    }
    Ok(OK)
}

fn construct(a: ConstructArgs, out: &mut impl Write) -> Result<u8> {
    let need_order = || a.order.context("this family needs --order");
    let powers = || -> Result<(i64, i64)> {
        Ok((
            a.n.context("this family needs --n")?,
            a.m.context("this family needs --m")?,
        ))
    };
    let (bundle, m) = match a.family {
        Family::Projection => {
            let n = need_order()?;
            (
                projection_quandle(n)?,
                meta([("family", json!("projection")), ("order", json!(n))]),
            )
        }
        Family::Dihedral => {
            let n = need_order()?;
            (
                dihedral_quandle(n)?,
                meta([("family", json!("dihedral")), ("order", json!(n))]),
            )
        }
        Family::Mesh => {
            let (spec, file_relaxed) = format::parse_mesh(&a.source.read()?)?;
            let relaxed = a.relaxed || file_relaxed;
            let b = affine_mesh(&spec, relaxed)?;
            let components: Vec<_> = spec
                .components
                .iter()
                .map(|c| c.moduli().to_vec())
                .collect();
            let m = meta([
                ("family", json!("mesh")),
                ("components", json!(components)),
                ("constants", json!(spec.constants)),
                ("relaxed", json!(relaxed)),
            ]);
            (b, m)
        }
        Family::PowerOsq | Family::PowerBondle => {
            let (n, m) = powers()?;
            let input = a.source.bundle()?;
            let (b, name) = match a.family {
                Family::PowerOsq => (power_osq(&input, n, m)?, "power-osq"),
                _ => (power_bondle(&input, n, m)?, "power-bondle"),
            };
            (
                b,
                meta([("family", json!(name)), ("n", json!(n)), ("m", json!(m))]),
            )
        }
        Family::TrivialStuquandle => (
            trivial_stuquandle(&a.source.bundle()?)?,
            meta([("family", json!("trivial-stuquandle"))]),
        ),
    };
    if a.source.pretty {
        pretty(&bundle);
    }
    out.write_all(format::bundle_to_json(&bundle, Some(m)).as_bytes())?;
    Ok(OK)
}

fn enumerate(a: EnumerateArgs, out: &mut impl Write) -> Result<u8> {
    let (lines, summary) = match a.kind {
        EnumerateKind::Quandle => {
            if a.input.is_some() {
                bail!("quandle catalogs take --order, not --input");
            }
            let catalog = enumerate_quandles(a.order.context("quandle catalogs need --order")?)?;
            let lines: Vec<_> = catalog
                .entries
                .iter()
                .map(|b| format::bundle_to_json(b, None))
                .collect();
            let summary = json!({ "count": catalog.len() });
            (lines, summary)
        }
        EnumerateKind::OsqExtensions => {
            if a.order.is_some() {
                bail!("osq-extensions takes --input, not --order");
            }
            let source = Source {
                input: a.input.clone(),
                pretty: false,
            };
            let base = source.bundle()?;
            let ext = enumerate_osq_extensions(&base)?;
            let lines = ext
                .raw
                .iter()
                .map(|t| {
                    Ok(format::bundle_to_json(
                        &base.clone().with(Role::Dot, t.clone())?,
                        None,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let summary =
                json!({ "count": ext.raw_count(), "isomorphism_classes": ext.catalog.len() });
            (lines, summary)
        }
    };
    fs::write(&a.output, lines.concat())
        .with_context(|| format!("cannot write {}", a.output.display()))?;
    writeln!(out, "{summary}")?;
    Ok(OK)
}

fn search(a: SearchArgs, out: &mut impl Write) -> Result<u8> {
    let Property::EqBondlesFails = a.property;
    match search_eq_bondles_counterexample(a.max_order)? {
        Some(b) => {
            if a.pretty {
                pretty(&b);
            }
            let m = meta([
                ("property", json!("eq-bondles-fails")),
                ("max_order", json!(a.max_order)),
            ]);
            out.write_all(format::bundle_to_json(&b, Some(m)).as_bytes())?;
            Ok(OK)
        }
        None => {
            eprintln!("no witness up to order {}", a.max_order);
            Ok(NOT_FOUND)
        }
    }
}

fn agree(a: AgreeArgs, out: &mut impl Write) -> Result<u8> {
    let summary = sample_agreement(a.order, a.samples, a.seed)?;
    writeln!(out, "{}", serde_json::to_string(&summary)?)?;
    if let Some(b) = &summary.first_disagreement {
        eprint!("first disagreement: {}", format::bundle_to_json(b, None));
    }
    Ok(if summary.disagreements == 0 {
        OK
    } else {
        FAILS
    })
}
