//! `coverreg`: cover ideals, regularity and verification sweeps from the
//! command line.
//!
//! Exit status: 0 on success, 1 when a sweep contradicts a theorem, 2 on
//! bad input or when a computation hits a cap. Diagnostics go to stderr.

mod family;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use coverreg::verify::{sweep, write_csv, write_json, write_text, CheckKind, SweepConfig};
use coverreg::{
    betti_numbers, cover_ideal, edge_symbolic_power, parse_edge_list, Caps, FieldTag, Graph,
    MonomialIdeal,
};

use crate::family::{family_spec, FamilyArgs};

/// Environment variable holding default caps, e.g. `generators=50000,lattice=20000`.
const CAPS_ENV: &str = "COVERREG_CAPS";

#[derive(Parser)]
#[command(
    name = "coverreg",
    version,
    about = "Cover ideals, symbolic powers and their regularity"
)]
struct Cli {
    /// Computation caps as `generators=N,lattice=M`. Overrides $COVERREG_CAPS.
    #[arg(long, global = true)]
    caps: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print J(G), J(G)^(k) or J(G)^k in canonical form.
    Ideal {
        #[command(subcommand)]
        which: IdealKind,
    },
    /// Print the regularity of J(G)^(k), J(G)^k or a given ideal.
    Regularity(RegularityArgs),
    /// Run verification checks over a graph family and write a report.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum IdealKind {
    /// The cover ideal J(G).
    Cover(GraphInput),
    /// The symbolic power J(G)^(k).
    Symbolic {
        #[arg(short)]
        k: u32,
        #[command(flatten)]
        input: GraphInput,
    },
    /// The ordinary power J(G)^k.
    Power {
        #[arg(short)]
        k: u32,
        #[command(flatten)]
        input: GraphInput,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file: a line `n m`, then `m` lines `i j` (1-based).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// A named graph such as K4, K2,3, P3, C5, S3, G3,3 or cone(C5).
    #[arg(long)]
    named: Option<String>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph> {
        match (&self.graph, &self.named) {
            (Some(path), _) => read_graph(path),
            (_, Some(name)) => Ok(Graph::named(name)?),
            _ => bail!("give --graph or --named"),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PowerKind {
    Symbolic,
    Ordinary,
}

#[derive(Args)]
struct RegularityArgs {
    /// Edge-list file.
    #[arg(long, group = "source")]
    graph: Option<PathBuf>,
    /// A named graph.
    #[arg(long, group = "source")]
    named: Option<String>,
    /// An ideal in canonical form (`ring n`, then one generator per line).
    #[arg(long, group = "source")]
    ideal: Option<PathBuf>,
    /// Exponent.
    #[arg(short, default_value_t = 1)]
    k: u32,
    /// Which power of the ideal to take.
    #[arg(long, value_enum, default_value = "symbolic")]
    power: PowerKind,
    /// Coefficient field: gf2, rational, or gfP for a prime P.
    #[arg(long, default_value = "gf2")]
    field: FieldTag,
    /// Also print the nonzero multigraded Betti numbers.
    #[arg(long)]
    emit_betti: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Largest exponent k to check.
    #[arg(long, default_value_t = 2)]
    max_k: u32,
    /// Checks to run (repeatable or comma-separated); all applicable ones by default.
    #[arg(long = "check", value_delimiter = ',')]
    checks: Vec<CheckKind>,
    /// Coefficient field: gf2, rational, or gfP for a prime P.
    #[arg(long, default_value = "gf2")]
    field: FieldTag,
    /// Report format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn caps(flag: Option<&str>) -> Result<Caps> {
    let from_env = std::env::var(CAPS_ENV).ok();
    match flag.or(from_env.as_deref()) {
        Some(text) => text.parse().context("invalid caps"),
        None => Ok(Caps::default()),
    }
}

fn cmd_ideal(which: &IdealKind, caps: &Caps) -> Result<i32> {
    let ideal = match which {
        IdealKind::Cover(input) => cover_ideal(&input.load()?),
        IdealKind::Symbolic { k, input } => edge_symbolic_power(&input.load()?, *k, caps)?,
        IdealKind::Power { k, input } => {
            cover_ideal(&input.load()?).power_capped(*k, caps.generators)?
        }
    };
    print!("{ideal}");
    Ok(0)
}

fn cmd_regularity(args: &RegularityArgs, caps: &Caps) -> Result<i32> {
    let graph = match (&args.graph, &args.named) {
        (Some(path), _) => Some(read_graph(path)?),
        (_, Some(name)) => Some(Graph::named(name)?),
        _ => None,
    };
    let ideal = match (graph, &args.ideal, args.power) {
        (Some(g), _, PowerKind::Symbolic) => edge_symbolic_power(&g, args.k, caps)?,
        (Some(g), _, PowerKind::Ordinary) => {
            cover_ideal(&g).power_capped(args.k, caps.generators)?
        }
        (None, Some(path), power) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let base: MonomialIdeal = text
                .parse()
                .with_context(|| format!("parsing {}", path.display()))?;
            match power {
                PowerKind::Symbolic => coverreg::symbolic_power(&base, args.k, caps)?,
                PowerKind::Ordinary => base.power_capped(args.k, caps.generators)?,
            }
        }
        (None, None, _) => bail!("give --graph, --named or --ideal"),
    };
    let mut out = io::stdout().lock();
    if ideal.is_unit() {
        writeln!(out, "0")?;
        return Ok(0);
    }
    if ideal.is_zero() {
        bail!("the zero ideal has no regularity");
    }
    let table = betti_numbers(&ideal, args.field, caps)?;
    let reg = table.regularity().expect("a proper ideal has generators");
    writeln!(out, "{reg}")?;
    if args.emit_betti {
        write!(out, "{table}")?;
    }
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs, caps: &Caps) -> Result<i32> {
    let family = family_spec(&args.family)?;
    let config = SweepConfig {
        k_max: args.max_k,
        field: args.field,
        caps: *caps,
        checks: args.checks.clone(),
    };
    let outcome = sweep(&family, &config)?;
    let mut buf = Vec::new();
    match args.format {
        Format::Json => write_json(&outcome.records, &mut buf)?,
        Format::Csv => write_csv(&outcome.records, &mut buf)?,
        Format::Text => write_text(&outcome.records, &mut buf)?,
    }
    match &args.output {
        Some(path) => {
            fs::write(path, &buf).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().lock().write_all(&buf)?,
    }
    eprintln!("{}", outcome.summary);
    for r in outcome.records.iter().filter(|r| r.is_violation()) {
        eprintln!(
            "violation: {} {} k={:?}: {}",
            r.identity.unwrap_or("bounds"),
            r.graph_id,
            r.k,
            r.witness.as_deref().unwrap_or("bound fails")
        );
    }
    for r in outcome.records.iter().filter(|r| r.is_error()) {
        eprintln!(
            "error: {} {}: {}",
            r.graph_id,
            r.identity.unwrap_or(""),
            r.message.as_deref().unwrap_or("")
        );
    }
    Ok(outcome.summary.exit_code())
}

fn run(cli: &Cli) -> Result<i32> {
    let caps = caps(cli.caps.as_deref())?;
    match &cli.command {
        Command::Ideal { which } => cmd_ideal(which, &caps),
        Command::Regularity(args) => cmd_regularity(args, &caps),
        Command::Verify(args) => cmd_verify(args, &caps),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
