use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use coverreg::verify::FamilySpec;
use coverreg::{EdgeProbability, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    /// Every graph on up to --max-n vertices, up to isomorphism.
    All,
    /// Every connected graph on up to --max-n vertices.
    Connected,
    Star,
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    PendantBlowup,
    Cone,
    Random,
    /// The graphs given with --graph and --named.
    Graphs,
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// Graph family to sweep.
    #[arg(long, value_enum)]
    pub family: FamilyName,
    /// Largest vertex count for `all` and `connected`.
    #[arg(long, default_value_t = 5)]
    pub max_n: usize,
    /// Sizes: `3`, `1..4` (inclusive) or `2,5`. Star leaves, clique size,
    /// path or cycle length, first bipartite side, or vertex count for `random`.
    #[arg(long)]
    pub n: Option<String>,
    /// Second bipartite side sizes, same syntax as --n.
    #[arg(long)]
    pub m: Option<String>,
    /// Pendant counts for `pendant-blowup`, same syntax as --n.
    #[arg(long)]
    pub s: Option<String>,
    /// Cone bases by name, e.g. C5 (repeatable).
    #[arg(long)]
    pub base: Vec<String>,
    /// Edge probability for `random`: `a/b` or a decimal.
    #[arg(long, default_value = "1/2")]
    pub p: EdgeProbability,
    /// First seed for `random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of consecutive seeds for `random`.
    #[arg(long, default_value_t = 10)]
    pub count: u64,
    /// Edge-list files for `graphs` (repeatable).
    #[arg(long)]
    pub graph: Vec<PathBuf>,
    /// Named graphs for `graphs` (repeatable).
    #[arg(long)]
    pub named: Vec<String>,
}

/// Parses `3`, `1..4` (inclusive) or a comma list of either.
pub fn parse_sizes(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo: usize = lo
                    .trim()
                    .parse()
                    .with_context(|| format!("bad range '{part}'"))?;
                let hi: usize = hi
                    .trim()
                    .trim_start_matches('=')
                    .parse()
                    .with_context(|| format!("bad range '{part}'"))?;
                if lo > hi {
                    bail!("empty range '{part}'");
                }
                out.extend(lo..=hi);
            }
            None => out.push(part.parse().with_context(|| format!("bad size '{part}'"))?),
        }
    }
    Ok(out)
}

fn required(flag: &Option<String>, name: &str, family: FamilyName) -> Result<Vec<usize>> {
    match flag {
        Some(text) => parse_sizes(text),
        None => bail!("--{name} is required for --family {family:?}"),
    }
}

fn pairs(a: &[usize], b: &[usize]) -> Vec<(usize, usize)> {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect()
}

pub fn family_spec(args: &FamilyArgs) -> Result<FamilySpec> {
    use FamilyName as F;
    let f = args.family;
    Ok(match f {
        F::All | F::Connected => FamilySpec::All {
            max_n: args.max_n,
            connected_only: f == F::Connected,
        },
        F::Star => FamilySpec::Star(required(&args.n, "n", f)?),
        F::Complete => FamilySpec::Complete(required(&args.n, "n", f)?),
        F::Path => FamilySpec::Path(required(&args.n, "n", f)?),
        F::Cycle => FamilySpec::Cycle(required(&args.n, "n", f)?),
        F::CompleteBipartite => {
            let a = required(&args.n, "n", f)?;
            let b = required(&args.m, "m", f)?;
            FamilySpec::CompleteBipartite(pairs(&a, &b))
        }
        F::PendantBlowup => {
            let n = required(&args.n, "n", f)?;
            let s = required(&args.s, "s", f)?;
            FamilySpec::PendantBlowup(pairs(&n, &s))
        }
        F::Cone => {
            if args.base.is_empty() {
                bail!("--base is required for --family cone");
            }
            let bases = args
                .base
                .iter()
                .map(|b| Graph::named(b))
                .collect::<Result<_, _>>()?;
            FamilySpec::Cone(bases)
        }
        F::Random => {
            let ns = required(&args.n, "n", f)?;
            let [n] = ns[..] else {
                bail!("--family random takes a single --n");
            };
            FamilySpec::Random {
                n,
                p: args.p,
                seeds: (args.seed..args.seed.saturating_add(args.count)).collect(),
            }
        }
        F::Graphs => {
            let mut graphs = Vec::new();
            for path in &args.graph {
                graphs.push(crate::read_graph(path)?);
            }
            for name in &args.named {
                graphs.push(Graph::named(name)?);
            }
            if graphs.is_empty() {
                bail!("--family graphs needs --graph or --named");
            }
            FamilySpec::Graphs(graphs)
        }
    })
}
