use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::cover::cover_ideal;
use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::graph::{enumerate_graphs, random_graph, EdgeProbability, Graph};

use super::checks::*;
use super::{ErrorRecord, Record};

/// The checks a sweep can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckKind {
    Bounds,
    DegreeLemma,
    Restriction,
    Colon,
    BipartitePower,
    HalfCover,
    Sharpness,
    BoundComparison,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Bounds,
        CheckKind::DegreeLemma,
        CheckKind::Restriction,
        CheckKind::Colon,
        CheckKind::BipartitePower,
        CheckKind::HalfCover,
        CheckKind::Sharpness,
        CheckKind::BoundComparison,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::Bounds => "bounds",
            CheckKind::DegreeLemma => "degree-lemma",
            CheckKind::Restriction => "restriction",
            CheckKind::Colon => "colon",
            CheckKind::BipartitePower => "bipartite-power",
            CheckKind::HalfCover => "half-cover",
            CheckKind::Sharpness => "sharpness",
            CheckKind::BoundComparison => "bound-comparison",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().replace('_', "-");
        CheckKind::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::Parameter(format!("unknown check '{s}'")))
    }
}

/// One graph to sweep, with the sharpness family it belongs to, if any.
#[derive(Clone, Debug)]
pub struct SweepItem {
    pub graph: Graph,
    pub sharpness: Option<SharpnessKind>,
}

impl SweepItem {
    pub fn plain(graph: Graph) -> Self {
        SweepItem {
            graph,
            sharpness: None,
        }
    }
}

/// Which graphs a sweep covers.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    /// Every graph on `0..=max_n` vertices up to isomorphism.
    All {
        max_n: usize,
        connected_only: bool,
    },
    Star(Vec<usize>),
    Complete(Vec<usize>),
    Path(Vec<usize>),
    Cycle(Vec<usize>),
    CompleteBipartite(Vec<(usize, usize)>),
    PendantBlowup(Vec<(usize, usize)>),
    /// Cones over the given bases.
    Cone(Vec<Graph>),
    /// `G(n, p)` once per seed; graphs are named after their seed.
    Random {
        n: usize,
        p: EdgeProbability,
        seeds: Vec<u64>,
    },
    Graphs(Vec<Graph>),
}

impl FamilySpec {
    pub fn items(&self) -> Result<Vec<SweepItem>> {
        let plain = |gs: Vec<Graph>| gs.into_iter().map(SweepItem::plain).collect();
        Ok(match self {
            FamilySpec::All {
                max_n,
                connected_only,
            } => {
                let mut out = Vec::new();
                for n in 0..=*max_n {
                    out.extend(enumerate_graphs(n, *connected_only)?.map(SweepItem::plain));
                }
                out
            }
            FamilySpec::Star(ns) => ns
                .iter()
                .map(|&n| {
                    Ok(SweepItem {
                        graph: Graph::star(n)?,
                        sharpness: Some(SharpnessKind::Star(n)),
                    })
                })
                .collect::<Result<_>>()?,
            FamilySpec::Complete(ns) => ns
                .iter()
                .map(|&n| {
                    let sharpness = (n >= 2).then_some(SharpnessKind::Complete(n));
                    Ok(SweepItem {
                        graph: Graph::complete(n)?,
                        sharpness,
                    })
                })
                .collect::<Result<_>>()?,
            FamilySpec::Path(ns) => {
                plain(ns.iter().map(|&n| Graph::path(n)).collect::<Result<_>>()?)
            }
            FamilySpec::Cycle(ns) => {
                plain(ns.iter().map(|&n| Graph::cycle(n)).collect::<Result<_>>()?)
            }
            FamilySpec::CompleteBipartite(ab) => plain(
                ab.iter()
                    .map(|&(a, b)| Graph::complete_bipartite(a, b))
                    .collect::<Result<_>>()?,
            ),
            FamilySpec::PendantBlowup(ns) => plain(
                ns.iter()
                    .map(|&(n, s)| Graph::pendant_blowup(n, s))
                    .collect::<Result<_>>()?,
            ),
            FamilySpec::Cone(bases) => bases
                .iter()
                .map(|h| {
                    let sharpness = (h.n() > 0 && h.independence_number() <= 2)
                        .then(|| SharpnessKind::Cone(h.clone()));
                    Ok(SweepItem {
                        graph: Graph::cone(h)?,
                        sharpness,
                    })
                })
                .collect::<Result<_>>()?,
            FamilySpec::Random { n, p, seeds } => plain(
                seeds
                    .iter()
                    .map(|&s| {
                        Ok(random_graph(*n, *p, s)?
                            .with_name(format!("random(n={n},p={p},seed={s})")))
                    })
                    .collect::<Result<_>>()?,
            ),
            FamilySpec::Graphs(gs) => plain(gs.clone()),
        })
    }
}

/// Settings shared by every item in a sweep.
#[derive(Clone, Debug)]
pub struct SweepConfig {
    /// Exponents `1..=k_max` are checked (`2..=k_max` for the colon identity).
    pub k_max: u32,
    pub field: FieldTag,
    pub caps: Caps,
    /// Checks to run where applicable; empty means all of them.
    pub checks: Vec<CheckKind>,
}

impl SweepConfig {
    pub fn new(k_max: u32, field: FieldTag) -> Self {
        SweepConfig {
            k_max,
            field,
            caps: Caps::default(),
            checks: Vec::new(),
        }
    }

    fn wants(&self, c: CheckKind) -> bool {
        self.checks.is_empty() || self.checks.contains(&c)
    }
}

/// Aggregate counts over a sweep's records.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub graphs: usize,
    pub bounds_rows: usize,
    pub bounds_hold: usize,
    pub lower_tight: usize,
    pub upper_tight: usize,
    pub identity_rows: usize,
    pub identity_pass: usize,
    /// Failures outside the scope of any theorem.
    pub observations: usize,
    pub violations: usize,
    pub errors: usize,
    /// How many bounds rows have each value of `reg - k · deg`.
    pub defects: BTreeMap<i64, usize>,
}

impl SweepSummary {
    fn from_records(graphs: usize, records: &[Record]) -> Self {
        let mut s = SweepSummary {
            graphs,
            ..Default::default()
        };
        for r in records {
            match r.kind {
                "bounds" => {
                    s.bounds_rows += 1;
                    s.bounds_hold += usize::from(r.holds == Some(true));
                    s.lower_tight += usize::from(r.lower_tight == Some(true));
                    s.upper_tight += usize::from(r.upper_tight == Some(true));
                    *s.defects.entry(r.defect.unwrap_or(0)).or_insert(0) += 1;
                    s.observations += usize::from(r.holds == Some(false) && !r.is_violation());
                }
                "identity" => {
                    s.identity_rows += 1;
                    s.identity_pass += usize::from(r.pass == Some(true));
                    s.observations += usize::from(r.pass == Some(false) && !r.is_violation());
                }
                _ => s.errors += 1,
            }
            s.violations += usize::from(r.is_violation());
        }
        s
    }

    /// 1 if any theorem is contradicted, else 2 if any check could not
    /// run, else 0.
    pub fn exit_code(&self) -> i32 {
        if self.violations > 0 {
            1
        } else if self.errors > 0 {
            2
        } else {
            0
        }
    }
}

impl fmt::Display for SweepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graphs: {}", self.graphs)?;
        writeln!(
            f,
            "bounds: {}/{} hold, {} lower-tight, {} upper-tight",
            self.bounds_hold, self.bounds_rows, self.lower_tight, self.upper_tight
        )?;
        writeln!(
            f,
            "identities: {}/{} pass",
            self.identity_pass, self.identity_rows
        )?;
        let defects: Vec<String> = self
            .defects
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        writeln!(
            f,
            "defect histogram: {}",
            if defects.is_empty() {
                "-".into()
            } else {
                defects.join(" ")
            }
        )?;
        write!(
            f,
            "observations: {}, violations: {}, errors: {}",
            self.observations, self.violations, self.errors
        )
    }
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    /// Rows ordered by graph id, then `k`; rows of one graph keep the
    /// order in which its checks ran.
    pub records: Vec<Record>,
    pub summary: SweepSummary,
}

/// Runs every requested, applicable check on every graph of the family.
/// Failures to compute (caps, mostly) become error rows; only building the
/// family itself can fail the whole sweep.
pub fn sweep(family: &FamilySpec, config: &SweepConfig) -> Result<SweepOutcome> {
    let items = family.items()?;
    let per_item: Vec<Vec<Record>> = items
        .par_iter()
        .map(|item| run_item(item, config))
        .collect();
    let mut records: Vec<Record> = per_item.into_iter().flatten().collect();
    records.sort_by(|a, b| (&a.graph_id, a.k.unwrap_or(0)).cmp(&(&b.graph_id, b.k.unwrap_or(0))));
    let summary = SweepSummary::from_records(items.len(), &records);
    Ok(SweepOutcome { records, summary })
}

fn run_item(item: &SweepItem, config: &SweepConfig) -> Vec<Record> {
    let g = &item.graph;
    let id = g.id();
    let h = g.without_isolated_vertices();
    let has_edge = h.edge_count() > 0;
    let (field, caps) = (config.field, &config.caps);
    let mut out = Vec::new();
    let mut push = |check: CheckKind, k: Option<u32>, result: Result<Record>| {
        out.push(result.unwrap_or_else(|e| {
            Record::from(&ErrorRecord {
                graph_id: id.clone(),
                k,
                check: check.name(),
                message: e.to_string(),
            })
        }))
    };
    let ks = 1..=config.k_max;

    if config.wants(CheckKind::Bounds) && has_edge {
        for k in ks.clone() {
            push(
                CheckKind::Bounds,
                Some(k),
                check_bounds(g, k, field, caps).map(|r| Record::from(&r)),
            );
        }
    }
    if config.wants(CheckKind::DegreeLemma) && has_edge {
        let j = cover_ideal(&h);
        for k in ks.clone() {
            push(
                CheckKind::DegreeLemma,
                Some(k),
                check_degree_lemma(&j, k, caps, &id).map(|r| Record::from(&r)),
            );
        }
    }
    if config.wants(CheckKind::Restriction) {
        for v in 0..g.n() {
            push(
                CheckKind::Restriction,
                None,
                check_restriction_identity(g, v).map(|r| Record::from(&r)),
            );
        }
    }
    if config.wants(CheckKind::Colon) && has_edge {
        for k in 2..=config.k_max {
            push(
                CheckKind::Colon,
                Some(k),
                check_colon_identity(g, k, caps).map(|r| Record::from(&r)),
            );
        }
    }
    let bipartite = has_edge && h.is_bipartite();
    if config.wants(CheckKind::BipartitePower) && bipartite {
        for k in ks.clone() {
            let r = check_bipartite_power_equality(&h, k, caps);
            push(
                CheckKind::BipartitePower,
                Some(k),
                r.map(|r| Record::from(&r).with_graph_id(&id)),
            );
        }
    }
    if config.wants(CheckKind::HalfCover) && h.n() > 0 {
        let r = check_half_cover_condition(&h);
        push(
            CheckKind::HalfCover,
            None,
            r.map(|r| Record::from(&r).with_graph_id(&id)),
        );
    }
    if let (true, Some(kind)) = (config.wants(CheckKind::Sharpness), &item.sharpness) {
        for k in ks.clone() {
            push(
                CheckKind::Sharpness,
                Some(k),
                check_sharpness(kind, k, field, caps).map(|r| Record::from(&r)),
            );
        }
    }
    if config.wants(CheckKind::BoundComparison) && bipartite {
        for k in ks {
            let r = check_bound_comparison(&h, k, field, caps);
            push(
                CheckKind::BoundComparison,
                Some(k),
                r.map(|r| Record::from(&r).with_graph_id(&id)),
            );
        }
    }
    out
}

impl Record {
    fn with_graph_id(mut self, id: &str) -> Self {
        self.graph_id = id.to_string();
        self
    }
}
