//! Finite simple graphs on at most 64 vertices.
//!
//! Vertices are indexed `0..n` and carry string labels that survive
//! [`Graph::delete_vertices`], so subgraphs can be matched back to the
//! graph they came from. Adjacency is kept as one `u64` bitmask per vertex.

mod classes;
mod covers;
mod enumerate;
mod families;
mod io;
mod random;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use enumerate::{canonical_code, enumerate_graphs, CanonicalCode, MAX_ENUMERATION_VERTICES};
pub use random::{random_graph, EdgeProbability};

/// Largest vertex count any [`Graph`] may have.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices of a graph with `ambient` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: u64,
    ambient: usize,
}

impl VertexSet {
    pub fn empty(ambient: usize) -> Self {
        debug_assert!(ambient <= MAX_VERTICES);
        VertexSet { bits: 0, ambient }
    }

    pub fn full(ambient: usize) -> Self {
        VertexSet {
            bits: low_bits(ambient),
            ambient,
        }
    }

    pub fn from_bits(bits: u64, ambient: usize) -> Result<Self> {
        if bits & !low_bits(ambient) != 0 {
            let index = 63 - (bits & !low_bits(ambient)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { index, n: ambient });
        }
        Ok(VertexSet { bits, ambient })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(ambient: usize, indices: I) -> Result<Self> {
        let mut set = VertexSet::empty(ambient);
        for v in indices {
            if v >= ambient {
                return Err(Error::VertexOutOfRange {
                    index: v,
                    n: ambient,
                });
            }
            set.bits |= 1 << v;
        }
        Ok(set)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.ambient && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) -> Result<()> {
        if v >= self.ambient {
            return Err(Error::VertexOutOfRange {
                index: v,
                n: self.ambient,
            });
        }
        self.bits |= 1 << v;
        Ok(())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            bits: self.bits | other.bits,
            ambient: self.ambient.max(other.ambient),
        }
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            bits: !self.bits & low_bits(self.ambient),
            ambient: self.ambient,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Ord for VertexSet {
    /// Orders by size, then by the sorted member list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
            .then_with(|| self.ambient.cmp(&other.ambient))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) struct BitIter(pub(crate) u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A labeled finite simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adjacency: Vec<u64>,
    name: Option<String>,
}

impl Graph {
    /// The edgeless graph on `n` vertices labeled `1..=n`.
    pub fn edgeless(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            labels: (1..=n).map(|i| i.to_string()).collect(),
            adjacency: vec![0; n],
            name: None,
        })
    }

    /// Builds a graph from 0-based edge pairs, rejecting loops, duplicates,
    /// and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::edgeless(n)?;
        for (i, j) in edges {
            g.push_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::Parameter(format!(
                "{} labels given for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::Parameter("vertex labels must be distinct".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    fn push_edge(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        for v in [i, j] {
            if v >= n {
                return Err(Error::VertexOutOfRange { index: v, n });
            }
        }
        if i == j {
            return Err(Error::Parameter(format!("self-loop at vertex {i}")));
        }
        if self.adjacency[i] >> j & 1 == 1 {
            return Err(Error::Parameter(format!("duplicate edge {{{i}, {j}}}")));
        }
        self.adjacency[i] |= 1 << j;
        self.adjacency[j] |= 1 << i;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n() {
            for j in BitIter(self.adjacency[i] & !low_bits(i + 1)) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.n() && j < self.n() && self.adjacency[i] >> j & 1 == 1
    }

    pub(crate) fn adjacency_bits(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::VertexOutOfRange {
                index: v,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// The open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            bits: self.adjacency[v],
            ambient: self.n(),
        })
    }

    /// The closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(VertexSet {
            bits: self.adjacency[v] | 1 << v,
            ambient: self.n(),
        })
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        let bits = (0..self.n())
            .filter(|&v| self.adjacency[v] == 0)
            .fold(0u64, |acc, v| acc | 1 << v);
        VertexSet {
            bits,
            ambient: self.n(),
        }
    }

    pub fn has_isolated_vertices(&self) -> bool {
        self.adjacency.contains(&0)
    }

    /// `G ∖ A`: drops the vertices of `a` and every edge meeting them.
    /// Remaining vertices keep their labels and relative order; isolated
    /// vertices are kept.
    pub fn delete_vertices(&self, a: &VertexSet) -> Result<Graph> {
        if a.ambient() != self.n() {
            return Err(Error::AmbientMismatch {
                left: self.n(),
                right: a.ambient(),
            });
        }
        let kept: Vec<usize> = a.complement().to_vec();
        Ok(self.induced(&kept))
    }

    /// Subgraph induced on `kept`, re-indexed in the given order.
    pub(crate) fn induced(&self, kept: &[usize]) -> Graph {
        let mut position = vec![usize::MAX; self.n()];
        for (new, &old) in kept.iter().enumerate() {
            position[old] = new;
        }
        let adjacency = kept
            .iter()
            .map(|&old| {
                BitIter(self.adjacency[old])
                    .filter(|&u| position[u] != usize::MAX)
                    .fold(0u64, |acc, u| acc | 1 << position[u])
            })
            .collect();
        Graph {
            labels: kept.iter().map(|&v| self.labels[v].clone()).collect(),
            adjacency,
            name: None,
        }
    }

    /// The graph with its isolated vertices removed.
    pub fn without_isolated_vertices(&self) -> Graph {
        let kept: Vec<usize> = (0..self.n()).filter(|&v| self.adjacency[v] != 0).collect();
        let mut g = self.induced(&kept);
        if kept.len() == self.n() {
            g.name = self.name.clone();
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0;
            for v in BitIter(frontier) {
                next |= self.adjacency[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == low_bits(self.n())
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Stable identifier: the family name when the graph came from a named
    /// generator, otherwise a code derived from its canonical form (or from
    /// the raw adjacency above the enumeration cap).
    pub fn id(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        let n = self.n();
        let bits = if n <= MAX_ENUMERATION_VERTICES {
            canonical_code(self).bits()
        } else {
            enumerate::adjacency_code(self)
        };
        let width = (n * n.saturating_sub(1) / 2).div_ceil(4).max(1);
        format!("g{n}-{bits:0width$x}")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .field("name", &self.name)
            .finish()
    }
}

pub use io::{parse_edge_list, write_edge_list};
