//! Isomorphism classes of small graphs.
//!
//! The canonical form of a graph is the smallest adjacency bit-string over
//! all vertex orderings that list vertices by nondecreasing degree. Degree
//! is an isomorphism invariant, so this is still a complete invariant, and
//! it only permutes within degree classes instead of over all `n!` orders.

use std::collections::BTreeSet;

use super::{BitIter, Graph};
use crate::error::{Error, Result};

/// Largest vertex count accepted by [`enumerate_graphs`] and canonical codes.
pub const MAX_ENUMERATION_VERTICES: usize = 8;

/// Canonical adjacency code: pair `(i, j)`, `i < j`, in lexicographic order
/// is one bit, the first pair being the most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: usize,
    bits: u64,
}

impl CanonicalCode {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn to_graph(&self) -> Graph {
        let pairs = pair_list(self.n);
        let total = pairs.len();
        let edges = pairs
            .into_iter()
            .enumerate()
            .filter(|&(idx, _)| self.bits >> (total - 1 - idx) & 1 == 1)
            .map(|(_, p)| p);
        Graph::from_edges(self.n, edges).expect("canonical code encodes a simple graph")
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn code_under(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut bits = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            bits = bits << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    bits
}

/// Hex adjacency code of the graph as labeled (no canonicalization).
pub(crate) fn adjacency_code(g: &Graph) -> u64 {
    if g.n() <= 11 {
        let order: Vec<usize> = (0..g.n()).collect();
        code_under(g, &order)
    } else {
        // fold longer strings; only used for display ids of large graphs
        g.edges().iter().fold(0xcbf29ce484222325u64, |h, &(i, j)| {
            (h ^ (i as u64 * 64 + j as u64)).wrapping_mul(0x100000001b3)
        })
    }
}

/// Canonical code of a graph with at most [`MAX_ENUMERATION_VERTICES`] vertices.
///
/// # Panics
/// If the graph is larger than the enumeration cap.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.n();
    assert!(
        n <= MAX_ENUMERATION_VERTICES,
        "canonical codes need n <= {MAX_ENUMERATION_VERTICES}"
    );
    let degree: Vec<u32> = (0..n).map(|v| g.adjacency_bits(v).count_ones()).collect();
    let mut slots: Vec<u32> = degree.clone();
    slots.sort_unstable();
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    search(g, &degree, &slots, 0, &mut order, &mut best);
    CanonicalCode {
        n,
        bits: if n < 2 { 0 } else { best },
    }
}

fn search(
    g: &Graph,
    degree: &[u32],
    slots: &[u32],
    used: u64,
    order: &mut Vec<usize>,
    best: &mut u64,
) {
    let pos = order.len();
    if pos == slots.len() {
        *best = (*best).min(code_under(g, order));
        return;
    }
    for v in BitIter(!used & super::low_bits(slots.len())) {
        if degree[v] != slots[pos] {
            continue;
        }
        order.push(v);
        search(g, degree, slots, used | 1 << v, order, best);
        order.pop();
    }
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// ordered by edge count and then canonical code. Representatives are the
/// canonical forms themselves, labeled `1..=n`.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<std::vec::IntoIter<Graph>> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut level: BTreeSet<CanonicalCode> = BTreeSet::from([CanonicalCode { n: 0, bits: 0 }]);
    for m in 0..n {
        let mut next = BTreeSet::new();
        for code in &level {
            let base = code.to_graph();
            for nbrs in 0..1u64 << m {
                let edges = base
                    .edges()
                    .into_iter()
                    .chain(BitIter(nbrs).map(|u| (u, m)));
                let g = Graph::from_edges(m + 1, edges).expect("extension is simple");
                next.insert(canonical_code(&g));
            }
        }
        level = next;
    }
    let mut codes: Vec<CanonicalCode> = level.into_iter().collect();
    codes.sort_by_key(|c| (c.edge_count(), c.bits));
    let graphs: Vec<Graph> = codes
        .iter()
        .map(CanonicalCode::to_graph)
        .filter(|g| !connected_only || g.is_connected())
        .collect();
    Ok(graphs.into_iter())
}
