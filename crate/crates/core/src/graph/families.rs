//! Named graph families.
//!
//! Vertex orderings:
//! - `complete_bipartite(a, b)`: the `a` side is `0..a`, the `b` side `a..a+b`.
//! - `path(n)` and `cycle(n)`: consecutive indices are adjacent.
//! - `pendant_blowup(n, s)`: the `K_n` vertices are `0..n`; the leaves hanging
//!   off clique vertex `i` are `n + i*s .. n + (i+1)*s`.
//! - `cone(h)`: the vertices of `h` keep their indices, the apex is last.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

fn range_error(what: &str) -> Error {
    Error::Parameter(what.to_string())
}

impl Graph {
    pub fn complete(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(range_error("complete graph needs n >= 1"));
        }
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Ok(Graph::from_edges(n, edges)?.with_name(format!("K{n}")))
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        if a < 1 || b < 1 {
            return Err(range_error("complete bipartite graph needs a, b >= 1"));
        }
        let edges = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j)));
        Ok(Graph::from_edges(a + b, edges)?.with_name(format!("K{a},{b}")))
    }

    /// The star `K_{1,n}`, center at index 0.
    pub fn star(n: usize) -> Result<Graph> {
        Graph::complete_bipartite(1, n)
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n < 1 {
            return Err(range_error("path needs n >= 1"));
        }
        let edges = (1..n).map(|i| (i - 1, i));
        Ok(Graph::from_edges(n, edges)?.with_name(format!("P{n}")))
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(range_error("cycle needs n >= 3"));
        }
        let edges = (1..n).map(|i| (i - 1, i)).chain([(0, n - 1)]);
        Ok(Graph::from_edges(n, edges)?.with_name(format!("C{n}")))
    }

    /// `K_n` with `s` pendant edges attached at every vertex.
    pub fn pendant_blowup(n: usize, s: usize) -> Result<Graph> {
        if n < 3 || s < 2 {
            return Err(range_error("pendant blow-up needs n >= 3 and s >= 2"));
        }
        let total = n * (s + 1);
        if total > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                n: total,
                max: MAX_VERTICES,
            });
        }
        let clique = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        let pendants = (0..n).flat_map(|i| (0..s).map(move |j| (i, n + i * s + j)));
        Ok(Graph::from_edges(total, clique.chain(pendants))?.with_name(format!("G{n},{s}")))
    }

    /// Adds one apex vertex joined to every vertex of `h`.
    pub fn cone(h: &Graph) -> Result<Graph> {
        let n = h.n() + 1;
        let edges = h.edges().into_iter().chain((0..h.n()).map(|v| (v, h.n())));
        let mut labels = h.labels().to_vec();
        let mut apex = String::from("y");
        while labels.contains(&apex) {
            apex.push('\'');
        }
        labels.push(apex);
        let g = Graph::from_edges(n, edges)?.with_labels(labels)?;
        Ok(g.with_name(format!("cone({})", h.id())))
    }

    /// Parses a family name such as `K4`, `K2,3`, `P3`, `C5`, `S3` (the star
    /// `K_{1,3}`), `E4` (edgeless), `G3,3` (pendant blow-up) or `cone(C5)`.
    pub fn named(spec: &str) -> Result<Graph> {
        let spec = spec.trim();
        let bad = || Error::Parameter(format!("unrecognized graph name '{spec}'"));
        if let Some(inner) = spec.strip_prefix("cone(").and_then(|s| s.strip_suffix(')')) {
            return Graph::cone(&Graph::named(inner)?);
        }
        let mut chars = spec.chars();
        let family = chars.next().ok_or_else(bad)?;
        let args: Vec<usize> = chars
            .as_str()
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (family, args.as_slice()) {
            ('K', [n]) => Graph::complete(*n),
            ('K', [a, b]) => Graph::complete_bipartite(*a, *b),
            ('P', [n]) => Graph::path(*n),
            ('C', [n]) => Graph::cycle(*n),
            ('S', [n]) => Graph::star(*n),
            ('E', [n]) => Ok(Graph::edgeless(*n)?.with_name(format!("E{n}"))),
            ('G', [n, s]) => Graph::pendant_blowup(*n, *s),
            _ => Err(bad()),
        }
    }
}
