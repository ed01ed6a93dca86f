use std::collections::VecDeque;

use super::{BitIter, Graph, VertexSet};

impl Graph {
    /// A bipartition `(A, B)` found by breadth-first two-coloring, or `None`
    /// when the graph has an odd cycle. The lowest vertex of each component
    /// goes to `A`, so isolated vertices land in `A`.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for u in BitIter(self.adjacency_bits(v)) {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            queue.push_back(u);
                        }
                        Some(cu) if cu == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let side = |want: bool| {
            let bits = (0..n)
                .filter(|&v| color[v] == Some(want))
                .fold(0u64, |a, v| a | 1 << v);
            VertexSet { bits, ambient: n }
        };
        Some((side(false), side(true)))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// All minimal vertex covers share one cardinality.
    pub fn is_unmixed(&self) -> bool {
        let covers = self.minimal_vertex_covers();
        covers.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// No vertex has three pairwise non-adjacent neighbors.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|v| {
            let nbrs: Vec<usize> = BitIter(self.adjacency_bits(v)).collect();
            for (a, &x) in nbrs.iter().enumerate() {
                for (b, &y) in nbrs.iter().enumerate().skip(a + 1) {
                    if self.has_edge(x, y) {
                        continue;
                    }
                    for &z in &nbrs[b + 1..] {
                        if !self.has_edge(x, z) && !self.has_edge(y, z) {
                            return false;
                        }
                    }
                }
            }
            true
        })
    }

    /// Whether some minimal vertex cover has at least `n/2` vertices.
    pub fn has_half_cover(&self) -> bool {
        2 * self.max_minimal_cover_size() >= self.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::enumerate_graphs;

    #[test]
    fn bipartitions() {
        let (a, b) = Graph::cycle(4).unwrap().bipartition().unwrap();
        assert_eq!(a.to_vec(), vec![0, 2]);
        assert_eq!(b.to_vec(), vec![1, 3]);
        assert!(Graph::complete(3).unwrap().bipartition().is_none());
        assert!(Graph::pendant_blowup(3, 3).unwrap().bipartition().is_none());

        let (a, _) = Graph::edgeless(3).unwrap().bipartition().unwrap();
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn unmixed_examples() {
        assert!(Graph::cycle(5).unwrap().is_unmixed());
        assert!(!Graph::path(3).unwrap().is_unmixed());
        for n in 1..=6 {
            assert!(Graph::complete(n).unwrap().is_unmixed());
        }
        assert!(Graph::edgeless(3).unwrap().is_unmixed());
    }

    #[test]
    fn claw_free_examples() {
        assert!(!Graph::complete_bipartite(1, 3).unwrap().is_claw_free());
        assert!(Graph::complete(5).unwrap().is_claw_free());
        assert!(Graph::cycle(5).unwrap().is_claw_free());
    }

    #[test]
    fn every_edge_crosses_the_bipartition() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                if let Some((a, b)) = g.bipartition() {
                    assert_eq!(a.union(&b).len(), n);
                    assert!(a.bits() & b.bits() == 0);
                    for (i, j) in g.edges() {
                        assert!(a.contains(i) != a.contains(j));
                    }
                }
            }
        }
    }

    #[test]
    fn classes_are_closed_under_removing_closed_neighborhoods() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                for v in 0..n {
                    let h = g
                        .delete_vertices(&g.closed_neighborhood(v).unwrap())
                        .unwrap();
                    if g.is_unmixed() {
                        assert!(h.is_unmixed(), "{g:?} at {v}");
                    }
                    if g.is_claw_free() {
                        assert!(h.is_claw_free(), "{g:?} at {v}");
                    }
                    if g.is_bipartite() {
                        assert!(h.is_bipartite());
                    }
                }
            }
        }
    }

    #[test]
    fn claw_free_matches_induced_subgraph_search() {
        for n in 1..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let mut has_claw = false;
                for c in 0..n {
                    for x in 0..n {
                        for y in x + 1..n {
                            for z in y + 1..n {
                                let leaves = [x, y, z];
                                if leaves.contains(&c) {
                                    continue;
                                }
                                let star = leaves.iter().all(|&l| g.has_edge(c, l));
                                let independent =
                                    !g.has_edge(x, y) && !g.has_edge(x, z) && !g.has_edge(y, z);
                                has_claw |= star && independent;
                            }
                        }
                    }
                }
                assert_eq!(g.is_claw_free(), !has_claw);
            }
        }
    }
}
