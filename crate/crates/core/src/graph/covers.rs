use super::{low_bits, BitIter, Graph, VertexSet};

impl Graph {
    /// All maximal independent sets, sorted by size then members.
    ///
    /// Bron–Kerbosch with pivoting, run on the complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let n = self.n();
        let all = low_bits(n);
        let non_adjacent: Vec<u64> = (0..n)
            .map(|v| !self.adjacency_bits(v) & all & !(1u64 << v))
            .collect();
        let mut out = Vec::new();
        bron_kerbosch(&non_adjacent, 0, all, 0, &mut out);
        let mut sets: Vec<VertexSet> = out
            .into_iter()
            .map(|bits| VertexSet { bits, ambient: n })
            .collect();
        sets.sort();
        sets
    }

    /// All minimal vertex covers, as complements of maximal independent
    /// sets. An edgeless graph has the single cover `∅`.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets()
            .iter()
            .map(VertexSet::complement)
            .collect();
        covers.sort();
        covers
    }

    pub fn independence_number(&self) -> usize {
        self.maximal_independent_sets()
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }

    /// Size of the largest minimal vertex cover.
    pub fn max_minimal_cover_size(&self) -> usize {
        self.minimal_vertex_covers()
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0)
    }
}

fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = BitIter(p | x)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .unwrap();
    for v in BitIter(p & !adj[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= !bit;
        x |= bit;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_cover(g: &Graph, bits: u64) -> bool {
        g.edges()
            .iter()
            .all(|&(i, j)| bits >> i & 1 == 1 || bits >> j & 1 == 1)
    }

    /// Minimal covers by checking every subset directly.
    fn brute_force_covers(g: &Graph) -> Vec<VertexSet> {
        let n = g.n();
        let mut out: Vec<VertexSet> = (0..1u64 << n)
            .filter(|&c| is_cover(g, c))
            .filter(|&c| BitIter(c).all(|v| !is_cover(g, c & !(1 << v))))
            .map(|bits| VertexSet { bits, ambient: n })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn covers_of_path_and_star() {
        let p3 = Graph::path(3).unwrap();
        let covers: Vec<Vec<usize>> = p3
            .minimal_vertex_covers()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(covers, vec![vec![1], vec![0, 2]]);

        let star = Graph::complete_bipartite(1, 3).unwrap();
        let covers: Vec<Vec<usize>> = star
            .minimal_vertex_covers()
            .iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(covers, vec![vec![0], vec![1, 2, 3]]);
    }

    #[test]
    fn edgeless_graph_has_only_the_empty_cover() {
        let g = Graph::edgeless(4).unwrap();
        let covers = g.minimal_vertex_covers();
        assert_eq!(covers.len(), 1);
        assert!(covers[0].is_empty());
        assert_eq!(g.independence_number(), 4);
        assert_eq!(Graph::edgeless(0).unwrap().independence_number(), 0);
    }

    #[test]
    fn pendant_blowup_largest_cover() {
        for (n, s) in [(3, 2), (3, 3), (4, 2), (4, 3)] {
            let g = Graph::pendant_blowup(n, s).unwrap();
            assert_eq!(g.max_minimal_cover_size(), n + s - 1, "G_{{{n},{s}}}");
        }
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(Graph::complete(5).unwrap().independence_number(), 1);
        assert_eq!(Graph::edgeless(5).unwrap().independence_number(), 5);
        assert_eq!(Graph::cycle(5).unwrap().independence_number(), 2);
    }

    #[test]
    fn matches_brute_force_on_all_small_graphs() {
        for n in 0..=6 {
            for g in crate::graph::enumerate_graphs(n, false).unwrap() {
                assert_eq!(g.minimal_vertex_covers(), brute_force_covers(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn covers_of_remainder_extend_to_covers() {
        for n in 1..=6 {
            for g in crate::graph::enumerate_graphs(n, false).unwrap() {
                let covers = g.minimal_vertex_covers();
                for v in 0..n {
                    let closed = g.closed_neighborhood(v).unwrap();
                    let kept = closed.complement().to_vec();
                    let rest = g.delete_vertices(&closed).unwrap();
                    let open = g.neighbors(v).unwrap();
                    for c in rest.minimal_vertex_covers() {
                        let lifted = VertexSet::from_indices(n, c.iter().map(|i| kept[i])).unwrap();
                        assert!(covers.contains(&lifted.union(&open)));
                    }
                }
            }
        }
    }
}
