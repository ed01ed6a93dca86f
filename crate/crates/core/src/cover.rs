//! Cover ideals of graphs and symbolic powers of squarefree monomial ideals.
//!
//! For a squarefree ideal `I` with minimal primes `p_1, ..., p_r` the
//! `k`-th symbolic power is `p_1^k ∩ ... ∩ p_r^k`. For the cover ideal
//! `J(G)` the minimal primes are the edge ideals `(x_i, x_j)`.

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Variable count above which [`minimal_primes`] refuses to run; it
/// enumerates all `2^n` variable subsets.
pub const MAX_PRIME_SEARCH_VARIABLES: usize = 20;

/// `J(G)`: one generator `∏_{x∈C} x` per minimal vertex cover `C`.
/// Isolated vertices never appear; an edgeless graph gives the unit ideal.
pub fn cover_ideal(g: &Graph) -> MonomialIdeal {
    let n = g.n();
    let gens = g
        .minimal_vertex_covers()
        .into_iter()
        .map(|c| Monomial::squarefree(n, c.iter()));
    MonomialIdeal::minimalize(n, gens).expect("covers live in the graph's ring")
}

/// `⋂_{ij ∈ E(G)} (x_i, x_j)^k`, folded over the edges in order.
pub fn edge_symbolic_power(g: &Graph, k: u32, caps: &Caps) -> Result<MonomialIdeal> {
    let n = g.n();
    let mut acc = MonomialIdeal::unit(n);
    if k == 0 {
        return Ok(acc);
    }
    for (i, j) in g.edges() {
        let prime = prime_power(&VertexSet::from_indices(n, [i, j])?, k)?;
        acc = acc.intersect_capped(&prime, caps.generators)?;
    }
    Ok(acc)
}

/// Minimal primes of a squarefree ideal, as variable sets: the minimal
/// subsets meeting the support of every generator.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<VertexSet>> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.n();
    if n > MAX_PRIME_SEARCH_VARIABLES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_PRIME_SEARCH_VARIABLES,
        });
    }
    let supports: Vec<u64> = ideal
        .generators()
        .iter()
        .map(|g| g.support().fold(0u64, |a, i| a | 1 << i))
        .collect();
    let hits_all = |s: u64| supports.iter().all(|&m| m & s != 0);

    let mut subsets: Vec<u64> = (0..1u64 << n).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    let mut primes: Vec<u64> = Vec::new();
    for s in subsets {
        if primes.iter().any(|&p| p & !s == 0) || !hits_all(s) {
            continue;
        }
        primes.push(s);
    }
    let mut out = primes
        .into_iter()
        .map(|bits| VertexSet::from_bits(bits, n))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

/// `(x_v : v ∈ vars)^k`: every monomial of degree exactly `k` in `vars`.
pub fn prime_power(vars: &VertexSet, k: u32) -> Result<MonomialIdeal> {
    if vars.is_empty() {
        return Err(Error::Parameter(
            "prime power needs a nonempty variable set".into(),
        ));
    }
    if k == 0 {
        return Err(Error::Parameter("prime power needs k >= 1".into()));
    }
    let n = vars.ambient();
    let members = vars.to_vec();
    let mut gens = Vec::new();
    let mut exps = vec![0u32; n];
    compositions(&members, 0, k, &mut exps, &mut gens);
    MonomialIdeal::minimalize(n, gens)
}

fn compositions(
    vars: &[usize],
    at: usize,
    left: u32,
    exps: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if at + 1 == vars.len() {
        exps[vars[at]] = left;
        out.push(Monomial::new(exps.clone()).expect("degree fits"));
        exps[vars[at]] = 0;
        return;
    }
    for e in 0..=left {
        exps[vars[at]] = e;
        compositions(vars, at + 1, left - e, exps, out);
    }
    exps[vars[at]] = 0;
}

/// `I^(k)` for a squarefree monomial ideal: the intersection of the `k`-th
/// powers of its minimal primes, folded left to right. `k = 0` gives the
/// unit ideal; the zero ideal stays zero.
pub fn symbolic_power(ideal: &MonomialIdeal, k: u32, caps: &Caps) -> Result<MonomialIdeal> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = ideal.n();
    if k == 0 {
        return Ok(MonomialIdeal::unit(n));
    }
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(n));
    }
    let mut acc = MonomialIdeal::unit(n);
    for p in minimal_primes(ideal)? {
        acc = acc.intersect_capped(&prime_power(&p, k)?, caps.generators)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec()).unwrap()
    }

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(n, gens.iter().map(|g| m(g))).unwrap()
    }

    fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
        v.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn cover_ideals_of_small_graphs() {
        assert_eq!(
            cover_ideal(&Graph::complete(2).unwrap()),
            MonomialIdeal::variables(2, [0, 1])
        );
        assert_eq!(
            cover_ideal(&Graph::path(3).unwrap()),
            ideal(3, &[&[0, 1, 0], &[1, 0, 1]])
        );
        assert_eq!(
            cover_ideal(&Graph::star(3).unwrap()),
            ideal(4, &[&[1, 0, 0, 0], &[0, 1, 1, 1]])
        );
        assert!(cover_ideal(&Graph::edgeless(3).unwrap()).is_unit());
    }

    #[test]
    fn cover_ideal_equals_intersection_of_edge_primes() {
        for n in 0..=6 {
            for g in crate::graph::enumerate_graphs(n, false).unwrap() {
                let by_edges = edge_symbolic_power(&g, 1, &Caps::default()).unwrap();
                assert_eq!(cover_ideal(&g), by_edges, "{g:?}");
            }
        }
    }

    #[test]
    fn minimal_primes_examples() {
        let j_k2 = MonomialIdeal::variables(2, [0, 1]);
        assert_eq!(sets(&minimal_primes(&j_k2).unwrap()), vec![vec![0, 1]]);
        let j_p3 = ideal(3, &[&[0, 1, 0], &[1, 0, 1]]);
        assert_eq!(
            sets(&minimal_primes(&j_p3).unwrap()),
            vec![vec![0, 1], vec![1, 2]]
        );
        let principal = ideal(2, &[&[1, 1]]);
        assert_eq!(
            sets(&minimal_primes(&principal).unwrap()),
            vec![vec![0], vec![1]]
        );
        assert_eq!(
            minimal_primes(&ideal(2, &[&[2, 0]])),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn prime_power_examples() {
        let v01 = VertexSet::from_indices(2, [0, 1]).unwrap();
        assert_eq!(
            prime_power(&v01, 2).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1], &[0, 2]])
        );
        let v0 = VertexSet::from_indices(1, [0]).unwrap();
        assert_eq!(prime_power(&v0, 3).unwrap(), ideal(1, &[&[3]]));
        assert_eq!(prime_power(&VertexSet::full(3), 2).unwrap().len(), 6);
        assert!(prime_power(&VertexSet::empty(3), 2).is_err());
    }

    #[test]
    fn symbolic_power_examples() {
        let caps = Caps::default();
        let j_p3 = cover_ideal(&Graph::path(3).unwrap());
        assert_eq!(
            symbolic_power(&j_p3, 2, &caps).unwrap(),
            ideal(3, &[&[0, 2, 0], &[1, 1, 1], &[2, 0, 2]])
        );
        assert_eq!(symbolic_power(&j_p3, 1, &caps).unwrap(), j_p3);
        assert!(symbolic_power(&j_p3, 0, &caps).unwrap().is_unit());

        let j_k3 = cover_ideal(&Graph::complete(3).unwrap());
        let sym = symbolic_power(&j_k3, 2, &caps).unwrap();
        let ord = j_k3.power(2).unwrap();
        let witness = m(&[1, 1, 1]);
        assert!(sym.contains(&witness));
        assert!(!ord.contains(&witness));
        assert_ne!(sym, ord);
        assert_eq!(
            symbolic_power(&ideal(2, &[&[2, 0]]), 2, &caps),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn symbolic_power_of_cover_ideal_matches_edgewise_intersection() {
        let caps = Caps::default();
        for n in 1..=5 {
            for g in crate::graph::enumerate_graphs(n, false).unwrap() {
                let j = cover_ideal(&g);
                for k in 1..=3 {
                    assert_eq!(
                        symbolic_power(&j, k, &caps).unwrap(),
                        edge_symbolic_power(&g, k, &caps).unwrap(),
                        "{g:?} k={k}"
                    );
                }
            }
        }
    }
}
