use coverreg::{
    betti_numbers, betti_via_lcm_order_complex, cover_ideal, lcm_lattice, reduced_homology_ranks,
    regularity, symbolic_power, upper_koszul_complex, Caps, FieldTag, Graph, Monomial,
    MonomialIdeal, SimplicialComplexView,
};
use proptest::prelude::*;

const N: usize = 4;

fn monomial(max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, N).prop_map(|e| Monomial::new(e).unwrap())
}

fn ideal(max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(max_exp), 1..=max_gens)
        .prop_map(|gens| MonomialIdeal::minimalize(N, gens).unwrap())
}

fn squarefree_ideal() -> impl Strategy<Value = MonomialIdeal> {
    ideal(1, 5)
}

fn proper(i: &MonomialIdeal) -> bool {
    !i.is_unit() && !i.is_zero()
}

fn graph(n: usize) -> impl Strategy<Value = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
        let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
        Graph::from_edges(n, edges).unwrap()
    })
}

const CAPS: Caps = Caps {
    generators: 200_000,
    lattice: 100_000,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn intersection_membership(a in ideal(2, 4), b in ideal(2, 4), m in monomial(3)) {
        let both = a.intersect(&b).unwrap();
        prop_assert_eq!(both.contains(&m), a.contains(&m) && b.contains(&m));
    }

    #[test]
    fn colon_membership(a in ideal(2, 4), u in monomial(2), m in monomial(3)) {
        let q = a.colon(&u).unwrap();
        prop_assert_eq!(q.contains(&m), a.contains(&m.mul(&u).unwrap()));
    }

    #[test]
    fn product_contains_pairwise_products(a in ideal(2, 3), b in ideal(2, 3)) {
        let p = a.product(&b).unwrap();
        for x in a.generators() {
            for y in b.generators() {
                prop_assert!(p.contains(&x.mul(y).unwrap()));
            }
        }
        prop_assert!(p.is_subset_of(&a) && p.is_subset_of(&b));
    }

    #[test]
    fn ordinary_power_sits_inside_symbolic_power(i in squarefree_ideal(), k in 1u32..=3) {
        let ordinary = i.power(k).unwrap();
        let symbolic = symbolic_power(&i, k, &CAPS).unwrap();
        prop_assert!(ordinary.is_subset_of(&symbolic));
    }

    #[test]
    fn symbolic_powers_decrease(i in squarefree_ideal(), k in 1u32..=3) {
        let a = symbolic_power(&i, k, &CAPS).unwrap();
        let b = symbolic_power(&i, k + 1, &CAPS).unwrap();
        prop_assert!(b.is_subset_of(&a));
    }

    #[test]
    fn koszul_homology_matches_euler_characteristic(i in ideal(2, 4)) {
        prop_assume!(proper(&i));
        for a in lcm_lattice(&i, CAPS.lattice).unwrap() {
            let c = upper_koszul_complex(&i, &a).unwrap();
            for f in [FieldTag::Gf2, FieldTag::Rational] {
                let alternating: i64 = reduced_homology_ranks(&c, f)
                    .unwrap()
                    .iter()
                    .map(|&(d, b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
                    .sum();
                prop_assert_eq!(alternating, c.reduced_euler_characteristic());
            }
        }
    }

    #[test]
    fn random_complexes_match_euler_characteristic(facets in prop::collection::vec(1u32..64, 1..6)) {
        let faces = facets.iter().flat_map(|&f| (0..64u32).filter(move |s| s & !f == 0));
        let c = SimplicialComplexView::new((0..6).collect(), faces).unwrap();
        for f in [FieldTag::Gf2, FieldTag::Rational, FieldTag::Prime(3)] {
            let alternating: i64 = reduced_homology_ranks(&c, f)
                .unwrap()
                .iter()
                .map(|&(d, b)| if d.rem_euclid(2) == 0 { b as i64 } else { -(b as i64) })
                .sum();
            prop_assert_eq!(alternating, c.reduced_euler_characteristic());
        }
    }

    #[test]
    fn zeroth_betti_numbers_are_the_generators(i in ideal(2, 5)) {
        prop_assume!(proper(&i));
        let t = betti_numbers(&i, FieldTag::Gf2, &CAPS).unwrap();
        let zeroth: Vec<&Monomial> = t.entries().filter(|e| e.0 == 0).map(|e| e.1).collect();
        prop_assert_eq!(zeroth.len(), i.len());
        prop_assert!(t.entries().filter(|e| e.0 == 0).all(|e| e.2 == 1));
        for g in i.generators() {
            prop_assert_eq!(t.get(0, g), 1);
        }
    }

    #[test]
    fn regularity_is_at_least_the_degree(i in ideal(3, 5)) {
        prop_assume!(proper(&i));
        let reg = regularity(&i, FieldTag::Gf2, &CAPS).unwrap();
        prop_assert!(reg >= i.degree().unwrap());
    }

    #[test]
    fn betti_engines_agree(i in ideal(2, 5)) {
        prop_assume!(proper(&i));
        for f in [FieldTag::Gf2, FieldTag::Rational] {
            let a = betti_numbers(&i, f, &CAPS).unwrap();
            let b = betti_via_lcm_order_complex(&i, f, &CAPS).unwrap();
            prop_assert_eq!(a.diff(&b), Vec::<String>::new());
        }
    }

    #[test]
    fn alternating_betti_sum_is_the_rank(i in ideal(2, 5)) {
        // a nonzero ideal has rank 1 as a module
        prop_assume!(proper(&i));
        let t = betti_numbers(&i, FieldTag::Rational, &CAPS).unwrap();
        let sum: i64 = t.entries().map(|(k, _, b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(sum, 1);
    }

    #[test]
    fn text_form_round_trips(i in ideal(3, 5)) {
        let back: MonomialIdeal = i.to_string().parse().unwrap();
        prop_assert_eq!(back, i);
    }

    #[test]
    fn cover_ideal_generators_are_exactly_the_covers(g in graph(6)) {
        let j = cover_ideal(&g);
        for mask in 0u64..64 {
            let m = Monomial::squarefree(6, (0..6).filter(|i| mask >> i & 1 == 1));
            let covers = g.edges().iter().all(|&(a, b)| mask >> a & 1 == 1 || mask >> b & 1 == 1);
            prop_assert_eq!(j.contains(&m), covers);
        }
    }
}
