use proptest::prelude::*;

use specrep_core::adjacency::{classify_pair, oriented_pattern, pattern};
use specrep_core::classical::Classical;
use specrep_core::coxeter::{parse_type, CoxeterLabel};
use specrep_core::duality::dual;
use specrep_core::graph::{build_graph, covers_match_edges, poset_closure};
use specrep_core::induction::CheckSets;

fn family_rank() -> impl Strategy<Value = (Classical, u32)> {
    prop_oneof![
        (Just(Classical::A), 2u32..9),
        (Just(Classical::B), 1u32..7),
        (Just(Classical::D), 2u32..7),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // Matching at the smallest common length agrees with matching after
    // simultaneous expansion.
    #[test]
    fn patterns_survive_expansion(
        (fam, r) in family_rank(),
        i in any::<prop::sample::Index>(),
        j in any::<prop::sample::Index>(),
        steps in 1usize..3,
    ) {
        let cs = fam.enumerate(r).unwrap();
        let (x, y) = (i.get(&cs), j.get(&cs));
        prop_assume!(x != y);
        let base = oriented_pattern(x, y).unwrap();
        let len = x.entries().len().max(y.entries().len()) + steps * fam.step();
        let wide = pattern(&x.representative(len), &y.representative(len), fam).unwrap();
        prop_assert_eq!(base, wide);
        prop_assert_eq!(classify_pair(x, y).unwrap(), classify_pair(y, x).unwrap());
    }

    // The generated pair sets do not depend on how far the search expands.
    #[test]
    fn check_sets_are_confluent((fam, r) in family_rank()) {
        let mut wide = CheckSets::with_extra(fam, 2);
        let mut tight = CheckSets::with_extra(fam, 0);
        prop_assert_eq!(wide.get(r).clone(), tight.get(r).clone());
    }
}

fn graph_types() -> impl Strategy<Value = String> {
    prop_oneof![
        (2u32..7).prop_map(|n| format!("A{n}")),
        (1u32..6).prop_map(|n| format!("B{n}")),
        (2u32..6).prop_map(|n| format!("D{n}")),
        (5u32..13).prop_map(|n| format!("I2({n})")),
        prop::sample::select(vec!["E6", "E7", "E8", "F4", "G2", "H3", "H4"]).prop_map(String::from),
        ((1u32..4), (2u32..4)).prop_map(|(a, d)| format!("A{a}xD{d}")),
        (1u32..4).prop_map(|b| format!("B{b}xG2")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    // Duality is an orientation-reversing automorphism, the closure round
    // trips to the edge set, and a-values add over products.
    #[test]
    fn graph_invariants(t in graph_types()) {
        let ty = parse_type(&t).unwrap();
        let g = build_graph(&ty).unwrap();
        let pairs: std::collections::BTreeSet<_> = g.edge_pairs().into_iter().collect();
        for e in &g.edges {
            let (x, y) = (g.index_of(&dual(&e.hi)).unwrap(), g.index_of(&dual(&e.lo)).unwrap());
            prop_assert!(pairs.contains(&(x, y)));
            prop_assert!(e.a_diff > 0);
        }
        for n in &g.nodes {
            prop_assert_eq!(&dual(&dual(n)), n);
        }
        let p = poset_closure(&g).unwrap();
        prop_assert!(covers_match_edges(&g, &p));
        let maxima = p.maximal();
        prop_assert_eq!(maxima.len(), 1);
        prop_assert_eq!(g.a_values[maxima[0]], 0);
        let factor_max: u32 = ty
            .factors()
            .iter()
            .map(|&l: &CoxeterLabel| *build_graph(&specrep_core::CompositeType::irreducible(l)).unwrap().a_values.iter().max().unwrap())
            .sum();
        prop_assert_eq!(*g.a_values.iter().max().unwrap(), factor_max);
    }
}
