//! Invariants checked against the brute-force oracles, by proptest on random
//! inputs and exhaustively where the space is small.

mod common;

use std::collections::BTreeSet;

use common::{permutations, to_mask, Oracle};
use kernelfix::dynamics::{apply_word, Configuration};
use kernelfix::enumerate::{canonical_form, enumerate_forms, enumerate_graphs};
use kernelfix::generators::{cycle, path, wheel};
use kernelfix::io::parse_graph6;
use kernelfix::permis::{
    certify_no_permis_tethered, comparability_permis, find_permis, find_permis_with, simplicial_permis, Certificate,
    NoPermisMemo, PermisAnswer, SearchOptions,
};
use kernelfix::reductions::{
    colony_to_dominion, nondominion_to_fixingset, setcover_to_colony, verify_preservation, ReductionInput,
    SetCoverInstance,
};
use kernelfix::sets::{is_colony, is_dominion, is_non_dominion, is_vertex_cover};
use kernelfix::words::{check_prop2, fixes, fixing_set, normalize_word, prefixes, suffixes};
use kernelfix::{DominionRule, Graph, VertexSet, Word};
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn graph_and_word(max_n: usize, max_len: usize) -> impl Strategy<Value = (Graph, Word)> {
    graph_strategy(max_n).prop_flat_map(move |g| {
        let n = g.n();
        (Just(g), prop::collection::vec(0..n, 0..=max_len).prop_map(Word))
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph_strategy(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), (0u64..1 << n).prop_map(VertexSet))
    })
}

fn bools(s: VertexSet, n: usize) -> Vec<bool> {
    (0..n).map(|v| s.contains(v)).collect()
}

fn permis_exists(g: &Graph) -> bool {
    let oracle = Oracle::new(g);
    permutations(&(0..g.n()).collect::<Vec<_>>()).iter().any(|p| oracle.fixes(p))
}

proptest! {
    #[test]
    fn normalization_preserves_the_map((g, w) in graph_and_word(6, 10)) {
        let normal = normalize_word(&g, &w).unwrap();
        prop_assert!(normal.len() <= w.len());
        for bits in 0..1u64 << g.n() {
            let x = Configuration::new(g.n(), bits);
            prop_assert_eq!(apply_word(&g, x, &w).unwrap(), apply_word(&g, x, &normal).unwrap());
        }
        prop_assert_eq!(normalize_word(&g, &normal).unwrap(), normal);
    }

    #[test]
    fn structural_verdicts_match_semantics((g, w) in graph_and_word(6, 8)) {
        let oracle = Oracle::new(&g);
        let p = prefixes(&g, &w).unwrap();
        let s = suffixes(&g, &w).unwrap();
        let f = fixes(&g, &w).unwrap();
        prop_assert_eq!(p.answer, oracle.prefixes(w.letters()));
        prop_assert_eq!(s.answer, oracle.suffixes(w.letters()));
        prop_assert_eq!(f.answer, oracle.fixes(w.letters()));
        prop_assert!(p.validate(&g, &w) && s.validate(&g, &w) && f.validate(&g, &w));
    }

    #[test]
    fn extending_the_visited_set_keeps_both_properties((g, w) in graph_and_word(6, 6), extra in 0usize..6) {
        let v = extra % g.n();
        let longer = w.concat(&Word(vec![v]));
        let oracle = Oracle::new(&g);
        if oracle.prefixes(w.letters()) {
            prop_assert!(prefixes(&g, &longer).unwrap().answer);
        }
        if suffixes(&g, &w).unwrap().answer {
            prop_assert!(is_non_dominion(&g, longer.visited(), DominionRule::Closed));
            prop_assert!(oracle.suffixes(Word(vec![v]).concat(&w).letters()));
        }
    }

    #[test]
    fn split_condition_is_sufficient((g, w) in graph_and_word(6, 9), a in 0usize..10, b in 0usize..10) {
        let (a, b) = (a % (w.len() + 1), b % (w.len() + 1));
        if check_prop2(&g, &w, a, b).unwrap() {
            prop_assert!(Oracle::new(&g).fixes(w.letters()));
        }
    }

    #[test]
    fn colony_is_a_maximal_independent_set_in_the_complement((g, s) in graph_and_set(7)) {
        let oracle = Oracle::new(&g);
        let rest: Vec<bool> = (0..g.n()).map(|v| !s.contains(v)).collect();
        let dual = oracle.subsets().any(|i| {
            oracle.kernel(&i) && (0..g.n()).all(|v| !i[v] || rest[v])
        });
        let witness = is_colony(&g, s);
        prop_assert_eq!(witness.is_some(), dual);
        prop_assert_eq!(witness.is_some(), oracle.colony(&bools(s, g.n())));
        if let Some(w) = witness {
            prop_assert!(w.validate(&g, g.vertices(), s));
            for v in s.iter() {
                let mut smaller = s;
                smaller.remove(v);
                prop_assert!(is_colony(&g, smaller).is_some());
            }
        }
    }

    #[test]
    fn dominion_witnesses_validate((g, w) in graph_and_set(7)) {
        let oracle = Oracle::new(&g);
        for (rule, closed) in [(DominionRule::Closed, true), (DominionRule::Open, false)] {
            let verdict = is_dominion(&g, w, rule);
            prop_assert_eq!(verdict.is_some(), oracle.dominion(&bools(w, g.n()), closed));
            if let Some(witness) = verdict {
                prop_assert!(witness.validate(&g, w, rule));
            }
        }
    }

    #[test]
    fn fixing_set_is_cover_and_non_dominion((g, s) in graph_and_set(6)) {
        let expected = is_vertex_cover(&g, s).is_ok() && is_non_dominion(&g, s, DominionRule::Closed);
        prop_assert_eq!(fixing_set(&g, s).unwrap().answer, expected);
    }

    #[test]
    fn constructive_routes_agree_with_search(g in graph_strategy(7)) {
        let searched = find_permis(&g);
        for route in [comparability_permis(&g).unwrap(), simplicial_permis(&g).unwrap()].into_iter().flatten() {
            prop_assert!(route.is_permutation_of(g.n()) && Oracle::new(&g).fixes(route.letters()));
            prop_assert_eq!(searched.answer, PermisAnswer::Exists);
        }
    }

    #[test]
    fn tethered_certificates_are_sound(extra in prop::collection::vec(any::<bool>(), 8), hub in any::<bool>()) {
        // C7 on 0..=6, vertex 7 joined to all of it or none, vertex 8 anywhere.
        let mut edges: Vec<(usize, usize)> = cycle(7).unwrap().edges().collect();
        if hub {
            edges.extend((0..7).map(|v| (v, 7)));
        }
        edges.extend((0..8).filter(|&v| extra[v]).map(|v| (v, 8)));
        let g = Graph::new(9, edges).unwrap();
        if let Some(cert) = certify_no_permis_tethered(&g, &mut NoPermisMemo::new()).unwrap() {
            let Certificate::Tethered { set, .. } = cert else { panic!("unexpected certificate kind") };
            prop_assert!(g.is_tethered(set));
            prop_assert!(!permis_exists(&g.induced_subgraph(set).0));
            let options = SearchOptions { max_order: 9, ..SearchOptions::default() };
            prop_assert_eq!(find_permis_with(&g, &options).answer, PermisAnswer::NotExists);
        }
    }

    #[test]
    fn reductions_preserve_answers((g, s) in graph_and_set(5)) {
        for input in [
            ReductionInput::ColonyToDominion { graph: g.clone(), set: s },
            ReductionInput::NonDominionToFixingSet { graph: g.clone(), set: s },
            ReductionInput::FixingSetToFixingWord { graph: g.clone(), set: s },
        ] {
            prop_assert!(verify_preservation(&input).unwrap().preserved);
        }
    }
}

#[test]
fn pruned_search_matches_brute_force_up_to_six() {
    for n in 1..=6 {
        for g in enumerate_graphs(n).unwrap() {
            let oracle = Oracle::new(&g);
            let first = permutations(&(0..n).collect::<Vec<_>>()).into_iter().find(|p| oracle.fixes(p));
            for parallel in [false, true] {
                let options = SearchOptions { parallel, ..SearchOptions::default() };
                let verdict = find_permis_with(&g, &options);
                assert_eq!(verdict.word.map(|w| w.0), first, "{g:?}, parallel = {parallel}");
            }
        }
    }
}

#[test]
fn tethered_route_agrees_on_wheels_and_holes() {
    let mut memo = NoPermisMemo::new();
    assert!(certify_no_permis_tethered(&wheel(8).unwrap(), &mut memo).unwrap().is_some());
    // The certificate only looks at proper subsets, so C7 itself has none.
    assert!(certify_no_permis_tethered(&cycle(7).unwrap(), &mut memo).unwrap().is_none());
    assert!(certify_no_permis_tethered(&path(6).unwrap(), &mut memo).unwrap().is_none());
}

#[test]
fn enumeration_matches_labelled_dedup_and_atlas() {
    for (n, expected) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
        let dedup: BTreeSet<_> = Oracle::all_labelled(n).iter().map(|g| canonical_form(g).unwrap()).collect();
        let forms: BTreeSet<_> = enumerate_forms(n).unwrap().into_iter().collect();
        assert_eq!(dedup.len(), expected);
        assert_eq!(forms, dedup);
    }
    let atlas: BTreeSet<_> =
        include_str!("data/atlas7.g6").lines().map(|l| canonical_form(&parse_graph6(l).unwrap()).unwrap()).collect();
    assert_eq!(atlas, enumerate_forms(7).unwrap().into_iter().collect());
}

#[test]
fn set_cover_no_instance_chain_to_dominion() {
    // Set cover no-instance: C1 = {}, C2 = {x1}, C3 = {x2, x3}, C4 = {x4}, k = 2.
    let inst = SetCoverInstance { n: 4, subsets: vec![vec![], vec![0], vec![1, 2], vec![3]], k: 2 };
    let colony = setcover_to_colony(&inst).unwrap();
    assert_eq!(colony.graph.n(), 12);
    assert!(!Oracle::new(&colony.graph).colony(&bools(colony.target, 12)));
    let dominion = colony_to_dominion(&colony.graph, colony.target).unwrap();
    assert_eq!(dominion.graph.n(), 12 + 8 + 1);
    assert!(is_dominion(&dominion.graph, dominion.target, DominionRule::Closed).is_none());
    assert!(is_dominion(&dominion.graph, dominion.target, DominionRule::Open).is_none());
    let report =
        verify_preservation(&ReductionInput::ColonyToDominion { graph: colony.graph.clone(), set: colony.target })
            .unwrap();
    assert!(report.preserved && !report.source_answer);
}

#[test]
fn figure_derived_nondominion_instance() {
    // Figure-derived: path a-b-c-d-e, S = {a, b}, T = {c, d, e}.
    let g = path(5).unwrap();
    let s = VertexSet(0b00011);
    let oracle = Oracle::new(&g);
    assert!(oracle.dominion(&bools(s, 5), true) && oracle.dominion(&bools(s, 5), false));
    let out = nondominion_to_fixingset(&g, s).unwrap();
    assert_eq!(out.graph.n(), 15);
    assert_eq!(out.target.len(), 12);
    let hat = Oracle::new(&out.graph);
    let omega = out.target.to_vec();
    let ww: Vec<usize> = omega.iter().chain(&omega).copied().collect();
    assert!(!hat.fixes(&ww));
    assert!(!fixing_set(&out.graph, out.target).unwrap().answer);
}

#[test]
fn fixing_sets_are_exactly_visited_sets_of_fixing_words() {
    // Every fixing word of length <= 4 on graphs up to 4 vertices visits a fixing set.
    for n in 1..=4 {
        for g in Oracle::all_labelled(n) {
            let oracle = Oracle::new(&g);
            let mut words: Vec<Vec<usize>> = vec![vec![]];
            for _ in 0..4 {
                words = words.iter().flat_map(|w| (0..n).map(move |v| [w.clone(), vec![v]].concat())).collect();
                for w in &words {
                    if oracle.fixes(w) {
                        let set = VertexSet(to_mask(&(0..n).map(|v| w.contains(&v)).collect::<Vec<_>>()));
                        assert!(fixing_set(&g, set).unwrap().answer, "{g:?} {w:?}");
                    }
                }
            }
        }
    }
}
