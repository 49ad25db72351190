use madsq_core::coloring::{
    chromatic_number, greedy_dsatur, is_k_choosable_exhaustive, list_color, Budget, ListAssignment,
};
use madsq_core::density::{
    check_mad_bound, max_density_exhaustive, max_density_subgraph, min_potential_containing,
    min_potential_exhaustive, potential, PotentialParams,
};
use madsq_core::discharging::sweep::sweep_at;
use madsq_core::discharging::{classify, lemma34_surgery, predicate_violations, run_discharging};
use madsq_core::ratio::{frac, int, Rational};
use madsq_core::{square, Graph, GraphBuilder};
use num_traits::Zero;
use proptest::prelude::*;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::weighted(0.3), pairs).prop_map(move |bits| {
            let mut b = GraphBuilder::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        b.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            b.build()
        })
    })
}

/// A hub of degree `hub_degree` plus a sparse random graph on the remaining vertices.
fn hub_graph_strategy(hub_degree: usize, extra: usize) -> impl Strategy<Value = Graph> {
    let n = 1 + hub_degree + extra;
    let pairs = (n - 1) * (n - 2) / 2;
    proptest::collection::vec(proptest::bool::weighted(0.06), pairs).prop_map(move |bits| {
        let mut b = GraphBuilder::new(n);
        for v in 1..=hub_degree {
            b.add_edge(0, v).unwrap();
        }
        let mut k = 0;
        for u in 1..n {
            for v in u + 1..n {
                if bits[k] {
                    b.add_edge(u, v).unwrap();
                }
                k += 1;
            }
        }
        b.build()
    })
}

fn bfs_square(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let dist = g.bfs_distances(u);
        for (v, d) in dist.iter().enumerate().skip(u + 1) {
            if matches!(d, Some(d) if *d <= 2) {
                out.push((u, v));
            }
        }
    }
    out
}

const PARAMS: [(i64, i64); 3] = [(2, 1), (7, 4), (3, 1)];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn square_matches_bfs(g in graph_strategy(14)) {
        let sq = square(&g);
        prop_assert_eq!(sq.edges().collect::<Vec<_>>(), bfs_square(&g));
    }

    #[test]
    fn flow_density_matches_enumeration(g in graph_strategy(12)) {
        let flow = max_density_subgraph(&g).unwrap();
        let exh = max_density_exhaustive(&g).unwrap();
        prop_assert_eq!(&flow.density, &exh.density);
        prop_assert_eq!(&flow.mad, &(&flow.density * int(2)));
        let inner = g.edges().filter(|&(u, v)| flow.witness.contains(&u) && flow.witness.contains(&v)).count();
        prop_assert_eq!(frac(inner as i64, flow.witness.len() as i64), flow.density);
    }

    #[test]
    fn potential_bound_iff_mad_bound(g in graph_strategy(12)) {
        let dens = max_density_exhaustive(&g).unwrap();
        for (a, b) in PARAMS {
            let p = PotentialParams::new(a, b).unwrap();
            let minp = min_potential_exhaustive(&g, p).unwrap();
            let mad_below = dens.mad < p.mad_bound();
            prop_assert_eq!(minp.value >= 1, mad_below);
            prop_assert_eq!(potential(&g, &minp.witness, p).unwrap(), minp.value);
            let cert = check_mad_bound(&g, p).unwrap();
            prop_assert_eq!(cert.holds, mad_below);
            prop_assert_ne!(cert.exhaustive_agrees, Some(false));
        }
    }

    #[test]
    fn forced_minimum_matches_enumeration(g in graph_strategy(10), u in 0usize..10, v in 0usize..10) {
        let n = g.vertex_count();
        let forced: Vec<usize> = [u % n, v % n].into_iter().collect();
        let p = PotentialParams::new(7, 4).unwrap();
        let got = min_potential_containing(&g, p, &forced).unwrap();
        let mut best = i64::MAX;
        for mask in 1u32..(1 << n) {
            if forced.iter().all(|&f| mask >> f & 1 == 1) {
                let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                best = best.min(potential(&g, &set, p).unwrap());
            }
        }
        prop_assert_eq!(got.value, best);
        prop_assert_eq!(potential(&g, &got.witness, p).unwrap(), best);
    }

    #[test]
    fn density_is_monotone_under_edge_insertion(g in graph_strategy(12), u in 0usize..12, v in 0usize..12) {
        let n = g.vertex_count();
        let (u, v) = (u % n, v % n);
        prop_assume!(u != v && !g.has_edge(u, v));
        let before = max_density_subgraph(&g).unwrap().density;
        let after = max_density_subgraph(&g.with_edge(u, v).unwrap()).unwrap().density;
        prop_assert!(after >= before);
    }

    #[test]
    fn discharging_conserves_charge(g in graph_strategy(16), c in 2i64..5) {
        let ledger = run_discharging(&g, c).unwrap();
        prop_assert!(ledger.is_consistent());
        prop_assert_eq!(ledger.total_final(), int(2 * g.edge_count() as i64));
        prop_assert_eq!(&ledger, &run_discharging(&g, c).unwrap());
    }

    #[test]
    fn surgery_degree_law(g in graph_strategy(12)) {
        for u in g.vertices().filter(|&u| g.degree(u) == 3) {
            let s = lemma34_surgery(&g, u).unwrap();
            prop_assert_eq!(s.graph.vertex_count(), g.vertex_count() + 2);
            prop_assert_eq!(s.graph.edge_count(), g.edge_count() + 3);
            for (&old, &new) in g.neighbors(u).iter().zip(s.x.iter()) {
                prop_assert_eq!(s.graph.degree(new), g.degree(old) + 1);
            }
            for &y in &s.y {
                prop_assert_eq!(s.graph.degree(y), 2);
            }
            for v in g.vertices().filter(|&v| v != u && !g.neighbors(u).contains(&v)) {
                prop_assert_eq!(s.graph.degree(s.vertex_map[v].unwrap()), g.degree(v));
            }
        }
    }

    #[test]
    fn surgery_keeps_potential_positive(g in graph_strategy(10)) {
        let p = PotentialParams::mad4_minus(2);
        prop_assume!(min_potential_exhaustive(&g, p).unwrap().value >= 1);
        for u in g.vertices().filter(|&u| g.degree(u) == 3) {
            if g.neighbors(u).iter().all(|&x| g.degree(x) <= 7) {
                let s = lemma34_surgery(&g, u).unwrap();
                prop_assert!(min_potential_exhaustive(&s.graph, p).unwrap().value >= 1);
            }
        }
    }

    #[test]
    fn uniform_lists_match_chromatic_number(g in graph_strategy(9)) {
        let chi = chromatic_number(&g, None, Budget::unlimited()).unwrap().chi;
        let n = g.vertex_count();
        prop_assert!(list_color(&g, &ListAssignment::uniform(n, chi as u32), Budget::unlimited()).unwrap().is_some());
        if chi > 1 {
            prop_assert!(list_color(&g, &ListAssignment::uniform(n, chi as u32 - 1), Budget::unlimited()).unwrap().is_none());
        }
        prop_assert!(greedy_dsatur(&g).colors_used() >= chi);
    }

    #[test]
    fn choosability_is_monotone(g in graph_strategy(6)) {
        let chi = chromatic_number(&g, None, Budget::unlimited()).unwrap().chi;
        let mut prev = false;
        for k in 1..=3 {
            let ch = is_k_choosable_exhaustive(&g, k, Budget::unlimited()).unwrap().choosable;
            prop_assert!(!prev || ch, "choosable at {} but not {}", k - 1, k);
            if ch {
                prop_assert!(chi <= k);
            }
            prev = ch;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Vertices with no predicate violation within distance two end at or above
    /// the sweep's minimum for their case.
    #[test]
    fn ledger_respects_sweep_minimum(g in hub_graph_strategy(21, 14)) {
        let c = 2;
        let delta = g.max_degree();
        let run = sweep_at(c, delta).unwrap();
        let ledger = run_discharging(&g, c).unwrap();
        for v in g.vertices() {
            let clean = g.ball(v, 2).into_iter().all(|w| predicate_violations(&g, c, w).unwrap().is_empty());
            if !clean {
                continue;
            }
            let nbrs = g.neighbors(v);
            let two = nbrs.iter().filter(|&&w| g.degree(w) == 2).count();
            let four_plus = nbrs.iter().filter(|&&w| g.degree(w) >= 4).count();
            let case = classify(c, g.degree(v), two, four_plus);
            prop_assert!(case.is_some(), "clean vertex {} is not covered", v);
            let summary = run.case(case.unwrap());
            prop_assert!(summary.is_some(), "sweep has no profile for case {:?}", case);
            prop_assert!(ledger.final_charge[v] >= summary.unwrap().min_charge);
        }
    }
}

#[test]
fn sweep_is_clean_for_small_c() {
    for c in 2..=4 {
        let run = sweep_at(c, (14 * c - 7) as usize).unwrap();
        assert_eq!(run.violations(), 0, "c = {c}");
        assert_eq!(run.uncovered, 0, "c = {c}");
        let target = frac(4 * c - 1, c);
        assert!(run.cases.iter().all(|s| s.min_charge >= target));
    }
}

#[test]
fn regular_graphs_above_huge_threshold_keep_their_charge() {
    // K_15 is 14-regular and 14 = 8c - 2 for c = 2
    let g = Graph::complete(15);
    let ledger = run_discharging(&g, 2).unwrap();
    assert_eq!(ledger.initial, ledger.final_charge);
    assert!(ledger.total_final() - ledger.total_initial() == Rational::zero());
}

#[test]
fn surgery_on_triangle_with_pendant() {
    let g = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
    let s = lemma34_surgery(&g, 0).unwrap();
    let edges: Vec<_> = s.graph.edges().collect();
    assert_eq!(
        edges,
        vec![(0, 1), (0, 3), (0, 5), (1, 3), (1, 4), (2, 4), (2, 5)]
    );
    assert_eq!(s.y, [3, 4, 5]);
    assert_eq!(s.x, [0, 1, 2]);
}

proptest! {
    #[test]
    fn dimacs_and_json_round_trip(g in graph_strategy(12)) {
        use madsq_core::io::{from_dimacs, from_json, to_dimacs, to_json};
        let g = g.with_labels([(0, "root".to_string())].into()).unwrap();
        let back = from_dimacs(&to_dimacs(&g)).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(back.labels(), g.labels());
        let back = from_json(&to_json(&g).to_string()).unwrap();
        prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
        prop_assert_eq!(back.vertex_count(), g.vertex_count());
    }
}
