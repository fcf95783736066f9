use perclab::closure::{
    addable_edges, close_generic, close_k2t, close_k2t_rounds, closure, equivalence_classes, percolates,
};
use perclab::density::{density, density_of, max_density_bruteforce, max_density_flow};
use perclab::experiments::{percolation_probability, sample_gnp_with, trial_rng, Sequential, TrialConfig};
use perclab::gadgets::complete_bipartite;
use perclab::io::{parse_edge_list, write_edge_list};
use perclab::witness::{f_procedure_t4, gprime_t4, lower_witness, verify_witness};
use perclab::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), prop::collection::vec(prop::bool::weighted(0.35), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
}

/// A graph and a supergraph on the same vertices.
fn nested(max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
    graph(max_n)
        .prop_flat_map(|g| {
            let n = g.n();
            (
                Just(g),
                prop::collection::vec(prop::bool::weighted(0.1), n * (n - 1) / 2),
            )
        })
        .prop_map(|(g, extra)| {
            let mut edges: Vec<_> = g.edges().collect();
            let mut k = 0;
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    if extra[k] && !g.has_edge(u, v) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let bigger = Graph::from_edges(g.n(), &edges).unwrap();
            (g, bigger)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sequential_closure_matches_generic_oracle(g in graph(10), t in 2usize..=4) {
        let (hat, _) = close_k2t(&g, t).unwrap();
        prop_assert_eq!(hat, close_generic(&g, &complete_bipartite(2, t)).unwrap());
    }

    #[test]
    fn engines_agree(g in graph(24), t in 2usize..=5) {
        let (seq, trace) = close_k2t(&g, t).unwrap();
        let (rounds, round_trace) = close_k2t_rounds(&g, t).unwrap();
        prop_assert_eq!(&seq, &rounds);
        prop_assert_eq!(&seq, &closure(&g, t).unwrap());
        prop_assert_eq!(seq.is_complete(), percolates(&g, t).unwrap());
        prop_assert_eq!(trace.replay(&g).unwrap(), seq.clone());
        prop_assert_eq!(round_trace.replay(&g).unwrap(), seq);
    }

    #[test]
    fn first_step_is_addable(g in graph(14), t in 2usize..=4) {
        let addable = addable_edges(&g, t).unwrap();
        let (_, trace) = close_k2t(&g, t).unwrap();
        match trace.steps.first() {
            Some(step) => {
                let (u, v) = step.edge;
                prop_assert!(addable.contains(&(u.min(v), u.max(v))));
            }
            None => prop_assert!(addable.is_empty()),
        }
    }

    #[test]
    fn closure_is_monotone_and_idempotent((g, bigger) in nested(30), t in 2usize..=5) {
        let small = closure(&g, t).unwrap();
        let large = closure(&bigger, t).unwrap();
        prop_assert!(small.is_subgraph_of(&large));
        prop_assert_eq!(closure(&small, t).unwrap(), small.clone());
        prop_assert!(addable_edges(&small, t).unwrap().is_empty());
    }

    #[test]
    fn common_neighbours_force_twins(g in graph(30), t in 2usize..=5) {
        let hat = closure(&g, t).unwrap();
        for x in 0..g.n() {
            for y in x + 1..g.n() {
                if g.common_neighbor_count(x, y).unwrap() + 1 >= t {
                    let mut nx = hat.neighbor_set(x);
                    let mut ny = hat.neighbor_set(y);
                    nx.remove(y);
                    ny.remove(x);
                    prop_assert_eq!(nx, ny);
                }
            }
        }
    }

    #[test]
    fn twin_classes_partition_vertices(g in graph(20), t in 2usize..=5) {
        let classes = equivalence_classes(&g, t).unwrap();
        let mut seen: Vec<usize> = classes.concat();
        seen.sort();
        prop_assert_eq!(seen, (0..g.n()).collect::<Vec<_>>());
    }

    #[test]
    fn flow_matches_bruteforce(g in graph(14)) {
        let brute = max_density_bruteforce(&g).unwrap();
        let flow = max_density_flow(&g).unwrap();
        prop_assert_eq!(brute.value, flow.value);
        prop_assert!(brute.check(&g));
        prop_assert!(flow.check(&g));
        prop_assert!(flow.value >= density(&g).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        let text = write_edge_list(&g, &["generated".to_string()]);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn lower_witness_family_is_valid_and_maximal(g in graph(16), t in 4usize..=5) {
        let w = lower_witness(&g, t).unwrap();
        let mut used = VertexSet::empty(g.n());
        for f in &w.families {
            let (a, b) = f.pair;
            prop_assert_eq!(f.side.len(), t - 1);
            for &x in f.side.iter().chain([&a, &b]) {
                prop_assert!(used.insert(x), "vertex {} reused", x);
            }
            for &x in &f.side {
                prop_assert!(g.has_edge(a, x) && g.has_edge(b, x));
            }
        }
        let free: Vec<usize> = (0..g.n()).filter(|&v| !used.contains(v)).collect();
        for (i, &a) in free.iter().enumerate() {
            for &b in &free[i + 1..] {
                let common = g.common_neighbors(a, b).filter(|&x| !used.contains(x)).count();
                prop_assert!(common < t - 1, "pair ({}, {}) still has a copy", a, b);
            }
        }
        prop_assert!(g.is_subgraph_of(&w.gprime));
        if verify_witness(&g, t, &w.gprime).unwrap() {
            prop_assert!(!percolates(&g, t).unwrap());
        }
    }

    #[test]
    fn t4_components_keep_their_counts(g in graph(18)) {
        if let Ok(run) = f_procedure_t4(&g) {
            for c in &run.components {
                prop_assert_eq!(c.vertices.len(), 2 * c.ell + 3 * c.ell_prime + 5);
                prop_assert_eq!(c.edges, 3 * c.ell + 4 * c.ell_prime + 6);
                prop_assert!(4 * c.ell + c.ell_prime <= 4);
                prop_assert_eq!(g.edges_within(&c.vertices), c.edges);
            }
            let gp = gprime_t4(&g, &run.components);
            if verify_witness(&g, 4, &gp).unwrap() {
                let hat = closure(&g, 4).unwrap();
                for c in &run.components {
                    for &(a, b) in &c.pairs {
                        prop_assert!(!hat.has_edge(a, b));
                    }
                }
            }
        }
    }
}

#[test]
fn violations_always_locate_a_dense_subgraph() {
    let mut seen = 0;
    for seed in 0..400u64 {
        let g = sample_gnp_with(14, 0.3, &mut trial_rng(seed, 0)).unwrap();
        if let Err(v) = f_procedure_t4(&g) {
            seen += 1;
            let report = v.dense_subgraph(&g);
            assert!(v.reaches_bound(&g), "seed {seed}: {v} only reaches {}", report.value);
            assert_eq!(density_of(&g, &report.witness), report.value);
        }
    }
    assert!(seen > 0, "sweep never exercised a violation");
}

#[test]
fn percolation_frequency_is_monotone_under_coupling() {
    let mut last = 0.0;
    for k in 0..12 {
        let p = 0.02 + 0.02 * k as f64;
        let est = percolation_probability(
            &TrialConfig {
                n: 60,
                t: 4,
                p,
                trials: 60,
                master_seed: 77,
            },
            &Sequential,
        )
        .unwrap();
        assert!(est.fraction >= last, "p = {p}: {} < {last}", est.fraction);
        last = est.fraction;
    }
    assert_eq!(last, 1.0);
}

#[test]
fn coupled_indicator_is_monotone_per_trial() {
    for i in 0..40 {
        let mut was = false;
        for k in 0..15 {
            let p = 0.02 + 0.015 * k as f64;
            let g = sample_gnp_with(50, p, &mut trial_rng(5, i)).unwrap();
            let now = percolates(&g, 4).unwrap();
            assert!(now || !was, "trial {i} stopped percolating at p = {p}");
            was = now;
        }
    }
}
