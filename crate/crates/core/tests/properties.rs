use proptest::prelude::*;

use regturan::construct::{
    c5_blowup_extremal, c7_blowup_extremal, construct_for, k4_extremal, odd_girth_blowup, odd_girth_parameters,
    regularized_turan,
};
use regturan::formulas::{ex_turan, rex_formula, RexStatus};
use regturan::graph::Graph;
use regturan::graph6;
use regturan::oracle::{exists_regular_free, rex_exact, verify_claim, Search, SearchBudget};
use regturan::pattern::{
    contains_clique, contains_cycle_of_length, contains_k4_minus_e, contains_subgraph, odd_girth, ForbiddenPattern,
};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Random connected patterns on 2..=5 vertices without isolated vertices.
fn arb_pattern() -> impl Strategy<Value = ForbiddenPattern> {
    (2usize..=5)
        .prop_flat_map(|k| proptest::collection::vec(any::<bool>(), k * (k - 1) / 2).prop_map(move |b| (k, b)))
        .prop_filter_map("connected pattern", |(k, bits)| {
            let g = graph_from_bits(k, &bits);
            ForbiddenPattern::custom(g.edges().collect()).ok()
        })
}

/// Tries every injective map of the pattern's vertices into `g`.
fn naive_contains(g: &Graph, p: &Graph) -> bool {
    fn rec(g: &Graph, p: &Graph, image: &mut Vec<usize>) -> bool {
        let i = image.len();
        if i == p.order() {
            return true;
        }
        for x in 0..g.order() {
            if image.contains(&x) {
                continue;
            }
            if (0..i).all(|j| !p.has_edge(i, j) || g.has_edge(x, image[j])) {
                image.push(x);
                if rec(g, p, image) {
                    return true;
                }
                image.pop();
            }
        }
        false
    }
    rec(g, p, &mut Vec::new())
}

fn two_colorable(g: &Graph) -> bool {
    let mut color = vec![None; g.order()];
    for s in 0..g.order() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            let c = color[u].unwrap();
            for v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!c);
                        stack.push(v);
                    }
                    Some(cv) if cv == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let s = graph6::encode(&g).unwrap();
        let back = graph6::decode(s.as_bytes()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(graph6::encode(&back).unwrap(), s);
    }

    #[test]
    fn handshake_and_regular_parity(g in arb_graph(16)) {
        let sum: usize = g.degree_sequence().iter().sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
        if let Some(d) = g.is_regular() {
            prop_assert_eq!((g.order() * d) % 2, 0);
        }
    }

    #[test]
    fn delete_edges_is_undone_by_adding_back(g in arb_graph(12), keep in any::<u64>()) {
        let chosen: Vec<_> = g.edges().enumerate().filter(|(i, _)| keep >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
        let smaller = g.delete_edges(&chosen).unwrap();
        prop_assert_eq!(smaller.order(), g.order());
        prop_assert_eq!(smaller.edge_count(), g.edge_count() - chosen.len());
        let restored = Graph::from_edges(g.order(), smaller.edges().chain(chosen.iter().copied())).unwrap();
        prop_assert_eq!(restored, g);
    }

    #[test]
    fn subgraph_search_matches_naive_injections(g in arb_graph(9), f in arb_pattern()) {
        prop_assert_eq!(contains_subgraph(&g, &f).unwrap(), naive_contains(&g, &f.to_graph()));
    }

    #[test]
    fn named_patterns_match_naive_injections(g in arb_graph(8)) {
        for f in ["K3", "K4", "K4-e", "C4", "C5"] {
            let f: ForbiddenPattern = f.parse().unwrap();
            prop_assert_eq!(contains_subgraph(&g, &f).unwrap(), naive_contains(&g, &f.to_graph()), "{}", f);
        }
    }

    #[test]
    fn triangle_tests_agree(g in arb_graph(12)) {
        let tri = ForbiddenPattern::custom(vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        let a = contains_clique(&g, 3);
        prop_assert_eq!(a, contains_cycle_of_length(&g, 3));
        prop_assert_eq!(a, contains_subgraph(&g, &tri).unwrap());
        if contains_k4_minus_e(&g) {
            prop_assert!(a);
        }
    }

    #[test]
    fn bipartite_graphs_have_no_odd_cycles(a in 1usize..7, b in 1usize..7, keep in any::<u64>()) {
        let full = Graph::complete_multipartite(&[a, b]);
        let drop: Vec<_> = full.edges().enumerate().filter(|(i, _)| keep >> (i % 64) & 1 == 1).map(|(_, e)| e).collect();
        let g = full.delete_edges(&drop).unwrap();
        prop_assert!(two_colorable(&g));
        prop_assert_eq!(odd_girth(&g), None);
        for len in (3..=a + b).step_by(2) {
            prop_assert!(!contains_cycle_of_length(&g, len));
        }
    }

    #[test]
    fn regularized_turan_is_regular_and_clique_free(r in 3usize..7, extra in 0usize..30) {
        let n = r + 1 + extra;
        match regularized_turan(n, r) {
            Ok(res) => {
                prop_assert_eq!(res.graph.is_regular(), Some(res.claimed_degree));
                prop_assert!(res.claimed_degree * r <= (r - 1) * n);
                prop_assert!(!contains_clique(&res.graph, r + 1));
                prop_assert!(res.claimed_edges <= ex_turan(n, r).unwrap());
            }
            Err(e) => prop_assert!(n == 5 && r == 4, "n={} r={}: {}", n, r, e),
        }
    }

    #[test]
    fn blowups_hit_their_edge_counts(k in 0usize..12) {
        let n = 2 * k + 5;
        let c5 = c5_blowup_extremal(n).unwrap();
        prop_assert_eq!(c5.claimed_edges, n * (n / 5));
        prop_assert!(!contains_clique(&c5.graph, 3));
        let n7 = n + 2;
        let c7 = c7_blowup_extremal(n7).unwrap();
        prop_assert_eq!(c7.claimed_edges, n7 * (n7 / 7));
        prop_assert!(odd_girth(&c7.graph).is_none_or(|g| g >= 7));
        let k4 = k4_extremal(n).unwrap();
        prop_assert_eq!(k4.claimed_edges, n * (n / 3));
        prop_assert!(!contains_clique(&k4.graph, 4));
    }

    #[test]
    fn odd_girth_blowup_degree(g in prop::sample::select(vec![3usize, 5, 7, 9]), n in 5usize..60) {
        if let Some((a, _)) = odd_girth_parameters(n, g) {
            let r = odd_girth_blowup(n, g).unwrap();
            prop_assert_eq!(r.claimed_degree, 2 * a);
            prop_assert!(odd_girth(&r.graph).is_none_or(|og| og >= g + 2));
        }
    }

    #[test]
    fn constructions_never_beat_exact_formulas(n in 1usize..40, i in 0usize..6) {
        let f: ForbiddenPattern = ["K3", "K4", "K5", "K4-e", "C5", "C7"][i].parse().unwrap();
        let v = rex_formula(n, &f);
        if let (Ok(c), RexStatus::Exact) = (construct_for(n, &f), v.status) {
            prop_assert!(c.claimed_edges <= v.value.unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_witnesses_verify(n in 2usize..=8, i in 0usize..6) {
        let f: ForbiddenPattern = ["K3", "K4", "K4-e", "C4", "C5", "custom:0-1,1-2,2-0,0-3"][i].parse().unwrap();
        let o = rex_exact(n, &f, &SearchBudget::unlimited()).unwrap();
        let w = o.rex.witness.clone().unwrap();
        prop_assert!(verify_claim(&w, &f, o.rex.degree().unwrap()).passed());
        if let Ok(c) = construct_for(n, &f) {
            prop_assert!(c.claimed_edges <= o.rex.value.unwrap());
        }
    }

    #[test]
    fn search_is_deterministic(n in 3usize..=8, d in 1usize..=4) {
        prop_assume!(d < n && (n * d) % 2 == 0);
        let f = ForbiddenPattern::cycle(4).unwrap();
        let a = exists_regular_free(n, d, &f, &SearchBudget::unlimited()).unwrap();
        let b = exists_regular_free(n, d, &f, &SearchBudget::unlimited().sequential()).unwrap();
        prop_assert_eq!(&a, &b);
        if let Search::Found(g) = a {
            prop_assert!(verify_claim(&g, &f, d).passed());
        }
    }
}
