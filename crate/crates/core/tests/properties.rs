mod common;

use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::graph_from_flags;
use rvc_core::{
    canonical_form, exists_rainbow_path, exists_rainbow_path_oracle, find_rainbow_coloring, parse_graph6, rvc,
    to_graph6, Graph, VertexColoring,
};

fn graph_upto(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |flags| graph_from_flags(n, &flags))
    })
}

fn connected_upto(max_n: usize) -> impl Strategy<Value = Graph> {
    graph_upto(max_n).prop_filter("connected", Graph::is_connected)
}

fn permuted(g: &Graph) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    let g = g.clone();
    Just((0..g.order()).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(move |perm| (g.clone(), perm))
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_upto(64)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn graph6_round_trip(g in graph_upto(62)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(&parse_graph6(&text).unwrap(), &g);
        prop_assert_eq!(to_graph6(&parse_graph6(&text).unwrap()).unwrap(), text);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_upto(8).prop_flat_map(|g| permuted(&g))) {
        let moved = g.permute(&perm).unwrap();
        prop_assert_eq!(canonical_form(&moved).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn rvc_ignores_labels((g, perm) in connected_upto(7).prop_flat_map(|g| permuted(&g))) {
        prop_assert_eq!(rvc(&g.permute(&perm).unwrap()).unwrap(), rvc(&g).unwrap());
    }

    #[test]
    fn palette_search_is_monotone(g in connected_upto(7), k in 0usize..6) {
        if find_rainbow_coloring(&g, k).unwrap().is_some() {
            prop_assert!(find_rainbow_coloring(&g, k + 1).unwrap().is_some());
        }
    }

    #[test]
    fn distant_pairs_in_complement(g in connected_upto(10)) {
        let d = g.diameter().unwrap();
        if d >= 3 {
            let comp = g.complement();
            prop_assert!(comp.is_connected());
            let limit = if d >= 4 { 2 } else { 3 };
            prop_assert!(comp.diameter().unwrap() <= limit);
        }
    }

    #[test]
    fn extra_vertex_costs_at_most_one_color(
        g in connected_upto(6),
        picks in subsequence((0..6usize).collect::<Vec<_>>(), 1..=6),
    ) {
        let mask = picks.iter().filter(|&&v| v < g.order()).fold(0u64, |m, &v| m | 1 << v);
        prop_assume!(mask != 0);
        let extended = g.with_vertex(mask).unwrap();
        prop_assert!(rvc(&extended).unwrap() <= rvc(&g).unwrap() + 1);
    }
}

/// 1000 random (graph, coloring) samples each at n = 7 and n = 8.
#[test]
fn rainbow_search_matches_path_enumeration_on_random_samples() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for n in [7usize, 8] {
        for sample in 0..1000 {
            let density = rng.gen_range(0.2..0.8);
            let flags: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(density)).collect();
            let g = graph_from_flags(n, &flags);
            let k = rng.gen_range(1..=4);
            let colors: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
            let c = VertexColoring::new(k, colors).unwrap();
            let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|s| ((s + 1)..n).map(move |t| (s, t))).collect();
            pairs.shuffle(&mut rng);
            for &(s, t) in pairs.iter().take(8) {
                assert_eq!(
                    exists_rainbow_path(&g, &c, s, t).unwrap(),
                    exists_rainbow_path_oracle(&g, &c, s, t).unwrap(),
                    "n={n} sample={sample} pair=({s},{t}) graph={} colors={:?}",
                    to_graph6(&g).unwrap(),
                    c.colors()
                );
            }
        }
    }
}
