//! Exhaustive checks over every small graph.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use rvc_core::canon::packed_bits;
use rvc_core::census::{census_run, enumerate_connected_graphs, ingest_graph6, summarize};
use rvc_core::constructions::{path_graph, theorem2_graph};
use rvc_core::{
    canonical_form, enumerate_graphs, find_rainbow_coloring, is_rainbow_vertex_connected, parse_graph6, rvc_exact,
    to_graph6, Graph, VertexColoring,
};

use common::{all_labeled, connected_classes, connected_labeled};

fn histogram(values: impl IntoIterator<Item = usize>) -> Vec<(usize, usize)> {
    let mut counts = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

#[test]
fn codec_and_complement_on_all_labeled_graphs() {
    for n in 1..=6 {
        for g in all_labeled(n) {
            let text = to_graph6(&g).unwrap();
            let back = parse_graph6(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_graph6(&back).unwrap(), text);
            assert_eq!(g.complement().complement(), g);
        }
    }
}

#[test]
fn far_apart_graphs_have_close_complements() {
    let mut diameter_three_tight = 0;
    for g in connected_labeled(1, 6) {
        let d = g.diameter().unwrap();
        if d >= 3 {
            let comp = g.complement();
            assert!(comp.is_connected(), "{}", to_graph6(&g).unwrap());
            let dc = comp.diameter().unwrap();
            if d >= 4 {
                assert!(dc <= 2, "{}", to_graph6(&g).unwrap());
            } else {
                assert!(dc <= 3, "{}", to_graph6(&g).unwrap());
                diameter_three_tight += usize::from(dc == 3);
            }
        }
    }
    // diameter exactly 3 does not force a close complement
    assert!(diameter_three_tight > 0);
    let p4 = path_graph(4).unwrap();
    assert_eq!((p4.diameter(), p4.complement().diameter()), (Ok(3), Ok(3)));
}

#[test]
fn class_counts_match_published_tables() {
    // connected graphs on n unlabeled vertices
    let connected: Vec<usize> = (1..=7)
        .map(|n| enumerate_connected_graphs(n, true).unwrap().count())
        .collect();
    assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    // graphs whose complement is also connected: all graphs minus twice the disconnected ones
    let both: Vec<usize> = (2..=7).map(|n| enumerate_graphs(n, true).unwrap().count()).collect();
    assert_eq!(both, vec![0, 0, 1, 8, 68, 662]);
}

/// Full `n!` relabeling scan, written independently of the library search.
fn brute_canonical(g: &Graph) -> u64 {
    fn permutations(items: Vec<usize>) -> Vec<Vec<usize>> {
        if items.len() <= 1 {
            return vec![items];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.clone();
            let head = rest.remove(i);
            for mut tail in permutations(rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    permutations((0..g.order()).collect())
        .into_iter()
        .map(|p| packed_bits(&g.permute(&p).unwrap()))
        .min()
        .unwrap()
}

#[test]
fn dedup_agrees_with_naive_classification() {
    for n in 4..=6 {
        let naive: BTreeSet<u64> = all_labeled(n)
            .filter(|g| g.is_connected() && g.complement().is_connected())
            .map(|g| brute_canonical(&g))
            .collect();
        let reps: Vec<u64> = enumerate_graphs(n, true).unwrap().map(|g| packed_bits(&g)).collect();
        assert_eq!(reps, naive.into_iter().collect::<Vec<_>>(), "n={n}");
    }
}

#[test]
fn injective_coloring_always_works() {
    for g in connected_labeled(1, 6) {
        assert!(is_rainbow_vertex_connected(&g, &VertexColoring::injective(g.order())).unwrap());
    }
}

#[test]
fn rvc_bounds_on_all_connected_labeled_graphs() {
    for g in connected_labeled(1, 6) {
        let n = g.order();
        let d = g.diameter().unwrap();
        let r = rvc_exact(&g).unwrap();
        assert!(r.value + 1 >= d);
        if d <= 2 {
            assert_eq!(r.value, d.saturating_sub(1));
        }
        if !g.is_complete() {
            assert!(r.value <= n - 2);
        }
        assert_eq!(r.value == 0, g.is_complete());
    }
}

#[test]
fn witnesses_are_tight() {
    for g in connected_classes(1, 6) {
        let r = rvc_exact(&g).unwrap();
        assert!(is_rainbow_vertex_connected(&g, &r.witness).unwrap());
        if r.value > 0 {
            assert_eq!(find_rainbow_coloring(&g, r.value - 1).unwrap(), None);
        }
    }
}

#[test]
fn rvc_distribution_matches_reference() {
    // frozen from a brute-force search over all colorings and simple paths
    let expected: [&[(usize, usize)]; 6] = [
        &[(0, 1)],
        &[(0, 1)],
        &[(0, 1), (1, 1)],
        &[(0, 1), (1, 4), (2, 1)],
        &[(0, 1), (1, 14), (2, 5), (3, 1)],
        &[(0, 1), (1, 59), (2, 42), (3, 9), (4, 1)],
    ];
    for (i, want) in expected.iter().enumerate() {
        let n = i + 1;
        let got = histogram(
            enumerate_connected_graphs(n, true)
                .unwrap()
                .map(|g| rvc_exact(&g).unwrap().value),
        );
        assert_eq!(got, want.to_vec(), "n={n}");
    }
}

#[test]
fn census_sum_distributions_match_reference() {
    // frozen from the same brute-force reference
    let expected: [(usize, &[(usize, usize)]); 4] = [
        (4, &[(4, 1)]),
        (5, &[(2, 1), (4, 7)]),
        (6, &[(2, 2), (3, 8), (4, 56), (5, 2)]),
        (7, &[(2, 18), (3, 136), (4, 484), (5, 22), (6, 2)]),
    ];
    for (n, want) in expected {
        let (records, _) = census_run(enumerate_graphs(n, true).unwrap(), n).unwrap();
        assert_eq!(histogram(records.iter().map(|r| r.sum)), want.to_vec(), "n={n}");
    }
}

#[test]
fn census_sharpness_both_ways() {
    for n in 5..=7 {
        let (_, summary) = census_run(enumerate_graphs(n, true).unwrap(), n).unwrap();
        assert_eq!(summary.max_sum, Some(n - 1));
        assert_eq!(summary.min_sum, Some(2));
        assert!(summary.violations.is_empty());
        let path = to_graph6(&canonical_form(&path_graph(n).unwrap()).unwrap().to_graph()).unwrap();
        let low = to_graph6(&canonical_form(&theorem2_graph(n).unwrap()).unwrap().to_graph()).unwrap();
        assert!(summary.max_witnesses.contains(&path), "n={n}");
        assert!(summary.min_witnesses.contains(&low), "n={n}");
    }
}

#[test]
fn labeled_and_dedup_runs_agree_on_extremes() {
    for n in 4..=6 {
        let (_, labeled) = census_run(enumerate_graphs(n, false).unwrap(), n).unwrap();
        let (_, classes) = census_run(enumerate_graphs(n, true).unwrap(), n).unwrap();
        assert_eq!(
            (labeled.min_sum, labeled.max_sum),
            (classes.min_sum, classes.max_sum),
            "n={n}"
        );
    }
}

#[test]
fn census_is_independent_of_worker_count() {
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| census_run(enumerate_graphs(6, false).unwrap(), 6).unwrap())
    };
    let (one, s1) = run(1);
    let (four, s4) = run(4);
    assert_eq!(one, four);
    assert_eq!(s1, s4);
    assert_eq!(summarize(6, &one), s1);
}

#[test]
fn ingesting_all_five_vertex_graphs_matches_enumeration() {
    let text: String = all_labeled(5).map(|g| to_graph6(&g).unwrap() + "\n").collect();
    let ingested = ingest_graph6(text.as_bytes(), true).unwrap();
    let forms = |gs: Vec<Graph>| {
        let mut f: Vec<_> = gs.iter().map(|g| canonical_form(g).unwrap()).collect();
        f.sort();
        f
    };
    let enumerated: Vec<Graph> = enumerate_graphs(5, false).unwrap().collect();
    assert_eq!(ingested.graphs.len(), enumerated.len());
    // 728 connected labeled graphs, so 296 disconnected ones and 296 with disconnected complements
    assert_eq!(ingested.filtered, 2 * 296);
    assert_eq!(enumerated.len(), 1024 - 2 * 296);
    assert_eq!(forms(ingested.graphs), forms(enumerated));
}
