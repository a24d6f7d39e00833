#![allow(dead_code)]

use rvc_core::census::enumerate_connected_graphs;
use rvc_core::Graph;

/// Graph from a list of pair flags in graph6 column order.
pub fn graph_from_flags(n: usize, flags: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if flags[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Every connected labeled graph with `lo <= n <= hi`.
pub fn connected_labeled(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| enumerate_connected_graphs(n, false).unwrap())
        .collect()
}

/// One connected graph per isomorphism class with `lo <= n <= hi`.
pub fn connected_classes(lo: usize, hi: usize) -> Vec<Graph> {
    (lo..=hi)
        .flat_map(|n| enumerate_connected_graphs(n, true).unwrap())
        .collect()
}

/// Every labeled graph on `n` vertices, connected or not.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0..1u64 << pairs).map(move |m| rvc_core::canon::graph_from_packed(n, m))
}
