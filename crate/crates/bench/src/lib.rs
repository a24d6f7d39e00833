//! Fixed inputs shared by the benchmarks.

use rvc_core::constructions::{cycle_graph, path_graph, theorem2_graph};
use rvc_core::Graph;

/// Named graphs with nontrivial searches, smallest first.
pub fn solver_inputs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in [6, 8, 10] {
        out.push((format!("path{n}"), path_graph(n).unwrap()));
    }
    for n in [7, 9, 11] {
        out.push((format!("cycle{n}"), cycle_graph(n).unwrap()));
    }
    for n in [8, 12] {
        let g = theorem2_graph(n).unwrap();
        out.push((format!("diam2-{n}"), g.complement()));
    }
    out
}

/// A graph on `n` vertices built from a fixed xorshift stream, so runs are comparable.
pub fn scrambled(n: usize, seed: u64) -> Graph {
    let mut state = seed | 1;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state & 1 == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
