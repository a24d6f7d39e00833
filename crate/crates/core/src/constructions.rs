//! Standard graph families and the extremal pairs for the sum
//! `rvc(G) + rvc(complement G)`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::solver::{rvc, RvcError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{family} needs n >= {min}, got {n}")]
    OrderTooSmall { family: &'static str, min: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rvc(#[from] RvcError),
    #[error("{family} on {n} vertices: expected {expected}, computed {found}")]
    Postcondition {
        family: &'static str,
        n: usize,
        expected: String,
        found: String,
    },
    #[error("lemma instances need a nonempty neighbor set")]
    EmptyNeighborhood,
}

fn require(family: &'static str, n: usize, min: usize) -> Result<(), ConstructionError> {
    if n < min {
        Err(ConstructionError::OrderTooSmall { family, min, n })
    } else {
        Ok(())
    }
}

/// `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph, ConstructionError> {
    require("path", n, 1)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?)
}

/// `0 - 1 - ... - (n-1) - 0`.
pub fn cycle_graph(n: usize) -> Result<Graph, ConstructionError> {
    require("cycle", n, 3)?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

pub fn complete_graph(n: usize) -> Result<Graph, ConstructionError> {
    require("complete graph", n, 1)?;
    Ok(Graph::from_edges(
        n,
        (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))),
    )?)
}

/// Star on `n` vertices with center 0.
pub fn star_graph(n: usize) -> Result<Graph, ConstructionError> {
    require("star", n, 1)?;
    Ok(Graph::from_edges(n, (1..n).map(|i| (0, i)))?)
}

/// A graph together with its complement and both exact values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NgPair {
    #[serde(skip)]
    pub g: Graph,
    #[serde(skip)]
    pub gbar: Graph,
    pub n: usize,
    pub rvc_g: usize,
    pub rvc_gbar: usize,
    pub sum: usize,
}

impl NgPair {
    /// Computes both sides exactly. Fails if either side is disconnected.
    pub fn new(g: Graph) -> Result<Self, ConstructionError> {
        let gbar = g.complement();
        let rvc_g = rvc(&g)?;
        let rvc_gbar = rvc(&gbar)?;
        Ok(NgPair {
            n: g.order(),
            g,
            gbar,
            rvc_g,
            rvc_gbar,
            sum: rvc_g + rvc_gbar,
        })
    }
}

/// The path and its complement: `rvc = n - 2` and `1`, so the sum reaches
/// the upper bound `n - 1`.
pub fn path_complement_pair(n: usize) -> Result<NgPair, ConstructionError> {
    require("path-complement pair", n, 5)?;
    let pair = NgPair::new(path_graph(n)?)?;
    if (pair.rvc_g, pair.rvc_gbar) != (n - 2, 1) {
        return Err(ConstructionError::Postcondition {
            family: "path-complement pair",
            n,
            expected: format!("rvc = ({}, 1)", n - 2),
            found: format!("rvc = ({}, {})", pair.rvc_g, pair.rvc_gbar),
        });
    }
    Ok(pair)
}

/// Graph with diameter 2 whose complement also has diameter 2.
///
/// Labels: hub `v = 0`, spokes `v_i = i` for `i = 1..=k`, clique vertices
/// `u_j = k + j`. Odd `n = 2k + 1` joins each `v_i` to `u_i`; even `n = 2k`
/// has only `u_1..u_{k-1}`, joins `v_i` to `u_i` for `i < k` and `v_k` to
/// `u_{k-1}`. The hub is adjacent to every spoke and the `u` vertices form a
/// clique.
pub fn theorem2_graph(n: usize) -> Result<Graph, ConstructionError> {
    require("diameter-two family", n, 5)?;
    let k = n / 2;
    let u = |j: usize| k + j;
    let clique_size = if n % 2 == 1 { k } else { k - 1 };

    let mut edges: Vec<(usize, usize)> = (1..=k).map(|i| (0, i)).collect();
    if n % 2 == 1 {
        edges.extend((1..=k).map(|i| (i, u(i))));
    } else {
        edges.extend((1..k).map(|i| (i, u(i))));
        edges.push((k, u(k - 1)));
    }
    for a in 1..=clique_size {
        for b in (a + 1)..=clique_size {
            edges.push((u(a), u(b)));
        }
    }
    let g = Graph::from_edges(n, edges)?;

    let diameters = (g.diameter(), g.complement().diameter());
    if diameters != (Ok(2), Ok(2)) {
        return Err(ConstructionError::Postcondition {
            family: "diameter-two family",
            n,
            expected: "diameters (2, 2)".into(),
            found: format!("diameters {diameters:?}"),
        });
    }
    Ok(g)
}

/// [`theorem2_graph`] with its complement: the sum reaches the lower bound 2.
pub fn lower_bound_pair(n: usize) -> Result<NgPair, ConstructionError> {
    let pair = NgPair::new(theorem2_graph(n)?)?;
    if pair.sum != 2 {
        return Err(ConstructionError::Postcondition {
            family: "diameter-two family",
            n,
            expected: "sum 2".into(),
            found: format!("sum {}", pair.sum),
        });
    }
    Ok(pair)
}

/// Outcome of adding one vertex to a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    /// Order of the original graph.
    pub n: usize,
    /// `rvc` of the original graph.
    pub k: usize,
    /// Number of neighbors of the new vertex.
    pub q: usize,
    /// `rvc` after adding the vertex.
    pub rvc_extended: usize,
    /// `q >= n - k`.
    pub premise: bool,
    /// `rvc_extended <= k`.
    pub conclusion: bool,
    /// `rvc_extended <= k + 1`, which must hold for every neighbor set.
    pub within_one: bool,
}

impl Lemma1Report {
    /// Premise held but the value still grew.
    pub fn is_violation(&self) -> bool {
        self.premise && !self.conclusion
    }
}

/// Adds a vertex adjacent to exactly `neighbors` and compares exact values
/// before and after.
pub fn verify_lemma1_instance(g: &Graph, neighbors: u64) -> Result<Lemma1Report, ConstructionError> {
    if neighbors == 0 {
        return Err(ConstructionError::EmptyNeighborhood);
    }
    let k = rvc(g)?;
    let extended = g.with_vertex(neighbors)?;
    let rvc_extended = rvc(&extended)?;
    let (n, q) = (g.order(), neighbors.count_ones() as usize);
    Ok(Lemma1Report {
        n,
        k,
        q,
        rvc_extended,
        premise: q + k >= n,
        conclusion: rvc_extended <= k,
        within_one: rvc_extended <= k + 1,
    })
}
