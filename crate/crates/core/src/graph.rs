//! Immutable simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` neighbor mask, so traversals and complements are
//! word operations.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the cap of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("permutation of length {len} does not match {n} vertices")]
    BadPermutation { len: usize, n: usize },
}

/// A simple undirected graph with vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Repeated pairs collapse to one edge.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (a, b) in edges {
            g.check_vertex(a)?;
            g.check_vertex(b)?;
            if a == b {
                return Err(GraphError::Loop(a));
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    /// Builds a graph from raw neighbor masks, validating every invariant.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self, GraphError> {
        let n = adj.len();
        check_order(n)?;
        let full = full_mask(n);
        for (i, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                let vertex = (row & !full).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            if row >> i & 1 == 1 {
                return Err(GraphError::Loop(i));
            }
            let mut rest = row;
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if adj[j] >> i & 1 == 0 {
                    // asymmetric row: treat the missing back edge as a bad endpoint
                    return Err(GraphError::VertexOutOfRange { vertex: j, n });
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Neighbor mask of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as `(a, b)` pairs with `a < b`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| {
            ((a + 1)..self.n)
                .filter(move |&b| self.has_edge(a, b))
                .map(move |b| (a, b))
        })
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Graph on the same vertices whose edges are exactly the non-edges of `self`.
    pub fn complement(&self) -> Graph {
        let full = full_mask(self.n);
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, &row)| !row & full & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_complete(&self) -> bool {
        let full = full_mask(self.n);
        self.adj.iter().enumerate().all(|(i, &row)| row | (1u64 << i) == full)
    }

    /// Mask of vertices reachable from `start`, including `start`.
    pub fn reachable_from(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0) == full_mask(self.n)
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut depth = 0;
        while frontier != 0 {
            depth += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            next &= !seen;
            seen |= next;
            let mut fresh = next;
            while fresh != 0 {
                let v = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                dist[v] = Some(depth);
            }
            frontier = next;
        }
        dist
    }

    /// Largest breadth-first eccentricity of `source`, or `None` when some
    /// vertex is unreachable.
    pub fn eccentricity(&self, source: usize) -> Option<usize> {
        let full = full_mask(self.n);
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        let mut depth = 0;
        while seen != full {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            if frontier == 0 {
                return None;
            }
            seen |= frontier;
            depth += 1;
        }
        Some(depth)
    }

    /// Maximum shortest-path distance over all vertex pairs. Disconnected
    /// graphs are rejected.
    pub fn diameter(&self) -> Result<usize, GraphError> {
        let mut best = 0;
        for v in 0..self.n {
            best = best.max(self.eccentricity(v).ok_or(GraphError::Disconnected)?);
        }
        Ok(best)
    }

    /// Relabels vertices so that new vertex `i` is old vertex `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation {
                len: perm.len(),
                n: self.n,
            });
        }
        let mut inverse = vec![usize::MAX; self.n];
        for (new, &old) in perm.iter().enumerate() {
            self.check_vertex(old)?;
            if inverse[old] != usize::MAX {
                return Err(GraphError::BadPermutation {
                    len: perm.len(),
                    n: self.n,
                });
            }
            inverse[old] = new;
        }
        let adj = perm
            .iter()
            .map(|&old| {
                let mut row = 0u64;
                let mut rest = self.adj[old];
                while rest != 0 {
                    let u = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    row |= 1 << inverse[u];
                }
                row
            })
            .collect();
        Ok(Graph { n: self.n, adj })
    }

    /// Adds vertex `n` adjacent to exactly the vertices in `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> Result<Graph, GraphError> {
        if self.n + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + 1));
        }
        if neighbors & !full_mask(self.n) != 0 {
            let vertex = (neighbors & !full_mask(self.n)).trailing_zeros() as usize;
            return Err(GraphError::VertexOutOfRange { vertex, n: self.n });
        }
        let v = self.n;
        let mut adj = self.adj.clone();
        for (u, row) in adj.iter_mut().enumerate() {
            if neighbors >> u & 1 == 1 {
                *row |= 1 << v;
            }
        }
        adj.push(neighbors);
        Ok(Graph { n: v + 1, adj })
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::NoVertices),
        n if n > MAX_VERTICES => Err(GraphError::TooManyVertices(n)),
        _ => Ok(()),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
