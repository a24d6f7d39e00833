//! Vertex colorings and the rainbow-path predicates.
//!
//! A path is rainbow when its internal vertices carry pairwise distinct
//! colors; endpoint colors never matter. The search works on states
//! `(vertex, colors used so far)`. Any walk from `s` to `t` whose internal
//! vertices avoid `s`, `t` and repeated colors cannot repeat an internal
//! vertex either, so reachability in the state graph is exactly the existence
//! of a rainbow simple path.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Palettes are tracked as `u64` masks.
pub const MAX_COLORS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{0} colors exceeds the cap of {MAX_COLORS}")]
    TooManyColors(usize),
    #[error("vertex {vertex} has color {color}, outside 0..{k}")]
    ColorOutOfRange { vertex: usize, color: usize, k: usize },
    #[error("an empty palette carries no colors, got {0}")]
    NonEmptyWithoutPalette(usize),
    #[error("coloring covers {found} vertices, graph has {expected}")]
    WrongLength { expected: usize, found: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("path endpoints must differ, got {0} twice")]
    SameEndpoints(usize),
}

/// Assignment of colors `0..k` to vertices. With `k == 0` the color list is
/// empty and no vertex can serve as an internal path vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexColoring {
    k: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if k > MAX_COLORS {
            return Err(ColoringError::TooManyColors(k));
        }
        if k == 0 && !colors.is_empty() {
            return Err(ColoringError::NonEmptyWithoutPalette(colors.len()));
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(VertexColoring { k, colors })
    }

    /// The empty palette used for complete graphs.
    pub fn empty() -> Self {
        VertexColoring {
            k: 0,
            colors: Vec::new(),
        }
    }

    /// Every vertex gets color 0.
    pub fn uniform(n: usize) -> Self {
        VertexColoring {
            k: 1,
            colors: vec![0; n],
        }
    }

    /// Vertex `v` gets color `v`.
    pub fn injective(n: usize) -> Self {
        assert!(n <= MAX_COLORS);
        VertexColoring {
            k: n,
            colors: (0..n).collect(),
        }
    }

    /// All vertices on color 0 of a `k`-color palette; `k` must be nonzero.
    pub(crate) fn zeroed(k: usize, n: usize) -> Self {
        debug_assert!(k > 0 && k <= MAX_COLORS);
        VertexColoring { k, colors: vec![0; n] }
    }

    /// Caller keeps every entry below the palette size.
    pub(crate) fn colors_mut(&mut self) -> &mut [usize] {
        &mut self.colors
    }

    /// Parses 1-based colors as used in user-facing output.
    pub fn from_one_based(colors: &[usize]) -> Result<Self, ColoringError> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if let Some((vertex, _)) = colors.iter().enumerate().find(|(_, &c)| c == 0) {
            return Err(ColoringError::ColorOutOfRange { vertex, color: 0, k });
        }
        VertexColoring::new(k, colors.iter().map(|c| c - 1).collect())
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.colors.iter().map(|c| c + 1).collect()
    }

    #[inline]
    pub fn color_of(&self, v: usize) -> Option<usize> {
        self.colors.get(v).copied()
    }

    /// A coloring fits a graph when it colors every vertex, or is the empty palette.
    pub fn check_fits(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.k == 0 || self.colors.len() == g.order() {
            Ok(())
        } else {
            Err(ColoringError::WrongLength {
                expected: g.order(),
                found: self.colors.len(),
            })
        }
    }
}

/// Dense or hashed visited set over `(vertex, color mask)` states.
enum Visited {
    Dense { bits: Vec<u64>, k: usize },
    Sparse(HashSet<(usize, u64)>),
}

const DENSE_STATE_LIMIT: usize = 1 << 16;

impl Visited {
    fn new(n: usize, k: usize) -> Self {
        if k < 20 && n << k <= DENSE_STATE_LIMIT {
            Visited::Dense {
                bits: vec![0; (n << k).div_ceil(64)],
                k,
            }
        } else {
            Visited::Sparse(HashSet::new())
        }
    }

    /// Marks the state; returns false when it was already present.
    #[inline]
    fn insert(&mut self, v: usize, mask: u64) -> bool {
        match self {
            Visited::Dense { bits, k } => {
                let idx = (v << *k) | mask as usize;
                let (w, b) = (idx / 64, idx % 64);
                let fresh = bits[w] >> b & 1 == 0;
                bits[w] |= 1 << b;
                fresh
            }
            Visited::Sparse(set) => set.insert((v, mask)),
        }
    }
}

fn rainbow_path_unchecked(g: &Graph, c: &VertexColoring, s: usize, t: usize) -> bool {
    if g.has_edge(s, t) {
        return true;
    }
    if c.k == 0 {
        return false;
    }
    let inner = g.vertex_mask() & !(1u64 << s) & !(1u64 << t);
    let target = 1u64 << t;
    let mut visited = Visited::new(g.order(), c.k);
    let mut stack = Vec::new();
    let mut first = g.neighbors(s) & inner;
    while first != 0 {
        let w = first.trailing_zeros() as usize;
        first &= first - 1;
        let mask = 1u64 << c.colors[w];
        if visited.insert(w, mask) {
            stack.push((w, mask));
        }
    }
    while let Some((v, mask)) = stack.pop() {
        let row = g.neighbors(v);
        if row & target != 0 {
            return true;
        }
        let mut next = row & inner;
        while next != 0 {
            let w = next.trailing_zeros() as usize;
            next &= next - 1;
            let bit = 1u64 << c.colors[w];
            if mask & bit == 0 && visited.insert(w, mask | bit) {
                stack.push((w, mask | bit));
            }
        }
    }
    false
}

fn check_pair(g: &Graph, c: &VertexColoring, s: usize, t: usize) -> Result<(), RainbowError> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    c.check_fits(g)?;
    if s == t {
        return Err(RainbowError::SameEndpoints(s));
    }
    Ok(())
}

/// True iff some simple `s`–`t` path has internal vertices with pairwise
/// distinct colors. Unreachable pairs give `false`.
pub fn exists_rainbow_path(g: &Graph, c: &VertexColoring, s: usize, t: usize) -> Result<bool, RainbowError> {
    check_pair(g, c, s, t)?;
    Ok(rainbow_path_unchecked(g, c, s, t))
}

/// Reference implementation: enumerates every simple `s`–`t` path and tests
/// its internal colors directly. Exponential; meant for small graphs.
pub fn exists_rainbow_path_oracle(g: &Graph, c: &VertexColoring, s: usize, t: usize) -> Result<bool, RainbowError> {
    check_pair(g, c, s, t)?;

    fn internal_colors_distinct(path: &[usize], c: &VertexColoring) -> bool {
        let inner = &path[1..path.len() - 1];
        let mut seen = Vec::with_capacity(inner.len());
        for &v in inner {
            match c.color_of(v) {
                None => return false,
                Some(col) if seen.contains(&col) => return false,
                Some(col) => seen.push(col),
            }
        }
        true
    }

    fn walk(g: &Graph, c: &VertexColoring, t: usize, path: &mut Vec<usize>) -> bool {
        let here = *path.last().unwrap();
        if here == t {
            return internal_colors_distinct(path, c);
        }
        for next in 0..g.order() {
            if g.has_edge(here, next) && !path.contains(&next) {
                path.push(next);
                if walk(g, c, t, path) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }

    Ok(walk(g, c, t, &mut vec![s]))
}

/// Rainbow check specialised to one graph. With at least one color, pairs at
/// distance one or two are always rainbow-connected, so only pairs at distance three or more are kept,
/// farthest first.
#[derive(Debug, Clone)]
pub struct RainbowChecker<'g> {
    g: &'g Graph,
    connected: bool,
    complete: bool,
    far_pairs: Vec<(usize, usize)>,
}

impl<'g> RainbowChecker<'g> {
    pub fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let mut far = Vec::new();
        let mut connected = true;
        for s in 0..n {
            let dist = g.distances_from(s);
            for (t, d) in dist.iter().enumerate().skip(s + 1) {
                match d {
                    None => connected = false,
                    Some(d) if *d >= 3 => far.push((*d, s, t)),
                    Some(_) => {}
                }
            }
        }
        far.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
        RainbowChecker {
            g,
            connected,
            complete: g.is_complete(),
            far_pairs: far.into_iter().map(|(_, s, t)| (s, t)).collect(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    /// Pairs that need a real check, farthest first.
    pub fn far_pairs(&self) -> &[(usize, usize)] {
        &self.far_pairs
    }

    pub fn check(&self, c: &VertexColoring) -> Result<bool, RainbowError> {
        c.check_fits(self.g)?;
        Ok(self.check_unchecked(c))
    }

    pub(crate) fn check_unchecked(&self, c: &VertexColoring) -> bool {
        if c.k == 0 {
            // no vertex can be internal, so every pair must be adjacent
            return self.complete;
        }
        self.connected
            && self
                .far_pairs
                .iter()
                .all(|&(s, t)| rainbow_path_unchecked(self.g, c, s, t))
    }
}

/// True iff `g` is connected and every pair of distinct vertices is joined by
/// a rainbow path under `c`.
pub fn is_rainbow_vertex_connected(g: &Graph, c: &VertexColoring) -> Result<bool, RainbowError> {
    RainbowChecker::new(g).check(c)
}

/// Lexicographically first pair `(s, t)`, `s < t`, without a rainbow path.
pub fn first_failing_pair(g: &Graph, c: &VertexColoring) -> Result<Option<(usize, usize)>, RainbowError> {
    c.check_fits(g)?;
    let n = g.order();
    Ok((0..n)
        .flat_map(|s| ((s + 1)..n).map(move |t| (s, t)))
        .find(|&(s, t)| !rainbow_path_unchecked(g, c, s, t)))
}
