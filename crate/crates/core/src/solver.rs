//! Exact rainbow vertex-connection numbers.
//!
//! For a fixed palette size `k` every coloring with at most `k` colors is
//! tried, one per color-renaming class (restricted growth strings). The
//! number itself is found by raising `k` from the diameter lower bound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::rainbow::{RainbowChecker, VertexColoring};
use crate::rgs::RestrictedGrowth;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RvcError {
    #[error("rainbow vertex-connection is only defined for connected graphs")]
    Disconnected,
    #[error("no rainbow coloring with at most {max_k} colors on a connected non-complete graph of order {n}")]
    UpperBoundExceeded { n: usize, max_k: usize },
}

impl From<GraphError> for RvcError {
    fn from(_: GraphError) -> Self {
        RvcError::Disconnected
    }
}

/// Why no smaller palette works.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LowerBound {
    /// Complete graphs need no colors.
    CompleteGraph,
    /// The value equals `diameter - 1`, which every coloring needs.
    DiameterMinusOne { diameter: usize },
    /// Every palette size in `exhausted` was searched without success.
    ExhaustedK { diameter: usize, exhausted: Vec<usize> },
}

impl LowerBound {
    pub fn label(&self) -> &'static str {
        match self {
            LowerBound::CompleteGraph => "complete-graph",
            LowerBound::DiameterMinusOne { .. } => "diameter-minus-one",
            LowerBound::ExhaustedK { .. } => "exhausted-k",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RvcResult {
    pub value: usize,
    pub witness: VertexColoring,
    pub lower_bound: LowerBound,
}

fn search(checker: &RainbowChecker<'_>, k: usize) -> Option<VertexColoring> {
    let g = checker.graph();
    if k == 0 {
        return g.is_complete().then(VertexColoring::empty);
    }
    let k = k.min(g.order());
    let mut walk = RestrictedGrowth::new(g.order(), k);
    let mut candidate = VertexColoring::zeroed(k, g.order());
    while walk.advance() {
        candidate.colors_mut().copy_from_slice(walk.current());
        if checker.check_unchecked(&candidate) {
            return Some(candidate);
        }
    }
    None
}

/// First coloring with at most `k` colors (in restricted-growth order) that
/// makes `g` rainbow vertex-connected, if any.
pub fn find_rainbow_coloring(g: &Graph, k: usize) -> Result<Option<VertexColoring>, RvcError> {
    if !g.is_connected() {
        return Err(RvcError::Disconnected);
    }
    Ok(search(&RainbowChecker::new(g), k))
}

/// Exact `rvc(g)` with a witness coloring.
pub fn rvc_exact(g: &Graph) -> Result<RvcResult, RvcError> {
    if !g.is_connected() {
        return Err(RvcError::Disconnected);
    }
    if g.is_complete() {
        return Ok(RvcResult {
            value: 0,
            witness: VertexColoring::empty(),
            lower_bound: LowerBound::CompleteGraph,
        });
    }
    let n = g.order();
    let diameter = g.diameter()?;
    // non-complete and connected: diameter >= 2 and n >= 3
    let start = diameter.saturating_sub(1).max(1);
    let checker = RainbowChecker::new(g);
    for k in start..=(n - 2).max(start) {
        if let Some(witness) = search(&checker, k) {
            let lower_bound = if k == start {
                LowerBound::DiameterMinusOne { diameter }
            } else {
                LowerBound::ExhaustedK {
                    diameter,
                    exhausted: (start..k).collect(),
                }
            };
            return Ok(RvcResult {
                value: k,
                witness,
                lower_bound,
            });
        }
    }
    Err(RvcError::UpperBoundExceeded { n, max_k: n - 2 })
}

/// Shorthand for `rvc_exact(g)?.value`.
pub fn rvc(g: &Graph) -> Result<usize, RvcError> {
    rvc_exact(g).map(|r| r.value)
}
