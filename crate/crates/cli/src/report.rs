//! JSON payloads printed on stdout. Every object carries `schema: 1`.

use serde::{Deserialize, Serialize};

use rvc_core::{CensusSummary, LowerBound};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
pub struct ComputeReport {
    pub schema: u32,
    pub graph6: String,
    pub n: usize,
    pub diameter: usize,
    pub rvc: usize,
    /// 1-based colors; empty for complete graphs.
    pub coloring: Vec<usize>,
    pub lower_bound_reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhausted_k: Option<Vec<usize>>,
}

impl ComputeReport {
    pub fn reason_fields(bound: &LowerBound) -> (String, Option<Vec<usize>>) {
        let exhausted = match bound {
            LowerBound::ExhaustedK { exhausted, .. } => Some(exhausted.clone()),
            _ => None,
        };
        (bound.label().to_string(), exhausted)
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub schema: u32,
    pub rainbow_vertex_connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_pair: Option<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ConstructReport {
    pub schema: u32,
    pub family: String,
    pub n: usize,
    pub graph6: String,
    pub complement_graph6: String,
    pub rvc_g: usize,
    pub rvc_gbar: usize,
    pub sum: usize,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SummaryReport {
    pub schema: u32,
    #[serde(flatten)]
    pub summary: CensusSummary,
}
