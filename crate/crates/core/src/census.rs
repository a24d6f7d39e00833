//! Exhaustive sweeps over small graphs whose complement is also connected.
//!
//! Every record carries exact values for both sides, so the sum
//! `rvc(G) + rvc(complement G)` can be checked against `2 <= sum <= n - 1`.
//! Work is spread over the current rayon pool; install a pool of the wanted
//! size around the calls to control the worker count. Results do not depend
//! on it.

use std::io::BufRead;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, graph_from_packed, is_canonical, pair_count, CanonicalForm, CANON_MAX_ORDER};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6, Graph6Error};
use crate::solver::{rvc, RvcError};

/// Largest order the built-in enumeration covers (`2^21` edge subsets).
pub const BUILTIN_MAX_ORDER: usize = 7;

/// Smallest order at which the sum bounds are claimed.
pub const THEOREM_MIN_ORDER: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("built-in enumeration covers n in {min}..={max}, got {n}; ingest graph6 files for other orders")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error("read failure at line {line}: {message}")]
    Io { line: usize, message: String },
    #[error("graph {index} has order {found}, census order is {expected}")]
    MixedOrders {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph {graph6}: {source}")]
    Rvc { graph6: String, source: RvcError },
    #[error("graph of order {0} cannot be recorded as graph6")]
    Encode(usize),
}

fn both_sides_connected(g: &Graph) -> bool {
    g.is_connected() && g.complement().is_connected()
}

fn enumerate_with<F>(n: usize, dedup: bool, min: usize, keep: F) -> Result<GraphStream, CensusError>
where
    F: Fn(&Graph) -> bool + Send + Sync + 'static,
{
    if !(min..=BUILTIN_MAX_ORDER).contains(&n) {
        return Err(CensusError::OrderOutOfRange {
            n,
            min,
            max: BUILTIN_MAX_ORDER,
        });
    }
    let masks = 0..1u64 << pair_count(n);
    if dedup {
        // masks follow the packed bit order, so canonical masks come out sorted
        let reps: Vec<u64> = masks
            .into_par_iter()
            .filter(|&m| {
                let g = graph_from_packed(n, m);
                keep(&g) && is_canonical(&g).expect("built-in orders are within the canonical cap")
            })
            .collect();
        Ok(Box::new(reps.into_iter().map(move |m| graph_from_packed(n, m))))
    } else {
        Ok(Box::new(
            masks.map(move |m| graph_from_packed(n, m)).filter(move |g| keep(g)),
        ))
    }
}

/// Owned stream of graphs.
pub type GraphStream = Box<dyn Iterator<Item = Graph> + Send>;

/// Every labeled graph on `n` vertices with `G` and its complement both
/// connected, or with `dedup` one canonically labeled representative per
/// isomorphism class in ascending canonical order.
pub fn enumerate_graphs(n: usize, dedup: bool) -> Result<GraphStream, CensusError> {
    enumerate_with(n, dedup, 2, both_sides_connected)
}

/// Every connected graph on `n` vertices, labeled or one per class.
pub fn enumerate_connected_graphs(n: usize, dedup: bool) -> Result<GraphStream, CensusError> {
    enumerate_with(n, dedup, 1, Graph::is_connected)
}

/// Parsed input together with what was dropped.
#[derive(Debug, Default)]
pub struct Ingested {
    pub graphs: Vec<Graph>,
    /// Valid lines whose graph or complement is disconnected.
    pub filtered: usize,
    /// Lenient mode only: lines that failed to parse, 1-based.
    pub errors: Vec<(usize, Graph6Error)>,
}

/// Reads graph6 lines, keeping graphs whose complement is also connected.
/// Blank lines and a leading `>>graph6<<` marker are skipped. In strict mode
/// the first malformed line aborts; otherwise it is recorded and skipped.
pub fn ingest_graph6<R: BufRead>(reader: R, strict: bool) -> Result<Ingested, CensusError> {
    let mut out = Ingested::default();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| CensusError::Io {
            line: line_no,
            message: e.to_string(),
        })?;
        let mut text = line.trim_end();
        if let Some(rest) = text.strip_prefix(">>graph6<<") {
            text = rest;
        }
        if text.is_empty() {
            continue;
        }
        match parse_graph6(text) {
            Ok(g) if both_sides_connected(&g) => out.graphs.push(g),
            Ok(_) => out.filtered += 1,
            Err(source) if strict => return Err(CensusError::Parse { line: line_no, source }),
            Err(source) => out.errors.push((line_no, source)),
        }
    }
    Ok(out)
}

/// One graph of the census. Field order matches the CSV columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub graph6: String,
    pub n: usize,
    pub rvc_g: usize,
    pub rvc_gbar: usize,
    pub sum: usize,
    pub diam_g: usize,
    pub diam_gbar: usize,
    pub bounds_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub n: usize,
    pub total_pairs: usize,
    pub min_sum: Option<usize>,
    pub max_sum: Option<usize>,
    pub min_witnesses: Vec<String>,
    pub max_witnesses: Vec<String>,
    /// Whether `n` is large enough for the sum bounds to be claimed.
    pub theorem_applies: bool,
    /// Records outside `2..=n-1`, whatever the order.
    pub out_of_bounds: usize,
    /// Out-of-bounds records at orders where the bounds are claimed.
    pub violations: Vec<CensusRecord>,
}

#[derive(Debug, Clone, Copy)]
struct SideValues {
    rvc: usize,
    diameter: usize,
}

/// Per-class cache keyed by canonical form. Entries are pure functions of the
/// key, so racing inserts store the same value.
#[derive(Default)]
struct Memo {
    table: DashMap<CanonicalForm, SideValues>,
}

impl Memo {
    fn side(&self, g: &Graph) -> Result<SideValues, RvcError> {
        let compute = |g: &Graph| -> Result<SideValues, RvcError> {
            Ok(SideValues {
                rvc: rvc(g)?,
                diameter: g.diameter()?,
            })
        };
        if g.order() > CANON_MAX_ORDER {
            return compute(g);
        }
        let key = canonical_form(g).expect("order checked against the canonical cap");
        if let Some(hit) = self.table.get(&key) {
            return Ok(*hit);
        }
        let values = compute(g)?;
        self.table.insert(key, values);
        Ok(values)
    }
}

fn record(g: &Graph, memo: &Memo) -> Result<CensusRecord, CensusError> {
    let n = g.order();
    let graph6 = to_graph6(g).map_err(|_| CensusError::Encode(n))?;
    let wrap = |source| CensusError::Rvc {
        graph6: graph6.clone(),
        source,
    };
    let side = memo.side(g).map_err(wrap)?;
    let other = memo.side(&g.complement()).map_err(wrap)?;
    let sum = side.rvc + other.rvc;
    Ok(CensusRecord {
        n,
        rvc_g: side.rvc,
        rvc_gbar: other.rvc,
        sum,
        diam_g: side.diameter,
        diam_gbar: other.diameter,
        bounds_ok: 2 <= sum && sum < n,
        graph6,
    })
}

/// Computes a record per graph and aggregates them. Records come back sorted
/// by graph6 string.
pub fn census_run<I>(source: I, n: usize) -> Result<(Vec<CensusRecord>, CensusSummary), CensusError>
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: Send,
{
    let memo = Memo::default();
    let mut records: Vec<CensusRecord> = source
        .into_iter()
        .enumerate()
        .par_bridge()
        .map(|(index, g)| {
            if g.order() != n {
                return Err(CensusError::MixedOrders {
                    index,
                    expected: n,
                    found: g.order(),
                });
            }
            record(&g, &memo)
        })
        .collect::<Result<_, _>>()?;
    records.par_sort_unstable_by(|a, b| a.graph6.cmp(&b.graph6));
    let summary = summarize(n, &records);
    Ok((records, summary))
}

/// Aggregates records (assumed sorted) into a summary.
pub fn summarize(n: usize, records: &[CensusRecord]) -> CensusSummary {
    let min_sum = records.iter().map(|r| r.sum).min();
    let max_sum = records.iter().map(|r| r.sum).max();
    let witnesses = |target: Option<usize>| -> Vec<String> {
        records
            .iter()
            .filter(|r| Some(r.sum) == target)
            .map(|r| r.graph6.clone())
            .collect()
    };
    let theorem_applies = n >= THEOREM_MIN_ORDER;
    let out_of_bounds: Vec<&CensusRecord> = records.iter().filter(|r| !r.bounds_ok).collect();
    CensusSummary {
        n,
        total_pairs: records.len(),
        min_sum,
        max_sum,
        min_witnesses: witnesses(min_sum),
        max_witnesses: witnesses(max_sum),
        theorem_applies,
        out_of_bounds: out_of_bounds.len(),
        violations: if theorem_applies {
            out_of_bounds.into_iter().cloned().collect()
        } else {
            Vec::new()
        },
    }
}
