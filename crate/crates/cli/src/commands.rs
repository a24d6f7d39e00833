use std::collections::BTreeSet;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use rvc_core::canon::CANON_MAX_ORDER;
use rvc_core::census::{census_run, enumerate_graphs, ingest_graph6, CensusRecord};
use rvc_core::constructions::{cycle_graph, lower_bound_pair, path_complement_pair, NgPair};
use rvc_core::{canonical_form, first_failing_pair, parse_graph6, rvc_exact, to_graph6, Graph, VertexColoring};

use crate::report::{CheckReport, ComputeReport, ConstructReport, SummaryReport, SCHEMA};
use crate::Family;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Data(String),
    Violation(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
            Failure::Violation(_) => 3,
        }
    }
}

fn data<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> Failure + '_ {
    move |e| Failure::Data(format!("{context}: {e}"))
}

fn emit<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let line = serde_json::to_string(value).map_err(data("serialize"))?;
    let mut out = io::stdout().lock();
    writeln!(out, "{line}").map_err(data("stdout"))
}

fn compute_one(text: &str) -> Result<ComputeReport, Failure> {
    let g = parse_graph6(text).map_err(data(text))?;
    let result = rvc_exact(&g).map_err(data(text))?;
    let diameter = g.diameter().map_err(data(text))?;
    let (lower_bound_reason, exhausted_k) = ComputeReport::reason_fields(&result.lower_bound);
    Ok(ComputeReport {
        schema: SCHEMA,
        graph6: text.to_string(),
        n: g.order(),
        diameter,
        rvc: result.value,
        coloring: result.witness.one_based(),
        lower_bound_reason,
        exhausted_k,
    })
}

pub fn compute(args: Vec<String>) -> Result<(), Failure> {
    if !args.is_empty() {
        for text in &args {
            emit(&compute_one(text)?)?;
        }
        return Ok(());
    }
    for line in io::stdin().lock().lines() {
        let line = line.map_err(data("stdin"))?;
        let text = line.trim();
        if !text.is_empty() {
            emit(&compute_one(text)?)?;
        }
    }
    Ok(())
}

pub fn check(graph6: &str, colors: &str) -> Result<(), Failure> {
    let g = parse_graph6(graph6).map_err(data(graph6))?;
    let values = colors
        .split(',')
        .map(|c| c.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(data("colors"))?;
    if values.len() != g.order() {
        return Err(Failure::Data(format!(
            "{} colors given for {} vertices",
            values.len(),
            g.order()
        )));
    }
    let coloring = VertexColoring::from_one_based(&values).map_err(data("colors"))?;
    let failing = first_failing_pair(&g, &coloring).map_err(data("check"))?;
    emit(&CheckReport {
        schema: SCHEMA,
        rainbow_vertex_connected: failing.is_none(),
        failing_pair: failing.map(|(s, t)| [s, t]),
    })
}

pub fn construct(family: Family, n: usize) -> Result<(), Failure> {
    let (name, pair) = match family {
        Family::PathPair => ("path-pair", path_complement_pair(n)),
        Family::Diam2 => ("diam2", lower_bound_pair(n)),
        Family::Cycle => ("cycle", cycle_graph(n).and_then(NgPair::new)),
    };
    let pair = pair.map_err(data(name))?;
    emit(&ConstructReport {
        schema: SCHEMA,
        family: name.to_string(),
        n,
        graph6: to_graph6(&pair.g).map_err(data(name))?,
        complement_graph6: to_graph6(&pair.gbar).map_err(data(name))?,
        rvc_g: pair.rvc_g,
        rvc_gbar: pair.rvc_gbar,
        sum: pair.sum,
    })
}

pub struct CensusArgs {
    pub n: usize,
    pub file: Option<PathBuf>,
    pub dedup: bool,
    pub workers: usize,
    pub out_csv: Option<PathBuf>,
    pub out_summary: Option<PathBuf>,
    pub strict: bool,
}

fn ingest_file(args: &CensusArgs, path: &PathBuf) -> Result<Vec<Graph>, Failure> {
    let file = File::open(path).map_err(data(&path.display().to_string()))?;
    let ingested = ingest_graph6(BufReader::new(file), args.strict).map_err(data("ingest"))?;
    for (line, err) in &ingested.errors {
        eprintln!("warning: line {line} skipped: {err}");
    }
    if ingested.filtered > 0 {
        eprintln!(
            "note: {} graphs skipped (graph or complement disconnected)",
            ingested.filtered
        );
    }
    if !args.dedup {
        return Ok(ingested.graphs);
    }
    if args.n > CANON_MAX_ORDER {
        return Err(Failure::Data(format!("--dedup needs n <= {CANON_MAX_ORDER}")));
    }
    let mut forms = BTreeSet::new();
    for g in &ingested.graphs {
        if g.order() != args.n {
            return Err(Failure::Data(format!(
                "graph of order {} in a census of order {}",
                g.order(),
                args.n
            )));
        }
        forms.insert(canonical_form(g).map_err(data("dedup"))?);
    }
    Ok(forms.into_iter().map(|f| f.to_graph()).collect())
}

fn write_csv(path: &PathBuf, records: &[CensusRecord]) -> Result<(), Failure> {
    let mut writer = csv::Writer::from_path(path).map_err(data("csv"))?;
    for r in records {
        writer.serialize(r).map_err(data("csv"))?;
    }
    writer.flush().map_err(data("csv"))
}

pub fn census(args: CensusArgs) -> Result<(), Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.workers)
        .build()
        .map_err(|e| Failure::Usage(format!("workers: {e}")))?;
    let (records, summary) = pool.install(|| {
        let run = match &args.file {
            Some(path) => census_run(ingest_file(&args, path)?, args.n),
            None => census_run(enumerate_graphs(args.n, args.dedup).map_err(data("census"))?, args.n),
        };
        run.map_err(data("census"))
    })?;

    if !summary.theorem_applies {
        eprintln!(
            "warning: n = {} is below 5; the sum bounds are not claimed at this order",
            args.n
        );
    }
    if let Some(path) = &args.out_csv {
        write_csv(path, &records)?;
    }
    let report = SummaryReport {
        schema: SCHEMA,
        summary,
    };
    if let Some(path) = &args.out_summary {
        let text = serde_json::to_string_pretty(&report).map_err(data("summary"))?;
        std::fs::write(path, text + "\n").map_err(data("summary"))?;
    }
    emit(&report)?;
    if !report.summary.violations.is_empty() {
        return Err(Failure::Violation(format!(
            "{} graphs violate 2 <= sum <= n - 1 at n = {}",
            report.summary.violations.len(),
            args.n
        )));
    }
    Ok(())
}
