use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::oracles::QueryOutcome;

/// Depth convention recorded in every serialised report.
pub const DEPTH_CONVENTION: &str = "depth of the tree node at which the answer was produced; root = 0";

/// Aggregated outcomes of one workload run. Totals are kept as integers;
/// means are derived on demand.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub graph_name: String,
    pub method: String,
    pub query_count: u64,
    pub answered_true: u64,
    pub answered_false: u64,
    pub answered_by_seed: u64,
    pub total_edges: u64,
    pub total_ssr_calls: u64,
    pub total_1ftsc_calls: u64,
    pub depth_histogram: BTreeMap<u32, u64>,
    pub wall_time_seconds: f64,
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

impl Report {
    pub fn new(graph_name: impl Into<String>, method: impl Into<String>) -> Self {
        Report {
            graph_name: graph_name.into(),
            method: method.into(),
            ..Default::default()
        }
    }

    pub fn record(&mut self, out: &QueryOutcome) {
        self.query_count += 1;
        if out.answer {
            self.answered_true += 1;
        } else {
            self.answered_false += 1;
        }
        self.answered_by_seed += out.answered_by_seed as u64;
        self.total_edges += out.edges_accessed;
        self.total_ssr_calls += out.ssr_calls;
        self.total_1ftsc_calls += out.onefault_calls;
        if let Some(d) = out.depth_reached {
            *self.depth_histogram.entry(d).or_default() += 1;
        }
    }

    /// Combines two runs of the same method on disjoint query shards.
    pub fn merge(&mut self, other: &Report) {
        self.query_count += other.query_count;
        self.answered_true += other.answered_true;
        self.answered_false += other.answered_false;
        self.answered_by_seed += other.answered_by_seed;
        self.total_edges += other.total_edges;
        self.total_ssr_calls += other.total_ssr_calls;
        self.total_1ftsc_calls += other.total_1ftsc_calls;
        for (&d, &c) in &other.depth_histogram {
            *self.depth_histogram.entry(d).or_default() += c;
        }
        self.wall_time_seconds += other.wall_time_seconds;
    }

    pub fn pct_answered_by_seed(&self) -> f64 {
        100.0 * ratio(self.answered_by_seed, self.query_count)
    }

    pub fn mean_edges_per_query(&self) -> f64 {
        ratio(self.total_edges, self.query_count)
    }

    pub fn mean_ssr_calls(&self) -> f64 {
        ratio(self.total_ssr_calls, self.query_count)
    }

    pub fn mean_1ftsc_calls(&self) -> f64 {
        ratio(self.total_1ftsc_calls, self.query_count)
    }

    pub fn mean_depth(&self) -> Option<f64> {
        let total: u64 = self.depth_histogram.values().sum();
        let weighted: u64 = self.depth_histogram.iter().map(|(&d, &c)| d as u64 * c).sum();
        (total > 0).then(|| ratio(weighted, total))
    }

    /// Fraction of queries answered at depth 0.
    pub fn depth_zero_rate(&self) -> f64 {
        ratio(self.depth_histogram.get(&0).copied().unwrap_or(0), self.query_count)
    }

    pub fn to_json(&self) -> Result<String> {
        let doc = ReportDoc {
            depth_convention: DEPTH_CONVENTION.into(),
            pct_answered_by_seed: self.pct_answered_by_seed(),
            mean_edges_per_query: self.mean_edges_per_query(),
            mean_ssr_calls: self.mean_ssr_calls(),
            mean_1ftsc_calls: self.mean_1ftsc_calls(),
            mean_depth: self.mean_depth(),
            report: self.clone(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }

    pub fn from_json(s: &str) -> Result<Report> {
        Ok(serde_json::from_str::<ReportDoc>(s)?.report)
    }
}

/// Serialised form: the totals plus derived means for human readers.
#[derive(Serialize, Deserialize)]
struct ReportDoc {
    depth_convention: String,
    report: Report,
    pct_answered_by_seed: f64,
    mean_edges_per_query: f64,
    mean_ssr_calls: f64,
    mean_1ftsc_calls: f64,
    mean_depth: Option<f64>,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph_name: &'a str,
    method: &'a str,
    query_count: u64,
    answered_true: u64,
    answered_false: u64,
    pct_answered_by_seed: f64,
    mean_edges_per_query: f64,
    mean_depth: Option<f64>,
    mean_ssr_calls: f64,
    mean_1ftsc_calls: f64,
    wall_time_seconds: f64,
}

/// One row per report, with a header.
pub fn write_csv<W: Write>(reports: &[Report], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in reports {
        w.serialize(CsvRow {
            graph_name: &r.graph_name,
            method: &r.method,
            query_count: r.query_count,
            answered_true: r.answered_true,
            answered_false: r.answered_false,
            pct_answered_by_seed: r.pct_answered_by_seed(),
            mean_edges_per_query: r.mean_edges_per_query(),
            mean_depth: r.mean_depth(),
            mean_ssr_calls: r.mean_ssr_calls(),
            mean_1ftsc_calls: r.mean_1ftsc_calls(),
            wall_time_seconds: r.wall_time_seconds,
        })?;
    }
    w.flush()?;
    Ok(())
}
