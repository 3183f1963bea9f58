//! Report envelopes and their JSON, CSV and text renderings.
//!
//! Payloads address vertices by label and render every score as a `num/den`
//! string. JSON objects come out with sorted keys, and neither JSON nor CSV
//! carries timestamps or timings, so identical inputs give identical bytes.

use std::fmt;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::Duration;

use serde_json::{json, Value};

use crate::basin::{
    peripherality_identity, DominanceReport, EdgeAdditionScenario, MonotonicityVerdict, Side,
};
use crate::centrality::{Centrality, ScoreVector};
use crate::counterexamples::ClaimReport;
use crate::graph::Graph;
use crate::lab::{PointwiseViolation, SweepReport};

pub const TOOL: &str = "semimono";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format '{other}' (expected json, csv or text)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

/// Tabular view of a payload, used for CSV and as the body of text output.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push<I, S>(&mut self, row: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows.push(row.into_iter().map(|c| c.to_string()).collect());
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportEnvelope {
    /// Command line as invoked, without the program name.
    pub command: Vec<String>,
    /// Set for randomized sweeps.
    pub prng: Option<String>,
    /// Object with a `type` field naming the payload.
    pub payload: Value,
    pub table: Table,
    /// Overall outcome for payloads that are checks; drives `--strict-exit`.
    pub passed: Option<bool>,
    /// Free-form lines printed before the table in text output.
    pub preamble: Vec<String>,
    /// Printed only in the text footer.
    pub wall_time: Option<Duration>,
}

impl ReportEnvelope {
    fn new(command: &[String], payload: Value, table: Table) -> Self {
        ReportEnvelope {
            command: command.to_vec(),
            prng: None,
            payload,
            table,
            passed: None,
            preamble: Vec::new(),
            wall_time: None,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut env = json!({
            "tool": TOOL,
            "version": VERSION,
            "command": self.command,
            "payload": self.payload,
        });
        if let Some(prng) = &self.prng {
            env["prng"] = json!(prng);
        }
        env
    }

    pub fn scores(command: &[String], g: &Graph, scores: &ScoreVector) -> Self {
        let mut table = Table::new(&["vertex", "score", "peripherality"]);
        let rows: Vec<Value> = (0..g.n())
            .map(|v| {
                let p = scores.peripherality(v);
                table.push([g.label(v), scores.get(v).to_string(), p.map(|p| p.to_string()).unwrap_or_default()]);
                let mut row = json!({"vertex": g.label(v), "score": scores.get(v).to_string()});
                if let Some(p) = p {
                    row["peripherality"] = json!(p);
                }
                row
            })
            .collect();
        let payload = json!({
            "type": "scores",
            "centrality": scores.kind.name(),
            "vertices": g.n(),
            "scores": rows,
        });
        Self::new(command, payload, table)
    }

    pub fn basins(command: &[String], s: &EdgeAdditionScenario) -> Self {
        let g = s.graph();
        let b = s.basins();
        let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
        let mut table = Table::new(&["vertex", "k_xy", "k_yx"]);
        for v in 0..g.n() {
            table.push([g.label(v), b.contains(Side::X, v).to_string(), b.contains(Side::Y, v).to_string()]);
        }
        let payload = json!({
            "type": "basins",
            "x": g.label(s.x()),
            "y": g.label(s.y()),
            "k_xy": labels(&b.k_xy),
            "k_yx": labels(&b.k_yx),
            "overlap": labels(&b.overlap()),
        });
        Self::new(command, payload, table)
    }

    pub fn verdict(command: &[String], s: &EdgeAdditionScenario, c: &dyn Centrality, v: &MonotonicityVerdict) -> Self {
        let g = s.graph();
        let mut table = Table::new(&["side", "z", "before", "after", "endpoint_before", "endpoint_after"]);
        let witnesses: Vec<Value> = v
            .witnesses
            .iter()
            .map(|w| {
                table.push([
                    w.side.to_string(),
                    g.label(w.z),
                    w.before.to_string(),
                    w.after.to_string(),
                    w.endpoint_before.to_string(),
                    w.endpoint_after.to_string(),
                ]);
                json!({
                    "side": w.side.to_string(),
                    "z": g.label(w.z),
                    "before": w.before.to_string(),
                    "after": w.after.to_string(),
                    "endpoint_before": w.endpoint_before.to_string(),
                    "endpoint_after": w.endpoint_after.to_string(),
                })
            })
            .collect();
        let payload = json!({
            "type": "verdict",
            "definition": v.definition.name(),
            "centrality": v.kind.name(),
            "x": g.label(s.x()),
            "y": g.label(s.y()),
            "delta_x": s.delta(c, s.x()).to_string(),
            "delta_y": s.delta(c, s.y()).to_string(),
            "holds_at_x": v.holds_at_x,
            "holds_at_y": v.holds_at_y,
            "holds": v.is_semi_monotone(),
            "monotone": v.is_monotone(),
            "witnesses": witnesses,
        });
        let mut env = Self::new(command, payload, table);
        env.passed = Some(v.is_semi_monotone());
        env.preamble = vec![
            format!("{} {} semi-monotone: {}", v.kind.name(), v.definition.name(), v.is_semi_monotone()),
            format!("holds at x: {}, holds at y: {}", v.holds_at_x, v.holds_at_y),
        ];
        env
    }

    pub fn dominance(command: &[String], s: &EdgeAdditionScenario, d: &DominanceReport, strict: bool) -> Self {
        let g = s.graph();
        let mut table = Table::new(&["side", "u", "delta_u", "delta_endpoint", "tie"]);
        let violations: Vec<Value> = d
            .violations
            .iter()
            .filter(|v| strict || !v.is_tie())
            .map(|v| {
                table.push([
                    v.side.to_string(),
                    g.label(v.u),
                    v.delta_u.to_string(),
                    v.delta_endpoint.to_string(),
                    v.is_tie().to_string(),
                ]);
                json!({
                    "side": v.side.to_string(),
                    "u": g.label(v.u),
                    "delta_u": v.delta_u.to_string(),
                    "delta_endpoint": v.delta_endpoint.to_string(),
                    "tie": v.is_tie(),
                })
            })
            .collect();
        let holds = if strict { d.strict_holds } else { d.nonstrict_holds };
        let payload = json!({
            "type": "dominance",
            "centrality": d.kind.name(),
            "strict": strict,
            "x": g.label(s.x()),
            "y": g.label(s.y()),
            "holds": holds,
            "violations": violations,
        });
        let mut env = Self::new(command, payload, table);
        env.passed = Some(holds);
        env.preamble = vec![format!(
            "{} {}basin dominance: {holds}",
            d.kind.name(),
            if strict { "strict " } else { "" }
        )];
        env
    }

    pub fn pointwise(command: &[String], s: &EdgeAdditionScenario, c: &dyn Centrality, found: &[PointwiseViolation]) -> Self {
        let g = s.graph();
        let mut table = Table::new(&["inequality", "side", "a", "b", "lhs", "rhs"]);
        let violations: Vec<Value> = found
            .iter()
            .map(|v| {
                let name = serde_json::to_value(v.inequality).expect("unit enum serializes");
                let name = name.as_str().unwrap_or_default().to_string();
                table.push([
                    name.clone(),
                    v.side.to_string(),
                    g.label(v.pair.0),
                    g.label(v.pair.1),
                    v.lhs.to_string(),
                    v.rhs.to_string(),
                ]);
                json!({
                    "inequality": name,
                    "side": v.side.to_string(),
                    "pair": [g.label(v.pair.0), g.label(v.pair.1)],
                    "lhs": v.lhs.to_string(),
                    "rhs": v.rhs.to_string(),
                })
            })
            .collect();
        let payload = json!({
            "type": "pointwise",
            "centrality": c.kind().name(),
            "x": g.label(s.x()),
            "y": g.label(s.y()),
            "holds": found.is_empty(),
            "violations": violations,
        });
        let mut env = Self::new(command, payload, table);
        env.passed = Some(found.is_empty());
        env.preamble = vec![format!("{} pointwise inequalities hold: {}", c.kind().name(), found.is_empty())];
        env
    }

    pub fn peripherality_identity(command: &[String], s: &EdgeAdditionScenario) -> Self {
        let g = s.graph();
        let (lhs, rhs) = peripherality_identity(s);
        let mut table = Table::new(&["lhs", "rhs", "holds"]);
        table.push([lhs.to_string(), rhs.to_string(), (lhs == rhs).to_string()]);
        let payload = json!({
            "type": "lemma3",
            "x": g.label(s.x()),
            "y": g.label(s.y()),
            "peripherality_difference": lhs,
            "basin_size_difference": rhs,
            "holds": lhs == rhs,
        });
        let mut env = Self::new(command, payload, table);
        env.passed = Some(lhs == rhs);
        env.preamble = vec!["p'(x) - p'(y) = |K_yx| - |K_xy|".to_string()];
        env
    }

    pub fn family(command: &[String], family: &str, parameter: u32, g: &Graph, claims: Option<&ClaimReport>) -> Self {
        let mut table = Table::new(&["claim", "expected", "actual", "passed"]);
        let mut payload = json!({
            "type": "family",
            "family": family,
            "parameter": parameter,
            "vertices": g.n(),
            "edges": g.edge_count(),
            "edge_list": g.to_edge_list(),
        });
        let mut env_passed = None;
        if let Some(report) = claims {
            let rows: Vec<Value> = report
                .claims
                .iter()
                .map(|c| {
                    table.push([c.name.clone(), c.expected.clone(), c.actual.clone(), c.passed.to_string()]);
                    json!({"name": c.name, "expected": c.expected, "actual": c.actual, "passed": c.passed})
                })
                .collect();
            payload["claims"] = json!(rows);
            payload["all_passed"] = json!(report.all_passed());
            env_passed = Some(report.all_passed());
        } else {
            table = Table::new(&["a", "b"]);
            for (a, b) in g.edges() {
                table.push([g.label(a), g.label(b)]);
            }
        }
        let mut env = Self::new(command, payload, table);
        env.passed = env_passed;
        env.preamble = vec![format!("{family} family, parameter {parameter}: {} vertices, {} edges", g.n(), g.edge_count())];
        env
    }

    pub fn enumeration(command: &[String], n: usize, count: u64) -> Self {
        let mut table = Table::new(&["n", "count"]);
        table.push([n.to_string(), count.to_string()]);
        let payload = json!({"type": "enumeration", "n": n, "count": count});
        let mut env = Self::new(command, payload, table);
        env.preamble = vec![format!("{count} connected labeled graphs")];
        env
    }

    pub fn sweep(command: &[String], report: &SweepReport) -> Self {
        let mut table = Table::new(&["check", "centrality", "scenarios", "holds", "fails"]);
        for t in &report.tallies {
            table.push([
                t.check.clone(),
                t.centrality.clone(),
                t.scenarios_checked.to_string(),
                t.holds.to_string(),
                t.fails.to_string(),
            ]);
        }
        let mut payload = serde_json::to_value(report).expect("sweep report serializes");
        payload["type"] = json!("sweep");
        if let Some(obj) = payload.as_object_mut() {
            obj.remove("prng");
        }
        let failed: u64 = report.tallies.iter().map(|t| t.fails).sum();
        let mut env = Self::new(command, payload, table);
        env.prng = report.prng.clone();
        env.passed = Some(failed == 0);
        env.preamble = vec![format!("{} graphs, {} scenarios", report.graphs, report.scenarios)];
        env.wall_time = Some(report.wall_time);
        env
    }
}

/// Writes `env` to `sink` in the requested format.
pub fn write_report(env: &ReportEnvelope, format: Format, sink: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&env.to_json()).map_err(io::Error::other)?;
            writeln!(sink, "{text}")
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(&env.table.header)?;
            for row in &env.table.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
        Format::Text => write_text(env, sink),
    }
}

fn write_text(env: &ReportEnvelope, sink: &mut dyn Write) -> io::Result<()> {
    writeln!(sink, "{TOOL} {VERSION}: {}", env.command.join(" "))?;
    if let Some(prng) = &env.prng {
        writeln!(sink, "prng: {prng}")?;
    }
    for line in &env.preamble {
        writeln!(sink, "{line}")?;
    }
    if let Some(edge_list) = env.payload.get("edge_list").and_then(Value::as_str) {
        sink.write_all(edge_list.as_bytes())?;
    }
    if !env.table.rows.is_empty() {
        let widths: Vec<usize> = (0..env.table.header.len())
            .map(|i| {
                env.table
                    .rows
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain([env.table.header[i].len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        writeln!(sink, "{}", line(&env.table.header))?;
        for row in &env.table.rows {
            writeln!(sink, "{}", line(row))?;
        }
    }
    if let Some(t) = env.wall_time {
        writeln!(sink, "wall time: {:.3}s", t.as_secs_f64())?;
    }
    Ok(())
}
