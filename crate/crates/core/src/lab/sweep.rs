use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basin::{Analysis, EdgeAdditionScenario};
use crate::centrality::{Centrality, CentralityKind, CentralityRegistry};
use crate::error::LabError;
use crate::graph::Graph;

use super::checks::{Check, CheckRegistry, Outcome};
use super::enumerate::{enumerate_connected_graphs, MAX_ENUMERATION_N};
use super::random::{random_connected_graph_with, seeded_rng, PRNG_SPEC};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum GraphSource {
    /// Every labeled connected graph with 1 ≤ n ≤ `n_max` vertices.
    Enumerate { n_max: usize },
    /// `count` connected G(n, p) samples drawn from one seeded stream.
    Random { n: usize, p: f64, count: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    pub source: GraphSource,
    #[serde(default = "all_centralities")]
    pub centralities: Vec<String>,
    #[serde(default = "all_checks")]
    pub checks: Vec<String>,
    /// Enumeration at n = 7 takes hours; it must be asked for.
    #[serde(default)]
    pub allow_n7: bool,
    #[serde(default = "default_exemplars")]
    pub max_exemplars: usize,
    /// Worker threads, 0 for rayon's default. Not part of the report.
    #[serde(default, skip_serializing)]
    pub threads: usize,
}

fn all_centralities() -> Vec<String> {
    CentralityKind::ALL.iter().map(|k| k.name().to_string()).collect()
}

fn all_checks() -> Vec<String> {
    CheckRegistry::default().names().map(String::from).collect()
}

fn default_exemplars() -> usize {
    3
}

impl SweepConfig {
    pub fn new(source: GraphSource) -> Self {
        SweepConfig {
            source,
            centralities: all_centralities(),
            checks: all_checks(),
            allow_n7: false,
            max_exemplars: default_exemplars(),
            threads: 0,
        }
    }

    pub fn enumerate(n_max: usize) -> Self {
        Self::new(GraphSource::Enumerate { n_max })
    }

    pub fn with_checks<I, S>(mut self, checks: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.checks = checks.into_iter().map(Into::into).collect();
        self
    }

    pub fn with_centralities<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.centralities = names.into_iter().map(Into::into).collect();
        self
    }
}

/// A failing instance kept for the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exemplar {
    pub n: usize,
    pub edges: Vec<[String; 2]>,
    /// Endpoints of the added edge; absent for graph-level checks.
    pub x: Option<String>,
    pub y: Option<String>,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub check: String,
    pub centrality: String,
    pub scenarios_checked: u64,
    pub holds: u64,
    pub fails: u64,
    pub exemplars: Vec<Exemplar>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub prng: Option<String>,
    pub graphs: u64,
    pub scenarios: u64,
    pub tallies: Vec<Tally>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepReport {
    pub fn tally(&self, check: &str, centrality: &str) -> Option<&Tally> {
        self.tallies
            .iter()
            .find(|t| t.check == check && t.centrality == centrality)
    }
}

struct Slot {
    check: Arc<dyn Check>,
    centrality: Arc<dyn Centrality>,
}

#[derive(Default)]
struct Partial {
    holds: u64,
    fails: u64,
    exemplars: Vec<Exemplar>,
}

struct GraphResult {
    scenarios: u64,
    partials: Vec<Partial>,
}

const BATCH: usize = 256;

pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepReport, LabError> {
    run_sweep_with(cfg, &CentralityRegistry::default(), &CheckRegistry::default())
}

/// Runs every configured check on every generated graph and each of its
/// non-adjacent pairs. Graphs are evaluated in parallel batches and merged in
/// generation order, so the report does not depend on scheduling.
pub fn run_sweep_with(
    cfg: &SweepConfig,
    centralities: &CentralityRegistry,
    checks: &CheckRegistry,
) -> Result<SweepReport, LabError> {
    let started = Instant::now();
    let mut resolved_checks = Vec::new();
    for name in &cfg.checks {
        resolved_checks.push(checks.resolve(name)?);
    }
    let mut resolved_centralities = Vec::new();
    for name in &cfg.centralities {
        resolved_centralities.push(centralities.resolve(name)?);
    }
    let mut slots = Vec::new();
    for check in &resolved_checks {
        for c in &resolved_centralities {
            if check.applies_to(c.kind()) {
                slots.push(Slot {
                    check: Arc::clone(check),
                    centrality: Arc::clone(c),
                });
            }
        }
    }

    let (graphs, prng) = graph_stream(&cfg.source, cfg.allow_n7)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .map_err(|e| LabError::ThreadPool(e.to_string()))?;

    let mut totals: Vec<Partial> = slots.iter().map(|_| Partial::default()).collect();
    let (mut graph_count, mut scenario_count) = (0u64, 0u64);
    let mut batch = Vec::with_capacity(BATCH);
    let mut graphs = graphs.peekable();
    while graphs.peek().is_some() {
        batch.clear();
        for g in graphs.by_ref().take(BATCH) {
            batch.push(g?);
        }
        let results: Vec<GraphResult> =
            pool.install(|| batch.par_iter().map(|g| evaluate_graph(g, &slots, cfg.max_exemplars)).collect());
        for result in results {
            graph_count += 1;
            scenario_count += result.scenarios;
            for (total, part) in totals.iter_mut().zip(result.partials) {
                total.holds += part.holds;
                total.fails += part.fails;
                let room = cfg.max_exemplars.saturating_sub(total.exemplars.len());
                total.exemplars.extend(part.exemplars.into_iter().take(room));
            }
        }
    }

    let tallies = slots
        .iter()
        .zip(totals)
        .map(|(slot, total)| Tally {
            check: slot.check.name().to_string(),
            centrality: slot.centrality.name().to_string(),
            scenarios_checked: total.holds + total.fails,
            holds: total.holds,
            fails: total.fails,
            exemplars: total.exemplars,
        })
        .collect();
    Ok(SweepReport {
        config: cfg.clone(),
        prng,
        graphs: graph_count,
        scenarios: scenario_count,
        tallies,
        wall_time: started.elapsed(),
    })
}

type GraphStream = Box<dyn Iterator<Item = Result<Graph, LabError>> + Send>;

fn graph_stream(source: &GraphSource, allow_n7: bool) -> Result<(GraphStream, Option<String>), LabError> {
    match *source {
        GraphSource::Enumerate { n_max } => {
            if !(1..=MAX_ENUMERATION_N).contains(&n_max) {
                return Err(LabError::EnumerationRange(n_max));
            }
            if n_max == MAX_ENUMERATION_N && !allow_n7 {
                return Err(LabError::LargeEnumerationDisabled);
            }
            let mut sizes = Vec::new();
            for n in 1..=n_max {
                sizes.push(enumerate_connected_graphs(n)?);
            }
            Ok((Box::new(sizes.into_iter().flatten().map(Ok)), None))
        }
        GraphSource::Random { n, p, count, seed } => {
            let mut rng = seeded_rng(seed);
            let stream = (0..count).map(move |_| random_connected_graph_with(&mut rng, n, p));
            Ok((Box::new(stream), Some(PRNG_SPEC.to_string())))
        }
    }
}

fn evaluate_graph(g: &Graph, slots: &[Slot], max_exemplars: usize) -> GraphResult {
    let analysis = Arc::new(Analysis::new(g.clone()));
    let mut partials: Vec<Partial> = slots.iter().map(|_| Partial::default()).collect();
    let record = |part: &mut Partial, outcome: Outcome, pair: Option<(usize, usize)>| match outcome {
        Outcome::Holds => part.holds += 1,
        Outcome::Fails(witness) => {
            part.fails += 1;
            if part.exemplars.len() < max_exemplars {
                part.exemplars.push(Exemplar {
                    n: g.n(),
                    edges: g.edges().map(|(a, b)| [g.label(a), g.label(b)]).collect(),
                    x: pair.map(|(x, _)| g.label(x)),
                    y: pair.map(|(_, y)| g.label(y)),
                    witness,
                });
            }
        }
    };
    for (slot, part) in slots.iter().zip(partials.iter_mut()) {
        for outcome in slot.check.check_graph(&analysis, slot.centrality.as_ref()) {
            record(part, outcome, None);
        }
    }
    let mut scenarios = 0;
    for (x, y) in g.non_edges() {
        let s = EdgeAdditionScenario::from_analysis(Arc::clone(&analysis), x, y)
            .expect("generated graphs are connected");
        scenarios += 1;
        for (slot, part) in slots.iter().zip(partials.iter_mut()) {
            if let Some(outcome) = slot.check.check_scenario(&s, slot.centrality.as_ref()) {
                record(part, outcome, Some((x, y)));
            }
        }
    }
    GraphResult { scenarios, partials }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_four_all_checks() {
        let report = run_sweep(&SweepConfig::enumerate(4)).unwrap();
        assert_eq!(report.graphs, 1 + 1 + 4 + 38);
        for t in &report.tallies {
            assert_eq!(t.holds + t.fails, t.scenarios_checked);
        }
        // path a–b–c with x=a, y=c: betweenness score semi-monotonicity fails
        let score = report.tally("score_semi", "betweenness").unwrap();
        assert!(score.fails > 0);
        assert!(!score.exemplars.is_empty());
        assert_eq!(report.tally("rank_semi", "closeness").unwrap().fails, 0);
        assert!(report.tally("peripherality_identity", "harmonic").is_none());
    }

    #[test]
    fn scenario_count_matches_non_edges() {
        let cfg = SweepConfig::enumerate(4).with_checks(["rank_semi"]).with_centralities(["harmonic"]);
        let report = run_sweep(&cfg).unwrap();
        let expected: usize = (1..=4)
            .flat_map(|n| enumerate_connected_graphs(n).unwrap())
            .map(|g| g.non_edges().count())
            .sum();
        assert_eq!(report.scenarios, expected as u64);
        assert_eq!(report.tallies.len(), 1);
        assert_eq!(report.tallies[0].scenarios_checked, expected as u64);
    }

    #[test]
    fn config_validation() {
        assert!(matches!(run_sweep(&SweepConfig::enumerate(8)), Err(LabError::EnumerationRange(8))));
        assert!(matches!(
            run_sweep(&SweepConfig::enumerate(7)),
            Err(LabError::LargeEnumerationDisabled)
        ));
        let bad = SweepConfig::enumerate(3).with_checks(["nonsense"]);
        assert!(matches!(run_sweep(&bad), Err(LabError::UnknownCheck(_))));
        let bad = SweepConfig::enumerate(3).with_centralities(["katz"]);
        assert!(matches!(run_sweep(&bad), Err(LabError::Centrality(_))));
    }

    #[test]
    fn config_json_defaults() {
        let cfg: SweepConfig = serde_json::from_str(r#"{"source": {"enumerate": {"n_max": 3}}}"#).unwrap();
        assert_eq!(cfg, SweepConfig::enumerate(3));
        let cfg: SweepConfig = serde_json::from_str(
            r#"{"source": {"random": {"n": 8, "p": 0.4, "count": 5, "seed": 9}}, "checks": ["clique_lemma"]}"#,
        )
        .unwrap();
        assert_eq!(cfg.checks, ["clique_lemma"]);
        assert!(serde_json::from_str::<SweepConfig>(r#"{"source": {"enumerate": {"n_max": 3}}, "bogus": 1}"#).is_err());
    }

    #[test]
    fn random_sweep_is_reproducible() {
        let cfg = SweepConfig::new(GraphSource::Random {
            n: 7,
            p: 0.4,
            count: 10,
            seed: 11,
        });
        let a = run_sweep(&cfg).unwrap();
        let b = run_sweep(&cfg).unwrap();
        assert_eq!(a.graphs, 10);
        assert!(a.prng.is_some());
        assert_eq!(a.tallies, b.tallies);
    }
}
