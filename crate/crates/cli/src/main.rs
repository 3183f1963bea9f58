use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use semimono::basin::{basin_dominance, rank_semi_monotone, score_semi_monotone, strict_rank_semi_monotone};
use semimono::counterexamples::{
    build_betweenness_family, build_closeness_family, validate_betweenness_claims, validate_closeness_claims,
};
use semimono::lab::{enumerate_connected_graphs, pointwise_for, run_sweep, SweepConfig};
use semimono::report::{write_report, Format, ReportEnvelope};
use semimono::{Centrality, CentralityKind, CentralityRegistry, EdgeAdditionScenario, Graph, Vertex};

const THREADS_ENV: &str = "SEMIMONO_THREADS";

#[derive(Parser)]
#[command(name = "semimono", version, about = "Exact centrality scores and edge-addition monotonicity checks")]
struct Cli {
    /// Output format. JSON and CSV are stable; text is for reading.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Exit with status 1 when a check or claim fails.
    #[arg(long, global = true)]
    strict_exit: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Closeness,
    Harmonic,
    Betweenness,
}

impl From<KindArg> for CentralityKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Closeness => CentralityKind::Closeness,
            KindArg::Harmonic => CentralityKind::Harmonic,
            KindArg::Betweenness => CentralityKind::Betweenness,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum DefinitionArg {
    Score,
    Rank,
    StrictRank,
    Dominance,
    StrictDominance,
    Pointwise,
    Lemma3,
}

#[derive(Subcommand)]
enum Command {
    /// Score every vertex of an edge-list graph.
    Centrality {
        #[arg(long, value_enum)]
        kind: KindArg,
        edgelist: PathBuf,
    },
    /// Basins of the endpoints of a prospective edge.
    Basins {
        #[command(flatten)]
        pair: Pair,
        edgelist: PathBuf,
    },
    /// Check one monotonicity property for adding the edge between x and y.
    Check {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_enum)]
        definition: DefinitionArg,
        edgelist: PathBuf,
    },
    /// Build a counterexample family member.
    Family {
        #[arg(long, conflicts_with = "betweenness_m", required_unless_present = "betweenness_m")]
        closeness_k: Option<u32>,
        #[arg(long)]
        betweenness_m: Option<u32>,
        /// Recompute and report every stated property.
        #[arg(long)]
        validate: bool,
    },
    /// Count labeled connected graphs on n vertices.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=7))]
        n: u8,
    },
    /// Run a verification sweep described by a JSON config.
    Sweep {
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Args)]
struct Pair {
    /// Label of the first endpoint.
    #[arg(long)]
    x: String,
    /// Label of the second endpoint.
    #[arg(long)]
    y: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("semimono: error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<u8> {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let env = dispatch(&cli.command, &argv)?;
    emit(&env, cli.format.into(), cli.output.as_deref())?;
    Ok(if cli.strict_exit && env.passed == Some(false) { 1 } else { 0 })
}

fn emit(env: &ReportEnvelope, format: Format, output: Option<&Path>) -> Result<()> {
    let mut buf = Vec::new();
    write_report(env, format, &mut buf).context("rendering report")?;
    match output {
        Some(path) => fs::write(path, buf).with_context(|| format!("cannot write {}", path.display())),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(&buf).and_then(|()| out.flush()).context("cannot write to stdout")
        }
    }
}

fn dispatch(cmd: &Command, argv: &[String]) -> Result<ReportEnvelope> {
    let registry = CentralityRegistry::default();
    match cmd {
        Command::Centrality { kind, edgelist } => {
            let g = read_graph(edgelist)?;
            let c = centrality(&registry, *kind);
            let scores = c.scores(&g)?;
            Ok(ReportEnvelope::scores(argv, &g, &scores))
        }
        Command::Basins { pair, edgelist } => {
            let s = scenario(read_graph(edgelist)?, pair)?;
            Ok(ReportEnvelope::basins(argv, &s))
        }
        Command::Check {
            pair,
            kind,
            definition,
            edgelist,
        } => {
            let s = scenario(read_graph(edgelist)?, pair)?;
            let c = centrality(&registry, *kind);
            let c = c.as_ref();
            Ok(match definition {
                DefinitionArg::Score => ReportEnvelope::verdict(argv, &s, c, &score_semi_monotone(&s, c)),
                DefinitionArg::Rank => ReportEnvelope::verdict(argv, &s, c, &rank_semi_monotone(&s, c)),
                DefinitionArg::StrictRank => ReportEnvelope::verdict(argv, &s, c, &strict_rank_semi_monotone(&s, c)),
                DefinitionArg::Dominance => ReportEnvelope::dominance(argv, &s, &basin_dominance(&s, c), false),
                DefinitionArg::StrictDominance => ReportEnvelope::dominance(argv, &s, &basin_dominance(&s, c), true),
                DefinitionArg::Pointwise => ReportEnvelope::pointwise(argv, &s, c, &pointwise_for(&s, c.kind())),
                DefinitionArg::Lemma3 => ReportEnvelope::peripherality_identity(argv, &s),
            })
        }
        Command::Family {
            closeness_k,
            betweenness_m,
            validate,
        } => family(argv, *closeness_k, *betweenness_m, *validate),
        Command::Enumerate { n } => {
            let n = usize::from(*n);
            let count = enumerate_connected_graphs(n)?.count() as u64;
            Ok(ReportEnvelope::enumeration(argv, n, count))
        }
        Command::Sweep { config } => {
            let text = fs::read_to_string(config).with_context(|| format!("cannot read {}", config.display()))?;
            let mut cfg: SweepConfig =
                serde_json::from_str(&text).with_context(|| format!("invalid sweep config {}", config.display()))?;
            if let Ok(threads) = std::env::var(THREADS_ENV) {
                cfg.threads = threads
                    .trim()
                    .parse()
                    .with_context(|| format!("{THREADS_ENV} must be a non-negative integer, got '{threads}'"))?;
            }
            let report = run_sweep(&cfg)?;
            Ok(ReportEnvelope::sweep(argv, &report))
        }
    }
}

fn family(argv: &[String], closeness_k: Option<u32>, betweenness_m: Option<u32>, validate: bool) -> Result<ReportEnvelope> {
    let (name, parameter, graph, claims) = match (closeness_k, betweenness_m) {
        (Some(k), _) => {
            let graph = build_closeness_family(k)?.graph;
            let claims = validate.then(|| validate_closeness_claims(k)).transpose()?;
            ("closeness", k, graph, claims)
        }
        (None, Some(m)) => {
            let graph = build_betweenness_family(m)?.graph;
            let claims = validate.then(|| validate_betweenness_claims(m)).transpose()?;
            ("betweenness", m, graph, claims)
        }
        (None, None) => bail!("one of --closeness-k or --betweenness-m is required"),
    };
    Ok(ReportEnvelope::family(argv, name, parameter, &graph, claims.as_ref()))
}

fn centrality(registry: &CentralityRegistry, kind: KindArg) -> std::sync::Arc<dyn Centrality> {
    registry
        .by_kind(kind.into())
        .expect("default registry covers every kind")
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    Graph::from_edge_list(&text).with_context(|| format!("{}", path.display()))
}

fn vertex(g: &Graph, label: &str) -> Result<Vertex> {
    g.vertex_by_label(label)
        .ok_or_else(|| anyhow!("unknown vertex label '{label}'"))
}

fn scenario(g: Graph, pair: &Pair) -> Result<EdgeAdditionScenario> {
    let x = vertex(&g, &pair.x)?;
    let y = vertex(&g, &pair.y)?;
    if x == y {
        bail!("--x and --y name the same vertex '{}'", pair.x);
    }
    if g.has_edge(x, y) {
        bail!("'{}' and '{}' are already adjacent", pair.x, pair.y);
    }
    Ok(EdgeAdditionScenario::new(g, x, y)?)
}

