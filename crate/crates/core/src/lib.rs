//! Exact closeness, harmonic and betweenness centrality together with the
//! machinery to test how they react to adding a single edge: basins, basin
//! dominance and (strict) score/rank semi-monotonicity verdicts, the two
//! counterexample families, and exhaustive or randomized verification sweeps.
//!
//! ```
//! # fn main() -> Result<(), Box<dyn std::error::Error>> {
//! use semimono::basin::{rank_semi_monotone, EdgeAdditionScenario};
//! use semimono::centrality::Closeness;
//! use semimono::Graph;
//!
//! let g = Graph::from_edge_list("a b\nb c\nc d\n")?;
//! let (x, y) = (g.vertex_by_label("a").unwrap(), g.vertex_by_label("d").unwrap());
//! let s = EdgeAdditionScenario::new(g, x, y)?;
//! assert!(rank_semi_monotone(&s, &Closeness).is_semi_monotone());
//! # Ok(())
//! # }
//! ```

pub mod basin;
pub mod centrality;
pub mod counterexamples;
pub mod error;
pub mod graph;
pub mod lab;
pub mod report;
pub mod score;

pub use basin::{EdgeAdditionScenario, Side};
pub use centrality::{Centrality, CentralityKind, CentralityRegistry, ScoreVector};
pub use graph::{Distance, Graph, Vertex};
pub use score::ExactScore;
