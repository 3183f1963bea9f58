//! Closeness, harmonic and betweenness centrality with exact scores.
//!
//! Each measure implements [`Centrality`] and is looked up by name through a
//! [`CentralityRegistry`], so callers (the sweep engine, the CLI) select
//! measures at runtime without matching on concrete types.

mod betweenness;
mod closeness;
mod harmonic;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::CentralityError;
use crate::graph::{AllPairs, Graph, Vertex};
use crate::score::ExactScore;

pub use betweenness::{betweenness, geodesics_through, pair_dependency, Betweenness};
pub use closeness::{closeness, Closeness};
pub use harmonic::{harmonic, Harmonic};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CentralityKind {
    Closeness,
    Harmonic,
    Betweenness,
}

impl CentralityKind {
    pub const ALL: [CentralityKind; 3] = [
        CentralityKind::Closeness,
        CentralityKind::Harmonic,
        CentralityKind::Betweenness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CentralityKind::Closeness => "closeness",
            CentralityKind::Harmonic => "harmonic",
            CentralityKind::Betweenness => "betweenness",
        }
    }

    /// Position in [`CentralityKind::ALL`].
    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for CentralityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CentralityKind {
    type Err = CentralityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CentralityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| CentralityError::Unknown(s.to_string()))
    }
}

/// Per-vertex scores of one measure on one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScoreVector {
    pub kind: CentralityKind,
    pub scores: Vec<ExactScore>,
    /// Distance sums; present exactly for closeness.
    pub peripheralities: Option<Vec<u64>>,
}

impl ScoreVector {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }

    pub fn get(&self, v: Vertex) -> &ExactScore {
        &self.scores[v]
    }

    pub fn peripherality(&self, v: Vertex) -> Option<u64> {
        self.peripheralities.as_ref().map(|p| p[v])
    }
}

/// A centrality measure.
pub trait Centrality: Send + Sync {
    fn kind(&self) -> CentralityKind;

    fn name(&self) -> &'static str {
        self.kind().name()
    }

    /// True when scores depend on distances alone.
    fn is_geometric(&self) -> bool;

    /// Scores from all-pairs data already computed for `g`.
    fn scores_from(&self, g: &Graph, paths: &AllPairs) -> Result<ScoreVector, CentralityError>;

    fn scores(&self, g: &Graph) -> Result<ScoreVector, CentralityError> {
        self.scores_from(g, &g.all_pairs())
    }
}

/// Name-indexed collection of centrality measures.
#[derive(Clone)]
pub struct CentralityRegistry {
    entries: BTreeMap<&'static str, Arc<dyn Centrality>>,
}

impl CentralityRegistry {
    pub fn empty() -> Self {
        CentralityRegistry {
            entries: BTreeMap::new(),
        }
    }

    /// Registers `c` under its name, replacing any previous entry.
    pub fn register(&mut self, c: Arc<dyn Centrality>) {
        self.entries.insert(c.name(), c);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn Centrality>> {
        self.entries.get(name).cloned()
    }

    pub fn resolve(&self, name: &str) -> Result<Arc<dyn Centrality>, CentralityError> {
        self.get(name).ok_or_else(|| CentralityError::Unknown(name.to_string()))
    }

    pub fn by_kind(&self, kind: CentralityKind) -> Option<Arc<dyn Centrality>> {
        self.entries.values().find(|c| c.kind() == kind).cloned()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.keys().copied()
    }
}

impl Default for CentralityRegistry {
    fn default() -> Self {
        let mut reg = CentralityRegistry::empty();
        reg.register(Arc::new(Closeness));
        reg.register(Arc::new(Harmonic));
        reg.register(Arc::new(Betweenness));
        reg
    }
}

impl fmt::Debug for CentralityRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.keys()).finish()
    }
}
