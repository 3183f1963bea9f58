use crate::error::CentralityError;
use crate::graph::{AllPairs, Graph};
use crate::score::ExactScore;

use super::{Centrality, CentralityKind, ScoreVector};

/// Sum of reciprocal distances; unreachable vertices contribute nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct Harmonic;

impl Centrality for Harmonic {
    fn kind(&self) -> CentralityKind {
        CentralityKind::Harmonic
    }

    fn is_geometric(&self) -> bool {
        true
    }

    fn scores_from(&self, g: &Graph, paths: &AllPairs) -> Result<ScoreVector, CentralityError> {
        let scores = (0..g.n())
            .map(|u| {
                let mut h = ExactScore::zero();
                for d in paths.distances.row(u).iter().filter_map(|d| d.finite()) {
                    h += &ExactScore::reciprocal_or_zero(u64::from(d));
                }
                h
            })
            .collect();
        Ok(ScoreVector {
            kind: CentralityKind::Harmonic,
            scores,
            peripheralities: None,
        })
    }
}

pub fn harmonic(g: &Graph) -> ScoreVector {
    Harmonic.scores(g).expect("harmonic centrality is total")
}
