use crate::error::CentralityError;
use crate::graph::{AllPairs, Distance, Graph};
use crate::score::ExactScore;

use super::{Centrality, CentralityKind, ScoreVector};

/// Reciprocal of the distance sum (peripherality). Connected graphs only.
#[derive(Debug, Clone, Copy, Default)]
pub struct Closeness;

impl Centrality for Closeness {
    fn kind(&self) -> CentralityKind {
        CentralityKind::Closeness
    }

    fn is_geometric(&self) -> bool {
        true
    }

    fn scores_from(&self, g: &Graph, paths: &AllPairs) -> Result<ScoreVector, CentralityError> {
        let n = g.n();
        let mut peripheralities = Vec::with_capacity(n);
        for u in 0..n {
            let mut sum = 0u64;
            for (v, d) in paths.distances.row(u).iter().enumerate() {
                match d {
                    Distance::Finite(d) => sum += u64::from(*d),
                    Distance::Unreachable => {
                        return Err(CentralityError::Disconnected {
                            from: g.label(u),
                            to: g.label(v),
                        })
                    }
                }
            }
            peripheralities.push(sum);
        }
        // p = 0 only for the single-vertex graph, whose score is 0
        let scores = peripheralities.iter().map(|&p| ExactScore::reciprocal_or_zero(p)).collect();
        Ok(ScoreVector {
            kind: CentralityKind::Closeness,
            scores,
            peripheralities: Some(peripheralities),
        })
    }
}

pub fn closeness(g: &Graph) -> Result<ScoreVector, CentralityError> {
    Closeness.scores(g)
}
