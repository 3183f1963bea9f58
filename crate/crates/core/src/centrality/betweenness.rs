//! Betweenness over unordered vertex pairs, accumulated Brandes-style with
//! exact rationals.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::CentralityError;
use crate::graph::{AllPairs, Distance, Graph, Vertex};
use crate::score::ExactScore;

use super::{Centrality, CentralityKind, ScoreVector};

#[derive(Debug, Clone, Copy, Default)]
pub struct Betweenness;

impl Centrality for Betweenness {
    fn kind(&self) -> CentralityKind {
        CentralityKind::Betweenness
    }

    fn is_geometric(&self) -> bool {
        false
    }

    fn scores_from(&self, g: &Graph, paths: &AllPairs) -> Result<ScoreVector, CentralityError> {
        Ok(ScoreVector {
            kind: CentralityKind::Betweenness,
            scores: brandes(g, paths),
            peripheralities: None,
        })
    }
}

pub fn betweenness(g: &Graph) -> ScoreVector {
    Betweenness.scores(g).expect("betweenness is total")
}

fn brandes(g: &Graph, paths: &AllPairs) -> Vec<ExactScore> {
    let n = g.n();
    let mut total = vec![BigRational::zero(); n];
    let mut delta = vec![BigRational::zero(); n];
    for s in 0..n {
        delta.iter_mut().for_each(|d| d.set_zero());
        let dist = paths.distances.row(s);
        let sigma = paths.path_counts.row(s);
        for &w in paths.bfs_order(s).iter().rev() {
            let Distance::Finite(dw) = dist[w] else { unreachable!() };
            if dw == 0 {
                continue;
            }
            // δ(v) += σ(s,v)/σ(s,w) · (1 + δ(w)) for every predecessor v of w
            let coeff = (BigRational::one() + &delta[w]) / BigInt::from(sigma[w].clone());
            for &v in g.neighbors(w) {
                if dist[v] == Distance::Finite(dw - 1) {
                    delta[v] += &coeff * BigInt::from(sigma[v].clone());
                }
            }
            total[w] += &delta[w];
        }
    }
    // every unordered pair was visited from both ends
    let two = BigInt::from(2);
    total.into_iter().map(|b| ExactScore::from(b / &two)).collect()
}

/// σ_ij(u): number of shortest i–j paths with `u` as an interior vertex.
/// Zero when `u` is not on any geodesic or the pair is disconnected.
pub fn geodesics_through(paths: &AllPairs, u: Vertex, i: Vertex, j: Vertex) -> BigUint {
    let (Some(iu), Some(uj), Some(ij)) = (
        paths.distances.finite(i, u),
        paths.distances.finite(u, j),
        paths.distances.finite(i, j),
    ) else {
        return BigUint::zero();
    };
    if u == i || u == j || iu + uj != ij {
        return BigUint::zero();
    }
    paths.sigma(i, u) * paths.sigma(u, j)
}

/// Fraction σ_ij(u) / σ_ij of i–j geodesics running through `u`.
pub fn pair_dependency(
    g: &Graph,
    paths: &AllPairs,
    u: Vertex,
    i: Vertex,
    j: Vertex,
) -> Result<ExactScore, CentralityError> {
    if i == j || u == i || u == j {
        return Err(CentralityError::InvalidTriple);
    }
    let sigma = paths.sigma(i, j);
    if sigma.is_zero() {
        return Err(CentralityError::UnreachablePair {
            i: g.label(i),
            j: g.label(j),
        });
    }
    Ok(ExactScore::from_biguints(&geodesics_through(paths, u, i, j), sigma))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// Sum of pair dependencies over unordered pairs, straight from the definition.
    fn pairwise_sum(g: &Graph) -> Vec<ExactScore> {
        let paths = g.all_pairs();
        (0..g.n())
            .map(|u| {
                let mut b = ExactScore::zero();
                for i in 0..g.n() {
                    for j in (i + 1)..g.n() {
                        if i != u && j != u && !paths.sigma(i, j).is_zero() {
                            b += &pair_dependency(g, &paths, u, i, j).unwrap();
                        }
                    }
                }
                b
            })
            .collect()
    }

    #[test]
    fn path() {
        let sv = betweenness(&Graph::from_edge_list("a b\nb c").unwrap());
        assert_eq!(sv.scores, [ExactScore::zero(), ExactScore::from_integer(1), ExactScore::zero()]);
    }

    #[test]
    fn four_cycle_is_half_everywhere() {
        // each opposite pair has two geodesics, one through each middle vertex
        let sv = betweenness(&cycle(4));
        assert!(sv.scores.iter().all(|s| *s == ExactScore::ratio(1, 2)));
    }

    #[test]
    fn pair_dependency_examples() {
        let p3 = Graph::from_edge_list("a b\nb c").unwrap();
        let ap = p3.all_pairs();
        assert_eq!(pair_dependency(&p3, &ap, 1, 0, 2).unwrap(), ExactScore::from_integer(1));

        let c4 = cycle(4);
        let ap = c4.all_pairs();
        assert_eq!(pair_dependency(&c4, &ap, 1, 0, 2).unwrap(), ExactScore::ratio(1, 2));
        // 2 is not on the geodesic 0–1
        assert!(pair_dependency(&c4, &ap, 2, 0, 1).unwrap().is_zero());
        assert_eq!(pair_dependency(&c4, &ap, 0, 0, 1), Err(CentralityError::InvalidTriple));
    }

    #[test]
    fn pair_dependency_unreachable() {
        let g = Graph::from_edge_list("a b\nb c\nd e").unwrap();
        let ap = g.all_pairs();
        assert!(matches!(
            pair_dependency(&g, &ap, 1, 0, 3),
            Err(CentralityError::UnreachablePair { .. })
        ));
    }

    #[test]
    fn brandes_matches_pairwise_definition() {
        let graphs = [
            cycle(5),
            cycle(6),
            Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (3, 5)]).unwrap(),
            Graph::from_edge_list("a b\nb c\nd e\ne f\nf d\nf g").unwrap(),
        ];
        for g in &graphs {
            assert_eq!(betweenness(g).scores, pairwise_sum(g));
        }
    }
}
