use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::centrality::{CentralityKind, ScoreVector};
use crate::error::LabError;
use crate::graph::{Graph, Vertex};
use crate::score::ExactScore;

pub const ORACLE_MAX_N: usize = 12;

/// Betweenness by listing every geodesic explicitly.
///
/// For each unordered pair `{i, j}` a DFS walks every shortest path from `i`
/// to `j`, counting the paths and, per interior vertex, the paths through it.
/// Shares nothing with the Brandes path beyond the adjacency lists.
pub fn naive_betweenness_oracle(g: &Graph) -> Result<ScoreVector, LabError> {
    naive_betweenness_oracle_up_to(g, ORACLE_MAX_N)
}

/// [`naive_betweenness_oracle`] with a caller-chosen vertex limit, for graphs
/// known to have few geodesics.
pub fn naive_betweenness_oracle_up_to(g: &Graph, max_n: usize) -> Result<ScoreVector, LabError> {
    let n = g.n();
    if n > max_n {
        return Err(LabError::OracleTooLarge { n, max: max_n });
    }
    let mut scores = vec![ExactScore::zero(); n];
    let mut through = vec![BigUint::zero(); n];
    for j in 0..n {
        let to_j = hop_distances(g, j);
        for i in 0..j {
            if to_j[i].is_none() {
                continue;
            }
            through.iter_mut().for_each(|c| c.set_zero());
            let mut total = BigUint::zero();
            let mut path = vec![i];
            walk_geodesics(g, &to_j, j, &mut path, &mut total, &mut through);
            for (u, count) in through.iter().enumerate() {
                if !count.is_zero() {
                    scores[u] += &ExactScore::from_biguints(count, &total);
                }
            }
        }
    }
    Ok(ScoreVector {
        kind: CentralityKind::Betweenness,
        scores,
        peripheralities: None,
    })
}

fn walk_geodesics(
    g: &Graph,
    to_target: &[Option<usize>],
    target: Vertex,
    path: &mut Vec<Vertex>,
    total: &mut BigUint,
    through: &mut [BigUint],
) {
    let v = *path.last().expect("path starts at the source");
    if v == target {
        *total += 1u32;
        for &interior in &path[1..path.len() - 1] {
            through[interior] += 1u32;
        }
        return;
    }
    let dv = to_target[v].expect("geodesic vertices reach the target");
    for &w in g.neighbors(v) {
        if to_target[w] == Some(dv - 1) {
            path.push(w);
            walk_geodesics(g, to_target, target, path, total, through);
            path.pop();
        }
    }
}

fn hop_distances(g: &Graph, source: Vertex) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        let next = dist[v].map(|d| d + 1);
        for &w in g.neighbors(v) {
            if dist[w].is_none() {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    dist
}
