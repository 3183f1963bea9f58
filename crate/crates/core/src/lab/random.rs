use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::LabError;
use crate::graph::Graph;

/// Generator description echoed into randomized reports.
pub const PRNG_SPEC: &str = "ChaCha8 (rand_chacha 0.3, seed_from_u64); G(n,p) keeps pair (i,j), i<j, \
     in lexicographic order when gen_bool(p); resample until connected, at most 1000 attempts";

pub const MAX_REJECTIONS: usize = 1000;

pub type SweepRng = ChaCha8Rng;

pub fn seeded_rng(seed: u64) -> SweepRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected G(n, p) sample, deterministic in `seed`.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph, LabError> {
    random_connected_graph_with(&mut seeded_rng(seed), n, p)
}

/// Like [`random_connected_graph`] but drawing from a caller-owned stream.
pub fn random_connected_graph_with<R: Rng>(rng: &mut R, n: usize, p: f64) -> Result<Graph, LabError> {
    if n < 1 || !(p > 0.0 && p <= 1.0) {
        return Err(LabError::RandomParams { n, p });
    }
    for _ in 0..MAX_REJECTIONS {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("sampled edges are simple");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(LabError::TooManyRejections {
        n,
        p,
        attempts: MAX_REJECTIONS,
    })
}
