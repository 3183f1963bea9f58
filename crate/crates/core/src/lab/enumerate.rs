use crate::error::LabError;
use crate::graph::{Graph, Vertex};

pub const MAX_ENUMERATION_N: usize = 7;

/// Every labeled connected simple graph on `n` vertices, in increasing order
/// of the edge bitmask. Bit `i` of the mask is the `i`-th pair of
/// `(0,1), (0,2), …, (0,n-1), (1,2), …`.
pub fn enumerate_connected_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, LabError> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(LabError::EnumerationRange(n));
    }
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    let masks = 0u64..(1u64 << pairs.len());
    Ok(masks.filter_map(move |mask| {
        let mut adj = [0u8; MAX_ENUMERATION_N];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
        if !bitmask_connected(&adj[..n]) {
            return None;
        }
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Some(Graph::from_edges(n, edges).expect("bitmask edges are simple"))
    }))
}

fn bitmask_connected(adj: &[u8]) -> bool {
    let full: u8 = if adj.len() == 8 { u8::MAX } else { (1u8 << adj.len()) - 1 };
    let mut seen = 1u8;
    let mut frontier = 1u8;
    while frontier != 0 {
        let mut next = 0u8;
        for (v, nbrs) in adj.iter().enumerate() {
            if frontier >> v & 1 == 1 {
                next |= nbrs;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}
