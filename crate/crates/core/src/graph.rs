//! Simple undirected graphs, hop distances and shortest-path counts.
//!
//! Vertices are dense ids `0..n`. Every graph carries one string label per
//! vertex; edge-list input preserves the labels it saw, other constructors
//! fall back to the decimal id.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::GraphError;

/// Dense vertex identifier.
pub type Vertex = usize;

/// Hop distance between two vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `n` vertices without edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            labels: None,
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge iterator. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut edge_count = 0;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
            edge_count += nbrs.len();
        }
        Ok(Graph {
            adjacency,
            labels: None,
            edge_count: edge_count / 2,
        })
    }

    /// Attaches external labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Parses the edge-list text format: one edge per line as two
    /// whitespace-separated labels, `#` comments and blank lines ignored.
    /// Labels get dense ids in first-seen order.
    pub fn from_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut ids: HashMap<&str, Vertex> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let [a, b] = tokens[..] else {
                return Err(GraphError::Malformed {
                    line: line_no,
                    reason: format!("expected two labels, found {}", tokens.len()),
                });
            };
            if a == b {
                return Err(GraphError::SelfLoopAtLine {
                    line: line_no,
                    label: a.to_string(),
                });
            }
            let mut ends = [0; 2];
            for (slot, label) in ends.iter_mut().zip([a, b]) {
                *slot = *ids.entry(label).or_insert_with(|| {
                    labels.push(label.to_string());
                    labels.len() - 1
                });
            }
            let [a, b] = ends;
            edges.push((a, b));
        }
        if edges.is_empty() {
            return Err(GraphError::EmptyDocument);
        }
        Graph::from_edges(labels.len(), edges)?.with_labels(labels)
    }

    /// Renders the graph in the edge-list format, one `a b` line per edge with `a < b` by id.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            out.push_str(&self.label(a));
            out.push(' ');
            out.push_str(&self.label(b));
            out.push('\n');
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n() && self.adjacency[a].binary_search(&b).is_ok()
    }

    /// Edges as `(a, b)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, nbrs)| nbrs.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
    }

    /// Unordered non-adjacent pairs `(x, y)` with `x < y`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.n();
        (0..n).flat_map(move |x| ((x + 1)..n).filter(move |&y| !self.has_edge(x, y)).map(move |y| (x, y)))
    }

    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<Vertex> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == label),
            None => label.parse().ok().filter(|&v: &Vertex| v < self.n()),
        }
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    /// Returns a new graph with the edge `(x, y)` added. `self` is untouched.
    pub fn add_edge(&self, x: Vertex, y: Vertex) -> Result<Graph, GraphError> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(GraphError::SelfLoop { vertex: x });
        }
        if self.has_edge(x, y) {
            return Err(GraphError::EdgeExists {
                x: self.label(x),
                y: self.label(y),
            });
        }
        let mut next = self.clone();
        for (a, b) in [(x, y), (y, x)] {
            let nbrs = &mut next.adjacency[a];
            let pos = nbrs.binary_search(&b).unwrap_err();
            nbrs.insert(pos, b);
        }
        next.edge_count += 1;
        Ok(next)
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Distance> {
        let mut dist = vec![Distance::Unreachable; self.n()];
        dist[source] = Distance::Finite(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let next = match dist[v] {
                Distance::Finite(d) => Distance::Finite(d + 1),
                Distance::Unreachable => unreachable!("queued vertices have finite distance"),
            };
            for &w in self.neighbors(v) {
                if dist[w] == Distance::Unreachable {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff a BFS from vertex 0 reaches every vertex. The one-vertex graph
    /// is connected; the empty graph is treated as connected too.
    pub fn is_connected(&self) -> bool {
        if self.n() <= 1 {
            return true;
        }
        self.bfs_distances(0).iter().all(|d| d.is_finite())
    }

    /// True iff the neighbours of `u` are pairwise adjacent.
    pub fn ego_is_clique(&self, u: Vertex) -> bool {
        let nbrs = self.neighbors(u);
        nbrs.iter()
            .enumerate()
            .all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| self.has_edge(a, b)))
    }

    /// Distances and shortest-path counts between every pair of vertices.
    pub fn all_pairs(&self) -> AllPairs {
        AllPairs::compute(self)
    }
}

/// Row-major `n × n` matrix of hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<Distance>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> Distance {
        self.entries[a * self.n + b]
    }

    pub fn row(&self, a: Vertex) -> &[Distance] {
        &self.entries[a * self.n..(a + 1) * self.n]
    }

    /// Finite distance, or `None` when the pair is disconnected.
    pub fn finite(&self, a: Vertex, b: Vertex) -> Option<u32> {
        self.get(a, b).finite()
    }
}

/// Row-major `n × n` matrix of shortest-path counts σ. σ(v, v) = 1 and
/// σ(a, b) = 0 exactly when `b` is unreachable from `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCountMatrix {
    n: usize,
    entries: Vec<BigUint>,
}

impl PathCountMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: Vertex, b: Vertex) -> &BigUint {
        &self.entries[a * self.n + b]
    }

    pub fn row(&self, a: Vertex) -> &[BigUint] {
        &self.entries[a * self.n..(a + 1) * self.n]
    }
}

/// Distance and path-count matrices of one graph, computed together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllPairs {
    pub distances: DistanceMatrix,
    pub path_counts: PathCountMatrix,
}

impl AllPairs {
    fn compute(g: &Graph) -> Self {
        let n = g.n();
        let mut distances = Vec::with_capacity(n * n);
        let mut path_counts = Vec::with_capacity(n * n);
        let mut order = Vec::with_capacity(n);
        for s in 0..n {
            let (dist, sigma) = count_paths_from(g, s, &mut order);
            distances.extend(dist);
            path_counts.extend(sigma);
        }
        AllPairs {
            distances: DistanceMatrix { n, entries: distances },
            path_counts: PathCountMatrix { n, entries: path_counts },
        }
    }

    pub fn n(&self) -> usize {
        self.distances.n
    }

    pub fn distance(&self, a: Vertex, b: Vertex) -> Distance {
        self.distances.get(a, b)
    }

    pub fn sigma(&self, a: Vertex, b: Vertex) -> &BigUint {
        self.path_counts.get(a, b)
    }

    /// Vertices reachable from `source`, sorted by non-decreasing distance.
    pub fn bfs_order(&self, source: Vertex) -> Vec<Vertex> {
        let row = self.distances.row(source);
        let mut order: Vec<Vertex> = (0..self.n()).filter(|&v| row[v].is_finite()).collect();
        order.sort_by_key(|&v| row[v]);
        order
    }
}

/// BFS from `source` that also accumulates σ along the BFS DAG.
fn count_paths_from(g: &Graph, source: Vertex, order: &mut Vec<Vertex>) -> (Vec<Distance>, Vec<BigUint>) {
    let n = g.n();
    let mut dist = vec![Distance::Unreachable; n];
    let mut sigma = vec![BigUint::zero(); n];
    dist[source] = Distance::Finite(0);
    sigma[source] = BigUint::one();
    order.clear();
    order.push(source);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let Distance::Finite(dv) = dist[v] else { unreachable!() };
        for &w in g.neighbors(v) {
            match dist[w] {
                Distance::Unreachable => {
                    dist[w] = Distance::Finite(dv + 1);
                    order.push(w);
                }
                Distance::Finite(dw) if dw != dv + 1 => continue,
                Distance::Finite(_) => {}
            }
            let add = sigma[v].clone();
            sigma[w] += add;
        }
    }
    (dist, sigma)
}
