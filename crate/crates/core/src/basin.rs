//! Edge-addition scenarios, basins, basin dominance and semi-monotonicity
//! verdicts.
//!
//! A scenario is a connected graph `G`, two non-adjacent vertices `x`, `y`
//! and `G' = G + (x, y)`. All comparisons are exact.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::centrality::{Centrality, CentralityKind, ScoreVector};
use crate::error::{CentralityError, ScenarioError};
use crate::graph::{AllPairs, Distance, Graph, Vertex};
use crate::score::ExactScore;

/// A graph with its all-pairs data and lazily computed scores, cached per
/// centrality kind.
#[derive(Debug)]
pub struct Analysis {
    graph: Graph,
    paths: AllPairs,
    scores: [OnceLock<Result<ScoreVector, CentralityError>>; 3],
}

impl Analysis {
    pub fn new(graph: Graph) -> Self {
        let paths = graph.all_pairs();
        Analysis {
            graph,
            paths,
            scores: Default::default(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn paths(&self) -> &AllPairs {
        &self.paths
    }

    pub fn distance(&self, a: Vertex, b: Vertex) -> u32 {
        self.paths
            .distances
            .finite(a, b)
            .expect("analysis used on a disconnected pair")
    }

    pub fn scores(&self, c: &dyn Centrality) -> Result<&ScoreVector, CentralityError> {
        self.scores[c.kind().index()]
            .get_or_init(|| c.scores_from(&self.graph, &self.paths))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// First pair `(a, b)` with `b` unreachable from `a`, if any.
    pub fn disconnected_pair(&self) -> Option<(Vertex, Vertex)> {
        if self.graph.n() == 0 {
            return None;
        }
        self.paths
            .distances
            .row(0)
            .iter()
            .position(|d| *d == Distance::Unreachable)
            .map(|b| (0, b))
    }
}

/// Which endpoint of the new edge a statement is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    X,
    Y,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::X => "x",
            Side::Y => "y",
        })
    }
}

#[derive(Debug)]
pub struct EdgeAdditionScenario {
    before: Arc<Analysis>,
    after: Analysis,
    x: Vertex,
    y: Vertex,
}

impl EdgeAdditionScenario {
    pub fn new(g: Graph, x: Vertex, y: Vertex) -> Result<Self, ScenarioError> {
        Self::from_analysis(Arc::new(Analysis::new(g)), x, y)
    }

    /// Builds a scenario on top of an existing analysis of `G`, so that one
    /// graph's matrices and scores are shared across all its vertex pairs.
    pub fn from_analysis(before: Arc<Analysis>, x: Vertex, y: Vertex) -> Result<Self, ScenarioError> {
        let g = before.graph();
        if x == y {
            return Err(ScenarioError::SameEndpoint);
        }
        if g.has_edge(x, y) {
            return Err(ScenarioError::Adjacent {
                x: g.label(x),
                y: g.label(y),
            });
        }
        let g_prime = g.add_edge(x, y)?;
        if let Some((a, b)) = before.disconnected_pair() {
            return Err(ScenarioError::Disconnected {
                from: g.label(a),
                to: g.label(b),
            });
        }
        Ok(EdgeAdditionScenario {
            after: Analysis::new(g_prime),
            before,
            x,
            y,
        })
    }

    pub fn x(&self) -> Vertex {
        self.x
    }

    pub fn y(&self) -> Vertex {
        self.y
    }

    pub fn endpoint(&self, side: Side) -> Vertex {
        match side {
            Side::X => self.x,
            Side::Y => self.y,
        }
    }

    pub fn graph(&self) -> &Graph {
        self.before.graph()
    }

    pub fn graph_prime(&self) -> &Graph {
        self.after.graph()
    }

    pub fn before(&self) -> &Analysis {
        &self.before
    }

    pub fn after(&self) -> &Analysis {
        &self.after
    }

    /// Scores in `G` and in `G'`.
    pub fn scores(&self, c: &dyn Centrality) -> (&ScoreVector, &ScoreVector) {
        let msg = "scenario graphs are connected";
        (
            self.before.scores(c).expect(msg),
            self.after.scores(c).expect(msg),
        )
    }

    /// Δ_v = c'(v) − c(v).
    pub fn delta(&self, c: &dyn Centrality, v: Vertex) -> ExactScore {
        let (before, after) = self.scores(c);
        after.get(v) - before.get(v)
    }

    pub fn basins(&self) -> BasinPartition {
        basins(self)
    }
}

/// `k_xy` holds vertices at least as close to `x` as to `y`, `k_yx` the
/// converse; equidistant vertices are in both. Both lists are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasinPartition {
    pub k_xy: Vec<Vertex>,
    pub k_yx: Vec<Vertex>,
}

impl BasinPartition {
    pub fn basin(&self, side: Side) -> &[Vertex] {
        match side {
            Side::X => &self.k_xy,
            Side::Y => &self.k_yx,
        }
    }

    pub fn contains(&self, side: Side, v: Vertex) -> bool {
        self.basin(side).binary_search(&v).is_ok()
    }

    pub fn overlap(&self) -> Vec<Vertex> {
        self.k_xy
            .iter()
            .copied()
            .filter(|v| self.k_yx.binary_search(v).is_ok())
            .collect()
    }
}

/// Basins computed from distances in `G`.
pub fn basins(s: &EdgeAdditionScenario) -> BasinPartition {
    let g = s.before();
    let (mut k_xy, mut k_yx) = (Vec::new(), Vec::new());
    for u in 0..g.graph().n() {
        let (dx, dy) = (g.distance(u, s.x), g.distance(u, s.y));
        if dx <= dy {
            k_xy.push(u);
        }
        if dy <= dx {
            k_yx.push(u);
        }
    }
    BasinPartition { k_xy, k_yx }
}

/// The checkable statements about a scenario.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Definition {
    #[serde(rename = "score")]
    ScoreSemi,
    #[serde(rename = "rank")]
    RankSemi,
    #[serde(rename = "strict-rank")]
    StrictRankSemi,
    #[serde(rename = "dominance")]
    Dominance,
    #[serde(rename = "strict-dominance")]
    StrictDominance,
    #[serde(rename = "pointwise")]
    Pointwise,
    #[serde(rename = "lemma3")]
    PeripheralityIdentity,
}

impl Definition {
    pub const ALL: [Definition; 7] = [
        Definition::ScoreSemi,
        Definition::RankSemi,
        Definition::StrictRankSemi,
        Definition::Dominance,
        Definition::StrictDominance,
        Definition::Pointwise,
        Definition::PeripheralityIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Definition::ScoreSemi => "score",
            Definition::RankSemi => "rank",
            Definition::StrictRankSemi => "strict-rank",
            Definition::Dominance => "dominance",
            Definition::StrictDominance => "strict-dominance",
            Definition::Pointwise => "pointwise",
            Definition::PeripheralityIdentity => "lemma3",
        }
    }
}

impl fmt::Display for Definition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Definition {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Definition::ALL
            .into_iter()
            .find(|d| d.name() == s)
            .ok_or_else(|| format!("unknown definition '{s}'"))
    }
}

/// A vertex `z` that breaks the statement for one endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub z: Vertex,
    pub side: Side,
    pub before: ExactScore,
    pub after: ExactScore,
    pub endpoint_before: ExactScore,
    pub endpoint_after: ExactScore,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotonicityVerdict {
    pub definition: Definition,
    pub kind: CentralityKind,
    pub holds_at_x: bool,
    pub holds_at_y: bool,
    pub witnesses: Vec<Witness>,
}

impl MonotonicityVerdict {
    pub fn is_semi_monotone(&self) -> bool {
        self.holds_at_x || self.holds_at_y
    }

    /// Both endpoints satisfy the statement.
    pub fn is_monotone(&self) -> bool {
        self.holds_at_x && self.holds_at_y
    }

    pub fn holds_at(&self, side: Side) -> bool {
        match side {
            Side::X => self.holds_at_x,
            Side::Y => self.holds_at_y,
        }
    }

    pub fn witnesses_at(&self, side: Side) -> impl Iterator<Item = &Witness> {
        self.witnesses.iter().filter(move |w| w.side == side)
    }
}

fn verdict_by_side<F>(s: &EdgeAdditionScenario, c: &dyn Centrality, definition: Definition, fails: F) -> MonotonicityVerdict
where
    F: Fn(&ExactScore, &ExactScore, &ExactScore, &ExactScore) -> bool,
{
    let (before, after) = s.scores(c);
    let mut witnesses = Vec::new();
    for side in [Side::X, Side::Y] {
        let e = s.endpoint(side);
        let (eb, ea) = (before.get(e), after.get(e));
        for z in (0..before.len()).filter(|&z| z != s.x && z != s.y) {
            let (zb, za) = (before.get(z), after.get(z));
            if fails(zb, za, eb, ea) {
                witnesses.push(Witness {
                    z,
                    side,
                    before: zb.clone(),
                    after: za.clone(),
                    endpoint_before: eb.clone(),
                    endpoint_after: ea.clone(),
                });
            }
        }
    }
    MonotonicityVerdict {
        definition,
        kind: c.kind(),
        holds_at_x: !witnesses.iter().any(|w| w.side == Side::X),
        holds_at_y: !witnesses.iter().any(|w| w.side == Side::Y),
        witnesses,
    }
}

/// At least one endpoint's score strictly increases. A failing side carries
/// the endpoint itself as witness.
pub fn score_semi_monotone(s: &EdgeAdditionScenario, c: &dyn Centrality) -> MonotonicityVerdict {
    let (before, after) = s.scores(c);
    let mut witnesses = Vec::new();
    for side in [Side::X, Side::Y] {
        let e = s.endpoint(side);
        let (eb, ea) = (before.get(e), after.get(e));
        if eb >= ea {
            witnesses.push(Witness {
                z: e,
                side,
                before: eb.clone(),
                after: ea.clone(),
                endpoint_before: eb.clone(),
                endpoint_after: ea.clone(),
            });
        }
    }
    MonotonicityVerdict {
        definition: Definition::ScoreSemi,
        kind: c.kind(),
        holds_at_x: !witnesses.iter().any(|w| w.side == Side::X),
        holds_at_y: !witnesses.iter().any(|w| w.side == Side::Y),
        witnesses,
    }
}

/// Dominated vertices stay dominated, tied vertices do not overtake.
pub fn rank_semi_monotone(s: &EdgeAdditionScenario, c: &dyn Centrality) -> MonotonicityVerdict {
    verdict_by_side(s, c, Definition::RankSemi, |zb, za, eb, ea| {
        (zb < eb && za >= ea) || (zb == eb && za > ea)
    })
}

/// Every weakly dominated vertex ends up strictly dominated.
pub fn strict_rank_semi_monotone(s: &EdgeAdditionScenario, c: &dyn Centrality) -> MonotonicityVerdict {
    verdict_by_side(s, c, Definition::StrictRankSemi, |zb, za, eb, ea| zb <= eb && za >= ea)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceViolation {
    pub u: Vertex,
    pub side: Side,
    pub delta_u: ExactScore,
    pub delta_endpoint: ExactScore,
}

impl DominanceViolation {
    /// Δ_u = Δ_endpoint: breaks only the strict form.
    pub fn is_tie(&self) -> bool {
        self.delta_u == self.delta_endpoint
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceReport {
    pub kind: CentralityKind,
    pub strict_holds: bool,
    pub nonstrict_holds: bool,
    /// Every basin member with Δ_u ≥ Δ_endpoint.
    pub violations: Vec<DominanceViolation>,
}

pub fn basin_dominance(s: &EdgeAdditionScenario, c: &dyn Centrality) -> DominanceReport {
    let partition = s.basins();
    let (before, after) = s.scores(c);
    let delta = |v: Vertex| after.get(v) - before.get(v);
    let mut violations = Vec::new();
    for side in [Side::X, Side::Y] {
        let e = s.endpoint(side);
        let delta_endpoint = delta(e);
        for &u in partition.basin(side).iter().filter(|&&u| u != e) {
            let delta_u = delta(u);
            if delta_u >= delta_endpoint {
                violations.push(DominanceViolation {
                    u,
                    side,
                    delta_u,
                    delta_endpoint: delta_endpoint.clone(),
                });
            }
        }
    }
    DominanceReport {
        kind: c.kind(),
        strict_holds: violations.is_empty(),
        nonstrict_holds: violations.iter().all(DominanceViolation::is_tie),
        violations,
    }
}

/// Both sides of `p'(x) − p'(y) = |K_yx| − |K_xy|`, as `(lhs, rhs)`.
pub fn peripherality_identity(s: &EdgeAdditionScenario) -> (i64, i64) {
    let p_after = |v: Vertex| -> i64 {
        s.after()
            .paths()
            .distances
            .row(v)
            .iter()
            .map(|d| i64::from(d.finite().expect("G' is connected")))
            .sum()
    };
    let partition = s.basins();
    (
        p_after(s.x) - p_after(s.y),
        partition.k_yx.len() as i64 - partition.k_xy.len() as i64,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::{Betweenness, Closeness, Harmonic};

    fn path3() -> Graph {
        Graph::from_edge_list("a b\nb c").unwrap()
    }

    #[test]
    fn scenario_preconditions() {
        assert!(matches!(
            EdgeAdditionScenario::new(path3(), 0, 1),
            Err(ScenarioError::Adjacent { .. })
        ));
        assert!(matches!(
            EdgeAdditionScenario::new(path3(), 2, 2),
            Err(ScenarioError::SameEndpoint)
        ));
        // n = 2 without the edge is disconnected
        assert!(matches!(
            EdgeAdditionScenario::new(Graph::empty(2), 0, 1),
            Err(ScenarioError::Disconnected { .. })
        ));
        let g = Graph::from_edge_list("a b\nb c\nd e").unwrap();
        assert!(matches!(
            EdgeAdditionScenario::new(g, 0, 2),
            Err(ScenarioError::Disconnected { .. })
        ));
        let s = EdgeAdditionScenario::new(path3(), 0, 2).unwrap();
        assert_eq!(s.graph().edge_count(), 2);
        assert_eq!(s.graph_prime().edge_count(), 3);
    }

    #[test]
    fn path_basins() {
        let s = EdgeAdditionScenario::new(path3(), 0, 2).unwrap();
        let b = s.basins();
        assert_eq!(b.k_xy, [0, 1]);
        assert_eq!(b.k_yx, [1, 2]);
        assert_eq!(b.overlap(), [1]);
        assert!(b.contains(Side::X, 0) && !b.contains(Side::X, 2));
    }

    #[test]
    fn symmetric_pair_has_equal_basins_and_zero_identity() {
        // rotating the 6-cycle by three swaps x and y
        let g = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let s = EdgeAdditionScenario::new(g, 0, 3).unwrap();
        let b = s.basins();
        assert_eq!(b.k_xy.len(), b.k_yx.len());
        assert_eq!(peripherality_identity(&s), (0, 0));
        for c in [&Closeness as &dyn Centrality, &Harmonic, &Betweenness] {
            assert!(rank_semi_monotone(&s, c).is_semi_monotone());
        }
    }

    #[test]
    fn path_verdicts() {
        let s = EdgeAdditionScenario::new(path3(), 0, 2).unwrap();
        for c in [&Closeness as &dyn Centrality, &Harmonic] {
            let v = score_semi_monotone(&s, c);
            assert!(v.is_monotone() && v.witnesses.is_empty());
            assert!(basin_dominance(&s, c).strict_holds);
        }
        // b(b) drops from 1 to 0 but b is equidistant from both endpoints
        let v = score_semi_monotone(&s, &Betweenness);
        assert!(!v.holds_at_x && !v.holds_at_y);
        assert_eq!(v.witnesses.len(), 2);
        assert!(v.witnesses.iter().all(|w| w.before.is_zero() && w.after.is_zero()));
        let r = rank_semi_monotone(&s, &Betweenness);
        assert!(r.is_monotone());
    }

    #[test]
    fn strictness_distinguishes_ties() {
        // star with centre 0: leaf 3 ties both endpoints before the addition
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = EdgeAdditionScenario::new(star, 1, 2).unwrap();
        let h = strict_rank_semi_monotone(&s, &Harmonic);
        assert!(h.is_monotone(), "{h:?}");
        let r = rank_semi_monotone(&s, &Closeness);
        assert!(r.is_monotone());
    }

    #[test]
    fn dominance_report_flags() {
        let s = EdgeAdditionScenario::new(path3(), 0, 2).unwrap();
        let rep = basin_dominance(&s, &Betweenness);
        // Δ_b = −1 < Δ_a = 0, so dominance holds strictly
        assert!(rep.strict_holds && rep.nonstrict_holds);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = EdgeAdditionScenario::new(star, 1, 2).unwrap();
        let rep = basin_dominance(&s, &Betweenness);
        // leaf 3 is equidistant (Δ = 0) while Δ_x = 0: a tie
        assert!(!rep.strict_holds && rep.nonstrict_holds);
        assert!(rep.violations.iter().all(DominanceViolation::is_tie));
    }

    #[test]
    fn score_cache_is_reused() {
        let s = EdgeAdditionScenario::new(path3(), 0, 2).unwrap();
        let (a, _) = s.scores(&Harmonic);
        let (b, _) = s.scores(&Harmonic);
        assert!(std::ptr::eq(a, b));
        assert_eq!(s.delta(&Harmonic, 0), ExactScore::ratio(1, 2));
    }

    #[test]
    fn definition_names_round_trip() {
        for d in Definition::ALL {
            assert_eq!(d.name().parse::<Definition>().unwrap(), d);
            assert_eq!(serde_json::to_value(d).unwrap(), d.name());
        }
    }
}
