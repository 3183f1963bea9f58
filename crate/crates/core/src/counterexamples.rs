//! The two counterexample families: a closeness graph where strict rank
//! semi-monotonicity fails, and a clique-attached triple where betweenness is
//! neither score nor strictly rank semi-monotone. Each family comes with a
//! validator that recomputes every stated property from scratch.

use std::fmt;

use serde::Serialize;

use crate::basin::{rank_semi_monotone, score_semi_monotone, strict_rank_semi_monotone, EdgeAdditionScenario, Side};
use crate::centrality::{betweenness, Betweenness, Closeness};
use crate::error::FamilyError;
use crate::graph::{Graph, Vertex};
use crate::lab::naive_betweenness_oracle_up_to;

/// Closeness family with leaf-star sizes `k` (around `y`) and `k + 4` (around `w`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosenessFamilySpec {
    pub k: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosenessFamily {
    pub graph: Graph,
    pub x: Vertex,
    pub y: Vertex,
    pub u: Vertex,
    pub w: Vertex,
}

/// Builds the closeness family member for `k`.
///
/// Vertex layout: `y` with `k` leaves, `a1`/`a2` adjacent to both `y` and `x`,
/// `b1`/`b2` adjacent to both `x` and `w` with `a1`-`b1` adjacent, `u` adjacent to `x`
/// and `w`, and `w` with `k + 4` leaves. That is `2k + 12` vertices and
/// `2k + 15` edges.
pub fn build_closeness_family(k: u32) -> Result<ClosenessFamily, FamilyError> {
    if k < 1 {
        return Err(FamilyError::ClosenessK(k));
    }
    const Y: Vertex = 0;
    const A1: Vertex = 1;
    const A2: Vertex = 2;
    const X: Vertex = 3;
    const B1: Vertex = 4;
    const B2: Vertex = 5;
    const U: Vertex = 6;
    const W: Vertex = 7;
    let k = k as usize;
    let mut labels: Vec<String> = ["y", "a1", "a2", "x", "b1", "b2", "u", "w"]
        .into_iter()
        .map(String::from)
        .collect();
    let mut edges = vec![
        (Y, A1),
        (Y, A2),
        (A1, X),
        (A2, X),
        (A1, B1),
        (X, B1),
        (X, B2),
        (X, U),
        (B1, W),
        (B2, W),
        (U, W),
    ];
    for i in 1..=k {
        edges.push((Y, labels.len()));
        labels.push(format!("yl{i}"));
    }
    for j in 1..=k + 4 {
        edges.push((W, labels.len()));
        labels.push(format!("wl{j}"));
    }
    let graph = Graph::from_edges(labels.len(), edges)
        .and_then(|g| g.with_labels(labels))
        .expect("family construction is a simple graph");
    Ok(ClosenessFamily {
        graph,
        x: X,
        y: Y,
        u: U,
        w: W,
    })
}

/// Betweenness family: a clique on `m` vertices plus `x`, `y`, `u`, each
/// adjacent to every clique vertex and to nothing else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BetweennessFamilySpec {
    pub m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetweennessFamily {
    pub graph: Graph,
    pub x: Vertex,
    pub y: Vertex,
    pub u: Vertex,
}

pub fn build_betweenness_family(m: u32) -> Result<BetweennessFamily, FamilyError> {
    if m < 1 {
        return Err(FamilyError::BetweennessM(m));
    }
    let m = m as usize;
    let (x, y, u) = (m, m + 1, m + 2);
    let mut edges = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            edges.push((a, b));
        }
        edges.extend([(x, a), (y, a), (u, a)]);
    }
    let mut labels: Vec<String> = (1..=m).map(|i| format!("c{i}")).collect();
    labels.extend(["x", "y", "u"].map(String::from));
    let graph = Graph::from_edges(m + 3, edges)
        .and_then(|g| g.with_labels(labels))
        .expect("family construction is a simple graph");
    Ok(BetweennessFamily { graph, x, y, u })
}

/// One machine-checked statement about a family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub family: &'static str,
    pub parameter: u32,
    pub claims: Vec<Claim>,
}

impl ClaimReport {
    fn new(family: &'static str, parameter: u32) -> Self {
        ClaimReport {
            family,
            parameter,
            claims: Vec::new(),
        }
    }

    fn check(&mut self, name: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display, passed: bool) {
        self.claims.push(Claim {
            name: name.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
        });
    }

    fn equal<T: fmt::Display + PartialEq>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        let passed = expected == actual;
        self.check(name, expected, actual, passed);
    }

    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }
}

/// Recomputes the closeness family's peripheralities and verdicts for `k ≥ 10`.
pub fn validate_closeness_claims(k: u32) -> Result<ClaimReport, FamilyError> {
    if k < 10 {
        return Err(FamilyError::ClosenessClaimsK(k));
    }
    let fam = build_closeness_family(k)?;
    let mut report = ClaimReport::new("closeness", k);
    let kk = u64::from(k);
    report.equal("vertex count = 2k+12", 2 * kk + 12, fam.graph.n() as u64);
    report.equal("edge count = 2k+15", 2 * kk + 15, fam.graph.edge_count() as u64);
    report.equal("G connected", true, fam.graph.is_connected());

    let s = EdgeAdditionScenario::new(fam.graph.clone(), fam.x, fam.y).expect("family scenario is valid");
    let (before, after) = s.scores(&Closeness);
    let p = |v| before.peripherality(v).expect("closeness carries peripheralities");
    let pp = |v| after.peripherality(v).expect("closeness carries peripheralities");
    let (x, y, u) = (fam.x, fam.y, fam.u);

    report.equal("p(u) = 2(k+4)+4k+13", 2 * (kk + 4) + 4 * kk + 13, p(u));
    report.equal("p'(u) = 2(k+4)+3k+12", 2 * (kk + 4) + 3 * kk + 12, pp(u));
    report.equal("p(x) = 3(k+4)+3k+9", 3 * (kk + 4) + 3 * kk + 9, p(x));
    report.equal("p'(x) = 3(k+4)+2k+8", 3 * (kk + 4) + 2 * kk + 8, pp(x));
    report.equal("p(y) = 4(k+4)+k+15", 4 * (kk + 4) + kk + 15, p(y));
    report.equal("p'(y) = 4(k+4)+k+12", 4 * (kk + 4) + kk + 12, pp(y));

    report.check("p(x) = p(u)", p(u), p(x), p(x) == p(u));
    report.check("p'(x) = p'(u)", pp(u), pp(x), pp(x) == pp(u));
    report.check("p(y) <= p(u)", format!("<= {}", p(u)), p(y), p(y) <= p(u));
    report.check("p'(y) > p'(u)", format!("> {}", pp(u)), pp(y), pp(y) > pp(u));

    let rank = rank_semi_monotone(&s, &Closeness);
    report.equal("rank semi-monotone at x", true, rank.holds_at_x);
    report.equal("rank semi-monotone at y", false, rank.holds_at_y);
    let u_witness = rank.witnesses_at(Side::Y).any(|w| w.z == u);
    report.equal("u witnesses the failure at y", true, u_witness);

    let strict = strict_rank_semi_monotone(&s, &Closeness);
    report.equal("strictly rank semi-monotone at x", false, strict.holds_at_x);
    report.equal("strictly rank semi-monotone at y", false, strict.holds_at_y);
    Ok(report)
}

/// Largest family member the geodesic-enumeration cross-check runs on.
const ORACLE_MAX_VERTICES: usize = 13;

/// Recomputes the betweenness family's zero scores and verdicts.
pub fn validate_betweenness_claims(m: u32) -> Result<ClaimReport, FamilyError> {
    let fam = build_betweenness_family(m)?;
    let mut report = ClaimReport::new("betweenness", m);
    let mm = m as usize;
    report.equal("vertex count = m+3", mm + 3, fam.graph.n());
    report.equal("edge count = m(m-1)/2 + 3m", mm * (mm - 1) / 2 + 3 * mm, fam.graph.edge_count());

    let s = EdgeAdditionScenario::new(fam.graph.clone(), fam.x, fam.y).expect("family scenario is valid");
    for (tag, g) in [("G", s.graph()), ("G'", s.graph_prime())] {
        let b = betweenness(g);
        let oracle = naive_betweenness_oracle_up_to(g, ORACLE_MAX_VERTICES).ok();
        for (name, v) in [("x", fam.x), ("y", fam.y), ("u", fam.u)] {
            report.equal(format!("b({name}) = 0 in {tag}"), "0/1".to_string(), b.get(v).to_string());
            report.equal(format!("{tag}[{name}] is a clique"), true, g.ego_is_clique(v));
        }
        if let Some(oracle) = oracle {
            report.equal(format!("geodesic enumeration agrees with Brandes in {tag}"), true, oracle == b);
        }
    }

    let score = score_semi_monotone(&s, &Betweenness);
    report.equal("score semi-monotone", false, score.is_semi_monotone());
    let strict = strict_rank_semi_monotone(&s, &Betweenness);
    report.equal("strictly rank semi-monotone at x", false, strict.holds_at_x);
    report.equal("strictly rank semi-monotone at y", false, strict.holds_at_y);
    Ok(report)
}
