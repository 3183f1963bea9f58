//! Sweep checks. Each check is a named strategy that inspects a generated
//! graph, a scenario built from it, or both, for one centrality at a time.

use std::fmt;
use std::sync::Arc;

use crate::basin::{
    basin_dominance, peripherality_identity, rank_semi_monotone, score_semi_monotone, strict_rank_semi_monotone,
    Analysis, DominanceReport, EdgeAdditionScenario, MonotonicityVerdict,
};
use crate::centrality::{Centrality, CentralityKind};
use crate::error::LabError;

use super::pointwise::pointwise_for;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    /// Human-readable description of the failing instance.
    Fails(String),
}

impl Outcome {
    fn from_bool(ok: bool, detail: impl FnOnce() -> String) -> Self {
        if ok {
            Outcome::Holds
        } else {
            Outcome::Fails(detail())
        }
    }
}

pub trait Check: Send + Sync {
    fn name(&self) -> &'static str;

    fn applies_to(&self, kind: CentralityKind) -> bool {
        let _ = kind;
        true
    }

    /// Run once per generated graph.
    fn check_graph(&self, _g: &Analysis, _c: &dyn Centrality) -> Vec<Outcome> {
        Vec::new()
    }

    /// Run once per non-adjacent pair of a generated graph.
    fn check_scenario(&self, _s: &EdgeAdditionScenario, _c: &dyn Centrality) -> Option<Outcome> {
        None
    }
}

fn describe_verdict(s: &EdgeAdditionScenario, v: &MonotonicityVerdict) -> String {
    let g = s.graph();
    let parts: Vec<String> = v
        .witnesses
        .iter()
        .map(|w| {
            format!(
                "side {} z={} c(z)={}→{} c(e)={}→{}",
                w.side,
                g.label(w.z),
                w.before,
                w.after,
                w.endpoint_before,
                w.endpoint_after
            )
        })
        .collect();
    parts.join("; ")
}

fn describe_dominance(s: &EdgeAdditionScenario, d: &DominanceReport, strict: bool) -> String {
    let g = s.graph();
    let parts: Vec<String> = d
        .violations
        .iter()
        .filter(|v| strict || !v.is_tie())
        .map(|v| format!("side {} u={} Δu={} Δe={}", v.side, g.label(v.u), v.delta_u, v.delta_endpoint))
        .collect();
    parts.join("; ")
}

struct ScoreSemi;

impl Check for ScoreSemi {
    fn name(&self) -> &'static str {
        "score_semi"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        let v = score_semi_monotone(s, c);
        Some(Outcome::from_bool(v.is_semi_monotone(), || describe_verdict(s, &v)))
    }
}

struct RankSemi;

impl Check for RankSemi {
    fn name(&self) -> &'static str {
        "rank_semi"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        let v = rank_semi_monotone(s, c);
        Some(Outcome::from_bool(v.is_semi_monotone(), || describe_verdict(s, &v)))
    }
}

struct StrictRankSemi;

impl Check for StrictRankSemi {
    fn name(&self) -> &'static str {
        "strict_rank_semi"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        let v = strict_rank_semi_monotone(s, c);
        Some(Outcome::from_bool(v.is_semi_monotone(), || describe_verdict(s, &v)))
    }
}

struct Dominance;

impl Check for Dominance {
    fn name(&self) -> &'static str {
        "dominance"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        let d = basin_dominance(s, c);
        Some(Outcome::from_bool(d.nonstrict_holds, || describe_dominance(s, &d, false)))
    }
}

struct StrictDominance;

impl Check for StrictDominance {
    fn name(&self) -> &'static str {
        "strict_dominance"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        let d = basin_dominance(s, c);
        Some(Outcome::from_bool(d.strict_holds, || describe_dominance(s, &d, true)))
    }
}

struct PointwiseIneqs;

impl Check for PointwiseIneqs {
    fn name(&self) -> &'static str {
        "pointwise_ineqs"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        let violations = pointwise_for(s, c.kind());
        Some(Outcome::from_bool(violations.is_empty(), || {
            let g = s.graph();
            let v = &violations[0];
            format!(
                "{} violation(s), first {:?} side {} ({}, {}) lhs={} rhs={}",
                violations.len(),
                v.inequality,
                v.side,
                g.label(v.pair.0),
                g.label(v.pair.1),
                v.lhs,
                v.rhs
            )
        }))
    }
}

struct PeripheralityIdentity;

impl Check for PeripheralityIdentity {
    fn name(&self) -> &'static str {
        "peripherality_identity"
    }

    fn applies_to(&self, kind: CentralityKind) -> bool {
        kind == CentralityKind::Closeness
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, _c: &dyn Centrality) -> Option<Outcome> {
        let (lhs, rhs) = peripherality_identity(s);
        Some(Outcome::from_bool(lhs == rhs, || format!("p'(x)-p'(y)={lhs} but |K_yx|-|K_xy|={rhs}")))
    }
}

/// Strict dominance on a scenario implies strict rank semi-monotonicity on it.
struct ImplicationStrict;

impl Check for ImplicationStrict {
    fn name(&self) -> &'static str {
        "implication_thm1"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        if !basin_dominance(s, c).strict_holds {
            return Some(Outcome::Holds);
        }
        let v = strict_rank_semi_monotone(s, c);
        Some(Outcome::from_bool(v.is_semi_monotone(), || {
            format!("strict dominance holds but strict rank fails: {}", describe_verdict(s, &v))
        }))
    }
}

/// Dominance on a scenario implies rank semi-monotonicity on it.
struct ImplicationNonStrict;

impl Check for ImplicationNonStrict {
    fn name(&self) -> &'static str {
        "implication_thm2"
    }

    fn check_scenario(&self, s: &EdgeAdditionScenario, c: &dyn Centrality) -> Option<Outcome> {
        if !basin_dominance(s, c).nonstrict_holds {
            return Some(Outcome::Holds);
        }
        let v = rank_semi_monotone(s, c);
        Some(Outcome::from_bool(v.is_semi_monotone(), || {
            format!("dominance holds but rank fails: {}", describe_verdict(s, &v))
        }))
    }
}

/// b(u) = 0 exactly when the neighbourhood of u is a clique; one outcome per vertex.
struct CliqueLemma;

impl Check for CliqueLemma {
    fn name(&self) -> &'static str {
        "clique_lemma"
    }

    fn applies_to(&self, kind: CentralityKind) -> bool {
        kind == CentralityKind::Betweenness
    }

    fn check_graph(&self, a: &Analysis, c: &dyn Centrality) -> Vec<Outcome> {
        let g = a.graph();
        let Ok(scores) = a.scores(c) else {
            return Vec::new();
        };
        (0..g.n())
            .map(|u| {
                let zero = scores.get(u).is_zero();
                let clique = g.ego_is_clique(u);
                Outcome::from_bool(zero == clique, || {
                    format!("u={} b(u)={} ego clique={clique}", g.label(u), scores.get(u))
                })
            })
            .collect()
    }
}

/// Ordered, name-indexed set of checks.
#[derive(Clone)]
pub struct CheckRegistry {
    entries: Vec<Arc<dyn Check>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { entries: Vec::new() }
    }

    /// Adds `check`, replacing an entry with the same name in place.
    pub fn register(&mut self, check: Arc<dyn Check>) {
        match self.entries.iter().position(|c| c.name() == check.name()) {
            Some(i) => self.entries[i] = check,
            None => self.entries.push(check),
        }
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn Check>> {
        self.entries.iter().find(|c| c.name() == name).cloned()
    }

    pub fn resolve(&self, name: &str) -> Result<Arc<dyn Check>, LabError> {
        self.get(name).ok_or_else(|| LabError::UnknownCheck(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|c| c.name())
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        let mut reg = CheckRegistry::empty();
        let builtins: [Arc<dyn Check>; 10] = [
            Arc::new(ScoreSemi),
            Arc::new(RankSemi),
            Arc::new(StrictRankSemi),
            Arc::new(Dominance),
            Arc::new(StrictDominance),
            Arc::new(PointwiseIneqs),
            Arc::new(PeripheralityIdentity),
            Arc::new(ImplicationStrict),
            Arc::new(ImplicationNonStrict),
            Arc::new(CliqueLemma),
        ];
        for check in builtins {
            reg.register(check);
        }
        reg
    }
}

impl fmt::Debug for CheckRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centrality::{Betweenness, Closeness, Harmonic};
    use crate::counterexamples::{build_betweenness_family, build_closeness_family};

    #[test]
    fn registry_order_and_lookup() {
        let reg = CheckRegistry::default();
        assert_eq!(reg.names().count(), 10);
        assert_eq!(reg.names().next(), Some("score_semi"));
        assert!(reg.get("clique_lemma").is_some());
        assert!(matches!(reg.resolve("nope"), Err(LabError::UnknownCheck(_))));
    }

    #[test]
    fn closeness_family_outcomes() {
        let fam = build_closeness_family(10).unwrap();
        let s = EdgeAdditionScenario::new(fam.graph, fam.x, fam.y).unwrap();
        let reg = CheckRegistry::default();
        let run = |name: &str| reg.get(name).unwrap().check_scenario(&s, &Closeness).unwrap();
        assert_eq!(run("rank_semi"), Outcome::Holds);
        assert_eq!(run("dominance"), Outcome::Holds);
        assert_eq!(run("peripherality_identity"), Outcome::Holds);
        assert_eq!(run("implication_thm2"), Outcome::Holds);
        let Outcome::Fails(detail) = run("strict_rank_semi") else {
            panic!("strict rank must fail");
        };
        assert!(detail.contains("z=u"), "{detail}");
        assert!(matches!(run("strict_dominance"), Outcome::Fails(_)));
    }

    #[test]
    fn betweenness_family_outcomes() {
        let fam = build_betweenness_family(4).unwrap();
        let s = EdgeAdditionScenario::new(fam.graph, fam.x, fam.y).unwrap();
        let reg = CheckRegistry::default();
        let score = reg.get("score_semi").unwrap().check_scenario(&s, &Betweenness).unwrap();
        assert!(matches!(score, Outcome::Fails(_)));
        let clique = reg.get("clique_lemma").unwrap();
        assert!(clique.applies_to(CentralityKind::Betweenness));
        assert!(!clique.applies_to(CentralityKind::Harmonic));
        let outcomes = clique.check_graph(s.before(), &Betweenness);
        assert_eq!(outcomes.len(), 7);
        assert!(outcomes.iter().all(|o| *o == Outcome::Holds));
        assert_eq!(
            reg.get("strict_rank_semi").unwrap().check_scenario(&s, &Harmonic),
            Some(Outcome::Holds)
        );
    }
}
