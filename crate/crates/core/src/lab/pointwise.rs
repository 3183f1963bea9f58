//! Vertex-by-vertex inequalities behind the dominance results: distance
//! savings (closeness), reciprocal-distance gains (harmonic, strict towards the
//! far endpoint) and non-decreasing endpoint pair dependencies (betweenness).

use num_rational::Ratio;
use serde::Serialize;

use crate::basin::{EdgeAdditionScenario, Side};
use crate::centrality::{geodesics_through, CentralityKind};
use crate::graph::Vertex;
use crate::score::ExactScore;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Inequality {
    /// d(u,z) − d'(u,z) ≤ d(e,z) − d'(e,z) for u in the basin of e.
    DistanceSaving,
    /// 1/d'(u,z) − 1/d(u,z) ≤ 1/d'(e,z) − 1/d(e,z) for u in the basin of e.
    ReciprocalGain,
    /// The reciprocal-gain inequality is strict when z is the other endpoint.
    ReciprocalGainStrict,
    /// σ'_ij(e)/σ'_ij ≥ σ_ij(e)/σ_ij for every pair i, j ≠ e.
    EndpointDependency,
}

impl Inequality {
    pub fn centrality(self) -> CentralityKind {
        match self {
            Inequality::DistanceSaving => CentralityKind::Closeness,
            Inequality::ReciprocalGain | Inequality::ReciprocalGainStrict => CentralityKind::Harmonic,
            Inequality::EndpointDependency => CentralityKind::Betweenness,
        }
    }
}

/// A failed instance. `pair` is `(u, z)` for the distance inequalities and
/// `(i, j)` for endpoint dependencies; `lhs` and `rhs` are the two sides
/// (for dependencies, `lhs` is the change and `rhs` is zero).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointwiseViolation {
    pub inequality: Inequality,
    pub side: Side,
    pub pair: (Vertex, Vertex),
    pub lhs: ExactScore,
    pub rhs: ExactScore,
}

/// All pointwise inequalities for both endpoints; empty when everything holds.
pub fn verify_pointwise_inequalities(s: &EdgeAdditionScenario) -> Vec<PointwiseViolation> {
    let mut out = closeness_pointwise(s);
    out.extend(harmonic_pointwise(s));
    out.extend(betweenness_pointwise(s));
    out
}

/// The inequalities associated with one centrality.
pub fn pointwise_for(s: &EdgeAdditionScenario, kind: CentralityKind) -> Vec<PointwiseViolation> {
    match kind {
        CentralityKind::Closeness => closeness_pointwise(s),
        CentralityKind::Harmonic => harmonic_pointwise(s),
        CentralityKind::Betweenness => betweenness_pointwise(s),
    }
}

/// Visits `(side, e, u, z)` for every `u ≠ e` in the basin of `e` and `z ∉ {u, e}`.
fn for_basin_triples(s: &EdgeAdditionScenario, mut f: impl FnMut(Side, Vertex, Vertex, Vertex)) {
    let basins = s.basins();
    let n = s.graph().n();
    for side in [Side::X, Side::Y] {
        let e = s.endpoint(side);
        for &u in basins.basin(side).iter().filter(|&&u| u != e) {
            for z in (0..n).filter(|&z| z != u && z != e) {
                f(side, e, u, z);
            }
        }
    }
}

pub fn closeness_pointwise(s: &EdgeAdditionScenario) -> Vec<PointwiseViolation> {
    let (before, after) = (s.before(), s.after());
    let saving = |a, b| i64::from(before.distance(a, b)) - i64::from(after.distance(a, b));
    let mut out = Vec::new();
    for_basin_triples(s, |side, e, u, z| {
        let (lhs, rhs) = (saving(u, z), saving(e, z));
        if lhs > rhs {
            out.push(PointwiseViolation {
                inequality: Inequality::DistanceSaving,
                side,
                pair: (u, z),
                lhs: ExactScore::from_integer(lhs),
                rhs: ExactScore::from_integer(rhs),
            });
        }
    });
    out
}

pub fn harmonic_pointwise(s: &EdgeAdditionScenario) -> Vec<PointwiseViolation> {
    let (before, after) = (s.before(), s.after());
    let gain = |a, b| {
        Ratio::new(1, i64::from(after.distance(a, b))) - Ratio::new(1, i64::from(before.distance(a, b)))
    };
    let exact = |r: Ratio<i64>| ExactScore::ratio(*r.numer(), *r.denom());
    let mut out = Vec::new();
    for_basin_triples(s, |side, e, u, z| {
        let (lhs, rhs) = (gain(u, z), gain(e, z));
        let other = s.endpoint(match side {
            Side::X => Side::Y,
            Side::Y => Side::X,
        });
        let inequality = if lhs > rhs {
            Some(Inequality::ReciprocalGain)
        } else if z == other && lhs == rhs {
            Some(Inequality::ReciprocalGainStrict)
        } else {
            None
        };
        if let Some(inequality) = inequality {
            out.push(PointwiseViolation {
                inequality,
                side,
                pair: (u, z),
                lhs: exact(lhs),
                rhs: exact(rhs),
            });
        }
    });
    out
}

pub fn betweenness_pointwise(s: &EdgeAdditionScenario) -> Vec<PointwiseViolation> {
    let (before, after) = (s.before().paths(), s.after().paths());
    let n = s.graph().n();
    let mut out = Vec::new();
    for side in [Side::X, Side::Y] {
        let e = s.endpoint(side);
        for i in (0..n).filter(|&i| i != e) {
            for j in ((i + 1)..n).filter(|&j| j != e) {
                let (through, sigma) = (geodesics_through(before, e, i, j), before.sigma(i, j));
                let (through_p, sigma_p) = (geodesics_through(after, e, i, j), after.sigma(i, j));
                // σ'(e)/σ' ≥ σ(e)/σ  ⟺  σ'(e)·σ ≥ σ(e)·σ'
                if &through_p * sigma < &through * sigma_p {
                    let change = ExactScore::from_biguints(&through_p, sigma_p) - ExactScore::from_biguints(&through, sigma);
                    out.push(PointwiseViolation {
                        inequality: Inequality::EndpointDependency,
                        side,
                        pair: (i, j),
                        lhs: change,
                        rhs: ExactScore::zero(),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexamples::build_closeness_family;
    use crate::graph::Graph;

    #[test]
    fn path_has_no_violations() {
        let g = Graph::from_edge_list("a b\nb c").unwrap();
        let s = EdgeAdditionScenario::new(g, 0, 2).unwrap();
        let v = verify_pointwise_inequalities(&s);
        assert!(v.is_empty(), "{v:?}");
    }

    #[test]
    fn strictness_at_far_endpoint_is_real() {
        // on the path a–b–c with x=a, the only non-skipped strict instance is u=b, z=c:
        // gain(b,c) = 1 − 1 = 0 < gain(a,c) = 1 − 1/2
        let g = Graph::from_edge_list("a b\nb c").unwrap();
        let s = EdgeAdditionScenario::new(g, 0, 2).unwrap();
        let (before, after) = (s.before(), s.after());
        let gain = |a, b| Ratio::new(1, after.distance(a, b) as i64) - Ratio::new(1, before.distance(a, b) as i64);
        assert!(gain(1, 2) < gain(0, 2));
        assert_eq!(gain(0, 2), Ratio::new(1, 2));
    }

    #[test]
    fn closeness_family_has_no_violations() {
        let fam = build_closeness_family(10).unwrap();
        let s = EdgeAdditionScenario::new(fam.graph, fam.x, fam.y).unwrap();
        let v = verify_pointwise_inequalities(&s);
        assert!(v.is_empty(), "{v:?}");
    }

    #[test]
    fn inequality_kinds() {
        assert_eq!(Inequality::DistanceSaving.centrality(), CentralityKind::Closeness);
        assert_eq!(Inequality::ReciprocalGainStrict.centrality(), CentralityKind::Harmonic);
        assert_eq!(Inequality::EndpointDependency.centrality(), CentralityKind::Betweenness);
    }
}
