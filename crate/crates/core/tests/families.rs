use semimono::basin::{rank_semi_monotone, score_semi_monotone, strict_rank_semi_monotone, EdgeAdditionScenario};
use semimono::centrality::{Betweenness, Closeness};
use semimono::counterexamples::{build_betweenness_family, build_closeness_family, validate_betweenness_claims};
use semimono::Graph;

fn reloaded(g: &Graph, labels: [&str; 2]) -> (Graph, usize, usize) {
    let back = Graph::from_edge_list(&g.to_edge_list()).unwrap();
    let x = back.vertex_by_label(labels[0]).unwrap();
    let y = back.vertex_by_label(labels[1]).unwrap();
    (back, x, y)
}

#[test]
fn closeness_family_round_trip() {
    for k in [10, 17, 30] {
        let fam = build_closeness_family(k).unwrap();
        let original = EdgeAdditionScenario::new(fam.graph.clone(), fam.x, fam.y).unwrap();
        let (g, x, y) = reloaded(&fam.graph, ["x", "y"]);
        let again = EdgeAdditionScenario::new(g, x, y).unwrap();
        for verdict in [rank_semi_monotone, strict_rank_semi_monotone, score_semi_monotone] {
            let (a, b) = (verdict(&original, &Closeness), verdict(&again, &Closeness));
            assert_eq!((a.holds_at_x, a.holds_at_y), (b.holds_at_x, b.holds_at_y), "k={k}");
            assert_eq!(a.witnesses.len(), b.witnesses.len());
        }
    }
}

#[test]
fn betweenness_family_round_trip() {
    for m in 1..=6 {
        let fam = build_betweenness_family(m).unwrap();
        let original = EdgeAdditionScenario::new(fam.graph.clone(), fam.x, fam.y).unwrap();
        let (g, x, y) = reloaded(&fam.graph, ["x", "y"]);
        let again = EdgeAdditionScenario::new(g, x, y).unwrap();
        let (a, b) = (score_semi_monotone(&original, &Betweenness), score_semi_monotone(&again, &Betweenness));
        assert!(!a.is_semi_monotone() && !b.is_semi_monotone());
        assert_eq!(a.witnesses.len(), b.witnesses.len());
    }
}

#[test]
fn betweenness_claims_hold_at_oracle_limit() {
    // m = 10 has 13 vertices, one past the default oracle bound
    let report = validate_betweenness_claims(10).unwrap();
    assert!(report.all_passed(), "{:?}", report.failed().collect::<Vec<_>>());
}

#[test]
fn closeness_family_is_rank_but_not_strictly_rank_semi_monotone() {
    let fam = build_closeness_family(11).unwrap();
    let s = EdgeAdditionScenario::new(fam.graph, fam.x, fam.y).unwrap();
    assert!(rank_semi_monotone(&s, &Closeness).is_semi_monotone());
    assert!(!strict_rank_semi_monotone(&s, &Closeness).is_semi_monotone());
}
