//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use semimono::basin::{rank_semi_monotone, score_semi_monotone, strict_rank_semi_monotone, EdgeAdditionScenario, Side};
use semimono::centrality::{betweenness, closeness, Betweenness, Closeness, Harmonic};
use semimono::counterexamples::{
    build_betweenness_family, build_closeness_family, validate_betweenness_claims, validate_closeness_claims,
};
use semimono::lab::{
    enumerate_connected_graphs, naive_betweenness_oracle, random_connected_graph_with, run_sweep, seeded_rng,
    GraphSource, SweepConfig,
};
use semimono::report::{write_report, Format, ReportEnvelope};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn closeness_closed_forms() -> Outcome {
    for k in 10..=30u64 {
        let fam = build_closeness_family(k as u32).map_err(|e| e.to_string())?;
        let before = closeness(&fam.graph).map_err(|e| e.to_string())?;
        let after = closeness(&fam.graph.add_edge(fam.x, fam.y).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let p = |v| before.peripherality(v).unwrap();
        let pp = |v| after.peripherality(v).unwrap();
        let expected = [
            ("p(u)", p(fam.u), 2 * (k + 4) + 4 * k + 13),
            ("p'(u)", pp(fam.u), 2 * (k + 4) + 3 * k + 12),
            ("p(x)", p(fam.x), 3 * (k + 4) + 3 * k + 9),
            ("p'(x)", pp(fam.x), 3 * (k + 4) + 2 * k + 8),
            ("p(y)", p(fam.y), 4 * (k + 4) + k + 15),
            ("p'(y)", pp(fam.y), 4 * (k + 4) + k + 12),
        ];
        for (name, got, want) in expected {
            ensure(got == want, || format!("k={k}: {name}={got}, expected {want}"))?;
        }
        if k == 10 {
            ensure(p(fam.x) == 81 && p(fam.u) == 81 && p(fam.y) == 81, || "k=10 values are not all 81".into())?;
        }
    }
    Ok("k=10..30, six peripheralities each; k=10 gives 81/81/81".into())
}

fn closeness_verdicts() -> Outcome {
    for k in 10..=30 {
        let fam = build_closeness_family(k).map_err(|e| e.to_string())?;
        let u = fam.u;
        let s = EdgeAdditionScenario::new(fam.graph, fam.x, fam.y).map_err(|e| e.to_string())?;
        let rank = rank_semi_monotone(&s, &Closeness);
        ensure(rank.holds_at_x, || format!("k={k}: rank fails at x"))?;
        ensure(!rank.holds_at_y, || format!("k={k}: rank holds at y"))?;
        ensure(rank.witnesses_at(Side::Y).any(|w| w.z == u), || format!("k={k}: u is not a witness at y"))?;
        let strict = strict_rank_semi_monotone(&s, &Closeness);
        ensure(!strict.holds_at_x && !strict.holds_at_y, || format!("k={k}: strict rank holds somewhere"))?;
        let claims = validate_closeness_claims(k).map_err(|e| e.to_string())?;
        ensure(claims.all_passed(), || format!("k={k}: claim report has failures"))?;
    }
    Ok("k=10..30: rank holds at x, fails at y via u; strict rank fails at x and y".into())
}

fn betweenness_family() -> Outcome {
    for m in 1..=10 {
        let fam = build_betweenness_family(m).map_err(|e| e.to_string())?;
        let g2 = fam.graph.add_edge(fam.x, fam.y).map_err(|e| e.to_string())?;
        for (name, g) in [("G", &fam.graph), ("G'", &g2)] {
            let brandes = betweenness(g);
            for v in [fam.x, fam.y, fam.u] {
                let label = g.label(v);
                ensure(brandes.get(v).is_zero(), || format!("m={m} {name}: b({label}) != 0"))?;
                ensure(g.ego_is_clique(v), || format!("m={m} {name}: ego({label}) not a clique"))?;
            }
            if g.n() <= 12 {
                let naive = naive_betweenness_oracle(g).map_err(|e| e.to_string())?;
                ensure(naive.scores == brandes.scores, || format!("m={m} {name}: oracle disagrees"))?;
            }
        }
        let claims = validate_betweenness_claims(m).map_err(|e| e.to_string())?;
        ensure(claims.all_passed(), || {
            let bad: Vec<_> = claims.failed().map(|c| c.name.clone()).collect();
            format!("m={m}: failed claims {bad:?}")
        })?;
        let s = EdgeAdditionScenario::new(fam.graph, fam.x, fam.y).map_err(|e| e.to_string())?;
        ensure(!score_semi_monotone(&s, &Betweenness).is_semi_monotone(), || {
            format!("m={m}: score semi-monotone")
        })?;
        let strict = strict_rank_semi_monotone(&s, &Betweenness);
        ensure(!strict.holds_at_x && !strict.holds_at_y, || format!("m={m}: strict rank holds somewhere"))?;
    }
    Ok("m=1..10: zero scores agree (Brandes, oracle, clique), score and strict rank fail".into())
}

fn exhaustive_suite() -> Outcome {
    let started = Instant::now();
    let report = run_sweep(&SweepConfig::enumerate(6)).map_err(|e| e.to_string())?;
    let required = [
        ("dominance", "closeness"),
        ("strict_dominance", "harmonic"),
        ("dominance", "betweenness"),
        ("rank_semi", "closeness"),
        ("rank_semi", "betweenness"),
        ("strict_rank_semi", "harmonic"),
        ("score_semi", "closeness"),
        ("score_semi", "harmonic"),
        ("peripherality_identity", "closeness"),
        ("clique_lemma", "betweenness"),
        ("pointwise_ineqs", "closeness"),
        ("pointwise_ineqs", "harmonic"),
        ("pointwise_ineqs", "betweenness"),
        ("implication_thm1", "closeness"),
        ("implication_thm1", "harmonic"),
        ("implication_thm1", "betweenness"),
        ("implication_thm2", "closeness"),
        ("implication_thm2", "harmonic"),
        ("implication_thm2", "betweenness"),
    ];
    ensure(report.graphs == 1 + 1 + 4 + 38 + 728 + 26704, || format!("{} graphs", report.graphs))?;
    for (check, centrality) in required {
        let t = report
            .tally(check, centrality)
            .ok_or_else(|| format!("missing tally {check}/{centrality}"))?;
        ensure(t.scenarios_checked > 0, || format!("{check}/{centrality} checked nothing"))?;
        ensure(t.fails == 0, || {
            format!("{check}/{centrality}: {} failures, e.g. {:?}", t.fails, t.exemplars.first())
        })?;
    }
    let observed = |check, centrality| report.tally(check, centrality).map(|t| t.fails).unwrap_or(0);
    Ok(format!(
        "{} graphs, {} scenarios, {} required tallies at 0 failures in {:.1}s (observed: betweenness score_semi fails={}, closeness strict_rank_semi fails={})",
        report.graphs,
        report.scenarios,
        required.len(),
        started.elapsed().as_secs_f64(),
        observed("score_semi", "betweenness"),
        observed("strict_rank_semi", "closeness"),
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0;
    for n in 1..=6 {
        for g in enumerate_connected_graphs(n).map_err(|e| e.to_string())? {
            let naive = naive_betweenness_oracle(&g).map_err(|e| e.to_string())?;
            ensure(betweenness(&g).scores == naive.scores, || format!("mismatch on {}", g.to_edge_list()))?;
            checked += 1;
        }
    }
    let mut rng = seeded_rng(2024);
    for i in 0..100 {
        let n = 2 + i % 11;
        let p = if i % 2 == 0 { 0.2 } else { 0.5 };
        let g = random_connected_graph_with(&mut rng, n, p).map_err(|e| e.to_string())?;
        let naive = naive_betweenness_oracle(&g).map_err(|e| e.to_string())?;
        ensure(betweenness(&g).scores == naive.scores, || format!("mismatch on {}", g.to_edge_list()))?;
    }
    Ok(format!("{checked} enumerated graphs and 100 random graphs (n<=12, p in {{0.2, 0.5}})"))
}

fn geometric_score_monotonicity() -> Outcome {
    let mut rng = seeded_rng(7);
    let mut scenarios = 0;
    while scenarios < 1000 {
        let n = rng.gen_range(3..=50);
        let p = *[0.1, 0.2, 0.35, 0.5].choose(&mut rng).unwrap();
        let g = random_connected_graph_with(&mut rng, n, p).map_err(|e| e.to_string())?;
        let non_edges: Vec<_> = g.non_edges().collect();
        let Some(&(x, y)) = non_edges.choose(&mut rng) else {
            continue;
        };
        let s = EdgeAdditionScenario::new(g, x, y).map_err(|e| e.to_string())?;
        for e in [x, y] {
            let (cb, ca) = s.scores(&Closeness);
            ensure(ca.get(e) > cb.get(e), || format!("closeness did not increase at {e}"))?;
            let (hb, ha) = s.scores(&Harmonic);
            ensure(ha.get(e) > hb.get(e), || format!("harmonic did not increase at {e}"))?;
            ensure(!s.delta(&Betweenness, e).is_negative(), || format!("betweenness decreased at {e}"))?;
        }
        scenarios += 1;
    }
    Ok(format!("{scenarios} random scenarios, n in 3..=50"))
}

fn render(cfg: &SweepConfig) -> Result<Vec<u8>, String> {
    let report = run_sweep(cfg).map_err(|e| e.to_string())?;
    let env = ReportEnvelope::sweep(&["sweep".to_string()], &report);
    let mut out = Vec::new();
    write_report(&env, Format::Json, &mut out).map_err(|e| e.to_string())?;
    Ok(out)
}

fn determinism() -> Outcome {
    let enumerate = SweepConfig::enumerate(5);
    let random = SweepConfig::new(GraphSource::Random {
        n: 9,
        p: 0.3,
        count: 200,
        seed: 42,
    });
    for cfg in [enumerate, random] {
        let first = render(&cfg)?;
        let mut threaded = cfg.clone();
        threaded.threads = 2;
        ensure(first == render(&cfg)?, || "repeat run differs".into())?;
        ensure(first == render(&threaded)?, || "thread count changes output".into())?;
    }
    Ok("enumerate(5) and random(9, 0.3, 200) JSON identical across runs and thread counts".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("closeness family closed forms", closeness_closed_forms),
        ("closeness family verdicts", closeness_verdicts),
        ("betweenness family", betweenness_family),
        ("exhaustive theorem suite n<=6", exhaustive_suite),
        ("Brandes vs geodesic oracle", oracle_equivalence),
        ("geometric score monotonicity", geometric_score_monotonicity),
        ("sweep determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let outcome = run();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS AC{} {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL AC{} {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
