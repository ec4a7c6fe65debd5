//! Acceptance gate. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use rayon::prelude::*;

use common::{corpus, data_path, naive_a, naive_a_star, naive_alpha};
use ucir_core::graph6::{check_corpus_count, decode_graph6, encode_graph6, KNOWN_GRAPH_COUNTS};
use ucir_core::harness::{check_theorem_strong, check_theorem_weak, check_zhu, CampaignRng, Outcome};
use ucir_core::zhu::{verify_lemma1, verify_theorem3_chain_with, CheckStatus};
use ucir_core::{
    a_ratio, a_star, a_star_and_ultimate, bipartite_ultimate_ratio, categorical_power, family,
    has_fractional_perfect_matching, independence_ratio, is_bipartite, max_independent_set, Family, Graph,
    Ratio, VertexCap,
};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(corpus).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:.1?}, limit {limit:?}"))
}

/// Criterion 1: `fpm(G) <=> a(G) <= 1/2` on every graph with 1..=7 vertices.
fn fractional_matching_criterion() -> Verdict {
    let start = Instant::now();
    let graphs = all_graphs_up_to(7);
    ensure(graphs.len() == 1252, || format!("{} graphs, expected 1252", graphs.len()))?;
    let bad: Vec<String> = graphs
        .par_iter()
        .filter(|g| has_fractional_perfect_matching(g) != (naive_a(g) <= Ratio::half()))
        .map(encode_graph6)
        .collect();
    ensure(bad.is_empty(), || format!("exceptions: {bad:?}"))?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok("1252 graphs, 0 exceptions".into())
}

/// Criterion 2: `a*(G^2) = a*(G)`, and `a(G^2) = a(G)` when `a(G) <= 1/2`, on every
/// graph with 1..=5 vertices.
fn main_theorem_instances() -> Verdict {
    let start = Instant::now();
    let graphs = all_graphs_up_to(5);
    ensure(graphs.len() == 52, || format!("{} graphs, expected 52", graphs.len()))?;
    let bad: Vec<String> = graphs
        .par_iter()
        .filter_map(|g| {
            let square = categorical_power(g, 2, VertexCap::default()).expect("25 vertices at most");
            let a = a_ratio(g).0;
            let a_sq = a_ratio(&square).0;
            let ok = a_star(&a_sq) == a_star(&a) && (a > Ratio::half() || a_sq == a);
            (!ok).then(|| format!("{}: a = {a}, a(G^2) = {a_sq}", encode_graph6(g)))
        })
        .collect();
    ensure(bad.is_empty(), || format!("violations: {bad:?}"))?;
    within(start.elapsed(), Duration::from_secs(600))?;
    Ok("52 graphs".into())
}

/// Criterion 3: `i(G x H) <= max{a(G), a(H)}` on 500 seeded pairs, `n <= 6`.
fn theorem_weak() -> Verdict {
    let mut rng = CampaignRng::new(0x5eed_0003);
    let pairs: Vec<(Graph, Graph)> = (0..500).map(|_| (rng.graph_up_to(6), rng.graph_up_to(6))).collect();
    let failures = pairs
        .par_iter()
        .filter(|(g, h)| !check_theorem_weak(g, h, VertexCap::default()).expect("within cap").passed())
        .count();
    ensure(failures == 0, || format!("{failures} failures"))?;
    Ok("500 pairs, 0 failures".into())
}

/// Criterion 4: `a(G x H) <= max{a(G), a(H)}` on 200 seeded pairs with
/// `min{a(G), a(H)} <= 1/2` and `n_G n_H <= 36`.
fn theorem_strong() -> Verdict {
    let mut rng = CampaignRng::new(0x5eed_0004);
    let mut pairs = Vec::new();
    let mut drawn = 0;
    while pairs.len() < 200 {
        drawn += 1;
        let (g, h) = (rng.graph_up_to(6), rng.graph_up_to(6));
        if g.n() * h.n() <= 36 && std::cmp::min(a_ratio(&g).0, a_ratio(&h).0) <= Ratio::half() {
            pairs.push((g, h));
        }
    }
    let outcomes: Vec<Outcome> = pairs
        .par_iter()
        .map(|(g, h)| check_theorem_strong(g, h, VertexCap::default()).expect("within cap").outcome)
        .collect();
    let failures = outcomes.iter().filter(|o| matches!(o, Outcome::Failed(_))).count();
    let evaluated = outcomes.iter().filter(|o| **o == Outcome::Passed).count();
    ensure(failures == 0, || format!("{failures} failures"))?;
    ensure(evaluated == 200, || format!("only {evaluated} pairs evaluated"))?;
    Ok(format!("200 pairs ({drawn} drawn), 0 failures"))
}

/// Criterion 5: Every named certificate step on 1000 seeded `(G, H, maximal U)`.
/// A maximal U always has empty M, so each instance is also certified on a
/// random nonempty subset of U.
fn zhu_certificates() -> Verdict {
    let mut rng = CampaignRng::new(0x5eed_0005);
    let mut triples = Vec::new();
    for _ in 0..1000 {
        let (g, h) = (rng.graph_up_to(6), rng.graph_up_to(6));
        let u = rng.maximal_product_independent_set(&g, &h);
        let mut thinned = u.clone();
        for v in u.iter() {
            if rng.below(2) == 0 && thinned.len() > 1 {
                thinned.remove(v);
            }
        }
        triples.push((g, h, u, thinned));
    }
    let certify = |g: &Graph, h: &Graph, u: &ucir_core::VertexSet, a_g: &Ratio, a_h: &Ratio| {
        let lemma = verify_lemma1(g, h, u).map_err(|e| e.to_string())?;
        let chain = verify_theorem3_chain_with(g, h, u, a_g, a_h).map_err(|e| e.to_string())?;
        let combined = check_zhu(g, h, u, a_g, a_h).map_err(|e| e.to_string())?;
        if !lemma.all_passed() || !chain.all_passed() || !combined.passed() {
            return Err(format!("{} x {} U={}:\n{lemma}{chain}", encode_graph6(g), encode_graph6(h), u));
        }
        let d = ucir_core::refined_partition(g, h, u).map_err(|e| e.to_string())?;
        let concluded = chain.status("theorem3.conclusion") == Some(CheckStatus::Passed);
        Ok::<_, String>([concluded, !d.b_hat.is_empty(), !d.m.is_empty()])
    };
    let stats: Vec<Result<[[bool; 3]; 2], String>> = triples
        .par_iter()
        .map(|(g, h, u, thinned)| {
            let (a_g, a_h) = (a_ratio(g).0, a_ratio(h).0);
            Ok([certify(g, h, u, &a_g, &a_h)?, certify(g, h, thinned, &a_g, &a_h)?])
        })
        .collect();
    let mut counts = [[0usize; 3]; 2];
    for s in stats {
        for (row, flags) in counts.iter_mut().zip(s?) {
            for (c, f) in row.iter_mut().zip(flags) {
                *c += f as usize;
            }
        }
    }
    ensure(counts[0][0] > 0, || "side condition never held".into())?;
    ensure(counts[1][2] > 0, || "M never nonempty".into())?;
    Ok(format!(
        "1000 maximal + 1000 thinned sets, all checks passed; maximal: {} concluded, {} nonempty B-hat; thinned: {} nonempty M",
        counts[0][0], counts[0][1], counts[1][2]
    ))
}

/// Criterion 6: Bipartite rule against `a*` on every bipartite graph with `n <= 7`.
fn bipartite_rule() -> Verdict {
    let graphs = all_graphs_up_to(7);
    let bipartite: Vec<_> = graphs.iter().filter_map(|g| is_bipartite(g).map(|p| (g, p))).collect();
    let bad: Vec<String> = bipartite
        .par_iter()
        .filter(|(g, p)| bipartite_ultimate_ratio(g, p).unwrap() != a_star_and_ultimate(g).ultimate)
        .map(|(g, _)| encode_graph6(g))
        .collect();
    ensure(bad.is_empty(), || format!("disagreements: {bad:?}"))?;
    Ok(format!("{} bipartite graphs agree", bipartite.len()))
}

/// Criterion 7: Named values of `A`, each confirmed by the subset-scan oracle.
fn named_values() -> Verdict {
    let mut cases = vec![
        ("C5", family(Family::Cycle, &[5]).unwrap(), Ratio::new(2, 5)),
        ("C4", family(Family::Cycle, &[4]).unwrap(), Ratio::half()),
        ("K1,3", family(Family::Star, &[3]).unwrap(), Ratio::one()),
        ("Petersen", family(Family::Petersen, &[]).unwrap(), Ratio::new(2, 5)),
    ];
    for n in 1..=5 {
        cases.push(("K_n", family(Family::Complete, &[n]).unwrap(), Ratio::from_counts(1, n)));
    }
    for (name, g, expected) in &cases {
        let got = a_star_and_ultimate(g).ultimate;
        let oracle = naive_a_star(g);
        ensure(got == *expected && oracle == *expected, || {
            format!("{name} (n={}): computed {got}, oracle {oracle}, expected {expected}", g.n())
        })?;
    }
    Ok(format!("{} named graphs", cases.len()))
}

/// Criterion 8: `i(G^2) = i(G)` for K2, K3, K4, C4, C6.
fn self_universal() -> Verdict {
    let cases = [
        ("K2", family(Family::Complete, &[2]).unwrap()),
        ("K3", family(Family::Complete, &[3]).unwrap()),
        ("K4", family(Family::Complete, &[4]).unwrap()),
        ("C4", family(Family::Cycle, &[4]).unwrap()),
        ("C6", family(Family::Cycle, &[6]).unwrap()),
    ];
    for (name, g) in &cases {
        let sq = categorical_power(g, 2, VertexCap::default()).unwrap();
        let (i1, i2) = (independence_ratio(g), independence_ratio(&sq));
        ensure(i1 == i2, || format!("{name}: i(G) = {i1}, i(G^2) = {i2}"))?;
    }
    Ok("K2 K3 K4 C4 C6".into())
}

/// Criterion 9: Search kernels against the subset-scan oracles: `a` on every graph
/// with at most 9 vertices, `alpha` on the same plus 200 random graphs on
/// 10..=12 vertices.
fn oracle_equivalences() -> Verdict {
    let all = all_graphs_up_to(9);
    ensure(all.len() == 288_266, || format!("{} graphs, expected 288266", all.len()))?;
    let mut rng = CampaignRng::new(0x5eed_0009);
    let sample: Vec<Graph> = (0..200)
        .map(|_| {
            let n = 10 + rng.below(3);
            rng.graph(n)
        })
        .collect();

    let a_bad: Vec<String> =
        all.par_iter().filter(|g| a_ratio(g).0 != naive_a(g)).map(encode_graph6).collect();
    ensure(a_bad.is_empty(), || format!("a(G) mismatches: {a_bad:?}"))?;
    let alpha_bad: Vec<String> = all
        .par_iter()
        .chain(sample.par_iter())
        .filter(|g| {
            let r = max_independent_set(g);
            r.alpha != naive_alpha(g) || r.witness.len() != r.alpha || !g.is_independent(&r.witness).unwrap()
        })
        .map(encode_graph6)
        .collect();
    ensure(alpha_bad.is_empty(), || format!("alpha mismatches: {alpha_bad:?}"))?;
    Ok(format!(
        "a(G): all {} graphs on 1..=9 vertices; alpha: the same plus 200 graphs on 10..=12 vertices",
        all.len()
    ))
}

/// Criterion 10: graph6 round trips, reference encodings, and the count gate.
fn graph6_round_trip() -> Verdict {
    let mut fixtures = vec![
        family(Family::Petersen, &[]).unwrap(),
        family(Family::CompleteMultipartite, &[2, 2, 2]).unwrap(),
        family(Family::CompleteMultipartite, &[1, 3, 5]).unwrap(),
    ];
    for n in 1..=8 {
        fixtures.push(family(Family::Complete, &[n]).unwrap());
        fixtures.push(family(Family::Path, &[n]).unwrap());
        fixtures.push(family(Family::Edgeless, &[n]).unwrap());
        fixtures.push(family(Family::Star, &[n]).unwrap());
        if n >= 3 {
            fixtures.push(family(Family::Cycle, &[n]).unwrap());
        }
    }
    let mut rng = CampaignRng::new(0x5eed_0010);
    let random: Vec<Graph> = (0..1000).map(|_| rng.graph_up_to(30)).collect();
    for g in fixtures.iter().chain(&random) {
        let line = encode_graph6(g);
        let back = decode_graph6(&line).map_err(|e| format!("{line}: {e}"))?;
        ensure(back == *g, || format!("round trip changed {line}"))?;
        ensure(encode_graph6(&back) == line, || format!("re-encoding changed {line}"))?;
    }

    // encodings produced by an independent reference encoder
    let reference = std::fs::read_to_string(data_path("reference_graph6.txt")).unwrap();
    let mut checked = 0;
    for row in reference.lines() {
        let mut parts = row.split(';');
        let n: usize = parts.next().unwrap().parse().unwrap();
        let edges: Vec<(usize, usize)> = parts
            .next()
            .unwrap()
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|e| {
                let (u, v) = e.split_once('-').unwrap();
                (u.parse().unwrap(), v.parse().unwrap())
            })
            .collect();
        let line = parts.next().unwrap();
        let g = Graph::new(n, edges).unwrap();
        ensure(encode_graph6(&g) == line, || format!("n={n}: encoded differently from reference"))?;
        ensure(decode_graph6(line).as_ref() == Ok(&g), || format!("n={n}: reference decodes differently"))?;
        checked += 1;
    }

    for n in 1..=9 {
        let count = corpus(n).len();
        check_corpus_count(n, count).map_err(|e| e.to_string())?;
        ensure(count == KNOWN_GRAPH_COUNTS[n - 1], || format!("n={n}: {count}"))?;
    }
    Ok(format!(
        "{} fixtures + 1000 random graphs round-trip, {checked} reference encodings, count gate 1..=9",
        fixtures.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("C1 fractional-matching criterion", fractional_matching_criterion),
        ("C2 square invariance", main_theorem_instances),
        ("C3 weak product bound", theorem_weak),
        ("C4 strong product bound", theorem_strong),
        ("C5 zhu certificates", zhu_certificates),
        ("C6 bipartite rule", bipartite_rule),
        ("C7 named values", named_values),
        ("C8 self-universality spot checks", self_universal),
        ("C9 oracle equivalences", oracle_equivalences),
        ("C10 graph6 round trip", graph6_round_trip),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (name, run) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        match run() {
            Ok(msg) => println!("[PASS] {name}: {msg} ({:.2?})", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("[FAIL] {name}: {msg} ({:.2?})", start.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
