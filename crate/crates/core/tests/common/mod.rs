//! Test-only oracles. These scan all `2^n` vertex subsets directly and
//! share no code with the search kernels they check.

#![allow(dead_code)]

use std::path::PathBuf;

use ucir_core::graph6::{check_corpus_count, parse_corpus};
use ucir_core::{Graph, Ratio};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

/// The corpus of all graphs on `n` vertices, after the count gate.
pub fn corpus(n: usize) -> Vec<Graph> {
    let text = std::fs::read_to_string(data_path(&format!("graphs{n}.g6"))).expect("corpus file");
    let graphs: Vec<Graph> =
        parse_corpus(&text).expect("corpus decodes").into_iter().map(|e| e.graph).collect();
    check_corpus_count(n, graphs.len()).expect("corpus count gate");
    assert!(graphs.iter().all(|g| g.n() == n));
    graphs
}

fn subset_is_independent(g: &Graph, mask: u64) -> bool {
    let n = g.n();
    (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || !g.has_edge(u, v)))
}

fn neighborhood_size(g: &Graph, mask: u64) -> usize {
    (0..g.n()).filter(|&v| (0..g.n()).any(|u| mask >> u & 1 == 1 && g.has_edge(u, v))).count()
}

/// `a(G)` by scanning every nonempty subset.
pub fn naive_a(g: &Graph) -> Ratio {
    assert!(g.n() <= 20, "oracle is exponential");
    (1u64..1 << g.n())
        .filter(|&m| subset_is_independent(g, m))
        .map(|m| {
            let size = m.count_ones() as usize;
            Ratio::from_counts(size, size + neighborhood_size(g, m))
        })
        .max()
        .expect("nonempty graph")
}

/// `alpha(G)` by scanning every subset.
pub fn naive_alpha(g: &Graph) -> usize {
    assert!(g.n() <= 20, "oracle is exponential");
    (0u64..1 << g.n())
        .filter(|&m| subset_is_independent(g, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn naive_a_star(g: &Graph) -> Ratio {
    let a = naive_a(g);
    if a <= Ratio::half() {
        a
    } else {
        Ratio::one()
    }
}
