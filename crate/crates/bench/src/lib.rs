//! Fixtures shared by the kernel benchmarks.

use ucir_core::harness::CampaignRng;
use ucir_core::{categorical_power, categorical_product, encode_graph6, family, Family, Graph, VertexCap};

pub fn c5_squared() -> Graph {
    let c5 = family(Family::Cycle, &[5]).unwrap();
    categorical_power(&c5, 2, VertexCap::default()).unwrap()
}

pub fn petersen_times_k3() -> Graph {
    let p = family(Family::Petersen, &[]).unwrap();
    categorical_product(&p, &family(Family::Complete, &[3]).unwrap(), VertexCap::default()).unwrap()
}

/// Seeded random graphs on `n` vertices.
pub fn random_graphs(seed: u64, count: usize, n: usize) -> Vec<Graph> {
    let mut rng = CampaignRng::new(seed);
    (0..count).map(|_| rng.graph(n)).collect()
}

/// A graph6 corpus of random graphs, one per line.
pub fn random_corpus(seed: u64, count: usize, n: usize) -> String {
    random_graphs(seed, count, n).iter().map(|g| encode_graph6(g) + "\n").collect()
}
