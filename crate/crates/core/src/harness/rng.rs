//! Seeded randomness for campaigns.
//!
//! Every draw comes from a SplitMix64 stream seeded with the campaign
//! seed, consumed as follows so that runs replay exactly:
//!
//! - `below(n)` takes one 64-bit output `r` and returns `(r * n) >> 64`.
//! - A random graph on `n` vertices draws one output per vertex pair in
//!   the order `(0,1), (0,2), ..., (0,n-1), (1,2), ...`; the pair is an
//!   edge iff the top bit of the output is set.
//! - `graph_up_to(max)` picks `n = 1 + below(max)` and then draws the graph.
//! - Shuffles are Fisher-Yates from the last index down, swapping `i`
//!   with `below(i + 1)`.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::graph::{Graph, ProductVertexMap, VertexSet};

pub struct CampaignRng(SplitMix64);

impl CampaignRng {
    pub fn new(seed: u64) -> Self {
        CampaignRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish integer in `0..n` by multiply-shift.
    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }

    pub fn graph(&mut self, n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.next_u64() >> 63 == 1 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("n >= 1 and pairs in range")
    }

    pub fn graph_up_to(&mut self, max_n: usize) -> Graph {
        let n = 1 + self.below(max_n);
        self.graph(n)
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }

    /// Greedy maximal independent set of `g` over a shuffled vertex order.
    pub fn maximal_independent_set(&mut self, g: &Graph) -> VertexSet {
        let mut order: Vec<usize> = (0..g.n()).collect();
        self.shuffle(&mut order);
        let mut set = g.empty_set();
        let mut blocked = g.empty_set();
        for v in order {
            if !blocked.contains(v) {
                set.insert(v);
                blocked.insert(v);
                blocked.union_with(g.neighbors(v));
            }
        }
        set
    }

    /// Greedy maximal independent set of `G x H` without building the
    /// product.
    pub fn maximal_product_independent_set(&mut self, g: &Graph, h: &Graph) -> VertexSet {
        let map = ProductVertexMap::of(g, h);
        let mut order: Vec<usize> = (0..map.len()).collect();
        self.shuffle(&mut order);
        let mut set = VertexSet::new(map.len());
        let mut blocked = VertexSet::new(map.len());
        for v in order {
            if blocked.contains(v) {
                continue;
            }
            set.insert(v);
            let (x, y) = map.decode(v);
            for x2 in g.neighbors(x) {
                for y2 in h.neighbors(y) {
                    blocked.insert(map.encode(x2, y2));
                }
            }
        }
        set
    }
}
