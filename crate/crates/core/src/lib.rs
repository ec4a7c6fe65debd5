//! Exact computation of the ultimate categorical independence ratio
//! `A(G) = lim i(G^k)` of finite simple graphs, where `G^k` is the k-th
//! categorical (tensor) power and `i` is the independence ratio.
//!
//! `A(G)` is computed as `a*(G)`: with
//! `a(G) = max |U| / (|U| + |N(U)|)` over nonempty independent sets `U`,
//! `a*(G)` is `a(G)` when `a(G) <= 1/2` and `1` otherwise. Whether
//! `a(G) <= 1/2` is also decided in polynomial time through fractional
//! perfect matchings ([`matching`]).
//!
//! The [`zhu`] module decomposes independent sets of products and checks
//! every step of the product bounds on concrete instances, and
//! [`harness`] runs those checks over corpora and seeded random samples.
//!
//! All values are exact rationals ([`Ratio`]); no floating point is used.

pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod independence;
pub mod invariants;
pub mod matching;
pub mod ratio;
pub mod zhu;

pub use error::{Error, Graph6Error, Result};
pub use graph::{
    categorical_power, categorical_product, disjoint_union, family, Family, Graph, ProductVertexMap,
    VertexCap, VertexSet,
};
pub use graph6::{decode_graph6, encode_graph6, read_corpus, CorpusEntry, ReadMode};
pub use independence::{
    for_each_independent_set, independence_number, independence_ratio, max_independent_set,
    IndependenceResult,
};
pub use invariants::{a_ratio, a_star, a_star_and_ultimate, b_ratio, ultimate_ratio, RatioResult};
pub use matching::{
    bipartite_double_cover, bipartite_ultimate_ratio, has_fractional_perfect_matching, is_bipartite,
    max_bipartite_matching, Bipartition, Matching,
};
pub use ratio::Ratio;
pub use zhu::{refined_partition, verify_lemma1, verify_theorem3_chain, zhu_partition, ZhuDecomposition};
