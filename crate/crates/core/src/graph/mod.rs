//! Finite simple undirected graphs over the vertex set `0..n`.

mod family;
mod product;
mod vertex_set;

pub use family::{family, Family};
pub use product::{
    categorical_power, categorical_product, disjoint_union, ProductVertexMap, VertexCap, DEFAULT_VERTEX_CAP,
    VERTEX_CAP_ENV,
};
pub use vertex_set::{Iter, VertexSet};

use crate::error::{Error, Result};

/// Adjacency is stored as one bitset row per vertex. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_rows(adj))
    }

    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, std::iter::empty())
    }

    /// Rows must already be symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj.iter().enumerate().all(|(v, row)| !row.contains(v)));
        let edge_count = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|row| row.contains(v))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        VertexSet::from_vertices(self.n(), vertices)
    }

    /// `N(U)`: every vertex adjacent to some member of `U`.
    pub fn neighborhood(&self, set: &VertexSet) -> Result<VertexSet> {
        self.check(set)?;
        Ok(self.neighborhood_unchecked(set))
    }

    pub(crate) fn neighborhood_unchecked(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for u in set {
            out.union_with(&self.adj[u]);
        }
        out
    }

    pub fn is_independent(&self, set: &VertexSet) -> Result<bool> {
        self.check(set)?;
        Ok(self.find_edge_inside(set).is_none())
    }

    /// Some edge with both endpoints in `set`, lowest first endpoint first.
    pub fn find_edge_inside(&self, set: &VertexSet) -> Option<(usize, usize)> {
        set.iter().find_map(|u| self.adj[u].iter().find(|&v| v > u && set.contains(v)).map(|v| (u, v)))
    }

    /// Errors with [`Error::NotIndependent`] naming an offending edge.
    pub fn require_independent(&self, set: &VertexSet) -> Result<()> {
        self.check(set)?;
        match self.find_edge_inside(set) {
            Some((u, v)) => Err(Error::NotIndependent { u, v }),
            None => Ok(()),
        }
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for root in 0..self.n() {
            if seen.contains(root) {
                continue;
            }
            let mut comp = self.empty_set();
            let mut stack = vec![root];
            comp.insert(root);
            while let Some(u) = stack.pop() {
                for v in &self.adj[u] {
                    if !comp.contains(v) {
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            seen.union_with(&comp);
            out.push(comp);
        }
        out
    }

    /// Applies a vertex relabelling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: perm.len() });
        }
        Graph::new(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    fn check(&self, set: &VertexSet) -> Result<()> {
        if set.universe() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), found: set.universe() });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
