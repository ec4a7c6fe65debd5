//! Polynomial-time side of the toolkit: bipartiteness, maximum bipartite
//! matching, and the fractional-perfect-matching test for `a(G) <= 1/2`.
//!
//! A graph has a fractional perfect matching iff its bipartite double
//! cover `G x K2` has a perfect matching, so the test reduces to one
//! Hopcroft-Karp run on `2n` vertices.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ratio::Ratio;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.left.universe() != n || self.right.universe() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: self.left.universe().max(self.right.universe()),
            });
        }
        if !self.left.is_disjoint(&self.right) || self.left.len() + self.right.len() != n {
            return Err(Error::InvalidBipartition("sides must partition the vertex set".into()));
        }
        for side in [&self.left, &self.right] {
            if let Some((u, v)) = g.find_edge_inside(side) {
                return Err(Error::InvalidBipartition(format!("edge {u}-{v} inside one side")));
            }
        }
        Ok(())
    }
}

/// Two-colouring by BFS from the smallest unvisited vertex of each
/// component (roots go left); `None` if `g` has an odd cycle.
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    let n = g.n();
    let mut colour: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if colour[root].is_some() {
            continue;
        }
        colour[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for v in g.neighbors(u) {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut left = g.empty_set();
    let mut right = g.empty_set();
    for (v, c) in colour.into_iter().enumerate() {
        if c == Some(true) {
            right.insert(v);
        } else {
            left.insert(v);
        }
    }
    Some(Bipartition { left, right })
}

/// Vertex-disjoint edges, stored as `(left, right)` pairs sorted by the
/// left endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Matching {
    pub pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        2 * self.len() == g.n()
    }

    /// Every pair is an edge and no vertex is used twice.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = g.empty_set();
        self.pairs.iter().all(|&(u, v)| {
            let fresh = u < g.n() && v < g.n() && !used.contains(u) && !used.contains(v);
            if fresh {
                used.insert(u);
                used.insert(v);
            }
            fresh && g.has_edge(u, v)
        })
    }
}

const NIL: usize = usize::MAX;

/// Maximum-cardinality matching by Hopcroft-Karp. Left vertices and their
/// neighbours are scanned in increasing index order, so the result is
/// deterministic.
pub fn max_bipartite_matching(g: &Graph, p: &Bipartition) -> Result<Matching> {
    p.validate(g)?;
    let left: Vec<usize> = p.left.to_vec();
    let adj: Vec<Vec<usize>> = left.iter().map(|&u| g.neighbors(u).to_vec()).collect();
    let mut hk = HopcroftKarp {
        adj: &adj,
        match_left: vec![NIL; left.len()],
        match_right: vec![NIL; g.n()],
        dist: vec![0; left.len()],
    };
    while hk.layer() {
        for u in 0..left.len() {
            if hk.match_left[u] == NIL {
                hk.augment(u);
            }
        }
    }
    let pairs =
        hk.match_left.iter().enumerate().filter(|(_, &r)| r != NIL).map(|(i, &r)| (left[i], r)).collect();
    Ok(Matching { pairs })
}

struct HopcroftKarp<'a> {
    adj: &'a [Vec<usize>],
    match_left: Vec<usize>,
    match_right: Vec<usize>,
    dist: Vec<usize>,
}

impl HopcroftKarp<'_> {
    /// BFS layering from the free left vertices; true if some free right
    /// vertex is reachable.
    fn layer(&mut self) -> bool {
        let mut queue = VecDeque::new();
        for (u, &m) in self.match_left.iter().enumerate() {
            if m == NIL {
                self.dist[u] = 0;
                queue.push_back(u);
            } else {
                self.dist[u] = NIL;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                match self.match_right[v] {
                    NIL => found = true,
                    w if self.dist[w] == NIL => {
                        self.dist[w] = self.dist[u] + 1;
                        queue.push_back(w);
                    }
                    _ => {}
                }
            }
        }
        found
    }

    fn augment(&mut self, u: usize) -> bool {
        for i in 0..self.adj[u].len() {
            let v = self.adj[u][i];
            let w = self.match_right[v];
            if w == NIL || (self.dist[w] == self.dist[u] + 1 && self.augment(w)) {
                self.match_left[u] = v;
                self.match_right[v] = u;
                return true;
            }
        }
        self.dist[u] = NIL;
        false
    }
}

/// `G x K2` with copy-0 vertex `v` at index `v` and copy-1 vertex at
/// `n + v`; every edge `{u, w}` becomes `{u, n+w}` and `{w, n+u}`.
pub fn bipartite_double_cover(g: &Graph) -> (Graph, Bipartition) {
    let n = g.n();
    let cover = Graph::new(2 * n, g.edges().flat_map(|(u, w)| [(u, n + w), (w, n + u)]))
        .expect("double cover of a valid graph is valid");
    let left = VertexSet::from_vertices(2 * n, 0..n).expect("in range");
    let right = left.complement();
    (cover, Bipartition { left, right })
}

/// True iff `g` has a fractional perfect matching, which holds exactly
/// when `a(G) <= 1/2`.
pub fn has_fractional_perfect_matching(g: &Graph) -> bool {
    let (cover, sides) = bipartite_double_cover(g);
    let m = max_bipartite_matching(&cover, &sides).expect("double cover sides are valid");
    m.len() == g.n()
}

/// `A(G)` for bipartite `G`: `1/2` with a perfect matching, else `1`.
pub fn bipartite_ultimate_ratio(g: &Graph, p: &Bipartition) -> Result<Ratio> {
    let m = max_bipartite_matching(g, p)?;
    Ok(if m.is_perfect(g) { Ratio::half() } else { Ratio::one() })
}
