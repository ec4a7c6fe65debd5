//! Independent-set enumeration, the independence number and `i(G)`.

use crate::graph::{Graph, VertexSet};
use crate::ratio::Ratio;

/// One node of the independent-set search tree.
#[derive(Clone, Debug)]
pub struct SearchNode {
    /// The independent set `U` at this node.
    pub set: VertexSet,
    /// Vertices that may still extend `U`: above `max(U)`, outside `N[U]`
    /// (and inside the search root).
    pub candidates: VertexSet,
    /// `N(U)` in the whole graph.
    pub neighborhood: VertexSet,
}

impl SearchNode {
    fn root(g: &Graph, candidates: &VertexSet) -> Self {
        SearchNode { set: g.empty_set(), candidates: candidates.clone(), neighborhood: g.empty_set() }
    }

    fn extend_from(&mut self, g: &Graph, parent: &SearchNode, v: usize) {
        self.set.assign(&parent.set);
        self.set.insert(v);
        self.candidates.assign(&parent.candidates);
        self.candidates.remove_up_to(v);
        self.candidates.difference_with(g.neighbors(v));
        self.neighborhood.assign(&parent.neighborhood);
        self.neighborhood.union_with(g.neighbors(v));
    }
}

/// Visits every independent set of `g`, the empty set included, exactly
/// once in lexicographic order of sorted members. The visitor sees the set
/// and its candidate extensions; returning `false` skips the subtree below.
/// Returns the number of visits.
pub fn for_each_independent_set<F>(g: &Graph, mut visitor: F) -> u64
where
    F: FnMut(&VertexSet, &VertexSet) -> bool,
{
    search_independent_sets(g, &VertexSet::full(g.n()), |node| visitor(&node.set, &node.candidates))
}

/// Like [`for_each_independent_set`] but restricted to independent subsets
/// of `root`, with `N(U)` maintained along the way.
pub fn search_independent_sets<F>(g: &Graph, root: &VertexSet, mut visitor: F) -> u64
where
    F: FnMut(&SearchNode) -> bool,
{
    assert_eq!(root.universe(), g.n(), "search root over a different universe");
    let depth = root.len() + 1;
    let mut frames: Vec<SearchNode> = (0..depth).map(|_| SearchNode::root(g, root)).collect();
    let mut visits = 0;
    descend(g, &mut frames, &mut visitor, &mut visits);
    visits
}

fn descend<F>(g: &Graph, frames: &mut [SearchNode], visitor: &mut F, visits: &mut u64)
where
    F: FnMut(&SearchNode) -> bool,
{
    let (current, rest) = frames.split_first_mut().expect("frame stack exhausted");
    *visits += 1;
    if !visitor(current) {
        return;
    }
    if rest.is_empty() {
        return;
    }
    for v in current.candidates.iter() {
        rest[0].extend_from(g, current, v);
        descend(g, rest, visitor, visits);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceResult {
    pub alpha: usize,
    pub witness: VertexSet,
    /// `alpha / n`
    pub ratio: Ratio,
}

/// Exact maximum independent set by branch and bound.
///
/// Vertices isolated within the remaining candidates are taken outright;
/// otherwise the search branches on the candidate of highest remaining
/// degree (lowest index on ties), include before exclude. A greedy clique
/// cover of the candidates bounds how many more vertices can be added.
pub fn max_independent_set(g: &Graph) -> IndependenceResult {
    let mut current = Vec::new();
    let mut best = Vec::new();
    branch(g, VertexSet::full(g.n()), &mut current, &mut best);
    let witness = g.vertex_set(best.iter().copied()).expect("vertices in range");
    debug_assert!(g.find_edge_inside(&witness).is_none());
    IndependenceResult { alpha: best.len(), ratio: Ratio::from_counts(best.len(), g.n()), witness }
}

pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).alpha
}

/// `i(G) = alpha(G) / |V(G)|`
pub fn independence_ratio(g: &Graph) -> Ratio {
    max_independent_set(g).ratio
}

fn branch(g: &Graph, mut cand: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let mark = current.len();
    loop {
        let isolated: Vec<usize> = cand.iter().filter(|&v| g.neighbors(v).is_disjoint(&cand)).collect();
        if isolated.is_empty() {
            break;
        }
        for v in isolated {
            cand.remove(v);
            current.push(v);
        }
    }

    if cand.is_empty() {
        if current.len() > best.len() {
            best.clone_from(current);
        }
    } else if current.len() + clique_cover_size(g, &cand) > best.len() {
        let pivot = cand
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection_len(&cand), std::cmp::Reverse(v)))
            .expect("nonempty candidates");

        let mut with = cand.difference(g.neighbors(pivot));
        with.remove(pivot);
        current.push(pivot);
        branch(g, with, current, best);
        current.pop();

        cand.remove(pivot);
        branch(g, cand, current, best);
    }
    current.truncate(mark);
}

/// Size of a greedy partition of `cand` into cliques; an upper bound on
/// the independence number of the induced subgraph.
fn clique_cover_size(g: &Graph, cand: &VertexSet) -> usize {
    // each entry holds the vertices adjacent to every member of that clique
    let mut common: Vec<VertexSet> = Vec::new();
    for v in cand {
        match common.iter_mut().find(|c| c.contains(v)) {
            Some(c) => c.intersect_with(g.neighbors(v)),
            None => common.push(g.neighbors(v).clone()),
        }
    }
    common.len()
}
