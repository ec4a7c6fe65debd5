//! `a(G)`, `a*(G)`, `b(G)` and the ultimate categorical independence
//! ratio `A(G) = a*(G)`.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::independence::search_independent_sets;
use crate::ratio::Ratio;

/// `|U| / (|U| + |N(U)|)` for a nonempty vertex set.
pub fn local_ratio(g: &Graph, set: &VertexSet) -> Result<Ratio> {
    if set.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let nbhd = g.neighborhood(set)?;
    Ok(Ratio::from_counts(set.len(), set.len() + nbhd.len()))
}

/// Best value found so far, kept as the integer pair `(|U|, |N(U)|)`.
#[derive(Clone, Copy)]
struct Best {
    size: usize,
    nbhd: usize,
}

impl Best {
    /// `size / (size + nbhd) > self`
    fn beaten_by(&self, size: usize, nbhd: usize) -> bool {
        size * self.nbhd > self.size * nbhd
    }
}

/// `a(G)`: the maximum of `|U| / (|U| + |N(U)|)` over nonempty independent
/// sets `U`, together with a maximizing set.
///
/// Any independent set splits along connected components and its ratio is
/// a mediant of the parts, so the maximum is attained inside a single
/// component. Components are searched in order of their smallest vertex
/// and the witness is the first strict improvement found, which makes it
/// the lexicographically first maximizer within its component.
///
/// A search node `(U, R)` is pruned when `(|U|+|R|) / (|U|+|R|+|N(U)|)`
/// does not beat the best ratio so far: every set below it has at most
/// `|U|+|R|` members and at least `|N(U)|` neighbours.
pub fn a_ratio(g: &Graph) -> (Ratio, VertexSet) {
    let mut best: Option<(Best, VertexSet)> = None;
    for comp in g.components() {
        search_independent_sets(g, &comp, |node| {
            let size = node.set.len();
            let nbhd = node.neighborhood.len();
            if size > 0 && best.as_ref().is_none_or(|(b, _)| b.beaten_by(size, nbhd)) {
                best = Some((Best { size, nbhd }, node.set.clone()));
            }
            match &best {
                Some((b, _)) => b.beaten_by(size + node.candidates.len(), nbhd),
                None => true,
            }
        });
    }
    let (b, witness) = best.expect("a graph has at least one vertex");
    (Ratio::from_counts(b.size, b.size + b.nbhd), witness)
}

/// `a*(a)`: `a` when `a <= 1/2`, otherwise `1`.
pub fn a_star(a: &Ratio) -> Ratio {
    if *a <= Ratio::half() {
        a.clone()
    } else {
        Ratio::one()
    }
}

/// `b = (1 - a) / a` for `0 < a <= 1`; `b >= 1` exactly when `a <= 1/2`.
pub fn b_ratio(a: &Ratio) -> Result<Ratio> {
    if !a.is_positive() || *a > Ratio::one() {
        return Err(Error::RatioOutOfRange(a.to_string()));
    }
    Ok(&(&Ratio::one() - a) / a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioResult {
    pub a: Ratio,
    /// Nonempty independent set attaining `a`.
    pub witness: VertexSet,
    pub a_star: Ratio,
    /// `A(G)`, equal to `a_star`.
    pub ultimate: Ratio,
    pub b: Ratio,
}

/// Computes `a(G)` and everything derived from it, with `A(G) := a*(G)`.
pub fn a_star_and_ultimate(g: &Graph) -> RatioResult {
    let (a, witness) = a_ratio(g);
    let a_star = a_star(&a);
    let b = b_ratio(&a).expect("a(G) lies in (0, 1]");
    RatioResult { ultimate: a_star.clone(), a, witness, a_star, b }
}

/// `A(G)` alone.
pub fn ultimate_ratio(g: &Graph) -> Ratio {
    a_star_and_ultimate(g).ultimate
}
