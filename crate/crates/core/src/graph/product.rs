use super::{Graph, VertexSet};
use crate::error::{Error, Result};

pub const DEFAULT_VERTEX_CAP: usize = 4096;
pub const VERTEX_CAP_ENV: &str = "UCIR_VERTEX_CAP";

/// Upper bound on the vertex count of any product, power or union the
/// toolkit is asked to materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexCap(pub usize);

impl Default for VertexCap {
    fn default() -> Self {
        VertexCap(DEFAULT_VERTEX_CAP)
    }
}

impl VertexCap {
    /// Reads `UCIR_VERTEX_CAP`, falling back to the default when the
    /// variable is unset or not a positive integer.
    pub fn from_env() -> Self {
        std::env::var(VERTEX_CAP_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&c| c > 0)
            .map(VertexCap)
            .unwrap_or_default()
    }

    pub fn check(self, requested: usize) -> Result<()> {
        if requested > self.0 {
            Err(Error::VertexCapExceeded { requested, cap: self.0 })
        } else {
            Ok(())
        }
    }

    fn check_product(self, left: usize, right: usize) -> Result<usize> {
        let n =
            left.checked_mul(right).ok_or(Error::VertexCapExceeded { requested: usize::MAX, cap: self.0 })?;
        self.check(n)?;
        Ok(n)
    }
}

/// Row-major encoding of `V(G) x V(H)`: `(x, y)` is vertex `x * right + y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub left: usize,
    pub right: usize,
}

impl ProductVertexMap {
    pub fn new(left: usize, right: usize) -> Self {
        ProductVertexMap { left, right }
    }

    pub fn of(g: &Graph, h: &Graph) -> Self {
        ProductVertexMap::new(g.n(), h.n())
    }

    pub fn len(&self) -> usize {
        self.left * self.right
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn encode(&self, x: usize, y: usize) -> usize {
        debug_assert!(x < self.left && y < self.right);
        x * self.right + y
    }

    #[inline]
    pub fn decode(&self, v: usize) -> (usize, usize) {
        (v / self.right, v % self.right)
    }
}

/// `G x H`: `(x1, y1) ~ (x2, y2)` iff `x1 ~ x2` in `G` and `y1 ~ y2` in `H`.
pub fn categorical_product(g: &Graph, h: &Graph, cap: VertexCap) -> Result<Graph> {
    let n = cap.check_product(g.n(), h.n())?;
    let map = ProductVertexMap::of(g, h);
    let mut rows = vec![VertexSet::new(n); n];
    for x1 in 0..g.n() {
        for y1 in 0..h.n() {
            let row = &mut rows[map.encode(x1, y1)];
            for x2 in g.neighbors(x1) {
                for y2 in h.neighbors(y1) {
                    row.insert(map.encode(x2, y2));
                }
            }
        }
    }
    Ok(Graph::from_rows(rows))
}

/// `G^k` as the left fold `((G x G) x G) x ...`, so a tuple
/// `(x1, ..., xk)` sits at `((x1 * n + x2) * n + ...) * n + xk`.
pub fn categorical_power(g: &Graph, k: usize, cap: VertexCap) -> Result<Graph> {
    if k == 0 {
        return Err(Error::ZeroPower);
    }
    let total = u32::try_from(k).ok().and_then(|k| g.n().checked_pow(k)).unwrap_or(usize::MAX);
    cap.check(total)?;
    let mut acc = g.clone();
    for _ in 1..k {
        acc = categorical_product(&acc, g, cap)?;
    }
    Ok(acc)
}

/// `G ∪ H` with the vertices of `H` shifted up by `|V(G)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n() + h.n();
    let mut rows = Vec::with_capacity(n);
    for v in 0..g.n() {
        let mut row = VertexSet::new(n);
        for w in g.neighbors(v) {
            row.insert(w);
        }
        rows.push(row);
    }
    for v in 0..h.n() {
        let mut row = VertexSet::new(n);
        for w in h.neighbors(v) {
            row.insert(w + g.n());
        }
        rows.push(row);
    }
    Graph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    fn k(n: usize) -> Graph {
        family(Family::Complete, &[n]).unwrap()
    }

    /// Brute-force pair expansion used to cross-check products.
    fn product_edges_by_expansion(g: &Graph, h: &Graph) -> usize {
        let map = ProductVertexMap::of(g, h);
        let mut count = 0;
        for a in 0..map.len() {
            for b in a + 1..map.len() {
                let (x1, y1) = map.decode(a);
                let (x2, y2) = map.decode(b);
                if g.has_edge(x1, x2) && h.has_edge(y1, y2) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn product_examples() {
        let cap = VertexCap::default();
        let p = categorical_product(&k(2), &k(2), cap).unwrap();
        assert_eq!((p.n(), p.edge_count()), (4, 2));
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);

        let p = categorical_product(&k(3), &k(3), cap).unwrap();
        assert_eq!((p.n(), p.edge_count()), (9, 18));
        assert_eq!(product_edges_by_expansion(&k(3), &k(3)), 18);

        let e3 = Graph::edgeless(3).unwrap();
        let p = categorical_product(&k(2), &e3, cap).unwrap();
        assert_eq!((p.n(), p.edge_count()), (6, 0));
    }

    #[test]
    fn power_examples() {
        let cap = VertexCap::default();
        let c5 = family(Family::Cycle, &[5]).unwrap();
        assert_eq!(categorical_power(&c5, 1, cap).unwrap(), c5);
        let p = categorical_power(&k(2), 2, cap).unwrap();
        assert_eq!(p, categorical_product(&k(2), &k(2), cap).unwrap());
        let p = categorical_power(&k(3), 2, cap).unwrap();
        assert_eq!((p.n(), p.edge_count()), (9, 18));
        assert_eq!(categorical_power(&c5, 0, cap), Err(Error::ZeroPower));
        assert_eq!(
            categorical_power(&c5, 6, cap),
            Err(Error::VertexCapExceeded { requested: 15625, cap: 4096 })
        );
    }

    #[test]
    fn cap_is_enforced() {
        let err = categorical_product(&k(5), &k(5), VertexCap(24)).unwrap_err();
        assert_eq!(err, Error::VertexCapExceeded { requested: 25, cap: 24 });
    }

    #[test]
    fn union_examples() {
        let u = disjoint_union(&k(2), &k(2));
        assert_eq!((u.n(), u.edge_count()), (4, 2));
        assert_eq!(u.edges().collect::<Vec<_>>(), vec![(0, 1), (2, 3)]);
        let u = disjoint_union(&k(1), &k(1));
        assert_eq!((u.n(), u.edge_count()), (2, 0));
        let c5 = family(Family::Cycle, &[5]).unwrap();
        let u = disjoint_union(&c5, &k(2));
        assert_eq!((u.n(), u.edge_count()), (7, 6));
    }

    #[test]
    fn vertex_map_round_trip() {
        let map = ProductVertexMap::new(4, 7);
        for v in 0..map.len() {
            let (x, y) = map.decode(v);
            assert_eq!(map.encode(x, y), v);
        }
    }
}
