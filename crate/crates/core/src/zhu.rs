//! Partitions of an independent set `U` of `G x H` into row/column classes,
//! plus certificates that every step of the product bounds holds on the
//! instance at hand.
//!
//! Product vertices use [`ProductVertexMap`]: `(x, y)` is `x * |V(H)| + y`.
//! A section `Z(y)` collects the `x` with `(x, y) ∈ Z`, `Z(x)` the `y`
//! with `(x, y) ∈ Z`. The lifted neighbourhood `N^G(Z)` takes the
//! `G`-neighbourhood of every section `Z(y)` and reassembles it in the
//! product; `N^H(Z)` does the same for the sections `Z(x)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, ProductVertexMap, VertexSet};
use crate::invariants::{a_ratio, b_ratio};
use crate::ratio::Ratio;

/// A factor of `G x H`: `Left` is `G`, `Right` is `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Left,
    Right,
}

fn check_product_set(g: &Graph, h: &Graph, z: &VertexSet) -> Result<ProductVertexMap> {
    let map = ProductVertexMap::of(g, h);
    if z.universe() != map.len() {
        return Err(Error::SizeMismatch { expected: map.len(), found: z.universe() });
    }
    Ok(map)
}

/// The slice of `z` at a fixed coordinate. With `fixed = Right` and
/// `index = y` this is `Z(y) ⊆ V(G)`; with `fixed = Left` and `index = x`
/// it is `Z(x) ⊆ V(H)`.
pub fn section(map: ProductVertexMap, z: &VertexSet, fixed: Factor, index: usize) -> Result<VertexSet> {
    if z.universe() != map.len() {
        return Err(Error::SizeMismatch { expected: map.len(), found: z.universe() });
    }
    let (bound, universe) = match fixed {
        Factor::Right => (map.right, map.left),
        Factor::Left => (map.left, map.right),
    };
    if index >= bound {
        return Err(Error::VertexOutOfRange { vertex: index, n: bound });
    }
    let mut out = VertexSet::new(universe);
    for other in 0..universe {
        let v = match fixed {
            Factor::Right => map.encode(other, index),
            Factor::Left => map.encode(index, other),
        };
        if z.contains(v) {
            out.insert(other);
        }
    }
    Ok(out)
}

fn sections(map: ProductVertexMap, z: &VertexSet, fixed: Factor) -> Vec<VertexSet> {
    let count = match fixed {
        Factor::Right => map.right,
        Factor::Left => map.left,
    };
    (0..count).map(|i| section(map, z, fixed, i).expect("index in range")).collect()
}

fn assemble(map: ProductVertexMap, parts: &[VertexSet], fixed: Factor) -> VertexSet {
    let mut out = VertexSet::new(map.len());
    for (i, part) in parts.iter().enumerate() {
        for other in part {
            out.insert(match fixed {
                Factor::Right => map.encode(other, i),
                Factor::Left => map.encode(i, other),
            });
        }
    }
    out
}

/// `N^G(Z)` for `factor = Left`, `N^H(Z)` for `factor = Right`.
pub fn lifted_neighborhood(g: &Graph, h: &Graph, z: &VertexSet, factor: Factor) -> Result<VertexSet> {
    let map = check_product_set(g, h, z)?;
    Ok(lifted(g, h, map, z, factor))
}

fn lifted(g: &Graph, h: &Graph, map: ProductVertexMap, z: &VertexSet, factor: Factor) -> VertexSet {
    // N^G works on the sections Z(y), which fix the right coordinate
    let (fixed, graph) = match factor {
        Factor::Left => (Factor::Right, g),
        Factor::Right => (Factor::Left, h),
    };
    let parts: Vec<VertexSet> =
        sections(map, z, fixed).iter().map(|s| graph.neighborhood_unchecked(s)).collect();
    assemble(map, &parts, fixed)
}

/// `N_{G x H}(Z)` computed from the factors without building the product.
pub fn product_neighborhood(g: &Graph, h: &Graph, z: &VertexSet) -> Result<VertexSet> {
    let map = check_product_set(g, h, z)?;
    let mut out = VertexSet::new(map.len());
    for v in z {
        let (x, y) = map.decode(v);
        for x2 in g.neighbors(x) {
            for y2 in h.neighbors(y) {
                out.insert(map.encode(x2, y2));
            }
        }
    }
    Ok(out)
}

/// Errors with the first adjacent pair inside `z`, if any.
pub fn require_product_independent(g: &Graph, h: &Graph, z: &VertexSet) -> Result<()> {
    let map = check_product_set(g, h, z)?;
    for u in z {
        let (x, y) = map.decode(u);
        for v in z.iter().filter(|&v| v > u) {
            let (x2, y2) = map.decode(v);
            if g.has_edge(x, x2) && h.has_edge(y, y2) {
                return Err(Error::NotIndependent { u, v });
            }
        }
    }
    Ok(())
}

/// Splits `U` into `A` (no `G`-neighbour of the same row in `U`) and
/// `B = U \ A`.
pub fn zhu_partition(g: &Graph, h: &Graph, u: &VertexSet) -> Result<(VertexSet, VertexSet)> {
    let d = refined_partition(g, h, u)?;
    Ok((d.a, d.b))
}

/// Every class and neighbourhood of the row/column decomposition of `U`.
#[derive(Clone, Debug)]
pub struct ZhuDecomposition {
    pub map: ProductVertexMap,
    pub u: VertexSet,
    /// Members with no `G`-neighbour in their row section `U(y)`.
    pub a: VertexSet,
    pub b: VertexSet,
    /// No `G`-neighbour in `U(y)`, some `H`-neighbour in `U(x)`.
    pub a_hat: VertexSet,
    /// No `H`-neighbour in `U(x)`, some `G`-neighbour in `U(y)`.
    pub b_hat: VertexSet,
    /// Neither.
    pub c: VertexSet,
    /// Both; empty whenever `U` is independent.
    pub both: VertexSet,
    /// `N_{G x H}(U)`
    pub nu: VertexSet,
    /// `N^G(A)`
    pub ng_a: VertexSet,
    /// `N^H(B)`
    pub nh_b: VertexSet,
    /// `N^G(Â ∪ C)`
    pub ng_ac: VertexSet,
    /// `N^G(Â ∪ C) \ N(U)`
    pub m: VertexSet,
    /// `N^G(Â ∪ C) ∩ N(U)`
    pub n1: VertexSet,
    /// `N^H(B̂ ∪ M)`
    pub n2: VertexSet,
}

impl ZhuDecomposition {
    /// `A(y) ⊆ V(G)`
    pub fn a_section(&self, y: usize) -> Result<VertexSet> {
        section(self.map, &self.a, Factor::Right, y)
    }

    /// `B(x) ⊆ V(H)`
    pub fn b_section(&self, x: usize) -> Result<VertexSet> {
        section(self.map, &self.b, Factor::Left, x)
    }

    /// `(B̂ ∪ M)(x) ⊆ V(H)`
    pub fn b_hat_m_section(&self, x: usize) -> Result<VertexSet> {
        section(self.map, &self.b_hat.union(&self.m), Factor::Left, x)
    }
}

pub fn refined_partition(g: &Graph, h: &Graph, u: &VertexSet) -> Result<ZhuDecomposition> {
    let map = check_product_set(g, h, u)?;
    require_product_independent(g, h, u)?;

    let rows = sections(map, u, Factor::Right);
    let cols = sections(map, u, Factor::Left);
    let empty = VertexSet::new(map.len());
    let (mut a, mut b) = (empty.clone(), empty.clone());
    let (mut a_hat, mut b_hat, mut c, mut both) =
        (empty.clone(), empty.clone(), empty.clone(), empty.clone());
    for v in u {
        let (x, y) = map.decode(v);
        let g_mate = !g.neighbors(x).is_disjoint(&rows[y]);
        let h_mate = !h.neighbors(y).is_disjoint(&cols[x]);
        if g_mate {
            b.insert(v)
        } else {
            a.insert(v)
        }
        match (g_mate, h_mate) {
            (false, true) => a_hat.insert(v),
            (true, false) => b_hat.insert(v),
            (false, false) => c.insert(v),
            (true, true) => both.insert(v),
        }
    }

    let nu = product_neighborhood(g, h, u)?;
    let ng_a = lifted(g, h, map, &a, Factor::Left);
    let nh_b = lifted(g, h, map, &b, Factor::Right);
    let ng_ac = lifted(g, h, map, &a_hat.union(&c), Factor::Left);
    let m = ng_ac.difference(&nu);
    let n1 = ng_ac.intersection(&nu);
    let n2 = lifted(g, h, map, &b_hat.union(&m), Factor::Right);

    Ok(ZhuDecomposition { map, u: u.clone(), a, b, a_hat, b_hat, c, both, nu, ng_a, nh_b, ng_ac, m, n1, n2 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Passed,
    Failed,
    /// A side condition of the step does not hold for this instance.
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

/// Named outcomes of every checked step, in evaluation order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub checks: Vec<Check>,
}

impl Certificate {
    fn record(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        let status = if passed { CheckStatus::Passed } else { CheckStatus::Failed };
        self.checks.push(Check { name, status, detail: detail.into() });
    }

    fn skip(&mut self, name: &'static str, detail: impl Into<String>) {
        self.checks.push(Check { name, status: CheckStatus::Skipped, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Failed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.get(name).map(|c| c.status)
    }

    pub fn extend(&mut self, other: Certificate) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Passed => "pass",
                CheckStatus::Failed => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            write!(f, "{tag} {}", c.name)?;
            if !c.detail.is_empty() {
                write!(f, ": {}", c.detail)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// First section (by index) that is not independent in `graph`, with the
/// offending edge.
fn dependent_section(graph: &Graph, parts: &[VertexSet]) -> Option<(usize, (usize, usize))> {
    parts.iter().enumerate().find_map(|(i, s)| graph.find_edge_inside(s).map(|e| (i, e)))
}

fn section_detail(axis: &str, hit: Option<(usize, (usize, usize))>) -> String {
    match hit {
        Some((i, (p, q))) => format!("{axis}={i}: {p}~{q}"),
        None => String::new(),
    }
}

fn disjoint_detail(map: ProductVertexMap, p: &VertexSet, q: &VertexSet) -> String {
    match p.intersection(q).first() {
        Some(v) => format!("shared vertex {:?}", map.decode(v)),
        None => String::new(),
    }
}

/// Both parts of the row/column lemma: `A(y)` independent in `G` for every
/// `y`, `B(x)` independent in `H` for every `x`, and `A`, `B`, `N^G(A)`,
/// `N^H(B)` pairwise disjoint.
pub fn verify_lemma1(g: &Graph, h: &Graph, u: &VertexSet) -> Result<Certificate> {
    let d = refined_partition(g, h, u)?;
    Ok(lemma1_checks(g, h, &d))
}

fn lemma1_checks(g: &Graph, h: &Graph, d: &ZhuDecomposition) -> Certificate {
    let map = d.map;
    let mut cert = Certificate::default();
    cert.record("lemma1.partition", d.a.is_disjoint(&d.b) && d.a.union(&d.b) == d.u, "");
    let hit = dependent_section(g, &sections(map, &d.a, Factor::Right));
    cert.record("lemma1.a_sections_independent", hit.is_none(), section_detail("y", hit));
    let hit = dependent_section(h, &sections(map, &d.b, Factor::Left));
    cert.record("lemma1.b_sections_independent", hit.is_none(), section_detail("x", hit));

    let named: [(&'static str, &VertexSet, &VertexSet); 6] = [
        ("lemma1.disjoint.a_b", &d.a, &d.b),
        ("lemma1.disjoint.a_nga", &d.a, &d.ng_a),
        ("lemma1.disjoint.a_nhb", &d.a, &d.nh_b),
        ("lemma1.disjoint.b_nga", &d.b, &d.ng_a),
        ("lemma1.disjoint.b_nhb", &d.b, &d.nh_b),
        ("lemma1.disjoint.nga_nhb", &d.ng_a, &d.nh_b),
    ];
    for (name, p, q) in named {
        cert.record(name, p.is_disjoint(q), disjoint_detail(map, p, q));
    }
    cert
}

fn max_ratio<'a>(p: &'a Ratio, q: &'a Ratio) -> &'a Ratio {
    if p >= q {
        p
    } else {
        q
    }
}

/// The counting argument behind `i(G x H) <= max{a(G), a(H)}`, on one
/// independent set: the row classes and their lifted neighbourhoods fit
/// inside the product, every section ratio is at most the factor's `a`,
/// and the mediant of the sections bounds `|U| / |V(G x H)|`.
pub fn verify_theorem2_chain(
    g: &Graph,
    h: &Graph,
    u: &VertexSet,
    a_g: &Ratio,
    a_h: &Ratio,
) -> Result<Certificate> {
    let d = refined_partition(g, h, u)?;
    let map = d.map;
    let bound = max_ratio(a_g, a_h);
    let mut cert = lemma1_checks(g, h, &d);

    let a_rows = sections(map, &d.a, Factor::Right);
    let b_cols = sections(map, &d.b, Factor::Left);
    let ng_sum: usize = a_rows.iter().map(|s| g.neighborhood_unchecked(s).len()).sum();
    let nh_sum: usize = b_cols.iter().map(|s| h.neighborhood_unchecked(s).len()).sum();
    cert.record(
        "theorem2.lifted_size_g",
        ng_sum == d.ng_a.len(),
        format!("sum {ng_sum}, |N^G(A)| {}", d.ng_a.len()),
    );
    cert.record(
        "theorem2.lifted_size_h",
        nh_sum == d.nh_b.len(),
        format!("sum {nh_sum}, |N^H(B)| {}", d.nh_b.len()),
    );

    let covered = d.a.len() + d.b.len() + d.ng_a.len() + d.nh_b.len();
    cert.record("theorem2.covering", covered <= map.len(), format!("{covered} <= {}", map.len()));

    let bad_row = a_rows.iter().enumerate().find(|(_, s)| {
        !s.is_empty() && Ratio::from_counts(s.len(), s.len() + g.neighborhood_unchecked(s).len()) > *a_g
    });
    let bad_col = b_cols.iter().enumerate().find(|(_, s)| {
        !s.is_empty() && Ratio::from_counts(s.len(), s.len() + h.neighborhood_unchecked(s).len()) > *a_h
    });
    let detail = match (bad_row, bad_col) {
        (Some((y, _)), _) => format!("row section y={y} exceeds a(G)"),
        (_, Some((x, _))) => format!("column section x={x} exceeds a(H)"),
        _ => String::new(),
    };
    cert.record("theorem2.section_ratios", bad_row.is_none() && bad_col.is_none(), detail);

    if u.is_empty() {
        cert.skip("theorem2.mediant", "empty set");
    } else {
        let mediant = Ratio::from_counts(d.a.len() + d.b.len(), covered);
        cert.record("theorem2.mediant", mediant <= *bound, format!("{mediant} <= {bound}"));
    }
    let density = Ratio::from_counts(u.len(), map.len());
    cert.record("theorem2.bound", density <= *bound, format!("{density} <= {bound}"));
    Ok(cert)
}

/// Steps of the lower bound `|N(U)| >= min{b(G), b(H)} |U|` for one
/// nonempty independent `U`, computing `a(G)` and `a(H)` first.
pub fn verify_theorem3_chain(g: &Graph, h: &Graph, u: &VertexSet) -> Result<Certificate> {
    check_product_set(g, h, u)?;
    if u.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let (a_g, _) = a_ratio(g);
    let (a_h, _) = a_ratio(h);
    verify_theorem3_chain_with(g, h, u, &a_g, &a_h)
}

/// [`verify_theorem3_chain`] with precomputed `a(G)` and `a(H)`.
pub fn verify_theorem3_chain_with(
    g: &Graph,
    h: &Graph,
    u: &VertexSet,
    a_g: &Ratio,
    a_h: &Ratio,
) -> Result<Certificate> {
    check_product_set(g, h, u)?;
    if u.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let d = refined_partition(g, h, u)?;
    let map = d.map;
    let b_g = b_ratio(a_g)?;
    let b_h = b_ratio(a_h)?;
    let half = Ratio::half();
    let mut cert = Certificate::default();

    let classes = [&d.a_hat, &d.b_hat, &d.c];
    let pairwise = classes.iter().enumerate().all(|(i, p)| classes[i + 1..].iter().all(|q| p.is_disjoint(q)));
    let joined = d.a_hat.union(&d.b_hat).union(&d.c);
    cert.record("theorem3.partition", pairwise && joined == d.u, "");
    cert.record("theorem3.fourth_class_empty", d.both.is_empty(), disjoint_detail(map, &d.both, &d.both));
    cert.record("theorem3.refines_zhu", d.a == d.a_hat.union(&d.c) && d.b == d.b_hat, "");

    let ac = d.a_hat.union(&d.c);
    let hit = dependent_section(g, &sections(map, &ac, Factor::Right));
    cert.record("theorem3.ac_sections_independent", hit.is_none(), section_detail("y", hit));

    let ng_a_hat = lifted(g, h, map, &d.a_hat, Factor::Left);
    cert.record(
        "theorem3.ng_a_hat_in_nu",
        ng_a_hat.is_subset(&d.nu),
        disjoint_detail(map, &ng_a_hat, &d.nu.complement()),
    );
    cert.record("theorem3.m_outside_nu", d.m.is_disjoint(&d.nu), disjoint_detail(map, &d.m, &d.nu));

    let b_hat_cols = sections(map, &d.b_hat, Factor::Left);
    let m_cols = sections(map, &d.m, Factor::Left);
    let overlap = (0..map.left).find(|&x| !b_hat_cols[x].is_disjoint(&m_cols[x]));
    cert.record(
        "theorem3.b_hat_m_sections_disjoint",
        overlap.is_none(),
        overlap.map(|x| format!("x={x}")).unwrap_or_default(),
    );
    let bm_cols: Vec<VertexSet> = b_hat_cols.iter().zip(&m_cols).map(|(p, q)| p.union(q)).collect();
    let hit = dependent_section(h, &bm_cols);
    cert.record("theorem3.b_hat_m_sections_independent", hit.is_none(), section_detail("x", hit));

    cert.record("theorem3.n2_in_nu", d.n2.is_subset(&d.nu), disjoint_detail(map, &d.n2, &d.nu.complement()));
    cert.record("theorem3.n1_n2_disjoint", d.n1.is_disjoint(&d.n2), disjoint_detail(map, &d.n1, &d.n2));

    let (n_ac, n_bm) = (d.a_hat.len() + d.c.len(), d.b_hat.len() + d.m.len());
    let m_len = Ratio::from(d.m.len());
    let step1 = &b_g.scale(n_ac) - &m_len;
    let step2 = b_h.scale(n_bm);
    let n1 = Ratio::from(d.n1.len());
    let n2 = Ratio::from(d.n2.len());
    cert.record("theorem3.n1_lower_bound", n1 >= step1, format!("|N1| = {n1} >= {step1}"));
    cert.record("theorem3.n2_lower_bound", n2 >= step2, format!("|N2| = {n2} >= {step2}"));
    let nu_len = d.nu.len();
    cert.record(
        "theorem3.nu_at_least_n1_plus_n2",
        nu_len >= d.n1.len() + d.n2.len(),
        format!("|N(U)| = {nu_len} >= {} + {}", d.n1.len(), d.n2.len()),
    );

    let min_b = if b_g <= b_h { b_g.clone() } else { b_h.clone() };
    let target = min_b.scale(d.u.len());
    let lower = &step1 + &step2;

    if *a_h <= half {
        // b(H) >= 1 absorbs the -|M| term
        let mid = &min_b.scale(d.u.len()) + &(&b_h - &Ratio::one()).scale(d.m.len());
        cert.record(
            "theorem3.case_right_half",
            lower >= mid && mid >= target,
            format!("{lower} >= {mid} >= {target}"),
        );
    } else {
        cert.skip("theorem3.case_right_half", "a(H) > 1/2");
    }

    if *a_g <= half && *a_h > half {
        let slack = &Ratio::from(n_ac) - &(&m_len / &b_g);
        if slack >= Ratio::zero() {
            let factor = &Ratio::one() - &b_g.recip();
            let mid = min_b.scale(n_ac + d.b_hat.len()) + &min_b * &factor.scale(d.m.len());
            cert.record(
                "theorem3.case_left_half",
                lower >= mid && mid >= target,
                format!("slack {slack} >= 0: {lower} >= {mid} >= {target}"),
            );
        } else {
            let n2_bound = step2.clone();
            cert.record(
                "theorem3.case_left_half",
                n_ac < d.m.len() && n2 >= n2_bound && n2_bound >= target,
                format!("slack {slack} < 0: |N2| = {n2} >= {n2_bound} >= {target}"),
            );
        }
    } else if *a_g <= half {
        cert.skip("theorem3.case_left_half", "covered by the a(H) <= 1/2 case");
    } else {
        cert.skip("theorem3.case_left_half", "a(G) > 1/2");
    }

    if *a_g <= half || *a_h <= half {
        let ratio = Ratio::from_counts(d.u.len(), d.u.len() + nu_len);
        let bound = max_ratio(a_g, a_h);
        cert.record(
            "theorem3.conclusion",
            Ratio::from(nu_len) >= target && ratio <= *bound,
            format!("|N(U)| = {nu_len} >= {target}; ratio {ratio} <= {bound}"),
        );
    } else {
        cert.skip("theorem3.conclusion", "a(G) > 1/2 and a(H) > 1/2");
    }
    Ok(cert)
}
