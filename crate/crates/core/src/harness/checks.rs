use super::{CheckResult, Counterexample, Outcome};
use crate::error::Result;
use crate::graph::{categorical_product, disjoint_union, Graph, VertexCap};
use crate::independence::max_independent_set;
use crate::invariants::{a_ratio, a_star, a_star_and_ultimate};
use crate::matching::has_fractional_perfect_matching;
use crate::ratio::Ratio;
use crate::zhu::{verify_theorem2_chain, verify_theorem3_chain_with, CheckStatus};

fn max(p: Ratio, q: Ratio) -> Ratio {
    std::cmp::max(p, q)
}

/// `i(G x H) <= max{a(G), a(H)}`; a failure carries the maximum
/// independent set of the product.
pub fn check_theorem_weak(g: &Graph, h: &Graph, cap: VertexCap) -> Result<CheckResult> {
    let product = categorical_product(g, h, cap)?;
    let mis = max_independent_set(&product);
    let bound = max(a_ratio(g).0, a_ratio(h).0);
    Ok(CheckResult::from_bool(
        "theorem_weak",
        mis.ratio <= bound,
        format!("i(GxH) = {} <= {bound}", mis.ratio),
        || Counterexample::new(&[g, h], &mis.witness, "i(GxH) exceeds max{a(G), a(H)}"),
    ))
}

/// `a(G x H) <= max{a(G), a(H)}` whenever one factor has `a <= 1/2`;
/// skipped otherwise.
pub fn check_theorem_strong(g: &Graph, h: &Graph, cap: VertexCap) -> Result<CheckResult> {
    cap.check(g.n().saturating_mul(h.n()))?;
    let (a_g, a_h) = (a_ratio(g).0, a_ratio(h).0);
    let half = Ratio::half();
    if a_g > half && a_h > half {
        return Ok(CheckResult::new(
            "theorem_strong",
            Outcome::Skipped,
            format!("a(G) = {a_g}, a(H) = {a_h}, both above 1/2"),
        ));
    }
    let product = categorical_product(g, h, cap)?;
    let (a_p, witness) = a_ratio(&product);
    let bound = max(a_g, a_h);
    Ok(CheckResult::from_bool("theorem_strong", a_p <= bound, format!("a(GxH) = {a_p} <= {bound}"), || {
        Counterexample::new(&[g, h], &witness, "a(GxH) exceeds max{a(G), a(H)}")
    }))
}

/// `a*(G^2) = a*(G)`, `a(G^2) >= a(G)`, and `a(G^2) = a(G)` when
/// `a(G) <= 1/2`.
pub fn check_question1(g: &Graph, cap: VertexCap) -> Result<CheckResult> {
    let square = categorical_product(g, g, cap)?;
    let a_g = a_ratio(g).0;
    let (a_sq, witness) = a_ratio(&square);
    let stable = a_star(&a_sq) == a_star(&a_g);
    let monotone = a_sq >= a_g;
    let equal_when_small = a_g > Ratio::half() || a_sq == a_g;
    Ok(CheckResult::from_bool(
        "question1",
        stable && monotone && equal_when_small,
        format!("a(G) = {a_g}, a(G^2) = {a_sq}"),
        || Counterexample::new(&[g], &witness, "a*(G^2) differs from a*(G)"),
    ))
}

/// `A(G ∪ H) = A(G x H) = max{A(G), A(H)}`.
pub fn check_union_rule(g: &Graph, h: &Graph, cap: VertexCap) -> Result<CheckResult> {
    cap.check(g.n() + h.n())?;
    let product = categorical_product(g, h, cap)?;
    let union = disjoint_union(g, h);
    let expected = max(a_star_and_ultimate(g).ultimate, a_star_and_ultimate(h).ultimate);
    let on_union = a_star_and_ultimate(&union);
    let on_product = a_star_and_ultimate(&product);
    let passed = on_union.ultimate == expected && on_product.ultimate == expected;
    Ok(CheckResult::from_bool(
        "union_rule",
        passed,
        format!("A(G+H) = {}, A(GxH) = {}, max = {expected}", on_union.ultimate, on_product.ultimate),
        || {
            let (set, what) = if on_union.ultimate != expected {
                (&on_union.witness, "A(G+H)")
            } else {
                (&on_product.witness, "A(GxH)")
            };
            Counterexample::new(&[g, h], set, format!("{what} differs from max{{A(G), A(H)}}"))
        },
    ))
}

/// `a(G) <= 1/2` exactly when `G` has a fractional perfect matching.
pub fn check_fpm_criterion(g: &Graph) -> CheckResult {
    let (a, witness) = a_ratio(g);
    let fpm = has_fractional_perfect_matching(g);
    CheckResult::from_bool(
        "fpm_criterion",
        fpm == (a <= Ratio::half()),
        format!("a(G) = {a}, fractional perfect matching: {fpm}"),
        || Counterexample::new(&[g], &witness, "matching test disagrees with a(G) <= 1/2"),
    )
}

/// Runs every instance certificate on an independent set `u` of `G x H`.
pub fn check_zhu(
    g: &Graph,
    h: &Graph,
    u: &crate::graph::VertexSet,
    a_g: &Ratio,
    a_h: &Ratio,
) -> Result<CheckResult> {
    let mut cert = verify_theorem2_chain(g, h, u, a_g, a_h)?;
    cert.extend(verify_theorem3_chain_with(g, h, u, a_g, a_h)?);
    let failed: Vec<&str> = cert.failures().map(|c| c.name).collect();
    let skipped = cert.checks.iter().filter(|c| c.status == CheckStatus::Skipped).count();
    let detail = format!("{} checks, {} skipped", cert.checks.len(), skipped);
    Ok(CheckResult::from_bool("zhu_certificates", failed.is_empty(), detail, || {
        Counterexample::new(&[g, h], u, format!("failed steps: {}", failed.join(", ")))
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvergenceTable {
    /// `(k, i(G^k))` for `k = 1..=kmax`.
    pub rows: Vec<(usize, Ratio)>,
    pub ultimate: Ratio,
    /// `A(G) - i(G^kmax)`
    pub gap: Ratio,
    pub nondecreasing: bool,
    pub bounded: bool,
}

impl ConvergenceTable {
    pub fn result(&self, g: &Graph) -> CheckResult {
        CheckResult::from_bool(
            "convergence",
            self.nondecreasing && self.bounded,
            format!("gap {}", self.gap),
            || Counterexample::new(&[g], &g.empty_set(), "i(G^k) not monotone or exceeds A(G)"),
        )
    }
}

/// Exact `i(G^k)` for `k = 1..=kmax` against the limit `A(G)`.
pub fn convergence_table(g: &Graph, kmax: usize, cap: VertexCap) -> Result<ConvergenceTable> {
    if kmax == 0 {
        return Err(crate::Error::ZeroPower);
    }
    let total = u32::try_from(kmax).ok().and_then(|k| g.n().checked_pow(k)).unwrap_or(usize::MAX);
    cap.check(total)?;

    let ultimate = a_star_and_ultimate(g).ultimate;
    let mut rows = Vec::with_capacity(kmax);
    let mut power = g.clone();
    for k in 1..=kmax {
        if k > 1 {
            power = categorical_product(&power, g, cap)?;
        }
        rows.push((k, max_independent_set(&power).ratio));
    }
    let nondecreasing = rows.windows(2).all(|w| w[0].1 <= w[1].1);
    let bounded = rows.iter().all(|(_, i)| *i <= ultimate);
    let gap = &ultimate - &rows.last().expect("kmax >= 1").1;
    Ok(ConvergenceTable { rows, ultimate, gap, nondecreasing, bounded })
}
