use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::checks::{
    check_fpm_criterion, check_question1, check_theorem_strong, check_theorem_weak, check_union_rule,
    check_zhu,
};
use super::{CampaignConfig, CampaignRng, CheckResult, Summary};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::a_ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Campaign {
    Weak,
    Strong,
    Question1,
    Union,
    Zhu,
    FpmOracle,
}

impl Campaign {
    pub const ALL: [Campaign; 6] = [
        Campaign::Weak,
        Campaign::Strong,
        Campaign::Question1,
        Campaign::Union,
        Campaign::Zhu,
        Campaign::FpmOracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Campaign::Weak => "weak",
            Campaign::Strong => "strong",
            Campaign::Question1 => "question1",
            Campaign::Union => "union",
            Campaign::Zhu => "zhu",
            Campaign::FpmOracle => "fpm-oracle",
        }
    }

    fn on_pairs(self) -> bool {
        matches!(self, Campaign::Weak | Campaign::Strong | Campaign::Union | Campaign::Zhu)
    }
}

impl fmt::Display for Campaign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Campaign {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Campaign::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown campaign `{s}`"))
    }
}

#[derive(Clone, Debug, Default)]
pub struct CampaignReport {
    /// One entry per evaluated instance: the corpus indices involved
    /// (one for single-graph campaigns, two for pair campaigns) and the
    /// result.
    pub results: Vec<(Vec<usize>, CheckResult)>,
    pub summary: Summary,
}

/// Instance pairs for a pair campaign: every unordered pair `i <= j` when
/// `samples` is `None`, else `samples` pairs drawn with replacement.
pub fn pair_indices(count: usize, samples: Option<usize>, rng: &mut CampaignRng) -> Vec<(usize, usize)> {
    if count == 0 {
        return Vec::new();
    }
    match samples {
        None => (0..count).flat_map(|i| (i..count).map(move |j| (i, j))).collect(),
        Some(k) => (0..k).map(|_| (rng.below(count), rng.below(count))).collect(),
    }
}

/// Runs one campaign over a list of graphs. Random choices (pair
/// sampling, the independent sets for `zhu`) are drawn sequentially from
/// the seeded stream before any work starts; instances are then
/// evaluated in parallel and reported in draw order.
pub fn run_campaign(kind: Campaign, graphs: &[Graph], config: &CampaignConfig) -> Result<CampaignReport> {
    let mut rng = CampaignRng::new(config.seed);
    let cap = config.vertex_cap;

    let results: Vec<Result<(Vec<usize>, CheckResult)>> = if kind.on_pairs() {
        let pairs = pair_indices(graphs.len(), config.pair_samples, &mut rng);
        let sets: Vec<Option<crate::graph::VertexSet>> = pairs
            .iter()
            .map(|&(i, j)| {
                (kind == Campaign::Zhu && graphs[i].n() * graphs[j].n() <= cap.0)
                    .then(|| rng.maximal_product_independent_set(&graphs[i], &graphs[j]))
            })
            .collect();
        pairs
            .par_iter()
            .zip(sets.par_iter())
            .map(|(&(i, j), set)| {
                let (g, h) = (&graphs[i], &graphs[j]);
                let result = match kind {
                    Campaign::Weak => check_theorem_weak(g, h, cap)?,
                    Campaign::Strong => check_theorem_strong(g, h, cap)?,
                    Campaign::Union => check_union_rule(g, h, cap)?,
                    Campaign::Zhu => {
                        let u = set
                            .as_ref()
                            .ok_or(Error::VertexCapExceeded { requested: g.n() * h.n(), cap: cap.0 })?;
                        check_zhu(g, h, u, &a_ratio(g).0, &a_ratio(h).0)?
                    }
                    _ => unreachable!("single-graph campaign"),
                };
                Ok((vec![i, j], result))
            })
            .collect()
    } else {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| {
                let result = match kind {
                    Campaign::Question1 => check_question1(g, cap)?,
                    Campaign::FpmOracle => check_fpm_criterion(g),
                    _ => unreachable!("pair campaign"),
                };
                Ok((vec![i], result))
            })
            .collect()
    };

    let mut report = CampaignReport::default();
    for r in results {
        let (idx, result) = r?;
        report.summary.add(&result.outcome);
        let stop = config.fail_fast && result.failed();
        report.results.push((idx, result));
        if stop {
            break;
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    fn graphs() -> Vec<Graph> {
        vec![
            family(Family::Cycle, &[5]).unwrap(),
            family(Family::Star, &[3]).unwrap(),
            family(Family::Complete, &[2]).unwrap(),
        ]
    }

    #[test]
    fn all_pairs_by_default() {
        let mut rng = CampaignRng::new(1);
        assert_eq!(pair_indices(3, None, &mut rng).len(), 6);
        assert_eq!(pair_indices(3, Some(10), &mut rng).len(), 10);
        assert!(pair_indices(0, Some(10), &mut rng).is_empty());
    }

    #[test]
    fn every_campaign_passes_on_fixtures() {
        let cfg = CampaignConfig::default();
        for kind in Campaign::ALL {
            let report = run_campaign(kind, &graphs(), &cfg).unwrap();
            assert!(report.summary.success(), "{kind}: {:?}", report.summary);
            assert!(report.summary.checked > 0);
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let cfg = CampaignConfig { seed: 77, pair_samples: Some(8), ..CampaignConfig::default() };
        let a = run_campaign(Campaign::Zhu, &graphs(), &cfg).unwrap();
        let b = run_campaign(Campaign::Zhu, &graphs(), &cfg).unwrap();
        assert_eq!(a.results, b.results);
    }

    #[test]
    fn parse_names() {
        for kind in Campaign::ALL {
            assert_eq!(kind.name().parse::<Campaign>().unwrap(), kind);
        }
        assert!("nope".parse::<Campaign>().is_err());
    }
}
