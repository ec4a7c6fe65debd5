//! Verification campaigns over corpora and seeded random samples, plus
//! the per-graph CSV report.

mod campaign;
mod checks;
mod report;
pub mod rng;

pub use campaign::{pair_indices, run_campaign, Campaign, CampaignReport};
pub use checks::{
    check_fpm_criterion, check_question1, check_theorem_strong, check_theorem_weak, check_union_rule,
    check_zhu, convergence_table, ConvergenceTable,
};
pub use report::{
    compute_report, scan_corpus, scan_graphs, BipartiteClass, InvariantReport, ScanReport, CSV_COLUMNS,
};
pub use rng::CampaignRng;

use std::fmt;

use crate::graph::VertexCap;
use crate::graph::{Graph, VertexSet};
use crate::graph6::encode_graph6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignConfig {
    /// Determines every random choice of a campaign.
    pub seed: u64,
    /// Largest factor drawn when a campaign generates its own graphs.
    pub max_vertices: usize,
    /// Number of corpus pairs to sample; `None` runs every unordered pair.
    pub pair_samples: Option<usize>,
    /// Default power for convergence tables.
    pub power_depth: usize,
    /// Stop at the first failed check.
    pub fail_fast: bool,
    pub vertex_cap: VertexCap,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            seed: 0,
            max_vertices: 6,
            pair_samples: None,
            power_depth: 2,
            fail_fast: false,
            vertex_cap: VertexCap::default(),
        }
    }
}

/// Everything needed to replay a failed check by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    /// graph6 of each input graph, in argument order.
    pub graphs: Vec<String>,
    /// The violating vertex set (in the product's encoding where relevant).
    pub set: Vec<usize>,
    pub message: String,
}

impl Counterexample {
    pub fn new(graphs: &[&Graph], set: &VertexSet, message: impl Into<String>) -> Self {
        Counterexample {
            graphs: graphs.iter().map(|g| encode_graph6(g)).collect(),
            set: set.to_vec(),
            message: message.into(),
        }
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [graphs: {}] [set: ", self.message, self.graphs.join(" "))?;
        write_vertices(f, &self.set)?;
        write!(f, "]")
    }
}

pub(crate) fn write_vertices(f: &mut impl fmt::Write, vs: &[usize]) -> fmt::Result {
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            f.write_char(' ')?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Passed,
    Failed(Box<Counterexample>),
    Skipped,
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Passed => "pass",
            Outcome::Failed(_) => "fail",
            Outcome::Skipped => "skip",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub check: &'static str,
    pub outcome: Outcome,
    pub detail: String,
}

impl CheckResult {
    pub(crate) fn new(check: &'static str, outcome: Outcome, detail: impl Into<String>) -> Self {
        CheckResult { check, outcome, detail: detail.into() }
    }

    pub(crate) fn from_bool(
        check: &'static str,
        passed: bool,
        detail: String,
        witness: impl FnOnce() -> Counterexample,
    ) -> Self {
        let outcome = if passed { Outcome::Passed } else { Outcome::Failed(Box::new(witness())) };
        CheckResult { check, outcome, detail }
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Passed
    }

    pub fn failed(&self) -> bool {
        matches!(self.outcome, Outcome::Failed(_))
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.outcome.tag(), self.check)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        if let Outcome::Failed(cx) = &self.outcome {
            write!(f, "\n  counterexample: {cx}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub checked: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn add(&mut self, outcome: &Outcome) {
        self.checked += 1;
        match outcome {
            Outcome::Passed => self.passed += 1,
            Outcome::Failed(_) => self.failed += 1,
            Outcome::Skipped => self.skipped += 1,
        }
    }

    pub fn success(&self) -> bool {
        self.failed == 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.success() {
            0
        } else {
            1
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "checked {} / passed {} / failed {} / skipped {}",
            self.checked, self.passed, self.failed, self.skipped
        )
    }
}
