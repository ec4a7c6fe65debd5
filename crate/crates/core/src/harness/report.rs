use std::io::{BufRead, Write};

use rayon::prelude::*;

use super::{write_vertices, CampaignConfig, CheckResult, Counterexample, Outcome, Summary};
use crate::error::{Graph6Error, Result};
use crate::graph::Graph;
use crate::graph6::{encode_graph6, read_corpus, CorpusEntry, ReadMode};
use crate::independence::max_independent_set;
use crate::invariants::a_star_and_ultimate;
use crate::matching::{bipartite_ultimate_ratio, has_fractional_perfect_matching, is_bipartite};
use crate::ratio::Ratio;

/// Column order of the CSV report.
pub const CSV_COLUMNS: [&str; 14] = [
    "graph6",
    "n",
    "m",
    "alpha",
    "i",
    "a",
    "a_star",
    "A",
    "a_witness",
    "fpm",
    "bipartite_class",
    "check_chain",
    "check_fpm",
    "check_bipartite",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BipartiteClass {
    BipartitePerfectMatching,
    BipartiteNoPerfectMatching,
    NonBipartite,
}

impl BipartiteClass {
    pub fn as_str(self) -> &'static str {
        match self {
            BipartiteClass::BipartitePerfectMatching => "bipartite-pm",
            BipartiteClass::BipartiteNoPerfectMatching => "bipartite-no-pm",
            BipartiteClass::NonBipartite => "non-bipartite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub line: usize,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub i: Ratio,
    pub a: Ratio,
    pub a_star: Ratio,
    pub ultimate: Ratio,
    pub a_witness: Vec<usize>,
    pub fpm: bool,
    pub bipartite_class: BipartiteClass,
    /// `chain`, `fpm`, `bipartite`, in that order.
    pub checks: Vec<CheckResult>,
}

/// All invariants of one graph plus the per-row consistency checks:
/// `i <= a <= a* = A`, `fpm <=> a <= 1/2`, and the bipartite rule.
pub fn compute_report(g: &Graph) -> InvariantReport {
    let mis = max_independent_set(g);
    let r = a_star_and_ultimate(g);
    let fpm = has_fractional_perfect_matching(g);
    let bip = is_bipartite(g);
    let bip_ratio =
        bip.as_ref().map(|p| bipartite_ultimate_ratio(g, p).expect("bipartition from is_bipartite is valid"));
    let bipartite_class = match &bip_ratio {
        None => BipartiteClass::NonBipartite,
        Some(x) if *x == Ratio::half() => BipartiteClass::BipartitePerfectMatching,
        Some(_) => BipartiteClass::BipartiteNoPerfectMatching,
    };

    let witness = || Counterexample::new(&[g], &r.witness, "row invariant violated");
    let chain = mis.ratio <= r.a && r.a <= r.a_star && r.a_star == r.ultimate;
    let mut checks = vec![
        CheckResult::from_bool(
            "chain",
            chain,
            format!("{} <= {} <= {} = {}", mis.ratio, r.a, r.a_star, r.ultimate),
            witness,
        ),
        CheckResult::from_bool(
            "fpm",
            fpm == (r.a <= Ratio::half()),
            format!("fpm {fpm}, a = {}", r.a),
            witness,
        ),
    ];
    checks.push(match &bip_ratio {
        None => CheckResult::new("bipartite", Outcome::Skipped, "not bipartite"),
        Some(x) => CheckResult::from_bool(
            "bipartite",
            *x == r.ultimate,
            format!("matching rule {x}, A = {}", r.ultimate),
            witness,
        ),
    });

    InvariantReport {
        line: 0,
        graph6: encode_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        alpha: mis.alpha,
        i: mis.ratio,
        a: r.a,
        a_star: r.a_star,
        ultimate: r.ultimate,
        a_witness: r.witness.to_vec(),
        fpm,
        bipartite_class,
        checks,
    }
}

impl InvariantReport {
    pub fn csv_record(&self) -> Vec<String> {
        let mut witness = String::new();
        write_vertices(&mut witness, &self.a_witness).expect("writing to a String");
        let mut rec = vec![
            self.graph6.clone(),
            self.n.to_string(),
            self.m.to_string(),
            self.alpha.to_string(),
            self.i.to_string(),
            self.a.to_string(),
            self.a_star.to_string(),
            self.ultimate.to_string(),
            witness,
            self.fpm.to_string(),
            self.bipartite_class.as_str().to_string(),
        ];
        rec.extend(self.checks.iter().map(|c| c.outcome.tag().to_string()));
        rec
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanReport {
    pub rows: Vec<InvariantReport>,
    pub summary: Summary,
    /// Lines rejected when the corpus was read in skip mode.
    pub skipped_lines: Vec<(usize, Graph6Error)>,
}

impl ScanReport {
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_COLUMNS)?;
        for row in &self.rows {
            w.write_record(row.csv_record())?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("csv output is UTF-8")
    }

    pub fn failures(&self) -> impl Iterator<Item = (&InvariantReport, &CheckResult)> {
        self.rows.iter().flat_map(|r| r.checks.iter().filter(|c| c.failed()).map(move |c| (r, c)))
    }
}

/// Reports every graph in order. Graphs are processed in parallel; rows
/// keep the corpus order.
pub fn scan_graphs(entries: &[CorpusEntry]) -> ScanReport {
    let rows: Vec<InvariantReport> =
        entries.par_iter().map(|e| InvariantReport { line: e.line, ..compute_report(&e.graph) }).collect();
    let mut summary = Summary::default();
    for row in &rows {
        for c in &row.checks {
            summary.add(&c.outcome);
        }
    }
    ScanReport { rows, summary, skipped_lines: Vec::new() }
}

/// Reads a `.g6` stream and reports every graph. With `fail_fast` a
/// malformed line aborts the scan; otherwise it is recorded and skipped.
pub fn scan_corpus<R: BufRead>(reader: R, config: &CampaignConfig) -> Result<ScanReport> {
    let mode = if config.fail_fast { ReadMode::FailFast } else { ReadMode::Skip };
    let mut corpus = read_corpus(reader, mode);
    let entries: Vec<CorpusEntry> = corpus.by_ref().collect::<Result<_>>()?;
    let mut report = scan_graphs(&entries);
    report.skipped_lines = corpus.skipped().to_vec();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> CampaignConfig {
        CampaignConfig { fail_fast: true, ..CampaignConfig::default() }
    }

    #[test]
    fn single_k2_row() {
        let report = scan_corpus("A_\n".as_bytes(), &config()).unwrap();
        assert_eq!(report.rows.len(), 1);
        let csv = report.to_csv_string();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], CSV_COLUMNS.join(","));
        assert_eq!(lines[1], "A_,2,1,1,1/2,1/2,1/2,1/2,0,true,bipartite-pm,pass,pass,pass");
        assert_eq!(report.summary.failed, 0);
    }

    #[test]
    fn empty_corpus() {
        let report = scan_corpus("".as_bytes(), &config()).unwrap();
        assert!(report.rows.is_empty());
        assert_eq!(report.summary, Summary::default());
        assert_eq!(report.summary.exit_code(), 0);
        assert_eq!(report.to_csv_string().lines().count(), 1);
    }

    #[test]
    fn skip_mode_records_bad_lines() {
        let cfg = CampaignConfig::default();
        let report = scan_corpus("A_\nA#\nBw\n".as_bytes(), &cfg).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.rows[1].line, 3);
        assert_eq!(report.skipped_lines.len(), 1);
        assert!(scan_corpus("A_\nA#\n".as_bytes(), &config()).is_err());
    }

    #[test]
    fn witness_column_space_separated() {
        let report = scan_corpus("Dhc\nCF\n".as_bytes(), &config()).unwrap();
        let rec = report.rows[0].csv_record();
        assert_eq!(rec[8], "0 2");
        assert_eq!(rec[10], "non-bipartite");
        let star = &report.rows[1];
        assert_eq!(star.bipartite_class, BipartiteClass::BipartiteNoPerfectMatching);
        assert_eq!(star.ultimate, Ratio::one());
    }
}
