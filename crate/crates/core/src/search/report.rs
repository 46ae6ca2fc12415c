use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::alphabet::latin1;
use crate::search::greedy::{GreedyOutcome, Objective};

/// One ordering and its factor count. `permutation` lists the letters in
/// ascending rank order, so `bcad` means b < c < a < d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankEntry {
    #[serde(with = "latin1")]
    pub permutation: Vec<u8>,
    pub factor_count: usize,
    /// 1-based position of the first entry with the same count.
    pub rank: usize,
}

/// Where a greedy ordering lands among the exhaustive entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyRank {
    #[serde(with = "latin1")]
    pub permutation: Vec<u8>,
    pub factor_count: usize,
    pub rank: usize,
}

impl GreedyRank {
    pub fn place(report: &RankingReport, outcome: &GreedyOutcome) -> Self {
        let factor_count = outcome.factorization.count();
        GreedyRank {
            permutation: outcome.order.ascending().to_vec(),
            factor_count,
            rank: report.rank_of_count(factor_count),
        }
    }
}

/// Orderings sorted best first for the objective (ascending factor count
/// when minimizing, descending when maximizing), ties broken by the
/// permutation bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankingReport {
    pub objective: Objective,
    pub text_len: usize,
    pub entries: Vec<RankEntry>,
    pub greedy: Option<GreedyRank>,
    pub greedy_no_backtrack: Option<GreedyRank>,
}

impl RankingReport {
    /// Sort `entries` and fill in their ranks.
    pub fn new(objective: Objective, text_len: usize, mut entries: Vec<RankEntry>) -> Self {
        entries.sort_by(|a, b| {
            let by_count = match objective {
                Objective::Minimize => a.factor_count.cmp(&b.factor_count),
                Objective::Maximize => b.factor_count.cmp(&a.factor_count),
            };
            by_count.then_with(|| a.permutation.cmp(&b.permutation))
        });
        let mut rank = 0;
        let mut prev = None;
        for (i, e) in entries.iter_mut().enumerate() {
            if prev != Some(e.factor_count) {
                rank = i + 1;
                prev = Some(e.factor_count);
            }
            e.rank = rank;
        }
        RankingReport {
            objective,
            text_len,
            entries,
            greedy: None,
            greedy_no_backtrack: None,
        }
    }

    fn better(&self, a: usize, b: usize) -> bool {
        match self.objective {
            Objective::Minimize => a < b,
            Objective::Maximize => a > b,
        }
    }

    /// 1 + the number of entries strictly better than `count`.
    pub fn rank_of_count(&self, count: usize) -> usize {
        1 + self
            .entries
            .iter()
            .filter(|e| self.better(e.factor_count, count))
            .count()
    }

    pub fn best(&self) -> Option<&RankEntry> {
        self.entries.first()
    }

    pub fn min_count(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.factor_count).min()
    }

    pub fn max_count(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.factor_count).max()
    }

    /// `permutation,factor_count,rank` with a header row.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["permutation", "factor_count", "rank"])
            .expect("in-memory write");
        for e in &self.entries {
            w.write_record([
                latin1::encode(&e.permutation),
                e.factor_count.to_string(),
                e.rank.to_string(),
            ])
            .expect("in-memory write");
        }
        let bytes = w.into_inner().expect("in-memory flush");
        String::from_utf8(bytes).expect("csv of utf-8 fields")
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let objective = match self.objective {
            Objective::Minimize => "minimize",
            Objective::Maximize => "maximize",
        };
        let _ = writeln!(out, "text length: {}", self.text_len);
        let _ = writeln!(out, "orderings: {} ({objective})", self.entries.len());
        if let Some(best) = self.best() {
            let _ = writeln!(
                out,
                "best ordering: {} ({} factors)",
                latin1::encode(&best.permutation),
                best.factor_count
            );
        }
        for (label, g) in [
            ("greedy", &self.greedy),
            ("greedy without backtracking", &self.greedy_no_backtrack),
        ] {
            if let Some(g) = g {
                let _ = writeln!(
                    out,
                    "{label}: {} ({} factors, rank {})",
                    latin1::encode(&g.permutation),
                    g.factor_count,
                    g.rank
                );
            }
        }
        let _ = writeln!(out, "{:>5}  {:<12} factors", "rank", "permutation");
        for e in &self.entries {
            let _ = writeln!(
                out,
                "{:>5}  {:<12} {}",
                e.rank,
                latin1::encode(&e.permutation),
                e.factor_count
            );
        }
        out
    }
}
