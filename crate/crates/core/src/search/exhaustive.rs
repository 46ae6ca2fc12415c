use itertools::Itertools;
use rayon::prelude::*;

use crate::alphabet::first_occurrence_order;
use crate::error::{Error, Result};
use crate::factor::duval_count_by_table;
use crate::search::greedy::{greedy_order, Objective};
use crate::search::report::{GreedyRank, RankEntry, RankingReport};

/// Largest distinct-letter count swept by default (8! = 40320 orderings).
pub const DEFAULT_SIGMA_LIMIT: usize = 8;

/// Factor count under every ordering of the distinct letters of `text`.
///
/// Permutations are returned as letters in ascending rank order, in the
/// lexicographic order of permutations of the byte-sorted letters. Evaluation
/// runs in parallel; the result does not depend on scheduling.
pub fn exhaustive_counts(text: &[u8], sigma_limit: usize) -> Result<Vec<(Vec<u8>, usize)>> {
    let mut letters = first_occurrence_order(text);
    if letters.len() > sigma_limit {
        return Err(Error::FactorialBlowUp {
            distinct: letters.len(),
            limit: sigma_limit,
        });
    }
    letters.sort_unstable();
    let k = letters.len();
    let permutations: Vec<Vec<u8>> = letters.into_iter().permutations(k).collect();
    Ok(permutations
        .into_par_iter()
        .map(|perm| {
            let mut table = [0u8; 256];
            for (rank, &letter) in perm.iter().enumerate() {
                table[letter as usize] = rank as u8;
            }
            let count = duval_count_by_table(text, &table);
            (perm, count)
        })
        .collect())
}

/// Rank every ordering of the letters of `text` by factor count, best first
/// for `objective`, and place the greedy ordering (with backtracking) among
/// them.
pub fn exhaustive_search(
    text: &[u8],
    objective: Objective,
    sigma_limit: usize,
) -> Result<RankingReport> {
    let counts = exhaustive_counts(text, sigma_limit)?;
    let entries = counts
        .into_iter()
        .map(|(permutation, factor_count)| RankEntry {
            permutation,
            factor_count,
            rank: 0,
        })
        .collect();
    let mut report = RankingReport::new(objective, text.len(), entries);
    if !text.is_empty() {
        let greedy = greedy_order(text, objective, true)?;
        report.greedy = Some(GreedyRank::place(&report, &greedy));
    }
    Ok(report)
}
