//! Alphabet-ordering search: exhaustive permutation sweeps and the greedy
//! EP-vector procedure.

mod exhaustive;
pub mod graph;
pub mod greedy;
mod report;

pub use exhaustive::{exhaustive_counts, exhaustive_search, DEFAULT_SIGMA_LIMIT};
pub use graph::ConstraintGraph;
pub use greedy::{
    greedy_order, greedy_order_maximize, Attempt, Diagnostics, Failure, GreedyOutcome, Objective,
};
pub use report::{GreedyRank, RankEntry, RankingReport};
