//! Greedy alphabet ordering driven by the Exponent Parikh vector.
//!
//! The least letter α is chosen as the leftmost letter whose exponent string
//! has the fewest Lyndon factors over the inverted integer alphabet. Ranks
//! for the other letters are then read off the α-free gaps between α-runs of
//! each exponent factor: letters met for the first time take the next rank,
//! and where two gaps following equal exponents first differ, the letter in
//! the earlier gap must rank lower. A candidate fails when these constraints
//! cycle or when a later block would sort before the first.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::alphabet::{first_occurrence_order, OrderedAlphabet};
use crate::ep::{compute_ep, factorize_exponents, Block, EpVector};
use crate::error::{Error, Result};
use crate::factor::{duval_factorize, Factorization};
use crate::search::graph::ConstraintGraph;

/// Whether the search wants few or many factors.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    #[default]
    Minimize,
    Maximize,
}

/// Why a candidate least letter was abandoned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Failure {
    /// A later block of the first exponent factor sorts before the factor
    /// itself; the offset is where the comparison decided.
    NotLyndon { at: usize },
    /// Requiring `lower < higher` would close a cycle.
    Inconsistent { lower: u8, higher: u8 },
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Failure::NotLyndon { at } => {
                write!(
                    f,
                    "a later block sorts before the first factor at offset {at}"
                )
            }
            Failure::Inconsistent { lower, higher } => write!(
                f,
                "requiring {} < {} closes a cycle",
                crate::error::show_byte(lower),
                crate::error::show_byte(higher)
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Attempt {
    pub letter: u8,
    pub exponent_factors: usize,
    pub failure: Option<Failure>,
}

/// What the greedy run did, for reports and tests.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Diagnostics {
    /// `(letter, factor count of its exponent string)` in first-occurrence order.
    pub exponent_factor_counts: Vec<(u8, usize)>,
    pub attempts: Vec<Attempt>,
    /// The least letter whose assignment was used, if any candidate was.
    pub chosen: Option<u8>,
    /// Every candidate failed and letters were ranked by exponent factor count.
    pub fallback: bool,
    /// Precedence edges of the constraint graph behind the returned order.
    pub constraints: Vec<(u8, u8)>,
    pub factor_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyOutcome {
    pub order: OrderedAlphabet,
    pub factorization: Factorization,
    pub diagnostics: Diagnostics,
}

/// Choose an ordering with the greedy procedure for `objective`.
pub fn greedy_order(text: &[u8], objective: Objective, backtrack: bool) -> Result<GreedyOutcome> {
    match objective {
        Objective::Minimize => greedy_minimize(text, backtrack),
        Objective::Maximize => greedy_maximize_with(text, backtrack),
    }
}

/// The maximizing variant with backtracking enabled in its inner run.
pub fn greedy_order_maximize(text: &[u8]) -> Result<GreedyOutcome> {
    greedy_maximize_with(text, true)
}

fn greedy_minimize(text: &[u8], backtrack: bool) -> Result<GreedyOutcome> {
    if text.is_empty() {
        return Err(Error::InvalidArgument(
            "greedy ordering of an empty text".into(),
        ));
    }
    let ep = compute_ep(text);
    let first_occurrence = ep.letters().to_vec();
    let factorizations = (0..first_occurrence.len())
        .map(|r| factorize_exponents(&ep.exponents(r)))
        .collect::<Result<Vec<_>>>()?;

    let mut diagnostics = Diagnostics {
        exponent_factor_counts: first_occurrence
            .iter()
            .zip(&factorizations)
            .map(|(&l, f)| (l, f.count()))
            .collect(),
        ..Diagnostics::default()
    };

    // fewest exponent factors first, leftmost first among equals
    let mut candidates: Vec<usize> = (0..first_occurrence.len()).collect();
    candidates.sort_by_key(|&r| factorizations[r].count());

    let mut decided: Option<ConstraintGraph> = None;
    for &r in &candidates {
        let mut state = Assignment::new(text, &ep, r);
        let result = state.run(&factorizations[r]);
        diagnostics.attempts.push(Attempt {
            letter: first_occurrence[r],
            exponent_factors: factorizations[r].count(),
            failure: result.err(),
        });
        if result.is_ok() || !backtrack {
            state.complete(&first_occurrence);
            diagnostics.chosen = Some(first_occurrence[r]);
            decided = Some(state.graph);
            break;
        }
    }

    let order = match decided {
        Some(graph) => {
            let order = graph.linearize(&first_occurrence)?;
            diagnostics.constraints = graph.edges().collect();
            order
        }
        None => {
            diagnostics.fallback = true;
            let ascending: Vec<u8> = candidates.iter().map(|&r| first_occurrence[r]).collect();
            OrderedAlphabet::from_ascending(&ascending)?
        }
    };
    finish(text, order, diagnostics)
}

fn greedy_maximize_with(text: &[u8], backtrack: bool) -> Result<GreedyOutcome> {
    let min = greedy_minimize(text, backtrack)?;
    // α to the top, letters met in the gaps in decreasing order below it
    let flipped = min.order.reversed();
    let flipped_count = duval_factorize(text, &flipped)?.count();
    if flipped_count >= min.factorization.count() {
        let mut diagnostics = min.diagnostics;
        diagnostics.constraints = diagnostics
            .constraints
            .iter()
            .map(|&(u, v)| (v, u))
            .collect();
        finish(text, flipped, diagnostics)
    } else {
        Ok(min)
    }
}

fn finish(
    text: &[u8],
    order: OrderedAlphabet,
    mut diagnostics: Diagnostics,
) -> Result<GreedyOutcome> {
    let factorization = duval_factorize(text, &order)?;
    diagnostics.factor_count = factorization.count();
    Ok(GreedyOutcome {
        order,
        factorization,
        diagnostics,
    })
}

/// A symbol of a gap as seen by the block comparison: letters of the gap,
/// then the α of the following run, or the end of the text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GapSymbol {
    Letter(u8),
    Alpha,
    End,
}

/// Rank assignment for one candidate least letter.
struct Assignment<'a> {
    text: &'a [u8],
    ep: &'a EpVector,
    index: usize,
    alpha: u8,
    /// Letters holding successive ranks, α first.
    chain: Vec<u8>,
    ranked: [bool; 256],
    graph: ConstraintGraph,
}

impl<'a> Assignment<'a> {
    fn new(text: &'a [u8], ep: &'a EpVector, index: usize) -> Self {
        let alpha = ep.letters()[index];
        let mut graph = ConstraintGraph::new();
        graph.add_letter(alpha);
        let mut ranked = [false; 256];
        ranked[alpha as usize] = true;
        Assignment {
            text,
            ep,
            index,
            alpha,
            chain: vec![alpha],
            ranked,
            graph,
        }
    }

    fn run(&mut self, exponent_factors: &Factorization) -> Result<(), Failure> {
        let runs = self.ep.runs(self.index);
        let first = runs[0].start;
        let n = self.text.len();

        // α is least among every letter that occurs from its first run on
        let mut seen = [false; 256];
        for &b in &self.text[first..] {
            if b != self.alpha && !std::mem::replace(&mut seen[b as usize], true) {
                self.graph
                    .assert_precedes(self.alpha, b)
                    .expect("distinct letters");
            }
        }

        let regions: Vec<Range<usize>> = exponent_factors.ranges().collect();
        for (k, range) in regions.iter().enumerate() {
            let region_end = regions.get(k + 1).map_or(n, |next| runs[next.start].start);
            let blocks = self.ep.blocks(self.index, range.clone(), region_end);
            self.process_factor(&blocks)?;
        }

        if first > 0 {
            self.process_prefix(first);
        }
        Ok(())
    }

    fn process_factor(&mut self, blocks: &[Block]) -> Result<(), Failure> {
        let Some((lead, rest)) = blocks.split_first() else {
            return Ok(());
        };
        if rest.is_empty() {
            return self.assign_gap(lead.gap.clone());
        }
        for block in rest.iter().filter(|b| b.exponent == lead.exponent) {
            self.compare_gaps(lead.gap.clone(), block.gap.clone())?;
        }
        Ok(())
    }

    fn gap_symbol(&self, gap: &Range<usize>, d: usize) -> GapSymbol {
        let p = gap.start + d;
        if p < gap.end {
            GapSymbol::Letter(self.text[p])
        } else if gap.end < self.text.len() {
            GapSymbol::Alpha
        } else {
            GapSymbol::End
        }
    }

    /// Compare the first gap of a factor with the gap after a later run of
    /// the same exponent.
    fn compare_gaps(&mut self, lead: Range<usize>, other: Range<usize>) -> Result<(), Failure> {
        use GapSymbol::*;
        let mut d = 0;
        loop {
            let at = other.start + d;
            match (self.gap_symbol(&lead, d), self.gap_symbol(&other, d)) {
                (Letter(x), Letter(y)) if x == y => {
                    self.assign_next(x)?;
                    d += 1;
                }
                (Alpha, Alpha) => return Ok(()),
                (Alpha, Letter(y)) => return self.assign_next(y),
                (Letter(x), Letter(y)) => return self.require_less(x, y),
                (Letter(_), Alpha) | (_, End) => return Err(Failure::NotLyndon { at }),
                (End, _) => unreachable!("the lead gap is followed by another run"),
            }
        }
    }

    fn assign_gap(&mut self, gap: Range<usize>) -> Result<(), Failure> {
        for p in gap {
            self.assign_next(self.text[p])?;
        }
        Ok(())
    }

    /// Give `letter` the next rank unless it already has one.
    fn assign_next(&mut self, letter: u8) -> Result<(), Failure> {
        if self.ranked[letter as usize] {
            return Ok(());
        }
        let last = *self.chain.last().expect("α heads the chain");
        if !self
            .graph
            .try_precedes(last, letter)
            .expect("distinct letters")
        {
            return Err(Failure::Inconsistent {
                lower: last,
                higher: letter,
            });
        }
        self.ranked[letter as usize] = true;
        self.chain.push(letter);
        Ok(())
    }

    fn require_less(&mut self, lower: u8, higher: u8) -> Result<(), Failure> {
        match (self.ranked[lower as usize], self.ranked[higher as usize]) {
            (false, false) => {
                self.assign_next(lower)?;
                self.assign_next(higher)
            }
            (true, false) => self.assign_next(higher),
            _ => {
                if self
                    .graph
                    .try_precedes(lower, higher)
                    .expect("distinct letters")
                {
                    Ok(())
                } else {
                    Err(Failure::Inconsistent { lower, higher })
                }
            }
        }
    }

    /// Handle the text before α's first run. If none of its letters occur
    /// afterwards they take the lowest ranks; otherwise new letters continue
    /// the rank sequence.
    fn process_prefix(&mut self, first: usize) {
        let (prefix, suffix) = self.text.split_at(first);
        let mut in_suffix = [false; 256];
        suffix.iter().for_each(|&b| in_suffix[b as usize] = true);
        let prefix_letters = first_occurrence_order(prefix);
        if prefix_letters.iter().all(|&b| !in_suffix[b as usize]) {
            for pair in prefix_letters.windows(2) {
                self.graph
                    .assert_precedes(pair[0], pair[1])
                    .expect("distinct letters");
            }
            let last = *prefix_letters.last().expect("nonempty prefix");
            self.graph
                .assert_precedes(last, self.alpha)
                .expect("distinct letters");
            prefix_letters
                .iter()
                .for_each(|&b| self.ranked[b as usize] = true);
        } else {
            for b in prefix_letters {
                // a letter that cannot take the next rank is placed by linearization
                let _ = self.assign_next(b);
            }
        }
    }

    /// Give every remaining letter the next rank where that stays consistent;
    /// the rest are left to the tie-break of linearization.
    fn complete(&mut self, first_occurrence: &[u8]) {
        for &b in first_occurrence {
            self.graph.add_letter(b);
            let _ = self.assign_next(b);
        }
    }
}
