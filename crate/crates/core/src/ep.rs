//! Exponent Parikh vectors: per-letter run-length exponent strings.

use std::cmp::Reverse;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::alphabet::{latin1, SymbolOrder};
use crate::error::{Error, Result};
use crate::factor::{duval_factorize, Factorization};

/// One maximal run of a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

impl Run {
    pub fn end(&self) -> usize {
        self.start + self.len
    }
}

/// The integers ordered `... < 3 < 2 < 1`: larger exponents rank lower.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct InvertedIntegerOrder;

impl SymbolOrder<u64> for InvertedIntegerOrder {
    type Key = Reverse<u64>;

    fn key(&self, symbol: &u64) -> Option<Reverse<u64>> {
        (*symbol >= 1).then_some(Reverse(*symbol))
    }

    fn describe(&self, symbol: &u64) -> String {
        symbol.to_string()
    }
}

/// An α-run together with the α-free gap that follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub exponent: u64,
    pub run: Run,
    pub gap: Range<usize>,
}

/// Exponent Parikh vector of a text.
///
/// Letters appear in order of first occurrence; `runs[r]` lists the maximal
/// runs of `letters[r]` left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EpVector {
    letters: Vec<u8>,
    runs: Vec<Vec<Run>>,
    text_len: usize,
}

/// Compute the EP vector of `text` in one scan. An empty text gives an
/// empty vector.
pub fn compute_ep(text: &[u8]) -> EpVector {
    let mut slot = [usize::MAX; 256];
    let mut letters = Vec::new();
    let mut runs: Vec<Vec<Run>> = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let b = text[i];
        let mut j = i + 1;
        while j < text.len() && text[j] == b {
            j += 1;
        }
        let r = &mut slot[b as usize];
        if *r == usize::MAX {
            *r = letters.len();
            letters.push(b);
            runs.push(Vec::new());
        }
        runs[*r].push(Run {
            start: i,
            len: j - i,
        });
        i = j;
    }
    EpVector {
        letters,
        runs,
        text_len: text.len(),
    }
}

impl EpVector {
    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn runs(&self, index: usize) -> &[Run] {
        &self.runs[index]
    }

    pub fn text_len(&self) -> usize {
        self.text_len
    }

    pub fn index_of(&self, letter: u8) -> Option<usize> {
        self.letters.iter().position(|&l| l == letter)
    }

    /// Exponent string of `letters[index]`.
    pub fn exponents(&self, index: usize) -> Vec<u64> {
        self.runs[index].iter().map(|r| r.len as u64).collect()
    }

    pub fn exponent_lists(&self) -> Vec<Vec<u64>> {
        (0..self.letters.len()).map(|r| self.exponents(r)).collect()
    }

    /// Classic Parikh count of `letters[index]`.
    pub fn parikh(&self, index: usize) -> usize {
        self.runs[index].iter().map(|r| r.len).sum()
    }

    /// Rebuild the text from the recorded runs.
    pub fn expand(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.text_len];
        for (letter, runs) in self.letters.iter().zip(&self.runs) {
            for run in runs {
                out[run.start..run.end()].fill(*letter);
            }
        }
        out
    }

    /// Blocks `α^{j_1} X_1 … α^{j_q} X_q` for the runs `runs` of
    /// `letters[index]`. Each gap extends to the next run in the range; the
    /// last extends to `region_end`.
    pub fn blocks(&self, index: usize, runs: Range<usize>, region_end: usize) -> Vec<Block> {
        let list = &self.runs[index][runs];
        list.iter()
            .enumerate()
            .map(|(h, run)| {
                let gap_end = list.get(h + 1).map_or(region_end, |next| next.start);
                Block {
                    exponent: run.len as u64,
                    run: *run,
                    gap: run.end()..gap_end,
                }
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&EpJson::from(self)).expect("plain data serializes")
    }
}

/// Wire form: `{"letters":[...],"exponents":[[...],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpJson {
    pub letters: Vec<String>,
    pub exponents: Vec<Vec<u64>>,
}

impl From<&EpVector> for EpJson {
    fn from(ep: &EpVector) -> Self {
        EpJson {
            letters: ep.letters.iter().map(|&b| latin1::encode(&[b])).collect(),
            exponents: ep.exponent_lists(),
        }
    }
}

/// Lyndon factorization of an exponent string over the inverted integer
/// alphabet.
pub fn factorize_exponents(exponents: &[u64]) -> Result<Factorization> {
    if let Some(position) = exponents.iter().position(|&e| e < 1) {
        return Err(Error::InvalidArgument(format!(
            "exponent at offset {position} is below 1"
        )));
    }
    duval_factorize(exponents, &InvertedIntegerOrder)
}
