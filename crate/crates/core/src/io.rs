//! FASTA ingestion, the ranking experiment, and report emission.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::Text;
use crate::error::{show_byte, Error, Result};
use crate::search::{exhaustive_search, greedy_order, GreedyRank, Objective, RankingReport};

/// What to do with symbols outside [`IngestPolicy::known`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum UnknownSymbols {
    /// Keep them as ordinary letters.
    #[default]
    Keep,
    Strip,
    Error,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestPolicy {
    pub unknown: UnknownSymbols,
    /// Fold sequence letters to upper case.
    pub uppercase: bool,
    /// Symbols considered known after case folding.
    pub known: Vec<u8>,
}

impl Default for IngestPolicy {
    fn default() -> Self {
        IngestPolicy {
            unknown: UnknownSymbols::Keep,
            uppercase: true,
            known: b"ACGT".to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FastaRecord {
    pub header: String,
    pub sequence: Vec<u8>,
}

/// Split `input` into records. Input without any `>` is one headerless
/// record. Whitespace inside sequences is dropped; nothing else is changed.
pub fn fasta_records(input: &[u8]) -> Vec<FastaRecord> {
    let mut records = Vec::new();
    if !input.contains(&b'>') {
        records.push(FastaRecord {
            header: String::new(),
            sequence: input
                .iter()
                .copied()
                .filter(|b| !b.is_ascii_whitespace())
                .collect(),
        });
        return records;
    }
    let mut current: Option<FastaRecord> = None;
    for line in input.split(|&b| b == b'\n') {
        if let Some(header) = line.strip_prefix(b">") {
            records.extend(current.take());
            current = Some(FastaRecord {
                header: String::from_utf8_lossy(header).trim_end().to_string(),
                sequence: Vec::new(),
            });
        } else if let Some(rec) = current.as_mut() {
            rec.sequence
                .extend(line.iter().copied().filter(|b| !b.is_ascii_whitespace()));
        }
        // sequence lines before the first header are ignored
    }
    records.extend(current);
    records
}

/// Read FASTA (or raw sequence) bytes and return the longest record after
/// normalization. Equal lengths keep the earlier record.
pub fn parse_fasta(input: &[u8], policy: &IngestPolicy) -> Result<Text> {
    if input.iter().all(u8::is_ascii_whitespace) {
        return Err(Error::EmptyInput);
    }
    let mut best: Option<Vec<u8>> = None;
    for (index, record) in fasta_records(input).into_iter().enumerate() {
        let sequence = normalize(record.sequence, index + 1, policy)?;
        if !sequence.is_empty() && best.as_ref().is_none_or(|b| sequence.len() > b.len()) {
            best = Some(sequence);
        }
    }
    best.map(Text::new).ok_or(Error::EmptyInput)
}

fn normalize(mut sequence: Vec<u8>, record: usize, policy: &IngestPolicy) -> Result<Vec<u8>> {
    if policy.uppercase {
        sequence.make_ascii_uppercase();
    }
    let mut known = [false; 256];
    policy.known.iter().for_each(|&b| known[b as usize] = true);
    match policy.unknown {
        UnknownSymbols::Keep => {}
        UnknownSymbols::Strip => sequence.retain(|&b| known[b as usize]),
        UnknownSymbols::Error => {
            if let Some(p) = sequence.iter().position(|&b| !known[b as usize]) {
                return Err(Error::RejectedSymbol {
                    symbol: show_byte(sequence[p]),
                    record,
                    position: p + 1,
                });
            }
        }
    }
    Ok(sequence)
}

/// Rank all orderings of `text` by factor count and place the greedy
/// ordering with and without backtracking.
pub fn run_rank_experiment(text: &[u8], sigma_limit: usize) -> Result<RankingReport> {
    let mut report = exhaustive_search(text, Objective::Minimize, sigma_limit)?;
    if !text.is_empty() {
        let plain = greedy_order(text, Objective::Minimize, false)?;
        report.greedy_no_backtrack = Some(GreedyRank::place(&report, &plain));
    }
    Ok(report)
}

/// How often the greedy ordering landed at each rank across reports, with
/// and without backtracking.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RankHistogram {
    pub with_backtracking: BTreeMap<usize, usize>,
    pub without_backtracking: BTreeMap<usize, usize>,
}

pub fn rank_histogram<'a>(reports: impl IntoIterator<Item = &'a RankingReport>) -> RankHistogram {
    let mut h = RankHistogram::default();
    for r in reports {
        if let Some(g) = &r.greedy {
            *h.with_backtracking.entry(g.rank).or_default() += 1;
        }
        if let Some(g) = &r.greedy_no_backtrack {
            *h.without_backtracking.entry(g.rank).or_default() += 1;
        }
    }
    h
}

impl RankHistogram {
    /// `rank,with_backtracking,without_backtracking` rows.
    pub fn to_csv(&self) -> String {
        let ranks: std::collections::BTreeSet<usize> = self
            .with_backtracking
            .keys()
            .chain(self.without_backtracking.keys())
            .copied()
            .collect();
        let mut out = String::from("rank,with_backtracking,without_backtracking\n");
        for r in ranks {
            out.push_str(&format!(
                "{r},{},{}\n",
                self.with_backtracking.get(&r).copied().unwrap_or(0),
                self.without_backtracking.get(&r).copied().unwrap_or(0)
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Human,
}

/// Serialize a report; every format ends with a newline.
pub fn emit_report(report: &RankingReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Json => report.to_json(),
        ReportFormat::Human => report.to_human(),
    }
}

/// Uniform random sequence over `alphabet` from a ChaCha8 stream.
pub fn synthetic_sequence(alphabet: &[u8], len: usize, seed: u64) -> Vec<u8> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..len)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect()
}

/// FASTA text with one record, wrapped at 70 columns.
pub fn to_fasta(header: &str, sequence: &[u8]) -> String {
    let mut out = format!(">{header}\n");
    for line in sequence.chunks(70) {
        out.push_str(&String::from_utf8_lossy(line));
        out.push('\n');
    }
    out
}
