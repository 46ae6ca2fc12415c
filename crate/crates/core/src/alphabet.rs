//! Texts over byte symbols and total orders on their alphabets.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use crate::error::{show_byte, Error, Result};

/// A ranking of symbols of type `S` into a totally ordered key space.
///
/// Comparing the keys of two symbol sequences with the natural slice
/// ordering is lexorder under this ranking: a proper prefix sorts first,
/// otherwise the first differing symbol decides.
pub trait SymbolOrder<S> {
    type Key: Ord + Copy;

    /// The key of `symbol`, or `None` when the ordering does not cover it.
    fn key(&self, symbol: &S) -> Option<Self::Key>;

    /// Printable form of a symbol for diagnostics.
    fn describe(&self, symbol: &S) -> String;

    /// Map a whole word to keys, failing on the first unranked symbol.
    fn keys(&self, word: &[S]) -> Result<Vec<Self::Key>> {
        word.iter()
            .enumerate()
            .map(|(position, s)| {
                self.key(s).ok_or_else(|| Error::UnrankedSymbol {
                    symbol: self.describe(s),
                    position,
                })
            })
            .collect()
    }

    /// Lexorder comparison of two words.
    fn compare(&self, u: &[S], v: &[S]) -> Result<Ordering> {
        Ok(self.keys(u)?.cmp(&self.keys(v)?))
    }
}

/// An immutable byte string.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Text(Box<[u8]>);

impl Text {
    pub fn new(symbols: impl Into<Vec<u8>>) -> Self {
        Text(symbols.into().into_boxed_slice())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Distinct symbols in order of first occurrence.
    pub fn distinct_symbols(&self) -> Vec<u8> {
        first_occurrence_order(&self.0)
    }

    /// Number of distinct symbols.
    pub fn delta(&self) -> usize {
        let mut seen = [false; 256];
        self.0.iter().for_each(|&b| seen[b as usize] = true);
        seen.iter().filter(|&&s| s).count()
    }

    pub fn reversed(&self) -> Text {
        Text(self.0.iter().rev().copied().collect())
    }
}

impl Deref for Text {
    type Target = [u8];

    fn deref(&self) -> &[u8] {
        &self.0
    }
}

impl From<&str> for Text {
    fn from(s: &str) -> Self {
        Text::new(s.as_bytes())
    }
}

impl From<&[u8]> for Text {
    fn from(s: &[u8]) -> Self {
        Text::new(s)
    }
}

impl From<Vec<u8>> for Text {
    fn from(s: Vec<u8>) -> Self {
        Text::new(s)
    }
}

/// Distinct bytes of `s` in order of first occurrence.
pub fn first_occurrence_order(s: &[u8]) -> Vec<u8> {
    let mut seen = [false; 256];
    let mut out = Vec::new();
    for &b in s {
        if !seen[b as usize] {
            seen[b as usize] = true;
            out.push(b);
        }
    }
    out
}

/// A bijective ranking of a set of byte symbols onto `0..sigma`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedAlphabet {
    ascending: Vec<u8>,
    rank: [Option<u8>; 256],
}

impl OrderedAlphabet {
    /// Build an ordering from symbols listed in ascending rank order, so
    /// `b"bcad"` means b < c < a < d.
    pub fn from_ascending(symbols: &[u8]) -> Result<Self> {
        let mut rank = [None; 256];
        for (r, &s) in symbols.iter().enumerate() {
            if rank[s as usize].is_some() {
                return Err(Error::InvalidArgument(format!(
                    "symbol {} listed twice in ordering",
                    show_byte(s)
                )));
            }
            rank[s as usize] = Some(r as u8);
        }
        Ok(OrderedAlphabet {
            ascending: symbols.to_vec(),
            rank,
        })
    }

    /// Byte-value order over the distinct symbols of `text`.
    pub fn natural(text: &[u8]) -> Self {
        let mut symbols = first_occurrence_order(text);
        symbols.sort_unstable();
        Self::from_ascending(&symbols).expect("distinct by construction")
    }

    /// Symbols in ascending rank order.
    pub fn ascending(&self) -> &[u8] {
        &self.ascending
    }

    pub fn sigma(&self) -> usize {
        self.ascending.len()
    }

    pub fn rank(&self, symbol: u8) -> Option<u8> {
        self.rank[symbol as usize]
    }

    pub fn covers(&self, text: &[u8]) -> bool {
        text.iter().all(|&b| self.rank[b as usize].is_some())
    }

    /// The same symbols with every comparison reversed.
    pub fn reversed(&self) -> Self {
        let rev: Vec<u8> = self.ascending.iter().rev().copied().collect();
        Self::from_ascending(&rev).expect("distinct by construction")
    }

    /// Rank-map `text`, one key byte per symbol.
    pub fn rank_text(&self, text: &[u8]) -> Result<Vec<u8>> {
        self.keys(text)
    }
}

impl SymbolOrder<u8> for OrderedAlphabet {
    type Key = u8;

    #[inline]
    fn key(&self, symbol: &u8) -> Option<u8> {
        self.rank[*symbol as usize]
    }

    fn describe(&self, symbol: &u8) -> String {
        show_byte(*symbol)
    }
}

impl fmt::Debug for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OrderedAlphabet({self})")
    }
}

/// Letters in ascending rank order, joined by `<`.
impl fmt::Display for OrderedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &s) in self.ascending.iter().enumerate() {
            if i > 0 {
                f.write_str("<")?;
            }
            write!(f, "{}", s as char)?;
        }
        Ok(())
    }
}

/// Serde helpers that carry byte strings as one `char` per byte.
pub mod latin1 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn encode(bytes: &[u8]) -> String {
        bytes.iter().map(|&b| b as char).collect()
    }

    pub fn decode(s: &str) -> Option<Vec<u8>> {
        s.chars().map(|c| u8::try_from(u32::from(c)).ok()).collect()
    }

    pub fn serialize<S: Serializer>(bytes: &[u8], s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode(bytes))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<u8>, D::Error> {
        let s = String::deserialize(d)?;
        decode(&s).ok_or_else(|| serde::de::Error::custom("character outside the byte range"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_symbol_rejected() {
        assert!(matches!(
            OrderedAlphabet::from_ascending(b"aba"),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn lexorder_prefix_is_smaller() {
        let ab = OrderedAlphabet::from_ascending(b"ab").unwrap();
        assert_eq!(ab.compare(b"ab", b"abb").unwrap(), Ordering::Less);
        assert_eq!(ab.compare(b"b", b"abb").unwrap(), Ordering::Greater);
        let ba = ab.reversed();
        assert_eq!(ba.compare(b"b", b"abb").unwrap(), Ordering::Less);
    }

    #[test]
    fn unranked_symbol_reports_position() {
        let ab = OrderedAlphabet::from_ascending(b"ab").unwrap();
        let err = ab.rank_text(b"abca").unwrap_err();
        assert_eq!(
            err,
            Error::UnrankedSymbol {
                symbol: "'c'".into(),
                position: 2
            }
        );
    }

    #[test]
    fn text_delta_and_first_occurrence() {
        let t = Text::from("bbbffbbcf");
        assert_eq!(t.delta(), 3);
        assert_eq!(t.distinct_symbols(), b"bfc");
        assert_eq!(OrderedAlphabet::natural(&t).to_string(), "b<c<f");
    }

    #[test]
    fn latin1_round_trip() {
        let bytes: Vec<u8> = (0..=255).collect();
        assert_eq!(latin1::decode(&latin1::encode(&bytes)).unwrap(), bytes);
    }
}
