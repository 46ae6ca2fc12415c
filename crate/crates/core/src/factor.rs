//! Lyndon and co-Lyndon membership, factorization, and the per-position
//! Lyndon arrays.
//!
//! Every routine takes its ordering as a [`SymbolOrder`], maps the input to
//! keys once, and then works on the natural ordering of those keys.

use std::ops::Range;

use crate::alphabet::{OrderedAlphabet, SymbolOrder};
use crate::error::{Error, Result};

/// A factorization of a text into contiguous nonempty factors.
///
/// Stored as the strictly increasing exclusive end offsets of the factors;
/// the last end equals the text length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Factorization {
    ends: Vec<usize>,
}

impl Factorization {
    /// Build from exclusive end offsets. Offsets must be strictly increasing
    /// and nonzero.
    pub fn from_ends(ends: Vec<usize>) -> Result<Self> {
        let mut prev = 0;
        for &e in &ends {
            if e <= prev {
                return Err(Error::InvalidArgument(
                    "factor ends must be strictly increasing and nonzero".into(),
                ));
            }
            prev = e;
        }
        Ok(Factorization { ends })
    }

    /// Build from factor lengths.
    pub fn from_lengths(lengths: &[usize]) -> Result<Self> {
        let ends = lengths
            .iter()
            .scan(0usize, |acc, &l| {
                *acc += l;
                Some(*acc)
            })
            .collect();
        Self::from_ends(ends)
    }

    pub fn count(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    /// Length of the factorized text.
    pub fn text_len(&self) -> usize {
        self.ends.last().copied().unwrap_or(0)
    }

    pub fn ends(&self) -> &[usize] {
        &self.ends
    }

    pub fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(0)
            .chain(self.ends.iter().copied())
            .take(self.ends.len())
    }

    pub fn ranges(&self) -> impl Iterator<Item = Range<usize>> + '_ {
        self.starts()
            .zip(self.ends.iter().copied())
            .map(|(s, e)| s..e)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.ranges().map(|r| r.len()).collect()
    }

    /// Slice `text` into its factors. `text` must be the factorized text.
    pub fn factors<'a, S>(&self, text: &'a [S]) -> Vec<&'a [S]> {
        assert_eq!(text.len(), self.text_len(), "factorization of another text");
        self.ranges().map(|r| &text[r]).collect()
    }
}

/// Exclusive factor ends of the Lyndon factorization of `s` (Duval).
pub(crate) fn duval_ends<K: Ord>(s: &[K]) -> Vec<usize> {
    let mut ends = Vec::new();
    duval_visit(s.len(), |p| &s[p], |e| ends.push(e));
    ends
}

/// Number of Lyndon factors of `s`, without materializing them.
pub fn duval_count<K: Ord>(s: &[K]) -> usize {
    let mut count = 0;
    duval_visit(s.len(), |p| &s[p], |_| count += 1);
    count
}

/// Number of Lyndon factors of a byte text whose symbol `b` has key
/// `table[b]`.
pub fn duval_count_by_table(text: &[u8], table: &[u8; 256]) -> usize {
    let mut count = 0;
    duval_visit(text.len(), |p| table[text[p] as usize], |_| count += 1);
    count
}

/// Duval's algorithm over positions `0..n`, reading keys through `at` and
/// reporting each factor's exclusive end to `emit`.
#[inline]
fn duval_visit<K: Ord>(n: usize, at: impl Fn(usize) -> K, mut emit: impl FnMut(usize)) {
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n {
            let (a, b) = (at(k), at(j));
            if a < b {
                k = i;
            } else if a == b {
                k += 1;
            } else {
                break;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            i += period;
            emit(i);
        }
    }
}

/// Whether a nonempty key sequence is a Lyndon word.
pub(crate) fn keys_are_lyndon<K: Ord>(s: &[K]) -> bool {
    let n = s.len();
    let (mut j, mut k) = (1, 0);
    while j < n && s[k] <= s[j] {
        if s[k] < s[j] {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    j == n && k == 0
}

fn nonempty<S>(word: &[S]) -> Result<()> {
    if word.is_empty() {
        Err(Error::InvalidArgument("empty word".into()))
    } else {
        Ok(())
    }
}

/// True iff `word` is strictly smaller than each of its proper suffixes
/// under `order` (equivalently: primitive and least among its rotations).
pub fn is_lyndon<S, O: SymbolOrder<S>>(word: &[S], order: &O) -> Result<bool> {
    nonempty(word)?;
    Ok(keys_are_lyndon(&order.keys(word)?))
}

/// True iff the reversal of `word` is Lyndon under `order`.
pub fn is_co_lyndon<S, O: SymbolOrder<S>>(word: &[S], order: &O) -> Result<bool> {
    nonempty(word)?;
    let mut keys = order.keys(word)?;
    keys.reverse();
    Ok(keys_are_lyndon(&keys))
}

/// The Lyndon factorization of `text` under `order`, in linear time.
///
/// An empty text yields an empty factorization.
pub fn duval_factorize<S, O: SymbolOrder<S>>(text: &[S], order: &O) -> Result<Factorization> {
    let keys = order.keys(text)?;
    Ok(Factorization {
        ends: duval_ends(&keys),
    })
}

/// The co-Lyndon factorization of `text` under `order`: the Lyndon
/// factorization of the reversed text, mirrored back.
pub fn co_lyndon_factorize<S, O: SymbolOrder<S>>(text: &[S], order: &O) -> Result<Factorization> {
    let mut keys = order.keys(text)?;
    keys.reverse();
    let n = keys.len();
    let rev_ends = duval_ends(&keys);
    let Some((_, inner)) = rev_ends.split_last() else {
        return Ok(Factorization::default());
    };
    let mut ends: Vec<usize> = std::iter::once(0)
        .chain(inner.iter().copied())
        .map(|c| n - c)
        .collect();
    ends.reverse();
    Ok(Factorization { ends })
}

/// Lyndon array: entry `i` is the length of the longest Lyndon prefix of the
/// suffix starting at `i` (0-indexed).
///
/// Computed as the distance to the next lexicographically smaller suffix,
/// using a suffix array of the rank-mapped text.
pub fn lyndon_array(text: &[u8], order: &OrderedAlphabet) -> Result<Vec<usize>> {
    let ranks = order.rank_text(text)?;
    let n = ranks.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n > i32::MAX as usize {
        return Err(Error::InvalidArgument(format!(
            "text of length {n} is too long for suffix sorting"
        )));
    }
    let mut sa = vec![0i32; n];
    divsufsort::sort_in_place(&ranks, &mut sa);
    let mut isa = vec![0u32; n];
    for (r, &p) in sa.iter().enumerate() {
        isa[p as usize] = r as u32;
    }
    drop(sa);

    let mut lambda = vec![0; n];
    let mut stack: Vec<usize> = Vec::new();
    for i in (0..n).rev() {
        while stack.last().is_some_and(|&j| isa[j] > isa[i]) {
            stack.pop();
        }
        lambda[i] = stack.last().copied().unwrap_or(n) - i;
        stack.push(i);
    }
    Ok(lambda)
}

/// Lyndon factorization array: entry `i` is the number of factors in the
/// Lyndon factorization of the suffix starting at `i` (0-indexed).
///
/// Built right to left: prepending a symbol to a factorization pushes it as
/// a unit factor, then merges it with its right neighbour while it is
/// strictly smaller in lexorder.
pub fn lyndon_factorization_array(text: &[u8], order: &OrderedAlphabet) -> Result<Vec<usize>> {
    let keys = order.rank_text(text)?;
    let n = keys.len();
    let mut counts = vec![0; n];
    // (start, len), leftmost factor on top
    let mut stack: Vec<(usize, usize)> = Vec::new();
    for i in (0..n).rev() {
        let mut len = 1;
        while let Some(&(next, next_len)) = stack.last() {
            debug_assert_eq!(next, i + len);
            if keys[i..i + len] < keys[next..next + next_len] {
                stack.pop();
                len += next_len;
            } else {
                break;
            }
        }
        stack.push((i, len));
        counts[i] = stack.len();
    }
    Ok(counts)
}

/// True iff `word` is not a proper power `u^k`, `k > 1`.
pub fn is_primitive<T: Eq>(word: &[T]) -> Result<bool> {
    nonempty(word)?;
    let n = word.len();
    // prefix function
    let mut border = vec![0usize; n];
    for i in 1..n {
        let mut b = border[i - 1];
        while b > 0 && word[i] != word[b] {
            b = border[b - 1];
        }
        if word[i] == word[b] {
            b += 1;
        }
        border[i] = b;
    }
    let period = n - border[n - 1];
    Ok(period == n || !n.is_multiple_of(period))
}

/// Start of the least rotation of a primitive `word`, in linear time.
pub fn least_rotation_start<S: Eq, O: SymbolOrder<S>>(word: &[S], order: &O) -> Result<usize> {
    if !is_primitive(word)? {
        return Err(Error::NotPrimitive);
    }
    let keys = order.keys(word)?;
    let n = keys.len();
    let at = |p: usize| keys[p % n];
    // Duval over the doubled word; the factor starting before n that reaches
    // past n begins at the least rotation.
    let (mut i, mut start) = (0, 0);
    while i < n {
        start = i;
        let (mut j, mut k) = (i + 1, i);
        while j < 2 * n && at(k) <= at(j) {
            if at(k) < at(j) {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            i += j - k;
        }
    }
    Ok(start)
}

/// Quadratic reference for [`least_rotation_start`]: compares every
/// rotation against the best seen so far.
pub fn least_rotation_start_quadratic<S: Eq, O: SymbolOrder<S>>(
    word: &[S],
    order: &O,
) -> Result<usize> {
    if !is_primitive(word)? {
        return Err(Error::NotPrimitive);
    }
    let keys = order.keys(word)?;
    let n = keys.len();
    let rotation = |r: usize| keys[r..].iter().chain(&keys[..r]);
    let mut best = 0;
    for r in 1..n {
        if rotation(r).lt(rotation(best)) {
            best = r;
        }
    }
    Ok(best)
}
