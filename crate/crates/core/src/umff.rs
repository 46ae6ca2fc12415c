//! Executable checks of the Lyndon and co-Lyndon factorization laws.
//!
//! Each check recomputes membership itself. Inputs outside a law's domain
//! give [`Error::Precondition`]; a counterexample to the law itself gives
//! [`Error::PropertyViolation`].

use std::cmp::Ordering;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{latin1, OrderedAlphabet, SymbolOrder};
use crate::error::{Error, Result};
use crate::factor::{co_lyndon_factorize, duval_factorize, is_co_lyndon, is_lyndon, is_primitive};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Lyndon,
    CoLyndon,
}

/// A word family together with the alphabet order it is defined by.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordFamily {
    pub family: Family,
    pub order: OrderedAlphabet,
}

impl WordFamily {
    pub fn lyndon(order: OrderedAlphabet) -> Self {
        WordFamily {
            family: Family::Lyndon,
            order,
        }
    }

    pub fn co_lyndon(order: OrderedAlphabet) -> Self {
        WordFamily {
            family: Family::CoLyndon,
            order,
        }
    }

    pub fn contains(&self, word: &[u8]) -> Result<bool> {
        match self.family {
            Family::Lyndon => is_lyndon(word, &self.order),
            Family::CoLyndon => is_co_lyndon(word, &self.order),
        }
    }

    /// `u ≥ v` in the family's W-order: lexorder for Lyndon words, lexorder
    /// of the reversals with the sense flipped for co-Lyndon words.
    fn w_geq(&self, u: &[u8], v: &[u8]) -> Result<bool> {
        Ok(match self.family {
            Family::Lyndon => self.order.compare(u, v)? != Ordering::Less,
            Family::CoLyndon => reverse_cmp(&self.order, u, v)? != Ordering::Greater,
        })
    }
}

fn reversed(w: &[u8]) -> Vec<u8> {
    w.iter().rev().copied().collect()
}

fn reverse_cmp(order: &OrderedAlphabet, u: &[u8], v: &[u8]) -> Result<Ordering> {
    order.compare(&reversed(u), &reversed(v))
}

fn show(w: &[u8]) -> String {
    latin1::encode(w)
}

/// All members of `family` of length at most `max_len` over `alphabet`,
/// sorted by length and then lexorder.
///
/// Lyndon words come from Duval's generation algorithm; co-Lyndon words are
/// filtered from all words by the membership predicate.
pub fn enumerate_family(
    family: Family,
    max_len: usize,
    alphabet: &OrderedAlphabet,
) -> Result<Vec<Vec<u8>>> {
    if max_len < 1 {
        return Err(Error::InvalidArgument("max_len must be at least 1".into()));
    }
    if alphabet.sigma() == 0 {
        return Err(Error::InvalidArgument("empty alphabet".into()));
    }
    let mut words = match family {
        Family::Lyndon => generate_lyndon(max_len, alphabet),
        Family::CoLyndon => {
            let wf = WordFamily::co_lyndon(alphabet.clone());
            let mut out = Vec::new();
            for w in all_words(max_len, alphabet) {
                if wf.contains(&w)? {
                    out.push(w);
                }
            }
            out
        }
    };
    words.sort_by(|u, v| {
        u.len()
            .cmp(&v.len())
            .then_with(|| alphabet.compare(u, v).expect("words over the alphabet"))
    });
    Ok(words)
}

/// Lyndon words of length ≤ `max_len` in lexorder (Duval 1988).
fn generate_lyndon(max_len: usize, alphabet: &OrderedAlphabet) -> Vec<Vec<u8>> {
    let symbols = alphabet.ascending();
    let top = symbols.len() - 1;
    let mut out = Vec::new();
    let mut w: Vec<usize> = vec![0];
    loop {
        out.push(w.iter().map(|&r| symbols[r]).collect());
        let m = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out
}

/// Every nonempty word of length ≤ `max_len`.
fn all_words(max_len: usize, alphabet: &OrderedAlphabet) -> Vec<Vec<u8>> {
    let symbols = alphabet.ascending();
    let mut out: Vec<Vec<u8>> = Vec::new();
    let mut layer: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                symbols.iter().map(move |&s| {
                    let mut x = w.clone();
                    x.push(s);
                    x
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn require_member(family: &WordFamily, w: &[u8], what: &str) -> Result<()> {
    let member = family
        .contains(w)
        .map_err(|e| Error::Precondition(format!("{what}: {e}")))?;
    if member {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "{what} {:?} is not in the family",
            show(w)
        )))
    }
}

/// For Lyndon `u`, `v`: returns whether `uv` is Lyndon, after confirming it
/// agrees with `u < v` in lexorder.
pub fn check_lyndon_concat(u: &[u8], v: &[u8], order: &OrderedAlphabet) -> Result<bool> {
    let family = WordFamily::lyndon(order.clone());
    require_member(&family, u, "u")?;
    require_member(&family, v, "v")?;
    let uv = [u, v].concat();
    let joined = is_lyndon(&uv, order)?;
    let before = order.compare(u, v)? == Ordering::Less;
    if joined != before {
        return Err(Error::PropertyViolation(format!(
            "uv = {:?} Lyndon: {joined}, u < v: {before}",
            show(&uv)
        )));
    }
    Ok(joined)
}

/// For co-Lyndon `u`, `v`: returns whether `uv` is co-Lyndon, after
/// confirming it agrees with `v` preceding `u` in co-lexorder.
pub fn check_co_lyndon_concat(u: &[u8], v: &[u8], order: &OrderedAlphabet) -> Result<bool> {
    let family = WordFamily::co_lyndon(order.clone());
    require_member(&family, u, "u")?;
    require_member(&family, v, "v")?;
    let uv = [u, v].concat();
    let joined = is_co_lyndon(&uv, order)?;
    let before = reverse_cmp(order, v, u)? == Ordering::Less;
    if joined != before {
        return Err(Error::PropertyViolation(format!(
            "uv = {:?} co-Lyndon: {joined}, v before u in co-lexorder: {before}",
            show(&uv)
        )));
    }
    Ok(joined)
}

/// Whether Lyndon and co-Lyndon words of length ≤ `max_len` share exactly
/// the single letters.
pub fn check_intersection(alphabet: &OrderedAlphabet, max_len: usize) -> bool {
    let (Ok(lyndon), Ok(co)) = (
        enumerate_family(Family::Lyndon, max_len.max(1), alphabet),
        enumerate_family(Family::CoLyndon, max_len.max(1), alphabet),
    ) else {
        return false;
    };
    let co: std::collections::HashSet<&[u8]> = co.iter().map(Vec::as_slice).collect();
    let mut common: Vec<&[u8]> = lyndon
        .iter()
        .map(Vec::as_slice)
        .filter(|w| co.contains(w))
        .collect();
    common.sort();
    let mut letters: Vec<&[u8]> = alphabet.ascending().chunks(1).collect();
    letters.sort();
    common == letters
}

/// Whether `factors` is the max factorization of their concatenation in
/// `family`, after confirming that agrees with the list being
/// non-increasing in the family's W-order.
pub fn verify_max_factorization(factors: &[&[u8]], family: &WordFamily) -> Result<bool> {
    for (i, f) in factors.iter().enumerate() {
        require_member(family, f, &format!("factor {i}"))?;
    }
    let text = factors.concat();
    let computed = match family.family {
        Family::Lyndon => duval_factorize(&text, &family.order)?,
        Family::CoLyndon => co_lyndon_factorize(&text, &family.order)?,
    };
    let lengths: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let is_max = computed.lengths() == lengths;
    let mut monotone = true;
    for pair in factors.windows(2) {
        if !family.w_geq(pair[0], pair[1])? {
            monotone = false;
            break;
        }
    }
    if is_max != monotone {
        return Err(Error::PropertyViolation(format!(
            "factor list of {:?}: max factorization {is_max}, non-increasing {monotone}",
            show(&text)
        )));
    }
    Ok(is_max)
}

/// Outcome of one law suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawOutcome {
    pub law: &'static str,
    pub cases: usize,
    pub violations: Vec<String>,
}

impl LawOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn tally(law: &'static str, results: impl IntoIterator<Item = Result<()>>) -> LawOutcome {
    let mut cases = 0;
    let mut violations = Vec::new();
    for r in results {
        cases += 1;
        if let Err(e) = r {
            violations.push(e.to_string());
        }
    }
    LawOutcome {
        law,
        cases,
        violations,
    }
}

fn order_of(s: &str) -> OrderedAlphabet {
    OrderedAlphabet::from_ascending(s.as_bytes()).expect("distinct letters")
}

/// Concatenation law for every pair of family members drawn from the given
/// `(alphabet, max_len)` sweeps.
fn concat_suite(family: Family, sweeps: &[(&str, usize)]) -> Vec<Result<()>> {
    let mut out = Vec::new();
    for &(letters, max_len) in sweeps {
        let order = order_of(letters);
        let words = match enumerate_family(family, max_len, &order) {
            Ok(w) => w,
            Err(e) => {
                out.push(Err(e));
                continue;
            }
        };
        for u in &words {
            for v in &words {
                let r = match family {
                    Family::Lyndon => check_lyndon_concat(u, v, &order),
                    Family::CoLyndon => check_co_lyndon_concat(u, v, &order),
                };
                out.push(r.map(|_| ()));
            }
        }
    }
    out
}

/// Random factor lists: sorted lists must validate and lists with a
/// strictly increasing adjacent pair must not.
pub fn max_factorization_suite(family: Family, lists: usize, seed: u64) -> LawOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let orders = [
        order_of("ab"),
        order_of("abc"),
        order_of("ba"),
        order_of("cab"),
    ];
    let pools: Vec<Vec<Vec<u8>>> = orders
        .iter()
        .map(|o| enumerate_family(family, 6, o).expect("valid sweep"))
        .collect();
    let results = (0..lists).map(|i| {
        let which = rng.gen_range(0..orders.len());
        let wf = WordFamily {
            family,
            order: orders[which].clone(),
        };
        let pool = &pools[which];
        let len = rng.gen_range(1..=8);
        let mut list: Vec<&[u8]> = (0..len)
            .map(|_| pool.choose(&mut rng).expect("nonempty pool").as_slice())
            .collect();
        // non-increasing in W-order
        list.sort_by(|u, v| match family {
            Family::Lyndon => wf.order.compare(v, u).expect("ranked"),
            Family::CoLyndon => reverse_cmp(&wf.order, u, v).expect("ranked"),
        });
        if i % 2 == 0 {
            return match verify_max_factorization(&list, &wf)? {
                true => Ok(()),
                false => Err(Error::PropertyViolation(format!(
                    "sorted list {list:?} rejected"
                ))),
            };
        }
        // plant an increasing adjacent pair
        let (a, b) = loop {
            let a = pool.choose(&mut rng).expect("nonempty pool");
            let b = pool.choose(&mut rng).expect("nonempty pool");
            if !wf.w_geq(a, b)? {
                break (a.as_slice(), b.as_slice());
            }
        };
        let at = rng.gen_range(0..=list.len());
        list.splice(at..at, [a, b]);
        match verify_max_factorization(&list, &wf)? {
            false => Ok(()),
            true => Err(Error::PropertyViolation(format!(
                "list {list:?} with an increasing pair accepted"
            ))),
        }
    });
    let law = match family {
        Family::Lyndon => "max factorization is the non-increasing Lyndon list",
        Family::CoLyndon => "max factorization is the non-increasing co-Lyndon list",
    };
    tally(law, results.collect::<Vec<_>>())
}

/// Exactly one rotation of every primitive word of length ≤ `max_len` is in
/// the family.
fn one_rotation_suite(family: Family, letters: &str, max_len: usize) -> Vec<Result<()>> {
    let order = order_of(letters);
    let wf = WordFamily {
        family,
        order: order.clone(),
    };
    all_words(max_len, &order)
        .into_iter()
        .filter(|w| is_primitive(w).unwrap_or(false))
        .map(|w| {
            let n = w.len();
            let members = (0..n)
                .map(|r| wf.contains(&[&w[r..], &w[..r]].concat()))
                .collect::<Result<Vec<bool>>>()?
                .into_iter()
                .filter(|&m| m)
                .count();
            if members == 1 {
                Ok(())
            } else {
                Err(Error::PropertyViolation(format!(
                    "{:?} has {members} rotations in the family",
                    show(&w)
                )))
            }
        })
        .collect()
}

/// Every law suite exposed by the `verify` command.
pub fn standard_suites(seed: u64) -> Vec<LawOutcome> {
    let intersections = [("ab", 10), ("abc", 6), ("a", 2)].map(|(letters, len)| {
        if check_intersection(&order_of(letters), len) {
            Ok(())
        } else {
            Err(Error::PropertyViolation(format!(
                "Lyndon and co-Lyndon words over {letters} up to length {len} share more than the letters"
            )))
        }
    });
    vec![
        tally(
            "Lyndon concatenation follows lexorder",
            concat_suite(Family::Lyndon, &[("ab", 6), ("abc", 4)]),
        ),
        tally(
            "co-Lyndon concatenation follows reversed co-lexorder",
            concat_suite(Family::CoLyndon, &[("ab", 6), ("abc", 4)]),
        ),
        tally(
            "Lyndon and co-Lyndon words meet only in letters",
            intersections,
        ),
        max_factorization_suite(Family::Lyndon, 10_000, seed),
        max_factorization_suite(Family::CoLyndon, 10_000, seed ^ 0x9e37_79b9),
        tally(
            "one rotation of each primitive word is Lyndon",
            [
                one_rotation_suite(Family::Lyndon, "ab", 10),
                one_rotation_suite(Family::Lyndon, "abc", 6),
            ]
            .concat(),
        ),
        tally(
            "one rotation of each primitive word is co-Lyndon",
            [
                one_rotation_suite(Family::CoLyndon, "ab", 10),
                one_rotation_suite(Family::CoLyndon, "abc", 6),
            ]
            .concat(),
        ),
    ]
}
