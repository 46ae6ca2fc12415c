//! Brute-force reference implementations. Nothing here calls into the
//! library's factorization code; words are compared through an explicit
//! rank table.
#![allow(dead_code)]

use rand::Rng;

/// Rank of each byte under the ascending symbol list `order`.
pub fn ranks(order: &[u8]) -> [usize; 256] {
    let mut r = [usize::MAX; 256];
    for (i, &b) in order.iter().enumerate() {
        r[b as usize] = i;
    }
    r
}

pub fn key(w: &[u8], order: &[u8]) -> Vec<usize> {
    let r = ranks(order);
    w.iter().map(|&b| r[b as usize]).collect()
}

/// Lyndon iff strictly below every nontrivial rotation.
pub fn is_lyndon(w: &[u8], order: &[u8]) -> bool {
    let k = key(w, order);
    let n = k.len();
    n > 0
        && (1..n).all(|r| {
            let rot: Vec<usize> = k[r..].iter().chain(&k[..r]).copied().collect();
            k < rot
        })
}

pub fn is_co_lyndon(w: &[u8], order: &[u8]) -> bool {
    let rev: Vec<u8> = w.iter().rev().copied().collect();
    is_lyndon(&rev, order)
}

/// Repeatedly strip the longest Lyndon prefix.
pub fn factorize(text: &[u8], order: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < text.len() {
        let len = longest_lyndon_prefix(&text[i..], order);
        out.push(text[i..i + len].to_vec());
        i += len;
    }
    out
}

pub fn longest_lyndon_prefix(s: &[u8], order: &[u8]) -> usize {
    (1..=s.len())
        .rev()
        .find(|&l| is_lyndon(&s[..l], order))
        .expect("single letters are Lyndon")
}

pub fn lyndon_array(text: &[u8], order: &[u8]) -> Vec<usize> {
    (0..text.len())
        .map(|i| longest_lyndon_prefix(&text[i..], order))
        .collect()
}

pub fn factorization_array(text: &[u8], order: &[u8]) -> Vec<usize> {
    (0..text.len())
        .map(|i| factorize(&text[i..], order).len())
        .collect()
}

/// Least rotation by enumerating all rotations.
pub fn least_rotation(w: &[u8], order: &[u8]) -> usize {
    let k = key(w, order);
    let n = k.len();
    (0..n)
        .min_by_key(|&r| k[r..].iter().chain(&k[..r]).copied().collect::<Vec<_>>())
        .unwrap()
}

pub fn is_primitive(w: &[u8]) -> bool {
    let n = w.len();
    (1..n)
        .filter(|&p| n.is_multiple_of(p))
        .all(|p| w.chunks(p).any(|c| c != &w[..p]))
}

/// Every word of length exactly `len` over `letters`.
pub fn words_of_len(letters: &[u8], len: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut x = w.clone();
                    x.push(l);
                    x
                })
            })
            .collect();
    }
    out
}

pub fn words_up_to(letters: &[u8], max_len: usize) -> Vec<Vec<u8>> {
    (1..=max_len)
        .flat_map(|l| words_of_len(letters, l))
        .collect()
}

/// All orderings of `letters` as ascending symbol lists.
pub fn permutations(letters: &[u8]) -> Vec<Vec<u8>> {
    if letters.len() <= 1 {
        return vec![letters.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..letters.len() {
        let mut rest = letters.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

pub fn random_text(rng: &mut impl Rng, letters: &[u8], len: usize) -> Vec<u8> {
    (0..len)
        .map(|_| letters[rng.gen_range(0..letters.len())])
        .collect()
}

pub fn shuffled(rng: &mut impl Rng, letters: &[u8]) -> Vec<u8> {
    use rand::seq::SliceRandom;
    let mut v = letters.to_vec();
    v.shuffle(rng);
    v
}

/// Distinct letters in byte order.
pub fn letters_of(text: &[u8]) -> Vec<u8> {
    let mut v = text.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}
