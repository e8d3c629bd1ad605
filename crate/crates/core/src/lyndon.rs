//! Lyndon word enumeration, used as an independent cross-check.
//!
//! Lyndon words of length `n` on `d` letters are equinumerous with the basic
//! commutators of weight `n`, and their per-letter content census matches the
//! multidegree census of the Hall set. The enumeration below (Duval's
//! algorithm) shares no code with the Hall generator or the Witt formula, so
//! the test suite can use it to guard against a systematically wrong
//! generator. Counts only; the bracketings of the two bases differ.

use std::collections::BTreeMap;

/// All Lyndon words of length exactly `n` over the alphabet `0..d`,
/// in lexicographic order.
pub fn words(d: usize, n: usize) -> Vec<Vec<usize>> {
    assert!(n >= 1);
    let mut out = Vec::new();
    if d == 0 {
        return out;
    }
    // Duval: walk all Lyndon words of length <= n in lex order.
    let mut w = vec![0usize];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        let period = w.clone();
        while w.len() < n {
            let next = period[w.len() % period.len()];
            w.push(next);
        }
        while w.last() == Some(&(d - 1)) {
            w.pop();
        }
        if w.is_empty() {
            return out;
        }
        *w.last_mut().unwrap() += 1;
    }
}

/// Number of Lyndon words of length `n` on `d` letters.
pub fn count(d: usize, n: usize) -> usize {
    words(d, n).len()
}

/// Census keyed by letter content: entry `i` of a key is the multiplicity of letter `i`.
pub fn content_census(d: usize, n: usize) -> BTreeMap<Vec<usize>, usize> {
    let mut census = BTreeMap::new();
    for w in words(d, n) {
        let mut content = vec![0usize; d];
        for letter in w {
            content[letter] += 1;
        }
        *census.entry(content).or_default() += 1;
    }
    census
}
