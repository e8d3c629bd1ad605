//! Noncommutative polynomials in the tensor algebra, graded by word degree.
//!
//! Free-Lie elements are represented faithfully through the embedding
//! `[u, v] = uv - vu` with word concatenation as product. A truncation bound
//! `M` (drop all words of degree >= M) amounts to working in `F / F^M`; the
//! bound is always explicit, nothing depends on an ambient global.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::hall::CommTree;
use crate::rational::Rational;

/// A word in the generators, e.g. `[1, 0, 0]` for `yxx`.
pub type Word = Vec<u32>;

/// Homogeneous-by-degree noncommutative polynomial with exact rational
/// coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorPoly {
    terms: BTreeMap<usize, BTreeMap<Word, Rational>>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    /// The single one-letter word for a generator.
    pub fn generator(letter: u32) -> Self {
        TensorPoly::from_word(vec![letter], Rational::from_integer(1.into()))
    }

    pub fn from_word(word: Word, coeff: Rational) -> Self {
        let mut p = TensorPoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word degree present, or 0 for the zero polynomial.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().next_back().copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.keys().copied()
    }

    pub fn terms_of_degree(&self, degree: usize) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.get(&degree).into_iter().flatten()
    }

    pub fn homogeneous_part(&self, degree: usize) -> BTreeMap<Word, Rational> {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: Word, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let degree = word.len();
        let bucket = self.terms.entry(degree).or_default();
        match bucket.get_mut(&word) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    bucket.remove(&word);
                    if bucket.is_empty() {
                        self.terms.remove(&degree);
                    }
                }
            }
            None => {
                bucket.insert(word, coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &TensorPoly) {
        for bucket in other.terms.values() {
            for (word, coeff) in bucket {
                self.add_term(word.clone(), coeff.clone());
            }
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.terms.clear();
            return;
        }
        for bucket in self.terms.values_mut() {
            for coeff in bucket.values_mut() {
                *coeff *= c;
            }
        }
    }

    /// Concatenation product, discarding words of degree >= `bound`.
    pub fn mul_truncated(&self, other: &TensorPoly, bound: usize) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for (da, bucket_a) in &self.terms {
            for (db, bucket_b) in &other.terms {
                if da + db >= bound {
                    continue;
                }
                for (wa, ca) in bucket_a {
                    for (wb, cb) in bucket_b {
                        let mut word = Word::with_capacity(wa.len() + wb.len());
                        word.extend_from_slice(wa);
                        word.extend_from_slice(wb);
                        out.add_term(word, ca * cb);
                    }
                }
            }
        }
        out
    }
}

/// `pq - qp` with all words of degree >= `bound` discarded.
pub fn lie_bracket(p: &TensorPoly, q: &TensorPoly, bound: usize) -> TensorPoly {
    let mut out = p.mul_truncated(q, bound);
    let mut qp = q.mul_truncated(p, bound);
    qp.scale(&-Rational::from_integer(1.into()));
    out.add_assign(&qp);
    out
}

/// Expands a bracket tree into the tensor algebra: a leaf becomes its
/// one-letter word, `[u, v]` becomes `uv - vu`. Exact, no truncation.
pub fn expand_tree(tree: &CommTree) -> TensorPoly {
    match tree.children() {
        None => TensorPoly::generator(tree.as_leaf().expect("leaf") as u32),
        Some((l, r)) => {
            let pl = expand_tree(l);
            let pr = expand_tree(r);
            lie_bracket(&pl, &pr, usize::MAX)
        }
    }
}
