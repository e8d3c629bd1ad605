//! Hall-coordinate frames for the truncated free Lie algebra.
//!
//! A [`HallFrame`] on `d` generators with truncation bound `M` holds the Hall
//! trees of weight `1..M`, their tensor expansions, and one exact solver per
//! weight that converts degree-`w` tensor coordinates to Hall coordinates.
//! The expansions of one weight are linearly independent with count
//! `witt(d, w)`; the solver asserts this as it is built. Frames are immutable
//! after construction.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::SCAlgebra;
use crate::error::Error;
use crate::hall::{Alphabet, CommTree, HallSet};
use crate::rational::Rational;
use crate::tensor::{expand_tree, lie_bracket, TensorPoly, Word};
use crate::witt::witt;

/// A reduced pivot row over words together with its expression over local
/// Hall indices.
type PivotRow = (BTreeMap<Word, Rational>, BTreeMap<usize, Rational>);

/// Echelon solver for one homogeneous degree, keyed by pivot word.
struct DegreeSolver {
    pivots: BTreeMap<Word, PivotRow>,
}

impl DegreeSolver {
    fn new() -> Self {
        DegreeSolver {
            pivots: BTreeMap::new(),
        }
    }

    /// Inserts the expansion of the Hall element with local index `index`.
    /// Panics if it reduces to zero: that would contradict the graded-basis
    /// theorem and signals a generator bug.
    fn insert(&mut self, expansion: BTreeMap<Word, Rational>, index: usize) {
        let mut row = expansion;
        let mut combo: BTreeMap<usize, Rational> = BTreeMap::new();
        combo.insert(index, Rational::from_integer(1.into()));
        loop {
            let Some((lead, _)) = row.iter().next() else {
                panic!("Hall expansion {index} is dependent on earlier ones");
            };
            let lead = lead.clone();
            match self.pivots.get(&lead) {
                Some((prow, pcombo)) => {
                    let c = -row.remove(&lead).unwrap();
                    axpy_words(&mut row, &c, prow, Some(&lead));
                    axpy_indices(&mut combo, &c, pcombo);
                }
                None => {
                    let inv = row.get(&lead).unwrap().recip();
                    for v in row.values_mut() {
                        *v *= &inv;
                    }
                    for v in combo.values_mut() {
                        *v *= &inv;
                    }
                    self.pivots.insert(lead, (row, combo));
                    return;
                }
            }
        }
    }

    /// Hall coordinates of a homogeneous Lie element, or `NotLieElement` if
    /// the words do not reduce to zero within the Hall span.
    fn solve(&self, part: BTreeMap<Word, Rational>) -> Result<BTreeMap<usize, Rational>, Error> {
        let mut row = part;
        let mut solution: BTreeMap<usize, Rational> = BTreeMap::new();
        loop {
            let Some((lead, _)) = row.iter().next() else {
                return Ok(solution);
            };
            let lead = lead.clone();
            let Some((prow, pcombo)) = self.pivots.get(&lead) else {
                return Err(Error::NotLieElement);
            };
            let c = row.remove(&lead).unwrap();
            let neg = -c.clone();
            axpy_words(&mut row, &neg, prow, Some(&lead));
            axpy_indices(&mut solution, &c, pcombo);
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

fn axpy_words(
    row: &mut BTreeMap<Word, Rational>,
    c: &Rational,
    other: &BTreeMap<Word, Rational>,
    skip: Option<&Word>,
) {
    for (word, val) in other {
        if skip == Some(word) {
            continue;
        }
        let add = c * val;
        match row.get_mut(word) {
            Some(entry) => {
                *entry += add;
                if entry.is_zero() {
                    row.remove(word);
                }
            }
            None => {
                row.insert(word.clone(), add);
            }
        }
    }
}

fn axpy_indices(row: &mut BTreeMap<usize, Rational>, c: &Rational, other: &BTreeMap<usize, Rational>) {
    for (&i, val) in other {
        let add = c * val;
        match row.get_mut(&i) {
            Some(entry) => {
                *entry += add;
                if entry.is_zero() {
                    row.remove(&i);
                }
            }
            None => {
                row.insert(i, add);
            }
        }
    }
}

/// Hall basis, tensor expansions, and exact change-of-basis solvers for the
/// free Lie algebra on `d` generators truncated at weight `bound`.
pub struct HallFrame {
    d: usize,
    bound: usize,
    hall: HallSet,
    expansions: Vec<TensorPoly>,
    solvers: Vec<DegreeSolver>,
}

impl HallFrame {
    /// Builds the frame for `F / F^bound`; Hall trees have weights `1..bound`.
    pub fn new(d: usize, bound: usize) -> Self {
        assert!(d >= 1, "need at least one generator");
        assert!(bound >= 2, "truncation bound must be at least 2");
        let hall = HallSet::new(Alphabet::single(d), bound - 1);
        let mut expansions: Vec<TensorPoly> = Vec::with_capacity(hall.len());
        let mut solvers: Vec<DegreeSolver> = Vec::new();
        for w in 1..bound {
            let mut solver = DegreeSolver::new();
            for g in hall.weight_range(w) {
                let poly = match hall.children_at(g) {
                    None => TensorPoly::generator(
                        hall.tree_at(g).as_leaf().expect("weight-1 tree is a leaf") as u32,
                    ),
                    Some((l, r)) => lie_bracket(&expansions[l], &expansions[r], usize::MAX),
                };
                let local = g - hall.weight_range(w).start;
                solver.insert(poly.homogeneous_part(w), local);
                expansions.push(poly);
            }
            assert_eq!(
                solver.rank(),
                witt(d, w),
                "rank of weight-{w} expansions disagrees with the Witt number"
            );
            solvers.push(solver);
        }
        HallFrame {
            d,
            bound,
            hall,
            expansions,
            solvers,
        }
    }

    pub fn generators(&self) -> usize {
        self.d
    }

    /// Truncation bound `M`: all arithmetic happens in `F / F^M`.
    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Total Hall dimension, i.e. `sum of witt(d, w) for w in 1..M`.
    pub fn dim(&self) -> usize {
        self.hall.len()
    }

    pub fn hall_set(&self) -> &HallSet {
        &self.hall
    }

    pub fn tree(&self, index: usize) -> &CommTree {
        self.hall.tree_at(index)
    }

    pub fn weight_of(&self, index: usize) -> usize {
        self.hall.weight_at(index)
    }

    /// Global index range of the Hall trees of one weight.
    pub fn weight_range(&self, w: usize) -> std::ops::Range<usize> {
        self.hall.weight_range(w)
    }

    pub fn expansion(&self, index: usize) -> &TensorPoly {
        &self.expansions[index]
    }

    /// Expansion of an arbitrary tree, checked against the truncation bound.
    pub fn expand(&self, tree: &CommTree) -> Result<TensorPoly, Error> {
        if tree.weight() >= self.bound {
            return Err(Error::DegreeOverflow {
                degree: tree.weight(),
                bound: self.bound,
            });
        }
        Ok(expand_tree(tree))
    }

    /// Exact Hall coordinates of a Lie element of the truncated free Lie
    /// algebra, over all weights `1..M`. Fails with `NotLieElement` when some
    /// homogeneous part lies outside the Hall span, and with `DegreeOverflow`
    /// when a word reaches the truncation bound.
    pub fn hall_coordinates(&self, p: &TensorPoly) -> Result<Vec<Rational>, Error> {
        let mut coords = vec![Rational::zero(); self.dim()];
        for degree in p.degrees().collect::<Vec<_>>() {
            if degree == 0 || degree >= self.bound {
                if degree >= self.bound {
                    return Err(Error::DegreeOverflow {
                        degree,
                        bound: self.bound,
                    });
                }
                return Err(Error::NotLieElement);
            }
            let local = self.solvers[degree - 1].solve(p.homogeneous_part(degree))?;
            let start = self.weight_range(degree).start;
            for (i, v) in local {
                coords[start + i] = v;
            }
        }
        Ok(coords)
    }

    /// Sparse variant of [`HallFrame::hall_coordinates`].
    pub(crate) fn hall_coordinates_sparse(
        &self,
        p: &TensorPoly,
    ) -> Result<Vec<(usize, Rational)>, Error> {
        let mut coords = Vec::new();
        for degree in p.degrees().collect::<Vec<_>>() {
            if degree == 0 {
                return Err(Error::NotLieElement);
            }
            if degree >= self.bound {
                return Err(Error::DegreeOverflow {
                    degree,
                    bound: self.bound,
                });
            }
            let local = self.solvers[degree - 1].solve(p.homogeneous_part(degree))?;
            let start = self.weight_range(degree).start;
            coords.extend(local.into_iter().map(|(i, v)| (start + i, v)));
        }
        coords.sort_by_key(|(i, _)| *i);
        Ok(coords)
    }

    /// The structure-constant algebra of `F / F^M` on the Hall basis.
    /// Brackets landing in weight >= M truncate to zero.
    pub fn structure_algebra(&self) -> SCAlgebra {
        let alphabet = self.hall.alphabet();
        let labels: Vec<String> = (0..self.dim())
            .map(|g| self.tree(g).display(alphabet))
            .collect();
        let mut entries: crate::algebra::TableEntries = Vec::new();
        for i in 0..self.dim() {
            let wi = self.weight_of(i);
            for j in (i + 1)..self.dim() {
                if wi + self.weight_of(j) >= self.bound {
                    continue;
                }
                let product = lie_bracket(&self.expansions[i], &self.expansions[j], self.bound);
                let coords = self
                    .hall_coordinates_sparse(&product)
                    .expect("bracket of Hall elements is a Lie element");
                if !coords.is_empty() {
                    entries.push((i, j, coords));
                }
            }
        }
        let name = format!("f({},{})", self.d, self.bound - 1);
        SCAlgebra::validate(name, labels, entries)
            .expect("free nilpotent structure constants satisfy the Lie axioms")
    }
}

/// Free nilpotent Lie algebra of class `bound - 1` on `d` generators, as a
/// structure-constant algebra over its Hall basis.
pub fn free_nilpotent_structure(d: usize, bound: usize) -> SCAlgebra {
    HallFrame::new(d, bound).structure_algebra()
}
