//! Dense exact linear algebra: matrices over [`Rational`], reduced row-echelon
//! form, kernels, and canonical subspaces.
//!
//! Every elimination in the crate funnels through one sparse row-reduction
//! engine. Matrices and subspaces are immutable after construction, so values
//! can be shared between threads freely.
//!
//! A [`Subspace`] stores the unique RREF basis of the space it represents,
//! which makes subspace equality plain structural equality.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{format_rational, Rational};

/// Sparse row: column index -> nonzero coefficient.
pub(crate) type SparseRow = BTreeMap<usize, Rational>;

pub(crate) fn sparse_from_dense(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// Incremental Gaussian elimination over sparse rows.
///
/// Rows are stored in echelon form keyed by pivot column, each normalized so
/// the pivot coefficient is one. [`RowReducer::finalize`] back-substitutes to
/// the unique RREF.
pub(crate) struct RowReducer {
    cols: usize,
    rows: BTreeMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new(cols: usize) -> Self {
        RowReducer {
            cols,
            rows: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the current echelon set and inserts the remainder
    /// if it is nonzero. Returns true when the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                return false;
            };
            debug_assert!(lead < self.cols);
            match self.rows.get(&lead) {
                Some(pivot_row) => {
                    let c = -row.remove(&lead).unwrap();
                    // The pivot entry itself was just removed; skip it in the axpy.
                    for (&col, val) in pivot_row {
                        if col == lead {
                            continue;
                        }
                        let add = &c * val;
                        match row.get_mut(&col) {
                            Some(entry) => {
                                *entry += add;
                                if entry.is_zero() {
                                    row.remove(&col);
                                }
                            }
                            None => {
                                row.insert(col, add);
                            }
                        }
                    }
                }
                None => {
                    let inv = row.get(&lead).unwrap().recip();
                    for val in row.values_mut() {
                        *val *= &inv;
                    }
                    self.rows.insert(lead, row);
                    return true;
                }
            }
        }
    }

    /// Back-substitutes to the unique RREF and returns the rows ordered by
    /// pivot column.
    pub fn finalize(mut self) -> Vec<SparseRow> {
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let mut row = self.rows.remove(&p).unwrap();
            let laters: Vec<usize> = row
                .keys()
                .copied()
                .filter(|q| *q > p && self.rows.contains_key(q))
                .collect();
            for q in laters {
                let c = -row.remove(&q).unwrap();
                let other = &self.rows[&q];
                for (&col, val) in other {
                    if col == q {
                        continue;
                    }
                    let add = &c * val;
                    match row.get_mut(&col) {
                        Some(entry) => {
                            *entry += add;
                            if entry.is_zero() {
                                row.remove(&col);
                            }
                        }
                        None => {
                            row.insert(col, add);
                        }
                    }
                }
            }
            self.rows.insert(p, row);
        }
        self.rows.into_values().collect()
    }
}

/// Dense rectangular matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::from_integer(1.into()));
        }
        m
    }

    /// Builds a matrix from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub(crate) fn from_sparse_rows(rows: Vec<SparseRow>, cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    fn sparse_rows(&self) -> impl Iterator<Item = SparseRow> + '_ {
        (0..self.rows).map(|i| sparse_from_dense(self.row(i)))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", line.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form and rank. Exact arithmetic; the output has the
/// same shape as the input, zero rows collected at the bottom.
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    let mut reducer = RowReducer::new(m.cols().max(1));
    for row in m.sparse_rows() {
        reducer.insert(row);
    }
    let rows = reducer.finalize();
    let rank = rows.len();
    let mut out = Matrix::zeros(m.rows(), m.cols());
    for (i, row) in rows.into_iter().enumerate() {
        for (j, v) in row {
            out.set(i, j, v);
        }
    }
    (out, rank)
}

/// Rank without materializing the RREF.
pub fn rank(m: &Matrix) -> usize {
    let mut reducer = RowReducer::new(m.cols().max(1));
    for row in m.sparse_rows() {
        reducer.insert(row);
    }
    reducer.rank()
}

/// Right null space of `m`: all `v` with `m * v = 0`, as a canonical subspace
/// of the `m.cols()`-dimensional coordinate space.
pub fn kernel(m: &Matrix) -> Subspace {
    kernel_of_rows(m.cols(), m.sparse_rows())
}

/// Kernel computed from an iterator of sparse constraint rows over `cols`
/// unknowns. Avoids materializing large stacked matrices.
pub(crate) fn kernel_of_rows(cols: usize, rows: impl IntoIterator<Item = SparseRow>) -> Subspace {
    let mut reducer = RowReducer::new(cols.max(1));
    for row in rows {
        reducer.insert(row);
    }
    let rref_rows = reducer.finalize();
    let pivot_of_row: Vec<usize> = rref_rows
        .iter()
        .map(|r| *r.keys().next().expect("nonzero RREF row"))
        .collect();
    let mut is_pivot = vec![false; cols];
    for &p in &pivot_of_row {
        is_pivot[p] = true;
    }
    let mut basis: Vec<SparseRow> = Vec::new();
    for f in (0..cols).filter(|&j| !is_pivot[j]) {
        let mut v = SparseRow::new();
        v.insert(f, Rational::from_integer(1.into()));
        for (row, &p) in rref_rows.iter().zip(&pivot_of_row) {
            if let Some(c) = row.get(&f) {
                v.insert(p, -c.clone());
            }
        }
        basis.push(v);
    }
    Subspace::from_sparse_rows(cols, basis)
}

/// A linear subspace of a fixed coordinate space, stored as its unique RREF
/// basis (one basis vector per row). Two values are equal iff they represent
/// the same subspace.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
        }
    }

    /// Span of the given dense vectors.
    pub fn from_rows(ambient: usize, rows: &[Vec<Rational>]) -> Self {
        for r in rows {
            assert_eq!(r.len(), ambient, "vector length differs from ambient");
        }
        Self::from_sparse_rows(ambient, rows.iter().map(|r| sparse_from_dense(r)))
    }

    pub(crate) fn from_sparse_rows(
        ambient: usize,
        rows: impl IntoIterator<Item = SparseRow>,
    ) -> Self {
        let mut reducer = RowReducer::new(ambient.max(1));
        for row in rows {
            reducer.insert(row);
        }
        Self::from_reducer(ambient, reducer)
    }

    pub(crate) fn from_reducer(ambient: usize, reducer: RowReducer) -> Self {
        let rows = reducer.finalize();
        Subspace {
            ambient,
            basis: Matrix::from_sparse_rows(rows, ambient),
        }
    }

    /// Span of the unit vectors `e_i` for `i` in `indices`.
    pub fn coordinate_subspace(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let rows = indices.into_iter().map(|i| {
            assert!(i < ambient);
            let mut r = SparseRow::new();
            r.insert(i, Rational::from_integer(1.into()));
            r
        });
        Self::from_sparse_rows(ambient, rows)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    /// The RREF basis matrix, one basis vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_row(&self, i: usize) -> &[Rational] {
        self.basis.row(i)
    }

    fn pivot_cols(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero basis row")
            })
            .collect()
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut v = v.to_vec();
        for (i, p) in self.pivot_cols().into_iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (slot, b) in v.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *slot -= &c * b;
                }
            }
        }
        v.iter().all(Rational::is_zero)
    }

    /// True if every vector of `other` lies in `self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient
            && (0..other.dim()).all(|i| self.contains_vector(other.basis_row(i)))
    }

    /// Subspace sum `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let rows = self
            .basis
            .sparse_rows()
            .chain(other.basis.sparse_rows())
            .collect::<Vec<_>>();
        Ok(Subspace::from_sparse_rows(self.ambient, rows))
    }

    /// Subspace intersection via the Zassenhaus block construction: reduce the
    /// rows `[u | u]` for `u` in `self` and `[v | 0]` for `v` in `other`; rows
    /// whose left half vanished span the intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch(self.ambient, other.ambient));
        }
        let n = self.ambient;
        let mut reducer = RowReducer::new((2 * n).max(1));
        for i in 0..self.dim() {
            let mut row = SparseRow::new();
            for (j, v) in self.basis.row(i).iter().enumerate() {
                if !v.is_zero() {
                    row.insert(j, v.clone());
                    row.insert(n + j, v.clone());
                }
            }
            reducer.insert(row);
        }
        for i in 0..other.dim() {
            let row = sparse_from_dense(other.basis.row(i));
            reducer.insert(row);
        }
        let rows = reducer.finalize();
        let meet_rows = rows
            .into_iter()
            .filter(|r| r.keys().next().is_some_and(|&lead| lead >= n))
            .map(|r| r.into_iter().map(|(col, v)| (col - n, v)).collect());
        Ok(Subspace::from_sparse_rows(n, meet_rows))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of Q^{}) basis {:?}",
            self.dim(),
            self.ambient,
            self.basis
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(2);
        let (r, rank) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_dependent_rows() {
        let m = mat(&[&[1, 2], &[2, 4]]);
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r, mat(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_fractional_pivot() {
        let m = Matrix::from_rows(vec![
            vec![rat(1, 2), rat_int(1)],
            vec![rat_int(1), rat_int(3)],
        ]);
        let (_, rank) = rref(&m);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_is_idempotent() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = Matrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
                    .collect(),
            );
            let (r1, k1) = rref(&m);
            let (r2, k2) = rref(&r1);
            assert_eq!(r1, r2);
            assert_eq!(k1, k2);
        }
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let rows = rng.gen_range(1..=6);
            let cols = rng.gen_range(1..=6);
            let m = Matrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                    .collect(),
            );
            assert_eq!(rank(&m), rank(&m.transpose()));
        }
    }

    #[test]
    fn kernel_zero_matrix_is_full() {
        let k = kernel(&Matrix::zeros(2, 3));
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn kernel_identity_is_zero() {
        let k = kernel(&Matrix::identity(3));
        assert_eq!(k, Subspace::zero(3));
    }

    #[test]
    fn kernel_single_row_by_hand() {
        // (1,1,0) -> kernel spanned by (1,-1,0) and (0,0,1).
        let k = kernel(&mat(&[&[1, 1, 0]]));
        assert_eq!(k.dim(), 2);
        let expected = Subspace::from_rows(
            3,
            &[
                vec![rat_int(1), rat_int(-1), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
            ],
        );
        assert_eq!(k, expected);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=6);
            let m = Matrix::from_rows(
                (0..rows)
                    .map(|_| (0..cols).map(|_| rat_int(rng.gen_range(-3..=3))).collect())
                    .collect(),
            );
            let k = kernel(&m);
            assert_eq!(k.dim(), cols - rank(&m));
            for i in 0..k.dim() {
                let image = m.mul_vec(k.basis_row(i));
                assert!(image.iter().all(Rational::is_zero));
            }
        }
    }

    #[test]
    fn sum_and_intersection_of_unit_axes() {
        let a = Subspace::coordinate_subspace(3, [0]);
        let b = Subspace::coordinate_subspace(3, [1]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersection(&b).unwrap(), Subspace::zero(3));
    }

    #[test]
    fn sum_and_intersection_of_equal_spaces() {
        let a = Subspace::from_rows(
            4,
            &[
                vec![rat_int(1), rat_int(2), rat_int(0), rat_int(1)],
                vec![rat_int(0), rat_int(1), rat_int(1), rat_int(0)],
            ],
        );
        assert_eq!(a.sum(&a).unwrap(), a);
        assert_eq!(a.intersection(&a).unwrap(), a);
    }

    #[test]
    fn intersection_by_hand() {
        // a = span(e1+e2, e3), b = span(e2, e3): meet is span(e3).
        let a = Subspace::from_rows(
            3,
            &[
                vec![rat_int(1), rat_int(1), rat_int(0)],
                vec![rat_int(0), rat_int(0), rat_int(1)],
            ],
        );
        let b = Subspace::coordinate_subspace(3, [1, 2]);
        let meet = a.intersection(&b).unwrap();
        assert_eq!(meet, Subspace::coordinate_subspace(3, [2]));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::full(2);
        let b = Subspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::AmbientMismatch(2, 3))));
        assert!(matches!(a.intersection(&b), Err(Error::AmbientMismatch(2, 3))));
    }

    #[test]
    fn dimension_formula_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        fn make(rng: &mut ChaCha8Rng, ambient: usize, count: usize) -> Subspace {
            Subspace::from_rows(
                ambient,
                &(0..count)
                    .map(|_| (0..ambient).map(|_| rat_int(rng.gen_range(-2..=2))).collect())
                    .collect::<Vec<_>>(),
            )
        }
        for _ in 0..60 {
            let ambient = rng.gen_range(1..=12);
            let na = rng.gen_range(0..=4);
            let nb = rng.gen_range(0..=4);
            let a = make(&mut rng, ambient, na);
            let b = make(&mut rng, ambient, nb);
            let sum = a.sum(&b).unwrap();
            let meet = a.intersection(&b).unwrap();
            assert_eq!(a.dim() + b.dim(), sum.dim() + meet.dim());
            assert!(sum.contains(&a) && sum.contains(&b));
            assert!(a.contains(&meet) && b.contains(&meet));
        }
    }

    #[test]
    fn contains_vector_matches_rank_test() {
        let a = Subspace::from_rows(
            3,
            &[vec![rat_int(1), rat_int(1), rat_int(0)]],
        );
        assert!(a.contains_vector(&[rat_int(2), rat_int(2), rat_int(0)]));
        assert!(!a.contains_vector(&[rat_int(1), rat_int(0), rat_int(0)]));
    }
}
