//! Finite-dimensional Lie algebras given by structure constants.
//!
//! An [`SCAlgebra`] stores the brackets `[e_i, e_j]` for `i < j` as sparse
//! coordinate vectors over exact rationals; antisymmetry extends the table and
//! the Jacobi identity is checked on construction. On top of that sit the
//! lower central series, centers, ideals, quotients, direct sums, the
//! splitting of a finite-dimensional algebra into a non-abelian core and an
//! abelian direct summand, and a small catalog of built-in algebras.
//!
//! Algebras are immutable after validation; all derived computations are pure.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::linalg::{kernel_of_rows, RowReducer, SparseRow, Subspace};
use crate::rational::{format_rational, parse_rational, Rational};

/// Sparse coordinate vector: `(index, coefficient)` pairs, indices increasing.
pub type CoordVec = Vec<(usize, Rational)>;

/// Candidate structure constants: one `(i, j, coordinates of [e_i, e_j])`
/// entry per nonzero bracket.
pub type TableEntries = Vec<(usize, usize, CoordVec)>;

/// A finite-dimensional Lie algebra over the rationals, presented by basis
/// labels and structure constants.
#[derive(Clone)]
pub struct SCAlgebra {
    name: String,
    labels: Vec<String>,
    /// `(i, j)` with `i < j` mapped to the nonzero coordinates of `[e_i, e_j]`.
    table: BTreeMap<(usize, usize), CoordVec>,
}

impl PartialEq for SCAlgebra {
    /// Structural equality: labels and constants; the display name is metadata.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.table == other.table
    }
}

impl Eq for SCAlgebra {}

impl std::fmt::Debug for SCAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SCAlgebra({}, dim {})", self.name, self.dim())
    }
}

impl SCAlgebra {
    /// Validates candidate structure constants: indices in range, antisymmetry
    /// consistent, Jacobi identity on all basis triples. The first violated
    /// identity is reported with its witnessing triple.
    pub fn validate(
        name: impl Into<String>,
        labels: Vec<String>,
        entries: TableEntries,
    ) -> Result<SCAlgebra, Error> {
        let dim = labels.len();
        let mut table: BTreeMap<(usize, usize), CoordVec> = BTreeMap::new();
        for (i, j, value) in entries {
            if i >= dim || j >= dim {
                return Err(Error::BadTable(format!(
                    "bracket index ({i}, {j}) outside dimension {dim}"
                )));
            }
            let mut coords: BTreeMap<usize, Rational> = BTreeMap::new();
            for (k, c) in value {
                if k >= dim {
                    return Err(Error::BadTable(format!(
                        "coordinate index {k} outside dimension {dim}"
                    )));
                }
                let entry = coords.entry(k).or_insert_with(Rational::zero);
                *entry += c;
            }
            coords.retain(|_, c| !c.is_zero());
            if coords.is_empty() {
                continue;
            }
            if i == j {
                return Err(Error::Antisymmetry(format!(
                    "[{l}, {l}] must vanish",
                    l = labels[i]
                )));
            }
            let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
            let vec: CoordVec = coords
                .into_iter()
                .map(|(k, c)| (k, if flip { -c } else { c }))
                .collect();
            match table.get(&key) {
                None => {
                    table.insert(key, vec);
                }
                Some(existing) if *existing == vec => {}
                Some(_) => {
                    return Err(Error::Antisymmetry(format!(
                        "conflicting values for [{}, {}]",
                        labels[key.0], labels[key.1]
                    )));
                }
            }
        }
        let algebra = SCAlgebra {
            name: name.into(),
            labels,
            table,
        };
        algebra.check_jacobi()?;
        Ok(algebra)
    }

    /// Jacobi check restricted to triples that touch a nonzero bracket; all
    /// other triples vanish term by term.
    fn check_jacobi(&self) -> Result<(), Error> {
        let mut triples: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
        for &(a, b) in self.table.keys() {
            for k in 0..self.dim() {
                if k == a || k == b {
                    continue;
                }
                let mut t = [a, b, k];
                t.sort_unstable();
                triples.insert((t[0], t[1], t[2]));
            }
        }
        for (i, j, k) in triples {
            let mut defect = self.bracket_vec_basis(&self.bracket_dense(i, j), k);
            add_into(&mut defect, &self.bracket_vec_basis(&self.bracket_dense(j, k), i));
            add_into(&mut defect, &self.bracket_vec_basis(&self.bracket_dense(k, i), j));
            if defect.iter().any(|c| !c.is_zero()) {
                return Err(Error::Jacobi {
                    x: self.labels[i].clone(),
                    y: self.labels[j].clone(),
                    z: self.labels[k].clone(),
                    defect: self.format_vector(&defect),
                });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_empty()
    }

    /// Nonzero brackets `(i, j, coordinates of [e_i, e_j])` with `i < j`.
    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rational)])> {
        self.table.iter().map(|(&(i, j), v)| (i, j, v.as_slice()))
    }

    /// `[e_i, e_j]` as a sparse vector, extended by antisymmetry.
    pub fn bracket_basis(&self, i: usize, j: usize) -> CoordVec {
        if i == j {
            return Vec::new();
        }
        let (key, flip) = if i < j { ((i, j), false) } else { ((j, i), true) };
        match self.table.get(&key) {
            None => Vec::new(),
            Some(v) if !flip => v.clone(),
            Some(v) => v.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    fn bracket_dense(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (k, c) in self.bracket_basis(i, j) {
            out[k] = c;
        }
        out
    }

    /// `[u, e_j]` for a dense vector `u`.
    pub fn bracket_vec_basis(&self, u: &[Rational], j: usize) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim());
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(a, b), coords) in &self.table {
            if b == j && !u[a].is_zero() {
                for (k, c) in coords {
                    out[*k] += &u[a] * c;
                }
            } else if a == j && !u[b].is_zero() {
                for (k, c) in coords {
                    out[*k] -= &u[b] * c;
                }
            }
        }
        out
    }

    /// Bilinear bracket `[u, v]` of dense vectors.
    pub fn bracket_vec(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        assert_eq!(u.len(), self.dim());
        assert_eq!(v.len(), self.dim());
        let mut out = vec![Rational::zero(); self.dim()];
        for (&(a, b), coords) in &self.table {
            let c = &u[a] * &v[b] - &u[b] * &v[a];
            if c.is_zero() {
                continue;
            }
            for (k, val) in coords {
                out[*k] += &c * val;
            }
        }
        out
    }

    /// Span of `[v, e_j]` over basis vectors `v` of `s` and all `j`; by
    /// bilinearity this is the subspace bracket `[s, L]`.
    pub fn bracket_span(&self, s: &Subspace) -> Subspace {
        assert_eq!(s.ambient_dim(), self.dim());
        // Accumulate [v_r, e_g] for every basis row r and generator g.
        let mut buckets: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
        for (&(a, b), coords) in &self.table {
            for r in 0..s.dim() {
                let row = s.basis_row(r);
                if !row[a].is_zero() {
                    let bucket = buckets.entry((r, b)).or_default();
                    for (k, c) in coords {
                        accumulate(bucket, *k, &row[a] * c);
                    }
                }
                if !row[b].is_zero() {
                    let bucket = buckets.entry((r, a)).or_default();
                    for (k, c) in coords {
                        accumulate(bucket, *k, -(&row[b] * c));
                    }
                }
            }
        }
        let mut reducer = RowReducer::new(self.dim().max(1));
        for (_, row) in buckets {
            reducer.insert(row);
        }
        Subspace::from_reducer(self.dim(), reducer)
    }

    /// Lower central series `L^1 = L`, `L^{i+1} = [L^i, L]`, returned until it
    /// stabilizes. For nilpotent algebras the last entry is the zero space.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let next = self.bracket_span(series.last().unwrap());
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// Nilpotency class: the largest `k` with `L^k != 0`, or `None` when the
    /// series stabilizes before reaching zero. The zero algebra has class 0.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().dim() == 0 {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    /// The derived subalgebra `L^2` as a subspace.
    pub fn derived_subspace(&self) -> Subspace {
        self.bracket_span(&Subspace::full(self.dim()))
    }

    /// `dim L - dim L^2`.
    pub fn abelianization_dim(&self) -> usize {
        self.dim() - self.derived_subspace().dim()
    }

    /// `L^{k}` for `k >= 1`, reading past the stabilized tail as needed.
    pub fn lower_central_term(&self, k: usize) -> Subspace {
        assert!(k >= 1);
        let series = self.lower_central_series();
        series[(k - 1).min(series.len() - 1)].clone()
    }

    /// The center `Z(L)`, i.e. the kernel of the adjoint action.
    pub fn center(&self) -> IdealHandle {
        let dim = self.dim();
        // One constraint row per (generator j, output coordinate k).
        let mut rows: BTreeMap<(usize, usize), SparseRow> = BTreeMap::new();
        for (&(a, b), coords) in &self.table {
            for (k, c) in coords {
                accumulate(rows.entry((b, *k)).or_default(), a, c.clone());
                accumulate(rows.entry((a, *k)).or_default(), b, -c.clone());
            }
        }
        let space = kernel_of_rows(dim, rows.into_values());
        IdealHandle {
            parent: self.clone(),
            space,
        }
    }

    /// The `c`-th term of the upper central series, computed iteratively
    /// through quotients: `Z_{i+1}/Z_i = Z(L/Z_i)`.
    pub fn c_center(&self, c: usize) -> IdealHandle {
        assert!(c >= 1);
        let mut z = self.center().space;
        for _ in 2..=c {
            if z.dim() == self.dim() {
                break;
            }
            let (quotient, complement) = self
                .quotient_parts(&z)
                .expect("upper central terms are ideals");
            let zq = quotient.center().space;
            let lifts: Vec<SparseRow> = (0..zq.dim())
                .map(|r| {
                    zq.basis_row(r)
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(m, v)| (complement[m], v.clone()))
                        .collect()
                })
                .collect();
            let lifted = Subspace::from_sparse_rows(self.dim(), lifts);
            z = z.sum(&lifted).expect("same ambient");
        }
        IdealHandle {
            parent: self.clone(),
            space: z,
        }
    }

    /// Quotient by a verified ideal. The quotient basis is the set of
    /// non-pivot coordinates of the ideal's RREF basis.
    pub fn quotient(&self, ideal: &IdealHandle) -> Result<SCAlgebra, Error> {
        if ideal.parent != *self {
            return Err(Error::ForeignIdeal);
        }
        let (q, _) = self.quotient_parts(&ideal.space)?;
        Ok(q)
    }

    /// Quotient constants plus the complement columns that realize the chosen
    /// section. Fails with `NotAnIdeal` if reduction escapes the complement.
    fn quotient_parts(&self, space: &Subspace) -> Result<(SCAlgebra, Vec<usize>), Error> {
        assert_eq!(space.ambient_dim(), self.dim());
        let mut is_pivot = vec![false; self.dim()];
        for r in 0..space.dim() {
            let p = space
                .basis_row(r)
                .iter()
                .position(|x| !x.is_zero())
                .expect("nonzero basis row");
            is_pivot[p] = true;
        }
        let complement: Vec<usize> = (0..self.dim()).filter(|&i| !is_pivot[i]).collect();
        let col_of: BTreeMap<usize, usize> = complement
            .iter()
            .enumerate()
            .map(|(q, &c)| (c, q))
            .collect();
        let labels: Vec<String> = complement.iter().map(|&c| self.labels[c].clone()).collect();
        let mut entries = Vec::new();
        for (qa, &a) in complement.iter().enumerate() {
            for (qb, &b) in complement.iter().enumerate().skip(qa + 1) {
                let mut v = self.bracket_dense(a, b);
                // Reduce modulo the ideal: clear the pivot coordinates.
                for r in 0..space.dim() {
                    let row = space.basis_row(r);
                    let p = row.iter().position(|x| !x.is_zero()).unwrap();
                    if v[p].is_zero() {
                        continue;
                    }
                    let c = std::mem::replace(&mut v[p], Rational::zero());
                    for (slot, base) in v.iter_mut().zip(row) {
                        if !base.is_zero() {
                            *slot -= &c * base;
                        }
                    }
                    v[p] = Rational::zero();
                }
                let mut coords = Vec::new();
                for (k, c) in v.into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    match col_of.get(&k) {
                        Some(&q) => coords.push((q, c)),
                        None => return Err(Error::NotAnIdeal(k)),
                    }
                }
                if !coords.is_empty() {
                    entries.push((qa, qb, coords));
                }
            }
        }
        let name = format!("{}/I{}", self.name, space.dim());
        let q = SCAlgebra::validate(name, labels, entries)?;
        Ok((q, complement))
    }

    /// Block-diagonal direct sum. Colliding labels from the right summand are
    /// disambiguated with a prime suffix.
    pub fn direct_sum(&self, other: &SCAlgebra) -> SCAlgebra {
        let mut labels = self.labels.clone();
        let mut used: BTreeSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut candidate = l.clone();
            while used.contains(&candidate) {
                candidate.push('\'');
            }
            used.insert(candidate.clone());
            labels.push(candidate);
        }
        let shift = self.dim();
        let mut entries: TableEntries = Vec::new();
        for (i, j, coords) in self.nonzero_pairs() {
            entries.push((i, j, coords.to_vec()));
        }
        for (i, j, coords) in other.nonzero_pairs() {
            entries.push((
                i + shift,
                j + shift,
                coords.iter().map(|(k, c)| (k + shift, c.clone())).collect(),
            ));
        }
        let name = format!("{}+{}", self.name, other.name);
        SCAlgebra::validate(name, labels, entries)
            .expect("direct sum of valid algebras is valid")
    }

    /// Splits `L` as `T (+) A` with `A` abelian and `Z(T) = Z(L) meet L^2`:
    /// `A` is a complement of `Z(L) meet L^2` inside `Z(L)`, `T` a complement
    /// of `A` containing `L^2`. The construction verifies its postconditions
    /// rather than trusting them. Abelian input yields `T = 0`.
    pub fn split_abelian_factor(&self) -> (SCAlgebra, usize) {
        let dim = self.dim();
        let z = self.center().space;
        let l2 = self.derived_subspace();
        let w = z.intersection(&l2).expect("same ambient");

        // A-part: extend W to Z; the new rows span a complement of W in Z.
        let mut reducer = RowReducer::new(dim.max(1));
        for r in 0..w.dim() {
            reducer.insert(sparse_of(w.basis_row(r)));
        }
        let mut a_rows: Vec<Vec<Rational>> = Vec::new();
        for r in 0..z.dim() {
            if reducer.insert(sparse_of(z.basis_row(r))) {
                a_rows.push(z.basis_row(r).to_vec());
            }
        }
        let a_dim = a_rows.len();
        let a_space = Subspace::from_rows(dim, &a_rows);

        // T-part: extend L^2 + A to the whole space by unit vectors; T is
        // spanned by L^2 together with those unit vectors.
        let mut reducer = RowReducer::new(dim.max(1));
        let mut t_rows: Vec<SparseRow> = Vec::new();
        for r in 0..l2.dim() {
            reducer.insert(sparse_of(l2.basis_row(r)));
            t_rows.push(sparse_of(l2.basis_row(r)));
        }
        for row in &a_rows {
            reducer.insert(sparse_of(row));
        }
        for i in 0..dim {
            let mut unit = SparseRow::new();
            unit.insert(i, Rational::from_integer(1.into()));
            if reducer.insert(unit.clone()) {
                t_rows.push(unit);
            }
        }
        let t_space = Subspace::from_sparse_rows(dim, t_rows);
        assert_eq!(t_space.dim() + a_dim, dim, "T and A must complement each other");

        // Structure constants of T in its canonical RREF basis. For an RREF
        // basis the coordinates of a member vector are its pivot entries.
        let t_dim = t_space.dim();
        let pivots: Vec<usize> = (0..t_dim)
            .map(|r| {
                t_space
                    .basis_row(r)
                    .iter()
                    .position(|x| !x.is_zero())
                    .unwrap()
            })
            .collect();
        let mut entries = Vec::new();
        for r in 0..t_dim {
            for s in (r + 1)..t_dim {
                let v = self.bracket_vec(t_space.basis_row(r), t_space.basis_row(s));
                assert!(
                    t_space.contains_vector(&v),
                    "T is not bracket-closed; split construction is wrong"
                );
                let coords: CoordVec = pivots
                    .iter()
                    .enumerate()
                    .filter(|(_, &p)| !v[p].is_zero())
                    .map(|(m, &p)| (m, v[p].clone()))
                    .collect();
                if !coords.is_empty() {
                    entries.push((r, s, coords));
                }
            }
        }
        let labels = (1..=t_dim).map(|i| format!("t{i}")).collect();
        let t = SCAlgebra::validate(format!("T({})", self.name), labels, entries)
            .expect("restriction of a Lie bracket satisfies the Lie axioms");

        // Post-hoc checks: Z(T) = Z(L) meet L^2, and L = T (+) A as algebras.
        let zt = t.center().space;
        let zt_in_l = Subspace::from_rows(
            dim,
            &(0..zt.dim())
                .map(|r| {
                    let mut vec = vec![Rational::zero(); dim];
                    for (m, c) in zt.basis_row(r).iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for (slot, base) in vec.iter_mut().zip(t_space.basis_row(m)) {
                            *slot += c * base;
                        }
                    }
                    vec
                })
                .collect::<Vec<_>>(),
        );
        assert_eq!(zt_in_l, w, "Z(T) must equal Z(L) meet L^2");
        for row in &a_rows {
            for j in 0..dim {
                let img = self.bracket_vec_basis(row, j);
                assert!(img.iter().all(Rational::is_zero), "A must be central");
            }
        }
        assert_eq!(
            t_space.sum(&a_space).expect("same ambient").dim(),
            dim,
            "T + A must span L"
        );
        (t, a_dim)
    }

    fn format_vector(&self, v: &[Rational]) -> String {
        let mut parts = Vec::new();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let label = &self.labels[k];
            let one = Rational::from_integer(1.into());
            if *c == one {
                parts.push(label.clone());
            } else if *c == -one.clone() {
                parts.push(format!("-{label}"));
            } else {
                parts.push(format!("{}*{}", format_rational(c), label));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }

    /// Pretty-printed JSON in the interchange schema.
    pub fn to_json(&self) -> String {
        let doc = AlgebraDoc {
            name: Some(self.name.clone()),
            dim: self.dim(),
            labels: self.labels.clone(),
            brackets: self
                .nonzero_pairs()
                .map(|(i, j, coords)| BracketDoc {
                    i,
                    j,
                    value: coords
                        .iter()
                        .map(|(k, c)| TermDoc {
                            k: *k,
                            coeff: format_rational(c),
                        })
                        .collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("schema serializes")
    }

    /// Parses and validates the JSON interchange schema.
    pub fn from_json(text: &str) -> Result<SCAlgebra, Error> {
        let doc: AlgebraDoc = serde_json::from_str(text)?;
        if doc.labels.len() != doc.dim {
            return Err(Error::BadTable(format!(
                "dim is {} but {} labels were given",
                doc.dim,
                doc.labels.len()
            )));
        }
        let mut entries = Vec::new();
        for b in doc.brackets {
            let mut coords = Vec::new();
            for term in b.value {
                coords.push((term.k, parse_rational(&term.coeff)?));
            }
            entries.push((b.i, b.j, coords));
        }
        let name = doc.name.unwrap_or_else(|| "L".to_string());
        SCAlgebra::validate(name, doc.labels, entries)
    }
}

#[derive(Serialize, Deserialize)]
struct AlgebraDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    dim: usize,
    labels: Vec<String>,
    brackets: Vec<BracketDoc>,
}

#[derive(Serialize, Deserialize)]
struct BracketDoc {
    i: usize,
    j: usize,
    value: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    k: usize,
    coeff: String,
}

fn accumulate(row: &mut SparseRow, k: usize, add: Rational) {
    if add.is_zero() {
        return;
    }
    match row.get_mut(&k) {
        Some(entry) => {
            *entry += add;
            if entry.is_zero() {
                row.remove(&k);
            }
        }
        None => {
            row.insert(k, add);
        }
    }
}

fn add_into(target: &mut [Rational], other: &[Rational]) {
    for (t, o) in target.iter_mut().zip(other) {
        *t += o;
    }
}

fn sparse_of(v: &[Rational]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// An ideal of a parent algebra: a subspace verified to be bracket-closed
/// under the whole algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealHandle {
    parent: SCAlgebra,
    space: Subspace,
}

impl IdealHandle {
    /// Verifies `[space, L] <= space` and wraps the pair.
    pub fn new(parent: SCAlgebra, space: Subspace) -> Result<IdealHandle, Error> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::AmbientMismatch(space.ambient_dim(), parent.dim()));
        }
        for r in 0..space.dim() {
            for j in 0..parent.dim() {
                let img = parent.bracket_vec_basis(space.basis_row(r), j);
                if !space.contains_vector(&img) {
                    return Err(Error::NotAnIdeal(j));
                }
            }
        }
        Ok(IdealHandle { parent, space })
    }

    pub fn zero(parent: SCAlgebra) -> IdealHandle {
        let space = Subspace::zero(parent.dim());
        IdealHandle { parent, space }
    }

    pub fn parent(&self) -> &SCAlgebra {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Abelian algebra `A(n)`.
pub fn abelian(n: usize) -> SCAlgebra {
    let labels = (1..=n).map(|i| format!("a{i}")).collect();
    SCAlgebra::validate(format!("A({n})"), labels, Vec::new()).expect("abelian table is valid")
}

/// Heisenberg algebra `H(m)`: dimension `2m + 1`, brackets `[x_i, y_i] = z`.
pub fn heisenberg(m: usize) -> SCAlgebra {
    assert!(m >= 1, "H(m) needs m >= 1");
    let mut labels: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    labels.extend((1..=m).map(|i| format!("y{i}")));
    labels.push("z".to_string());
    let one = Rational::from_integer(1.into());
    let entries = (0..m)
        .map(|i| (i, m + i, vec![(2 * m, one.clone())]))
        .collect();
    SCAlgebra::validate(format!("H({m})"), labels, entries).expect("Heisenberg table is valid")
}

/// Looks up a catalog algebra by its grammar `NAME(args)`:
/// `A(n)` abelian, `H(m)` Heisenberg, `f(d,k)` free nilpotent of class `k`
/// on `d` generators. The free case is subject to the Hall-dimension budget.
pub fn catalog_with_budget(name: &str, budget: usize) -> Result<SCAlgebra, Error> {
    let available = "A(n), H(m), f(d,k)";
    let trimmed = name.trim();
    let Some((head, rest)) = trimmed.split_once('(') else {
        return Err(Error::UnknownCatalog {
            name: trimmed.to_string(),
            available: available.to_string(),
        });
    };
    let Some(args_text) = rest.strip_suffix(')') else {
        return Err(Error::Parse(format!("expected `NAME(args)`, got `{trimmed}`")));
    };
    let args: Vec<usize> = args_text
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad catalog argument `{}`", a.trim())))
        })
        .collect::<Result<_, _>>()?;
    match (head.trim(), args.as_slice()) {
        ("A", [n]) => Ok(abelian(*n)),
        ("H", [m]) => {
            if *m == 0 {
                return Err(Error::Parse("H(m) needs m >= 1".to_string()));
            }
            Ok(heisenberg(*m))
        }
        ("f", [d, k]) => {
            if *d == 0 || *k == 0 {
                return Err(Error::Parse("f(d,k) needs d >= 1 and k >= 1".to_string()));
            }
            let required: usize = (1..=*k).map(|w| crate::witt::witt(*d, w)).sum();
            if required > budget {
                return Err(Error::BudgetExceeded {
                    generators: *d,
                    bound: k + 1,
                    required,
                    budget,
                });
            }
            Ok(crate::frame::free_nilpotent_structure(*d, k + 1))
        }
        ("A" | "H" | "f", _) => Err(Error::Parse(format!(
            "wrong number of arguments in `{trimmed}`"
        ))),
        _ => Err(Error::UnknownCatalog {
            name: head.trim().to_string(),
            available: available.to_string(),
        }),
    }
}

/// [`catalog_with_budget`] with the default budget.
pub fn catalog(name: &str) -> Result<SCAlgebra, Error> {
    catalog_with_budget(name, crate::DEFAULT_BUDGET)
}
