//! Sparse exact linear algebra: RREF, rank, kernels, subspace lattice ops.
//!
//! Everything here is deterministic. Row reduction pivots on the first
//! nonzero entry in column order, so RREF bases are canonical: two runs (or
//! two platforms) produce identical output for identical input. Subspaces
//! are always stored through their RREF basis, which makes subspace equality
//! plain structural equality.
//!
//! Storage is sparse (row, col) -> scalar; elimination switches to dense rows
//! once fill-in passes 50%, which is what happens to tensor-word matrices
//! after a few elimination steps.

use crate::error::LinAlgError;
use crate::scalar::{Field, FieldScalar};
use std::collections::BTreeMap;
use std::fmt;

/// A sparse vector: index -> nonzero scalar.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: BTreeMap<usize, FieldScalar>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: BTreeMap::new() }
    }

    pub fn unit(i: usize, field: Field) -> Self {
        let mut v = SparseVec::new();
        v.set(i, field.one());
        v
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, FieldScalar)>) -> Self {
        let mut v = SparseVec::new();
        for (i, c) in entries {
            v.add_to(i, &c);
        }
        v
    }

    pub fn get(&self, i: usize) -> Option<&FieldScalar> {
        self.entries.get(&i)
    }

    /// Overwrite entry `i`; zero removes it.
    pub fn set(&mut self, i: usize, value: FieldScalar) {
        if value.is_zero() {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, value);
        }
    }

    pub fn add_to(&mut self, i: usize, value: &FieldScalar) {
        if value.is_zero() {
            return;
        }
        match self.entries.remove(&i) {
            None => {
                self.entries.insert(i, value.clone());
            }
            Some(old) => {
                let new = &old + value;
                if !new.is_zero() {
                    self.entries.insert(i, new);
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &SparseVec, c: &FieldScalar) {
        if c.is_zero() {
            return;
        }
        for (i, v) in &other.entries {
            self.add_to(*i, &(v * c));
        }
    }

    pub fn scale(&mut self, c: &FieldScalar) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for v in self.entries.values_mut() {
            *v = &*v * c;
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &FieldScalar)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Smallest index with a nonzero entry.
    pub fn leading(&self) -> Option<(usize, &FieldScalar)> {
        self.entries.iter().next().map(|(i, v)| (*i, v))
    }

    /// Dot product; both vectors must share a field (zero vectors pair to
    /// the given field's zero).
    pub fn dot(&self, other: &SparseVec, field: Field) -> FieldScalar {
        let mut acc = field.zero();
        let (small, big) = if self.entries.len() <= other.entries.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, v) in &small.entries {
            if let Some(w) = big.entries.get(i) {
                acc += &(v * w);
            }
        }
        acc
    }

    /// Kronecker index pairing: `(self ⊗ other)` inside dimension
    /// `self_dim * other_dim`, index `i * other_dim + j`.
    pub fn tensor(&self, other: &SparseVec, other_dim: usize) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, v) in &self.entries {
            for (j, w) in &other.entries {
                out.add_to(i * other_dim + j, &(v * w));
            }
        }
        out
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.entries.iter().map(|(i, v)| format!("{v}*e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A sparse matrix over a single field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    entries: BTreeMap<(usize, usize), FieldScalar>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize, field: Field) -> Self {
        ExactMatrix { rows, cols, field, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize, field: Field) -> Self {
        let mut m = Self::zero(n, n, field);
        for i in 0..n {
            m.entries.insert((i, i), field.one());
        }
        m
    }

    /// Build from dense i64 rows (test and fixture convenience).
    pub fn from_i64_rows(rows: &[&[i64]], field: Field) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zero(r, c, field);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.from_i64(x)).unwrap();
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<SparseVec>, cols: usize, field: Field) -> Result<Self, LinAlgError> {
        let mut m = Self::zero(rows.len(), cols, field);
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.iter() {
                m.set(i, j, v.clone())?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn set(&mut self, r: usize, c: usize, value: FieldScalar) -> Result<(), LinAlgError> {
        if r >= self.rows || c >= self.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "entry ({r}, {c}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        if value.field() != self.field {
            return Err(LinAlgError::MixedFields);
        }
        if value.is_zero() {
            self.entries.remove(&(r, c));
        } else {
            self.entries.insert((r, c), value);
        }
        Ok(())
    }

    pub fn get(&self, r: usize, c: usize) -> FieldScalar {
        self.entries.get(&(r, c)).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn row(&self, r: usize) -> SparseVec {
        let mut v = SparseVec::new();
        for ((i, j), val) in self.entries.range((r, 0)..(r + 1, 0)) {
            debug_assert_eq!(*i, r);
            v.set(*j, val.clone());
        }
        v
    }

    pub fn row_vectors(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut m = ExactMatrix::zero(self.cols, self.rows, self.field);
        for ((r, c), v) in &self.entries {
            m.entries.insert((*c, *r), v.clone());
        }
        m
    }

    pub fn density(&self) -> f64 {
        if self.rows == 0 || self.cols == 0 {
            0.0
        } else {
            self.entries.len() as f64 / (self.rows as f64 * self.cols as f64)
        }
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if self.cols != other.rows {
            return Err(LinAlgError::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        if self.field != other.field {
            return Err(LinAlgError::MixedFields);
        }
        let other_rows: Vec<SparseVec> = other.row_vectors();
        let mut out = ExactMatrix::zero(self.rows, other.cols, self.field);
        for r in 0..self.rows {
            let mut acc = SparseVec::new();
            for (k, v) in self.row(r).iter() {
                acc.add_scaled(&other_rows[k], v);
            }
            for (c, v) in acc.iter() {
                out.entries.insert((r, c), v.clone());
            }
        }
        Ok(out)
    }

    /// `self * x` for a column vector `x` (indexed by columns of `self`).
    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for ((r, c), v) in &self.entries {
            if let Some(xc) = x.get(*c) {
                out.add_to(*r, &(v * xc));
            }
        }
        out
    }

    pub fn stack_vertical(&self, other: &ExactMatrix) -> Result<ExactMatrix, LinAlgError> {
        if self.cols != other.cols {
            return Err(LinAlgError::DimensionMismatch(format!(
                "stacking {} cols on {} cols",
                other.cols, self.cols
            )));
        }
        if self.field != other.field {
            return Err(LinAlgError::MixedFields);
        }
        let mut m = ExactMatrix::zero(self.rows + other.rows, self.cols, self.field);
        for ((r, c), v) in &self.entries {
            m.entries.insert((*r, *c), v.clone());
        }
        for ((r, c), v) in &other.entries {
            m.entries.insert((r + self.rows, *c), v.clone());
        }
        Ok(m)
    }

    /// Reduced row echelon form. Returns the nonzero rows and their pivot
    /// columns (strictly increasing).
    pub fn rref(&self) -> (Vec<SparseVec>, Vec<usize>) {
        if self.density() > 0.5 {
            rref_dense(self.row_vectors(), self.cols, self.field)
        } else {
            rref_sparse(self.row_vectors(), self.cols, self.field)
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Right null space `{x : self * x = 0}` as an RREF subspace.
    ///
    /// Rank-nullity (`rank + dim kernel = cols`) is asserted on every call.
    pub fn kernel(&self) -> Subspace {
        let (rows, pivots) = self.rref();
        let pivot_set: BTreeMap<usize, usize> =
            pivots.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains_key(&free) {
                continue;
            }
            let mut v = SparseVec::new();
            v.set(free, self.field.one());
            for (p, i) in &pivot_set {
                if let Some(c) = rows[*i].get(free) {
                    v.set(*p, -c);
                }
            }
            basis.push(v);
        }
        let kernel = Subspace::from_spanning(basis, self.cols, self.field);
        assert_eq!(
            pivots.len() + kernel.dim(),
            self.cols,
            "rank-nullity violated (rank {}, nullity {}, cols {})",
            pivots.len(),
            kernel.dim(),
            self.cols
        );
        kernel
    }
}

fn rref_sparse(
    mut rows: Vec<SparseVec>,
    cols: usize,
    _field: Field,
) -> (Vec<SparseVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (next..rows.len()).find(|r| {
            rows[*r].get(col).is_some()
        }) else {
            continue;
        };
        rows.swap(next, pivot_row);
        let inv = rows[next].get(col).unwrap().inv().expect("pivot entry nonzero");
        rows[next].scale(&inv);
        let pivot = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next {
                continue;
            }
            if let Some(c) = row.get(col) {
                let c = -c;
                row.add_scaled(&pivot, &c);
            }
        }
        pivots.push(col);
        next += 1;
        if next == rows.len() {
            break;
        }
    }
    rows.truncate(next);
    (rows, pivots)
}

fn rref_dense(rows: Vec<SparseVec>, cols: usize, field: Field) -> (Vec<SparseVec>, Vec<usize>) {
    let mut dense: Vec<Vec<FieldScalar>> = rows
        .iter()
        .map(|r| {
            let mut row = vec![field.zero(); cols];
            for (i, v) in r.iter() {
                row[i] = v.clone();
            }
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut next = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (next..dense.len()).find(|r| !dense[*r][col].is_zero()) else {
            continue;
        };
        dense.swap(next, pivot_row);
        let inv = dense[next][col].inv().expect("pivot entry nonzero");
        for x in dense[next].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..dense.len() {
            if r == next || dense[r][col].is_zero() {
                continue;
            }
            let c = dense[r][col].clone();
            for j in 0..cols {
                let delta = &dense[next][j] * &c;
                dense[r][j] -= &delta;
            }
        }
        pivots.push(col);
        next += 1;
        if next == dense.len() {
            break;
        }
    }
    dense.truncate(next);
    let rows = dense
        .into_iter()
        .map(|row| {
            SparseVec::from_entries(
                row.into_iter().enumerate().filter(|(_, v)| !v.is_zero()),
            )
        })
        .collect();
    (rows, pivots)
}

/// A linear subspace of K^n held as an RREF basis.
///
/// Pivot columns are strictly increasing, pivots equal 1, and each pivot
/// column is zero in every other basis row, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: Field,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize, field: Field) -> Self {
        Subspace { ambient, field, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize, field: Field) -> Self {
        let basis = (0..ambient).map(|i| SparseVec::unit(i, field)).collect();
        Subspace { ambient, field, basis, pivots: (0..ambient).collect() }
    }

    pub fn from_spanning(vectors: Vec<SparseVec>, ambient: usize, field: Field) -> Self {
        let m = ExactMatrix::from_rows(vectors, ambient, field)
            .expect("spanning vectors exceed ambient dimension");
        let (basis, pivots) = m.rref();
        Subspace { ambient, field, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Reduce `v` modulo the basis; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for (row, pivot) in self.basis.iter().zip(&self.pivots) {
            if let Some(c) = v.get(*pivot) {
                let c = -c;
                v.add_scaled(row, &c);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Ok(Subspace::from_spanning(vectors, self.ambient, self.field))
    }

    /// Intersection, computed as the kernel of the stacked constraint
    /// systems of the two subspaces.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_compatible(other)?;
        let ca = self.constraints();
        let cb = other.constraints();
        Ok(ca.stack_vertical(&cb)?.kernel())
    }

    /// A matrix whose kernel is exactly this subspace.
    ///
    /// Rows are a basis of the annihilator `{c : c . v = 0 for all v}`.
    pub fn constraints(&self) -> ExactMatrix {
        let b = ExactMatrix::from_rows(self.basis.clone(), self.ambient, self.field)
            .expect("basis consistent with ambient");
        let ann = b.kernel();
        ExactMatrix::from_rows(ann.basis.clone(), self.ambient, self.field)
            .expect("annihilator consistent with ambient")
    }

    /// `{v ⊗ w}` span inside K^(self.ambient * other.ambient).
    pub fn tensor(&self, other: &Subspace) -> Subspace {
        let mut vectors = Vec::with_capacity(self.dim() * other.dim());
        for v in &self.basis {
            for w in &other.basis {
                vectors.push(v.tensor(w, other.ambient));
            }
        }
        Subspace::from_spanning(vectors, self.ambient * other.ambient, self.field)
    }

    fn check_compatible(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::DimensionMismatch(format!(
                "ambient {} vs {}",
                self.ambient, other.ambient
            )));
        }
        if self.field != other.field {
            return Err(LinAlgError::MixedFields);
        }
        Ok(())
    }
}

/// `{x : f(x) ∈ s}` where `f` maps K^(f.cols) into K^(f.rows) = ambient of `s`.
pub fn preimage(f: &ExactMatrix, s: &Subspace) -> Result<Subspace, LinAlgError> {
    if f.rows() != s.ambient() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "map into dimension {} but subspace ambient is {}",
            f.rows(),
            s.ambient()
        )));
    }
    if f.field() != s.field() {
        return Err(LinAlgError::MixedFields);
    }
    // f(x) ∈ s  ⟺  C_s f x = 0
    let c = s.constraints();
    Ok(c.mul(f)?.kernel())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    #[test]
    fn rank_examples() {
        assert_eq!(ExactMatrix::identity(2, q()).rank(), 2);
        assert_eq!(ExactMatrix::from_i64_rows(&[&[1, 1]], q()).rank(), 1);
        let f5 = Field::prime(5).unwrap();
        // second row is twice the first
        assert_eq!(ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 4]], f5).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 1]], q());
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        let mut v = SparseVec::new();
        v.set(0, q().one());
        v.set(1, q().from_i64(-1));
        assert!(k.contains(&v));

        let inv = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 4]], q());
        assert!(inv.kernel().is_zero());

        let z = ExactMatrix::zero(3, 3, q());
        assert_eq!(z.kernel().dim(), 3);
    }

    #[test]
    fn intersect_examples() {
        let e1 = Subspace::from_spanning(vec![SparseVec::unit(0, q())], 2, q());
        let e2 = Subspace::from_spanning(vec![SparseVec::unit(1, q())], 2, q());
        assert_eq!(e1.intersect(&e1).unwrap(), e1);
        assert!(e1.intersect(&e2).unwrap().is_zero());

        let a = Subspace::from_spanning(
            vec![SparseVec::unit(0, q()), SparseVec::unit(1, q())],
            3,
            q(),
        );
        let b = Subspace::from_spanning(
            vec![SparseVec::unit(1, q()), SparseVec::unit(2, q())],
            3,
            q(),
        );
        let meet = a.intersect(&b).unwrap();
        assert_eq!(meet, Subspace::from_spanning(vec![SparseVec::unit(1, q())], 3, q()));
    }

    #[test]
    fn intersect_rejects_ambient_mismatch() {
        let a = Subspace::full(2, q());
        let b = Subspace::full(3, q());
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn preimage_examples() {
        let f = ExactMatrix::from_i64_rows(&[&[1, 0], &[0, 1]], q());
        let s = Subspace::from_spanning(vec![SparseVec::unit(0, q())], 2, q());
        assert_eq!(preimage(&f, &s).unwrap(), s);

        let full = Subspace::full(2, q());
        assert!(preimage(&f, &full).unwrap().is_full());

        let zmap = ExactMatrix::zero(2, 3, q());
        let zs = Subspace::zero(2, q());
        assert!(preimage(&zmap, &zs).unwrap().is_full());

        let g = ExactMatrix::from_i64_rows(&[&[1, 1]], q());
        let t = Subspace::zero(1, q());
        let pre = preimage(&g, &t).unwrap();
        assert_eq!(pre, g.kernel());
    }

    #[test]
    fn matrix_vector_products() {
        let m = ExactMatrix::from_i64_rows(&[&[1, 2], &[3, 4]], q());
        let x = SparseVec::from_entries([(0, q().from_i64(1)), (1, q().from_i64(1))]);
        let y = m.apply(&x);
        assert_eq!(y.get(0), Some(&q().from_i64(3)));
        assert_eq!(y.get(1), Some(&q().from_i64(7)));

        let mt = m.transpose().transpose();
        assert_eq!(mt, m);
    }

    #[test]
    fn dense_and_sparse_paths_agree() {
        let m = ExactMatrix::from_i64_rows(&[&[2, 4, 1], &[1, 2, 3], &[3, 6, 4]], q());
        let (rs, ps) = rref_sparse(m.row_vectors(), 3, q());
        let (rd, pd) = rref_dense(m.row_vectors(), 3, q());
        assert_eq!(rs, rd);
        assert_eq!(ps, pd);
    }

    #[test]
    fn rref_idempotent() {
        let m = ExactMatrix::from_i64_rows(&[&[0, 2, 4], &[1, 1, 1], &[1, 3, 5]], q());
        let (rows, pivots) = m.rref();
        let again = ExactMatrix::from_rows(rows.clone(), 3, q()).unwrap();
        let (rows2, pivots2) = again.rref();
        assert_eq!(rows, rows2);
        assert_eq!(pivots, pivots2);
    }

    #[test]
    fn subspace_sum_and_constraints() {
        let e1 = Subspace::from_spanning(vec![SparseVec::unit(0, q())], 3, q());
        let e2 = Subspace::from_spanning(vec![SparseVec::unit(2, q())], 3, q());
        let s = e1.sum(&e2).unwrap();
        assert_eq!(s.dim(), 2);
        let c = s.constraints();
        assert_eq!(c.rank(), 1);
        assert_eq!(c.kernel(), s);
    }
}
