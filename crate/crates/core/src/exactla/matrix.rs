use std::fmt;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense matrix over an exact field, stored row-major.
///
/// Linear maps act on column vectors: the image of the `j`-th basis vector
/// is column `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<K: Field> {
    field: K,
    rows: usize,
    cols: usize,
    data: Vec<K::Elem>,
}

impl<K: Field> fmt::Debug for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field.descriptor())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| self.field.format_elem(x)).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<K: Field> Matrix<K> {
    pub fn zeros(field: &K, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &K, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_fn(field: &K, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field: field.clone(), rows, cols, data }
    }

    /// Panics if the rows have unequal length.
    pub fn from_rows(field: &K, rows: Vec<Vec<K::Elem>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        Matrix { field: field.clone(), rows: n, cols, data }
    }

    pub fn from_columns(field: &K, columns: &[Vec<K::Elem>], rows: usize) -> Self {
        let cols = columns.len();
        Self::from_fn(field, rows, cols, |i, j| columns[j][i].clone())
    }

    pub fn from_i64(field: &K, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn column_vector(field: &K, v: &[K::Elem]) -> Self {
        Self::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &K::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: K::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &K::Elem) {
        let idx = i * self.cols + j;
        self.data[idx] = self.field.add(&self.data[idx], v);
    }

    pub fn row(&self, i: usize) -> &[K::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<K::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<K::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<K::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[K::Elem]) {
        for (i, x) in v.iter().enumerate() {
            self.set(i, j, x.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(&self.field, self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let k = &self.field;
        let mut out = Self::zeros(k, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if k.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !k.is_zero(b) {
                        let idx = i * out.cols + j;
                        out.data[idx] = k.mul_add(&out.data[idx], a, b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        let k = &self.field;
        let mut out = vec![k.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !k.is_zero(a) {
                    *o = k.mul_add(o, a, x);
                }
            }
        }
        out
    }

    /// `(M (x) id_q) v` for `v` in `k^cols (x) k^q`.
    pub fn apply_left_leg(&self, v: &[K::Elem], q: usize) -> Vec<K::Elem> {
        assert_eq!(self.cols * q, v.len(), "tensor leg dimension mismatch");
        let k = &self.field;
        let mut out = vec![k.zero(); self.rows * q];
        for (idx, x) in v.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            let (j, t) = (idx / q, idx % q);
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !k.is_zero(a) {
                    out[i * q + t] = k.mul_add(&out[i * q + t], a, x);
                }
            }
        }
        out
    }

    /// `(id_n (x) M) v` for `v` in `k^n (x) k^cols`.
    pub fn apply_right_leg(&self, v: &[K::Elem], n: usize) -> Vec<K::Elem> {
        assert_eq!(n * self.cols, v.len(), "tensor leg dimension mismatch");
        let k = &self.field;
        let mut out = vec![k.zero(); n * self.rows];
        for (idx, x) in v.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            let (s, j) = (idx / self.cols, idx % self.cols);
            for i in 0..self.rows {
                let a = self.get(i, j);
                if !k.is_zero(a) {
                    let o = s * self.rows + i;
                    out[o] = k.mul_add(&out[o], a, x);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        assert_eq!(self.rows, v.len(), "vector-matrix dimension mismatch");
        let k = &self.field;
        let mut out = vec![k.zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let a = self.get(i, j);
                if !k.is_zero(a) {
                    *o = k.mul_add(o, x, a);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols, "matrix sum shape mismatch");
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.add(a, b)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols, "matrix difference shape mismatch");
        let k = &self.field;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| k.sub(a, b)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let k = &self.field;
        let data = self.data.iter().map(|a| k.mul(a, c)).collect();
        Matrix { field: k.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> K::Elem {
        assert!(self.is_square());
        let k = &self.field;
        (0..self.rows).fold(k.zero(), |acc, i| k.add(&acc, self.get(i, i)))
    }

    /// Kronecker product; `e_i (x) f_j` sits at index `i * dim(W) + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let k = &self.field;
        let (r2, c2) = (other.rows, other.cols);
        Self::from_fn(k, self.rows * r2, self.cols * c2, |i, j| {
            k.mul(self.get(i / r2, j / c2), other.get(i % r2, j % c2))
        })
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Self::from_fn(&self.field, rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Reduced row echelon form (zero rows dropped) and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let (rows, pivots) = self.field.rref(self.to_rows(), self.cols);
        (Self::from_rows(&self.field, rows, self.cols), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of `{x : M x = 0}`.
    pub fn kernel(&self) -> Subspace<K> {
        let k = &self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![k.zero(); self.cols];
            v[f] = k.one();
            for (ri, &c) in pivots.iter().enumerate() {
                v[c] = k.neg(r.get(ri, f));
            }
            basis.push(v);
        }
        Subspace::span(k, self.cols, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace<K> {
        Subspace::span(&self.field, self.rows, self.columns())
    }

    /// Some `X` with `M X = b`, free variables set to zero; `None` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        if self.field != b.field {
            return Err(Error::FieldMismatch);
        }
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: matrix has {} rows, right-hand side {}",
                self.rows, b.rows
            )));
        }
        let k = &self.field;
        let n = self.cols;
        let (r, pivots) = self.hstack(b).rref();
        if pivots.last().is_some_and(|&c| c >= n) {
            return Ok(None);
        }
        let mut x = Self::zeros(k, n, b.cols);
        for (ri, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, r.get(ri, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        self.solve(&Self::identity(&self.field, self.rows)).ok().flatten()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }
}

/// Kronecker product of two matrices; see [`Matrix::kron`].
pub fn tensor<K: Field>(m: &Matrix<K>, n: &Matrix<K>) -> Result<Matrix<K>> {
    if m.field() != n.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(m.kron(n))
}

/// See [`Matrix::solve`].
pub fn solve<K: Field>(m: &Matrix<K>, b: &Matrix<K>) -> Result<Option<Matrix<K>>> {
    m.solve(b)
}

/// See [`Matrix::kernel`].
pub fn kernel<K: Field>(m: &Matrix<K>) -> Subspace<K> {
    m.kernel()
}

/// Projection onto `k^n / relations` and a section of it.
///
/// The quotient basis is given by the non-pivot coordinates of the
/// relations' echelon form: `s` maps the `r`-th quotient basis vector to the
/// standard vector at the `r`-th non-pivot coordinate, and `pi` reduces a
/// vector modulo the relations before reading off those coordinates.
pub fn quotient_map<K: Field>(ambient_dim: usize, relations: &Subspace<K>) -> Result<(Matrix<K>, Matrix<K>)> {
    if relations.ambient_dim() != ambient_dim {
        return Err(Error::DimensionMismatch(format!(
            "relations live in dimension {}, expected {ambient_dim}",
            relations.ambient_dim()
        )));
    }
    let k = relations.field();
    let free = relations.non_pivots();
    let q = free.len();
    let mut pi = Matrix::zeros(k, q, ambient_dim);
    let mut s = Matrix::zeros(k, ambient_dim, q);
    let mut pos = vec![usize::MAX; ambient_dim];
    for (r, &c) in free.iter().enumerate() {
        pos[c] = r;
        pi.set(r, c, k.one());
        s.set(c, r, k.one());
    }
    for (row, &pc) in relations.basis().iter().zip(relations.pivots()) {
        for (c, x) in row.iter().enumerate() {
            if pos[c] != usize::MAX && !k.is_zero(x) {
                pi.set(pos[c], pc, k.neg(x));
            }
        }
    }
    Ok((pi, s))
}
