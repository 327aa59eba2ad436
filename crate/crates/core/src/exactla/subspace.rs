use super::field::Field;
use super::matrix::Matrix;

/// A linear subspace of `k^n`, stored as the rows of its reduced row echelon
/// form. The representation is canonical, so equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<K: Field> {
    field: K,
    ambient: usize,
    basis: Vec<Vec<K::Elem>>,
    pivots: Vec<usize>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(field: &K, ambient: usize) -> Self {
        Subspace { field: field.clone(), ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: &K, ambient: usize) -> Self {
        Self::from_rref(field, ambient, Matrix::identity(field, ambient).to_rows(), (0..ambient).collect())
    }

    pub fn span(field: &K, ambient: usize, vectors: Vec<Vec<K::Elem>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient));
        let (basis, pivots) = field.rref(vectors, ambient);
        Self::from_rref(field, ambient, basis, pivots)
    }

    fn from_rref(field: &K, ambient: usize, basis: Vec<Vec<K::Elem>>, pivots: Vec<usize>) -> Self {
        Subspace { field: field.clone(), ambient, basis, pivots }
    }

    pub fn field(&self) -> &K {
        &self.field
    }
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }
    pub fn basis(&self) -> &[Vec<K::Elem>] {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// `ambient x dim` matrix whose columns are the basis vectors.
    pub fn basis_columns(&self) -> Matrix<K> {
        Matrix::from_columns(&self.field, &self.basis, self.ambient)
    }

    /// Remainder of `v` after clearing the pivot coordinates.
    pub fn reduce(&self, v: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut out = v.to_vec();
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if k.is_zero(&out[c]) {
                continue;
            }
            let f = k.neg(&out[c]);
            for (o, x) in out.iter_mut().zip(row) {
                if !k.is_zero(x) {
                    *o = k.mul_add(o, &f, x);
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[K::Elem]) -> bool {
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[K::Elem]) -> Option<Vec<K::Elem>> {
        let c: Vec<K::Elem> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        self.contains(v).then_some(c)
    }

    /// Vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[K::Elem]) -> Vec<K::Elem> {
        let k = &self.field;
        let mut out = vec![k.zero(); self.ambient];
        for (c, row) in coords.iter().zip(&self.basis) {
            if k.is_zero(c) {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !k.is_zero(x) {
                    *o = k.mul_add(o, c, x);
                }
            }
        }
        out
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut v = self.basis.clone();
        v.extend(other.basis.iter().cloned());
        Self::span(&self.field, self.ambient, v)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        // x = sum a_i u_i = sum b_j w_j; solve for (a, -b) in the kernel.
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k, self.ambient);
        }
        let m = self.basis_columns().hstack(&other.basis_columns());
        let vectors = m
            .kernel()
            .basis()
            .iter()
            .map(|c| self.combine(&c[..self.dim()]))
            .collect();
        Self::span(k, self.ambient, vectors)
    }

    /// Adds `v` to the subspace; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[K::Elem]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut vecs = std::mem::take(&mut self.basis);
        vecs.push(v.to_vec());
        *self = Self::span(&self.field, self.ambient, vecs);
        true
    }

    /// `{x : <u, x> = 0 for all u in self}`.
    pub fn annihilator(&self) -> Self {
        Matrix::from_rows(&self.field, self.basis.clone(), self.ambient).kernel()
    }

    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    /// Image of this subspace under a linear map.
    pub fn map(&self, m: &Matrix<K>) -> Self {
        Self::span(&self.field, m.rows(), self.basis.iter().map(|v| m.mul_vec(v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::field::Rationals;

    fn v(xs: &[i64]) -> Vec<num_rational::BigRational> {
        xs.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn canonical_representation() {
        let a = Subspace::span(&Rationals, 3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(&Rationals, 3, vec![v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn join_and_intersect() {
        let x = Subspace::span(&Rationals, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let y = Subspace::span(&Rationals, 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert!(x.join(&y).is_full());
        let i = x.intersect(&y);
        assert_eq!(i, Subspace::span(&Rationals, 3, vec![v(&[0, 5, 0])]));
        assert_eq!(x.coordinates(&v(&[2, 3, 0])), Some(v(&[2, 3])));
        assert_eq!(x.coordinates(&v(&[2, 3, 1])), None);
    }
}
