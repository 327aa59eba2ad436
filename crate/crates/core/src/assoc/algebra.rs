use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cancel::{checkpoint, CancelToken};
use crate::error::{Error, Result};
use crate::exactla::{min_poly, quotient_map, rational_roots, Field, Matrix, Polynomial, Subspace};

type Sparse<E> = Vec<(usize, E)>;

struct Inner<K: Field> {
    field: K,
    dim: usize,
    labels: Vec<String>,
    /// `table[i * dim + j]` holds the nonzero coordinates of `e_i e_j`,
    /// sorted by index.
    table: Vec<Sparse<K::Elem>>,
    unit: OnceLock<Option<Vec<K::Elem>>>,
    left: OnceLock<Vec<Matrix<K>>>,
}

/// A finite-dimensional associative algebra given by structure constants.
///
/// Cloning is cheap; the table is shared.
#[derive(Clone)]
pub struct StructureAlgebra<K: Field> {
    inner: Arc<Inner<K>>,
}

impl<K: Field> PartialEq for StructureAlgebra<K> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.field == other.inner.field
                && self.inner.dim == other.inner.dim
                && self.inner.labels == other.inner.labels
                && self.inner.table == other.inner.table)
    }
}

impl<K: Field> Eq for StructureAlgebra<K> {}

impl<K: Field> fmt::Debug for StructureAlgebra<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StructureAlgebra")
            .field("field", &self.inner.field.descriptor())
            .field("dim", &self.inner.dim)
            .field("labels", &self.inner.labels)
            .finish()
    }
}

pub fn default_labels(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

impl<K: Field> StructureAlgebra<K> {
    /// Builds an algebra from sparse products. Does not check associativity.
    pub fn from_sparse(field: &K, labels: Vec<String>, mut table: Vec<Sparse<K::Elem>>) -> Result<Self> {
        let dim = labels.len();
        if table.len() != dim * dim {
            return Err(Error::DimensionMismatch(format!(
                "product table has {} entries for dimension {dim}",
                table.len()
            )));
        }
        for entry in table.iter_mut() {
            entry.retain(|(_, c)| !field.is_zero(c));
            entry.sort_by_key(|(i, _)| *i);
            if entry.iter().any(|(i, _)| *i >= dim) || entry.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::InvalidInput("bad index in product table".into()));
            }
        }
        Ok(StructureAlgebra {
            inner: Arc::new(Inner {
                field: field.clone(),
                dim,
                labels,
                table,
                unit: OnceLock::new(),
                left: OnceLock::new(),
            }),
        })
    }

    /// `f(i, j)` returns the coordinates of `e_i e_j`.
    pub fn from_fn(field: &K, labels: Vec<String>, mut f: impl FnMut(usize, usize) -> Vec<K::Elem>) -> Self {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                debug_assert_eq!(v.len(), n);
                table.push(sparse(field, &v));
            }
        }
        Self::from_sparse(field, labels, table).expect("well-formed table")
    }

    /// From a `(dim*dim) x dim` matrix whose row `i*dim + j` holds `e_i e_j`.
    pub fn from_mult_tensor(field: &K, labels: Vec<String>, mult: &Matrix<K>) -> Result<Self> {
        let n = labels.len();
        if mult.rows() != n * n || mult.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor is {}x{}, expected {}x{n}",
                mult.rows(),
                mult.cols(),
                n * n
            )));
        }
        Ok(Self::from_fn(field, labels, |i, j| mult.row(i * n + j).to_vec()))
    }

    pub fn field(&self) -> &K {
        &self.inner.field
    }
    pub fn dim(&self) -> usize {
        self.inner.dim
    }
    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim());
        Self::from_sparse(self.field(), labels, self.inner.table.clone()).expect("same table")
    }

    /// Nonzero coordinates of `e_i e_j`.
    pub fn product_entry(&self, i: usize, j: usize) -> &[(usize, K::Elem)] {
        &self.inner.table[i * self.dim() + j]
    }

    pub fn mult_tensor(&self) -> Matrix<K> {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field(), n * n, n);
        for (r, entry) in self.inner.table.iter().enumerate() {
            for (k, c) in entry {
                m.set(r, *k, c.clone());
            }
        }
        m
    }

    pub fn zero(&self) -> Vec<K::Elem> {
        vec![self.field().zero(); self.dim()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<K::Elem> {
        let mut v = self.zero();
        v[i] = self.field().one();
        v
    }

    pub fn mul(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.field();
        let n = self.dim();
        let mut out = self.zero();
        for (i, a) in x.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if k.is_zero(b) {
                    continue;
                }
                let ab = k.mul(a, b);
                for (l, c) in &self.inner.table[i * n + j] {
                    out[*l] = k.mul_add(&out[*l], &ab, c);
                }
            }
        }
        out
    }

    /// Product in `self (x) other`, coordinates at `i * other.dim() + j`.
    pub fn tensor_mul(&self, other: &Self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.field();
        let (n, m) = (self.dim(), other.dim());
        let mut out = vec![k.zero(); n * m];
        let nz = |v: &[K::Elem]| -> Vec<(usize, usize, K::Elem)> {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !k.is_zero(c))
                .map(|(idx, c)| (idx / m, idx % m, c.clone()))
                .collect()
        };
        let (xs, ys) = (nz(x), nz(y));
        for (i, a, c) in &xs {
            for (j, b, d) in &ys {
                let cd = k.mul(c, d);
                for (l, u) in self.product_entry(*i, *j) {
                    let cdu = k.mul(&cd, u);
                    for (r, w) in other.product_entry(*a, *b) {
                        out[l * m + r] = k.mul_add(&out[l * m + r], &cdu, w);
                    }
                }
            }
        }
        out
    }

    /// Matrices of left multiplication by the basis elements.
    pub fn left_regular(&self) -> &[Matrix<K>] {
        self.inner.left.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|i| {
                    let mut m = Matrix::zeros(self.field(), n, n);
                    for j in 0..n {
                        for (l, c) in self.product_entry(i, j) {
                            m.set(*l, j, c.clone());
                        }
                    }
                    m
                })
                .collect()
        })
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[K::Elem]) -> Matrix<K> {
        combine_matrices(self.field(), self.left_regular(), x, self.dim(), self.dim())
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[K::Elem]) -> Matrix<K> {
        let n = self.dim();
        let cols: Vec<Vec<K::Elem>> = (0..n).map(|j| self.mul(&self.basis_vector(j), x)).collect();
        Matrix::from_columns(self.field(), &cols, n)
    }

    /// First failing basis triple `(i, j, l)` of `(e_i e_j) e_l = e_i (e_j e_l)`.
    pub fn check_associative(&self, cancel: Option<&CancelToken>) -> Result<Option<(usize, usize, usize)>> {
        let k = self.field();
        let n = self.dim();
        let mut lhs = self.zero();
        let mut rhs = self.zero();
        for i in 0..n {
            checkpoint(cancel)?;
            for j in 0..n {
                let ij = self.product_entry(i, j);
                for l in 0..n {
                    lhs.iter_mut().chain(rhs.iter_mut()).for_each(|x| *x = k.zero());
                    for (m, c) in ij {
                        for (t, d) in self.product_entry(*m, l) {
                            lhs[*t] = k.mul_add(&lhs[*t], c, d);
                        }
                    }
                    for (m, c) in self.product_entry(j, l) {
                        for (t, d) in self.product_entry(i, *m) {
                            rhs[*t] = k.mul_add(&rhs[*t], c, d);
                        }
                    }
                    if lhs != rhs {
                        return Ok(Some((i, j, l)));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn is_associative(&self) -> bool {
        matches!(self.check_associative(None), Ok(None))
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.product_entry(i, j) == self.product_entry(j, i)))
    }

    /// The two-sided unit, if there is one.
    pub fn find_unit(&self) -> Option<Vec<K::Elem>> {
        self.inner
            .unit
            .get_or_init(|| {
                let k = self.field();
                let n = self.dim();
                if n == 0 {
                    return Some(Vec::new());
                }
                // u e_i = e_i and e_i u = e_i, linear in the coordinates of u.
                let mut m = Matrix::zeros(k, 2 * n * n, n);
                let mut b = Matrix::zeros(k, 2 * n * n, 1);
                for i in 0..n {
                    for u in 0..n {
                        for (l, c) in self.product_entry(u, i) {
                            m.set(i * n + l, u, c.clone());
                        }
                        for (l, c) in self.product_entry(i, u) {
                            m.set(n * n + i * n + l, u, c.clone());
                        }
                    }
                    b.set(i * n + i, 0, k.one());
                    b.set(n * n + i * n + i, 0, k.one());
                }
                m.solve(&b).expect("same field").map(|x| x.column(0))
            })
            .clone()
    }

    /// In finite dimension an algebra has local units exactly when it is
    /// unital: the local unit for the whole basis is a unit.
    pub fn has_local_units(&self) -> bool {
        self.find_unit().is_some()
    }

    pub fn unit(&self) -> Result<Vec<K::Elem>> {
        self.find_unit().ok_or(Error::NotUnital)
    }

    pub fn center(&self) -> Subspace<K> {
        let k = self.field();
        let n = self.dim();
        let mut m = Matrix::zeros(k, n * n, n);
        for i in 0..n {
            for z in 0..n {
                for (l, c) in self.product_entry(z, i) {
                    m.add_at(i * n + l, z, c);
                }
                for (l, c) in self.product_entry(i, z) {
                    m.add_at(i * n + l, z, &k.neg(c));
                }
            }
        }
        m.kernel()
    }

    /// Span of all products `x y` with `x` in `a`, `y` in `b`.
    pub fn product_space(&self, a: &Subspace<K>, b: &Subspace<K>) -> Subspace<K> {
        let mut vecs = Vec::with_capacity(a.dim() * b.dim());
        for x in a.basis() {
            for y in b.basis() {
                vecs.push(self.mul(x, y));
            }
        }
        Subspace::span(self.field(), self.dim(), vecs)
    }

    /// Smallest two-sided ideal containing `s`.
    pub fn ideal_generated(&self, s: &Subspace<K>) -> Subspace<K> {
        let full = Subspace::full(self.field(), self.dim());
        let mut cur = s.clone();
        loop {
            let next = cur.join(&self.product_space(&full, &cur)).join(&self.product_space(&cur, &full));
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_two_sided_ideal(&self, s: &Subspace<K>) -> bool {
        let full = Subspace::full(self.field(), self.dim());
        self.product_space(&full, s).is_subspace_of(s) && self.product_space(s, &full).is_subspace_of(s)
    }

    /// The algebra structure on a subspace closed under multiplication,
    /// on its echelon basis, with the `dim x sub.dim()` embedding matrix.
    pub fn subalgebra(&self, sub: &Subspace<K>, labels: Vec<String>) -> Result<(Self, Matrix<K>)> {
        let b = sub.basis();
        let m = b.len();
        let mut table = Vec::with_capacity(m * m);
        for x in b {
            for y in b {
                let c = sub
                    .coordinates(&self.mul(x, y))
                    .ok_or_else(|| Error::InvalidInput("subspace is not closed under multiplication".into()))?;
                table.push(sparse(self.field(), &c));
            }
        }
        Ok((Self::from_sparse(self.field(), labels, table)?, sub.basis_columns()))
    }

    /// `A / I` for a two-sided ideal, with the projection matrix.
    pub fn quotient(&self, ideal: &Subspace<K>) -> Result<(Self, Matrix<K>)> {
        if !self.is_two_sided_ideal(ideal) {
            return Err(Error::InvalidInput("not a two-sided ideal".into()));
        }
        let (pi, s) = quotient_map(self.dim(), ideal)?;
        let q = pi.rows();
        let sec = s.columns();
        let alg = Self::from_fn(self.field(), default_labels("q", q), |i, j| {
            pi.mul_vec(&self.mul(&sec[i], &sec[j]))
        });
        Ok((alg, pi))
    }

    pub fn opposite(&self) -> Self {
        Self::from_fn(self.field(), self.labels().to_vec(), |i, j| {
            self.mul(&self.basis_vector(j), &self.basis_vector(i))
        })
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.labels().to_vec();
        labels.extend(other.labels().iter().cloned());
        let k = self.field();
        let mut table = Vec::with_capacity((n + m) * (n + m));
        for i in 0..n + m {
            for j in 0..n + m {
                let entry = if i < n && j < n {
                    self.product_entry(i, j).to_vec()
                } else if i >= n && j >= n {
                    other.product_entry(i - n, j - n).iter().map(|(l, c)| (l + n, c.clone())).collect()
                } else {
                    Vec::new()
                };
                table.push(entry);
            }
        }
        Self::from_sparse(k, labels, table).expect("well-formed table")
    }

    /// Minimal polynomial of an element, through its left-regular matrix.
    /// Faithful for unital algebras.
    pub fn element_min_poly(&self, x: &[K::Elem]) -> Polynomial<K> {
        min_poly(&self.left_mult(x)).expect("square")
    }

    /// `f(x)` for a polynomial `f`; needs a unit for the constant term.
    pub fn eval_poly(&self, f: &Polynomial<K>, x: &[K::Elem]) -> Result<Vec<K::Elem>> {
        let one = self.unit()?;
        Ok(f.eval_matrix(&self.left_mult(x)).mul_vec(&one))
    }

    pub fn is_idempotent(&self, e: &[K::Elem]) -> bool {
        self.mul(e, e) == e
    }

    /// Jacobson radical.
    ///
    /// In characteristic zero, and whenever the characteristic exceeds the
    /// dimension, this is the kernel of the trace form of the left-regular
    /// representation. Otherwise the trace form is replaced by the sequence
    /// of functionals `g_i(a) = (Tr(L(a)^(p^i)) mod p^(i+1)) / p^i` on
    /// integer lifts, each cutting down the previous ideal.
    pub fn radical(&self) -> Result<Subspace<K>> {
        self.unit()?;
        let k = self.field();
        let n = self.dim();
        let p = k.characteristic();
        let traces: Vec<K::Elem> = self.left_regular().iter().map(|m| m.trace()).collect();
        let trace_form = |i: usize, j: usize| {
            self.product_entry(i, j).iter().fold(k.zero(), |acc, (l, c)| k.mul_add(&acc, c, &traces[*l]))
        };
        if p == 0 || p as usize > n {
            let t = Matrix::from_fn(k, n, n, trace_form);
            return Ok(t.kernel());
        }
        let mut levels = 0u32;
        while (p as u128).pow(levels + 1) <= n as u128 {
            levels += 1;
        }
        let mut ideal = Subspace::full(k, n);
        for i in 0..=levels {
            if ideal.is_zero() {
                break;
            }
            let b = ideal.basis().to_vec();
            // Row j, column c: g_i(b_c e_j).
            let mut m = Matrix::zeros(k, n, b.len());
            for (c, bc) in b.iter().enumerate() {
                for j in 0..n {
                    let prod = self.mul(bc, &self.basis_vector(j));
                    let g = self.lifted_trace_functional(&prod, p, i);
                    m.set(j, c, k.from_i64(g as i64));
                }
            }
            let coeffs = m.kernel();
            let vecs = coeffs.basis().iter().map(|c| ideal.combine(c)).collect();
            ideal = Subspace::span(k, n, vecs);
        }
        Ok(ideal)
    }

    /// `(Tr(L~^(p^i)) mod p^(i+1)) / p^i` for the entrywise lift `L~` of the
    /// left-regular matrix of `a` to `[0, p)`.
    fn lifted_trace_functional(&self, a: &[K::Elem], p: u64, i: u32) -> u64 {
        let k = self.field();
        let n = self.dim();
        let modulus = (p as u128).pow(i + 1);
        let l = self.left_mult(a);
        let lift = |x: &K::Elem| -> u128 { k.to_residue(x).expect("prime field") as u128 };
        let mut m: Vec<u128> = (0..n * n).map(|idx| lift(l.get(idx / n, idx % n))).collect();
        let matmul = |x: &[u128], y: &[u128]| -> Vec<u128> {
            let mut out = vec![0u128; n * n];
            for r in 0..n {
                for s in 0..n {
                    let a = x[r * n + s];
                    if a == 0 {
                        continue;
                    }
                    for c in 0..n {
                        out[r * n + c] = (out[r * n + c] + a * y[s * n + c]) % modulus;
                    }
                }
            }
            out
        };
        for _ in 0..i {
            // m <- m^p
            let mut acc: Option<Vec<u128>> = None;
            let mut base = m.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = Some(match acc {
                        None => base.clone(),
                        Some(a) => matmul(&a, &base),
                    });
                }
                e >>= 1;
                if e > 0 {
                    base = matmul(&base, &base);
                }
            }
            m = acc.expect("p >= 2");
        }
        let tr = (0..n).fold(0u128, |acc, r| (acc + m[r * n + r]) % modulus);
        let pi = (p as u128).pow(i);
        debug_assert_eq!(tr % pi, 0, "trace functional not divisible by p^i");
        ((tr / pi) % p as u128) as u64
    }

    pub fn is_semisimple(&self) -> Result<bool> {
        Ok(self.radical()?.is_zero())
    }

    /// Complete set of primitive orthogonal idempotents of a commutative
    /// algebra isomorphic to `k^n`, found by splitting along the eigenvalues
    /// of the basis elements.
    pub fn primitive_idempotents_split_commutative(&self) -> Result<Vec<Vec<K::Elem>>> {
        if !self.is_commutative() {
            return Err(Error::InvalidInput("algebra is not commutative".into()));
        }
        let one = self.unit()?;
        let k = self.field();
        let mut idems = vec![one];
        for b in 0..self.dim() {
            let x = self.basis_vector(b);
            let m = self.element_min_poly(&x);
            let roots = rational_roots(&m)?;
            if roots.len() < m.degree().unwrap_or(0) {
                let g = m.gcd(&m.derivative());
                if g.degree().unwrap_or(0) > 0 {
                    return Err(Error::NotSemisimple);
                }
                return Err(Error::NotSplit);
            }
            if roots.len() <= 1 {
                continue;
            }
            // Lagrange idempotents E_r = prod_{s != r} (x - s) / (r - s).
            let mut eigen = Vec::with_capacity(roots.len());
            for (ri, r) in roots.iter().enumerate() {
                let mut f = Polynomial::one(k);
                for (si, s) in roots.iter().enumerate() {
                    if si != ri {
                        let d = k.inv(&k.sub(r, s)).expect("distinct roots");
                        f = f.mul(&Polynomial::linear(k, s)).scale(&d);
                    }
                }
                eigen.push(self.eval_poly(&f, &x)?);
            }
            let mut next = Vec::new();
            for e in &idems {
                for f in &eigen {
                    let ef = self.mul(e, f);
                    if ef.iter().any(|c| !k.is_zero(c)) {
                        next.push(ef);
                    }
                }
            }
            idems = next;
        }
        idems.sort();
        Ok(idems)
    }
}

pub(crate) fn sparse<K: Field>(k: &K, v: &[K::Elem]) -> Sparse<K::Elem> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !k.is_zero(c))
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// `sum_i x_i mats[i]`.
pub(crate) fn combine_matrices<K: Field>(k: &K, mats: &[Matrix<K>], x: &[K::Elem], rows: usize, cols: usize) -> Matrix<K> {
    let mut out = Matrix::zeros(k, rows, cols);
    for (m, c) in mats.iter().zip(x) {
        if !k.is_zero(c) {
            out = out.add(&m.scale(c));
        }
    }
    out
}
