use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{combine_matrices, default_labels, StructureAlgebra};
use crate::cancel::{checkpoint, CancelToken};
use crate::error::{Error, Result};
use crate::exactla::{char_poly, factor_over_prime_field, rational_roots, Field, Matrix, Polynomial, ScalarField, Subspace};

/// Knobs for the randomized searches in module decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Number of random endomorphisms (over the rationals) or random algebra
    /// elements tried before giving up.
    pub split_search_budget: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seed: 0, split_search_budget: 200 }
    }
}

impl SearchConfig {
    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A left module over a structure algebra, given by the matrices of the
/// basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgModule<K: Field> {
    algebra: StructureAlgebra<K>,
    dim: usize,
    action: Vec<Matrix<K>>,
}

/// A simple summand of a module: its image in the ambient coordinates and
/// the restricted module on the echelon basis of that image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand<K: Field> {
    pub subspace: Subspace<K>,
    pub module: AlgModule<K>,
    /// Columns are the echelon basis of `subspace`.
    pub embedding: Matrix<K>,
}

impl<K: Field> AlgModule<K> {
    pub fn new(algebra: &StructureAlgebra<K>, dim: usize, action: Vec<Matrix<K>>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!("action matrices must be {dim}x{dim}")));
        }
        Ok(AlgModule { algebra: algebra.clone(), dim, action })
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: &StructureAlgebra<K>) -> Self {
        AlgModule { algebra: algebra.clone(), dim: algebra.dim(), action: algebra.left_regular().to_vec() }
    }

    pub fn algebra(&self) -> &StructureAlgebra<K> {
        &self.algebra
    }
    pub fn field(&self) -> &K {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn action(&self) -> &[Matrix<K>] {
        &self.action
    }

    /// Matrix of an algebra element.
    pub fn rho(&self, x: &[K::Elem]) -> Matrix<K> {
        combine_matrices(self.field(), &self.action, x, self.dim, self.dim)
    }

    /// Checks `rho(e_i) rho(e_j) = rho(e_i e_j)` and, if the algebra has a
    /// unit, that it acts as the identity.
    pub fn check(&self, cancel: Option<&CancelToken>) -> Result<()> {
        let n = self.algebra.dim();
        for i in 0..n {
            checkpoint(cancel)?;
            for j in 0..n {
                let lhs = self.action[i].mul(&self.action[j]);
                let prod = self.algebra.mul(&self.algebra.basis_vector(i), &self.algebra.basis_vector(j));
                if lhs != self.rho(&prod) {
                    return Err(Error::AxiomViolation(format!(
                        "module action is not multiplicative at ({}, {})",
                        self.algebra.labels()[i],
                        self.algebra.labels()[j]
                    )));
                }
            }
        }
        if let Some(u) = self.algebra.find_unit() {
            if !self.rho(&u).is_identity() {
                return Err(Error::AxiomViolation("unit does not act as the identity".into()));
            }
        }
        Ok(())
    }

    /// Smallest submodule containing `v`.
    pub fn spin(&self, v: &[K::Elem]) -> Subspace<K> {
        spin_with(self.field(), &self.action, v)
    }

    /// Spin of a row vector under the transposed action.
    pub fn dual_spin(&self, u: &[K::Elem]) -> Subspace<K> {
        let t: Vec<Matrix<K>> = self.action.iter().map(Matrix::transpose).collect();
        spin_with(self.field(), &t, u)
    }

    pub fn is_submodule(&self, w: &Subspace<K>) -> bool {
        w.basis().iter().all(|b| self.action.iter().all(|m| w.contains(&m.mul_vec(b))))
    }

    /// The restriction to an invariant subspace, on its echelon basis.
    pub fn submodule(&self, w: &Subspace<K>) -> Result<Self> {
        let mut action = Vec::with_capacity(self.action.len());
        for m in &self.action {
            let cols = w
                .basis()
                .iter()
                .map(|b| {
                    w.coordinates(&m.mul_vec(b))
                        .ok_or_else(|| Error::InvalidInput("subspace is not a submodule".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            action.push(Matrix::from_columns(self.field(), &cols, w.dim()));
        }
        Self::new(&self.algebra, w.dim(), action)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidInput("modules over different algebras".into()));
        }
        let (a, b) = (self.dim, other.dim);
        let k = self.field();
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(x, y)| {
                Matrix::from_fn(k, a + b, a + b, |i, j| match (i < a, j < a) {
                    (true, true) => x.get(i, j).clone(),
                    (false, false) => y.get(i - a, j - a).clone(),
                    _ => k.zero(),
                })
            })
            .collect();
        Self::new(&self.algebra, a + b, action)
    }

    /// Basis of `Hom_A(self, other)` as `other.dim x self.dim` matrices, in
    /// canonical (echelon) form.
    ///
    /// A module map is determined by the images of a generating set; the
    /// images must satisfy every linear relation among the spanning vectors
    /// `g_i, e_b g_i`.
    pub fn hom_space(&self, other: &Self) -> Result<Vec<Matrix<K>>> {
        if self.algebra != other.algebra {
            return Err(Error::InvalidInput("modules over different algebras".into()));
        }
        let k = self.field();
        let (dv, dw) = (self.dim, other.dim);
        if dv == 0 || dw == 0 {
            return Ok(Vec::new());
        }
        let gens = self.generators();
        let nb = self.action.len() + 1;
        let s = gens.len();
        // Column (i, b): e_b g_i, with b = 0 standing for g_i itself.
        let mut span_cols = Vec::with_capacity(s * nb);
        for g in &gens {
            span_cols.push(g.clone());
            for m in &self.action {
                span_cols.push(m.mul_vec(g));
            }
        }
        let span = Matrix::from_columns(k, &span_cols, dv);
        let relations = span.kernel();
        let w_action = |b: usize| -> Option<&Matrix<K>> { (b > 0).then(|| &other.action[b - 1]) };
        let mut eq = Matrix::zeros(k, relations.dim().max(1) * dw, s * dw);
        for (ri, r) in relations.basis().iter().enumerate() {
            for i in 0..s {
                for b in 0..nb {
                    let c = &r[i * nb + b];
                    if k.is_zero(c) {
                        continue;
                    }
                    match w_action(b) {
                        None => {
                            for t in 0..dw {
                                eq.add_at(ri * dw + t, i * dw + t, c);
                            }
                        }
                        Some(m) => {
                            for t in 0..dw {
                                for u in 0..dw {
                                    let x = m.get(t, u);
                                    if !k.is_zero(x) {
                                        eq.add_at(ri * dw + t, i * dw + u, &k.mul(c, x));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        let sols = eq.kernel();
        let (_, pivots) = span.rref();
        let p = span.select_columns(&pivots);
        let p_inv = p.inverse().expect("pivot columns form a basis");
        let mut homs = Vec::with_capacity(sols.dim());
        for sol in sols.basis() {
            let images: Vec<Vec<K::Elem>> = pivots
                .iter()
                .map(|&col| {
                    let (i, b) = (col / nb, col % nb);
                    let w = &sol[i * dw..(i + 1) * dw];
                    match w_action(b) {
                        None => w.to_vec(),
                        Some(m) => m.mul_vec(w),
                    }
                })
                .collect();
            homs.push(Matrix::from_columns(k, &images, dw).mul(&p_inv));
        }
        Ok(canonical_matrix_basis(k, &homs, dw, dv))
    }

    /// Greedy generating set: random vectors, each outside the submodule
    /// spanned so far.
    fn generators(&self) -> Vec<Vec<K::Elem>> {
        let k = self.field();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let mut gens = Vec::new();
        let mut cur = Subspace::zero(k, self.dim);
        let mut misses = 0;
        while cur.dim() < self.dim {
            let v: Vec<K::Elem> = if misses < 4 {
                (0..self.dim).map(|_| k.random_elem(&mut rng)).collect()
            } else {
                let c = cur.non_pivots()[0];
                let mut e = vec![k.zero(); self.dim];
                e[c] = k.one();
                e
            };
            if cur.contains(&v) {
                misses += 1;
                continue;
            }
            let spun = self.spin(&v);
            cur = cur.join(&spun);
            gens.push(v);
            misses = 0;
        }
        gens
    }

    /// Basis matrices of the endomorphism algebra.
    pub fn endomorphism_basis(&self) -> Result<Vec<Matrix<K>>> {
        self.hom_space(self)
    }

    /// The endomorphism algebra with composition as product, on the
    /// canonical basis returned alongside it.
    pub fn endomorphism_algebra(&self) -> Result<(StructureAlgebra<K>, Vec<Matrix<K>>)> {
        let k = self.field();
        let basis = self.endomorphism_basis()?;
        let d = self.dim;
        let m = basis.len();
        // Echelon basis of the flattened matrices: coordinates are the entries
        // at the pivot positions.
        let flat: Vec<Vec<K::Elem>> = basis.iter().map(flatten).collect();
        let sub = Subspace::span(k, d * d, flat);
        let pivots = sub.pivots().to_vec();
        let alg = StructureAlgebra::from_fn(k, default_labels("T", m), |a, b| {
            pivots
                .iter()
                .map(|&p| {
                    let (r, c) = (p / d, p % d);
                    (0..d).fold(k.zero(), |acc, l| k.mul_add(&acc, basis[a].get(r, l), basis[b].get(l, c)))
                })
                .collect()
        });
        Ok((alg, basis))
    }

    /// Certified simplicity test.
    ///
    /// Over a prime field this is the meataxe. Over the rationals a Norton
    /// test with rational eigenvalues is tried first; if the algebra is
    /// semisimple the endomorphism algebra settles the remaining cases where
    /// possible, and otherwise the result is `Undetermined`.
    pub fn is_simple(&self, cfg: &SearchConfig) -> Result<bool> {
        if self.dim == 0 {
            return Err(Error::ZeroModule);
        }
        if self.dim == 1 {
            return Ok(true);
        }
        let mut rng = cfg.rng();
        match self.field().descriptor() {
            ScalarField::PrimeField(_) => Ok(self.meataxe_split(&mut rng, cfg)?.is_none()),
            ScalarField::Rationals => {
                let k = self.field();
                for i in 0..self.dim {
                    let mut e = vec![k.zero(); self.dim];
                    e[i] = k.one();
                    if self.spin(&e).dim() < self.dim || self.dual_spin(&e).dim() < self.dim {
                        return Ok(false);
                    }
                }
                if let Some(found) = self.rational_norton(&mut rng, cfg)? {
                    return Ok(found.is_none());
                }
                if self.algebra.is_semisimple()? {
                    return Ok(self.endomorphism_split(&mut rng, cfg)?.is_none());
                }
                Err(Error::Undetermined("no rational Norton witness found".into()))
            }
        }
    }

    /// Simple with one-dimensional endomorphism algebra.
    pub fn is_absolutely_simple(&self, cfg: &SearchConfig) -> Result<bool> {
        Ok(self.is_simple(cfg)? && self.endomorphism_basis()?.len() == 1)
    }

    /// A proper nonzero submodule, or `None` when the module is simple.
    /// Assumes a semisimple module over the rationals.
    pub fn find_proper_submodule(&self, cfg: &SearchConfig) -> Result<Option<Subspace<K>>> {
        let mut rng = cfg.rng();
        Ok(self.proper_submodule(&mut rng, cfg)?.map(|s| s.0))
    }

    /// Returns a proper submodule and, when the split came from a Fitting
    /// decomposition, a complementary submodule.
    fn proper_submodule(&self, rng: &mut ChaCha8Rng, cfg: &SearchConfig) -> Result<Option<(Subspace<K>, Option<Subspace<K>>)>> {
        if self.dim == 0 {
            return Err(Error::ZeroModule);
        }
        if self.dim == 1 {
            return Ok(None);
        }
        match self.field().descriptor() {
            ScalarField::PrimeField(_) => Ok(self.meataxe_split(rng, cfg)?.map(|w| (w, None))),
            ScalarField::Rationals => self.endomorphism_split(rng, cfg),
        }
    }

    /// Holt-Rees meataxe: a random algebra element, an irreducible factor
    /// `f` of its characteristic polynomial, and spinning from the kernel of
    /// `f(theta)` and of its transpose. Nullity equal to `deg f` certifies
    /// irreducibility.
    fn meataxe_split(&self, rng: &mut ChaCha8Rng, cfg: &SearchConfig) -> Result<Option<Subspace<K>>> {
        let k = self.field();
        let attempts = cfg.split_search_budget.max(64);
        for _ in 0..attempts {
            let coeffs: Vec<K::Elem> = (0..self.action.len()).map(|_| k.random_elem(rng)).collect();
            let theta = self.rho(&coeffs);
            let chi = char_poly(&theta)?;
            for (f, _) in factor_over_prime_field(&chi)? {
                if let Some(decision) = self.norton(&theta, &f) {
                    return Ok(decision);
                }
            }
        }
        Err(Error::Undetermined("meataxe did not terminate within the attempt budget".into()))
    }

    /// Norton's test for one irreducible factor `f`. `Some(Some(w))` gives a
    /// proper submodule, `Some(None)` certifies simplicity, `None` is
    /// inconclusive.
    fn norton(&self, theta: &Matrix<K>, f: &Polynomial<K>) -> Option<Option<Subspace<K>>> {
        let n = f.eval_matrix(theta);
        let ker = n.kernel();
        if ker.is_zero() {
            return None;
        }
        let w = self.spin(&ker.basis()[0]);
        if w.dim() < self.dim {
            return Some(Some(w));
        }
        let kt = n.transpose().kernel();
        let u = self.dual_spin(&kt.basis()[0]);
        if u.dim() < self.dim {
            return Some(Some(u.annihilator()));
        }
        (ker.dim() == f.degree().unwrap_or(0)).then_some(None)
    }

    /// Norton's test over the rationals, restricted to factors of the
    /// characteristic polynomial that are certifiably irreducible: linear
    /// factors, and a root-free square-free cofactor of degree at most 3.
    fn rational_norton(&self, rng: &mut ChaCha8Rng, cfg: &SearchConfig) -> Result<Option<Option<Subspace<K>>>> {
        let k = self.field();
        for _ in 0..cfg.split_search_budget {
            let coeffs: Vec<K::Elem> = (0..self.action.len()).map(|_| k.random_elem(rng)).collect();
            let theta = self.rho(&coeffs);
            let chi = char_poly(&theta)?;
            let mut factors = Vec::new();
            let mut rest = chi.clone();
            for r in rational_roots(&chi)? {
                let lin = Polynomial::linear(k, &r);
                loop {
                    let (q, rem) = rest.divrem(&lin)?;
                    if !rem.is_zero() {
                        break;
                    }
                    rest = q;
                }
                factors.push(lin);
            }
            let deg = rest.degree().unwrap_or(0);
            if (2..=3).contains(&deg) && rest.gcd(&rest.derivative()).is_one() {
                factors.push(rest);
            }
            for f in &factors {
                if let Some(decision) = self.norton(&theta, f) {
                    return Ok(Some(decision));
                }
            }
        }
        Ok(None)
    }

    /// Splitting through the endomorphism algebra: a non-scalar
    /// endomorphism `T` with a rational eigenvalue `l` gives the Fitting
    /// decomposition of `T - l`, or its kernel when `T - l` is nilpotent.
    fn endomorphism_split(
        &self,
        rng: &mut ChaCha8Rng,
        cfg: &SearchConfig,
    ) -> Result<Option<(Subspace<K>, Option<Subspace<K>>)>> {
        let k = self.field();
        let basis = self.endomorphism_basis()?;
        if basis.len() <= 1 {
            return Ok(None);
        }
        let d = self.dim;
        let mut field_witness = false;
        let candidates = basis.len() + cfg.split_search_budget;
        for attempt in 0..candidates {
            let t = if attempt < basis.len() {
                basis[attempt].clone()
            } else {
                let c: Vec<K::Elem> = basis.iter().map(|_| k.from_i64(rng.gen_range(-2..=2))).collect();
                combine_matrices(k, &basis, &c, d, d)
            };
            let m = crate::exactla::min_poly(&t)?;
            if m.degree() == Some(1) {
                continue;
            }
            let roots = rational_roots(&m)?;
            if let Some(l) = roots.first() {
                let mut n = t.clone();
                for i in 0..d {
                    n.add_at(i, i, &k.neg(l));
                }
                let nd = n.pow(d as u64);
                let ker = nd.kernel();
                if ker.dim() < d {
                    return Ok(Some((ker, Some(nd.image()))));
                }
                return Ok(Some((n.kernel(), None)));
            }
            let deg = m.degree().unwrap_or(0);
            if deg == basis.len() && deg <= 3 && m.gcd(&m.derivative()).is_one() {
                // k[T] is a field filling the whole endomorphism algebra.
                field_witness = true;
                break;
            }
        }
        if field_witness {
            return Ok(None);
        }
        Err(Error::Undetermined(format!(
            "no endomorphism with a rational eigenvalue among {candidates} candidates"
        )))
    }

    /// A complementary submodule of `w`, through a module retraction onto it.
    pub fn complement(&self, w: &Subspace<K>) -> Result<Subspace<K>> {
        let k = self.field();
        let sub = self.submodule(w)?;
        let homs = self.hom_space(&sub)?;
        let iota = w.basis_columns();
        let dw = w.dim();
        // Solve sum c_a H_a iota = I.
        let cols: Vec<Vec<K::Elem>> = homs.iter().map(|h| flatten(&h.mul(&iota))).collect();
        let m = Matrix::from_columns(k, &cols, dw * dw);
        let target = Matrix::column_vector(k, &flatten(&Matrix::identity(k, dw)));
        let c = m.solve(&target)?.ok_or(Error::NotSemisimple)?;
        let p = combine_matrices(k, &homs, &c.column(0), dw, self.dim);
        Ok(p.kernel())
    }

    /// Decomposition into simple summands, ordered by dimension and then by
    /// echelon basis.
    pub fn meataxe_decompose(&self, cfg: &SearchConfig) -> Result<Vec<Summand<K>>> {
        if self.dim == 0 {
            return Ok(Vec::new());
        }
        let mut rng = cfg.rng();
        let mut pieces = Vec::new();
        let mut stack = vec![Subspace::full(self.field(), self.dim)];
        while let Some(s) = stack.pop() {
            let m = self.submodule(&s)?;
            let e = s.basis_columns();
            match m.proper_submodule(&mut rng, cfg)? {
                None => pieces.push(s),
                Some((w, comp)) => {
                    let c = match comp {
                        Some(c) => c,
                        None => m.complement(&w)?,
                    };
                    for part in [w, c] {
                        stack.push(part.map(&e));
                    }
                }
            }
        }
        pieces.sort_by(|a, b| (a.dim(), a.basis()).cmp(&(b.dim(), b.basis())));
        pieces
            .into_iter()
            .map(|s| {
                let module = self.submodule(&s)?;
                Ok(Summand { embedding: s.basis_columns(), module, subspace: s })
            })
            .collect()
    }

    /// One simple submodule, found by descending into proper submodules.
    pub fn find_simple_submodule(&self, cfg: &SearchConfig) -> Result<Summand<K>> {
        if self.dim == 0 {
            return Err(Error::ZeroModule);
        }
        let mut rng = cfg.rng();
        let mut s = Subspace::full(self.field(), self.dim);
        loop {
            let m = self.submodule(&s)?;
            match m.proper_submodule(&mut rng, cfg)? {
                None => {
                    return Ok(Summand { embedding: s.basis_columns(), module: m, subspace: s });
                }
                Some((w, comp)) => {
                    let pick = match comp {
                        Some(c) if c.dim() < w.dim() => c,
                        _ => w,
                    };
                    s = pick.map(&s.basis_columns());
                }
            }
        }
    }
}

pub(crate) fn spin_with<K: Field>(k: &K, mats: &[Matrix<K>], v: &[K::Elem]) -> Subspace<K> {
    let n = v.len();
    let mut sub = Subspace::zero(k, n);
    if !sub.insert(v) {
        return sub;
    }
    let mut queue = vec![v.to_vec()];
    while let Some(w) = queue.pop() {
        for m in mats {
            let u = m.mul_vec(&w);
            if sub.insert(&u) {
                if sub.dim() == n {
                    return sub;
                }
                queue.push(u);
            }
        }
    }
    sub
}

pub(crate) fn flatten<K: Field>(m: &Matrix<K>) -> Vec<K::Elem> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

pub(crate) fn unflatten<K: Field>(k: &K, v: &[K::Elem], rows: usize, cols: usize) -> Matrix<K> {
    Matrix::from_fn(k, rows, cols, |i, j| v[i * cols + j].clone())
}

/// Echelon basis of the span of some matrices of one shape.
pub(crate) fn canonical_matrix_basis<K: Field>(k: &K, mats: &[Matrix<K>], rows: usize, cols: usize) -> Vec<Matrix<K>> {
    let sub = Subspace::span(k, rows * cols, mats.iter().map(flatten).collect());
    sub.basis().iter().map(|v| unflatten(k, v, rows, cols)).collect()
}
