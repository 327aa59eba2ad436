//! Finite-dimensional Hopf algebras: axioms, invariant functionals, the dual.

use std::sync::OnceLock;

use crate::assoc::StructureAlgebra;
use crate::cancel::{checkpoint, CancelToken};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::report::AxiomReport;

/// A Hopf algebra on a basis `e_0..e_{n-1}`.
///
/// `coproduct` is `n^2 x n` with column `k` holding `Delta(e_k)`; `counit`
/// is the row of `eps(e_k)`; `antipode` is `n x n`.
#[derive(Clone, Debug)]
pub struct HopfData<K: Field> {
    algebra: StructureAlgebra<K>,
    coproduct: Matrix<K>,
    counit: Vec<K::Elem>,
    antipode: Matrix<K>,
    invariants: OnceLock<Result<InvariantPair<K>>>,
}

impl<K: Field> PartialEq for HopfData<K> {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.coproduct == other.coproduct
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl<K: Field> Eq for HopfData<K> {}

/// Left invariant `phi`, right invariant `psi = phi o S`, the modular
/// element `delta` with `phi(S(h)) = phi(h delta)` and the modular
/// automorphism `sigma` with `phi(ab) = phi(b sigma(a))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantPair<K: Field> {
    pub phi: Vec<K::Elem>,
    pub psi: Vec<K::Elem>,
    pub delta: Vec<K::Elem>,
    pub sigma: Matrix<K>,
    /// `phi(1) = psi(1) = 1`.
    pub normalized: bool,
}

pub const ASSOCIATIVITY: &str = "associativity";
pub const UNIT: &str = "unit";
pub const COASSOCIATIVITY: &str = "coassociativity";
pub const COUNIT: &str = "counit";
pub const COPRODUCT_MULTIPLICATIVE: &str = "coproduct multiplicative";
pub const COPRODUCT_UNITAL: &str = "coproduct unital";
pub const COUNIT_MULTIPLICATIVE: &str = "counit multiplicative";
pub const COUNIT_UNITAL: &str = "counit unital";
pub const ANTIPODE_LEFT: &str = "antipode left";
pub const ANTIPODE_RIGHT: &str = "antipode right";

impl<K: Field> HopfData<K> {
    /// Checks shapes only; see [`HopfData::check_hopf`] for the axioms.
    pub fn new(
        algebra: StructureAlgebra<K>,
        coproduct: Matrix<K>,
        counit: Vec<K::Elem>,
        antipode: Matrix<K>,
    ) -> Result<Self> {
        let n = algebra.dim();
        let k = algebra.field();
        if coproduct.field() != k || antipode.field() != k {
            return Err(Error::FieldMismatch);
        }
        if coproduct.rows() != n * n || coproduct.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "coproduct is {}x{}, expected {}x{n}",
                coproduct.rows(),
                coproduct.cols(),
                n * n
            )));
        }
        if counit.len() != n {
            return Err(Error::DimensionMismatch(format!("counit has length {}, expected {n}", counit.len())));
        }
        if antipode.rows() != n || antipode.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "antipode is {}x{}, expected {n}x{n}",
                antipode.rows(),
                antipode.cols()
            )));
        }
        Ok(HopfData { algebra, coproduct, counit, antipode, invariants: OnceLock::new() })
    }

    pub fn algebra(&self) -> &StructureAlgebra<K> {
        &self.algebra
    }

    pub fn field(&self) -> &K {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    pub fn coproduct(&self) -> &Matrix<K> {
        &self.coproduct
    }

    pub fn counit(&self) -> &[K::Elem] {
        &self.counit
    }

    pub fn antipode(&self) -> &Matrix<K> {
        &self.antipode
    }

    pub fn with_antipode(&self, antipode: Matrix<K>) -> Result<Self> {
        Self::new(self.algebra.clone(), self.coproduct.clone(), self.counit.clone(), antipode)
    }

    pub fn unit(&self) -> Result<Vec<K::Elem>> {
        self.algebra.unit()
    }

    pub fn delta(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        self.coproduct.mul_vec(x)
    }

    pub fn eps(&self, x: &[K::Elem]) -> K::Elem {
        dot(self.field(), &self.counit, x)
    }

    pub fn s(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        self.antipode.mul_vec(x)
    }

    pub fn mul(&self, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
        self.algebra.mul(x, y)
    }

    /// Per-axiom verdicts on basis elements.
    pub fn check_hopf(&self, cancel: Option<&CancelToken>) -> Result<AxiomReport> {
        let k = self.field();
        let n = self.dim();
        let a = &self.algebra;
        let mut rep = AxiomReport::default();
        rep.record(ASSOCIATIVITY, a.check_associative(cancel)?.map(|(i, j, l)| vec![i, j, l]));
        let unit = a.find_unit();
        rep.record(UNIT, if unit.is_some() { None } else { Some(vec![]) });
        let basis: Vec<Vec<K::Elem>> = (0..n).map(|i| a.basis_vector(i)).collect();
        let deltas: Vec<Vec<K::Elem>> = (0..n).map(|i| self.coproduct.column(i)).collect();

        let mut w = None;
        for (i, d) in deltas.iter().enumerate() {
            checkpoint(cancel)?;
            if self.coproduct.apply_left_leg(d, n) != self.coproduct.apply_right_leg(d, n) {
                w = Some(vec![i]);
                break;
            }
        }
        rep.record(COASSOCIATIVITY, w);

        let eps_row = Matrix::from_rows(k, vec![self.counit.clone()], n);
        let w = (0..n).find(|&i| {
            eps_row.apply_left_leg(&deltas[i], n) != basis[i] || eps_row.apply_right_leg(&deltas[i], n) != basis[i]
        });
        rep.record(COUNIT, w.map(|i| vec![i]));

        let mut w = None;
        'outer: for i in 0..n {
            checkpoint(cancel)?;
            for j in 0..n {
                let lhs = self.delta(&a.mul(&basis[i], &basis[j]));
                if lhs != a.tensor_mul(a, &deltas[i], &deltas[j]) {
                    w = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        rep.record(COPRODUCT_MULTIPLICATIVE, w);

        let mut w = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.eps(&a.mul(&basis[i], &basis[j]));
                if lhs != k.mul(&self.counit[i], &self.counit[j]) {
                    w = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        rep.record(COUNIT_MULTIPLICATIVE, w);

        match &unit {
            Some(u) => {
                let uu: Vec<K::Elem> = tensor_vec(k, u, u);
                rep.record(COPRODUCT_UNITAL, if self.delta(u) == uu { None } else { Some(vec![]) });
                rep.record(COUNIT_UNITAL, if k.is_one(&self.eps(u)) { None } else { Some(vec![]) });
                let mut left = None;
                let mut right = None;
                for i in 0..n {
                    let target: Vec<K::Elem> = u.iter().map(|c| k.mul(c, &self.counit[i])).collect();
                    let sl = self.antipode.apply_left_leg(&deltas[i], n);
                    let sr = self.antipode.apply_right_leg(&deltas[i], n);
                    if left.is_none() && contract(a, &sl) != target {
                        left = Some(vec![i]);
                    }
                    if right.is_none() && contract(a, &sr) != target {
                        right = Some(vec![i]);
                    }
                }
                rep.record(ANTIPODE_LEFT, left);
                rep.record(ANTIPODE_RIGHT, right);
            }
            None => {
                for ax in [COPRODUCT_UNITAL, COUNIT_UNITAL, ANTIPODE_LEFT, ANTIPODE_RIGHT] {
                    rep.record(ax, Some(vec![]));
                }
            }
        }
        Ok(rep)
    }

    /// Gram matrix `G_ij = f(e_i e_j)`.
    pub fn gram(&self, f: &[K::Elem]) -> Matrix<K> {
        gram(&self.algebra, f)
    }

    /// The pairing `(a, b) -> f(ab)` is non-degenerate.
    pub fn faithfulness_check(&self, f: &[K::Elem]) -> bool {
        self.gram(f).is_invertible()
    }

    /// The cached invariant functionals, modular element and automorphism.
    pub fn invariant_functionals(&self) -> Result<&InvariantPair<K>> {
        self.invariants.get_or_init(|| self.compute_invariants()).as_ref().map_err(Clone::clone)
    }

    /// Every left invariant functional, as a basis of the solution space.
    pub fn left_invariant_space(&self) -> Result<Vec<Vec<K::Elem>>> {
        let k = self.field();
        let n = self.dim();
        let u = self.unit()?;
        // Row (k, a): sum_b Delta[(a, b), k] phi_b - u_a phi_k = 0.
        let mut m = Matrix::zeros(k, n * n, n);
        for col in 0..n {
            for a in 0..n {
                let r = col * n + a;
                for b in 0..n {
                    m.add_at(r, b, self.coproduct.get(a * n + b, col));
                }
                m.add_at(r, col, &k.neg(&u[a]));
            }
        }
        Ok(m.kernel().basis().to_vec())
    }

    fn compute_invariants(&self) -> Result<InvariantPair<K>> {
        let k = self.field();
        let u = self.unit()?;
        let space = self.left_invariant_space()?;
        let mut phi = match space.len() {
            0 => return Err(Error::NoInvariantFunctional),
            1 => space.into_iter().next().expect("one vector"),
            d => return Err(Error::NonUniqueFunctional(d)),
        };
        let phi1 = dot(k, &phi, &u);
        let scale = if k.is_zero(&phi1) {
            phi.iter().find(|c| !k.is_zero(c)).cloned().expect("nonzero functional")
        } else {
            phi1.clone()
        };
        let inv = k.inv(&scale).expect("nonzero");
        phi.iter_mut().for_each(|c| *c = k.mul(c, &inv));
        let psi = self.antipode.vec_mul(&phi);

        let g = self.gram(&phi);
        if !g.is_invertible() {
            return Err(Error::NotFaithful);
        }
        let delta = g
            .solve(&Matrix::column_vector(k, &psi))?
            .ok_or(Error::NotFaithful)?
            .column(0);
        let sigma = g.solve(&g.transpose())?.ok_or(Error::NotFaithful)?;
        let normalized = !k.is_zero(&phi1);
        let pair = InvariantPair { phi, psi, delta, sigma, normalized };
        self.verify_invariants(&pair)?;
        Ok(pair)
    }

    fn verify_invariants(&self, p: &InvariantPair<K>) -> Result<()> {
        let k = self.field();
        let n = self.dim();
        let a = &self.algebra;
        let u = self.unit()?;
        let phi_row = Matrix::from_rows(k, vec![p.phi.clone()], n);
        let psi_row = Matrix::from_rows(k, vec![p.psi.clone()], n);
        for h in 0..n {
            let d = self.coproduct.column(h);
            let want_l: Vec<K::Elem> = u.iter().map(|c| k.mul(c, &p.phi[h])).collect();
            let want_r: Vec<K::Elem> = u.iter().map(|c| k.mul(c, &p.psi[h])).collect();
            if phi_row.apply_right_leg(&d, n) != want_l {
                return Err(Error::AxiomViolation(format!("left invariance fails at {}", a.labels()[h])));
            }
            if psi_row.apply_left_leg(&d, n) != want_r {
                return Err(Error::AxiomViolation(format!("right invariance fails at {}", a.labels()[h])));
            }
        }
        if self.delta(&p.delta) != tensor_vec(k, &p.delta, &p.delta) || !k.is_one(&self.eps(&p.delta)) {
            return Err(Error::AxiomViolation("modular element is not grouplike".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = p.sigma.mul_vec(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                let rhs = a.mul(&p.sigma.column(i), &p.sigma.column(j));
                if lhs != rhs {
                    return Err(Error::AxiomViolation("modular automorphism is not multiplicative".into()));
                }
            }
        }
        if !p.sigma.is_invertible() {
            return Err(Error::AxiomViolation("modular automorphism is singular".into()));
        }
        if p.normalized && p.delta != u {
            return Err(Error::AxiomViolation("normalized integral with nontrivial modular element".into()));
        }
        Ok(())
    }

    pub fn antipode_inverse(&self) -> Result<Matrix<K>> {
        self.antipode.inverse().ok_or(Error::SingularAntipode)
    }

    /// `H*` on the dual basis: product and coproduct swap roles, the unit
    /// is the counit, the counit is evaluation at 1 and the antipode is
    /// the transpose.
    pub fn dual_hopf(&self) -> Result<Self> {
        let k = self.field();
        let labels = self.labels().iter().map(|l| dual_label(l)).collect();
        let algebra = StructureAlgebra::from_mult_tensor(k, labels, &self.coproduct)?;
        Self::new(algebra, self.algebra.mult_tensor(), self.unit()?, self.antipode.transpose())
    }

    /// The matrix of `h -> f(h -)` into the dual basis; `Err(NotFaithful)`
    /// when it is singular.
    pub fn fourier_map(&self, f: &[K::Elem]) -> Result<Matrix<K>> {
        let m = self.gram(f).transpose();
        if m.is_invertible() {
            Ok(m)
        } else {
            Err(Error::NotFaithful)
        }
    }
}

fn dual_label(l: &str) -> String {
    match l.strip_suffix('*') {
        Some(base) => base.to_string(),
        None => format!("{l}*"),
    }
}

pub(crate) fn dot<K: Field>(k: &K, x: &[K::Elem], y: &[K::Elem]) -> K::Elem {
    x.iter().zip(y).fold(k.zero(), |acc, (a, b)| k.mul_add(&acc, a, b))
}

pub(crate) fn tensor_vec<K: Field>(k: &K, x: &[K::Elem], y: &[K::Elem]) -> Vec<K::Elem> {
    x.iter().flat_map(|a| y.iter().map(move |b| k.mul(a, b))).collect()
}

/// `m(t)` for `t` in `A (x) A`.
pub(crate) fn contract<K: Field>(a: &StructureAlgebra<K>, t: &[K::Elem]) -> Vec<K::Elem> {
    let k = a.field();
    let n = a.dim();
    let mut out = a.zero();
    for (idx, c) in t.iter().enumerate() {
        if k.is_zero(c) {
            continue;
        }
        for (l, d) in a.product_entry(idx / n, idx % n) {
            out[*l] = k.mul_add(&out[*l], c, d);
        }
    }
    out
}

pub(crate) fn gram<K: Field>(a: &StructureAlgebra<K>, f: &[K::Elem]) -> Matrix<K> {
    let k = a.field();
    let n = a.dim();
    Matrix::from_fn(k, n, n, |i, j| {
        a.product_entry(i, j).iter().fold(k.zero(), |acc, (l, c)| k.mul_add(&acc, c, &f[*l]))
    })
}
