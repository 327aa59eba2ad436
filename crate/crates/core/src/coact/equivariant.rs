use super::comodule_algebra::ComoduleAlgebra;
use super::smash::SmashAlgebra;
use crate::assoc::{AlgModule, SearchConfig, Verdict};
use crate::cancel::{checkpoint, CancelToken};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::hopf::HopfData;

/// A right `H`-comodule `V`; `coaction` is `(dim V * dim H) x dim V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<K: Field> {
    pub hopf: HopfData<K>,
    pub dim: usize,
    pub coaction: Matrix<K>,
}

impl<K: Field> Comodule<K> {
    pub fn new(hopf: &HopfData<K>, dim: usize, coaction: Matrix<K>) -> Result<Self> {
        if coaction.rows() != dim * hopf.dim() || coaction.cols() != dim {
            return Err(Error::DimensionMismatch("comodule coaction has the wrong shape".into()));
        }
        let v = Comodule { hopf: hopf.clone(), dim, coaction };
        v.check()?;
        Ok(v)
    }

    /// `k` with `1 -> 1 (x) 1`.
    pub fn trivial(hopf: &HopfData<K>) -> Result<Self> {
        let one = hopf.unit()?;
        Self::new(hopf, 1, Matrix::column_vector(hopf.field(), &one))
    }

    /// `H` with `Delta`.
    pub fn regular(hopf: &HopfData<K>) -> Result<Self> {
        Self::new(hopf, hopf.dim(), hopf.coproduct().clone())
    }

    pub fn check(&self) -> Result<()> {
        check_comodule(&self.hopf, self.dim, &self.coaction)
    }
}

fn check_comodule<K: Field>(h: &HopfData<K>, dim: usize, delta: &Matrix<K>) -> Result<()> {
    let k = h.field();
    let nh = h.dim();
    let eps = Matrix::from_rows(k, vec![h.counit().to_vec()], nh);
    for v in 0..dim {
        let d = delta.column(v);
        if delta.apply_left_leg(&d, nh) != h.coproduct().apply_right_leg(&d, dim) {
            return Err(Error::AxiomViolation(format!("comodule coassociativity fails at basis vector {v}")));
        }
        let back = eps.apply_right_leg(&d, dim);
        if back.iter().enumerate().any(|(i, x)| if i == v { !k.is_one(x) } else { !k.is_zero(x) }) {
            return Err(Error::AxiomViolation(format!("comodule counit law fails at basis vector {v}")));
        }
    }
    Ok(())
}

/// An `A`-module with a compatible `H`-comodule structure:
/// `delta(a v) = alpha(a) delta(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantModule<K: Field> {
    pub base: ComoduleAlgebra<K>,
    pub module: AlgModule<K>,
    pub coaction: Matrix<K>,
}

impl<K: Field> EquivariantModule<K> {
    pub fn new(base: &ComoduleAlgebra<K>, action: Vec<Matrix<K>>, coaction: Matrix<K>) -> Result<Self> {
        let dim = coaction.cols();
        if coaction.rows() != dim * base.hopf().dim() {
            return Err(Error::DimensionMismatch("module coaction has the wrong shape".into()));
        }
        let module = AlgModule::new(base.algebra(), dim, action)?;
        let v = EquivariantModule { base: base.clone(), module, coaction };
        v.check(None)?;
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn check(&self, cancel: Option<&CancelToken>) -> Result<()> {
        self.module.check(cancel)?;
        let h = self.base.hopf();
        check_comodule(h, self.dim(), &self.coaction)?;
        let a = self.base.algebra();
        let n = self.dim();
        let vm = AlgModule::new(a, n, self.module.action().to_vec())?;
        for i in 0..a.dim() {
            checkpoint(cancel)?;
            let ai = self.base.alpha(&a.basis_vector(i));
            for v in 0..n {
                let lhs = self.coaction.mul_vec(&vm.action()[i].column(v));
                let rhs = act_tensor(&self.base, &self.module, &ai, &self.coaction.column(v));
                if lhs != rhs {
                    return Err(Error::AxiomViolation(format!("delta(a v) != alpha(a) delta(v) at ({i}, {v})")));
                }
            }
        }
        Ok(())
    }
}

/// `(a (x) h)(v (x) h')` with `A` acting on `V` and `H` multiplying.
fn act_tensor<K: Field>(
    base: &ComoduleAlgebra<K>,
    module: &AlgModule<K>,
    x: &[K::Elem],
    y: &[K::Elem],
) -> Vec<K::Elem> {
    let k = base.field();
    let h = base.hopf().algebra();
    let nh = h.dim();
    let n = module.dim();
    let mut out = vec![k.zero(); n * nh];
    for (xi, xc) in x.iter().enumerate() {
        if k.is_zero(xc) {
            continue;
        }
        let (i, p) = (xi / nh, xi % nh);
        let rho = &module.action()[i];
        for (yi, yc) in y.iter().enumerate() {
            if k.is_zero(yc) {
                continue;
            }
            let (v, q) = (yi / nh, yi % nh);
            let c = k.mul(xc, yc);
            for (r, hc) in h.product_entry(p, q) {
                let cr = k.mul(&c, hc);
                for w in 0..n {
                    let z = rho.get(w, v);
                    if !k.is_zero(z) {
                        out[w * nh + r] = k.mul_add(&out[w * nh + r], &cr, z);
                    }
                }
            }
        }
    }
    out
}

impl<K: Field> ComoduleAlgebra<K> {
    /// `A # H^` acting by `(a # w) v = a ((id (x) w) delta(v))`.
    pub fn equivariant_to_smash(&self, smash: &SmashAlgebra<K>, v: &EquivariantModule<K>) -> Result<AlgModule<K>> {
        let k = self.field();
        let nh = self.hopf().dim();
        let n = v.dim();
        let omega: Vec<Matrix<K>> = (0..nh)
            .map(|c| Matrix::from_fn(k, n, n, |r, col| v.coaction.get(r * nh + c, col).clone()))
            .collect();
        let action = (0..smash.algebra.dim())
            .map(|s| v.module.action()[s / nh].mul(&omega[s % nh]))
            .collect();
        AlgModule::new(&smash.algebra, n, action)
    }

    /// The inverse translation: `a v = (a # eps) v` and
    /// `delta(v) = sum_k (1 # e^k) v (x) e_k`.
    pub fn smash_to_equivariant(&self, smash: &SmashAlgebra<K>, m: &AlgModule<K>) -> Result<EquivariantModule<K>> {
        let k = self.field();
        let nh = self.hopf().dim();
        let n = m.dim();
        let action = (0..self.dim()).map(|i| m.rho(&smash.a_embedding.column(i))).collect();
        let dual: Vec<Matrix<K>> = (0..nh).map(|c| m.rho(&smash.dual_embedding.column(c))).collect();
        let coaction = Matrix::from_fn(k, n * nh, n, |r, col| dual[r % nh].get(r / nh, col).clone());
        EquivariantModule::new(self, action, coaction)
    }

    /// `A (x) V` with `A` acting on the first leg and
    /// `b (x) v -> b_0 (x) v_0 (x) b_1 v_1`.
    pub fn equivariant_tensor_module(&self, v: &Comodule<K>) -> Result<EquivariantModule<K>> {
        let k = self.field();
        let a = self.algebra();
        let ha = self.hopf().algebra();
        let (na, nh, nv) = (a.dim(), ha.dim(), v.dim);
        let n = na * nv;
        let action = a
            .left_regular()
            .iter()
            .map(|l| l.kron(&Matrix::identity(k, nv)))
            .collect();
        let mut coaction = Matrix::zeros(k, n * nh, n);
        for b in 0..na {
            let ab = self.coaction().column(b);
            for w in 0..nv {
                let dv = v.coaction.column(w);
                for (x, c1) in ab.iter().enumerate() {
                    if k.is_zero(c1) {
                        continue;
                    }
                    let (b2, h1) = (x / nh, x % nh);
                    for (y, c2) in dv.iter().enumerate() {
                        if k.is_zero(c2) {
                            continue;
                        }
                        let (w2, h2) = (y / nh, y % nh);
                        let c = k.mul(c1, c2);
                        for (r, z) in ha.product_entry(h1, h2) {
                            coaction.add_at((b2 * nv + w2) * nh + r, b * nv + w, &k.mul(&c, z));
                        }
                    }
                }
            }
        }
        EquivariantModule::new(self, action, coaction)
    }

    /// `A` with its own coaction, acting on itself.
    pub fn regular_equivariant(&self) -> Result<EquivariantModule<K>> {
        EquivariantModule::new(self, self.algebra().left_regular().to_vec(), self.coaction().clone())
    }

    /// Absolute semisimplicity of `A # H^`.
    pub fn is_equivariantly_abs_semisimple(&self, cfg: &SearchConfig) -> Result<Verdict> {
        self.smash()?.algebra.is_absolutely_semisimple(cfg)
    }
}
