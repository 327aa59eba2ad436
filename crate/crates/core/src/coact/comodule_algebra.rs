use crate::assoc::{default_labels, StructureAlgebra};
use crate::cancel::{checkpoint, CancelToken};
use crate::error::{Error, Result};
use crate::exactla::{quotient_map, Field, Matrix, Subspace};
use crate::hopf::{dot, tensor_vec, HopfData};
use crate::report::AxiomReport;

pub const ASSOCIATIVITY: &str = "associativity";
pub const UNIT: &str = "unit";
pub const COACTION_MULTIPLICATIVE: &str = "coaction multiplicative";
pub const COACTION_UNITAL: &str = "coaction unital";
pub const COACTION_COASSOCIATIVE: &str = "coaction coassociative";
pub const COACTION_COUNITAL: &str = "coaction counital";

/// An algebra `A` with a coaction `alpha: A -> A (x) H`.
///
/// `coaction` is `(dim A * dim H) x dim A`; column `j` holds `alpha(e_j)`
/// with `e_l (x) h_m` at `l * dim H + m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra<K: Field> {
    hopf: HopfData<K>,
    algebra: StructureAlgebra<K>,
    coaction: Matrix<K>,
}

/// A Galois map on `A (x)_{A^alpha} A`, presented through the quotient of
/// `A (x) A` by the balancing relations.
#[derive(Clone, Debug)]
pub struct GaloisMap<K: Field> {
    /// From the quotient to `A (x) H`.
    pub matrix: Matrix<K>,
    /// `A (x) A -> quotient`.
    pub projection: Matrix<K>,
    /// `quotient -> A (x) A`, a section of the projection.
    pub section: Matrix<K>,
}

impl<K: Field> GaloisMap<K> {
    pub fn is_bijective(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn inverse(&self) -> Result<Matrix<K>> {
        self.matrix.inverse().ok_or(Error::NotGalois)
    }
}

impl<K: Field> ComoduleAlgebra<K> {
    /// Checks shapes only; see [`ComoduleAlgebra::check_comodule_algebra`].
    pub fn new(hopf: HopfData<K>, algebra: StructureAlgebra<K>, coaction: Matrix<K>) -> Result<Self> {
        if hopf.field() != algebra.field() || coaction.field() != algebra.field() {
            return Err(Error::FieldMismatch);
        }
        let (na, nh) = (algebra.dim(), hopf.dim());
        if coaction.rows() != na * nh || coaction.cols() != na {
            return Err(Error::DimensionMismatch(format!(
                "coaction is {}x{}, expected {}x{na}",
                coaction.rows(),
                coaction.cols(),
                na * nh
            )));
        }
        Ok(ComoduleAlgebra { hopf, algebra, coaction })
    }

    /// `a -> a (x) 1`.
    pub fn trivial(hopf: &HopfData<K>, algebra: &StructureAlgebra<K>) -> Result<Self> {
        let k = algebra.field();
        let one = hopf.unit()?;
        let (na, nh) = (algebra.dim(), hopf.dim());
        let coaction = Matrix::from_fn(k, na * nh, na, |r, c| if r / nh == c { one[r % nh].clone() } else { k.zero() });
        Self::new(hopf.clone(), algebra.clone(), coaction)
    }

    pub fn hopf(&self) -> &HopfData<K> {
        &self.hopf
    }

    pub fn algebra(&self) -> &StructureAlgebra<K> {
        &self.algebra
    }

    pub fn coaction(&self) -> &Matrix<K> {
        &self.coaction
    }

    pub fn field(&self) -> &K {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn alpha(&self, x: &[K::Elem]) -> Vec<K::Elem> {
        self.coaction.mul_vec(x)
    }

    pub fn with_coaction(&self, coaction: Matrix<K>) -> Result<Self> {
        Self::new(self.hopf.clone(), self.algebra.clone(), coaction)
    }

    pub fn check_comodule_algebra(&self, cancel: Option<&CancelToken>) -> Result<AxiomReport> {
        let k = self.field();
        let a = &self.algebra;
        let h = self.hopf.algebra();
        let (na, nh) = (a.dim(), h.dim());
        let mut rep = AxiomReport::default();
        rep.record(ASSOCIATIVITY, a.check_associative(cancel)?.map(|(i, j, l)| vec![i, j, l]));
        let unit = a.find_unit();
        rep.record(UNIT, if unit.is_some() { None } else { Some(vec![]) });
        let cols: Vec<Vec<K::Elem>> = (0..na).map(|j| self.coaction.column(j)).collect();

        let mut w = None;
        'outer: for i in 0..na {
            checkpoint(cancel)?;
            for j in 0..na {
                let lhs = self.alpha(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                if lhs != a.tensor_mul(h, &cols[i], &cols[j]) {
                    w = Some(vec![i, j]);
                    break 'outer;
                }
            }
        }
        rep.record(COACTION_MULTIPLICATIVE, w);

        let w = match (&unit, self.hopf.unit()) {
            (Some(u), Ok(one)) if self.alpha(u) == tensor_vec(k, u, &one) => None,
            _ => Some(vec![]),
        };
        rep.record(COACTION_UNITAL, w);

        let w = (0..na).find(|&j| {
            self.coaction.apply_left_leg(&cols[j], nh) != self.hopf.coproduct().apply_right_leg(&cols[j], na)
        });
        rep.record(COACTION_COASSOCIATIVE, w.map(|j| vec![j]));

        let eps = Matrix::from_rows(k, vec![self.hopf.counit().to_vec()], nh);
        let w = (0..na).find(|&j| eps.apply_right_leg(&cols[j], na) != a.basis_vector(j));
        rep.record(COACTION_COUNITAL, w.map(|j| vec![j]));
        Ok(rep)
    }

    /// `A^alpha = { a : alpha(a) = a (x) 1 }`.
    pub fn coinvariants(&self) -> Result<Subspace<K>> {
        let k = self.field();
        let one = self.hopf.unit()?;
        let (na, nh) = (self.dim(), self.hopf.dim());
        let m = Matrix::from_fn(k, na * nh, na, |r, c| {
            let t = if r / nh == c { one[r % nh].clone() } else { k.zero() };
            k.sub(self.coaction.get(r, c), &t)
        });
        Ok(m.kernel())
    }

    /// The coinvariants with their induced structure constants and the
    /// embedding into `A`.
    pub fn coinvariant_algebra(&self) -> Result<(StructureAlgebra<K>, Matrix<K>)> {
        let c = self.coinvariants()?;
        self.algebra.subalgebra(&c, default_labels("c", c.dim()))
    }

    /// In finite dimension: `A` is unital and `1` is coinvariant.
    pub fn has_coinvariant_local_units(&self) -> Result<bool> {
        match self.algebra.find_unit() {
            Some(u) => Ok(self.coinvariants()?.contains(&u)),
            None => Ok(false),
        }
    }

    /// Unital with `A^alpha = k1`.
    pub fn is_homogeneous(&self) -> Result<bool> {
        Ok(self.algebra.find_unit().is_some() && self.coinvariants()?.dim() == 1)
    }

    /// The averaging operator `(id (x) phi) alpha`, with its image checked
    /// to be coinvariant and the operator checked to be bimodular over the
    /// coinvariants.
    pub fn reynolds(&self) -> Result<Matrix<K>> {
        let k = self.field();
        let (na, nh) = (self.dim(), self.hopf.dim());
        let phi = &self.hopf.invariant_functionals()?.phi;
        let row = Matrix::from_rows(k, vec![phi.clone()], nh);
        let m = row.apply_right_leg_matrix(&self.coaction, na);
        let coinv = self.coinvariants()?;
        if !m.image().is_subspace_of(&coinv) {
            return Err(Error::AxiomViolation("averaging leaves the coinvariants".into()));
        }
        let a = &self.algebra;
        for e in coinv.basis() {
            for f in coinv.basis() {
                for i in 0..na {
                    let x = a.mul(&a.mul(e, &a.basis_vector(i)), f);
                    if m.mul_vec(&x) != a.mul(&a.mul(e, &m.column(i)), f) {
                        return Err(Error::AxiomViolation("averaging is not bimodular".into()));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Balancing relations `xe (x) y - x (x) ey` over a coinvariant basis.
    fn balanced_quotient(&self) -> Result<(Matrix<K>, Matrix<K>)> {
        let k = self.field();
        let a = &self.algebra;
        let n = a.dim();
        let coinv = self.coinvariants()?;
        let basis: Vec<Vec<K::Elem>> = (0..n).map(|i| a.basis_vector(i)).collect();
        let mut rels = Vec::new();
        for e in coinv.basis() {
            let right: Vec<Vec<K::Elem>> = basis.iter().map(|x| a.mul(x, e)).collect();
            let left: Vec<Vec<K::Elem>> = basis.iter().map(|y| a.mul(e, y)).collect();
            for x in 0..n {
                for y in 0..n {
                    let mut v = tensor_vec(k, &right[x], &basis[y]);
                    let w = tensor_vec(k, &basis[x], &left[y]);
                    v.iter_mut().zip(&w).for_each(|(p, q)| *p = k.sub(p, q));
                    rels.push(v);
                }
            }
        }
        quotient_map(n * n, &Subspace::span(k, n * n, rels))
    }

    fn galois_like(&self, f: impl Fn(&[K::Elem], &[K::Elem]) -> Vec<K::Elem>) -> Result<GaloisMap<K>> {
        let k = self.field();
        let a = &self.algebra;
        let (na, nh) = (a.dim(), self.hopf.dim());
        let (projection, section) = self.balanced_quotient()?;
        let mut c0 = Matrix::zeros(k, na * nh, na * na);
        for x in 0..na {
            for y in 0..na {
                let v = f(&a.basis_vector(x), &a.basis_vector(y));
                c0.set_column(x * na + y, &v);
            }
        }
        Ok(GaloisMap { matrix: c0.mul(&section), projection, section })
    }

    /// `can(a (x) b) = (a (x) 1) alpha(b)`.
    pub fn galois_map(&self) -> Result<GaloisMap<K>> {
        let one = self.hopf.unit()?;
        let k = self.field();
        self.galois_like(|x, y| self.algebra.tensor_mul(self.hopf.algebra(), &tensor_vec(k, x, &one), &self.alpha(y)))
    }

    /// `a (x) b -> alpha(a) (b (x) 1)`.
    pub fn right_galois_map(&self) -> Result<GaloisMap<K>> {
        let one = self.hopf.unit()?;
        let k = self.field();
        self.galois_like(|x, y| self.algebra.tensor_mul(self.hopf.algebra(), &self.alpha(x), &tensor_vec(k, y, &one)))
    }

    pub fn is_galois(&self) -> Result<bool> {
        Ok(self.galois_map()?.is_bijective())
    }

    /// `can^-1` from `A (x) H` to the quotient; compose with the section to
    /// land in `A (x) A`.
    pub fn galois_inverse(&self) -> Result<Matrix<K>> {
        self.galois_map()?.inverse()
    }

    /// `(B, alpha|B)` for a subalgebra `B` with `alpha(B) in B (x) H`,
    /// on the echelon basis of `B`, with the embedding matrix.
    pub fn restrict(&self, sub: &Subspace<K>, labels: Vec<String>) -> Result<(Self, Matrix<K>)> {
        let k = self.field();
        let nh = self.hopf.dim();
        let (alg, emb) = self.algebra.subalgebra(sub, labels)?;
        let m = sub.dim();
        let mut coaction = Matrix::zeros(k, m * nh, m);
        for (j, b) in sub.basis().iter().enumerate() {
            let img = self.alpha(b);
            for t in 0..nh {
                let slice: Vec<K::Elem> = (0..self.dim()).map(|l| img[l * nh + t].clone()).collect();
                let c = sub
                    .coordinates(&slice)
                    .ok_or_else(|| Error::InvalidInput("subalgebra is not a subcomodule".into()))?;
                for (l, v) in c.into_iter().enumerate() {
                    coaction.set(l * nh + t, j, v);
                }
            }
        }
        Ok((Self::new(self.hopf.clone(), alg, coaction)?, emb))
    }

    /// `alpha(V) in V (x) H`.
    pub fn is_subcomodule(&self, sub: &Subspace<K>) -> bool {
        let nh = self.hopf.dim();
        sub.basis().iter().all(|b| {
            let img = self.alpha(b);
            (0..nh).all(|t| sub.contains(&(0..self.dim()).map(|l| img[l * nh + t].clone()).collect::<Vec<_>>()))
        })
    }

    /// `A x B` with the coaction acting on each summand.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.hopf != other.hopf {
            return Err(Error::InvalidInput("summands coact through different Hopf algebras".into()));
        }
        let k = self.field();
        let nh = self.hopf.dim();
        let (n1, n2) = (self.dim(), other.dim());
        let algebra = self.algebra.direct_sum(&other.algebra);
        let coaction = Matrix::from_fn(k, (n1 + n2) * nh, n1 + n2, |r, c| {
            let (l, t) = (r / nh, r % nh);
            match (l < n1, c < n1) {
                (true, true) => self.coaction.get(l * nh + t, c).clone(),
                (false, false) => other.coaction.get((l - n1) * nh + t, c - n1).clone(),
                _ => k.zero(),
            }
        });
        Self::new(self.hopf.clone(), algebra, coaction)
    }

    /// `(id (x) f) alpha(x)` for a functional `f` on `H`.
    pub fn slice(&self, x: &[K::Elem], f: &[K::Elem]) -> Vec<K::Elem> {
        let k = self.field();
        let nh = self.hopf.dim();
        let img = self.alpha(x);
        (0..self.dim()).map(|l| dot(k, &img[l * nh..(l + 1) * nh], f)).collect()
    }
}

impl<K: Field> Matrix<K> {
    /// `(id_n (x) self) M`, column by column.
    pub(crate) fn apply_right_leg_matrix(&self, m: &Matrix<K>, n: usize) -> Matrix<K> {
        let cols: Vec<Vec<K::Elem>> = m.columns().iter().map(|c| self.apply_right_leg(c, n)).collect();
        Matrix::from_columns(self.field(), &cols, n * self.rows())
    }

}
