//! Galois coactions whose coinvariants are a product of copies of `k`.

mod correspond;
mod functionals;

use std::sync::OnceLock;

use crate::assoc::default_labels;
use crate::coact::{ComoduleAlgebra, GaloisMap};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};

pub use correspond::{EquivariantSimplesReport, GaloisFromHomogeneous, HomogeneousCorner, RoundTrip};
pub use functionals::{InvariantFunctionalData, ModularData, PhiComponents};

/// A Galois coaction with `A^alpha = k_I`, split along the minimal
/// coinvariant idempotents `p_i` into `A = sum A_ij`, `A_ij = p_i A p_j`.
#[derive(Clone, Debug)]
pub struct IGaloisObject<K: Field> {
    base: ComoduleAlgebra<K>,
    idempotents: Vec<Vec<K::Elem>>,
    components: Vec<Vec<Subspace<K>>>,
    can: GaloisMap<K>,
    can_inverse: Matrix<K>,
    splitting: Matrix<K>,
    phi: OnceLock<Result<PhiComponents<K>>>,
    functionals: OnceLock<Result<InvariantFunctionalData<K>>>,
    modular: OnceLock<Result<ModularData<K>>>,
}

impl<K: Field> IGaloisObject<K> {
    pub fn analyze(base: &ComoduleAlgebra<K>) -> Result<Self> {
        base.check_comodule_algebra(None)?.into_result()?;
        let k = base.field();
        let a = base.algebra();
        let n = a.dim();
        let can = base.galois_map()?;
        let can_inverse = can.inverse()?;
        let (coinv, emb) = base.coinvariant_algebra()?;
        if !coinv.is_commutative() {
            return Err(Error::CoinvariantsNotSplit);
        }
        let idems = match coinv.primitive_idempotents_split_commutative() {
            Ok(v) if v.len() == coinv.dim() => v,
            Ok(_) | Err(Error::NotSplit | Error::NotSemisimple) => return Err(Error::CoinvariantsNotSplit),
            Err(e) => return Err(e),
        };
        let idempotents: Vec<Vec<K::Elem>> = idems.iter().map(|e| emb.mul_vec(e)).collect();
        let basis: Vec<Vec<K::Elem>> = (0..n).map(|x| a.basis_vector(x)).collect();
        let components: Vec<Vec<Subspace<K>>> = idempotents
            .iter()
            .map(|pi| {
                let left: Vec<Vec<K::Elem>> = basis.iter().map(|x| a.mul(pi, x)).collect();
                idempotents
                    .iter()
                    .map(|pj| Subspace::span(k, n, left.iter().map(|x| a.mul(x, pj)).collect()))
                    .collect()
            })
            .collect();
        let total: usize = components.iter().flatten().map(Subspace::dim).sum();
        let joined = components.iter().flatten().fold(Subspace::zero(k, n), |acc, s| acc.join(s));
        if total != n || !joined.is_full() {
            return Err(Error::AxiomViolation("components do not form a direct sum decomposition".into()));
        }

        // a (x) b -> sum_i a p_i (x) p_i b, precomposed with the quotient section.
        let mut sp = Matrix::zeros(k, n * n, n * n);
        for p in &idempotents {
            sp = sp.add(&a.right_mult(p).kron(&a.left_mult(p)));
        }
        let splitting = sp.mul(&can.section);
        let mut target = Vec::new();
        for i in 0..idempotents.len() {
            for j in 0..idempotents.len() {
                for l in 0..idempotents.len() {
                    for x in components[i][j].basis() {
                        for y in components[j][l].basis() {
                            target.push(crate::hopf::tensor_vec(k, x, y));
                        }
                    }
                }
            }
        }
        let target = Subspace::span(k, n * n, target);
        if splitting.rank() != splitting.cols() || splitting.image() != target {
            return Err(Error::AxiomViolation("splitting map is not an isomorphism onto sum A_ij (x) A_jk".into()));
        }
        Ok(IGaloisObject {
            base: base.clone(),
            idempotents,
            components,
            can,
            can_inverse,
            splitting,
            phi: OnceLock::new(),
            functionals: OnceLock::new(),
            modular: OnceLock::new(),
        })
    }

    pub fn base(&self) -> &ComoduleAlgebra<K> {
        &self.base
    }

    pub fn field(&self) -> &K {
        self.base.field()
    }

    /// `|I|`.
    pub fn index_count(&self) -> usize {
        self.idempotents.len()
    }

    pub fn idempotents(&self) -> &[Vec<K::Elem>] {
        &self.idempotents
    }

    pub fn component(&self, i: usize, j: usize) -> &Subspace<K> {
        &self.components[i][j]
    }

    pub fn component_dims(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(|r| r.iter().map(Subspace::dim).collect()).collect()
    }

    pub fn galois_map(&self) -> &GaloisMap<K> {
        &self.can
    }

    /// `A (x)_{k_I} A -> A (x) A` on the quotient coordinates of the Galois map.
    pub fn splitting_map(&self) -> &Matrix<K> {
        &self.splitting
    }

    /// `(s o can^-1)(p_i (x) h)` for the basis vector `h`, in `A (x) A`.
    pub fn beta(&self, i: usize, h: usize) -> Vec<K::Elem> {
        let k = self.field();
        let mut e = vec![k.zero(); self.base.hopf().dim()];
        e[h] = k.one();
        let v = crate::hopf::tensor_vec(k, &self.idempotents[i], &e);
        self.splitting.mul_vec(&self.can_inverse.mul_vec(&v))
    }

    /// Classes of `i ~ j` iff `A_ij != 0`, in increasing order.
    pub fn connectivity(&self) -> Result<Vec<Vec<usize>>> {
        let n = self.index_count();
        let nz = |i: usize, j: usize| !self.components[i][j].is_zero();
        let mut root: Vec<usize> = (0..n).collect();
        fn find(root: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while root[r] != r {
                r = root[r];
            }
            root[x] = r;
            r
        }
        for i in 0..n {
            for j in 0..n {
                if nz(i, j) {
                    let (a, b) = (find(&mut root, i), find(&mut root, j));
                    root[a.max(b)] = a.min(b);
                }
            }
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            let r = find(&mut root, i);
            match classes.iter_mut().find(|c| c[0] == r) {
                Some(c) => c.push(i),
                None => classes.push(vec![i]),
            }
        }
        for c in &classes {
            for &i in c {
                for &j in c {
                    if !nz(i, j) {
                        return Err(Error::AxiomViolation(format!("A_{i}{j} = 0 inside a connected class")));
                    }
                }
            }
        }
        Ok(classes)
    }

    pub fn is_connected(&self) -> Result<bool> {
        Ok(self.connectivity()?.len() == 1)
    }

    /// `e_X A e_X` for each class `X`, each analyzed on its own and checked
    /// to have `|X|` idempotents.
    pub fn split_connected(&self) -> Result<Vec<IGaloisObject<K>>> {
        let k = self.field();
        let a = self.base.algebra();
        let n = a.dim();
        let mut out = Vec::new();
        for class in self.connectivity()? {
            let mut e = vec![k.zero(); n];
            for &i in &class {
                e.iter_mut().zip(&self.idempotents[i]).for_each(|(x, y)| *x = k.add(x, y));
            }
            let sub = Subspace::span(k, n, (0..n).map(|x| a.mul(&a.mul(&e, &a.basis_vector(x)), &e)).collect());
            let labels = sub
                .basis()
                .iter()
                .map(|v| match v.iter().filter(|c| !k.is_zero(c)).count() {
                    1 => a.labels()[v.iter().position(|c| !k.is_zero(c)).unwrap_or(0)].clone(),
                    _ => String::new(),
                })
                .collect::<Vec<_>>();
            let labels = if labels.iter().any(String::is_empty) { default_labels("b", sub.dim()) } else { labels };
            let (piece, _) = self.base.restrict(&sub, labels)?;
            let g = IGaloisObject::analyze(&piece)?;
            if g.index_count() != class.len() {
                return Err(Error::AxiomViolation("connected piece has the wrong number of idempotents".into()));
            }
            out.push(g);
        }
        Ok(out)
    }
}
