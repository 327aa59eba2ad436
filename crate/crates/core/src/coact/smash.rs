use super::comodule_algebra::ComoduleAlgebra;
use crate::assoc::{sparse, StructureAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};
use crate::hopf::{tensor_vec, HopfData};

/// `A # H^` on the basis `e_i # e^c` at `i * dim H + c`, with the
/// embeddings `a -> a # eps` and `w -> 1 # w`.
#[derive(Clone, Debug)]
pub struct SmashAlgebra<K: Field> {
    pub algebra: StructureAlgebra<K>,
    pub a_embedding: Matrix<K>,
    pub dual_embedding: Matrix<K>,
}

/// `((A # H^) # H, alpha^^_{S^2})` with `A # H^` embedded as `x -> x # 1`.
#[derive(Clone, Debug)]
pub struct DoubleSmash<K: Field> {
    pub smash: SmashAlgebra<K>,
    pub comodule: ComoduleAlgebra<K>,
    /// `dim D x dim (A # H^)`.
    pub smash_embedding: Matrix<K>,
    /// `h_p . (a # w) = a # w(- h_p)` on `A # H^`, one matrix per basis `h_p`.
    pub h_action: Vec<Matrix<K>>,
}

/// `e^c(e_m -) * e^d` in the dual basis, indexed `[m][c][d]`.
fn twisted_products<K: Field>(h: &HopfData<K>) -> Vec<Vec<Vec<Vec<(usize, K::Elem)>>>> {
    let k = h.field();
    let n = h.dim();
    let ha = h.algebra();
    let delta = h.coproduct();
    (0..n)
        .map(|m| {
            (0..n)
                .map(|c| {
                    (0..n)
                        .map(|d| {
                            let mut v = vec![k.zero(); n];
                            for kk in 0..n {
                                let coeff = ha
                                    .product_entry(m, kk)
                                    .iter()
                                    .find(|(l, _)| *l == c)
                                    .map(|(_, x)| x.clone());
                                let Some(coeff) = coeff else { continue };
                                for (r, o) in v.iter_mut().enumerate() {
                                    let t = delta.get(kk * n + d, r);
                                    if !k.is_zero(t) {
                                        *o = k.mul_add(o, &coeff, t);
                                    }
                                }
                            }
                            sparse(k, &v)
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

impl<K: Field> ComoduleAlgebra<K> {
    /// The smash product `A # H^`, with `(a # w)(b # x) = a b_0 # w(b_1 -) * x`.
    ///
    /// Verifies associativity, the unit `1 # eps`, that both embeddings
    /// are algebra maps, and `(1 # w)(a # eps) = a_0 # w(a_1 -)`.
    pub fn smash(&self) -> Result<SmashAlgebra<K>> {
        let k = self.field();
        let a = self.algebra();
        let h = self.hopf();
        let (na, nh) = (a.dim(), h.dim());
        let w = twisted_products(h);
        let alpha = self.coaction();
        let labels = (0..na * nh)
            .map(|s| format!("{}#{}*", a.labels()[s / nh], h.labels()[s % nh]))
            .collect();
        let mut table = Vec::with_capacity(na * nh * na * nh);
        for s in 0..na * nh {
            let (i, c) = (s / nh, s % nh);
            for t in 0..na * nh {
                let (j, d) = (t / nh, t % nh);
                let mut v = vec![k.zero(); na * nh];
                for l in 0..na {
                    for m in 0..nh {
                        let coeff = alpha.get(l * nh + m, j);
                        if k.is_zero(coeff) {
                            continue;
                        }
                        for (p, x) in a.product_entry(i, l) {
                            let px = k.mul(coeff, x);
                            for (r, y) in &w[m][c][d] {
                                let idx = p * nh + r;
                                v[idx] = k.mul_add(&v[idx], &px, y);
                            }
                        }
                    }
                }
                table.push(sparse(k, &v));
            }
        }
        let algebra = StructureAlgebra::from_sparse(k, labels, table)?;
        let one_a = a.unit()?;
        let eps = h.counit().to_vec();
        let a_embedding = Matrix::from_fn(k, na * nh, na, |r, col| {
            if r / nh == col {
                eps[r % nh].clone()
            } else {
                k.zero()
            }
        });
        let dual_embedding = Matrix::from_fn(k, na * nh, nh, |r, col| {
            if r % nh == col {
                one_a[r / nh].clone()
            } else {
                k.zero()
            }
        });
        let out = SmashAlgebra { algebra, a_embedding, dual_embedding };
        out.verify(self)?;
        Ok(out)
    }

    /// `((A # H^) # H, alpha^^_{S^2})`: `(x # h)(y # k) = x (h_1 . y) # h_2 k`
    /// with `h . (a # w) = a # w(- h)`, and
    /// `(a # w) # h -> (a # w) # h_1 (x) S^2(h_2)`.
    ///
    /// Verifies the comodule algebra axioms, that the coinvariants are
    /// exactly `A # H^`, and that the coaction is Galois.
    pub fn double_smash_twisted(&self) -> Result<DoubleSmash<K>> {
        let smash = self.smash()?;
        let k = self.field();
        let h = self.hopf();
        let ha = h.algebra();
        let s_alg = &smash.algebra;
        let (ns, nh) = (s_alg.dim(), h.dim());
        let delta = h.coproduct();
        // h_p . (e_j # e^d) = sum_k (e_k h_p)_d e_j # e^k.
        let act: Vec<Matrix<K>> = (0..nh)
            .map(|p| {
                Matrix::from_fn(k, ns, ns, |r, c| {
                    let (j, d) = (c / nh, c % nh);
                    let (j2, kk) = (r / nh, r % nh);
                    if j != j2 {
                        return k.zero();
                    }
                    ha.product_entry(kk, p).iter().find(|(l, _)| *l == d).map_or(k.zero(), |(_, x)| x.clone())
                })
            })
            .collect();
        let n = ns * nh;
        let labels = (0..n).map(|x| format!("{}#{}", s_alg.labels()[x / nh], h.labels()[x % nh])).collect();
        let basis_s: Vec<Vec<K::Elem>> = (0..ns).map(|s| s_alg.basis_vector(s)).collect();
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (s1, m) = (x / nh, x % nh);
            for y in 0..n {
                let (s2, nn) = (y / nh, y % nh);
                let mut v = vec![k.zero(); n];
                for p in 0..nh {
                    for q in 0..nh {
                        let coeff = delta.get(p * nh + q, m);
                        if k.is_zero(coeff) {
                            continue;
                        }
                        let moved = s_alg.mul(&basis_s[s1], &act[p].column(s2));
                        for (r, hq) in ha.product_entry(q, nn) {
                            let c = k.mul(coeff, hq);
                            for (s, z) in moved.iter().enumerate() {
                                if !k.is_zero(z) {
                                    v[s * nh + r] = k.mul_add(&v[s * nh + r], &c, z);
                                }
                            }
                        }
                    }
                }
                table.push(sparse(k, &v));
            }
        }
        let algebra = StructureAlgebra::from_sparse(k, labels, table)?;
        let s2 = h.antipode().pow(2);
        let mut coaction = Matrix::zeros(k, n * nh, n);
        for x in 0..n {
            let (s, m) = (x / nh, x % nh);
            for p in 0..nh {
                for q in 0..nh {
                    let coeff = delta.get(p * nh + q, m);
                    if k.is_zero(coeff) {
                        continue;
                    }
                    for t in 0..nh {
                        let z = s2.get(t, q);
                        if !k.is_zero(z) {
                            coaction.add_at((s * nh + p) * nh + t, x, &k.mul(coeff, z));
                        }
                    }
                }
            }
        }
        let comodule = ComoduleAlgebra::new(h.clone(), algebra, coaction)?;
        comodule.check_comodule_algebra(None)?.into_result()?;
        let one_h = h.unit()?;
        let smash_embedding = Matrix::from_fn(k, n, ns, |r, c| if r / nh == c { one_h[r % nh].clone() } else { k.zero() });
        let embedded = Subspace::span(k, n, smash_embedding.columns());
        if comodule.coinvariants()? != embedded {
            return Err(Error::AxiomViolation("coinvariants of the double smash differ from the smash".into()));
        }
        // D is free over S on the 1 # h_j, so D (x)_S D = D (x) span(1 # h_j)
        // and can is the square matrix of x (x) (1 # h_j) -> x y_0 (x) y_1.
        let d = comodule.algebra();
        let gens: Vec<Vec<K::Elem>> = (0..nh)
            .map(|j| {
                let mut v = vec![k.zero(); n];
                for (s, c) in s_alg.unit()?.iter().enumerate() {
                    v[s * nh + j] = c.clone();
                }
                Ok(v)
            })
            .collect::<Result<_>>()?;
        for s in 0..ns {
            for (j, g) in gens.iter().enumerate() {
                if d.mul(&smash_embedding.column(s), g) != d.basis_vector(s * nh + j) {
                    return Err(Error::AxiomViolation("double smash is not free over the smash on 1 # H".into()));
                }
            }
        }
        let mut can = Matrix::zeros(k, n * nh, n * nh);
        for (j, g) in gens.iter().enumerate() {
            let img = comodule.alpha(g);
            for x in 0..n {
                for l in 0..n {
                    for t in 0..nh {
                        let c = &img[l * nh + t];
                        if k.is_zero(c) {
                            continue;
                        }
                        for (r, z) in d.product_entry(x, l) {
                            can.add_at(r * nh + t, x * nh + j, &k.mul(c, z));
                        }
                    }
                }
            }
        }
        if !can.is_invertible() {
            return Err(Error::AxiomViolation("double smash coaction is not Galois".into()));
        }
        Ok(DoubleSmash { smash, comodule, smash_embedding, h_action: act })
    }
}

impl<K: Field> SmashAlgebra<K> {
    fn verify(&self, base: &ComoduleAlgebra<K>) -> Result<()> {
        let k = base.field();
        let s = &self.algebra;
        let a = base.algebra();
        let h = base.hopf();
        let (na, nh) = (a.dim(), h.dim());
        if let Some((i, j, l)) = s.check_associative(None)? {
            return Err(Error::AxiomViolation(format!("smash product is not associative at ({i}, {j}, {l})")));
        }
        let one_a = a.unit()?;
        let unit = tensor_vec(k, &one_a, h.counit());
        if s.find_unit().as_ref() != Some(&unit) {
            return Err(Error::AxiomViolation("1 # eps is not the unit of the smash product".into()));
        }
        let dual = h.dual_hopf()?;
        let hd = dual.algebra();
        for i in 0..na {
            for j in 0..na {
                let lhs = s.mul(&self.a_embedding.column(i), &self.a_embedding.column(j));
                if lhs != self.a_embedding.mul_vec(&a.mul(&a.basis_vector(i), &a.basis_vector(j))) {
                    return Err(Error::AxiomViolation("a -> a # eps is not multiplicative".into()));
                }
            }
        }
        for c in 0..nh {
            for d in 0..nh {
                let lhs = s.mul(&self.dual_embedding.column(c), &self.dual_embedding.column(d));
                if lhs != self.dual_embedding.mul_vec(&hd.mul(&hd.basis_vector(c), &hd.basis_vector(d))) {
                    return Err(Error::AxiomViolation("w -> 1 # w is not multiplicative".into()));
                }
            }
        }
        // (1 # e^c)(e_j # eps) = sum (e_j)_0 # e^c((e_j)_1 -).
        let alpha = base.coaction();
        for c in 0..nh {
            for j in 0..na {
                let lhs = s.mul(&self.dual_embedding.column(c), &self.a_embedding.column(j));
                let mut rhs = vec![k.zero(); na * nh];
                for l in 0..na {
                    for m in 0..nh {
                        let coeff = alpha.get(l * nh + m, j);
                        if k.is_zero(coeff) {
                            continue;
                        }
                        for kk in 0..nh {
                            if let Some((_, x)) = h.algebra().product_entry(m, kk).iter().find(|(r, _)| *r == c) {
                                rhs[l * nh + kk] = k.mul_add(&rhs[l * nh + kk], coeff, x);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::AxiomViolation("flip identity fails in the smash product".into()));
                }
            }
        }
        Ok(())
    }

    /// `a # w` as a vector of the smash product.
    pub fn element(&self, a: &[K::Elem], w: &[K::Elem]) -> Vec<K::Elem> {
        tensor_vec(self.algebra.field(), a, w)
    }
}
