use super::comodule_algebra::ComoduleAlgebra;
use super::smash::DoubleSmash;
use crate::assoc::{default_labels, flatten, MoritaContextData};
use crate::error::{Error, Result};
use crate::examples::matrix_algebra;
use crate::exactla::{Field, Matrix, Subspace};

/// `End_A(V)` for the right `A`-module `V = (A # H^) + A`, inside `End(V)`,
/// with blocks `[[D, M], [N, A]]`: `D = (A # H^) # H` acting on
/// `M = A # H^`, `M` as maps `A -> M`, `N = Hom_A(M, A)` and `A` acting by
/// left multiplication.
///
/// `End(V)` coacts through `w . T = Theta(w_1) T Theta(S^(w_2))`, where
/// `Theta(w)` multiplies `A # H^` on the right by `1 # S^(w)` and acts on
/// `A` by `(id (x) w) alpha`.
#[derive(Clone, Debug)]
pub struct BidualityContext<K: Field> {
    /// `End(V)` with matrix units `E_rc` at `r * dim V + c`.
    pub ambient: ComoduleAlgebra<K>,
    /// `dim End(V) x dim D`.
    pub rho: Matrix<K>,
    /// `dim End(V) x dim A`.
    pub a_embedding: Matrix<K>,
    /// `D`, `M`, `N`, `A` inside `End(V)`.
    pub blocks: [Subspace<K>; 4],
    dim_v: usize,
}

fn embed<K: Field>(k: &K, nv: usize, row0: usize, col0: usize, m: &Matrix<K>) -> Vec<K::Elem> {
    let mut v = vec![k.zero(); nv * nv];
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            v[(row0 + r) * nv + col0 + c] = m.get(r, c).clone();
        }
    }
    v
}

impl<K: Field> ComoduleAlgebra<K> {
    /// Builds the context and checks that `D -> End(M)` is an algebra map
    /// onto `End_A(M)`, that the coaction of `End(V)` restricts to the
    /// twisted coaction on `D` and to `alpha` on `A`, and that every block
    /// is a subcomodule.
    pub fn biduality_context(&self, double: &DoubleSmash<K>) -> Result<BidualityContext<K>> {
        let k = self.field();
        let a = self.algebra();
        let h = self.hopf();
        let s = &double.smash.algebra;
        let d = double.comodule.algebra();
        let (na, nh) = (a.dim(), h.dim());
        let ns = s.dim();
        let nv = ns + na;
        let nd = d.dim();

        let rho_mats: Vec<Matrix<K>> =
            (0..nd).map(|x| s.left_mult(&s.basis_vector(x / nh)).mul(&double.h_action[x % nh])).collect();
        for x in 0..nd {
            for y in 0..nd {
                let xy = d.mul(&d.basis_vector(x), &d.basis_vector(y));
                let mut lhs = Matrix::zeros(k, ns, ns);
                for (z, c) in xy.iter().enumerate() {
                    if !k.is_zero(c) {
                        lhs = lhs.add(&rho_mats[z].scale(c));
                    }
                }
                if lhs != rho_mats[x].mul(&rho_mats[y]) {
                    return Err(Error::AxiomViolation("D does not act on A # H^".into()));
                }
            }
        }
        let rho_cols: Vec<Vec<K::Elem>> = rho_mats.iter().map(|m| embed(k, nv, 0, 0, m)).collect();
        let rho = Matrix::from_columns(k, &rho_cols, nv * nv);
        if rho.rank() != nd {
            return Err(Error::AxiomViolation("D acts on A # H^ with a kernel".into()));
        }

        let right_m: Vec<Matrix<K>> = (0..na).map(|b| s.right_mult(&double.smash.a_embedding.column(b))).collect();
        let right_a: Vec<Matrix<K>> = (0..na).map(|b| a.right_mult(&a.basis_vector(b))).collect();
        let m_block: Vec<Vec<K::Elem>> = (0..ns)
            .map(|m| {
                let t = Matrix::from_columns(k, &right_m.iter().map(|r| r.column(m)).collect::<Vec<_>>(), ns);
                embed(k, nv, 0, ns, &t)
            })
            .collect();
        // f R^M_b = R^A_b f for f: M -> A, unknowns f[r][c] at r * ns + c.
        let mut eqs = Matrix::zeros(k, na * na * ns, na * ns);
        for b in 0..na {
            for r in 0..na {
                for c in 0..ns {
                    let row = (b * na + r) * ns + c;
                    for t in 0..ns {
                        eqs.add_at(row, r * ns + t, right_m[b].get(t, c));
                    }
                    for t in 0..na {
                        eqs.add_at(row, t * ns + c, &k.neg(right_a[b].get(r, t)));
                    }
                }
            }
        }
        let n_block: Vec<Vec<K::Elem>> = eqs
            .kernel()
            .basis()
            .iter()
            .map(|f| embed(k, nv, ns, 0, &Matrix::from_fn(k, na, ns, |r, c| f[r * ns + c].clone())))
            .collect();
        let a_cols: Vec<Vec<K::Elem>> = (0..na).map(|b| embed(k, nv, ns, ns, &a.left_mult(&a.basis_vector(b)))).collect();
        let a_embedding = Matrix::from_columns(k, &a_cols, nv * nv);

        let theta: Vec<Matrix<K>> = (0..nh)
            .map(|c| {
                let on_m = s.right_mult(&double.smash.dual_embedding.column(c));
                let on_a = Matrix::from_fn(k, na, na, |l, col| self.coaction().get(l * nh + c, col).clone());
                Matrix::from_fn(k, nv, nv, |r, col| match (r < ns, col < ns) {
                    (true, true) => on_m.get(r, col).clone(),
                    (false, false) => on_a.get(r - ns, col - ns).clone(),
                    _ => k.zero(),
                })
            })
            .collect();
        let sh = h.antipode();
        let theta_s: Vec<Matrix<K>> = (0..nh)
            .map(|b| {
                (0..nh).fold(Matrix::zeros(k, nv, nv), |acc, t| {
                    let c = sh.get(b, t);
                    if k.is_zero(c) {
                        acc
                    } else {
                        acc.add(&theta[t].scale(c))
                    }
                })
            })
            .collect();
        let ne = nv * nv;
        let ha = h.algebra();
        let mut coaction = Matrix::zeros(k, ne * nh, ne);
        for z in 0..ne {
            let (r, c) = (z / nv, z % nv);
            for x in 0..nh {
                for y in 0..nh {
                    for (t, coeff) in ha.product_entry(x, y) {
                        let (left, right) = (&theta[x], &theta_s[y]);
                        for i in 0..nv {
                            let li = left.get(i, r);
                            if k.is_zero(li) {
                                continue;
                            }
                            let li = k.mul(li, coeff);
                            for j in 0..nv {
                                let rj = right.get(c, j);
                                if !k.is_zero(rj) {
                                    coaction.add_at((i * nv + j) * nh + t, z, &k.mul(&li, rj));
                                }
                            }
                        }
                    }
                }
            }
        }
        let ambient = ComoduleAlgebra::new(h.clone(), matrix_algebra(k, nv), coaction)?;

        for x in 0..nd {
            let lhs = ambient.alpha(&rho.column(x));
            let rhs = rho.apply_left_leg(&double.comodule.coaction().column(x), nh);
            if lhs != rhs {
                return Err(Error::AxiomViolation(format!(
                    "coaction on End(V) differs from the twisted coaction at {}",
                    d.labels()[x]
                )));
            }
        }
        for b in 0..na {
            if ambient.alpha(&a_embedding.column(b)) != a_embedding.apply_left_leg(&self.coaction().column(b), nh) {
                return Err(Error::AxiomViolation("coaction on End(V) differs from alpha on A".into()));
            }
        }
        let blocks = [
            Subspace::span(k, ne, rho_cols),
            Subspace::span(k, ne, m_block),
            Subspace::span(k, ne, n_block),
            Subspace::span(k, ne, a_cols),
        ];
        for blk in &blocks {
            if !ambient.is_subcomodule(blk) {
                return Err(Error::AxiomViolation("a block of End_A(V) is not a subcomodule".into()));
            }
        }
        let q = blocks.iter().fold(Subspace::zero(k, ne), |acc, b| acc.join(b));
        let (qc, _) = ambient.restrict(&q, default_labels("q", q.dim()))?;
        qc.check_comodule_algebra(None)?.into_result()?;
        Ok(BidualityContext { ambient, rho, a_embedding, blocks, dim_v: nv })
    }
}

impl<K: Field> BidualityContext<K> {
    /// `E = rho(e) + 1_A` for a coinvariant idempotent `e` of `D`, or the
    /// unit when `e` is `None`.
    fn cut(&self, e: Option<&[K::Elem]>) -> Result<Vec<K::Elem>> {
        let k = self.ambient.field();
        let nv = self.dim_v;
        let mut big = match e {
            Some(e) => self.rho.mul_vec(e),
            None => self.rho.mul_vec(&self.rho_unit()?),
        };
        let na = self.a_embedding.cols();
        for i in nv - na..nv {
            big[i * nv + i] = k.one();
        }
        let alg = self.ambient.algebra();
        if alg.mul(&big, &big) != big {
            return Err(Error::NotIdempotent);
        }
        let one = self.ambient.hopf().unit()?;
        if self.ambient.alpha(&big) != crate::hopf::tensor_vec(k, &big, &one) {
            return Err(Error::InvalidInput("idempotent is not coinvariant".into()));
        }
        Ok(big)
    }

    fn rho_unit(&self) -> Result<Vec<K::Elem>> {
        let k = self.ambient.field();
        let nv = self.dim_v;
        let ns = nv - self.a_embedding.cols();
        let id = flatten(&Matrix::from_fn(k, nv, nv, |r, c| if r == c && r < ns { k.one() } else { k.zero() }));
        let sol = self
            .rho
            .solve(&Matrix::column_vector(k, &id))?
            .ok_or_else(|| Error::AxiomViolation("D has no unit acting as the identity".into()))?;
        Ok(sol.column(0))
    }

    /// Blocks `[[eDe, eM], [Ne, A]]`, each checked to be a subcomodule.
    pub fn corner_blocks(&self, e: Option<&[K::Elem]>) -> Result<[Subspace<K>; 4]> {
        let big = self.cut(e)?;
        let alg = self.ambient.algebra();
        let k = alg.field();
        let n = alg.dim();
        let [d, m, nb, a] = &self.blocks;
        let out = [
            Subspace::span(k, n, d.basis().iter().map(|x| alg.mul(&alg.mul(&big, x), &big)).collect()),
            Subspace::span(k, n, m.basis().iter().map(|x| alg.mul(&big, x)).collect()),
            Subspace::span(k, n, nb.basis().iter().map(|x| alg.mul(x, &big)).collect()),
            a.clone(),
        ];
        if out.iter().any(|b| !self.ambient.is_subcomodule(b)) {
            return Err(Error::AxiomViolation("corner block is not a subcomodule".into()));
        }
        Ok(out)
    }

    /// The equivariant context between `eDe` and `A`.
    pub fn context(&self, e: Option<&[K::Elem]>) -> Result<MoritaContextData<K>> {
        let [d, m, n, a] = self.corner_blocks(e)?;
        MoritaContextData::from_subspaces(self.ambient.algebra(), &d, &m, &n, &a)
    }
}
