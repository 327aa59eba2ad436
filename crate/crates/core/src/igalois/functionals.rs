use super::IGaloisObject;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};
use crate::hopf::{dot, gram, tensor_vec};

/// `Phi(a) = sum_i phi_i(p_i a p_i) p_i` read off the averaging operator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiComponents<K: Field> {
    /// `a -> phi_i(p_i a p_i)` as functionals on `A`.
    pub phi_i: Vec<Vec<K::Elem>>,
    pub phi_a: Vec<K::Elem>,
    pub reynolds: Matrix<K>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFunctionalData<K: Field> {
    pub phi: PhiComponents<K>,
    /// Basis of `{psi : (psi (x) id) alpha(x) = psi(x) 1}`.
    pub space: Vec<Vec<K::Elem>>,
    pub psi_a: Vec<K::Elem>,
    /// Coefficients of `psi_a` in `space`.
    pub completion: Vec<u32>,
    pub mu: Vec<usize>,
    pub left_complete: bool,
    pub right_complete: bool,
}

impl<K: Field> InvariantFunctionalData<K> {
    pub fn mu_is_identity(&self) -> bool {
        self.mu.iter().enumerate().all(|(i, &j)| i == j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularData<K: Field> {
    /// `phi_A(x theta(w)) = psi_A(x w)`.
    pub theta: Matrix<K>,
    /// `phi_A(theta'(x) y) = psi_A(x y)`.
    pub theta_prime: Matrix<K>,
    pub delta_a: Vec<K::Elem>,
    pub delta_a_inv: Vec<K::Elem>,
    pub delta_a_prime: Vec<K::Elem>,
    pub delta_a_prime_inv: Vec<K::Elem>,
    /// `p_i delta_A^-1 delta'_A p_i = nu_i p_i`.
    pub nu: Vec<K::Elem>,
    /// `phi_A(xy) = phi_A(y sigma_A(x))`.
    pub sigma_a: Matrix<K>,
    /// `psi_A(xy) = psi_A(y sigma'_A(x))`.
    pub sigma_a_prime: Matrix<K>,
}

fn violation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::AxiomViolation(msg.into()))
}

impl<K: Field> IGaloisObject<K> {
    pub fn phi_components(&self) -> Result<&PhiComponents<K>> {
        self.phi.get_or_init(|| self.compute_phi()).as_ref().map_err(Clone::clone)
    }

    fn compute_phi(&self) -> Result<PhiComponents<K>> {
        let k = self.field();
        let a = self.base.algebra();
        let n = a.dim();
        let nh = self.base.hopf().dim();
        let reynolds = self.base.reynolds()?;
        let ps = Matrix::from_columns(k, &self.idempotents, n);
        let coeffs = ps
            .solve(&reynolds)?
            .ok_or_else(|| Error::AxiomViolation("averaging leaves the span of the idempotents".into()))?;
        let phi_i: Vec<Vec<K::Elem>> = coeffs.to_rows();
        let phi_a: Vec<K::Elem> =
            (0..n).map(|x| phi_i.iter().fold(k.zero(), |acc, f| k.add(&acc, &f[x]))).collect();
        // phi_i must see only A_ii.
        for (i, f) in phi_i.iter().enumerate() {
            for x in 0..n {
                let cut = a.mul(&a.mul(&self.idempotents[i], &a.basis_vector(x)), &self.idempotents[i]);
                if dot(k, f, &cut) != f[x] {
                    return violation(format!("phi_{i} is not supported on A_{i}{i}"));
                }
            }
        }
        if !gram(a, &phi_a).is_invertible() {
            return violation("phi_A is not faithful");
        }
        let delta = &self.base.hopf().invariant_functionals()?.delta;
        let row = Matrix::from_rows(k, vec![phi_a.clone()], n);
        for x in 0..n {
            let lhs = row.apply_left_leg(&self.base.coaction().column(x), nh);
            let rhs: Vec<K::Elem> = delta.iter().map(|d| k.mul(&phi_a[x], d)).collect();
            if lhs != rhs {
                return violation(format!("(phi_A (x) id) alpha != phi_A delta at basis vector {x}"));
            }
        }
        let m = self.index_count();
        for i in 0..m {
            for j in 0..m {
                let (aij, aji) = (&self.components[i][j], &self.components[j][i]);
                if aij.dim() != aji.dim() {
                    return violation(format!("dim A_{i}{j} != dim A_{j}{i}"));
                }
                let g = Matrix::from_fn(k, aij.dim(), aji.dim(), |r, c| {
                    dot(k, &phi_a, &a.mul(&aij.basis()[r], &aji.basis()[c]))
                });
                if g.rank() != aij.dim() {
                    return violation(format!("pairing A_{i}{j} x A_{j}{i} is degenerate"));
                }
            }
        }
        Ok(PhiComponents { phi_i, phi_a, reynolds })
    }

    /// Whether `f` is nonzero on each `A_ij`.
    pub fn component_pattern(&self, f: &[K::Elem]) -> Vec<Vec<bool>> {
        let k = self.field();
        self.components
            .iter()
            .map(|row| row.iter().map(|s| s.basis().iter().any(|v| !k.is_zero(&dot(k, f, v)))).collect())
            .collect()
    }

    /// Basis of the left invariant functionals on `A`.
    pub fn invariant_functional_space(&self) -> Result<Vec<Vec<K::Elem>>> {
        let k = self.field();
        let n = self.base.dim();
        let nh = self.base.hopf().dim();
        let one = self.base.hopf().unit()?;
        let alpha = self.base.coaction();
        // Row (x, t): sum_l psi_l alpha[(l, t), x] - psi_x 1_t.
        let m = Matrix::from_fn(k, n * nh, n, |r, l| {
            let (x, t) = (r / nh, r % nh);
            let d = if l == x { one[t].clone() } else { k.zero() };
            k.sub(alpha.get(l * nh + t, x), &d)
        });
        Ok(m.kernel().basis().to_vec())
    }

    /// Combinations of the invariant space with coefficients in `0..=3`,
    /// single basis vectors first, that are left complete. At most `limit`
    /// distinct functionals.
    pub fn completions(&self, limit: usize) -> Result<Vec<(Vec<u32>, Vec<K::Elem>)>> {
        let k = self.field();
        let space = self.invariant_functional_space()?;
        let d = space.len();
        let n = self.base.dim();
        let mut coeffs: Vec<Vec<u32>> = (0..4usize.pow(d as u32))
            .map(|mut z| {
                (0..d)
                    .map(|_| {
                        let c = (z % 4) as u32;
                        z /= 4;
                        c
                    })
                    .collect()
            })
            .collect();
        coeffs.sort_by_key(|c| (c.iter().sum::<u32>(), std::cmp::Reverse(c.clone())));
        let mut out: Vec<(Vec<u32>, Vec<K::Elem>)> = Vec::new();
        for c in coeffs {
            if out.len() >= limit {
                break;
            }
            let mut psi = vec![k.zero(); n];
            for (v, &ci) in space.iter().zip(&c) {
                if ci != 0 {
                    let s = k.from_i64(ci as i64);
                    psi.iter_mut().zip(v).for_each(|(p, x)| *p = k.mul_add(p, &s, x));
                }
            }
            let left = self.component_pattern(&psi).iter().all(|r| r.iter().any(|&b| b));
            if left && !out.iter().any(|(_, q)| *q == psi) {
                out.push((c, psi));
            }
        }
        Ok(out)
    }

    /// The permutation `mu` with `psi_ij != 0` iff `j = mu(i)`.
    pub fn mu_of(&self, psi: &[K::Elem]) -> Result<Vec<usize>> {
        let pat = self.component_pattern(psi);
        let mut mu = Vec::with_capacity(pat.len());
        for (i, row) in pat.iter().enumerate() {
            let hits: Vec<usize> = row.iter().enumerate().filter(|(_, &b)| b).map(|(j, _)| j).collect();
            match hits.as_slice() {
                [j] => mu.push(*j),
                _ => return violation(format!("psi_{i}- is nonzero on {} components", hits.len())),
            }
        }
        let mut seen = vec![false; mu.len()];
        for &j in &mu {
            if std::mem::replace(&mut seen[j], true) {
                return violation("mu is not a bijection");
            }
        }
        Ok(mu)
    }

    pub fn invariant_functionals(&self) -> Result<&InvariantFunctionalData<K>> {
        self.functionals.get_or_init(|| self.compute_functionals()).as_ref().map_err(Clone::clone)
    }

    fn compute_functionals(&self) -> Result<InvariantFunctionalData<K>> {
        let phi = self.phi_components()?.clone();
        let space = self.invariant_functional_space()?;
        if space.len() != self.index_count() {
            return violation(format!(
                "invariant functional space has dimension {}, expected {}",
                space.len(),
                self.index_count()
            ));
        }
        let found = self.completions(3)?;
        let Some((completion, psi_a)) = found.first().cloned() else {
            return Err(Error::NoCompleteFunctional);
        };
        let mu = self.mu_of(&psi_a)?;
        for (c, psi) in &found[1..] {
            if self.mu_of(psi)? != mu {
                return violation(format!("completion {c:?} gives a different mu"));
            }
        }
        for (r, v) in space.iter().enumerate() {
            let pat = self.component_pattern(v);
            for (i, row) in pat.iter().enumerate() {
                for (j, &b) in row.iter().enumerate() {
                    if b && j != mu[i] {
                        return violation(format!("basis solution {r} is nonzero on A_{i}{j}"));
                    }
                }
            }
        }
        if !gram(self.base.algebra(), &psi_a).is_invertible() {
            return violation("psi_A is not faithful");
        }
        let pat = self.component_pattern(&psi_a);
        let left_complete = pat.iter().all(|r| r.iter().any(|&b| b));
        let right_complete = (0..pat.len()).all(|j| pat.iter().any(|r| r[j]));
        if left_complete != right_complete {
            return violation("left and right completeness disagree");
        }
        Ok(InvariantFunctionalData { phi, space, psi_a, completion, mu, left_complete, right_complete })
    }

    /// Modular data for the chosen complete functional `psi_A`.
    pub fn modular_data(&self) -> Result<&ModularData<K>> {
        self.modular
            .get_or_init(|| self.modular_data_with(&self.invariant_functionals()?.psi_a))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Modular data for another complete invariant functional. `delta_A`
    /// and `delta'_A` scale with `psi_A` componentwise.
    pub fn modular_data_with(&self, psi_a: &[K::Elem]) -> Result<ModularData<K>> {
        let k = self.field();
        let a = self.base.algebra();
        let data = self.invariant_functionals()?;
        let space = Subspace::span(k, a.dim(), data.space.clone());
        if !space.contains(psi_a) {
            return violation("functional is not invariant");
        }
        let mu = self.mu_of(psi_a)?;
        let g = gram(a, &data.phi.phi_a);
        let p = gram(a, psi_a);
        let g_inv = g.inverse().ok_or(Error::NotFaithful)?;
        let theta = g_inv.mul(&p);
        let theta_prime = g.transpose().inverse().ok_or(Error::NotFaithful)?.mul(&p.transpose());
        if !theta.is_invertible() || !theta_prime.is_invertible() {
            return violation("theta is singular");
        }
        let one = a.unit()?;
        let delta_a = theta.mul_vec(&one);
        let delta_a_prime = theta_prime.mul_vec(&one);
        if theta != a.right_mult(&delta_a) {
            return violation("theta is not right multiplication by delta_A");
        }
        if theta_prime != a.left_mult(&delta_a_prime) {
            return violation("theta' is not left multiplication by delta'_A");
        }
        let inverse = |x: &[K::Elem]| -> Result<Vec<K::Elem>> {
            let sol = a
                .left_mult(x)
                .solve(&Matrix::column_vector(k, &one))?
                .ok_or_else(|| Error::AxiomViolation("modular element is not invertible".into()))?;
            let y = sol.column(0);
            if a.mul(&y, x) != one {
                return violation("modular element has no two-sided inverse");
            }
            Ok(y)
        };
        let delta_a_inv = inverse(&delta_a)?;
        let delta_a_prime_inv = inverse(&delta_a_prime)?;

        let mut kappa = vec![0; mu.len()];
        for (i, &j) in mu.iter().enumerate() {
            kappa[j] = i;
        }
        for i in 0..self.index_count() {
            for j in 0..self.index_count() {
                let src = &self.components[i][j];
                if src.map(&theta) != self.components[i][kappa[j]] {
                    return violation(format!("theta does not map A_{i}{j} onto A_{i}{}", kappa[j]));
                }
                if src.map(&theta_prime) != self.components[mu[i]][j] {
                    return violation(format!("theta' does not map A_{i}{j} onto A_{}{j}", mu[i]));
                }
            }
        }

        let hopf = self.base.hopf();
        let delta = &hopf.invariant_functionals()?.delta;
        for (name, d) in [("delta_A", &delta_a), ("delta'_A", &delta_a_prime)] {
            if self.base.alpha(d) != tensor_vec(k, d, delta) {
                return violation(format!("alpha({name}) != {name} (x) delta"));
            }
        }

        self.check_theta_explicit(&theta, psi_a)?;

        let mut nu = Vec::with_capacity(self.index_count());
        for (i, pi) in self.idempotents.iter().enumerate() {
            let z = a.mul(&a.mul(&a.mul(pi, &delta_a_inv), &delta_a_prime), pi);
            let lead = pi.iter().position(|c| !k.is_zero(c)).expect("nonzero idempotent");
            let c = k.div(&z[lead], &pi[lead]).expect("nonzero pivot");
            if z != pi.iter().map(|x| k.mul(&c, x)).collect::<Vec<_>>() {
                return violation(format!("p_{i} delta_A^-1 delta'_A p_{i} is not a multiple of p_{i}"));
            }
            let lhs = a.mul(&delta_a_prime, pi);
            let rhs: Vec<K::Elem> = a.mul(&self.idempotents[mu[i]], &delta_a).iter().map(|x| k.mul(&c, x)).collect();
            if lhs != rhs {
                return violation(format!("delta'_{i} != nu_{i} delta_mu({i})"));
            }
            nu.push(c);
        }

        let sigma_a = g_inv.mul(&g.transpose());
        check_automorphism(a, &sigma_a, "sigma_A")?;
        let sigma_a_prime = p.inverse().ok_or(Error::NotFaithful)?.mul(&p.transpose());
        check_automorphism(a, &sigma_a_prime, "sigma'_A")?;
        let conj = a.left_mult(&delta_a).mul(&a.right_mult(&delta_a_inv)).mul(&sigma_a);
        if conj != sigma_a_prime {
            return violation("sigma'_A != delta_A sigma_A(-) delta_A^-1");
        }
        Ok(ModularData {
            theta,
            theta_prime,
            delta_a,
            delta_a_inv,
            delta_a_prime,
            delta_a_prime_inv,
            nu,
            sigma_a,
            sigma_a_prime,
        })
    }

    /// `theta(w) = (id (x) psi_A) s canr^-1 (alpha(w)(1 (x) h'))` with
    /// `phi(h') = 1`, compared with the solved `theta`.
    fn check_theta_explicit(&self, theta: &Matrix<K>, psi_a: &[K::Elem]) -> Result<()> {
        let k = self.field();
        let a = self.base.algebra();
        let hopf = self.base.hopf();
        let n = a.dim();
        let h_prime = normalized_h(hopf)?;
        let right_inv = self.base.right_galois_map()?.inverse()?;
        let one = a.unit()?;
        let row = Matrix::from_rows(k, vec![psi_a.to_vec()], n);
        for w in 0..n {
            let v = a.tensor_mul(hopf.algebra(), &self.base.alpha(&a.basis_vector(w)), &tensor_vec(k, &one, &h_prime));
            let t = self.splitting.mul_vec(&right_inv.mul_vec(&v));
            if row.apply_right_leg(&t, n) != theta.column(w) {
                return violation(format!("explicit theta disagrees with the solved theta at basis vector {w}"));
            }
        }
        Ok(())
    }

    /// `sigma_A` from `phi_A(xy) = phi_A(y sigma_A(x))`.
    pub fn nakayama(&self) -> Result<Matrix<K>> {
        Ok(self.modular_data()?.sigma_a.clone())
    }

    /// `sigma_A` assembled from `x = sum_i phi_A(p h^[1;i] q) h^[2;i]` and
    /// `x' = sum_i g^[1;i] phi_A(p g^[2;i] q)`, `g = S^-1 sigma(h)`, over
    /// all basis triples `(h, p, q)`.
    pub fn nakayama_explicit(&self) -> Result<Matrix<K>> {
        let k = self.field();
        let a = self.base.algebra();
        let hopf = self.base.hopf();
        let (n, nh) = (a.dim(), hopf.dim());
        let phi_a = &self.phi_components()?.phi_a;
        let sigma_h = &hopf.invariant_functionals()?.sigma;
        let s_inv = hopf.antipode_inverse()?;
        let twist = s_inv.mul(sigma_h);
        let betas: Vec<Vec<K::Elem>> = (0..nh)
            .map(|h| {
                let mut acc = vec![k.zero(); n * n];
                for i in 0..self.index_count() {
                    acc.iter_mut().zip(self.beta(i, h)).for_each(|(x, y)| *x = k.add(x, &y));
                }
                acc
            })
            .collect();
        let twisted: Vec<Vec<K::Elem>> = (0..nh)
            .map(|h| {
                let mut acc = vec![k.zero(); n * n];
                for (t, b) in betas.iter().enumerate() {
                    let c = twist.get(t, h);
                    if !k.is_zero(c) {
                        acc.iter_mut().zip(b).for_each(|(x, y)| *x = k.mul_add(x, c, y));
                    }
                }
                acc
            })
            .collect();
        let basis: Vec<Vec<K::Elem>> = (0..n).map(|x| a.basis_vector(x)).collect();
        let mut pairs = Vec::with_capacity(nh * n * n);
        for p in 0..n {
            let left: Vec<Vec<K::Elem>> = basis.iter().map(|x| a.mul(&basis[p], x)).collect();
            for q in 0..n {
                let f: Vec<K::Elem> = left.iter().map(|px| dot(k, phi_a, &a.mul(px, &basis[q]))).collect();
                for h in 0..nh {
                    let (b, b2) = (&betas[h], &twisted[h]);
                    let x: Vec<K::Elem> = (0..n)
                        .map(|col| (0..n).fold(k.zero(), |acc, r| k.mul_add(&acc, &f[r], &b[r * n + col])))
                        .collect();
                    let xp: Vec<K::Elem> = (0..n).map(|r| dot(k, &b2[r * n..(r + 1) * n], &f)).collect();
                    pairs.push((x, xp));
                }
            }
        }
        let mut span = Subspace::zero(k, n);
        let mut chosen = Vec::new();
        for (idx, (x, _)) in pairs.iter().enumerate() {
            if span.dim() == n {
                break;
            }
            if span.insert(x) {
                chosen.push(idx);
            }
        }
        if span.dim() != n {
            return violation("the elements x do not span A");
        }
        let xs = Matrix::from_columns(k, &chosen.iter().map(|&i| pairs[i].0.clone()).collect::<Vec<_>>(), n);
        let xps = Matrix::from_columns(k, &chosen.iter().map(|&i| pairs[i].1.clone()).collect::<Vec<_>>(), n);
        let sigma = xps.mul(&xs.inverse().expect("spanning columns"));
        for (x, xp) in &pairs {
            if sigma.mul_vec(x) != *xp {
                return violation("x -> x' is not well defined");
            }
        }
        Ok(sigma)
    }

    /// Both routes to `sigma_A` agree; the error names the first basis
    /// vector where they differ.
    pub fn check_nakayama_routes(&self) -> Result<()> {
        let solved = self.nakayama()?;
        let explicit = self.nakayama_explicit()?;
        match (0..solved.cols()).find(|&c| solved.column(c) != explicit.column(c)) {
            Some(c) => violation(format!(
                "Nakayama routes disagree at basis vector {}",
                self.base.algebra().labels()[c]
            )),
            None => Ok(()),
        }
    }

    /// `h^[1;i] Phi(h^[2;i] x) = phi(h x_1) p_i x_0` and
    /// `Phi(x h^[1;i]) h^[2;i] = phi(x_1 S(h)) x_0 p_i` on all basis pairs.
    pub fn check_eigen_relations(&self) -> Result<()> {
        let k = self.field();
        let a = self.base.algebra();
        let hopf = self.base.hopf();
        let (n, nh) = (a.dim(), hopf.dim());
        let reynolds = &self.phi_components()?.reynolds;
        let phi = &hopf.invariant_functionals()?.phi;
        let ha = hopf.algebra();
        let basis: Vec<Vec<K::Elem>> = (0..n).map(|x| a.basis_vector(x)).collect();
        let hb: Vec<Vec<K::Elem>> = (0..nh).map(|x| ha.basis_vector(x)).collect();
        for x in 0..n {
            let ax = self.base.coaction().column(x);
            let left: Vec<Vec<K::Elem>> = basis.iter().map(|b| reynolds.mul_vec(&a.mul(b, &basis[x]))).collect();
            let right: Vec<Vec<K::Elem>> = basis.iter().map(|b| reynolds.mul_vec(&a.mul(&basis[x], b))).collect();
            for h in 0..nh {
                let sh = hopf.s(&hb[h]);
                for i in 0..self.index_count() {
                    let beta = self.beta(i, h);
                    let pi = &self.idempotents[i];
                    let (mut l1, mut l2) = (a.zero(), a.zero());
                    let (mut r1, mut r2) = (a.zero(), a.zero());
                    for (idx, c) in beta.iter().enumerate() {
                        if k.is_zero(c) {
                            continue;
                        }
                        let (u, v) = (idx / n, idx % n);
                        let t1 = a.mul(&basis[u], &left[v]);
                        let t2 = a.mul(&right[u], &basis[v]);
                        l1.iter_mut().zip(&t1).for_each(|(o, y)| *o = k.mul_add(o, c, y));
                        l2.iter_mut().zip(&t2).for_each(|(o, y)| *o = k.mul_add(o, c, y));
                    }
                    for (idx, c) in ax.iter().enumerate() {
                        if k.is_zero(c) {
                            continue;
                        }
                        let (l, m) = (idx / nh, idx % nh);
                        let c1 = k.mul(c, &dot(k, phi, &ha.mul(&hb[h], &hb[m])));
                        let c2 = k.mul(c, &dot(k, phi, &ha.mul(&hb[m], &sh)));
                        let t1 = a.mul(pi, &basis[l]);
                        let t2 = a.mul(&basis[l], pi);
                        r1.iter_mut().zip(&t1).for_each(|(o, y)| *o = k.mul_add(o, &c1, y));
                        r2.iter_mut().zip(&t2).for_each(|(o, y)| *o = k.mul_add(o, &c2, y));
                    }
                    if l1 != r1 {
                        return violation(format!("eig1 fails at (i, h, x) = ({i}, {h}, {x})"));
                    }
                    if l2 != r2 {
                        return violation(format!("eig2 fails at (i, h, x) = ({i}, {h}, {x})"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// The first basis element with `phi != 0`, scaled to `phi(h') = 1`.
fn normalized_h<K: Field>(hopf: &crate::hopf::HopfData<K>) -> Result<Vec<K::Elem>> {
    let k = hopf.field();
    let phi = &hopf.invariant_functionals()?.phi;
    let t = phi.iter().position(|c| !k.is_zero(c)).ok_or(Error::NoInvariantFunctional)?;
    let mut h = vec![k.zero(); hopf.dim()];
    h[t] = k.inv(&phi[t]).expect("nonzero");
    Ok(h)
}

fn check_automorphism<K: Field>(a: &crate::assoc::StructureAlgebra<K>, s: &Matrix<K>, name: &str) -> Result<()> {
    if !s.is_invertible() {
        return violation(format!("{name} is not bijective"));
    }
    let n = a.dim();
    let cols = s.columns();
    for x in 0..n {
        for y in 0..n {
            if s.mul_vec(&a.mul(&a.basis_vector(x), &a.basis_vector(y))) != a.mul(&cols[x], &cols[y]) {
                return violation(format!("{name} is not multiplicative at ({x}, {y})"));
            }
        }
    }
    Ok(())
}
