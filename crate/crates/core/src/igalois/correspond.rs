use super::IGaloisObject;
use crate::assoc::{default_labels, flatten, AlgModule, MoritaContextData, MoritaVerdict, SearchConfig};
use crate::coact::{BidualityContext, ComoduleAlgebra, DoubleSmash, EquivariantModule};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};

/// `(A_ii, alpha|A_ii)` with the contexts `(A_ij, A_ji)` to every `A_jj`.
#[derive(Clone, Debug)]
pub struct HomogeneousCorner<K: Field> {
    pub comodule: ComoduleAlgebra<K>,
    /// `dim A x dim A_ii`.
    pub embedding: Matrix<K>,
    /// Verdict of the context between `A_ii` and `A_jj`, indexed by `j`.
    pub contexts: Vec<MoritaVerdict>,
}

/// `B = pDp` for `D = (C # H^) # H` and a full coinvariant idempotent `p`.
#[derive(Clone, Debug)]
pub struct GaloisFromHomogeneous<K: Field> {
    pub object: IGaloisObject<K>,
    pub double: DoubleSmash<K>,
    /// `p` in `D`.
    pub idempotent: Vec<K::Elem>,
    /// `dim D x dim B`.
    pub embedding: Matrix<K>,
}

/// `C -> B -> B_ii` with the context between `B_ii` and `C` inside
/// `End_C((C # H^) + C)`.
#[derive(Clone, Debug)]
pub struct RoundTrip<K: Field> {
    pub galois: GaloisFromHomogeneous<K>,
    pub corner: HomogeneousCorner<K>,
    pub biduality: BidualityContext<K>,
    pub context: MoritaContextData<K>,
    pub verdict: MoritaVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantSimplesReport {
    /// `dim M_j` for `M_j = sum_i A_ij`.
    pub dims: Vec<usize>,
    pub simple: Vec<bool>,
    pub pairwise_hom_zero: bool,
    /// `sum_j dim Hom(M_j, S) dim M_j = dim S` for the smash product `S`.
    pub maximal: bool,
}

impl<K: Field> IGaloisObject<K> {
    pub fn homogeneous_from_galois(&self, i: usize) -> Result<HomogeneousCorner<K>> {
        if !self.is_connected()? {
            return Err(Error::Disconnected);
        }
        if i >= self.index_count() {
            return Err(Error::InvalidInput(format!("index {i} out of range")));
        }
        let aii = &self.components[i][i];
        let (comodule, embedding) = self.base.restrict(aii, default_labels("c", aii.dim()))?;
        if !comodule.is_homogeneous()? {
            return Err(Error::AxiomViolation(format!("A_{i}{i} is not homogeneous")));
        }
        let alg = self.base.algebra();
        let mut contexts = Vec::with_capacity(self.index_count());
        for j in 0..self.index_count() {
            let parts = [aii, &self.components[i][j], &self.components[j][i], &self.components[j][j]];
            if parts.iter().any(|s| !self.base.is_subcomodule(s)) {
                return Err(Error::AxiomViolation(format!("a component between {i} and {j} is not a subcomodule")));
            }
            let ctx = MoritaContextData::from_subspaces(alg, parts[0], parts[1], parts[2], parts[3])?;
            contexts.push(ctx.verify(None)?);
        }
        Ok(HomogeneousCorner { comodule, embedding, contexts })
    }

    /// `C # H^`-modules `M_j = A p_j` obtained from the equivariant
    /// modules, with simplicity, pairwise orthogonality and exhaustion of
    /// the regular module certified.
    pub fn equivariant_simples_report(&self, cfg: &SearchConfig) -> Result<EquivariantSimplesReport> {
        if !self.is_connected()? {
            return Err(Error::Disconnected);
        }
        let k = self.field();
        let base = &self.base;
        let a = base.algebra();
        let n = a.dim();
        let nh = base.hopf().dim();
        let smash = base.smash()?;
        let mut mods: Vec<AlgModule<K>> = Vec::new();
        for j in 0..self.index_count() {
            let w = (0..self.index_count()).fold(Subspace::zero(k, n), |acc, i| acc.join(&self.components[i][j]));
            let d = w.dim();
            let coords = |v: &[K::Elem]| w.coordinates(v).expect("left ideal and subcomodule");
            let action = (0..n)
                .map(|x| {
                    let cols: Vec<Vec<K::Elem>> =
                        w.basis().iter().map(|b| coords(&a.mul(&a.basis_vector(x), b))).collect();
                    Matrix::from_columns(k, &cols, d)
                })
                .collect();
            let mut coaction = Matrix::zeros(k, d * nh, d);
            for (c, b) in w.basis().iter().enumerate() {
                let img = base.alpha(b);
                for t in 0..nh {
                    let slice: Vec<K::Elem> = (0..n).map(|l| img[l * nh + t].clone()).collect();
                    for (r, v) in coords(&slice).into_iter().enumerate() {
                        coaction.set(r * nh + t, c, v);
                    }
                }
            }
            let v = EquivariantModule::new(base, action, coaction)?;
            mods.push(base.equivariant_to_smash(&smash, &v)?);
        }
        let simple = mods.iter().map(|m| m.is_simple(cfg)).collect::<Result<Vec<_>>>()?;
        let mut pairwise_hom_zero = true;
        for (x, m) in mods.iter().enumerate() {
            for (y, m2) in mods.iter().enumerate() {
                if x != y && !m.hom_space(m2)?.is_empty() {
                    pairwise_hom_zero = false;
                }
            }
        }
        let regular = AlgModule::regular(&smash.algebra);
        let mut total = 0;
        for m in &mods {
            total += m.hom_space(&regular)?.len() * m.dim();
        }
        Ok(EquivariantSimplesReport {
            dims: mods.iter().map(AlgModule::dim).collect(),
            simple,
            pairwise_hom_zero,
            maximal: total == smash.algebra.dim(),
        })
    }
}

impl<K: Field> ComoduleAlgebra<K> {
    /// Cuts `(C # H^) # H` down by one rank-one idempotent per Wedderburn
    /// block of `C # H^`, then analyzes the corner.
    pub fn galois_from_homogeneous(&self, cfg: &SearchConfig) -> Result<GaloisFromHomogeneous<K>> {
        if !self.is_homogeneous()? {
            return Err(Error::NotHomogeneous);
        }
        let k = self.field();
        let double = self.double_smash_twisted()?;
        let s = &double.smash.algebra;
        let form = match s.wedderburn(cfg) {
            Ok(f) => f,
            Err(Error::NotSplitCenter) => {
                return Err(Error::CannotCertifySplit("center of the smash product does not split".into()))
            }
            Err(e) => return Err(e),
        };
        let mut p = vec![k.zero(); s.dim()];
        for (b, blk) in form.blocks.iter().enumerate() {
            let (Some(n), Some(iso)) = (blk.degree, blk.isomorphism.as_ref()) else {
                return Err(Error::CannotCertifySplit(format!(
                    "block {b}: {}",
                    blk.note.clone().unwrap_or_else(|| "no matrix presentation".into())
                )));
            };
            let cols = blk.block.basis_columns();
            let restricted = iso.mul(&cols);
            let e11 = flatten(&Matrix::from_fn(k, n, n, |r, c| if r == 0 && c == 0 { k.one() } else { k.zero() }));
            let y = restricted
                .solve(&Matrix::column_vector(k, &e11))?
                .ok_or_else(|| Error::AxiomViolation(format!("block {b} does not contain a rank-one idempotent")))?;
            let e = cols.mul_vec(&y.column(0));
            p.iter_mut().zip(&e).for_each(|(x, y)| *x = k.add(x, y));
        }
        if !s.is_idempotent(&p) {
            return Err(Error::AxiomViolation("sum of block idempotents is not idempotent".into()));
        }
        let d = double.comodule.algebra();
        let nd = d.dim();
        let pd = double.smash_embedding.mul_vec(&p);
        let basis: Vec<Vec<K::Elem>> = (0..nd).map(|x| d.basis_vector(x)).collect();
        let dp = Subspace::span(k, nd, basis.iter().map(|x| d.mul(x, &pd)).collect());
        let pdl = Subspace::span(k, nd, basis.iter().map(|x| d.mul(&pd, x)).collect());
        if !d.product_space(&dp, &pdl).is_full() {
            return Err(Error::AxiomViolation("idempotent is not full in the double smash".into()));
        }
        let corner = Subspace::span(k, nd, dp.basis().iter().map(|x| d.mul(&pd, x)).collect());
        let (b, embedding) = double.comodule.restrict(&corner, default_labels("b", corner.dim()))?;
        let object = IGaloisObject::analyze(&b)?;
        if object.index_count() != form.blocks.len() {
            return Err(Error::AxiomViolation("coinvariants of the corner do not match the block count".into()));
        }
        if !object.is_connected()? {
            return Err(Error::AxiomViolation("corner of the double smash is not connected".into()));
        }
        Ok(GaloisFromHomogeneous { object, double, idempotent: pd, embedding })
    }

    /// `C -> B -> B_ii`, certified by the context between `eDe = B_ii`,
    /// `e = p_i`, and `C`.
    pub fn round_trip(&self, i: usize, cfg: &SearchConfig) -> Result<RoundTrip<K>> {
        let galois = self.galois_from_homogeneous(cfg)?;
        let corner = galois.object.homogeneous_from_galois(i)?;
        let biduality = self.biduality_context(&galois.double)?;
        let e = galois.embedding.mul_vec(&galois.object.idempotents()[i]);
        let blocks = biduality.corner_blocks(Some(&e))?;
        let k = self.field();
        let ne = biduality.ambient.dim();
        let in_d = galois.embedding.mul(&corner.embedding);
        let image = Subspace::span(k, ne, in_d.columns().iter().map(|c| biduality.rho.mul_vec(c)).collect());
        if image != blocks[0] {
            return Err(Error::AxiomViolation("corner of the context is not B_ii".into()));
        }
        let context = biduality.context(Some(&e))?;
        let verdict = context.verify(None)?;
        Ok(RoundTrip { galois, corner, biduality, context, verdict })
    }
}
