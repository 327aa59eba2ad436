use super::algebra::{default_labels, StructureAlgebra};
use crate::cancel::CancelToken;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};

/// Position of a basis vector of a Morita ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    A,
    M,
    N,
    B,
}

impl Block {
    /// Target block of a product, or `None` when the product vanishes.
    pub fn product(self, other: Block) -> Option<Block> {
        use Block::*;
        match (self, other) {
            (A, A) | (M, N) => Some(A),
            (A, M) | (M, B) => Some(M),
            (B, N) | (N, A) => Some(N),
            (N, M) | (B, B) => Some(B),
            _ => None,
        }
    }

    const ALL: [Block; 4] = [Block::A, Block::M, Block::N, Block::B];

    fn index(self) -> usize {
        self as usize
    }
}

/// A Morita context between `A` and `B` packaged as the ring
/// `[[A, M], [N, B]]`. The basis is ordered `A | M | N | B`, and the product
/// of two basis vectors of blocks `X`, `Y` lies in block `X*Y` (or is zero),
/// so the four bimodule actions and both pairings are read off the ring.
#[derive(Clone, Debug)]
pub struct MoritaContextData<K: Field> {
    ring: StructureAlgebra<K>,
    dims: [usize; 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoritaVerdict {
    Strict,
    /// Surjective pairings that fail to be injective. For unital algebras
    /// surjectivity forces strictness, so this is never expected; it is
    /// reported rather than hidden if it ever occurs.
    SurjectiveOnly,
    NotSurjective,
}

impl<K: Field> MoritaContextData<K> {
    pub fn from_ring(ring: StructureAlgebra<K>, dims: [usize; 4]) -> Result<Self> {
        if dims.iter().sum::<usize>() != ring.dim() {
            return Err(Error::DimensionMismatch("block dimensions do not add up to the ring dimension".into()));
        }
        Ok(MoritaContextData { ring, dims })
    }

    /// The context carved out of an ambient algebra by four subspaces, with
    /// the products the ambient algebra induces and the vanishing products
    /// of the matrix-ring pattern.
    pub fn from_subspaces(
        ambient: &StructureAlgebra<K>,
        a: &Subspace<K>,
        m: &Subspace<K>,
        n: &Subspace<K>,
        b: &Subspace<K>,
    ) -> Result<Self> {
        let k = ambient.field();
        let parts = [a, m, n, b];
        let dims = [a.dim(), m.dim(), n.dim(), b.dim()];
        let total: usize = dims.iter().sum();
        let mut basis: Vec<(Block, usize)> = Vec::with_capacity(total);
        for blk in Block::ALL {
            for i in 0..dims[blk.index()] {
                basis.push((blk, i));
            }
        }
        let offsets = offsets(&dims);
        let mut table = Vec::with_capacity(total * total);
        for &(x, i) in &basis {
            for &(y, j) in &basis {
                let Some(z) = x.product(y) else {
                    table.push(Vec::new());
                    continue;
                };
                let prod = ambient.mul(&parts[x.index()].basis()[i], &parts[y.index()].basis()[j]);
                let c = parts[z.index()].coordinates(&prod).ok_or_else(|| {
                    Error::InvalidInput(format!("product of blocks {x:?}, {y:?} leaves block {z:?}"))
                })?;
                table.push(
                    c.into_iter()
                        .enumerate()
                        .filter(|(_, v)| !k.is_zero(v))
                        .map(|(l, v)| (offsets[z.index()] + l, v))
                        .collect(),
                );
            }
        }
        let labels = basis.iter().map(|(blk, i)| format!("{blk:?}{i}")).collect();
        Self::from_ring(StructureAlgebra::from_sparse(k, labels, table)?, dims)
    }

    pub fn ring(&self) -> &StructureAlgebra<K> {
        &self.ring
    }

    pub fn dims(&self) -> [usize; 4] {
        self.dims
    }

    pub fn block(&self, blk: Block) -> Subspace<K> {
        let offs = offsets(&self.dims);
        let k = self.ring.field();
        let vecs = (0..self.dims[blk.index()]).map(|i| self.ring.basis_vector(offs[blk.index()] + i)).collect();
        Subspace::span(k, self.ring.dim(), vecs)
    }

    /// The algebra `A` or `B` on its block.
    pub fn corner_algebra(&self, blk: Block) -> Result<StructureAlgebra<K>> {
        if !matches!(blk, Block::A | Block::B) {
            return Err(Error::InvalidInput("only A and B are algebras".into()));
        }
        let sub = self.block(blk);
        Ok(self.ring.subalgebra(&sub, default_labels(&format!("{blk:?}"), sub.dim()))?.0)
    }

    fn block_of(&self, idx: usize) -> Block {
        let offs = offsets(&self.dims);
        *Block::ALL.iter().rev().find(|b| offs[b.index()] <= idx && self.dims[b.index()] > 0).expect("index in range")
    }

    /// Associativity, block grading, unital bimodules, then surjectivity of
    /// both pairings. When surjective, the induced maps `M (x)_B N -> A` and
    /// `N (x)_A M -> B` are also tested for injectivity.
    pub fn verify(&self, cancel: Option<&CancelToken>) -> Result<MoritaVerdict> {
        let r = &self.ring;
        if let Some((i, j, l)) = r.check_associative(cancel)? {
            return Err(Error::AxiomViolation(format!(
                "context products are not associative at ({}, {}, {})",
                r.labels()[i],
                r.labels()[j],
                r.labels()[l]
            )));
        }
        let n = r.dim();
        for i in 0..n {
            for j in 0..n {
                let target = self.block_of(i).product(self.block_of(j));
                let ok = r.product_entry(i, j).iter().all(|(l, _)| Some(self.block_of(*l)) == target);
                if !ok {
                    return Err(Error::AxiomViolation(format!(
                        "product of {} and {} violates the block pattern",
                        r.labels()[i],
                        r.labels()[j]
                    )));
                }
            }
        }
        let blocks: Vec<Subspace<K>> = Block::ALL.iter().map(|&b| self.block(b)).collect();
        let one_a = self.corner_algebra(Block::A)?.unit()?;
        let one_b = self.corner_algebra(Block::B)?.unit()?;
        let lift = |blk: Block, c: &[K::Elem]| blocks[blk.index()].combine(c);
        let (ua, ub) = (lift(Block::A, &one_a), lift(Block::B, &one_b));
        for x in blocks[Block::M.index()].basis() {
            if r.mul(&ua, x) != *x || r.mul(x, &ub) != *x {
                return Err(Error::AxiomViolation("M is not a unital bimodule".into()));
            }
        }
        for y in blocks[Block::N.index()].basis() {
            if r.mul(&ub, y) != *y || r.mul(y, &ua) != *y {
                return Err(Error::AxiomViolation("N is not a unital bimodule".into()));
            }
        }
        let (ba, bm, bn, bb) = (&blocks[0], &blocks[1], &blocks[2], &blocks[3]);
        let mn = r.product_space(bm, bn);
        let nm = r.product_space(bn, bm);
        if mn != *ba || nm != *bb {
            return Ok(MoritaVerdict::NotSurjective);
        }
        let injective = self.balanced_pairing_injective(bm, bn, bb) && self.balanced_pairing_injective(bn, bm, ba);
        Ok(if injective { MoritaVerdict::Strict } else { MoritaVerdict::SurjectiveOnly })
    }

    /// Whether `X (x)_C Y -> XY` is injective, computed on `X (x) Y` modulo
    /// the balancing relations `xc (x) y - x (x) cy`.
    fn balanced_pairing_injective(&self, x: &Subspace<K>, y: &Subspace<K>, c: &Subspace<K>) -> bool {
        let r = &self.ring;
        let k = r.field();
        let (dx, dy) = (x.dim(), y.dim());
        let mut relations = Vec::new();
        for xi in x.basis() {
            for cj in c.basis() {
                let xc = x.coordinates(&r.mul(xi, cj)).expect("graded product");
                for (yl_idx, yl) in y.basis().iter().enumerate() {
                    let cy = y.coordinates(&r.mul(cj, yl)).expect("graded product");
                    let xi_c = x.coordinates(xi).expect("basis vector");
                    let mut v = vec![k.zero(); dx * dy];
                    for a in 0..dx {
                        v[a * dy + yl_idx] = k.add(&v[a * dy + yl_idx], &xc[a]);
                        for b in 0..dy {
                            let t = k.mul(&xi_c[a], &cy[b]);
                            v[a * dy + b] = k.sub(&v[a * dy + b], &t);
                        }
                    }
                    relations.push(v);
                }
            }
        }
        let rel = Subspace::span(k, dx * dy, relations);
        let cols: Vec<Vec<K::Elem>> = x
            .basis()
            .iter()
            .flat_map(|xi| y.basis().iter().map(move |yl| r.mul(xi, yl)))
            .collect();
        let pairing = Matrix::from_columns(k, &cols, r.dim());
        pairing.kernel().dim() == rel.dim()
    }
}

fn offsets(dims: &[usize; 4]) -> [usize; 4] {
    [0, dims[0], dims[0] + dims[1], dims[0] + dims[1] + dims[2]]
}

/// The corner `pDp` of an idempotent together with the context
/// `(Dp, pD)` between `D` and `pDp`.
#[derive(Clone, Debug)]
pub struct Corner<K: Field> {
    pub algebra: StructureAlgebra<K>,
    /// Columns: the echelon basis of `pDp` inside `D`.
    pub embedding: Matrix<K>,
    pub context: MoritaContextData<K>,
    /// `DpD = D`.
    pub full: bool,
}

impl<K: Field> StructureAlgebra<K> {
    pub fn corner(&self, p: &[K::Elem]) -> Result<Corner<K>> {
        if !self.is_idempotent(p) {
            return Err(Error::NotIdempotent);
        }
        let k = self.field();
        let n = self.dim();
        let basis: Vec<Vec<K::Elem>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let dp = Subspace::span(k, n, basis.iter().map(|x| self.mul(x, p)).collect());
        let pd = Subspace::span(k, n, basis.iter().map(|x| self.mul(p, x)).collect());
        let pdp = Subspace::span(k, n, dp.basis().iter().map(|x| self.mul(p, x)).collect());
        let full_space = Subspace::full(k, n);
        let full = self.product_space(&dp, &pd) == full_space;
        let (algebra, embedding) = self.subalgebra(&pdp, default_labels("c", pdp.dim()))?;
        let context = MoritaContextData::from_subspaces(self, &full_space, &dp, &pd, &pdp)?;
        Ok(Corner { algebra, embedding, context, full })
    }
}
