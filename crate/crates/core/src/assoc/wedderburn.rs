use super::algebra::{default_labels, StructureAlgebra};
use super::module::{flatten, AlgModule, SearchConfig};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockStatus {
    Split,
    Undetermined,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Undetermined,
}

#[derive(Clone, Debug)]
pub struct WedderburnBlock<K: Field> {
    pub central_idempotent: Vec<K::Elem>,
    /// The two-sided ideal `z D`.
    pub block: Subspace<K>,
    /// `n` with `dim block = n^2`, when the dimension is a square.
    pub degree: Option<usize>,
    pub status: BlockStatus,
    /// For split blocks: a simple module `S` of dimension `n`.
    pub simple_module: Option<AlgModule<K>>,
    /// For split blocks: the `n^2 x dim D` matrix of `x -> rho_S(x)`,
    /// flattened row-major. Restricted to the block it is an isomorphism
    /// onto `M_n(k)`.
    pub isomorphism: Option<Matrix<K>>,
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct WedderburnForm<K: Field> {
    pub blocks: Vec<WedderburnBlock<K>>,
}

impl<K: Field> WedderburnForm<K> {
    pub fn all_split(&self) -> bool {
        self.blocks.iter().all(|b| b.status == BlockStatus::Split)
    }
}

impl<K: Field> StructureAlgebra<K> {
    /// Central primitive idempotents, as elements of the algebra.
    pub fn central_idempotents(&self) -> Result<Vec<Vec<K::Elem>>> {
        let z = self.center();
        let (zalg, emb) = self.subalgebra(&z, default_labels("z", z.dim()))?;
        let idems = zalg.primitive_idempotents_split_commutative().map_err(|e| match e {
            Error::NotSplit => Error::NotSplitCenter,
            other => other,
        })?;
        let mut out: Vec<Vec<K::Elem>> = idems.iter().map(|c| emb.mul_vec(c)).collect();
        out.sort();
        Ok(out)
    }

    /// Block decomposition of a semisimple algebra with a certified matrix
    /// presentation for every block where one is found.
    pub fn wedderburn(&self, cfg: &SearchConfig) -> Result<WedderburnForm<K>> {
        self.unit()?;
        if !self.is_semisimple()? {
            return Err(Error::NotSemisimple);
        }
        let k = self.field();
        let mut blocks = Vec::new();
        for z in self.central_idempotents()? {
            let block = Subspace::span(
                k,
                self.dim(),
                (0..self.dim()).map(|j| self.mul(&z, &self.basis_vector(j))).collect(),
            );
            let m = block.dim();
            let n = (1..=m).find(|n| n * n >= m).unwrap_or(0);
            let degree = (n * n == m).then_some(n);
            let mut entry = WedderburnBlock {
                central_idempotent: z.clone(),
                block: block.clone(),
                degree,
                status: BlockStatus::Undetermined,
                simple_module: None,
                isomorphism: None,
                note: None,
            };
            let Some(n) = degree else {
                entry.note = Some(format!("block dimension {m} is not a square"));
                blocks.push(entry);
                continue;
            };
            let ideal = AlgModule::regular(self).submodule(&block)?;
            match ideal.find_simple_submodule(cfg) {
                Ok(s) if s.module.dim() == n && s.module.endomorphism_basis()?.len() == 1 => {
                    let cols: Vec<Vec<K::Elem>> =
                        (0..self.dim()).map(|i| flatten(&s.module.action()[i])).collect();
                    let iso = Matrix::from_columns(k, &cols, n * n);
                    let restricted = iso.mul(&block.basis_columns());
                    if restricted.rank() == m {
                        entry.status = BlockStatus::Split;
                        entry.simple_module = Some(s.module);
                        entry.isomorphism = Some(iso);
                    } else {
                        entry.note = Some("simple module does not give a faithful block representation".into());
                    }
                }
                Ok(s) => {
                    entry.note = Some(format!(
                        "simple module of dimension {} is not absolutely simple",
                        s.module.dim()
                    ));
                }
                Err(Error::Undetermined(msg)) => entry.note = Some(msg),
                Err(e) => return Err(e),
            }
            blocks.push(entry);
        }
        Ok(WedderburnForm { blocks })
    }

    /// Absolute semisimplicity: trivial radical, split center and every
    /// block certified to be a full matrix algebra.
    pub fn is_absolutely_semisimple(&self, cfg: &SearchConfig) -> Result<Verdict> {
        self.unit()?;
        if !self.is_semisimple()? {
            return Ok(Verdict::No);
        }
        match self.wedderburn(cfg) {
            Ok(w) if w.all_split() => Ok(Verdict::Yes),
            Ok(_) => Ok(Verdict::Undetermined),
            Err(Error::NotSplitCenter) => Ok(Verdict::No),
            Err(e) => Err(e),
        }
    }
}
