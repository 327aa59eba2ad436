use crate::assoc::StructureAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::hopf::HopfData;

/// A finite group as a multiplication table on `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    table: Vec<Vec<usize>>,
    names: Vec<String>,
    identity: usize,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Checks closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 || names.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::InvalidInput("group table must be a nonempty square table on 0..n".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidInput(format!("group table is not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::InvalidInput("group table has no identity".into()))?;
        let inverses = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or_else(|| Error::InvalidInput(format!("element {g} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable { table, names, identity, inverses })
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        Self::new(table, names).expect("cyclic group")
    }

    /// `Z/2 x Z/2`, element `i` having bits `(i >> 1, i & 1)`.
    pub fn klein() -> Self {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        let names = ["e", "b", "a", "ab"].iter().map(|s| s.to_string()).collect();
        Self::new(table, names).expect("Klein group")
    }

    /// Permutations of three points; `(p q)` composes as `p` after `q`.
    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
        let table = perms
            .iter()
            .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
            .collect();
        let names = ["e", "r", "r2", "s01", "s12", "s02"].iter().map(|s| s.to_string()).collect();
        Self::new(table, names).expect("S3")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverses[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// `kG`: grouplike basis, `S(g) = g^-1`.
pub fn group_algebra<K: Field>(k: &K, g: &GroupTable) -> HopfData<K> {
    let n = g.order();
    let algebra = StructureAlgebra::from_sparse(
        k,
        g.names().to_vec(),
        (0..n * n).map(|x| vec![(g.mul(x / n, x % n), k.one())]).collect(),
    )
    .expect("group table");
    let coproduct = Matrix::from_fn(k, n * n, n, |r, c| if r == c * n + c { k.one() } else { k.zero() });
    let antipode = Matrix::from_fn(k, n, n, |r, c| if r == g.inverse(c) { k.one() } else { k.zero() });
    HopfData::new(algebra, coproduct, vec![k.one(); n], antipode).expect("shapes")
}

/// `k^G` on the point masses `d_g`.
pub fn dual_group_algebra<K: Field>(k: &K, g: &GroupTable) -> HopfData<K> {
    let n = g.order();
    let labels = g.names().iter().map(|s| format!("d_{s}")).collect();
    let algebra = StructureAlgebra::from_sparse(
        k,
        labels,
        (0..n * n).map(|x| if x / n == x % n { vec![(x / n, k.one())] } else { vec![] }).collect(),
    )
    .expect("diagonal table");
    let coproduct = Matrix::from_fn(k, n * n, n, |r, c| if g.mul(r / n, r % n) == c { k.one() } else { k.zero() });
    let counit = (0..n).map(|x| if x == g.identity() { k.one() } else { k.zero() }).collect();
    let antipode = Matrix::from_fn(k, n, n, |r, c| if r == g.inverse(c) { k.one() } else { k.zero() });
    HopfData::new(algebra, coproduct, counit, antipode).expect("shapes")
}

/// Sweedler's four-dimensional Hopf algebra on `1, g, x, gx` with
/// `g^2 = 1`, `x^2 = 0`, `xg = -gx`, `g` grouplike and
/// `Delta(x) = x (x) 1 + g (x) x`.
pub fn sweedler_h4<K: Field>(k: &K) -> Result<HopfData<K>> {
    if k.characteristic() == 2 {
        return Err(Error::InvalidInput("Sweedler's algebra needs characteristic other than 2".into()));
    }
    // Words g^a x^b at index 2a + b; x g = -g x.
    let labels = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    let word = |i: usize| ((i & 1), (i >> 1));
    let algebra = StructureAlgebra::from_fn(k, labels, |i, j| {
        let (a1, b1) = word(i);
        let (a2, b2) = word(j);
        let mut v = vec![k.zero(); 4];
        if b1 + b2 < 2 {
            let sign = if b1 == 1 && a2 == 1 { k.from_i64(-1) } else { k.one() };
            v[((a1 + a2) % 2) | ((b1 + b2) << 1)] = sign;
        }
        v
    });
    let mut coproduct = Matrix::zeros(k, 16, 4);
    let one = k.one();
    // Delta(1) = 1 (x) 1, Delta(g) = g (x) g.
    coproduct.set(0, 0, one.clone());
    coproduct.set(4 + 1, 1, one.clone());
    // Delta(x) = x (x) 1 + g (x) x.
    coproduct.set(2 * 4, 2, one.clone());
    coproduct.set(4 + 2, 2, one.clone());
    // Delta(gx) = gx (x) g + 1 (x) gx.
    coproduct.set(3 * 4 + 1, 3, one.clone());
    coproduct.set(3, 3, one.clone());
    let counit = vec![k.one(), k.one(), k.zero(), k.zero()];
    // S(x) = -gx, S(gx) = x.
    let antipode = Matrix::from_i64(k, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    HopfData::new(algebra, coproduct, counit, antipode)
}
