use super::groups::{dual_group_algebra, group_algebra, GroupTable};
use crate::assoc::StructureAlgebra;
use crate::coact::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix};
use crate::hopf::HopfData;

/// `(H, Delta)`.
pub fn self_coaction<K: Field>(h: &HopfData<K>) -> ComoduleAlgebra<K> {
    ComoduleAlgebra::new(h.clone(), h.algebra().clone(), h.coproduct().clone()).expect("shapes")
}

/// `u_g u_h = c(g, h) u_{gh}` over `kG`, graded by `u_g -> u_g (x) g`.
/// `cocycle[g][h]` must be nonzero and satisfy
/// `c(g, h) c(gh, l) = c(h, l) c(g, hl)`.
pub fn cocycle_twisted_group_algebra<K: Field>(
    k: &K,
    g: &GroupTable,
    cocycle: &[Vec<K::Elem>],
) -> Result<ComoduleAlgebra<K>> {
    let n = g.order();
    if cocycle.len() != n || cocycle.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("cocycle must be an n x n table".into()));
    }
    if cocycle.iter().flatten().any(|c| k.is_zero(c)) {
        return Err(Error::InvalidInput("cocycle values must be nonzero".into()));
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = k.mul(&cocycle[a][b], &cocycle[g.mul(a, b)][c]);
                let rhs = k.mul(&cocycle[b][c], &cocycle[a][g.mul(b, c)]);
                if lhs != rhs {
                    return Err(Error::InvalidInput(format!("cocycle identity fails at ({a}, {b}, {c})")));
                }
            }
        }
    }
    let hopf = group_algebra(k, g);
    let labels = g.names().iter().map(|s| format!("u_{s}")).collect();
    let algebra = StructureAlgebra::from_sparse(
        k,
        labels,
        (0..n * n).map(|x| vec![(g.mul(x / n, x % n), cocycle[x / n][x % n].clone())]).collect(),
    )?;
    let coaction = Matrix::from_fn(k, n * n, n, |r, c| if r == c * n + c { k.one() } else { k.zero() });
    ComoduleAlgebra::new(hopf, algebra, coaction)
}

/// `c(g, g) = -1` on `Z/2`, trivial elsewhere.
pub fn z2_sign_cocycle<K: Field>(k: &K) -> Vec<Vec<K::Elem>> {
    vec![vec![k.one(), k.one()], vec![k.one(), k.from_i64(-1)]]
}

/// `c(g, h) = (-1)^(g1 h1 + g1 h2 + g2 h2)` on [`GroupTable::klein`], the
/// twist giving the quaternion algebra.
pub fn klein_quaternion_cocycle<K: Field>(k: &K) -> Vec<Vec<K::Elem>> {
    let bits = |x: usize| (x >> 1, x & 1);
    (0..4)
        .map(|a| {
            (0..4)
                .map(|b| {
                    let ((g1, g2), (h1, h2)) = (bits(a), bits(b));
                    if (g1 * h1 + g1 * h2 + g2 * h2) % 2 == 0 {
                        k.one()
                    } else {
                        k.from_i64(-1)
                    }
                })
                .collect()
        })
        .collect()
}

/// `k^X` over `k^G` for a free action `action[g][x] = g.x`, with
/// `d_x -> sum_g d_{g.x} (x) d_g`.
pub fn free_gset_function_algebra<K: Field>(
    k: &K,
    g: &GroupTable,
    set_size: usize,
    action: &[Vec<usize>],
) -> Result<ComoduleAlgebra<K>> {
    let n = g.order();
    if action.len() != n || action.iter().any(|r| r.len() != set_size || r.iter().any(|&y| y >= set_size)) {
        return Err(Error::InvalidInput("action must map G x X into X".into()));
    }
    for x in 0..set_size {
        if action[g.identity()][x] != x {
            return Err(Error::InvalidInput(format!("identity moves point {x}")));
        }
        for a in 0..n {
            for b in 0..n {
                if action[g.mul(a, b)][x] != action[a][action[b][x]] {
                    return Err(Error::InvalidInput(format!("not an action at ({a}, {b}, {x})")));
                }
            }
            if a != g.identity() && action[a][x] == x {
                return Err(Error::InvalidInput(format!("action is not free: {} fixes point {x}", g.names()[a])));
            }
        }
    }
    let hopf = dual_group_algebra(k, g);
    let labels = (0..set_size).map(|x| format!("d{x}")).collect();
    let algebra = StructureAlgebra::from_sparse(
        k,
        labels,
        (0..set_size * set_size)
            .map(|z| if z / set_size == z % set_size { vec![(z / set_size, k.one())] } else { vec![] })
            .collect(),
    )?;
    let mut coaction = Matrix::zeros(k, set_size * n, set_size);
    for x in 0..set_size {
        for a in 0..n {
            coaction.set(action[a][x] * n + a, x, k.one());
        }
    }
    ComoduleAlgebra::new(hopf, algebra, coaction)
}

/// `G` acting on `m` copies of itself by left translation.
pub fn translation_action(g: &GroupTable, copies: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n).map(|a| (0..n * copies).map(|x| (x / n) * n + g.mul(a, x % n)).collect()).collect()
}

/// `End(k^G) = M_n(k)` graded by `E_ab -> E_ab (x) a b^-1` over `kG`:
/// a connected `|G|`-Galois object with diagonal coinvariants.
pub fn graded_matrix_algebra<K: Field>(k: &K, g: &GroupTable) -> ComoduleAlgebra<K> {
    let n = g.order();
    let hopf = group_algebra(k, g);
    let labels = (0..n * n).map(|x| format!("E_{}_{}", g.names()[x / n], g.names()[x % n])).collect();
    let algebra = StructureAlgebra::from_sparse(
        k,
        labels,
        (0..n.pow(4))
            .map(|z| {
                let (x, y) = (z / (n * n), z % (n * n));
                if x % n == y / n {
                    vec![((x / n) * n + y % n, k.one())]
                } else {
                    vec![]
                }
            })
            .collect(),
    )
    .expect("matrix units");
    let coaction = Matrix::from_fn(k, n * n * n, n * n, |r, c| {
        let (a, b) = (c / n, c % n);
        if r == c * n + g.mul(a, g.inverse(b)) {
            k.one()
        } else {
            k.zero()
        }
    });
    ComoduleAlgebra::new(hopf, algebra, coaction).expect("shapes")
}
