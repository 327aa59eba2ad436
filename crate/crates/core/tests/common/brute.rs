//! Exhaustive searches over small prime fields, used as independent oracles.

#![allow(dead_code)]

use igalois_core::assoc::{AlgModule, StructureAlgebra};
use igalois_core::exactla::{Matrix, PrimeField, Subspace};

/// Every subspace of `F_p^d`, as echelon row lists.
pub fn all_subspaces(p: u64, d: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for r in 0..=d {
        for pivots in combinations(d, r) {
            // Free entries: row i, column c > pivots[i] with c not a pivot.
            let mut free = Vec::new();
            for (i, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..d {
                    if !pivots.contains(&c) {
                        free.push((i, c));
                    }
                }
            }
            let total = p.pow(free.len() as u32);
            for mut code in 0..total {
                let mut rows = vec![vec![0u64; d]; r];
                for (i, &pc) in pivots.iter().enumerate() {
                    rows[i][pc] = 1;
                }
                for &(i, c) in &free {
                    rows[i][c] = code % p;
                    code /= p;
                }
                out.push(rows);
            }
        }
    }
    out
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

fn apply(p: u64, m: &Matrix<PrimeField>, v: &[u64]) -> Vec<u64> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(0u64, |acc, j| (acc + m.get(i, j) * v[j]) % p))
        .collect()
}

/// In-span test by plain elimination against echelon rows.
fn in_span(p: u64, rows: &[Vec<u64>], v: &[u64]) -> bool {
    let mut v = v.to_vec();
    for row in rows {
        let pc = row.iter().position(|&x| x != 0).unwrap();
        let f = v[pc];
        if f != 0 {
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + p * p - f * y % p) % p;
            }
        }
    }
    v.iter().all(|&x| x == 0)
}

/// All submodules, found by testing every subspace for closure.
pub fn all_submodules(v: &AlgModule<PrimeField>) -> Vec<Subspace<PrimeField>> {
    let k = v.field();
    let p = k.modulus();
    all_subspaces(p, v.dim())
        .into_iter()
        .filter(|rows| v.action().iter().all(|a| rows.iter().all(|r| in_span(p, rows, &apply(p, a, r)))))
        .map(|rows| Subspace::span(k, v.dim(), rows))
        .collect()
}

/// Dimensions of the composition factors along one maximal chain of
/// submodules, sorted.
pub fn composition_dims(subs: &[Subspace<PrimeField>], dim: usize) -> Vec<usize> {
    let mut chain_dims = vec![0usize];
    let mut cur = subs.iter().find(|s| s.is_zero()).unwrap().clone();
    while cur.dim() < dim {
        let next = subs
            .iter()
            .filter(|s| s.dim() > cur.dim() && cur.is_subspace_of(s))
            .min_by_key(|s| s.dim())
            .unwrap();
        chain_dims.push(next.dim());
        cur = next.clone();
    }
    let mut out: Vec<usize> = chain_dims.windows(2).map(|w| w[1] - w[0]).collect();
    out.sort();
    out
}

/// The largest nilpotent two-sided ideal: the span of every element whose
/// generated ideal is nilpotent.
pub fn nilpotent_radical(d: &StructureAlgebra<PrimeField>) -> Subspace<PrimeField> {
    let k = d.field();
    let p = k.modulus();
    let n = d.dim();
    let mut acc = Subspace::zero(k, n);
    let total = p.pow(n as u32);
    for mut code in 1..total {
        let x: Vec<u64> = (0..n)
            .map(|_| {
                let c = code % p;
                code /= p;
                c
            })
            .collect();
        // One representative per line.
        if x.iter().find(|&&c| c != 0) != Some(&1) || acc.contains(&x) {
            continue;
        }
        let ideal = d.ideal_generated(&Subspace::span(k, n, vec![x.clone()]));
        if is_nilpotent(d, &ideal) {
            acc = acc.join(&ideal);
        }
    }
    acc
}

fn is_nilpotent(d: &StructureAlgebra<PrimeField>, ideal: &Subspace<PrimeField>) -> bool {
    let mut power = ideal.clone();
    for _ in 0..=d.dim() {
        if power.is_zero() {
            return true;
        }
        power = d.product_space(&power, ideal);
    }
    power.is_zero()
}

/// Quotient module `V / W` on the non-pivot coordinates of `W`.
pub fn quotient_module(v: &AlgModule<PrimeField>, w: &Subspace<PrimeField>) -> AlgModule<PrimeField> {
    let (pi, s) = igalois_core::exactla::quotient_map(v.dim(), w).unwrap();
    let action = v.action().iter().map(|a| pi.mul(a).mul(&s)).collect();
    AlgModule::new(v.algebra(), pi.rows(), action).unwrap()
}

/// The same module in another basis.
pub fn conjugate(v: &AlgModule<PrimeField>, p: &Matrix<PrimeField>) -> AlgModule<PrimeField> {
    let inv = p.inverse().unwrap();
    let action = v.action().iter().map(|a| inv.mul(a).mul(p)).collect();
    AlgModule::new(v.algebra(), v.dim(), action).unwrap()
}
