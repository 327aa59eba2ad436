//! Small algebras and modules over prime fields for exhaustive comparisons.

#![allow(dead_code)]

use igalois_core::assoc::{default_labels, AlgModule, StructureAlgebra};
use igalois_core::examples::{diagonal_algebra, matrix_algebra, polynomial_quotient};
use igalois_core::exactla::{Matrix, Polynomial, PrimeField, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::brute::{conjugate, quotient_module};

fn from_table(k: &PrimeField, table: &[Vec<usize>]) -> StructureAlgebra<PrimeField> {
    let n = table.len();
    StructureAlgebra::from_fn(k, default_labels("g", n), |i, j| {
        let mut v = vec![0; n];
        v[table[i][j]] = 1;
        v
    })
}

fn klein_table() -> Vec<Vec<usize>> {
    (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect()
}

/// S3 as permutations of {0,1,2}, listed in a fixed order.
fn s3_table() -> Vec<Vec<usize>> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [1, 0, 2], [0, 2, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    perms
        .iter()
        .map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect())
        .collect()
}

fn upper_triangular(k: &PrimeField, n: usize) -> StructureAlgebra<PrimeField> {
    let m = matrix_algebra(k, n);
    let vecs = (0..n * n)
        .filter(|x| x / n <= x % n)
        .map(|x| m.basis_vector(x))
        .collect();
    let sub = Subspace::span(k, n * n, vecs);
    m.subalgebra(&sub, default_labels("u", sub.dim())).unwrap().0
}

/// Named algebras of dimension at most 6.
pub fn algebras(k: &PrimeField) -> Vec<(String, StructureAlgebra<PrimeField>)> {
    let poly = |c: &[i64]| polynomial_quotient(k, &Polynomial::from_i64(k, c));
    vec![
        ("k^2".into(), diagonal_algebra(k, 2)),
        ("k^3".into(), diagonal_algebra(k, 3)),
        ("M2".into(), matrix_algebra(k, 2)),
        ("k[x]/x^2".into(), poly(&[0, 0, 1])),
        ("k[x]/x^3".into(), poly(&[0, 0, 0, 1])),
        ("k[x]/(x^2+1)".into(), poly(&[1, 0, 1])),
        ("k[x]/(x^2+x+1)".into(), poly(&[1, 1, 1])),
        ("kZ3".into(), poly(&[-1, 0, 0, 1])),
        ("kZ4".into(), poly(&[-1, 0, 0, 0, 1])),
        ("kZ5".into(), poly(&[-1, 0, 0, 0, 0, 1])),
        ("k(Z2xZ2)".into(), from_table(k, &klein_table())),
        ("kS3".into(), from_table(k, &s3_table())),
        ("T2".into(), upper_triangular(k, 2)),
        ("T3".into(), upper_triangular(k, 3)),
        ("M2xk".into(), matrix_algebra(k, 2).direct_sum(&diagonal_algebra(k, 1))),
        ("M2xk^2".into(), matrix_algebra(k, 2).direct_sum(&diagonal_algebra(k, 2))),
    ]
}

fn random_invertible(k: &PrimeField, n: usize, rng: &mut ChaCha8Rng) -> Matrix<PrimeField> {
    loop {
        let m = Matrix::from_fn(k, n, n, |_, _| rng.gen_range(0..k.modulus()));
        if m.is_invertible() {
            return m;
        }
    }
}

/// Modules of dimension 1..=5 built from the regular module: cyclic
/// submodules, their quotients, and small direct sums, each written in a
/// random basis.
pub fn modules(d: &StructureAlgebra<PrimeField>, seed: u64) -> Vec<AlgModule<PrimeField>> {
    let k = d.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let reg = AlgModule::regular(d);
    let n = d.dim();
    let mut base: Vec<AlgModule<PrimeField>> = Vec::new();
    if n <= 5 {
        base.push(reg.clone());
    }
    let mut gens: Vec<Vec<u64>> = (0..n).map(|i| d.basis_vector(i)).collect();
    for _ in 0..3 {
        gens.push((0..n).map(|_| rng.gen_range(0..k.modulus())).collect());
    }
    for g in &gens {
        let w = reg.spin(g);
        if w.is_zero() {
            continue;
        }
        if w.dim() <= 5 {
            base.push(reg.submodule(&w).unwrap());
        }
        if !w.is_full() && n - w.dim() <= 5 {
            base.push(quotient_module(&reg, &w));
        }
    }
    base.sort_by_key(|m| m.dim());
    base.dedup();
    let mut out = base.clone();
    let small: Vec<&AlgModule<PrimeField>> = base.iter().filter(|m| m.dim() <= 2).take(3).collect();
    for (i, a) in small.iter().enumerate() {
        for b in &small[i..] {
            out.push(a.direct_sum(b).unwrap());
        }
    }
    out.into_iter()
        .filter(|m| (1..=5).contains(&m.dim()))
        .map(|m| {
            let p = random_invertible(k, m.dim(), &mut rng);
            conjugate(&m, &p)
        })
        .collect()
}
