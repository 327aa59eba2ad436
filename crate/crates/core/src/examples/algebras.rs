use crate::assoc::{default_labels, StructureAlgebra};
use crate::exactla::{Field, Polynomial};

/// `k_I`: `n` orthogonal idempotents summing to the unit.
pub fn diagonal_algebra<K: Field>(k: &K, n: usize) -> StructureAlgebra<K> {
    StructureAlgebra::from_fn(k, default_labels("p", n), |i, j| {
        let mut v = vec![k.zero(); n];
        if i == j {
            v[i] = k.one();
        }
        v
    })
}

/// `M_n(k)` on the matrix units `E_ij` at index `i * n + j`.
pub fn matrix_algebra<K: Field>(k: &K, n: usize) -> StructureAlgebra<K> {
    let labels = (0..n * n).map(|x| format!("E{}{}", x / n + 1, x % n + 1)).collect();
    StructureAlgebra::from_fn(k, labels, |a, b| {
        let (i, j) = (a / n, a % n);
        let (l, m) = (b / n, b % n);
        let mut v = vec![k.zero(); n * n];
        if j == l {
            v[i * n + m] = k.one();
        }
        v
    })
}

/// `k[x]/(f)` for monic `f`, on the basis `1, x, ..., x^(d-1)`.
pub fn polynomial_quotient<K: Field>(k: &K, f: &Polynomial<K>) -> StructureAlgebra<K> {
    let d = f.degree().expect("nonzero modulus");
    let labels = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    StructureAlgebra::from_fn(k, labels, |i, j| {
        let mut c = vec![k.zero(); i + j + 1];
        c[i + j] = k.one();
        let r = Polynomial::new(k, c).rem(f).expect("nonzero modulus");
        (0..d).map(|t| r.coeff(t)).collect()
    })
}

/// `n`-dimensional algebra with all products zero.
pub fn zero_algebra<K: Field>(k: &K, n: usize) -> StructureAlgebra<K> {
    StructureAlgebra::from_fn(k, default_labels("e", n), |_, _| vec![k.zero(); n])
}
