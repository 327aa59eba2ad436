//! Univariate polynomials over an exact field.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Field, Rationals, ScalarField};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Coefficients lowest degree first, with no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<K: Field> {
    field: K,
    coeffs: Vec<K::Elem>,
}

impl<K: Field> fmt::Debug for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl<K: Field> fmt::Display for Polynomial<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let k = &self.field;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if k.is_zero(c) {
                continue;
            }
            let s = k.format_elem(c);
            let (neg, s) = match s.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = s == "1";
            match (i, unit) {
                (0, _) => write!(f, "{s}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{s}*t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{s}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl<K: Field> Polynomial<K> {
    pub fn new(field: &K, mut coeffs: Vec<K::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn from_i64(field: &K, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &K) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &K) -> Self {
        Self::constant(field, field.one())
    }

    pub fn constant(field: &K, c: K::Elem) -> Self {
        Self::new(field, vec![c])
    }

    /// The polynomial `t`.
    pub fn t(field: &K) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `t - a`.
    pub fn linear(field: &K, a: &K::Elem) -> Self {
        Self::new(field, vec![field.neg(a), field.one()])
    }

    pub fn field(&self) -> &K {
        &self.field
    }

    pub fn coeffs(&self) -> &[K::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> K::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&K::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.field.is_one(&self.coeffs[0])
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &K::Elem) -> Self {
        let k = &self.field;
        Self::new(k, self.coeffs.iter().map(|a| k.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(k, (0..n).map(|i| k.add(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let k = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(k, (0..n).map(|i| k.sub(&self.coeff(i), &other.coeff(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let k = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(k);
        }
        let mut out = vec![k.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if k.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = k.mul_add(&out[i + j], a, b);
            }
        }
        Self::new(k, out)
    }

    pub fn derivative(&self) -> Self {
        let k = &self.field;
        Self::new(
            k,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| k.mul(&k.from_i64(i as i64), c))
                .collect(),
        )
    }

    /// Quotient and remainder of Euclidean division.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let k = &self.field;
        let dl = d.leading().ok_or(Error::ZeroPolynomial)?;
        let dinv = k.inv(dl).expect("nonzero leading coefficient");
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(k), self.clone()));
        }
        let mut q = vec![k.zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if k.is_zero(&r[i]) {
                continue;
            }
            let c = k.mul(&r[i], &dinv);
            let nc = k.neg(&c);
            for (j, x) in d.coeffs.iter().enumerate() {
                if !k.is_zero(x) {
                    r[i - dd + j] = k.mul_add(&r[i - dd + j], &nc, x);
                }
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(k, q), Self::new(k, r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    /// Exact quotient; panics if `d` does not divide `self`.
    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.divrem(d).expect("nonzero divisor");
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        self.mul(other).div_exact(&self.gcd(other)).monic()
    }

    pub fn eval(&self, x: &K::Elem) -> K::Elem {
        let k = &self.field;
        self.coeffs.iter().rev().fold(k.zero(), |acc, c| k.mul_add(c, &acc, x))
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix<K>) -> Matrix<K> {
        let k = &self.field;
        let n = m.rows();
        let mut acc = Matrix::zeros(k, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if !k.is_zero(c) {
                for i in 0..n {
                    acc.add_at(i, i, c);
                }
            }
        }
        acc
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Result<Self> {
        let base = self.rem(modulus)?;
        let mut acc = Self::one(&self.field).rem(modulus)?;
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }
}

/// Monic minimal polynomial of a square matrix.
///
/// Each standard basis vector is spun up under `m` until the Krylov sequence
/// becomes dependent; the dependency is its local minimal polynomial, and
/// the result is the lcm of these.
pub fn min_poly<K: Field>(m: &Matrix<K>) -> Result<Polynomial<K>> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let k = m.field();
    let n = m.rows();
    let mut acc = Polynomial::one(k);
    let mut acc_at_m = Matrix::identity(k, n);
    for i in 0..n {
        if acc_at_m.column(i).iter().all(|x| k.is_zero(x)) {
            continue;
        }
        let mut e = vec![k.zero(); n];
        e[i] = k.one();
        let local = local_min_poly(m, &e);
        acc = acc.lcm(&local);
        acc_at_m = acc.eval_matrix(m);
    }
    Ok(acc)
}

/// Monic polynomial of least degree with `f(m) v = 0`.
pub fn local_min_poly<K: Field>(m: &Matrix<K>, v: &[K::Elem]) -> Polynomial<K> {
    let k = m.field();
    let n = m.rows();
    let mut krylov: Vec<Vec<K::Elem>> = vec![v.to_vec()];
    loop {
        let d = krylov.len();
        let next = m.mul_vec(&krylov[d - 1]);
        // Solve sum c_i m^i v = m^d v.
        let basis = Matrix::from_columns(k, &krylov, n);
        let rhs = Matrix::column_vector(k, &next);
        if let Some(c) = basis.solve(&rhs).expect("same field") {
            let mut coeffs: Vec<K::Elem> = c.column(0).iter().map(|x| k.neg(x)).collect();
            coeffs.push(k.one());
            return Polynomial::new(k, coeffs);
        }
        krylov.push(next);
    }
}

/// Characteristic polynomial `det(t I - m)` via reduction to Hessenberg form.
pub fn char_poly<K: Field>(m: &Matrix<K>) -> Result<Polynomial<K>> {
    if !m.is_square() {
        return Err(Error::NotSquare);
    }
    let k = m.field();
    let n = m.rows();
    let mut h = m.clone();
    for c in 0..n.saturating_sub(2) {
        let r = c + 1;
        let Some(p) = (r..n).find(|&i| !k.is_zero(h.get(i, c))) else {
            continue;
        };
        if p != r {
            for j in 0..n {
                let (a, b) = (h.get(p, j).clone(), h.get(r, j).clone());
                h.set(p, j, b);
                h.set(r, j, a);
            }
            for i in 0..n {
                let (a, b) = (h.get(i, p).clone(), h.get(i, r).clone());
                h.set(i, p, b);
                h.set(i, r, a);
            }
        }
        let pinv = k.inv(h.get(r, c)).expect("nonzero pivot");
        for i in r + 1..n {
            let u = k.mul(h.get(i, c), &pinv);
            if k.is_zero(&u) {
                continue;
            }
            let nu = k.neg(&u);
            for j in 0..n {
                let v = k.mul_add(h.get(i, j), &nu, h.get(r, j));
                h.set(i, j, v);
            }
            for j in 0..n {
                let v = k.mul_add(h.get(j, r), &u, h.get(j, i));
                h.set(j, r, v);
            }
        }
    }
    let mut ps: Vec<Polynomial<K>> = vec![Polynomial::one(k)];
    for mm in 1..=n {
        let lin = Polynomial::linear(k, h.get(mm - 1, mm - 1));
        let mut p = lin.mul(&ps[mm - 1]);
        let mut prod = k.one();
        for i in 1..mm {
            prod = k.mul(&prod, h.get(mm - i, mm - i - 1));
            if k.is_zero(&prod) {
                break;
            }
            let c = k.mul(&prod, h.get(mm - i - 1, mm - 1));
            p = p.sub(&ps[mm - i - 1].scale(&c));
        }
        ps.push(p);
    }
    Ok(ps.pop().expect("nonempty"))
}

/// All roots of `f` in the ground field, sorted and without repetition.
pub fn rational_roots<K: Field>(f: &Polynomial<K>) -> Result<Vec<K::Elem>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let k = f.field();
    match k.descriptor() {
        ScalarField::Rationals => {
            let roots = rational_roots_q(&to_rational_coeffs(f));
            Ok(roots.iter().map(|r| k.from_rational(r).expect("characteristic zero")).collect())
        }
        ScalarField::PrimeField(p) => {
            let x = Polynomial::t(k);
            let frob = x.pow_mod(&BigUint::from(p), f)?;
            let g = f.gcd(&frob.sub(&x));
            let mut rng = ChaCha8Rng::seed_from_u64(0);
            let mut roots: Vec<K::Elem> = equal_degree_split(&g, 1, p, &mut rng)
                .into_iter()
                .map(|l| k.neg(&l.coeff(0)))
                .collect();
            roots.sort();
            Ok(roots)
        }
    }
}

fn to_rational_coeffs<K: Field>(f: &Polynomial<K>) -> Vec<BigRational> {
    let k = f.field();
    f.coeffs().iter().map(|c| k.to_rational(c).expect("characteristic zero")).collect()
}

fn rational_roots_q(coeffs: &[BigRational]) -> Vec<BigRational> {
    let q = Rationals;
    let f = Polynomial::new(&q, coeffs.to_vec());
    // Work with the square-free part to keep coefficients small.
    let f = f.div_exact(&f.gcd(&f.derivative()));
    let mut ints = integer_coefficients(f.coeffs());
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(BigRational::zero());
        ints.drain(..low);
    }
    if ints.len() > 1 {
        let a0 = ints[0].abs();
        let an = ints[ints.len() - 1].abs();
        let num_divs = divisors(&a0);
        let den_divs = divisors(&an);
        let g = Polynomial::new(&q, ints.iter().map(|c| BigRational::from_integer(c.clone())).collect());
        for p in &num_divs {
            for d in &den_divs {
                if !p.gcd(d).is_one() {
                    continue;
                }
                for s in [BigInt::one(), -BigInt::one()] {
                    let cand = BigRational::new(&s * p, d.clone());
                    if g.eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

fn integer_coefficients(coeffs: &[BigRational]) -> Vec<BigInt> {
    let l = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in ints.iter_mut() {
            *c /= &g;
        }
    }
    ints
}

/// Positive divisors of a nonzero integer by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = BigInt::from(2u32);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            factors.push((d.clone(), e));
        }
        d += 1u32;
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for x in &out {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(x * &pk);
                pk *= &p;
            }
        }
        out = next;
    }
    out
}

/// Factorization of `f` into monic irreducibles with multiplicities, over a
/// prime field. Factors are sorted by degree, then coefficients.
pub fn factor_over_prime_field<K: Field>(f: &Polynomial<K>) -> Result<Vec<(Polynomial<K>, usize)>> {
    let ScalarField::PrimeField(p) = f.field().descriptor() else {
        return Err(Error::FactorizationUnsupported);
    };
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut out = Vec::new();
    for (part, mult) in square_free(&f.monic(), p) {
        for (g, d) in distinct_degree(&part, p)? {
            for h in equal_degree_split(&g, d, p, &mut rng) {
                out.push((h, mult));
            }
        }
    }
    out.sort_by(|a, b| (a.0.degree(), a.0.coeffs()).cmp(&(b.0.degree(), b.0.coeffs())));
    Ok(out)
}

/// Square-free decomposition `f = prod g_i^{m_i}` of a monic polynomial.
fn square_free<K: Field>(f: &Polynomial<K>, p: u64) -> Vec<(Polynomial<K>, usize)> {
    let k = f.field();
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if z.degree().unwrap_or(0) > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.div_exact(&w);
    }
    if !c.is_one() {
        // c is a polynomial in t^p; over F_p its p-th root just drops the
        // exponents by a factor p.
        let p = p as usize;
        let root = Polynomial::new(k, c.coeffs().iter().step_by(p).cloned().collect());
        for (g, m) in square_free(&root, p as u64) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a square-free monic polynomial into products of irreducibles of
/// equal degree.
fn distinct_degree<K: Field>(f: &Polynomial<K>, p: u64) -> Result<Vec<(Polynomial<K>, usize)>> {
    let k = f.field();
    let x = Polynomial::t(k);
    let pe = BigUint::from(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&pe, &rest)?;
        let g = rest.gcd(&h.sub(&x));
        if !g.is_one() {
            rest = rest.div_exact(&g);
            h = h.rem(&rest)?;
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&deg| deg > 0) {
        out.push((rest, deg));
    }
    Ok(out)
}

/// Cantor-Zassenhaus splitting of a product of distinct monic irreducibles of
/// degree `d`.
fn equal_degree_split<K: Field>(f: &Polynomial<K>, d: usize, p: u64, rng: &mut ChaCha8Rng) -> Vec<Polynomial<K>> {
    let k = f.field();
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![f.monic()];
    }
    let exp = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    loop {
        let a = Polynomial::new(k, (0..n).map(|_| k.random_elem(rng)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Absolute trace a + a^2 + ... + a^(2^(d-1)) mod f.
            let mut t = a.rem(f).expect("nonzero modulus");
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.mul(&t).rem(f).expect("nonzero modulus");
                acc = acc.add(&t);
            }
            acc
        } else {
            a.pow_mod(&exp, f).expect("nonzero modulus").sub(&Polynomial::one(k))
        };
        let g = f.gcd(&b);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut out = equal_degree_split(&g, d, p, rng);
            out.extend(equal_degree_split(&f.div_exact(&g), d, p, rng));
            return out;
        }
    }
}
