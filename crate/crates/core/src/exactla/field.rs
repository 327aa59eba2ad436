//! Exact scalar fields.
//!
//! Every computation in this crate is generic over a [`Field`]. A field value
//! is a small descriptor (the rationals, or a prime modulus) that performs the
//! arithmetic on plain element values, so elements of `F_p` are bare `u64`s
//! and the modulus lives in exactly one place.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Runtime description of a ground field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarField {
    Rationals,
    PrimeField(u64),
}

impl std::fmt::Display for ScalarField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ScalarField::Rationals => write!(f, "Q"),
            ScalarField::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl std::str::FromStr for ScalarField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "Q" {
            return Ok(ScalarField::Rationals);
        }
        if let Some(p) = s.strip_prefix("Fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime in field descriptor {s:?}")))?;
            PrimeField::new(p)?;
            return Ok(ScalarField::PrimeField(p));
        }
        Err(Error::Parse(format!("unknown field descriptor {s:?}")))
    }
}

/// A field with exact arithmetic.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Ord + Hash + Send + Sync + 'static;

    fn descriptor(&self) -> ScalarField;
    /// 0 for the rationals.
    fn characteristic(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number; `None` if its denominator vanishes.
    fn from_rational(&self, q: &BigRational) -> Option<Self::Elem>;
    /// The element as a rational number, in characteristic zero.
    fn to_rational(&self, a: &Self::Elem) -> Option<BigRational>;
    /// The representative in `[0, p)` of an element of a prime field.
    fn to_residue(&self, a: &Self::Elem) -> Option<u64>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// `a + b*c`, the inner-loop primitive.
    fn mul_add(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(b, c))
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Parse `"n"` or `"n/d"`.
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// All field elements when the field is finite.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    /// A random element; over the rationals a small integer.
    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Reduced row echelon form of `rows` (each of length `ncols`), with zero
    /// rows dropped. Returns the reduced rows and their pivot columns.
    fn rref(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> (Vec<Vec<Self::Elem>>, Vec<usize>) {
        gauss_jordan(self, rows, ncols)
    }
}

/// Plain Gauss-Jordan elimination, skipping zero entries.
pub(crate) fn gauss_jordan<K: Field + ?Sized>(
    k: &K,
    mut rows: Vec<Vec<K::Elem>>,
    ncols: usize,
) -> (Vec<Vec<K::Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !k.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = k.inv(&rows[r][c]).expect("nonzero pivot");
        if !k.is_one(&rows[r][c]) {
            for x in rows[r][c..].iter_mut() {
                *x = k.mul(x, &inv);
            }
        }
        let pivot_row = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || k.is_zero(&row[c]) {
                continue;
            }
            let f = k.neg(&row[c]);
            for j in c..ncols {
                if !k.is_zero(&pivot_row[j]) {
                    row[j] = k.mul_add(&row[j], &f, &pivot_row[j]);
                }
            }
        }
        rows[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> ScalarField {
        ScalarField::Rationals
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn from_rational(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
    fn to_rational(&self, a: &BigRational) -> Option<BigRational> {
        Some(a.clone())
    }
    fn to_residue(&self, _: &BigRational) -> Option<u64> {
        None
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let (n, d) = parse_fraction(s)?;
        Ok(BigRational::new(n, d))
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }

    /// Fraction-free elimination: each row is scaled to a primitive integer
    /// vector and eliminated by cross-multiplication, so intermediate entries
    /// stay integral and small. Rationals only reappear in the final
    /// normalization.
    fn rref(&self, rows: Vec<Vec<BigRational>>, ncols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        let mut int_rows: Vec<Vec<BigInt>> = rows
            .into_iter()
            .filter_map(|row| primitive_integer_row(&row))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r == int_rows.len() {
                break;
            }
            // Prefer the pivot row with the smallest entry to limit growth.
            let Some(p) = (r..int_rows.len())
                .filter(|&i| !int_rows[i][c].is_zero())
                .min_by_key(|&i| int_rows[i][c].magnitude().bits())
            else {
                continue;
            };
            int_rows.swap(r, p);
            let pivot_row = std::mem::take(&mut int_rows[r]);
            let pc = &pivot_row[c];
            for (i, row) in int_rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let g = pc.gcd(&row[c]);
                let a = pc / &g;
                let b = &row[c] / &g;
                for j in 0..ncols {
                    let scaled = if row[j].is_zero() { BigInt::zero() } else { &row[j] * &a };
                    row[j] = if pivot_row[j].is_zero() {
                        scaled
                    } else {
                        scaled - &b * &pivot_row[j]
                    };
                }
                make_primitive(row);
            }
            int_rows[r] = pivot_row;
            pivots.push(c);
            r += 1;
        }
        int_rows.truncate(r);
        let out = int_rows
            .into_iter()
            .zip(&pivots)
            .map(|(row, &c)| {
                let d = row[c].clone();
                row.into_iter().map(|x| BigRational::new(x, d.clone())).collect()
            })
            .collect();
        (out, pivots)
    }
}

fn primitive_integer_row(row: &[BigRational]) -> Option<Vec<BigInt>> {
    if row.iter().all(|x| x.is_zero()) {
        return None;
    }
    let l = row
        .iter()
        .filter(|x| !x.is_zero())
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    make_primitive(&mut out);
    Some(out)
}

fn make_primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

fn parse_fraction(s: &str) -> Result<(BigInt, BigInt)> {
    let bad = || Error::Parse(format!("malformed scalar {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let t = t.strip_prefix('-').unwrap_or(t);
        !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(n) || !valid(d) || d.starts_with('-') {
        return Err(bad());
    }
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok((n, d))
}

/// Syntactic check used by the document reader before the field is known.
pub fn validate_scalar_literal(s: &str) -> Result<()> {
    parse_fraction(s).map(|_| ())
}

/// The prime field `Z/pZ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i128(&self, n: i128) -> u64 {
        n.rem_euclid(self.p as i128) as u64
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> ScalarField {
        ScalarField::PrimeField(self.p)
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u64().expect("reduced residue fits")
    }
    fn from_rational(&self, q: &BigRational) -> Option<u64> {
        let d = self.from_bigint(q.denom());
        self.inv(&d).map(|di| self.mul(&self.from_bigint(q.numer()), &di))
    }
    fn to_rational(&self, _: &u64) -> Option<BigRational> {
        None
    }
    fn to_residue(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + self.p as u128 - *b as u128) % self.p as u128) as u64
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        Some(self.pow(a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn parse_elem(&self, s: &str) -> Result<u64> {
        let (n, d) = parse_fraction(s)?;
        self.from_rational(&BigRational::new(n, d))
            .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes mod {}", self.p)))
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(is_prime(2));
        assert!(is_prime(3));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(PrimeField::new(4).is_err());
    }

    #[test]
    fn inverses_are_exact() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
        }
        let q = Rationals;
        let a = q.parse_elem("-3/4").unwrap();
        assert!(q.is_one(&q.mul(&a, &q.inv(&a).unwrap())));
        assert_eq!(q.format_elem(&a), "-3/4");
    }

    #[test]
    fn literals() {
        assert!(Rationals.parse_elem("1/0").is_err());
        assert!(Rationals.parse_elem("1/-2").is_err());
        assert!(Rationals.parse_elem("x").is_err());
        assert_eq!(Rationals.format_elem(&Rationals.parse_elem("4/2").unwrap()), "2");
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(f3.parse_elem("1/2").unwrap(), 2);
        assert!(f3.parse_elem("1/3").is_err());
        assert_eq!(f3.parse_elem("-1").unwrap(), 2);
    }

    #[test]
    fn descriptors_round_trip() {
        for s in ["Q", "Fp:5"] {
            let d: ScalarField = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("Fp:6".parse::<ScalarField>().is_err());
    }
}
