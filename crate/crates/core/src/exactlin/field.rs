//! Exact scalar fields: the rationals and prime fields.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Debug;
use core::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// Which ground field a presentation or computation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    pub fn validate(self) -> Result<Self> {
        if let FieldSpec::Prime(p) = self {
            PrimeField::new(p)?;
        }
        Ok(self)
    }
}

impl core::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// A field with exact arithmetic.
///
/// Elements are plain values; every operation goes through the field object so that
/// prime fields can carry their modulus at runtime.
pub trait Field: Clone + Debug + PartialEq + Eq + Send + Sync + 'static {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `num / den`, or `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn characteristic(&self) -> u64;
    /// Number of elements, `None` for infinite fields.
    fn order(&self) -> Option<u64>;
    /// The `index`-th element in a fixed enumeration (`0, 1, 2, ...` for prime fields,
    /// `0, 1, -1, 2, -2, ...` for the rationals).
    fn element(&self, index: u64) -> Self::Elem;
    /// A seeded random element; over the rationals a small integer.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;
    /// Roots in the field of the polynomial `coeffs[0] + coeffs[1] x + ...`.
    fn roots(&self, coeffs: &[Self::Elem]) -> Vec<Self::Elem>;

    fn spec(&self) -> FieldSpec;
    fn format(&self, a: &Self::Elem) -> String;
    /// Integer representative in `0..p` for prime fields.
    fn lift(&self, a: &Self::Elem) -> Option<u64>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
}

/// The field of rational numbers with arbitrary-precision numerators and denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<BigRational> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
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
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn order(&self) -> Option<u64> {
        None
    }
    fn element(&self, index: u64) -> BigRational {
        let k = index.div_ceil(2) as i64;
        self.from_i64(if index % 2 == 1 { k } else { -k })
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-3..=3))
    }
    fn roots(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        rational_roots(coeffs)
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            alloc::format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn lift(&self, _a: &BigRational) -> Option<u64> {
        None
    }
}

/// The prime field `F_p`, `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_big(&self, v: &BigInt) -> u64 {
        let m = BigInt::from(self.p);
        v.mod_floor(&m).to_u64().unwrap_or(0)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

const ROOT_ENUMERATION_LIMIT: u64 = 1 << 16;

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<u64> {
        let d = self.reduce_big(den);
        let d = self.inv(&d)?;
        Some(self.reduce_big(num) * d % self.p)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a % self.p == 0 {
            None
        } else {
            Some(self.pow(*a, self.p - 2))
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
    fn order(&self) -> Option<u64> {
        Some(self.p)
    }
    fn element(&self, index: u64) -> u64 {
        index % self.p
    }
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.p)
    }
    fn roots(&self, coeffs: &[u64]) -> Vec<u64> {
        let eval = |x: u64| {
            coeffs
                .iter()
                .rev()
                .fold(0u64, |acc, c| (acc * x + c) % self.p)
        };
        if coeffs.iter().all(|c| *c == 0) {
            return Vec::new();
        }
        if self.p <= ROOT_ENUMERATION_LIMIT {
            (0..self.p).filter(|x| eval(*x) == 0).collect()
        } else {
            // Large moduli: only the cheap candidates are tested.
            [0, 1, self.p - 1]
                .into_iter()
                .filter(|x| eval(*x) == 0)
                .collect()
        }
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
    fn lift(&self, a: &u64) -> Option<u64> {
        Some(*a)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

const DIVISOR_SEARCH_LIMIT: u64 = 1 << 20;

/// Positive divisors of `n`, or `None` when trial division would be too expensive.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    let small = n.to_u64()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= small {
        if d > DIVISOR_SEARCH_LIMIT {
            return None;
        }
        if small % d == 0 {
            out.push(BigInt::from(d));
            if d != small / d {
                out.push(BigInt::from(small / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// Rational roots via the rational root theorem.
pub fn rational_roots(coeffs: &[BigRational]) -> Vec<BigRational> {
    let mut coeffs: Vec<BigRational> = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    let shift = coeffs.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        roots.push(BigRational::zero());
        coeffs.drain(..shift);
    }
    if coeffs.len() <= 1 {
        return roots;
    }
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let (Some(nums), Some(dens)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let eval = |x: &BigRational| {
        coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    };
    let mut seen: Vec<BigRational> = Vec::new();
    for p in &nums {
        for q in &dens {
            for sign in [1i64, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                if !seen.contains(&cand) && eval(&cand).is_zero() {
                    roots.push(cand.clone());
                }
                seen.push(cand);
            }
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.mul(&3, &5), 1);
        assert_eq!(f.inv(&3), Some(5));
        assert_eq!(f.neg(&0), 0);
        assert_eq!(f.from_i64(-1), 6);
        assert_eq!(f.inv(&0), None);
        assert!(PrimeField::new(9).is_err());
        assert_eq!(
            f.from_ratio(&BigInt::from(1), &BigInt::from(2)),
            Some(4)
        );
    }

    #[test]
    fn rational_root_finding() {
        let q = Rationals;
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let c = [
            q.zero(),
            q.from_ratio(&BigInt::from(-3), &BigInt::from(2)).unwrap(),
            q.from_ratio(&BigInt::from(5), &BigInt::from(2)).unwrap(),
            q.one(),
        ];
        let mut r = rational_roots(&c);
        r.sort();
        assert_eq!(
            r,
            [
                q.from_i64(-3),
                q.zero(),
                q.from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap()
            ]
        );
        // x^2 + 1 has none
        assert!(rational_roots(&[q.one(), q.zero(), q.one()]).is_empty());
    }

    #[test]
    fn enumeration_of_rationals() {
        let q = Rationals;
        let firsts: Vec<_> = (0..5).map(|i| q.element(i)).collect();
        assert_eq!(
            firsts,
            [q.zero(), q.one(), q.from_i64(-1), q.from_i64(2), q.from_i64(-2)]
        );
    }
}
