//! Exact coefficient fields.
//!
//! Three fields are supported: arbitrary-precision rationals, prime fields
//! of machine-word order, and rational functions in a single parameter `q`
//! over the rationals.  Every value carries its field tag; mixing fields in
//! one operation is an error, never a coercion.  All representations are
//! canonical, so `==` is field equality.

mod poly;
mod ratfn;

pub use poly::{format_rational, Poly};
pub use ratfn::RatFn;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NonPrimeModulus(u64),
    #[error("field {0} has no parameter q")]
    ParameterUnavailable(String),
    #[error("{value} has no inverse modulo {modulus}")]
    NotInvertible { value: u64, modulus: u64 },
    #[error("unknown field `{0}`; use rational, gf:P, or ratfunc")]
    UnknownField(String),
}

/// Which coefficient field an algebra works over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldDescriptor {
    /// Arbitrary-precision rationals.
    Rationals,
    /// Integers modulo a prime that fits in a machine word.
    Prime(u64),
    /// Rational functions in the parameter `q` over the rationals.
    RationalFunctions,
}

impl FieldDescriptor {
    /// Construct a prime field, validating primality of the modulus.
    pub fn prime(p: u64) -> Result<FieldDescriptor, ScalarError> {
        if is_prime_u64(p) {
            Ok(FieldDescriptor::Prime(p))
        } else {
            Err(ScalarError::NonPrimeModulus(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::zero()),
            FieldDescriptor::Prime(p) => Scalar::Prime {
                value: 0,
                modulus: *p,
            },
            FieldDescriptor::RationalFunctions => Scalar::RatFn(RatFn::zero()),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldDescriptor::Rationals => Scalar::Rational(BigRational::one()),
            FieldDescriptor::Prime(p) => Scalar::Prime {
                value: 1 % p,
                modulus: *p,
            },
            FieldDescriptor::RationalFunctions => Scalar::RatFn(RatFn::one()),
        }
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldDescriptor::Rationals => {
                Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
            }
            FieldDescriptor::Prime(p) => Scalar::Prime {
                value: v.rem_euclid(*p as i64) as u64,
                modulus: *p,
            },
            FieldDescriptor::RationalFunctions => {
                Scalar::RatFn(RatFn::constant(BigRational::from_integer(BigInt::from(v))))
            }
        }
    }

    /// `n/d` in this field; `d` must not map to zero.
    pub fn ratio(&self, n: i64, d: i64) -> Result<Scalar, ScalarError> {
        self.from_i64(n).div(&self.from_i64(d))
    }

    /// The parameter `q`, available only over rational functions.
    pub fn q(&self) -> Result<Scalar, ScalarError> {
        match self {
            FieldDescriptor::RationalFunctions => Ok(Scalar::RatFn(RatFn::var())),
            other => Err(ScalarError::ParameterUnavailable(other.to_string())),
        }
    }

    /// Whether the syntactic parameter `q` exists in this field.
    pub fn has_parameter(&self) -> bool {
        matches!(self, FieldDescriptor::RationalFunctions)
    }
}

impl std::fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "rational"),
            FieldDescriptor::Prime(p) => write!(f, "gf:{p}"),
            FieldDescriptor::RationalFunctions => write!(f, "ratfunc"),
        }
    }
}

impl std::str::FromStr for FieldDescriptor {
    type Err = ScalarError;

    /// Parse the inverse of `Display`: `rational`, `ratfunc`, or `gf:P`.
    fn from_str(s: &str) -> Result<FieldDescriptor, ScalarError> {
        match s {
            "rational" => Ok(FieldDescriptor::Rationals),
            "ratfunc" => Ok(FieldDescriptor::RationalFunctions),
            _ => match s.strip_prefix("gf:").and_then(|p| p.parse::<u64>().ok()) {
                Some(p) => FieldDescriptor::prime(p),
                None => Err(ScalarError::UnknownField(s.to_string())),
            },
        }
    }
}

/// A field element tagged with its field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
    RatFn(RatFn),
}

impl Scalar {
    pub fn field(&self) -> FieldDescriptor {
        match self {
            Scalar::Rational(_) => FieldDescriptor::Rationals,
            Scalar::Prime { modulus, .. } => FieldDescriptor::Prime(*modulus),
            Scalar::RatFn(_) => FieldDescriptor::RationalFunctions,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
            Scalar::RatFn(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, modulus } => *value == 1 % *modulus,
            Scalar::RatFn(f) => f.is_one(),
        }
    }

    fn mismatch(&self, other: &Scalar) -> ScalarError {
        ScalarError::FieldMismatch {
            left: self.field().to_string(),
            right: other.field().to_string(),
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: p2,
                },
            ) if p == p2 => Ok(Scalar::Prime {
                value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Ok(Scalar::RatFn(a.add(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a.clone()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
            Scalar::RatFn(a) => Scalar::RatFn(a.neg()),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (
                Scalar::Prime {
                    value: a,
                    modulus: p,
                },
                Scalar::Prime {
                    value: b,
                    modulus: p2,
                },
            ) if p == p2 => Ok(Scalar::Prime {
                value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                modulus: *p,
            }),
            (Scalar::RatFn(a), Scalar::RatFn(b)) => Ok(Scalar::RatFn(a.mul(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        match self {
            Scalar::Rational(a) => Ok(Scalar::Rational(a.recip())),
            Scalar::Prime { value, modulus } => Ok(Scalar::Prime {
                value: mod_inverse(*value, *modulus).ok_or(ScalarError::NotInvertible {
                    value: *value,
                    modulus: *modulus,
                })?,
                modulus: *modulus,
            }),
            Scalar::RatFn(a) => Ok(Scalar::RatFn(a.inv().expect("nonzero"))),
        }
    }

    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.mul(&other.inv()?)
    }

    /// Integer power with negative exponents through the inverse.
    /// `0^0` is `1`; `0^negative` is a division-by-zero error.
    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = self.field().one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// For display folding: `Some(|x|)` when the value prints with a leading
    /// minus sign.  Prime-field values use canonical residues and never fold.
    pub fn display_neg_abs(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(a) if a.is_negative() => Some(Scalar::Rational(-a.clone())),
            Scalar::RatFn(f) if f.is_display_negative() => Some(Scalar::RatFn(f.neg())),
            _ => None,
        }
    }

    /// True when the printed form is a sum or a fraction, so coefficient
    /// positions need parentheses.
    pub fn needs_parens(&self) -> bool {
        match self {
            Scalar::RatFn(f) => {
                let s = f.to_string();
                s.contains(" + ") || s.contains(" - ") || s.contains(")/(")
            }
            _ => false,
        }
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Scalar::Rational(a) => write!(f, "{}", format_rational(a)),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
            Scalar::RatFn(a) => write!(f, "{a}"),
        }
    }
}

/// Extended Euclid inverse of `a` modulo `m` (prime in practice).
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = mod_pow(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = ((x as u128 * x as u128) % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_addition_reduces() {
        let f = FieldDescriptor::Rationals;
        let sum = f.ratio(1, 2).unwrap().add(&f.ratio(1, 3).unwrap()).unwrap();
        assert_eq!(sum, f.ratio(5, 6).unwrap());
    }

    #[test]
    fn gf5_wraps() {
        let f = FieldDescriptor::prime(5).unwrap();
        let prod = f.from_i64(3).mul(&f.from_i64(4)).unwrap();
        assert_eq!(prod, f.from_i64(2));
        assert_eq!(f.from_i64(2).pow(4).unwrap(), f.one());
    }

    #[test]
    fn ratfunc_cancellation() {
        let f = FieldDescriptor::RationalFunctions;
        let q = f.q().unwrap();
        // (q^2 - 1)/(q - 1) = q + 1
        let num = q.mul(&q).unwrap().sub(&f.one()).unwrap();
        let den = q.sub(&f.one()).unwrap();
        let val = num.div(&den).unwrap();
        assert_eq!(val, q.add(&f.one()).unwrap());
    }

    #[test]
    fn qinv_squared_prints_as_power() {
        let f = FieldDescriptor::RationalFunctions;
        let v = f.q().unwrap().pow(-2).unwrap();
        assert_eq!(v.to_string(), "q^-2");
    }

    #[test]
    fn zero_pow_zero_is_one() {
        let f = FieldDescriptor::Rationals;
        assert_eq!(f.from_i64(3).pow(0).unwrap(), f.one());
        assert_eq!(f.zero().pow(0).unwrap(), f.one());
        assert!(f.zero().pow(-1).is_err());
    }

    #[test]
    fn mixed_fields_error() {
        let a = FieldDescriptor::Rationals.one();
        let b = FieldDescriptor::prime(5).unwrap().one();
        assert!(matches!(a.add(&b), Err(ScalarError::FieldMismatch { .. })));
    }

    #[test]
    fn modulus_must_be_prime() {
        assert!(FieldDescriptor::prime(6).is_err());
        assert!(FieldDescriptor::prime(2).is_ok());
        assert!(FieldDescriptor::prime(1).is_err());
    }

    #[test]
    fn primality_detects_carmichael() {
        assert!(!is_prime_u64(561));
        assert!(is_prime_u64(2_147_483_647));
    }
}
