//! Dense univariate polynomials over the rationals.
//!
//! These back the rational-function coefficient field.  Coefficients are
//! arbitrary-precision rationals stored in ascending degree with no trailing
//! zeros, so structural equality is canonical equality.  The gcd goes through
//! integer content/primitive-part splitting with a primitive pseudo-remainder
//! sequence, which keeps intermediate coefficients small and is fully
//! deterministic.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

/// Polynomial in one variable over Q, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { coeffs: vec![c] }
        }
    }

    /// The indeterminate itself (degree-one monomial with coefficient 1).
    pub fn var() -> Self {
        Poly {
            coeffs: vec![BigRational::zero(), BigRational::one()],
        }
    }

    /// `c * var^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// True when this is `c * var^k` for a single term.
    pub fn is_monomial(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            let b = other
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            coeffs.push(a + b);
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division with remainder over Q.  `other` must be nonzero.
    pub fn divrem(&self, other: &Poly) -> (Poly, Poly) {
        assert!(!other.is_zero(), "polynomial division by zero");
        let mut rem = self.clone();
        let d = other.degree().unwrap();
        let lc = other.leading_coeff().unwrap().clone();
        if rem.degree().is_none_or(|rd| rd < d) {
            return (Poly::zero(), rem);
        }
        let mut quot = vec![BigRational::zero(); rem.coeffs.len() - d];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let q = rem.leading_coeff().unwrap() / &lc;
            let shift = rd - d;
            quot[shift] = q.clone();
            let sub = other.mul(&Poly::monomial(q, shift));
            rem = rem.sub(&sub);
        }
        (Poly::from_coeffs(quot), rem)
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Monic gcd over Q, computed with integer content/primitive parts and a
    /// primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = primitive_int_poly(self);
        let mut b = primitive_int_poly(other);
        if int_degree(&a) < int_degree(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = int_primitive_part(r);
        }
        let rational = Poly::from_coeffs(a.into_iter().map(BigRational::from_integer).collect());
        rational.monic()
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

fn int_degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

/// Clear denominators and strip integer content; result is primitive with a
/// positive leading coefficient.
fn primitive_int_poly(p: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    int_primitive_part(ints)
}

fn int_primitive_part(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        return p;
    }
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
    }
    if p.last().unwrap().is_negative() {
        content = -content;
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of integer polynomials: `lc(b)^(da-db+1) * a  mod  b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_degree(b);
    let lc_b = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    loop {
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if rem.is_empty() || int_degree(&rem) < db {
            return rem;
        }
        let dr = int_degree(&rem);
        let lead = rem.last().unwrap().clone();
        // rem := lc_b * rem - lead * x^(dr-db) * b
        for c in rem.iter_mut() {
            *c = &*c * &lc_b;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            rem[i + shift] -= &lead * bc;
        }
    }
}

/// Render with `var` as the variable name, descending degree, omitting unit
/// coefficients (`q^2 - 1`, `2*q^3 + 1/2*q`).
pub fn format_poly(p: &Poly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    let mut first = true;
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = if neg { -c.clone() } else { c.clone() };
        if first {
            if neg {
                out.push('-');
            }
            first = false;
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_part = if mag.is_one() && k > 0 {
            None
        } else {
            Some(format_rational(&mag))
        };
        let var_part = match k {
            0 => None,
            1 => Some(var.to_string()),
            _ => Some(format!("{var}^{k}")),
        };
        match (coeff_part, var_part) {
            (Some(c), Some(v)) => {
                out.push_str(&c);
                out.push('*');
                out.push_str(&v);
            }
            (Some(c), None) => out.push_str(&c),
            (None, Some(v)) => out.push_str(&v),
            (None, None) => unreachable!("zero-degree term always has a coefficient"),
        }
    }
    out
}

pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
