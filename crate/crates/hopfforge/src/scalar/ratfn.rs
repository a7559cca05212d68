//! The fraction field of univariate polynomials over Q.
//!
//! Values are kept in canonical form at all times: numerator and denominator
//! coprime, denominator monic and nonzero, and zero represented as `0/1`.
//! Structural equality is therefore field equality.

use super::poly::{format_poly, format_rational, Poly};
use num::rational::BigRational;
use num::{One, Signed};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    /// Canonicalize `num/den`.  Panics if `den` is zero: callers guard.
    pub fn new(num: Poly, den: Poly) -> RatFn {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFn {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        RatFn {
            num: num.scale(&lc.recip()),
            den: den.monic(),
        }
    }

    pub fn zero() -> RatFn {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFn {
        RatFn {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: BigRational) -> RatFn {
        RatFn {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    /// The field parameter itself.
    pub fn var() -> RatFn {
        RatFn {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, other: &RatFn) -> RatFn {
        RatFn::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFn) -> RatFn {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<RatFn> {
        if self.is_zero() {
            None
        } else {
            Some(RatFn::new(self.den.clone(), self.num.clone()))
        }
    }

    /// Sign convention used for display folding: the numerator's leading
    /// coefficient (the denominator is monic, so this is well defined).
    pub fn is_display_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(|lc| lc.is_negative())
    }
}

impl std::fmt::Display for RatFn {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", format_poly(&self.num, "q"));
        }
        // Canonical fractions with a monomial denominator have a constant
        // numerator (the gcd removed any shared power), so `c*q^-k` covers
        // every pure-power case.
        if self.den.is_monomial() && self.num.degree() == Some(0) {
            let k = self.den.degree().unwrap();
            let c = &self.num.coeffs()[0];
            if c.is_one() {
                return write!(f, "q^-{k}");
            }
            if (-c.clone()).is_one() {
                return write!(f, "-q^-{k}");
            }
            return write!(f, "{}*q^-{}", format_rational(c), k);
        }
        write!(
            f,
            "({})/({})",
            format_poly(&self.num, "q"),
            format_poly(&self.den, "q")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::bigint::BigInt;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn common_factor_cancels() {
        // (q^2 - 1)/(q - 1) = q + 1
        let f = RatFn::new(poly(&[-1, 0, 1]), poly(&[-1, 1]));
        assert_eq!(f, RatFn::new(poly(&[1, 1]), poly(&[1])));
        assert_eq!(f.to_string(), "q + 1");
    }

    #[test]
    fn inverse_powers_print_compactly() {
        let qinv = RatFn::var().inv().unwrap();
        assert_eq!(qinv.to_string(), "q^-1");
        assert_eq!(qinv.mul(&qinv).to_string(), "q^-2");
    }

    #[test]
    fn denominator_is_monic() {
        // 1/(2q - 2) -> (1/2)/(q - 1)
        let f = RatFn::new(poly(&[1]), poly(&[-2, 2]));
        assert_eq!(f.den(), &poly(&[-1, 1]));
        assert_eq!(f.to_string(), "(1/2)/(q - 1)");
    }

    #[test]
    fn zero_is_canonical() {
        let z = RatFn::new(poly(&[]), poly(&[-7, 3]));
        assert!(z.is_zero());
        assert_eq!(z.den(), &Poly::one());
    }
}
