//! Exact arithmetic in the golden field Q(√5).
//!
//! Elements are stored as `a + b·φ` with rational `a`, `b`, where
//! φ = (1+√5)/2. Multiplication reduces with φ² = φ + 1, so the
//! representation is unique and equality is componentwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GoldenError {
    #[error("division by zero in Q(sqrt 5)")]
    DivisionByZero,
}

/// An element a + b·φ of Q(√5), exact.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GoldenNumber {
    a: Rational,
    b: Rational,
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GoldenNumber {
    pub fn new(a: Rational, b: Rational) -> Self {
        GoldenNumber { a, b }
    }

    pub fn from_parts(an: i64, ad: i64, bn: i64, bd: i64) -> Self {
        GoldenNumber::new(rat(an, ad), rat(bn, bd))
    }

    pub fn from_int(n: i64) -> Self {
        GoldenNumber::new(rat(n, 1), Rational::zero())
    }

    pub fn zero() -> Self {
        GoldenNumber::from_int(0)
    }

    pub fn one() -> Self {
        GoldenNumber::from_int(1)
    }

    /// φ itself.
    pub fn phi() -> Self {
        GoldenNumber::from_parts(0, 1, 1, 1)
    }

    /// φ⁻¹ = φ − 1.
    pub fn phi_inv() -> Self {
        GoldenNumber::from_parts(-1, 1, 1, 1)
    }

    /// φ^k for any integer k, using φ² = φ+1 and φ⁻¹ = φ−1.
    pub fn phi_pow(k: i64) -> Self {
        let base = if k >= 0 {
            GoldenNumber::phi()
        } else {
            GoldenNumber::phi_inv()
        };
        base.pow_unchecked(k.unsigned_abs())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn phi_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Galois conjugate: φ ↦ 1 − φ.
    pub fn conjugate(&self) -> Self {
        GoldenNumber::new(&self.a + &self.b, -self.b.clone())
    }

    /// Field norm a² + ab − b² (the product with the conjugate), a rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn checked_inv(&self) -> Result<Self, GoldenError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(GoldenError::DivisionByZero);
        }
        let c = self.conjugate();
        Ok(GoldenNumber::new(c.a / &n, c.b / n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, GoldenError> {
        Ok(self * &rhs.checked_inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn checked_pow(&self, k: i64) -> Result<Self, GoldenError> {
        if k < 0 {
            Ok(self.checked_inv()?.pow_unchecked(k.unsigned_abs()))
        } else {
            Ok(self.pow_unchecked(k as u64))
        }
    }

    fn pow_unchecked(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = GoldenNumber::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_f64(&self) -> f64 {
        const PHI: f64 = 1.618033988749894848204586834365638118_f64;
        rational_to_f64(&self.a) + rational_to_f64(&self.b) * PHI
    }
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

impl From<i64> for GoldenNumber {
    fn from(n: i64) -> Self {
        GoldenNumber::from_int(n)
    }
}

impl From<Rational> for GoldenNumber {
    fn from(a: Rational) -> Self {
        GoldenNumber::new(a, Rational::zero())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &GoldenNumber) -> GoldenNumber {
                (&self).$method(rhs)
            }
        }
        impl $trait<GoldenNumber> for &GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                self.$method(&rhs)
            }
        }
    };
}

impl Add<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}
forward_binop!(Add, add);

impl Sub<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}
forward_binop!(Sub, sub);

impl Mul<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ, via φ² = φ+1.
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad_bc = &self.a * &rhs.b + &self.b * &rhs.a;
        GoldenNumber::new(ac + &bd, ad_bc + bd)
    }
}
forward_binop!(Mul, mul);

impl Div<&GoldenNumber> for &GoldenNumber {
    type Output = GoldenNumber;
    fn div(self, rhs: &GoldenNumber) -> GoldenNumber {
        self.checked_div(rhs)
            .expect("division by zero in Q(sqrt 5); use checked_div for fallible division")
    }
}
forward_binop!(Div, div);

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber::new(-self.a.clone(), -self.b.clone())
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -&self
    }
}

impl std::iter::Sum for GoldenNumber {
    fn sum<I: Iterator<Item = GoldenNumber>>(iter: I) -> Self {
        iter.fold(GoldenNumber::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &Rational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Prints as `a + b*phi` (or `a - b*phi`), components reduced.
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rational(&self.a, f)?;
        if self.b.is_negative() {
            write!(f, " - ")?;
            fmt_rational(&-self.b.clone(), f)?;
        } else {
            write!(f, " + ")?;
            fmt_rational(&self.b, f)?;
        }
        write!(f, "*phi")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_times_inverse_is_one() {
        assert_eq!(GoldenNumber::phi() * GoldenNumber::phi_inv(), GoldenNumber::one());
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = GoldenNumber::phi();
        assert_eq!(&phi * &phi, &phi + &GoldenNumber::one());
    }

    #[test]
    fn phi_pow_negative_two() {
        // φ⁻² = 2 − φ
        assert_eq!(GoldenNumber::phi_pow(-2), GoldenNumber::from_parts(2, 1, -1, 1));
        assert_eq!(
            GoldenNumber::phi().checked_pow(-2).unwrap(),
            GoldenNumber::from_parts(2, 1, -1, 1)
        );
    }

    #[test]
    fn phi_pow_negative_three() {
        // φ⁻³ = 2φ − 3, cross-checked by φ³·φ⁻³ = 1.
        let p = GoldenNumber::phi_pow(-3);
        assert_eq!(p, GoldenNumber::from_parts(-3, 1, 2, 1));
        assert_eq!(GoldenNumber::phi_pow(3) * &p, GoldenNumber::one());
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(GoldenNumber::zero().checked_inv(), Err(GoldenError::DivisionByZero));
    }

    #[test]
    fn conjugate_norm_is_rational() {
        let x = GoldenNumber::from_parts(3, 2, -5, 7);
        let n = x.norm();
        let prod = &x * &x.conjugate();
        assert_eq!(prod, GoldenNumber::from(n));
    }

    #[test]
    fn display_reduced_pairs() {
        assert_eq!(GoldenNumber::phi_pow(-3).to_string(), "-3 + 2*phi");
        assert_eq!(GoldenNumber::from_parts(1, 2, -1, 3).to_string(), "1/2 - 1/3*phi");
        assert_eq!(GoldenNumber::from_int(2).to_string(), "2 + 0*phi");
    }

    #[test]
    fn numeric_value() {
        assert!((GoldenNumber::phi().to_f64() - 1.6180339887498949).abs() < 1e-15);
    }
}
