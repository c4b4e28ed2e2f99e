//! Integer multivariate polynomials in the fixed variable set X, Y, W, A, B, U.
//!
//! Terms are kept in a canonical order (lexicographic on exponent vectors,
//! variables compared alphabetically A, B, U, W, X, Y) so the text form is
//! deterministic: `AY² − 2YW + 1` prints as `+1*A^1*Y^2 -2*W^1*Y^1 +1`.

use crate::golden::GoldenNumber;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

/// Polynomial variables, in canonical (alphabetical) comparison order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    U,
    W,
    X,
    Y,
}

pub const VARS: [Var; 6] = [Var::A, Var::B, Var::U, Var::W, Var::X, Var::Y];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::B => "B",
            Var::U => "U",
            Var::W => "W",
            Var::X => "X",
            Var::Y => "Y",
        }
    }

    fn index(self) -> usize {
        match self {
            Var::A => 0,
            Var::B => 1,
            Var::U => 2,
            Var::W => 3,
            Var::X => 4,
            Var::Y => 5,
        }
    }
}

/// Exponent vector over (A, B, U, W, X, Y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub [u16; 6]);

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Monomial::default();
        m.0[v.index()] = e;
        m
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.0[v.index()]
    }

    pub fn set(mut self, v: Var, e: u16) -> Self {
        self.0[v.index()] = e;
        self
    }

    fn checked_mul(&self, rhs: &Monomial) -> Monomial {
        let mut out = [0u16; 6];
        for i in 0..6 {
            out[i] = self.0[i].checked_add(rhs.0[i]).expect("monomial exponent overflow");
        }
        Monomial(out)
    }

    fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("no value supplied for variable {0} during evaluation")]
    MissingVariable(&'static str),
}

/// Sparse integer polynomial; no zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, i64>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        let mut p = MultiPoly::default();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: Var) -> Self {
        let mut p = MultiPoly::default();
        p.add_term(Monomial::var(v, 1), 1);
        p
    }

    pub fn monomial(m: Monomial, c: i64) -> Self {
        let mut p = MultiPoly::default();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry = entry.checked_add(c).expect("polynomial coefficient overflow");
        if *entry == 0 {
            self.terms.remove(&m);
        }
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> i64 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Largest exponent of `v` over all terms.
    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Does `v` occur with a positive exponent anywhere?
    pub fn mentions(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    /// Exact evaluation with golden-field values for every mentioned variable.
    pub fn eval_golden(
        &self,
        assignment: &BTreeMap<Var, GoldenNumber>,
    ) -> Result<GoldenNumber, PolyError> {
        let mut total = GoldenNumber::zero();
        for (m, &c) in &self.terms {
            let mut term = GoldenNumber::from_int(c);
            for v in VARS {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = assignment.get(&v).ok_or(PolyError::MissingVariable(v.name()))?;
                term = term * val.checked_pow(e as i64).expect("nonnegative power");
            }
            total = total + term;
        }
        Ok(total)
    }

    /// Floating-point evaluation.
    pub fn eval_f64(&self, assignment: &BTreeMap<Var, f64>) -> Result<f64, PolyError> {
        let mut total = 0.0;
        for (m, &c) in &self.terms {
            let mut term = c as f64;
            for v in VARS {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let val = assignment.get(&v).ok_or(PolyError::MissingVariable(v.name()))?;
                term *= val.powi(e as i32);
            }
            total += term;
        }
        Ok(total)
    }

    /// Canonical text form: terms sorted lexicographically by exponent vector
    /// (largest first), coefficients always signed and explicit.
    pub fn canonical_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.terms.len());
        for (m, &c) in self.terms.iter().rev() {
            let mut s = if c >= 0 { format!("+{c}") } else { format!("{c}") };
            if !m.is_one() {
                for v in VARS {
                    let e = m.exp(v);
                    if e > 0 {
                        s.push_str(&format!("*{}^{}", v.name(), e));
                    }
                }
            }
            parts.push(s);
        }
        parts.join(" ")
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, &c) in &rhs.terms {
            out.add_term(*m, c.checked_neg().expect("coefficient overflow"));
        }
        out
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ml, &cl) in &self.terms {
            for (mr, &cr) in &rhs.terms {
                out.add_term(
                    ml.checked_mul(mr),
                    cl.checked_mul(cr).expect("coefficient overflow"),
                );
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        &MultiPoly::zero() - self
    }
}

macro_rules! forward_poly_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
    };
}
forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::rat;

    fn poly_ay2_2yw_1() -> MultiPoly {
        // AY² − 2YW + 1
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::var(Var::A, 1).set(Var::Y, 2), 1);
        p.add_term(Monomial::var(Var::Y, 1).set(Var::W, 1), -2);
        p.add_term(Monomial::one(), 1);
        p
    }

    #[test]
    fn canonical_text_matches_convention() {
        assert_eq!(poly_ay2_2yw_1().canonical_text(), "+1*A^1*Y^2 -2*W^1*Y^1 +1");
        assert_eq!(MultiPoly::zero().canonical_text(), "0");
        assert_eq!(MultiPoly::constant(-3).canonical_text(), "-3");
    }

    #[test]
    fn eval_exact_y_minus_one_squared() {
        // (Y−1)² at Y = φ² equals φ², since φ²−1 = φ.
        let y = MultiPoly::var(Var::Y);
        let p = (&y - &MultiPoly::one()) * (&y - &MultiPoly::one());
        let mut assn = BTreeMap::new();
        assn.insert(Var::Y, GoldenNumber::phi_pow(2));
        assert_eq!(p.eval_golden(&assn).unwrap(), GoldenNumber::phi_pow(2));
    }

    #[test]
    fn eval_missing_variable_errors() {
        let p = poly_ay2_2yw_1();
        let mut assn = BTreeMap::new();
        assn.insert(Var::Y, GoldenNumber::phi());
        assert_eq!(p.eval_golden(&assn), Err(PolyError::MissingVariable("W")));
    }

    #[test]
    fn constant_term_at_zero_assignment() {
        let p = poly_ay2_2yw_1();
        let mut assn = BTreeMap::new();
        for v in VARS {
            assn.insert(v, GoldenNumber::zero());
        }
        assert_eq!(p.eval_golden(&assn).unwrap(), GoldenNumber::one());
    }

    #[test]
    fn pair_sum_of_r5_sectors_on_wedge_poly() {
        // The two sector assignments of the wedge polynomial sum to 2 − 2φ⁻².
        let p = poly_ay2_2yw_1();
        let mut s1 = BTreeMap::new();
        s1.insert(Var::Y, GoldenNumber::phi_pow(2));
        s1.insert(Var::W, GoldenNumber::one());
        s1.insert(Var::A, GoldenNumber::phi_pow(-2));
        let mut s2 = s1.clone();
        s2.insert(Var::W, GoldenNumber::phi_pow(-4));
        let total = p.eval_golden(&s1).unwrap() + p.eval_golden(&s2).unwrap();
        let expected = GoldenNumber::from_int(2) - GoldenNumber::from_int(2) * GoldenNumber::phi_pow(-2);
        assert_eq!(total, expected);
        assert_eq!(expected, GoldenNumber::new(rat(-2, 1), rat(2, 1)));
    }
}
