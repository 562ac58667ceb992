use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::poly::IntPoly;

/// Integer Laurent polynomial in `t`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(coeff: BigInt, exponent: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exponent, coeff);
        p
    }

    /// `t^exponent`.
    pub fn power(exponent: i64) -> Self {
        Self::monomial(BigInt::one(), exponent)
    }

    /// `sum coeffs[k] t^k` for `k = 0, 1, ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (k, &c) in coeffs.iter().enumerate() {
            p.add_term(k as i64, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exponent).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect() }
    }

    /// The ordinary polynomial `t^{-min} · self` together with `min`.
    pub fn to_int_poly(&self) -> (IntPoly, i64) {
        let Some(lo) = self.min_exponent() else {
            return (IntPoly::zero(), 0);
        };
        let hi = self.max_exponent().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (&e, c) in &self.terms {
            coeffs[(e - lo) as usize] = c.clone();
        }
        (IntPoly::new(coeffs), lo)
    }

    /// `t^shift · p`.
    pub fn from_int_poly(p: &IntPoly, shift: i64) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(k as i64 + shift, c.clone());
        }
        out
    }

    /// The unit multiple `±t^k · self` whose lowest term has exponent 0 and a
    /// positive coefficient.
    pub fn normalized(&self) -> Self {
        let Some(lo) = self.min_exponent() else {
            return Self::zero();
        };
        let shifted = self.shift(-lo);
        if self.terms[&lo].is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    /// Whether `self = ±t^k · other` for some `k`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    /// Normalized gcd in `Z[t, t^-1]`.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (pa, _) = a.to_int_poly();
        let (pb, _) = b.to_int_poly();
        Self::from_int_poly(&IntPoly::gcd(&pa, &pb), 0).normalized()
    }

    /// Value at an integer `t`; `None` when `t` is not a unit and negative
    /// powers occur.
    pub fn eval(&self, t: i64) -> Option<BigInt> {
        let unit = t == 1 || t == -1;
        if !unit && self.min_exponent().is_some_and(|e| e < 0) {
            return None;
        }
        let t = BigInt::from(t);
        Some(
            self.terms
                .iter()
                // negative exponents only reach here when t = ±1, where t^-k = t^k
                .map(|(&e, c)| c * num_traits::pow(t.clone(), e.unsigned_abs() as usize))
                .sum(),
        )
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl fmt::Display for LaurentPoly {
    /// Lowest degree first: `1 - 4t + 5t^2 - 4t^3 + t^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match e {
                1 => f.write_str("t")?,
                _ => write!(f, "t^{e}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
