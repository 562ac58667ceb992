//! Dense univariate polynomials over `Z` with exact remainder sequences.
//!
//! Only what the homology and Fox-calculus modules need: ring operations,
//! content/primitive part, pseudo-remainders, exact division, the
//! subresultant gcd and the resultant.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    // coeffs[i] is the coefficient of x^i; no trailing zeros
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Leading coefficient (zero for the zero polynomial).
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; panics if the division is inexact.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        )
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        let pp = self.div_scalar_exact(&c);
        if pp.lc().is_negative() {
            -pp
        } else {
            pp
        }
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `lc(b)^(deg a - deg b + 1) · a mod b`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo-division by zero");
        let lb = b.lc();
        let mut r = self.clone();
        let Some(da) = self.degree() else { return r };
        if da < db {
            return r;
        }
        let mut steps = da - db + 1;
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc();
            let shift = IntPoly::monomial(lr, dr - db);
            r = r.scale(&lb) - &shift * b;
            steps -= 1;
        }
        // pad the multiplier so the result is exactly lc(b)^(δ+1)·a mod b
        if steps > 0 {
            r = r.scale(&Pow::pow(&lb, steps));
        }
        r
    }

    /// Exact quotient `self / b` over `Z`, or `None` if `b` does not divide `self`.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        let db = b.degree()?;
        let lb = b.lc();
        let mut r = self.clone();
        let Some(da) = r.degree() else { return Some(IntPoly::zero()) };
        if da < db {
            return None;
        }
        let mut q = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (c, rem) = r.lc().div_rem(&lb);
            if !rem.is_zero() {
                return None;
            }
            q[dr - db] = c.clone();
            r = r - &IntPoly::monomial(c, dr - db) * b;
        }
        Some(IntPoly::new(q))
    }

    /// Greatest common divisor in `Z[x]` with positive leading coefficient,
    /// via the subresultant remainder sequence.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let (mut a, mut b) = if a.degree() >= b.degree() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if b.is_zero() {
            return if a.lc().is_negative() { -a } else { a };
        }
        let d = a.content().gcd(&b.content());
        a = a.primitive_part();
        b = b.primitive_part();
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree().unwrap() - b.degree().unwrap();
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break;
            }
            if r.degree() == Some(0) {
                b = IntPoly::one();
                break;
            }
            a = b;
            b = r.div_scalar_exact(&(&g * Pow::pow(&h, delta)));
            g = a.lc();
            h = subresultant_h(&h, &g, delta);
        }
        b.primitive_part().scale(&d)
    }

    /// Resultant `Res(a, b)` via the subresultant algorithm.
    pub fn resultant(a: &IntPoly, b: &IntPoly) -> BigInt {
        let (Some(da0), Some(db0)) = (a.degree(), b.degree()) else {
            return BigInt::zero();
        };
        if da0 == 0 {
            return Pow::pow(&a.lc(), db0);
        }
        if db0 == 0 {
            return Pow::pow(&b.lc(), da0);
        }
        let ca = a.content();
        let cb = b.content();
        let mut a = a.div_scalar_exact(&ca);
        let mut b = b.div_scalar_exact(&cb);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        let mut s = BigInt::one();
        let t = Pow::pow(&ca, db0) * Pow::pow(&cb, da0);
        if da0 < db0 {
            std::mem::swap(&mut a, &mut b);
            if da0 % 2 == 1 && db0 % 2 == 1 {
                s = -s;
            }
        }
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                s = -s;
            }
            let r = a.pseudo_rem(&b);
            a = b;
            if r.is_zero() {
                return BigInt::zero();
            }
            b = r.div_scalar_exact(&(&g * Pow::pow(&h, delta)));
            g = a.lc();
            h = subresultant_h(&h, &g, delta);
            if b.degree() == Some(0) {
                break;
            }
        }
        let da = a.degree().unwrap();
        // h ← h^(1-da) · lc(b)^da
        let h = if da == 0 {
            h
        } else {
            let num = Pow::pow(&b.lc(), da);
            let den = Pow::pow(&h, da - 1);
            let (q, r) = num.div_rem(&den);
            debug_assert!(r.is_zero());
            q
        };
        s * t * h
    }
}

// h^(1-δ) · g^δ, always an exact integer
fn subresultant_h(h: &BigInt, g: &BigInt, delta: usize) -> BigInt {
    match delta {
        0 => h.clone(),
        1 => g.clone(),
        _ => {
            let num = Pow::pow(g, delta);
            let den = Pow::pow(h, delta - 1);
            let (q, r) = num.div_rem(&den);
            debug_assert!(r.is_zero());
            q
        }
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub<IntPoly> for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Add<IntPoly> for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| format!("{c}x^{i}")).collect();
        f.write_str(&terms.join(" + "))
    }
}
