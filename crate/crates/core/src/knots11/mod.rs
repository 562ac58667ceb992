//! The four-integer code `K(a,b,c,r)` of (1,1)-knots: parameter
//! equivalences, the Singer-move reduction to a canonical lens space
//! diagram, closed-form ambient spaces, and the knots attached to
//! `Σ(n,p,q,l)`.

mod lens;
mod singer;
mod theorem;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::params::ConstraintViolation;

pub use lens::{normalize_lens, LensError, LensSpace};
pub use singer::{ambient_lens_space, singer_reduce, LemmaCase, MoveKind, MoveTrace, Reduction, TraceStep};
pub use theorem::{theorem_knot, theorem_knot_for, Monodromy, TheoremKnot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("K(0,0,0,r) is not encoded by the four-parameter family")]
    Degenerate,
    #[error("knot parameters overflow")]
    Overflow,
    #[error("{0}: twist r is not covered by the lens-space reduction (need r = a, a+c or a+b+c mod 2a+b+c)")]
    Unsupported(KnotParams),
    #[error("{knot}: gcd condition of the {case} case fails")]
    GcdViolation { knot: KnotParams, case: LemmaCase },
    #[error("{0}: reduction ends in L(0,1) = S^2xS^1, which the canonical-diagram step does not handle")]
    AmbiguousTerminal(KnotParams),
    #[error(transparent)]
    Lens(#[from] LensError),
    #[error(transparent)]
    Constraint(#[from] ConstraintViolation),
}

/// `K(a,b,c,r)` with `a + b + c > 0` and `0 <= r < 2a+b+c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KnotParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub r: u64,
}

impl KnotParams {
    /// Reduces `r` mod `2a+b+c`; negative twists are allowed.
    pub fn new(a: u64, b: u64, c: u64, r: i64) -> Result<Self, KnotError> {
        let modulus = a
            .checked_mul(2)
            .and_then(|x| x.checked_add(b))
            .and_then(|x| x.checked_add(c))
            .filter(|&m| m <= i64::MAX as u64)
            .ok_or(KnotError::Overflow)?;
        if modulus == 0 {
            return Err(KnotError::Degenerate);
        }
        let r = r.rem_euclid(modulus as i64) as u64;
        Ok(KnotParams { a, b, c, r })
    }

    /// Like `new` for a twist that is already a non-negative integer.
    pub fn with_twist(a: u64, b: u64, c: u64, r: u64) -> Result<Self, KnotError> {
        let m = Self::new(a, b, c, 0)?.modulus();
        Self::new(a, b, c, (r % m) as i64)
    }

    /// `2a + b + c`.
    pub fn modulus(&self) -> u64 {
        2 * self.a + self.b + self.c
    }

    /// `K(a,b,c,r) ~ K(a,c,b,2a+b+c-r)`.
    pub fn swap_bc(&self) -> KnotParams {
        let m = self.modulus();
        KnotParams { a: self.a, b: self.c, c: self.b, r: (m - self.r) % m }
    }

    /// `K(a,0,c,r) ~ K(a,c,0,r)`; `None` unless `b = 0` or `c = 0`.
    pub fn swap_zero(&self) -> Option<KnotParams> {
        (self.b == 0 || self.c == 0).then_some(KnotParams { a: self.a, b: self.c, c: self.b, r: self.r })
    }
}

impl fmt::Display for KnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "K({},{},{},{})", self.a, self.b, self.c, self.r)
    }
}

/// Closure of `{k}` under the two parameter equivalences.
pub fn equivalences(k: &KnotParams) -> BTreeSet<KnotParams> {
    let mut seen = BTreeSet::from([*k]);
    let mut frontier = vec![*k];
    while let Some(cur) = frontier.pop() {
        for next in std::iter::once(cur.swap_bc()).chain(cur.swap_zero()) {
            if seen.insert(next) {
                frontier.push(next);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(a: u64, b: u64, c: u64, r: i64) -> KnotParams {
        KnotParams::new(a, b, c, r).unwrap()
    }

    #[test]
    fn twist_is_reduced() {
        assert_eq!(k(1, 2, 3, 11).r, 4);
        assert_eq!(k(1, 2, 3, -1).r, 6);
        assert_eq!(KnotParams::new(0, 0, 0, 0), Err(KnotError::Degenerate));
        assert_eq!(KnotParams::new(u64::MAX, 0, 0, 0), Err(KnotError::Overflow));
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalences(&k(1, 2, 3, 4)).contains(&k(1, 3, 2, 3)));
        let e = equivalences(&k(1, 0, 2, 1));
        assert!(e.contains(&k(1, 2, 0, 1)));
        assert!(e.contains(&k(1, 0, 2, 3)));
        // b = c and r = a + b is a fixed point of the swap
        let fixed = k(2, 3, 3, 5);
        assert_eq!(fixed.swap_bc(), fixed);
        assert_eq!(equivalences(&fixed).len(), 1);
    }

    #[test]
    fn equivalence_closure_is_closed() {
        for (a, b, c, r) in [(1, 0, 3, 2), (2, 1, 0, 4), (0, 0, 5, 1), (3, 2, 2, 1)] {
            let set = equivalences(&k(a, b, c, r));
            for x in &set {
                assert!(set.contains(&x.swap_bc()));
                if let Some(y) = x.swap_zero() {
                    assert!(set.contains(&y));
                }
                assert_eq!(equivalences(x), set);
            }
        }
    }
}
