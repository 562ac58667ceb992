//! Validated parameter tuples `(n, p, q, l)` for `Σ(n,p,q,l)`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintViolation {
    #[error("{0} must be a positive integer")]
    NonPositive(&'static str),
    #[error("q must be smaller than p (got q={q}, p={p})")]
    QNotLessThanP { p: u64, q: u64 },
    #[error("p and q must be coprime (gcd({p},{q})={gcd})")]
    NotCoprime { p: u64, q: u64, gcd: u64 },
    #[error("the branched-covering construction needs n > 1 (got n={0})")]
    NTooSmall(u64),
    #[error("for n = 2 the construction needs l > 1 (got l={0})")]
    LTooSmallForTwoFold(u64),
    #[error("parameters too large: {0} overflows")]
    Overflow(&'static str),
}

/// Parameters of the Seifert manifold `{Oo,0 | -1; (p,q)^n, (l,l-1)}`.
///
/// `new` enforces `q < p` and `gcd(p,q) = 1`; the stronger conditions
/// needed for the covering construction are checked by
/// [`SeifertParams::require_covering_range`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SeifertParams {
    pub n: u64,
    pub p: u64,
    pub q: u64,
    pub l: u64,
}

impl SeifertParams {
    pub fn new(n: u64, p: u64, q: u64, l: u64) -> Result<Self, ConstraintViolation> {
        for (name, v) in [("n", n), ("p", p), ("q", q), ("l", l)] {
            if v == 0 {
                return Err(ConstraintViolation::NonPositive(name));
            }
        }
        if q >= p {
            return Err(ConstraintViolation::QNotLessThanP { p, q });
        }
        let gcd = p.gcd(&q);
        if gcd != 1 {
            return Err(ConstraintViolation::NotCoprime { p, q, gcd });
        }
        // nlq must fit comfortably; every derived quantity is bounded by it.
        n.checked_mul(l)
            .and_then(|nl| nl.checked_mul(q))
            .and_then(|nlq| nlq.checked_add(p))
            .filter(|&v| v < (1u64 << 62))
            .ok_or(ConstraintViolation::Overflow("n*l*q"))?;
        Ok(SeifertParams { n, p, q, l })
    }

    /// Constructs and also enforces `n > 1`, and `l > 1` when `n = 2`.
    pub fn for_covering(n: u64, p: u64, q: u64, l: u64) -> Result<Self, ConstraintViolation> {
        let sp = Self::new(n, p, q, l)?;
        sp.require_covering_range()?;
        Ok(sp)
    }

    pub fn require_covering_range(&self) -> Result<(), ConstraintViolation> {
        if self.n < 2 {
            return Err(ConstraintViolation::NTooSmall(self.n));
        }
        if self.n == 2 && self.l < 2 {
            return Err(ConstraintViolation::LTooSmallForTwoFold(self.l));
        }
        Ok(())
    }

    /// `true` in the branch `p >= 2q` (which includes the boundary `p = 2q`).
    pub fn wide(&self) -> bool {
        self.p >= 2 * self.q
    }

    pub fn nlq(&self) -> u64 {
        self.n * self.l * self.q
    }

    /// Whether the tuple lies in the range where the covering construction applies.
    pub fn is_covering_range(&self) -> bool {
        self.require_covering_range().is_ok()
    }
}

impl fmt::Display for SeifertParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.p, self.q, self.l)
    }
}
