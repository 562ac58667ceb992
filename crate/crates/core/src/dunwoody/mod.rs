//! Dunwoody diagrams `D(a,b,c,n,r,s)` through their dual cell
//! decomposition: a tessellated sphere whose `2n` regions are glued in
//! pairs. Counting the cells of the quotient decides whether it is a closed
//! 3-manifold, and walking the region boundaries yields a cyclic
//! presentation of its fundamental group.

mod glue;
mod tessellation;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::params::{ConstraintViolation, SeifertParams};
use crate::unionfind::OrientationConflict;

pub use glue::{glue, read_presentation, seifert_criterion, CellCounts, EdgePairing, QuotientComplex};
pub use tessellation::{build_tessellation, BoundaryStep, EdgeLabel, SphereTessellation};

/// Tessellations with more edges than this are refused.
pub const MAX_EDGES: u64 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DunwoodyError {
    #[error("a + b + c must be positive")]
    Degenerate,
    #[error("n must be at least 1")]
    NoFolds,
    #[error("twist r = {r} must lie in 0..{modulus}")]
    TwistOutOfRange { r: u64, modulus: u64 },
    #[error("shift s must be 0 or 1 (got {0})")]
    BadShift(u8),
    #[error("diagram too large: {0} edges")]
    TooLarge(u64),
    #[error("gluing forces {0} onto itself with reversed orientation")]
    InconsistentPairing(EdgeLabel),
    #[error("quotient is not a closed 3-manifold with one vertex: {0}")]
    CriterionFailed(CellCounts),
    #[error(transparent)]
    Constraint(#[from] ConstraintViolation),
}

impl DunwoodyError {
    pub(crate) fn from_conflict(t: &SphereTessellation, c: OrientationConflict) -> Self {
        DunwoodyError::InconsistentPairing(t.edge_label(c.a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DunwoodyParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub n: u64,
    pub r: u64,
    pub s: u8,
}

impl DunwoodyParams {
    pub fn new(a: u64, b: u64, c: u64, n: u64, r: u64, s: u8) -> Result<Self, DunwoodyError> {
        if n == 0 {
            return Err(DunwoodyError::NoFolds);
        }
        if s > 1 {
            return Err(DunwoodyError::BadShift(s));
        }
        let modulus = a
            .checked_mul(2)
            .and_then(|x| x.checked_add(b))
            .and_then(|x| x.checked_add(c))
            .ok_or(DunwoodyError::TooLarge(u64::MAX))?;
        if modulus == 0 {
            return Err(DunwoodyError::Degenerate);
        }
        if r >= modulus {
            return Err(DunwoodyError::TwistOutOfRange { r, modulus });
        }
        let edges = modulus.saturating_mul(n);
        if edges > MAX_EDGES {
            return Err(DunwoodyError::TooLarge(edges));
        }
        Ok(DunwoodyParams { a, b, c, n, r, s })
    }

    /// Length `2a+b+c` of every region boundary.
    pub fn region_length(&self) -> u64 {
        2 * self.a + self.b + self.c
    }
}

impl fmt::Display for DunwoodyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({},{},{},{},{},{})", self.a, self.b, self.c, self.n, self.r, self.s)
    }
}

/// `D(q, q(nl-2), p-2q, n, p-q, 0)` when `p >= 2q`, else
/// `D(p-q, 2q-p, q(nl-2), n, p-q, 1)`.
pub fn dunwoody_params_for(n: u64, p: u64, q: u64, l: u64) -> Result<DunwoodyParams, DunwoodyError> {
    dunwoody_params_for_seifert(&SeifertParams::for_covering(n, p, q, l)?)
}

pub fn dunwoody_params_for_seifert(sp: &SeifertParams) -> Result<DunwoodyParams, DunwoodyError> {
    sp.require_covering_range()?;
    let &SeifertParams { n, p, q, l } = sp;
    let middle = (n * l - 2).checked_mul(q).ok_or(DunwoodyError::TooLarge(u64::MAX))?;
    if sp.wide() {
        DunwoodyParams::new(q, middle, p - 2 * q, n, p - q, 0)
    } else {
        DunwoodyParams::new(p - q, 2 * q - p, middle, n, p - q, 1)
    }
}
