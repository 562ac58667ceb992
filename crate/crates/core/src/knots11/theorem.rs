use serde::Serialize;

use super::{normalize_lens, KnotError, KnotParams, LensSpace};
use crate::params::SeifertParams;

/// Action of the covering monodromy on the two homology generators of the
/// torus boundary, recorded as exponents of the pair of generating twists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Monodromy(pub u8, pub u8);

/// The (1,1)-knot whose `n`-fold strongly-cyclic branched cover is `Σ(n,p,q,l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremKnot {
    pub params: SeifertParams,
    pub knot: KnotParams,
    pub lens: LensSpace,
    pub monodromy: Monodromy,
}

/// `p >= 2q`: `K(q, q(nl-2), p-2q, p-q)`; otherwise `K(p-q, 2q-p, q(nl-2), p-q)`.
/// The ambient space is `L(|nlq - p|, q)`.
pub fn theorem_knot(n: u64, p: u64, q: u64, l: u64) -> Result<TheoremKnot, KnotError> {
    theorem_knot_for(&SeifertParams::for_covering(n, p, q, l)?)
}

pub fn theorem_knot_for(sp: &SeifertParams) -> Result<TheoremKnot, KnotError> {
    let &SeifertParams { n, p, q, l } = sp;
    sp.require_covering_range()?;
    let nlq = sp.nlq();
    let middle =
        n.checked_mul(l).and_then(|nl| nl.checked_sub(2)).and_then(|x| x.checked_mul(q)).ok_or(KnotError::Overflow)?;
    let twist = (p - q) as i64;
    let (knot, monodromy) = if sp.wide() {
        (KnotParams::new(q, middle, p - 2 * q, twist)?, Monodromy(0, 1))
    } else {
        (KnotParams::new(p - q, 2 * q - p, middle, twist)?, Monodromy(1, 1))
    };
    let diff = i64::try_from(nlq.abs_diff(p)).map_err(|_| KnotError::Overflow)?;
    let lens = normalize_lens(diff, q as i64)?;
    Ok(TheoremKnot { params: *sp, knot, lens, monodromy })
}
