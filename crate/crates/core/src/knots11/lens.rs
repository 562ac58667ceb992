use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LensError {
    #[error("L({p},{q}) is not a lens space: gcd(p, q) must be 1")]
    GcdViolation { p: i64, q: i64 },
}

/// A lens space in canonical form, up to (possibly orientation-reversing)
/// homeomorphism: `L(0,1) = S²×S¹`, `L(1,0) = S³`, otherwise `1 <= q < p`
/// with `q` the least of `±q^{±1} mod p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LensSpace {
    pub p: u64,
    pub q: u64,
}

impl LensSpace {
    pub const SPHERE: LensSpace = LensSpace { p: 1, q: 0 };
    pub const S2_TIMES_S1: LensSpace = LensSpace { p: 0, q: 1 };

    pub fn is_sphere(&self) -> bool {
        *self == Self::SPHERE
    }

    /// Conventional name for the special cases, `L(p,q)` otherwise.
    pub fn describe(&self) -> String {
        match *self {
            Self::SPHERE => "S^3".into(),
            Self::S2_TIMES_S1 => "S^2xS^1".into(),
            _ => self.to_string(),
        }
    }
}

impl fmt::Display for LensSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{})", self.p, self.q)
    }
}

fn mod_inverse(a: i64, m: i64) -> i64 {
    let e = a.extended_gcd(&m);
    debug_assert_eq!(e.gcd, 1);
    e.x.mod_floor(&m)
}

/// Canonical representative of `L(p, q)`; `L(p,q) ≅ L(p,q')` iff `q' ≡ ±q^{±1} (mod p)`.
pub fn normalize_lens(p: i64, q: i64) -> Result<LensSpace, LensError> {
    let pa = p.unsigned_abs() as i64;
    match pa {
        0 => {
            if q.abs() == 1 {
                Ok(LensSpace::S2_TIMES_S1)
            } else {
                Err(LensError::GcdViolation { p, q })
            }
        }
        1 => Ok(LensSpace::SPHERE),
        _ => {
            let r = q.mod_floor(&pa);
            if r.gcd(&pa) != 1 {
                return Err(LensError::GcdViolation { p, q });
            }
            let inv = mod_inverse(r, pa);
            let best = [r, pa - r, inv, pa - inv].into_iter().min().unwrap();
            Ok(LensSpace { p: pa as u64, q: best as u64 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_forms() {
        assert_eq!(normalize_lens(5, 3).unwrap(), LensSpace { p: 5, q: 2 });
        assert_eq!(normalize_lens(1, 0).unwrap(), LensSpace::SPHERE);
        assert_eq!(normalize_lens(1, 7).unwrap(), LensSpace::SPHERE);
        assert_eq!(normalize_lens(0, -1).unwrap(), LensSpace::S2_TIMES_S1);
        assert_eq!(normalize_lens(5, 7 - 5), normalize_lens(5, 7));
        assert_eq!(normalize_lens(5, 2).unwrap(), LensSpace { p: 5, q: 2 });
        assert_eq!(normalize_lens(7, 3).unwrap(), LensSpace { p: 7, q: 2 });
        assert_eq!(normalize_lens(-7, 3).unwrap(), LensSpace { p: 7, q: 2 });
        assert_eq!(normalize_lens(2, 1).unwrap(), LensSpace { p: 2, q: 1 });
        assert!(normalize_lens(4, 2).is_err());
        assert!(normalize_lens(0, 2).is_err());
        assert_eq!(LensSpace::SPHERE.describe(), "S^3");
        assert_eq!(normalize_lens(5, 4).unwrap().to_string(), "L(5,1)");
    }

    #[test]
    fn classification_orbits_are_respected() {
        for p in 2i64..30 {
            for q in 1..p {
                if q.gcd(&p) != 1 {
                    continue;
                }
                let base = normalize_lens(p, q).unwrap();
                let inv = mod_inverse(q, p);
                for q2 in [-q, inv, -inv, q + 3 * p] {
                    assert_eq!(normalize_lens(p, q2).unwrap(), base);
                }
                assert!(base.q >= 1 && (base.q as i64) < p);
            }
        }
    }
}
