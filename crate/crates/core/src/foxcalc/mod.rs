//! Abelianized Fox calculus: Alexander matrices and the first Alexander
//! polynomial of deficiency-one presentations.

mod laurent;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::freegroup::FreeWord;
use crate::poly::IntPoly;
use crate::presentations::FinitePresentation;

pub use laurent::LaurentPoly;

/// Longest run of terms a single syllable may expand into.
pub const MAX_SYLLABLE_EXPONENT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FoxError {
    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },
    #[error("weight map has {found} entries, presentation has {expected} generators")]
    WeightMismatch { found: usize, expected: usize },
    #[error("exponent {0} too large to expand")]
    ExponentTooLarge(BigInt),
    #[error("presentation has deficiency {0}; the Alexander polynomial needs deficiency one")]
    NotDeficiencyOne(i64),
    #[error("all maximal minors vanish")]
    ZeroPolynomial,
}

/// Image of each generator in `<t>`: generator `i` maps to `t^weights[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMap(pub Vec<i64>);

impl WeightMap {
    /// Every generator maps to `t`, as for Wirtinger presentations.
    pub fn unit(n: usize) -> Self {
        WeightMap(vec![1; n])
    }

    /// Total weight of a word.
    pub fn weight(&self, u: &FreeWord) -> Result<i64, FoxError> {
        let mut total = 0i64;
        for s in u.syllables() {
            let e = small_exponent(&s.exponent)?;
            total += e * self.0[s.generator - 1];
        }
        Ok(total)
    }
}

fn small_exponent(e: &BigInt) -> Result<i64, FoxError> {
    e.to_i64()
        .filter(|x| x.unsigned_abs() <= MAX_SYLLABLE_EXPONENT)
        .ok_or_else(|| FoxError::ExponentTooLarge(e.clone()))
}

/// `∂u/∂x_g` pushed into `Z[t, t^-1]` along the weight map.
pub fn fox_derivative(u: &FreeWord, g: usize, wm: &WeightMap) -> Result<LaurentPoly, FoxError> {
    let n = u.rank();
    if g == 0 || g > n {
        return Err(FoxError::GeneratorOutOfRange { index: g, n });
    }
    if wm.0.len() != n {
        return Err(FoxError::WeightMismatch { found: wm.0.len(), expected: n });
    }
    let mut out = LaurentPoly::zero();
    let mut prefix = 0i64;
    for s in u.syllables() {
        let e = small_exponent(&s.exponent)?;
        let w = wm.0[s.generator - 1];
        if s.generator == g {
            // x^e contributes 1 + t^w + ... + t^{(e-1)w}, x^-e contributes -(t^-w + ... + t^{-ew})
            if e > 0 {
                for k in 0..e {
                    out.add_term(prefix + k * w, BigInt::one());
                }
            } else {
                for k in 1..=-e {
                    out.add_term(prefix - k * w, -BigInt::one());
                }
            }
        }
        prefix += e * w;
    }
    Ok(out)
}

/// Fox derivatives of every relator (rows) by every generator (columns).
pub fn alexander_matrix(pres: &FinitePresentation, wm: &WeightMap) -> Result<Vec<Vec<LaurentPoly>>, FoxError> {
    let n = pres.generator_count();
    pres.relators().iter().map(|r| (1..=n).map(|g| fox_derivative(r, g, wm)).collect()).collect()
}

/// Determinant over `Z[t]` by fraction-free elimination.
fn poly_determinant(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let size = m.len();
    let mut sign = false;
    let mut prev = IntPoly::one();
    for k in 0..size {
        let Some(pivot) = (k..size).find(|&i| !m[i][k].is_zero()) else {
            return IntPoly::zero();
        };
        if pivot != k {
            m.swap(pivot, k);
            sign = !sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("fraction-free elimination divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let det = if size == 0 { IntPoly::one() } else { m[size - 1][size - 1].clone() };
    if sign {
        -det
    } else {
        det
    }
}

/// The maximal minor left after deleting generator column `column` (1-based),
/// up to a unit.
pub fn alexander_minor(matrix: &[Vec<LaurentPoly>], column: usize) -> LaurentPoly {
    let rows: Vec<Vec<IntPoly>> = matrix
        .iter()
        .map(|row| {
            let kept: Vec<&LaurentPoly> =
                row.iter().enumerate().filter(|&(j, _)| j + 1 != column).map(|(_, p)| p).collect();
            // clear negative powers row by row; this only changes the minor by a unit
            let lo = kept.iter().filter_map(|p| p.min_exponent()).min().unwrap_or(0);
            kept.iter().map(|p| p.shift(-lo).to_int_poly()).map(|(p, s)| shift_up(&p, s)).collect()
        })
        .collect();
    LaurentPoly::from_int_poly(&poly_determinant(rows), 0)
}

fn shift_up(p: &IntPoly, by: i64) -> IntPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut coeffs = vec![BigInt::zero(); by as usize];
    coeffs.extend(p.coeffs().iter().cloned());
    IntPoly::new(coeffs)
}

/// First Alexander polynomial of a deficiency-one presentation in which
/// every generator maps to `t`: the gcd of the maximal minors, normalized.
pub fn alexander_polynomial(pres: &FinitePresentation) -> Result<LaurentPoly, FoxError> {
    if pres.deficiency() != 1 {
        return Err(FoxError::NotDeficiencyOne(pres.deficiency()));
    }
    let n = pres.generator_count();
    let matrix = alexander_matrix(pres, &WeightMap::unit(n))?;
    let gcd =
        (1..=n).map(|j| alexander_minor(&matrix, j)).fold(LaurentPoly::zero(), |acc, m| LaurentPoly::gcd(&acc, &m));
    if gcd.is_zero() {
        return Err(FoxError::ZeroPolynomial);
    }
    Ok(gcd)
}

/// Wirtinger presentation of the knot whose 2-fold branched cover is `Σ(2,3,2,2)`.
pub fn wirtinger_example() -> FinitePresentation {
    FinitePresentation::from_strings(
        &["x", "y", "z"],
        &["y z^-1 x z y^-1 x y z^-1 x^-1 z y^-1 z^-1", "x^-1 z y z^-1 x z x^-1 z y^-1 z^-1 x y^-1"],
    )
    .expect("hard-coded presentation parses")
}
