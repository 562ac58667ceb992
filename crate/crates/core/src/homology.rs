//! Integer matrices, certified Smith normal form and first homology of
//! finitely presented groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::IntPoly;
use crate::presentations::FinitePresentation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected {expected} entries for a {rows}x{cols} matrix, got {found}")]
    EntryCount { rows: usize, cols: usize, expected: usize, found: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix must be square")]
    NotSquare,
    #[error("dimension mismatch in product ({0}x{1} times {2}x{3})")]
    Dimensions(usize, usize, usize, usize),
}

/// Row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::EntryCount { rows, cols, expected: rows * cols, found: entries.len() });
        }
        Ok(IntMatrix { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// From nested rows; `cols` is needed to describe `0 x k` matrices.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self, MatrixError> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(MatrixError::Ragged);
        }
        let n = rows.len();
        Ok(IntMatrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect(), cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.entries.chunks(self.cols).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::Dimensions(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    // row[target] += factor * row[source]
    fn add_row(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * factor;
            self[(target, j)] += v;
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let v = &self[(i, source)] * factor;
            self[(i, target)] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// `U · M · V = diag(d_1, .., d_r)` with unimodular `U`, `V`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    /// The diagonal as a full `rows x cols` matrix.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.left.rows(), self.right.cols());
        for (i, v) in self.diagonal.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }

    /// Re-checks `U·M·V = D`, the divisibility chain and `|det U| = |det V| = 1`.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let Ok(umv) = self.left.mul(m).and_then(|um| um.mul(&self.right)) else { return false };
        let unimodular = |x: &IntMatrix| x.determinant().is_ok_and(|d| d.abs().is_one());
        let chain = self.diagonal.iter().all(|d| !d.is_negative())
            && self
                .diagonal
                .windows(2)
                .all(|w| if w[0].is_zero() { w[1].is_zero() } else { w[1].is_multiple_of(&w[0]) });
        umv == self.diagonal_matrix() && chain && unimodular(&self.left) && unimodular(&self.right)
    }
}

/// Smith normal form by elementary operations with smallest-pivot selection.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let size = rows.min(cols);

    'outer: for t in 0..size {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&ij| !d[ij].is_zero())
                .min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()));
            let Some((pi, pj)) = pivot else { break 'outer };
            if pi != t {
                d.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if pj != t {
                d.swap_cols(pj, t);
                v.swap_cols(pj, t);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&d[(t, t)]);
                d.add_row(i, t, &q);
                u.add_row(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&d[(t, t)]);
                d.add_col(j, t, &q);
                v.add_col(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match offender {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    let diagonal = (0..size).map(|i| d[(i, i)].clone()).collect();
    let result = SnfResult { diagonal, left: u, right: v };
    debug_assert!(result.left.mul(m).and_then(|x| x.mul(&result.right)).unwrap() == result.diagonal_matrix());
    result
}

/// A finitely generated abelian group `Z^rank ⊕ Z/d_1 ⊕ ⋯`, `d_i | d_{i+1}`, `d_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn from_invariants(generators: usize, diagonal: &[BigInt]) -> Self {
        let nonzero = diagonal.iter().filter(|d| !d.is_zero()).count();
        AbelianGroup {
            rank: generators - nonzero,
            torsion: diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect(),
        }
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// JSON number when it fits, decimal string otherwise.
pub fn bigint_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let torsion: Vec<serde_json::Value> = self.torsion.iter().map(bigint_json).collect();
        serde_json::json!({ "rank": self.rank, "torsion": torsion }).serialize(serializer)
    }
}

/// Rows are relators, columns generators, entries total exponents.
pub fn relation_matrix(pres: &FinitePresentation) -> IntMatrix {
    let rows = pres.relators().iter().map(|r| r.exponent_vector().0).collect();
    IntMatrix::from_rows(rows, pres.generator_count()).expect("exponent vectors have full length")
}

/// `H_1` of the presented group: the cokernel of the relation matrix.
pub fn homology_from_presentation(pres: &FinitePresentation) -> AbelianGroup {
    let snf = smith_normal_form(&relation_matrix(pres));
    AbelianGroup::from_invariants(pres.generator_count(), &snf.diagonal)
}

/// `|det|` of the circulant matrix with the given first row, computed as
/// `|Res(f(x), x^n - 1)|` where `f = Σ c_k x^k`. Zero means infinite `H_1`.
pub fn circulant_order(first_row: &[BigInt]) -> BigInt {
    let n = first_row.len();
    if n == 0 {
        return BigInt::one();
    }
    let f = IntPoly::new(first_row.to_vec());
    let mut xn1 = vec![BigInt::zero(); n + 1];
    xn1[0] = -BigInt::one();
    xn1[n] = BigInt::one();
    IntPoly::resultant(&f, &IntPoly::new(xn1)).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::FreeWord;
    use crate::presentations::{seifert_standard_presentation, CyclicPresentation};
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cyclic(n: u64, p: u64, q: u64, l: u64) -> FinitePresentation {
        CyclicPresentation::new(FreeWord::seifert_word(n, p, q, l).unwrap()).expand()
    }

    #[test]
    fn relation_matrices() {
        let m = relation_matrix(&CyclicPresentation::new(FreeWord::parse(3, "x1 x2 x3^-1").unwrap()).expand());
        assert_eq!(m, IntMatrix::from_i64(&[&[1, 1, -1], &[-1, 1, 1], &[1, -1, 1]]).unwrap());
        let empty = FinitePresentation::from_strings::<&str>(&["x"], &[]).unwrap();
        let m = relation_matrix(&empty);
        assert_eq!((m.rows(), m.cols()), (0, 1));
        let std = relation_matrix(&seifert_standard_presentation(3, 2, 1, 1).unwrap());
        assert_eq!((std.rows(), std.cols()), (9, 5));
        for i in 0..4 {
            assert!((0..5).all(|j| std[(i, j)].is_zero()));
        }
    }

    #[test]
    fn snf_examples() {
        let z = IntMatrix::zeros(2, 3);
        assert_eq!(smith_normal_form(&z).diagonal, big(&[0, 0]));
        let m = IntMatrix::from_i64(&[&[4, 1], &[1, 4]]).unwrap();
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, big(&[1, 15]));
        assert!(snf.verify(&m));
        let c = IntMatrix::from_i64(&[&[1, 1, -1], &[-1, 1, 1], &[1, -1, 1]]).unwrap();
        let snf = smith_normal_form(&c);
        assert_eq!(snf.diagonal, big(&[1, 2, 2]));
        assert!(snf.verify(&c));
        let e = IntMatrix::zeros(0, 3);
        assert!(smith_normal_form(&e).diagonal.is_empty());
    }

    #[test]
    fn homology_examples() {
        let h = homology_from_presentation(&cyclic(3, 2, 1, 1));
        assert_eq!(h, AbelianGroup { rank: 0, torsion: big(&[2, 2]) });
        assert_eq!(h.to_string(), "Z/2 + Z/2");
        assert_eq!(homology_from_presentation(&seifert_standard_presentation(3, 2, 1, 1).unwrap()), h);
        let h = homology_from_presentation(&cyclic(2, 3, 2, 2));
        assert_eq!(h, AbelianGroup { rank: 0, torsion: big(&[15]) });
        assert_eq!(serde_json::to_string(&h).unwrap(), r#"{"rank":0,"torsion":[15]}"#);
        let free = FinitePresentation::from_strings::<&str>(&["x", "y"], &[]).unwrap();
        assert_eq!(homology_from_presentation(&free).to_string(), "Z^2");
        let trivial = FinitePresentation::from_strings(&["x"], &["x"]).unwrap();
        assert!(homology_from_presentation(&trivial).is_trivial());
        assert_eq!(homology_from_presentation(&trivial).to_string(), "0");
    }

    #[test]
    fn circulant_examples() {
        assert_eq!(circulant_order(&big(&[1, 1, -1])), BigInt::from(4));
        assert_eq!(circulant_order(&big(&[0, 0, 0])), BigInt::zero());
        assert_eq!(circulant_order(&big(&[4, 1])), BigInt::from(15));
        assert_eq!(circulant_order(&big(&[7])), BigInt::from(7));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(IntMatrix::from_i64(&[&[4, 1], &[1, 4]]).unwrap().determinant().unwrap(), BigInt::from(15));
        assert_eq!(IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).unwrap().determinant().unwrap(), BigInt::from(-1));
        assert_eq!(IntMatrix::zeros(0, 0).determinant().unwrap(), BigInt::one());
        assert!(IntMatrix::zeros(2, 3).determinant().is_err());
        assert!(IntMatrix::new(2, 2, big(&[1, 2, 3])).is_err());
    }

    fn circulant_matrix(row: &[i64]) -> IntMatrix {
        let n = row.len();
        let rows: Vec<Vec<BigInt>> =
            (0..n).map(|k| (0..n).map(|j| BigInt::from(row[(j + n - k) % n])).collect()).collect();
        IntMatrix::from_rows(rows, n).unwrap()
    }

    proptest! {
        #[test]
        fn snf_certificates_verify(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-9i64..=9, 16)) {
            let entries = (0..rows * cols).map(|k| BigInt::from(seed[k])).collect();
            let m = IntMatrix::new(rows, cols, entries).unwrap();
            let snf = smith_normal_form(&m);
            prop_assert!(snf.verify(&m));
        }

        #[test]
        fn circulant_order_is_abs_det(row in prop::collection::vec(-5i64..=5, 1..6)) {
            let det = circulant_matrix(&row).determinant().unwrap().abs();
            prop_assert_eq!(circulant_order(&big(&row)), det);
        }
    }
}
