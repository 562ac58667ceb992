//! Reduced words in the free group `F_n` on generators `x_1, ..., x_n`.
//!
//! A [`FreeWord`] is always stored fully reduced: adjacent syllables have
//! distinct generators and no exponent is zero. Generators are 1-based and
//! the shift automorphism `θ(x_i) = x_{i+1}` takes indices mod `n` with
//! residue 0 mapped back to `n`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::params::{ConstraintViolation, SeifertParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("a free group needs at least one generator")]
    EmptyAlphabet,
    #[error("generator index {index} is out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("words live in different free groups (F_{left} vs F_{right})")]
    RankMismatch { left: usize, right: usize },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    /// 1-based generator index.
    pub generator: usize,
    /// Nonzero exponent.
    pub exponent: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    n: usize,
    syllables: Vec<Syllable>,
}

/// Image of a word in the abelianization `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<BigInt>);

impl ExponentVector {
    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![BigInt::zero(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry for the 1-based generator `i`.
    pub fn get(&self, i: usize) -> &BigInt {
        &self.0[i - 1]
    }

    /// The vector of `θ(u)` when `self` is the vector of `u`.
    pub fn rotated(&self) -> Self {
        let mut v = self.0.clone();
        v.rotate_right(1);
        ExponentVector(v)
    }
}

fn push_reduced(out: &mut Vec<Syllable>, generator: usize, exponent: BigInt) {
    if exponent.is_zero() {
        return;
    }
    if let Some(last) = out.last_mut() {
        if last.generator == generator {
            last.exponent += exponent;
            if last.exponent.is_zero() {
                out.pop();
            }
            return;
        }
    }
    out.push(Syllable { generator, exponent });
}

/// Maps any integer to the 1-based residue of `x_index` mod `n`.
pub fn wrap_index(index: i64, n: usize) -> usize {
    let r = index.mod_floor(&(n as i64));
    if r == 0 {
        n
    } else {
        r as usize
    }
}

impl FreeWord {
    pub fn identity(n: usize) -> Result<Self, WordError> {
        if n == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        Ok(FreeWord { n, syllables: Vec::new() })
    }

    /// `x_i^e`.
    pub fn power_of(n: usize, generator: usize, exponent: impl Into<BigInt>) -> Result<Self, WordError> {
        Self::reduce(n, [(generator, exponent.into())])
    }

    pub fn generator(n: usize, generator: usize) -> Result<Self, WordError> {
        Self::power_of(n, generator, 1)
    }

    /// Free reduction of an arbitrary syllable sequence.
    pub fn reduce<I>(n: usize, raw: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (usize, BigInt)>,
    {
        if n == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        let mut syllables = Vec::new();
        for (generator, exponent) in raw {
            if generator == 0 || generator > n {
                return Err(WordError::IndexOutOfRange { index: generator, n });
            }
            push_reduced(&mut syllables, generator, exponent);
        }
        Ok(FreeWord { n, syllables })
    }

    /// Like [`FreeWord::reduce`] but with small signed letters, e.g. `[(1, 1), (2, -1)]`.
    pub fn from_letters(n: usize, letters: &[(usize, i64)]) -> Result<Self, WordError> {
        Self::reduce(n, letters.iter().map(|&(g, e)| (g, BigInt::from(e))))
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters `Σ |e_k|`.
    pub fn letter_length(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exponent.abs()).sum()
    }

    fn check_rank(&self, other: &FreeWord) -> Result<(), WordError> {
        if self.n != other.n {
            return Err(WordError::RankMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord, WordError> {
        self.check_rank(other)?;
        let mut syllables = self.syllables.clone();
        for s in &other.syllables {
            push_reduced(&mut syllables, s.generator, s.exponent.clone());
        }
        Ok(FreeWord { n: self.n, syllables })
    }

    /// Product of a sequence of words over the same alphabet.
    pub fn product<'a, I>(n: usize, words: I) -> Result<FreeWord, WordError>
    where
        I: IntoIterator<Item = &'a FreeWord>,
    {
        words.into_iter().try_fold(FreeWord::identity(n)?, |acc, w| acc.multiply(w))
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord {
            n: self.n,
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable { generator: s.generator, exponent: -&s.exponent })
                .collect(),
        }
    }

    /// `g⁻¹ u g`.
    pub fn conjugate(&self, g: &FreeWord) -> Result<FreeWord, WordError> {
        g.invert().multiply(self)?.multiply(g)
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut out = FreeWord { n: self.n, syllables: Vec::new() };
        for _ in 0..k.unsigned_abs() {
            for s in &base.syllables {
                push_reduced(&mut out.syllables, s.generator, s.exponent.clone());
            }
        }
        out
    }

    /// `θ^k(u)`; negative `k` shifts backwards.
    pub fn shift(&self, k: i64) -> FreeWord {
        let k = k.mod_floor(&(self.n as i64));
        if k == 0 {
            return self.clone();
        }
        // A shift never makes neighbouring generators equal, so no re-reduction.
        FreeWord {
            n: self.n,
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    generator: wrap_index(s.generator as i64 + k, self.n),
                    exponent: s.exponent.clone(),
                })
                .collect(),
        }
    }

    /// Applies `x_i ↦ x_{map[i-1]}^{sign}` for a signed permutation of generators.
    pub fn relabel(&self, map: &[(usize, bool)]) -> FreeWord {
        debug_assert_eq!(map.len(), self.n);
        let mut syllables = Vec::with_capacity(self.syllables.len());
        for s in &self.syllables {
            let (g, flip) = map[s.generator - 1];
            let e = if flip { -&s.exponent } else { s.exponent.clone() };
            push_reduced(&mut syllables, g, e);
        }
        FreeWord { n: self.n, syllables }
    }

    pub fn exponent_vector(&self) -> ExponentVector {
        let mut v = ExponentVector::zero(self.n);
        for s in &self.syllables {
            v.0[s.generator - 1] += &s.exponent;
        }
        v
    }

    /// The word `(x_1^q ⋯ x_n^q)^l x_n^{-p}`.
    pub fn seifert_word(n: u64, p: u64, q: u64, l: u64) -> Result<FreeWord, ConstraintViolation> {
        Ok(Self::seifert_word_for(&SeifertParams::new(n, p, q, l)?))
    }

    pub fn seifert_word_for(sp: &SeifertParams) -> FreeWord {
        let n = sp.n as usize;
        let q = BigInt::from(sp.q);
        let block = (1..=n).map(|i| (i, q.clone()));
        let raw = std::iter::repeat_n(block, sp.l as usize).flatten().chain(std::iter::once((n, -BigInt::from(sp.p))));
        FreeWord::reduce(n, raw).expect("indices are in range by construction")
    }

    /// Parses the textual syntax `x1^2 x2^-3 x1` (generators `x1..xn`).
    /// The identity is written `1`.
    pub fn parse(n: usize, text: &str) -> Result<FreeWord, WordError> {
        let names = default_names(n);
        Self::parse_with_names(&names, text)
    }

    /// Parses whitespace-separated `name` / `name^exp` tokens over the given alphabet.
    pub fn parse_with_names<S: AsRef<str>>(names: &[S], text: &str) -> Result<FreeWord, WordError> {
        let n = names.len();
        if n == 0 {
            return Err(WordError::EmptyAlphabet);
        }
        let lookup = |name: &str| names.iter().position(|s| s.as_ref() == name).map(|i| i + 1);
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            let (name, exponent) = match token.split_once('^') {
                Some((name, exp)) => {
                    let e: BigInt = exp.parse().map_err(|_| WordError::Parse {
                        token: token.to_string(),
                        reason: "exponent is not an integer",
                    })?;
                    (name, e)
                }
                None => (token, BigInt::one()),
            };
            if name.is_empty() {
                return Err(WordError::Parse { token: token.to_string(), reason: "missing generator name" });
            }
            match lookup(name) {
                Some(g) => raw.push((g, exponent)),
                None if name == "1" && exponent.is_one() => {}
                None => return Err(WordError::UnknownGenerator(name.to_string())),
            }
        }
        FreeWord::reduce(n, raw)
    }

    pub fn format_with_names<S: AsRef<str>>(&self, names: &[S]) -> String {
        if self.syllables.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            out.push_str(names[s.generator - 1].as_ref());
            if !s.exponent.is_one() {
                out.push('^');
                out.push_str(&s.exponent.to_string());
            }
        }
        out
    }

    /// Exponents as `i64`, or `None` if any exponent does not fit.
    pub fn small_syllables(&self) -> Option<Vec<(usize, i64)>> {
        self.syllables.iter().map(|s| s.exponent.to_i64().map(|e| (s.generator, e))).collect()
    }
}

pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with_names(&default_names(self.n)))
    }
}

impl Serialize for ExponentVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(crate::homology::bigint_json))
    }
}

impl Serialize for FreeWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}
