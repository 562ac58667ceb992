//! Finite presentations, cyclic presentations `G_n(w)` and the standard
//! presentation of `π_1(Σ(n,p,q,l))`.

mod compare;
mod homomorphisms;
mod tietze;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freegroup::{default_names, FreeWord, WordError};
use crate::params::{ConstraintViolation, SeifertParams};

pub use compare::{cyclic_key, find_relabeling, relators_equivalent, CyclicKey, Relabeling};
pub use homomorphisms::{count_homomorphisms, GroupTableError, HomCountError, PermGroupTable, DEFAULT_BUDGET};
pub use tietze::{verify_tietze_identities, TietzeCheck, TietzeFamily, TietzeReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("relator {index} lives in F_{found}, expected F_{expected}")]
    RelatorRank { index: usize, found: usize, expected: usize },
    #[error("malformed presentation JSON: {0}")]
    Json(String),
}

/// `⟨ generators | relators ⟩` with relators stored reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePresentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

/// Wire form `{"generators": [...], "relators": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<String>,
}

impl FinitePresentation {
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Result<Self, PresentationError> {
        if generators.is_empty() {
            return Err(WordError::EmptyAlphabet.into());
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
            if g.is_empty() || g.contains(char::is_whitespace) || g.contains('^') {
                return Err(WordError::Parse { token: g.clone(), reason: "invalid generator name" }.into());
            }
        }
        for (index, r) in relators.iter().enumerate() {
            if r.rank() != generators.len() {
                return Err(PresentationError::RelatorRank { index, found: r.rank(), expected: generators.len() });
            }
        }
        Ok(FinitePresentation { generators, relators })
    }

    /// Parses relator strings over the given generator names.
    pub fn from_strings<S: AsRef<str>>(generators: &[S], relators: &[S]) -> Result<Self, PresentationError> {
        let names: Vec<String> = generators.iter().map(|g| g.as_ref().to_string()).collect();
        let relators =
            relators.iter().map(|r| FreeWord::parse_with_names(&names, r.as_ref())).collect::<Result<Vec<_>, _>>()?;
        Self::new(names, relators)
    }

    pub fn from_json(text: &str) -> Result<Self, PresentationError> {
        let raw: PresentationJson = serde_json::from_str(text).map_err(|e| PresentationError::Json(e.to_string()))?;
        Self::from_strings(&raw.generators, &raw.relators)
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson { generators: self.generators.clone(), relators: self.relator_strings() }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relator_count(&self) -> usize {
        self.relators.len()
    }

    /// `#generators - #relators`.
    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn relator_strings(&self) -> Vec<String> {
        self.relators.iter().map(|r| r.format_with_names(&self.generators)).collect()
    }

    /// Same generators, relators replaced.
    pub fn with_relators(&self, relators: Vec<FreeWord>) -> Result<Self, PresentationError> {
        Self::new(self.generators.clone(), relators)
    }
}

impl std::fmt::Display for FinitePresentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "< {} | {} >", self.generators.join(", "), self.relator_strings().join(", "))
    }
}

/// `G_n(w)`: relator `k` is `θ^{k-1}(w)` for `k = 1..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPresentation {
    w: FreeWord,
}

impl CyclicPresentation {
    pub fn new(w: FreeWord) -> Self {
        CyclicPresentation { w }
    }

    pub fn seifert(sp: &SeifertParams) -> Self {
        Self::new(FreeWord::seifert_word_for(sp))
    }

    pub fn n(&self) -> usize {
        self.w.rank()
    }

    pub fn word(&self) -> &FreeWord {
        &self.w
    }

    pub fn relator(&self, k: usize) -> FreeWord {
        self.w.shift(k as i64 - 1)
    }

    pub fn expand(&self) -> FinitePresentation {
        let n = self.n();
        let relators = (1..=n).map(|k| self.relator(k)).collect();
        FinitePresentation::new(default_names(n), relators).expect("shifts stay in F_n")
    }
}

/// `[a, b] = a⁻¹ b⁻¹ a b`.
pub fn commutator(a: &FreeWord, b: &FreeWord) -> Result<FreeWord, WordError> {
    FreeWord::product(a.rank(), [&a.invert(), &b.invert(), a, b])
}

/// `⟨ y_1..y_n, y, h | [y_i,h], [y,h], y_i^p h^q, y^l h^{l-1}, y_1⋯y_n y h ⟩`.
///
/// Generators are ordered `y1, .., yn, y, h`; relators appear in the order
/// above, all commutators first.
pub fn seifert_standard_presentation(
    n: u64,
    p: u64,
    q: u64,
    l: u64,
) -> Result<FinitePresentation, ConstraintViolation> {
    Ok(seifert_standard_for(&SeifertParams::new(n, p, q, l)?))
}

pub fn seifert_standard_for(sp: &SeifertParams) -> FinitePresentation {
    let n = sp.n as usize;
    let rank = n + 2;
    let (y, h) = (n + 1, n + 2);
    let gen = |i: usize| FreeWord::generator(rank, i).expect("index in range");
    let pw = |i: usize, e: i64| FreeWord::power_of(rank, i, e).expect("index in range");
    let (p, q, l) = (sp.p as i64, sp.q as i64, sp.l as i64);

    let mut relators = Vec::with_capacity(2 * n + 3);
    for i in 1..=n {
        relators.push(commutator(&gen(i), &gen(h)).expect("same rank"));
    }
    relators.push(commutator(&gen(y), &gen(h)).expect("same rank"));
    for i in 1..=n {
        relators.push(pw(i, p).multiply(&pw(h, q)).expect("same rank"));
    }
    relators.push(pw(y, l).multiply(&pw(h, l - 1)).expect("same rank"));
    let tail: Vec<FreeWord> = (1..=n).map(gen).chain([gen(y), gen(h)]).collect();
    relators.push(FreeWord::product(rank, &tail).expect("same rank"));

    let mut names: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
    names.push("y".into());
    names.push("h".into());
    FinitePresentation::new(names, relators).expect("well-formed by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_cyclic() {
        let cp = CyclicPresentation::new(FreeWord::parse(3, "x1 x2 x3^-1").unwrap());
        let fp = cp.expand();
        assert_eq!(fp.relator_strings(), vec!["x1 x2 x3^-1", "x2 x3 x1^-1", "x3 x1 x2^-1"]);
        let single = CyclicPresentation::new(FreeWord::parse(1, "x1^3").unwrap()).expand();
        assert_eq!(single.relator_strings(), vec!["x1^3"]);
        let g2 = CyclicPresentation::new(FreeWord::seifert_word(2, 3, 2, 2).unwrap()).expand();
        assert_eq!(g2.relator_count(), 2);
        assert!(g2.relators().iter().all(|r| r.syllables().len() == 4));
    }

    #[test]
    fn standard_presentation_shape() {
        let fp = seifert_standard_presentation(3, 2, 1, 1).unwrap();
        assert_eq!(fp.generator_count(), 5);
        assert_eq!(fp.relator_count(), 9);
        assert_eq!(fp.relator_strings()[0], "y1^-1 h^-1 y1 h");
        assert_eq!(fp.relator_strings()[4], "y1^2 h");
        // l = 1 collapses y^l h^0 to y
        assert_eq!(fp.relator_strings()[7], "y");
        assert_eq!(fp.relator_strings()[8], "y1 y2 y3 y h");
        let small = seifert_standard_presentation(1, 2, 1, 1).unwrap();
        assert_eq!((small.generator_count(), small.relator_count()), (3, 5));
        assert!(seifert_standard_presentation(2, 6, 4, 1).is_err());
    }

    #[test]
    fn json_roundtrip_and_validation() {
        let fp = FinitePresentation::from_json(r#"{"generators":["a","b"],"relators":["a^2 b^-1","b^3"]}"#).unwrap();
        assert_eq!(fp.to_json().relators, vec!["a^2 b^-1", "b^3"]);
        let text = serde_json::to_string(&fp.to_json()).unwrap();
        assert_eq!(FinitePresentation::from_json(&text).unwrap(), fp);
        assert!(matches!(
            FinitePresentation::from_json(r#"{"generators":["a","a"],"relators":[]}"#),
            Err(PresentationError::DuplicateGenerator(_))
        ));
        assert!(matches!(
            FinitePresentation::from_json(r#"{"generators":["a"],"relators":["c"]}"#),
            Err(PresentationError::Word(WordError::UnknownGenerator(_)))
        ));
        assert!(matches!(FinitePresentation::from_json("{"), Err(PresentationError::Json(_))));
    }
}
