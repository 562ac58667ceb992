//! The four free-word identity families that show the normal closures of
//! `{w, x_i^p x_{i+1}^{-p}}` and `{θ^i(w)}` coincide in `F_n`.

use serde::Serialize;

use crate::freegroup::{wrap_index, FreeWord};
use crate::params::{ConstraintViolation, SeifertParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TietzeFamily {
    /// `w_i⁻¹ x_{i+1}^q w_{i+1} x_{i+1}^{-q} = x_i^p x_{i+1}^{-p}`, `i = 1..n-2`
    A,
    /// `w_{n-1}⁻¹ x_n^q w x_n^{-q} = x_{n-1}^p x_n^{-p}`
    B,
    /// `x_1^{-q} w ((x_1^p x_2^{-p})⋯(x_{n-1}^p x_n^{-p}))⁻¹ x_1^q = w_1`
    C,
    /// `x_i^{-q} w_{i-1} (x_{i-1}^p x_i^{-p}) x_i^q = w_i`, `i = 2..n-1`
    D,
}

#[derive(Debug, Clone, Serialize)]
pub struct TietzeCheck {
    pub family: TietzeFamily,
    /// The `i` of the family; `0` for the single-instance families B and C.
    pub index: usize,
    pub pass: bool,
    pub lhs: FreeWord,
    pub rhs: FreeWord,
}

#[derive(Debug, Clone, Serialize)]
pub struct TietzeReport {
    pub params: SeifertParams,
    pub checks: Vec<TietzeCheck>,
}

impl TietzeReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TietzeCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn family(&self, family: TietzeFamily) -> impl Iterator<Item = &TietzeCheck> {
        self.checks.iter().filter(move |c| c.family == family)
    }
}

/// Evaluates every instance of the four families as equalities of reduced
/// words, with `w_i = θ^i(w)` and `w = (x_1^q⋯x_n^q)^l x_n^{-p}`.
pub fn verify_tietze_identities(n: u64, p: u64, q: u64, l: u64) -> Result<TietzeReport, ConstraintViolation> {
    let sp = SeifertParams::new(n, p, q, l)?;
    if n < 2 {
        return Err(ConstraintViolation::NTooSmall(n));
    }
    Ok(tietze_report_for(&sp))
}

pub(crate) fn tietze_report_for(sp: &SeifertParams) -> TietzeReport {
    let n = sp.n as usize;
    let (p, q) = (sp.p as i64, sp.q as i64);
    let w = FreeWord::seifert_word_for(sp);
    let wi = |i: usize| w.shift(i as i64);
    let x = |i: usize, e: i64| FreeWord::power_of(n, wrap_index(i as i64, n), e).expect("wrapped index");
    // x_i^p x_{i+1}^{-p}
    let link = |i: usize| x(i, p).multiply(&x(i + 1, -p)).expect("same rank");
    let prod = |ws: &[&FreeWord]| FreeWord::product(n, ws.iter().copied()).expect("same rank");

    let mut checks = Vec::new();
    let mut push = |family, index, lhs: FreeWord, rhs: FreeWord| {
        checks.push(TietzeCheck { family, index, pass: lhs == rhs, lhs, rhs });
    };

    for i in 1..=n.saturating_sub(2) {
        let lhs = prod(&[&wi(i).invert(), &x(i + 1, q), &wi(i + 1), &x(i + 1, -q)]);
        push(TietzeFamily::A, i, lhs, link(i));
    }

    let lhs = prod(&[&wi(n - 1).invert(), &x(n, q), &w, &x(n, -q)]);
    push(TietzeFamily::B, 0, lhs, link(n - 1));

    let links: Vec<FreeWord> = (1..n).map(link).collect();
    let chain = FreeWord::product(n, &links).expect("same rank");
    let lhs = prod(&[&x(1, -q), &w, &chain.invert(), &x(1, q)]);
    push(TietzeFamily::C, 0, lhs, wi(1));

    for i in 2..n {
        let lhs = prod(&[&x(i, -q), &wi(i - 1), &link(i - 1), &x(i, q)]);
        push(TietzeFamily::D, i, lhs, wi(i));
    }

    TietzeReport { params: *sp, checks }
}
