//! Rewriting `K(a,b,c,r)` down to a canonical genus-one diagram of a lens
//! space, one parameter move at a time, and the matching closed forms.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use super::{normalize_lens, KnotError, KnotParams, LensSpace};

/// Which closed form covers a given twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LemmaCase {
    /// `K(a,0,c,a)` in `L(c,a)`, `gcd(a,c) = 1`.
    ZeroB,
    /// `K(a,b,c,a)` in `L(b+c,a+b)`, `gcd(a-c,b+c) = 1`.
    TwistA,
    /// `K(a,b,c,a+c)` in `L(|b-c|,a)`, `a > 0`, `gcd(a,b-c) = 1`.
    TwistAC,
    /// `K(a,b,c,a+b+c)` in `L(b+c,a+c)`, `gcd(a-b,b+c) = 1`.
    TwistABC,
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LemmaCase::ZeroB => "r=a, b=0",
            LemmaCase::TwistA => "r=a",
            LemmaCase::TwistAC => "r=a+c",
            LemmaCase::TwistABC => "r=a+b+c",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MoveKind {
    /// `K(a,0,c,a) → K(a-c,c,0,a-c)`, for `a >= c`.
    SingerZeroB,
    /// `K(a,b,c,a) → K(a-1,b+1,c-1,a-1)`.
    SingerTwistA,
    /// `K(a,b,c,a+c) → K(a,b-1,c-1,a+c-1)`.
    SingerTwistAC,
    /// `K(a,0,c,a)` with `0 < a < c` is the canonical diagram of `L(c,a)`.
    SingerCanonical,
    /// `K(a,b,c,r) ~ K(a,c,b,2a+b+c-r)`.
    SwapBC,
    /// `K(a,0,c,r) ~ K(a,c,0,r)`.
    SwapZero,
    /// `K(0,b,c,0)` is the canonical diagram of `L(b+c,b)`; `K(0,0,1,0)` is `S³`.
    Terminal,
}

impl MoveKind {
    pub fn is_singer(&self) -> bool {
        matches!(
            self,
            MoveKind::SingerZeroB | MoveKind::SingerTwistA | MoveKind::SingerTwistAC | MoveKind::SingerCanonical
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub kind: MoveKind,
    pub before: KnotParams,
    pub after: KnotParams,
}

/// Audit log of a reduction; consecutive steps chain.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MoveTrace {
    pub steps: Vec<TraceStep>,
}

impl MoveTrace {
    pub fn singer_moves(&self) -> usize {
        self.steps.iter().filter(|s| s.kind.is_singer()).count()
    }

    pub fn is_chained(&self) -> bool {
        self.steps.windows(2).all(|w| w[0].after == w[1].before)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Reduction {
    pub case: LemmaCase,
    pub lens: LensSpace,
    pub trace: MoveTrace,
}

fn gcd_i(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

fn case_holds(k: &KnotParams, case: LemmaCase) -> bool {
    let (a, b, c) = (k.a as i64, k.b as i64, k.c as i64);
    match case {
        LemmaCase::ZeroB => b == 0 && gcd_i(a, c) == 1,
        LemmaCase::TwistA => gcd_i(a - c, b + c) == 1,
        LemmaCase::TwistAC => a > 0 && gcd_i(a, b - c) == 1,
        LemmaCase::TwistABC => gcd_i(a - b, b + c) == 1,
    }
}

/// Cases whose twist matches `k.r`, in dispatch order.
fn candidate_cases(k: &KnotParams) -> Vec<LemmaCase> {
    let m = k.modulus();
    let mut out = Vec::new();
    if k.r == k.a % m {
        out.push(if k.b == 0 { LemmaCase::ZeroB } else { LemmaCase::TwistA });
    }
    if k.r == (k.a + k.c) % m {
        out.push(LemmaCase::TwistAC);
    }
    if k.r == (k.a + k.b + k.c) % m {
        out.push(LemmaCase::TwistABC);
    }
    out
}

fn select_case(k: &KnotParams) -> Result<LemmaCase, KnotError> {
    let cands = candidate_cases(k);
    match cands.iter().find(|c| case_holds(k, **c)) {
        Some(&c) => Ok(c),
        None => match cands.first() {
            Some(&case) => Err(KnotError::GcdViolation { knot: *k, case }),
            None => Err(KnotError::Unsupported(*k)),
        },
    }
}

/// Closed-form lens space containing `k`, normalized.
pub fn ambient_lens_space(k: &KnotParams) -> Result<LensSpace, KnotError> {
    let case = select_case(k)?;
    let (a, b, c) = (k.a as i64, k.b as i64, k.c as i64);
    let lens = match case {
        LemmaCase::ZeroB => normalize_lens(c, a)?,
        LemmaCase::TwistA => normalize_lens(b + c, a + b)?,
        LemmaCase::TwistAC => normalize_lens((b - c).abs(), a)?,
        LemmaCase::TwistABC => normalize_lens(b + c, a + c)?,
    };
    Ok(lens)
}

struct Reducer {
    trace: MoveTrace,
    cur: KnotParams,
}

impl Reducer {
    fn step(&mut self, kind: MoveKind, a: u64, b: u64, c: u64, r: u64) {
        let next = KnotParams::with_twist(a, b, c, r).expect("moves keep a+b+c positive");
        self.trace.steps.push(TraceStep { kind, before: self.cur, after: next });
        self.cur = next;
    }

    fn swap_bc(&mut self) {
        let next = self.cur.swap_bc();
        self.trace.steps.push(TraceStep { kind: MoveKind::SwapBC, before: self.cur, after: next });
        self.cur = next;
    }

    fn swap_zero(&mut self) {
        let next = self.cur.swap_zero().expect("b or c is zero here");
        self.trace.steps.push(TraceStep { kind: MoveKind::SwapZero, before: self.cur, after: next });
        self.cur = next;
    }

    fn terminal(&mut self, kind: MoveKind) {
        self.trace.steps.push(TraceStep { kind, before: self.cur, after: self.cur });
    }

    /// `K(a,0,c,a)`.
    fn zero_b(&mut self) -> Result<LensSpace, KnotError> {
        loop {
            let KnotParams { a, c, .. } = self.cur;
            debug_assert_eq!(self.cur.b, 0);
            if a == 0 {
                // gcd(0,c) = 1 forces c = 1
                self.terminal(MoveKind::Terminal);
                return Ok(normalize_lens(c as i64, 0)?);
            }
            if c == 0 {
                return Err(KnotError::AmbiguousTerminal(self.cur));
            }
            if a < c {
                self.terminal(MoveKind::SingerCanonical);
                return Ok(normalize_lens(c as i64, a as i64)?);
            }
            self.step(MoveKind::SingerZeroB, a - c, c, 0, a - c);
            self.swap_zero();
        }
    }

    /// `K(a,b,c,a)`.
    fn twist_a(&mut self) -> Result<LensSpace, KnotError> {
        if self.cur.b == 0 {
            return self.zero_b();
        }
        while self.cur.a > 0 && self.cur.c > 0 {
            let KnotParams { a, b, c, .. } = self.cur;
            self.step(MoveKind::SingerTwistA, a - 1, b + 1, c - 1, a - 1);
        }
        let KnotParams { a, b, c, .. } = self.cur;
        if a == 0 {
            self.terminal(MoveKind::Terminal);
            return Ok(normalize_lens((b + c) as i64, b as i64)?);
        }
        self.swap_zero();
        self.zero_b()
    }

    /// `K(a,b,c,a+c)`, `a > 0`.
    fn twist_ac(&mut self) -> Result<LensSpace, KnotError> {
        if self.cur.c > self.cur.b {
            self.swap_bc();
        }
        while self.cur.c > 0 {
            let KnotParams { a, b, c, .. } = self.cur;
            self.step(MoveKind::SingerTwistAC, a, b - 1, c - 1, a + c - 1);
        }
        self.swap_zero();
        self.zero_b()
    }
}

/// Reduces `k` by the parameter moves to a canonical lens space diagram.
///
/// Only the twists `r ≡ a`, `a+c`, `a+b+c (mod 2a+b+c)` are handled; any
/// other twist is reported as unsupported.
pub fn singer_reduce(k: &KnotParams) -> Result<Reduction, KnotError> {
    let case = select_case(k)?;
    let mut red = Reducer { trace: MoveTrace::default(), cur: *k };
    let lens = match case {
        LemmaCase::ZeroB => red.zero_b()?,
        LemmaCase::TwistA => red.twist_a()?,
        LemmaCase::TwistAC => red.twist_ac()?,
        LemmaCase::TwistABC => {
            red.swap_bc();
            red.twist_a()?
        }
    };
    debug_assert!(red.trace.is_chained());
    Ok(Reduction { case, lens, trace: red.trace })
}
