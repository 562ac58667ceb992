//! Counting homomorphisms from a finitely presented group into a small
//! finite group, by backtracking over generator images.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::FinitePresentation;

pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupTableError {
    #[error("multiplication table is empty or not square")]
    Shape,
    #[error("table entry {0} is not an element")]
    NotClosed(usize),
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("unknown target group `{0}` (expected S3, S4 or Z/k)")]
    UnknownName(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomCountError {
    #[error("enumeration budget of {budget} assignments exceeded")]
    BudgetExceeded { budget: u64 },
}

/// A finite group given by its multiplication table, elements `0..order`.
#[derive(Debug, Clone)]
pub struct PermGroupTable {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl PermGroupTable {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>) -> Result<Self, GroupTableError> {
        let order = table.len();
        if order == 0 || table.iter().any(|row| row.len() != order) {
            return Err(GroupTableError::Shape);
        }
        if let Some(&bad) = table.iter().flatten().find(|&&e| e >= order) {
            return Err(GroupTableError::NotClosed(bad));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupTableError::NoIdentity)?;
        let inverse = (0..order)
            .map(|g| {
                (0..order)
                    .find(|&h| table[g][h] == identity && table[h][g] == identity)
                    .ok_or(GroupTableError::NoInverse(g))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for (a, b, c) in itertools::iproduct!(0..order, 0..order, 0..order) {
            if table[table[a][b]][c] != table[a][table[b][c]] {
                return Err(GroupTableError::NotAssociative(a, b, c));
            }
        }
        Ok(PermGroupTable { name: name.into(), table, identity, inverse })
    }

    /// Permutations of `0..degree` composed left to right.
    pub fn from_permutations(name: impl Into<String>, perms: Vec<Vec<usize>>) -> Result<Self, GroupTableError> {
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p);
        let mut table = Vec::with_capacity(perms.len());
        for a in &perms {
            let mut row = Vec::with_capacity(perms.len());
            for b in &perms {
                let ab: Vec<usize> = a.iter().map(|&i| b[i]).collect();
                row.push(index(&ab).ok_or(GroupTableError::NotClosed(perms.len()))?);
            }
            table.push(row);
        }
        Self::from_table(name, table)
    }

    pub fn symmetric(degree: usize) -> Self {
        let perms = (0..degree).permutations(degree).collect();
        Self::from_permutations(format!("S{degree}"), perms).expect("S_n is a group")
    }

    pub fn cyclic(k: usize) -> Self {
        assert!(k > 0, "Z/0 is not finite");
        let table = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        PermGroupTable { name: format!("Z/{k}"), table, identity: 0, inverse: (0..k).map(|a| (k - a) % k).collect() }
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `S3`, `S4`, `Z/k` (also `S1`, `S2`, `1`).
    pub fn named(name: &str) -> Result<Self, GroupTableError> {
        let unknown = || GroupTableError::UnknownName(name.to_string());
        match name {
            "1" => Ok(Self::trivial()),
            "S1" | "S2" | "S3" | "S4" => Ok(Self::symmetric(name[1..].parse().unwrap())),
            _ => {
                let k: usize = name.strip_prefix("Z/").ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
                if k == 0 || k > 4096 {
                    return Err(unknown());
                }
                Ok(Self::cyclic(k))
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a^e`, for any integer `e` (reduced mod the group order).
    pub fn pow(&self, a: usize, e: &BigInt) -> usize {
        let k = e.mod_floor(&BigInt::from(self.order())).to_usize().expect("reduced mod order");
        (0..k).fold(self.identity, |acc, _| self.mul(acc, a))
    }
}

/// Number of assignments `generators → target` that kill every relator.
///
/// Generators are assigned in a greedy order that closes relators as early as
/// possible, and each relator is checked as soon as all its generators are
/// assigned. `budget` caps the number of partial assignments visited.
pub fn count_homomorphisms(
    pres: &FinitePresentation,
    target: &PermGroupTable,
    budget: u64,
) -> Result<u64, HomCountError> {
    let order = target.order();
    let ngen = pres.generator_count();
    let order_big = BigInt::from(order);
    let relators: Vec<Vec<(usize, usize)>> = pres
        .relators()
        .iter()
        .map(|r| {
            r.syllables()
                .iter()
                .map(|s| (s.generator - 1, s.exponent.mod_floor(&order_big).to_usize().expect("reduced")))
                .filter(|&(_, e)| e != 0)
                .collect::<Vec<_>>()
        })
        .filter(|r: &Vec<(usize, usize)>| !r.is_empty())
        .collect();
    let supports: Vec<Vec<usize>> =
        relators.iter().map(|r| r.iter().map(|&(g, _)| g).sorted().dedup().collect()).collect();

    // Greedy order: prefer the generator closing most relators, then the most frequent one.
    let mut assigned = vec![false; ngen];
    let mut sequence = Vec::with_capacity(ngen);
    for _ in 0..ngen {
        let best = (0..ngen)
            .filter(|&g| !assigned[g])
            .max_by_key(|&g| {
                let closes =
                    supports.iter().filter(|s| s.contains(&g) && s.iter().all(|&h| h == g || assigned[h])).count();
                let freq = supports.iter().filter(|s| s.contains(&g)).count();
                (closes, freq, std::cmp::Reverse(g))
            })
            .unwrap();
        assigned[best] = true;
        sequence.push(best);
    }
    let mut position = vec![0; ngen];
    for (depth, &g) in sequence.iter().enumerate() {
        position[g] = depth;
    }
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); ngen];
    for (ri, s) in supports.iter().enumerate() {
        let depth = s.iter().map(|&g| position[g]).max().unwrap();
        closing[depth].push(ri);
    }

    let powers: Vec<Vec<usize>> = (0..order)
        .map(|a| {
            let mut row = Vec::with_capacity(order);
            let mut acc = target.identity();
            for _ in 0..order {
                row.push(acc);
                acc = target.mul(acc, a);
            }
            row
        })
        .collect();

    struct Search<'a> {
        target: &'a PermGroupTable,
        relators: &'a [Vec<(usize, usize)>],
        closing: &'a [Vec<usize>],
        sequence: &'a [usize],
        powers: &'a [Vec<usize>],
        image: Vec<usize>,
        visited: u64,
        budget: u64,
    }

    impl Search<'_> {
        fn holds(&self, ri: usize) -> bool {
            let mut acc = self.target.identity();
            for &(g, e) in &self.relators[ri] {
                acc = self.target.mul(acc, self.powers[self.image[g]][e]);
            }
            acc == self.target.identity()
        }

        fn run(&mut self, depth: usize) -> Result<u64, HomCountError> {
            if depth == self.sequence.len() {
                return Ok(1);
            }
            let g = self.sequence[depth];
            let mut total = 0;
            for a in 0..self.target.order() {
                self.visited += 1;
                if self.visited > self.budget {
                    return Err(HomCountError::BudgetExceeded { budget: self.budget });
                }
                self.image[g] = a;
                if self.closing[depth].iter().all(|&ri| self.holds(ri)) {
                    total += self.run(depth + 1)?;
                }
            }
            Ok(total)
        }
    }

    let mut search = Search {
        target,
        relators: &relators,
        closing: &closing,
        sequence: &sequence,
        powers: &powers,
        image: vec![target.identity(); ngen],
        visited: 0,
        budget,
    };
    search.run(0)
}
