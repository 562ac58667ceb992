//! Relator comparison up to cyclic rotation, inversion and relabeling.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::Zero;

use super::FinitePresentation;
use crate::freegroup::FreeWord;

/// Canonical form of the conjugacy class of `{u, u⁻¹}`.
pub type CyclicKey = Vec<(usize, BigInt)>;

fn cyclically_reduce(u: &FreeWord) -> Vec<(usize, BigInt)> {
    let mut s: Vec<(usize, BigInt)> = u.syllables().iter().map(|s| (s.generator, s.exponent.clone())).collect();
    while s.len() >= 2 && s[0].0 == s[s.len() - 1].0 {
        let (_, e) = s.pop().unwrap();
        s[0].1 += e;
        if s[0].1.is_zero() {
            s.remove(0);
        }
    }
    s
}

fn min_rotation(s: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
    (0..s.len().max(1))
        .map(|k| s[k.min(s.len())..].iter().chain(&s[..k.min(s.len())]).cloned().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

pub fn cyclic_key(u: &FreeWord) -> CyclicKey {
    let fwd = cyclically_reduce(u);
    let inv: Vec<(usize, BigInt)> = fwd.iter().rev().map(|(g, e)| (*g, -e)).collect();
    min_rotation(&fwd).min(min_rotation(&inv))
}

/// `u` and `v` normally generate the same cyclic subgroup data: one is a
/// cyclic rotation of the other or of its inverse.
pub fn relators_equivalent(u: &FreeWord, v: &FreeWord) -> bool {
    u.rank() == v.rank() && cyclic_key(u) == cyclic_key(v)
}

fn key_multiset(relators: &[FreeWord]) -> BTreeMap<CyclicKey, usize> {
    let mut m = BTreeMap::new();
    for r in relators.iter().filter(|r| !r.is_identity()) {
        *m.entry(cyclic_key(r)).or_insert(0) += 1;
    }
    m
}

/// A signed generator permutation `x_i ↦ x_{map[i-1].0}^{±1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    pub map: Vec<(usize, bool)>,
}

impl Relabeling {
    pub fn is_theta_shift(&self) -> Option<usize> {
        let n = self.map.len();
        (0..n).find(|&k| self.map.iter().enumerate().all(|(i, &(g, flip))| !flip && g == (i + k) % n + 1))
    }
}

/// Searches for a relabeling taking the relators of `a` onto those of `b`
/// (as multisets, each up to rotation and inversion; trivial relators are
/// ignored). Shifts `θ^k` are tried first, then all permutations, then, if
/// `allow_inversions`, signed permutations.
pub fn find_relabeling(a: &FinitePresentation, b: &FinitePresentation, allow_inversions: bool) -> Option<Relabeling> {
    let n = a.generator_count();
    if n != b.generator_count() {
        return None;
    }
    let target = key_multiset(b.relators());
    // cyclic key lengths are invariant under every relabeling
    let lengths = |m: &BTreeMap<CyclicKey, usize>| m.iter().map(|(k, c)| (k.len(), *c)).sorted().collect::<Vec<_>>();
    if lengths(&key_multiset(a.relators())) != lengths(&target) {
        return None;
    }
    let matches = |map: &[(usize, bool)]| {
        let mapped: Vec<FreeWord> = a.relators().iter().map(|r| r.relabel(map)).collect();
        key_multiset(&mapped) == target
    };
    for k in 0..n {
        let map: Vec<(usize, bool)> = (0..n).map(|i| ((i + k) % n + 1, false)).collect();
        if matches(&map) {
            return Some(Relabeling { map });
        }
    }
    let perms: Vec<Vec<usize>> = (1..=n).permutations(n).collect();
    for perm in &perms {
        let map: Vec<(usize, bool)> = perm.iter().map(|&g| (g, false)).collect();
        if matches(&map) {
            return Some(Relabeling { map });
        }
    }
    if allow_inversions {
        for signs in 1u64..(1u64 << n) {
            for perm in &perms {
                let map: Vec<(usize, bool)> = perm.iter().enumerate().map(|(i, &g)| (g, signs >> i & 1 == 1)).collect();
                if matches(&map) {
                    return Some(Relabeling { map });
                }
            }
        }
    }
    None
}
