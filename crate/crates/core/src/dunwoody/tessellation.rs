use std::fmt;

use serde::Serialize;

use super::{DunwoodyError, DunwoodyParams};
use crate::unionfind::OrientedUnionFind;

/// Edge names with 1-based indices: meridian edges `e(i,j)` run from `S`
/// towards `N`, arc edges `e'(i,j)` from `B_{i-1}` towards `A_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeLabel {
    Meridian { i: u64, j: u64 },
    Arc { i: u64, j: u64 },
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::Meridian { i, j } => write!(f, "e({i},{j})"),
            EdgeLabel::Arc { i, j } => write!(f, "e'({i},{j})"),
        }
    }
}

impl Serialize for EdgeLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One edge of a region boundary; `forward` when traversed along its orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundaryStep {
    pub edge: usize,
    pub forward: bool,
}

/// The sphere tessellated by `n` meridians from `S` to `N` and `n` arcs
/// `B_{i-1} → A_i`, where `B_i` and `A_i` sit `a` and `a+b` edges up
/// meridian `i`. Regions `R'_i` surround `N`, regions `R''_i` surround `S`.
#[derive(Debug, Clone)]
pub struct SphereTessellation {
    params: DunwoodyParams,
    // endpoints (tail, head) as vertex ids
    ends: Vec<(usize, usize)>,
    vertex_count: usize,
    // clockwise from N
    upper: Vec<Vec<BoundaryStep>>,
    // clockwise from S
    lower: Vec<Vec<BoundaryStep>>,
}

const S: usize = 0;
const N: usize = 1;

struct Layout {
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    meridian_len: usize,
}

impl Layout {
    fn wrap(&self, i: usize) -> usize {
        (i + self.n - 1) % self.n + 1
    }

    fn meridian_edge(&self, i: usize, j: usize) -> usize {
        (self.wrap(i) - 1) * self.meridian_len + (j - 1)
    }

    fn arc_edge(&self, i: usize, j: usize) -> usize {
        self.n * self.meridian_len + (self.wrap(i) - 1) * self.c + (j - 1)
    }

    fn meridian_point(&self, i: usize, k: usize) -> usize {
        if k == 0 {
            S
        } else if k == self.meridian_len {
            N
        } else {
            2 + (self.wrap(i) - 1) * (self.meridian_len - 1) + (k - 1)
        }
    }

    fn arc_point(&self, i: usize, k: usize) -> usize {
        if k == 0 {
            self.meridian_point(i + self.n - 1, self.a)
        } else if k == self.c {
            self.meridian_point(i, self.a + self.b)
        } else {
            let interior_meridian = self.n * self.meridian_len.saturating_sub(1);
            2 + interior_meridian + (self.wrap(i) - 1) * (self.c - 1) + (k - 1)
        }
    }

    fn point_count(&self) -> usize {
        2 + self.n * self.meridian_len.saturating_sub(1) + self.n * self.c.saturating_sub(1)
    }
}

/// Builds the tessellated sphere for `d`; the twist and shift are ignored here.
pub fn build_tessellation(d: &DunwoodyParams) -> Result<SphereTessellation, DunwoodyError> {
    let d = DunwoodyParams::new(d.a, d.b, d.c, d.n, d.r, d.s)?;
    let lay = Layout {
        n: d.n as usize,
        a: d.a as usize,
        b: d.b as usize,
        c: d.c as usize,
        meridian_len: (2 * d.a + d.b) as usize,
    };
    let (n, a, b, c, m) = (lay.n, lay.a, lay.b, lay.c, lay.meridian_len);

    let mut raw_ends = vec![(0, 0); n * (m + c)];
    for i in 1..=n {
        for j in 1..=m {
            raw_ends[lay.meridian_edge(i, j)] = (lay.meridian_point(i, j - 1), lay.meridian_point(i, j));
        }
        for j in 1..=c {
            raw_ends[lay.arc_edge(i, j)] = (lay.arc_point(i, j - 1), lay.arc_point(i, j));
        }
    }

    // Coincident points: S = N without meridian edges, B_{i-1} = A_i without arc edges.
    let mut points = OrientedUnionFind::new(lay.point_count());
    if m == 0 {
        points.union(S, N, false).expect("no orientation on points");
    }
    if c == 0 {
        for i in 1..=n {
            points.union(lay.arc_point(i, 0), lay.meridian_point(i, a + b), false).expect("no orientation on points");
        }
    }
    let labels = points.labels();
    let vertex_count = labels.iter().copied().max().map_or(0, |x| x + 1);
    let ends = raw_ends.iter().map(|&(t, h)| (labels[t], labels[h])).collect();

    let step = |edge, forward| BoundaryStep { edge, forward };
    let mut upper = Vec::with_capacity(n);
    let mut lower = Vec::with_capacity(n);
    for i in 1..=n {
        let mut up = Vec::with_capacity(m + c);
        up.extend((a + b + 1..=m).rev().map(|j| step(lay.meridian_edge(i, j), false)));
        up.extend((1..=c).rev().map(|j| step(lay.arc_edge(i, j), false)));
        up.extend((a + 1..=m).map(|j| step(lay.meridian_edge(i + n - 1, j), true)));
        upper.push(up);

        let mut down = Vec::with_capacity(m + c);
        down.extend((1..=a).map(|j| step(lay.meridian_edge(i + n - 1, j), true)));
        down.extend((1..=c).map(|j| step(lay.arc_edge(i, j), true)));
        down.extend((1..=a + b).rev().map(|j| step(lay.meridian_edge(i, j), false)));
        lower.push(down);
    }

    Ok(SphereTessellation { params: d, ends, vertex_count, upper, lower })
}

impl SphereTessellation {
    pub fn params(&self) -> &DunwoodyParams {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n as usize
    }

    pub fn region_length(&self) -> usize {
        self.params.region_length() as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn face_count(&self) -> usize {
        2 * self.n()
    }

    /// `V - E + F`; 2 except in pinched configurations (two of `a`, `b`, `c` zero).
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// `(tail, head)` vertex ids.
    pub fn edge_ends(&self, edge: usize) -> (usize, usize) {
        self.ends[edge]
    }

    pub fn edge_label(&self, edge: usize) -> EdgeLabel {
        let per = (2 * self.params.a + self.params.b) as usize;
        let meridians = self.n() * per;
        if edge < meridians {
            EdgeLabel::Meridian { i: (edge / per + 1) as u64, j: (edge % per + 1) as u64 }
        } else {
            let c = self.params.c as usize;
            let k = edge - meridians;
            EdgeLabel::Arc { i: (k / c + 1) as u64, j: (k % c + 1) as u64 }
        }
    }

    /// Inverse of `edge_label`; indices must be in range (meridian index is taken mod `n`).
    pub fn edge_id(&self, label: EdgeLabel) -> Option<usize> {
        let per = 2 * self.params.a + self.params.b;
        let n = self.params.n;
        let wrap = |i: u64| (i + n - 1) % n;
        match label {
            EdgeLabel::Meridian { i, j } if (1..=per).contains(&j) => Some((wrap(i) * per + j - 1) as usize),
            EdgeLabel::Arc { i, j } if (1..=self.params.c).contains(&j) => {
                Some((n * per + wrap(i) * self.params.c + j - 1) as usize)
            }
            _ => None,
        }
    }

    /// Boundary of `R'_i`, clockwise from `N` (`i` taken mod `n`, 1-based).
    pub fn upper(&self, i: usize) -> &[BoundaryStep] {
        &self.upper[(i + self.n() - 1) % self.n()]
    }

    /// Boundary of `R''_i`, clockwise from `S`.
    pub fn lower(&self, i: usize) -> &[BoundaryStep] {
        &self.lower[(i + self.n() - 1) % self.n()]
    }

    /// Each edge borders exactly two regions, traversed in opposite
    /// directions, and each boundary is a closed edge path of full length.
    pub fn is_consistent(&self) -> bool {
        let mut seen = vec![(0u8, 0u8); self.edge_count()];
        let len = self.region_length();
        for cycle in self.upper.iter().chain(&self.lower) {
            if cycle.len() != len {
                return false;
            }
            for (k, st) in cycle.iter().enumerate() {
                let slot = &mut seen[st.edge];
                if st.forward {
                    slot.0 += 1
                } else {
                    slot.1 += 1
                }
                let next = cycle[(k + 1) % len];
                if self.step_end(*st) != self.step_start(next) {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s == (1, 1))
    }

    pub(crate) fn step_start(&self, st: BoundaryStep) -> usize {
        let (t, h) = self.ends[st.edge];
        if st.forward {
            t
        } else {
            h
        }
    }

    pub(crate) fn step_end(&self, st: BoundaryStep) -> usize {
        let (t, h) = self.ends[st.edge];
        if st.forward {
            h
        } else {
            t
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tess(a: u64, b: u64, c: u64, n: u64) -> SphereTessellation {
        build_tessellation(&DunwoodyParams::new(a, b, c, n, 0, 0).unwrap()).unwrap()
    }

    #[test]
    fn counts_for_d_1_1_4_2() {
        let t = tess(1, 1, 4, 2);
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (12, 14, 4));
        assert_eq!(t.euler_characteristic(), 2);
        assert!(t.is_consistent());
    }

    #[test]
    fn smallest_case_is_pinched() {
        let t = tess(1, 0, 0, 1);
        assert_eq!(t.region_length(), 2);
        assert_eq!((t.vertex_count(), t.edge_count(), t.face_count()), (3, 2, 2));
        assert_eq!(t.euler_characteristic(), 3);
        assert!(t.is_consistent());
    }

    #[test]
    fn sphere_unless_pinched() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    if b + c == 0 || a + b == 0 || a + c == 0 {
                        continue;
                    }
                    for n in 1..5 {
                        let t = tess(a, b, c, n);
                        assert!(t.is_consistent(), "{a} {b} {c} {n}");
                        assert_eq!(t.euler_characteristic(), 2, "{a} {b} {c} {n}");
                        let m = 2 * a + b + c;
                        if c > 0 {
                            assert_eq!(t.vertex_count() as u64, 2 + n * m - 2 * n);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn labels_round_trip() {
        let t = tess(2, 1, 3, 3);
        for e in 0..t.edge_count() {
            assert_eq!(t.edge_id(t.edge_label(e)), Some(e));
        }
        assert_eq!(t.edge_label(0).to_string(), "e(1,1)");
        assert_eq!(t.edge_label(t.edge_count() - 1).to_string(), "e'(3,3)");
    }
}
