use std::fmt;

use serde::Serialize;

use super::{build_tessellation, DunwoodyError, DunwoodyParams, EdgeLabel, SphereTessellation};
use crate::freegroup::{default_names, FreeWord};
use crate::presentations::FinitePresentation;
use crate::unionfind::OrientedUnionFind;

/// Two boundary slots glued together; `reversed` when the orientations disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgePairing {
    pub upper: EdgeLabel,
    pub lower: EdgeLabel,
    pub reversed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CellCounts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub cells: usize,
    pub euler_characteristic: i64,
    pub pass: bool,
}

impl fmt::Display for CellCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V={} E={} F={} C={} (chi={})",
            self.vertices, self.edges, self.faces, self.cells, self.euler_characteristic
        )
    }
}

/// The 3-ball with its boundary regions glued in pairs.
#[derive(Debug, Clone)]
pub struct QuotientComplex {
    tessellation: SphereTessellation,
    twist: u64,
    shift: u8,
    // per edge: class label, orientation relative to the class representative
    edge_class: Vec<(usize, bool)>,
    class_count: usize,
    vertex_class_count: usize,
    pairings: Vec<EdgePairing>,
}

/// Glues `R'_i` to `R''_{i+s}` by an orientation-reversing map.
///
/// `∂R'_i` is read clockwise from `N` and `∂R''_{i+s}` counterclockwise from
/// the vertex `r` steps clockwise from `S`, and the two readings are matched
/// slot by slot. So `N` lands on that vertex, and with `r = a + c` (`s = 0`)
/// or `r = a` (`s = 1`) the anchor `B_{i-1}` lands on `S` or `N` on `B_{i-1}`.
pub fn glue(t: &SphereTessellation, r: u64, s: u8) -> Result<QuotientComplex, DunwoodyError> {
    let len = t.region_length();
    if r >= len as u64 {
        return Err(DunwoodyError::TwistOutOfRange { r, modulus: len as u64 });
    }
    if s > 1 {
        return Err(DunwoodyError::BadShift(s));
    }
    let r = r as usize;
    let mut edges = OrientedUnionFind::new(t.edge_count());
    let mut vertices = OrientedUnionFind::new(t.vertex_count());
    let mut pairings = Vec::with_capacity(t.n() * len);
    for i in 1..=t.n() {
        let upper = t.upper(i);
        let lower = t.lower(i + s as usize);
        for (k, &u) in upper.iter().enumerate() {
            let mut l = lower[(r + len - 1 - k) % len];
            l.forward = !l.forward;
            let reversed = u.forward != l.forward;
            edges.union(u.edge, l.edge, reversed).map_err(|c| DunwoodyError::from_conflict(t, c))?;
            for (x, y) in [(t.step_start(u), t.step_start(l)), (t.step_end(u), t.step_end(l))] {
                vertices.union(x, y, false).expect("vertices carry no orientation");
            }
            pairings.push(EdgePairing { upper: t.edge_label(u.edge), lower: t.edge_label(l.edge), reversed });
        }
    }
    let labels = edges.labels();
    let edge_class = (0..t.edge_count()).map(|e| (labels[e], edges.find(e).1)).collect();
    Ok(QuotientComplex {
        tessellation: t.clone(),
        twist: r as u64,
        shift: s,
        edge_class,
        class_count: edges.class_count(),
        vertex_class_count: vertices.class_count(),
        pairings,
    })
}

impl QuotientComplex {
    /// Builds and glues with the twist and shift stored in `d`.
    pub fn from_params(d: &DunwoodyParams) -> Result<Self, DunwoodyError> {
        glue(&build_tessellation(d)?, d.r, d.s)
    }

    pub fn tessellation(&self) -> &SphereTessellation {
        &self.tessellation
    }

    pub fn twist(&self) -> u64 {
        self.twist
    }

    pub fn shift(&self) -> u8 {
        self.shift
    }

    pub fn edge_class_count(&self) -> usize {
        self.class_count
    }

    pub fn vertex_class_count(&self) -> usize {
        self.vertex_class_count
    }

    pub fn paired_region_count(&self) -> usize {
        self.tessellation.n()
    }

    /// Every slot-to-slot identification made by the gluing.
    pub fn pairings(&self) -> &[EdgePairing] {
        &self.pairings
    }

    /// Class of an edge and whether it is reversed against the class representative.
    pub fn edge_class(&self, label: EdgeLabel) -> Option<(usize, bool)> {
        self.tessellation.edge_id(label).map(|e| self.edge_class[e])
    }

    /// Generator index (0-based) and orientation sign for each class.
    ///
    /// When the classes are exactly those of the first meridian edges,
    /// `x_i` is the class of `e(i-1,1)` oriented from `S`; otherwise
    /// classes are numbered in order of first appearance among edges.
    fn generators(&self) -> Vec<(usize, bool)> {
        let t = &self.tessellation;
        let n = t.n();
        let mut out: Vec<(usize, bool)> = (0..self.class_count).map(|c| (c, false)).collect();
        if self.class_count != n {
            return out;
        }
        let firsts: Vec<(usize, bool)> =
            (1..=n).filter_map(|i| self.edge_class(EdgeLabel::Meridian { i: (i + n - 1) as u64, j: 1 })).collect();
        let mut hit = vec![false; n];
        if firsts.len() != n || firsts.iter().any(|&(c, _)| std::mem::replace(&mut hit[c], true)) {
            return out;
        }
        for (g, &(c, flip)) in firsts.iter().enumerate() {
            out[c] = (g, flip);
        }
        out
    }

    /// One word per `R'_i`, read clockwise from `N`, over the edge classes.
    pub fn boundary_presentation(&self) -> FinitePresentation {
        let t = &self.tessellation;
        let gens = self.generators();
        let m = self.class_count;
        let relators = (1..=t.n())
            .map(|i| {
                let letters: Vec<(usize, i64)> = t
                    .upper(i)
                    .iter()
                    .map(|st| {
                        let (class, flip) = self.edge_class[st.edge];
                        let (g, gflip) = gens[class];
                        let positive = st.forward ^ flip ^ gflip;
                        (g + 1, if positive { 1 } else { -1 })
                    })
                    .collect();
                FreeWord::from_letters(m, &letters).expect("generator indices are in range")
            })
            .collect();
        FinitePresentation::new(default_names(m), relators).expect("default names are distinct")
    }

    /// `(edge, generator, reversed)` for every edge of the tessellation.
    pub fn edge_class_table(&self) -> Vec<(EdgeLabel, usize, bool)> {
        let gens = self.generators();
        (0..self.tessellation.edge_count())
            .map(|e| {
                let (class, flip) = self.edge_class[e];
                let (g, gflip) = gens[class];
                (self.tessellation.edge_label(e), g + 1, flip ^ gflip)
            })
            .collect()
    }
}

/// Cell counts of the quotient and whether it is a one-vertex closed
/// 3-manifold with `n` edges and `n` faces.
pub fn seifert_criterion(qc: &QuotientComplex) -> CellCounts {
    let n = qc.tessellation.n();
    let (v, e, f, c) = (qc.vertex_class_count, qc.class_count, qc.paired_region_count(), 1);
    let euler_characteristic = v as i64 - e as i64 + f as i64 - c as i64;
    let pass = v == 1 && e == n && f == n && euler_characteristic == 0;
    CellCounts { vertices: v, edges: e, faces: f, cells: c, euler_characteristic, pass }
}

/// The presentation read off the `R'_i`, when the criterion holds.
pub fn read_presentation(qc: &QuotientComplex) -> Result<FinitePresentation, DunwoodyError> {
    let counts = seifert_criterion(qc);
    if !counts.pass {
        return Err(DunwoodyError::CriterionFailed(counts));
    }
    Ok(qc.boundary_presentation())
}
