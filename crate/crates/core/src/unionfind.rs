//! Disjoint sets with an orientation bit per element.
//!
//! Each element stores its orientation relative to its parent; `find`
//! returns the root together with the orientation relative to the root.
//! Merging `a ≡ b^σ` when `a` and `b` already share a class with the
//! opposite relative orientation is reported as a conflict.

#[derive(Clone, Debug)]
pub struct OrientedUnionFind {
    parent: Vec<usize>,
    // true when the element is reversed relative to its parent
    flip: Vec<bool>,
    rank: Vec<u8>,
}

/// `a` was forced to equal the reverse of itself (through `b`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrientationConflict {
    pub a: usize,
    pub b: usize,
}

impl OrientedUnionFind {
    pub fn new(n: usize) -> Self {
        OrientedUnionFind { parent: (0..n).collect(), flip: vec![false; n], rank: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, x: usize) -> (usize, bool) {
        let mut path = Vec::new();
        let mut node = x;
        while self.parent[node] != node {
            path.push(node);
            node = self.parent[node];
        }
        let root = node;
        // Walk back from the node nearest the root so parities accumulate correctly.
        let mut acc = false;
        for &v in path.iter().rev() {
            acc ^= self.flip[v];
            self.flip[v] = acc;
            self.parent[v] = root;
        }
        (root, if path.is_empty() { false } else { self.flip[x] })
    }

    /// Identifies `a` with `b` (`reversed = false`) or with `b` reversed.
    /// Returns whether two distinct classes were merged.
    pub fn union(&mut self, a: usize, b: usize, reversed: bool) -> Result<bool, OrientationConflict> {
        let (ra, fa) = self.find(a);
        let (rb, fb) = self.find(b);
        if ra == rb {
            return if fa ^ fb == reversed { Ok(false) } else { Err(OrientationConflict { a, b }) };
        }
        let rel = fa ^ fb ^ reversed;
        let (child, root) = if self.rank[ra] < self.rank[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[child] = root;
        self.flip[child] = rel;
        if self.rank[ra] == self.rank[rb] {
            self.rank[root] = self.rank[root].saturating_add(1);
        }
        Ok(true)
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a).0 == self.find(b).0
    }

    pub fn class_count(&mut self) -> usize {
        (0..self.len()).filter(|&x| self.find(x).0 == x).count()
    }

    /// Class label for every element, numbered by first appearance.
    pub fn labels(&mut self) -> Vec<usize> {
        let mut seen = std::collections::HashMap::new();
        (0..self.len())
            .map(|x| {
                let r = self.find(x).0;
                let next = seen.len();
                *seen.entry(r).or_insert(next)
            })
            .collect()
    }
}
