//! Direct backtracking isomorphism search and exact automorphism counting.
//!
//! This is independent of the canonical labelling in [`crate::canon`] and is
//! what the automorphism counts of patterns are built on.

use crate::graph::{bit, bits, Graph};

/// Vertex order for matching: repeatedly take the vertex with the most
/// neighbours among those already placed, ties by degree.
fn matching_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| ((g.neighbors(v) & placed).count_ones(), g.degree(v), n - v))
            .expect("unplaced vertex");
        placed |= bit(v);
        order.push(v);
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    map: Vec<usize>,
    used: u64,
}

impl Matcher<'_> {
    fn extend(&mut self, idx: usize) -> bool {
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        if self.map[v] != usize::MAX {
            return self.extend(idx + 1);
        }
        let dv = self.g.degree(v);
        for w in bits(self.h.vertex_mask() & !self.used) {
            if self.h.degree(w) != dv || !self.consistent(v, w) {
                continue;
            }
            self.map[v] = w;
            self.used |= bit(w);
            if self.extend(idx + 1) {
                return true;
            }
            self.map[v] = usize::MAX;
            self.used &= !bit(w);
        }
        false
    }

    fn consistent(&self, v: usize, w: usize) -> bool {
        for u in 0..self.g.order() {
            let x = self.map[u];
            if x != usize::MAX && self.g.has_edge(u, v) != self.h.has_edge(x, w) {
                return false;
            }
        }
        true
    }
}

/// Searches for an isomorphism `g -> h` extending the partial assignment
/// `fixed` (pairs `(v, w)` meaning `v -> w`).
pub fn find_isomorphism_with(g: &Graph, h: &Graph, fixed: &[(usize, usize)]) -> Option<Vec<usize>> {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence()
    {
        return None;
    }
    let n = g.order();
    let mut m = Matcher {
        g,
        h,
        order: matching_order(g),
        map: vec![usize::MAX; n],
        used: 0,
    };
    for &(v, w) in fixed {
        if m.used & bit(w) != 0 || g.degree(v) != h.degree(w) || !m.consistent(v, w) {
            return None;
        }
        m.map[v] = w;
        m.used |= bit(w);
    }
    m.extend(0).then_some(m.map)
}

pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    find_isomorphism_with(g, h, &[])
}

/// `|Aut(g)|` via orbit-stabiliser: the product over a base of the orbit size
/// of each base point in the pointwise stabiliser of the earlier ones.
pub fn automorphism_count(g: &Graph) -> u128 {
    let n = g.order();
    let mut base: Vec<(usize, usize)> = Vec::with_capacity(n);
    let mut total: u128 = 1;
    for v in 0..n {
        let fixed_mask: u64 = base.iter().fold(0, |m, &(x, _)| m | bit(x));
        let mut orbit = 1u128;
        for w in 0..n {
            if w == v || fixed_mask & bit(w) != 0 || g.degree(w) != g.degree(v) {
                continue;
            }
            let mut constraint = base.clone();
            constraint.push((v, w));
            if find_isomorphism_with(g, g, &constraint).is_some() {
                orbit += 1;
            }
        }
        total *= orbit;
        base.push((v, v));
    }
    total
}
