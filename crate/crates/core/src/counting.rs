//! Exact copy counters. A copy of `H` in `G` is a subgraph of `G` isomorphic
//! to `H`, counted once per (vertex set, edge set).

use crate::error::{Error, Result};
use crate::graph::{bit, bits, Graph};
use crate::pattern::Pattern;

/// `C(n, k)` with overflow detection.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) / (i + 1) is exact at every step.
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::Overflow { n, k });
        }
    }
    Ok(acc as u64)
}

fn check_p(p: usize, what: &str) -> Result<()> {
    if p < 2 {
        Err(Error::range(format!(
            "{what} closed form needs p >= 2 (got {p}); use the generic counter"
        )))
    } else {
        Ok(())
    }
}

/// Copies of `K_{1,p}`: `Σ_v C(deg v, p)`.
pub fn count_star(g: &Graph, p: usize) -> Result<u64> {
    check_p(p, "star")?;
    let mut total = 0u64;
    for v in 0..g.order() {
        let c = binomial(g.degree(v) as u64, p as u64)?;
        total = total.checked_add(c).ok_or(Error::Overflow {
            n: g.degree(v) as u64,
            k: p as u64,
        })?;
    }
    Ok(total)
}

/// Copies of `B_p`: `Σ_{uv ∈ E} C(codeg(u, v), p)`.
pub fn count_book(g: &Graph, p: usize) -> Result<u64> {
    check_p(p, "book")?;
    let mut total = 0u64;
    for (u, v) in g.edges() {
        let cd = g.codegree_unchecked(u, v) as u64;
        let c = binomial(cd, p as u64)?;
        total = total
            .checked_add(c)
            .ok_or(Error::Overflow { n: cd, k: p as u64 })?;
    }
    Ok(total)
}

/// Copies of `C_4`: half of `Σ_{u<v} C(codeg(u, v), 2)`, since every 4-cycle
/// has two diagonals.
pub fn count_c4(g: &Graph) -> u64 {
    let rows = g.rows();
    let mut twice = 0u64;
    for v in 1..rows.len() {
        for u in 0..v {
            let c = (rows[u] & rows[v]).count_ones() as u64;
            twice += c * c.saturating_sub(1) / 2;
        }
    }
    twice / 2
}

pub(crate) fn has_c4(g: &Graph) -> bool {
    let rows = g.rows();
    (1..rows.len()).any(|v| (0..v).any(|u| (rows[u] & rows[v]).count_ones() >= 2))
}

/// Triangles: a third of `Σ_{uv ∈ E} codeg(u, v)`.
pub fn count_triangles(g: &Graph) -> u64 {
    let rows = g.rows();
    let mut total = 0u64;
    for v in 0..rows.len() {
        for u in bits(rows[v] & (bit(v) - 1)) {
            total += (rows[u] & rows[v]).count_ones() as u64;
        }
    }
    total / 3
}

pub(crate) fn max_edge_codegree(g: &Graph) -> usize {
    let rows = g.rows();
    let mut best = 0;
    for v in 0..rows.len() {
        for u in bits(rows[v] & (bit(v) - 1)) {
            best = best.max((rows[u] & rows[v]).count_ones() as usize);
        }
    }
    best
}

/// Backtracking over injective edge-preserving maps `H -> G`.
struct Embedder<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    /// For each position in `order`, the earlier positions adjacent to it in H.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
    image: Vec<usize>,
}

impl<'a> Embedder<'a> {
    fn new(g: &'a Graph, h: &Graph) -> Self {
        let n = h.order();
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let v = (0..n)
                .filter(|&v| placed & bit(v) == 0)
                .max_by_key(|&v| ((h.neighbors(v) & placed).count_ones(), h.degree(v), n - v))
                .expect("unplaced vertex");
            placed |= bit(v);
            order.push(v);
        }
        let back = (0..n)
            .map(|i| (0..i).filter(|&j| h.has_edge(order[i], order[j])).collect())
            .collect();
        let degree = order.iter().map(|&v| h.degree(v)).collect();
        Embedder {
            g,
            order,
            back,
            degree,
            image: vec![0; n],
        }
    }

    fn candidates(&self, idx: usize, used: u64) -> u64 {
        let mut cand = self.g.vertex_mask() & !used;
        for &j in &self.back[idx] {
            cand &= self.g.neighbors(self.image[j]);
        }
        cand
    }

    fn count(&mut self, idx: usize, used: u64) -> u64 {
        if idx == self.order.len() {
            return 1;
        }
        let mut total = 0;
        for w in bits(self.candidates(idx, used)) {
            if self.g.degree(w) < self.degree[idx] {
                continue;
            }
            self.image[idx] = w;
            total += self.count(idx + 1, used | bit(w));
        }
        total
    }

    fn exists(&mut self, idx: usize, used: u64) -> bool {
        if idx == self.order.len() {
            return true;
        }
        for w in bits(self.candidates(idx, used)) {
            if self.g.degree(w) < self.degree[idx] {
                continue;
            }
            self.image[idx] = w;
            if self.exists(idx + 1, used | bit(w)) {
                return true;
            }
        }
        false
    }
}

/// Number of injective edge-preserving maps `H -> G`.
pub fn count_embeddings(g: &Graph, h: &Graph) -> u64 {
    if h.order() > g.order() {
        return 0;
    }
    Embedder::new(g, h).count(0, 0)
}

pub(crate) fn has_embedding(g: &Graph, h: &Graph) -> bool {
    h.order() <= g.order() && Embedder::new(g, h).exists(0, 0)
}

/// Copies of an arbitrary pattern: embeddings divided by `|Aut(H)|`.
pub fn count_generic(g: &Graph, h: &Pattern) -> u64 {
    let embeddings = count_embeddings(g, h.graph());
    debug_assert_eq!(embeddings % h.automorphism_count(), 0);
    embeddings / h.automorphism_count()
}

/// True if `g` contains a copy of at least one pattern.
pub fn contains_any(g: &Graph, patterns: &[Pattern]) -> bool {
    patterns.iter().any(|p| p.occurs_in(g))
}
