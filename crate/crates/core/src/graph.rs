//! Small simple undirected graphs stored as one 64-bit neighbourhood mask per
//! vertex.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported order: one machine word per row, single-byte graph6 header.
pub const MAX_ORDER: usize = 62;

/// A simple undirected graph on vertices `0..order`.
///
/// Row `v` holds the bitmask of `N(v)`. Rows are kept symmetric with an
/// empty diagonal by every constructor and mutator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask in increasing order.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

impl Graph {
    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow(order));
        }
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    pub fn complete(order: usize) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        let full = g.vertex_mask();
        for v in 0..order {
            g.rows[v] = full & !bit(v);
        }
        Ok(g)
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::range(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating symmetry and the diagonal.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let order = rows.len();
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow(order));
        }
        let g = Graph { order, rows };
        let mask = g.vertex_mask();
        for v in 0..order {
            let r = g.rows[v];
            if r & !mask != 0 || r & bit(v) != 0 {
                return Err(Error::range(format!(
                    "row {v} is not a valid neighbourhood"
                )));
            }
            for w in bits(r) {
                if g.rows[w] & bit(v) == 0 {
                    return Err(Error::range(format!(
                        "adjacency not symmetric at ({v}, {w})"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        Graph {
            order: rows.len(),
            rows,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Mask with one bit per vertex.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        (1u64 << self.order) - 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] & bit(v) != 0
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order && v < self.order);
        self.rows[u] |= bit(v);
        self.rows[v] |= bit(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !bit(v);
        self.rows[v] &= !bit(u);
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u` (graph6 column order).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for v in 0..self.order {
            for u in bits(self.rows[v] & (bit(v) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in the same order as [`Graph::edges`].
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.order {
            for u in bits(!self.rows[v] & (bit(v) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::range("codegree of a vertex with itself"));
        }
        Ok(self.codegree_unchecked(u, v))
    }

    #[inline]
    pub fn codegree_unchecked(&self, u: usize, v: usize) -> usize {
        (self.rows[u] & self.rows[v]).count_ones() as usize
    }

    pub fn complement(&self) -> Graph {
        let mask = self.vertex_mask();
        let rows = (0..self.order)
            .map(|v| !self.rows[v] & mask & !bit(v))
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Disjoint union `self + other`; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let order = self.order + other.order;
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow(order));
        }
        let shift = self.order;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << shift));
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Join `self ∨ other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = self.vertex_mask();
        let right = other.vertex_mask() << self.order;
        for v in 0..self.order {
            g.rows[v] |= right;
        }
        for v in self.order..g.order {
            g.rows[v] |= left;
        }
        Ok(g)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.order,
            "permutation length must equal the order"
        );
        let mut rows = vec![0u64; self.order];
        for v in 0..self.order {
            let mut r = 0u64;
            for w in bits(self.rows[v]) {
                r |= bit(perm[w]);
            }
            rows[perm[v]] = r;
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Subgraph induced by the vertices in `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let keep: Vec<usize> = bits(mask & self.vertex_mask()).collect();
        let mut rows = vec![0u64; keep.len()];
        for (i, &v) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate() {
                if self.has_edge(v, w) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.contains(&0)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::encode(self))
    }
}
