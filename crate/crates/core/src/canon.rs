//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. Every discrete leaf induces a relabelled adjacency matrix and the
//! canonical form is the lexicographically least such matrix over the tree.
//! Automorphisms found by comparing leaves prune sibling subtrees that lie in
//! the same orbit.

use std::fmt;

use crate::graph::{bit, bits, Graph, MAX_ORDER};
use crate::graph6;

/// An ordered partition of the vertex set; each cell is a bitmask.
#[derive(Clone, Copy)]
struct Partition {
    cells: [u64; MAX_ORDER],
    len: usize,
}

impl Partition {
    fn unit(mask: u64) -> Self {
        let mut cells = [0u64; MAX_ORDER];
        let mut len = 0;
        if mask != 0 {
            cells[0] = mask;
            len = 1;
        }
        Partition { cells, len }
    }

    #[inline]
    fn push(&mut self, cell: u64) {
        self.cells[self.len] = cell;
        self.len += 1;
    }

    /// Splits `cells[idx]` into `{v}` followed by the rest of the cell.
    fn individualize(&self, idx: usize, v: usize) -> Self {
        let mut out = Partition {
            cells: [0; MAX_ORDER],
            len: 0,
        };
        for (i, &c) in self.cells[..self.len].iter().enumerate() {
            if i == idx {
                out.push(bit(v));
                out.push(c & !bit(v));
            } else {
                out.push(c);
            }
        }
        out
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }

    fn target_cell(&self) -> Option<usize> {
        self.cells[..self.len]
            .iter()
            .position(|&c| c & c.wrapping_sub(1) != 0)
    }
}

/// Refines `p` to the coarsest equitable partition finer than it.
///
/// Cells split by the number of neighbours in a splitter cell; the pieces are
/// ordered by ascending count, so the result depends only on cell positions.
fn refine(rows: &[u64], p: &mut Partition) {
    let n = rows.len();
    let mut buckets = [0u64; MAX_ORDER + 1];
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < p.len {
            let splitter = p.cells[i];
            let mut next = Partition {
                cells: [0; MAX_ORDER],
                len: 0,
            };
            for &cell in &p.cells[..p.len] {
                if cell & cell.wrapping_sub(1) == 0 {
                    next.push(cell);
                    continue;
                }
                let mut lo = n;
                let mut hi = 0;
                for v in bits(cell) {
                    let k = (rows[v] & splitter).count_ones() as usize;
                    buckets[k] |= bit(v);
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    next.push(cell);
                    continue;
                }
                changed = true;
                for b in &mut buckets[lo..=hi] {
                    if *b != 0 {
                        next.push(*b);
                        *b = 0;
                    }
                }
            }
            *p = next;
            if p.len == n {
                return;
            }
            i += 1;
        }
        if !changed {
            return;
        }
    }
}

/// Adjacency rows of `g` relabelled by the discrete partition `p`.
fn leaf_rows(rows: &[u64], p: &Partition, lab: &mut [u8], out: &mut [u64]) {
    let n = rows.len();
    let mut pos = [0u8; MAX_ORDER];
    for (i, cell) in p.cells[..n].iter().enumerate() {
        let v = cell.trailing_zeros() as u8;
        lab[i] = v;
        pos[v as usize] = i as u8;
    }
    for i in 0..n {
        let mut r = 0u64;
        for w in bits(rows[lab[i] as usize]) {
            r |= bit(pos[w] as usize);
        }
        out[i] = r;
    }
}

struct Leaf {
    lab: Vec<u8>,
    rows: Vec<u64>,
    path: Vec<u8>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    path: Vec<u8>,
    generators: Vec<Vec<u8>>,
    scratch_lab: Vec<u8>,
    scratch_rows: Vec<u64>,
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64]) -> Self {
        let n = rows.len();
        Search {
            rows,
            n,
            first: None,
            best: None,
            path: Vec::with_capacity(n),
            generators: Vec::new(),
            scratch_lab: vec![0; n],
            scratch_rows: vec![0; n],
        }
    }

    /// Records `first.lab[i] -> lab[i]` as an automorphism.
    fn record(&mut self, from: &[u8]) {
        let mut gamma = vec![0u8; self.n];
        for (i, &v) in from.iter().enumerate() {
            gamma[v as usize] = self.scratch_lab[i];
        }
        if gamma.iter().enumerate().any(|(i, &x)| i != x as usize) {
            self.generators.push(gamma);
        }
    }

    /// Returns the depth to backjump to, if an automorphism made the rest of
    /// the current subtree redundant.
    fn leaf(&mut self, p: &Partition) -> Option<usize> {
        leaf_rows(self.rows, p, &mut self.scratch_lab, &mut self.scratch_rows);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab: self.scratch_lab.clone(),
                rows: self.scratch_rows.clone(),
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                rows: leaf.rows.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if first.rows == self.scratch_rows {
            let (lab, jump) = (first.lab.clone(), common_prefix(&first.path, &self.path));
            self.record(&lab);
            return Some(jump);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match self.scratch_rows.as_slice().cmp(best.rows.as_slice()) {
            std::cmp::Ordering::Equal => {
                let (lab, jump) = (best.lab.clone(), common_prefix(&best.path, &self.path));
                self.record(&lab);
                Some(jump)
            }
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    lab: self.scratch_lab.clone(),
                    rows: self.scratch_rows.clone(),
                    path: self.path.clone(),
                });
                None
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    /// True if `v` lies in the orbit of one of `tried` under the generators
    /// that fix the current path pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: u64) -> bool {
        if tried == 0 || self.generators.is_empty() {
            return false;
        }
        let fixing: Vec<&Vec<u8>> = self
            .generators
            .iter()
            .filter(|g| self.path.iter().all(|&x| g[x as usize] == x))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut orbit = bit(v);
        let mut frontier = bit(v);
        while frontier != 0 {
            let mut next = 0u64;
            for x in bits(frontier) {
                for g in &fixing {
                    next |= bit(g[x] as usize);
                }
            }
            frontier = next & !orbit;
            orbit |= next;
            if orbit & tried != 0 {
                return true;
            }
        }
        false
    }

    fn node(&mut self, mut p: Partition) -> Option<usize> {
        refine(self.rows, &mut p);
        if p.is_discrete(self.n) {
            return self.leaf(&p);
        }
        let depth = self.path.len();
        let target = p
            .target_cell()
            .expect("non-discrete partition has a target");
        let mut tried = 0u64;
        for v in bits(p.cells[target]) {
            if self.equivalent_to_tried(v, tried) {
                continue;
            }
            tried |= bit(v);
            self.path.push(v as u8);
            let jump = self.node(p.individualize(target, v));
            self.path.pop();
            if let Some(level) = jump {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }
}

/// Canonical labelling of a graph together with the automorphisms the search
/// discovered along the way.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `perm[v]` is the canonical position of vertex `v`.
    pub perm: Vec<usize>,
    pub canonical: CanonicalLabel,
    /// Automorphisms found during the search, as vertex images. They generate
    /// a subgroup of the automorphism group (usually all of it).
    pub generators: Vec<Vec<u8>>,
}

/// Canonical form: the relabelled graph whose adjacency rows are
/// lexicographically least over the search tree. Two graphs share a label
/// exactly when they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel(Graph);

impl CanonicalLabel {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(&self.0)
    }

    /// Byte form: the graph6 string of the canonical representative.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.to_graph6().into_bytes()
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({})", self.to_graph6())
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

fn initial_partition(g: &Graph) -> Partition {
    let n = g.order();
    let mut by_degree = [0u64; MAX_ORDER];
    for v in 0..n {
        by_degree[g.degree(v)] |= bit(v);
    }
    let mut p = Partition::unit(0);
    for &c in by_degree[..n.max(1)].iter() {
        if c != 0 {
            p.push(c);
        }
    }
    p
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    let n = g.order();
    if n == 0 {
        return Labeling {
            perm: Vec::new(),
            canonical: CanonicalLabel(g.clone()),
            generators: Vec::new(),
        };
    }
    let mut search = Search::new(g.rows());
    search.node(initial_partition(g));
    let best = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0usize; n];
    for (i, &v) in best.lab.iter().enumerate() {
        perm[v as usize] = i;
    }
    Labeling {
        perm,
        canonical: CanonicalLabel(Graph::from_rows_unchecked(best.rows)),
        generators: search.generators,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalLabel {
    canonical_labeling(g).canonical
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h)
}

/// Orbits of the group generated by `generators` on `0..n`, as a
/// representative index per vertex (the least vertex of its orbit).
pub fn vertex_orbits(n: usize, generators: &[Vec<u8>]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for g in generators {
        for (x, &y) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|x| find(&mut parent, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelled_cycle_has_same_label() {
        let c5 = cycle(5);
        let sigma = [3, 0, 4, 1, 2];
        assert_eq!(canonical_form(&c5), canonical_form(&c5.permute(&sigma)));
    }

    #[test]
    fn c6_and_two_triangles_differ() {
        let two_k3 =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_form(&cycle(6)), canonical_form(&two_k3));
    }

    #[test]
    fn complete_graph_search_is_pruned() {
        let k = Graph::complete(20).unwrap();
        let lab = canonical_labeling(&k);
        assert_eq!(lab.canonical.graph(), &k);
        let orbits = vertex_orbits(20, &lab.generators);
        assert!(orbits.iter().all(|&o| o == 0));
    }

    #[test]
    fn canonical_graph_is_isomorphic_image() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (0, 3), (3, 4), (4, 5)]).unwrap();
        let lab = canonical_labeling(&g);
        assert_eq!(&g.permute(&lab.perm), lab.canonical.graph());
        for gamma in &lab.generators {
            let perm: Vec<usize> = gamma.iter().map(|&x| x as usize).collect();
            assert_eq!(g.permute(&perm), g);
        }
    }

    #[test]
    fn trivial_orders() {
        assert_eq!(canonical_form(&Graph::empty(0).unwrap()).graph().order(), 0);
        assert_eq!(canonical_form(&Graph::empty(1).unwrap()).to_graph6(), "@");
    }
}
