//! Isomorph-free generation of graphs of a fixed order by canonical
//! augmentation on edges.
//!
//! A graph `H` on `m` edges is accepted as a child of `G = H - uv` only when
//! `uv` is the canonical deletion of `H`: the edge with the largest
//! `(min degree, max degree, codegree)` key, ties broken by position under the
//! canonical labelling of `H`. Every class then has exactly one generating
//! parent class, so no history is needed; children of one parent are
//! deduplicated locally.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_labeling, CanonicalLabel, Labeling};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Number of unlabelled graphs of each order 0..=13.
pub const GRAPH_CLASSES: [u64; 14] = [
    1,
    1,
    2,
    4,
    11,
    34,
    156,
    1044,
    12346,
    274668,
    12005168,
    1018997864,
    165091172592,
    50502031367952,
];

/// Largest order whose full, unpruned enumeration is accepted by default.
pub const FULL_ENUMERATION_LIMIT: usize = 10;
/// Largest order accepted by default for pruned searches.
pub const PRUNED_ENUMERATION_LIMIT: usize = 11;
/// At order 11, unpruned enumeration is accepted only up to this many edges
/// (on the sparser side of the complement).
pub const ORDER_11_UNPRUNED_SIZE_LIMIT: usize = 10;

/// How much of the search space a task may cut away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    /// Every class up to the target size is visited.
    None,
    /// Pattern-containing graphs (and all their supergraphs) are skipped.
    PatternFree,
    /// Graphs whose copy count exceeds a bound are skipped.
    CopyBound,
}

fn estimate(n: usize) -> String {
    match GRAPH_CLASSES.get(n) {
        Some(c) => format!("{c} isomorphism classes at order {n}"),
        None => format!(
            "more than {} isomorphism classes at order {n}",
            GRAPH_CLASSES[13]
        ),
    }
}

/// Rejects tasks outside the desk-scale envelope unless overridden.
///
/// `effective_size` is the number of edges the generator actually climbs to
/// (after any complement trick).
pub fn check_envelope(
    order: usize,
    effective_size: usize,
    pruning: Pruning,
    override_envelope: bool,
) -> Result<()> {
    if override_envelope {
        return Ok(());
    }
    let refuse = |reason: String| {
        Err(Error::Infeasible {
            reason,
            estimate: estimate(order),
        })
    };
    match pruning {
        Pruning::None if order > PRUNED_ENUMERATION_LIMIT => {
            refuse(format!("exhaustive enumeration at order {order}"))
        }
        Pruning::None
            if order > FULL_ENUMERATION_LIMIT && effective_size > ORDER_11_UNPRUNED_SIZE_LIMIT =>
        {
            refuse(format!(
                "unpruned enumeration at order {order} up to {effective_size} edges"
            ))
        }
        _ if order > PRUNED_ENUMERATION_LIMIT => {
            refuse(format!("exhaustive pruned search at order {order}"))
        }
        _ => Ok(()),
    }
}

/// A generated class representative with its canonical labelling.
#[derive(Clone, Debug)]
pub struct Node {
    pub graph: Graph,
    pub labeling: Labeling,
}

impl Node {
    pub fn root(order: usize) -> Result<Self> {
        let graph = Graph::empty(order)?;
        let labeling = canonical_labeling(&graph);
        Ok(Node { graph, labeling })
    }

    pub fn canonical(&self) -> &CanonicalLabel {
        &self.labeling.canonical
    }
}

#[inline]
fn edge_key(g: &Graph, u: usize, v: usize) -> (usize, usize, usize) {
    let (du, dv) = (g.degree(u), g.degree(v));
    (du.min(dv), du.max(dv), g.codegree_unchecked(u, v))
}

#[inline]
fn pair_index(n: usize, u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    a * n + b
}

/// Marks the orbit of the pair `{u, v}` under the group generated by
/// `generators`; returns true if it meets `target`.
fn mark_pair_orbit(
    n: usize,
    generators: &[Vec<u8>],
    u: usize,
    v: usize,
    seen: &mut [bool],
    target: Option<(usize, usize)>,
) -> bool {
    let target = target.map(|(a, b)| pair_index(n, a, b));
    let mut stack = vec![(u, v)];
    seen[pair_index(n, u, v)] = true;
    let mut hit = target == Some(pair_index(n, u, v));
    while let Some((a, b)) = stack.pop() {
        for g in generators {
            let (x, y) = (g[a] as usize, g[b] as usize);
            let idx = pair_index(n, x, y);
            if !seen[idx] {
                seen[idx] = true;
                hit |= target == Some(idx);
                stack.push((x, y));
            }
        }
    }
    hit
}

/// The canonical deletion edge of `h` among `candidates` (all sharing the
/// maximal key).
fn canonical_deletion(lab: &Labeling, candidates: &[(usize, usize)]) -> (usize, usize) {
    *candidates
        .iter()
        .max_by_key(|&&(x, y)| {
            let (px, py) = (lab.perm[x], lab.perm[y]);
            (px.max(py), px.min(py))
        })
        .expect("at least one candidate")
}

/// Children of `node` in the canonical augmentation tree.
pub fn children(node: &Node) -> Vec<Node> {
    let g = &node.graph;
    let n = g.order();
    let gens = &node.labeling.generators;
    let mut seen = vec![false; n * n];
    let mut out: Vec<Node> = Vec::new();
    let mut labels: HashSet<CanonicalLabel> = HashSet::new();
    let mut ties: Vec<(usize, usize)> = Vec::new();

    for (u, v) in g.non_edges() {
        if seen[pair_index(n, u, v)] {
            continue;
        }
        mark_pair_orbit(n, gens, u, v, &mut seen, None);

        let h = g.with_edge(u, v);
        let key = edge_key(&h, u, v);
        ties.clear();
        let mut dominated = false;
        for (x, y) in h.edges() {
            let k = edge_key(&h, x, y);
            if k > key {
                dominated = true;
                break;
            }
            if k == key {
                ties.push((x, y));
            }
        }
        if dominated {
            continue;
        }
        let lab = canonical_labeling(&h);
        if ties.len() > 1 {
            let (a, b) = canonical_deletion(&lab, &ties);
            if (a, b) != (u.min(v), u.max(v)) {
                let mut orbit_seen = vec![false; n * n];
                let same_orbit =
                    mark_pair_orbit(n, &lab.generators, u, v, &mut orbit_seen, Some((a, b)));
                if !same_orbit && canonical_form(&h.without_edge(a, b)) != node.labeling.canonical {
                    continue;
                }
            }
        }
        if labels.insert(lab.canonical.clone()) {
            out.push(Node {
                graph: h,
                labeling: lab,
            });
        }
    }
    out
}

/// Decides per generated class whether its supergraphs are explored.
pub trait Visitor: Sync {
    /// Called once per isomorphism class reached; returning `false` prunes
    /// every extension of `node`.
    fn visit(&self, node: &Node) -> bool;
}

impl<F: Fn(&Node) -> bool + Sync> Visitor for F {
    fn visit(&self, node: &Node) -> bool {
        self(node)
    }
}

/// Depth-first canonical augmentation from the empty graph of `order`,
/// visiting classes with at most `max_size` edges.
#[derive(Clone, Debug)]
pub struct Generator {
    pub order: usize,
    pub max_size: usize,
    pub jobs: usize,
}

impl Generator {
    pub fn new(order: usize, max_size: usize) -> Self {
        Generator {
            order,
            max_size,
            jobs: 1,
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    fn dfs<V: Visitor + ?Sized>(&self, node: &Node, visitor: &V) {
        if !visitor.visit(node) || node.graph.size() >= self.max_size {
            return;
        }
        for child in children(node) {
            self.dfs(&child, visitor);
        }
    }

    /// Runs the generator. With more than one job, the tree is expanded
    /// breadth-first until there are enough subtrees to share out, then each
    /// subtree is searched depth-first on a worker.
    pub fn run<V: Visitor + ?Sized>(&self, visitor: &V) -> Result<()> {
        let root = Node::root(self.order)?;
        if self.jobs <= 1 {
            self.dfs(&root, visitor);
            return Ok(());
        }
        let mut frontier = vec![root];
        while frontier.len() < 8 * self.jobs {
            let mut next = Vec::new();
            let mut expanded = false;
            for node in &frontier {
                if !visitor.visit(node) || node.graph.size() >= self.max_size {
                    continue;
                }
                expanded = true;
                next.extend(children(node));
            }
            frontier = next;
            if !expanded || frontier.is_empty() {
                return Ok(());
            }
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| Error::range(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            frontier.par_iter().for_each(|node| self.dfs(node, visitor));
        });
        Ok(())
    }
}

/// Number of isomorphism classes of order-`n` graphs with exactly `size`
/// edges.
pub fn count_classes(order: usize, size: usize) -> Result<u64> {
    use std::sync::atomic::{AtomicU64, Ordering};
    let count = AtomicU64::new(0);
    Generator::new(order, size).run(&|node: &Node| {
        if node.graph.size() == size {
            count.fetch_add(1, Ordering::Relaxed);
        }
        true
    })?;
    Ok(count.into_inner())
}
