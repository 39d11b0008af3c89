//! Exact answers by exhaustive isomorph-free enumeration: Turán numbers,
//! minimum copy counts at a fixed size, and classification of the graphs
//! with a given number of copies.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::enumerate::{check_envelope, Generator, Node, Pruning};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::pattern::{Pattern, PatternSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub jobs: usize,
    pub override_envelope: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            jobs: 1,
            override_envelope: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exhaustive,
    HeuristicUpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuranResult {
    pub order: usize,
    pub patterns: String,
    pub ex: usize,
    /// Canonical graph6 of every extremal graph, sorted.
    pub extremal: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinCopyResult {
    pub order: usize,
    pub size: usize,
    pub pattern: String,
    pub min_copies: u64,
    /// Canonical graph6 of the graphs attaining the minimum, sorted. For
    /// heuristic results this is the single best graph found.
    pub witnesses: Vec<String>,
    pub method: Method,
}

fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_size(n: usize, e: usize) -> Result<()> {
    if e > pairs(n) {
        Err(Error::range(format!(
            "size {e} exceeds C({n}, 2) = {}",
            pairs(n)
        )))
    } else {
        Ok(())
    }
}

/// Visits every class of order-`n` graphs with exactly `e` edges. When the
/// complement is sparser, classes are generated on the complement side.
fn for_each_of_size(
    n: usize,
    e: usize,
    opts: SearchOptions,
    f: &(dyn Fn(&Graph) + Sync),
) -> Result<()> {
    check_size(n, e)?;
    let m = pairs(n);
    let flip = 2 * e > m;
    let target = if flip { m - e } else { e };
    check_envelope(n, target, Pruning::None, opts.override_envelope)?;
    Generator::new(n, target)
        .jobs(opts.jobs)
        .run(&|node: &Node| {
            if node.graph.size() == target {
                if flip {
                    f(&node.graph.complement());
                } else {
                    f(&node.graph);
                }
            }
            true
        })
}

/// Calls `f` once per isomorphism class of order-`n` graphs whose size lies
/// in `sizes`. `patterns`, when given, restricts to graphs containing none of
/// them; the restriction is applied as a pruning rule.
pub fn enumerate(
    n: usize,
    sizes: std::ops::RangeInclusive<usize>,
    patterns: Option<&PatternSet>,
    opts: SearchOptions,
    f: &(dyn Fn(&Graph) + Sync),
) -> Result<()> {
    let top = (*sizes.end()).min(pairs(n));
    if let (None, true) = (patterns, sizes.start() == sizes.end()) {
        return for_each_of_size(n, top, opts, f);
    }
    let pruning = if patterns.is_some() {
        Pruning::PatternFree
    } else {
        Pruning::None
    };
    check_envelope(n, top, pruning, opts.override_envelope)?;
    Generator::new(n, top).jobs(opts.jobs).run(&|node: &Node| {
        if let Some(set) = patterns {
            if set.occurs_in(&node.graph) {
                return false;
            }
        }
        if sizes.contains(&node.graph.size()) {
            f(&node.graph);
        }
        true
    })
}

/// `ex(n, S)`: the largest size of an order-`n` graph containing no member of
/// `S`, with all extremal graphs.
pub fn turan_number(n: usize, patterns: &PatternSet, opts: SearchOptions) -> Result<TuranResult> {
    check_envelope(n, pairs(n), Pruning::PatternFree, opts.override_envelope)?;
    let best = Mutex::new((0usize, BTreeSet::new()));
    Generator::new(n, pairs(n))
        .jobs(opts.jobs)
        .run(&|node: &Node| {
            if patterns.occurs_in(&node.graph) {
                return false;
            }
            let size = node.graph.size();
            let mut guard = best.lock().expect("result lock");
            if size > guard.0 {
                guard.0 = size;
                guard.1.clear();
            }
            if size == guard.0 {
                guard.1.insert(node.canonical().to_graph6());
            }
            true
        })?;
    let (ex, extremal) = best.into_inner().expect("result lock");
    Ok(TuranResult {
        order: n,
        patterns: patterns.to_string(),
        ex,
        extremal: extremal.into_iter().collect(),
    })
}

/// Minimum number of copies of `h` over all graphs of order `n` and size `e`,
/// with every graph attaining it.
///
/// On the sparse side the generator climbs from the empty graph and prunes any
/// graph that already has more copies than the incumbent (copy counts never
/// drop when edges are added). On the dense side it enumerates complements
/// without pruning.
pub fn min_copies(n: usize, e: usize, h: &Pattern, opts: SearchOptions) -> Result<MinCopyResult> {
    check_size(n, e)?;
    let incumbent = AtomicU64::new(u64::MAX);
    let best = Mutex::new((u64::MAX, BTreeSet::new()));
    let record = |g: &Graph, count: u64| {
        let mut guard = best.lock().expect("result lock");
        if count < guard.0 {
            guard.0 = count;
            guard.1.clear();
            incumbent.fetch_min(count, Ordering::Relaxed);
        }
        if count == guard.0 {
            guard.1.insert(canonical_form(g).to_graph6());
        }
    };
    if 2 * e > pairs(n) {
        for_each_of_size(n, e, opts, &|g: &Graph| record(g, h.count(g)))?;
    } else {
        check_envelope(n, e, Pruning::CopyBound, opts.override_envelope)?;
        Generator::new(n, e).jobs(opts.jobs).run(&|node: &Node| {
            let count = h.count(&node.graph);
            if count > incumbent.load(Ordering::Relaxed) {
                return false;
            }
            if node.graph.size() == e {
                record(&node.graph, count);
            }
            true
        })?;
    }
    let (min, witnesses) = best.into_inner().expect("result lock");
    Ok(MinCopyResult {
        order: n,
        size: e,
        pattern: h.name().to_string(),
        min_copies: min,
        witnesses: witnesses.into_iter().collect(),
        method: Method::Exhaustive,
    })
}

/// Every isomorphism class of order-`n`, size-`e` graphs with exactly `k`
/// copies of `h`, as canonical graphs sorted by graph6.
pub fn classify_witnesses(
    n: usize,
    e: usize,
    h: &Pattern,
    k: u64,
    opts: SearchOptions,
) -> Result<Vec<Graph>> {
    check_size(n, e)?;
    let found = Mutex::new(BTreeSet::new());
    let keep = |g: &Graph| {
        found
            .lock()
            .expect("result lock")
            .insert(canonical_form(g).to_graph6());
    };
    if 2 * e > pairs(n) {
        for_each_of_size(n, e, opts, &|g: &Graph| {
            if h.count(g) == k {
                keep(g);
            }
        })?;
    } else {
        check_envelope(n, e, Pruning::CopyBound, opts.override_envelope)?;
        Generator::new(n, e).jobs(opts.jobs).run(&|node: &Node| {
            let count = h.count(&node.graph);
            if count > k {
                return false;
            }
            if node.graph.size() == e && count == k {
                keep(&node.graph);
            }
            true
        })?;
    }
    found
        .into_inner()
        .expect("result lock")
        .into_iter()
        .map(|s| graph6::decode(&s).map_err(Error::from))
        .collect()
}
