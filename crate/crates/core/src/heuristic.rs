//! Edge-swap simulated annealing for low-copy-count graphs at a fixed order
//! and size. Results are upper bounds only.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_form;
use crate::counting::{binomial, count_generic};
use crate::error::{Error, Result};
use crate::exact::{Method, MinCopyResult, SearchOptions};
use crate::graph::{Graph, MAX_ORDER};
use crate::pattern::{Pattern, PatternSet};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub seed: u64,
    pub max_steps: u64,
    pub restarts: u32,
    pub initial_temperature: f64,
    /// Temperature multiplier applied after every step.
    pub decay: f64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            seed: 2024,
            max_steps: 200_000,
            restarts: 20,
            initial_temperature: 2.0,
            decay: 0.99997,
        }
    }
}

impl SearchBudget {
    pub fn tiny(seed: u64) -> Self {
        SearchBudget {
            seed,
            max_steps: 5_000,
            restarts: 4,
            initial_temperature: 1.0,
            decay: 0.999,
        }
    }

    /// Parses `steps=N,restarts=R,t0=T,decay=D`; omitted keys keep defaults.
    pub fn parse_overrides(mut self, spec: &str) -> Result<Self> {
        for part in spec.split(',').filter(|s| !s.trim().is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::range(format!("budget entry {part:?} is not key=value")))?;
            let bad = || Error::range(format!("bad budget value {v:?} for {k}"));
            match k.trim() {
                "steps" => self.max_steps = v.trim().parse().map_err(|_| bad())?,
                "restarts" => self.restarts = v.trim().parse().map_err(|_| bad())?,
                "t0" => self.initial_temperature = v.trim().parse().map_err(|_| bad())?,
                "decay" => self.decay = v.trim().parse().map_err(|_| bad())?,
                "seed" => self.seed = v.trim().parse().map_err(|_| bad())?,
                other => return Err(Error::range(format!("unknown budget key {other:?}"))),
            }
        }
        Ok(self)
    }
}

/// `Σ_{u<v} C(codeg(u, v), 2)`, used to order graphs with equal copy counts.
fn codegree_potential(g: &Graph) -> u64 {
    let rows = g.rows();
    let mut total = 0;
    for v in 1..rows.len() {
        for u in 0..v {
            let c = (rows[u] & rows[v]).count_ones() as u64;
            total += c * c.saturating_sub(1) / 2;
        }
    }
    total
}

struct State {
    graph: Graph,
    edges: Vec<(usize, usize)>,
    non_edges: Vec<(usize, usize)>,
    copies: u64,
    potential: u64,
}

impl State {
    fn new(graph: Graph, h: &Pattern) -> Self {
        State {
            copies: h.count(&graph),
            potential: codegree_potential(&graph),
            edges: graph.edges(),
            non_edges: graph.non_edges(),
            graph,
        }
    }

    fn key(&self) -> (u64, u64) {
        (self.copies, self.potential)
    }
}

fn random_graph(n: usize, e: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut all = Graph::empty(n).expect("order checked").non_edges();
    for i in 0..e {
        let j = rng.gen_range(i..all.len());
        all.swap(i, j);
    }
    Graph::from_edges(n, &all[..e]).expect("valid pairs")
}

/// Extends `seed_graph` to order `n` with isolated vertices, then adds edges
/// one at a time, each time picking the non-edge that creates the fewest new
/// copies (ties by codegree potential, then by position).
fn greedy_extension(seed_graph: &Graph, n: usize, e: usize, h: &Pattern) -> Option<Graph> {
    if seed_graph.order() > n || seed_graph.size() > e {
        return None;
    }
    let pad = Graph::empty(n - seed_graph.order()).ok()?;
    let mut g = seed_graph.disjoint_union(&pad).ok()?;
    while g.size() < e {
        let (u, v) = g.non_edges().into_iter().min_by_key(|&(u, v)| {
            let t = g.with_edge(u, v);
            (h.count(&t), codegree_potential(&t))
        })?;
        g.add_edge(u, v);
    }
    Some(g)
}

fn anneal(mut state: State, h: &Pattern, budget: &SearchBudget, rng: &mut ChaCha8Rng) -> Graph {
    let mut best = state.graph.clone();
    let mut best_key = state.key();
    let mut temperature = budget.initial_temperature;
    if state.edges.is_empty() || state.non_edges.is_empty() {
        return best;
    }
    for _ in 0..budget.max_steps {
        if best_key.0 == 0 {
            break;
        }
        let i = rng.gen_range(0..state.edges.len());
        let j = rng.gen_range(0..state.non_edges.len());
        let (a, b) = state.edges[i];
        let (c, d) = state.non_edges[j];
        state.graph.remove_edge(a, b);
        state.graph.add_edge(c, d);
        let copies = h.count(&state.graph);
        let potential = codegree_potential(&state.graph);
        let delta = copies as f64 - state.copies as f64;
        let accept = if delta < 0.0 {
            true
        } else if delta == 0.0 {
            potential < state.potential || rng.gen_bool(0.5)
        } else {
            temperature > 0.0 && rng.gen::<f64>() < (-delta / temperature).exp()
        };
        if accept {
            state.edges[i] = (c, d);
            state.non_edges[j] = (a, b);
            state.copies = copies;
            state.potential = potential;
            if state.key() < best_key {
                best_key = state.key();
                best = state.graph.clone();
            }
        } else {
            state.graph.remove_edge(c, d);
            state.graph.add_edge(a, b);
        }
        temperature *= budget.decay;
    }
    best
}

/// Largest order used for the exhaustive warm start of [`default_hint`].
pub const HINT_ORDER_LIMIT: usize = 9;

/// Warm start for restart 0: an extremal `h`-free graph of order
/// `min(n - 1, HINT_ORDER_LIMIT)`, found exhaustively.
pub fn default_hint(n: usize, h: &Pattern, opts: SearchOptions) -> Option<Graph> {
    let order = n.checked_sub(1)?.min(HINT_ORDER_LIMIT);
    if order < h.graph().order() {
        return None;
    }
    let r = crate::exact::turan_number(order, &PatternSet::single(h.clone()), opts).ok()?;
    crate::graph6::decode(r.extremal.first()?).ok()
}

/// Best graph found by annealing over `budget.restarts` independent restarts.
///
/// Restart `r` draws from the ChaCha stream `r` of `budget.seed`, so results
/// do not depend on `jobs`. Restart 0 starts from `hint` (greedily extended
/// to order `n` and size `e`) when one is given.
pub fn search_min_copies(
    n: usize,
    e: usize,
    h: &Pattern,
    budget: &SearchBudget,
    hint: Option<&Graph>,
    jobs: usize,
) -> Result<MinCopyResult> {
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow(n));
    }
    let pairs = binomial(n as u64, 2)? as usize;
    if e > pairs {
        return Err(Error::range(format!(
            "size {e} exceeds C({n}, 2) = {pairs}"
        )));
    }
    let run = |restart: u32| -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        rng.set_stream(u64::from(restart));
        let start = match (restart, hint) {
            (0, Some(seed_graph)) => greedy_extension(seed_graph, n, e, h),
            _ => None,
        }
        .unwrap_or_else(|| random_graph(n, e, &mut rng));
        anneal(State::new(start, h), h, budget, &mut rng)
    };
    let restarts = budget.restarts.max(1);
    let results: Vec<Graph> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::range(format!("cannot start worker pool: {e}")))?;
        pool.install(|| (0..restarts).into_par_iter().map(run).collect())
    } else {
        (0..restarts).map(run).collect()
    };
    let (copies, label) = results
        .iter()
        .map(|g| (h.count(g), canonical_form(g)))
        .min()
        .expect("at least one restart");
    let recount = count_generic(label.graph(), h);
    assert_eq!(recount, copies, "closed-form and generic counts disagree");
    Ok(MinCopyResult {
        order: n,
        size: e,
        pattern: h.name().to_string(),
        min_copies: copies,
        witnesses: vec![label.to_graph6()],
        method: Method::HeuristicUpperBound,
    })
}
