//! Builders for the named graph families and for the extremal and witness
//! graphs (`G_1`..`G_6`, the star witness, the odd-`p` book attainers).
//!
//! Every builder is deterministic. Where only existence matters (regular
//! graphs, the removed matchings) the realisation is fixed: hamiltonian
//! regular graphs are circulants, removed matchings are taken from the
//! hamiltonian cycle `0-1-2-...` as `{0,1}, {2,3}, ...`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderOverflow(n))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    check_order(n)?;
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::range(format!(
            "cycle needs at least 3 vertices, got {n}"
        )));
    }
    check_order(n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{1,p}`, centre 0.
pub fn star(p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(Error::range("star needs at least one leaf"));
    }
    check_order(p + 1)?;
    let edges: Vec<_> = (1..=p).map(|i| (0, i)).collect();
    Graph::from_edges(p + 1, &edges)
}

/// `B_p`: base edge `{0, 1}`, page vertices `2..p+2`.
pub fn book(p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(Error::range("book needs at least one page"));
    }
    check_order(p + 2)?;
    let mut g = Graph::empty(p + 2)?;
    g.add_edge(0, 1);
    for i in 2..p + 2 {
        g.add_edge(0, i);
        g.add_edge(1, i);
    }
    Ok(g)
}

/// `qK_2`.
pub fn matching(q: usize) -> Result<Graph> {
    check_order(2 * q)?;
    let edges: Vec<_> = (0..q).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(2 * q, &edges)
}

pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    Graph::empty(s)?.join(&Graph::empty(t)?)
}

/// `K_n - PM`, removing the matching `{0,1}, {2,3}, ...`.
pub fn complete_minus_pm(n: usize) -> Result<Graph> {
    if !n.is_multiple_of(2) {
        return Err(Error::parity(format!("K_n - PM needs even n, got {n}")));
    }
    let mut g = Graph::complete(n)?;
    for i in (0..n).step_by(2) {
        g.remove_edge(i, i + 1);
    }
    Ok(g)
}

/// Circulant on `0..n`: `i ~ j` iff `±(i - j) mod n` is a step.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for &s in steps {
        if s == 0 || s > n / 2 {
            return Err(Error::range(format!(
                "circulant step {s} outside 1..={}",
                n / 2
            )));
        }
        for i in 0..n {
            g.add_edge(i, (i + s) % n);
        }
    }
    Ok(g)
}

/// A `k`-regular graph of order `n`, hamiltonian for `k >= 2`.
///
/// Even `k` uses steps `1..=k/2`; odd `k` (hence even `n`) adds the diameter
/// step `n/2`.
pub fn regular_graph(k: usize, n: usize) -> Result<Graph> {
    if k < 1 || k + 1 > n {
        return Err(Error::range(format!(
            "regular graph needs 1 <= k <= n-1 (k={k}, n={n})"
        )));
    }
    if !(k * n).is_multiple_of(2) {
        return Err(Error::parity(format!(
            "no {k}-regular graph of order {n}: kn is odd"
        )));
    }
    let mut steps: Vec<usize> = (1..=k / 2).collect();
    if k % 2 == 1 {
        steps.push(n / 2);
    }
    circulant(n, &steps)
}

/// Largest size of an order-`n` graph with maximum degree at most `d`.
pub fn bounded_degree_size(n: usize, d: usize) -> usize {
    if n % 2 == 1 && d % 2 == 1 {
        (n * d - 1) / 2
    } else {
        n * d / 2
    }
}

/// Deletes `{0,1}, {2,3}, ..., {2m-2, 2m-1}` from a circulant containing
/// step 1 and attaches a new last vertex to the `2m` freed endpoints.
fn open_matching_and_attach(r: &Graph, m: usize) -> Result<Graph> {
    let n = r.order() + 1;
    let mut g = r.disjoint_union(&Graph::empty(1)?)?;
    for i in 0..m {
        let (x, y) = (2 * i, 2 * i + 1);
        debug_assert!(g.has_edge(x, y));
        g.remove_edge(x, y);
        g.add_edge(n - 1, x);
        g.add_edge(n - 1, y);
    }
    Ok(g)
}

/// A graph of order `n` with maximum degree at most `d` and the largest
/// possible size.
pub fn bounded_degree_max(n: usize, d: usize) -> Result<Graph> {
    if d < 1 || d + 1 > n {
        return Err(Error::range(format!("need 1 <= d <= n-1 (n={n}, d={d})")));
    }
    if n.is_multiple_of(2) || d.is_multiple_of(2) {
        return regular_graph(d, n);
    }
    if d == 1 {
        return matching((n - 1) / 2)?.disjoint_union(&Graph::empty(1)?);
    }
    open_matching_and_attach(&regular_graph(d, n - 1)?, (d - 1) / 2)
}

/// Order `n`, size one above the star Turán number, degree sequence
/// `p, p-1, ..., p-1`: the unique `K_{1,p}` sits at the last vertex.
pub fn star_witness(p: usize, n: usize) -> Result<Graph> {
    if !p.is_multiple_of(2) {
        return Err(Error::parity(format!("star witness needs even p, got {p}")));
    }
    if n.is_multiple_of(2) {
        return Err(Error::parity(format!("star witness needs odd n, got {n}")));
    }
    if p + 1 < 5 || n < p + 1 {
        return Err(Error::range(format!(
            "star witness needs n >= p+1 >= 5 (p={p}, n={n})"
        )));
    }
    open_matching_and_attach(&regular_graph(p - 1, n - 1)?, p / 2)
}

/// Named extremal and witness graphs for books.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// `K_{p+2} - PM`, even `p`.
    G1,
    /// `K̄_3 ∨ (K_p - PM)`, even `p`.
    G2,
    /// `K_1 ∨ (K_{p+1} - PM)`, odd `p`.
    G3,
    /// `K_{p+3} - PM`, odd `p`.
    G4,
    /// `K_2 ∨ (K_p - PM)`, even `p`.
    G5,
    /// `(K_1 + K_2) ∨ (K_p - PM)`, even `p`.
    G6,
    /// `K_3 ∨ (K_{p-1} - PM)`, odd `p >= 3`.
    T4Small,
    /// `K_2 ∨ (K_{p+1} - PM)`, odd `p`.
    T4Large,
}

impl Witness {
    pub const ALL: [Witness; 8] = [
        Witness::G1,
        Witness::G2,
        Witness::G3,
        Witness::G4,
        Witness::G5,
        Witness::G6,
        Witness::T4Small,
        Witness::T4Large,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Witness::G1 => "g1",
            Witness::G2 => "g2",
            Witness::G3 => "g3",
            Witness::G4 => "g4",
            Witness::G5 => "g5",
            Witness::G6 => "g6",
            Witness::T4Small => "t4_small",
            Witness::T4Large => "t4_large",
        }
    }

    fn needs_even_p(self) -> bool {
        matches!(self, Witness::G1 | Witness::G2 | Witness::G5 | Witness::G6)
    }
}

impl FromStr for Witness {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = match s {
            "theorem4_attainer_small" => "t4_small",
            "theorem4_attainer_large" => "t4_large",
            other => other,
        };
        Witness::ALL
            .into_iter()
            .find(|w| w.name() == s)
            .ok_or_else(|| Error::Construction(format!("unknown witness {s:?}")))
    }
}

pub fn witness(which: Witness, p: usize) -> Result<Graph> {
    if p < 1 {
        return Err(Error::range("p must be positive"));
    }
    if which.needs_even_p() != p.is_multiple_of(2) {
        let want = if which.needs_even_p() { "even" } else { "odd" };
        return Err(Error::parity(format!(
            "{} needs {want} p, got {p}",
            which.name()
        )));
    }
    match which {
        Witness::G1 => complete_minus_pm(p + 2),
        Witness::G2 => Graph::empty(3)?.join(&complete_minus_pm(p)?),
        Witness::G3 => Graph::empty(1)?.join(&complete_minus_pm(p + 1)?),
        Witness::G4 => complete_minus_pm(p + 3),
        Witness::G5 => Graph::complete(2)?.join(&complete_minus_pm(p)?),
        Witness::G6 => {
            let k1_k2 = Graph::empty(1)?.disjoint_union(&Graph::complete(2)?)?;
            k1_k2.join(&complete_minus_pm(p)?)
        }
        Witness::T4Small => {
            if p < 3 {
                return Err(Error::range("t4_small needs p >= 3"));
            }
            Graph::complete(3)?.join(&complete_minus_pm(p - 1)?)
        }
        Witness::T4Large => Graph::complete(2)?.join(&complete_minus_pm(p + 1)?),
    }
}

/// A parsed construction string such as `g5:p=4`, `circulant:n=6,s=1+3` or
/// `book:p=5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Complete { n: usize },
    Empty { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    Star { p: usize },
    Book { p: usize },
    Matching { q: usize },
    CompleteBipartite { s: usize, t: usize },
    CompleteMinusPm { n: usize },
    Circulant { n: usize, steps: Vec<usize> },
    Regular { k: usize, n: usize },
    BoundedDegreeMax { n: usize, d: usize },
    StarWitness { p: usize, n: usize },
    Witness { which: Witness, p: usize },
}

impl Construction {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Construction::Complete { n } => Graph::complete(n),
            Construction::Empty { n } => Graph::empty(n),
            Construction::Path { n } => path(n),
            Construction::Cycle { n } => cycle(n),
            Construction::Star { p } => star(p),
            Construction::Book { p } => book(p),
            Construction::Matching { q } => matching(q),
            Construction::CompleteBipartite { s, t } => complete_bipartite(s, t),
            Construction::CompleteMinusPm { n } => complete_minus_pm(n),
            Construction::Circulant { n, ref steps } => circulant(n, steps),
            Construction::Regular { k, n } => regular_graph(k, n),
            Construction::BoundedDegreeMax { n, d } => bounded_degree_max(n, d),
            Construction::StarWitness { p, n } => star_witness(p, n),
            Construction::Witness { which, p } => witness(which, p),
        }
    }
}

struct Params<'a> {
    kind: &'a str,
    pairs: Vec<(&'a str, &'a str)>,
}

impl<'a> Params<'a> {
    fn get(&self, key: &str) -> Result<&'a str> {
        self.pairs
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| Error::Construction(format!("{} needs parameter {key}", self.kind)))
    }

    fn int(&self, key: &str) -> Result<usize> {
        let v = self.get(key)?;
        v.parse()
            .map_err(|_| Error::Construction(format!("{key}={v} is not a non-negative integer")))
    }

    fn only(&self, allowed: &[&str]) -> Result<()> {
        for (k, _) in &self.pairs {
            if !allowed.contains(k) {
                return Err(Error::Construction(format!(
                    "{} does not take parameter {k}",
                    self.kind
                )));
            }
        }
        Ok(())
    }
}

impl FromStr for Construction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let pairs = rest
            .split(',')
            .filter(|p| !p.is_empty())
            .map(|p| {
                p.split_once('=')
                    .map(|(k, v)| (k.trim(), v.trim()))
                    .ok_or_else(|| Error::Construction(format!("expected key=value, got {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let params = Params { kind, pairs };
        let one = |key: &str| -> Result<usize> {
            params.only(&[key])?;
            params.int(key)
        };
        let two = |a: &str, b: &str| -> Result<(usize, usize)> {
            params.only(&[a, b])?;
            Ok((params.int(a)?, params.int(b)?))
        };
        Ok(match kind {
            "complete" => Construction::Complete { n: one("n")? },
            "empty" => Construction::Empty { n: one("n")? },
            "path" => Construction::Path { n: one("n")? },
            "cycle" => Construction::Cycle { n: one("n")? },
            "star" => Construction::Star { p: one("p")? },
            "book" => Construction::Book { p: one("p")? },
            "matching" => Construction::Matching { q: one("q")? },
            "complete_bipartite" => {
                let (s, t) = two("s", "t")?;
                Construction::CompleteBipartite { s, t }
            }
            "complete_minus_pm" => Construction::CompleteMinusPm { n: one("n")? },
            "circulant" => {
                params.only(&["n", "s"])?;
                let steps = params
                    .get("s")?
                    .split('+')
                    .map(|x| {
                        x.trim()
                            .parse()
                            .map_err(|_| Error::Construction(format!("bad circulant step {x:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()?;
                Construction::Circulant {
                    n: params.int("n")?,
                    steps,
                }
            }
            "regular" => {
                let (k, n) = two("k", "n")?;
                Construction::Regular { k, n }
            }
            "bounded_degree_max" => {
                let (n, d) = two("n", "d")?;
                Construction::BoundedDegreeMax { n, d }
            }
            "star_witness" => {
                let (p, n) = two("p", "n")?;
                Construction::StarWitness { p, n }
            }
            other => {
                let which: Witness = other.parse()?;
                Construction::Witness {
                    which,
                    p: one("p")?,
                }
            }
        })
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Complete { n } => write!(f, "complete:n={n}"),
            Construction::Empty { n } => write!(f, "empty:n={n}"),
            Construction::Path { n } => write!(f, "path:n={n}"),
            Construction::Cycle { n } => write!(f, "cycle:n={n}"),
            Construction::Star { p } => write!(f, "star:p={p}"),
            Construction::Book { p } => write!(f, "book:p={p}"),
            Construction::Matching { q } => write!(f, "matching:q={q}"),
            Construction::CompleteBipartite { s, t } => write!(f, "complete_bipartite:s={s},t={t}"),
            Construction::CompleteMinusPm { n } => write!(f, "complete_minus_pm:n={n}"),
            Construction::Circulant { n, steps } => {
                let s: Vec<String> = steps.iter().map(|x| x.to_string()).collect();
                write!(f, "circulant:n={n},s={}", s.join("+"))
            }
            Construction::Regular { k, n } => write!(f, "regular:k={k},n={n}"),
            Construction::BoundedDegreeMax { n, d } => write!(f, "bounded_degree_max:n={n},d={d}"),
            Construction::StarWitness { p, n } => write!(f, "star_witness:p={p},n={n}"),
            Construction::Witness { which, p } => write!(f, "{}:p={p}", which.name()),
        }
    }
}
