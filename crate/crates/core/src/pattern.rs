//! Counting targets: a small graph `H` with its automorphism count, plus the
//! compact pattern language used on the command line.

use std::fmt;
use std::str::FromStr;

use crate::constructions;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::iso::automorphism_count;

/// Which closed-form counter applies to a pattern, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    /// `K_{1,p}` with `p >= 2`.
    Star(usize),
    /// `B_p` with `p >= 2`.
    Book(usize),
    Cycle4,
    Triangle,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern {
    name: String,
    graph: Graph,
    automorphisms: u64,
    kind: PatternKind,
}

impl Pattern {
    /// Wraps an arbitrary graph. Isolated vertices are rejected: they do not
    /// change containment but break the copy semantics.
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Self> {
        Self::with_kind(name, graph, PatternKind::General)
    }

    fn with_kind(name: impl Into<String>, graph: Graph, kind: PatternKind) -> Result<Self> {
        if graph.order() == 0 {
            return Err(Error::Pattern("pattern has no vertices".into()));
        }
        if graph.has_isolated_vertex() {
            return Err(Error::Pattern("pattern has an isolated vertex".into()));
        }
        let automorphisms = u64::try_from(automorphism_count(&graph))
            .map_err(|_| Error::Pattern("automorphism group too large".into()))?;
        Ok(Pattern {
            name: name.into(),
            graph,
            automorphisms,
            kind,
        })
    }

    /// `K_{1,p}`.
    pub fn star(p: usize) -> Result<Self> {
        let g = constructions::star(p)?;
        let kind = if p >= 2 {
            PatternKind::Star(p)
        } else {
            PatternKind::General
        };
        Self::with_kind(format!("K_{{1,{p}}}"), g, kind)
    }

    /// `B_p`: `p` triangles on a common edge.
    pub fn book(p: usize) -> Result<Self> {
        let g = constructions::book(p)?;
        let kind = match p {
            1 => PatternKind::Triangle,
            _ => PatternKind::Book(p),
        };
        Self::with_kind(format!("B_{p}"), g, kind)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Pattern(format!("K_{n} has no edges")));
        }
        let kind = if n == 3 {
            PatternKind::Triangle
        } else {
            PatternKind::General
        };
        Self::with_kind(format!("K_{n}"), Graph::complete(n)?, kind)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let kind = match n {
            3 => PatternKind::Triangle,
            4 => PatternKind::Cycle4,
            _ => PatternKind::General,
        };
        Self::with_kind(format!("C_{n}"), constructions::cycle(n)?, kind)
    }

    /// `P_n`, the path on `n` vertices.
    pub fn path(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Pattern(
                "a path pattern needs at least 2 vertices".into(),
            ));
        }
        Self::with_kind(
            format!("P_{n}"),
            constructions::path(n)?,
            PatternKind::General,
        )
    }

    pub fn c4() -> Self {
        Self::cycle(4).expect("C_4 is a valid pattern")
    }

    pub fn triangle() -> Self {
        Self::cycle(3).expect("C_3 is a valid pattern")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn automorphism_count(&self) -> u64 {
        self.automorphisms
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    /// Number of copies of this pattern in `g`, using a closed form when one
    /// applies.
    pub fn count(&self, g: &Graph) -> u64 {
        use crate::counting::*;
        match self.kind {
            PatternKind::Star(p) => count_star(g, p).expect("closed form valid for p >= 2"),
            PatternKind::Book(p) => count_book(g, p).expect("closed form valid for p >= 2"),
            PatternKind::Cycle4 => count_c4(g),
            PatternKind::Triangle => count_triangles(g),
            PatternKind::General => count_generic(g, self),
        }
    }

    /// True when `g` has at least one copy.
    pub fn occurs_in(&self, g: &Graph) -> bool {
        use crate::counting::*;
        match self.kind {
            PatternKind::Star(p) => g.max_degree() >= p,
            PatternKind::Book(p) => max_edge_codegree(g) >= p,
            PatternKind::Triangle => max_edge_codegree(g) >= 1,
            PatternKind::Cycle4 => has_c4(g),
            PatternKind::General => has_embedding(g, &self.graph),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// One or more patterns; a graph is free of the set when it contains none.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    text: String,
    patterns: Vec<Pattern>,
}

impl PatternSet {
    pub fn single(p: Pattern) -> Self {
        PatternSet {
            text: p.name().to_string(),
            patterns: vec![p],
        }
    }

    pub fn new(text: impl Into<String>, patterns: Vec<Pattern>) -> Result<Self> {
        if patterns.is_empty() {
            return Err(Error::Pattern("empty pattern family".into()));
        }
        Ok(PatternSet {
            text: text.into(),
            patterns,
        })
    }

    pub fn patterns(&self) -> &[Pattern] {
        &self.patterns
    }

    /// The only member, if this set has exactly one.
    pub fn as_single(&self) -> Option<&Pattern> {
        match self.patterns.as_slice() {
            [p] => Some(p),
            _ => None,
        }
    }

    pub fn occurs_in(&self, g: &Graph) -> bool {
        crate::counting::contains_any(g, &self.patterns)
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Pattern(format!("expected an integer {what}, got {s:?}")))
}

/// Compact family members: `c<n>`, `p<n>`, `k1<p>` (star), `k<n>`.
fn parse_atom(s: &str) -> Result<Pattern> {
    if s.contains(':') {
        return s.parse();
    }
    let (head, digits) = s.split_at(1);
    match head {
        "c" => Pattern::cycle(parse_usize(digits, "cycle length")?),
        "p" => Pattern::path(parse_usize(digits, "path order")?),
        "b" => Pattern::book(parse_usize(digits, "page count")?),
        "s" => Pattern::star(parse_usize(digits, "star size")?),
        "k" if digits.len() >= 2 && digits.starts_with('1') => {
            Pattern::star(parse_usize(&digits[1..], "star size")?)
        }
        "k" => Pattern::complete(parse_usize(digits, "clique order")?),
        _ => Err(Error::Pattern(format!("unknown family member {s:?}"))),
    }
}

/// Parses the single-pattern language: `k:p`, `s:p`, `b:p`, `c4`, `c:n`,
/// `p:n`, `g6:<graph6>`.
impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "c4" {
            return Ok(Pattern::c4());
        }
        if s == "c3" || s == "triangle" {
            return Ok(Pattern::triangle());
        }
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Pattern(format!("unrecognised pattern {s:?}")))?;
        match kind {
            "k" => Pattern::complete(parse_usize(arg, "clique order")?),
            "s" => Pattern::star(parse_usize(arg, "star size")?),
            "b" => Pattern::book(parse_usize(arg, "page count")?),
            "c" => Pattern::cycle(parse_usize(arg, "cycle length")?),
            "p" => Pattern::path(parse_usize(arg, "path order")?),
            "g6" => Pattern::new(format!("g6:{arg}"), graph6::decode(arg)?),
            _ => Err(Error::Pattern(format!("unknown pattern kind {kind:?}"))),
        }
    }
}

/// Parses a single pattern or `family:a,b,c`.
impl FromStr for PatternSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(list) = s.strip_prefix("family:") {
            let members = list
                .split(',')
                .map(|a| parse_atom(a.trim()))
                .collect::<Result<Vec<_>>>()?;
            let names: Vec<&str> = members.iter().map(Pattern::name).collect();
            return PatternSet::new(format!("{{{}}}", names.join(", ")), members);
        }
        Ok(PatternSet::single(s.parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_patterns() {
        let b4: Pattern = "b:4".parse().unwrap();
        assert_eq!(b4.kind(), PatternKind::Book(4));
        assert_eq!(b4.graph().order(), 6);
        assert_eq!(b4.graph().size(), 9);
        let s3: Pattern = "s:3".parse().unwrap();
        assert_eq!(s3.kind(), PatternKind::Star(3));
        assert_eq!("c4".parse::<Pattern>().unwrap().kind(), PatternKind::Cycle4);
        assert_eq!(
            "k:3".parse::<Pattern>().unwrap().kind(),
            PatternKind::Triangle
        );
        assert_eq!("p:4".parse::<Pattern>().unwrap().automorphism_count(), 2);
        assert_eq!("g6:C~".parse::<Pattern>().unwrap().automorphism_count(), 24);
        assert!("x:3".parse::<Pattern>().is_err());
        assert!("g6:D??".parse::<Pattern>().is_err());
    }

    #[test]
    fn parses_family() {
        let fam: PatternSet = "family:c3,p4,k13".parse().unwrap();
        let kinds: Vec<_> = fam.patterns().iter().map(|p| p.graph().size()).collect();
        assert_eq!(kinds, vec![3, 3, 3]);
        assert_eq!(fam.patterns()[2].kind(), PatternKind::Star(3));
        assert_eq!(fam.to_string(), "{C_3, P_4, K_{1,3}}");
        assert!(fam.as_single().is_none());
    }

    #[test]
    fn automorphisms_of_book_two() {
        assert_eq!(Pattern::book(2).unwrap().automorphism_count(), 4);
    }
}
