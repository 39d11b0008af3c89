//! Exact search and verification tools for Turán-type extremal graph
//! problems: small bitset graphs, canonical labelling, copy counting,
//! isomorph-free enumeration, annealing witness search, and a claim catalogue
//! that re-derives every tabulated value.

pub mod canon;
pub mod claims;
pub mod cli;
pub mod constructions;
pub mod counting;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod heuristic;
pub mod iso;
pub mod pattern;

pub use canon::{are_isomorphic, canonical_form, CanonicalLabel};
pub use error::{Error, Result};
pub use graph::Graph;
pub use pattern::{Pattern, PatternSet};
