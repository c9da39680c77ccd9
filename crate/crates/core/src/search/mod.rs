//! Isomorph-free enumeration of small regular graphs and the supertough
//! census built on top of it.

pub mod canon;
pub mod census;
pub mod enumerate;

use thiserror::Error;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_canonical, CanonError};
pub use census::{run_census, CensusResult, Predicate, SearchSpec, Source, Survivor};
pub use enumerate::{enumerate_regular, ENUM_MAX_DEGREE, ENUM_MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("no {r}-regular graph on {n} vertices: n*r is odd")]
    Parity { n: usize, r: usize },
    #[error("n={n}, r={r} is outside the built-in enumeration envelope (n <= {ENUM_MAX_ORDER}, r <= {ENUM_MAX_DEGREE})")]
    Envelope { n: usize, r: usize },
    #[error("invalid search: {0}")]
    InvalidSpec(String),
}
