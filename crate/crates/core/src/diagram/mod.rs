//! Oriented link diagrams in PD notation, crossing signs, Kauffman
//! smoothings and the bracket state sum.

mod graph;
mod pd;
mod state_sum;
pub mod union_find;

use thiserror::Error;

pub use pd::PDCode;
pub use state_sum::{
    kauffman_bracket, kauffman_bracket_fixed, kauffman_bracket_with_limit, resolve_state,
    seifert_circles, Smoothing, SmoothingState, DEFAULT_CROSSING_LIMIT,
};

pub(crate) use graph::{OrientedGraph, Slot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("arc {arc} appears {count} times, expected exactly 2")]
    ArcMultiplicity { arc: usize, count: usize },
    #[error("malformed arc succession: {0}")]
    MalformedSuccession(String),
    #[error("diagram has no components")]
    NoComponents,
    #[error("crossing index {index} out of range for {crossings} crossings")]
    CrossingIndex { index: usize, crossings: usize },
    #[error("state has {got} choices for {expected} crossings")]
    StateLength { expected: usize, got: usize },
    #[error("{crossings} crossings exceed the state-sum limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn from_positive(positive: bool) -> Self {
        if positive {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}
