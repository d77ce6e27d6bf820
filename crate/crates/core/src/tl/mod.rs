//! The diagrammatic Temperley-Lieb algebra with loop value `d = -A^2 - A^-2`.

mod diagram;
mod element;
mod jw;

use thiserror::Error;

use crate::laurent::{LaurentError, LaurentPoly, RationalFn};

pub use diagram::{tl_basis, tl_basis_with_limit, TLDiagram, DEFAULT_BASIS_LIMIT};
pub use element::TLElement;
pub use jw::{jones_wenzl, jones_wenzl_sequence};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("generator E_{i} does not exist in TL_{n}")]
    GeneratorIndex { n: usize, i: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("invalid diagram: {0}")]
    InvalidMatching(String),
    #[error("basis of TL_{n} exceeds limit {limit}")]
    BasisLimit { n: usize, limit: usize },
    #[error("Jones-Wenzl index must be non-negative, got {0}")]
    NegativeIndex(i64),
    #[error("conditional expectation needs at least one strand")]
    NoStrands,
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Coefficient ring for [`TLElement`]: a commutative ring with a distinguished
/// loop weight.
pub trait Coefficient: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Value of a closed loop.
    fn loop_weight() -> Self;

    fn loop_power(k: usize) -> Self {
        let d = Self::loop_weight();
        (0..k).fold(Self::one(), |acc, _| acc.times(&d))
    }

    /// Product of two elements with equal strand counts.
    fn multiply(x: &TLElement<Self>, y: &TLElement<Self>) -> TLElement<Self> {
        x.mul_direct(y)
    }
}

impl Coefficient for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn loop_weight() -> Self {
        LaurentPoly::loop_value()
    }
}

impl Coefficient for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn one() -> Self {
        RationalFn::one()
    }
    fn is_zero(&self) -> bool {
        RationalFn::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn loop_weight() -> Self {
        RationalFn::from(LaurentPoly::loop_value())
    }

    // Reducing every partial product to lowest terms dominates the cost, so
    // multiply over a common denominator and reduce each result term once.
    fn multiply(x: &TLElement<Self>, y: &TLElement<Self>) -> TLElement<Self> {
        let (xs, dx) = clear_denominators(x);
        let (ys, dy) = clear_denominators(y);
        let den = &dx * &dy;
        xs.mul_direct(&ys)
            .map_coeffs(|c| RationalFn::new(c.clone(), den.clone()).expect("denominator is nonzero"))
    }
}

fn clear_denominators(x: &TLElement<RationalFn>) -> (TLElement<LaurentPoly>, LaurentPoly) {
    let den = RationalFn::common_denominator(x.terms().map(|(_, c)| c));
    let scaled = x.map_coeffs(|c| {
        let factor = den.div_exact(c.denominator()).expect("common denominator is a multiple");
        c.numerator() * &factor
    });
    (scaled, den)
}
