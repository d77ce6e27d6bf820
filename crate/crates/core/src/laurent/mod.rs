//! Exact Laurent polynomials in a single variable with big-integer
//! coefficients, reduced rational functions over them, and quantum integers.
//!
//! Everything in the crate is expressed in the variable `A`. The variables
//! `q = -A^2` and `t^(1/2) = A^-2` only appear at the presentation layer.

mod dense;
mod quantum;
mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use quantum::{quantum_identities_check, quantum_int, quantum_int_at_a, quantum_ratio};
pub use rational::RationalFn;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("odd exponent A^{0} has no t^(1/2) representation")]
    OddExponent(i64),
}

/// Sparse Laurent polynomial `sum c_k A^k` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * A^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable `A`.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// The loop value `d = -A^2 - A^-2`.
    pub fn loop_value() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Leading (highest exponent) coefficient.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Returns `(c, e)` if the polynomial is a single term `c * A^e`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    pub fn checked_add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn checked_sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_add(*eb).ok_or(LaurentError::ExponentOverflow)?;
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self, LaurentError> {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, k: u32) -> Self {
        self.checked_pow(k).expect("exponent overflow in LaurentPoly::pow")
    }

    /// Multiplies by `A^k`.
    pub fn checked_shift(&self, k: i64) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let e = e.checked_add(k).ok_or(LaurentError::ExponentOverflow)?;
            terms.insert(e, c.clone());
        }
        Ok(Self { terms })
    }

    pub fn shift(&self, k: i64) -> Self {
        self.checked_shift(k).expect("exponent overflow in LaurentPoly::shift")
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Substitutes `A -> sign * A^k`.
    pub fn checked_substitute(&self, negate: bool, k: i64) -> Result<Self, LaurentError> {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let ne = e.checked_mul(k).ok_or(LaurentError::ExponentOverflow)?;
            let c = if negate && e.rem_euclid(2) == 1 { -c.clone() } else { c.clone() };
            out.add_term(ne, c);
        }
        Ok(out)
    }

    /// `A -> A^-1`.
    pub fn invert_variable(&self) -> Self {
        self.checked_substitute(false, -1)
            .expect("negating an exponent overflowed")
    }

    /// Exact quotient `self / divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (sa, a) = dense::to_dense(self);
        let (sb, b) = dense::to_dense(divisor);
        let q = dense::div_exact(&a, &b).ok_or(LaurentError::NotDivisible)?;
        let shift = sa.checked_sub(sb).ok_or(LaurentError::ExponentOverflow)?;
        dense::from_dense(shift, &q)
    }

    /// Rewrites a polynomial in `A` in units of `t^(1/2) = A^-2`: the
    /// exponent `k` of `A` becomes exponent `-k/2` of `t^(1/2)`.
    pub fn to_t_half(&self) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.rem_euclid(2) != 0 {
                return Err(LaurentError::OddExponent(*e));
            }
            terms.insert(-(e / 2), c.clone());
        }
        Ok(Self { terms })
    }

    /// Inverse of [`to_t_half`](Self::to_t_half).
    pub fn from_t_half(&self) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (h, c) in &self.terms {
            let e = h.checked_mul(-2).ok_or(LaurentError::ExponentOverflow)?;
            terms.insert(e, c.clone());
        }
        Ok(Self { terms })
    }

    /// Renders an `A`-polynomial in powers of `t`, e.g. `-t^-4 + t^-3 + t^-1`.
    /// Terms follow descending `A` exponent, i.e. ascending powers of `t`.
    pub fn display_t(&self) -> Result<String, LaurentError> {
        let half = self.to_t_half()?;
        Ok(render(half.terms.iter().map(|(h, c)| (c, t_power(*h)))))
    }
}

fn t_power(h: i64) -> String {
    if h == 0 {
        String::new()
    } else if h % 2 != 0 {
        format!("t^{}/2", h)
    } else if h == 2 {
        "t".to_string()
    } else {
        format!("t^{}", h / 2)
    }
}

fn a_power(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "A".to_string(),
        _ => format!("A^{e}"),
    }
}

fn render<'a>(terms: impl Iterator<Item = (&'a BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, var) in terms {
        let negative = c.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = c.abs();
        if var.is_empty() {
            out.push_str(&mag.to_string());
        } else {
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&var);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentPoly {
    /// Descending powers of `A`, e.g. `A^7 - A^3 - A^-5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.terms.iter().rev().map(|(e, c)| (c, a_power(*e)))))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $body(&self, rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &LaurentPoly, b: &LaurentPoly| a.checked_add(b));
forward_binop!(Sub, sub, |a: &LaurentPoly, b: &LaurentPoly| a.checked_sub(b));
forward_binop!(Mul, mul, |a: &LaurentPoly, b: &LaurentPoly| a
    .checked_mul(b)
    .expect("exponent overflow in LaurentPoly multiplication"));

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}
