//! Dense univariate integer polynomials (ascending coefficients) used for
//! exact division and GCD after the Laurent shift has been cleared.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentError, LaurentPoly};

/// Splits `p` as `A^shift * dense(p)` where `dense(p)` has a nonzero constant term.
pub(crate) fn to_dense(p: &LaurentPoly) -> (i64, Vec<BigInt>) {
    let Some(lo) = p.min_exp() else {
        return (0, Vec::new());
    };
    let hi = p.max_exp().unwrap_or(lo);
    let mut v = vec![BigInt::zero(); (hi - lo) as usize + 1];
    for (e, c) in p.terms() {
        v[(e - lo) as usize] = c.clone();
    }
    (lo, v)
}

pub(crate) fn from_dense(shift: i64, v: &[BigInt]) -> Result<LaurentPoly, LaurentError> {
    let mut terms = BTreeMap::new();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            let e = shift
                .checked_add(i as i64)
                .ok_or(LaurentError::ExponentOverflow)?;
            terms.insert(e, c.clone());
        }
    }
    Ok(LaurentPoly { terms })
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Exact quotient over the integers, `None` if there is a remainder.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let mut b = b.to_vec();
    trim(&mut b);
    let lb = b.last()?.clone();
    if rem.is_empty() {
        return Some(Vec::new());
    }
    if rem.len() < b.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let (c, r) = rem.last().unwrap().div_rem(&lb);
        if !r.is_zero() {
            return None;
        }
        let off = rem.len() - b.len();
        for (i, bc) in b.iter().enumerate() {
            rem[off + i] -= &c * bc;
        }
        q[off] = c;
        trim(&mut rem);
        if rem.is_empty() {
            return Some(q);
        }
    }
    None
}

pub(crate) fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (both trimmed, `b` nonempty).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let lb = b.last().unwrap();
    while rem.len() >= b.len() && !rem.is_empty() {
        let la = rem.last().unwrap().clone();
        let off = rem.len() - b.len();
        for c in rem.iter_mut() {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            rem[off + i] -= &la * bc;
        }
        trim(&mut rem);
    }
    rem
}

/// Primitive GCD with positive leading coefficient. Over the rationals this is
/// the monic GCD up to a scalar, which is all the caller needs.
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive_part(a);
    trim(&mut x);
    let mut y = primitive_part(b);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = pseudo_rem(&x, &y);
        x = y;
        y = primitive_part(&r);
    }
    if x.last().is_some_and(|c| c.is_negative()) {
        for c in x.iter_mut() {
            *c = -std::mem::take(c);
        }
    }
    x
}
