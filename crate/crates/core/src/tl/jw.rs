use crate::laurent::{quantum_ratio, RationalFn};

use super::{TLElement, TlError};

/// `f^(0), ..., f^(n)`, each built from the previous one by
/// `f^(k+1) = i(f^(k)) - ([k]/[k+1]) i(f^(k)) E_k i(f^(k))` with `q = -A^2`.
pub fn jones_wenzl_sequence(n: i64) -> Result<Vec<TLElement<RationalFn>>, TlError> {
    if n < 0 {
        return Err(TlError::NegativeIndex(n));
    }
    let n = n as usize;
    let mut seq = Vec::with_capacity(n + 1);
    seq.push(TLElement::identity(0));
    if n >= 1 {
        seq.push(TLElement::identity(1));
    }
    for k in 1..n {
        let prev = seq[k].include_right();
        let e = TLElement::generator(k + 1, k)?;
        let ratio = quantum_ratio(k as i64, k as i64 + 1)?;
        let sandwich = prev.try_mul(&e)?.try_mul(&prev)?;
        seq.push(prev.try_sub(&sandwich.scale(&ratio))?);
    }
    Ok(seq)
}

/// The Jones-Wenzl idempotent `f^(n)` in `TL_n`.
pub fn jones_wenzl(n: i64) -> Result<TLElement<RationalFn>, TlError> {
    let mut seq = jones_wenzl_sequence(n)?;
    Ok(seq.pop().expect("sequence is never empty"))
}
