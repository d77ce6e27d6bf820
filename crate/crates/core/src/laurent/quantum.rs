use super::{LaurentError, LaurentPoly, RationalFn};

/// The quantum integer `[n] = (q^n - q^-n) / (q - q^-1)` as a Laurent
/// polynomial in `q`: `q^(n-1) + q^(n-3) + ... + q^(1-n)` for `n > 0`.
pub fn quantum_int(n: i64) -> LaurentPoly {
    if n < 0 {
        return -quantum_int(-n);
    }
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// `[n]` evaluated at `q = -A^2`.
pub fn quantum_int_at_a(n: i64) -> LaurentPoly {
    quantum_int(n)
        .checked_substitute(true, 2)
        .expect("quantum integer exponent overflow")
}

/// `[num] / [den]` at `q = -A^2`.
pub fn quantum_ratio(num: i64, den: i64) -> Result<RationalFn, LaurentError> {
    RationalFn::new(quantum_int_at_a(num), quantum_int_at_a(den))
}

/// Checks `[2][m] = [m+1] + [m-1]` and `[m-a] = [m][a+1] - [m+1][a]` exactly.
pub fn quantum_identities_check(m: i64, a: i64) -> bool {
    let q = quantum_int;
    let doubling = q(2) * q(m) == q(m + 1) + q(m - 1);
    let difference = q(m - a) == q(m) * q(a + 1) - q(m + 1) * q(a);
    doubling && difference
}
