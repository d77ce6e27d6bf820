//! The Jones polynomial from the braid trace and from the bracket, plus the
//! checks tying the constructions together.

use std::fmt;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::{kauffman_bracket_with_limit, DiagramError, PDCode, DEFAULT_CROSSING_LIMIT};
use crate::laurent::{LaurentError, LaurentPoly};
use crate::tl::{Coefficient, TLDiagram, TLElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JonesError {
    /// The Markov trace was not divisible by the loop value. This never
    /// happens for a correct implementation.
    #[error("internal consistency error: trace {trace} is not divisible by d")]
    InexactDivision { trace: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Bracket,
    Trace,
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Bracket => "bracket",
            Strategy::Trace => "trace",
        })
    }
}

/// A Jones polynomial kept in `A`-form (`t^(1/2) = A^-2`).
#[derive(Debug, Clone)]
pub struct JonesResult {
    pub poly_a: LaurentPoly,
    pub writhe: i64,
    pub strategy: Strategy,
}

impl PartialEq for JonesResult {
    /// Results are equal when the polynomials are; the strategy that
    /// produced them does not matter.
    fn eq(&self, other: &Self) -> bool {
        self.poly_a == other.poly_a
    }
}

impl JonesResult {
    /// The polynomial in units of `t^(1/2)`.
    pub fn t_half(&self) -> Result<LaurentPoly, LaurentError> {
        self.poly_a.to_t_half()
    }

    /// Text rendering in powers of `t`, e.g. `t + t^3 - t^4`.
    pub fn display_t(&self) -> Result<String, LaurentError> {
        self.poly_a.display_t()
    }
}

/// `V` of the mirror image: `A -> A^-1`, writhe negated.
pub fn jones_mirror(r: &JonesResult) -> JonesResult {
    JonesResult {
        poly_a: r.poly_a.invert_variable(),
        writhe: -r.writhe,
        strategy: r.strategy,
    }
}

/// Temperley-Lieb image of a braid: `sigma_i -> A 1 + A^-1 E_i` and
/// `sigma_i^-1 -> A^-1 1 + A E_i`, multiplied in word order.
pub fn phi(b: &BraidWord) -> TLElement<LaurentPoly> {
    let n = b.strands();
    let mut acc = TLElement::identity(n);
    for &g in b.letters() {
        let e = TLDiagram::generator(n, g.unsigned_abs() as usize)
            .expect("braid letters are valid generator indices");
        let (id_coeff, e_coeff) = if g > 0 { (1, -1) } else { (-1, 1) };
        // acc * (c1 1 + c2 E) = c1 acc + c2 (acc E)
        let with_e = acc
            .try_mul(&TLElement::from_diagram(e))
            .expect("same strand count");
        acc = acc
            .scale(&LaurentPoly::monomial(1, id_coeff))
            .try_add(&with_e.scale(&LaurentPoly::monomial(1, e_coeff)))
            .expect("same strand count");
    }
    acc
}

/// `tr_n(phi(b))`.
pub fn trace_of_braid(b: &BraidWord) -> LaurentPoly {
    phi(b).trace()
}

/// Bracket of the closure as `d^-1 tr_n(phi(b))`.
pub fn bracket_of_braid(b: &BraidWord) -> Result<LaurentPoly, JonesError> {
    let trace = trace_of_braid(b);
    trace
        .div_exact(&LaurentPoly::loop_weight())
        .map_err(|_| JonesError::InexactDivision { trace: trace.to_string() })
}

// (-A^-3)^w, which is also (-A)^(-3w)
fn writhe_factor(writhe: i64) -> Result<LaurentPoly, JonesError> {
    let exp = writhe.checked_mul(-3).ok_or(LaurentError::ExponentOverflow)?;
    let sign = if writhe.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(LaurentPoly::monomial(sign, exp))
}

/// `V(closure b) = (-A^-3)^w(b) tr_n(phi(b)) / d`.
pub fn jones_via_trace(b: &BraidWord) -> Result<JonesResult, JonesError> {
    let bracket = bracket_of_braid(b)?;
    let writhe = b.writhe();
    Ok(JonesResult {
        poly_a: writhe_factor(writhe)?.checked_mul(&bracket)?,
        writhe,
        strategy: Strategy::Trace,
    })
}

/// `V(D) = (-A)^(-3 w(D)) <D>`.
pub fn jones_via_bracket(pd: &PDCode) -> Result<JonesResult, JonesError> {
    jones_via_bracket_with_limit(pd, DEFAULT_CROSSING_LIMIT)
}

pub fn jones_via_bracket_with_limit(pd: &PDCode, limit: usize) -> Result<JonesResult, JonesError> {
    let bracket = kauffman_bracket_with_limit(pd, limit)?;
    let writhe = pd.writhe();
    Ok(JonesResult {
        poly_a: writhe_factor(writhe)?.checked_mul(&bracket)?,
        writhe,
        strategy: Strategy::Bracket,
    })
}

/// Checks `A^4 V(L+) - A^-4 V(L-) + (A^2 - A^-2) V(L0) = 0` at crossing `k`,
/// all three values computed from the bracket.
pub fn verify_skein(pd: &PDCode, k: usize) -> Result<bool, JonesError> {
    verify_skein_with_limit(pd, k, DEFAULT_CROSSING_LIMIT)
}

pub fn verify_skein_with_limit(pd: &PDCode, k: usize, limit: usize) -> Result<bool, JonesError> {
    let (plus, minus, zero) = pd.skein_triple(k)?;
    let vp = jones_via_bracket_with_limit(&plus, limit)?.poly_a;
    let vm = jones_via_bracket_with_limit(&minus, limit)?.poly_a;
    let v0 = jones_via_bracket_with_limit(&zero, limit)?.poly_a;
    let middle = LaurentPoly::from_terms([(2, 1), (-2, -1)]);
    let total = vp.shift(4) - vm.shift(-4) + middle * v0;
    Ok(total.is_zero())
}

/// Checks `V(a (x) b) = d V(a) V(b)` and `V(a # b) = V(a) V(b)` on closures.
pub fn verify_multiplicativity(a: &BraidWord, b: &BraidWord) -> Result<bool, JonesError> {
    let va = jones_via_trace(a)?.poly_a;
    let vb = jones_via_trace(b)?.poly_a;
    let product = &va * &vb;
    let disjoint = jones_via_trace(&a.tensor(b))?.poly_a;
    let connected = jones_via_trace(&a.connected_sum(b))?.poly_a;
    Ok(disjoint == LaurentPoly::loop_value() * &product && connected == product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::Sign;

    fn w(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn d() -> LaurentPoly {
        LaurentPoly::loop_value()
    }

    #[test]
    fn phi_of_generators() {
        let e1 = TLElement::generator(2, 1).unwrap();
        let expected = TLElement::identity(2)
            .scale(&p(&[(1, 1)]))
            .try_add(&e1.scale(&p(&[(-1, 1)])))
            .unwrap();
        assert_eq!(phi(&w(2, &[1])), expected);
        assert_eq!(phi(&w(2, &[1, -1])), TLElement::identity(2));
        assert_eq!(phi(&w(4, &[])), TLElement::identity(4));
    }

    #[test]
    fn traces_of_single_crossings() {
        assert_eq!(trace_of_braid(&w(2, &[1])), p(&[(3, -1)]) * d());
        assert_eq!(trace_of_braid(&w(2, &[-1])), p(&[(-3, -1)]) * d());
        assert_eq!(bracket_of_braid(&w(2, &[1])).unwrap(), p(&[(3, -1)]));
        assert_eq!(bracket_of_braid(&w(2, &[])).unwrap(), d());
        assert_eq!(
            bracket_of_braid(&w(2, &[-1, -1, -1])).unwrap(),
            p(&[(7, 1), (3, -1), (-5, -1)])
        );
    }

    #[test]
    fn trefoils_and_unlink() {
        let right = jones_via_trace(&w(2, &[1, 1, 1])).unwrap();
        assert_eq!(right.poly_a, p(&[(-4, 1), (-12, 1), (-16, -1)]));
        assert_eq!(right.display_t().unwrap(), "t + t^3 - t^4");
        let left = jones_via_trace(&w(2, &[-1, -1, -1])).unwrap();
        assert_eq!(left.poly_a, p(&[(4, 1), (12, 1), (16, -1)]));
        assert_eq!(left.display_t().unwrap(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(jones_via_trace(&w(2, &[])).unwrap().poly_a, d());
        assert_eq!(jones_via_trace(&w(1, &[])).unwrap().poly_a, LaurentPoly::one());
        assert_eq!(jones_mirror(&right), left);
        assert_eq!(jones_mirror(&jones_mirror(&right)), right);
        assert_eq!(jones_mirror(&right).writhe, -3);
    }

    #[test]
    fn bracket_route_examples() {
        let eight = jones_via_bracket(&w(3, &[1, -2, 1, -2]).closure_pd()).unwrap();
        // t^2 + t^-2 + 1 - t^-1 - t with t = A^-4
        assert_eq!(eight.poly_a, p(&[(-8, 1), (8, 1), (0, 1), (4, -1), (-4, -1)]));
        assert_eq!(jones_mirror(&eight), eight);
        let hopf = jones_via_bracket(&w(2, &[-1, -1]).closure_pd()).unwrap();
        assert_eq!(hopf.display_t().unwrap(), "-t^-5/2 - t^-1/2");
        let circle = jones_via_bracket(&PDCode::unlink(1).unwrap()).unwrap();
        assert_eq!(circle.poly_a, LaurentPoly::one());
    }

    #[test]
    fn skein_examples() {
        for word in [w(3, &[1, -2, 1, -2]), w(2, &[1, 1]), w(2, &[-1, -1]), w(2, &[1])] {
            let pd = word.closure_pd();
            for k in 0..pd.crossing_count() {
                assert!(verify_skein(&pd, k).unwrap(), "{word} at {k}");
            }
        }
        assert!(verify_skein(&w(2, &[1]).closure_pd(), 1).is_err());
    }

    #[test]
    fn multiplicativity_examples() {
        assert!(verify_multiplicativity(&w(2, &[1, 1, 1]), &w(2, &[1, 1, 1])).unwrap());
        assert!(verify_multiplicativity(&w(2, &[1, 1, 1]), &w(1, &[])).unwrap());
        assert!(verify_multiplicativity(&w(1, &[]), &w(1, &[])).unwrap());
        let sq = jones_via_trace(&w(4, &[1, 1, 1, 3, 3, 3])).unwrap().poly_a;
        let tre = jones_via_trace(&w(2, &[1, 1, 1])).unwrap().poly_a;
        assert_eq!(sq, d() * &tre * &tre);
    }

    #[test]
    fn stabilisation_invariance() {
        let b = w(3, &[1, -2, 1, -2]);
        let v = jones_via_trace(&b).unwrap();
        for s in [Sign::Positive, Sign::Negative] {
            assert_eq!(jones_via_trace(&b.markov_m2(s)).unwrap(), v);
        }
        let g = w(3, &[2, 1]);
        assert_eq!(jones_via_trace(&b.markov_m1(&g).unwrap()).unwrap(), v);
    }
}
