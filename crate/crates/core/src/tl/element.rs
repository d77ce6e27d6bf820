use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rayon::prelude::*;

use super::{Coefficient, TLDiagram, TlError};

// Below this many diagram products the serial path is faster.
const PARALLEL_THRESHOLD: usize = 512;

/// A finite linear combination of diagrams on a common strand count.
#[derive(Clone, PartialEq)]
pub struct TLElement<C> {
    n: usize,
    terms: BTreeMap<TLDiagram, C>,
}

fn accumulate<C: Coefficient>(terms: &mut BTreeMap<TLDiagram, C>, d: TLDiagram, c: C) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match terms.entry(d) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().plus(&c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

fn merge<C: Coefficient>(
    mut a: BTreeMap<TLDiagram, C>,
    b: BTreeMap<TLDiagram, C>,
) -> BTreeMap<TLDiagram, C> {
    for (d, c) in b {
        accumulate(&mut a, d, c);
    }
    a
}

impl<C: Coefficient> TLElement<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_diagram(TLDiagram::identity(n))
    }

    pub fn from_diagram(d: TLDiagram) -> Self {
        Self::monomial(d, C::one())
    }

    pub fn monomial(d: TLDiagram, c: C) -> Self {
        let mut out = Self::zero(d.strands());
        accumulate(&mut out.terms, d, c);
        out
    }

    pub fn generator(n: usize, i: usize) -> Result<Self, TlError> {
        Ok(Self::from_diagram(TLDiagram::generator(n, i)?))
    }

    /// Builds an element from `(diagram, coefficient)` pairs on `n` strands.
    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (TLDiagram, C)>,
    ) -> Result<Self, TlError> {
        let mut out = Self::zero(n);
        for (d, c) in terms {
            if d.strands() != n {
                return Err(TlError::StrandMismatch { left: n, right: d.strands() });
            }
            accumulate(&mut out.terms, d, c);
        }
        Ok(out)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TLDiagram, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &TLDiagram) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    fn check(&self, other: &Self) -> Result<(), TlError> {
        if self.n != other.n {
            return Err(TlError::StrandMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            accumulate(&mut out.terms, d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, TlError> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (d, x) in &self.terms {
            accumulate(&mut out.terms, d.clone(), x.times(c));
        }
        out
    }

    /// Bilinear extension of diagram stacking; each closed loop contributes
    /// a factor of the loop weight.
    pub fn try_mul(&self, other: &Self) -> Result<Self, TlError> {
        self.check(other)?;
        Ok(C::multiply(self, other))
    }

    /// [`TLElement::try_mul`] term by term, without the coefficient ring's
    /// own shortcut. Strand counts must already agree.
    pub(crate) fn mul_direct(&self, other: &Self) -> Self {
        let n = self.n;
        let loop_powers: Vec<C> = (0..=n).map(C::loop_power).collect();
        let row = |(dx, cx): (&TLDiagram, &C)| {
            let mut local = BTreeMap::new();
            for (dy, cy) in &other.terms {
                let (d, loops) = dx.compose(dy).expect("strand counts already checked");
                let mut c = cx.times(cy);
                if loops > 0 {
                    c = c.times(&loop_powers[loops]);
                }
                accumulate(&mut local, d, c);
            }
            local
        };
        let terms = if self.terms.len() * other.terms.len() < PARALLEL_THRESHOLD {
            self.terms.iter().map(row).fold(BTreeMap::new(), merge)
        } else {
            let rows: Vec<(&TLDiagram, &C)> = self.terms.iter().collect();
            rows.into_par_iter()
                .map(row)
                .reduce(BTreeMap::new, merge)
        };
        Self { n, terms }
    }

    /// Markov trace: closes every strand around the right.
    pub fn trace(&self) -> C {
        let mut total = C::zero();
        for (d, c) in &self.terms {
            total = total.plus(&c.times(&C::loop_power(d.closure_loops())));
        }
        total
    }

    /// Conditional expectation onto `n - 1` strands: closes the last strand.
    pub fn cond_expectation(&self) -> Result<Self, TlError> {
        if self.n == 0 {
            return Err(TlError::NoStrands);
        }
        let mut out = Self::zero(self.n - 1);
        for (d, c) in &self.terms {
            let (e, loops) = d.close_last()?;
            let c = if loops > 0 { c.times(&C::loop_power(loops)) } else { c.clone() };
            accumulate(&mut out.terms, e, c);
        }
        Ok(out)
    }

    pub fn include_right(&self) -> Self {
        self.map_diagrams(self.n + 1, TLDiagram::include_right)
    }

    pub fn include_left(&self) -> Self {
        self.map_diagrams(self.n + 1, TLDiagram::include_left)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n + other.n);
        for (dx, cx) in &self.terms {
            for (dy, cy) in &other.terms {
                accumulate(&mut out.terms, dx.tensor(dy), cx.times(cy));
            }
        }
        out
    }

    /// The involution: reflects each diagram top to bottom, coefficients fixed.
    pub fn star(&self) -> Self {
        self.map_diagrams(self.n, TLDiagram::reflect)
    }

    fn map_diagrams(&self, n: usize, f: impl Fn(&TLDiagram) -> TLDiagram) -> Self {
        let mut out = Self::zero(n);
        for (d, c) in &self.terms {
            accumulate(&mut out.terms, f(d), c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TLElement<D> {
        let mut out = TLElement::zero(self.n);
        for (d, c) in &self.terms {
            accumulate(&mut out.terms, d.clone(), f(c));
        }
        out
    }
}

impl<C: Coefficient + fmt::Display> fmt::Display for TLElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{d}")?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for TLElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TLElement")
            .field("n", &self.n)
            .field("terms", &self.terms)
            .finish()
    }
}

impl<C: Coefficient> Add for &TLElement<C> {
    type Output = TLElement<C>;
    fn add(self, rhs: Self) -> TLElement<C> {
        self.try_add(rhs).expect("TL strand count mismatch")
    }
}

impl<C: Coefficient> Sub for &TLElement<C> {
    type Output = TLElement<C>;
    fn sub(self, rhs: Self) -> TLElement<C> {
        self.try_sub(rhs).expect("TL strand count mismatch")
    }
}

impl<C: Coefficient> Mul for &TLElement<C> {
    type Output = TLElement<C>;
    fn mul(self, rhs: Self) -> TLElement<C> {
        self.try_mul(rhs).expect("TL strand count mismatch")
    }
}

impl<C: Coefficient> Neg for &TLElement<C> {
    type Output = TLElement<C>;
    fn neg(self) -> TLElement<C> {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use crate::tl::tl_basis;
    use proptest::prelude::*;

    type E = TLElement<LaurentPoly>;

    fn a(e: i64) -> LaurentPoly {
        LaurentPoly::monomial(1, e)
    }

    fn d() -> LaurentPoly {
        LaurentPoly::loop_value()
    }

    fn gen(n: usize, i: usize) -> E {
        E::generator(n, i).unwrap()
    }

    #[test]
    fn crossing_resolutions_are_inverse() {
        let one = E::identity(2);
        let x = &one.scale(&a(1)) + &gen(2, 1).scale(&a(-1));
        let y = &one.scale(&a(-1)) + &gen(2, 1).scale(&a(1));
        assert_eq!(&x * &y, one);
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn products_by_hand() {
        let e12 = &gen(3, 1) * &gen(3, 2);
        let e21 = &gen(3, 2) * &gen(3, 1);
        assert_eq!(&e12 * &e21, gen(3, 1).scale(&d()));
        assert_eq!(&gen(3, 1) * &gen(3, 1), gen(3, 1).scale(&d()));
        assert!(E::identity(2).try_mul(&E::identity(3)).is_err());
    }

    #[test]
    fn traces() {
        for n in 0..=5 {
            assert_eq!(E::identity(n).trace(), d().pow(n as u32));
            for i in 1..n {
                assert_eq!(gen(n, i).trace(), d().pow(n as u32 - 1));
            }
        }
        assert!(E::zero(3).trace().is_zero());
    }

    #[test]
    fn expectation_and_inclusion() {
        for n in 1..=4 {
            for x in tl_basis(n).unwrap() {
                let x = E::from_diagram(x);
                assert_eq!(x.include_right().cond_expectation().unwrap(), x.scale(&d()));
            }
            assert_eq!(gen(n + 1, n).cond_expectation().unwrap(), E::identity(n));
        }
        assert_eq!(E::identity(2).include_right(), E::identity(3));
        assert_eq!(gen(2, 1).include_right(), gen(3, 1));
        assert_eq!(gen(2, 1).tensor(&E::identity(1)), gen(3, 1));
        assert_eq!(gen(2, 1).include_left(), gen(3, 2));
        assert!(E::identity(0).cond_expectation().is_err());
    }

    fn arb_element(n: usize) -> impl Strategy<Value = E> {
        let basis = tl_basis(n).unwrap();
        let k = basis.len();
        prop::collection::vec((0..k, -3i64..=3, -2i64..=2), 0..=4).prop_map(move |v| {
            E::from_terms(
                n,
                v.into_iter()
                    .map(|(i, e, c)| (basis[i].clone(), LaurentPoly::monomial(c, e))),
            )
            .unwrap()
        })
    }

    fn triple() -> impl Strategy<Value = (E, E, E)> {
        (1usize..=6).prop_flat_map(|n| (arb_element(n), arb_element(n), arb_element(n)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn multiplication_is_associative((x, y, z) in triple()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            let one = E::identity(x.strands());
            prop_assert_eq!(&one * &x, x.clone());
            prop_assert_eq!(&(&x + &y) * &z, &(&x * &z) + &(&y * &z));
        }

        #[test]
        fn trace_is_cyclic((x, y, _z) in triple()) {
            prop_assert_eq!((&x * &y).trace(), (&y * &x).trace());
        }
    }
}
