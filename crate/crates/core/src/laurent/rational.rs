use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed};

use super::{dense, LaurentError, LaurentPoly};

/// A quotient of Laurent polynomials in canonical form.
///
/// Canonical means: numerator and denominator share no common factor over
/// the rationals, the denominator's lowest exponent is zero, its leading
/// coefficient is positive, and the integer contents of numerator and
/// denominator are coprime. Two rational functions are equal iff their
/// canonical forms are structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if den.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Self::canonical(num, den)
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying Laurent polynomial if the denominator is `1`.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Result<Self, LaurentError> {
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (sn, n) = dense::to_dense(&num);
        let (sd, d) = dense::to_dense(&den);
        let g = dense::gcd(&n, &d);
        let mut n = dense::div_exact(&n, &g).expect("gcd divides numerator");
        let mut d = dense::div_exact(&d, &g).expect("gcd divides denominator");
        let c = dense::content(&n).gcd(&dense::content(&d));
        if !c.is_one() {
            n.iter_mut().for_each(|x| *x /= &c);
            d.iter_mut().for_each(|x| *x /= &c);
        }
        if d.last().is_some_and(|x| x.is_negative()) {
            n.iter_mut().for_each(|x| *x = -std::mem::take(x));
            d.iter_mut().for_each(|x| *x = -std::mem::take(x));
        }
        let shift = sn.checked_sub(sd).ok_or(LaurentError::ExponentOverflow)?;
        Ok(Self {
            num: dense::from_dense(shift, &n)?,
            den: dense::from_dense(0, &d)?,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        if self.den == other.den {
            return Self::canonical(&self.num + &other.num, self.den.clone());
        }
        let num = self.num.checked_mul(&other.den)? + other.num.checked_mul(&self.den)?;
        Self::canonical(num, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        Self::canonical(self.num.checked_mul(&other.num)?, self.den.checked_mul(&other.den)?)
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, LaurentError> {
        if other.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        Self::canonical(self.num.checked_mul(&other.den)?, self.den.checked_mul(&other.num)?)
    }

    pub fn recip(&self) -> Result<Self, LaurentError> {
        Self::one().checked_div(self)
    }

    /// A polynomial divisible by every denominator in `values`, built as a
    /// running least common multiple.
    pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a RationalFn>) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for v in values {
            let den = &v.den;
            if den.is_one() || *den == acc {
                continue;
            }
            let (_, a) = dense::to_dense(&acc);
            let (_, b) = dense::to_dense(den);
            let g = dense::from_dense(0, &dense::gcd(&a, &b)).expect("degree fits");
            // the gcd is primitive, so it divides over the integers
            acc = acc.div_exact(&g).expect("gcd divides") * den;
        }
        acc
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        self.checked_add(rhs).expect("exponent overflow in RationalFn addition")
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        self.checked_mul(rhs).expect("exponent overflow in RationalFn multiplication")
    }
}

impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("RationalFn division by zero")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}
