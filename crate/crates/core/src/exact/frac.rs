use super::{LaurentPoly, Scalar};
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials, kept unreduced.
///
/// Used when evaluating quantities such as `(a_n + g_{n+4}) / e_{n+2}` on a
/// symbolic table: the value is a rational function, and equality is decided
/// by cross-multiplication.
#[derive(Clone, Debug)]
pub struct LaurentFrac {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl LaurentFrac {
    pub fn new(num: LaurentPoly) -> Self {
        let den = num.one_like();
        LaurentFrac { num, den }
    }

    fn den_is_one(&self) -> bool {
        self.den.is_monomial() && self.den == self.den.one_like()
    }

    /// Folds the denominator into the numerator when the quotient is a
    /// Laurent polynomial. Products of many quotients otherwise carry
    /// denominators that grow without bound.
    fn tidy(mut self) -> Self {
        if !self.den_is_one() {
            if let Ok(q) = self.num.exact_div(&self.den) {
                self.den = self.den.one_like();
                self.num = q;
            }
        }
        self
    }

    /// The Laurent polynomial this fraction equals, if the division is exact.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        self.num.exact_div(&self.den)
    }
}

impl Scalar for LaurentFrac {
    fn int_like(&self, k: i64) -> Self {
        LaurentFrac::new(self.num.int_like(k))
    }
    fn plus(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return LaurentFrac {
                num: self.num.plus(&rhs.num),
                den: self.den.clone(),
            };
        }
        if rhs.den_is_one() {
            return LaurentFrac {
                num: self.num.plus(&rhs.num.times(&self.den)),
                den: self.den.clone(),
            };
        }
        if self.den_is_one() {
            return LaurentFrac {
                num: self.num.times(&rhs.den).plus(&rhs.num),
                den: rhs.den.clone(),
            };
        }
        LaurentFrac {
            num: self.num.times(&rhs.den).plus(&rhs.num.times(&self.den)),
            den: self.den.times(&rhs.den),
        }
        .tidy()
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn negated(&self) -> Self {
        LaurentFrac {
            num: self.num.negated(),
            den: self.den.clone(),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        LaurentFrac {
            num: self.num.times(&rhs.num),
            den: self.den.times(&rhs.den),
        }
        .tidy()
    }
    fn divide(&self, rhs: &Self) -> Result<Self> {
        if rhs.num.is_zero() {
            return Err(Error::BadSpecialization("division by zero".into()));
        }
        Ok(LaurentFrac {
            num: self.num.times(&rhs.den),
            den: self.den.times(&rhs.num),
        }
        .tidy())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn same(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.times(&other.den) == other.num.times(&self.den)
    }
}
