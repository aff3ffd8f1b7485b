use std::fmt::Debug;

use crate::error::Result;

/// A commutative ring element with fallible exact division.
///
/// Constants are produced from an existing value (`one_like`, `int_like`)
/// because symbolic and dual values carry context: a variable list or a
/// number of derivative slots.
pub trait Scalar: Clone + Debug + Send + Sync + Sized {
    fn int_like(&self, k: i64) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    /// Exact quotient. Zero divisors and non-exact divisions are errors.
    fn divide(&self, rhs: &Self) -> Result<Self>;
    fn is_zero(&self) -> bool;
    /// Value equality (cross-multiplied for fractions).
    fn same(&self, other: &Self) -> bool;

    /// Rough storage size, used to meter symbolic work. One for numbers.
    fn size(&self) -> usize {
        1
    }

    fn zero_like(&self) -> Self {
        self.int_like(0)
    }

    fn one_like(&self) -> Self {
        self.int_like(1)
    }

    fn negated(&self) -> Self {
        self.zero_like().minus(self)
    }

    /// Integer power; negative exponents divide.
    fn pow_i(&self, e: i64) -> Result<Self> {
        if e == 1 {
            return Ok(self.clone());
        }
        let mut acc = self.one_like();
        let mut base = self.clone();
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.times(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.times(&base);
            }
        }
        if e < 0 {
            acc.one_like().divide(&acc)
        } else {
            Ok(acc)
        }
    }
}
