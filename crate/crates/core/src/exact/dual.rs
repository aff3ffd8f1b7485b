use num_traits::Zero;

use super::{Rat, Scalar};
use crate::error::{Error, Result};

/// Forward-mode dual number: an exact value and its gradient with respect to
/// a fixed list of seed variables.
#[derive(Clone, Debug, PartialEq)]
pub struct DualRat {
    pub value: Rat,
    pub grad: Vec<Rat>,
}

impl DualRat {
    pub fn constant(value: Rat, slots: usize) -> Self {
        DualRat {
            value,
            grad: vec![Rat::zero(); slots],
        }
    }

    /// The `i`-th seed variable with value `value`.
    pub fn variable(value: Rat, i: usize, slots: usize) -> Self {
        let mut d = Self::constant(value, slots);
        d.grad[i] = Rat::from_integer(1.into());
        d
    }

    /// Seeds every coordinate of `point` as its own variable.
    pub fn seed(point: &[Rat]) -> Vec<Self> {
        point
            .iter()
            .enumerate()
            .map(|(i, v)| Self::variable(v.clone(), i, point.len()))
            .collect()
    }

    pub fn slots(&self) -> usize {
        self.grad.len()
    }
}

impl Scalar for DualRat {
    fn int_like(&self, k: i64) -> Self {
        Self::constant(Rat::from_integer(k.into()), self.grad.len())
    }
    fn plus(&self, rhs: &Self) -> Self {
        DualRat {
            value: &self.value + &rhs.value,
            grad: self.grad.iter().zip(&rhs.grad).map(|(a, b)| a + b).collect(),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        DualRat {
            value: &self.value - &rhs.value,
            grad: self.grad.iter().zip(&rhs.grad).map(|(a, b)| a - b).collect(),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        DualRat {
            value: &self.value * &rhs.value,
            grad: self
                .grad
                .iter()
                .zip(&rhs.grad)
                .map(|(a, b)| a * &rhs.value + &self.value * b)
                .collect(),
        }
    }
    fn divide(&self, rhs: &Self) -> Result<Self> {
        if Zero::is_zero(&rhs.value) {
            return Err(Error::BadSpecialization("dual division by zero".into()));
        }
        let q = &self.value / &rhs.value;
        let grad = self
            .grad
            .iter()
            .zip(&rhs.grad)
            .map(|(a, b)| (a - &q * b) / &rhs.value)
            .collect();
        Ok(DualRat { value: q, grad })
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.value)
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}
