use super::{Grid, Lift};
use crate::error::{Error, Result};
use crate::exact::Scalar;

/// A single sequence viewed as a one-vertex grid.
#[derive(Clone, Debug)]
pub struct Sequence<V> {
    pub values: Vec<V>,
}

impl<V: Scalar + Lift + Sync> Grid for Sequence<V> {
    type Value = V::Q;
    fn n_vertices(&self) -> usize {
        1
    }
    fn depth(&self) -> usize {
        self.values.len()
    }
    fn entry(&self, vertex: usize, n: i64) -> Option<V::Q> {
        if vertex != 0 || n < 0 {
            return None;
        }
        self.values.get(n as usize).map(Lift::lift)
    }
}

/// `x_{n+p+q} x_n = x_{n+p} x_{n+q} + 1`, from `p + q` initial values, up to
/// `len` terms.
pub fn a_type_sequence<V: Scalar>(p: usize, q: usize, init: Vec<V>, len: usize) -> Result<Sequence<V>> {
    let m = p + q;
    if init.len() != m {
        return Err(Error::Usage(format!("A({p},{q}) needs {m} initial values")));
    }
    let mut x = init;
    while x.len() < len {
        let n = x.len() - m;
        let next = x[n + p]
            .times(&x[n + q])
            .plus(&x[n].one_like())
            .divide(&x[n])
            .map_err(|e| match e {
                Error::DivisionNotExact => Error::LaurentViolation { vertex: 0, column: n + m },
                e => e,
            })?;
        x.push(next);
    }
    Ok(Sequence { values: x })
}
