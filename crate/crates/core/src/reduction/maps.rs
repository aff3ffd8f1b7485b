//! Closed-form reduced maps, one per family, generic over the scalar type so
//! that dual numbers give their Jacobians for free.

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::quiver::Family;

fn check_nonzero<V: Scalar>(y: &[V]) -> Result<()> {
    if y.iter().any(Scalar::is_zero) {
        return Err(Error::BadSpecialization("zero reduced coordinate".into()));
    }
    Ok(())
}

/// `1 + a`.
fn inc<V: Scalar>(a: &V) -> V {
    a.plus(&a.one_like())
}

type Map<V> = fn(&[V]) -> Result<Vec<V>>;

fn explicit_map<V: Scalar>(family: Family) -> Option<Map<V>> {
    Some(match family {
        Family::D { n } if n % 2 == 1 && n >= 5 => d_odd,
        Family::D { n: 6 } => d6,
        Family::E6 => e6,
        Family::E7 => e7,
        Family::E8 => e8,
        _ => return None,
    })
}

pub fn has_explicit_step(family: Family) -> bool {
    explicit_map::<crate::exact::Rat>(family).is_some()
}

/// The explicit reduced map, if the family has one.
pub fn explicit_step<V: Scalar>(family: Family, y: &[V]) -> Option<Result<Vec<V>>> {
    let f = explicit_map(family)?;
    Some(check_nonzero(y).and_then(|_| f(y)))
}

/// `y = (p, X3, …, X^{N−1}, q)` with `p = X1 X2`, `q = X^N X^{N+1}`. Sinks
/// (odd chain vertices, the two ends) move first, then the sources.
fn d_odd<V: Scalar>(y: &[V]) -> Result<Vec<V>> {
    let len = y.len();
    // Chain vertex X^k sits at index k - 2.
    let last = len - 2; // X^{N-1}
    let mut z = y.to_vec();
    z[1] = inc(&y[0].times(&y[2])).divide(&y[1])?;
    for i in (3..last).step_by(2) {
        z[i] = inc(&y[i - 1].times(&y[i + 1])).divide(&y[i])?;
    }
    let ql = inc(&y[last]);
    z[len - 1] = ql.times(&ql).divide(&y[len - 1])?;
    let pl = inc(&z[1]);
    z[0] = pl.times(&pl).divide(&y[0])?;
    for i in (2..last).step_by(2) {
        z[i] = inc(&z[i - 1].times(&z[i + 1])).divide(&y[i])?;
    }
    z[last] = inc(&z[len - 1].times(&z[last - 1])).divide(&y[last])?;
    Ok(z)
}

/// `y = (X3, p, q, X5)` with `p = X1 X2 X4`, `q = X4 X6 X7`.
fn d6<V: Scalar>(y: &[V]) -> Result<Vec<V>> {
    let x3 = inc(&y[1]).divide(&y[0])?;
    let x5 = inc(&y[2]).divide(&y[3])?;
    let mid = inc(&x3.times(&x5));
    let (a, b) = (inc(&x3), inc(&x5));
    let p = a.times(&a).times(&mid).divide(&y[1])?;
    let q = mid.times(&b).times(&b).divide(&y[2])?;
    Ok(vec![x3, p, q, x5])
}

fn e6<V: Scalar>(y: &[V]) -> Result<Vec<V>> {
    let t = inc(&y[1].times(&y[3]).times(&y[5]));
    let y1 = inc(&y[1]).times(&t).divide(&y[0])?;
    let y2 = inc(&y1).divide(&y[1])?;
    let y3 = t.times(&inc(&y[3])).divide(&y[2])?;
    let y4 = inc(&y3).divide(&y[3])?;
    let y5 = t.times(&inc(&y[5])).divide(&y[4])?;
    let y6 = inc(&y5).divide(&y[5])?;
    Ok(vec![y1, y2, y3, y4, y5, y6])
}

fn e7<V: Scalar>(y: &[V]) -> Result<Vec<V>> {
    let s = inc(&y[1].times(&y[3]));
    let t = inc(&y[3].times(&y[5]));
    let y1 = inc(&y[1]).times(&s).divide(&y[0])?;
    let y2 = inc(&y1).divide(&y[1])?;
    let y3 = s.times(&inc(&y[3])).times(&t).divide(&y[2])?;
    let y4 = inc(&y3).divide(&y[3])?;
    let y5 = t.times(&inc(&y[5])).divide(&y[4])?;
    let y6 = inc(&y5).divide(&y[5])?;
    Ok(vec![y1, y2, y3, y4, y5, y6])
}

fn e8<V: Scalar>(y: &[V]) -> Result<Vec<V>> {
    let s = inc(&y[1].times(&y[3]));
    let t = inc(&y[3].times(&y[5]));
    let u = inc(&y[5].times(&y[7]));
    let y1 = inc(&y[1]).times(&s).divide(&y[0])?;
    let y2 = inc(&y1).divide(&y[1])?;
    let y3 = s.times(&t).divide(&y[2])?;
    let y4 = inc(&y3).divide(&y[3])?;
    let y5 = t.times(&inc(&y[5])).times(&u).divide(&y[4])?;
    let y6 = inc(&y5).divide(&y[5])?;
    let y7 = u.divide(&y[6])?;
    let y8 = inc(&y7).divide(&y[7])?;
    Ok(vec![y1, y2, y3, y4, y5, y6, y7, y8])
}
