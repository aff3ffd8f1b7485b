//! Dense exact matrices.
//!
//! Matrices are plain `Vec<Vec<_>>` in row-major order; the sizes here never
//! exceed a dozen rows, so there is no need for a dedicated type.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Rat, Scalar};
use crate::error::{Error, Result};

pub type Matrix<T> = Vec<Vec<T>>;

pub fn mat_mul<V: Scalar>(a: &Matrix<V>, b: &Matrix<V>) -> Matrix<V> {
    let inner = b.len();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| {
                    let mut acc = row[0].times(&b[0][j]);
                    for k in 1..inner {
                        acc = acc.plus(&row[k].times(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &Matrix<T>) -> Matrix<T> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn trace2<V: Scalar>(m: &Matrix<V>) -> V {
    m[0][0].plus(&m[1][1])
}

pub fn det2<V: Scalar>(m: &Matrix<V>) -> V {
    m[0][0].times(&m[1][1]).minus(&m[0][1].times(&m[1][0]))
}

pub fn det3<V: Scalar>(m: &Matrix<V>) -> V {
    let minor = |r: usize, c: usize| {
        let rows: Vec<usize> = (0..3).filter(|&i| i != r).collect();
        let cols: Vec<usize> = (0..3).filter(|&j| j != c).collect();
        m[rows[0]][cols[0]]
            .times(&m[rows[1]][cols[1]])
            .minus(&m[rows[0]][cols[1]].times(&m[rows[1]][cols[0]]))
    };
    m[0][0]
        .times(&minor(0, 0))
        .minus(&m[0][1].times(&minor(0, 1)))
        .plus(&m[0][2].times(&minor(0, 2)))
}

pub fn int_to_rat(m: &Matrix<i64>) -> Matrix<Rat> {
    m.iter()
        .map(|r| r.iter().map(|&x| Rat::from_integer(x.into())).collect())
        .collect()
}

/// Scales each row by the lcm of its denominators.
fn clear_denominators(m: &Matrix<Rat>) -> Matrix<BigInt> {
    m.iter()
        .map(|row| {
            let l = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect()
}

/// Fraction-free (Bareiss) forward elimination. Returns the rank and the
/// determinant of the square case (sign tracked through row swaps).
fn bareiss(mut a: Matrix<BigInt>) -> (usize, BigInt) {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !Zero::is_zero(&a[r][c])) else {
            continue;
        };
        if p != rank {
            a.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&a[r][k] * &a[rank][c] - &a[r][c] * &a[rank][k]) / &prev;
                a[r][k] = v;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    let det = if rows == cols && rank == rows && rows > 0 {
        sign * prev
    } else if rows == 0 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    (rank, det)
}

pub fn rank(m: &Matrix<Rat>) -> usize {
    bareiss(clear_denominators(m)).0
}

pub fn det_int(m: &Matrix<i64>) -> BigInt {
    let a = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss(a).1
}

/// Exact inverse by Gauss-Jordan over the rationals; `None` if singular.
pub fn inverse(m: &Matrix<Rat>) -> Option<Matrix<Rat>> {
    let n = m.len();
    let mut a: Matrix<Rat> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !Zero::is_zero(&a[r][c]))?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        for r in 0..n {
            if r != c && !Zero::is_zero(&a[r][c]) {
                let f = a[r][c].clone();
                for k in 0..2 * n {
                    let v = &a[c][k] * &f;
                    a[r][k] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn checked(x: Option<i64>) -> Result<i64> {
    x.ok_or(Error::IntegerOverflow)
}

/// Row-style Hermite normal form of the lattice spanned by the rows of `gens`.
/// Zero rows are dropped, so the result is a canonical Z-basis.
pub fn hnf(gens: &Matrix<i64>) -> Result<Matrix<i64>> {
    let mut a: Matrix<i64> = gens.to_vec();
    if a.is_empty() {
        return Ok(a);
    }
    let cols = a[0].len();
    let mut r = 0;
    for c in 0..cols {
        // Euclid down column c among rows r..
        loop {
            let nz: Vec<usize> = (r..a.len()).filter(|&i| a[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..a.len() {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    for k in 0..cols {
                        a[i][k] = checked(a[i][k].checked_sub(checked(q.checked_mul(a[r][k]))?))?;
                    }
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < a.len() && a[r][c] != 0 {
            if a[r][c] < 0 {
                for k in 0..cols {
                    a[r][k] = -a[r][k];
                }
            }
            for i in 0..r {
                let q = a[i][c].div_euclid(a[r][c]);
                if q != 0 {
                    for k in 0..cols {
                        a[i][k] = checked(a[i][k].checked_sub(checked(q.checked_mul(a[r][k]))?))?;
                    }
                }
            }
            r += 1;
        }
    }
    a.truncate(r);
    Ok(a)
}

/// True when the two row sets span the same Z-lattice.
pub fn same_lattice(a: &Matrix<i64>, b: &Matrix<i64>) -> Result<bool> {
    Ok(hnf(a)? == hnf(b)?)
}

/// Z-basis of `{v : m v = 0}`, computed by unimodular column reduction of
/// `m`; the columns of the transform that end up over zero columns of the
/// reduced matrix span the (saturated) kernel lattice.
pub fn integer_kernel(m: &Matrix<i64>) -> Result<Matrix<i64>> {
    let rows = m.len();
    let n = if rows == 0 { 0 } else { m[0].len() };
    // Work on the transpose with an identity appended: row operations on
    // [m^T | I] are column operations on m.
    let mut a: Matrix<i64> = (0..n)
        .map(|j| {
            let mut row: Vec<i64> = (0..rows).map(|i| m[i][j]).collect();
            row.extend((0..n).map(|k| i64::from(k == j)));
            row
        })
        .collect();
    let mut r = 0;
    for c in 0..rows {
        loop {
            let nz: Vec<usize> = (r..n).filter(|&i| a[i][c] != 0).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&i| a[i][c].abs()).unwrap();
            a.swap(r, p);
            let mut done = true;
            for i in r + 1..n {
                if a[i][c] != 0 {
                    let q = a[i][c].div_euclid(a[r][c]);
                    for k in 0..rows + n {
                        a[i][k] = checked(a[i][k].checked_sub(checked(q.checked_mul(a[r][k]))?))?;
                    }
                    if a[i][c] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if r < n && a[r][c] != 0 {
            r += 1;
        }
    }
    Ok(a[r..].iter().map(|row| row[rows..].to_vec()).collect())
}

/// Integer inverse of a unimodular matrix.
pub fn unimodular_inverse(m: &Matrix<i64>) -> Option<Matrix<i64>> {
    let d = det_int(m);
    if d.abs() != BigInt::one() {
        return None;
    }
    let inv = inverse(&int_to_rat(m))?;
    inv.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    if x.is_integer() {
                        i64::try_from(x.numer()).ok()
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect()
}
