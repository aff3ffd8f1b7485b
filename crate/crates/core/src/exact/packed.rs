//! Fast paths for Laurent arithmetic: a whole monomial packed into one
//! `u128` and `i128` coefficients. Every entry point returns `None` when
//! something does not fit, and the caller falls back to the general code.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::laurent::Monomial;

/// Field layout: variable 0 in the highest field, so numeric order on
/// nonnegative packed monomials is lexicographic order.
struct Layout {
    n: usize,
    width: u32,
}

impl Layout {
    fn new(n: usize) -> Option<Self> {
        if n == 0 || n > 16 {
            return None;
        }
        Some(Layout {
            n,
            width: (128 / n as u32).min(32),
        })
    }

    fn shift(&self, i: usize) -> u32 {
        (self.n - 1 - i) as u32 * self.width
    }

    fn mask(&self) -> u128 {
        (1u128 << self.width) - 1
    }

    fn half(&self) -> i64 {
        1i64 << (self.width - 1)
    }

    /// Each field holds `e + half`.
    fn pack_biased(&self, m: &Monomial) -> u128 {
        let h = self.half();
        m.0.iter()
            .enumerate()
            .fold(0, |acc, (i, &e)| acc | (((e as i64 + h) as u128) << self.shift(i)))
    }

    fn bias(&self) -> u128 {
        (0..self.n).fold(0, |acc, i| acc | ((self.half() as u128) << self.shift(i)))
    }

    fn unpack_biased(&self, p: u128) -> Monomial {
        let h = self.half();
        Monomial(
            (0..self.n)
                .map(|i| (((p >> self.shift(i)) & self.mask()) as i64 - h) as i32)
                .collect(),
        )
    }

    fn pack(&self, m: &Monomial) -> u128 {
        m.0.iter()
            .enumerate()
            .fold(0, |acc, (i, &e)| acc | ((e as u128) << self.shift(i)))
    }

    fn unpack(&self, p: u128) -> Monomial {
        Monomial((0..self.n).map(|i| ((p >> self.shift(i)) & self.mask()) as i32).collect())
    }

    /// Top bit of every field; a sum of guard-free values that sets one has
    /// left the safe range.
    fn guard(&self) -> u128 {
        (0..self.n).fold(0, |acc, i| acc | (1u128 << (self.shift(i) + self.width - 1)))
    }

    fn divides(&self, d: u128, m: u128) -> bool {
        let mask = self.mask();
        (0..self.n).all(|i| (d >> self.shift(i)) & mask <= (m >> self.shift(i)) & mask)
    }
}

fn max_abs(terms: &BTreeMap<Monomial, BigInt>) -> i64 {
    terms
        .keys()
        .flat_map(|m| m.0.iter())
        .map(|&e| (e as i64).abs())
        .max()
        .unwrap_or(0)
}

fn small(terms: &BTreeMap<Monomial, BigInt>) -> Option<Vec<(&Monomial, i128)>> {
    terms.iter().map(|(m, c)| Some((m, c.to_i128()?))).collect()
}

pub(super) fn mul(
    n: usize,
    a: &BTreeMap<Monomial, BigInt>,
    b: &BTreeMap<Monomial, BigInt>,
) -> Option<BTreeMap<Monomial, BigInt>> {
    let lay = Layout::new(n)?;
    if max_abs(a) + max_abs(b) >= lay.half() {
        return None;
    }
    let sa = small(a)?;
    let sb = small(b)?;
    let pa: Vec<(u128, i128)> = sa.iter().map(|(m, c)| (lay.pack_biased(m), *c)).collect();
    let pb: Vec<(u128, i128)> = sb.iter().map(|(m, c)| (lay.pack_biased(m), *c)).collect();
    let bias = lay.bias();
    let mut acc: HashMap<u128, i128> = HashMap::with_capacity((pa.len() * pb.len()).min(1 << 16));
    for &(ma, ca) in &pa {
        for &(mb, cb) in &pb {
            // Every field of the result fits, so arithmetic mod 2^128 is exact
            // even when the intermediate sum carries out of the top field.
            let e = acc.entry(ma.wrapping_add(mb).wrapping_sub(bias)).or_insert(0);
            *e = e.checked_add(ca.checked_mul(cb)?)?;
        }
    }
    Some(
        acc.into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (lay.unpack_biased(m), BigInt::from(c)))
            .collect(),
    )
}

/// Exact division of polynomials with nonnegative exponents. `None` means
/// "fall back"; `Some(None)` means the division is not exact.
pub(super) fn div(
    n: usize,
    num: &BTreeMap<Monomial, BigInt>,
    den: &BTreeMap<Monomial, BigInt>,
) -> Option<Option<Vec<(Monomial, BigInt)>>> {
    let lay = Layout::new(n)?;
    let top = |t: &BTreeMap<Monomial, BigInt>| -> Vec<i64> {
        (0..n)
            .map(|i| t.keys().map(|m| m.0[i] as i64).max().unwrap_or(0))
            .collect()
    };
    let half = lay.half();
    if top(num).iter().chain(&top(den)).any(|&e| e >= half) {
        return None;
    }
    let guard = lay.guard();
    let mut r: BTreeMap<u128, i128> = small(num)?.into_iter().map(|(m, c)| (lay.pack(m), c)).collect();
    let d: Vec<(u128, i128)> = small(den)?.into_iter().map(|(m, c)| (lay.pack(m), c)).collect();
    let &(lm, lc) = d.iter().max_by_key(|(m, _)| *m)?;
    let mut q = Vec::new();
    while let Some((&m, &c)) = r.iter().next_back() {
        if !lay.divides(lm, m) || c % lc != 0 {
            return Some(None);
        }
        let qm = m - lm;
        let qc = c / lc;
        for &(dm, dc) in &d {
            let key = dm + qm;
            if key & guard != 0 {
                return None;
            }
            let delta = dc.checked_mul(qc)?;
            let e = r.entry(key).or_insert(0);
            *e = e.checked_sub(delta)?;
            if *e == 0 {
                r.remove(&key);
            }
        }
        q.push((lay.unpack(qm), BigInt::from(qc)));
    }
    Some(Some(q))
}
