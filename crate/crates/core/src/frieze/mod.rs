//! Frieze patterns: the sink-first mutation dynamics on an acyclic quiver.
//!
//! Column `n + 1` is obtained from column `n` by mutating every vertex once,
//! in an admissible order, so each vertex is a sink when it is mutated:
//! `X^k_{n+1} X^k_n = 1 + ∏ (current neighbour values)`.

mod seed;
mod sequence;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::{self, Matrix};
use crate::exact::{DualRat, LaurentFrac, LaurentPoly, Rat, Scalar};
use crate::quiver::{ExchangeMatrix, Quiver};

pub use seed::{draw_seed_values, SeedDraw};
pub use sequence::{a_type_sequence, Sequence};

/// Default cap on the total number of Laurent terms in a symbolic table.
pub const DEFAULT_TERM_BUDGET: usize = 2_000_000;

/// Term-by-term products allowed per budgeted term over a whole symbolic
/// table. Term counts alone do not bound the time: Ẽ7 at depth 6 stays
/// within the term budget but takes over a minute to multiply out.
const WORK_PER_TERM: u128 = 2_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Specialized,
}

/// One frieze step: mutate every vertex once in `order`, using current
/// values and the current exchange matrix.
pub fn frieze_step<V: Scalar>(quiver: &Quiver, order: &[usize], x: &[V]) -> Result<Vec<V>> {
    step_metered(quiver, order, x, &mut None)
}

/// Remaining allowance of term operations; a product or quotient whose
/// operand sizes multiply past it is refused before it is computed.
struct Meter(u128);

impl Meter {
    fn charge(meter: &mut Option<Meter>, a: usize, b: usize) -> Result<()> {
        if let Some(Meter(left)) = meter {
            let cost = a as u128 * b as u128;
            if cost > *left {
                return Err(Error::SymbolicBudgetExceeded { terms: 0, budget: 0 });
            }
            *left -= cost;
        }
        Ok(())
    }
}

fn metered_times<V: Scalar>(a: &V, b: &V, meter: &mut Option<Meter>) -> Result<V> {
    Meter::charge(meter, a.size(), b.size())?;
    Ok(a.times(b))
}

fn step_metered<V: Scalar>(quiver: &Quiver, order: &[usize], x: &[V], meter: &mut Option<Meter>) -> Result<Vec<V>> {
    let mut b: ExchangeMatrix = quiver.b.clone();
    let mut x = x.to_vec();
    for &k in order {
        let mut into = x[k].one_like();
        let mut out = x[k].one_like();
        for i in 0..x.len() {
            let bik = b.get(i, k);
            let side = match bik.cmp(&0) {
                std::cmp::Ordering::Greater => &mut into,
                std::cmp::Ordering::Less => &mut out,
                std::cmp::Ordering::Equal => continue,
            };
            for _ in 0..bik.unsigned_abs() {
                *side = metered_times(side, &x[i], meter)?;
            }
        }
        let num = into.plus(&out);
        Meter::charge(meter, num.size(), x[k].size())?;
        x[k] = num.divide(&x[k]).map_err(|e| match e {
            Error::DivisionNotExact => Error::LaurentViolation { vertex: k, column: 0 },
            e => e,
        })?;
        b = b.mutate(k);
    }
    Ok(x)
}

/// Columns `0..depth` of a frieze, each a full vertex vector.
#[derive(Clone, Debug)]
pub struct FriezeTable<V> {
    pub quiver: Quiver,
    pub order: Vec<usize>,
    columns: Vec<Vec<V>>,
}

impl<V: Scalar> FriezeTable<V> {
    pub fn new(quiver: &Quiver, initial: Vec<V>) -> Result<Self> {
        if initial.len() != quiver.n_vertices() {
            return Err(Error::Usage(format!(
                "{} initial values for {} vertices",
                initial.len(),
                quiver.n_vertices()
            )));
        }
        Ok(FriezeTable {
            quiver: quiver.clone(),
            order: quiver.admissible_order()?,
            columns: vec![initial],
        })
    }

    pub fn depth(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<V>] {
        &self.columns
    }

    pub fn column(&self, n: usize) -> &[V] {
        &self.columns[n]
    }

    pub fn get(&self, v: usize, n: usize) -> Option<&V> {
        self.columns.get(n).and_then(|c| c.get(v))
    }

    /// Extends the table so that columns `0..=n_max` exist.
    pub fn extend_to(&mut self, n_max: usize) -> Result<()> {
        while self.columns.len() <= n_max {
            let last = self.columns.last().unwrap();
            let column = self.columns.len();
            let next = frieze_step(&self.quiver, &self.order, last).map_err(|e| match e {
                Error::LaurentViolation { vertex, .. } => Error::LaurentViolation { vertex, column },
                e => e,
            })?;
            self.columns.push(next);
        }
        Ok(())
    }
}

impl FriezeTable<LaurentPoly> {
    /// Symbolic frieze in the initial variables (named by the vertex labels)
    /// to column `n_max`, aborting once the table holds more than `budget`
    /// terms or the next column would cost too much to multiply out.
    pub fn symbolic(quiver: &Quiver, n_max: usize, budget: usize) -> Result<Self> {
        match Self::symbolic_within(quiver, n_max, budget)? {
            (t, None) => Ok(t),
            (_, Some(e)) => Err(e),
        }
    }

    /// Like [`FriezeTable::symbolic`], but on hitting the budget returns the
    /// columns built so far together with the budget error.
    pub fn symbolic_within(quiver: &Quiver, n_max: usize, budget: usize) -> Result<(Self, Option<Error>)> {
        let (t, _, stop) = Self::symbolic_around(quiver, 0, n_max, budget)?;
        Ok((t, stop))
    }

    /// Symbolic frieze reaching up to `back` columns before the initial
    /// cluster and `ahead` columns after it, growing whichever side is
    /// shorter. Entries grow with their distance from the initial cluster,
    /// so a table centred on it spans more columns for the same work.
    /// Returns the table, the index of the initial cluster within it, and
    /// the budget error if the budget stopped it early.
    pub fn symbolic_around(
        quiver: &Quiver,
        back: usize,
        ahead: usize,
        budget: usize,
    ) -> Result<(Self, usize, Option<Error>)> {
        let init = LaurentPoly::variables(&quiver.labels);
        let mut t = Self::new(quiver, init)?;
        // Mutations are involutions and a full step returns the quiver to
        // itself, so the reversed order steps backwards.
        let reversed: Vec<usize> = t.order.iter().rev().copied().collect();
        let mut terms: usize = t.columns[0].iter().map(|p| p.n_terms()).sum();
        let mut meter = Some(Meter(budget as u128 * WORK_PER_TERM));
        // Work spent on the last two columns on each side. Extrapolating the
        // growth overshoots, so only a column predicted far beyond the
        // remaining allowance is refused up front; the meter stops the rest.
        let mut costs = [(0u128, 0u128); 2];
        let (mut before, mut after) = (0usize, 0usize);
        loop {
            let forward = match (before < back, after < ahead) {
                (false, false) => break,
                (true, true) => after <= before,
                (more_back, _) => !more_back,
            };
            let (prev_cost, last_cost) = costs[forward as usize];
            let left = meter.as_ref().map_or(0, |m| m.0);
            if prev_cost > 0 && last_cost.saturating_mul(last_cost) / prev_cost > left.saturating_mul(4) {
                return Ok((t, before, Some(Error::SymbolicBudgetExceeded { terms, budget })));
            }
            let (from, order, column) = match forward {
                true => (t.columns.last().unwrap(), &t.order, after + 1),
                false => (&t.columns[0], &reversed, before + 1),
            };
            let next = match step_metered(&t.quiver, order, from, &mut meter) {
                Ok(next) => next,
                Err(Error::SymbolicBudgetExceeded { .. }) => {
                    return Ok((t, before, Some(Error::SymbolicBudgetExceeded { terms, budget })));
                }
                Err(Error::LaurentViolation { vertex, .. }) => return Err(Error::LaurentViolation { vertex, column }),
                Err(e) => return Err(e),
            };
            let added: usize = next.iter().map(|p| p.n_terms()).sum();
            if terms + added > budget {
                return Ok((t, before, Some(Error::SymbolicBudgetExceeded { terms: terms + added, budget })));
            }
            terms += added;
            if forward {
                t.columns.push(next);
                after += 1;
            } else {
                t.columns.insert(0, next);
                before += 1;
            }
            costs[forward as usize] = (last_cost, left - meter.as_ref().map_or(0, |m| m.0));
        }
        Ok((t, before, None))
    }

    pub fn total_terms(&self) -> usize {
        self.columns.iter().flatten().map(|p| p.n_terms()).sum()
    }

    /// True when every entry has only positive coefficients.
    pub fn positive(&self) -> bool {
        self.columns.iter().flatten().all(|p| p.has_positive_coefficients())
    }

    /// Evaluates every entry at a point, giving the specialized table.
    pub fn specialize(&self, point: &[Rat]) -> Result<FriezeTable<Rat>> {
        let columns = self
            .columns
            .iter()
            .map(|c| c.iter().map(|p| p.eval(point)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(FriezeTable {
            quiver: self.quiver.clone(),
            order: self.order.clone(),
            columns,
        })
    }
}

impl FriezeTable<Rat> {
    pub fn specialized(quiver: &Quiver, initial: Vec<Rat>, n_max: usize) -> Result<Self> {
        let mut t = Self::new(quiver, initial)?;
        t.extend_to(n_max)?;
        Ok(t)
    }

    /// The frieze with all initial values equal to one.
    pub fn units(quiver: &Quiver, n_max: usize) -> Result<Self> {
        let one = Rat::from_integer(1.into());
        Self::specialized(quiver, vec![one; quiver.n_vertices()], n_max)
    }
}

/// Value types that can be read out of a table for expression evaluation.
/// Laurent entries become fractions so that quotients stay exact.
pub trait Lift {
    type Q: Scalar;
    fn lift(&self) -> Self::Q;
}

impl Lift for Rat {
    type Q = Rat;
    fn lift(&self) -> Rat {
        self.clone()
    }
}

impl Lift for DualRat {
    type Q = DualRat;
    fn lift(&self) -> DualRat {
        self.clone()
    }
}

impl Lift for LaurentPoly {
    type Q = LaurentFrac;
    fn lift(&self) -> LaurentFrac {
        LaurentFrac::new(self.clone())
    }
}

/// Anything indexed by (vertex, time) that quantities can be evaluated on.
pub trait Grid: Sync {
    type Value: Scalar;
    fn n_vertices(&self) -> usize;
    fn depth(&self) -> usize;
    fn entry(&self, vertex: usize, n: i64) -> Option<Self::Value>;
}

impl<V: Scalar + Lift + Sync> Grid for FriezeTable<V> {
    type Value = V::Q;
    fn n_vertices(&self) -> usize {
        self.quiver.n_vertices()
    }
    fn depth(&self) -> usize {
        self.columns.len()
    }
    fn entry(&self, vertex: usize, n: i64) -> Option<V::Q> {
        if n < 0 {
            return None;
        }
        self.get(vertex, n as usize).map(Lift::lift)
    }
}

/// Jacobian `∂x'_i / ∂x_j` of one frieze step at a specialized point.
pub fn jacobian_of_step(quiver: &Quiver, x: &[Rat]) -> Result<Matrix<Rat>> {
    let order = quiver.admissible_order()?;
    let next = frieze_step(quiver, &order, &DualRat::seed(x))?;
    Ok(next.into_iter().map(|d| d.grad).collect())
}

/// `Ω(x)_{ij} = b_ij / (x_i x_j)`.
pub fn log_canonical_form(b: &ExchangeMatrix, x: &[Rat]) -> Result<Matrix<Rat>> {
    if x.iter().any(Zero::is_zero) {
        return Err(Error::BadSpecialization("zero coordinate".into()));
    }
    let n = x.len();
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| Rat::from_integer(b.get(i, j).into()) / (&x[i] * &x[j]))
                .collect()
        })
        .collect())
}

/// Checks `Jᵀ Ω(φ(x)) J = Ω(x)` for one frieze step φ.
pub fn presymplectic_check(quiver: &Quiver, x: &[Rat]) -> Result<bool> {
    let order = quiver.admissible_order()?;
    let y = frieze_step(quiver, &order, x)?;
    let j = jacobian_of_step(quiver, x)?;
    let lhs = matrix::mat_mul(
        &matrix::mat_mul(&matrix::transpose(&j), &log_canonical_form(&quiver.b, &y)?),
        &j,
    );
    Ok(lhs == log_canonical_form(&quiver.b, x)?)
}
