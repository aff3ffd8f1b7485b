//! A small expression language over frieze entries.
//!
//! Quantities are data, not code: `(x(A, 0) + x(G, 4)) / x(E, 2)` records
//! exactly which entries it reads, so windows can be computed and the same
//! definition evaluates on rational, dual or symbolic tables.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exact::Scalar;
use crate::frieze::Grid;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Entry { vertex: usize, offset: i64 },
    Int(i64),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
}

/// Entry `X^vertex_{n + offset}`.
pub fn x(vertex: usize, offset: i64) -> Expr {
    Expr::Entry { vertex, offset }
}

pub fn int(k: i64) -> Expr {
    Expr::Int(k)
}

impl Expr {
    /// The same expression read `k` steps later.
    pub fn shifted(&self, k: i64) -> Expr {
        use Expr::*;
        match self {
            Entry { vertex, offset } => Entry {
                vertex: *vertex,
                offset: offset + k,
            },
            Int(c) => Int(*c),
            Add(a, b) => Add(Box::new(a.shifted(k)), Box::new(b.shifted(k))),
            Sub(a, b) => Sub(Box::new(a.shifted(k)), Box::new(b.shifted(k))),
            Mul(a, b) => Mul(Box::new(a.shifted(k)), Box::new(b.shifted(k))),
            Div(a, b) => Div(Box::new(a.shifted(k)), Box::new(b.shifted(k))),
            Neg(a) => Neg(Box::new(a.shifted(k))),
        }
    }

    /// Smallest and largest time offsets read; `None` for constants.
    pub fn window(&self) -> Option<(i64, i64)> {
        use Expr::*;
        let merge = |a: Option<(i64, i64)>, b: Option<(i64, i64)>| match (a, b) {
            (Some((l1, h1)), Some((l2, h2))) => Some((l1.min(l2), h1.max(h2))),
            (a, None) => a,
            (None, b) => b,
        };
        match self {
            Entry { offset, .. } => Some((*offset, *offset)),
            Int(_) => None,
            Add(a, b) | Sub(a, b) | Mul(a, b) | Div(a, b) => merge(a.window(), b.window()),
            Neg(a) => a.window(),
        }
    }

    /// Every vertex the expression reads.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let Expr::Entry { vertex, .. } = e {
                out.push(*vertex);
            }
        });
        out.sort_unstable();
        out.dedup();
        out
    }

    fn visit(&self, f: &mut impl FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.visit(f);
                b.visit(f);
            }
            Expr::Neg(a) => a.visit(f),
            _ => {}
        }
    }

    /// Smallest `n` at which every offset is nonnegative.
    pub fn first_n(&self) -> i64 {
        self.window().map_or(0, |(lo, _)| (-lo).max(0))
    }

    /// Evaluates at time `n` on a grid.
    pub fn eval<G: Grid>(&self, grid: &G, n: i64) -> Result<G::Value> {
        let probe = self.sample(grid)?;
        self.eval_with(grid, n, &probe)
    }

    fn sample<G: Grid>(&self, grid: &G) -> Result<G::Value> {
        grid.entry(0, 0).ok_or(Error::OutOfWindow {
            lo: 0,
            hi: 0,
            depth: grid.depth(),
        })
    }

    fn eval_with<G: Grid>(&self, grid: &G, n: i64, probe: &G::Value) -> Result<G::Value> {
        use Expr::*;
        Ok(match self {
            Entry { vertex, offset } => {
                let t = n + offset;
                grid.entry(*vertex, t).ok_or(Error::OutOfWindow {
                    lo: t,
                    hi: t,
                    depth: grid.depth(),
                })?
            }
            Int(c) => probe.int_like(*c),
            Add(a, b) => a.eval_with(grid, n, probe)?.plus(&b.eval_with(grid, n, probe)?),
            Sub(a, b) => a.eval_with(grid, n, probe)?.minus(&b.eval_with(grid, n, probe)?),
            Mul(a, b) => a.eval_with(grid, n, probe)?.times(&b.eval_with(grid, n, probe)?),
            Div(a, b) => a.eval_with(grid, n, probe)?.divide(&b.eval_with(grid, n, probe)?)?,
            Neg(a) => a.eval_with(grid, n, probe)?.negated(),
        })
    }

    pub fn sum(items: impl IntoIterator<Item = Expr>) -> Expr {
        items.into_iter().reduce(|a, b| a + b).unwrap_or(Expr::Int(0))
    }

    pub fn product(items: impl IntoIterator<Item = Expr>) -> Expr {
        items.into_iter().reduce(|a, b| a * b).unwrap_or(Expr::Int(1))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $var:ident) => {
        impl $tr for Expr {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$var(Box::new(self), Box::new(rhs))
            }
        }
        impl $tr<i64> for Expr {
            type Output = Expr;
            fn $m(self, rhs: i64) -> Expr {
                Expr::$var(Box::new(self), Box::new(Expr::Int(rhs)))
            }
        }
        impl $tr<Expr> for i64 {
            type Output = Expr;
            fn $m(self, rhs: Expr) -> Expr {
                Expr::$var(Box::new(Expr::Int(self)), Box::new(rhs))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);
binop!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}
