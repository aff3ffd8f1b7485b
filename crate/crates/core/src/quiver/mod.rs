//! Quivers as skew-symmetric exchange matrices, the affine families, quiver
//! mutation and admissible (sink-first) mutation orders.

mod build;
mod file;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::matrix::Matrix;

pub use build::build_affine_quiver;
pub use file::QuiverFile;

/// Affine Dynkin family, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Ã with `p` and `q` arrows in the two directions, `p + q` vertices.
    A { p: usize, q: usize },
    /// D̃_N with `N + 1` vertices.
    D { n: usize },
    E6,
    E7,
    E8,
    /// Anything loaded from a file that is not one of the above.
    Custom,
}

impl Family {
    pub fn parse(name: &str, n: Option<usize>, p: Option<usize>, q: Option<usize>) -> Result<Self> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::Usage(format!("family {name} needs --{what}")))
        };
        match name.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A {
                p: need(p, "p")?,
                q: need(q, "q")?,
            }),
            "D" => Ok(Family::D { n: need(n, "N")? }),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            "E8" => Ok(Family::E8),
            _ => Err(Error::Usage(format!("unknown family {name:?}"))),
        }
    }

    /// Short identifier used in reports, e.g. `D5`, `A(2,3)`, `E6`.
    pub fn tag(&self) -> String {
        match self {
            Family::A { p, q } => format!("A({p},{q})"),
            Family::D { n } => format!("D{n}"),
            Family::E6 => "E6".into(),
            Family::E7 => "E7".into(),
            Family::E8 => "E8".into(),
            Family::Custom => "custom".into(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

/// Skew-symmetric integer matrix; `b[i][j]` counts arrows `i -> j` minus
/// arrows `j -> i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExchangeMatrix(pub Matrix<i64>);

impl ExchangeMatrix {
    pub fn new(b: Matrix<i64>) -> Result<Self> {
        let n = b.len();
        for (i, row) in b.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidQuiver("exchange matrix is not square".into()));
            }
            for j in 0..n {
                if row[j] != -b[j][i] {
                    return Err(Error::InvalidQuiver(format!(
                        "exchange matrix is not skew-symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(ExchangeMatrix(b))
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    /// Matrix mutation at `k`.
    pub fn mutate(&self, k: usize) -> ExchangeMatrix {
        let b = &self.0;
        let n = b.len();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                        }
                    })
                    .collect()
            })
            .collect();
        ExchangeMatrix(m)
    }

    pub fn negated(&self) -> ExchangeMatrix {
        ExchangeMatrix(self.0.iter().map(|r| r.iter().map(|x| -x).collect()).collect())
    }

    /// No arrow leaves `k`.
    pub fn is_sink(&self, k: usize) -> bool {
        (0..self.size()).all(|i| self.0[k][i] <= 0)
    }

    pub fn is_source(&self, k: usize) -> bool {
        (0..self.size()).all(|i| self.0[k][i] >= 0)
    }
}

/// A quiver with vertex labels and its imaginary root δ (empty for custom
/// quivers).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub family: Family,
    pub labels: Vec<String>,
    pub b: ExchangeMatrix,
    pub delta: Vec<i64>,
}

impl Quiver {
    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    /// Vertices with δ-label 1.
    pub fn extending(&self) -> Vec<usize> {
        (0..self.delta.len()).filter(|&i| self.delta[i] == 1).collect()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Quiver mutation at `k`.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        if k >= self.n_vertices() {
            return Err(Error::Usage(format!("vertex {k} out of range")));
        }
        Ok(Quiver {
            b: self.b.mutate(k),
            ..self.clone()
        })
    }

    /// All arrows reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            b: self.b.negated(),
            ..self.clone()
        }
    }

    /// Neighbours of `k` with arrow multiplicities.
    pub fn neighbours(&self, k: usize) -> Vec<(usize, i64)> {
        (0..self.n_vertices())
            .filter(|&i| self.b.get(i, k) != 0)
            .map(|i| (i, self.b.get(i, k).abs()))
            .collect()
    }

    /// Sink-first order: every vertex is a sink of the full subquiver on
    /// itself and the vertices after it. Built in layers (all current sinks,
    /// ascending), so a bipartite quiver yields all sinks then all sources.
    pub fn admissible_order(&self) -> Result<Vec<usize>> {
        let n = self.n_vertices();
        let mut left: Vec<bool> = vec![true; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let layer: Vec<usize> = (0..n)
                .filter(|&k| left[k] && (0..n).all(|i| !left[i] || self.b.get(k, i) <= 0))
                .collect();
            if layer.is_empty() {
                return Err(Error::NoAdmissibleOrder);
            }
            for &k in &layer {
                left[k] = false;
            }
            order.extend(layer);
        }
        Ok(order)
    }
}
