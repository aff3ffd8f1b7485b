//! JSON quiver file format:
//!
//! ```json
//! { "family": "E6", "params": {}, "vertices": ["a", "b"],
//!   "arrows": [[1, 0, 1]], "delta": [1, 2] }
//! ```
//!
//! `arrows` holds `[from, to, multiplicity]` triples over 0-based vertex
//! indices. `family` is one of `A`, `D`, `E6`, `E7`, `E8`, `custom`; `params`
//! carries `p`, `q` (for `A`) or `N` (for `D`).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{ExchangeMatrix, Family, Quiver};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuiverFile {
    pub family: String,
    #[serde(default)]
    pub params: BTreeMap<String, usize>,
    pub vertices: Vec<String>,
    pub arrows: Vec<[usize; 3]>,
    #[serde(default)]
    pub delta: Vec<i64>,
}

impl QuiverFile {
    pub fn from_quiver(q: &Quiver) -> Self {
        let (family, params) = match q.family {
            Family::A { p, q } => ("A", BTreeMap::from([("p".into(), p), ("q".into(), q)])),
            Family::D { n } => ("D", BTreeMap::from([("N".into(), n)])),
            Family::E6 => ("E6", BTreeMap::new()),
            Family::E7 => ("E7", BTreeMap::new()),
            Family::E8 => ("E8", BTreeMap::new()),
            Family::Custom => ("custom", BTreeMap::new()),
        };
        let n = q.n_vertices();
        let mut arrows = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if q.b.get(i, j) > 0 {
                    arrows.push([i, j, q.b.get(i, j) as usize]);
                }
            }
        }
        QuiverFile {
            family: family.into(),
            params,
            vertices: q.labels.clone(),
            arrows,
            delta: q.delta.clone(),
        }
    }

    pub fn to_quiver(&self) -> Result<Quiver> {
        let n = self.vertices.len();
        let family = if self.family.eq_ignore_ascii_case("custom") {
            Family::Custom
        } else {
            Family::parse(
                &self.family,
                self.params.get("N").copied(),
                self.params.get("p").copied(),
                self.params.get("q").copied(),
            )?
        };
        let mut b = vec![vec![0i64; n]; n];
        for &[from, to, mult] in &self.arrows {
            if from >= n || to >= n {
                return Err(Error::InvalidQuiver(format!("arrow {from}->{to} out of range")));
            }
            if from == to {
                return Err(Error::InvalidQuiver(format!("loop at vertex {from}")));
            }
            b[from][to] += mult as i64;
            b[to][from] -= mult as i64;
        }
        if !self.delta.is_empty() && self.delta.len() != n {
            return Err(Error::InvalidQuiver("delta has the wrong length".into()));
        }
        Ok(Quiver {
            family,
            labels: self.vertices.clone(),
            b: ExchangeMatrix::new(b)?,
            delta: self.delta.clone(),
        })
    }

    pub fn load(path: &Path) -> Result<Quiver> {
        let text = std::fs::read_to_string(path)?;
        let f: QuiverFile = serde_json::from_str(&text)?;
        f.to_quiver()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("quiver file serializes")
    }
}
