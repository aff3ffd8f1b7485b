use super::{ExchangeMatrix, Family, Quiver};
use crate::error::{Error, Result};

fn bipartite(n: usize, edges: &[(usize, usize)], sink: impl Fn(usize) -> bool) -> Result<ExchangeMatrix> {
    let mut b = vec![vec![0i64; n]; n];
    for &(u, v) in edges {
        let (snk, src) = match (sink(u), sink(v)) {
            (false, true) => (v, u),
            (true, false) => (u, v),
            _ => return Err(Error::InvalidQuiver(format!("edge {u}-{v} is not bipartite"))),
        };
        b[src][snk] += 1;
        b[snk][src] -= 1;
    }
    ExchangeMatrix::new(b)
}

fn letters(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

/// The affine quiver of a family in the orientation used throughout the
/// crate, together with its labels and imaginary root δ.
///
/// D̃ and Ã follow their standard drawings. The E-types are oriented with
/// `a, c, e, ...` as sinks, so the sink-first frieze reproduces the
/// recurrences mutating those vertices first.
pub fn build_affine_quiver(family: Family) -> Result<Quiver> {
    match family {
        Family::A { p, q } => {
            if p == 0 || q == 0 {
                return Err(Error::Usage("A(p,q) needs p, q >= 1".into()));
            }
            if num_integer::gcd(p, q) != 1 {
                return Err(Error::Usage(format!("A({p},{q}) is disconnected: p and q must be coprime")));
            }
            let n = p + q;
            let mut b = vec![vec![0i64; n]; n];
            for i in 0..n {
                let j = (i + p) % n;
                let (hi, lo) = if i > j { (i, j) } else { (j, i) };
                b[hi][lo] += 1;
                b[lo][hi] -= 1;
            }
            Ok(Quiver {
                family,
                labels: (1..=n).map(|k| format!("X{k}")).collect(),
                b: ExchangeMatrix::new(b)?,
                delta: vec![1; n],
            })
        }
        Family::D { n } => {
            if n < 4 {
                return Err(Error::Usage("D_N needs N >= 4".into()));
            }
            // 0-based: vertex k-1 is X^k.
            let mut edges = vec![(0, 2), (1, 2)];
            for k in 3..n - 1 {
                edges.push((k - 1, k));
            }
            edges.push((n - 2, n - 1));
            edges.push((n - 2, n));
            let odd = n % 2 == 1;
            let b = bipartite(n + 1, &edges, |v| {
                let k = v + 1;
                match k {
                    1 | 2 => false,
                    k if k >= n => odd,
                    k => k % 2 == 1,
                }
            })?;
            let mut delta = vec![2i64; n + 1];
            for v in [0, 1, n - 1, n] {
                delta[v] = 1;
            }
            Ok(Quiver {
                family,
                labels: (1..=n + 1).map(|k| format!("X{k}")).collect(),
                b,
                delta,
            })
        }
        Family::E6 => {
            let edges = [(0, 1), (2, 1), (2, 3), (2, 5), (6, 5), (4, 3)];
            Ok(Quiver {
                family,
                labels: letters(7),
                b: bipartite(7, &edges, |v| v % 2 == 0)?,
                delta: vec![1, 2, 3, 2, 1, 2, 1],
            })
        }
        Family::E7 => {
            let edges = [(0, 1), (2, 1), (4, 3), (5, 3), (2, 3), (5, 6), (7, 6)];
            Ok(Quiver {
                family,
                labels: letters(8),
                b: bipartite(8, &edges, |v| matches!(v, 0 | 2 | 4 | 5 | 7))?,
                delta: vec![1, 2, 3, 4, 2, 3, 2, 1],
            })
        }
        Family::E8 => {
            let edges = [(0, 1), (2, 1), (2, 3), (4, 3), (6, 5), (7, 5), (4, 5), (7, 8)];
            Ok(Quiver {
                family,
                labels: letters(9),
                b: bipartite(9, &edges, |v| matches!(v, 0 | 2 | 4 | 6 | 7))?,
                delta: vec![1, 2, 3, 4, 5, 6, 3, 4, 2],
            })
        }
        Family::Custom => Err(Error::Usage("custom quivers are loaded from a file".into())),
    }
}
