//! Symplectic reduction: monomial coordinates `y_j = ∏ X_i^{v_ji}` indexed
//! by an image basis of `B`, the induced map on them and its log-canonical
//! Poisson structure.

mod maps;
mod poisson;

use crate::error::{Error, Result};
use crate::exact::matrix::{self, int_to_rat, Matrix};
use crate::exact::{Rat, Scalar};
use crate::frieze::frieze_step;
use crate::quiver::{ExchangeMatrix, Family, Quiver};

pub use maps::{explicit_step, has_explicit_step};
pub(crate) use poisson::seeded_report;
pub use poisson::{
    bracket_at, bracket_relations, eval_reduced, first_integrals, integrability_battery, integrability_battery_with, poisson_bracket, poisson_bracket_poly,
    reduced_values, reduction_checks, scaling_actions, scaling_cases, scaling_invariance_check, BracketRelation, ScalingAction, ScalingCase,
};

/// Reduced coordinates and everything derived from them.
#[derive(Clone, Debug)]
pub struct ReducedSystem {
    pub family: Family,
    pub quiver: Quiver,
    /// Image basis rows, then kernel basis rows.
    pub a: Matrix<i64>,
    /// `2m`, the rank of `B`.
    pub rank: usize,
    pub bhat: Matrix<Rat>,
    /// `B̂⁻¹`: `{y_i, y_j} = c_ij y_i y_j`.
    pub c: Matrix<Rat>,
    pub labels: Vec<String>,
    /// Vertices pinned to 1 when lifting `y` back to `X`.
    pub section: Vec<usize>,
    /// `lift[i][j]`: exponent of `y_j` in `X_i` (zero rows on the section).
    pub lift: Matrix<i64>,
    /// True when the bases were computed rather than taken from the
    /// standard printed choice, so `C` is not compared with a printed one.
    pub nonstandard_basis: bool,
}

fn e(n: usize, terms: &[(usize, i64)]) -> Vec<i64> {
    let mut v = vec![0; n];
    for &(k, c) in terms {
        v[k - 1] += c;
    }
    v
}

/// The standard bases (1-based vertex numbers) and the preferred section.
fn printed_bases(family: Family) -> Option<(Matrix<i64>, Matrix<i64>, Vec<usize>)> {
    Some(match family {
        Family::D { n } if n % 2 == 1 && n >= 5 => {
            let size = n + 1;
            let mut image = vec![e(size, &[(1, 1), (2, 1)])];
            image.extend((3..n).map(|k| e(size, &[(k, 1)])));
            image.push(e(size, &[(n, 1), (n + 1, 1)]));
            let kernel = vec![e(size, &[(1, 1), (2, -1)]), e(size, &[(n, 1), (n + 1, -1)])];
            (image, kernel, vec![1, n])
        }
        Family::D { n: 6 } => (
            vec![
                e(7, &[(3, 1)]),
                e(7, &[(1, 1), (2, 1), (4, 1)]),
                e(7, &[(4, 1), (6, 1), (7, 1)]),
                e(7, &[(5, 1)]),
            ],
            vec![
                e(7, &[(1, 1), (2, -1)]),
                e(7, &[(6, 1), (7, -1)]),
                e(7, &[(1, 1), (4, -1), (7, 1)]),
            ],
            vec![1, 3, 6],
        ),
        Family::E6 => (
            vec![
                e(7, &[(1, 1), (3, 1)]),
                e(7, &[(2, 1)]),
                e(7, &[(3, 1), (5, 1)]),
                e(7, &[(4, 1)]),
                e(7, &[(3, 1), (7, 1)]),
                e(7, &[(6, 1)]),
            ],
            vec![e(7, &[(1, 1), (3, -1), (5, 1), (7, 1)])],
            vec![2],
        ),
        Family::E7 => (
            vec![
                e(8, &[(1, 1), (3, 1)]),
                e(8, &[(2, 1)]),
                e(8, &[(3, 1), (5, 1), (6, 1)]),
                e(8, &[(4, 1)]),
                e(8, &[(6, 1), (8, 1)]),
                e(8, &[(7, 1)]),
            ],
            vec![
                e(8, &[(1, 1), (3, -1), (6, 1), (8, -1)]),
                e(8, &[(1, 1), (3, -1), (5, 1)]),
            ],
            vec![2, 5],
        ),
        Family::E8 => (
            vec![
                e(9, &[(1, 1), (3, 1)]),
                e(9, &[(2, 1)]),
                e(9, &[(3, 1), (5, 1)]),
                e(9, &[(4, 1)]),
                e(9, &[(5, 1), (7, 1), (8, 1)]),
                e(9, &[(6, 1)]),
                e(9, &[(8, 1)]),
                e(9, &[(9, 1)]),
            ],
            vec![e(9, &[(1, 1), (3, -1), (5, 1), (7, -1)])],
            vec![2],
        ),
        _ => return None,
    })
}

/// The printed Poisson matrix in the standard reduced coordinates.
pub fn printed_c(family: Family) -> Option<Matrix<Rat>> {
    let block = |m: usize| -> Matrix<i64> {
        let mut c = vec![vec![0; 2 * m]; 2 * m];
        for k in 0..m {
            c[2 * k][2 * k + 1] = 1;
            c[2 * k + 1][2 * k] = -1;
        }
        c
    };
    let c = match family {
        Family::D { n } if n % 2 == 1 && n >= 5 => {
            let size = n - 1;
            let mut c = vec![vec![0i64; size]; size];
            for i in 1..=size {
                for j in (i + 1)..=size {
                    if i % 2 == 1 && j % 2 == 0 {
                        let v = if ((j - i + 1) / 2) % 2 == 0 { 1 } else { -1 };
                        c[i - 1][j - 1] = v;
                        c[j - 1][i - 1] = -v;
                    }
                }
            }
            c
        }
        Family::D { n: 6 } => vec![
            vec![0, 1, 0, 0],
            vec![-1, 0, 0, 0],
            vec![0, 0, 0, -1],
            vec![0, 0, 1, 0],
        ],
        Family::E6 | Family::E7 => block(3),
        Family::E8 => block(4),
        _ => return None,
    };
    Some(int_to_rat(&c))
}

/// Z-bases of the image (row space) and kernel of `B`, computed by integer
/// elimination.
pub fn integer_kernel_image(b: &ExchangeMatrix) -> Result<(Matrix<i64>, Matrix<i64>)> {
    Ok((matrix::hnf(&b.0)?, matrix::integer_kernel(&b.0)?))
}

/// True when `image` spans the row space of `B` over Q and `kernel` is a
/// Z-basis of the integer kernel.
pub fn bases_match(b: &ExchangeMatrix, image: &Matrix<i64>, kernel: &Matrix<i64>) -> Result<bool> {
    let (_, k) = integer_kernel_image(b)?;
    let r = matrix::rank(&int_to_rat(&b.0));
    let mut stacked = image.clone();
    stacked.extend(b.0.iter().cloned());
    let annihilated = kernel
        .iter()
        .all(|u| b.0.iter().all(|row| row.iter().zip(u).map(|(x, y)| x * y).sum::<i64>() == 0));
    Ok(image.len() == r
        && matrix::rank(&int_to_rat(image)) == r
        && matrix::rank(&int_to_rat(&stacked)) == r
        && annihilated
        && matrix::same_lattice(kernel, &k)?)
}

fn y_labels(family: Family, rank: usize) -> Vec<String> {
    match family {
        Family::D { n } if n % 2 == 1 => {
            let mut l = vec!["p".to_string()];
            l.extend((3..n).map(|k| format!("X{k}")));
            l.push("q".into());
            l
        }
        Family::D { n: 6 } => ["X3", "p", "q", "X5"].map(String::from).to_vec(),
        _ => (1..=rank).map(|j| format!("y{j}")).collect(),
    }
}

/// Columns not in `fixed`, as a square matrix, when it is unimodular.
fn section_lift(ydefs: &Matrix<i64>, fixed: &[usize], n: usize) -> Option<Matrix<i64>> {
    let free: Vec<usize> = (0..n).filter(|i| !fixed.contains(i)).collect();
    let sub: Matrix<i64> = ydefs.iter().map(|r| free.iter().map(|&i| r[i]).collect()).collect();
    let inv = matrix::unimodular_inverse(&sub)?;
    let mut lift = vec![vec![0; ydefs.len()]; n];
    for (row, &i) in inv.iter().zip(&free) {
        lift[i] = row.clone();
    }
    Some(lift)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}

/// Builds the reduction. Standard families use the printed bases; custom
/// quivers use computed ones and are flagged as a nonstandard basis.
pub fn build_reduction(q: &Quiver) -> Result<ReducedSystem> {
    let n = q.n_vertices();
    let (image, kernel, preferred, nonstandard) = match printed_bases(q.family) {
        Some((i, k, s)) => (i, k, s, false),
        None if q.family == Family::Custom => {
            let (i, k) = integer_kernel_image(&q.b)?;
            (i, k, Vec::new(), true)
        }
        None => {
            return Err(Error::Unsupported(format!(
                "no reduction for {}: supported are D odd, D6, E6, E7, E8 and custom quivers",
                q.family
            )))
        }
    };
    let rank = image.len();
    if rank + kernel.len() != n || rank % 2 != 0 {
        return Err(Error::InvalidQuiver("image and kernel bases do not fit together".into()));
    }
    let mut a = image.clone();
    a.extend(kernel);
    let ainv = matrix::inverse(&int_to_rat(&a))
        .ok_or_else(|| Error::InvalidQuiver("image and kernel bases are dependent".into()))?;
    let t = matrix::mat_mul(&matrix::mat_mul(&matrix::transpose(&ainv), &int_to_rat(&q.b.0)), &ainv);
    let bhat: Matrix<Rat> = t[..rank].iter().map(|r| r[..rank].to_vec()).collect();
    let c = matrix::inverse(&bhat).ok_or_else(|| Error::InvalidQuiver("B-hat is singular".into()))?;
    let lift = std::iter::once(preferred)
        .chain(combinations(n, n - rank))
        .find_map(|s| section_lift(&image, &s, n).map(|l| (s, l)))
        .ok_or_else(|| Error::Unsupported("no unimodular coordinate section".into()))?;
    Ok(ReducedSystem {
        family: q.family,
        quiver: q.clone(),
        a,
        rank,
        bhat,
        c,
        labels: y_labels(q.family, rank),
        section: lift.0,
        lift: lift.1,
        nonstandard_basis: nonstandard,
    })
}

impl ReducedSystem {
    pub fn ydefs(&self) -> &[Vec<i64>] {
        &self.a[..self.rank]
    }

    pub fn kernel(&self) -> &[Vec<i64>] {
        &self.a[self.rank..]
    }

    /// `Aᵀ⁻¹ B A⁻¹`, which should be `[[B̂, 0], [0, 0]]`.
    pub fn transformed_b(&self) -> Matrix<Rat> {
        let ainv = matrix::inverse(&int_to_rat(&self.a)).expect("A is invertible by construction");
        matrix::mat_mul(&matrix::mat_mul(&matrix::transpose(&ainv), &int_to_rat(&self.quiver.b.0)), &ainv)
    }

    /// True when the transformed `B` vanishes outside the top-left block.
    pub fn block_form_holds(&self) -> bool {
        let t = self.transformed_b();
        let r = self.rank;
        t.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| (i < r && j < r) || num_traits::Zero::is_zero(v))
        })
    }

    /// `π(x)`: the reduced coordinates of a full vertex vector.
    pub fn project<V: Scalar>(&self, x: &[V]) -> Result<Vec<V>> {
        self.ydefs()
            .iter()
            .map(|v| {
                let mut acc = x[0].one_like();
                for (xi, &e) in x.iter().zip(v) {
                    if e != 0 {
                        acc = acc.times(&xi.pow_i(e)?);
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// A vertex vector on the section with `π(lift(y)) = y`.
    pub fn lift<V: Scalar>(&self, y: &[V]) -> Result<Vec<V>> {
        self.lift
            .iter()
            .map(|row| {
                let mut acc = y[0].one_like();
                for (yj, &e) in y.iter().zip(row) {
                    if e != 0 {
                        acc = acc.times(&yj.pow_i(e)?);
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    /// Lift, one frieze step, project.
    pub fn generic_step<V: Scalar>(&self, y: &[V]) -> Result<Vec<V>> {
        let order = self.quiver.admissible_order()?;
        self.project(&frieze_step(&self.quiver, &order, &self.lift(y)?)?)
    }

    /// The explicit map where the family has one, otherwise the generic one.
    pub fn reduced_step<V: Scalar>(&self, y: &[V]) -> Result<Vec<V>> {
        if y.iter().any(Scalar::is_zero) {
            return Err(Error::BadSpecialization("zero reduced coordinate".into()));
        }
        match explicit_step(self.family, y) {
            Some(r) => r,
            None => self.generic_step(y),
        }
    }

    /// Number of first integrals needed: half the rank.
    pub fn m(&self) -> usize {
        self.rank / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_affine_quiver;

    #[test]
    fn combinations_are_lexicographic() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn e6_reduction_matches_printed_c() {
        let rs = build_reduction(&build_affine_quiver(Family::E6).unwrap()).unwrap();
        assert!(rs.block_form_holds());
        assert_eq!(rs.c, printed_c(Family::E6).unwrap());
    }
}
