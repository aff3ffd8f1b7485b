//! Log-canonical brackets, the printed bracket relations, first integrals,
//! kernel scalings and the integrability battery.

use rayon::prelude::*;

use super::ReducedSystem;
use crate::error::{Error, Result};
use crate::exact::matrix::{self, Matrix};
use crate::exact::{DualRat, LaurentPoly, Rat, Scalar};
use crate::frieze::{draw_seed_values, FriezeTable, Lift, Mode};
use crate::quiver::Family;
use crate::relations::{int, x, CheckReport, Expr, Verdict, Witness};

/// `Σ c_ij y_i y_j (∂f/∂y_i)(∂g/∂y_j)` from gradients at `y`.
pub fn bracket_at(c: &Matrix<Rat>, y: &[Rat], df: &[Rat], dg: &[Rat]) -> Rat {
    let mut acc = Rat::from_integer(0.into());
    for i in 0..y.len() {
        for j in 0..y.len() {
            if !num_traits::Zero::is_zero(&c[i][j]) {
                acc += &c[i][j] * &y[i] * &y[j] * &df[i] * &dg[j];
            }
        }
    }
    acc
}

/// The same bracket on Laurent polynomials in the `y` variables, for an
/// integer `c`.
pub fn poisson_bracket_poly(c: &Matrix<i64>, f: &LaurentPoly, g: &LaurentPoly) -> LaurentPoly {
    let vars = f.vars().clone();
    let n = vars.len();
    let ys: Vec<LaurentPoly> = (0..n).map(|i| LaurentPoly::var(vars.clone(), i)).collect();
    let mut acc = LaurentPoly::zero(vars.clone());
    for i in 0..n {
        let fi = f.partial(i);
        if fi.is_zero() {
            continue;
        }
        for j in 0..n {
            if c[i][j] == 0 {
                continue;
            }
            let gj = g.partial(j);
            let term = LaurentPoly::constant(vars.clone(), c[i][j])
                .times(&ys[i])
                .times(&ys[j])
                .times(&fi)
                .times(&gj);
            acc = acc.plus(&term);
        }
    }
    acc
}

fn depth_for(exprs: &[Expr]) -> Result<usize> {
    let mut hi = 0;
    for e in exprs {
        if let Some((lo, h)) = e.window() {
            if lo < 0 {
                return Err(Error::Usage("reduced quantities must read nonnegative offsets".into()));
            }
            hi = hi.max(h);
        }
    }
    Ok(hi as usize)
}

/// Evaluates quantities at time 0 of the frieze started from the lift of
/// `y`. With dual `y` the results carry gradients in the `y` variables.
pub fn eval_reduced<V: Scalar + Lift + Sync>(rs: &ReducedSystem, exprs: &[Expr], y: &[V]) -> Result<Vec<V::Q>> {
    let mut t = FriezeTable::new(&rs.quiver, rs.lift(y)?)?;
    t.extend_to(depth_for(exprs)?)?;
    exprs.iter().map(|e| e.eval(&t, 0)).collect()
}

/// Values and `y`-gradients of the quantities at `y`.
pub fn reduced_values(rs: &ReducedSystem, exprs: &[Expr], y: &[Rat]) -> Result<Vec<DualRat>> {
    eval_reduced(rs, exprs, &DualRat::seed(y))
}

/// `{f, g}(y)` for quantities given on the frieze.
pub fn poisson_bracket(rs: &ReducedSystem, f: &Expr, g: &Expr, y: &[Rat]) -> Result<Rat> {
    let v = reduced_values(rs, &[f.clone(), g.clone()], y)?;
    Ok(bracket_at(&rs.c, y, &v[0].grad, &v[1].grad))
}

/// A printed bracket `{f, g} = expected`.
#[derive(Clone, Debug)]
pub struct BracketRelation {
    pub id: String,
    pub f: Expr,
    pub g: Expr,
    pub expected: Expr,
    pub citation: String,
}

/// `J_n` as used by the reduction of each family, with offsets from `n`.
fn reduction_j(family: Family) -> Option<Expr> {
    Some(match family {
        Family::D { n } if n % 2 == 1 => (x(0, 1) * x(1, 1) + x(3, 0)) / x(2, 1),
        Family::D { n: 6 } => (x(3, 2) + x(5, 1) * x(6, 1)) / x(4, 2),
        Family::E6 => (x(0, 0) + x(6, 4)) / x(4, 2),
        Family::E7 => (x(0, 6) + x(0, 0)) / x(7, 3),
        Family::E8 => (x(0, 12) + x(0, 0)) / x(0, 6),
        _ => return None,
    })
}

/// `J'_n`: `J_n J_{n-1}` for D6, `J_n J_{n+1}` for E7.
fn j_prime(family: Family, j: &Expr, n: i64) -> Expr {
    match family {
        Family::D { n: 6 } => j.shifted(n) * j.shifted(n - 1),
        _ => j.shifted(n) * j.shifted(n + 1),
    }
}

fn rel(id: String, f: Expr, g: Expr, expected: Expr, citation: &str) -> BracketRelation {
    BracketRelation {
        id,
        f,
        g,
        expected,
        citation: citation.into(),
    }
}

/// The printed bracket relations, shifted forward so every offset is
/// nonnegative.
pub fn bracket_relations(family: Family) -> Vec<BracketRelation> {
    let Some(j) = reduction_j(family) else {
        return Vec::new();
    };
    let jn = |k: i64| j.shifted(k);
    match family {
        Family::D { n } if n % 2 == 1 => (1..=(n as i64 - 3))
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let delta = i64::from(k == 1) - i64::from(k == n as i64 - 3);
                rel(
                    format!("poisson.J{k}.J0"),
                    jn(k),
                    jn(0),
                    sign * (jn(k) * jn(0)) + delta,
                    "D odd: {J_k, J_0} = (-1)^k J_k J_0 + delta(1,k) - delta(N-3,k)",
                )
            })
            .collect(),
        Family::D { n: 6 } => {
            let jp = |k: i64| j_prime(family, &j, k);
            vec![
                rel("poisson.Jp1.Jp0".into(), jp(1), jp(0), -(jp(1) * jp(0)) + jp(1) + jp(0), "D6: {J'_1, J'_0} = -J'_1 J'_0 + J'_1 + J'_0"),
                rel("poisson.Jp3.Jp1".into(), jp(3), jp(1), jp(0) - jp(2), "D6: {J'_3, J'_1} = J'_0 - J'_2"),
            ]
        }
        Family::E6 => {
            let jt = |k: i64| (x(0, k) + x(6, k - 4)) / x(4, k - 2);
            let mut v = vec![
                rel("poisson.J0.J1".into(), jn(0), jn(1), jn(0) * jn(1) - 1, "E6: {J_0, J_1} = J_0 J_1 - 1"),
                rel("poisson.J0.J2".into(), jn(0), jn(2), -(jn(0) * jn(2)) + 1, "E6: {J_0, J_2} = -J_0 J_2 + 1"),
            ];
            for k in 4..=6 {
                v.push(rel(format!("poisson.J0.Jtilde{k}"), jn(0), jt(k), int(0), "E6: {J_0, J~_k} = 0"));
            }
            v
        }
        Family::E7 => {
            let jp = |k: i64| j_prime(family, &j, k);
            vec![
                rel("poisson.Jp0.Jp1".into(), jp(0), jp(1), jp(0) * jp(1) - jp(0) - jp(1), "E7: {J'_0, J'_1} = J'_0 J'_1 - J'_0 - J'_1"),
                rel("poisson.Jp0.Jp2".into(), jp(0), jp(2), jp(1) - jp(3), "E7: {J'_0, J'_2} = J'_1 - J'_3"),
            ]
        }
        Family::E8 => vec![
            rel("poisson.J0.J1".into(), jn(0), jn(1), jn(0) * jn(1) - 1, "E8: {J_0, J_1} = J_0 J_1 - 1"),
            rel("poisson.J0.J2".into(), jn(0), jn(2), -(jn(0) * jn(2)), "E8: {J_0, J_2} = -J_0 J_2"),
        ],
        _ => Vec::new(),
    }
}

/// Disjoint edge sets of the cycle on `len` vertices with `k` edges.
fn cycle_matchings(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(len: usize, k: usize, start: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in start..len {
            let (a, b) = (e, (e + 1) % len);
            if !used[a] && !used[b] {
                used[a] = true;
                used[b] = true;
                cur.push(e);
                go(len, k, e + 1, used, cur, out);
                cur.pop();
                used[a] = false;
                used[b] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(len, k, 0, &mut vec![false; len], &mut Vec::new(), &mut out);
    out
}

/// The family's first integrals, `m` of them, as quantities on the frieze.
pub fn first_integrals(family: Family) -> Vec<(String, Expr)> {
    let Some(j) = reduction_j(family) else {
        return Vec::new();
    };
    let jn = |k: i64| j.shifted(k);
    let named = |v: Vec<(&str, Expr)>| v.into_iter().map(|(s, e)| (s.to_string(), e)).collect();
    match family {
        Family::D { n } if n % 2 == 1 => {
            // Homogeneous parts of tr ∏ [[J_i, 1], [-1, 0]] around the cycle
            // of length N - 2: sums over k-matchings of the unmatched J's.
            let len = n - 2;
            (0..=(n - 3) / 2)
                .map(|k| {
                    let terms = cycle_matchings(len, k).into_iter().map(|m| {
                        let mut covered = vec![false; len];
                        for e in m {
                            covered[e] = true;
                            covered[(e + 1) % len] = true;
                        }
                        Expr::product((0..len).filter(|&i| !covered[i]).map(|i| jn(i as i64)))
                    });
                    (format!("I{k}"), Expr::sum(terms))
                })
                .collect()
        }
        Family::D { n: 6 } => {
            let jp: Vec<Expr> = (0..4).map(|k| j_prime(family, &j, k)).collect();
            named(vec![("sum Jp", Expr::sum(jp.clone())), ("prod Jp", Expr::product(jp))])
        }
        Family::E6 => {
            let jt = |k: i64| (x(0, k) + x(6, k - 4)) / x(4, k - 2);
            named(vec![
                ("sum J", Expr::sum((0..3).map(jn))),
                ("prod J", Expr::product((0..3).map(jn))),
                ("sum Jtilde", Expr::sum((4..7).map(jt))),
            ])
        }
        Family::E7 => {
            let jp: Vec<Expr> = (0..4).map(|k| j_prime(family, &j, k)).collect();
            let k = |i: i64| (x(0, i + 8) + x(0, i)) / x(0, i + 4);
            named(vec![
                ("sum Jp", Expr::sum(jp.clone())),
                ("Jp0 Jp2 + Jp1 Jp3", jp[0].clone() * jp[2].clone() + jp[1].clone() * jp[3].clone()),
                ("sum K", Expr::sum((0..3).map(k))),
            ])
        }
        Family::E8 => {
            let k = |i: i64| (x(0, i + 20) + x(0, i)) / x(0, i + 10);
            named(vec![
                ("sum J", Expr::sum((0..5).map(jn))),
                ("prod J", Expr::product((0..5).map(jn))),
                ("cyclic triples", Expr::sum((0..5).map(|i| jn(i) * jn((i + 1) % 5) * jn((i + 2) % 5)))),
                ("sum K", Expr::sum((0..3).map(k))),
            ])
        }
        _ => Vec::new(),
    }
}

/// `X_i ↦ λ^{u_i} X_i` applied at time 0; later columns then scale by
/// `λ^{(−1)^n u}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingAction {
    pub u: Vec<i64>,
}

impl ScalingAction {
    pub fn apply(&self, x: &[Rat], lambda: &Rat) -> Result<Vec<Rat>> {
        x.iter()
            .zip(&self.u)
            .map(|(xi, &e)| Ok(xi * lambda.pow_i(e)?))
            .collect()
    }
}

pub fn scaling_actions(rs: &ReducedSystem) -> Vec<ScalingAction> {
    rs.kernel().iter().map(|u| ScalingAction { u: u.clone() }).collect()
}

/// A quantity with its weight under one kernel scaling.
#[derive(Clone, Debug)]
pub struct ScalingCase {
    pub id: String,
    pub action: usize,
    pub quantity: Expr,
    pub weight: i64,
    pub citation: String,
}

fn case(id: &str, action: usize, quantity: Expr, weight: i64, citation: &str) -> ScalingCase {
    ScalingCase {
        id: id.into(),
        action,
        quantity,
        weight,
        citation: citation.into(),
    }
}

pub fn scaling_cases(family: Family) -> Vec<ScalingCase> {
    let Some(j) = reduction_j(family) else {
        return Vec::new();
    };
    match family {
        Family::D { n } if n % 2 == 1 => vec![
            case("scaling.J0.u1", 0, j.clone(), 0, "D odd: J_n is fixed by the kernel scalings"),
            case("scaling.J0.u2", 1, j, 0, "D odd: J_n is fixed by the kernel scalings"),
        ],
        Family::D { n: 6 } => vec![
            case("scaling.J0", 2, j.clone(), -1, "D6: J_(n-1) -> J_(n-1)/lambda under the third kernel scaling"),
            case("scaling.J1", 2, j.shifted(1), 1, "D6: J_n -> lambda J_n under the third kernel scaling"),
            case("scaling.Jp1", 2, j_prime(family, &j, 1), 0, "D6: J'_n = J_n J_(n-1) is fixed"),
        ],
        Family::E6 => vec![
            case("scaling.J0", 0, j, 0, "E6: J_n is fixed by the kernel scaling"),
            case("scaling.Jtilde4", 0, (x(0, 4) + x(6, 0)) / x(4, 2), 0, "E6: J~_n is fixed by the kernel scaling"),
        ],
        Family::E7 => {
            let mut v = vec![case("scaling.J0.lambda1", 0, j.clone(), 0, "E7: J_n is fixed by lambda_1")];
            for k in 0..4 {
                let w = if k % 2 == 0 { 1 } else { -1 };
                v.push(case(&format!("scaling.J{k}.lambda2"), 1, j.shifted(k), w, "E7: lambda_2 acts on (J_0, J_1, J_2, J_3) with weights (1, -1, 1, -1)"));
            }
            v.push(case("scaling.Jp0.lambda2", 1, j_prime(family, &j, 0), 0, "E7: J'_n = J_n J_(n+1) is fixed by lambda_2"));
            v
        }
        Family::E8 => vec![case("scaling.J0", 0, j, 0, "E8: J_n is fixed by the kernel scaling")],
        _ => Vec::new(),
    }
}

/// Runs `test(seed)` for every seed; the first failure (in seed order) is
/// the witness.
pub(crate) fn seeded_report<F>(family: &str, id: &str, citation: &str, seeds: &[u64], probe: bool, test: F) -> CheckReport
where
    F: Fn(u64) -> Result<bool> + Sync,
{
    let outcomes: Vec<Result<bool>> = seeds.par_iter().map(|&s| test(s)).collect();
    let mut report = CheckReport {
        id: id.into(),
        family: family.into(),
        mode: Mode::Specialized,
        trials: seeds.len(),
        n_window: [0, 0],
        verdict: if probe { Verdict::Evidence } else { Verdict::Pass },
        witness: None,
        citation: citation.into(),
        flags: Vec::new(),
    };
    if seeds.is_empty() {
        report.verdict = Verdict::Inconclusive;
    }
    for (s, o) in seeds.iter().zip(outcomes) {
        match o {
            Ok(true) => {}
            Ok(false) => {
                report.verdict = Verdict::Fail;
                report.witness = Some(Witness { seed: Some(*s), n: 0 });
                break;
            }
            Err(e) => {
                if report.verdict != Verdict::Inconclusive {
                    report.flags.push(format!("seed {s}: {e}"));
                }
                report.verdict = Verdict::Inconclusive;
            }
        }
    }
    report
}

/// A second, independent draw for λ.
fn lambda_for(seed: u64) -> Rat {
    draw_seed_values(1, seed ^ 0x9e37_79b9_7f4a_7c15).values.remove(0)
}

/// Fixedness (or the stated weight) of a quantity under a kernel scaling,
/// plus invariance of every reduced coordinate along the scaled frieze.
pub fn scaling_invariance_check(rs: &ReducedSystem, sc: &ScalingCase, seeds: &[u64]) -> CheckReport {
    let actions = scaling_actions(rs);
    let tag = rs.family.tag();
    seeded_report(&tag, &sc.id, &sc.citation, seeds, false, |seed| {
        let action = actions
            .get(sc.action)
            .ok_or_else(|| Error::Usage(format!("no kernel scaling {}", sc.action)))?;
        let x0 = draw_seed_values(rs.quiver.n_vertices(), seed).values;
        let lambda = lambda_for(seed);
        let depth = depth_for(std::slice::from_ref(&sc.quantity))?;
        let plain = FriezeTable::specialized(&rs.quiver, x0.clone(), depth)?;
        let scaled = FriezeTable::specialized(&rs.quiver, action.apply(&x0, &lambda)?, depth)?;
        let v0 = sc.quantity.eval(&plain, 0)?;
        let v1 = sc.quantity.eval(&scaled, 0)?;
        if v1 != v0 * lambda.pow_i(sc.weight)? {
            return Ok(false);
        }
        for n in 0..scaled.depth() {
            if rs.project(plain.column(n))? != rs.project(scaled.column(n))? {
                return Ok(false);
            }
        }
        Ok(true)
    })
}

fn point(rs: &ReducedSystem, seed: u64) -> Vec<Rat> {
    draw_seed_values(rs.rank, seed).values
}

/// Invariance, involutivity and independence of the first integrals, and
/// preservation of the bracket by the reduced map.
pub fn integrability_battery(rs: &ReducedSystem, seeds: &[u64]) -> Vec<CheckReport> {
    let ints: Vec<Expr> = first_integrals(rs.family).into_iter().map(|(_, e)| e).collect();
    integrability_battery_with(rs, &ints, seeds)
}

/// The battery for a caller-supplied list of candidate integrals.
pub fn integrability_battery_with(rs: &ReducedSystem, ints: &[Expr], seeds: &[u64]) -> Vec<CheckReport> {
    let tag = rs.family.tag();
    let m = rs.m();
    let mut out = Vec::new();
    let mut cit = |id: &str, c: &str, f: &(dyn Fn(u64) -> Result<bool> + Sync)| {
        out.push(seeded_report(&tag, id, c, seeds, false, f));
    };
    cit("integrability.invariance", "each first integral is fixed by the reduced map", &|s| {
        let y = point(rs, s);
        let before = eval_reduced(rs, ints, &y)?;
        let after = eval_reduced(rs, ints, &rs.reduced_step(&y)?)?;
        Ok(before == after)
    });
    cit("integrability.involution", "the first integrals Poisson-commute", &|s| {
        let y = point(rs, s);
        let v = reduced_values(rs, ints, &y)?;
        Ok((0..v.len()).all(|i| (i + 1..v.len()).all(|j| num_traits::Zero::is_zero(&bracket_at(&rs.c, &y, &v[i].grad, &v[j].grad)))))
    });
    cit("integrability.symplectic", "{y_i o phi, y_j o phi} = c_ij (y_i o phi)(y_j o phi)", &|s| {
        let y = point(rs, s);
        let z = rs.reduced_step(&DualRat::seed(&y))?;
        Ok((0..z.len()).all(|i| {
            (0..z.len()).all(|j| bracket_at(&rs.c, &y, &z[i].grad, &z[j].grad) == &rs.c[i][j] * &z[i].value * &z[j].value)
        }))
    });
    // Rank can only drop at special points, so the maximum over seeds is the
    // generic rank.
    let ranks: Vec<Result<usize>> = seeds
        .par_iter()
        .map(|&s| {
            let v = reduced_values(rs, ints, &point(rs, s))?;
            Ok(matrix::rank(&v.into_iter().map(|d| d.grad).collect()))
        })
        .collect();
    let best = ranks.iter().filter_map(|r| r.as_ref().ok()).copied().max().unwrap_or(0);
    let mut report = seeded_report(&tag, "integrability.rank", &format!("the {} first integrals are independent (Jacobian rank m = {m})", ints.len()), seeds, false, |_| Ok(true));
    report.flags.push(format!("rank {best} of {m}"));
    if ints.len() != m || best < m {
        report.verdict = Verdict::Fail;
        report.witness = seeds.first().map(|&s| Witness { seed: Some(s), n: 0 });
    }
    out.push(report);
    out
}

/// Block form, bases, printed `C`, the commuting square, explicit versus
/// generic map, every printed bracket and every scaling case.
pub fn reduction_checks(rs: &ReducedSystem, seeds: &[u64]) -> Vec<CheckReport> {
    let tag = rs.family.tag();
    let once = |id: &str, c: &str, ok: Result<bool>| seeded_report(&tag, id, c, &[0], false, |_| ok.as_ref().map(|b| *b).map_err(|e| Error::Usage(e.to_string())));
    let mut out = vec![once("reduction.block", "A^-T B A^-1 = [[B-hat, 0], [0, 0]] with B-hat invertible", Ok(rs.block_form_holds()))];
    let mut bases = once(
        "reduction.bases",
        "image rows span the row space of B, kernel rows are a Z-basis of ker B",
        super::bases_match(&rs.quiver.b, &rs.ydefs().to_vec(), &rs.kernel().to_vec()),
    );
    let mut printed = match super::printed_c(rs.family) {
        Some(c) => once("reduction.C", "C = B-hat^-1 equals the printed Poisson matrix", Ok(c == rs.c)),
        None => {
            let mut r = once("reduction.C", "C = B-hat^-1", Ok(true));
            r.verdict = Verdict::Inconclusive;
            r
        }
    };
    if rs.nonstandard_basis {
        bases.flags.push("nonstandard basis".into());
        printed.flags.push("nonstandard basis".into());
    }
    out.push(bases);
    out.push(printed);
    out.push(seeded_report(&tag, "reduction.commuting", "pi o phi = phi-hat o pi", seeds, false, |s| {
        let x0 = draw_seed_values(rs.quiver.n_vertices(), s).values;
        let order = rs.quiver.admissible_order()?;
        let lhs = rs.project(&crate::frieze::frieze_step(&rs.quiver, &order, &x0)?)?;
        Ok(lhs == rs.reduced_step(&rs.project(&x0)?)?)
    }));
    if super::has_explicit_step(rs.family) {
        out.push(seeded_report(&tag, "reduction.oracle", "explicit reduced map = lift, frieze step, project", seeds, false, |s| {
            let y = point(rs, s);
            Ok(rs.reduced_step(&y)? == rs.generic_step(&y)?)
        }));
    }
    for r in bracket_relations(rs.family) {
        out.push(seeded_report(&tag, &r.id, &r.citation, seeds, false, |s| {
            let y = point(rs, s);
            let expected = eval_reduced(rs, std::slice::from_ref(&r.expected), &y)?.remove(0);
            Ok(poisson_bracket(rs, &r.f, &r.g, &y)? == expected)
        }));
    }
    for sc in scaling_cases(rs.family) {
        out.push(scaling_invariance_check(rs, &sc, seeds));
    }
    out
}
