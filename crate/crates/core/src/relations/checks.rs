//! Checkers. Each one tests a relation at every `n` of a window on every
//! sample grid and folds the outcomes into a [`CheckReport`].

use rayon::prelude::*;

use super::expr::Expr;
use super::registry::{AtypeDef, Catalog, IdentityDef, KernelDef, Period, Probe, PsiSystem, QuantityDef};
use super::{kernel_vector_check, CheckReport, Verdict, Witness};
use crate::error::Result;
use crate::exact::matrix::{det2, mat_mul, trace2, Matrix};
use crate::exact::Scalar;
use crate::frieze::{Grid, Mode};

/// One trial: a grid and the seed that produced it (`None` when symbolic).
#[derive(Clone, Debug)]
pub struct Sample<G> {
    pub seed: Option<u64>,
    pub grid: G,
}

/// What every report shares: family tag, mode and how many values of `n`
/// to test.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub family: String,
    pub mode: Mode,
    pub span: usize,
}

enum Outcome {
    Clean,
    Fail(i64),
    Error(String),
}

fn window_of<'a>(exprs: impl IntoIterator<Item = &'a Expr>) -> (i64, i64) {
    exprs
        .into_iter()
        .filter_map(Expr::window)
        .reduce(|(l1, h1), (l2, h2)| (l1.min(l2), h1.max(h2)))
        .unwrap_or((0, 0))
}

/// Runs `test` at `n = n0 .. n0 + span` on every sample, where `n0` is the
/// first time with all offsets `≥ lo` nonnegative and the window is capped
/// so that offsets up to `hi` stay inside the shallowest grid.
#[allow(clippy::too_many_arguments)]
fn drive<G, F>(
    ctx: &Ctx,
    id: &str,
    citation: &str,
    samples: &[Sample<G>],
    (lo, hi): (i64, i64),
    probe: bool,
    mut flags: Vec<String>,
    test: F,
) -> CheckReport
where
    G: Grid + Send,
    F: Fn(&G, i64) -> Result<bool> + Sync,
{
    let n0 = (-lo).max(0);
    let wanted = n0 + ctx.span as i64 - 1;
    let depth = samples.iter().map(|s| s.grid.depth() as i64).min().unwrap_or(0);
    let n_end = wanted.min(depth - 1 - hi);
    let mut report = CheckReport {
        id: id.into(),
        family: ctx.family.clone(),
        mode: ctx.mode,
        trials: samples.len(),
        n_window: [n0, n_end.max(n0 - 1)],
        verdict: Verdict::Inconclusive,
        witness: None,
        citation: citation.into(),
        flags: Vec::new(),
    };
    if samples.is_empty() || n_end < n0 {
        flags.push(format!("table of depth {depth} too shallow for offsets {lo}..{hi}"));
        report.flags = flags;
        return report;
    }
    if n_end < wanted {
        flags.push(format!("window truncated to n <= {n_end}"));
    }
    let outcomes: Vec<Outcome> = samples
        .par_iter()
        .map(|s| {
            for n in n0..=n_end {
                match test(&s.grid, n) {
                    Ok(true) => {}
                    Ok(false) => return Outcome::Fail(n),
                    Err(e) => return Outcome::Error(format!("n = {n}: {e}")),
                }
            }
            Outcome::Clean
        })
        .collect();
    let mut verdict = if probe { Verdict::Evidence } else { Verdict::Pass };
    for (s, o) in samples.iter().zip(&outcomes) {
        match o {
            Outcome::Fail(n) => {
                verdict = Verdict::Fail;
                report.witness = Some(Witness { seed: s.seed, n: *n });
                break;
            }
            Outcome::Error(msg) => {
                if verdict != Verdict::Inconclusive {
                    flags.push(msg.clone());
                }
                verdict = Verdict::Inconclusive;
            }
            Outcome::Clean => {}
        }
    }
    report.verdict = verdict;
    report.flags = flags;
    report
}

/// `def(n + p) = def(n)` over the window.
pub fn check_period<G: Grid + Send>(def: &QuantityDef, ctx: &Ctx, samples: &[Sample<G>]) -> CheckReport {
    let p = def.period.value() as i64;
    let (lo, hi) = window_of([&def.expr]);
    let probe = matches!(def.period, Period::Conjectured(_));
    let id = if probe {
        format!("conjecture.{}", def.name)
    } else {
        format!("period.{}", def.name)
    };
    drive(ctx, &id, &def.citation, samples, (lo, hi + p), probe, def.flags.clone(), |g, n| {
        Ok(def.expr.eval(g, n)?.same(&def.expr.eval(g, n + p)?))
    })
}

pub fn check_identity<G: Grid + Send>(def: &IdentityDef, ctx: &Ctx, samples: &[Sample<G>], probe: bool) -> CheckReport {
    let id = identity_report_id(def, probe);
    drive(ctx, &id, &def.citation, samples, window_of([&def.lhs, &def.rhs]), probe, Vec::new(), |g, n| {
        Ok(def.lhs.eval(g, n)?.same(&def.rhs.eval(g, n)?))
    })
}

/// One report per auxiliary identity of the catalog.
pub fn check_auxiliary_identities<G: Grid + Send>(cat: &Catalog, ctx: &Ctx, samples: &[Sample<G>]) -> Vec<CheckReport> {
    cat.identities
        .iter()
        .map(|d| check_identity(d, ctx, samples, false))
        .collect()
}

fn eval_matrix<G: Grid>(m: &[[Expr; 2]; 2], g: &G, n: i64) -> Result<Matrix<G::Value>> {
    m.iter()
        .map(|row| row.iter().map(|e| e.eval(g, n)).collect())
        .collect()
}

fn factor_product<G: Grid>(ps: &PsiSystem, factors: &[i64], g: &G, n: i64) -> Result<Matrix<G::Value>> {
    let mut acc: Option<Matrix<G::Value>> = None;
    for &k in factors {
        let l = eval_matrix(&ps.ltilde, g, n + k)?;
        acc = Some(match acc {
            None => l,
            Some(a) => mat_mul(&a, &l),
        });
    }
    Ok(acc.expect("at least one factor"))
}

fn factor_window(ps: &PsiSystem, factors: &[i64]) -> (i64, i64) {
    let (lo, hi) = window_of(ps.ltilde.iter().flatten());
    let kmin = *factors.iter().min().unwrap();
    let kmax = *factors.iter().max().unwrap();
    (lo + kmin, hi + kmax)
}

/// `(tr M_n, det M_n)` with `M_n` the product of the trace factors.
pub fn trace_invariant<G: Grid>(ps: &PsiSystem, g: &G, n: i64) -> Result<(G::Value, G::Value)> {
    let m = factor_product(ps, &ps.trace_factors, g, n)?;
    Ok((trace2(&m), det2(&m)))
}

/// Determinant one, shift invariance of the trace, the Ψ recurrence and,
/// where the family has one, the closed form of the trace.
pub fn check_trace<G: Grid + Send>(ps: &PsiSystem, ctx: &Ctx, samples: &[Sample<G>]) -> Vec<CheckReport> {
    let (lo, hi) = factor_window(ps, &ps.trace_factors);
    let mut out = vec![
        drive(ctx, "trace.det", &ps.citation, samples, (lo, hi), false, Vec::new(), |g, n| {
            let (_, d) = trace_invariant(ps, g, n)?;
            Ok(d.same(&d.one_like()))
        }),
        drive(ctx, "trace.invariant", &ps.citation, samples, (lo, hi + 1), false, Vec::new(), |g, n| {
            Ok(trace_invariant(ps, g, n)?.0.same(&trace_invariant(ps, g, n + 1)?.0))
        }),
    ];
    let (flo, fhi) = factor_window(ps, &ps.psi_factors);
    let (plo, phi) = window_of(ps.psi.iter().flatten());
    let psi_window = (flo.min(plo), fhi.max(phi + ps.psi_shift));
    out.push(drive(ctx, "trace.psi", &ps.citation, samples, psi_window, false, Vec::new(), |g, n| {
        let lhs = mat_mul(&eval_matrix(&ps.psi, g, n)?, &factor_product(ps, &ps.psi_factors, g, n)?);
        let rhs = eval_matrix(&ps.psi, g, n + ps.psi_shift)?;
        Ok(lhs.iter().flatten().zip(rhs.iter().flatten()).all(|(a, b)| a.same(b)))
    }));
    if let Some(cross) = &ps.cross {
        let (clo, chi) = window_of([cross]);
        out.push(drive(ctx, "trace.cross", &ps.citation, samples, (lo.min(clo), hi.max(chi)), false, Vec::new(), |g, n| {
            Ok(trace_invariant(ps, g, n)?.0.same(&cross.eval(g, n)?))
        }));
    }
    out
}

/// `X_{n+2b} − 𝒦 X_{n+b} + X_n = 0` at `vertex`, with `𝒦 = tr M_n`.
pub fn check_constant_linear_relation<G: Grid + Send>(
    ps: &PsiSystem,
    vertex: usize,
    label: &str,
    ctx: &Ctx,
    samples: &[Sample<G>],
) -> CheckReport {
    let b = ps.b as i64;
    let (lo, hi) = factor_window(ps, &ps.trace_factors);
    let citation = format!("X_(n+2b) - K X_(n+b) + X_n = 0 at {label}, b = {b}");
    let id = format!("linear.{label}");
    drive(ctx, &id, &citation, samples, (lo.min(0), hi.max(2 * b)), false, Vec::new(), |g, n| {
        let (k, _) = trace_invariant(ps, g, n)?;
        let at = |t: i64| Expr::Entry { vertex, offset: t }.eval(g, n);
        Ok(at(2 * b)?.minus(&k.times(&at(b)?)).plus(&at(0)?).is_zero())
    })
}

/// `γ` read off the Ã-type recurrence has the stated period.
pub fn check_atype_recurrence<G: Grid + Send>(def: &AtypeDef, ctx: &Ctx, samples: &[Sample<G>]) -> CheckReport {
    let p = def.gamma_period as i64;
    let (lo, hi) = window_of([&def.gamma]);
    drive(ctx, &def.id, &def.citation, samples, (lo, hi + p), def.conjectural, Vec::new(), |g, n| {
        Ok(def.gamma.eval(g, n)?.same(&def.gamma.eval(g, n + p)?))
    })
}

/// Every row of the kernel definition is annihilated by `(1, −α, 1)ᵀ`.
pub fn check_kernel<G: Grid + Send>(def: &KernelDef, ctx: &Ctx, samples: &[Sample<G>]) -> CheckReport {
    let window = window_of(def.rows.iter().flatten().chain([&def.alpha]));
    drive(ctx, &def.id, &def.citation, samples, window, false, Vec::new(), |g, n| {
        let rows = def
            .rows
            .iter()
            .map(|r| Ok([r[0].eval(g, n)?, r[1].eval(g, n)?, r[2].eval(g, n)?]))
            .collect::<Result<Vec<_>>>()?;
        Ok(kernel_vector_check(&rows, &def.alpha.eval(g, n)?))
    })
}

/// Conjecture probes report EVIDENCE when no counterexample turns up.
pub fn probe_conjecture<G: Grid + Send>(probe: &Probe, ctx: &Ctx, samples: &[Sample<G>]) -> CheckReport {
    match probe {
        Probe::Period(q) => {
            let q = QuantityDef {
                period: Period::Conjectured(q.period.value()),
                ..q.clone()
            };
            check_period(&q, ctx, samples)
        }
        Probe::Identity(i) => check_identity(i, ctx, samples, true),
        Probe::Atype(a) => check_atype_recurrence(
            &AtypeDef {
                conjectural: true,
                ..a.clone()
            },
            ctx,
            samples,
        ),
    }
}

fn identity_report_id(def: &IdentityDef, probe: bool) -> String {
    if probe || def.id.starts_with("conjecture.") {
        def.id.clone()
    } else {
        format!("identity.{}", def.id.split_once('.').map_or(def.id.as_str(), |(_, r)| r))
    }
}

/// The id a probe's report carries.
pub fn probe_report_id(p: &Probe) -> String {
    match p {
        Probe::Period(q) => format!("conjecture.{}", q.name),
        Probe::Identity(i) => identity_report_id(i, true),
        Probe::Atype(a) => a.id.clone(),
    }
}

/// Report id and offset window `(lo, hi)` of every check in the catalog,
/// in the order the checkers use them. `labels` name the vertices.
pub fn check_windows(cat: &Catalog, labels: &[String]) -> Vec<(String, (i64, i64))> {
    let mut out = Vec::new();
    let period = |e: &Expr, p: usize| {
        let (lo, hi) = window_of([e]);
        (lo, hi + p as i64)
    };
    for q in &cat.quantities {
        out.push((format!("period.{}", q.name), period(&q.expr, q.period.value())));
    }
    for d in &cat.identities {
        out.push((identity_report_id(d, false), window_of([&d.lhs, &d.rhs])));
    }
    let ps = &cat.psi;
    let (lo, hi) = factor_window(ps, &ps.trace_factors);
    out.push(("trace.det".into(), (lo, hi)));
    out.push(("trace.invariant".into(), (lo, hi + 1)));
    let (flo, fhi) = factor_window(ps, &ps.psi_factors);
    let (plo, phi) = window_of(ps.psi.iter().flatten());
    out.push(("trace.psi".into(), (flo.min(plo), fhi.max(phi + ps.psi_shift))));
    if let Some(cross) = &ps.cross {
        let (clo, chi) = window_of([cross]);
        out.push(("trace.cross".into(), (lo.min(clo), hi.max(chi))));
    }
    for &v in &cat.linear_vertices {
        let label = labels.get(v).map_or("x", String::as_str);
        out.push((format!("linear.{label}"), (lo.min(0), hi.max(2 * ps.b as i64))));
    }
    for a in &cat.atype {
        out.push((a.id.clone(), period(&a.gamma, a.gamma_period)));
    }
    for k in &cat.kernels {
        out.push((k.id.clone(), window_of(k.rows.iter().flatten().chain([&k.alpha]))));
    }
    for p in &cat.probes {
        let w = match p {
            Probe::Period(q) => period(&q.expr, q.period.value()),
            Probe::Identity(i) => window_of([&i.lhs, &i.rhs]),
            Probe::Atype(a) => period(&a.gamma, a.gamma_period),
        };
        out.push((probe_report_id(p), w));
    }
    out
}
