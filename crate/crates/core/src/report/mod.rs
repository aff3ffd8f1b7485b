//! The batch runner behind `frieze verify` and the table emitter behind
//! `frieze tables`.

mod tables;

use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, Rat};
use crate::frieze::{a_type_sequence, draw_seed_values, presymplectic_check, FriezeTable, Grid, Mode, Sequence, DEFAULT_TERM_BUDGET};
use crate::quiver::{build_affine_quiver, Family, Quiver};
use crate::reduction::{build_reduction, integrability_battery, reduction_checks};
use crate::relations::{
    catalog, check_atype_recurrence, check_auxiliary_identities, check_constant_linear_relation, check_kernel,
    check_period, check_trace, check_windows, probe_conjecture, probe_report_id, Catalog, CheckReport, Ctx, Sample,
    Verdict,
};

pub use tables::{emit_tables, measured_period};

/// Environment variable naming the directory reports go to when no output
/// path is given.
pub const OUT_DIR_ENV: &str = "FRIEZE_OUT_DIR";

/// Columns reached on each side of the initial cluster when no depth is
/// given; the term budget may stop sooner.
pub const SYMBOLIC_DEFAULT_DEPTH: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::Usage(format!("unknown format {s:?} (json, csv, text)"))),
        }
    }

    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub quiver: Quiver,
    pub mode: Mode,
    /// Number of random trials.
    pub seeds: usize,
    /// Trial `i` uses RNG seed `rng_seed + i`.
    pub rng_seed: u64,
    /// Last column of the tables; computed from the checks when absent.
    pub n_max: Option<usize>,
    /// Values of `n` tested per check; defaults to three of the longest
    /// claimed periods, and at least 20.
    pub window: Option<usize>,
    /// Check ids or id prefixes; `all` selects everything.
    pub checks: Vec<String>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub term_budget: usize,
}

impl RunConfig {
    pub fn new(family: Family) -> Result<Self> {
        Ok(Self::for_quiver(build_affine_quiver(family)?))
    }

    pub fn for_quiver(quiver: Quiver) -> Self {
        RunConfig {
            quiver,
            mode: Mode::Specialized,
            seeds: 20,
            rng_seed: 0,
            n_max: None,
            window: None,
            checks: vec!["all".into()],
            format: Format::Json,
            output: None,
            term_budget: DEFAULT_TERM_BUDGET,
        }
    }

    fn trial_seeds(&self) -> Vec<u64> {
        (0..self.seeds as u64).map(|i| self.rng_seed.wrapping_add(i)).collect()
    }
}

/// Everything a run produced, in a fixed order.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub reports: Vec<CheckReport>,
    /// Ids of conjecture probes, whose verdicts never fail a run.
    pub probes: Vec<String>,
}

impl RunOutcome {
    /// True when no non-probe check failed.
    pub fn ok(&self) -> bool {
        self.reports
            .iter()
            .all(|r| r.verdict != Verdict::Fail || self.probes.contains(&r.id))
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok() {
            0
        } else {
            1
        }
    }
}

struct Selector<'a>(&'a [String]);

impl Selector<'_> {
    /// True when some id under `prefix.` could be selected.
    fn any_with_prefix(&self, prefix: &str) -> bool {
        self.0
            .iter()
            .any(|s| s == "all" || s == prefix || s.starts_with(&format!("{prefix}.")))
    }

    fn wants(&self, id: &str) -> bool {
        self.0.iter().any(|s| {
            s == "all" || s == id || (id.starts_with(s.as_str()) && id.as_bytes().get(s.len()) == Some(&b'.'))
        })
    }
}

fn span_for(cat: &Catalog, cfg: &RunConfig) -> usize {
    cfg.window.unwrap_or_else(|| {
        let longest = cat
            .quantities
            .iter()
            .map(|q| q.period.value())
            .chain(cat.atype.iter().map(|a| a.gamma_period))
            .max()
            .unwrap_or(1);
        (3 * longest).max(20)
    })
}

/// Table depth that lets every selected relation check run its full window.
fn required_depth(cat: &Catalog, labels: &[String], span: usize, sel: &Selector) -> usize {
    check_windows(cat, labels)
        .into_iter()
        .filter(|(id, _)| sel.wants(id))
        .map(|(_, (lo, hi))| ((-lo).max(0) + span as i64 + hi) as usize)
        .max()
        .unwrap_or(0)
}

fn relation_reports<G: Grid + Send>(
    cat: &Catalog,
    labels: &[String],
    ctx: &Ctx,
    samples: &[Sample<G>],
    sel: &Selector,
    with_probes: bool,
    probes: &mut Vec<String>,
) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut keep = |r: CheckReport| {
        if sel.wants(&r.id) {
            out.push(r);
        }
    };
    for q in &cat.quantities {
        if sel.wants(&format!("period.{}", q.name)) {
            keep(check_period(q, ctx, samples));
        }
    }
    if sel.any_with_prefix("identity") {
        for r in check_auxiliary_identities(cat, ctx, samples) {
            keep(r);
        }
    }
    if sel.any_with_prefix("trace") {
        for r in check_trace(&cat.psi, ctx, samples) {
            keep(r);
        }
    }
    for &v in &cat.linear_vertices {
        let label = labels.get(v).map_or("x", String::as_str);
        if sel.wants(&format!("linear.{label}")) {
            keep(check_constant_linear_relation(&cat.psi, v, label, ctx, samples));
        }
    }
    for a in &cat.atype {
        if sel.wants(&a.id) {
            keep(check_atype_recurrence(a, ctx, samples));
        }
    }
    for k in &cat.kernels {
        if sel.wants(&k.id) {
            keep(check_kernel(k, ctx, samples));
        }
    }
    if with_probes {
        for p in &cat.probes {
            let id = probe_report_id(p);
            if sel.wants(&id) {
                probes.push(id);
                keep(probe_conjecture(p, ctx, samples));
            }
        }
    }
    out
}

fn specialized_samples(q: &Quiver, seeds: &[u64], depth: usize) -> Result<Vec<Sample<FriezeTable<Rat>>>> {
    use rayon::prelude::*;
    seeds
        .par_iter()
        .map(|&s| {
            let d = draw_seed_values(q.n_vertices(), s);
            Ok(Sample {
                seed: Some(s),
                grid: FriezeTable::specialized(q, d.values, depth)?,
            })
        })
        .collect()
}

fn sequence_samples(p: usize, q: usize, seeds: &[u64], depth: usize) -> Result<Vec<Sample<Sequence<Rat>>>> {
    seeds
        .iter()
        .map(|&s| {
            let d = draw_seed_values(p + q, s);
            Ok(Sample {
                seed: Some(s),
                grid: a_type_sequence(p, q, d.values, depth + 1)?,
            })
        })
        .collect()
}

/// Column `n` of the Ã frieze is a block of `p + q` consecutive terms of
/// the single sequence.
fn a_frieze_crosscheck(q: &Quiver, p: usize, qq: usize, seeds: &[u64], ctx: &Ctx) -> Result<CheckReport> {
    let m = p + qq;
    let depth = ctx.span - 1;
    let mut report = CheckReport {
        id: "frieze.sequence".into(),
        family: ctx.family.clone(),
        mode: ctx.mode,
        trials: seeds.len(),
        n_window: [0, depth as i64],
        verdict: Verdict::Pass,
        witness: None,
        citation: format!("A({p},{qq}): X^k_n = x_(k-1+n(p+q))"),
        flags: Vec::new(),
    };
    for &s in seeds {
        let init = draw_seed_values(m, s).values;
        let t = FriezeTable::specialized(q, init.clone(), depth)?;
        let seq = a_type_sequence(p, qq, init, m * (depth + 1))?;
        for n in 0..=depth {
            if (0..m).any(|k| t.column(n)[k] != seq.values[k + n * m]) {
                report.verdict = Verdict::Fail;
                report.witness = Some(crate::relations::Witness { seed: Some(s), n: n as i64 });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn laurent_report(ctx: &Ctx, depth: usize, result: &Result<FriezeTable<LaurentPoly>>) -> CheckReport {
    let mut r = CheckReport {
        id: "laurent".into(),
        family: ctx.family.clone(),
        mode: Mode::Symbolic,
        trials: 1,
        n_window: [0, depth as i64],
        verdict: Verdict::Pass,
        witness: None,
        citation: "every frieze entry is a Laurent polynomial in the initial cluster".into(),
        flags: Vec::new(),
    };
    match result {
        Ok(t) => {
            r.flags.push(format!("{} terms", t.total_terms()));
            r.flags.push(format!("positive coefficients: {}", t.positive()));
        }
        Err(Error::LaurentViolation { column, .. }) => {
            r.verdict = Verdict::Fail;
            r.witness = Some(crate::relations::Witness { seed: None, n: *column as i64 });
        }
        Err(e) => {
            r.verdict = Verdict::Inconclusive;
            r.flags.push(e.to_string());
        }
    }
    r
}

/// Runs the selected checks and returns their reports in a fixed order.
pub fn run_checks(cfg: &RunConfig) -> Result<RunOutcome> {
    let q = &cfg.quiver;
    let family = q.family;
    let sel = Selector(&cfg.checks);
    let seeds = cfg.trial_seeds();
    let mut probes = Vec::new();
    let mut reports = Vec::new();
    let tag = family.tag();
    let cat = catalog(family);
    let span = cat.as_ref().map_or(20, |c| span_for(c, cfg));
    let labels: Vec<String> = match family {
        Family::A { .. } => vec!["x".into()],
        _ => q.labels.clone(),
    };
    let needed = cat.as_ref().map_or(0, |c| required_depth(c, &labels, span, &sel)).max(1);
    let ctx = Ctx {
        family: tag.clone(),
        mode: cfg.mode,
        span,
    };

    match cfg.mode {
        Mode::Specialized => {
            let depth = match cfg.n_max {
                Some(n) if n < needed => {
                    return Err(Error::Usage(format!(
                        "--n-max {n} is too small: the selected checks need {needed} for a window of {span}"
                    )))
                }
                Some(n) => n,
                None => needed,
            };
            if let Some(cat) = &cat {
                reports.extend(match family {
                    Family::A { p, q: qq } => {
                        let samples = sequence_samples(p, qq, &seeds, depth)?;
                        relation_reports(cat, &["x".to_string()], &ctx, &samples, &sel, true, &mut probes)
                    }
                    _ => {
                        let samples = specialized_samples(q, &seeds, depth)?;
                        relation_reports(cat, &q.labels, &ctx, &samples, &sel, true, &mut probes)
                    }
                });
            }
            if let Family::A { p, q: qq } = family {
                if sel.wants("frieze.sequence") {
                    reports.push(a_frieze_crosscheck(q, p, qq, &seeds, &ctx)?);
                }
            }
            if sel.wants("presymplectic") {
                reports.push(crate::reduction::seeded_report(
                    &tag,
                    "presymplectic",
                    "J^T Omega(phi(x)) J = Omega(x) for the full cluster map",
                    &seeds,
                    false,
                    |s| presymplectic_check(q, &draw_seed_values(q.n_vertices(), s).values),
                ));
            }
            let wants_reduction = ["reduction", "poisson", "scaling", "integrability"]
                .iter()
                .any(|p| sel.any_with_prefix(p));
            if wants_reduction {
                match build_reduction(q) {
                    Ok(rs) => {
                        let mut rr = reduction_checks(&rs, &seeds);
                        rr.extend(integrability_battery(&rs, &seeds));
                        reports.extend(rr.into_iter().filter(|r| sel.wants(&r.id)));
                    }
                    Err(Error::Unsupported(_)) if cfg.checks.iter().any(|s| s == "all") => {}
                    Err(e) => return Err(e),
                }
            }
        }
        Mode::Symbolic => {
            // An explicit depth is a hard requirement; otherwise the table
            // reaches out from the initial cluster in both directions as far
            // as the budget allows, up to the default on each side.
            let (depth, table, seed_column, stopped) = match cfg.n_max {
                Some(d) => (d, FriezeTable::symbolic(q, d, cfg.term_budget), 0, None),
                None => {
                    let d = SYMBOLIC_DEFAULT_DEPTH;
                    match FriezeTable::symbolic_around(q, d, d, cfg.term_budget) {
                        Ok((t, seed, stop)) => (t.depth() - 1, Ok(t), seed, stop),
                        Err(e) => (d, Err(e), 0, None),
                    }
                }
            };
            if sel.wants("laurent") {
                let mut r = laurent_report(&ctx, depth, &table);
                if seed_column > 0 {
                    r.flags.push(format!("initial cluster at column {seed_column}"));
                }
                if let Some(e) = stopped {
                    r.flags.push(format!("stopped at columns 0..{depth}: {e}"));
                }
                reports.push(r);
            }
            if let Some(cat) = &cat {
                let symbolic_reports = match family {
                    Family::A { p, q: qq } => {
                        let init = LaurentPoly::variables(&q.labels);
                        let seq = a_type_sequence(p, qq, init, depth + 1)?;
                        let samples = vec![Sample { seed: None, grid: seq }];
                        relation_reports(cat, &["x".to_string()], &ctx, &samples, &sel, false, &mut probes)
                    }
                    _ => match table {
                        Ok(t) => {
                            let samples = vec![Sample { seed: None, grid: t }];
                            relation_reports(cat, &q.labels, &ctx, &samples, &sel, false, &mut probes)
                        }
                        Err(_) => {
                            // Budget exceeded or worse: every relation check is
                            // inconclusive at this depth.
                            let empty: Vec<Sample<FriezeTable<LaurentPoly>>> = Vec::new();
                            relation_reports(cat, &q.labels, &ctx, &empty, &sel, false, &mut probes)
                        }
                    },
                };
                reports.extend(symbolic_reports);
            }
        }
    }
    if reports.is_empty() {
        let mode = if cfg.mode == Mode::Symbolic { "symbolic" } else { "specialized" };
        return Err(Error::Usage(format!("no checks match {:?} for {tag} in {mode} mode", cfg.checks)));
    }
    Ok(RunOutcome { reports, probes })
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Renders reports; identical inputs give identical bytes.
pub fn render(reports: &[CheckReport], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(reports)? + "\n",
        Format::Csv => {
            let mut s = String::from("id,family,mode,trials,n_lo,n_hi,verdict,witness_seed,witness_n,citation,flags\n");
            for r in reports {
                let (ws, wn) = r.witness.as_ref().map_or((String::new(), String::new()), |w| {
                    (w.seed.map(|s| s.to_string()).unwrap_or_default(), w.n.to_string())
                });
                let mode = if r.mode == Mode::Symbolic { "symbolic" } else { "specialized" };
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{},{},{},{},{}",
                    csv_field(&r.id),
                    csv_field(&r.family),
                    mode,
                    r.trials,
                    r.n_window[0],
                    r.n_window[1],
                    r.verdict.as_str(),
                    ws,
                    wn,
                    csv_field(&r.citation),
                    csv_field(&r.flags.join("; "))
                );
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in reports {
                let mode = if r.mode == Mode::Symbolic { "symbolic" } else { "specialized" };
                let _ = write!(
                    s,
                    "{:<12} {:<28} {} {}, {} trials, n {}..{}",
                    r.verdict.as_str(),
                    r.id,
                    r.family,
                    mode,
                    r.trials,
                    r.n_window[0],
                    r.n_window[1]
                );
                if let Some(w) = &r.witness {
                    match w.seed {
                        Some(seed) => {
                            let _ = write!(s, ", witness seed {seed} n {}", w.n);
                        }
                        None => {
                            let _ = write!(s, ", witness n {}", w.n);
                        }
                    }
                }
                let _ = writeln!(s, "\n{:13}{}", "", r.citation);
                for f in &r.flags {
                    let _ = writeln!(s, "{:13}note: {f}", "");
                }
            }
            s
        }
    })
}

/// Where a report goes: the explicit path, else a file named after the
/// family in `$FRIEZE_OUT_DIR`, else standard output (`None`).
pub fn output_path(cfg: &RunConfig) -> Option<PathBuf> {
    if let Some(p) = &cfg.output {
        return Some(p.clone());
    }
    let dir = std::env::var_os(OUT_DIR_ENV)?;
    let name = cfg
        .quiver
        .family
        .tag()
        .replace(['(', ')'], "")
        .replace(',', "_");
    Some(PathBuf::from(dir).join(format!("report-{name}.{}", cfg.format.extension())))
}

/// Runs the checks, writes the report and returns the process exit code.
pub fn run_verify(cfg: &RunConfig) -> Result<i32> {
    let outcome = run_checks(cfg)?;
    let text = render(&outcome.reports, cfg.format)?;
    match output_path(cfg) {
        Some(path) => {
            if let Some(parent) = path.parent() {
                if !parent.as_os_str().is_empty() {
                    std::fs::create_dir_all(parent)?;
                }
            }
            std::fs::write(&path, text)?;
        }
        None => print!("{text}"),
    }
    Ok(outcome.exit_code())
}

/// Plain-text dump of a frieze table, one column per line.
pub fn dump_frieze<V: std::fmt::Display>(labels: &[String], columns: &[Vec<V>], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let rows: Vec<Vec<String>> = columns.iter().map(|c| c.iter().map(|v| v.to_string()).collect()).collect();
            serde_json::to_string_pretty(&serde_json::json!({ "vertices": labels, "columns": rows }))? + "\n"
        }
        Format::Csv | Format::Text => {
            let sep = if format == Format::Csv { "," } else { "\t" };
            let mut s = format!("n{sep}{}\n", labels.join(sep));
            for (n, c) in columns.iter().enumerate() {
                let vals: Vec<String> = c
                    .iter()
                    .map(|v| {
                        let t = v.to_string();
                        if format == Format::Csv {
                            csv_field(&t)
                        } else {
                            t
                        }
                    })
                    .collect();
                let _ = writeln!(s, "{n}{sep}{}", vals.join(sep));
            }
            s
        }
    })
}

/// Dump of a reduced system.
pub fn dump_reduction(rs: &crate::reduction::ReducedSystem) -> Result<String> {
    let rat_rows = |m: &[Vec<Rat>]| -> Vec<Vec<String>> { m.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect() };
    let ydefs: Vec<String> = rs
        .ydefs()
        .iter()
        .zip(&rs.labels)
        .map(|(v, l)| {
            let parts: Vec<String> = v
                .iter()
                .zip(&rs.quiver.labels)
                .filter(|(e, _)| **e != 0)
                .map(|(e, x)| if *e == 1 { x.clone() } else { format!("{x}^{e}") })
                .collect();
            format!("{l} = {}", parts.join(" "))
        })
        .collect();
    Ok(serde_json::to_string_pretty(&serde_json::json!({
        "family": rs.family.tag(),
        "A": rs.a,
        "Bhat": rat_rows(&rs.bhat),
        "C": rat_rows(&rs.c),
        "ydefs": ydefs,
        "section": rs.section.iter().map(|&i| rs.quiver.labels[i].clone()).collect::<Vec<_>>(),
        "explicit_map": crate::reduction::has_explicit_step(rs.family),
        "nonstandard_basis": rs.nonstandard_basis,
    }))? + "\n")
}
