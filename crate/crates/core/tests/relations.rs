use affine_frieze::exact::{Rat, Scalar};
use affine_frieze::frieze::{draw_seed_values, FriezeTable, Mode};
use affine_frieze::quiver::{build_affine_quiver, Family};
use affine_frieze::relations::{
    catalog, check_identity, check_period, dodgson_check, kernel_vector_check, trace_invariant, x, Ctx,
    IdentityDef, Period, Sample, Verdict,
};
use affine_frieze::report::{render, run_checks, Format, RunConfig};
use proptest::prelude::*;

const RELATION_CHECKS: [&str; 6] = ["period", "identity", "trace", "linear", "atype", "kernel"];

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn samples(family: Family, seeds: std::ops::Range<u64>, depth: usize) -> Vec<Sample<FriezeTable<Rat>>> {
    let q = build_affine_quiver(family).unwrap();
    seeds
        .map(|s| Sample {
            seed: Some(s),
            grid: FriezeTable::specialized(&q, draw_seed_values(q.n_vertices(), s).values, depth).unwrap(),
        })
        .collect()
}

fn ctx(family: Family, span: usize) -> Ctx {
    Ctx { family: family.tag(), mode: Mode::Specialized, span }
}

fn relation_config(family: Family, seeds: usize) -> RunConfig {
    let mut cfg = RunConfig::new(family).unwrap();
    cfg.seeds = seeds;
    cfg.checks = RELATION_CHECKS.iter().map(|s| s.to_string()).collect();
    cfg
}

#[test]
fn every_family_passes_at_a_few_seeds() {
    let mut families: Vec<Family> = (4..=9).map(|n| Family::D { n }).collect();
    families.extend([Family::E6, Family::E7, Family::E8]);
    for p in 1..=5 {
        // Only coprime (p, q) give a connected quiver.
        for q in (p..=6 - p).filter(|&q| num_integer::gcd(p, q) == 1) {
            families.push(Family::A { p, q });
        }
    }
    for f in families {
        let out = run_checks(&relation_config(f, 3)).unwrap();
        assert!(!out.reports.is_empty(), "{f}");
        for r in &out.reports {
            if out.probes.contains(&r.id) {
                continue;
            }
            assert_eq!(r.verdict, Verdict::Pass, "{f} {}: {:?}", r.id, r.flags);
        }
    }
}

#[test]
fn wrong_period_fails_with_a_witness() {
    let cat = catalog(Family::E6).unwrap();
    let mut k = cat.quantities.iter().find(|q| q.name == "K").unwrap().clone();
    assert_eq!(k.period, Period::Proven(2));
    let s = samples(Family::E6, 7..10, 40);
    assert_eq!(check_period(&k, &ctx(Family::E6, 20), &s).verdict, Verdict::Pass);
    k.period = Period::Proven(3);
    let r = check_period(&k, &ctx(Family::E6, 20), &s);
    assert_eq!(r.verdict, Verdict::Fail);
    let w = r.witness.unwrap();
    assert_eq!(w.seed, Some(7));
    // The witness reproduces: K differs three steps later.
    let n = w.n;
    let kn = k.expr.eval(&s[0].grid, n).unwrap();
    let kn3 = k.expr.eval(&s[0].grid, n + 3).unwrap();
    assert_ne!(kn, kn3);
}

#[test]
fn wrong_identity_fails() {
    let cat = catalog(Family::E6).unwrap();
    let j = &cat.quantities.iter().find(|q| q.name == "J").unwrap().expr;
    let jt = &cat.quantities.iter().find(|q| q.name == "Jtilde").unwrap().expr;
    let bogus = IdentityDef {
        id: "E6.bogus".into(),
        lhs: j.clone(),
        rhs: jt.clone(),
        citation: String::new(),
    };
    let s = samples(Family::E6, 0..2, 30);
    assert_eq!(check_identity(&bogus, &ctx(Family::E6, 10), &s, false).verdict, Verdict::Fail);
}

#[test]
fn shallow_table_is_inconclusive() {
    let cat = catalog(Family::E6).unwrap();
    let k = cat.quantities.iter().find(|q| q.name == "K").unwrap();
    let s = samples(Family::E6, 0..2, 4);
    let r = check_period(k, &ctx(Family::E6, 20), &s);
    assert_eq!(r.verdict, Verdict::Inconclusive);
    assert!(r.flags.iter().any(|f| f.contains("too shallow")));
}

#[test]
fn truncated_window_is_flagged() {
    let cat = catalog(Family::E6).unwrap();
    let k = cat.quantities.iter().find(|q| q.name == "K").unwrap();
    let s = samples(Family::E6, 0..2, 15);
    let r = check_period(k, &ctx(Family::E6, 20), &s);
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.flags.iter().any(|f| f.contains("truncated")));
}

/// `(X_{n+2b} + X_n) / X_{n+b}` read straight off the table.
fn k_direct(t: &FriezeTable<Rat>, v: usize, b: usize, n: usize) -> Rat {
    (t.get(v, n + 2 * b).unwrap() + t.get(v, n).unwrap()) / t.get(v, n + b).unwrap()
}

#[test]
fn linear_coefficient_is_the_trace() {
    for f in [Family::D { n: 4 }, Family::D { n: 5 }, Family::D { n: 6 }, Family::E6, Family::E7] {
        let cat = catalog(f).unwrap();
        let b = cat.psi.b;
        let t = &samples(f, 3..4, 4 * b + 30)[0].grid;
        // The trace is shift invariant, so any time well inside the table will do.
        let (trace, det) = trace_invariant(&cat.psi, t, 2 * b as i64).unwrap();
        assert_eq!(det, rat(1, 1), "{f}");
        for &v in &cat.linear_vertices {
            for n in 0..10 {
                assert_eq!(k_direct(t, v, b, n), trace, "{f} vertex {v} n {n}");
            }
        }
    }
}

#[test]
fn e6_trace_is_k0_k1_minus_two() {
    // a is vertex 0; K_n = (a_{n-3} + a_{n+3}) / a_n.
    for t in samples(Family::E6, 0..5, 40).iter().map(|s| &s.grid) {
        let a = |n: usize| t.get(0, n).unwrap().clone();
        let k = |n: usize| (a(n - 3) + a(n + 3)) / a(n);
        let cross = k(10) * k(11) - rat(2, 1);
        assert_eq!(k_direct(t, 0, 6, 5), cross);
        let cat = catalog(Family::E6).unwrap();
        assert_eq!(trace_invariant(&cat.psi, t, 8).unwrap().0, cross);
    }
}

#[test]
fn e6_j_has_period_three_off_the_table() {
    // J_n = (a_n + g_{n+4}) / e_{n+2}, with a, e, g at 0, 4, 6.
    for t in samples(Family::E6, 10..14, 30).iter().map(|s| &s.grid) {
        let j = |n: usize| (t.get(0, n).unwrap() + t.get(6, n + 4).unwrap()) / t.get(4, n + 2).unwrap();
        for n in 0..15 {
            assert_eq!(j(n), j(n + 3));
        }
        assert_ne!(j(0), j(1));
    }
}

#[test]
fn d4_checks_hold_symbolically() {
    let mut cfg = RunConfig::new(Family::D { n: 4 }).unwrap();
    cfg.mode = Mode::Symbolic;
    cfg.n_max = Some(8);
    cfg.checks = vec!["laurent".into(), "period".into(), "trace".into()];
    let out = run_checks(&cfg).unwrap();
    assert!(out.reports.len() >= 3);
    for r in &out.reports {
        assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.id, r.flags);
    }
}

#[test]
fn reports_are_byte_stable() {
    let cfg = relation_config(Family::D { n: 5 }, 4);
    let a = render(&run_checks(&cfg).unwrap().reports, Format::Json).unwrap();
    let b = render(&run_checks(&cfg).unwrap().reports, Format::Json).unwrap();
    assert_eq!(a, b);
    let mut other = cfg.clone();
    other.rng_seed = 100;
    let c = render(&run_checks(&other).unwrap().reports, Format::Json).unwrap();
    // Same verdicts, same windows; only the trials differ, and they are not
    // part of the report.
    assert_eq!(a, c);
}

#[test]
fn kernel_vector_rows() {
    let one = rat(1, 1);
    let good = [[rat(1, 1), rat(2, 1), rat(1, 1)], [rat(3, 1), rat(5, 1), rat(2, 1)]];
    assert!(kernel_vector_check(&good, &one));
    let bad = [[rat(1, 1), rat(1, 1), rat(1, 1)]];
    assert!(!kernel_vector_check(&bad, &one));
    assert!(kernel_vector_check(&[[rat(1, 2), rat(1, 3), rat(1, 6)]], &rat(2, 1)));
}

#[test]
fn expression_windows_and_shifts() {
    let e = x(0, -3) + x(1, 4) * x(2, 0);
    assert_eq!(e.window(), Some((-3, 4)));
    assert_eq!(e.shifted(2).window(), Some((-1, 6)));
}

fn small_rat() -> impl Strategy<Value = Rat> {
    (-20i64..20, 1i64..10).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn dodgson_condensation(m in proptest::collection::vec(small_rat(), 9)) {
        let m: Vec<Vec<Rat>> = m.chunks(3).map(|r| r.to_vec()).collect();
        prop_assert!(dodgson_check(&m));
    }

    #[test]
    fn d_family_k_is_constant(n in 4usize..8, seed in 0u64..1000) {
        let f = Family::D { n };
        let b = catalog(f).unwrap().psi.b;
        let t = &samples(f, seed..seed + 1, 2 * b + 12)[0].grid;
        let k0 = k_direct(t, 0, b, 0);
        for m in 1..10 {
            prop_assert_eq!(&k_direct(t, 0, b, m), &k0);
        }
        prop_assert!(!k0.same(&rat(0, 1)));
    }
}
