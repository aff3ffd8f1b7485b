use affine_frieze::exact::{DualRat, LaurentPoly, Rat, Scalar};
use affine_frieze::frieze::draw_seed_values;
use affine_frieze::quiver::{build_affine_quiver, Family};
use affine_frieze::reduction::{
    bracket_at, build_reduction, explicit_step, first_integrals, integrability_battery, integrability_battery_with,
    poisson_bracket_poly, printed_c, reduced_values, reduction_checks, scaling_actions, ReducedSystem,
};
use affine_frieze::relations::{catalog, Verdict};
use proptest::prelude::*;

const REDUCED: [Family; 6] = [
    Family::D { n: 5 },
    Family::D { n: 7 },
    Family::D { n: 6 },
    Family::E6,
    Family::E7,
    Family::E8,
];

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn ints(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&k| rat(k, 1)).collect()
}

fn system(f: Family) -> ReducedSystem {
    build_reduction(&build_affine_quiver(f).unwrap()).unwrap()
}

fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
    rows.iter().map(|r| ints(r)).collect()
}

#[test]
fn e6_reduced_map_at_all_ones() {
    let rs = system(Family::E6);
    let y = rs.reduced_step(&ints(&[1; 6])).unwrap();
    assert_eq!(y, ints(&[4, 5, 4, 5, 4, 5]));
    assert_eq!(rs.generic_step(&ints(&[1; 6])).unwrap(), y);
}

#[test]
fn d6_reduced_map_at_all_ones() {
    let rs = system(Family::D { n: 6 });
    assert_eq!(rs.labels, ["X3", "p", "q", "X5"]);
    assert_eq!(rs.reduced_step(&ints(&[1; 4])).unwrap(), ints(&[2, 45, 45, 2]));
}

#[test]
fn printed_poisson_matrices() {
    let pair = int_matrix(&[
        &[0, 1, 0, 0, 0, 0],
        &[-1, 0, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0],
        &[0, 0, -1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 1],
        &[0, 0, 0, 0, -1, 0],
    ]);
    assert_eq!(system(Family::E6).c, pair);
    assert_eq!(system(Family::E7).c, pair);
    // D5: c_ij = (-1)^((j-i+1)/2) for i odd, j even, i < j.
    let d5 = int_matrix(&[&[0, -1, 0, 1], &[1, 0, 0, 0], &[0, 0, 0, -1], &[-1, 0, 1, 0]]);
    assert_eq!(system(Family::D { n: 5 }).c, d5);
    assert_eq!(printed_c(Family::D { n: 5 }).unwrap(), d5);
    for f in REDUCED {
        assert_eq!(printed_c(f).unwrap(), system(f).c, "{f}");
    }
}

#[test]
fn d_odd_poisson_matrix_follows_the_parity_rule() {
    for n in [5, 7, 9, 11] {
        let c = system(Family::D { n }).c;
        let size = n - 1;
        for i in 1..=size {
            for j in 1..=size {
                let want = if i < j && i % 2 == 1 && j % 2 == 0 {
                    if ((j - i + 1) / 2) % 2 == 0 { 1 } else { -1 }
                } else if j < i && j % 2 == 1 && i % 2 == 0 {
                    if ((i - j + 1) / 2) % 2 == 0 { -1 } else { 1 }
                } else {
                    0
                };
                assert_eq!(c[i - 1][j - 1], rat(want, 1), "D{n} ({i},{j})");
            }
        }
    }
}

#[test]
fn coordinates_and_kernels() {
    let e7 = system(Family::E7);
    // a..h are vertices 0..7: y3 = c e f, y5 = f h.
    assert_eq!(e7.ydefs()[2], vec![0, 0, 1, 0, 1, 1, 0, 0]);
    assert_eq!(e7.ydefs()[4], vec![0, 0, 0, 0, 0, 1, 0, 1]);
    for f in REDUCED {
        let rs = system(f);
        for u in rs.kernel() {
            for row in &rs.quiver.b.0 {
                assert_eq!(row.iter().zip(u).map(|(a, b)| a * b).sum::<i64>(), 0, "{f}");
            }
        }
        assert_eq!(rs.rank + rs.kernel().len(), rs.quiver.n_vertices());
        assert_eq!(scaling_actions(&rs).len(), rs.kernel().len());
    }
}

#[test]
fn block_form_and_lift() {
    for f in REDUCED {
        let rs = system(f);
        assert!(rs.block_form_holds(), "{f}");
        let y = draw_seed_values(rs.rank, 5).values;
        assert_eq!(rs.project(&rs.lift(&y).unwrap()).unwrap(), y, "{f}");
    }
}

#[test]
fn explicit_maps_agree_with_lift_step_project() {
    for f in REDUCED {
        let rs = system(f);
        for seed in 0..50 {
            let y = draw_seed_values(rs.rank, seed).values;
            let explicit = explicit_step(f, &y).expect("explicit map").unwrap();
            assert_eq!(explicit, rs.generic_step(&y).unwrap(), "{f} seed {seed}");
        }
    }
}

#[test]
fn e6_j_in_reduced_coordinates() {
    // J_0 = (y1 y5 + y1 y6 + y1 + y5 + (1 + y6)(y2 y4 y6 + 1)) / (y2 y5 y6).
    let rs = system(Family::E6);
    let j = catalog(Family::E6).unwrap().quantities.into_iter().find(|q| q.name == "J").unwrap().expr;
    let one = rat(1, 1);
    for seed in 0..10 {
        let y = draw_seed_values(6, seed).values;
        let want = (&y[0] * &y[4] + &y[0] * &y[5] + &y[0] + &y[4] + (&one + &y[5]) * (&y[1] * &y[3] * &y[5] + &one))
            / (&y[1] * &y[4] * &y[5]);
        let got = reduced_values(&rs, std::slice::from_ref(&j), &y).unwrap().remove(0).value;
        assert_eq!(got, want);
    }
}

#[test]
fn reduction_suite_passes() {
    let seeds: Vec<u64> = (0..6).collect();
    for f in REDUCED {
        let rs = system(f);
        let mut reports = reduction_checks(&rs, &seeds);
        reports.extend(integrability_battery(&rs, &seeds));
        assert!(reports.iter().any(|r| r.id.starts_with("poisson.")), "{f}");
        for r in reports {
            assert_eq!(r.verdict, Verdict::Pass, "{f} {}: {:?}", r.id, r.flags);
        }
    }
}

#[test]
fn first_integral_counts() {
    for (f, m) in [
        (Family::D { n: 5 }, 2),
        (Family::D { n: 7 }, 3),
        (Family::D { n: 6 }, 2),
        (Family::E6, 3),
        (Family::E7, 3),
        (Family::E8, 4),
    ] {
        assert_eq!(system(f).m(), m, "{f}");
        assert_eq!(first_integrals(f).len(), m, "{f}");
    }
}

#[test]
fn duplicated_integral_fails_the_rank_check() {
    let rs = system(Family::E6);
    let mut list: Vec<_> = first_integrals(Family::E6).into_iter().map(|(_, e)| e).collect();
    list[2] = list[0].clone() * list[1].clone();
    let reports = integrability_battery_with(&rs, &list, &[1, 2, 3]);
    let rank = reports.iter().find(|r| r.id == "integrability.rank").unwrap();
    assert_eq!(rank.verdict, Verdict::Fail);
    assert!(rank.flags.iter().any(|f| f == "rank 2 of 3"));
    // A function of invariants is still invariant and still commutes.
    for id in ["integrability.invariance", "integrability.involution"] {
        assert_eq!(reports.iter().find(|r| r.id == id).unwrap().verdict, Verdict::Pass);
    }
}

#[test]
fn non_integral_fails_invariance() {
    let rs = system(Family::D { n: 5 });
    let j = catalog(Family::D { n: 5 }).unwrap().quantities.into_iter().find(|q| q.name == "J").unwrap().expr;
    // Reduced quantities are read from time 0 onwards.
    let j = j.shifted(-j.window().unwrap().0);
    let mut list: Vec<_> = first_integrals(Family::D { n: 5 }).into_iter().map(|(_, e)| e).collect();
    list[0] = j;
    let reports = integrability_battery_with(&rs, &list, &[0, 1]);
    assert_eq!(reports.iter().find(|r| r.id == "integrability.invariance").unwrap().verdict, Verdict::Fail);
}

#[test]
fn unsupported_families_are_reported() {
    let q = build_affine_quiver(Family::D { n: 8 }).unwrap();
    assert!(matches!(build_reduction(&q), Err(affine_frieze::Error::Unsupported(_))));
}

#[test]
fn dual_jacobian_matches_difference_of_reduced_maps() {
    // Dual gradients of the reduced map against derivatives of the same map
    // run on polynomial quotients.
    let rs = system(Family::E6);
    let y = draw_seed_values(6, 9).values;
    let z = rs.reduced_step(&DualRat::seed(&y)).unwrap();
    let vars: Vec<String> = (1..=6).map(|i| format!("y{i}")).collect();
    let sym = rs.reduced_step(&LaurentFracs::vars(&vars)).unwrap();
    for (i, zi) in z.iter().enumerate() {
        for k in 0..6 {
            assert_eq!(zi.grad[k], sym[i].partial_at(k, &y), "entry {i} var {k}");
        }
    }
}

/// Minimal quotient-of-polynomials scalar for the test above.
#[derive(Clone, Debug)]
struct LaurentFracs {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFracs {
    fn vars(names: &[String]) -> Vec<Self> {
        LaurentPoly::variables(names)
            .into_iter()
            .map(|v| LaurentFracs { den: v.one_like(), num: v })
            .collect()
    }

    /// `d/dy_k (num/den)` evaluated at `y`.
    fn partial_at(&self, k: usize, y: &[Rat]) -> Rat {
        let n = self.num.eval(y).unwrap();
        let d = self.den.eval(y).unwrap();
        let dn = self.num.partial(k).eval(y).unwrap();
        let dd = self.den.partial(k).eval(y).unwrap();
        (dn * &d - n * dd) / (&d * &d)
    }
}

impl Scalar for LaurentFracs {
    fn int_like(&self, k: i64) -> Self {
        LaurentFracs { num: self.num.int_like(k), den: self.num.one_like() }
    }
    fn plus(&self, r: &Self) -> Self {
        LaurentFracs { num: self.num.times(&r.den).plus(&r.num.times(&self.den)), den: self.den.times(&r.den) }
    }
    fn minus(&self, r: &Self) -> Self {
        LaurentFracs { num: self.num.times(&r.den).minus(&r.num.times(&self.den)), den: self.den.times(&r.den) }
    }
    fn times(&self, r: &Self) -> Self {
        LaurentFracs { num: self.num.times(&r.num), den: self.den.times(&r.den) }
    }
    fn divide(&self, r: &Self) -> affine_frieze::Result<Self> {
        Ok(LaurentFracs { num: self.num.times(&r.den), den: self.den.times(&r.num) })
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn same(&self, o: &Self) -> bool {
        self.num.times(&o.den) == o.num.times(&self.den)
    }
}

fn skew(entries: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut c = vec![vec![0; n]; n];
    let mut it = entries.iter();
    for i in 0..n {
        for j in i + 1..n {
            let v = *it.next().unwrap();
            c[i][j] = v;
            c[j][i] = -v;
        }
    }
    c
}

fn small_poly(names: &[String]) -> impl Strategy<Value = LaurentPoly> {
    let vars = LaurentPoly::variables(names);
    let n = names.len();
    proptest::collection::vec((-3i64..4, proptest::collection::vec(-1i32..3, n)), 1..4).prop_map(move |terms| {
        let mut p = vars[0].zero_like();
        for (c, exps) in terms {
            let mut t = vars[0].int_like(c);
            for (v, e) in vars.iter().zip(exps) {
                t = t.times(&v.pow_i(e as i64).unwrap());
            }
            p = p.plus(&t);
        }
        p
    })
}

fn names() -> Vec<String> {
    (1..=4).map(|i| format!("y{i}")).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric(c in proptest::collection::vec(-2i64..3, 6), f in small_poly(&names()), g in small_poly(&names())) {
        let c = skew(&c, 4);
        prop_assert_eq!(poisson_bracket_poly(&c, &f, &g), poisson_bracket_poly(&c, &g, &f).negated());
    }

    #[test]
    fn bracket_is_a_derivation(c in proptest::collection::vec(-2i64..3, 6), f in small_poly(&names()), g in small_poly(&names()), h in small_poly(&names())) {
        let c = skew(&c, 4);
        let lhs = poisson_bracket_poly(&c, &f, &g.times(&h));
        let rhs = poisson_bracket_poly(&c, &f, &g).times(&h).plus(&g.times(&poisson_bracket_poly(&c, &f, &h)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bracket_satisfies_jacobi(c in proptest::collection::vec(-2i64..3, 6), f in small_poly(&names()), g in small_poly(&names()), h in small_poly(&names())) {
        let c = skew(&c, 4);
        let b = |p: &LaurentPoly, q: &LaurentPoly| poisson_bracket_poly(&c, p, q);
        let sum = b(&f, &b(&g, &h)).plus(&b(&g, &b(&h, &f))).plus(&b(&h, &b(&f, &g)));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn numeric_bracket_matches_polynomial_bracket(c in proptest::collection::vec(-2i64..3, 6), f in small_poly(&names()), g in small_poly(&names()), seed in 0u64..500) {
        let cm = skew(&c, 4);
        let cr: Vec<Vec<Rat>> = cm.iter().map(|r| ints(r)).collect();
        let y = draw_seed_values(4, seed).values;
        let grad = |p: &LaurentPoly| (0..4).map(|k| p.partial(k).eval(&y).unwrap()).collect::<Vec<_>>();
        let numeric = bracket_at(&cr, &y, &grad(&f), &grad(&g));
        prop_assert_eq!(numeric, poisson_bracket_poly(&cm, &f, &g).eval(&y).unwrap());
    }

    #[test]
    fn reduced_map_preserves_the_bracket(seed in 0u64..10_000, f in 0usize..6) {
        let rs = system(REDUCED[f]);
        let y = draw_seed_values(rs.rank, seed).values;
        let z = rs.reduced_step(&DualRat::seed(&y)).unwrap();
        for i in 0..z.len() {
            for j in 0..z.len() {
                prop_assert_eq!(bracket_at(&rs.c, &y, &z[i].grad, &z[j].grad), &rs.c[i][j] * &z[i].value * &z[j].value);
            }
        }
    }
}
