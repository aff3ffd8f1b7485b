use affine_frieze::exact::{rat, LaurentPoly, Rat};
use affine_frieze::frieze::{a_type_sequence, draw_seed_values, jacobian_of_step, presymplectic_check, DEFAULT_TERM_BUDGET};
use affine_frieze::relations::{catalog, x};
use affine_frieze::{build_affine_quiver, Family, FriezeTable, Quiver, Scalar};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

/// Straight-line frieze: `X^k_{n+1} X^k_n = 1 + prod_{i->k} X^i_n prod_{k->i} X^i_{n+1}`,
/// computing each vertex once every vertex it points to is done.
fn oracle(q: &Quiver, init: &[Rat], n_max: usize) -> Vec<Vec<Rat>> {
    let m = q.n_vertices();
    let arrows = |i: usize, j: usize| q.b.get(i, j).max(0) as u32;
    let mut cols = vec![init.to_vec()];
    for _ in 0..n_max {
        let prev = cols.last().unwrap().clone();
        let mut next: Vec<Option<Rat>> = vec![None; m];
        while next.iter().any(Option::is_none) {
            for k in 0..m {
                if next[k].is_some() || (0..m).any(|i| arrows(k, i) > 0 && next[i].is_none()) {
                    continue;
                }
                let mut prod = Rat::one();
                for i in 0..m {
                    prod *= prev[i].pow(arrows(i, k) as i32);
                    if arrows(k, i) > 0 {
                        prod *= next[i].as_ref().unwrap().pow(arrows(k, i) as i32);
                    }
                }
                next[k] = Some((Rat::one() + prod) / &prev[k]);
            }
        }
        cols.push(next.into_iter().map(Option::unwrap).collect());
    }
    cols
}

fn ones(n: usize) -> Vec<Rat> {
    vec![Rat::one(); n]
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(|r| r.to_string()).collect()
}

#[test]
fn e6_units_first_column() {
    let q = build_affine_quiver(Family::E6).unwrap();
    let t = FriezeTable::units(&q, 1).unwrap();
    let at = |l: &str| t.column(1)[q.vertex(l).unwrap()].clone();
    assert_eq!(at("a"), rat(2, 1));
    assert_eq!(at("c"), rat(2, 1));
    assert_eq!(at("b"), rat(5, 1));
    assert_eq!(t.columns(), oracle(&q, &ones(7), 1).as_slice());
}

#[test]
fn d4_units_first_column() {
    let q = build_affine_quiver(Family::D { n: 4 }).unwrap();
    let t = FriezeTable::units(&q, 2).unwrap();
    assert_eq!(strs(t.column(1)), ["3", "3", "2", "3", "3"]);
    assert_eq!(t.columns(), oracle(&q, &ones(5), 2).as_slice());
}

#[test]
fn tables_match_the_oracle() {
    let mut fams: Vec<Family> = (4..=9).map(|n| Family::D { n }).collect();
    fams.extend([Family::E6, Family::E7, Family::E8, Family::A { p: 2, q: 3 }]);
    for (s, f) in fams.into_iter().enumerate() {
        let q = build_affine_quiver(f).unwrap();
        let init = draw_seed_values(q.n_vertices(), s as u64).values;
        let t = FriezeTable::specialized(&q, init.clone(), 12).unwrap();
        assert_eq!(t.columns(), oracle(&q, &init, 12).as_slice(), "{f}");
    }
}

#[test]
fn zero_depth_is_the_initial_column() {
    let q = build_affine_quiver(Family::E7).unwrap();
    let init = draw_seed_values(8, 3).values;
    let t = FriezeTable::specialized(&q, init.clone(), 0).unwrap();
    assert_eq!(t.depth(), 1);
    assert_eq!(t.column(0), init.as_slice());
}

#[test]
fn a_type_sequences() {
    let s = a_type_sequence(1, 2, ones(3), 9).unwrap();
    assert_eq!(strs(&s.values), ["1", "1", "1", "2", "3", "7", "11", "26", "41"]);
    let s = a_type_sequence(1, 1, ones(2), 6).unwrap();
    assert_eq!(strs(&s.values), ["1", "1", "2", "5", "13", "34"]);
}

#[test]
fn first_symbolic_term_of_the_sequence() {
    for (p, q) in [(1, 1), (1, 2), (2, 3), (1, 4)] {
        let names: Vec<String> = (0..p + q).map(|i| format!("x{i}")).collect();
        let v = LaurentPoly::variables(&names);
        let s = a_type_sequence(p, q, v.clone(), p + q + 1).unwrap();
        let want = v[p].try_mul(&v[q]).unwrap().try_add(&v[0].one_like()).unwrap().exact_div(&v[0]).unwrap();
        assert_eq!(s.values[p + q], want);
    }
}

#[test]
fn affine_a_frieze_interleaves_the_sequence() {
    for (p, q) in [(1, 1), (1, 2), (2, 3), (1, 5)] {
        let quiver = build_affine_quiver(Family::A { p, q }).unwrap();
        let m = p + q;
        let init = draw_seed_values(m, 11).values;
        let t = FriezeTable::specialized(&quiver, init.clone(), 6).unwrap();
        let s = a_type_sequence(p, q, init, 7 * m).unwrap();
        for n in 0..=6 {
            assert_eq!(t.column(n), &s.values[n * m..(n + 1) * m], "A({p},{q}) n={n}");
        }
    }
}

#[test]
fn e8_units_stay_positive() {
    let q = build_affine_quiver(Family::E8).unwrap();
    let t = FriezeTable::units(&q, 70).unwrap();
    assert_eq!(t.depth(), 71);
    assert!(t.columns().iter().flatten().all(|v| v.is_positive() && v.is_integer()));
}

#[test]
fn d5_units_j() {
    let q = build_affine_quiver(Family::D { n: 5 }).unwrap();
    let cols = oracle(&q, &ones(6), 3);
    // J_1 = (X1_2 + X1_0)/X2_1 straight from the oracle columns.
    let want = (&cols[2][0] + &cols[0][0]) / &cols[1][1];
    let t = FriezeTable::units(&q, 3).unwrap();
    let j = &catalog(Family::D { n: 5 }).unwrap().quantities[0];
    assert_eq!(j.expr.eval(&t, 1).unwrap(), want);
    assert_eq!(want, rat(5, 1));
}

#[test]
fn a12_units_jtilde() {
    let s = a_type_sequence(1, 2, ones(3), 10).unwrap();
    let jt = (x(0, 2) + x(0, 0)) / x(0, 1);
    assert_eq!(jt.eval(&s, 0).unwrap(), rat(2, 1));
}

#[test]
fn laurent_phenomenon_to_depth_six() {
    for f in [Family::D { n: 4 }, Family::D { n: 5 }, Family::E6] {
        let q = build_affine_quiver(f).unwrap();
        let t = FriezeTable::symbolic(&q, 6, DEFAULT_TERM_BUDGET).unwrap();
        assert_eq!(t.depth(), 7);
        assert!(t.positive(), "{f}");
    }
}

#[test]
fn symbolic_budget_is_enforced() {
    let q = build_affine_quiver(Family::E6).unwrap();
    let r = FriezeTable::symbolic(&q, 8, 1000);
    assert!(matches!(r, Err(affine_frieze::Error::SymbolicBudgetExceeded { .. })));
}

#[test]
fn symbolic_and_specialized_agree() {
    let q = build_affine_quiver(Family::D { n: 5 }).unwrap();
    let sym = FriezeTable::symbolic(&q, 4, DEFAULT_TERM_BUDGET).unwrap();
    for seed in 0..5 {
        let pt = draw_seed_values(6, seed).values;
        let num = FriezeTable::specialized(&q, pt.clone(), 4).unwrap();
        assert_eq!(sym.specialize(&pt).unwrap().columns(), num.columns());
    }
}

#[test]
fn jacobian_matches_symbolic_partials() {
    let q = build_affine_quiver(Family::D { n: 4 }).unwrap();
    let sym = FriezeTable::symbolic(&q, 1, DEFAULT_TERM_BUDGET).unwrap();
    let pt = draw_seed_values(5, 42).values;
    let jac = jacobian_of_step(&q, &pt).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            assert_eq!(jac[i][j], sym.column(1)[i].partial(j).eval(&pt).unwrap(), "d X{}_1 / d X{}_0", i + 1, j + 1);
        }
    }
}

#[test]
fn presymplectic_form_is_preserved() {
    for f in [Family::D { n: 4 }, Family::E6] {
        let q = build_affine_quiver(f).unwrap();
        for seed in 0..10 {
            assert!(presymplectic_check(&q, &draw_seed_values(q.n_vertices(), seed).values).unwrap(), "{f} seed {seed}");
        }
    }
}

#[test]
fn seed_draws_are_reproducible() {
    let a = draw_seed_values(9, 123).values;
    assert_eq!(a, draw_seed_values(9, 123).values);
    assert_ne!(a, draw_seed_values(9, 124).values);
    for v in &a {
        assert!(v.is_positive());
        assert!(*v.numer() <= 50.into() && *v.denom() <= 50.into());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Every column satisfies the frieze relation against its predecessor,
    /// checked by multiplying out.
    #[test]
    fn columns_satisfy_the_exchange_relation(seed in any::<u64>(), n in 4usize..=8) {
        let q = build_affine_quiver(Family::D { n }).unwrap();
        let t = FriezeTable::specialized(&q, draw_seed_values(q.n_vertices(), seed).values, 6).unwrap();
        let m = q.n_vertices();
        for c in 0..6 {
            for k in 0..m {
                let mut rhs = Rat::one();
                for i in 0..m {
                    let b = q.b.get(i, k);
                    if b > 0 {
                        rhs *= t.column(c)[i].pow(b as i32);
                    } else if b < 0 {
                        rhs *= t.column(c + 1)[i].pow(-b as i32);
                    }
                }
                prop_assert_eq!(&t.column(c + 1)[k] * &t.column(c)[k], Rat::one() + rhs);
            }
        }
        prop_assert!(!t.column(6).iter().any(Zero::is_zero));
    }
}

#[test]
fn partial_symbolic_table_stops_cleanly() {
    let q = build_affine_quiver(Family::E8).unwrap();
    let (t, stop) = FriezeTable::symbolic_within(&q, 8, DEFAULT_TERM_BUDGET).unwrap();
    assert!(matches!(stop, Some(affine_frieze::Error::SymbolicBudgetExceeded { .. })));
    assert!(t.depth() >= 4 && t.depth() <= 8);
    let q = build_affine_quiver(Family::D { n: 4 }).unwrap();
    let (t, stop) = FriezeTable::symbolic_within(&q, 5, DEFAULT_TERM_BUDGET).unwrap();
    assert!(stop.is_none());
    assert_eq!(t.depth(), 6);
}

#[test]
fn table_around_the_initial_cluster() {
    let q = build_affine_quiver(Family::D { n: 5 }).unwrap();
    let (t, seed, stop) = FriezeTable::symbolic_around(&q, 3, 2, DEFAULT_TERM_BUDGET).unwrap();
    assert!(stop.is_none());
    assert_eq!((seed, t.depth()), (3, 6));
    assert_eq!(t.column(seed), LaurentPoly::variables(&q.labels).as_slice());
    // At any point the columns before the seed step forward into it.
    let y = draw_seed_values(q.n_vertices(), 9).values;
    let s = t.specialize(&y).unwrap();
    assert_eq!(s.column(seed), y.as_slice());
    let rebuilt = FriezeTable::specialized(&q, s.column(0).to_vec(), 5).unwrap();
    assert_eq!(rebuilt.columns(), s.columns());
    assert!(t.positive());
}
