//! A symbolic D4 frieze: every entry is a Laurent polynomial with positive
//! coefficients, and evaluating it agrees with the numeric frieze.

use affine_frieze::exact::rat;
use affine_frieze::frieze::DEFAULT_TERM_BUDGET;
use affine_frieze::{build_affine_quiver, Family, FriezeTable};

fn main() -> affine_frieze::Result<()> {
    let q = build_affine_quiver(Family::D { n: 4 })?;
    let t = FriezeTable::symbolic(&q, 6, DEFAULT_TERM_BUDGET)?;
    println!("X1 at n=2: {}", t.column(2)[0]);
    println!("{} terms in total, all coefficients positive: {}", t.total_terms(), t.positive());

    let point = vec![rat(2, 3), rat(5, 1), rat(1, 7), rat(3, 2), rat(4, 9)];
    let numeric = FriezeTable::specialized(&q, point.clone(), 6)?;
    assert_eq!(t.specialize(&point)?.columns(), numeric.columns());
    println!("specialization matches the numeric table");

    // Growing both ways keeps entries small: nothing is far from the seed.
    let (around, seed, _) = FriezeTable::symbolic_around(&q, 3, 3, DEFAULT_TERM_BUDGET)?;
    println!("X1 three steps before the seed: {}", around.column(seed - 3)[0]);
    Ok(())
}
