//! The reduced map for D5: reduced coordinates, the Poisson matrix C and
//! the explicit map agreeing with lift, frieze step and project.

use affine_frieze::exact::rat;
use affine_frieze::reduction::{build_reduction, explicit_step};
use affine_frieze::{build_affine_quiver, Family};

fn main() -> affine_frieze::Result<()> {
    let rs = build_reduction(&build_affine_quiver(Family::D { n: 5 })?)?;
    println!("rank {} of {} vertices, reduced coordinates {:?}", rs.rank, rs.quiver.n_vertices(), rs.labels);
    for row in &rs.c {
        let r: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
        println!("  C: {}", r.join(""));
    }
    let y = vec![rat(2, 1), rat(1, 3), rat(5, 2), rat(3, 7)];
    let generic = rs.generic_step(&y)?;
    let explicit = explicit_step(rs.family, &y).expect("D5 has an explicit map")?;
    assert_eq!(generic, explicit);
    let shown: Vec<String> = explicit.iter().map(|v| v.to_string()).collect();
    println!("phi-hat(y) = ({})", shown.join(", "));
    Ok(())
}
