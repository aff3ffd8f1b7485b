//! The integrability battery for the E7 reduced map: invariance,
//! involution, symplecticity and independence of the first integrals.

use affine_frieze::reduction::{build_reduction, first_integrals, integrability_battery};
use affine_frieze::{build_affine_quiver, Family};

fn main() -> affine_frieze::Result<()> {
    let rs = build_reduction(&build_affine_quiver(Family::E7)?)?;
    let names: Vec<String> = first_integrals(Family::E7).into_iter().map(|(n, _)| n).collect();
    println!("first integrals: {}", names.join(", "));
    let seeds: Vec<u64> = (0..10).collect();
    for r in integrability_battery(&rs, &seeds) {
        println!("{:<8} {:<26} {}", r.verdict.as_str(), r.id, r.flags.join("; "));
    }
    Ok(())
}
