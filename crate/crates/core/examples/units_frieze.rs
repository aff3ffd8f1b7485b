//! The frieze with every initial value 1 is integral: the first columns
//! for D4 and E6.

use affine_frieze::{build_affine_quiver, Family, FriezeTable};

fn main() -> affine_frieze::Result<()> {
    for family in [Family::D { n: 4 }, Family::E6] {
        let q = build_affine_quiver(family)?;
        let t = FriezeTable::units(&q, 4)?;
        println!("{family}: {}", q.labels.join(" "));
        for (n, col) in t.columns().iter().enumerate() {
            let vals: Vec<String> = col.iter().map(|v| v.to_string()).collect();
            println!("  n={n}: {}", vals.join(" "));
        }
    }
    Ok(())
}
