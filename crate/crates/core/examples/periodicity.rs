//! Checks the periodic quantities of E7 on random rational friezes, and
//! shows a wrong period being caught with a witness.

use affine_frieze::frieze::draw_seed_values;
use affine_frieze::relations::{catalog, check_period, Ctx, Period, Sample};
use affine_frieze::{build_affine_quiver, Family, FriezeTable, Mode};

fn main() -> affine_frieze::Result<()> {
    let q = build_affine_quiver(Family::E7)?;
    let samples = (0..5)
        .map(|s| {
            let init = draw_seed_values(q.n_vertices(), s).values;
            Ok(Sample { seed: Some(s), grid: FriezeTable::specialized(&q, init, 60)? })
        })
        .collect::<affine_frieze::Result<Vec<_>>>()?;
    let ctx = Ctx { family: "E7".into(), mode: Mode::Specialized, span: 20 };
    let cat = catalog(Family::E7).expect("E7 has a catalog");
    for def in &cat.quantities {
        let r = check_period(def, &ctx, &samples);
        println!("{:<8} {:<18} {}", r.verdict.as_str(), r.id, r.citation);
    }

    let mut wrong = cat.quantities[0].clone();
    wrong.period = Period::Proven(3);
    let r = check_period(&wrong, &ctx, &samples);
    println!("claiming period 3 for J: {} at {:?}", r.verdict.as_str(), r.witness);
    Ok(())
}
