//! Log-canonical brackets: the E6 relations between the reduced J's, and a
//! symbolic bracket of two monomials.

use affine_frieze::exact::{rat, LaurentPoly};
use affine_frieze::reduction::{bracket_relations, build_reduction, poisson_bracket, poisson_bracket_poly};
use affine_frieze::{build_affine_quiver, Family};

fn main() -> affine_frieze::Result<()> {
    let rs = build_reduction(&build_affine_quiver(Family::E6)?)?;
    let y: Vec<_> = (1..=6).map(|k| rat(k, 7 - k)).collect();
    for rel in bracket_relations(Family::E6) {
        let got = poisson_bracket(&rs, &rel.f, &rel.g, &y)?;
        println!("{:<20} {}  value {got}", rel.id, rel.citation);
    }

    let c = vec![vec![0, 1], vec![-1, 0]];
    let v = LaurentPoly::variables(&["u", "v"]);
    let f = v[0].try_mul(&v[1])?.try_add(&v[0])?;
    println!("{{uv + u, v}} = {}", poisson_bracket_poly(&c, &f, &v[1]));
    Ok(())
}
