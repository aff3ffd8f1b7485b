//! E8 at the extending vertex: X_(n+60) - K X_(n+30) + X_n = 0 with K the
//! trace of the monodromy, which does not depend on n.

use affine_frieze::frieze::draw_seed_values;
use affine_frieze::relations::{catalog, trace_invariant, x};
use affine_frieze::{build_affine_quiver, Family, FriezeTable};

fn main() -> affine_frieze::Result<()> {
    let q = build_affine_quiver(Family::E8)?;
    let cat = catalog(Family::E8).expect("E8 has a catalog");
    let b = cat.psi.b as i64;
    let v = cat.linear_vertices[0];
    let t = FriezeTable::specialized(&q, draw_seed_values(q.n_vertices(), 7).values, 140)?;
    for n in 0..4 {
        let (k, det) = trace_invariant(&cat.psi, &t, n)?;
        let lhs = x(v, 2 * b).eval(&t, n)? - k.clone() * x(v, b).eval(&t, n)? + x(v, 0).eval(&t, n)?;
        println!("n={n}: det = {det}, K has {} digits, relation gives {lhs}", k.to_string().len());
    }
    Ok(())
}
