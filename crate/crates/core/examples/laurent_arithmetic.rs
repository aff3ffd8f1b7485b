//! Exact Laurent polynomial arithmetic: products, exact quotients and the
//! error raised when a quotient is not a Laurent polynomial.

use affine_frieze::exact::LaurentPoly;
use affine_frieze::Error;

fn main() -> affine_frieze::Result<()> {
    let v = LaurentPoly::variables(&["x", "y"]);
    let (x, y) = (&v[0], &v[1]);
    let s = x.try_add(y)?;
    let sq = s.try_mul(&s)?;
    println!("(x + y)^2 = {sq}");
    println!("(x + y)^2 / (x + y) = {}", sq.exact_div(&s)?);

    // Dividing by a monomial is always exact.
    let one = LaurentPoly::constant(x.vars().clone(), 1);
    let q = one.try_add(&y.try_mul(y)?)?.exact_div(x)?;
    println!("(1 + y^2)/x = {q}");
    println!("d/dx of that = {}", q.partial(0));

    match x.exact_div(&s) {
        Err(Error::DivisionNotExact) => println!("x / (x + y) is not a Laurent polynomial"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
