//! A programmatic verification run for A(2,3) written as CSV, the same
//! report `frieze verify --family A --p 2 --q 3 --format csv` prints.

use affine_frieze::report::{render, run_checks, Format, RunConfig};
use affine_frieze::Family;

fn main() -> affine_frieze::Result<()> {
    let mut cfg = RunConfig::new(Family::A { p: 2, q: 3 })?;
    cfg.seeds = 5;
    let out = run_checks(&cfg)?;
    print!("{}", render(&out.reports, Format::Csv)?);
    Ok(())
}
