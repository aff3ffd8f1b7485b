//! Recomputes the b, period and A-type recurrence tables.

use affine_frieze::report::{emit_tables, Format};

fn main() -> affine_frieze::Result<()> {
    print!("{}", emit_tables(Format::Text)?);
    Ok(())
}
