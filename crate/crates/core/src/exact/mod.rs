//! Exact arithmetic: big rationals, sparse Laurent polynomials, forward-mode
//! dual numbers and the small amount of exact linear algebra the rest of the
//! crate needs.
//!
//! Everything that flows through a frieze table implements [`Scalar`], so the
//! same recurrence code runs on specialized values, symbolic Laurent
//! polynomials and dual numbers carrying a gradient.

mod dual;
mod frac;
mod laurent;
pub mod matrix;
mod packed;
mod rat;
mod scalar;

pub use dual::DualRat;
pub use frac::LaurentFrac;
pub use laurent::{LaurentPoly, Monomial};
pub use rat::{parse_rat, rat, rat_to_string, Rat};
pub use scalar::Scalar;
