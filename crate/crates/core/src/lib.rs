//! Exact verification of frieze dynamics on affine ADE quivers.
//!
//! The crate builds frieze tables (the sink-first mutation sequence of an
//! acyclic quiver) over exact rationals, Laurent polynomials or dual numbers,
//! checks periodic quantities and linear relations on them, and performs the
//! symplectic reduction with its Poisson-bracket and integrability checks.
//!
//! ```
//! use affine_frieze::{build_affine_quiver, Family, FriezeTable};
//!
//! let q = build_affine_quiver(Family::D { n: 4 }).unwrap();
//! let t = FriezeTable::units(&q, 1).unwrap();
//! let col: Vec<String> = t.column(1).iter().map(|v| v.to_string()).collect();
//! assert_eq!(col, ["3", "3", "2", "3", "3"]);
//! ```
//!
//! Each capability has a runnable program under `examples/`.

pub mod error;
pub mod exact;
pub mod frieze;
pub mod quiver;
pub mod reduction;
pub mod relations;
pub mod report;

pub use error::{Error, Result};
pub use exact::{LaurentPoly, Rat, Scalar};
pub use frieze::{FriezeTable, Grid, Mode};
pub use quiver::{build_affine_quiver, Family, Quiver};
