//! Periodic quantities, linear relations and the checkers that verify them.
//!
//! Definitions live in [`registry`] as [`Expr`] data; the checkers in
//! [`checks`] evaluate them on any [`Grid`](crate::frieze::Grid), so one
//! code path serves specialized, symbolic and dual-number tables.

pub mod checks;
pub mod expr;
pub mod registry;

use serde::Serialize;

use crate::exact::matrix::{det2, Matrix};
use crate::exact::Scalar;
use crate::frieze::Mode;

pub use checks::{
    check_atype_recurrence, check_auxiliary_identities, check_constant_linear_relation,
    check_identity, check_kernel, check_period, check_trace, check_windows, probe_conjecture, probe_report_id,
    trace_invariant,
    Ctx, Sample,
};
pub use expr::{int, x, Expr};
pub use registry::{b_value, catalog, Catalog, IdentityDef, Period, Probe, PsiSystem, QuantityDef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    /// A conjecture probe found no counterexample. Not a proof.
    Evidence,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Evidence => "EVIDENCE",
        }
    }
}

/// Where a check failed: rerunning the same seed and looking at time `n`
/// reproduces the counterexample. `seed` is absent for symbolic runs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub seed: Option<u64>,
    pub n: i64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub family: String,
    pub mode: Mode,
    pub trials: usize,
    pub n_window: [i64; 2],
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub citation: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub flags: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        matches!(self.verdict, Verdict::Pass | Verdict::Evidence)
    }
}

/// `det(m) · m₁₁ = δ₀₀ δ₁₁ − δ₀₁ δ₁₀`, where `δ_ij` is the connected 2×2
/// minor with top-left corner at `(i, j)`.
pub fn dodgson_check<V: Scalar>(m: &Matrix<V>) -> bool {
    let minor = |i: usize, j: usize| {
        det2(&vec![
            vec![m[i][j].clone(), m[i][j + 1].clone()],
            vec![m[i + 1][j].clone(), m[i + 1][j + 1].clone()],
        ])
    };
    let lhs = crate::exact::matrix::det3(m).times(&m[1][1]);
    let rhs = minor(0, 0).times(&minor(1, 1)).minus(&minor(0, 1).times(&minor(1, 0)));
    lhs.same(&rhs)
}

/// `(1, −α, 1)ᵀ` annihilates every row.
pub fn kernel_vector_check<V: Scalar>(rows: &[[V; 3]], alpha: &V) -> bool {
    rows.iter()
        .all(|r| r[0].minus(&alpha.times(&r[1])).plus(&r[2]).is_zero())
}
