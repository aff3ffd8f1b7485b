//! Every periodic quantity, identity and matrix construction, per family.
//!
//! Vertex indices are 0-based in the order of the quiver labels
//! (`a, b, c, ...` for the E-types, `X1..X{N+1}` for D̃). Ã quantities read
//! a single sequence stored as vertex 0.

use super::expr::{int, x, Expr};
use crate::quiver::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Period {
    Proven(usize),
    /// Conjectural: listed with a question mark in the tables.
    Conjectured(usize),
}

impl Period {
    pub fn value(self) -> usize {
        match self {
            Period::Proven(p) | Period::Conjectured(p) => p,
        }
    }
}

#[derive(Clone, Debug)]
pub struct QuantityDef {
    pub id: String,
    pub name: &'static str,
    pub expr: Expr,
    pub period: Period,
    pub citation: String,
    pub flags: Vec<String>,
}

/// `lhs = rhs` for every `n`.
#[derive(Clone, Debug)]
pub struct IdentityDef {
    pub id: String,
    pub lhs: Expr,
    pub rhs: Expr,
    pub citation: String,
}

/// `γ_n := X_{n+a+p} X_n - X_{n+a} X_{n+p}` (possibly twisted) has period
/// `gamma_period`.
#[derive(Clone, Debug)]
pub struct AtypeDef {
    pub id: String,
    pub vertex: usize,
    pub a: usize,
    pub p: usize,
    pub gamma: Expr,
    pub gamma_period: usize,
    pub conjectural: bool,
    pub citation: String,
}

/// Rows annihilated by `(1, -α, 1)ᵀ`.
#[derive(Clone, Debug)]
pub struct KernelDef {
    pub id: String,
    pub rows: Vec<[Expr; 3]>,
    pub alpha: Expr,
    pub citation: String,
}

/// `Ψ_n · ∏ L̃_{n+k} (k in psi_factors) = Ψ_{n+psi_shift}` and the trace
/// `𝒦 = tr ∏ L̃_{n+k} (k in trace_factors)`; the linear relation then reads
/// `X_{n+2b} - 𝒦 X_{n+b} + X_n = 0` at each extending vertex.
#[derive(Clone, Debug)]
pub struct PsiSystem {
    pub psi: [[Expr; 2]; 2],
    pub ltilde: [[Expr; 2]; 2],
    pub psi_factors: Vec<i64>,
    pub psi_shift: i64,
    pub trace_factors: Vec<i64>,
    pub b: usize,
    /// Closed form the trace must equal, where one is known.
    pub cross: Option<Expr>,
    pub citation: String,
}

#[derive(Clone, Debug)]
pub enum Probe {
    Period(QuantityDef),
    Identity(IdentityDef),
    Atype(AtypeDef),
}

impl Probe {
    pub fn id(&self) -> &str {
        match self {
            Probe::Period(q) => &q.id,
            Probe::Identity(i) => &i.id,
            Probe::Atype(a) => &a.id,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub family: Family,
    pub quantities: Vec<QuantityDef>,
    pub identities: Vec<IdentityDef>,
    pub psi: PsiSystem,
    /// Vertices carrying the constant-coefficient linear relation.
    pub linear_vertices: Vec<usize>,
    pub atype: Vec<AtypeDef>,
    pub kernels: Vec<KernelDef>,
    pub probes: Vec<Probe>,
}

/// Value of b (the period of the constant-coefficient relation).
pub fn b_value(family: Family) -> Option<usize> {
    match family {
        Family::A { p, q } => Some(num_integer::lcm(p, q)),
        Family::D { n } if n % 2 == 0 => Some(n - 2),
        Family::D { n } => Some(2 * n - 4),
        Family::E6 => Some(6),
        Family::E7 => Some(12),
        Family::E8 => Some(30),
        Family::Custom => None,
    }
}

fn l_tilde(j: Expr) -> [[Expr; 2]; 2] {
    [[j, int(1)], [int(-1), int(0)]]
}

fn gamma(v: usize, a: i64, p: i64) -> Expr {
    x(v, a + p) * x(v, 0) - x(v, a) * x(v, p)
}

fn quantity(fam: &str, name: &'static str, expr: Expr, period: Period, citation: &str) -> QuantityDef {
    QuantityDef {
        id: format!("{fam}.{name}"),
        name,
        expr,
        period,
        citation: citation.into(),
        flags: Vec::new(),
    }
}

fn identity(id: &str, lhs: Expr, rhs: Expr, citation: &str) -> IdentityDef {
    IdentityDef {
        id: id.into(),
        lhs,
        rhs,
        citation: citation.into(),
    }
}

fn atype(id: &str, vertex: usize, a: usize, p: usize, g: Expr, period: usize, conj: bool, citation: &str) -> AtypeDef {
    AtypeDef {
        id: id.into(),
        vertex,
        a,
        p,
        gamma: g,
        gamma_period: period,
        conjectural: conj,
        citation: citation.into(),
    }
}

/// The full registry for a family; `None` for custom quivers.
pub fn catalog(family: Family) -> Option<Catalog> {
    match family {
        Family::A { p, q } => Some(a_catalog(p, q)),
        Family::D { n } => Some(d_catalog(n)),
        Family::E6 => Some(e6_catalog()),
        Family::E7 => Some(e7_catalog()),
        Family::E8 => Some(e8_catalog()),
        Family::Custom => None,
    }
}

fn a_catalog(p: usize, q: usize) -> Catalog {
    let fam = Family::A { p, q };
    let (pi, qi) = (p as i64, q as i64);
    let s = |o: i64| x(0, o);
    let j = (s(2 * qi) + s(0)) / s(qi);
    let jt = (s(2 * pi) + s(0)) / s(pi);
    let b = b_value(fam).unwrap();
    let factors: Vec<i64> = (0..(b / q) as i64).map(|k| k * qi).collect();
    Catalog {
        family: fam,
        quantities: vec![
            quantity("A", "J", j.clone(), Period::Proven(p), &format!("A({p},{q}): J_n = (x_(n+2q) + x_n)/x_(n+q) has period p")),
            quantity("A", "Jtilde", jt.clone(), Period::Proven(q), &format!("A({p},{q}): J~_n = (x_(n+2p) + x_n)/x_(n+p) has period q")),
        ],
        identities: vec![
            identity("A.J.relation", s(2 * qi) - j.clone() * s(qi) + s(0), int(0), "A: x_(n+2q) - J_n x_(n+q) + x_n = 0"),
            identity("A.Jtilde.relation", s(2 * pi) - jt * s(pi) + s(0), int(0), "A: x_(n+2p) - J~_n x_(n+p) + x_n = 0"),
        ],
        psi: PsiSystem {
            psi: [[s(qi), s(0)], [s(pi + qi), s(pi)]],
            ltilde: l_tilde(j),
            psi_factors: vec![0],
            psi_shift: qi,
            trace_factors: factors,
            b,
            cross: None,
            citation: "A: Psi_n L_n = Psi_(n+q), L_n = [[J_n,1],[-1,0]], K = tr(L_n L_(n+q) ...)".into(),
        },
        linear_vertices: vec![0],
        atype: Vec::new(),
        kernels: Vec::new(),
        probes: Vec::new(),
    }
}

fn d_catalog(n: usize) -> Catalog {
    let fam = Family::D { n };
    let ni = n as i64;
    // X^k at offset o, k 1-based.
    let xx = |k: usize, o: i64| x(k - 1, o);
    let j = (xx(1, 1) + xx(1, -1)) / xx(2, 0);
    let t = |o: i64| if n == 4 { xx(4, o) * xx(5, o) } else { xx(4, o) };
    let j_fwd = (xx(1, 1) * xx(2, 1) + t(0)) / xx(3, 1);
    let j_bwd = (xx(1, -1) * xx(2, -1) + t(0)) / xx(3, 0);
    let b = b_value(fam).unwrap();
    let odd = n % 2 == 1;

    let quantities = vec![
        quantity("D", "J", j.clone(), Period::Proven(n - 2), &format!("D{n}: J_n = (X1_(n+1) + X1_(n-1))/X2_n has period N-2")),
        quantity("D", "ratio12", xx(1, 0) / xx(2, 0), Period::Proven(2), "D: X1_n/X2_n has period 2"),
        quantity("D", "ratioN", xx(n + 1, 0) / xx(n, 0), Period::Proven(2), "D: X(N+1)_n/XN_n has period 2"),
    ];

    let identities = vec![
        identity("D.J.forward", j.clone(), j_fwd.clone(), "D: J_n = (X1_(n+1) X2_(n+1) + X4_n)/X3_(n+1)"),
        identity("D.J.backward", j.clone(), j_bwd, "D: J_n = (X1_(n-1) X2_(n-1) + X4_n)/X3_n"),
    ];

    let mut atypes = Vec::new();
    let ext = [(1, 2), (2, 1), (n, n + 1), (n + 1, n)];
    for (k, other) in ext {
        let a_p = if odd { 2 * n - 4 } else { n - 2 };
        atypes.push(atype(
            &format!("atype.X{k}"),
            k - 1,
            1,
            a_p,
            gamma(k - 1, 1, a_p as i64),
            1,
            false,
            &format!("D{n}: X{k}_(n+1+p) X{k}_n - X{k}_(n+1) X{k}_(n+p) is invariant, p = {a_p}"),
        ));
        if odd {
            // λ_(n+1) = X^other_(n+1) / X^k_(n+1)
            let lam = xx(other, 1) / xx(k, 1);
            let g = xx(k, ni - 1) * xx(k, 0) - xx(k, ni - 2) * xx(k, 1) * lam.clone() * lam;
            atypes.push(atype(
                &format!("atype.lambda.X{k}"),
                k - 1,
                1,
                n - 2,
                g,
                2,
                false,
                &format!("D{n} odd: X{k}_(n+N-1) X{k}_n - X{k}_(n+N-2) X{k}_(n+1) lambda_(n+1)^2 has period 2"),
            ));
        }
    }

    let mut rows = vec![
        [t(0), xx(3, 0), xx(1, -1) * xx(2, -1)],
        [xx(1, 1), xx(2, 0), xx(1, -1)],
        [xx(1, 1) * xx(2, 1), xx(3, 1), t(0)],
    ];
    match n {
        4 => {}
        5 => rows.push([xx(3, 2), xx(4, 1), xx(5, 1) * xx(6, 1)]),
        6 => {
            rows.push([xx(3, 2), xx(4, 1), xx(5, 1)]);
            rows.push([xx(4, 2), xx(5, 2), xx(6, 1) * xx(7, 1)]);
        }
        _ => {
            rows.push([xx(3, 2), xx(4, 1), xx(5, 1)]);
            rows.push([xx(4, 2), xx(5, 2), xx(6, 1)]);
        }
    }

    let psi = PsiSystem {
        psi: [[xx(1, 0), xx(2, 1)], [xx(1, ni - 2), xx(2, ni - 1)]],
        ltilde: [[int(0), int(-1)], [int(1), j.shifted(1)]],
        psi_factors: vec![0, 1],
        psi_shift: 2,
        trace_factors: (0..b as i64).collect(),
        b,
        cross: None,
        citation: format!("D{n}: Psi_n L~_n L~_(n+1) = Psi_(n+2), K = tr(L~_n ... L~_(n+{}))", b - 1),
    };

    Catalog {
        family: fam,
        quantities,
        identities,
        psi,
        linear_vertices: vec![0, 1, n - 1, n],
        atype: atypes,
        kernels: vec![KernelDef {
            id: "kernel.J".into(),
            rows,
            alpha: j_fwd,
            citation: "D: (1, -J_n, 1) spans the kernel of the condensation matrix".into(),
        }],
        probes: Vec::new(),
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;
const D: usize = 3;
const E: usize = 4;
const F: usize = 5;
const G: usize = 6;
const H: usize = 7;
const I: usize = 8;

fn e6_catalog() -> Catalog {
    let j = (x(A, 0) + x(G, 4)) / x(E, 2);
    let jt = (x(A, 0) + x(G, -4)) / x(E, -2);
    let k = |v: usize| (x(v, -3) + x(v, 3)) / x(v, 0);
    let kk = k(A) * k(A).shifted(1);
    let mut identities = vec![
        identity("E6.J.def", j.clone(), (x(F, 1) + x(E, 3) * x(G, 4)) / x(D, 2), "E6: J_n = (f_(n+1) + e_(n+3) g_(n+4))/d_(n+2) = (a_n + g_(n+4))/e_(n+2)"),
        identity("E6.Jtilde.def", jt.clone(), (x(F, -2) + x(E, -3) * x(G, -4)) / x(D, -3), "E6: J~_n = (f_(n-2) + e_(n-3) g_(n-4))/d_(n-3) = (a_n + g_(n-4))/e_(n-2)"),
        identity("E6.J.kernel", x(F, 1) - x(A, 0) * x(E, 3) + j.clone(), int(0), "E6: f_(n+1) - a_n e_(n+3) + J_n = 0"),
        identity("E6.Jtilde.kernel", jt.clone() - x(A, 0) * x(E, -3) + x(F, -2), int(0), "E6: J~_n - a_n e_(n-3) + f_(n-2) = 0"),
        identity("E6.K.e", k(A), k(E), "E6: (a_(n-3) + a_(n+3))/a_n = (e_(n-3) + e_(n+3))/e_n"),
        identity("E6.K.g", k(A), k(G), "E6: (a_(n-3) + a_(n+3))/a_n = (g_(n-3) + g_(n+3))/g_n"),
    ];
    for (v, name) in [(B, "b"), (D, "d"), (F, "f")] {
        let coeff = kk.clone() - 1;
        identities.push(identity(
            &format!("E6.cubic.{name}"),
            x(v, 0) - coeff.clone() * x(v, 3) + coeff * x(v, 6) - x(v, 9),
            int(0),
            &format!("E6: {name}_n - (K+1) {name}_(n+3) + (K+1) {name}_(n+6) - {name}_(n+9) = 0 with K+1 = K_n K_(n+1) - 1"),
        ));
    }
    let rows = vec![
        [jt.clone(), x(E, -3), x(F, -2)],
        [x(G, -4) / x(F, -2), x(D, -3) / x(F, -2), x(E, -2)],
        [x(B, -3), x(C, -2), x(D, -2) * x(F, -2)],
        [x(A, -2), x(B, -2), x(C, -1)],
        [int(1), x(A, -1), x(B, -1)],
        [x(A, 0), int(1), int(0)],
        [x(B, 0), x(A, 1), int(1)],
        [x(C, 1), x(B, 1), x(A, 2)],
        [x(D, 1) * x(F, 1), x(C, 2), x(B, 2)],
        [x(E, 2), x(D, 2) / x(F, 1), x(G, 4) / x(F, 1)],
        [x(F, 1), x(E, 3), j.clone()],
    ];
    Catalog {
        family: Family::E6,
        quantities: vec![
            quantity("E6", "J", j.clone(), Period::Proven(3), "E6: J_n = (a_n + g_(n+4))/e_(n+2) has period 3"),
            quantity("E6", "Jtilde", jt, Period::Proven(3), "E6: J~_n = (a_n + g_(n-4))/e_(n-2) has period 3"),
            quantity("E6", "K", k(A), Period::Proven(2), "E6: K_n = (a_(n-3) + a_(n+3))/a_n has period 2"),
        ],
        identities,
        psi: PsiSystem {
            psi: [[x(E, 5), x(A, 3)], [x(E, 2), x(A, 0)]],
            ltilde: l_tilde(j),
            psi_factors: vec![0, 1, 2],
            psi_shift: 6,
            trace_factors: vec![0, 2, 4],
            b: 6,
            cross: Some(kk - 2),
            citation: "E6: K = tr(L~_n L~_(n+2) L~_(n+4)) = K_0 K_1 - 2".into(),
        },
        linear_vertices: vec![A, E, G],
        atype: [(A, "a"), (E, "e"), (G, "g")]
            .into_iter()
            .map(|(v, l)| atype(&format!("atype.{l}"), v, 3, 2, gamma(v, 3, 2), 3, false, &format!("E6: {l}_(n+5) {l}_n - {l}_(n+3) {l}_(n+2) has period 3")))
            .collect(),
        kernels: vec![KernelDef {
            id: "kernel.a".into(),
            rows,
            alpha: x(A, 0),
            citation: "E6: (1, -a_n, 1) annihilates rows -5..5 of the matrix centred at a".into(),
        }],
        probes: Vec::new(),
    }
}

fn e7_catalog() -> Catalog {
    let j = (x(A, 6) + x(A, 0)) / x(H, 3);
    let jt = (x(E, -2) + x(A, -6) * x(H, -4)) / x(G, -4);
    let k = (x(A, 8) + x(A, 0)) / x(A, 4);
    let kt = x(A, 0) * x(H, 7) - x(H, 3) * x(A, 4);
    let mut kt_def = quantity("E7", "Ktilde", kt.clone(), Period::Proven(2), "E7: K~_n = a_n h_(n+7) - h_(n+3) a_(n+4) has period 2");
    kt_def.flags.push("externally unproven".into());
    let mut k_def = quantity("E7", "K", k.clone(), Period::Proven(3), "E7: K_n = (a_(n+8) + a_n)/a_(n+4) has period 3");
    k_def.flags.push("externally unproven".into());
    let identities = vec![
        identity("E7.J.def", j.clone(), (x(E, 2) + x(A, 6) * x(H, 4)) / x(G, 3), "E7: J_n = (e_(n+2) + a_(n+6) h_(n+4))/g_(n+3) = (a_(n+6) + a_n)/h_(n+3)"),
        identity("E7.J.product", j.clone(), x(A, 0) * x(H, 4) - x(E, 2), "E7: J_n = a_n h_(n+4) - e_(n+2)"),
        identity("E7.J.h", j.clone(), (x(H, 8) + x(H, 2)) / x(A, 5), "E7: J_n = (h_(n+8) + h_(n+2))/a_(n+5)"),
        identity("E7.J.Jtilde", j.clone(), jt.shifted(6), "E7: J_n = J~_(n+6)"),
        identity("E7.Jtilde.product", jt.clone(), x(A, 0) * x(H, -4) - x(E, -2), "E7: J~_n = a_n h_(n-4) - e_(n-2)"),
        identity("E7.K.h", k.clone(), (x(H, 8) + x(H, 0)) / x(H, 4), "E7: K_n = (a_(n+8) + a_n)/a_(n+4) = (h_(n+8) + h_n)/h_(n+4)"),
    ];
    let rows = vec![
        [jt.clone() / x(E, -2), x(H, -4) / x(E, -2), int(1)],
        [x(A, -6), x(G, -4), x(E, -2) * x(H, -3)],
        [x(E, -4) / x(E, -2), x(F, -3) / x(E, -2), x(G, -3)],
        [x(C, -3), x(D, -3), x(E, -2) * x(F, -2)],
        [x(B, -3), x(C, -2), x(D, -2)],
        [x(A, -2), x(B, -2), x(C, -1)],
        [int(1), x(A, -1), x(B, -1)],
        [x(A, 0), int(1), int(0)],
        [x(B, 0), x(A, 1), int(1)],
        [x(C, 1), x(B, 1), x(A, 2)],
        [x(D, 1), x(C, 2), x(B, 2)],
        [x(E, 2) * x(F, 2), x(D, 2), x(C, 3)],
        [x(G, 2), x(F, 3) / x(E, 2), x(E, 4) / x(E, 2)],
        [x(E, 2) * x(H, 3), x(G, 3), x(A, 6)],
        [int(1), x(H, 4) / x(E, 2), j.clone() / x(E, 2)],
    ];
    Catalog {
        family: Family::E7,
        quantities: vec![
            quantity("E7", "J", j.clone(), Period::Proven(4), "E7: J_n = (a_(n+6) + a_n)/h_(n+3) has period 4"),
            quantity("E7", "Jtilde", jt, Period::Proven(4), "E7: J~_n = (e_(n-2) + a_(n-6) h_(n-4))/g_(n-4) has period 4"),
            k_def,
            kt_def,
        ],
        identities,
        psi: PsiSystem {
            psi: [[x(A, 5), x(H, 2)], [x(H, 3), x(A, 0)]],
            ltilde: l_tilde(j),
            psi_factors: vec![0, 1],
            psi_shift: 6,
            trace_factors: vec![2, 3, 8, 9],
            b: 12,
            cross: None,
            citation: "E7: K = tr(L~_(n+2) L~_(n+3) L~_(n+8) L~_(n+9))".into(),
        },
        linear_vertices: vec![A, H],
        atype: [(A, "a"), (H, "h")]
            .into_iter()
            .map(|(v, l)| atype(&format!("atype.{l}"), v, 4, 3, gamma(v, 4, 3), 4, false, &format!("E7: {l}_(n+7) {l}_n - {l}_(n+4) {l}_(n+3) has period 4")))
            .collect(),
        kernels: vec![KernelDef {
            id: "kernel.a".into(),
            rows,
            alpha: x(A, 0),
            citation: "E7: (1, -a_n, 1) annihilates rows -7..7 of the matrix centred at a".into(),
        }],
        probes: vec![Probe::Identity(identity(
            "conjecture.Ktilde",
            kt,
            (x(A, 12) + x(A, 0)) / x(H, 6),
            "E7 conjecture: K~_n = (a_(n+12) + a_n)/h_(n+6)",
        ))],
    }
}

fn e8_catalog() -> Catalog {
    let j = (x(A, 9) + x(A, -3)) / x(A, 3);
    let jt = (x(G, -1) + x(A, -8) * x(B, -4)) / x(C, -3);
    let k = (x(A, 20) + x(A, 0)) / x(A, 10);
    let kt = (x(A, 30) + x(A, 0)) / x(A, 15);
    let identities = vec![
        identity("E8.J.product", j.clone(), x(A, -3) * x(A, 4) - x(I, 0), "E8: J_n = a_(n-3) a_(n+4) - i_n"),
        identity("E8.J.def", j.clone(), (x(G, 2) + x(A, 9) * x(B, 4)) / x(C, 4), "E8: J_n = (g_(n+2) + a_(n+9) b_(n+4))/c_(n+4)"),
        identity("E8.J.Jtilde", j.clone(), jt, "E8: J_n = J~_n = (g_(n-1) + a_(n-8) b_(n-4))/c_(n-3)"),
        identity(
            "E8.tricky",
            x(A, 0) * x(A, 13) - x(I, 6),
            j.shifted(3) * j.shifted(4) - 1,
            "E8: a_n a_(n+13) - i_(n+6) = J_(n+3) J_(n+4) - 1",
        ),
    ];
    let rows = vec![
        [x(A, -8), x(I, -5), x(G, -3)],
        [x(G, -5) / x(G, -3), x(H, -4) / x(G, -3), x(I, -4)],
        [x(E, -4), x(F, -4), x(G, -3) * x(H, -3)],
        [x(D, -4), x(E, -3), x(F, -3)],
        [x(C, -3), x(D, -3), x(E, -2)],
        [x(B, -3), x(C, -2), x(D, -2)],
        [x(A, -2), x(B, -2), x(C, -1)],
        [int(1), x(A, -1), x(B, -1)],
        [x(A, 0), int(1), int(0)],
        [x(B, 0), x(A, 1), int(1)],
        [x(C, 1), x(B, 1), x(A, 2)],
        [x(D, 1), x(C, 2), x(B, 2)],
        [x(E, 2), x(D, 2), x(C, 3)],
        [x(F, 2), x(E, 3), x(D, 3)],
        [x(G, 3) * x(H, 3), x(F, 3), x(E, 4)],
        [x(I, 3), x(H, 4) / x(G, 3), x(G, 5) / x(G, 3)],
        [x(G, 3), x(I, 4), x(A, 8)],
    ];
    Catalog {
        family: Family::E8,
        quantities: vec![
            quantity("E8", "J", j.clone(), Period::Proven(5), "E8: J_n = (a_(n+9) + a_(n-3))/a_(n+3) has period 5"),
            quantity("E8", "K", k, Period::Proven(3), "E8: K_n = (a_(n+20) + a_n)/a_(n+10) has period 3"),
        ],
        identities,
        psi: PsiSystem {
            psi: [[x(A, 11), x(A, 5)], [x(A, 6), x(A, 0)]],
            ltilde: l_tilde(j.shifted(3)),
            psi_factors: vec![0],
            psi_shift: 6,
            trace_factors: vec![0, 6, 12, 18, 24],
            b: 30,
            cross: None,
            citation: "E8: Psi_n L_n = Psi_(n+6), L_n = [[J_(n+3),1],[-1,0]], K = tr(L_n L_(n+6) ... L_(n+24))".into(),
        },
        linear_vertices: vec![A],
        atype: vec![
            atype("atype.a.6_5", A, 6, 5, gamma(A, 6, 5), 6, false, "E8: a_(n+11) a_n - a_(n+6) a_(n+5) has period 6"),
            atype("atype.a.10_3", A, 10, 3, gamma(A, 10, 3), 10, false, "E8: a_(n+13) a_n - a_(n+10) a_(n+3) has period 10"),
        ],
        kernels: vec![KernelDef {
            id: "kernel.a".into(),
            rows,
            alpha: x(A, 0),
            citation: "E8: (1, -a_n, 1) annihilates rows -8..8 of the matrix centred at a".into(),
        }],
        probes: vec![
            Probe::Period(quantity("E8", "Ktilde", kt, Period::Conjectured(2), "E8 conjecture: K~_n = (a_(n+30) + a_n)/a_(n+15) has period 2")),
            Probe::Atype(atype("conjecture.atype.15_2", A, 15, 2, gamma(A, 15, 2), 15, true, "E8 conjecture: a_(n+17) a_n - a_(n+15) a_(n+2) has period 15")),
        ],
    }
}
