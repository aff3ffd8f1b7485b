use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use super::{Rat, Scalar};
use crate::error::{Error, Result};

/// Exponent vector of a Laurent monomial. Ordered graded-lexicographically:
/// total degree first, then exponents compared left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub(super) fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    fn divisible_by(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial with big-integer coefficients.
///
/// Terms are kept in canonical graded-lex order with no zero coefficients,
/// so structural equality is value equality.
#[derive(Clone, Debug)]
pub struct LaurentPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.same_vars(other) && self.terms == other.terms
    }
}

impl LaurentPoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        LaurentPoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: impl Into<BigInt>) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::one(n), c)
    }

    pub fn monomial(vars: Arc<[String]>, m: Monomial, c: impl Into<BigInt>) -> Self {
        assert_eq!(m.0.len(), vars.len(), "monomial arity");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { vars, terms }
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, Monomial(e), 1)
    }

    /// One polynomial per variable, sharing a single variable list.
    pub fn variables<S: AsRef<str>>(names: &[S]) -> Vec<Self> {
        let vars: Arc<[String]> = names.iter().map(|s| s.as_ref().to_string()).collect();
        (0..vars.len()).map(|i| Self::var(vars.clone(), i)).collect()
    }

    pub fn from_terms(
        vars: Arc<[String]>,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every coefficient is positive (the zero polynomial is not).
    pub fn has_positive_coefficients(&self) -> bool {
        !self.terms.is_empty() && self.terms.values().all(|c| c.is_positive())
    }

    fn same_vars(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.same_vars(other) {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        if let Some(terms) = super::packed::mul(self.vars.len(), &self.terms, &rhs.terms) {
            return Ok(LaurentPoly {
                vars: self.vars.clone(),
                terms,
            });
        }
        // Products of large entries collapse heavily, so the naive bound
        // would over-allocate.
        let hint = (self.terms.len() * rhs.terms.len()).min(1 << 16);
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(hint);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    fn scale_monomial(&self, m: &Monomial, c: &BigInt) -> Self {
        // Multiplying by a fixed monomial preserves graded-lex order.
        let terms = self
            .terms
            .iter()
            .map(|(k, v)| (k.mul(m), v * c))
            .collect();
        LaurentPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Componentwise minimum exponent over all terms.
    fn min_exponents(&self) -> Monomial {
        let n = self.vars.len();
        let mut lo = vec![i32::MAX; n];
        for m in self.terms.keys() {
            for (l, &e) in lo.iter_mut().zip(&m.0) {
                *l = (*l).min(e);
            }
        }
        Monomial(lo)
    }

    /// Exact quotient `self / rhs`.
    ///
    /// Both operands are shifted into the polynomial subring, with the
    /// divisor made coprime to every variable, and divided there; any
    /// nonzero remainder means the quotient is not a Laurent polynomial.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        self.check_vars(rhs)?;
        if rhs.is_zero() {
            return Err(Error::BadSpecialization("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let n = self.vars.len();
        let one = BigInt::one();
        if rhs.is_monomial() {
            let (m, c) = rhs.terms.iter().next().unwrap();
            if self.terms.values().any(|v| !v.is_multiple_of(c)) {
                return Err(Error::DivisionNotExact);
            }
            let inv = Monomial::one(n).div(m);
            let terms = self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(&inv), v / c))
                .collect();
            return Ok(LaurentPoly {
                vars: self.vars.clone(),
                terms,
            });
        }
        let num_shift = Monomial::one(n).div(&self.min_exponents());
        let den_shift = Monomial::one(n).div(&rhs.min_exponents());
        let mut r = self.scale_monomial(&num_shift, &one).terms;
        let den = rhs.scale_monomial(&den_shift, &one);
        let back = den_shift.div(&num_shift);
        match super::packed::div(n, &r, &den.terms) {
            Some(Some(q)) => {
                return Ok(LaurentPoly {
                    vars: self.vars.clone(),
                    terms: q.into_iter().map(|(k, v)| (k.mul(&back), v)).collect(),
                })
            }
            Some(None) => return Err(Error::DivisionNotExact),
            None => {}
        }
        let (lm, lc) = den.terms.iter().next_back().unwrap();
        let mut q = BTreeMap::new();
        while let Some((m, c)) = r.iter().next_back() {
            if !m.divisible_by(lm) || !c.is_multiple_of(lc) {
                return Err(Error::DivisionNotExact);
            }
            let qm = m.div(lm);
            let qc = c / lc;
            for (dm, dc) in &den.terms {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                use std::collections::btree_map::Entry;
                match r.entry(key) {
                    Entry::Vacant(v) => {
                        v.insert(-delta);
                    }
                    Entry::Occupied(mut o) => {
                        *o.get_mut() -= delta;
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
            q.insert(qm, qc);
        }
        let terms = q.into_iter().map(|(k, v)| (k.mul(&back), v)).collect();
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Evaluates at a point; a zero coordinate raised to a negative power is
    /// a bad specialization.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.vars.len() {
            return Err(Error::VariableMismatch);
        }
        let mut cache: HashMap<(usize, i32), Rat> = HashMap::new();
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = Rat::from_integer(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if e < 0 && Zero::is_zero(&point[i]) {
                    return Err(Error::BadSpecialization(format!(
                        "variable {} is zero",
                        self.vars[i]
                    )));
                }
                let p = cache
                    .entry((i, e))
                    .or_insert_with(|| Pow::pow(&point[i], e));
                t *= &*p;
            }
            total += t;
        }
        Ok(total)
    }

    /// Partial derivative with respect to the `i`-th variable.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e != 0 {
                let mut k = m.clone();
                k.0[i] -= 1;
                out.add_term(k, c * BigInt::from(e));
            }
        }
        out
    }
}

impl Scalar for LaurentPoly {
    fn size(&self) -> usize {
        self.n_terms()
    }
    fn int_like(&self, k: i64) -> Self {
        Self::constant(self.vars.clone(), k)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("variable lists differ")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("variable lists differ")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("variable lists differ")
    }
    fn divide(&self, rhs: &Self) -> Result<Self> {
        self.exact_div(rhs)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn same(&self, other: &Self) -> bool {
        self == other
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}
