//! The finite `F_q`-algebras
//!
//! * `R_i = F_q[u]/(u^i)`,
//! * `S_i = F_q[u_1, ..., u_i]/(u_1^2, ..., u_i^2)`,
//! * `T_(i,j) = F_q[u, v]/(u^i, v^j)`,
//!
//! all handled by one kernel: a monomial basis in which the product of two
//! basis monomials is either another basis monomial or zero.

use std::fmt;
use std::sync::Arc;

use crate::caps::{checked_pow, Caps};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};

/// Largest `i` accepted for `S_i` (basis size `2^i`).
pub const MAX_S_VARIABLES: usize = 16;
/// Largest basis size accepted for `R_i` and `T_(i,j)`.
pub const MAX_BASIS: usize = 1 << 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingFamily {
    /// `F_q[u]/(u^i)`
    R { i: usize },
    /// `F_q[u_1..u_i]/(u_k^2)`
    S { i: usize },
    /// `F_q[u,v]/(u^i, v^j)`
    T { i: usize, j: usize },
}

impl RingFamily {
    /// `s = dim_{F_q}` of the ring.
    pub fn dim(&self) -> usize {
        match *self {
            RingFamily::R { i } => i,
            RingFamily::S { i } => 1 << i,
            RingFamily::T { i, j } => i * j,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            RingFamily::R { i } | RingFamily::S { i } if i == 0 => {
                Err(Error::InvalidParameter("i must be ≥ 1".into()))
            }
            RingFamily::T { i, j } if i == 0 || j == 0 => {
                Err(Error::InvalidParameter("i and j must be ≥ 1".into()))
            }
            RingFamily::S { i } if i > MAX_S_VARIABLES => Err(Error::cap(
                "S_i variable count",
                i,
                MAX_S_VARIABLES as u64,
            )),
            RingFamily::R { i } if i > MAX_BASIS => {
                Err(Error::cap("basis size", i, MAX_BASIS as u64))
            }
            RingFamily::T { i, j } if i.saturating_mul(j) > MAX_BASIS => Err(Error::cap(
                "basis size",
                i.saturating_mul(j),
                MAX_BASIS as u64,
            )),
            _ => Ok(()),
        }
    }
}

/// A basis monomial, identified by its position in the canonical basis.
///
/// * `R_i`: position `a` is `u^a`.
/// * `S_i`: position is a bitmask, bit `k-1` set iff `u_k` divides.
/// * `T_(i,j)`: position `a·j + b` is `u^a v^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub usize);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);
}

/// An element of a [`RingSpec`]: one `F_q` coefficient per basis monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem(pub Vec<FieldElem>);

impl RingElem {
    pub fn coeffs(&self) -> &[FieldElem] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Coefficient of the monomial `1`.
    pub fn constant(&self) -> FieldElem {
        self.0[0]
    }
}

struct RingInner {
    family: RingFamily,
    field: Arc<FieldCtx>,
}

/// One of `R_i`, `S_i`, `T_(i,j)` over a fixed `F_q`. Cheap to clone.
#[derive(Clone)]
pub struct RingSpec(Arc<RingInner>);

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingSpec({})", self.descriptor())
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.0.family == other.0.family && self.0.field == other.0.field
    }
}

impl Eq for RingSpec {}

impl RingSpec {
    pub fn new(family: RingFamily, field: Arc<FieldCtx>) -> Result<Self> {
        family.validate()?;
        Ok(RingSpec(Arc::new(RingInner { family, field })))
    }

    pub fn r(i: usize, field: Arc<FieldCtx>) -> Result<Self> {
        Self::new(RingFamily::R { i }, field)
    }

    pub fn s(i: usize, field: Arc<FieldCtx>) -> Result<Self> {
        Self::new(RingFamily::S { i }, field)
    }

    pub fn t(i: usize, j: usize, field: Arc<FieldCtx>) -> Result<Self> {
        Self::new(RingFamily::T { i, j }, field)
    }

    /// `F_q` itself, as `R_1`.
    pub fn field_as_ring(field: Arc<FieldCtx>) -> Self {
        Self::r(1, field).expect("R_1 is always valid")
    }

    pub fn family(&self) -> RingFamily {
        self.0.family
    }

    pub fn field(&self) -> &FieldCtx {
        &self.0.field
    }

    pub fn field_arc(&self) -> &Arc<FieldCtx> {
        &self.0.field
    }

    /// `s = dim_{F_q}`.
    pub fn dim(&self) -> usize {
        self.0.family.dim()
    }

    /// `q^s`, if it fits in a `u64`.
    pub fn element_count(&self) -> Option<u64> {
        checked_pow(self.field().order(), self.dim())
    }

    pub fn basis(&self) -> impl Iterator<Item = Monomial> {
        (0..self.dim()).map(Monomial)
    }

    /// Product of two basis monomials, `None` when it vanishes.
    pub fn monomial_product(&self, a: Monomial, b: Monomial) -> Option<Monomial> {
        match self.0.family {
            RingFamily::R { i } => (a.0 + b.0 < i).then(|| Monomial(a.0 + b.0)),
            RingFamily::S { .. } => (a.0 & b.0 == 0).then_some(Monomial(a.0 | b.0)),
            RingFamily::T { i, j } => {
                let (ua, va) = (a.0 / j, a.0 % j);
                let (ub, vb) = (b.0 / j, b.0 % j);
                (ua + ub < i && va + vb < j).then(|| Monomial((ua + ub) * j + va + vb))
            }
        }
    }

    pub fn monomial_name(&self, m: Monomial) -> String {
        fn power(var: &str, e: usize) -> Option<String> {
            match e {
                0 => None,
                1 => Some(var.to_string()),
                e => Some(format!("{var}^{e}")),
            }
        }
        let factors: Vec<String> = match self.0.family {
            RingFamily::R { .. } => power("u", m.0).into_iter().collect(),
            RingFamily::S { i } => (0..i)
                .filter(|k| m.0 >> k & 1 == 1)
                .map(|k| format!("u{}", k + 1))
                .collect(),
            RingFamily::T { j, .. } => power("u", m.0 / j)
                .into_iter()
                .chain(power("v", m.0 % j))
                .collect(),
        };
        if factors.is_empty() {
            "1".into()
        } else {
            factors.join("*")
        }
    }

    /// Named generators of the ring (`u`; `u1..ui`; `u`, `v`) with their values.
    pub fn variables(&self) -> Vec<(String, RingElem)> {
        match self.0.family {
            RingFamily::R { i } => vec![("u".into(), self.monomial_or_zero(1, 1 < i))],
            RingFamily::S { i } => (0..i)
                .map(|k| (format!("u{}", k + 1), self.monomial(Monomial(1 << k))))
                .collect(),
            RingFamily::T { i, j } => vec![
                ("u".into(), self.monomial_or_zero(j, 1 < i)),
                ("v".into(), self.monomial_or_zero(1, 1 < j)),
            ],
        }
    }

    fn monomial_or_zero(&self, index: usize, present: bool) -> RingElem {
        if present {
            self.monomial(Monomial(index))
        } else {
            self.zero()
        }
    }

    pub fn descriptor(&self) -> String {
        let q = self.field().order();
        match self.0.family {
            RingFamily::R { i } => format!("R[i={i},q={q}]"),
            RingFamily::S { i } => format!("S[i={i},q={q}]"),
            RingFamily::T { i, j } => format!("T[i={i},j={j},q={q}]"),
        }
    }

    pub fn zero(&self) -> RingElem {
        RingElem(vec![FieldElem::ZERO; self.dim()])
    }

    pub fn one(&self) -> RingElem {
        self.scalar(FieldElem::ONE)
    }

    pub fn scalar(&self, c: FieldElem) -> RingElem {
        let mut v = self.zero();
        v.0[0] = c;
        v
    }

    pub fn monomial(&self, m: Monomial) -> RingElem {
        let mut v = self.zero();
        v.0[m.0] = FieldElem::ONE;
        v
    }

    pub fn from_coeffs(&self, coeffs: Vec<FieldElem>) -> Result<RingElem> {
        if coeffs.len() != self.dim() {
            return Err(Error::Domain(format!(
                "expected {} coefficients, got {}",
                self.dim(),
                coeffs.len()
            )));
        }
        Ok(RingElem(coeffs))
    }

    pub fn add(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = self.field();
        RingElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.add(x, y)).collect())
    }

    pub fn sub(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let f = self.field();
        RingElem(a.0.iter().zip(&b.0).map(|(&x, &y)| f.sub(x, y)).collect())
    }

    pub fn neg(&self, a: &RingElem) -> RingElem {
        let f = self.field();
        RingElem(a.0.iter().map(|&x| f.neg(x)).collect())
    }

    pub fn scale(&self, c: FieldElem, a: &RingElem) -> RingElem {
        let f = self.field();
        RingElem(a.0.iter().map(|&x| f.mul(c, x)).collect())
    }

    /// `acc += a * b`
    pub fn mul_acc(&self, acc: &mut RingElem, a: &RingElem, b: &RingElem) {
        let f = self.field();
        for (i, &x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                if let Some(m) = self.monomial_product(Monomial(i), Monomial(j)) {
                    acc.0[m.0] = f.add(acc.0[m.0], f.mul(x, y));
                }
            }
        }
    }

    pub fn mul(&self, a: &RingElem, b: &RingElem) -> RingElem {
        let mut acc = self.zero();
        self.mul_acc(&mut acc, a, b);
        acc
    }

    pub fn pow(&self, a: &RingElem, mut e: u64) -> RingElem {
        let mut result = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        result
    }

    /// Units are exactly the elements with a nonzero constant coefficient:
    /// every other basis monomial is nilpotent.
    pub fn is_unit(&self, a: &RingElem) -> bool {
        !a.constant().is_zero()
    }

    /// Inverse via the finite Neumann series: `a = c(1 + m)` with `m`
    /// nilpotent, so `a^{-1} = c^{-1} Σ (-m)^k`.
    pub fn inverse(&self, a: &RingElem) -> Result<RingElem> {
        let f = self.field();
        let c_inv = f
            .inv(a.constant())
            .map_err(|_| Error::Domain("element is not a unit".into()))?;
        let normalized = self.scale(c_inv, a);
        let minus_m = self.sub(&self.one(), &normalized);

        let mut sum = self.one();
        let mut term = self.one();
        loop {
            term = self.mul(&term, &minus_m);
            if term.is_zero() {
                break;
            }
            sum = self.add(&sum, &term);
        }
        let inv = self.scale(c_inv, &sum);
        if self.mul(a, &inv) != self.one() {
            return Err(Error::Domain(format!(
                "Neumann series did not invert {}",
                self.format(a)
            )));
        }
        Ok(inv)
    }

    /// Smallest `t ≥ 1` with `a^t = 0`, or `None` if `a` is not nilpotent.
    pub fn nilpotency_index(&self, a: &RingElem) -> Option<usize> {
        let mut power = a.clone();
        for t in 1..=self.dim() + 1 {
            if power.is_zero() {
                return Some(t);
            }
            power = self.mul(&power, a);
        }
        None
    }

    /// Every element, coefficient vectors in ascending order (coefficient of
    /// monomial `1` varying fastest).
    pub fn elements(&self, caps: &Caps) -> Result<impl Iterator<Item = RingElem> + '_> {
        let total = self
            .element_count()
            .filter(|&c| c <= caps.max_enum)
            .ok_or_else(|| {
                Error::cap(
                    "enumeration",
                    format!("{}^{}", self.field().order(), self.dim()),
                    caps.max_enum,
                )
            })?;
        let q = self.field().order();
        let s = self.dim();
        Ok((0..total).map(move |mut idx| {
            let mut v = Vec::with_capacity(s);
            for _ in 0..s {
                v.push(FieldElem::from_raw((idx % q) as u32));
                idx /= q;
            }
            RingElem(v)
        }))
    }

    /// Canonical text: terms in basis order, zero coefficients omitted,
    /// `0` for the zero element.
    pub fn format(&self, a: &RingElem) -> String {
        let f = self.field();
        let mut terms = Vec::new();
        for (k, &c) in a.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = f.format(c);
            let term = if k == 0 {
                coeff
            } else {
                let name = self.monomial_name(Monomial(k));
                if c == FieldElem::ONE {
                    name
                } else if f.is_single_term(c) {
                    format!("{coeff}*{name}")
                } else {
                    format!("({coeff})*{name}")
                }
            };
            terms.push(term);
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }
}
