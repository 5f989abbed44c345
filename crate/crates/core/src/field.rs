//! Prime fields and their extensions `F_q = Z_p[y]/(m(y))`.
//!
//! Elements are stored as a single index whose base-`p` digits are the
//! coefficients of `1, y, y^2, ...`. Addition, multiplication and inversion
//! are computed once by polynomial arithmetic modulo `m(y)` and cached in
//! tables, so a [`FieldCtx`] is cheap to query and immutable afterwards.

use std::fmt;

use crate::error::{Error, Result};

/// Largest field order for which a [`FieldCtx`] is built.
pub const MAX_FIELD_ORDER: u64 = 1024;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, r)` with `q = p^r`, `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut r = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        r += 1;
    }
    (rest == 1).then_some((p, r))
}

/// Dense polynomials over `Z_p`, little-endian, used for modulus selection.
pub mod zp {
    pub fn trim(f: &mut Vec<u64>) {
        while f.last() == Some(&0) {
            f.pop();
        }
    }

    fn inv_mod(a: u64, p: u64) -> u64 {
        // p is prime, Fermat
        let mut result = 1u64;
        let mut base = a % p;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        result
    }

    /// Remainder of `f` modulo a nonzero `g`.
    pub fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
        let mut r: Vec<u64> = f.iter().map(|c| c % p).collect();
        let mut g: Vec<u64> = g.iter().map(|c| c % p).collect();
        trim(&mut r);
        trim(&mut g);
        assert!(!g.is_empty(), "division by the zero polynomial");
        let dg = g.len() - 1;
        let lead_inv = inv_mod(g[dg], p);
        while r.len() > dg {
            let shift = r.len() - 1 - dg;
            let factor = r[r.len() - 1] * lead_inv % p;
            for (k, &gc) in g.iter().enumerate() {
                let idx = shift + k;
                r[idx] = (r[idx] + p - factor * gc % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    /// Monic polynomial of degree `d` whose lower coefficients are the base-`p`
    /// digits of `index`.
    pub fn monic_from_index(p: u64, d: usize, mut index: u64) -> Vec<u64> {
        let mut f = Vec::with_capacity(d + 1);
        for _ in 0..d {
            f.push(index % p);
            index /= p;
        }
        f.push(1);
        f
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree `1..=deg/2`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let mut f: Vec<u64> = f.iter().map(|c| c % p).collect();
        trim(&mut f);
        if f.len() < 2 {
            return false;
        }
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let g = monic_from_index(p, d, idx);
                if rem(&f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// First monic irreducible polynomial of degree `d` over `Z_p`, in ascending
/// order of `(a_0, ..., a_{d-1})` read as a base-`p` integer.
pub fn find_irreducible(p: u64, d: usize) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if d == 0 {
        return Err(Error::InvalidParameter("degree must be at least 1".into()));
    }
    let count = crate::caps::checked_pow(p, d)
        .ok_or_else(|| Error::InvalidParameter(format!("degree {d} too large over Z_{p}")))?;
    (0..count)
        .map(|idx| zp::monic_from_index(p, d, idx))
        .find(|f| zp::is_irreducible(f, p))
        .ok_or_else(|| Error::Domain(format!("no irreducible of degree {d} over Z_{p}")))
}

/// An element of some [`FieldCtx`]; meaningless without its context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// Index of the element: its coefficient vector read as a base-`p` integer.
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Wraps a raw index; callers guarantee it is below the field order.
    pub(crate) fn from_raw(index: u32) -> FieldElem {
        FieldElem(index)
    }
}

/// The finite field `F_{p^r}`.
#[derive(Clone)]
pub struct FieldCtx {
    p: u32,
    r: usize,
    q: u32,
    modulus: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("p", &self.p)
            .field("r", &self.r)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.r == other.r && self.modulus == other.modulus
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    /// `F_{p^r}` over the modulus chosen by [`find_irreducible`].
    pub fn new(p: u64, r: usize) -> Result<Self> {
        let modulus = find_irreducible(p, r)?;
        Self::with_modulus(p, modulus)
    }

    /// `F_q` for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, r) = prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::new(p, r)
    }

    /// `Z_p[y]/(modulus)`; the modulus must be monic and irreducible.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let mut modulus: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        zp::trim(&mut modulus);
        if modulus.len() < 2 {
            return Err(Error::InvalidParameter("modulus must have degree ≥ 1".into()));
        }
        if modulus.last() != Some(&1) {
            return Err(Error::InvalidParameter("modulus must be monic".into()));
        }
        if !zp::is_irreducible(&modulus, p) {
            return Err(Error::InvalidParameter(format!(
                "modulus {modulus:?} is reducible over Z_{p}"
            )));
        }
        let r = modulus.len() - 1;
        let q = crate::caps::checked_pow(p, r)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or_else(|| Error::cap("field order", format!("{p}^{r}"), MAX_FIELD_ORDER))?;
        let mut ctx = FieldCtx {
            p: p as u32,
            r,
            q: q as u32,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        ctx.build_tables();
        Ok(ctx)
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let digits: Vec<Vec<u64>> = (0..self.q).map(|i| self.digits_of(i)).collect();
        self.add = vec![0; q * q];
        self.mul = vec![0; q * q];
        self.neg = vec![0; q];
        self.inv = vec![0; q];
        let p = self.p as u64;
        for a in 0..q {
            let neg: Vec<u64> = digits[a].iter().map(|&c| (p - c) % p).collect();
            self.neg[a] = self.index_of(&neg);
            for b in a..q {
                let sum: Vec<u64> = digits[a]
                    .iter()
                    .zip(&digits[b])
                    .map(|(x, y)| (x + y) % p)
                    .collect();
                let s = self.index_of(&sum);
                let m = self.index_of(&self.poly_mul_mod(&digits[a], &digits[b]));
                self.add[a * q + b] = s;
                self.add[b * q + a] = s;
                self.mul[a * q + b] = m;
                self.mul[b * q + a] = m;
            }
        }
        for a in 1..q {
            if let Some(b) = (1..q).find(|&b| self.mul[a * q + b] == 1) {
                self.inv[a] = b as u32;
            }
        }
    }

    fn digits_of(&self, mut index: u32) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.r);
        for _ in 0..self.r {
            out.push((index % self.p) as u64);
            index /= self.p;
        }
        out
    }

    fn index_of(&self, digits: &[u64]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0u32, |acc, &d| acc * self.p + d as u32)
    }

    fn poly_mul_mod(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let p = self.p as u64;
        let mut prod = vec![0u64; a.len() + b.len()];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut r = zp::rem(&prod, &self.modulus, p);
        r.resize(self.r, 0);
        r
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// Monic modulus `m(y)`, little-endian over `Z_p`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    pub fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    /// The class `w` of `y`. For `r = 1` this is the residue of `y` modulo
    /// the linear modulus, i.e. an element of `Z_p`.
    pub fn generator(&self) -> FieldElem {
        if self.r >= 2 {
            FieldElem(self.p)
        } else {
            // y ≡ -m_0 mod (y + m_0)
            FieldElem(((self.p as u64 - self.modulus[0]) % self.p as u64) as u32)
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.r || coeffs.iter().any(|&c| c >= self.p as u64) {
            return Err(Error::Domain(format!(
                "{coeffs:?} is not a coefficient vector of F_{}",
                self.q
            )));
        }
        Ok(FieldElem(self.index_of(coeffs)))
    }

    pub fn from_index(&self, index: u32) -> Result<FieldElem> {
        if index >= self.q {
            return Err(Error::Domain(format!("index {index} outside F_{}", self.q)));
        }
        Ok(FieldElem(index))
    }

    /// Coefficient vector (coefficient of `y^k` at index `k`), length `r`.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        self.digits_of(a.0)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(FieldElem)
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[(a.0 * self.q + b.0) as usize])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[(a.0 * self.q + b.0) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::Domain("inversion of zero".into()));
        }
        Ok(FieldElem(self.inv[a.0 as usize]))
    }

    /// Square-and-multiply exponentiation; `a^0 = 1`.
    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut result = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// Canonical `w`-notation: terms in descending powers of `w`, e.g. `w+1`,
    /// `2*w^2+w`, `0`.
    pub fn format(&self, a: FieldElem) -> String {
        if a.is_zero() {
            return "0".into();
        }
        if self.r == 1 {
            return a.0.to_string();
        }
        let coeffs = self.coeffs(a);
        let mut terms = Vec::new();
        for (k, &c) in coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "w".to_string(),
                (1, c) => format!("{c}*w"),
                (k, 1) => format!("w^{k}"),
                (k, c) => format!("{c}*w^{k}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }

    /// True when `format(a)` is a single term (no `+`).
    pub(crate) fn is_single_term(&self, a: FieldElem) -> bool {
        self.coeffs(a).iter().filter(|&&c| c != 0).count() <= 1
    }

    /// Remainder of `f` by a nonzero `g`, both little-endian over `F_q`.
    pub fn poly_rem(&self, f: &[FieldElem], g: &[FieldElem]) -> Vec<FieldElem> {
        let mut r = f.to_vec();
        let mut g = g.to_vec();
        trim_fq(&mut r);
        trim_fq(&mut g);
        assert!(!g.is_empty(), "division by the zero polynomial");
        let dg = g.len() - 1;
        let lead_inv = self.inv(g[dg]).expect("nonzero leading coefficient");
        while r.len() > dg {
            let shift = r.len() - 1 - dg;
            let factor = self.mul(r[r.len() - 1], lead_inv);
            for (k, &gc) in g.iter().enumerate() {
                r[shift + k] = self.sub(r[shift + k], self.mul(factor, gc));
            }
            trim_fq(&mut r);
        }
        r
    }

    /// Monic gcd of two polynomials over `F_q` (empty for gcd(0, 0)).
    pub fn poly_gcd(&self, f: &[FieldElem], g: &[FieldElem]) -> Vec<FieldElem> {
        let mut a = f.to_vec();
        let mut b = g.to_vec();
        trim_fq(&mut a);
        trim_fq(&mut b);
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        if let Some(&lead) = a.last() {
            let li = self.inv(lead).expect("nonzero leading coefficient");
            for c in &mut a {
                *c = self.mul(*c, li);
            }
        }
        a
    }
}

pub(crate) fn trim_fq(f: &mut Vec<FieldElem>) {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
}
