//! Galois rings `GR(p^r, n) = Z_{p^r}[x]/(f(x))` with `f` monic and
//! irreducible modulo `p`.

use std::collections::HashSet;

use serde_json::json;

use crate::caps::{checked_pow, Caps};
use crate::error::{Error, Result};
use crate::field::{find_irreducible, zp};
use crate::report::Report;
use crate::zmod::ZModCtx;

/// An element `a_0 + a_1 θ + ... + a_{n-1} θ^{n-1}`, coefficients in `Z_{p^r}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrElem(pub Vec<u64>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaloisRingCtx {
    base: ZModCtx,
    n: usize,
    modulus: Vec<u64>,
}

impl GaloisRingCtx {
    /// `GR(p^r, n)` over the coefficientwise lift of [`find_irreducible`]`(p, n)`.
    pub fn construct(p: u64, r: u32, n: usize) -> Result<Self> {
        let base = ZModCtx::new(p, r)?;
        let modulus = find_irreducible(p, n)?;
        Self::with_modulus(base, modulus)
    }

    /// Validates that `modulus` is monic over `Z_{p^r}` and irreducible mod `p`.
    pub fn with_modulus(base: ZModCtx, modulus: Vec<u64>) -> Result<Self> {
        let modulus: Vec<u64> = modulus.iter().map(|&c| c % base.modulus()).collect();
        if modulus.len() < 2 || modulus.last() != Some(&1) {
            return Err(Error::InvalidParameter(
                "Galois ring modulus must be monic of degree ≥ 1".into(),
            ));
        }
        if !zp::is_irreducible(&modulus, base.prime()) {
            return Err(Error::InvalidParameter(format!(
                "modulus {modulus:?} is not irreducible modulo {}",
                base.prime()
            )));
        }
        Ok(GaloisRingCtx {
            n: modulus.len() - 1,
            base,
            modulus,
        })
    }

    pub fn base(&self) -> &ZModCtx {
        &self.base
    }

    /// Rank `n` of the ring as a free `Z_{p^r}`-module.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// `p^(r·n)`, if it fits in a `u64`.
    pub fn element_count(&self) -> Option<u64> {
        checked_pow(self.base.modulus(), self.n)
    }

    pub fn zero(&self) -> GrElem {
        GrElem(vec![0; self.n])
    }

    pub fn one(&self) -> GrElem {
        let mut v = vec![0; self.n];
        v[0] = 1;
        GrElem(v)
    }

    /// The class `θ` of `x`.
    pub fn theta(&self) -> GrElem {
        let mut x = vec![0u64; self.n + 1];
        x[1] = 1;
        self.reduce(x)
    }

    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<GrElem> {
        if coeffs.len() > self.n {
            return Err(Error::Domain(format!(
                "{} coefficients given for a rank-{} Galois ring",
                coeffs.len(),
                self.n
            )));
        }
        let mut v: Vec<u64> = coeffs.iter().map(|&c| self.base.reduce(c)).collect();
        v.resize(self.n, 0);
        Ok(GrElem(v))
    }

    fn reduce(&self, mut f: Vec<u64>) -> GrElem {
        let z = &self.base;
        while f.len() > self.n {
            let lead = f.pop().unwrap();
            if lead != 0 {
                let shift = f.len() - self.n;
                for k in 0..self.n {
                    f[shift + k] = z.sub(f[shift + k], z.mul(lead, self.modulus[k]));
                }
            }
        }
        f.resize(self.n, 0);
        GrElem(f)
    }

    pub fn add(&self, a: &GrElem, b: &GrElem) -> GrElem {
        GrElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| self.base.add(x, y))
                .collect(),
        )
    }

    pub fn neg(&self, a: &GrElem) -> GrElem {
        GrElem(a.0.iter().map(|&x| self.base.neg(x)).collect())
    }

    pub fn scale(&self, c: u64, a: &GrElem) -> GrElem {
        GrElem(a.0.iter().map(|&x| self.base.mul(c, x)).collect())
    }

    pub fn mul(&self, a: &GrElem, b: &GrElem) -> GrElem {
        let mut prod = vec![0u64; 2 * self.n];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                prod[i + j] = self.base.add(prod[i + j], self.base.mul(x, y));
            }
        }
        self.reduce(prod)
    }

    /// All elements, coefficient vectors ascending (`a_0` fastest).
    pub fn elements(&self, caps: &Caps) -> Result<impl Iterator<Item = GrElem> + '_> {
        let total = self
            .element_count()
            .filter(|&c| c <= caps.max_enum)
            .ok_or_else(|| {
                Error::cap(
                    "enumeration",
                    format!("{}^{}", self.base.modulus(), self.n),
                    caps.max_enum,
                )
            })?;
        let m = self.base.modulus();
        Ok((0..total).map(move |mut idx| {
            let mut v = Vec::with_capacity(self.n);
            for _ in 0..self.n {
                v.push(idx % m);
                idx /= m;
            }
            GrElem(v)
        }))
    }

    pub fn format(&self, a: &GrElem) -> String {
        let terms: Vec<String> = a
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "θ".to_string(),
                (1, c) => format!("{c}*θ"),
                (k, 1) => format!("θ^{k}"),
                (k, c) => format!("{c}*θ^{k}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join("+")
        }
    }

    pub fn descriptor(&self) -> String {
        format!(
            "GR[p={},r={},n={}]",
            self.base.prime(),
            self.base.exponent(),
            self.n
        )
    }
}

/// Verifies that every element has exactly one representation
/// `a_0 + a_1 θ + ... + a_{n-1} θ^{n-1}` with `a_k ∈ Z_{p^r}`.
///
/// Powers of `θ` are computed by ring multiplication, so the check exercises
/// the reduction modulo `f`, not just the storage layout.
pub fn gr_basis_check(ctx: &GaloisRingCtx, caps: &Caps) -> Result<Report> {
    let expected = ctx.element_count().unwrap_or(u64::MAX);
    let theta = ctx.theta();
    let mut powers = vec![ctx.one()];
    for _ in 1..ctx.rank() {
        let next = ctx.mul(powers.last().unwrap(), &theta);
        powers.push(next);
    }

    let mut seen: HashSet<GrElem> = HashSet::new();
    let mut collision = None;
    for coeffs in ctx.elements(caps)? {
        let value = coeffs
            .0
            .iter()
            .zip(&powers)
            .fold(ctx.zero(), |acc, (&c, pw)| ctx.add(&acc, &ctx.scale(c, pw)));
        if !seen.insert(value.clone()) && collision.is_none() {
            collision = Some((coeffs, value));
        }
    }
    let ring_elements: HashSet<GrElem> = ctx.elements(caps)?.collect();
    let holds =
        collision.is_none() && seen.len() as u64 == expected && seen == ring_elements;

    let basis: Vec<String> = powers.iter().map(|b| ctx.format(b)).collect();
    let mut report = Report::new("gr_basis")
        .param("ring", ctx.descriptor())
        .param("modulus", ctx.modulus().to_vec())
        .verdict(holds);
    report = match collision {
        None => report.witness(json!({
            "basis": basis,
            "representations": seen.len(),
            "element_count": expected,
        })),
        Some((coeffs, value)) => report.witness(json!({
            "basis": basis,
            "duplicate_coefficients": coeffs.0,
            "value": ctx.format(&value),
        })),
    };
    Ok(report)
}
