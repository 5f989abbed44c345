//! Residue rings `Z_{p^r}` and Hensel lifting of simple roots.

use crate::error::{Error, Result};
use crate::field::is_prime;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZModCtx {
    p: u64,
    r: u32,
    modulus: u64,
}

impl ZModCtx {
    pub fn new(p: u64, r: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        if r == 0 {
            return Err(Error::InvalidParameter("exponent r must be ≥ 1".into()));
        }
        let modulus = p
            .checked_pow(r)
            .filter(|&m| m <= u32::MAX as u64)
            .ok_or_else(|| Error::InvalidParameter(format!("{p}^{r} is too large")))?;
        Ok(ZModCtx { p, r, modulus })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.r
    }

    /// `p^r`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.modulus as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.modulus
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.modulus - a % self.modulus) % self.modulus
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.modulus
    }

    pub fn is_unit(&self, a: u64) -> bool {
        !a.is_multiple_of(self.p)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        let (g, x, _) = ext_gcd(a as i64 % self.modulus as i64, self.modulus as i64);
        if g != 1 {
            return Err(Error::Domain(format!(
                "{a} is not a unit modulo {}",
                self.modulus
            )));
        }
        Ok(self.reduce(x))
    }

    /// Evaluates `f` (little-endian integer coefficients) at `x`.
    pub fn eval(&self, f: &[i64], x: u64) -> u64 {
        f.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), self.reduce(c)))
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Formal derivative of an integer polynomial.
pub fn derivative(f: &[i64]) -> Vec<i64> {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &c)| c * k as i64)
        .collect()
}

/// Lifts a simple root `rho` of `f` modulo `p^t` to a root modulo `p^(t+1)`
/// with one Newton step `sigma = rho - f(rho) / f'(rho)`.
///
/// Both postconditions (`sigma ≡ rho mod p^t`, `f(sigma) ≡ 0 mod p^(t+1)`) are
/// re-checked on the result.
pub fn hensel_lift_root(p: u64, t: u32, f: &[i64], rho: u64) -> Result<u64> {
    if t == 0 {
        return Err(Error::InvalidParameter("lifting level t must be ≥ 1".into()));
    }
    let low = ZModCtx::new(p, t)?;
    let high = ZModCtx::new(p, t + 1)?;
    if low.eval(f, rho % low.modulus()) != 0 {
        return Err(Error::Precondition(format!(
            "{rho} is not a root of f modulo {}",
            low.modulus()
        )));
    }
    let df = derivative(f);
    let slope = high.eval(&df, rho);
    if !high.is_unit(slope) {
        return Err(Error::Domain(format!(
            "non-simple root, lift undefined: f'({rho}) ≡ 0 mod {p}"
        )));
    }
    let correction = high.mul(high.eval(f, rho), high.inv(slope)?);
    let sigma = high.sub(rho % high.modulus(), correction);

    if sigma % low.modulus() != rho % low.modulus() || high.eval(f, sigma) != 0 {
        return Err(Error::Domain(format!(
            "Hensel step produced {sigma}, which fails its postcondition"
        )));
    }
    Ok(sigma)
}
