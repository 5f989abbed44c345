//! Polynomials over a [`RingSpec`] and the quotient rings `R[x]/(x^n - 1)`.

use crate::caps::{checked_pow, Caps};
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem};
use crate::matrix::EchelonBasis;
use crate::ring::{Monomial, RingElem, RingSpec};

/// `c_0 + c_1 x + ...`, trailing zero coefficients trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingPoly(Vec<RingElem>);

impl RingPoly {
    pub fn zero() -> Self {
        RingPoly(Vec::new())
    }

    pub fn from_coeffs(mut coeffs: Vec<RingElem>) -> Self {
        while coeffs.last().is_some_and(RingElem::is_zero) {
            coeffs.pop();
        }
        RingPoly(coeffs)
    }

    pub fn constant(c: RingElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c·x^k`
    pub fn monomial(spec: &RingSpec, c: RingElem, k: usize) -> Self {
        let mut v = vec![spec.zero(); k];
        v.push(c);
        Self::from_coeffs(v)
    }

    pub fn x_pow(spec: &RingSpec, k: usize) -> Self {
        Self::monomial(spec, spec.one(), k)
    }

    /// `x^n - 1`
    pub fn x_n_minus_1(spec: &RingSpec, n: usize) -> Self {
        let mut v = vec![spec.zero(); n + 1];
        v[0] = spec.neg(&spec.one());
        v[n] = spec.add(&v[n], &spec.one());
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[RingElem] {
        &self.0
    }

    /// Coefficient of `x^k`, `None` above the degree.
    pub fn coeff(&self, k: usize) -> Option<&RingElem> {
        self.0.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&RingElem> {
        self.0.last()
    }

    pub fn is_monic(&self, spec: &RingSpec) -> bool {
        self.leading() == Some(&spec.one())
    }

    /// Hamming weight: number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|c| !c.is_zero()).count()
    }
}

pub fn poly_add(spec: &RingSpec, f: &RingPoly, g: &RingPoly) -> RingPoly {
    let len = f.0.len().max(g.0.len());
    let zero = spec.zero();
    RingPoly::from_coeffs(
        (0..len)
            .map(|k| spec.add(f.0.get(k).unwrap_or(&zero), g.0.get(k).unwrap_or(&zero)))
            .collect(),
    )
}

pub fn poly_neg(spec: &RingSpec, f: &RingPoly) -> RingPoly {
    RingPoly(f.0.iter().map(|c| spec.neg(c)).collect())
}

pub fn poly_sub(spec: &RingSpec, f: &RingPoly, g: &RingPoly) -> RingPoly {
    poly_add(spec, f, &poly_neg(spec, g))
}

pub fn poly_scale(spec: &RingSpec, c: &RingElem, f: &RingPoly) -> RingPoly {
    RingPoly::from_coeffs(f.0.iter().map(|a| spec.mul(c, a)).collect())
}

/// Convolution product in `R[x]`.
pub fn poly_mul(spec: &RingSpec, f: &RingPoly, g: &RingPoly) -> RingPoly {
    if f.is_zero() || g.is_zero() {
        return RingPoly::zero();
    }
    let mut out = vec![spec.zero(); f.0.len() + g.0.len() - 1];
    for (i, a) in f.0.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in g.0.iter().enumerate() {
            spec.mul_acc(&mut out[i + j], a, b);
        }
    }
    RingPoly::from_coeffs(out)
}

pub fn poly_pow(spec: &RingSpec, f: &RingPoly, e: usize) -> RingPoly {
    (0..e).fold(RingPoly::constant(spec.one()), |acc, _| poly_mul(spec, &acc, f))
}

/// Division with remainder by a monic `h`: `f = quotient·h + remainder`,
/// `deg remainder < deg h`. Exact over any commutative ring.
pub fn poly_divmod_monic(
    spec: &RingSpec,
    f: &RingPoly,
    h: &RingPoly,
) -> Result<(RingPoly, RingPoly)> {
    if !h.is_monic(spec) {
        return Err(Error::Domain(
            "division is only defined by monic polynomials".into(),
        ));
    }
    let dh = h.degree().expect("monic polynomials are nonzero");
    let mut rem = f.0.clone();
    if rem.len() <= dh {
        return Ok((RingPoly::zero(), f.clone()));
    }
    let mut quot = vec![spec.zero(); rem.len() - dh];
    for top in (dh..rem.len()).rev() {
        let c = rem[top].clone();
        if c.is_zero() {
            continue;
        }
        let shift = top - dh;
        quot[shift] = c.clone();
        for (k, hk) in h.0.iter().enumerate() {
            rem[shift + k] = spec.sub(&rem[shift + k], &spec.mul(&c, hk));
        }
    }
    rem.truncate(dh);
    Ok((RingPoly::from_coeffs(quot), RingPoly::from_coeffs(rem)))
}

/// `h | f` for monic `h`.
pub fn divides_monic(spec: &RingSpec, h: &RingPoly, f: &RingPoly) -> Result<bool> {
    Ok(poly_divmod_monic(spec, f, h)?.1.is_zero())
}

/// The quotient ring `R[x]/(x^n - 1)`. Elements are [`RingPoly`]s of degree
/// below `n`; as an `F_q`-space it has dimension `s·n` with basis `b·x^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCtx {
    ring: RingSpec,
    n: usize,
}

impl QuotientCtx {
    pub fn new(ring: RingSpec, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("code length n must be ≥ 1".into()));
        }
        Ok(QuotientCtx { ring, n })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn field(&self) -> &FieldCtx {
        self.ring.field()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `s·n`, the `F_q`-dimension.
    pub fn dim(&self) -> usize {
        self.ring.dim() * self.n
    }

    /// `q^(s·n)`, if it fits in a `u64`.
    pub fn element_count(&self) -> Option<u64> {
        checked_pow(self.field().order(), self.dim())
    }

    pub fn descriptor(&self) -> String {
        format!("{}[x]/(x^{}-1)", self.ring.descriptor(), self.n)
    }

    pub fn check_dim(&self, caps: &Caps) -> Result<()> {
        if self.dim() > caps.max_dim {
            return Err(Error::cap("ambient dimension s·n", self.dim(), caps.max_dim as u64));
        }
        Ok(())
    }

    /// Folds exponents modulo `n` (`x^(n+k) = x^k`).
    pub fn reduce(&self, f: &RingPoly) -> RingPoly {
        if f.0.len() <= self.n {
            return f.clone();
        }
        let mut out = vec![self.ring.zero(); self.n];
        for (k, c) in f.0.iter().enumerate() {
            out[k % self.n] = self.ring.add(&out[k % self.n], c);
        }
        RingPoly::from_coeffs(out)
    }

    pub fn contains(&self, f: &RingPoly) -> bool {
        f.0.len() <= self.n
    }

    pub fn add(&self, f: &RingPoly, g: &RingPoly) -> RingPoly {
        poly_add(&self.ring, f, g)
    }

    pub fn sub(&self, f: &RingPoly, g: &RingPoly) -> RingPoly {
        poly_sub(&self.ring, f, g)
    }

    /// Cyclic convolution: the product folded modulo `x^n - 1`.
    pub fn mul(&self, f: &RingPoly, g: &RingPoly) -> RingPoly {
        if f.is_zero() || g.is_zero() {
            return RingPoly::zero();
        }
        let mut out = vec![self.ring.zero(); self.n];
        for (i, a) in f.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.0.iter().enumerate() {
                self.ring.mul_acc(&mut out[(i + j) % self.n], a, b);
            }
        }
        RingPoly::from_coeffs(out)
    }

    /// `c(x)·x mod (x^n - 1)`: `(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})`.
    pub fn cyclic_shift(&self, c: &RingPoly) -> RingPoly {
        if c.is_zero() {
            return RingPoly::zero();
        }
        let mut v: Vec<RingElem> = (0..self.n)
            .map(|k| c.0.get(k).cloned().unwrap_or_else(|| self.ring.zero()))
            .collect();
        v.rotate_right(1);
        RingPoly::from_coeffs(v)
    }

    /// `b·x^k` for each ring basis monomial `b` and `0 ≤ k < n`, in the
    /// coordinate order used by [`Self::to_vector`].
    pub fn fq_basis(&self) -> Vec<RingPoly> {
        (0..self.n)
            .flat_map(|k| {
                self.ring
                    .basis()
                    .map(move |b| RingPoly::monomial(&self.ring, self.ring.monomial(b), k))
            })
            .collect()
    }

    /// Coordinates in `F_q^(s·n)`; coefficient of `b·x^k` at `k·s + b`.
    pub fn to_vector(&self, f: &RingPoly) -> Vec<FieldElem> {
        let s = self.ring.dim();
        let mut v = vec![FieldElem::ZERO; self.dim()];
        for (k, c) in f.0.iter().enumerate().take(self.n) {
            v[k * s..(k + 1) * s].copy_from_slice(c.coeffs());
        }
        v
    }

    pub fn from_vector(&self, v: &[FieldElem]) -> RingPoly {
        let s = self.ring.dim();
        RingPoly::from_coeffs(
            v.chunks(s)
                .map(|chunk| RingElem(chunk.to_vec()))
                .collect(),
        )
    }

    /// Image in `F_q[x]/(x^n - 1)` under `R -> R/m = F_q` (constant
    /// coefficient of each `x^k`).
    pub fn residue(&self, f: &RingPoly) -> Vec<FieldElem> {
        (0..self.n)
            .map(|k| f.0.get(k).map_or(FieldElem::ZERO, RingElem::constant))
            .collect()
    }

    /// Units of `R[x]/(x^n - 1)`.
    ///
    /// The kernel of the residue map is generated by nilpotent monomials, so
    /// `f` is a unit iff its residue is a unit of `F_q[x]/(x^n - 1)`, i.e.
    /// iff the residue is coprime to `x^n - 1`.
    pub fn is_unit(&self, f: &RingPoly) -> bool {
        let field = self.field();
        let mut modulus = vec![FieldElem::ZERO; self.n + 1];
        modulus[0] = field.neg(field.one());
        modulus[self.n] = field.add(modulus[self.n], field.one());
        let g = field.poly_gcd(&self.residue(f), &modulus);
        g.len() == 1
    }

    /// Every element, by ascending coordinate vector (coordinate 0 fastest).
    pub fn elements(&self, caps: &Caps) -> Result<impl Iterator<Item = RingPoly> + '_> {
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
        let dim = self.dim();
        Ok((0..total).map(move |mut idx| {
            let mut v = Vec::with_capacity(dim);
            for _ in 0..dim {
                v.push(FieldElem::from_raw((idx % q) as u32));
                idx /= q;
            }
            self.from_vector(&v)
        }))
    }

    /// Augmentation `c_0 + c_1 x + ... ↦ c_0 + c_1 + ...`.
    pub fn augmentation(&self, f: &RingPoly) -> RingElem {
        f.0.iter()
            .fold(self.ring.zero(), |acc, c| self.ring.add(&acc, c))
    }

    /// Inverse by solving `f·g = 1` as an `F_q`-linear system; `None` for
    /// non-units. Independent of the residue criterion in [`Self::is_unit`].
    pub fn inverse(&self, f: &RingPoly) -> Option<RingPoly> {
        let d = self.dim();
        let f = self.reduce(f);
        let mut basis = EchelonBasis::new(2 * d);
        for (idx, m) in self.fq_basis().iter().enumerate() {
            let mut row = self.to_vector(&self.mul(&f, m));
            row.resize(2 * d, FieldElem::ZERO);
            row[d + idx] = FieldElem::ONE;
            basis.insert(self.field(), row);
        }
        // invertible iff the left block has full rank
        if basis.pivots().iter().take_while(|&&pc| pc < d).count() < d {
            return None;
        }
        let g = self.from_vector(&basis.rows()[0][d..]);
        debug_assert_eq!(self.mul(&f, &g), RingPoly::constant(self.ring.one()));
        Some(g)
    }

    /// Multiplication by the ring basis monomial `b` coefficientwise.
    pub fn scale_monomial(&self, b: Monomial, f: &RingPoly) -> RingPoly {
        poly_scale(&self.ring, &self.ring.monomial(b), f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn r2() -> RingSpec {
        RingSpec::r(2, Arc::new(FieldCtx::new(2, 1).unwrap())).unwrap()
    }

    fn f2ring() -> RingSpec {
        RingSpec::field_as_ring(Arc::new(FieldCtx::new(2, 1).unwrap()))
    }

    fn p(spec: &RingSpec, coeffs: &[RingElem]) -> RingPoly {
        let _ = spec;
        RingPoly::from_coeffs(coeffs.to_vec())
    }

    #[test]
    fn products() {
        let r = r2();
        let one = r.one();
        let u = r.monomial(Monomial(1));
        let x1 = p(&r, &[one.clone(), one.clone()]);
        assert_eq!(
            poly_mul(&r, &x1, &x1),
            p(&r, &[one.clone(), r.zero(), one.clone()])
        );
        let ux = p(&r, &[u.clone(), one.clone()]);
        assert_eq!(poly_mul(&r, &ux, &ux), p(&r, &[r.zero(), r.zero(), one]));
        assert!(poly_mul(&r, &ux, &RingPoly::zero()).is_zero());
    }

    #[test]
    fn long_division() {
        let r = r2();
        let one = r.one();
        let u = r.monomial(Monomial(1));
        let f = RingPoly::x_n_minus_1(&r, 3);
        let h = p(&r, &[one.clone(), one.clone()]);
        let (q, s) = poly_divmod_monic(&r, &f, &h).unwrap();
        assert_eq!(q, p(&r, &[one.clone(), one.clone(), one.clone()]));
        assert!(s.is_zero());

        let f = p(&r, &[u.clone(), r.zero(), one.clone()]);
        let (q, s) = poly_divmod_monic(&r, &f, &h).unwrap();
        assert_eq!(q, p(&r, &[one.clone(), one.clone()]));
        assert_eq!(s, p(&r, &[r.add(&one, &u)]));

        let unit = RingPoly::constant(one.clone());
        let (q, s) = poly_divmod_monic(&r, &f, &unit).unwrap();
        assert_eq!((q, s), (f.clone(), RingPoly::zero()));

        let not_monic = p(&r, &[one.clone(), u]);
        assert!(poly_divmod_monic(&r, &f, &not_monic).is_err());
    }

    #[test]
    fn divisibility() {
        let r = r2();
        let one = r.one();
        let x_minus_1 = p(&r, &[r.neg(&one), one.clone()]);
        for n in 1..8 {
            assert!(divides_monic(&r, &x_minus_1, &RingPoly::x_n_minus_1(&r, n)).unwrap());
        }
        let cyc = p(&r, &[one.clone(), one.clone(), one.clone()]);
        assert!(divides_monic(&r, &cyc, &RingPoly::x_n_minus_1(&r, 3)).unwrap());
        let f = f2ring();
        let x2_1 = p(&f, &[f.one(), f.zero(), f.one()]);
        assert!(!divides_monic(&f, &x2_1, &RingPoly::x_n_minus_1(&f, 3)).unwrap());
    }

    #[test]
    fn quotient_products_and_shift() {
        let f = f2ring();
        let ctx = QuotientCtx::new(f.clone(), 4).unwrap();
        let x = RingPoly::x_pow(&f, 1);
        let x3 = RingPoly::x_pow(&f, 3);
        assert_eq!(ctx.mul(&x3, &x), RingPoly::constant(f.one()));
        let a = ctx.add(&RingPoly::constant(f.one()), &x3);
        assert_eq!(ctx.mul(&a, &x), ctx.add(&x, &RingPoly::constant(f.one())));
        assert_eq!(ctx.mul(&a, &RingPoly::constant(f.one())), a);

        let r = r2();
        let ctx = QuotientCtx::new(r.clone(), 3).unwrap();
        let c = RingPoly::from_coeffs(vec![
            r.one(),
            r.monomial(Monomial(1)),
            r.add(&r.one(), &r.monomial(Monomial(1))),
        ]);
        let shifted = ctx.cyclic_shift(&c);
        assert_eq!(
            shifted.coeffs(),
            &[c.coeffs()[2].clone(), c.coeffs()[0].clone(), c.coeffs()[1].clone()]
        );
        assert_eq!(shifted, ctx.mul(&c, &RingPoly::x_pow(&r, 1)));
        let mut s = c.clone();
        for _ in 0..3 {
            s = ctx.cyclic_shift(&s);
        }
        assert_eq!(s, c);
        assert!(ctx.cyclic_shift(&RingPoly::zero()).is_zero());
    }

    #[test]
    fn vector_round_trip_and_count() {
        let r = r2();
        let ctx = QuotientCtx::new(r, 3).unwrap();
        assert_eq!(ctx.element_count(), Some(64));
        let els: Vec<RingPoly> = ctx.elements(&Caps::default()).unwrap().collect();
        assert_eq!(els.len(), 64);
        for e in &els {
            assert_eq!(&ctx.from_vector(&ctx.to_vector(e)), e);
        }
    }

    /// Brute-force oracle for units of the quotient ring.
    #[test]
    fn unit_predicate_matches_inverse_search() {
        let f2 = Arc::new(FieldCtx::new(2, 1).unwrap());
        let f3 = Arc::new(FieldCtx::new(3, 1).unwrap());
        for (spec, n) in [
            (RingSpec::r(2, f2.clone()).unwrap(), 2),
            (RingSpec::r(2, f2.clone()).unwrap(), 3),
            (RingSpec::s(2, f2.clone()).unwrap(), 2),
            (RingSpec::t(2, 2, f2.clone()).unwrap(), 2),
            (RingSpec::field_as_ring(f2.clone()), 6),
            (RingSpec::r(2, f3.clone()).unwrap(), 2),
            (RingSpec::field_as_ring(f3), 4),
        ] {
            let ctx = QuotientCtx::new(spec.clone(), n).unwrap();
            let els: Vec<RingPoly> = ctx.elements(&Caps::default()).unwrap().collect();
            let one = RingPoly::constant(spec.one());
            for a in &els {
                let brute = els.iter().any(|b| ctx.mul(a, b) == one);
                assert_eq!(ctx.is_unit(a), brute, "{} n={n}", spec.descriptor());
                assert_eq!(ctx.inverse(a).is_some(), brute);
            }
        }
    }

    #[test]
    fn augmentation_examples() {
        let f = f2ring();
        let ctx = QuotientCtx::new(f.clone(), 3).unwrap();
        let x_minus_1 = RingPoly::from_coeffs(vec![f.neg(&f.one()), f.one()]);
        assert!(ctx.augmentation(&x_minus_1).is_zero());
        let all = RingPoly::from_coeffs(vec![f.one(), f.one(), f.one()]);
        assert_eq!(ctx.augmentation(&all), f.one());
        let r = r2();
        let ctx = QuotientCtx::new(r.clone(), 3).unwrap();
        let c = r.monomial(Monomial(1));
        assert_eq!(ctx.augmentation(&RingPoly::constant(c.clone())), c);
    }
}
