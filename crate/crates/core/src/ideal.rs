//! Ideals of `R[x]/(x^n - 1)` as `F_q`-subspaces.
//!
//! The ideal generated by `g_1, ..., g_t` is the `F_q`-span of
//! `b·x^k·g_l` over ring basis monomials `b` and `0 ≤ k < n`, because those
//! products of `g_l` with the `F_q`-basis of the quotient span every
//! multiple `f·g_l`. A bare ring `R` is the case `n = 1`.

use crate::caps::{checked_pow, Caps};
use crate::error::{Error, Result};
use crate::matrix::{EchelonBasis, FqMatrix};
use crate::poly::{QuotientCtx, RingPoly};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealSet {
    parent: QuotientCtx,
    basis: EchelonBasis,
}

impl IdealSet {
    /// `ideal_span`: the smallest ideal containing `generators`.
    pub fn span(parent: &QuotientCtx, generators: &[RingPoly], caps: &Caps) -> Result<Self> {
        parent.check_dim(caps)?;
        let mut ideal = IdealSet {
            parent: parent.clone(),
            basis: EchelonBasis::new(parent.dim()),
        };
        for g in generators {
            ideal.absorb(g);
        }
        Ok(ideal)
    }

    pub fn zero(parent: &QuotientCtx) -> Self {
        IdealSet {
            parent: parent.clone(),
            basis: EchelonBasis::new(parent.dim()),
        }
    }

    /// Enlarges the ideal to contain `g`.
    pub fn absorb(&mut self, g: &RingPoly) {
        let ctx = &self.parent;
        let g = ctx.reduce(g);
        if g.is_zero() || self.basis.rank() == ctx.dim() {
            return;
        }
        for m in ctx.fq_basis() {
            let v = ctx.to_vector(&ctx.mul(&m, &g));
            self.basis.insert(ctx.field(), v);
            if self.basis.rank() == ctx.dim() {
                return;
            }
        }
    }

    /// Sum of two ideals of the same parent.
    pub fn join(&self, other: &IdealSet) -> IdealSet {
        let mut out = self.clone();
        for row in other.basis.rows() {
            out.basis.insert(self.parent.field(), row.clone());
        }
        out
    }

    pub fn parent(&self) -> &QuotientCtx {
        &self.parent
    }

    pub fn echelon(&self) -> &EchelonBasis {
        &self.basis
    }

    /// Row-reduced `F_q`-basis as a matrix over `F_q^(s·n)`.
    pub fn fq_basis(&self) -> FqMatrix {
        self.basis.to_matrix()
    }

    /// Row-reduced basis rows as polynomials.
    pub fn basis_polys(&self) -> Vec<RingPoly> {
        self.basis
            .rows()
            .iter()
            .map(|r| self.parent.from_vector(r))
            .collect()
    }

    /// `F_q`-dimension; the ideal has `q^dim` elements.
    pub fn dim(&self) -> usize {
        self.basis.rank()
    }

    pub fn cardinality(&self) -> num_bigint::BigUint {
        num_bigint::BigUint::from(self.parent.field().order()).pow(self.dim() as u32)
    }

    pub fn cardinality_u64(&self) -> Option<u64> {
        checked_pow(self.parent.field().order(), self.dim())
    }

    pub fn contains(&self, f: &RingPoly) -> bool {
        let f = self.parent.reduce(f);
        self.basis.contains(self.parent.field(), &self.parent.to_vector(&f))
    }

    pub fn is_subset_of(&self, other: &IdealSet) -> bool {
        self.basis.is_subspace_of(self.parent.field(), &other.basis)
    }

    /// Every element, each once, zero first.
    pub fn elements(&self, cap: u64) -> Result<impl Iterator<Item = RingPoly> + '_> {
        match self.cardinality_u64() {
            Some(c) if c <= cap => {}
            _ => {
                return Err(Error::cap(
                    "ideal enumeration",
                    format!("{}^{}", self.parent.field().order(), self.dim()),
                    cap,
                ))
            }
        }
        Ok(self
            .basis
            .span_elements(self.parent.field())
            .map(|v| self.parent.from_vector(&v)))
    }
}
