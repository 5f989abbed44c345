//! Cyclic codes as ideals of `R[x]/(x^n - 1)`: construction, free rank,
//! cardinality formulas, the two-generator family over `R_2`, and Hamming
//! distance.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::caps::{checked_pow, Caps};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::ideal::IdealSet;
use crate::poly::{divides_monic, poly_add, poly_divmod_monic, poly_mul, poly_scale, QuotientCtx, RingPoly};
use crate::report::Report;
use crate::ring::{RingFamily, RingSpec};
use crate::text::format_poly;

/// A cyclic code of length `n` over `R`, held as the generators and a
/// row-reduced `F_q`-basis of the ideal they generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    generators: Vec<RingPoly>,
    ideal: IdealSet,
}

impl CyclicCode {
    /// `code_build`: generators are reduced modulo `x^n - 1` first.
    pub fn build(ctx: &QuotientCtx, generators: &[RingPoly], caps: &Caps) -> Result<Self> {
        let generators: Vec<RingPoly> = generators.iter().map(|g| ctx.reduce(g)).collect();
        let ideal = IdealSet::span(ctx, &generators, caps)?;
        Ok(CyclicCode { generators, ideal })
    }

    pub fn ctx(&self) -> &QuotientCtx {
        self.ideal.parent()
    }

    pub fn ring(&self) -> &RingSpec {
        self.ctx().ring()
    }

    pub fn generators(&self) -> &[RingPoly] {
        &self.generators
    }

    pub fn ideal(&self) -> &IdealSet {
        &self.ideal
    }

    /// `F_q`-dimension of the code.
    pub fn fq_dim(&self) -> usize {
        self.ideal.dim()
    }

    pub fn cardinality(&self) -> num_bigint::BigUint {
        self.ideal.cardinality()
    }

    pub fn contains(&self, c: &RingPoly) -> Result<bool> {
        if !self.ctx().contains(c) {
            return Err(Error::Precondition(format!(
                "codeword degree must be below n = {}",
                self.ctx().n()
            )));
        }
        Ok(self.ideal.contains(c))
    }

    fn check_enumerable(&self, caps: &Caps) -> Result<()> {
        match self.ideal.cardinality_u64() {
            Some(c) if c <= caps.max_codewords => Ok(()),
            _ => Err(Error::cap(
                "codeword enumeration",
                format!("{}^{}", self.ctx().field().order(), self.fq_dim()),
                caps.max_codewords,
            )),
        }
    }

    /// All `q^dim` codewords, zero first.
    pub fn codewords(&self, caps: &Caps) -> Result<impl Iterator<Item = RingPoly> + '_> {
        self.check_enumerable(caps)?;
        self.ideal.elements(caps.max_codewords)
    }

    /// Minimum Hamming weight over nonzero codewords, with a codeword
    /// attaining it.
    pub fn min_distance(&self, caps: &Caps) -> Result<(usize, RingPoly)> {
        self.check_enumerable(caps)?;
        if self.fq_dim() == 0 {
            return Err(Error::Domain("distance undefined for the zero code".into()));
        }
        let ctx = self.ctx();
        let s = ctx.ring().dim();
        let weight = |v: &[FieldElem]| {
            v.chunks(s)
                .filter(|block| block.iter().any(|c| !c.is_zero()))
                .count()
        };
        let mut best: Option<(usize, Vec<FieldElem>)> = None;
        for v in self.ideal.echelon().span_elements(ctx.field()).skip(1) {
            let w = weight(&v);
            if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                best = Some((w, v));
                if w == 1 {
                    break;
                }
            }
        }
        let (w, v) = best.expect("nonzero code has a nonzero codeword");
        Ok((w, ctx.from_vector(&v)))
    }
}

/// Hamming weight of a codeword: number of nonzero coordinates.
pub fn hamming_weight(c: &RingPoly) -> usize {
    c.weight()
}

fn format_all(spec: &RingSpec, polys: &[RingPoly]) -> Vec<String> {
    polys.iter().map(|p| format_poly(spec, p)).collect()
}

fn require_monic_divisor(ctx: &QuotientCtx, h: &RingPoly) -> Result<usize> {
    let spec = ctx.ring();
    if !h.is_monic(spec) {
        return Err(Error::Precondition(format!(
            "{} is not monic",
            format_poly(spec, h)
        )));
    }
    let x_n_1 = RingPoly::x_n_minus_1(spec, ctx.n());
    if !divides_monic(spec, h, &x_n_1)? {
        return Err(Error::Precondition(format!(
            "{} does not divide x^{}-1 over {}",
            format_poly(spec, h),
            ctx.n(),
            spec.descriptor()
        )));
    }
    Ok(h.degree().expect("monic"))
}

/// The set `{f·g : f ∈ R[x]/(x^n-1)}` enumerated directly, when
/// `|R[x]/(x^n-1)| ≤ cap`. Independent of the `F_q`-basis route.
fn multiples_by_enumeration(ctx: &QuotientCtx, g: &RingPoly, cap: u64) -> Option<usize> {
    let caps = Caps::default().with_max_enum(cap);
    let elements = ctx.elements(&caps).ok()?;
    let g = ctx.reduce(g);
    let set: HashSet<RingPoly> = elements.map(|f| ctx.mul(&f, &g)).collect();
    Some(set.len())
}

fn span_rank(ctx: &QuotientCtx, polys: &[RingPoly]) -> usize {
    let mut basis = crate::matrix::EchelonBasis::new(ctx.dim());
    for p in polys {
        basis.insert(ctx.field(), ctx.to_vector(&ctx.reduce(p)));
    }
    basis.rank()
}

/// Free rank of `C = (h)` for monic `h | x^n - 1`: `{h, xh, ..., x^(n-r-1)h}`
/// must be `R`-linearly independent and span `C`, giving rank `n - r`.
///
/// Independence over `R` is equivalent to the `F_q`-span of
/// `b·x^k·h` (`k < n - r`) having dimension `s·(n - r)`.
pub fn free_rank_check(ctx: &QuotientCtx, h: &RingPoly, caps: &Caps) -> Result<Report> {
    let r = require_monic_divisor(ctx, h)?;
    let spec = ctx.ring();
    let n = ctx.n();
    let s = spec.dim();
    let code = CyclicCode::build(ctx, std::slice::from_ref(h), caps)?;
    let module_basis: Vec<RingPoly> = (0..n - r)
        .map(|k| ctx.reduce(&poly_mul(spec, &RingPoly::x_pow(spec, k), h)))
        .collect();
    let scaled: Vec<RingPoly> = module_basis
        .iter()
        .flat_map(|p| spec.basis().map(move |b| ctx.scale_monomial(b, p)))
        .collect();
    let basis_rank = span_rank(ctx, &scaled);
    let independent = basis_rank == s * (n - r);
    let spans = basis_rank == code.fq_dim();

    Ok(Report::new("free_rank")
        .param("ring", spec.descriptor())
        .param("n", n)
        .param("h", format_poly(spec, h))
        .verdict(independent && spans)
        .witness(json!({
            "rank": n - r,
            "basis": format_all(spec, &module_basis),
            "fq_dimension": code.fq_dim(),
            "expected_fq_dimension": s * (n - r),
            "independent_over_ring": independent,
            "spans_code": spans,
        })))
}

/// `|C| = |R|^(n - deg h)` for `C = (h)`, monic `h | x^n - 1`.
///
/// Compares the basis-rank cardinality against the formula and, when the
/// quotient ring has at most `caps.max_enum` elements, against the number of
/// distinct multiples `f·h` found by direct enumeration.
pub fn cardinality_formula_check(ctx: &QuotientCtx, h: &RingPoly, caps: &Caps) -> Result<Report> {
    let r = require_monic_divisor(ctx, h)?;
    let spec = ctx.ring();
    let n = ctx.n();
    let code = CyclicCode::build(ctx, std::slice::from_ref(h), caps)?;
    let expected_exp = spec.dim() * (n - r);
    let formula_holds = code.fq_dim() == expected_exp;
    let enumerated = multiples_by_enumeration(ctx, h, caps.max_enum);
    let enumeration_agrees = enumerated.is_none_or(|count| {
        checked_pow(ctx.field().order(), code.fq_dim()) == Some(count as u64)
    });
    let ring_order = num_bigint::BigUint::from(ctx.field().order()).pow(spec.dim() as u32);

    Ok(Report::new("cardinality_formula")
        .param("ring", spec.descriptor())
        .param("n", n)
        .param("h", format_poly(spec, h))
        .verdict(formula_holds && enumeration_agrees)
        .witness(json!({
            "cardinality": code.cardinality().to_string(),
            "formula": format!("{}^{}", ring_order, n - r),
            "formula_value": ring_order.pow((n - r) as u32).to_string(),
            "fq_dimension": code.fq_dim(),
            "enumerated_cardinality": enumerated,
        })))
}

/// Two-generator codes `C = (g + u·p, u·a)` over `R_2` with monic
/// `a | g | x^n - 1` and `deg p < deg a`; checks `|C| = q^(2n - r - t)` and
/// that `{x^k(g + u·p)}_{k<n-r} ∪ {x^k·u·a}_{k<n-t}` is an `F_q`-basis.
pub fn two_generator_build(
    ctx: &QuotientCtx,
    g: &RingPoly,
    p: &RingPoly,
    a: &RingPoly,
    caps: &Caps,
) -> Result<(CyclicCode, Report)> {
    let spec = ctx.ring();
    if spec.family() != (RingFamily::R { i: 2 }) {
        return Err(Error::Precondition(format!(
            "two-generator codes need the ring R_2, got {}",
            spec.descriptor()
        )));
    }
    let n = ctx.n();
    let r = require_monic_divisor(ctx, g)?;
    if !a.is_monic(spec) || !divides_monic(spec, a, g)? {
        return Err(Error::Precondition(format!(
            "a = {} must be monic and divide g = {}",
            format_poly(spec, a),
            format_poly(spec, g)
        )));
    }
    let t = a.degree().expect("monic");
    if p.degree().is_some_and(|dp| dp >= t) {
        return Err(Error::Precondition(format!(
            "deg p must be below deg a = {t}"
        )));
    }
    // the count also needs a | p·(x^n - 1)/g; reported, not required
    let (cofactor, _) = poly_divmod_monic(spec, &RingPoly::x_n_minus_1(spec, n), g)?;
    let cofactor_condition = divides_monic(spec, a, &poly_mul(spec, p, &cofactor))?;
    let u = spec
        .variables()
        .into_iter()
        .next()
        .map(|(_, value)| value)
        .expect("R_2 has the variable u");

    let first = ctx.reduce(&poly_add(spec, g, &poly_scale(spec, &u, p)));
    let second = ctx.reduce(&poly_scale(spec, &u, a));
    let code = CyclicCode::build(ctx, &[first.clone(), second.clone()], caps)?;

    let mut spanning = Vec::with_capacity(2 * n - r - t);
    for k in 0..n - r {
        spanning.push(ctx.mul(&RingPoly::x_pow(spec, k), &first));
    }
    for k in 0..n - t {
        spanning.push(ctx.mul(&RingPoly::x_pow(spec, k), &second));
    }
    let b_rank = span_rank(ctx, &spanning);
    let independent = b_rank == spanning.len();
    let spans = b_rank == code.fq_dim();
    let expected_exp = 2 * n - r - t;
    let formula_holds = code.fq_dim() == expected_exp;

    // independent oracle: distinct f1·c1 + f2·c2 over all pairs
    let enumerated = ctx
        .element_count()
        .filter(|&m| m.checked_mul(m).is_some_and(|pairs| pairs <= caps.max_enum))
        .map(|_| {
            let all: Vec<RingPoly> = ctx
                .elements(&Caps::default().with_max_enum(u64::MAX))
                .expect("count checked")
                .collect();
            let firsts: Vec<RingPoly> = all.iter().map(|f| ctx.mul(f, &first)).collect();
            let seconds: HashSet<RingPoly> = all.iter().map(|f| ctx.mul(f, &second)).collect();
            let mut set = HashSet::new();
            for x in &firsts {
                for y in &seconds {
                    set.insert(ctx.add(x, y));
                }
            }
            set.len()
        });
    let enumeration_agrees = enumerated.is_none_or(|count| {
        checked_pow(ctx.field().order(), code.fq_dim()) == Some(count as u64)
    });
    let q = ctx.field().order();

    let mut report = Report::new("two_generator_cardinality")
        .param("ring", spec.descriptor())
        .param("n", n)
        .param("g", format_poly(spec, g))
        .param("p", format_poly(spec, p))
        .param("a", format_poly(spec, a))
        .verdict(formula_holds && independent && spans && enumeration_agrees)
        .witness(json!({
            "generators": format_all(spec, code.generators()),
            "cardinality": code.cardinality().to_string(),
            "formula": format!("{q}^(2*{n}-{r}-{t}) = {q}^{expected_exp}"),
            "formula_value": num_bigint::BigUint::from(q).pow(expected_exp as u32).to_string(),
            "spanning_set": format_all(spec, &spanning),
            "spanning_set_size": spanning.len(),
            "spanning_set_rank": b_rank,
            "independent": independent,
            "spans_code": spans,
            "enumerated_cardinality": enumerated,
            "a_divides_p_cofactor": cofactor_condition,
        }));
    if !cofactor_condition {
        report = report.deviation(
            "a does not divide p·(x^n-1)/g; the count q^(2n-r-t) is not guaranteed without it",
        );
    }
    Ok((code, report))
}

/// `d(C)` for `C = (gens)`, as a report with a minimum-weight codeword.
pub fn distance_report(ctx: &QuotientCtx, gens: &[RingPoly], caps: &Caps) -> Result<Report> {
    let spec = ctx.ring();
    let code = CyclicCode::build(ctx, gens, caps)?;
    let (d, word) = code.min_distance(caps)?;
    Ok(Report::new("min_distance")
        .param("ring", spec.descriptor())
        .param("n", ctx.n())
        .param("generators", format_all(spec, gens))
        .verdict(true)
        .witness(json!({
            "distance": d,
            "codeword": format_poly(spec, &word),
            "cardinality": code.cardinality().to_string(),
        })))
}

/// Summary of a built code for reporting.
pub fn code_summary(code: &CyclicCode) -> Value {
    let spec = code.ring();
    json!({
        "generators": format_all(spec, code.generators()),
        "fq_dimension": code.fq_dim(),
        "cardinality": code.cardinality().to_string(),
        "ambient_dimension": code.ctx().dim(),
        "fq_basis": format_all(spec, &code.ideal().basis_polys()),
    })
}

/// Checks `d(C) = 2·d(C_1)` for `C = ((x^(a·p^(r-1)) - 1)·g_1)` of length
/// `p^r` and `C_1 = (g_1)` of length `p^(r-1)`, both by exhaustive search.
///
/// On failure the witness carries a minimum-weight codeword of `C`.
pub fn distance_doubling_check(
    ring: &RingSpec,
    p: u64,
    r: u32,
    a: u64,
    g1: &RingPoly,
    caps: &Caps,
) -> Result<Report> {
    if !crate::field::is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("r must be ≥ 1".into()));
    }
    if a == 0 || a >= p {
        return Err(Error::Precondition(format!("a = {a} must lie in 1..={}", p - 1)));
    }
    let short_len = p
        .checked_pow(r - 1)
        .ok_or_else(|| Error::InvalidParameter("p^r too large".into()))? as usize;
    let long_len = short_len * p as usize;
    let ctx1 = QuotientCtx::new(ring.clone(), short_len)?;
    let ctx = QuotientCtx::new(ring.clone(), long_len)?;
    ctx.check_dim(caps)?;

    let mut report = Report::new("distance_doubling")
        .param("ring", ring.descriptor())
        .param("p", p)
        .param("r", r)
        .param("a", a)
        .param("g1", format_poly(ring, g1));
    if ring.field().characteristic() != p {
        report = report.deviation(format!(
            "p = {p} differs from the ring characteristic {}",
            ring.field().characteristic()
        ));
    }
    let g1_short = ctx1.reduce(g1);
    if &g1_short != g1 {
        report = report.deviation(format!(
            "g1 reduced modulo x^{short_len}-1 to {}",
            format_poly(ring, &g1_short)
        ));
    }

    let c1 = CyclicCode::build(&ctx1, std::slice::from_ref(&g1_short), caps)?;
    if c1.fq_dim() == 0 {
        return Err(Error::Precondition("g1 generates the zero code".into()));
    }
    let shift = a as usize * short_len;
    let factor = RingPoly::x_n_minus_1(ring, shift);
    let g = ctx.reduce(&poly_mul(ring, &factor, &g1_short));
    let c = CyclicCode::build(&ctx, std::slice::from_ref(&g), caps)?;
    if c.fq_dim() == 0 {
        return Err(Error::Domain(format!(
            "g = {} vanishes modulo x^{long_len}-1; distance undefined",
            format_poly(ring, &g)
        )));
    }
    let (d1, w1) = c1.min_distance(caps)?;
    let (d, w) = c.min_distance(caps)?;
    let holds = d == 2 * d1;

    let mut witness = json!({
        "g": format_poly(ring, &g),
        "length": long_len,
        "short_length": short_len,
        "d_C": d,
        "d_C1": d1,
        "min_weight_codeword_C": format_poly(ring, &w),
        "min_weight_codeword_C1": format_poly(ring, &w1),
    });
    if !holds {
        witness["counterexample"] = json!({
            "codeword": format_poly(ring, &w),
            "weight": d,
            "expected": 2 * d1,
        });
    }
    Ok(report.verdict(holds).witness(witness))
}
