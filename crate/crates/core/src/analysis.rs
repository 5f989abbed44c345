//! Structural checks on `R` and `R[x]/(x^n - 1)`: augmentation, locality,
//! principality, chains of ideals and factorizations of `x^n - 1`.
//!
//! A bare ring `R` is handled as the quotient with `n = 1`.

use std::collections::{HashMap, HashSet, VecDeque};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::ideal::IdealSet;
use crate::matrix::EchelonBasis;
use crate::poly::{poly_mul, poly_pow, poly_sub, QuotientCtx, RingPoly};
use crate::report::Report;
use crate::ring::RingSpec;
use crate::text::format_poly;

/// Element count up to which the homomorphism law is checked on all pairs.
pub const EXHAUSTIVE_PAIRS_LIMIT: u64 = 1 << 12;
const RANDOM_PAIRS: usize = 2000;
const SEED: u64 = 0x5eed;

fn random_element(ctx: &QuotientCtx, rng: &mut StdRng) -> RingPoly {
    let q = ctx.field().order();
    let v: Vec<FieldElem> = (0..ctx.dim())
        .map(|_| ctx.field().from_index(rng.gen_range(0..q) as u32).expect("below q"))
        .collect();
    ctx.from_vector(&v)
}

/// `φ(f + g) = φ(f) + φ(g)`, `φ(fg) = φ(f)φ(g)`, `φ(1) = 1` and surjectivity
/// onto `R`. All pairs when `|R_n| ≤ 2^12`, otherwise seeded random pairs.
pub fn augmentation_check(ctx: &QuotientCtx, caps: &Caps) -> Result<Report> {
    let spec = ctx.ring();
    let phi = |f: &RingPoly| ctx.augmentation(f);
    let mut violation = None;
    let mut check = |f: &RingPoly, g: &RingPoly| {
        if violation.is_some() {
            return;
        }
        let sum_ok = phi(&ctx.add(f, g)) == spec.add(&phi(f), &phi(g));
        let mul_ok = phi(&ctx.mul(f, g)) == spec.mul(&phi(f), &phi(g));
        if !(sum_ok && mul_ok) {
            violation = Some((f.clone(), g.clone()));
        }
    };

    let count = ctx.element_count();
    let exhaustive = count.is_some_and(|c| c <= EXHAUSTIVE_PAIRS_LIMIT);
    let pairs = if exhaustive {
        let all: Vec<RingPoly> = ctx.elements(caps)?.collect();
        for f in &all {
            for g in &all {
                check(f, g);
            }
        }
        all.len() * all.len()
    } else {
        ctx.check_dim(caps)?;
        let mut rng = StdRng::seed_from_u64(SEED);
        for _ in 0..RANDOM_PAIRS {
            let f = random_element(ctx, &mut rng);
            let g = random_element(ctx, &mut rng);
            check(&f, &g);
        }
        RANDOM_PAIRS
    };
    let one = RingPoly::constant(spec.one());
    let unital = phi(&one) == spec.one();
    // constants are fixed, so φ is onto R
    let surjective = match spec.element_count().filter(|&c| c <= caps.max_enum) {
        Some(_) => spec
            .elements(caps)?
            .all(|c| phi(&RingPoly::constant(c.clone())) == c),
        None => true,
    };

    let mut witness = json!({
        "pairs_checked": pairs,
        "exhaustive": exhaustive,
        "unital": unital,
        "surjective": surjective,
    });
    if let Some((f, g)) = &violation {
        witness["violation"] = json!([format_poly(spec, f), format_poly(spec, g)]);
    }
    Ok(Report::new("augmentation_homomorphism")
        .param("ring", spec.descriptor())
        .param("n", ctx.n())
        .verdict(violation.is_none() && unital && surjective)
        .witness(witness))
}

/// `ideal_span` on a quotient context.
pub fn ideal_span(ctx: &QuotientCtx, generators: &[RingPoly], caps: &Caps) -> Result<IdealSet> {
    IdealSet::span(ctx, generators, caps)
}

/// Searches the ideal for a single generator, visiting every element.
pub fn find_principal_generator(ideal: &IdealSet, caps: &Caps) -> Result<Option<RingPoly>> {
    let ctx = ideal.parent();
    ctx.element_count()
        .filter(|&c| c <= caps.max_enum)
        .ok_or_else(|| {
            Error::cap(
                "parent enumeration",
                format!("{}^{}", ctx.field().order(), ctx.dim()),
                caps.max_enum,
            )
        })?;
    for g in ideal.elements(caps.max_enum)? {
        let span = IdealSet::span(ctx, std::slice::from_ref(&g), caps)?;
        if span.dim() == ideal.dim() {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

pub fn is_principal(ideal: &IdealSet, generators: &[RingPoly], caps: &Caps) -> Result<Report> {
    let ctx = ideal.parent();
    let spec = ctx.ring();
    let found = find_principal_generator(ideal, caps)?;
    let witness = match &found {
        Some(g) => json!({
            "generator": format_poly(spec, g),
            "ideal_size": ideal.cardinality().to_string(),
        }),
        None => json!({
            "generator": null,
            "note": "no single generator",
            "candidates_checked": ideal.cardinality().to_string(),
            "ideal_size": ideal.cardinality().to_string(),
        }),
    };
    Ok(Report::new("principal_ideal")
        .param("ring", spec.descriptor())
        .param("n", ctx.n())
        .param(
            "generators",
            generators.iter().map(|g| format_poly(spec, g)).collect::<Vec<_>>(),
        )
        .verdict(found.is_some())
        .witness(witness))
}

/// All vectors of `F_q^dim`, by increasing number of nonzero coordinates.
///
/// Sparse vectors come first, so searches that succeed on sparse elements
/// exit early.
struct WeightOrdered {
    q: u32,
    dim: usize,
    weight: usize,
    support: Vec<usize>,
    values: Vec<u32>,
    done: bool,
}

impl WeightOrdered {
    fn new(q: u64, dim: usize) -> Self {
        WeightOrdered {
            q: q as u32,
            dim,
            weight: 0,
            support: Vec::new(),
            values: Vec::new(),
            done: false,
        }
    }

    fn next_values(&mut self) -> bool {
        for v in self.values.iter_mut() {
            *v += 1;
            if *v < self.q {
                return true;
            }
            *v = 1;
        }
        false
    }

    fn next_support(&mut self) -> bool {
        let w = self.support.len();
        for i in (0..w).rev() {
            if self.support[i] < self.dim - (w - i) {
                self.support[i] += 1;
                for k in i + 1..w {
                    self.support[k] = self.support[k - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    fn current(&self) -> Vec<FieldElem> {
        let mut v = vec![FieldElem::ZERO; self.dim];
        for (&pos, &val) in self.support.iter().zip(&self.values) {
            v[pos] = FieldElem::from_raw(val);
        }
        v
    }
}

impl Iterator for WeightOrdered {
    type Item = Vec<FieldElem>;

    fn next(&mut self) -> Option<Vec<FieldElem>> {
        if self.done {
            return None;
        }
        let out = self.current();
        // a wrapped odometer leaves every value at 1, ready for the next support
        if !(self.next_values() || self.next_support()) {
            self.weight += 1;
            if self.weight > self.dim {
                self.done = true;
            } else {
                self.support = (0..self.weight).collect();
                self.values = vec![1; self.weight];
            }
        }
        Some(out)
    }
}

/// Locality test: `R_n` is local iff its non-units form an ideal.
///
/// Non-units are visited in weight order while their span is accumulated;
/// if the span reaches the whole space the ring is not local. Otherwise it
/// is local iff the non-units fill their span exactly. A failing verdict
/// carries two non-units whose sum is a unit, with that unit's inverse.
pub fn is_local(ctx: &QuotientCtx, caps: &Caps) -> Result<Report> {
    let spec = ctx.ring();
    let field = ctx.field();
    let q = field.order();
    let dim = ctx.dim();
    ctx.check_dim(caps)?;
    ctx.element_count()
        .filter(|&c| c <= caps.max_enum)
        .ok_or_else(|| Error::cap("enumeration", format!("{q}^{dim}"), caps.max_enum))?;

    let mut span = EchelonBasis::new(dim);
    let mut generators: Vec<Vec<FieldElem>> = Vec::new();
    let mut non_units: u64 = 0;
    let mut visited: u64 = 0;
    let mut spans_everything = false;
    for v in WeightOrdered::new(q, dim) {
        visited += 1;
        let f = ctx.from_vector(&v);
        if ctx.is_unit(&f) {
            continue;
        }
        non_units += 1;
        if span.insert(field, v.clone()) {
            generators.push(v);
            if span.rank() == dim {
                spans_everything = true;
                break;
            }
        }
    }
    let rank = span.rank();
    let fills_span = !spans_everything && Some(non_units) == crate::caps::checked_pow(q, rank);

    let report = Report::new("local_ring")
        .param("ring", spec.descriptor())
        .param("n", ctx.n());
    if fills_span {
        // closed under addition; check absorption on generators
        let absorbs = generators.iter().all(|g| {
            let g = ctx.from_vector(g);
            ctx.fq_basis()
                .iter()
                .all(|m| span.contains(field, &ctx.to_vector(&ctx.mul(&g, m))))
        });
        let maximal: Vec<String> = generators
            .iter()
            .map(|g| format_poly(spec, &ctx.from_vector(g)))
            .collect();
        return Ok(report.verdict(absorbs).witness(json!({
            "maximal_ideal_fq_basis": maximal,
            "maximal_ideal_size": non_units.to_string(),
            "elements_checked": visited.to_string(),
        })));
    }

    // two non-units with a unit sum
    let scalars: Vec<FieldElem> = field.elements().filter(|c| !c.is_zero()).collect();
    for v in WeightOrdered::new(q, dim) {
        let b = ctx.from_vector(&v);
        if ctx.is_unit(&b) {
            continue;
        }
        for g in &generators {
            for &c in &scalars {
                let scaled: Vec<FieldElem> = g.iter().map(|&x| field.mul(c, x)).collect();
                let a = ctx.from_vector(&scaled);
                let sum = ctx.add(&a, &b);
                if let Some(inv) = ctx.inverse(&sum) {
                    return Ok(report.verdict(false).witness(json!({
                        "non_units": [format_poly(spec, &a), format_poly(spec, &b)],
                        "sum": format_poly(spec, &sum),
                        "sum_inverse": format_poly(spec, &inv),
                        "non_unit_span_rank": rank,
                        "dimension": dim,
                    })));
                }
            }
        }
    }
    Err(Error::Domain(
        "non-units are not an ideal but no unit sum was found".into(),
    ))
}

/// All ideals of `R_n`, found by closing `I + (a)` over every element `a`
/// starting from the zero ideal.
pub fn all_ideals(ctx: &QuotientCtx, caps: &Caps) -> Result<Vec<IdealSet>> {
    let elements: Vec<RingPoly> = ctx.elements(caps)?.collect();
    let zero = IdealSet::zero(ctx);
    let mut seen: HashMap<Vec<Vec<FieldElem>>, IdealSet> = HashMap::new();
    seen.insert(zero.echelon().rows().to_vec(), zero.clone());
    let mut queue = VecDeque::from([zero]);
    while let Some(ideal) = queue.pop_front() {
        let mut tried: HashSet<Vec<Vec<FieldElem>>> = HashSet::new();
        for a in &elements {
            if ideal.contains(a) {
                continue;
            }
            let mut next = ideal.clone();
            next.absorb(a);
            let key = next.echelon().rows().to_vec();
            if !tried.insert(key.clone()) || seen.contains_key(&key) {
                continue;
            }
            seen.insert(key, next.clone());
            queue.push_back(next);
        }
    }
    let mut ideals: Vec<IdealSet> = seen.into_values().collect();
    ideals.sort_by(|a, b| {
        a.dim()
            .cmp(&b.dim())
            .then_with(|| a.echelon().rows().cmp(b.echelon().rows()))
    });
    Ok(ideals)
}

fn describe_ideal(ideal: &IdealSet, caps: &Caps) -> Result<String> {
    let spec = ideal.parent().ring();
    let show = |p: &RingPoly| {
        if ideal.parent().n() == 1 {
            spec.format(p.coeff(0).unwrap_or(&spec.zero()))
        } else {
            format_poly(spec, p)
        }
    };
    if ideal.dim() == 0 {
        return Ok("0".into());
    }
    if ideal.dim() == ideal.parent().dim() {
        return Ok("(1)".into());
    }
    Ok(match find_principal_generator(ideal, caps)? {
        Some(g) => format!("({})", show(&g)),
        None => format!(
            "({})",
            ideal.basis_polys().iter().map(show).collect::<Vec<_>>().join(", ")
        ),
    })
}

/// Whether the ideals of `R_n` are totally ordered by inclusion.
pub fn chain_check(ctx: &QuotientCtx, caps: &Caps) -> Result<Report> {
    let ideals = all_ideals(ctx, caps)?;
    let mut incomparable = None;
    'outer: for (i, a) in ideals.iter().enumerate() {
        for b in &ideals[i + 1..] {
            if !a.is_subset_of(b) && !b.is_subset_of(a) {
                incomparable = Some((a.clone(), b.clone()));
                break 'outer;
            }
        }
    }
    let names = ideals
        .iter()
        .map(|i| describe_ideal(i, caps))
        .collect::<Result<Vec<_>>>()?;
    let mut witness = json!({
        "ideal_count": ideals.len(),
        "ideals": names,
    });
    match &incomparable {
        Some((a, b)) => {
            witness["incomparable"] = json!([describe_ideal(a, caps)?, describe_ideal(b, caps)?]);
        }
        None => witness["chain"] = json!(names.join(" ⊂ ")),
    }
    Ok(Report::new("chain_ring")
        .param("ring", ctx.ring().descriptor())
        .param("n", ctx.n())
        .verdict(incomparable.is_none())
        .witness(witness))
}

fn product(spec: &RingSpec, factors: &[RingPoly]) -> RingPoly {
    factors
        .iter()
        .fold(RingPoly::constant(spec.one()), |acc, f| poly_mul(spec, &acc, f))
}

fn factor_key(spec: &RingSpec, factors: &[RingPoly]) -> Vec<String> {
    let mut key: Vec<String> = factors.iter().map(|f| format_poly(spec, f)).collect();
    key.sort();
    key
}

/// Verifies each candidate list of factors multiplies to `x^n - 1` in
/// `R[x]` and counts the distinct verified factorizations.
pub fn factorization_witness(spec: &RingSpec, n: usize, candidates: &[Vec<RingPoly>]) -> Report {
    let target = RingPoly::x_n_minus_1(spec, n);
    let mut distinct: HashSet<Vec<String>> = HashSet::new();
    let mut results = Vec::new();
    let mut all_ok = !candidates.is_empty();
    for factors in candidates {
        let prod = product(spec, factors);
        let ok = prod == target;
        all_ok &= ok;
        if ok {
            distinct.insert(factor_key(spec, factors));
        }
        results.push(json!({
            "factors": factors.iter().map(|f| format_poly(spec, f)).collect::<Vec<_>>(),
            "product": format_poly(spec, &prod),
            "verified": ok,
        }));
    }
    Report::new("factorization_witness")
        .param("ring", spec.descriptor())
        .param("n", n)
        .param("target", format_poly(spec, &target))
        .verdict(all_ok)
        .witness(json!({
            "candidates": results,
            "distinct_verified": distinct.len(),
        }))
}

/// Bounded search: every `m` with zero constant term such that
/// `(x - (1 + m))^n = x^n - 1`.
pub fn search_linear_factorizations(spec: &RingSpec, n: usize, caps: &Caps) -> Result<Vec<RingPoly>> {
    let target = RingPoly::x_n_minus_1(spec, n);
    let x = RingPoly::x_pow(spec, 1);
    let mut found = Vec::new();
    for m in spec.elements(caps)? {
        if !m.constant().is_zero() {
            continue;
        }
        let root = spec.add(&spec.one(), &m);
        let factor = poly_sub(spec, &x, &RingPoly::constant(root));
        if poly_pow(spec, &factor, n) == target {
            found.push(factor);
        }
    }
    Ok(found)
}
