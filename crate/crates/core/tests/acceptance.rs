//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::HashSet;
use std::process::Command;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

use ringcodes::analysis::{augmentation_check, factorization_witness};
use ringcodes::cli::parse_ring_descriptor;
use ringcodes::code::{cardinality_formula_check, free_rank_check, two_generator_build, CyclicCode};
use ringcodes::galois::{gr_basis_check, GaloisRingCtx};
use ringcodes::poly::{divides_monic, QuotientCtx, RingPoly};
use ringcodes::text::{format_poly, parse_poly};
use ringcodes::zmod::hensel_lift_root;
use ringcodes::{Caps, FieldCtx, RingElem, RingSpec};

type Check = Result<String, String>;

/// Large enough for `S_{2,6}` and `T_{(2,2),6}` (2^24 elements).
const LOCALITY_CAP: &str = "16777216";

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

struct Run {
    code: i32,
    stdout: String,
}

fn ringcodes(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ringcodes"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
    }
}

fn ringcodes_json(args: &[&str]) -> Result<(i32, Value), String> {
    let mut full = args.to_vec();
    full.push("--json");
    let run = ringcodes(&full);
    let v: Value = serde_json::from_str(run.stdout.trim())
        .map_err(|e| format!("{args:?}: bad JSON ({e}): {}", run.stdout))?;
    Ok((run.code, v))
}

fn fq(q: u64) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::of_order(q).unwrap())
}

fn ring(text: &str) -> RingSpec {
    match parse_ring_descriptor(text).unwrap() {
        ringcodes::cli::Descriptor::Ring(r) => r,
        _ => panic!("not a ring"),
    }
}

/// Every monic polynomial of degree `d` over `spec`, when `|R|^d` is small.
fn monic_polys(spec: &RingSpec, d: usize) -> Vec<RingPoly> {
    let elems: Vec<RingElem> = spec.elements(&Caps::default()).unwrap().collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; d];
    loop {
        let mut coeffs: Vec<RingElem> = idx.iter().map(|&i| elems[i].clone()).collect();
        coeffs.push(spec.one());
        out.push(RingPoly::from_coeffs(coeffs));
        let mut k = 0;
        loop {
            if k == d {
                return out;
            }
            idx[k] += 1;
            if idx[k] < elems.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

fn monic_divisors(spec: &RingSpec, n: usize) -> Vec<RingPoly> {
    let target = RingPoly::x_n_minus_1(spec, n);
    (0..=n)
        .flat_map(|d| monic_polys(spec, d))
        .filter(|h| divides_monic(spec, h, &target).unwrap())
        .collect()
}

fn criterion_1() -> Check {
    let cases = [
        ("R[i=3,q=4]", vec!["x-1;x-1", "x-(1-u^2);x-(1-u^2)"], 2),
        ("T[i=3,j=2,q=4]", vec!["x-1;x-1", "x-(1+u^2+v);x-(1+u^2+v)"], 2),
    ];
    for (ring_text, cands, distinct) in cases {
        let mut args = vec!["analyze-factor", "--ring", ring_text, "--n", "2"];
        for c in &cands {
            args.push("--cand");
            args.push(c);
        }
        let (code, v) = ringcodes_json(&args)?;
        ensure(code == 0 && v["verdict"] == "holds", format!("{ring_text}: {v}"))?;
        for cand in v["witness"]["candidates"].as_array().unwrap() {
            ensure(
                cand["product"] == "{1}*x^2 + {1}" && cand["verified"] == true,
                format!("{ring_text}: {cand}"),
            )?;
        }
        ensure(v["witness"]["distinct_verified"] == distinct, format!("{ring_text}: not distinct"))?;
    }
    // the S_3 witness as written collapses to (x-1)^2; x-(1+u1*u2) is distinct
    let s3 = RingSpec::s(3, fq(2)).unwrap();
    let p = |t: &str| parse_poly(&s3, t).unwrap();
    let as_written = p("x-(1+u1^2+u2^2+u3^2)");
    ensure(as_written == p("x-1"), "S_3 witness should collapse")?;
    let rep = factorization_witness(&s3, 2, &[vec![as_written.clone(), as_written], vec![p("x-(1+u1*u2)"); 2]]);
    ensure(rep.holds() && rep.witness.unwrap()["distinct_verified"] == 2, "S_3 distinct witness")?;
    Ok("x^2-1 has two distinct verified factorizations over R_3/F_4 and T_(3,2)/F_4".into())
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for ring_text in ["R[i=2,q=2]", "S[i=2,q=2]", "T[i=2,j=2,q=2]"] {
        let spec = ring(ring_text);
        for (n, local) in [(1, true), (2, true), (4, true), (3, false), (6, false)] {
            let ns = n.to_string();
            let (code, v) = ringcodes_json(&[
                "analyze-local",
                "--ring",
                ring_text,
                "--n",
                &ns,
                "--max-enum",
                LOCALITY_CAP,
            ])?;
            let expect_code = if local { 0 } else { 1 };
            ensure(code == expect_code, format!("{ring_text} n={n}: exit {code}, {v}"))?;
            if !local {
                // re-verify the counterexample: two non-units with a unit sum
                let ctx = QuotientCtx::new(spec.clone(), n).unwrap();
                let w = &v["witness"];
                let a = parse_poly(&spec, w["non_units"][0].as_str().unwrap()).unwrap();
                let b = parse_poly(&spec, w["non_units"][1].as_str().unwrap()).unwrap();
                let inv = parse_poly(&spec, w["sum_inverse"].as_str().unwrap()).unwrap();
                ensure(
                    ctx.inverse(&a).is_none() && ctx.inverse(&b).is_none(),
                    format!("{ring_text} n={n}: witness contains a unit"),
                )?;
                ensure(
                    ctx.mul(&ctx.add(&a, &b), &inv) == RingPoly::constant(spec.one()),
                    format!("{ring_text} n={n}: sum is not a unit"),
                )?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} locality verdicts match (local for n in 1,2,4; not local for n in 3,6)"))
}

fn criterion_3() -> Check {
    for (ring_text, gens) in [("S[i=2,q=2]", ["u1", "u2"]), ("T[i=2,j=2,q=2]", ["u", "v"])] {
        let (code, v) = ringcodes_json(&[
            "analyze-principal",
            "--ring",
            ring_text,
            "--gen",
            gens[0],
            "--gen",
            gens[1],
        ])?;
        ensure(code == 1 && v["verdict"] == "fails", format!("{ring_text}: {v}"))?;
        ensure(v["witness"]["ideal_size"] == "8", format!("{ring_text}: ideal size {v}"))?;
        ensure(v["witness"]["generator"].is_null(), "unexpected generator")?;
    }
    Ok("(u1,u2) in S_2/F_2 and (u,v) in T_(2,2)/F_2 are not principal (8 candidates each)".into())
}

fn criterion_4() -> Check {
    let caps = Caps::default();
    let mut count = 0;
    for (spec, n) in [
        (RingSpec::field_as_ring(fq(2)), 3),
        (RingSpec::field_as_ring(fq(2)), 7),
        (RingSpec::r(2, fq(2)).unwrap(), 3),
    ] {
        let ctx = QuotientCtx::new(spec.clone(), n).unwrap();
        let divisors = monic_divisors(&spec, n);
        ensure(divisors.len() >= 2, "too few divisors")?;
        for h in &divisors {
            let r = h.degree().unwrap();
            let label = format!("{} n={n} h={}", spec.descriptor(), format_poly(&spec, h));
            let rank = free_rank_check(&ctx, h, &caps).map_err(|e| format!("{label}: {e}"))?;
            ensure(rank.holds(), format!("{label}: {rank:?}"))?;
            let w = rank.witness.unwrap();
            ensure(w["rank"] == n - r, format!("{label}: rank"))?;
            let card = cardinality_formula_check(&ctx, h, &caps).map_err(|e| format!("{label}: {e}"))?;
            ensure(card.holds(), format!("{label}: {card:?}"))?;
            let expected = (spec.element_count().unwrap() as u128).pow((n - r) as u32);
            let code = CyclicCode::build(&ctx, std::slice::from_ref(h), &caps).unwrap();
            let enumerated = code.codewords(&caps).unwrap().count() as u128;
            ensure(enumerated == expected, format!("{label}: {enumerated} != {expected}"))?;
            ensure(
                card.witness.unwrap()["enumerated_cardinality"] == enumerated as u64,
                format!("{label}: multiples oracle"),
            )?;
            count += 1;
        }
    }
    Ok(format!("{count} monic divisors: rank n-deg h and |C| = |R|^(n-deg h)"))
}

fn random_poly(ctx: &QuotientCtx, rng: &mut StdRng) -> RingPoly {
    let q = ctx.field().order();
    let v: Vec<_> = (0..ctx.dim())
        .map(|_| {
            // sparse and dense generators both occur
            if rng.gen_bool(0.5) {
                ctx.field().from_index(0).unwrap()
            } else {
                ctx.field().from_index(rng.gen_range(0..q) as u32).unwrap()
            }
        })
        .collect();
    ctx.from_vector(&v)
}

fn code_fixtures() -> Vec<QuotientCtx> {
    vec![
        QuotientCtx::new(RingSpec::r(2, fq(2)).unwrap(), 3).unwrap(),
        QuotientCtx::new(RingSpec::s(2, fq(2)).unwrap(), 2).unwrap(),
        QuotientCtx::new(RingSpec::t(2, 2, fq(2)).unwrap(), 3).unwrap(),
        QuotientCtx::new(RingSpec::r(3, fq(4)).unwrap(), 2).unwrap(),
        QuotientCtx::new(RingSpec::r(2, fq(3)).unwrap(), 3).unwrap(),
    ]
}

fn criterion_5() -> Check {
    let caps = Caps::default();
    let mut rng = StdRng::seed_from_u64(33);
    let mut built = 0;
    for ctx in code_fixtures() {
        let full_dim = ctx.dim();
        let bound = num_bigint::BigUint::from(ctx.field().order()).pow(full_dim as u32);
        for _ in 0..100 {
            let k = rng.gen_range(1..=3);
            let gens: Vec<RingPoly> = (0..k).map(|_| random_poly(&ctx, &mut rng)).collect();
            let code = CyclicCode::build(&ctx, &gens, &caps).unwrap();
            ensure(code.fq_dim() <= full_dim && code.cardinality() <= bound, format!("{}: bound", ctx.descriptor()))?;
            built += 1;
        }
        let one = RingPoly::constant(ctx.ring().one());
        let full = CyclicCode::build(&ctx, &[one], &caps).unwrap();
        ensure(full.cardinality() == bound, format!("{}: full ring", ctx.descriptor()))?;
    }
    Ok(format!("{built} random codes satisfy |C| <= q^(s n); (1) attains it"))
}

fn criterion_6() -> Check {
    let (code, v) = ringcodes_json(&[
        "code-twogen", "--ring", "R[i=2,q=2]", "--n", "2", "--g", "x+1", "--p", "0", "--a", "1",
    ])?;
    ensure(code == 0 && v["verdict"] == "holds", format!("main instance: {v}"))?;
    ensure(
        v["witness"]["cardinality"] == "8" && v["witness"]["enumerated_cardinality"] == 8,
        format!("main instance: {v}"),
    )?;

    let spec = RingSpec::r(2, fq(2)).unwrap();
    let caps = Caps::default();
    let mut passed = 0;
    let mut failed = Vec::new();
    let (mut unconditioned_pass, mut unconditioned_fail) = (0, 0);
    for n in [2usize, 3, 4] {
        let ctx = QuotientCtx::new(spec.clone(), n).unwrap();
        let field_divisors: Vec<RingPoly> = monic_divisors(&RingSpec::field_as_ring(fq(2)), n)
            .iter()
            .map(|h| parse_poly(&spec, &format_poly(&RingSpec::field_as_ring(fq(2)), h)).unwrap())
            .collect();
        for g in &field_divisors {
            for a in field_divisors.iter().filter(|a| divides_monic(&spec, a, g).unwrap()) {
                let t = a.degree().unwrap();
                let mut ps = vec![RingPoly::zero()];
                if t >= 1 {
                    ps.push(parse_poly(&spec, "1").unwrap());
                    ps.push(parse_poly(&spec, "u").unwrap());
                }
                if t >= 2 {
                    ps.push(parse_poly(&spec, "x+1").unwrap());
                }
                for p in &ps {
                    let label = format!(
                        "n={n} g={} a={} p={}",
                        format_poly(&spec, g),
                        format_poly(&spec, a),
                        format_poly(&spec, p)
                    );
                    if label == "n=2 g={1}*x + {1} a={1} p=0" {
                        continue;
                    }
                    let (_, rep) = two_generator_build(&ctx, g, p, a, &caps).map_err(|e| format!("{label}: {e}"))?;
                    let condition = rep.witness.as_ref().unwrap()["a_divides_p_cofactor"] == true;
                    match (condition, rep.holds()) {
                        (true, true) => passed += 1,
                        (true, false) => failed.push(label),
                        (false, true) => unconditioned_pass += 1,
                        (false, false) => unconditioned_fail += 1,
                    }
                }
            }
        }
    }
    ensure(failed.is_empty(), format!("formula failures: {failed:?}"))?;
    ensure(passed >= 3, format!("only {passed} further triples"))?;
    Ok(format!(
        "|C| = 8 by enumeration; {passed} further triples with a | p(x^n-1)/g pass; \
         without that condition {unconditioned_pass} pass, {unconditioned_fail} fail"
    ))
}

/// Oracle distance: minimum weight over all multiples `f·g`.
fn distance_by_multiples(ctx: &QuotientCtx, g: &RingPoly) -> usize {
    let caps = Caps::default();
    ctx.elements(&caps)
        .unwrap()
        .map(|f| ctx.mul(&f, g))
        .filter(|c| !c.is_zero())
        .map(|c| c.weight())
        .min()
        .unwrap()
}

fn criterion_7() -> Check {
    for (g1, d1, d) in [("1", 1, 2), ("1+x", 2, 4)] {
        let (code, v) = ringcodes_json(&[
            "prop42", "--ring", "Fq[p=2,r=1]", "--p", "2", "--r", "2", "--a", "1", "--g1", g1,
        ])?;
        ensure(code == 0 && v["verdict"] == "holds", format!("g1={g1}: {v}"))?;
        ensure(v["witness"]["d_C1"] == d1 && v["witness"]["d_C"] == d, format!("g1={g1}: {v}"))?;
    }

    // sweep: every verdict agrees with an independent distance oracle, and
    // every failure names a codeword of C whose weight breaks doubling
    let caps = Caps::default();
    let mut holds = 0;
    let mut fails = 0;
    let sweeps: Vec<(RingSpec, u64, u32, Vec<&str>)> = vec![
        (RingSpec::field_as_ring(fq(2)), 2, 2, vec!["1", "1+x"]),
        (RingSpec::field_as_ring(fq(2)), 2, 3, vec!["1", "1+x", "1+x^2", "1+x+x^2+x^3", "1+x+x^2"]),
        (RingSpec::field_as_ring(fq(3)), 3, 2, vec!["1", "x-1", "x^2+x+1", "x+1"]),
        (RingSpec::r(2, fq(2)).unwrap(), 2, 2, vec!["1", "1+x", "u", "u+x"]),
    ];
    for (spec, p, r, g1s) in sweeps {
        for a in 1..p {
            for g1_text in &g1s {
                let g1 = parse_poly(&spec, g1_text).unwrap();
                let Ok(rep) = ringcodes::code::distance_doubling_check(&spec, p, r, a, &g1, &caps) else {
                    continue;
                };
                let w = rep.witness.clone().unwrap();
                let short = QuotientCtx::new(spec.clone(), p.pow(r - 1) as usize).unwrap();
                let long = QuotientCtx::new(spec.clone(), p.pow(r) as usize).unwrap();
                let g = parse_poly(&spec, w["g"].as_str().unwrap()).unwrap();
                let d1 = distance_by_multiples(&short, &short.reduce(&g1));
                let d = distance_by_multiples(&long, &g);
                let label = format!("{} p={p} r={r} a={a} g1={g1_text}", spec.descriptor());
                ensure(w["d_C1"] == d1 && w["d_C"] == d, format!("{label}: oracle mismatch"))?;
                ensure(rep.holds() == (d == 2 * d1), format!("{label}: verdict"))?;
                if rep.holds() {
                    holds += 1;
                } else {
                    let cex = &w["counterexample"];
                    let word = parse_poly(&spec, cex["codeword"].as_str().ok_or(format!("{label}: no counterexample"))?).unwrap();
                    let code = CyclicCode::build(&long, std::slice::from_ref(&g), &caps).unwrap();
                    ensure(code.contains(&word).unwrap(), format!("{label}: counterexample not in C"))?;
                    ensure(word.weight() != 2 * d1 && cex["weight"] == word.weight(), format!("{label}: weight"))?;
                    fails += 1;
                }
            }
        }
    }
    Ok(format!(
        "d(C) = 2 d(C1) for g1 in {{1, 1+x}}; sweep: {holds} hold, {fails} fail with verified counterexamples"
    ))
}

fn criterion_8() -> Check {
    let gr = GaloisRingCtx::construct(2, 2, 2).unwrap();
    let rep = gr_basis_check(&gr, &Caps::default()).unwrap();
    let w = rep.witness.clone().unwrap();
    ensure(rep.holds() && w["representations"] == 16 && w["element_count"] == 16, format!("{rep:?}"))?;
    let (code, v) = ringcodes_json(&["gr-build", "--ring", "GR[p=2,r=2,n=2]"])?;
    ensure(code == 0 && v["witness"]["representations"] == 16, format!("cli: {v}"))?;

    let sigma = hensel_lift_root(7, 1, &[-2, 0, 1], 3).map_err(|e| e.to_string())?;
    ensure(sigma == 10, format!("sigma = {sigma}"))?;
    ensure((sigma * sigma) % 49 == 2 && sigma % 7 == 3, "postcondition")?;
    let (code, v) = ringcodes_json(&["hensel", "--p", "7", "--coeffs=-2,0,1", "--rho", "3"])?;
    ensure(code == 0 && v["witness"]["sigma"] == 10, format!("cli: {v}"))?;
    Ok("GR(4,2) has 16 unique theta-representations; 3 lifts to 10 mod 49".into())
}

/// `a` is a unit iff some power `a^k` (k ≥ 1) equals 1.
fn unit_by_powers(spec: &RingSpec, a: &RingElem) -> bool {
    let one = spec.one();
    let mut seen = HashSet::new();
    let mut p = a.clone();
    loop {
        if p == one {
            return true;
        }
        if !seen.insert(p.clone()) {
            return false;
        }
        p = spec.mul(&p, a);
    }
}

fn criterion_9() -> Check {
    let caps = Caps::default();
    // unit predicate against brute force
    let specs = vec![
        RingSpec::r(2, fq(2)).unwrap(),
        RingSpec::r(3, fq(4)).unwrap(),
        RingSpec::r(4, fq(3)).unwrap(),
        RingSpec::r(8, fq(4)).unwrap(),
        RingSpec::s(2, fq(2)).unwrap(),
        RingSpec::s(3, fq(3)).unwrap(),
        RingSpec::s(4, fq(2)).unwrap(),
        RingSpec::t(2, 2, fq(2)).unwrap(),
        RingSpec::t(3, 2, fq(4)).unwrap(),
        RingSpec::t(4, 4, fq(2)).unwrap(),
        RingSpec::field_as_ring(fq(16)),
    ];
    let mut elements_checked = 0u64;
    for spec in &specs {
        let count = spec.element_count().unwrap();
        ensure(count <= 1 << 16, "fixture too large")?;
        let els: Vec<RingElem> = spec.elements(&caps).unwrap().collect();
        let mut units = 0u64;
        for a in &els {
            let brute = if count <= 1 << 10 {
                els.iter().any(|b| spec.mul(a, b) == spec.one())
            } else {
                unit_by_powers(spec, a)
            };
            ensure(spec.is_unit(a) == brute, format!("{}: {}", spec.descriptor(), spec.format(a)))?;
            units += brute as u64;
        }
        let q = spec.field().order();
        ensure(units == (q - 1) * count / q, format!("{}: unit count", spec.descriptor()))?;
        elements_checked += count;
    }
    // quotient-ring unit predicate against brute-force inverse search
    for (spec, n) in [
        (RingSpec::r(2, fq(2)).unwrap(), 3),
        (RingSpec::s(2, fq(2)).unwrap(), 2),
        (RingSpec::t(2, 2, fq(2)).unwrap(), 2),
        (RingSpec::field_as_ring(fq(3)), 4),
    ] {
        let ctx = QuotientCtx::new(spec.clone(), n).unwrap();
        let els: Vec<RingPoly> = ctx.elements(&caps).unwrap().collect();
        let one = RingPoly::constant(spec.one());
        for a in &els {
            let brute = els.iter().any(|b| ctx.mul(a, b) == one);
            ensure(ctx.is_unit(a) == brute, format!("{}: {}", ctx.descriptor(), format_poly(&spec, a)))?;
        }
        elements_checked += els.len() as u64;
    }

    // ideal closure of built codes
    let mut rng = StdRng::seed_from_u64(9);
    let mut codes = 0;
    for ctx in code_fixtures() {
        let spec = ctx.ring().clone();
        for _ in 0..20 {
            let g = random_poly(&ctx, &mut rng);
            let code = CyclicCode::build(&ctx, &[g], &caps).unwrap();
            if code.ideal().cardinality_u64().is_none_or(|c| c > 1 << 12) {
                continue;
            }
            for c in code.codewords(&caps).unwrap() {
                ensure(code.contains(&ctx.cyclic_shift(&c)).unwrap(), "shift closure")?;
                for b in spec.basis() {
                    ensure(code.contains(&ctx.scale_monomial(b, &c)).unwrap(), "monomial closure")?;
                }
            }
            codes += 1;
        }
    }

    // augmentation homomorphism
    for (spec, n) in [
        (RingSpec::r(2, fq(2)).unwrap(), 3),
        (RingSpec::s(2, fq(2)).unwrap(), 2),
        (RingSpec::t(2, 2, fq(2)).unwrap(), 2),
        (RingSpec::r(2, fq(2)).unwrap(), 5),
        (RingSpec::r(3, fq(4)).unwrap(), 4),
    ] {
        let ctx = QuotientCtx::new(spec.clone(), n).unwrap();
        let rep = augmentation_check(&ctx, &caps).unwrap();
        ensure(rep.holds(), format!("{}: {rep:?}", ctx.descriptor()))?;
    }
    Ok(format!(
        "0 violations: units over {elements_checked} elements, closure of {codes} codes, augmentation on 5 contexts"
    ))
}

fn check_schema(v: &Value) -> Result<(), String> {
    let obj = v.as_object().ok_or("report is not an object")?;
    let keys: HashSet<&str> = obj.keys().map(String::as_str).collect();
    let expected: HashSet<&str> = ["claim", "params", "verdict", "witness", "deviations"].into();
    ensure(keys == expected, format!("keys {keys:?}"))?;
    ensure(obj["claim"].is_string(), "claim")?;
    ensure(obj["params"].is_object(), "params")?;
    ensure(
        matches!(obj["verdict"].as_str(), Some("holds" | "fails" | "error")),
        "verdict",
    )?;
    ensure(obj["witness"].is_object() || obj["witness"].is_null(), "witness")?;
    ensure(
        obj["deviations"].as_array().is_some_and(|d| d.iter().all(Value::is_string)),
        "deviations",
    )
}

fn criterion_10() -> Check {
    let fixtures: Vec<(Vec<&str>, i32)> = vec![
        (vec!["ring-info", "--ring", "R[i=3,q=4]", "--elem", "1+u"], 0),
        (vec!["ring-info", "--ring", "S[i=2,q=2]"], 0),
        (vec!["ring-info", "--ring", "GR[p=2,r=2,n=2]"], 0),
        (vec!["code-build", "--ring", "R[i=2,q=2]", "--n", "3", "--gen", "x+1"], 0),
        (vec!["code-rank", "--ring", "R[i=2,q=2]", "--n", "3", "--h", "x+1"], 0),
        (vec!["code-rank", "--ring", "Fq[p=2,r=1]", "--n", "3", "--h", "x^2+1"], 2),
        (vec!["code-card", "--ring", "Fq[p=2,r=2]", "--n", "3", "--h", "x-1"], 0),
        (vec!["code-distance", "--ring", "Fq[p=2,r=1]", "--n", "4", "--gen", "{1}*x^3+{1}*x^2+{1}*x+{1}"], 0),
        (vec!["code-distance", "--ring", "Fq[p=2,r=1]", "--n", "4", "--gen", "0"], 2),
        (vec!["code-twogen", "--ring", "R[i=2,q=2]", "--n", "2", "--g", "x+1", "--p", "0", "--a", "1"], 0),
        (vec!["code-twogen", "--ring", "S[i=2,q=2]", "--n", "2", "--g", "x+1", "--p", "0", "--a", "1"], 2),
        (vec!["classify", "--n", "12", "--p", "2"], 0),
        (vec!["classify", "--n", "12", "--p", "4"], 2),
        (vec!["analyze-local", "--ring", "R[i=2,q=2]", "--n", "2"], 0),
        (vec!["analyze-local", "--ring", "R[i=2,q=2]", "--n", "3"], 1),
        (vec!["analyze-local", "--ring", "S[i=2,q=2]", "--n", "6"], 2),
        (vec!["analyze-principal", "--ring", "R[i=3,q=2]", "--gen", "u^2", "--gen", "u"], 0),
        (vec!["analyze-principal", "--ring", "S[i=2,q=2]", "--gen", "u1", "--gen", "u2"], 1),
        (vec!["analyze-chain", "--ring", "R[i=3,q=2]"], 0),
        (vec!["analyze-chain", "--ring", "S[i=2,q=2]"], 1),
        (vec!["analyze-factor", "--ring", "S[i=2,q=2]", "--n", "2", "--search"], 0),
        (vec!["analyze-factor", "--ring", "R[i=3,q=4]", "--n", "2", "--cand", "x-1;x-u"], 1),
        (vec!["analyze-augment", "--ring", "T[i=2,j=2,q=2]", "--n", "2"], 0),
        (vec!["gr-build", "--ring", "GR[p=3,r=2,n=1]"], 0),
        (vec!["gr-build", "--ring", "GR[p=2,r=4,n=6]"], 2),
        (vec!["hensel", "--p", "7", "--coeffs=-2,0,1", "--rho", "4"], 0),
        (vec!["prop42", "--ring", "Fq[p=2,r=1]", "--p", "2", "--r", "2", "--g1", "1+x"], 0),
        (vec!["analyze-local", "--ring", "R[i=2,q=6]", "--n", "2"], 2),
    ];
    for (args, expected) in &fixtures {
        let (code, v) = ringcodes_json(args)?;
        check_schema(&v).map_err(|e| format!("{args:?}: {e}"))?;
        ensure(code == *expected, format!("{args:?}: exit {code}, expected {expected}"))?;
        let verdict_code = match v["verdict"].as_str().unwrap() {
            "holds" => 0,
            "fails" => 1,
            _ => 2,
        };
        ensure(verdict_code == code, format!("{args:?}: exit/verdict mismatch"))?;
        let text = ringcodes(args);
        ensure(text.code == code, format!("{args:?}: text exit {}", text.code))?;
        let first = text.stdout.lines().next().unwrap_or("");
        ensure(
            first.ends_with(v["verdict"].as_str().unwrap()),
            format!("{args:?}: text verdict {first:?}"),
        )?;
        // ring descriptors and polynomial witnesses round-trip
        if let Some(r) = v["params"]["ring"].as_str() {
            let d = parse_ring_descriptor(r).map_err(|e| e.to_string())?;
            ensure(d.canonical() == r, format!("descriptor {r}"))?;
            let polys_in_witness = v["claim"] != "ring_info";
            if let (true, ringcodes::cli::Descriptor::Ring(spec)) = (polys_in_witness, d) {
                for key in ["fq_basis", "basis", "generators", "spanning_set"] {
                    for p in v["witness"][key].as_array().into_iter().flatten() {
                        let s = p.as_str().unwrap();
                        let reparsed = format_poly(&spec, &parse_poly(&spec, s).map_err(|e| e.to_string())?);
                        ensure(reparsed == s, format!("round trip {s} -> {reparsed}"))?;
                    }
                }
            }
        }
    }
    let usage = ringcodes(&["code-build", "--ring", "R[i=2,q=2]"]);
    ensure(usage.code == 2, "missing argument must exit 2")?;
    Ok(format!("{} fixtures: schema, exit codes, text/json agreement, round trips", fixtures.len()))
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("factorization witnesses of x^2-1", criterion_1),
        ("locality of R_n, S_n, T_n", criterion_2),
        ("non-principal ideals", criterion_3),
        ("free rank and cardinality of (h)", criterion_4),
        ("cardinality bound", criterion_5),
        ("two-generator codes", criterion_6),
        ("distance doubling", criterion_7),
        ("Galois ring and Hensel lift", criterion_8),
        ("invariant suites", criterion_9),
        ("CLI contract", criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        match check() {
            Ok(detail) => println!(
                "criterion {:>2} PASS  {name}: {detail} ({:.2?})",
                i + 1,
                start.elapsed()
            ),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
