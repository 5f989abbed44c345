//! Command-line front end. Every subcommand produces a [`Report`]; the exit
//! code is 0 when it holds, 1 when it fails and 2 on usage or cap errors.

use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::analysis;
use crate::caps::Caps;
use crate::code::{self, CyclicCode};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::galois::{gr_basis_check, GaloisRingCtx};
use crate::padic::classify_report;
use crate::poly::{QuotientCtx, RingPoly};
use crate::report::{Report, Verdict};
use crate::ring::{RingFamily, RingSpec};
use crate::text::{parse_poly, parse_ring_elem};
use crate::zmod::hensel_lift_root;

/// A parsed ring descriptor.
#[derive(Debug, Clone)]
pub enum Descriptor {
    Ring(RingSpec),
    Galois(GaloisRingCtx),
}

impl Descriptor {
    pub fn canonical(&self) -> String {
        match self {
            Descriptor::Ring(spec) => spec.descriptor(),
            Descriptor::Galois(gr) => gr.descriptor(),
        }
    }
}

fn field_of_order(q: u64) -> Result<Arc<FieldCtx>> {
    Ok(Arc::new(FieldCtx::of_order(q)?))
}

/// Parses `Fq[p=..,r=..]`, `R[i=..,q=..]`, `S[i=..,q=..]`,
/// `T[i=..,j=..,q=..]` or `GR[p=..,r=..,n=..]`.
pub fn parse_ring_descriptor(text: &str) -> Result<Descriptor> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in ring descriptor {text:?}"));
    let text_trim = text.trim();
    let open = text_trim.find('[').ok_or_else(|| bad("missing '['"))?;
    let body = text_trim[open + 1..]
        .strip_suffix(']')
        .ok_or_else(|| bad("missing ']'"))?;
    let name = &text_trim[..open];
    let mut fields: Vec<(&str, u64)> = Vec::new();
    for part in body.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        let k = k.trim();
        let v: u64 = v.trim().parse().map_err(|_| bad(&format!("bad value for {k}")))?;
        if fields.iter().any(|(seen, _)| *seen == k) {
            return Err(bad(&format!("duplicate key {k}")));
        }
        fields.push((k, v));
    }
    let take = |keys: &[&str]| -> Result<Vec<u64>> {
        if fields.len() != keys.len() {
            return Err(bad(&format!("expected keys {}", keys.join(","))));
        }
        keys.iter()
            .map(|k| {
                fields
                    .iter()
                    .find(|(name, _)| name == k)
                    .map(|&(_, v)| v)
                    .ok_or_else(|| bad(&format!("missing key {k}")))
            })
            .collect()
    };
    let usize_of = |v: u64| usize::try_from(v).map_err(|_| bad("value too large"));
    let spec = match name {
        "Fq" => {
            let v = take(&["p", "r"])?;
            let field = FieldCtx::new(v[0], usize_of(v[1])?)?;
            RingSpec::field_as_ring(Arc::new(field))
        }
        "R" => {
            let v = take(&["i", "q"])?;
            RingSpec::new(RingFamily::R { i: usize_of(v[0])? }, field_of_order(v[1])?)?
        }
        "S" => {
            let v = take(&["i", "q"])?;
            RingSpec::new(RingFamily::S { i: usize_of(v[0])? }, field_of_order(v[1])?)?
        }
        "T" => {
            let v = take(&["i", "j", "q"])?;
            RingSpec::new(
                RingFamily::T {
                    i: usize_of(v[0])?,
                    j: usize_of(v[1])?,
                },
                field_of_order(v[2])?,
            )?
        }
        "GR" => {
            let v = take(&["p", "r", "n"])?;
            let r = u32::try_from(v[1]).map_err(|_| bad("r too large"))?;
            return Ok(Descriptor::Galois(GaloisRingCtx::construct(v[0], r, usize_of(v[2])?)?));
        }
        other => return Err(bad(&format!("unknown ring family {other:?}"))),
    };
    Ok(Descriptor::Ring(spec))
}

fn parse_ring(text: &str) -> Result<RingSpec> {
    match parse_ring_descriptor(text)? {
        Descriptor::Ring(spec) => Ok(spec),
        Descriptor::Galois(_) => Err(Error::InvalidParameter(
            "this command needs one of Fq, R, S, T".into(),
        )),
    }
}

#[derive(Debug, Parser)]
#[command(name = "ringcodes", version, about = "Cyclic codes over finite nilpotent-extension rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on elements or codewords visited by exhaustive checks.
    #[arg(long, global = true)]
    pub max_enum: Option<u64>,
    /// Cap on the F_q-dimension s·n of the quotient ring.
    #[arg(long, global = true)]
    pub max_dim: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    /// Ring descriptor, e.g. R[i=2,q=2].
    #[arg(long)]
    pub ring: String,
    /// Code length.
    #[arg(long, default_value_t = 1)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe a ring, optionally with facts about one element.
    RingInfo {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        elem: Option<String>,
    },
    /// Build a cyclic code from generators.
    CodeBuild {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Free rank of the code generated by a monic divisor of x^n-1.
    CodeRank {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long)]
        h: String,
    },
    /// |C| = |R|^(n - deg h) for a monic divisor h of x^n-1.
    CodeCard {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long)]
        h: String,
    },
    /// Minimum Hamming distance.
    CodeDistance {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Two-generator code (g + u p, u a) over R_2.
    CodeTwogen {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long)]
        g: String,
        #[arg(long)]
        p: String,
        #[arg(long)]
        a: String,
    },
    /// Classify n by its base-p digits.
    Classify {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
    },
    /// Whether R[x]/(x^n-1) is local.
    AnalyzeLocal {
        #[command(flatten)]
        q: QuotientArgs,
    },
    /// Whether the ideal generated by the given elements is principal.
    AnalyzePrincipal {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
    /// Whether the ideals are totally ordered by inclusion.
    AnalyzeChain {
        #[command(flatten)]
        q: QuotientArgs,
    },
    /// Verify factorizations of x^n-1; factors separated by ';'.
    AnalyzeFactor {
        #[command(flatten)]
        q: QuotientArgs,
        #[arg(long = "cand")]
        candidates: Vec<String>,
        /// Also search all (x - (1+m))^n with m nilpotent.
        #[arg(long)]
        search: bool,
    },
    /// Augmentation homomorphism laws.
    AnalyzeAugment {
        #[command(flatten)]
        q: QuotientArgs,
    },
    /// Build a Galois ring and check its θ-basis.
    GrBuild {
        #[arg(long)]
        ring: String,
    },
    /// Lift a simple root of f from Z_{p^t} to Z_{p^(t+1)}.
    Hensel {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        t: u32,
        /// Integer coefficients of f, constant first, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        rho: u64,
    },
    /// d(C) = 2 d(C1) for C = ((x^(a p^(r-1)) - 1) g1) of length p^r.
    Prop42 {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u32,
        #[arg(long, default_value_t = 1)]
        a: u64,
        #[arg(long)]
        g1: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::RingInfo { .. } => "ring-info",
            Command::CodeBuild { .. } => "code-build",
            Command::CodeRank { .. } => "code-rank",
            Command::CodeCard { .. } => "code-card",
            Command::CodeDistance { .. } => "code-distance",
            Command::CodeTwogen { .. } => "code-twogen",
            Command::Classify { .. } => "classify",
            Command::AnalyzeLocal { .. } => "analyze-local",
            Command::AnalyzePrincipal { .. } => "analyze-principal",
            Command::AnalyzeChain { .. } => "analyze-chain",
            Command::AnalyzeFactor { .. } => "analyze-factor",
            Command::AnalyzeAugment { .. } => "analyze-augment",
            Command::GrBuild { .. } => "gr-build",
            Command::Hensel { .. } => "hensel",
            Command::Prop42 { .. } => "prop42",
        }
    }
}

fn quotient(args: &QuotientArgs) -> Result<QuotientCtx> {
    QuotientCtx::new(parse_ring(&args.ring)?, args.n)
}

fn polys(spec: &RingSpec, texts: &[String]) -> Result<Vec<RingPoly>> {
    texts.iter().map(|t| parse_poly(spec, t)).collect()
}

fn ring_info(text: &str, elem: Option<&str>) -> Result<Report> {
    let spec = match parse_ring_descriptor(text)? {
        Descriptor::Ring(spec) => spec,
        Descriptor::Galois(gr) => {
            return Ok(Report::new("ring_info")
                .param("ring", gr.descriptor())
                .verdict(true)
                .witness(json!({
                    "element_count": gr.element_count().map(|c| c.to_string()),
                    "modulus": gr.modulus(),
                    "rank": gr.rank(),
                })))
        }
    };
    let field = spec.field();
    let basis: Vec<String> = spec.basis().map(|m| spec.monomial_name(m)).collect();
    let count = num_bigint::BigUint::from(field.order()).pow(spec.dim() as u32);
    let mut witness = json!({
        "dimension": spec.dim(),
        "element_count": count.to_string(),
        "basis": basis,
        "field_modulus": field.modulus(),
        "unit_count": (num_bigint::BigUint::from(field.order() - 1)
            * num_bigint::BigUint::from(field.order()).pow(spec.dim() as u32 - 1)).to_string(),
    });
    if let Some(text) = elem {
        let a = parse_ring_elem(&spec, text)?;
        let mut info = json!({
            "element": spec.format(&a),
            "unit": spec.is_unit(&a),
            "nilpotency_index": spec.nilpotency_index(&a),
        });
        if spec.is_unit(&a) {
            info["inverse"] = json!(spec.format(&spec.inverse(&a)?));
        }
        witness["element"] = info;
    }
    Ok(Report::new("ring_info")
        .param("ring", spec.descriptor())
        .verdict(true)
        .witness(witness))
}

/// Runs one subcommand.
pub fn execute(command: &Command, caps: &Caps) -> Result<Report> {
    match command {
        Command::RingInfo { ring, elem } => ring_info(ring, elem.as_deref()),
        Command::CodeBuild { q, gens } => {
            let ctx = quotient(q)?;
            let gens = polys(ctx.ring(), gens)?;
            let code = CyclicCode::build(&ctx, &gens, caps)?;
            Ok(Report::new("code_build")
                .param("ring", ctx.ring().descriptor())
                .param("n", ctx.n())
                .verdict(true)
                .witness(code::code_summary(&code)))
        }
        Command::CodeRank { q, h } => {
            let ctx = quotient(q)?;
            let h = parse_poly(ctx.ring(), h)?;
            code::free_rank_check(&ctx, &h, caps)
        }
        Command::CodeCard { q, h } => {
            let ctx = quotient(q)?;
            let h = parse_poly(ctx.ring(), h)?;
            code::cardinality_formula_check(&ctx, &h, caps)
        }
        Command::CodeDistance { q, gens } => {
            let ctx = quotient(q)?;
            let gens = polys(ctx.ring(), gens)?;
            code::distance_report(&ctx, &gens, caps)
        }
        Command::CodeTwogen { q, g, p, a } => {
            let ctx = quotient(q)?;
            let spec = ctx.ring();
            let (g, p, a) = (parse_poly(spec, g)?, parse_poly(spec, p)?, parse_poly(spec, a)?);
            Ok(code::two_generator_build(&ctx, &g, &p, &a, caps)?.1)
        }
        Command::Classify { n, p } => classify_report(*n, *p),
        Command::AnalyzeLocal { q } => analysis::is_local(&quotient(q)?, caps),
        Command::AnalyzePrincipal { q, gens } => {
            let ctx = quotient(q)?;
            let gens = polys(ctx.ring(), gens)?;
            let ideal = analysis::ideal_span(&ctx, &gens, caps)?;
            analysis::is_principal(&ideal, &gens, caps)
        }
        Command::AnalyzeChain { q } => analysis::chain_check(&quotient(q)?, caps),
        Command::AnalyzeFactor { q, candidates, search } => {
            let spec = parse_ring(&q.ring)?;
            let mut cands = candidates
                .iter()
                .map(|c| c.split(';').map(|f| parse_poly(&spec, f)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            if *search {
                for f in analysis::search_linear_factorizations(&spec, q.n, caps)? {
                    cands.push(vec![f; q.n]);
                }
            }
            if cands.is_empty() {
                return Err(Error::InvalidParameter("give --cand or --search".into()));
            }
            Ok(analysis::factorization_witness(&spec, q.n, &cands))
        }
        Command::AnalyzeAugment { q } => analysis::augmentation_check(&quotient(q)?, caps),
        Command::GrBuild { ring } => match parse_ring_descriptor(ring)? {
            Descriptor::Galois(gr) => gr_basis_check(&gr, caps),
            Descriptor::Ring(_) => Err(Error::InvalidParameter(
                "gr-build needs a GR[p=..,r=..,n=..] descriptor".into(),
            )),
        },
        Command::Hensel { p, t, coeffs, rho } => {
            let f = coeffs
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let sigma = hensel_lift_root(*p, *t, &f, *rho)?;
            let modulus = p.pow(t + 1);
            Ok(Report::new("hensel_lift")
                .param("p", *p)
                .param("t", *t)
                .param("f", f.clone())
                .param("rho", *rho)
                .verdict(true)
                .witness(json!({ "sigma": sigma, "modulus": modulus })))
        }
        Command::Prop42 { ring, p, r, a, g1 } => {
            let spec = parse_ring(ring)?;
            let g1 = parse_poly(&spec, g1)?;
            code::distance_doubling_check(&spec, *p, *r, *a, &g1, caps)
        }
    }
}

pub fn caps_from(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(m) = cli.max_enum {
        caps = caps.with_max_enum(m);
    }
    if let Some(d) = cli.max_dim {
        caps = caps.with_max_dim(d);
    }
    caps
}

/// Report for a failed invocation.
pub fn error_report(command: &str, err: &Error) -> Report {
    let mut r = Report::new(command.replace('-', "_")).witness(json!({ "error": err.to_string() }));
    r.verdict = Verdict::Error;
    r
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Human-readable rendering of a report.
pub fn render_text(report: &Report) -> String {
    let verdict = match report.verdict {
        Verdict::Holds => "holds",
        Verdict::Fails => "fails",
        Verdict::Error => "error",
    };
    let mut out = format!("{}: {verdict}\n", report.claim);
    for (k, v) in &report.params {
        out.push_str(&format!("  {k} = {}\n", text_value(v)));
    }
    if let Some(Value::Object(w)) = &report.witness {
        for (k, v) in w {
            out.push_str(&format!("  {k}: {}\n", text_value(v)));
        }
    }
    for d in &report.deviations {
        out.push_str(&format!("  note: {d}\n"));
    }
    out
}

pub fn exit_code(report: &Report) -> i32 {
    match report.verdict {
        Verdict::Holds => 0,
        Verdict::Fails => 1,
        Verdict::Error => 2,
    }
}

/// Parses the arguments, runs the command, prints the report and returns
/// the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let caps = caps_from(&cli);
    let report = execute(&cli.command, &caps)
        .unwrap_or_else(|e| error_report(cli.command.name(), &e));
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", render_text(&report));
        if let Some(Value::Object(w)) = &report.witness {
            if let Some(err) = w.get("error") {
                eprintln!("error: {}", text_value(err));
            }
        }
    }
    exit_code(&report)
}
