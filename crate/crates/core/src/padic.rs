//! Classification of a length `n` by its base-`p` digits.

use std::fmt;

use serde_json::json;

use crate::error::{Error, Result};
use crate::field::is_prime;
use crate::report::Report;

/// Note attached to every classification report: the classifier inspects
/// every digit strictly below the leading run, including the one directly
/// under it.
pub const LITERAL_READING_NOTE: &str = "zero/non-zero expansion decided by all digits strictly below the \
     leading run of equal nonzero digits (the index directly below the run is included)";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PAdicKind {
    /// Leading run of length `t`, every lower digit zero.
    ZeroExpansion(usize),
    /// Leading run of length `t`, some lower digit nonzero.
    NonZeroExpansion(usize),
    /// All digits equal and nonzero.
    FullExpansion,
}

impl fmt::Display for PAdicKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PAdicKind::ZeroExpansion(t) => write!(f, "ZeroExpansion(t={t})"),
            PAdicKind::NonZeroExpansion(t) => write!(f, "NonZeroExpansion(t={t})"),
            PAdicKind::FullExpansion => write!(f, "FullExpansion"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PAdicClass {
    pub n: u64,
    pub p: u64,
    /// Most significant digit first, no leading zero.
    pub digits: Vec<u64>,
    /// Length of the leading run of equal digits.
    pub run: usize,
    pub kind: PAdicKind,
}

/// Base-`p` digits of `n`, most significant first.
pub fn digits(n: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    while m > 0 {
        out.push(m % p);
        m /= p;
    }
    out.reverse();
    out
}

pub fn classify_p_adic(n: u64, p: u64) -> Result<PAdicClass> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be ≥ 1".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidParameter(format!("{p} is not prime")));
    }
    let digits = digits(n, p);
    let lead = digits[0];
    let run = digits.iter().take_while(|&&d| d == lead).count();
    let kind = if run == digits.len() {
        PAdicKind::FullExpansion
    } else if digits[run..].iter().all(|&d| d == 0) {
        PAdicKind::ZeroExpansion(run)
    } else {
        PAdicKind::NonZeroExpansion(run)
    };
    Ok(PAdicClass {
        n,
        p,
        digits,
        run,
        kind,
    })
}

pub fn classify_report(n: u64, p: u64) -> Result<Report> {
    let c = classify_p_adic(n, p)?;
    let digits: String = c
        .digits
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(if p > 10 { "," } else { "" });
    Ok(Report::new("p_adic_class")
        .param("n", n)
        .param("p", p)
        .verdict(true)
        .witness(json!({
            "digits": digits,
            "s": c.digits.len(),
            "t": c.run,
            "class": c.kind.to_string(),
        }))
        .deviation(LITERAL_READING_NOTE))
}
