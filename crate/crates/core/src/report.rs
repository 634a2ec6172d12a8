//! Serialisable verification records.
//!
//! Every check in the crate reports through [`VerificationReport`]. Sweeps
//! over large parameter grids keep a detail record for every failure and for
//! a few named spot values; the total number of evaluated cases is kept in
//! `checked`.

use crate::graph::Graph;
use crate::sombor::{RadicalSum, SomborValue, ESCALATION_THRESHOLD, EXTENDED_FRACTION_BITS, HARD_EQUALITY_THRESHOLD};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "thm3.1")]
    Thm31,
    #[serde(rename = "thm3.2")]
    Thm32,
    #[serde(rename = "thm3.3")]
    Thm33,
    #[serde(rename = "thm3.4")]
    Thm34,
    #[serde(rename = "cor3.1")]
    Cor31,
    #[serde(rename = "cor3.2")]
    Cor32,
    #[serde(rename = "cor3.3")]
    Cor33,
    #[serde(rename = "prop3.1")]
    Prop31,
    #[serde(rename = "prop3.2")]
    Prop32,
    #[serde(rename = "lemma2.1")]
    Lemma21,
    #[serde(rename = "lemma2.2")]
    Lemma22,
    #[serde(rename = "lemma2.3")]
    Lemma23,
    #[serde(rename = "lemma2.4")]
    Lemma24,
    #[serde(rename = "lemma3.5")]
    Lemma35,
    #[serde(rename = "constructor-formula")]
    ConstructorFormula,
}

impl ClaimId {
    pub const ALL: [ClaimId; 15] = [
        ClaimId::Thm31,
        ClaimId::Thm32,
        ClaimId::Thm33,
        ClaimId::Thm34,
        ClaimId::Cor31,
        ClaimId::Cor32,
        ClaimId::Cor33,
        ClaimId::Prop31,
        ClaimId::Prop32,
        ClaimId::Lemma21,
        ClaimId::Lemma22,
        ClaimId::Lemma23,
        ClaimId::Lemma24,
        ClaimId::Lemma35,
        ClaimId::ConstructorFormula,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Thm31 => "thm3.1",
            ClaimId::Thm32 => "thm3.2",
            ClaimId::Thm33 => "thm3.3",
            ClaimId::Thm34 => "thm3.4",
            ClaimId::Cor31 => "cor3.1",
            ClaimId::Cor32 => "cor3.2",
            ClaimId::Cor33 => "cor3.3",
            ClaimId::Prop31 => "prop3.1",
            ClaimId::Prop32 => "prop3.2",
            ClaimId::Lemma21 => "lemma2.1",
            ClaimId::Lemma22 => "lemma2.2",
            ClaimId::Lemma23 => "lemma2.3",
            ClaimId::Lemma24 => "lemma2.4",
            ClaimId::Lemma35 => "lemma3.5",
            ClaimId::ConstructorFormula => "constructor-formula",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let valid: Vec<_> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
                format!("unknown claim {s:?}; valid ids: {}", valid.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Parameter ranges a report covers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamRange {
    pub n_min: usize,
    pub n_max: usize,
    pub k_rule: String,
}

impl ParamRange {
    pub fn new(n_min: usize, n_max: usize, k_rule: impl Into<String>) -> Self {
        ParamRange {
            n_min,
            n_max,
            k_rule: k_rule.into(),
        }
    }
}

/// A real number stored both as a 12-significant-digit decimal and as its
/// exact integer radical terms `coefficient * sqrt(radicand)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Number {
    pub decimal: String,
    pub value: f64,
    pub terms: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_pairs: Option<Vec<[usize; 2]>>,
}

impl Number {
    pub fn plain(value: f64) -> Self {
        Number {
            decimal: format_sig(value, 12),
            value,
            terms: Vec::new(),
            degree_pairs: None,
        }
    }

    pub fn exact(radicals: &RadicalSum) -> Self {
        let value = radicals.to_f64();
        Number {
            decimal: format_sig(value, 12),
            value,
            terms: radicals.terms().map(|(c, r)| [c, r as i64]).collect(),
            degree_pairs: None,
        }
    }
}

impl From<&SomborValue> for Number {
    fn from(v: &SomborValue) -> Self {
        let mut num = Number::exact(v.radicals());
        num.value = v.value;
        num.decimal = format_sig(v.value, 12);
        num.degree_pairs = v.pairs().map(|p| p.iter().map(|&(a, b)| [a, b]).collect());
        num
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeList {
    fn from(g: &Graph) -> Self {
        EdgeList {
            n: g.n(),
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetailRecord {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub label: String,
    pub expected: Option<Number>,
    pub observed: Option<Number>,
    pub gap: Option<f64>,
    pub extremal_match: Option<bool>,
    pub passed: bool,
    /// Observations outside the claim's stated scope; never affect `status`.
    #[serde(default)]
    pub informational: bool,
    #[serde(default)]
    pub representatives: Vec<EdgeList>,
}

impl DetailRecord {
    pub fn new(n: Option<usize>, k: Option<usize>, label: impl Into<String>, passed: bool) -> Self {
        DetailRecord {
            n,
            k,
            label: label.into(),
            expected: None,
            observed: None,
            gap: None,
            extremal_match: None,
            passed,
            informational: false,
            representatives: Vec::new(),
        }
    }

    pub fn at(n: usize, k: usize, label: impl Into<String>, passed: bool) -> Self {
        Self::new(Some(n), Some(k), label, passed)
    }

    pub fn values(mut self, expected: Number, observed: Number) -> Self {
        self.gap = Some(observed.value - expected.value);
        self.expected = Some(expected);
        self.observed = Some(observed);
        self
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub params: ParamRange,
    pub status: Status,
    /// Number of individual cases evaluated, detailed or not.
    pub checked: usize,
    pub details: Vec<DetailRecord>,
    pub runtime_ms: u64,
    #[serde(default)]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(claim: ClaimId, params: ParamRange) -> Self {
        VerificationReport {
            claim,
            params,
            status: Status::Pass,
            checked: 0,
            details: Vec::new(),
            runtime_ms: 0,
            notes: Vec::new(),
        }
    }

    /// Counts one evaluated case; a failing case is always kept as a detail.
    pub fn check(&mut self, passed: bool, detail: impl FnOnce() -> DetailRecord) {
        self.checked += 1;
        if !passed {
            let mut d = detail();
            d.passed = false;
            self.push(d);
        }
    }

    pub fn push(&mut self, detail: DetailRecord) {
        if !detail.passed && !detail.informational {
            self.status = Status::Fail;
        }
        self.details.push(detail);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn finish(mut self, started: Instant) -> Self {
        self.runtime_ms = started.elapsed().as_millis() as u64;
        self.status = if self.details.iter().all(|d| d.passed || d.informational) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &DetailRecord> {
        self.details.iter().filter(|d| !d.passed && !d.informational)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrecisionPolicy {
    pub base: String,
    pub escalation_threshold: f64,
    pub hard_equality_threshold: f64,
    pub extended_fraction_bits: u32,
    pub significant_digits: usize,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            base: "ieee754-binary64".into(),
            escalation_threshold: ESCALATION_THRESHOLD,
            hard_equality_threshold: HARD_EQUALITY_THRESHOLD,
            extended_fraction_bits: EXTENDED_FRACTION_BITS,
            significant_digits: 12,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub invocation: Vec<String>,
    pub reports: Vec<VerificationReport>,
    pub precision: PrecisionPolicy,
}

impl ReportDocument {
    pub fn new(invocation: Vec<String>, reports: Vec<VerificationReport>) -> Self {
        ReportDocument {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            invocation,
            reports,
            precision: PrecisionPolicy::default(),
        }
    }

    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

/// Formats `x` with `digits` significant digits in positional notation.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new leading digit (9.99.. -> 10.0..)
    let carried = s.parse::<f64>().is_ok_and(|r| r.abs() >= 10f64.powi(magnitude + 1));
    if decimals > 0 && carried {
        let d = decimals - 1;
        format!("{x:.d$}")
    } else {
        s
    }
}
