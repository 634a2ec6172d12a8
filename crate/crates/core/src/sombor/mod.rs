//! The Sombor index `SO(G) = sum over edges uv of sqrt(d(u)^2 + d(v)^2)`,
//! the scalar helpers used by its monotonicity arguments, and the numeric
//! comparison policy shared by every downstream module.
//!
//! Comparison runs in two tiers. Doubles decide whenever two values are at
//! least [`ESCALATION_THRESHOLD`] apart; closer values are first tested for
//! exact equality on their radical terms and otherwise re-evaluated in fixed
//! point with [`EXTENDED_FRACTION_BITS`] fractional bits.

mod radical;

pub use radical::RadicalSum;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::report::{ClaimId, DetailRecord, Number, ParamRange, VerificationReport};
use num_bigint::BigInt;
use num_traits::{FromPrimitive, Signed};
use std::cmp::Ordering;
use std::time::Instant;

pub const ESCALATION_THRESHOLD: f64 = 1e-6;
pub const HARD_EQUALITY_THRESHOLD: f64 = 1e-30;
pub const EXTENDED_FRACTION_BITS: u32 = 192;

/// A Sombor value: double-precision value plus its exact radical form, and
/// for graph-derived values the sorted multiset of edge degree pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct SomborValue {
    pub value: f64,
    radicals: RadicalSum,
    pairs: Option<Vec<(usize, usize)>>,
}

impl SomborValue {
    pub fn from_radicals(radicals: RadicalSum) -> Self {
        SomborValue {
            value: radicals.to_f64(),
            radicals,
            pairs: None,
        }
    }

    /// Value of a multiset of degree pairs; each pair is normalised to `a <= b`.
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Self {
        for p in &mut pairs {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        let value = pairs.iter().map(|&(a, b)| edge_weight(a, b)).sum();
        let radicals = RadicalSum::from_terms(pairs.iter().map(|&(a, b)| (1, (a * a + b * b) as u64)));
        SomborValue {
            value,
            radicals,
            pairs: Some(pairs),
        }
    }

    pub fn radicals(&self) -> &RadicalSum {
        &self.radicals
    }

    pub fn pairs(&self) -> Option<&[(usize, usize)]> {
        self.pairs.as_deref()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComparisonOutcome {
    pub ordering: Ordering,
    /// `a - b`, from the tier that decided.
    pub gap: f64,
    pub escalated: bool,
}

#[inline]
pub fn edge_weight(a: usize, b: usize) -> f64 {
    ((a * a + b * b) as f64).sqrt()
}

pub fn sombor_index(g: &Graph) -> SomborValue {
    SomborValue::from_pairs(g.edges().map(|(u, v)| (g.deg(u), g.deg(v))).collect())
}

pub fn compare(a: &SomborValue, b: &SomborValue) -> ComparisonOutcome {
    if let (Some(p), Some(q)) = (a.pairs(), b.pairs()) {
        if p == q {
            return ComparisonOutcome {
                ordering: Ordering::Equal,
                gap: 0.0,
                escalated: false,
            };
        }
    }
    compare_radicals(&a.radicals, a.value, &b.radicals, b.value)
}

/// Two-tier comparison of exact sums with known double approximations.
pub fn compare_radicals(a: &RadicalSum, a_value: f64, b: &RadicalSum, b_value: f64) -> ComparisonOutcome {
    let gap = a_value - b_value;
    if gap.abs() >= ESCALATION_THRESHOLD {
        return ComparisonOutcome {
            ordering: if gap > 0.0 { Ordering::Greater } else { Ordering::Less },
            gap,
            escalated: false,
        };
    }
    let diff = a - b;
    if diff.is_zero() {
        return ComparisonOutcome {
            ordering: Ordering::Equal,
            gap: 0.0,
            escalated: false,
        };
    }
    let fixed = diff.to_fixed(EXTENDED_FRACTION_BITS);
    let threshold = BigInt::from_f64(HARD_EQUALITY_THRESHOLD * (EXTENDED_FRACTION_BITS as f64).exp2())
        .expect("finite threshold");
    let (gap, _) = diff.to_extended(EXTENDED_FRACTION_BITS);
    let ordering = if fixed.abs() < threshold {
        Ordering::Equal
    } else if fixed.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    };
    ComparisonOutcome {
        ordering,
        gap,
        escalated: true,
    }
}

/// `sqrt(x^2 + y^2) - sqrt(x^2 + (y - r)^2)`.
pub fn g_r(r: f64, x: f64, y: f64) -> Result<f64> {
    if r.is_nan() || r <= 0.0 {
        return Err(Error::arg(format!("g_r needs r > 0, got {r}")));
    }
    Ok((x * x + y * y).sqrt() - (x * x + (y - r) * (y - r)).sqrt())
}

/// `h(x) - h(x - 1)` with `h(t) = 1 / sqrt(t^2 + a^2)`.
pub fn sigma(x: f64, a: f64) -> Result<f64> {
    if a.is_nan() || a <= 0.0 {
        return Err(Error::arg(format!("sigma needs a > 0, got {a}")));
    }
    let h = |t: f64| 1.0 / (t * t + a * a).sqrt();
    Ok(h(x) - h(x - 1.0))
}

/// Grid check that `g_r` decreases in `x` and increases in `y`, for integer
/// `1 <= x, y <= max` and `r` on half-integers in `(0, y)`.
pub fn check_lemma_2_1_grid(max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(ClaimId::Lemma21, ParamRange::new(1, max, "0 < r < y, r in 1/2 Z"));
    let g = |r: f64, x: usize, y: usize| g_r(r, x as f64, y as f64).expect("r > 0");
    for y in 1..=max {
        for r in (1..2 * y).map(|j| j as f64 / 2.0) {
            for x1 in 1..=max {
                let lo = g(r, x1, y);
                for x2 in x1 + 1..=max {
                    let hi = g(r, x2, y);
                    report.check(hi < lo, || {
                        DetailRecord::new(None, None, format!("x-decrease r={r} y={y} x1={x1} x2={x2}"), false)
                            .values(Number::plain(lo), Number::plain(hi))
                    });
                }
            }
        }
    }
    for x in 1..=max {
        for y1 in 1..=max {
            for r in (1..2 * y1).map(|j| j as f64 / 2.0) {
                let lo = g(r, x, y1);
                for y2 in y1 + 1..=max {
                    let hi = g(r, x, y2);
                    report.check(lo < hi, || {
                        DetailRecord::new(None, None, format!("y-increase r={r} x={x} y1={y1} y2={y2}"), false)
                            .values(Number::plain(lo), Number::plain(hi))
                    });
                }
            }
        }
    }
    report.finish(started)
}

/// Grid check that `sigma(x, a) < sigma(x - 1, a)` for `a` in `2..=a_max`
/// and `x` in steps of 0.1 with `1 < x < a / sqrt(2)`.
pub fn check_lemma_2_2_grid(a_max: usize) -> VerificationReport {
    let started = Instant::now();
    let mut report = VerificationReport::new(ClaimId::Lemma22, ParamRange::new(2, a_max, "0 < x-1 < x < a/sqrt(2), step 0.1"));
    for a in 2..=a_max {
        let a = a as f64;
        let upper = a / std::f64::consts::SQRT_2;
        for i in 11.. {
            let x = i as f64 / 10.0;
            if x >= upper {
                break;
            }
            let s = sigma(x, a).expect("a > 0");
            let s_prev = sigma(x - 1.0, a).expect("a > 0");
            report.check(s < s_prev, || {
                DetailRecord::new(None, None, format!("a={a} x={x}"), false)
                    .values(Number::plain(s_prev), Number::plain(s))
            });
        }
    }
    report.finish(started)
}
