//! Exact sums of integer multiples of square roots.
//!
//! Radicands are reduced to their square-free part, so a sum is zero exactly
//! when every coefficient is zero (square roots of distinct square-free
//! integers are linearly independent over the rationals). Signs of non-zero
//! sums are decided numerically, in fixed point when `f64` is too coarse.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

/// `sum coefficient * sqrt(radicand)` with square-free, positive radicands
/// and non-zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalSum {
    terms: BTreeMap<u64, i64>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Builds `sum c * sqrt(r)` from arbitrary `(c, r)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, u64)>) -> Self {
        let mut sum = Self::zero();
        for (c, r) in terms {
            sum.add_term(c, r);
        }
        sum
    }

    pub fn add_term(&mut self, coefficient: i64, radicand: u64) {
        if coefficient == 0 || radicand == 0 {
            return;
        }
        let (outer, free) = split_square(radicand);
        let entry = self.terms.entry(free).or_insert(0);
        *entry += coefficient * outer as i64;
        if *entry == 0 {
            self.terms.remove(&free);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(coefficient, square-free radicand)` in increasing radicand order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.terms.iter().map(|(&r, &c)| (c, r))
    }

    pub fn to_f64(&self) -> f64 {
        self.terms.iter().map(|(&r, &c)| c as f64 * (r as f64).sqrt()).sum()
    }

    /// The sum in fixed point with `frac_bits` fractional bits. Each term is
    /// truncated, so the result is within `sum |c|` units of the true value.
    pub fn to_fixed(&self, frac_bits: u32) -> BigInt {
        self.terms
            .iter()
            .map(|(&r, &c)| {
                let root = (BigUint::from(r) << (2 * frac_bits)).sqrt();
                BigInt::from_biguint(Sign::Plus, root) * c
            })
            .sum()
    }

    /// Fixed-point evaluation converted back to `f64`, plus the error bound
    /// in the same units.
    pub fn to_extended(&self, frac_bits: u32) -> (f64, f64) {
        let fixed = self.to_fixed(frac_bits);
        let scale = (frac_bits as f64).exp2();
        let value = fixed.to_f64().unwrap_or(f64::NAN) / scale;
        let bound = self.terms.values().map(|c| c.unsigned_abs() as f64).sum::<f64>() / scale;
        (value, bound)
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;

    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for (&r, &c) in &rhs.terms {
            // already square-free
            let entry = out.terms.entry(r).or_insert(0);
            *entry += c;
            if *entry == 0 {
                out.terms.remove(&r);
            }
        }
        out
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;

    fn neg(self) -> RadicalSum {
        RadicalSum {
            terms: self.terms.iter().map(|(&r, &c)| (r, -c)).collect(),
        }
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;

    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self + &(-rhs)
    }
}

/// Writes `r = outer^2 * free` with `free` square-free.
pub(crate) fn split_square(mut r: u64) -> (u64, u64) {
    let mut outer = 1;
    let mut free = 1;
    let mut p = 2;
    while p * p <= r {
        let mut e = 0;
        while r.is_multiple_of(p) {
            r /= p;
            e += 1;
        }
        outer *= p.pow(e / 2);
        if e % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (outer, free * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_free_split() {
        assert_eq!(split_square(1), (1, 1));
        assert_eq!(split_square(8), (2, 2));
        assert_eq!(split_square(50), (5, 2));
        assert_eq!(split_square(72), (6, 2));
        assert_eq!(split_square(17), (1, 17));
        assert_eq!(split_square(25), (5, 1));
    }

    #[test]
    fn equal_values_with_different_radicands_cancel() {
        // sqrt(8) + sqrt(2) = 3 sqrt(2) = sqrt(18)
        let a = RadicalSum::from_terms([(1, 8), (1, 2)]);
        let b = RadicalSum::from_terms([(1, 18)]);
        assert_eq!(a, b);
        assert!((&a - &b).is_zero());
        // 1^2 + 7^2 = 5^2 + 5^2
        assert_eq!(RadicalSum::from_terms([(1, 50)]), RadicalSum::from_terms([(5, 2)]));
    }

    #[test]
    fn fixed_point_is_accurate() {
        let s = RadicalSum::from_terms([(1, 5), (-1, 2)]);
        let (v, bound) = s.to_extended(192);
        assert!((v - (5f64.sqrt() - 2f64.sqrt())).abs() < 1e-15);
        assert!(bound < 1e-50);
    }
}
