//! Closed-form lower bounds on `cr(C_m × C_n)`, in exact rational arithmetic.

use std::fmt;
use std::ops::RangeInclusive;

use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Regime {
    /// `n` at or above the original threshold: `(m-2)n`.
    ExactHks,
    /// Between the improved and the original threshold: `(m-2)n`.
    ImprovedHks,
    /// `m ≥ 8`, `m ≤ n ≤ 5(m-1)/4`: `5mn/7`.
    FiveSevenths,
    /// Everything else: `(m-2)n/2`.
    HalfBound,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Regime::ExactHks => "exact_hks",
            Regime::ImprovedHks => "improved_hks",
            Regime::FiveSevenths => "five_sevenths",
            Regime::HalfBound => "half_bound",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    pub m: usize,
    pub n: usize,
    pub regime: Regime,
    #[serde(serialize_with = "ratio_str")]
    pub value: Ratio<i64>,
    /// The value is fractional, so the integer crossing number is at least
    /// its ceiling.
    pub integer_floor_applies: bool,
}

fn ratio_str<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

impl BoundResult {
    pub fn ceiling(&self) -> i64 {
        self.value.ceil().to_integer()
    }

    pub fn as_f64(&self) -> f64 {
        self.value.to_f64().unwrap_or(f64::NAN)
    }
}

fn r(x: usize) -> Ratio<i64> {
    Ratio::from_integer(x as i64)
}

fn n0(m: usize) -> Ratio<i64> {
    Ratio::new(((m + 3) * (m + 3)) as i64, 2) + 1
}

/// `(m/2)((m+3)²/2 + 1)`.
pub fn main_threshold(m: usize) -> Ratio<i64> {
    Ratio::new(m as i64, 2) * n0(m)
}

/// `(m/4 + 1/2)((m+3)²/2 + 1)`.
pub fn improved_threshold(m: usize) -> Ratio<i64> {
    (Ratio::new(m as i64, 4) + Ratio::new(1, 2)) * n0(m)
}

pub fn hks_lower_bound(m: usize, n: usize) -> Result<BoundResult, Error> {
    if m < 3 || n < m {
        return Err(Error::Precondition(format!("bounds need n >= m >= 3, got m = {m}, n = {n}")));
    }
    let (regime, value) = if r(n) >= main_threshold(m) {
        (Regime::ExactHks, r((m - 2) * n))
    } else if r(n) >= improved_threshold(m) {
        (Regime::ImprovedHks, r((m - 2) * n))
    } else if m >= 8 && 4 * n <= 5 * (m - 1) {
        (Regime::FiveSevenths, Ratio::new(5 * (m * n) as i64, 7))
    } else {
        (Regime::HalfBound, Ratio::new(((m - 2) * n) as i64, 2))
    };
    Ok(BoundResult { m, n, regime, value, integer_floor_applies: !value.is_integer() })
}

pub fn bound_table(m: usize, ns: RangeInclusive<usize>) -> Result<Vec<BoundResult>, Error> {
    ns.map(|n| hks_lower_bound(m, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thresholds() {
        assert_eq!(main_threshold(3), Ratio::new(57, 2));
        assert_eq!(improved_threshold(3), Ratio::new(95, 4));
    }
}
