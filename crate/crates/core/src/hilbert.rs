//! Finite Hilbert functions: validation, the forcing classifier and the
//! enumerator used by the brute-force harness.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::HilbertError;
use crate::macaulay::{growth_bound, lower_both};

/// A finite Hilbert function `h_0, h_1, ..., h_e` with trailing zeros
/// stripped, so `e` is the socle degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u64>", from = "Vec<u64>")]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    pub fn new(mut values: Vec<u64>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertFunction { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// `h_i`, zero past the socle degree.
    pub fn get(&self, i: usize) -> u64 {
        self.values.get(i).copied().unwrap_or(0)
    }

    /// Last index carrying a nonzero value. `None` for the zero function.
    pub fn socle_degree(&self) -> Option<usize> {
        self.values.len().checked_sub(1)
    }

    pub fn codimension(&self) -> u64 {
        self.get(1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// True iff `h_0 = 1`, no interior zero, and Macaulay's growth condition
    /// holds in every degree.
    pub fn is_o_sequence(&self) -> bool {
        if self.values.first() != Some(&1) {
            return false;
        }
        for i in 1..self.values.len() {
            let h = self.values[i];
            if h == 0 {
                return false;
            }
            if i >= 2 {
                let bound = growth_bound(self.values[i - 1], (i - 1) as u64).unwrap();
                if BigUint::from(h) > bound {
                    return false;
                }
            }
        }
        true
    }

    fn require_valid(&self) -> Result<(), HilbertError> {
        if self.is_o_sequence() {
            Ok(())
        } else {
            Err(HilbertError::NotAnOSequence(self.to_string()))
        }
    }

    /// Smallest `t >= 1` with `h_t <= t`. Always at most `e + 1`.
    pub fn first_drop_index(&self) -> usize {
        (1..).find(|&t| self.get(t) <= t as u64).unwrap()
    }

    /// Whether `h_{i-1}` equals `lower_both(h_i, i)`.
    pub fn wiebe_condition_at(&self, i: usize) -> Result<bool, HilbertError> {
        let e = self.socle_degree().unwrap_or(0);
        if i == 0 || i > e {
            return Err(HilbertError::IndexOutOfRange { index: i, socle_degree: e });
        }
        let lowered = lower_both(self.values[i], i as u64).unwrap();
        Ok(BigUint::from(self.values[i - 1]) == lowered)
    }

    /// Full classifier report.
    pub fn classify(&self) -> Result<Classification, HilbertError> {
        self.require_valid()?;
        let t = self.first_drop_index();
        let conditions: Vec<(usize, bool)> =
            (1..t).map(|i| (i, self.wiebe_condition_at(i).unwrap())).collect();
        let first_failure = conditions.iter().find(|(_, ok)| !ok).map(|(i, _)| *i);
        Ok(Classification { t, conditions, forces_wlp: first_failure.is_none(), first_failure })
    }

    /// True iff every artinian algebra with this Hilbert function has the
    /// Weak Lefschetz Property.
    pub fn forces_wlp(&self) -> Result<bool, HilbertError> {
        Ok(self.classify()?.forces_wlp)
    }

    /// Hilbert function of `R/(I, L)` for a WLP algebra with this Hilbert
    /// function: `1, h_1 - h_0, ..., h_{t-1} - h_{t-2}`, then zero.
    ///
    /// Differences are clamped at zero; they are nonnegative whenever the
    /// function forces the WLP.
    pub fn expected_quotient_hf(&self) -> Result<HilbertFunction, HilbertError> {
        self.require_valid()?;
        let t = self.first_drop_index();
        let mut out = vec![1];
        out.extend((1..t).map(|i| self.get(i).saturating_sub(self.get(i - 1))));
        Ok(HilbertFunction::new(out))
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for HilbertFunction {
    type Err = HilbertError;

    /// Comma-separated integers, e.g. `1,3,6,10,12,12` (a terminal `,0` is accepted).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(HilbertError::Parse("empty input".into()));
        }
        let values = s
            .split(',')
            .map(|p| p.trim().parse::<u64>().map_err(|_| HilbertError::Parse(format!("bad entry `{}`", p.trim()))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HilbertFunction::new(values))
    }
}

impl From<Vec<u64>> for HilbertFunction {
    fn from(v: Vec<u64>) -> Self {
        HilbertFunction::new(v)
    }
}

impl From<HilbertFunction> for Vec<u64> {
    fn from(h: HilbertFunction) -> Self {
        h.values
    }
}

/// Output of [`HilbertFunction::classify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub t: usize,
    /// `(i, holds)` for `i = 1..t`.
    pub conditions: Vec<(usize, bool)>,
    pub forces_wlp: bool,
    pub first_failure: Option<usize>,
}

/// Lexicographic stream of all O-sequences with `h_1 = codim`, socle degree
/// at most `max_socle_degree` and all values at most `max_value`.
pub fn enumerate_o_sequences(codim: u64, max_socle_degree: usize, max_value: u64) -> OSequences {
    let stack = if codim >= 1 && codim <= max_value && max_socle_degree >= 1 {
        vec![vec![1, codim]]
    } else {
        Vec::new()
    };
    OSequences { stack, max_socle_degree, max_value }
}

/// Iterator returned by [`enumerate_o_sequences`]. Depth-first, so every
/// sequence is followed by its extensions before its successors.
#[derive(Clone, Debug)]
pub struct OSequences {
    stack: Vec<Vec<u64>>,
    max_socle_degree: usize,
    max_value: u64,
}

impl Iterator for OSequences {
    type Item = HilbertFunction;

    fn next(&mut self) -> Option<HilbertFunction> {
        let current = self.stack.pop()?;
        let e = current.len() - 1;
        if e < self.max_socle_degree {
            let last = *current.last().unwrap();
            let bound = growth_bound(last, e as u64).unwrap();
            let top = u64::try_from(bound).unwrap_or(u64::MAX).min(self.max_value);
            for v in (1..=top).rev() {
                let mut next = current.clone();
                next.push(v);
                self.stack.push(next);
            }
        }
        Some(HilbertFunction { values: current })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hf(s: &str) -> HilbertFunction {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_normalize() {
        assert_eq!(hf("1,3,5,7,9,11,11,8,5,2,0").values(), &[1, 3, 5, 7, 9, 11, 11, 8, 5, 2]);
        assert_eq!(hf("1, 2, 1").to_string(), "1,2,1");
        assert!("1,x".parse::<HilbertFunction>().is_err());
        assert!("".parse::<HilbertFunction>().is_err());
        assert!("1,-2".parse::<HilbertFunction>().is_err());
    }

    #[test]
    fn o_sequence_examples() {
        assert!(hf("1,3,6,10,12,12").is_o_sequence());
        assert!(!hf("1,2,4").is_o_sequence());
        assert!(hf("1,3,5,7,9,11,11,8,5,2").is_o_sequence());
        assert!(!hf("2,3").is_o_sequence());
        assert!(!hf("1,2,0,1").is_o_sequence());
        assert!(!hf("0").is_o_sequence());
        assert!(hf("1").is_o_sequence());
    }

    #[test]
    fn drop_index_examples() {
        assert_eq!(hf("1,3,6,10,12,12").first_drop_index(), 6);
        assert_eq!(hf("1,3,5,7,9,11,11,8,5,2").first_drop_index(), 8);
        assert_eq!(hf("1,1,1").first_drop_index(), 1);
        assert_eq!(hf("1").first_drop_index(), 1);
    }

    #[test]
    fn wiebe_examples() {
        let h = hf("1,3,5,7,9,11,11,8,5,2");
        assert_eq!(h.wiebe_condition_at(4), Ok(true));
        assert_eq!(h.wiebe_condition_at(6), Ok(false));
        assert!(h.wiebe_condition_at(0).is_err());
        assert!(h.wiebe_condition_at(10).is_err());
        let h = hf("1,2,3,4,5,6,3");
        for i in 1..=5 {
            assert_eq!(h.wiebe_condition_at(i), Ok(true));
        }
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(hf("1").forces_wlp(), Ok(true));
        assert_eq!(hf("1,1,1,1").forces_wlp(), Ok(true));
        assert_eq!(hf("1,2,3,3,1").forces_wlp(), Ok(true));
        let c = hf("1,3,5,7,9,11,11,8,5,2").classify().unwrap();
        assert!(!c.forces_wlp);
        assert_eq!(c.first_failure, Some(6));
        assert_eq!(hf("1,3,6,10,12,12").forces_wlp(), Ok(false));
        assert!(matches!(hf("1,2,4").forces_wlp(), Err(HilbertError::NotAnOSequence(_))));
    }

    #[test]
    fn expected_quotient_examples() {
        assert_eq!(hf("1,3,6,10,12,12").expected_quotient_hf().unwrap(), hf("1,2,3,4,2"));
        assert_eq!(hf("1,2,3,3").expected_quotient_hf().unwrap(), hf("1,1,1"));
        assert_eq!(hf("1").expected_quotient_hf().unwrap(), hf("1"));
        assert!(hf("1,2,4").expected_quotient_hf().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let got: Vec<String> = enumerate_o_sequences(1, 3, 1).map(|h| h.to_string()).collect();
        assert_eq!(got, ["1,1", "1,1,1", "1,1,1,1"]);
        let got: Vec<String> = enumerate_o_sequences(2, 2, 3).map(|h| h.to_string()).collect();
        assert_eq!(got, ["1,2", "1,2,1", "1,2,2", "1,2,3"]);
        assert_eq!(enumerate_o_sequences(4, 3, 3).count(), 0);
    }

    /// Brute force: every integer sequence in range, filtered by validity.
    fn brute_force(codim: u64, max_e: usize, cap: u64) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        let mut frontier = vec![vec![1, codim]];
        while let Some(seq) = frontier.pop() {
            out.push(seq.clone());
            if seq.len() - 1 < max_e {
                for v in 1..=cap {
                    let mut next = seq.clone();
                    next.push(v);
                    frontier.push(next);
                }
            }
        }
        let mut valid: Vec<Vec<u64>> =
            out.into_iter().filter(|v| HilbertFunction::new(v.clone()).is_o_sequence()).collect();
        valid.sort();
        valid
    }

    #[test]
    fn enumeration_is_complete_and_duplicate_free() {
        for (codim, e, cap) in [(2, 5, 5), (3, 4, 7), (1, 6, 3), (4, 3, 12)] {
            let got: Vec<Vec<u64>> =
                enumerate_o_sequences(codim, e, cap).map(|h| h.values().to_vec()).collect();
            let mut sorted = got.clone();
            sorted.sort();
            assert_eq!(got, sorted, "not in lexicographic order");
            sorted.dedup();
            assert_eq!(sorted.len(), got.len(), "duplicates");
            assert_eq!(got, brute_force(codim, e, cap));
        }
    }
}
