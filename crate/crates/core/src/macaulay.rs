//! Macaulay's binomial expansions and the operators derived from them.
//!
//! Every integer `n >= 1` has a unique `i`-binomial expansion
//! `n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)` with
//! `n_i > n_{i-1} > ... > n_j >= j >= 1`. Three operators shift the terms of
//! that expansion:
//!
//! * [`lower_shift`]: `C(n_k - 1, k)` summed, the hyperplane restriction bound,
//! * [`lower_both`]: `C(n_k - 1, k - 1)` summed,
//! * [`growth_bound`]: `C(n_k + 1, k + 1)` summed, the maximal growth.
//!
//! The operators accept `n = 0` and return 0 so sequences ending in zeros can
//! be handled uniformly. `C(m, q) = 0` whenever `m < q`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::MacaulayError;

/// Binomial coefficient `C(m, q)` for any integer `m`, zero when `m < q`.
pub fn binomial(m: i64, q: u64) -> BigUint {
    if m < 0 || (m as u64) < q {
        return BigUint::zero();
    }
    binom(&BigUint::from(m as u64), q)
}

/// `C(top, k)` over unbounded integers.
pub(crate) fn binom(top: &BigUint, k: u64) -> BigUint {
    let kb = BigUint::from(k);
    if *top < kb {
        return BigUint::zero();
    }
    let rest = top - &kb;
    let k = if rest < kb { u64::try_from(&rest).unwrap() } else { k };
    let mut acc = BigUint::one();
    for step in 0..k {
        acc *= top - BigUint::from(step);
        acc /= BigUint::from(step + 1);
    }
    acc
}

/// The unique `i`-binomial expansion of a positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialExpansion {
    degree: u64,
    /// `(n_k, k)` pairs with `k = i, i-1, ..., j`.
    terms: Vec<(BigUint, u64)>,
}

impl BinomialExpansion {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn terms(&self) -> &[(BigUint, u64)] {
        &self.terms
    }

    /// Sum of the binomials, i.e. the expanded integer.
    pub fn value(&self) -> BigUint {
        self.map_terms(|top, k| binom(top, k))
    }

    fn map_terms(&self, f: impl Fn(&BigUint, u64) -> BigUint) -> BigUint {
        self.terms.iter().map(|(top, k)| f(top, *k)).sum()
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, (top, k)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({top},{k})")?;
        }
        Ok(())
    }
}

/// Greedy expansion: at each bottom `k`, take the largest top with
/// `C(top, k)` not exceeding what is left.
pub fn expand(n: impl Into<BigUint>, i: u64) -> Result<BinomialExpansion, MacaulayError> {
    let n = n.into();
    if i == 0 {
        return Err(MacaulayError::ZeroIndex);
    }
    if n.is_zero() {
        return Err(MacaulayError::ZeroValue);
    }
    let mut rest = n;
    let mut terms = Vec::new();
    for k in (1..=i).rev() {
        if rest.is_zero() {
            break;
        }
        let top = largest_top(&rest, k);
        rest -= binom(&top, k);
        terms.push((top, k));
    }
    debug_assert!(rest.is_zero());
    Ok(BinomialExpansion { degree: i, terms })
}

// largest t >= k with C(t, k) <= bound, for bound >= 1
fn largest_top(bound: &BigUint, k: u64) -> BigUint {
    if k == 1 {
        return bound.clone();
    }
    let mut lo = BigUint::from(k);
    let mut step = BigUint::one();
    let mut hi = &lo + &step;
    while binom(&hi, k) <= *bound {
        lo = hi.clone();
        step <<= 1;
        hi = &lo + &step;
    }
    // C(lo, k) <= bound < C(hi, k)
    while &hi - &lo > BigUint::one() {
        let mid = (&lo + &hi) >> 1;
        if binom(&mid, k) <= *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn apply(
    n: impl Into<BigUint>,
    i: u64,
    f: impl Fn(&BigUint, u64) -> BigUint,
) -> Result<BigUint, MacaulayError> {
    let n = n.into();
    if i == 0 {
        return Err(MacaulayError::ZeroIndex);
    }
    if n.is_zero() {
        return Ok(BigUint::zero());
    }
    Ok(expand(n, i)?.map_terms(f))
}

/// `n_<i>`: every top lowered by one, bottoms kept.
pub fn lower_shift(n: impl Into<BigUint>, i: u64) -> Result<BigUint, MacaulayError> {
    apply(n, i, |top, k| binom(&(top - 1u32), k))
}

/// `((n)_(i))^{-1}_{-1}`: tops and bottoms lowered by one.
pub fn lower_both(n: impl Into<BigUint>, i: u64) -> Result<BigUint, MacaulayError> {
    apply(n, i, |top, k| binom(&(top - 1u32), k - 1))
}

/// Macaulay's bound `n^<i>`: the largest value allowed in degree `i + 1`
/// after value `n` in degree `i`.
pub fn growth_bound(n: impl Into<BigUint>, i: u64) -> Result<BigUint, MacaulayError> {
    apply(n, i, |top, k| binom(&(top + 1u32), k + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: u64) -> BigUint {
        BigUint::from(v)
    }

    /// Independent oracle: depth-first search over all admissible
    /// decreasing top sequences, without any greedy choice.
    fn search_expansion(n: u64, i: u64) -> Vec<Vec<(u64, u64)>> {
        fn small_binom(m: u64, q: u64) -> u64 {
            if m < q {
                return 0;
            }
            (0..q).fold(1u64, |acc, s| acc * (m - s) / (s + 1))
        }
        fn go(rest: u64, k: u64, max_top: u64, acc: &mut Vec<(u64, u64)>, out: &mut Vec<Vec<(u64, u64)>>) {
            if rest == 0 {
                if !acc.is_empty() {
                    out.push(acc.clone());
                }
                return;
            }
            if k == 0 {
                return;
            }
            for top in k..=max_top {
                let c = small_binom(top, k);
                if c > rest {
                    break;
                }
                acc.push((top, k));
                go(rest - c, k - 1, top - 1, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, i, n + i, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn greedy_matches_exhaustive_search() {
        for i in 1..=6 {
            for n in 1..=120u64 {
                let found = search_expansion(n, i);
                assert_eq!(found.len(), 1, "expansion of {n} in degree {i} not unique");
                let e = expand(n, i).unwrap();
                let got: Vec<(u64, u64)> =
                    e.terms().iter().map(|(t, k)| (u64::try_from(t).unwrap(), *k)).collect();
                assert_eq!(got, found[0], "n={n} i={i}");
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(6, 5), b(6));
        assert_eq!(binomial(2, 3), b(0));
        assert_eq!(binomial(5, 2), b(10));
        assert_eq!(binomial(-3, 0), b(0));
        assert_eq!(binomial(7, 0), b(1));
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expand(6u32, 2).unwrap().terms(), &[(b(4), 2)]);
        assert_eq!(expand(12u32, 5).unwrap().terms(), &[(b(6), 5), (b(5), 4), (b(3), 3)]);
        for i in 1..10 {
            assert_eq!(expand(1u32, i).unwrap().terms(), &[(b(i), i)]);
        }
        assert_eq!(expand(8u32, 3).unwrap().to_string(), "C(4,3) + C(3,2) + C(1,1)");
    }

    #[test]
    fn rejects_zero_arguments() {
        assert_eq!(expand(0u32, 3), Err(MacaulayError::ZeroValue));
        assert_eq!(expand(3u32, 0), Err(MacaulayError::ZeroIndex));
        assert_eq!(lower_shift(3u32, 0), Err(MacaulayError::ZeroIndex));
        assert_eq!(lower_shift(0u32, 4), Ok(b(0)));
        assert_eq!(lower_both(0u32, 4), Ok(b(0)));
        assert_eq!(growth_bound(0u32, 4), Ok(b(0)));
    }

    #[test]
    fn operator_examples() {
        assert_eq!(lower_shift(3u32, 3).unwrap(), b(0));
        assert_eq!(lower_shift(6u32, 2).unwrap(), b(3));
        assert_eq!(lower_shift(12u32, 5).unwrap(), b(2));
        for h in [8u32, 9, 10] {
            assert_eq!(lower_both(h, 3).unwrap(), b(6));
        }
        assert_eq!(lower_both(12u32, 5).unwrap(), b(10));
        assert_eq!(growth_bound(6u32, 2).unwrap(), b(10));
        assert_eq!(growth_bound(3u32, 1).unwrap(), b(6));
        for i in 1..20 {
            assert_eq!(growth_bound(1u32, i).unwrap(), b(1));
            assert_eq!(lower_both(i + 1, i).unwrap(), b(i));
        }
    }

    #[test]
    fn huge_values_stay_exact() {
        let n = BigUint::from(10u32).pow(40);
        let e = expand(n.clone(), 7).unwrap();
        assert_eq!(e.value(), n);
        let shifted = lower_shift(n.clone(), 7).unwrap();
        assert_eq!(&n - shifted, lower_both(n, 7).unwrap());
    }
}
