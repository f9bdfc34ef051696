//! Multiplication maps by linear forms, Weak Lefschetz verdicts and socles.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::AlgebraError;
use crate::field::Coeff;
use crate::ideal::GradedQuotient;
use crate::linalg::rank;
use crate::poly::Polynomial;

/// Random trials used for non-monomial ideals.
pub const RANDOM_TRIALS: usize = 3;
/// Coefficients of random forms are drawn from `[-COEFF_BOUND, COEFF_BOUND]`.
pub const COEFF_BOUND: i64 = 1_000_000;

/// How to pick the linear form.
#[derive(Clone, Debug, PartialEq)]
pub enum FormChoice {
    Given(Polynomial),
    /// `x_1 + ... + x_r` for monomial ideals, seeded random forms otherwise.
    Generic { seed: u64 },
}

impl Default for FormChoice {
    fn default() -> Self {
        FormChoice::Generic { seed: 0 }
    }
}

/// Seeded random linear forms with integer coefficients.
pub fn random_linear_forms(nvars: usize, count: usize, seed: u64) -> Vec<Polynomial> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let coeffs: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)).collect();
            if coeffs.iter().any(|&c| c != 0) {
                break Polynomial::linear(&coeffs);
            }
        })
        .collect()
}

/// Candidate forms for `choice` on `a`.
pub fn candidate_forms(a: &GradedQuotient, choice: &FormChoice, trials: usize) -> Vec<Polynomial> {
    let r = a.ring().nvars();
    match choice {
        FormChoice::Given(p) => vec![p.clone()],
        FormChoice::Generic { .. } if a.ideal().is_monomial() => vec![Polynomial::sum_of_variables(r)],
        FormChoice::Generic { seed } => random_linear_forms(r, trials, *seed),
    }
}

/// Rank of `.L : A_d -> A_{d+1}` together with `(h_d, h_{d+1})`.
pub fn multiplication_rank(a: &GradedQuotient, form: &Polynomial, d: usize) -> Result<(usize, usize, usize), AlgebraError> {
    let coeffs = a.ideal().linear_coeffs(form)?;
    Ok(rank_with(a, &coeffs, d))
}

fn rank_with(a: &GradedQuotient, coeffs: &[Coeff], d: usize) -> (usize, usize, usize) {
    let (h, next) = (a.dim(d), a.dim(d + 1));
    if h == 0 || next == 0 {
        return (0, h, next);
    }
    (rank(a.field(), next, a.linear_matrix(d, coeffs)), h, next)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub degree: usize,
    pub h: usize,
    pub h_next: usize,
    pub rank: usize,
}

impl DegreeRank {
    pub fn is_maximal(&self) -> bool {
        self.rank == self.h.min(self.h_next)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WlpReport {
    /// Linear form whose ranks are reported.
    pub form: String,
    pub degrees: Vec<DegreeRank>,
    pub verdict: bool,
    /// First degree where the rank is not maximal.
    pub witness: Option<usize>,
    /// Whether the verdict is exact (rational field).
    pub exact: bool,
}

/// Checks maximal rank of `.L` in every degree `d` with `h_d > 0`.
///
/// With several candidate forms the one with the largest total rank is
/// reported; a generic form attains the maximum in every degree at once.
pub fn has_wlp(a: &GradedQuotient, choice: &FormChoice) -> Result<WlpReport, AlgebraError> {
    let mut best: Option<(usize, Polynomial, Vec<DegreeRank>)> = None;
    for form in candidate_forms(a, choice, RANDOM_TRIALS) {
        let coeffs = a.ideal().linear_coeffs(&form)?;
        let degrees: Vec<DegreeRank> = (0..a.num_degrees())
            .map(|d| {
                let (rank, h, h_next) = rank_with(a, &coeffs, d);
                DegreeRank { degree: d, h, h_next, rank }
            })
            .collect();
        let total = degrees.iter().map(|r| r.rank).sum();
        if best.as_ref().map_or(true, |(t, _, _)| total > *t) {
            best = Some((total, form, degrees));
        }
    }
    let (_, form, degrees) = best.expect("at least one candidate form");
    let witness = degrees.iter().find(|r| !r.is_maximal()).map(|r| r.degree);
    Ok(WlpReport { form: form.to_string(), degrees, verdict: witness.is_none(), witness, exact: a.field().is_exact() })
}

/// Socle dimensions by degree, omitting zeros.
pub fn socle(a: &GradedQuotient) -> BTreeMap<usize, usize> {
    let r = a.ring().nvars();
    let mut out = BTreeMap::new();
    for d in 0..a.num_degrees() {
        let h = a.dim(d);
        let next = a.dim(d + 1);
        let dim = if next == 0 {
            h
        } else {
            // a in A_d is in the socle iff every x_j a vanishes
            let mats: Vec<Vec<Vec<Coeff>>> = (0..r).map(|j| a.variable_matrix(d, j)).collect();
            let rows = (0..h).map(|i| mats.iter().flat_map(|m| m[i].iter().cloned()).collect());
            h - rank(a.field(), r * next, rows)
        };
        if dim > 0 {
            out.insert(d, dim);
        }
    }
    out
}

/// Socle concentrated in the top degree.
pub fn is_level(a: &GradedQuotient) -> bool {
    let s = socle(a);
    match a.num_degrees().checked_sub(1) {
        Some(e) => s.len() == 1 && s.contains_key(&e),
        None => true,
    }
}
