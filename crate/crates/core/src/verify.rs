//! Brute-force check of the forcing criterion: for every Hilbert function in
//! a box, compare the classifier verdict with the WLP of the monomial ideals
//! realizing it, and audit the hyperplane-section and Betti invariants on
//! every ideal visited.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::betti::{dominates, eliahou_kervaire_betti, hilbert_numerator_check, koszul_betti, BettiTable};
use crate::decompose::{green_report, stanley_decompose};
use crate::enumerate::{count_monomial_ideals, monomial_ideal_generators, sample_monomial_ideals};
use crate::error::{AlgebraError, VerifyError};
use crate::field::Field;
use crate::hilbert::{enumerate_o_sequences, HilbertFunction};
use crate::ideal::{lex_ideal, GradedIdeal};
use crate::poly::{Monomial, PolyRing, Polynomial};
use crate::wlp::{has_wlp, FormChoice};

/// Sweeps estimated above this many ideals need `force`.
pub const GUARD_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepMode {
    /// Every monomial ideal of every Hilbert function.
    Exhaustive,
    /// The lex ideal plus this many random ideals per Hilbert function.
    Sample(usize),
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub codim: u64,
    pub max_socle_degree: usize,
    pub max_value: u64,
    pub mode: SweepMode,
    pub seed: u64,
    /// Restrict the sweep to a single Hilbert function.
    pub only: Option<HilbertFunction>,
    pub field: Field,
    pub force: bool,
}

impl SweepConfig {
    pub fn exhaustive(codim: u64, max_socle_degree: usize, max_value: u64) -> Self {
        SweepConfig {
            codim,
            max_socle_degree,
            max_value,
            mode: SweepMode::Exhaustive,
            seed: 0,
            only: None,
            field: Field::Rational,
            force: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    /// `h_i != b_i + c_i`.
    StanleyExactness,
    /// `c_d > lower_shift(h_d, d)`.
    GreenBound,
    /// `c_i < h_i - h_{i-1}` for some `0 < i < t`.
    LowerDifference,
    /// A forcing Hilbert function whose `R/(I, L)` is not the difference sequence.
    QuotientShape,
    /// The lex table does not dominate the Koszul table.
    LexDomination,
    /// Closed form and Koszul homology disagree on the lex ideal.
    EliahouKervaire,
    /// A computed table fails the Hilbert numerator identity.
    EulerCharacteristic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub kind: ViolationKind,
    pub ideal: String,
    pub degree: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// Classifier and observations agree.
    Confirmed,
    Contradiction,
    /// Not forcing, but no sampled ideal failed; only possible when sampling.
    Unresolved,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HfRecord {
    pub hf: HilbertFunction,
    pub t: usize,
    pub forces_wlp: bool,
    pub ideals_checked: u64,
    pub wlp_failures: u64,
    pub lex_has_wlp: bool,
    /// First ideal found without the WLP, lex ideal first.
    pub failing_example: Option<String>,
    pub violations: Vec<Violation>,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepSummary {
    pub codim: u64,
    pub max_socle_degree: usize,
    pub max_value: u64,
    pub mode: SweepMode,
    pub seed: u64,
    pub field: String,
    pub estimate: u64,
    pub hilbert_functions: usize,
    pub forcing: usize,
    pub ideals: u64,
    pub contradictions: usize,
    pub unresolved: usize,
    pub violations: usize,
    pub records: Vec<HfRecord>,
}

impl SweepSummary {
    /// No contradictions and no invariant violations.
    pub fn is_clean(&self) -> bool {
        self.contradictions == 0 && self.violations == 0
    }
}

/// Hilbert functions covered by `cfg`, in lexicographic order.
pub fn hilbert_functions(cfg: &SweepConfig) -> Result<Vec<HilbertFunction>, VerifyError> {
    if let Some(h) = &cfg.only {
        h.forces_wlp()?;
        if h.codimension() == 0 {
            return Err(VerifyError::ZeroCodimension);
        }
        return Ok(vec![h.clone()]);
    }
    if cfg.codim == 0 {
        return Err(VerifyError::ZeroCodimension);
    }
    Ok(enumerate_o_sequences(cfg.codim, cfg.max_socle_degree, cfg.max_value).collect())
}

/// Number of ideals the sweep would visit, capped just above [`GUARD_LIMIT`].
pub fn estimate(cfg: &SweepConfig, hfs: &[HilbertFunction]) -> Result<u64, VerifyError> {
    let mut total = 0u64;
    for h in hfs {
        let ring = PolyRing::new(h.codimension() as usize);
        let left = GUARD_LIMIT + 1 - total;
        let n = match cfg.mode {
            SweepMode::Exhaustive => count_monomial_ideals(ring, h, left)?,
            SweepMode::Sample(k) => count_monomial_ideals(ring, h, (k as u64 + 1).min(left))?,
        };
        total += n;
        if total > GUARD_LIMIT {
            break;
        }
    }
    Ok(total)
}

/// Hilbert functions to visit and the estimated number of ideals.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Plan {
    pub hilbert_functions: Vec<HilbertFunction>,
    pub estimate: u64,
}

pub fn plan(cfg: &SweepConfig) -> Result<Plan, VerifyError> {
    let hilbert_functions = hilbert_functions(cfg)?;
    let estimate = estimate(cfg, &hilbert_functions)?;
    Ok(Plan { hilbert_functions, estimate })
}

/// Plans and runs the sweep.
pub fn sweep(cfg: &SweepConfig) -> Result<SweepSummary, VerifyError> {
    run(cfg, plan(cfg)?)
}

/// Runs a planned sweep. Fails with [`VerifyError::Guard`] when the estimate
/// is above [`GUARD_LIMIT`] and `force` is off.
pub fn run(cfg: &SweepConfig, plan: Plan) -> Result<SweepSummary, VerifyError> {
    let Plan { hilbert_functions: hfs, estimate } = plan;
    if estimate > GUARD_LIMIT && !cfg.force {
        return Err(VerifyError::Guard { estimate, limit: GUARD_LIMIT });
    }
    let records = hfs.iter().map(|h| check_hilbert_function(h, cfg)).collect::<Result<Vec<_>, _>>()?;
    let count = |o: Outcome| records.iter().filter(|r| r.outcome == o).count();
    let (codim, max_socle_degree, max_value) = match &cfg.only {
        Some(h) => (h.codimension(), h.socle_degree().unwrap_or(0), h.values().iter().copied().max().unwrap_or(1)),
        None => (cfg.codim, cfg.max_socle_degree, cfg.max_value),
    };
    Ok(SweepSummary {
        codim,
        max_socle_degree,
        max_value,
        mode: cfg.mode,
        seed: cfg.seed,
        field: cfg.field.to_string(),
        estimate,
        hilbert_functions: records.len(),
        forcing: records.iter().filter(|r| r.forces_wlp).count(),
        ideals: records.iter().map(|r| r.ideals_checked).sum(),
        contradictions: count(Outcome::Contradiction),
        unresolved: count(Outcome::Unresolved),
        violations: records.iter().map(|r| r.violations.len()).sum(),
        records,
    })
}

/// Generators by increasing degree, largest first within a degree.
fn describe(gens: &[Monomial]) -> String {
    let mut gens = gens.to_vec();
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    let parts: Vec<String> = gens.iter().map(Monomial::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Per-Hilbert-function seed, so a single-`H` run reproduces the full sweep.
fn seed_for(seed: u64, h: &HilbertFunction) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    h.values().iter().fold(rng.gen::<u64>(), |acc, &v| acc.rotate_left(7) ^ v.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Checks every ideal with Hilbert function `h` (or a sample), lex first.
pub fn check_hilbert_function(h: &HilbertFunction, cfg: &SweepConfig) -> Result<HfRecord, VerifyError> {
    let classification = h.classify()?;
    let ring = PolyRing::new(h.codimension() as usize);
    let lex = lex_ideal(ring, h)?.in_field(cfg.field)?;
    let mut lex_gens = lex.minimal_monomial_generators().expect("lex ideals are monomial");
    lex_gens.sort();

    let mut record = HfRecord {
        hf: h.clone(),
        t: classification.t,
        forces_wlp: classification.forces_wlp,
        ideals_checked: 0,
        wlp_failures: 0,
        lex_has_wlp: true,
        failing_example: None,
        violations: Vec::new(),
        outcome: Outcome::Confirmed,
    };

    let lex_table = eliahou_kervaire_betti(&lex)?;
    let lex_koszul = koszul_betti(&lex.clone().quotient(h.len() + 1)?);
    if lex_table != lex_koszul {
        record.violations.push(Violation { kind: ViolationKind::EliahouKervaire, ideal: describe(&lex_gens), degree: None });
    }

    let others: Vec<Vec<Monomial>> = match cfg.mode {
        SweepMode::Exhaustive => monomial_ideal_generators(ring, h)?,
        SweepMode::Sample(k) => sample_monomial_ideals(ring, h, k, seed_for(cfg.seed, h))?
            .into_iter()
            .map(|i| {
                let mut g = i.minimal_monomial_generators().expect("monomial");
                g.sort();
                g
            })
            .collect(),
    };
    let auditor = Auditor { h, forces: classification.forces_wlp, t: classification.t, lex_table: &lex_table, seed: cfg.seed };
    record.lex_has_wlp = auditor.check(lex, &lex_gens, &mut record)?;
    for gens in others.into_iter().filter(|g| *g != lex_gens) {
        let ideal = GradedIdeal::from_monomials(ring, gens.clone()).in_field(cfg.field)?;
        auditor.check(ideal, &gens, &mut record)?;
    }

    record.outcome = match (record.forces_wlp, record.wlp_failures > 0, cfg.mode) {
        (true, true, _) => Outcome::Contradiction,
        (false, false, SweepMode::Exhaustive) => Outcome::Contradiction,
        (false, false, SweepMode::Sample(_)) => Outcome::Unresolved,
        _ => Outcome::Confirmed,
    };
    Ok(record)
}

struct Auditor<'a> {
    h: &'a HilbertFunction,
    forces: bool,
    t: usize,
    lex_table: &'a BettiTable,
    seed: u64,
}

impl Auditor<'_> {
    /// Audits one ideal; returns its WLP verdict.
    fn check(&self, ideal: GradedIdeal, gens: &[Monomial], record: &mut HfRecord) -> Result<bool, VerifyError> {
        let h = self.h;
        let d_cap = h.len() + 1;
        let r = ideal.ring().nvars();
        let form = Polynomial::sum_of_variables(r);
        let quotient = ideal.clone().quotient(d_cap)?;
        debug_assert_eq!(quotient.hilbert_function(), h);
        record.ideals_checked += 1;
        let mut flag = |kind, degree| record.violations.push(Violation { kind, ideal: describe(gens), degree });

        let wlp = has_wlp(&quotient, &FormChoice::Generic { seed: self.seed })?;

        match stanley_decompose(&ideal, &form, d_cap) {
            Ok(split) => {
                for d in green_report(h, &split.c).violations {
                    flag(ViolationKind::GreenBound, Some(d));
                }
                for i in 1..self.t {
                    if (split.c.get(i) as i64) < h.get(i) as i64 - h.get(i - 1) as i64 {
                        flag(ViolationKind::LowerDifference, Some(i));
                    }
                }
                if self.forces && Ok(&split.c) != h.expected_quotient_hf().as_ref() {
                    flag(ViolationKind::QuotientShape, None);
                }
            }
            Err(AlgebraError::ExactnessViolated(d)) => flag(ViolationKind::StanleyExactness, Some(d)),
            Err(e) => return Err(e.into()),
        }

        let table = koszul_betti(&quotient);
        if !hilbert_numerator_check(&table, h) {
            flag(ViolationKind::EulerCharacteristic, None);
        }
        if !dominates(self.lex_table, &table).unwrap_or(false) {
            flag(ViolationKind::LexDomination, None);
        }

        if !wlp.verdict {
            record.wlp_failures += 1;
            if record.failing_example.is_none() {
                record.failing_example = Some(describe(gens));
            }
        }
        Ok(wlp.verdict)
    }
}
