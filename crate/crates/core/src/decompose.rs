//! Hyperplane sections: the exact-sequence splitting of a Hilbert function
//! along a linear form, and the restriction bound on `R/(I, L)`.

use serde::Serialize;

use crate::error::AlgebraError;
use crate::hilbert::HilbertFunction;
use crate::ideal::GradedIdeal;
use crate::macaulay::lower_shift;
use crate::poly::Polynomial;

/// `h_i = b_i + c_i` where `b` is the Hilbert function of `R/(I:L)` moved
/// one degree up and `c` the Hilbert function of `R/(I, L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StanleyDecomposition {
    pub h: HilbertFunction,
    /// Indexed by degree; `b[0] = 0`.
    pub b: Vec<u64>,
    pub c: HilbertFunction,
}

/// Splits `HF(R/I)` along `form`. The colon and the sum are computed
/// independently, and the identity `h_i = b_i + c_i` is checked.
pub fn stanley_decompose(ideal: &GradedIdeal, form: &Polynomial, d_cap: usize) -> Result<StanleyDecomposition, AlgebraError> {
    let mut ideal = ideal.clone();
    let coeffs = ideal.linear_coeffs(form)?;
    let field = ideal.field();
    let l1 = form.to_dense(ideal.ring(), field, 1)?;
    if !ideal.piece(1).is_full() && (ideal.piece(1).contains(&l1) || coeffs.iter().all(|c| c.is_zero())) {
        return Err(AlgebraError::LinearFormInIdeal);
    }
    let h = ideal.clone().quotient(d_cap)?.hilbert_function().clone();
    if h.get(1) == 0 {
        // I contains every linear form: (I:L) is the whole ring and B vanishes
        return Ok(StanleyDecomposition { c: h.clone(), h, b: vec![0] });
    }
    let top = h.len(); // first vanishing degree
    let colon_values = ideal.colon_by_linear_form(form, top)?.hilbert_values(top);
    let mut b = vec![0u64];
    b.extend(colon_values.iter().take(top));
    let c_values = ideal.with_linear_form(form)?.hilbert_values(top);
    let c = HilbertFunction::new(c_values);
    for (i, b_i) in b.iter().enumerate() {
        if h.get(i) != b_i + c.get(i) {
            return Err(AlgebraError::ExactnessViolated(i));
        }
    }
    while b.last() == Some(&0) && b.len() > 1 {
        b.pop();
    }
    Ok(StanleyDecomposition { h, b, c })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenEntry {
    pub degree: usize,
    /// `dim (R/(I, L))_d`.
    pub c: u64,
    /// `lower_shift(h_d, d)`.
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenReport {
    pub entries: Vec<GreenEntry>,
    /// Degrees with `c_d > bound`; nonempty only for a special form or an engine bug.
    pub violations: Vec<usize>,
}

/// Compares `HF(R/(I, L))` with the restriction bound in each degree `d >= 1`
/// where `h_d > 0`.
pub fn green_bound_check(ideal: &GradedIdeal, form: &Polynomial, d_cap: usize) -> Result<GreenReport, AlgebraError> {
    let h = ideal.clone().quotient(d_cap)?.hilbert_function().clone();
    let top = h.len();
    let c = ideal.with_linear_form(form)?.hilbert_values(top);
    Ok(green_report(&h, &HilbertFunction::new(c)))
}

/// The restriction bound applied to a known pair `h`, `c`.
pub fn green_report(h: &HilbertFunction, c: &HilbertFunction) -> GreenReport {
    let entries: Vec<GreenEntry> = (1..h.len())
        .map(|d| {
            let bound = u64::try_from(lower_shift(h.get(d), d as u64).unwrap()).unwrap();
            GreenEntry { degree: d, c: c.get(d), bound }
        })
        .collect();
    let violations = entries.iter().filter(|e| e.c > e.bound).map(|e| e.degree).collect();
    GreenReport { entries, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ideal::{lex_ideal, DEFAULT_DCAP};
    use crate::poly::PolyRing;

    #[test]
    fn square_of_maximal_ideal_in_two_variables() {
        let ring = PolyRing::new(2);
        let m2 = GradedIdeal::zero(ring, Field::Rational).add_maximal_power(2);
        let l = Polynomial::sum_of_variables(2);
        let s = stanley_decompose(&m2, &l, DEFAULT_DCAP).unwrap();
        assert_eq!(s.b, vec![0, 1]);
        assert_eq!(s.c.values(), &[1, 1]);
        let g = green_bound_check(&m2, &l, DEFAULT_DCAP).unwrap();
        assert_eq!(g.entries, vec![GreenEntry { degree: 1, c: 1, bound: 1 }]);
        assert!(g.violations.is_empty());
    }

    #[test]
    fn residue_field() {
        let ring = PolyRing::new(3);
        let m = GradedIdeal::zero(ring, Field::Rational).add_maximal_power(1);
        let s = stanley_decompose(&m, &Polynomial::parse("x1 + 2*x3", 3).unwrap(), 10).unwrap();
        assert_eq!(s.b, vec![0]);
        assert_eq!(s.c.values(), &[1]);
    }

    #[test]
    fn lex_reconstructs() {
        let ring = PolyRing::new(3);
        let h: HilbertFunction = "1,3,4,2".parse().unwrap();
        let lex = lex_ideal(ring, &h).unwrap();
        let s = stanley_decompose(&lex, &Polynomial::sum_of_variables(3), DEFAULT_DCAP).unwrap();
        for i in 0..h.len() {
            assert_eq!(h.get(i), s.b.get(i).copied().unwrap_or(0) + s.c.get(i));
        }
    }

    #[test]
    fn form_in_ideal_is_rejected() {
        let ring = PolyRing::new(2);
        let i = GradedIdeal::new(ring, vec![Polynomial::parse("x1", 2).unwrap(), Polynomial::parse("x2^3", 2).unwrap()]).unwrap();
        let err = stanley_decompose(&i, &Polynomial::parse("x1", 2).unwrap(), 10).unwrap_err();
        assert_eq!(err, AlgebraError::LinearFormInIdeal);
    }

    #[test]
    fn hf_one_has_zero_bound() {
        // h_d = 1 forces c_d = 0 for a general form
        let ring = PolyRing::new(2);
        let i = GradedIdeal::new(ring, vec![Polynomial::parse("x2", 2).unwrap(), Polynomial::parse("x1^4", 2).unwrap()]).unwrap();
        let g = green_bound_check(&i, &Polynomial::sum_of_variables(2), 10).unwrap();
        for e in &g.entries {
            assert_eq!(e.bound, 0);
            assert_eq!(e.c, 0);
        }
    }
}
