//! Exhaustive and randomized enumeration of monomial ideals with a given
//! Hilbert function.
//!
//! A monomial ideal is determined by its standard monomials, an order ideal.
//! The search walks degree by degree choosing `h_d` standard monomials among
//! the candidates, the degree-`d` monomials all of whose degree-`(d-1)`
//! divisors are standard. Unchosen candidates are the minimal generators.

use std::ops::ControlFlow;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::AlgebraError;
use crate::hilbert::HilbertFunction;
use crate::ideal::GradedIdeal;
use crate::poly::{Monomial, PolyRing};

fn check(ring: &PolyRing, h: &HilbertFunction) -> Result<(), AlgebraError> {
    if !h.is_o_sequence() {
        return Err(AlgebraError::NotAnOSequence(h.to_string()));
    }
    if h.codimension() != ring.nvars() as u64 {
        return Err(AlgebraError::CodimensionMismatch { codim: h.codimension(), vars: ring.nvars() });
    }
    Ok(())
}

/// Degree-`d` columns whose divisors are all standard, given the standard
/// flags of degree `d - 1`.
fn candidates(ring: &PolyRing, monos: &[Monomial], below: &[bool]) -> Vec<usize> {
    monos
        .iter()
        .enumerate()
        .filter(|(_, m)| (0..ring.nvars()).all(|j| m.div_var(j).map_or(true, |q| below[ring.index_of(&q)])))
        .map(|(c, _)| c)
        .collect()
}

struct Search<'a> {
    ring: PolyRing,
    h: &'a HilbertFunction,
    monos: Vec<Vec<Monomial>>,
    /// Chosen standard columns per degree.
    chosen: Vec<Vec<usize>>,
    /// Minimal generator columns per degree.
    gens: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(ring: PolyRing, h: &'a HilbertFunction) -> Self {
        let monos = (0..=h.len()).map(|d| ring.monomials(d)).collect();
        Search { ring, h, monos, chosen: Vec::new(), gens: Vec::new() }
    }

    fn flags(&self, d: usize) -> Vec<bool> {
        let mut f = vec![false; self.monos[d].len()];
        for &c in &self.chosen[d] {
            f[c] = true;
        }
        f
    }

    fn generators(&self) -> Vec<Monomial> {
        self.gens
            .iter()
            .enumerate()
            .flat_map(|(d, cols)| cols.iter().map(move |&c| self.monos[d + 1][c].clone()))
            .collect()
    }

    /// Depth-first over all choices; `visit` receives the minimal generators.
    fn run<B>(&mut self, visit: &mut impl FnMut(Vec<Monomial>) -> ControlFlow<B>) -> ControlFlow<B> {
        self.chosen = vec![vec![0]];
        self.gens.clear();
        self.step(1, visit)
    }

    fn step<B>(&mut self, d: usize, visit: &mut impl FnMut(Vec<Monomial>) -> ControlFlow<B>) -> ControlFlow<B> {
        let below = self.flags(d - 1);
        let cands = candidates(&self.ring, &self.monos[d], &below);
        let want = self.h.get(d) as usize;
        if cands.len() < want {
            return ControlFlow::Continue(());
        }
        if want == 0 {
            self.gens.push(cands);
            let out = visit(self.generators());
            self.gens.pop();
            return out;
        }
        for pick in cands.iter().copied().combinations(want) {
            let rest: Vec<usize> = cands.iter().copied().filter(|c| !pick.contains(c)).collect();
            self.chosen.push(pick);
            self.gens.push(rest);
            let flow = self.step(d + 1, visit);
            self.gens.pop();
            self.chosen.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// One random descent; `None` on a dead end.
    fn sample(&mut self, rng: &mut ChaCha8Rng) -> Option<Vec<Monomial>> {
        self.chosen = vec![vec![0]];
        self.gens.clear();
        for d in 1..=self.h.len() {
            let below = self.flags(d - 1);
            let cands = candidates(&self.ring, &self.monos[d], &below);
            let want = self.h.get(d) as usize;
            if cands.len() < want {
                return None;
            }
            let mut picked: Vec<usize> = sample(rng, cands.len(), want).into_iter().map(|i| cands[i]).collect();
            picked.sort_unstable();
            let rest = cands.iter().copied().filter(|c| !picked.contains(c)).collect();
            self.chosen.push(picked);
            self.gens.push(rest);
        }
        Some(self.generators())
    }
}

/// Minimal generators of every monomial ideal with Hilbert function `h`,
/// each sorted increasingly, the list sorted lexicographically.
pub fn monomial_ideal_generators(ring: PolyRing, h: &HilbertFunction) -> Result<Vec<Vec<Monomial>>, AlgebraError> {
    check(&ring, h)?;
    let mut out = Vec::new();
    let _ = Search::new(ring, h).run::<()>(&mut |mut gens| {
        gens.sort();
        out.push(gens);
        ControlFlow::Continue(())
    });
    out.sort();
    Ok(out)
}

/// Every monomial ideal `I` with `HF(R/I) = h`, each exactly once, in
/// canonical order (lexicographic on the sorted generator lists).
pub fn enumerate_monomial_ideals(ring: PolyRing, h: &HilbertFunction) -> Result<impl Iterator<Item = GradedIdeal>, AlgebraError> {
    let all = monomial_ideal_generators(ring, h)?;
    Ok(all.into_iter().map(move |gens| GradedIdeal::from_monomials(ring, gens)))
}

/// Number of monomial ideals with Hilbert function `h`, counting stops at `limit`.
pub fn count_monomial_ideals(ring: PolyRing, h: &HilbertFunction, limit: u64) -> Result<u64, AlgebraError> {
    check(&ring, h)?;
    let mut n = 0u64;
    let _ = Search::new(ring, h).run(&mut |_| {
        n += 1;
        if n >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(n)
}

/// `count` monomial ideals drawn by random descents (repetitions possible).
pub fn sample_monomial_ideals(ring: PolyRing, h: &HilbertFunction, count: usize, seed: u64) -> Result<Vec<GradedIdeal>, AlgebraError> {
    check(&ring, h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut search = Search::new(ring, h);
    let mut out = Vec::with_capacity(count);
    let mut misses = 0usize;
    while out.len() < count && misses < 1000 * count.max(1) {
        match search.sample(&mut rng) {
            Some(gens) => out.push(GradedIdeal::from_monomials(ring, gens)),
            None => misses += 1,
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::hilbert_function;

    fn names(gens: &[Monomial]) -> Vec<String> {
        gens.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn codimension_two_one_extra_monomial() {
        let ring = PolyRing::new(2);
        let all = monomial_ideal_generators(ring, &"1,2,1".parse().unwrap()).unwrap();
        let mut listed: Vec<Vec<String>> = all.iter().map(|g| names(g)).collect();
        listed.sort();
        assert_eq!(
            listed,
            vec![
                vec!["x1*x2", "x1^2", "x2^3"],
                vec!["x2^2", "x1*x2", "x1^3"],
                vec!["x2^2", "x1^2"],
            ]
        );
    }

    #[test]
    fn codimension_one() {
        let ring = PolyRing::new(1);
        let all = monomial_ideal_generators(ring, &"1,1,1".parse().unwrap()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(names(&all[0]), ["x1^3"]);
    }

    #[test]
    fn enumerated_ideals_have_the_requested_hf() {
        let ring = PolyRing::new(2);
        let h: HilbertFunction = "1,2,3,1".parse().unwrap();
        let mut n = 0;
        for ideal in enumerate_monomial_ideals(ring, &h).unwrap() {
            assert_eq!(hilbert_function(&ideal, 10).unwrap(), h);
            n += 1;
        }
        assert_eq!(n, 4);
        assert_eq!(count_monomial_ideals(ring, &h, 100).unwrap(), 4);
        assert_eq!(count_monomial_ideals(ring, &h, 2).unwrap(), 2);
    }

    /// Brute force over all subsets of monomials of degree <= e + 1.
    #[test]
    fn matches_subset_brute_force() {
        let ring = PolyRing::new(3);
        let h: HilbertFunction = "1,3,4,2".parse().unwrap();
        // standard sets of sizes h_2 and h_3 among degree-2 and degree-3 monomials
        let deg2 = ring.monomials(2);
        let deg3 = ring.monomials(3);
        let mut expected = 0;
        for s2 in deg2.iter().combinations(4) {
            for s3 in deg3.iter().combinations(2) {
                let closed = s3.iter().all(|m| (0..3).all(|j| m.div_var(j).map_or(true, |q| s2.contains(&&q))));
                if closed {
                    expected += 1;
                }
            }
        }
        let got = monomial_ideal_generators(ring, &h).unwrap();
        assert_eq!(got.len(), expected);
        let mut dedup = got.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), got.len());
    }

    #[test]
    fn errors() {
        let ring = PolyRing::new(3);
        assert!(matches!(
            monomial_ideal_generators(ring, &"1,2,1".parse().unwrap()),
            Err(AlgebraError::CodimensionMismatch { .. })
        ));
        assert!(matches!(
            monomial_ideal_generators(ring, &"1,3,7".parse().unwrap()),
            Err(AlgebraError::NotAnOSequence(_))
        ));
    }

    #[test]
    fn samples_are_valid_and_reproducible() {
        let ring = PolyRing::new(3);
        let h: HilbertFunction = "1,3,6,10,12,12".parse().unwrap();
        let a = sample_monomial_ideals(ring, &h, 3, 9).unwrap();
        let b = sample_monomial_ideals(ring, &h, 3, 9).unwrap();
        assert_eq!(a.len(), 3);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.generators(), y.generators());
            assert_eq!(hilbert_function(x, 10).unwrap(), h);
        }
    }
}
