//! Ideals of finite sets of points in projective space, truncated in degree.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};
use crate::ideal::GradedIdeal;
use crate::linalg::kernel;
use crate::poly::PolyRing;

/// Homogeneous coordinates of a point.
pub type Point = Vec<BigRational>;

fn proportional(a: &Point, b: &Point) -> bool {
    // a ~ b iff a_i b_j = a_j b_i for all i, j
    (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn validate(ring: &PolyRing, points: &[Point]) -> Result<(), AlgebraError> {
    for (k, p) in points.iter().enumerate() {
        if p.len() != ring.nvars() {
            return Err(AlgebraError::RingMismatch { expected: ring.nvars(), found: p.len() });
        }
        if p.iter().all(Zero::is_zero) {
            return Err(AlgebraError::InvalidPoint(k));
        }
        if points[..k].iter().any(|q| proportional(p, q)) {
            return Err(AlgebraError::DuplicatePoint(k));
        }
    }
    Ok(())
}

/// Ideal whose degree-`d` piece, for `d <= d_max`, is the space of forms
/// vanishing at every point.
pub fn ideal_from_points(ring: PolyRing, points: &[Point], d_max: usize) -> Result<GradedIdeal, AlgebraError> {
    ideal_from_points_in(ring, points, d_max, Field::Rational)
}

pub fn ideal_from_points_in(ring: PolyRing, points: &[Point], d_max: usize, field: Field) -> Result<GradedIdeal, AlgebraError> {
    validate(&ring, points)?;
    let coords: Vec<Vec<Coeff>> = points
        .iter()
        .map(|p| p.iter().map(|x| field.from_rational(x)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let mut ideal = GradedIdeal::zero(ring, field);
    for d in 0..=d_max {
        // image of a monomial: its values at the points
        let images: Vec<Vec<Coeff>> = ring
            .monomials(d)
            .iter()
            .map(|m| {
                coords
                    .iter()
                    .map(|p| {
                        m.exps().iter().zip(p).fold(field.one(), |acc, (&e, x)| {
                            (0..e).fold(acc, |acc, _| &acc * x)
                        })
                    })
                    .collect()
            })
            .collect();
        let ker = kernel(field, &images, coords.len());
        ideal.add_dense_generators(d, ker);
    }
    Ok(ideal)
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// The shipped 12-point configuration in the plane: five points on `x3 = 0`,
/// four on `x2 = 0`, two on `x2 = x3`, and one more point off those lines.
pub fn k_configuration_points() -> Vec<Point> {
    let mut pts = Vec::new();
    for a in 1..=5 {
        pts.push(vec![q(1), q(a), q(0)]);
    }
    for a in 1..=4 {
        pts.push(vec![q(1), q(0), q(a)]);
    }
    for a in 1..=2 {
        pts.push(vec![q(1), q(a), q(a)]);
    }
    pts.push(vec![q(1), q(2), q(3)]);
    pts
}

/// Hilbert function of the point set through degree 6.
pub const K_CONFIGURATION_HF: [u64; 7] = [1, 3, 6, 10, 12, 12, 12];

/// Coordinates for the same configuration type with random positions along
/// the three lines; retried until the Hilbert function comes out right.
pub fn random_k_configuration(seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = PolyRing::new(3);
    loop {
        let mut used = std::collections::BTreeSet::new();
        let mut fresh = |rng: &mut ChaCha8Rng| loop {
            let v: i64 = rng.gen_range(1..=50);
            if used.insert(v) {
                return v;
            }
        };
        let mut pts = Vec::new();
        for _ in 0..5 {
            let a = fresh(&mut rng);
            pts.push(vec![BigRational::one(), q(a), q(0)]);
        }
        for _ in 0..4 {
            let a = fresh(&mut rng);
            pts.push(vec![BigRational::one(), q(0), q(a)]);
        }
        for _ in 0..2 {
            let a = fresh(&mut rng);
            pts.push(vec![BigRational::one(), q(a), q(a)]);
        }
        let (a, b) = (fresh(&mut rng), fresh(&mut rng));
        pts.push(vec![BigRational::one(), q(a), q(b)]);
        if let Ok(mut ideal) = ideal_from_points(ring, &pts, 6) {
            if ideal.hilbert_values(6) == K_CONFIGURATION_HF {
                return pts;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_point() {
        let ring = PolyRing::new(3);
        let mut i = ideal_from_points(ring, &[vec![q(1), q(0), q(0)]], 3).unwrap();
        assert_eq!(i.hilbert_values(3), vec![1, 1, 1, 1]);
    }

    /// Evaluation-rank oracle: three non-collinear points impose independent
    /// conditions on conics.
    #[test]
    fn three_points() {
        let ring = PolyRing::new(3);
        let pts = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(1), q(1), q(1)]];
        let mut i = ideal_from_points(ring, &pts, 2).unwrap();
        assert_eq!(i.hilbert_values(2), vec![1, 3, 3]);
        let collinear = vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)], vec![q(1), q(1), q(0)]];
        let mut i = ideal_from_points(ring, &collinear, 2).unwrap();
        assert_eq!(i.hilbert_values(2), vec![1, 2, 3]);
    }

    #[test]
    fn shipped_configuration() {
        let ring = PolyRing::new(3);
        let mut i = ideal_from_points(ring, &k_configuration_points(), 6).unwrap();
        assert_eq!(i.hilbert_values(6), K_CONFIGURATION_HF);
    }

    #[test]
    fn random_configuration_is_reproducible() {
        let a = random_k_configuration(11);
        assert_eq!(a, random_k_configuration(11));
        assert_eq!(a.len(), 12);
    }

    #[test]
    fn rejects_bad_points() {
        let ring = PolyRing::new(2);
        let dup = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        assert_eq!(ideal_from_points(ring, &dup, 2).unwrap_err(), AlgebraError::DuplicatePoint(1));
        let zero = vec![vec![q(0), q(0)]];
        assert_eq!(ideal_from_points(ring, &zero, 2).unwrap_err(), AlgebraError::InvalidPoint(0));
        let short = vec![vec![q(1)]];
        assert!(matches!(ideal_from_points(ring, &short, 2), Err(AlgebraError::RingMismatch { .. })));
    }
}
