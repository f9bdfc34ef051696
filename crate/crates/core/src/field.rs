//! Scalars for the linear algebra engine.
//!
//! The engine runs over the rationals by default. Rationals are kept as
//! `Ratio<i64>` while numerator and denominator fit, and promoted to
//! `BigRational` on overflow, so results are always exact. A prime field
//! mode exists for large heuristic sweeps.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

use crate::error::AlgebraError;

/// Default modulus for the prime-field mode.
pub const DEFAULT_PRIME: u32 = 32003;

/// Coefficient field of the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    /// Integers modulo a prime. Ranks computed here can only drop compared to
    /// the rationals, so results are heuristic.
    Prime(u32),
}

impl Field {
    pub fn zero(self) -> Coeff {
        match self {
            Field::Rational => Coeff::Small(Ratio::from_integer(0)),
            Field::Prime(p) => Coeff::Mod(0, p),
        }
    }

    pub fn one(self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Coeff {
        match self {
            Field::Rational => Coeff::Small(Ratio::from_integer(v)),
            Field::Prime(p) => Coeff::Mod(v.rem_euclid(p as i64) as u32, p),
        }
    }

    /// Maps an exact rational into the field. Fails in prime mode when the
    /// denominator vanishes modulo the prime.
    pub fn from_rational(self, q: &BigRational) -> Result<Coeff, AlgebraError> {
        match self {
            Field::Rational => Ok(Coeff::from_big(q.clone())),
            Field::Prime(p) => {
                let pb = BigInt::from(p);
                let num = q.numer().mod_floor(&pb).to_u64().unwrap();
                let den = q.denom().mod_floor(&pb).to_u64().unwrap();
                if den == 0 {
                    return Err(AlgebraError::BadReduction { prime: p });
                }
                Ok(Coeff::Mod(((num * inv_mod(den, p as u64)) % p as u64) as u32, p))
            }
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Field::Rational)
    }

    /// Parses `rational` or `prime:<p>`.
    pub fn parse(s: &str) -> Result<Field, String> {
        if s == "rational" {
            return Ok(Field::Rational);
        }
        if let Some(rest) = s.strip_prefix("prime:") {
            let p: u32 = rest.parse().map_err(|_| format!("bad prime `{rest}`"))?;
            if p < 2 || p >= 1 << 31 || !is_prime(p) {
                return Err(format!("{p} is not a prime below 2^31"));
            }
            return Ok(Field::Prime(p));
        }
        if s == "prime" {
            return Ok(Field::Prime(DEFAULT_PRIME));
        }
        Err(format!("unknown field `{s}` (expected rational or prime:<p>)"))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A field element.
///
/// `Big` is only used for values whose numerator or denominator do not fit in
/// an `i64`, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coeff {
    Small(Ratio<i64>),
    Big(Box<BigRational>),
    Mod(u32, u32),
}

impl Coeff {
    pub fn from_big(q: BigRational) -> Coeff {
        match (q.numer().to_i64(), q.denom().to_i64()) {
            (Some(n), Some(d)) if n != i64::MIN && d != i64::MIN => {
                Coeff::Small(Ratio::new_raw(n, d))
            }
            _ => Coeff::Big(Box::new(q)),
        }
    }

    fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Coeff::Big(b) => (**b).clone(),
            Coeff::Mod(..) => panic!("prime-field element used as rational"),
        }
    }

    /// Exact rational value, if this is a rational element.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Coeff::Mod(..) => None,
            other => Some(other.to_big()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_zero(),
            Coeff::Big(b) => b.is_zero(),
            Coeff::Mod(v, _) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Small(r) => r.is_one(),
            Coeff::Big(b) => b.is_one(),
            Coeff::Mod(v, _) => *v == 1,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Mod(_, p) => Field::Prime(*p),
            _ => Field::Rational,
        }
    }

    pub fn inv(&self) -> Coeff {
        match self {
            Coeff::Mod(v, p) => {
                assert!(*v != 0, "division by zero");
                Coeff::Mod(inv_mod(*v as u64, *p as u64) as u32, *p)
            }
            Coeff::Small(r) => {
                assert!(!r.is_zero(), "division by zero");
                Coeff::from_big(self.to_big().recip())
            }
            Coeff::Big(b) => Coeff::from_big(b.recip()),
        }
    }

    fn small_op(
        &self,
        other: &Coeff,
        small: impl Fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
        modp: impl Fn(u64, u64, u64) -> u64,
    ) -> Coeff {
        match (self, other) {
            (Coeff::Mod(a, p), Coeff::Mod(b, q)) => {
                assert_eq!(p, q, "mixed prime fields");
                Coeff::Mod(modp(*a as u64, *b as u64, *p as u64) as u32, *p)
            }
            (Coeff::Small(a), Coeff::Small(b)) => match small(a, b) {
                Some(r) if *r.numer() != i64::MIN && *r.denom() != i64::MIN => Coeff::Small(r),
                _ => Coeff::from_big(big(self.to_big(), other.to_big())),
            },
            (Coeff::Mod(..), _) | (_, Coeff::Mod(..)) => panic!("mixed rational and prime field"),
            _ => Coeff::from_big(big(self.to_big(), other.to_big())),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(r) => write!(f, "{r}"),
            Coeff::Big(b) => write!(f, "{b}"),
            Coeff::Mod(v, _) => write!(f, "{v}"),
        }
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        self.small_op(rhs, |a, b| a.checked_add(b), |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        self.small_op(rhs, |a, b| a.checked_sub(b), |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        self.small_op(rhs, |a, b| a.checked_mul(b), |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl Div for &Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "division by zero");
        match (self, rhs) {
            (Coeff::Mod(..), _) => self * &rhs.inv(),
            _ => self.small_op(rhs, |a, b| a.checked_div(b), |a, b| a / b, |_, _, _| unreachable!()),
        }
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(r) if *r.numer() != i64::MIN => Coeff::Small(-*r),
            Coeff::Mod(v, p) => Coeff::Mod((*p - *v) % *p, *p),
            _ => Coeff::from_big(-self.to_big()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coeff {
            type Output = Coeff;
            fn $m(self, rhs: Coeff) -> Coeff {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        -(&self)
    }
}

/// Positive or negative sign of a rational element; `None` in prime mode.
pub fn sign(c: &Coeff) -> Option<i8> {
    match c {
        Coeff::Small(r) => Some(if r.is_zero() { 0 } else if r.is_positive() { 1 } else { -1 }),
        Coeff::Big(b) => Some(if b.is_zero() { 0 } else if b.is_positive() { 1 } else { -1 }),
        Coeff::Mod(..) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::Small(Ratio::new(n, d))
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Coeff::Small(Ratio::from_integer(i64::MAX / 2 + 7));
        let sq = &big * &big;
        assert!(matches!(sq, Coeff::Big(_)));
        let back = &sq / &big;
        assert_eq!(back, big);
        let zero = &sq - &sq;
        assert!(zero.is_zero());
        assert!(matches!(zero, Coeff::Small(_)));
    }

    #[test]
    fn rational_ops() {
        assert_eq!(&q(1, 2) + &q(1, 3), q(5, 6));
        assert_eq!(&q(1, 2) / &q(3, 4), q(2, 3));
        assert_eq!(q(2, 7).inv(), q(7, 2));
        assert_eq!(-q(3, 5), q(-3, 5));
    }

    #[test]
    fn prime_ops() {
        let f = Field::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert_eq!(&a + &b, f.from_i64(1));
        assert_eq!(&a - &b, f.from_i64(5));
        assert_eq!(&a * &b, f.from_i64(1));
        assert_eq!(&(&a / &b) * &b, a);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(f.from_rational(&half).unwrap(), f.from_i64(4));
        let seventh = BigRational::new(1.into(), 7.into());
        assert!(f.from_rational(&seventh).is_err());
    }

    #[test]
    fn parse_field() {
        assert_eq!(Field::parse("rational"), Ok(Field::Rational));
        assert_eq!(Field::parse("prime:32003"), Ok(Field::Prime(32003)));
        assert!(Field::parse("prime:32004").is_err());
        assert!(Field::parse("reals").is_err());
    }
}
