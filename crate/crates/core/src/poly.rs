//! Polynomial rings `k[x_1, ..., x_r]`, monomials and homogeneous polynomials.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};

/// Exponent vector. Ordered graded-lexicographically with `x_1 > ... > x_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        let mut e = vec![0; nvars];
        e[j] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul_var(&self, j: usize) -> Monomial {
        let mut e = self.0.clone();
        e[j] += 1;
        Monomial(e)
    }

    /// `self / x_j`, if `x_j` divides.
    pub fn div_var(&self, j: usize) -> Option<Monomial> {
        (self.0[j] > 0).then(|| {
            let mut e = self.0.clone();
            e[j] -= 1;
            Monomial(e)
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Largest variable index (0-based) dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", j + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

fn small_binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, s| acc * (n - s) / (s + 1))
}

/// `k[x_1, ..., x_r]` with the standard grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    nvars: usize,
}

impl PolyRing {
    pub fn new(nvars: usize) -> Self {
        assert!(nvars >= 1, "a polynomial ring needs at least one variable");
        PolyRing { nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Number of monomials of degree `d`.
    pub fn dim(&self, d: usize) -> usize {
        small_binom((self.nvars + d - 1) as u64, d as u64) as usize
    }

    /// Degree-`d` monomials from largest to smallest.
    pub fn monomials(&self, d: usize) -> Vec<Monomial> {
        let mut out = Vec::with_capacity(self.dim(d));
        let mut cur = vec![0u32; self.nvars];
        fill(&mut cur, 0, d as u32, &mut out);
        out
    }

    /// Position of `m` in [`PolyRing::monomials`] of its degree.
    pub fn index_of(&self, m: &Monomial) -> usize {
        let r = self.nvars;
        let mut remaining = m.degree();
        let mut idx = 0usize;
        for (k, &a) in m.0.iter().enumerate().take(r - 1) {
            let a = a as usize;
            // monomials sharing the prefix with a larger exponent at position k
            if remaining > a {
                let s = remaining - a - 1;
                idx += small_binom((r - k - 1 + s) as u64, s as u64) as usize;
            }
            remaining -= a;
        }
        idx
    }

    pub fn var(&self, j: usize) -> Monomial {
        Monomial::var(self.nvars, j)
    }
}

fn fill(cur: &mut Vec<u32>, pos: usize, rest: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == cur.len() {
        cur[pos] = rest;
        out.push(Monomial(cur.clone()));
        return;
    }
    for a in (0..=rest).rev() {
        cur[pos] = a;
        fill(cur, pos + 1, rest - a, out);
    }
    cur[pos] = 0;
}

/// Polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        let nvars = m.nvars();
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        Polynomial { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, BigRational)>) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `sum_j coeffs[j] * x_j`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        Polynomial::from_terms(
            n,
            coeffs.iter().enumerate().map(|(j, &c)| (Monomial::var(n, j), BigRational::from_integer(c.into()))),
        )
    }

    pub fn sum_of_variables(nvars: usize) -> Self {
        Polynomial::linear(&vec![1; nvars])
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single monomial of a one-term polynomial.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    /// Common degree of all terms; `None` for zero or non-homogeneous input.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Coefficient vector over `ring.monomials(d)`.
    pub fn to_dense(&self, ring: &PolyRing, field: Field, d: usize) -> Result<Vec<Coeff>, AlgebraError> {
        let mut v = vec![field.zero(); ring.dim(d)];
        for (m, c) in &self.terms {
            debug_assert_eq!(m.degree(), d);
            v[ring.index_of(m)] = field.from_rational(c)?;
        }
        Ok(v)
    }

    /// Inverse of [`Polynomial::to_dense`]. Prime-field entries are read as
    /// their integer representatives.
    pub fn from_dense(ring: &PolyRing, d: usize, v: &[Coeff]) -> Self {
        let monos = ring.monomials(d);
        Polynomial::from_terms(
            ring.nvars(),
            v.iter().zip(monos).filter(|(c, _)| !c.is_zero()).map(|(c, m)| {
                let q = match c {
                    Coeff::Mod(x, _) => BigRational::from_integer(BigInt::from(*x)),
                    other => other.to_rational().unwrap(),
                };
                (m, q)
            }),
        )
    }

    /// Coefficients of a linear form, or an error if this is not one.
    pub fn linear_coefficients(&self) -> Result<Vec<BigRational>, AlgebraError> {
        if self.homogeneous_degree() != Some(1) {
            return Err(AlgebraError::NotLinear(self.to_string()));
        }
        let mut out = vec![BigRational::zero(); self.nvars];
        for (m, c) in &self.terms {
            out[m.max_var().unwrap()] = c.clone();
        }
        Ok(out)
    }

    /// Parses ASCII syntax such as `x1^2*x2 - 3*x3^3` or `1/2*x1 + x2`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self, AlgebraError> {
        Parser { src: s.as_bytes(), pos: 0, nvars }.polynomial()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let is_const = m.degree() == 0;
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if is_const {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse(format!("{msg} at offset {} in `{}`", self.pos, String::from_utf8_lossy(self.src)))
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap().parse().unwrap())
    }

    fn polynomial(&mut self) -> Result<Polynomial, AlgebraError> {
        let mut p = Polynomial::zero(self.nvars);
        let mut sign = BigRational::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            None => return Err(self.err("empty polynomial")),
            _ => {}
        }
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, sign * c);
            match self.peek() {
                Some(b'+') => {
                    sign = BigRational::one();
                    self.pos += 1;
                }
                Some(b'-') => {
                    sign = -BigRational::one();
                    self.pos += 1;
                }
                None => return Ok(p),
                Some(_) => return Err(self.err("unexpected character")),
            }
        }
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), AlgebraError> {
        let mut coeff = BigRational::one();
        let mut exps = vec![0u32; self.nvars];
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let num = self.digits().unwrap();
                    let mut q = BigRational::from_integer(num);
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let den = self.digits().ok_or_else(|| self.err("missing denominator"))?;
                        if den.is_zero() {
                            return Err(self.err("zero denominator"));
                        }
                        q /= BigRational::from_integer(den);
                    }
                    coeff *= q;
                }
                Some(b'x') => {
                    self.pos += 1;
                    let idx = self.digits().ok_or_else(|| self.err("expected variable index"))?;
                    let idx: usize = idx.try_into().map_err(|_| self.err("bad variable index"))?;
                    if idx == 0 || idx > self.nvars {
                        return Err(AlgebraError::RingMismatch { expected: self.nvars, found: idx });
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let v = self.digits().ok_or_else(|| self.err("expected exponent"))?;
                        e = v.try_into().map_err(|_| self.err("exponent too large"))?;
                    }
                    exps[idx - 1] += e;
                }
                _ => return Err(self.err("expected coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
    }
}
