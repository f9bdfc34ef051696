//! Homogeneous ideals and their artinian quotients, computed degree by degree.
//!
//! The degree-`d` piece `I_d` is the span of `x_j * I_{d-1}` together with
//! the generators of degree `d`, kept in reduced row echelon form over the
//! degree-`d` monomials listed from largest to smallest. The free columns of
//! `I_d` are the standard monomials, a basis of `A_d = R_d / I_d`.

use std::collections::HashSet;

use crate::error::AlgebraError;
use crate::field::{Coeff, Field};
use crate::hilbert::HilbertFunction;
use crate::linalg::{kernel, Echelon};
use crate::poly::{Monomial, PolyRing, Polynomial};

/// Cap used when nothing better is known.
pub const DEFAULT_DCAP: usize = 30;

#[derive(Clone, Debug)]
pub struct GradedIdeal {
    ring: PolyRing,
    field: Field,
    gens: Vec<Polynomial>,
    /// Set while every generator is a monomial.
    monomial_gens: Option<Vec<Monomial>>,
    pieces: Vec<Echelon>,
}

impl GradedIdeal {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        Self::with_field(ring, gens, Field::Rational)
    }

    pub fn with_field(ring: PolyRing, gens: Vec<Polynomial>, field: Field) -> Result<Self, AlgebraError> {
        let mut ideal = GradedIdeal { ring, field, gens: Vec::new(), monomial_gens: Some(Vec::new()), pieces: Vec::new() };
        for g in gens {
            ideal.check_generator(&g)?;
            ideal.push_gen(g);
        }
        Ok(ideal)
    }

    /// Ideal generated by monomials.
    pub fn from_monomials(ring: PolyRing, gens: Vec<Monomial>) -> Self {
        Self::new(ring, gens.into_iter().map(Polynomial::from_monomial).collect())
            .expect("monomials are homogeneous")
    }

    /// The same generators over another field; cached pieces are dropped.
    pub fn in_field(self, field: Field) -> Result<Self, AlgebraError> {
        if field == self.field {
            return Ok(self);
        }
        Self::with_field(self.ring, self.gens, field)
    }

    /// The zero ideal.
    pub fn zero(ring: PolyRing, field: Field) -> Self {
        GradedIdeal { ring, field, gens: Vec::new(), monomial_gens: Some(Vec::new()), pieces: Vec::new() }
    }

    fn check_generator(&self, g: &Polynomial) -> Result<(), AlgebraError> {
        if g.nvars() != self.ring.nvars() {
            return Err(AlgebraError::RingMismatch { expected: self.ring.nvars(), found: g.nvars() });
        }
        if g.is_zero() {
            return Err(AlgebraError::ZeroGenerator);
        }
        let d = g.homogeneous_degree().ok_or_else(|| AlgebraError::NonHomogeneousGenerator(g.to_string()))?;
        // surfaces bad reductions in prime mode
        g.to_dense(&self.ring, self.field, d)?;
        Ok(())
    }

    fn push_gen(&mut self, g: Polynomial) {
        match (g.as_monomial(), self.monomial_gens.as_mut()) {
            (Some(m), Some(ms)) => ms.push(m.clone()),
            _ => self.monomial_gens = None,
        }
        let d = g.homogeneous_degree().unwrap();
        self.pieces.truncate(d);
        self.gens.push(g);
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial_gens.is_some()
    }

    /// Minimal monomial generators, sorted from largest to smallest within
    /// each degree and by increasing degree. `None` if the ideal is not
    /// generated by monomials.
    pub fn minimal_monomial_generators(&self) -> Option<Vec<Monomial>> {
        let gens = self.monomial_gens.as_ref()?;
        let mut sorted: Vec<Monomial> = gens.clone();
        sorted.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        sorted.dedup();
        let mut minimal: Vec<Monomial> = Vec::new();
        for m in sorted {
            if !minimal.iter().any(|g| g.divides(&m)) {
                minimal.push(m);
            }
        }
        Some(minimal)
    }

    /// Computes the pieces `I_0, ..., I_d`.
    pub fn materialize(&mut self, d: usize) {
        while self.pieces.len() <= d {
            let k = self.pieces.len();
            let piece = self.build_piece(k);
            self.pieces.push(piece);
        }
    }

    fn build_piece(&self, k: usize) -> Echelon {
        let dim = self.ring.dim(k);
        if k > 0 && self.pieces[k - 1].is_full() {
            return Echelon::full(self.field, dim);
        }
        let monos = self.ring.monomials(k);
        if let Some(mgens) = &self.monomial_gens {
            let here: HashSet<&Monomial> = mgens.iter().filter(|m| m.degree() == k).collect();
            let cols = monos.iter().enumerate().filter_map(|(c, m)| {
                let from_below = k > 0
                    && (0..self.ring.nvars()).any(|j| {
                        m.div_var(j).is_some_and(|q| self.pieces[k - 1].is_pivot(self.ring.index_of(&q)))
                    });
                (from_below || here.contains(m)).then_some(c)
            });
            return Echelon::from_units(self.field, dim, cols.collect::<Vec<_>>());
        }
        let mut piece = Echelon::new(self.field, dim);
        if k > 0 {
            let lower = self.ring.monomials(k - 1);
            let shift: Vec<Vec<usize>> = (0..self.ring.nvars())
                .map(|j| lower.iter().map(|m| self.ring.index_of(&m.mul_var(j))).collect())
                .collect();
            'rows: for row in self.pieces[k - 1].rows() {
                for map in &shift {
                    let mut v = vec![self.field.zero(); dim];
                    for (c, x) in row.iter().enumerate() {
                        if !x.is_zero() {
                            v[map[c]] = x.clone();
                        }
                    }
                    piece.insert(v);
                    if piece.is_full() {
                        break 'rows;
                    }
                }
            }
        }
        for g in self.gens.iter().filter(|g| g.homogeneous_degree() == Some(k)) {
            if piece.is_full() {
                break;
            }
            piece.insert(g.to_dense(&self.ring, self.field, k).unwrap());
        }
        piece
    }

    /// Reduced echelon basis of `I_d`.
    pub fn piece(&mut self, d: usize) -> &Echelon {
        self.materialize(d);
        &self.pieces[d]
    }

    /// `dim R_d - dim I_d` for `d = 0..=through`, without requiring the
    /// quotient to be artinian.
    pub fn hilbert_values(&mut self, through: usize) -> Vec<u64> {
        self.materialize(through);
        self.pieces.iter().take(through + 1).map(|p| (p.ncols() - p.rank()) as u64).collect()
    }

    pub fn contains(&mut self, p: &Polynomial) -> Result<bool, AlgebraError> {
        if p.is_zero() {
            return Ok(true);
        }
        let d = p.homogeneous_degree().ok_or_else(|| AlgebraError::NonHomogeneousGenerator(p.to_string()))?;
        let v = p.to_dense(&self.ring, self.field, d)?;
        Ok(self.piece(d).contains(&v))
    }

    /// Adds generators, skipping those already in the ideal.
    pub fn add_generators(&mut self, gens: Vec<Polynomial>) -> Result<(), AlgebraError> {
        for g in gens {
            self.check_generator(&g)?;
            if !self.contains(&g)? {
                self.push_gen(g);
            }
        }
        Ok(())
    }

    /// Adds the degree-`d` vectors (over `ring.monomials(d)`) that are not
    /// yet in `I_d` as generators.
    pub fn add_dense_generators(&mut self, d: usize, vecs: Vec<Vec<Coeff>>) {
        self.materialize(d);
        let mut added = Vec::new();
        for v in vecs {
            if self.pieces[d].insert(v.clone()) {
                added.push(Polynomial::from_dense(&self.ring, d, &v));
            }
        }
        if added.is_empty() {
            return;
        }
        self.pieces.truncate(d + 1);
        let piece = self.pieces.pop().unwrap();
        for g in added {
            self.push_gen(g);
        }
        // the enlarged piece is exactly what the new generators span in degree d
        self.pieces.push(piece);
    }

    /// Degree-truncated quotient `R/I`, failing if it does not vanish by `d_cap`.
    pub fn quotient(mut self, d_cap: usize) -> Result<GradedQuotient, AlgebraError> {
        for d in 0..=d_cap {
            self.materialize(d);
            if self.pieces[d].is_full() {
                return Ok(GradedQuotient::from_materialized(self, d));
            }
        }
        Err(AlgebraError::NotArtinianByCap(d_cap))
    }

    /// `I + (x_1, ..., x_r)^s`.
    pub fn add_maximal_power(&self, s: usize) -> GradedIdeal {
        let mut out = self.clone();
        let powers = self.ring.monomials(s).into_iter().map(Polynomial::from_monomial).collect();
        out.add_generators(powers).expect("monomials are valid generators");
        out
    }

    /// `(I : L)`, exact in degrees `0..=d_cap`.
    pub fn colon_by_linear_form(&mut self, form: &Polynomial, d_cap: usize) -> Result<GradedIdeal, AlgebraError> {
        let coeffs = self.linear_coeffs(form)?;
        let mut colon = GradedIdeal::zero(self.ring, self.field);
        for d in 0..=d_cap {
            let next = self.ring.dim(d + 1);
            self.materialize(d + 1);
            let piece = &self.pieces[d + 1];
            let images: Vec<Vec<Coeff>> = self
                .ring
                .monomials(d)
                .iter()
                .map(|m| {
                    let mut v = vec![self.field.zero(); next];
                    for (j, c) in coeffs.iter().enumerate() {
                        if !c.is_zero() {
                            v[self.ring.index_of(&m.mul_var(j))] = c.clone();
                        }
                    }
                    piece.reduce(&mut v);
                    v
                })
                .collect();
            let ker = kernel(self.field, &images, next);
            colon.add_dense_generators(d, ker);
        }
        Ok(colon)
    }

    /// `I + (L)`.
    pub fn with_linear_form(&self, form: &Polynomial) -> Result<GradedIdeal, AlgebraError> {
        let mut out = self.clone();
        out.add_generators(vec![form.clone()])?;
        Ok(out)
    }

    pub(crate) fn linear_coeffs(&self, form: &Polynomial) -> Result<Vec<Coeff>, AlgebraError> {
        if form.nvars() != self.ring.nvars() {
            return Err(AlgebraError::RingMismatch { expected: self.ring.nvars(), found: form.nvars() });
        }
        form.linear_coefficients()?.iter().map(|q| self.field.from_rational(q)).collect()
    }
}

/// Hilbert function of `R/I`, through its first zero.
pub fn hilbert_function(ideal: &GradedIdeal, d_cap: usize) -> Result<HilbertFunction, AlgebraError> {
    Ok(ideal.clone().quotient(d_cap)?.hilbert_function().clone())
}

/// Artinian quotient `A = R/I` with monomial bases of each `A_d`.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    ideal: GradedIdeal,
    hf: HilbertFunction,
    /// Standard monomial columns of each degree `0..=e`.
    standard: Vec<Vec<usize>>,
    /// Column index to position in `standard`.
    position: Vec<Vec<Option<usize>>>,
}

impl GradedQuotient {
    fn from_materialized(ideal: GradedIdeal, vanish: usize) -> Self {
        let standard: Vec<Vec<usize>> = (0..vanish).map(|d| ideal.pieces[d].free_columns()).collect();
        let position = standard
            .iter()
            .enumerate()
            .map(|(d, cols)| {
                let mut pos = vec![None; ideal.ring.dim(d)];
                for (i, &c) in cols.iter().enumerate() {
                    pos[c] = Some(i);
                }
                pos
            })
            .collect();
        let hf = HilbertFunction::new(standard.iter().map(|s| s.len() as u64).collect());
        GradedQuotient { ideal, hf, standard, position }
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ideal.ring
    }

    pub fn field(&self) -> Field {
        self.ideal.field
    }

    pub fn hilbert_function(&self) -> &HilbertFunction {
        &self.hf
    }

    /// `dim A_d`.
    pub fn dim(&self, d: usize) -> usize {
        self.standard.get(d).map_or(0, Vec::len)
    }

    /// Number of nonzero graded pieces, i.e. `e + 1`.
    pub fn num_degrees(&self) -> usize {
        self.standard.len()
    }

    pub fn standard_monomials(&self, d: usize) -> Vec<Monomial> {
        let monos = self.ring().monomials(d);
        self.standard.get(d).map_or_else(Vec::new, |cols| cols.iter().map(|&c| monos[c].clone()).collect())
    }

    pub(crate) fn standard_columns(&self, d: usize) -> &[usize] {
        self.standard.get(d).map_or(&[], Vec::as_slice)
    }

    /// Whether the degree-`d` monomial with column `col` is standard.
    pub(crate) fn is_standard(&self, d: usize, col: usize) -> bool {
        self.position.get(d).is_some_and(|p| p[col].is_some())
    }

    /// Coordinates in the standard basis of `A_d` of the monomial in column `col` of `R_d`.
    fn monomial_image(&self, d: usize, col: usize) -> Vec<Coeff> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim(d)];
        if out.is_empty() {
            return out;
        }
        if let Some(i) = self.position[d][col] {
            out[i] = field.one();
        } else {
            // e_p = (e_p - row_p) + row_p, and e_p - row_p lives on free columns
            let row = self.ideal.pieces[d].pivot_row_of(col).unwrap();
            for (i, &c) in self.standard[d].iter().enumerate() {
                if !row[c].is_zero() {
                    out[i] = -&row[c];
                }
            }
        }
        out
    }

    /// Standard-basis coordinates of `v` (a vector over `R_d`).
    pub fn normal_form(&self, d: usize, v: &[Coeff]) -> Vec<Coeff> {
        let field = self.field();
        let mut out = vec![field.zero(); self.dim(d)];
        for (col, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, y) in out.iter_mut().zip(self.monomial_image(d, col)) {
                if !y.is_zero() {
                    *o = &*o + &(x * &y);
                }
            }
        }
        out
    }

    /// Matrix of multiplication by `x_j` from `A_d` to `A_{d+1}`, one row per
    /// standard monomial of degree `d`.
    pub fn variable_matrix(&self, d: usize, j: usize) -> Vec<Vec<Coeff>> {
        let ring = *self.ring();
        let monos = ring.monomials(d);
        self.standard_columns(d)
            .iter()
            .map(|&c| {
                let target = ring.index_of(&monos[c].mul_var(j));
                self.monomial_image(d + 1, target)
            })
            .collect()
    }

    /// Matrix of multiplication by `sum_j coeffs[j] x_j` from `A_d` to `A_{d+1}`.
    pub fn linear_matrix(&self, d: usize, coeffs: &[Coeff]) -> Vec<Vec<Coeff>> {
        let field = self.field();
        let mut out = vec![vec![field.zero(); self.dim(d + 1)]; self.dim(d)];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (row, img) in out.iter_mut().zip(self.variable_matrix(d, j)) {
                for (o, y) in row.iter_mut().zip(img) {
                    if !y.is_zero() {
                        *o = &*o + &(c * &y);
                    }
                }
            }
        }
        out
    }
}

/// Lex-segment ideal with Hilbert function `h`: in each degree the ideal is
/// spanned by the lexicographically largest `dim R_d - h_d` monomials.
pub fn lex_ideal(ring: PolyRing, h: &HilbertFunction) -> Result<GradedIdeal, AlgebraError> {
    if !h.is_o_sequence() {
        return Err(AlgebraError::NotAnOSequence(h.to_string()));
    }
    if h.codimension() > ring.nvars() as u64 {
        return Err(AlgebraError::CodimensionExceedsRing { codim: h.codimension(), vars: ring.nvars() });
    }
    let top = h.len(); // first degree where h vanishes
    let mut gens = Vec::new();
    let mut prev_count = 0usize;
    for d in 1..=top {
        let monos = ring.monomials(d);
        let count = monos.len() - h.get(d) as usize;
        for m in monos.iter().take(count) {
            let covered = (0..ring.nvars())
                .any(|j| m.div_var(j).is_some_and(|q| d > 1 && ring.index_of(&q) < prev_count));
            if !covered {
                gens.push(m.clone());
            }
        }
        prev_count = count;
    }
    Ok(GradedIdeal::from_monomials(ring, gens))
}
