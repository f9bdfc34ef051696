//! Exact row echelon forms over [`Field`].

use crate::field::{Coeff, Field};

/// A subspace of `field^ncols` kept in reduced row echelon form.
///
/// Pivots are the leftmost nonzero entry of each row, so when columns are
/// listed from largest to smallest monomial the pivot columns are the
/// leading monomials and the remaining columns form a normal-form basis of
/// the quotient space.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Coeff>>,
    /// Row holding the pivot of each column.
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon { field, ncols, rows: Vec::new(), pivot_row: vec![None; ncols] }
    }

    /// The whole space.
    pub fn full(field: Field, ncols: usize) -> Self {
        let mut e = Echelon::new(field, ncols);
        for c in 0..ncols {
            e.push_unit(c);
        }
        e
    }

    /// Span of the given coordinate vectors.
    pub fn from_units(field: Field, ncols: usize, cols: impl IntoIterator<Item = usize>) -> Self {
        let mut e = Echelon::new(field, ncols);
        for c in cols {
            if e.pivot_row[c].is_none() {
                e.push_unit(c);
            }
        }
        e
    }

    fn push_unit(&mut self, c: usize) {
        // only valid when no existing row has a nonzero entry in column c
        let mut row = vec![self.field.zero(); self.ncols];
        row[c] = self.field.one();
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(row);
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn rows(&self) -> &[Vec<Coeff>] {
        &self.rows
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col].is_some()
    }

    /// The reduced row whose pivot is `col`.
    pub fn pivot_row_of(&self, col: usize) -> Option<&[Coeff]> {
        self.pivot_row[col].map(|r| self.rows[r].as_slice())
    }

    /// Columns without a pivot, in increasing order.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_row[c].is_none()).collect()
    }

    /// Reduces `v` modulo the span; afterwards `v` vanishes on pivot columns.
    pub fn reduce(&self, v: &mut [Coeff]) {
        debug_assert_eq!(v.len(), self.ncols);
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[c] {
                let factor = v[c].clone();
                let row = &self.rows[r];
                for k in c..self.ncols {
                    if !row[k].is_zero() {
                        v[k] = &v[k] - &(&factor * &row[k]);
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        if self.is_full() {
            return true;
        }
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Coeff::is_zero)
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Coeff>) -> bool {
        if self.is_full() {
            return false;
        }
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        if !v[p].is_one() {
            let inv = v[p].inv();
            for c in v.iter_mut().skip(p) {
                if !c.is_zero() {
                    *c = &*c * &inv;
                }
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for k in p..self.ncols {
                if !v[k].is_zero() {
                    row[k] = &row[k] - &(&factor * &v[k]);
                }
            }
        }
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(v);
        true
    }
}

/// Rank of the matrix with the given rows.
pub fn rank(field: Field, ncols: usize, rows: impl IntoIterator<Item = Vec<Coeff>>) -> usize {
    let mut e = Echelon::new(field, ncols);
    for row in rows {
        e.insert(row);
        if e.is_full() {
            break;
        }
    }
    e.rank()
}

/// Basis of `{ a : sum_k a_k * images[k] = 0 }`, the kernel of the map
/// sending the `k`-th basis vector to `images[k]` (each of length `target_dim`).
pub fn kernel(field: Field, images: &[Vec<Coeff>], target_dim: usize) -> Vec<Vec<Coeff>> {
    let n = images.len();
    // columns of this matrix are the images
    let mut e = Echelon::new(field, n);
    for c in 0..target_dim {
        let row: Vec<Coeff> = images.iter().map(|img| img[c].clone()).collect();
        e.insert(row);
    }
    e.free_columns()
        .into_iter()
        .map(|free| {
            let mut v = vec![field.zero(); n];
            v[free] = field.one();
            for (p, slot) in e.pivot_row.iter().enumerate() {
                if let Some(r) = slot {
                    v[p] = -&e.rows[*r][free];
                }
            }
            v
        })
        .collect()
}
