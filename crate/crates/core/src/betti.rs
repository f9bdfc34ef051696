//! Graded Betti tables of artinian quotients.
//!
//! `beta_{i,j}` is computed as the dimension of the degree-`j` part of
//! `H_i(x_1, ..., x_r; A)`, the Koszul homology of the variables on `A`.
//! For monomial ideals the Koszul complex splits into tiny multigraded
//! pieces, which is what makes whole sweeps affordable.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{AlgebraError, BettiError};
use crate::field::Coeff;
use crate::hilbert::HilbertFunction;
use crate::ideal::{GradedIdeal, GradedQuotient};
use crate::linalg::rank;
use crate::macaulay::binomial;
use crate::poly::Monomial;

/// Graded Betti numbers `beta_{i,j}` of `R/I` over a ring with `nvars`
/// variables. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(nvars: usize) -> Self {
        BettiTable { nvars, entries: BTreeMap::new() }
    }

    pub fn from_entries(nvars: usize, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = BettiTable::new(nvars);
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, v: u64) {
        if v > 0 {
            *self.entries.entry((i, j)).or_insert(0) += v;
        }
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// Largest homological index carrying a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `sum (-1)^i beta_{i,j} t^j`, coefficients by power of `t`.
    pub fn euler_numerator(&self) -> Vec<BigInt> {
        let top = self.entries.keys().map(|(_, j)| *j).max().unwrap_or(0);
        let mut out = vec![BigInt::zero(); top + 1];
        for (&(i, j), &v) in &self.entries {
            if i % 2 == 0 {
                out[j] += v;
            } else {
                out[j] -= v;
            }
        }
        trim(out)
    }

    /// JSON object `{"i,j": value}` of the nonzero entries.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.entries.iter().map(|((i, j), v)| (format!("{i},{j}"), (*v).into())).collect();
        serde_json::Value::Object(map)
    }

    /// Reads `{"i,j": value}`. The ring size is `nvars` when given, otherwise
    /// the largest homological index (the projective dimension of an
    /// artinian quotient equals the number of variables).
    pub fn from_json(text: &str, nvars: Option<usize>) -> Result<Self, BettiError> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| BettiError::Parse(e.to_string()))?;
        let obj = value.as_object().ok_or_else(|| BettiError::Parse("expected a JSON object".into()))?;
        let mut entries = Vec::new();
        for (key, v) in obj {
            let (i, j) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
                .ok_or_else(|| BettiError::Parse(format!("bad key `{key}`")))?;
            let n = v.as_i64().ok_or_else(|| BettiError::Parse(format!("bad value at `{key}`")))?;
            if n < 0 {
                return Err(BettiError::NegativeEntry(i, j));
            }
            entries.push(((i, j), n as u64));
        }
        let mut t = BettiTable::from_entries(0, entries);
        t.nvars = nvars.unwrap_or_else(|| t.length());
        Ok(t)
    }

    /// Diagram with row `j - i` and column `i`, zeros printed as `-`.
    pub fn to_diagram(&self) -> String {
        let cols = self.length() + 1;
        let rows = self.entries.keys().map(|(i, j)| j - i).max().unwrap_or(0) + 1;
        let cell = |r: usize, c: usize| match self.get(c, r + c) {
            0 => "-".to_string(),
            v => v.to_string(),
        };
        let width = (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).map(|(r, c)| cell(r, c).len()).max().unwrap_or(1);
        let mut out = String::new();
        for r in 0..rows {
            let line: Vec<String> = (0..cols).map(|c| format!("{:>width$}", cell(r, c))).collect();
            out.push_str(line.join(" ").trim_end());
            out.push('\n');
        }
        out
    }

    /// Parses the diagram layout of [`BettiTable::to_diagram`]; columns are
    /// separated by whitespace or `&`, rows may end in `\\`.
    pub fn from_diagram(text: &str, nvars: Option<usize>) -> Result<Self, BettiError> {
        let mut entries = Vec::new();
        let lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        for (row, line) in lines.enumerate() {
            let line = line.trim_end_matches('\\').replace('&', " ");
            for (col, tok) in line.split_whitespace().enumerate() {
                if tok == "-" || tok == "." {
                    continue;
                }
                let v: i64 = tok.parse().map_err(|_| BettiError::Parse(format!("bad entry `{tok}`")))?;
                if v < 0 {
                    return Err(BettiError::NegativeEntry(col, row + col));
                }
                entries.push(((col, row + col), v as u64));
            }
        }
        let mut t = BettiTable::from_entries(0, entries);
        t.nvars = nvars.unwrap_or_else(|| t.length());
        Ok(t)
    }

    /// JSON when the text starts with `{`, diagram otherwise.
    pub fn parse(text: &str, nvars: Option<usize>) -> Result<Self, BettiError> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text, nvars)
        } else {
            Self::from_diagram(text, nvars)
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_diagram())
    }
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

/// `H(t) (1 - t)^r` as coefficients by power of `t`.
pub fn hilbert_numerator(h: &HilbertFunction, nvars: usize) -> Vec<BigInt> {
    let mut poly: Vec<BigInt> = h.values().iter().map(|&v| BigInt::from(v)).collect();
    for _ in 0..nvars {
        let mut next = vec![BigInt::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c;
        }
        poly = next;
    }
    trim(poly)
}

/// Whether the alternating sum of the table equals `H(t) (1 - t)^r`.
pub fn hilbert_numerator_check(table: &BettiTable, h: &HilbertFunction) -> bool {
    table.euler_numerator() == hilbert_numerator(h, table.nvars())
}

/// Readable form of a numerator, e.g. `1 - 3t^4 - 10t^6`.
pub fn format_numerator(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let neg = c < &BigInt::zero();
        let abs = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let one = abs == BigInt::from(1);
        match k {
            0 => out.push_str(&abs.to_string()),
            _ => {
                if !one {
                    out.push_str(&abs.to_string());
                }
                out.push('t');
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Betti table from Koszul homology. Monomial ideals take the multigraded
/// route; everything else goes through [`koszul_betti_graded`].
pub fn koszul_betti(a: &GradedQuotient) -> BettiTable {
    if a.ideal().is_monomial() {
        koszul_betti_multigraded(a)
    } else {
        koszul_betti_graded(a)
    }
}

fn subsets_of_size(r: usize, i: usize) -> Vec<u32> {
    (0u32..(1 << r)).filter(|s| s.count_ones() as usize == i).collect()
}

/// Koszul homology computed one internal degree at a time.
pub fn koszul_betti_graded(a: &GradedQuotient) -> BettiTable {
    let r = a.ring().nvars();
    let field = a.field();
    let e_plus = a.num_degrees();
    let mut table = BettiTable::new(r);
    if e_plus == 0 {
        return table;
    }
    let var_mats: Vec<Vec<Vec<Vec<Coeff>>>> =
        (0..e_plus).map(|d| (0..r).map(|k| a.variable_matrix(d, k)).collect()).collect();
    let subsets: Vec<Vec<u32>> = (0..=r).map(|i| subsets_of_size(r, i)).collect();
    for j in 0..e_plus + r {
        // basis of (K_i)_j: (subset, standard basis vector of A_{j-i})
        let dims: Vec<usize> = (0..=r).map(|i| if j >= i { subsets[i].len() * a.dim(j - i) } else { 0 }).collect();
        let mut ranks = vec![0usize; r + 2];
        for i in 1..=r {
            if dims[i] == 0 || dims[i - 1] == 0 {
                continue;
            }
            let d = j - i;
            let h_low = a.dim(d + 1);
            let offset = |s: u32| subsets[i - 1].iter().position(|&t| t == s).unwrap() * h_low;
            let mut rows = Vec::with_capacity(dims[i]);
            for &s in &subsets[i] {
                for b in 0..a.dim(d) {
                    let mut row = vec![field.zero(); dims[i - 1]];
                    let members: Vec<usize> = (0..r).filter(|k| s >> k & 1 == 1).collect();
                    for (t, &k) in members.iter().enumerate() {
                        let base = offset(s & !(1 << k));
                        for (c, y) in var_mats[d][k][b].iter().enumerate() {
                            if !y.is_zero() {
                                row[base + c] = if t % 2 == 0 { y.clone() } else { -y };
                            }
                        }
                    }
                    rows.push(row);
                }
            }
            ranks[i] = rank(field, dims[i - 1], rows);
        }
        for i in 0..=r {
            let beta = dims[i] - ranks[i] - ranks[i + 1];
            table.add(i, j, beta as u64);
        }
    }
    table
}

/// Koszul homology of a monomial quotient, split by multidegree.
pub fn koszul_betti_multigraded(a: &GradedQuotient) -> BettiTable {
    let r = a.ring().nvars();
    let ring = *a.ring();
    let field = a.field();
    let mut table = BettiTable::new(r);
    let is_std = |m: &Monomial| a.is_standard(m.degree(), ring.index_of(m));
    let mut seen = HashSet::new();
    for d in 0..a.num_degrees() {
        for m in a.standard_monomials(d) {
            for s in 0u32..(1 << r) {
                let mut alpha = m.exps().to_vec();
                for (k, x) in alpha.iter_mut().enumerate() {
                    *x += s >> k & 1;
                }
                seen.insert(alpha);
            }
        }
    }
    let minus = |alpha: &[u32], s: u32| -> Option<Monomial> {
        let mut v = alpha.to_vec();
        for (k, x) in v.iter_mut().enumerate() {
            if s >> k & 1 == 1 {
                *x = x.checked_sub(1)?;
            }
        }
        Some(Monomial::new(v))
    };
    for alpha in seen {
        let j: usize = alpha.iter().map(|&x| x as usize).sum();
        let basis: Vec<Vec<u32>> = (0..=r)
            .map(|i| {
                subsets_of_size(r, i)
                    .into_iter()
                    .filter(|&s| minus(&alpha, s).is_some_and(|m| is_std(&m)))
                    .collect()
            })
            .collect();
        let mut ranks = vec![0usize; r + 2];
        for i in 1..=r {
            if basis[i].is_empty() || basis[i - 1].is_empty() {
                continue;
            }
            let rows = basis[i].iter().map(|&s| {
                let mut row = vec![field.zero(); basis[i - 1].len()];
                let members: Vec<usize> = (0..r).filter(|k| s >> k & 1 == 1).collect();
                for (t, &k) in members.iter().enumerate() {
                    if let Some(pos) = basis[i - 1].iter().position(|&u| u == s & !(1 << k)) {
                        row[pos] = field.from_i64(if t % 2 == 0 { 1 } else { -1 });
                    }
                }
                row
            });
            ranks[i] = rank(field, basis[i - 1].len(), rows);
        }
        for i in 0..=r {
            table.add(i, j, (basis[i].len() - ranks[i] - ranks[i + 1]) as u64);
        }
    }
    table
}

/// True when `ideal` is a monomial ideal with `x_k u / x_m` in the ideal for
/// every minimal generator `u`, `m` its largest variable and `k < m`.
pub fn is_stable(ideal: &GradedIdeal) -> bool {
    let Some(gens) = ideal.minimal_monomial_generators() else {
        return false;
    };
    let in_ideal = |m: &Monomial| gens.iter().any(|g| g.divides(m));
    gens.iter().all(|u| match u.max_var() {
        None => true,
        Some(m) => (0..m).all(|k| in_ideal(&u.div_var(m).unwrap().mul_var(k))),
    })
}

/// Closed form for stable ideals: each minimal generator `u` of degree `delta`
/// with largest variable `x_m` contributes `C(m - 1, i)` to `beta_{i, delta + i}(I)`,
/// that is to `beta_{i+1, delta + i}(R/I)`.
pub fn eliahou_kervaire_betti(ideal: &GradedIdeal) -> Result<BettiTable, AlgebraError> {
    if !is_stable(ideal) {
        return Err(AlgebraError::NotStable);
    }
    let r = ideal.ring().nvars();
    let mut table = BettiTable::new(r);
    table.add(0, 0, 1);
    for u in ideal.minimal_monomial_generators().unwrap() {
        let Some(m) = u.max_var() else {
            // the unit ideal: R/I = 0
            return Ok(BettiTable::new(r));
        };
        let delta = u.degree();
        for i in 0..=m {
            let c = u64::try_from(binomial(m as i64, i as u64)).unwrap();
            table.add(i + 1, delta + i, c);
        }
    }
    Ok(table)
}

/// Entrywise `big >= small`.
pub fn dominates(big: &BettiTable, small: &BettiTable) -> Result<bool, BettiError> {
    if big.nvars != small.nvars {
        return Err(BettiError::RingMismatch(big.nvars, small.nvars));
    }
    Ok(small.entries().all(|((i, j), v)| big.get(i, j) >= v))
}

/// One consecutive cancellation: `beta_{i,j}` and `beta_{i+1,j}` both lowered by `amount`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cancellation {
    pub i: usize,
    pub j: usize,
    pub amount: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationReport {
    pub holds: bool,
    pub witnesses: Vec<Cancellation>,
}

/// Whether `low` arises from `high` by consecutive cancellations.
///
/// In each internal degree `j` the amounts are forced from `i = 0` upward:
/// `c_i = high[i,j] - low[i,j] - c_{i-1}`, and all must be nonnegative with
/// nothing left to cancel past the last column.
pub fn is_consecutive_cancellation(low: &BettiTable, high: &BettiTable) -> Result<CancellationReport, BettiError> {
    if low.nvars != high.nvars {
        return Err(BettiError::RingMismatch(low.nvars, high.nvars));
    }
    let top_i = low.length().max(high.length());
    let degrees: std::collections::BTreeSet<usize> =
        low.entries.keys().chain(high.entries.keys()).map(|(_, j)| *j).collect();
    let mut witnesses = Vec::new();
    for j in degrees {
        let mut prev: i128 = 0;
        for i in 0..=top_i + 1 {
            let c = high.get(i, j) as i128 - low.get(i, j) as i128 - prev;
            if c < 0 || (i == top_i + 1 && c != 0) {
                return Ok(CancellationReport { holds: false, witnesses: Vec::new() });
            }
            if c > 0 && i <= top_i {
                witnesses.push(Cancellation { i, j, amount: c as u64 });
            }
            prev = c;
        }
    }
    Ok(CancellationReport { holds: true, witnesses })
}

/// Table of the lex ideal with Hilbert function `h` in `nvars` variables.
pub fn lex_betti(nvars: usize, h: &HilbertFunction) -> Result<BettiTable, AlgebraError> {
    let lex = crate::ideal::lex_ideal(crate::poly::PolyRing::new(nvars), h)?;
    eliahou_kervaire_betti(&lex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ideal::lex_ideal;
    use crate::poly::{PolyRing, Polynomial};

    fn quotient(r: usize, gens: &[&str]) -> GradedQuotient {
        let gens = gens.iter().map(|g| Polynomial::parse(g, r).unwrap()).collect();
        GradedIdeal::new(PolyRing::new(r), gens).unwrap().quotient(30).unwrap()
    }

    fn table(r: usize, entries: &[((usize, usize), u64)]) -> BettiTable {
        BettiTable::from_entries(r, entries.iter().copied())
    }

    /// Syzygies written out by hand: x2*x1^2 - x1*(x1 x2) and x2^2*(x1 x2) - x1*x2^3.
    #[test]
    fn hand_computed_table() {
        let expected = table(2, &[((0, 0), 1), ((1, 2), 2), ((1, 3), 1), ((2, 3), 1), ((2, 4), 1)]);
        let a = quotient(2, &["x1^2", "x1*x2", "x2^3"]);
        assert_eq!(koszul_betti(&a), expected);
        assert_eq!(koszul_betti_graded(&a), expected);
        assert_eq!(eliahou_kervaire_betti(a.ideal()).unwrap(), expected);
        assert!(hilbert_numerator_check(&expected, &"1,2,1".parse().unwrap()));
    }

    #[test]
    fn residue_field_is_koszul() {
        for r in 1..=4 {
            let a = GradedIdeal::zero(PolyRing::new(r), Field::Rational).add_maximal_power(1).quotient(3).unwrap();
            let t = koszul_betti(&a);
            for i in 0..=r {
                assert_eq!(t.get(i, i), u64::try_from(binomial(r as i64, i as u64)).unwrap());
            }
            assert_eq!(t, koszul_betti_graded(&a));
            assert_eq!(t, eliahou_kervaire_betti(a.ideal()).unwrap());
            assert!(hilbert_numerator_check(&t, &"1".parse().unwrap()));
        }
    }

    #[test]
    fn non_monomial_route() {
        // a general-coordinates version of (x1^2, x2^2) has the same table
        let a = quotient(2, &["x1^2 + x1*x2", "x2^2 - x1*x2"]);
        let b = quotient(2, &["x1^2", "x2^2"]);
        assert_eq!(koszul_betti(&a), koszul_betti(&b));
    }

    #[test]
    fn stability() {
        let ring = PolyRing::new(3);
        let lex = lex_ideal(ring, &"1,3,4,2".parse().unwrap()).unwrap();
        assert!(is_stable(&lex));
        let ci = GradedIdeal::from_monomials(ring, vec![Monomial::new(vec![2, 0, 0]), Monomial::new(vec![0, 2, 0]), Monomial::new(vec![0, 0, 2])]);
        assert!(!is_stable(&ci));
        assert_eq!(eliahou_kervaire_betti(&ci).unwrap_err(), AlgebraError::NotStable);
    }

    #[test]
    fn cancellation_logic() {
        let t = table(2, &[((0, 0), 1), ((1, 2), 2), ((2, 2), 1), ((1, 3), 1), ((2, 4), 2)]);
        let report = is_consecutive_cancellation(&t, &t).unwrap();
        assert!(report.holds && report.witnesses.is_empty());
        let low = table(2, &[((0, 0), 1), ((1, 2), 1), ((1, 3), 1), ((2, 4), 2)]);
        let report = is_consecutive_cancellation(&low, &t).unwrap();
        assert!(report.holds);
        assert_eq!(report.witnesses, vec![Cancellation { i: 1, j: 2, amount: 1 }]);
        assert!(!is_consecutive_cancellation(&t, &low).unwrap().holds);
        // removing an entry without a partner is not a cancellation
        let lonely = table(2, &[((0, 0), 1), ((1, 2), 2), ((2, 2), 1), ((2, 4), 2)]);
        assert!(!is_consecutive_cancellation(&lonely, &t).unwrap().holds);
    }

    #[test]
    fn diagram_round_trip() {
        let t = table(3, &[((0, 0), 1), ((1, 4), 3), ((2, 5), 2), ((1, 5), 2), ((2, 6), 2), ((1, 6), 12), ((2, 7), 24), ((3, 8), 12)]);
        let text = t.to_diagram();
        assert_eq!(
            text,
            " 1  -  -  -\n -  -  -  -\n -  -  -  -\n -  3  2  -\n -  2  2  -\n - 12 24 12\n"
        );
        assert_eq!(BettiTable::from_diagram(&text, None).unwrap(), t);
        let json = t.to_json().to_string();
        assert_eq!(BettiTable::from_json(&json, None).unwrap(), t);
        assert_eq!(BettiTable::from_json(r#"{"1,2": -1}"#, Some(2)).unwrap_err(), BettiError::NegativeEntry(1, 2));
        let latex = "1 & - & - \\\\\n- & 3 & 2 \\\\";
        assert_eq!(BettiTable::from_diagram(latex, Some(3)).unwrap().get(1, 2), 3);
    }

    #[test]
    fn numerator_formatting() {
        let n = hilbert_numerator(&"1,3,6,10,12,12".parse().unwrap(), 3);
        assert_eq!(format_numerator(&n), "1 - 3t^4 - 10t^6 + 24t^7 - 12t^8");
    }
}
