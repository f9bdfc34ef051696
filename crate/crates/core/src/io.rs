//! Text formats for ideals and point sets.
//!
//! Ideal files start with `ring <r>` and list one generator per line:
//!
//! ```text
//! # the designated non-WLP algebra
//! ring 3
//! x1^3
//! x2^3
//! x3^3
//! x1*x2*x3
//! ```
//!
//! Points files hold one point per line as space-separated homogeneous
//! coordinates, each an integer or `p/q`. In both formats `#` starts a
//! comment and blank lines are ignored.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::AlgebraError;
use crate::field::Field;
use crate::ideal::GradedIdeal;
use crate::points::Point;
use crate::poly::{PolyRing, Polynomial};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Parses an ideal file.
pub fn parse_ideal(text: &str, field: Field) -> Result<GradedIdeal, AlgebraError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or_else(|| AlgebraError::Parse("missing `ring <r>` header".into()))?;
    let r = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["ring", r] => r.parse::<usize>().ok().filter(|&r| r >= 1),
        _ => None,
    }
    .ok_or_else(|| AlgebraError::Parse(format!("line {n}: expected `ring <r>`, found `{header}`")))?;
    let gens = lines
        .map(|(n, l)| Polynomial::parse(l, r).map_err(|e| AlgebraError::Parse(format!("line {n}: {e}"))))
        .collect::<Result<Vec<_>, _>>()?;
    GradedIdeal::with_field(PolyRing::new(r), gens, field)
}

/// Renders generators in the ideal file format.
pub fn write_ideal(ring: &PolyRing, gens: &[Polynomial]) -> String {
    let mut out = format!("ring {}\n", ring.nvars());
    for g in gens {
        writeln!(out, "{g}").unwrap();
    }
    out
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let q: BigInt = q.parse().ok()?;
            if q == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(p.parse().ok()?, q))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Parses a points file. All points must have the same number of coordinates.
pub fn parse_points(text: &str) -> Result<Vec<Point>, AlgebraError> {
    let mut points: Vec<Point> = Vec::new();
    for (n, line) in content_lines(text) {
        let point = line
            .split_whitespace()
            .map(|c| parse_rational(c).ok_or_else(|| AlgebraError::Parse(format!("line {n}: bad coordinate `{c}`"))))
            .collect::<Result<Point, _>>()?;
        if let Some(first) = points.first() {
            if first.len() != point.len() {
                return Err(AlgebraError::Parse(format!(
                    "line {n}: {} coordinates, expected {}",
                    point.len(),
                    first.len()
                )));
            }
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(AlgebraError::Parse("no points".into()));
    }
    Ok(points)
}

/// Renders points in the points file format.
pub fn write_points(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        let coords: Vec<String> = p.iter().map(BigRational::to_string).collect();
        writeln!(out, "{}", coords.join(" ")).unwrap();
    }
    out
}
