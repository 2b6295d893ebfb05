//! Exact rational scalars, vectors and linear solving.
//!
//! Everything downstream compares norms and feasibility with `==` and `<=`,
//! so no floating point appears anywhere in this crate.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left} vs {right}")]
    Dimension { left: usize, right: usize },
    #[error("singular system")]
    Singular,
    #[error("inconsistent system")]
    Inconsistent,
}

/// Shorthand for an integer-valued rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Numerator and denominator as `i64`, if they fit.
pub fn to_pair(x: &Rational) -> Option<(i64, i64)> {
    Some((x.numer().to_i64()?, x.denom().to_i64()?))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Vector(Vec<Rational>);

impl Vector {
    pub fn new(coords: Vec<Rational>) -> Self {
        Vector(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Vector(vec![Rational::zero(); dim])
    }

    /// The `i`-th standard basis vector (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &Rational) -> Vector {
        Vector(self.0.iter().map(|c| c * s).collect())
    }

    /// `self + s * other`; dimensions must agree.
    pub fn add_scaled(&self, s: &Rational, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        Vector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + s * b)
                .collect(),
        )
    }

    /// Euclidean dot product in the ambient coordinates.
    pub fn dot(&self, other: &Vector) -> Result<Rational, LinalgError> {
        if self.dim() != other.dim() {
            return Err(LinalgError::Dimension {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(dot_unchecked(&self.0, &other.0))
    }
}

fn dot_unchecked(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Inner product `(u, v)` in the standard coordinates.
pub fn inner(u: &Vector, v: &Vector) -> Result<Rational, LinalgError> {
    u.dot(v)
}

/// Row-reduces `[rows | rhs]` in place and returns the pivot columns.
fn eliminate(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..m[row].len() {
            m[row][c] = &m[row][c] * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..m[i].len() {
                    let delta = &f * &m[row][c];
                    m[i][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Solves `rows[i] . x = rhs[i]` exactly.
///
/// The system may be overdetermined (extra rows are checked for consistency)
/// but must determine `x` uniquely.
pub fn solve_linear(rows: &[Vector], rhs: &[Rational]) -> Result<Vector, LinalgError> {
    if rows.len() != rhs.len() {
        return Err(LinalgError::Dimension {
            left: rows.len(),
            right: rhs.len(),
        });
    }
    let Some(n) = rows.first().map(Vector::dim) else {
        return Ok(Vector::zero(0));
    };
    if let Some(bad) = rows.iter().find(|r| r.dim() != n) {
        return Err(LinalgError::Dimension {
            left: n,
            right: bad.dim(),
        });
    }
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.0.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = eliminate(&mut m, n);
    if m[pivots.len()..].iter().any(|row| !row[n].is_zero()) {
        return Err(LinalgError::Inconsistent);
    }
    if pivots.len() < n {
        return Err(LinalgError::Singular);
    }
    Ok(Vector((0..n).map(|i| m[i][n].clone()).collect()))
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[Vector]) -> usize {
    let Some(n) = rows.first().map(Vector::dim) else {
        return 0;
    };
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.0.clone()).collect();
    eliminate(&mut m, n).len()
}

/// Basis of the orthogonal complement of `span(rows)` inside `Q^dim`.
pub fn orthogonal_complement(rows: &[Vector], dim: usize) -> Vec<Vector> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|r| r.0.clone()).collect();
    let pivots = eliminate(&mut m, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&m[row][f];
            }
            Vector(v)
        })
        .collect()
}

/// Sign of a rational as -1, 0 or 1.
pub fn signum(x: &Rational) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_of_orthogonal_units() {
        let u = Vector::from_ints(&[1, 0]);
        let v = Vector::from_ints(&[0, 1]);
        assert_eq!(inner(&u, &v).unwrap(), int(0));
    }

    #[test]
    fn dot_rejects_length_mismatch() {
        let u = Vector::from_ints(&[1, 0]);
        let v = Vector::from_ints(&[0, 1, 2]);
        assert_eq!(
            inner(&u, &v),
            Err(LinalgError::Dimension { left: 2, right: 3 })
        );
    }

    #[test]
    fn identity_solve() {
        let rows = [Vector::from_ints(&[1, 0]), Vector::from_ints(&[0, 1])];
        let x = solve_linear(&rows, &[int(3), int(5)]).unwrap();
        assert_eq!(x, Vector::from_ints(&[3, 5]));
    }

    #[test]
    fn a2_first_corner_within_sum_zero_plane() {
        let rows = [
            Vector::from_ints(&[1, -1, 0]),
            Vector::from_ints(&[0, 1, -1]),
            Vector::from_ints(&[1, 1, 1]),
        ];
        let x = solve_linear(&rows, &[int(1), int(0), int(0)]).unwrap();
        assert_eq!(x, Vector::new(vec![frac(2, 3), frac(-1, 3), frac(-1, 3)]));
    }

    #[test]
    fn dependent_rows_are_singular() {
        let rows = [Vector::from_ints(&[1, 2]), Vector::from_ints(&[2, 4])];
        assert_eq!(
            solve_linear(&rows, &[int(1), int(2)]),
            Err(LinalgError::Singular)
        );
    }

    #[test]
    fn complement_of_a_type_roots_is_all_ones() {
        let rows = [
            Vector::from_ints(&[1, -1, 0]),
            Vector::from_ints(&[0, 1, -1]),
        ];
        let c = orthogonal_complement(&rows, 3);
        assert_eq!(c, vec![Vector::from_ints(&[1, 1, 1])]);
        assert_eq!(rank(&rows), 2);
    }
}
