//! Dense rational matrices with fraction-free (Bareiss) elimination.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{check_dim, Error, Result};
use crate::rational::{denominator_lcm, Rational};

/// Row-major dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            check_dim(cols, row.len())?;
            data.extend(row);
        }
        Ok(Self { rows: n, cols, data })
    }

    /// Convenience for tests and builtins: integer entries.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        Self::from_fn(r, c, |i, j| Rational::from_integer(BigInt::from(rows[i][j])))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = &self[(i, j)];
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.cols).all(|j| self[(i, j)] == -self[(j, i)].clone()))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * s).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        check_dim(self.cols, rhs.rows)?;
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        check_dim(self.cols, v.len())?;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// `self·rhs - rhs·self`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        Ok(&self.try_mul(rhs)? - &rhs.try_mul(self)?)
    }

    /// Copy of the `size × size` block whose top-left corner is `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, size: usize) -> Self {
        Self::from_fn(size, size, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    /// Nilpotency over the rationals: `M^n = 0`, tested by repeated squaring.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square(), "nilpotency of a non-square matrix");
        let n = self.rows;
        let mut power = self.clone();
        let mut exponent = 1;
        while exponent < n && !power.is_zero() {
            power = power.try_mul(&power).expect("square");
            exponent *= 2;
        }
        power.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of `{x : self · x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let ech = self.echelon();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| pivot_of_col[c].is_none()) {
            let mut x = vec![Rational::zero(); self.cols];
            x[free] = Rational::one();
            // back-substitute pivot rows from the bottom
            for (r, &pc) in ech.pivots.iter().enumerate().rev() {
                let row = &ech.rows[r];
                let mut acc = Rational::zero();
                for c in pc + 1..self.cols {
                    if !row[c].is_zero() && !x[c].is_zero() {
                        acc += Rational::from_integer(row[c].clone()) * &x[c];
                    }
                }
                x[pc] = -acc / Rational::from_integer(row[pc].clone());
            }
            basis.push(x);
        }
        basis
    }

    /// Fraction-free row echelon form. Each row is first cleared of
    /// denominators; Bareiss updates keep every intermediate entry integral.
    fn echelon(&self) -> Echelon {
        let mut rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = denominator_lcm(row);
                row.iter()
                    .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = pivot_row[c].clone();
            for row in tail.iter_mut() {
                let lead = row[c].clone();
                for j in c..self.cols {
                    let v = &pv * &row[j] - &lead * &pivot_row[j];
                    debug_assert!((&v % &prev).is_zero(), "inexact Bareiss division");
                    row[j] = v / &prev;
                }
            }
            prev = pv;
            pivots.push(c);
            r += 1;
        }
        rows.truncate(pivots.len());
        Echelon { rows, pivots }
    }
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// True iff `v` lies in the span of `basis` (all vectors of equal length).
pub fn in_span(basis: &[Vec<Rational>], v: &[Rational]) -> bool {
    if v.iter().all(Zero::is_zero) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let n = v.len();
    let cols = |extra: bool| {
        RatMatrix::from_fn(n, basis.len() + usize::from(extra), |i, j| {
            if j < basis.len() {
                basis[j][i].clone()
            } else {
                v[i].clone()
            }
        })
    };
    cols(false).rank() == cols(true).rank()
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.try_mul(rhs).expect("shape mismatch in matrix product")
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rejects a non-square argument where a square one is required.
pub(crate) fn require_square(m: &RatMatrix, n: usize) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: if m.rows() != n { m.rows() } else { m.cols() },
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn rank_of_small_matrices() {
        assert_eq!(RatMatrix::from_i64(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).rank(), 1);
        assert_eq!(RatMatrix::from_i64(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]).rank(), 3);
        assert_eq!(RatMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(RatMatrix::identity(5).rank(), 5);
    }

    #[test]
    fn nullspace_with_fractions() {
        let m = RatMatrix::from_fn(2, 3, |i, j| frac((i + 2 * j + 1) as i64, (j + 1) as i64));
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn nilpotency() {
        let shift = RatMatrix::from_i64(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]);
        assert!(shift.is_nilpotent());
        assert!(!RatMatrix::identity(3).is_nilpotent());
        let swap = RatMatrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert!(!swap.is_nilpotent());
        assert!(RatMatrix::zeros(1, 1).is_nilpotent());
    }

    #[test]
    fn span_membership() {
        let basis = vec![vec![int(1), int(0), int(1)]];
        assert!(in_span(&basis, &[int(3), int(0), int(3)]));
        assert!(!in_span(&basis, &[int(1), int(1), int(0)]));
        assert!(in_span(&[], &[int(0), int(0)]));
    }

    fn small_matrix() -> impl Strategy<Value = RatMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec((-3i64..=3, 1i64..=3), r * c).prop_map(move |v| {
                RatMatrix::from_fn(r, c, |i, j| {
                    let (n, d) = v[i * c + j];
                    frac(n, d)
                })
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let ns = m.nullspace();
            prop_assert_eq!(m.rank() + ns.len(), m.cols());
            for v in &ns {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
            }
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }
    }
}
