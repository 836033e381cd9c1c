use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row-major, arbitrary precision entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().cloned().map(Into::into))
            .collect();
        Ok(Self {
            rows: r,
            cols: c,
            data,
        })
    }

    /// Builds a `rows × columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns<T: Into<BigInt> + Clone>(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Dimension(format!(
                    "column {j} has length {}, expected {rows}",
                    col.len()
                )));
            }
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        Ok(m)
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

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, idx.len());
        for (k, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m[(i, k)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (k, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m[(k, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(j, i)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn mul_rat_vec(&self, v: &RatVector) -> Result<RatVector> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "matrix has {} columns, vector length {}",
                self.cols,
                v.len()
            )));
        }
        Ok(RatVector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.iter())
                        .map(|(a, b)| BigRational::from_integer(a.clone()) * b)
                        .sum()
                })
                .collect(),
        ))
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `col[dst] += factor * col[src]`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let idx = i * self.cols + j;
            self.data[idx] = -std::mem::take(&mut self.data[idx]);
        }
    }

    /// Replaces columns `(a, b)` by `(p·a + q·b, r·a + s·b)`.
    pub(crate) fn combine_cols(
        &mut self,
        a: usize,
        b: usize,
        p: &BigInt,
        q: &BigInt,
        r: &BigInt,
        s: &BigInt,
    ) {
        for i in 0..self.rows {
            let x = self.data[i * self.cols + a].clone();
            let y = self.data[i * self.cols + b].clone();
            self.data[i * self.cols + a] = p * &x + q * &y;
            self.data[i * self.cols + b] = r * x + s * y;
        }
    }

    /// Converts every entry to `i64`, failing on overflow.
    pub fn to_i64_columns(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| to_i64(&self[(i, j)]))
                    .collect::<Result<Vec<_>>>()
            })
            .collect()
    }
}

pub(crate) fn to_i64(x: &BigInt) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow("integer conversion"))
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Vector of exact rationals. `BigRational` keeps every entry reduced with a
/// positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RatVector(Vec<BigRational>);

impl RatVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        Self(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![BigRational::zero(); n])
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(v: &[T]) -> Self {
        Self(
            v.iter()
                .cloned()
                .map(|x| BigRational::from_integer(x.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigRational> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigRational> {
        self.0
    }

    pub fn dot(&self, other: &RatVector) -> BigRational {
        self.0.iter().zip(other.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn dot_ints(&self, other: &[i64]) -> BigRational {
        self.0
            .iter()
            .zip(other)
            .map(|(a, &b)| a * BigRational::from_integer(BigInt::from(b)))
            .sum()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|x| x.is_integer())
    }

    /// Smallest positive integer multiple with integer entries, divided by the
    /// gcd of those entries.
    pub fn primitive_integer_multiple(&self) -> Vec<BigInt> {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }
}

impl Index<usize> for RatVector {
    type Output = BigRational;

    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl IndexMut<usize> for RatVector {
    fn index_mut(&mut self, i: usize) -> &mut BigRational {
        &mut self.0[i]
    }
}

impl FromIterator<BigRational> for RatVector {
    fn from_iter<I: IntoIterator<Item = BigRational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int_rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
