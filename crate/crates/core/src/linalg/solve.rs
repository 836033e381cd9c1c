use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntMatrix, RatVector};
use crate::error::{Error, Result};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// The empty 0×0 matrix has determinant 1.
pub fn det(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::Dimension(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = !sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let d = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    Ok(if sign { -d } else { d })
}

/// Reduced row echelon form of the augmented system over the rationals.
/// Returns the pivot columns, or `None` if the system is inconsistent.
fn rref(rows: &mut [Vec<BigRational>], ncols: usize) -> Option<Vec<usize>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..=ncols {
                    let v = &f * &rows[r][j];
                    rows[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    Some(pivots)
}

/// One exact solution of `A·x = b` with free variables set to zero, or
/// `None` when the system is inconsistent.
pub fn solve(a: &IntMatrix, b: &RatVector) -> Option<RatVector> {
    if b.len() != a.rows() {
        return None;
    }
    let n = a.cols();
    let mut rows: Vec<Vec<BigRational>> = (0..a.rows())
        .map(|i| {
            let mut row: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    if rows.is_empty() {
        return Some(RatVector::zeros(n));
    }
    let pivots = rref(&mut rows, n)?;
    let mut x = RatVector::zeros(n);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = rows[r][n].clone();
    }
    Some(x)
}

/// Solves `A·x = b` for square nonsingular `A`; `None` if singular.
pub fn solve_unique(a: &IntMatrix, b: &RatVector) -> Option<RatVector> {
    if !a.is_square() {
        return None;
    }
    let n = a.cols();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows, n)?;
    if pivots.len() < n {
        return None;
    }
    Some(rows.into_iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square nonsingular matrix as rational rows.
pub fn inverse(a: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut rows: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = a
                .row(i)
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    // eliminate on the left block only
    let mut r = 0;
    for c in 0..n {
        let p = (r..n).find(|&i| !rows[i][c].is_zero())?;
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..2 * n {
                    let v = &f * &rows[r][j];
                    rows[i][j] -= v;
                }
            }
        }
        r += 1;
    }
    Some(rows.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Primitive integer normal of the hyperplane spanned by `d - 1`
/// independent columns in `Z^d`, via signed maximal minors.
pub fn hyperplane_normal(columns: &IntMatrix) -> Result<Vec<BigInt>> {
    let d = columns.rows();
    if columns.cols() + 1 != d {
        return Err(Error::Dimension(format!(
            "need {} columns in dimension {d}, got {}",
            d - 1,
            columns.cols()
        )));
    }
    let mut normal = Vec::with_capacity(d);
    for k in 0..d {
        let keep: Vec<usize> = (0..d).filter(|&i| i != k).collect();
        let minor = det(&columns.select_rows(&keep))?;
        normal.push(if k % 2 == 0 { minor } else { -minor });
    }
    let g = normal
        .iter()
        .fold(BigInt::zero(), |acc, x| num_integer::Integer::gcd(&acc, x));
    if g.is_zero() {
        return Err(Error::Rank("ridge columns are dependent".into()));
    }
    Ok(normal.into_iter().map(|x| x / &g).collect())
}
