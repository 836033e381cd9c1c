use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Column-style Hermite normal form `H = M·U`.
///
/// `H` is in lower column-echelon form: pivot `k` sits in column `k` at row
/// `pivot_rows[k]`, the pivot rows are strictly increasing, every pivot is
/// positive, entries to the left of a pivot lie in `[0, pivot)`, and all
/// columns after the last pivot are zero. `U` is unimodular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub pivot_rows: Vec<usize>,
}

impl Hnf {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.pivot_rows
            .iter()
            .enumerate()
            .map(|(k, &r)| &self.h[(r, k)])
    }

    /// Columns of `U` spanning the integer kernel of `M`.
    pub fn kernel(&self) -> IntMatrix {
        let r = self.rank();
        let idx: Vec<usize> = (r..self.u.cols()).collect();
        self.u.select_columns(&idx)
    }
}

pub fn hnf(m: &IntMatrix) -> Hnf {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.cols());
    let mut pivot_rows = Vec::new();
    let mut p = 0;

    for row in 0..h.rows() {
        if p == h.cols() {
            break;
        }
        // clear row entries right of column p
        for j in (p + 1)..h.cols() {
            if h[(row, j)].is_zero() {
                continue;
            }
            if h[(row, p)].is_zero() {
                h.swap_cols(p, j);
                u.swap_cols(p, j);
                continue;
            }
            let x = h[(row, p)].clone();
            let y = h[(row, j)].clone();
            let eg = x.extended_gcd(&y);
            let (g, s, t) = (eg.gcd, eg.x, eg.y);
            let r = -(&y / &g);
            let q = &x / &g;
            h.combine_cols(p, j, &s, &t, &r, &q);
            u.combine_cols(p, j, &s, &t, &r, &q);
        }
        if h[(row, p)].is_zero() {
            continue;
        }
        if h[(row, p)].is_negative() {
            h.negate_col(p);
            u.negate_col(p);
        }
        let pivot = h[(row, p)].clone();
        for j in 0..p {
            let f = h[(row, j)].div_floor(&pivot);
            if !f.is_zero() {
                let nf = -f;
                h.add_col_multiple(j, p, &nf);
                u.add_col_multiple(j, p, &nf);
            }
        }
        pivot_rows.push(row);
        p += 1;
    }
    Hnf { h, u, pivot_rows }
}

pub fn rank(m: &IntMatrix) -> usize {
    hnf(m).rank()
}

/// gcd of the nonzero maximal minors, for a matrix of full row rank.
pub fn lattice_index(m: &IntMatrix) -> Result<BigInt> {
    let f = hnf(m);
    if f.rank() < m.rows() {
        return Err(Error::Rank(format!(
            "rank {} < {} rows",
            f.rank(),
            m.rows()
        )));
    }
    Ok(f.pivots().fold(BigInt::one(), |acc, p| acc * p))
}

/// The lattice spanned by a set of integer vectors, stored as an HNF basis.
#[derive(Clone, Debug)]
pub struct Lattice {
    basis: IntMatrix,
    pivot_rows: Vec<usize>,
}

impl Lattice {
    pub fn spanned_by(m: &IntMatrix) -> Self {
        let f = hnf(m);
        let r = f.rank();
        let idx: Vec<usize> = (0..r).collect();
        Self {
            basis: f.h.select_columns(&idx),
            pivot_rows: f.pivot_rows,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.basis.rows()
    }

    /// HNF basis as columns.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn pivot_rows(&self) -> &[usize] {
        &self.pivot_rows
    }

    /// Coordinates of `v` with respect to the HNF basis, if `v` is a lattice vector.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        if v.len() != self.ambient() {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coords = vec![BigInt::zero(); self.rank()];
        let mut k = 0;
        for row in 0..self.ambient() {
            if k < self.rank() && self.pivot_rows[k] == row {
                let piv = &self.basis[(row, k)];
                let (q, r) = rest[row].div_rem(piv);
                if !r.is_zero() {
                    return None;
                }
                if !q.is_zero() {
                    for i in row..self.ambient() {
                        rest[i] -= &q * &self.basis[(i, k)];
                    }
                }
                coords[k] = q;
                k += 1;
            } else if !rest[row].is_zero() {
                return None;
            }
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Index of this lattice inside `Z^d`; only meaningful at full rank.
    pub fn index(&self) -> BigInt {
        (0..self.rank()).fold(BigInt::one(), |acc, k| {
            acc * &self.basis[(self.pivot_rows[k], k)]
        })
    }
}
