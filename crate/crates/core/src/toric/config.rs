use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::default_names;
use crate::linalg::{
    feasible, int_rat, lattice_index, rank, solve, Feasibility, IntMatrix, LinearSystem, RatVector,
    Relation,
};

/// A finite vector configuration `A ⊂ Z^d`, stored as its columns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Configuration {
    d: usize,
    columns: Vec<Vec<i64>>,
    names: Vec<String>,
}

impl Configuration {
    pub fn new(d: usize, columns: Vec<Vec<i64>>) -> Result<Self> {
        if let Some((j, c)) = columns.iter().enumerate().find(|(_, c)| c.len() != d) {
            return Err(Error::Dimension(format!(
                "column {} has length {}, expected {d}",
                j + 1,
                c.len()
            )));
        }
        let names = default_names(columns.len());
        Ok(Self { d, columns, names })
    }

    /// Builds from the rows of the matrix.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let d = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let columns = (0..n).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        Self::new(d, columns)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n() {
            return Err(Error::Input(format!(
                "{} names for {} columns",
                names.len(),
                self.n()
            )));
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() || names.iter().any(|s| s.is_empty()) {
            return Err(Error::Input("variable names must be unique and nonempty".into()));
        }
        self.names = names;
        Ok(self)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.columns
    }

    pub fn column(&self, j: usize) -> &[i64] {
        &self.columns[j]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.d)
            .map(|i| self.columns.iter().map(|c| c[i]).collect())
            .collect()
    }

    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.d, &self.columns).expect("validated in constructor")
    }

    pub fn submatrix(&self, idx: &[usize]) -> IntMatrix {
        self.matrix().select_columns(idx)
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix())
    }

    /// `[Z^d : ZA]`, requiring full row rank.
    pub fn lattice_index(&self) -> Result<BigInt> {
        lattice_index(&self.matrix())
    }

    /// `A·u` for a nonnegative exponent vector.
    pub fn image(&self, u: &[u32]) -> Vec<i64> {
        let mut out = vec![0i64; self.d];
        for (c, &e) in self.columns.iter().zip(u) {
            if e > 0 {
                for (o, &x) in out.iter_mut().zip(c) {
                    *o += x * i64::from(e);
                }
            }
        }
        out
    }

    /// A rational functional taking the value 1 on every column, if any.
    pub fn grading(&self) -> Option<RatVector> {
        if self.columns.is_empty() {
            return None;
        }
        let at = self.matrix().transpose();
        solve(&at, &RatVector::from_ints(&vec![1i64; self.n()]))
    }

    pub fn is_graded(&self) -> bool {
        self.grading().is_some()
    }

    /// Positive integer weights `c·a_j` for a functional with `c·a_j > 0`
    /// on all columns. Uses the grading when there is one. Fails exactly
    /// when `ker(A) ∩ N^n` contains a nonzero vector.
    pub fn positive_functional(&self) -> Result<PositiveFunctional> {
        let c = match self.grading() {
            Some(c) => c,
            None => {
                let mut sys = LinearSystem::new(self.d);
                for col in &self.columns {
                    sys.add_inequality(RatVector::from_ints(col), Relation::Ge, int_rat(1))?;
                }
                match feasible(&sys) {
                    Feasibility::Feasible(c) => c,
                    Feasibility::Infeasible => {
                        return Err(Error::NonPointed(
                            "no functional is positive on every column".into(),
                        ))
                    }
                }
            }
        };
        let ints = scale_to_integers(&c);
        let weights: Vec<i64> = self
            .columns
            .iter()
            .map(|col| col.iter().zip(&ints).map(|(a, b)| a * b).sum())
            .collect();
        if weights.iter().any(|&w| w <= 0) {
            return Err(Error::NonPointed(
                "no functional is positive on every column".into(),
            ));
        }
        Ok(PositiveFunctional {
            functional: ints,
            weights,
        })
    }
}

/// Integer functional `c` with positive values `c·a_j` on the columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveFunctional {
    pub functional: Vec<i64>,
    pub weights: Vec<i64>,
}

impl PositiveFunctional {
    pub fn eval(&self, v: &[i64]) -> i64 {
        v.iter().zip(&self.functional).map(|(a, b)| a * b).sum()
    }
}

/// Smallest positive multiple with integer entries; entries must fit in `i64`.
fn scale_to_integers(c: &RatVector) -> Vec<i64> {
    let lcm = c
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter()
        .map(|x| {
            let y = if g.is_zero() { x } else { x / &g };
            i64::try_from(&y).expect("functional entries fit in i64")
        })
        .collect()
}
