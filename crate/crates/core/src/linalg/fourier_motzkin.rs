//! Exact feasibility of mixed linear systems by Fourier–Motzkin elimination.
//!
//! Equalities are removed first by substitution. The remaining inequalities
//! are brought to the shape `a·x ≤ b` or `a·x < b` and variables are
//! eliminated one at a time, always picking the variable with the smallest
//! number of generated constraints. Every stage is kept so a witness can be
//! rebuilt by back-substitution.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::RatVector;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Lt,
    Ge,
    Gt,
}

impl Relation {
    pub fn holds(self, lhs: &BigRational, rhs: &BigRational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    dim: usize,
    equalities: Vec<(RatVector, BigRational)>,
    inequalities: Vec<(RatVector, Relation, BigRational)>,
}

impl LinearSystem {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            ..Self::default()
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_equality(&mut self, coeffs: RatVector, rhs: BigRational) -> Result<()> {
        self.check_len(&coeffs)?;
        self.equalities.push((coeffs, rhs));
        Ok(())
    }

    pub fn add_inequality(&mut self, coeffs: RatVector, rel: Relation, rhs: BigRational) -> Result<()> {
        self.check_len(&coeffs)?;
        self.inequalities.push((coeffs, rel, rhs));
        Ok(())
    }

    /// Convenience for integer coefficient rows.
    pub fn push_int(&mut self, coeffs: &[i64], rel: Option<Relation>, rhs: i64) -> Result<()> {
        let c = RatVector::from_ints(coeffs);
        let r = BigRational::from_integer(BigInt::from(rhs));
        match rel {
            None => self.add_equality(c, r),
            Some(rel) => self.add_inequality(c, rel, r),
        }
    }

    pub fn equalities(&self) -> &[(RatVector, BigRational)] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[(RatVector, Relation, BigRational)] {
        &self.inequalities
    }

    fn check_len(&self, coeffs: &RatVector) -> Result<()> {
        if coeffs.len() != self.dim {
            return Err(Error::Dimension(format!(
                "constraint of length {} in a system of dimension {}",
                coeffs.len(),
                self.dim
            )));
        }
        Ok(())
    }

    /// Checks a candidate point against every constraint exactly.
    pub fn satisfied_by(&self, x: &RatVector) -> bool {
        x.len() == self.dim
            && self.equalities.iter().all(|(a, b)| &a.dot(x) == b)
            && self
                .inequalities
                .iter()
                .all(|(a, rel, b)| rel.holds(&a.dot(x), b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(RatVector),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// `coeffs · x (<|≤) rhs`
#[derive(Clone, Debug)]
struct Constraint {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
    strict: bool,
}

impl Constraint {
    fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn trivially_true(&self) -> bool {
        if self.strict {
            self.rhs.is_positive()
        } else {
            !self.rhs.is_negative()
        }
    }
}

/// Keyed by the coefficient direction scaled so the first nonzero entry is ±1.
fn insert_dedup(set: &mut HashMap<Vec<BigRational>, (BigRational, bool)>, c: Constraint) {
    let lead = c
        .coeffs
        .iter()
        .find(|x| !x.is_zero())
        .expect("non-trivial constraint")
        .abs();
    let key: Vec<BigRational> = c.coeffs.iter().map(|x| x / &lead).collect();
    let rhs = c.rhs / &lead;
    match set.get_mut(&key) {
        Some((r, s)) => {
            if rhs < *r {
                *r = rhs;
                *s = c.strict;
            } else if rhs == *r && c.strict {
                *s = true;
            }
        }
        None => {
            set.insert(key, (rhs, c.strict));
        }
    }
}

struct Substitution {
    var: usize,
    // x_var = rhs - Σ coeffs_j x_j
    coeffs: Vec<BigRational>,
    rhs: BigRational,
}

pub fn feasible(system: &LinearSystem) -> Feasibility {
    let n = system.dim;
    let mut subs: Vec<Substitution> = Vec::new();

    let mut eqs: Vec<(Vec<BigRational>, BigRational)> = system
        .equalities
        .iter()
        .map(|(a, b)| (a.as_slice().to_vec(), b.clone()))
        .collect();
    let mut ineqs: Vec<Constraint> = system
        .inequalities
        .iter()
        .map(|(a, rel, b)| match rel {
            Relation::Le | Relation::Lt => Constraint {
                coeffs: a.as_slice().to_vec(),
                rhs: b.clone(),
                strict: *rel == Relation::Lt,
            },
            Relation::Ge | Relation::Gt => Constraint {
                coeffs: a.iter().map(|x| -x).collect(),
                rhs: -b,
                strict: *rel == Relation::Gt,
            },
        })
        .collect();

    // Equalities by substitution.
    while let Some((a, b)) = eqs.pop() {
        let Some(p) = a.iter().position(|x| !x.is_zero()) else {
            if !b.is_zero() {
                return Feasibility::Infeasible;
            }
            continue;
        };
        let inv = a[p].recip();
        let mut coeffs: Vec<BigRational> = a.iter().map(|x| x * &inv).collect();
        coeffs[p] = BigRational::zero();
        let rhs = &b * &inv;
        let substitute = |row: &mut Vec<BigRational>, r: &mut BigRational| {
            let f = std::mem::take(&mut row[p]);
            if f.is_zero() {
                return;
            }
            for (x, c) in row.iter_mut().zip(&coeffs) {
                *x -= &f * c;
            }
            *r -= &f * &rhs;
        };
        for (row, r) in eqs.iter_mut() {
            substitute(row, r);
        }
        for c in ineqs.iter_mut() {
            substitute(&mut c.coeffs, &mut c.rhs);
        }
        subs.push(Substitution { var: p, coeffs, rhs });
    }

    let mut current: Vec<Constraint> = Vec::new();
    {
        let mut set = HashMap::new();
        for c in ineqs {
            if c.is_trivial() {
                if !c.trivially_true() {
                    return Feasibility::Infeasible;
                }
            } else {
                insert_dedup(&mut set, c);
            }
        }
        current.extend(set.into_iter().map(|(coeffs, (rhs, strict))| Constraint {
            coeffs,
            rhs,
            strict,
        }));
        current.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    }

    let mut remaining: Vec<usize> = (0..n)
        .filter(|v| !subs.iter().any(|s| s.var == *v))
        .collect();
    let mut stages: Vec<(usize, Vec<Constraint>)> = Vec::new();

    while !remaining.is_empty() {
        let active: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&v| current.iter().any(|c| !c.coeffs[v].is_zero()))
            .collect();
        if active.is_empty() {
            break;
        }
        let var = *active
            .iter()
            .min_by_key(|&&v| {
                let pos = current.iter().filter(|c| c.coeffs[v].is_positive()).count();
                let neg = current.iter().filter(|c| c.coeffs[v].is_negative()).count();
                (pos * neg) as i64 - (pos + neg) as i64
            })
            .expect("nonempty");
        let (mut pos, mut neg, mut zero) = (Vec::new(), Vec::new(), Vec::new());
        for c in &current {
            if c.coeffs[var].is_positive() {
                pos.push(c);
            } else if c.coeffs[var].is_negative() {
                neg.push(c);
            } else {
                zero.push(c.clone());
            }
        }
        let mut set = HashMap::new();
        for c in zero {
            insert_dedup(&mut set, c);
        }
        for p in &pos {
            let fp = p.coeffs[var].recip();
            for q in &neg {
                let fq = (-&q.coeffs[var]).recip();
                let coeffs: Vec<BigRational> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(a, b)| a * &fp + b * &fq)
                    .collect();
                let c = Constraint {
                    coeffs,
                    rhs: &p.rhs * &fp + &q.rhs * &fq,
                    strict: p.strict || q.strict,
                };
                if c.is_trivial() {
                    if !c.trivially_true() {
                        return Feasibility::Infeasible;
                    }
                } else {
                    insert_dedup(&mut set, c);
                }
            }
        }
        let mut next: Vec<Constraint> = set
            .into_iter()
            .map(|(coeffs, (rhs, strict))| Constraint {
                coeffs,
                rhs,
                strict,
            })
            .collect();
        next.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        stages.push((var, std::mem::replace(&mut current, next)));
        remaining.retain(|&v| v != var);
    }

    let mut x = vec![BigRational::zero(); n];
    for (var, constraints) in stages.iter().rev() {
        x[*var] = pick_value(*var, constraints, &x);
    }
    for s in subs.iter().rev() {
        let v: BigRational = s.rhs.clone()
            - s.coeffs
                .iter()
                .zip(&x)
                .map(|(c, xi)| c * xi)
                .sum::<BigRational>();
        x[s.var] = v;
    }
    let witness = RatVector::new(x);
    debug_assert!(system.satisfied_by(&witness), "FM witness check failed");
    Feasibility::Feasible(witness)
}

/// Chooses a value for `var` satisfying every constraint in which the
/// other variables are already fixed.
fn pick_value(var: usize, constraints: &[Constraint], x: &[BigRational]) -> BigRational {
    let mut lower: Option<(BigRational, bool)> = None;
    let mut upper: Option<(BigRational, bool)> = None;
    for c in constraints {
        let a = &c.coeffs[var];
        if a.is_zero() {
            continue;
        }
        let rest: BigRational = c
            .coeffs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != var)
            .map(|(j, cj)| cj * &x[j])
            .sum();
        let bound = (&c.rhs - rest) / a;
        if a.is_positive() {
            // var ≤ bound
            let tighter = match &upper {
                None => true,
                Some((u, s)) => bound < *u || (bound == *u && c.strict && !s),
            };
            if tighter {
                upper = Some((bound, c.strict));
            }
        } else {
            let tighter = match &lower {
                None => true,
                Some((l, s)) => bound > *l || (bound == *l && c.strict && !s),
            };
            if tighter {
                lower = Some((bound, c.strict));
            }
        }
    }
    let one = BigRational::one();
    match (lower, upper) {
        (None, None) => BigRational::zero(),
        (Some((l, s)), None) => {
            if s {
                l + one
            } else {
                l
            }
        }
        (None, Some((u, s))) => {
            if s {
                u - one
            } else {
                u
            }
        }
        // l == u only survives elimination when both bounds are weak
        (Some((l, _)), Some((u, _))) => {
            if l < u {
                (l + u) / BigRational::from_integer(BigInt::from(2))
            } else {
                l
            }
        }
    }
}
