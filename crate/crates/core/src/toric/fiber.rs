use super::{Configuration, PositiveFunctional, TermOrder};
use crate::error::{Error, Result};
use crate::ideals::Monomial;

/// All `u ∈ N^n` with `A·u = γ`, canonically sorted.
///
/// Each coordinate is bounded by `c·γ / c·a_j` for a functional `c` that is
/// positive on every column.
pub fn fiber(c: &Configuration, gamma: &[i64]) -> Result<Vec<Monomial>> {
    if gamma.len() != c.d() {
        return Err(Error::Dimension(format!(
            "target of length {} in dimension {}",
            gamma.len(),
            c.d()
        )));
    }
    let pf = c.positive_functional()?;
    let total = pf.eval(gamma);
    let mut out = Vec::new();
    if total < 0 {
        return Ok(out);
    }
    let mut u = vec![0u32; c.n()];
    let mut residual = gamma.to_vec();
    walk(c, &pf.weights, 0, total, &mut residual, &mut u, &mut out);
    out.sort();
    Ok(out)
}

fn walk(
    c: &Configuration,
    weights: &[i64],
    j: usize,
    budget: i64,
    residual: &mut Vec<i64>,
    u: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if budget == 0 || j == c.n() {
        if residual.iter().all(|&x| x == 0) {
            out.push(Monomial::new(u.clone()));
        }
        return;
    }
    let col = c.column(j);
    let max = budget / weights[j];
    for k in 0..=max {
        if k > 0 {
            for (r, &a) in residual.iter_mut().zip(col) {
                *r -= a;
            }
        }
        u[j] = k as u32;
        walk(c, weights, j + 1, budget - k * weights[j], residual, u, out);
    }
    for (r, &a) in residual.iter_mut().zip(col) {
        *r += a * max;
    }
    u[j] = 0;
}

/// The `≺`-smallest monomial of the fiber over `γ`.
pub fn cheapest_in_fiber(c: &Configuration, order: &TermOrder, gamma: &[i64]) -> Result<Monomial> {
    fiber(c, gamma)?
        .into_iter()
        .min_by(|a, b| order.compare(a, b))
        .ok_or_else(|| Error::NoRepresentative(gamma.to_vec()))
}

/// Membership oracle for the affine semigroup `N·A`.
#[derive(Clone, Debug)]
pub struct Semigroup {
    config: Configuration,
    pf: PositiveFunctional,
}

impl Semigroup {
    pub fn new(config: Configuration) -> Result<Self> {
        let pf = config.positive_functional()?;
        Ok(Self { config, pf })
    }

    /// The semigroup generated by the columns `idx` of `c`.
    pub fn of_columns(c: &Configuration, idx: &[usize]) -> Result<Self> {
        let cols = idx.iter().map(|&j| c.column(j).to_vec()).collect();
        Self::new(Configuration::new(c.d(), cols)?)
    }

    pub fn generators(&self) -> &Configuration {
        &self.config
    }

    /// Some `u ∈ N^n` with `A·u = γ`, by depth-first search.
    pub fn represent(&self, gamma: &[i64]) -> Option<Vec<u32>> {
        if gamma.len() != self.config.d() {
            return None;
        }
        let total = self.pf.eval(gamma);
        if total < 0 {
            return None;
        }
        let mut u = vec![0u32; self.config.n()];
        let mut residual = gamma.to_vec();
        self.search(0, total, &mut residual, &mut u).then_some(u)
    }

    pub fn contains(&self, gamma: &[i64]) -> bool {
        self.represent(gamma).is_some()
    }

    fn search(&self, j: usize, budget: i64, residual: &mut [i64], u: &mut [u32]) -> bool {
        if residual.iter().all(|&x| x == 0) {
            return true;
        }
        if budget <= 0 || j == self.config.n() {
            return false;
        }
        let col = self.config.column(j);
        let max = budget / self.pf.weights[j];
        for k in (0..=max).rev() {
            for (r, &a) in residual.iter_mut().zip(col) {
                *r -= a * k;
            }
            u[j] = k as u32;
            let found = self.search(j + 1, budget - k * self.pf.weights[j], residual, u);
            for (r, &a) in residual.iter_mut().zip(col) {
                *r += a * k;
            }
            if found {
                return true;
            }
        }
        u[j] = 0;
        false
    }
}
