use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cones::Simplex;
use super::LatticeFrame;
use crate::error::{Error, Result};
use crate::linalg::{feasible, LinearSystem, RatVector, Relation};
use crate::toric::{next_subset, Configuration, TermOrder};

/// A pure simplicial complex given by its facets, each a sorted index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangulation {
    facets: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn new(facets: Vec<Vec<usize>>) -> Self {
        let mut facets: Vec<Vec<usize>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        facets.sort();
        facets.dedup();
        Self { facets }
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_facet(&self, f: &[usize]) -> bool {
        let mut f = f.to_vec();
        f.sort_unstable();
        self.facets.binary_search(&f).is_ok()
    }

    /// True iff `f` lies in some facet.
    pub fn is_face(&self, f: &[usize]) -> bool {
        self.facets.iter().any(|s| f.iter().all(|i| s.contains(i)))
    }

    /// Intersection of all facets.
    pub fn common_face(&self) -> Vec<usize> {
        let mut it = self.facets.iter();
        let Some(first) = it.next() else {
            return Vec::new();
        };
        it.fold(first.clone(), |acc, f| {
            acc.into_iter().filter(|i| f.contains(i)).collect()
        })
    }
}

/// Lower faces of the lifted configuration `{(a_j, w_j)}`: the maximal cells
/// of the regular subdivision induced by `w`, as sorted index sets.
pub fn regular_subdivision(c: &Configuration, w: &[i64]) -> Result<Vec<Vec<usize>>> {
    lexicographic_subdivision(c, &[w.to_vec()])
}

/// The regular triangulation `Δ_w`; errors when some cell is not a simplex.
pub fn regular_triangulation(c: &Configuration, w: &[i64]) -> Result<Triangulation> {
    triangulation_from_heights(c, &[w.to_vec()])
}

/// The triangulation `Δ_≺` of a term order.
///
/// Its heights are the weight, then total degree when the order has a
/// degree step, then `-e_t` for the tiebreak variables from the smallest
/// up. The unit heights make every lifting generic, so this always
/// succeeds; it refines the subdivision of the weight alone.
pub fn order_triangulation(c: &Configuration, order: &TermOrder) -> Result<Triangulation> {
    let n = c.n();
    if order.nvars() != n {
        return Err(Error::Dimension(format!(
            "order on {} variables for {n} columns",
            order.nvars()
        )));
    }
    let mut heights = vec![order.weight().to_vec()];
    if order.has_degree_step() {
        heights.push(vec![1; n]);
    }
    for &t in order.tiebreak().iter().rev() {
        let mut h = vec![0; n];
        h[t] = -1;
        heights.push(h);
    }
    triangulation_from_heights(c, &heights)
}

fn triangulation_from_heights(c: &Configuration, heights: &[Vec<i64>]) -> Result<Triangulation> {
    let r = c.rank();
    let cells = lexicographic_subdivision(c, heights)?;
    if let Some(cell) = cells.iter().find(|cell| cell.len() != r) {
        return Err(Error::NotTriangulation { cell: cell.clone() });
    }
    let t = Triangulation::new(cells);
    debug_assert!(is_triangulation(c, &t), "regular triangulation failed validation");
    Ok(t)
}

/// Regular subdivision for heights compared lexicographically, i.e. for
/// `heights[0] + ε·heights[1] + ε²·heights[2] + ...` with `ε` infinitesimal.
///
/// Every full-dimensional cell contains a nonsingular maximal subset σ and
/// the lifting functional of σ is unique, so scanning all σ finds every
/// cell. Column `j` lies above the lifted plane of σ by
/// `h_j - h_σ·λ_j`, where `λ_j` are its coordinates in `A_σ`.
pub fn lexicographic_subdivision(c: &Configuration, heights: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    if let Some(h) = heights.iter().find(|h| h.len() != c.n()) {
        return Err(Error::Dimension(format!(
            "{} heights for {} columns",
            h.len(),
            c.n()
        )));
    }
    let frame = LatticeFrame::of(c)?;
    let fc = &frame.config;
    let r = fc.d();
    let n = fc.n();
    if n < r {
        return Err(Error::Rank(format!("{n} columns in rank {r}")));
    }
    let mut subsets = Vec::new();
    let mut s: Vec<usize> = (0..r).collect();
    loop {
        subsets.push(s.clone());
        if !next_subset(&mut s, n) {
            break;
        }
    }
    let cells: BTreeSet<Vec<usize>> = subsets
        .par_iter()
        .filter_map(|sigma| {
            let simplex = Simplex::new(fc, sigma).ok()?;
            let mut cell = Vec::new();
            for j in 0..n {
                if sigma.contains(&j) {
                    cell.push(j);
                    continue;
                }
                let lambda = simplex.coords(fc.column(j));
                let mut on_plane = true;
                for h in heights {
                    let lifted: BigRational = lambda
                        .iter()
                        .zip(sigma)
                        .map(|(l, &i)| l * BigRational::from_integer(h[i].into()))
                        .sum();
                    let gap = BigRational::from_integer(h[j].into()) - lifted;
                    if gap.is_negative() {
                        return None;
                    }
                    if gap.is_positive() {
                        on_plane = false;
                        break;
                    }
                }
                if on_plane {
                    cell.push(j);
                }
            }
            Some(cell)
        })
        .collect();
    Ok(cells.into_iter().collect())
}

/// A regular triangulation from deterministic pseudo-random weights.
pub fn default_triangulation(c: &Configuration) -> Result<Triangulation> {
    let mut last = None;
    for seed in 0..64u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w: Vec<i64> = (0..c.n()).map(|_| rng.gen_range(0..1_000_000)).collect();
        match regular_triangulation(c, &w) {
            Ok(t) => return Ok(t),
            Err(e @ Error::NotTriangulation { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Checks that `t` triangulates `cone(A)`.
///
/// Facets must be nonsingular maximal subsets. Two simplicial cones meet
/// properly iff no point of both has a positive `σ`-coordinate outside
/// `σ ∩ τ`, which is a feasibility question. Coverage is checked on
/// ridges: a ridge with columns on both sides must be shared with a facet
/// on the other side. Together with proper intersection this makes the
/// union open and closed in the interior of `cone(A)`.
pub fn is_triangulation(c: &Configuration, t: &Triangulation) -> bool {
    let Ok(frame) = LatticeFrame::of(c) else {
        return false;
    };
    let fc = &frame.config;
    if t.is_empty() {
        return c.n() == 0;
    }
    let simplices: Vec<Simplex> = match t.facets().iter().map(|f| Simplex::new(fc, f)).collect() {
        Ok(s) => s,
        Err(_) => return false,
    };
    for j in 0..fc.n() {
        if !simplices.iter().any(|s| s.contains(fc.column(j))) {
            return false;
        }
    }
    // ridge matching
    for s in &simplices {
        for (k, &i) in s.sigma.iter().enumerate() {
            let h = &s.inv[k];
            let side = |v: &[i64]| -> BigRational {
                h.iter()
                    .zip(v)
                    .map(|(a, &x)| a * BigRational::from_integer(x.into()))
                    .sum()
            };
            let interior = (0..fc.n()).any(|j| side(fc.column(j)).is_negative());
            if !interior {
                continue;
            }
            let matched = simplices.iter().any(|o| {
                let extra: Vec<usize> = o.sigma.iter().copied().filter(|x| !s.sigma.contains(x)).collect();
                extra.len() == 1
                    && !o.sigma.contains(&i)
                    && side(fc.column(extra[0])).is_negative()
            });
            if !matched {
                return false;
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..simplices.len())
        .flat_map(|a| (a + 1..simplices.len()).map(move |b| (a, b)))
        .collect();
    pairs
        .par_iter()
        .all(|&(a, b)| meet_properly(fc, &simplices[a], &simplices[b]))
}

fn meet_properly(fc: &Configuration, s: &Simplex, t: &Simplex) -> bool {
    let only_s: Vec<usize> = (0..s.sigma.len())
        .filter(|&k| !t.sigma.contains(&s.sigma[k]))
        .collect();
    if only_s.is_empty() {
        return true;
    }
    // variables μ ≥ 0 on τ; λ = A_σ^{-1} A_τ μ
    let r = t.sigma.len();
    let lam_of: Vec<Vec<BigRational>> = t.sigma.iter().map(|&j| s.coords(fc.column(j))).collect();
    let row = |k: usize| -> RatVector { (0..r).map(|m| lam_of[m][k].clone()).collect() };
    let mut sys = LinearSystem::new(r);
    let unit = |m: usize| -> RatVector {
        (0..r)
            .map(|x| if x == m { BigRational::one() } else { BigRational::zero() })
            .collect()
    };
    let ok = (|| -> Result<()> {
        for m in 0..r {
            sys.add_inequality(unit(m), Relation::Ge, BigRational::zero())?;
        }
        for k in 0..s.sigma.len() {
            sys.add_inequality(row(k), Relation::Ge, BigRational::zero())?;
        }
        let mut sum = RatVector::zeros(r);
        for &k in &only_s {
            for (x, y) in row(k).iter().enumerate() {
                sum[x] += y;
            }
        }
        sys.add_inequality(sum, Relation::Ge, BigRational::one())
    })();
    ok.is_ok() && !feasible(&sys).is_feasible()
}

/// True iff every facet has normalized volume 1.
pub fn is_unimodular(c: &Configuration, t: &Triangulation) -> Result<bool> {
    let frame = LatticeFrame::of(c)?;
    for f in t.facets() {
        if !Simplex::new(&frame.config, f)?.volume()?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}
