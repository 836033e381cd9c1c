//! Buchberger's algorithm on binomials `x^{u+} - x^{u-}` stored as integer
//! vectors `u`. Subtracting vectors cancels common factors of the two
//! terms automatically, so every intermediate binomial is coprime.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::Serialize;

use super::{Configuration, TermOrder};
use crate::error::{Error, Result};
use crate::ideals::{minimalize, Monomial, MonomialIdeal};
use crate::linalg::{det, hnf, solve_unique, to_i64, IntMatrix, RatVector};

/// `lead - trail` with `lead ≻ trail` and coprime terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

impl Binomial {
    fn from_vector(v: &[i64]) -> Self {
        let lead = v.iter().map(|&x| x.max(0) as u32).collect();
        let trail = v.iter().map(|&x| (-x).max(0) as u32).collect();
        Self {
            lead: Monomial::new(lead),
            trail: Monomial::new(trail),
        }
    }

    pub fn vector(&self) -> Vec<i64> {
        self.lead
            .exponents()
            .iter()
            .zip(self.trail.exponents())
            .map(|(&a, &b)| i64::from(a) - i64::from(b))
            .collect()
    }

    pub fn degree(&self) -> u64 {
        self.lead.degree().max(self.trail.degree())
    }

    pub fn display(&self, names: &[String]) -> String {
        format!("{} - {}", self.lead.display(names), self.trail.display(names))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    pub elements: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        let n = self.order.nvars();
        minimalize(n, self.elements.iter().map(|b| b.lead.clone()).collect())
            .expect("leads share the ambient ring")
    }

    pub fn max_degree(&self) -> u64 {
        self.elements.iter().map(Binomial::degree).max().unwrap_or(0)
    }
}

pub fn initial_ideal(g: &GroebnerBasis) -> MonomialIdeal {
    g.initial_ideal()
}

pub fn max_degree(g: &GroebnerBasis) -> u64 {
    g.max_degree()
}

/// Caps that turn an accidental blowup into an error.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub max_basis: usize,
    pub max_pairs: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_basis: 50_000,
            max_pairs: 5_000_000,
        }
    }
}

/// Lattice basis of `ker_Z(A)` from the HNF transform, as columns.
pub fn kernel_basis(c: &Configuration) -> IntMatrix {
    hnf(&c.matrix()).kernel()
}

/// A kernel basis that tends to have small entries: `e_j - A_σ^{-1} a_j`
/// for a `d`-subset σ whose columns already span `ZA`. Falls back to the
/// HNF kernel.
fn short_kernel_basis(c: &Configuration) -> Result<Vec<Vec<i64>>> {
    let d = c.d();
    let n = c.n();
    let hnf_basis = || -> Result<Vec<Vec<i64>>> { kernel_basis(c).to_i64_columns() };
    if c.rank() < d || n == d {
        return hnf_basis();
    }
    let index = c.lattice_index()?;
    let m = c.matrix();
    let mut sigma: Vec<usize> = (0..d).collect();
    let mut tries = 0usize;
    loop {
        tries += 1;
        let sub = m.select_columns(&sigma);
        if det(&sub)?.abs() == index {
            let mut out = Vec::with_capacity(n - d);
            for j in (0..n).filter(|j| !sigma.contains(j)) {
                let lam = solve_unique(&sub, &RatVector::from_ints(c.column(j)))
                    .expect("nonsingular");
                let mut v = vec![0i64; n];
                v[j] = 1;
                for (k, &s) in sigma.iter().enumerate() {
                    let x: BigInt = lam[k].to_integer();
                    v[s] = -to_i64(&x)?;
                }
                out.push(v);
            }
            return Ok(out);
        }
        if tries > 20_000 || !next_subset(&mut sigma, n) {
            return hnf_basis();
        }
    }
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub fn toric_groebner(c: &Configuration, order: &TermOrder) -> Result<GroebnerBasis> {
    toric_groebner_with_budget(c, order, Budget::default())
}

/// Reduced Gröbner basis of the toric ideal `I_A`.
///
/// Starts from a lattice basis of `ker(A)`, saturates by one variable at a
/// time (Buchberger under an order where that variable is revlex-last), then
/// runs Buchberger once more in the target order and interreduces.
pub fn toric_groebner_with_budget(
    c: &Configuration,
    order: &TermOrder,
    budget: Budget,
) -> Result<GroebnerBasis> {
    if order.nvars() != c.n() {
        return Err(Error::Dimension(format!(
            "term order on {} variables for {} columns",
            order.nvars(),
            c.n()
        )));
    }
    let pf = c.positive_functional()?;
    let mut gens = short_kernel_basis(c)?;
    for i in 0..c.n() {
        let o = TermOrder::elimination_last(pf.weights.clone(), i);
        gens = buchberger(gens, &o, budget)?;
    }
    let reduced = buchberger(gens, order, budget)?;
    let mut elements: Vec<Binomial> = interreduce(reduced, order)
        .iter()
        .map(|v| Binomial::from_vector(v))
        .collect();
    elements.sort_by(|a, b| a.lead.cmp(&b.lead).then_with(|| a.trail.cmp(&b.trail)));
    Ok(GroebnerBasis {
        order: order.clone(),
        elements,
    })
}

struct Elt {
    v: Vec<i64>,
    lead: Vec<u32>,
}

impl Elt {
    fn new(v: Vec<i64>) -> Self {
        let lead = v.iter().map(|&x| x.max(0) as u32).collect();
        Self { v, lead }
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn orient(v: &mut [i64], order: &TermOrder) {
    if order.compare_parts(v) == Ordering::Less {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
}

/// Lead-reduces `v` against the active elements; `None` if it vanishes.
fn reduce(mut v: Vec<i64>, store: &[Elt], active: &[usize], order: &TermOrder) -> Option<Vec<i64>> {
    loop {
        if v.iter().all(|&x| x == 0) {
            return None;
        }
        orient(&mut v, order);
        let lead: Vec<u32> = v.iter().map(|&x| x.max(0) as u32).collect();
        match active.iter().find(|&&g| divides(&store[g].lead, &lead)) {
            Some(&g) => {
                for (x, y) in v.iter_mut().zip(&store[g].v) {
                    *x -= y;
                }
            }
            None => return Some(v),
        }
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
    deg: u64,
    seq: u64,
}

fn buchberger(gens: Vec<Vec<i64>>, order: &TermOrder, budget: Budget) -> Result<Vec<Vec<i64>>> {
    let mut store: Vec<Elt> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut seq = 0u64;
    let mut processed = 0usize;

    let mut insert = |v: Vec<i64>,
                      store: &mut Vec<Elt>,
                      active: &mut Vec<usize>,
                      pairs: &mut Vec<Pair>|
     -> Result<()> {
        let h = store.len();
        store.push(Elt::new(v));
        if store.len() > budget.max_basis {
            return Err(Error::Resource(format!(
                "Buchberger produced more than {} binomials",
                budget.max_basis
            )));
        }
        let hl = store[h].lead.clone();
        // Gebauer–Möller update
        let cands: Vec<(usize, Vec<u32>)> = active
            .iter()
            .map(|&g| (g, lcm(&hl, &store[g].lead)))
            .collect();
        let mut keep: Vec<(usize, Vec<u32>)> = Vec::new();
        for (k, (g, l)) in cands.iter().enumerate() {
            let copr = coprime(&hl, &store[*g].lead);
            let dominated = cands[k + 1..].iter().any(|(_, l2)| divides(l2, l))
                || keep.iter().any(|(_, l2)| divides(l2, l));
            if copr || !dominated {
                keep.push((*g, l.clone()));
            }
        }
        pairs.retain(|p| {
            !(divides(&hl, &p.lcm)
                && lcm(&store[p.i].lead, &hl) != p.lcm
                && lcm(&store[p.j].lead, &hl) != p.lcm)
        });
        for (g, l) in keep {
            if coprime(&hl, &store[g].lead) {
                continue;
            }
            let deg = l.iter().map(|&x| u64::from(x)).sum();
            pairs.push(Pair {
                i: g,
                j: h,
                lcm: l,
                deg,
                seq,
            });
            seq += 1;
        }
        active.retain(|&g| !divides(&hl, &store[g].lead));
        active.push(h);
        Ok(())
    };

    for v in gens {
        if let Some(r) = reduce(v, &store, &active, order) {
            insert(r, &mut store, &mut active, &mut pairs)?;
        }
    }

    while !pairs.is_empty() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::Resource(format!(
                "more than {} S-pairs processed",
                budget.max_pairs
            )));
        }
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| (p.deg, p.seq))
            .expect("nonempty");
        let p = pairs.swap_remove(k);
        let s: Vec<i64> = store[p.i]
            .v
            .iter()
            .zip(&store[p.j].v)
            .map(|(a, b)| a - b)
            .collect();
        if let Some(r) = reduce(s, &store, &active, order) {
            insert(r, &mut store, &mut active, &mut pairs)?;
        }
    }
    Ok(active.into_iter().map(|g| store[g].v.clone()).collect())
}

/// Minimal leads, then fully reduced trails.
fn interreduce(gens: Vec<Vec<i64>>, order: &TermOrder) -> Vec<Vec<i64>> {
    let elts: Vec<Elt> = gens.into_iter().map(Elt::new).collect();
    let mut keep: Vec<usize> = Vec::new();
    for (i, e) in elts.iter().enumerate() {
        let redundant = elts.iter().enumerate().any(|(j, f)| {
            j != i && divides(&f.lead, &e.lead) && (f.lead != e.lead || j < i)
        });
        if !redundant {
            keep.push(i);
        }
    }
    keep.iter()
        .map(|&i| {
            let mut v = elts[i].v.clone();
            // x^{v+} - x^{v-}: replace the trail by its normal form
            loop {
                let trail: Vec<u32> = v.iter().map(|&x| (-x).max(0) as u32).collect();
                match keep.iter().find(|&&g| divides(&elts[g].lead, &trail)) {
                    Some(&g) => {
                        for (x, y) in v.iter_mut().zip(&elts[g].v) {
                            *x += y;
                        }
                        debug_assert_eq!(order.compare_parts(&v), Ordering::Greater);
                    }
                    None => break,
                }
            }
            v
        })
        .collect()
}

impl GroebnerBasis {
    /// Every element lies in `ker(A)`.
    pub fn in_kernel(&self, c: &Configuration) -> bool {
        self.elements.iter().all(|b| {
            let v = b.vector();
            (0..c.d()).all(|i| (0..c.n()).map(|j| c.column(j)[i] * v[j]).sum::<i64>() == 0)
        })
    }

    /// No lead term divides a monomial of another element.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, a)| {
            self.elements.iter().enumerate().all(|(j, b)| {
                i == j || (!a.lead.divides(&b.lead) && !a.lead.divides(&b.trail))
            })
        })
    }

    /// Every S-pair lead-reduces to zero against the basis.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let store: Vec<Elt> = self.elements.iter().map(|b| Elt::new(b.vector())).collect();
        let active: Vec<usize> = (0..store.len()).collect();
        for i in 0..store.len() {
            for j in i + 1..store.len() {
                let s: Vec<i64> = store[i].v.iter().zip(&store[j].v).map(|(a, b)| a - b).collect();
                if reduce(s, &store, &active, &self.order).is_some() {
                    return false;
                }
            }
        }
        true
    }
}
