use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Monomial, MonomialIdeal};
use crate::error::{Error, Result};

/// The coset `root · K[x_i : i ∈ face]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StandardPair {
    pub root: Monomial,
    pub face: Vec<usize>,
}

impl StandardPair {
    pub fn new(root: Monomial, mut face: Vec<usize>) -> Self {
        face.sort_unstable();
        face.dedup();
        Self { root, face }
    }

    pub fn covers(&self, m: &Monomial) -> bool {
        match m.checked_div(&self.root) {
            Some(q) => q.support_within(&self.face),
            None => false,
        }
    }

    /// Containment of cosets: `self ⊆ other`.
    pub fn is_inside(&self, other: &StandardPair) -> bool {
        other.covers(&self.root) && self.face.iter().all(|i| other.face.contains(i))
    }
}

impl Ord for StandardPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.face
            .cmp(&other.face)
            .then_with(|| self.root.cmp(&other.root))
    }
}

impl PartialOrd for StandardPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Node budget for the face-by-face root search.
pub const DEFAULT_PAIR_BUDGET: usize = 5_000_000;

pub fn standard_pairs(m: &MonomialIdeal) -> Result<Vec<StandardPair>> {
    standard_pairs_with_budget(m, DEFAULT_PAIR_BUDGET)
}

/// Standard pair decomposition by a scan over faces.
///
/// A pair `(x^u, τ)` is standard iff `x^u` avoids the localization of `M`
/// at `τ` and, for each `j ∉ τ`, `x^u` with `u_j` cleared lies in the
/// localization at `τ ∪ {j}`. That second condition forces
/// `u_j < max exponent of x_j`, which bounds the search box.
pub fn standard_pairs_with_budget(m: &MonomialIdeal, budget: usize) -> Result<Vec<StandardPair>> {
    let faces = admissible_faces(m);
    let bounds = m.max_exponents();
    let per_face: Vec<Result<(Vec<StandardPair>, usize)>> = faces
        .par_iter()
        .map(|tau| pairs_on_face(m, tau, &bounds, budget))
        .collect();
    let mut out = Vec::new();
    let mut visited = 0usize;
    for r in per_face {
        let (pairs, nodes) = r?;
        visited += nodes;
        out.extend(pairs);
    }
    if visited > budget {
        return Err(Error::Resource(format!(
            "standard pair scan visited {visited} nodes over {} faces (budget {budget})",
            faces.len()
        )));
    }
    out.sort();
    Ok(out)
}

/// Faces τ with `1 ∉ localize(M, τ)`, i.e. no generator supported inside τ.
/// This family is closed under subsets, so it is grown index by index.
fn admissible_faces(m: &MonomialIdeal) -> Vec<Vec<usize>> {
    let n = m.nvars();
    let mut out = vec![Vec::new()];
    if m.is_unit() {
        return Vec::new();
    }
    let mut frontier = vec![Vec::new()];
    while let Some(face) = frontier.pop() {
        let start = face.last().map_or(0, |&l| l + 1);
        for j in start..n {
            let mut next = face.clone();
            next.push(j);
            if !m.generators().iter().any(|g| g.support_within(&next)) {
                out.push(next.clone());
                frontier.push(next);
            }
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn pairs_on_face(
    m: &MonomialIdeal,
    tau: &[usize],
    bounds: &[u32],
    budget: usize,
) -> Result<(Vec<StandardPair>, usize)> {
    let n = m.nvars();
    let loc = m.localize(tau);
    let free: Vec<usize> = (0..n).filter(|i| !tau.contains(i)).collect();
    if free.iter().any(|&i| bounds[i] == 0) {
        // a root would need u_i < 0
        return Ok((Vec::new(), 0));
    }
    let wider: Vec<MonomialIdeal> = free
        .iter()
        .map(|&j| {
            let mut t = tau.to_vec();
            t.push(j);
            m.localize(&t)
        })
        .collect();
    let mut pairs = Vec::new();
    let mut nodes = 0usize;
    let mut e = vec![0u32; n];
    let mut ctx = Search {
        loc: &loc,
        free: &free,
        bounds,
        wider: &wider,
        tau,
        budget,
        nodes: &mut nodes,
        pairs: &mut pairs,
    };
    ctx.walk(0, &mut e)?;
    Ok((pairs, nodes))
}

struct Search<'a> {
    loc: &'a MonomialIdeal,
    free: &'a [usize],
    bounds: &'a [u32],
    wider: &'a [MonomialIdeal],
    tau: &'a [usize],
    budget: usize,
    nodes: &'a mut usize,
    pairs: &'a mut Vec<StandardPair>,
}

impl Search<'_> {
    fn walk(&mut self, k: usize, e: &mut Vec<u32>) -> Result<()> {
        if k == self.free.len() {
            let u = Monomial::new(e.clone());
            let maximal = self
                .free
                .iter()
                .zip(self.wider)
                .all(|(&j, ideal)| ideal.contains(&u.with_exponent(j, 0)));
            if maximal {
                self.pairs.push(StandardPair::new(u, self.tau.to_vec()));
            }
            return Ok(());
        }
        let i = self.free[k];
        for x in 0..self.bounds[i] {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Err(Error::Resource(format!(
                    "standard pair scan exceeded {} nodes on face {:?}",
                    self.budget, self.tau
                )));
            }
            e[i] = x;
            if self.loc.contains(&Monomial::new(e.clone())) {
                break;
            }
            self.walk(k + 1, e)?;
        }
        e[i] = 0;
        Ok(())
    }
}

/// Faces carrying at least one standard pair; these index the associated primes.
pub fn associated_faces(m: &MonomialIdeal) -> Result<Vec<Vec<usize>>> {
    let faces: BTreeSet<Vec<usize>> = standard_pairs(m)?.into_iter().map(|p| p.face).collect();
    Ok(faces.into_iter().collect())
}

/// True iff every associated face also carries the pair `(1, τ)`.
pub fn embedded_prime_free(m: &MonomialIdeal) -> Result<bool> {
    let pairs = standard_pairs(m)?;
    let faces: BTreeSet<&Vec<usize>> = pairs.iter().map(|p| &p.face).collect();
    let free = faces
        .into_iter()
        .all(|f| pairs.iter().any(|p| &p.face == f && p.root.is_one()));
    Ok(free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{default_names, minimalize, parse_monomial_list};
    use proptest::prelude::*;

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        minimalize(n, parse_monomial_list(s, &default_names(n)).unwrap()).unwrap()
    }

    #[test]
    fn small_examples() {
        let i = ideal("a^2, ab", 2);
        let pairs = standard_pairs(&i).unwrap();
        assert_eq!(
            pairs,
            vec![
                StandardPair::new(Monomial::new(vec![1, 0]), vec![]),
                StandardPair::new(Monomial::new(vec![0, 0]), vec![1]),
            ]
        );
        assert_eq!(associated_faces(&i).unwrap(), vec![vec![], vec![1]]);
        assert!(!embedded_prime_free(&i).unwrap());

        let z = MonomialIdeal::zero(3);
        assert_eq!(
            standard_pairs(&z).unwrap(),
            vec![StandardPair::new(Monomial::one(3), vec![0, 1, 2])]
        );
        assert_eq!(associated_faces(&ideal("a", 2)).unwrap(), vec![vec![1]]);
    }

    #[test]
    fn unit_ideal_has_no_pairs() {
        let i = minimalize(2, vec![Monomial::one(2)]).unwrap();
        assert!(standard_pairs(&i).unwrap().is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let i = ideal("a^9, b^9, c^9", 3);
        assert!(matches!(
            standard_pairs_with_budget(&i, 10),
            Err(Error::Resource(_))
        ));
    }

    fn random_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (2usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(0u32..=3, n), 1..6).prop_map(
                move |gens| {
                    minimalize(n, gens.into_iter().map(Monomial::new).collect()).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn pairs_cover_exactly_the_standard_monomials(i in random_ideal()) {
            let pairs = standard_pairs(&i).unwrap();
            let n = i.nvars();
            let all = MonomialIdeal::zero(n).standard_monomials_up_to(6);
            for m in &all {
                let covered = pairs.iter().any(|p| p.covers(m));
                prop_assert_eq!(covered, !i.contains(m), "monomial {:?}", m);
            }
            // no pair is inside another
            for p in &pairs {
                for q in &pairs {
                    prop_assert!(p == q || !p.is_inside(q));
                }
            }
        }

        #[test]
        fn localization_composes(i in random_ideal(), a in 0usize..5, b in 0usize..5) {
            let n = i.nvars();
            let (a, b) = (a % n, b % n);
            let lhs = i.localize(&[a]).localize(&[b]);
            let mut both = vec![a, b];
            both.dedup();
            prop_assert_eq!(lhs, i.localize(&both));
        }
    }
}
