use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{face_partition, fp_points, restricted_shelling, FacePartition, Shelling, Triangulation};
use crate::ideals::{Monomial, StandardPair};
use crate::toric::{fiber, Configuration, TermOrder};

/// A standard pair `(x^u, σ)` with `x^u` the cheapest monomial over `γ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPair {
    pub pair: StandardPair,
    pub gamma: Vec<i64>,
    /// Number of monomials in the fiber the root was chosen from.
    pub fiber_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetPairs {
    pub facet: Vec<usize>,
    pub partition: FacePartition,
    pub pairs: Vec<SpecialPair>,
}

/// The standard pairs of the initial ideal, one block per facet.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPairs {
    nvars: usize,
    facets: Vec<FacetPairs>,
}

impl SpecialPairs {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn facets(&self) -> &[FacetPairs] {
        &self.facets
    }

    pub fn facet(&self, sigma: &[usize]) -> Option<&FacetPairs> {
        self.facets.iter().find(|f| f.facet == sigma)
    }

    pub fn len(&self) -> usize {
        self.facets.iter().map(|f| f.pairs.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Every pair, sorted as standard pairs are.
    pub fn pairs(&self) -> Vec<StandardPair> {
        let mut v: Vec<StandardPair> = self
            .facets
            .iter()
            .flat_map(|f| f.pairs.iter().map(|p| p.pair.clone()))
            .collect();
        v.sort();
        v
    }

    /// Distinct roots in canonical monomial order.
    pub fn roots(&self) -> Vec<Monomial> {
        let mut v: Vec<Monomial> = self
            .facets
            .iter()
            .flat_map(|f| f.pairs.iter().map(|p| p.pair.root.clone()))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    /// Facets paired with `root`.
    pub fn facets_of_root(&self, root: &Monomial) -> Vec<&FacetPairs> {
        self.facets
            .iter()
            .filter(|f| f.pairs.iter().any(|p| p.pair.root == *root))
            .collect()
    }
}

/// For each facet `σ` and each `γ ∈ FP_σ`, the pair `(x^{u_γ}, σ)` with
/// `x^{u_γ}` the smallest monomial of the fiber over `γ`.
pub fn special_pairs(c: &Configuration, t: &Triangulation, o: &TermOrder) -> Result<SpecialPairs> {
    if o.nvars() != c.n() {
        return Err(Error::Dimension(format!(
            "order on {} variables for {} columns",
            o.nvars(),
            c.n()
        )));
    }
    let facets = t
        .facets()
        .par_iter()
        .map(|sigma| facet_pairs(c, sigma, o))
        .collect::<Result<Vec<_>>>()?;
    Ok(SpecialPairs {
        nvars: c.n(),
        facets,
    })
}

fn facet_pairs(c: &Configuration, sigma: &[usize], o: &TermOrder) -> Result<FacetPairs> {
    let partition = face_partition(c, sigma)?;
    let mut pairs = Vec::new();
    for gamma in fp_points(c, sigma)? {
        let fib = fiber(c, &gamma)?;
        let root = fib
            .iter()
            .min_by(|a, b| o.compare(a, b))
            .cloned()
            .ok_or_else(|| Error::NoRepresentative(gamma.clone()))?;
        if !root.support_within(&partition.inside) {
            return Err(Error::SupportViolation {
                root: root.display(c.names()),
                facet: partition.sigma.clone(),
            });
        }
        pairs.push(SpecialPair {
            pair: StandardPair::new(root, partition.sigma.clone()),
            gamma,
            fiber_size: fib.len(),
        });
    }
    pairs.sort_by(|a, b| a.pair.root.cmp(&b.pair.root));
    Ok(FacetPairs {
        facet: partition.sigma.clone(),
        partition,
        pairs,
    })
}

/// Intersection of the facets paired with `root`.
///
/// Also checks that those facets are exactly the ones whose interior
/// column set contains the support of `root`.
pub fn delta_of_root(s: &SpecialPairs, root: &Monomial) -> Result<Vec<usize>> {
    let label = || format!("{:?}", root.exponents());
    let paired: Vec<&[usize]> = s
        .facets_of_root(root)
        .into_iter()
        .map(|f| f.facet.as_slice())
        .collect();
    if paired.is_empty() {
        return Err(Error::UnknownRoot(label()));
    }
    for f in &s.facets {
        let supported = root.support_within(&f.partition.inside);
        if supported != paired.contains(&f.facet.as_slice()) {
            return Err(Error::SupportViolation {
                root: label(),
                facet: f.facet.clone(),
            });
        }
    }
    Ok(paired[0]
        .iter()
        .copied()
        .filter(|i| paired.iter().all(|f| f.contains(i)))
        .collect())
}

/// `m^σ_u`: the product of the restriction face of `σ` in the shelling of
/// `star(δ(u))` induced by `global`.
pub fn shelling_monomial(
    s: &SpecialPairs,
    root: &Monomial,
    sigma: &[usize],
    global: &Shelling,
) -> Result<Monomial> {
    Ok(Monomial::product_of(s.nvars, &restriction_of(s, root, sigma, global)?))
}

pub(crate) fn restriction_of(
    s: &SpecialPairs,
    root: &Monomial,
    sigma: &[usize],
    global: &Shelling,
) -> Result<Vec<usize>> {
    let delta = delta_of_root(s, root)?;
    let local = restricted_shelling(&global.triangulation(), global, &delta)?;
    let pos = local.position(sigma).ok_or_else(|| {
        Error::Input(format!(
            "facet {sigma:?} is not paired with root {:?}",
            root.exponents()
        ))
    })?;
    Ok(local.restriction(pos).to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::order_triangulation;
    use crate::ideals::standard_pairs;
    use crate::testutil::{example_config, example_j, example_order, faces, var};

    fn example() -> SpecialPairs {
        let c = example_config();
        let t = order_triangulation(&c, &example_order()).unwrap();
        special_pairs(&c, &t, &example_order()).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        let c = example_config();
        Monomial::parse(s, c.names()).unwrap()
    }

    #[test]
    fn example_matches_the_table() {
        let s = example();
        let c = example_config();
        let text = include_str!("../../tests/fixtures/example_standard_pairs.txt");
        for line in text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
            let (face, roots) = line.split_once(':').unwrap();
            let mut sigma: Vec<usize> = face.split_whitespace().map(|x| x.parse::<usize>().unwrap() - 1).collect();
            sigma.sort();
            let expected: Vec<Monomial> = roots
                .split_whitespace()
                .map(|r| Monomial::parse(r, c.names()).unwrap())
                .collect();
            let got: Vec<Monomial> = s.facet(&sigma).unwrap().pairs.iter().map(|p| p.pair.root.clone()).collect();
            assert_eq!(got, expected, "facet {face}");
        }
        assert_eq!(s.len(), 15);
        assert_eq!(s.pairs(), standard_pairs(&example_j()).unwrap());
    }

    #[test]
    fn pair_counts_are_volumes_and_roots_sit_inside() {
        let s = example();
        let counts: Vec<usize> = s.facets().iter().map(|f| f.pairs.len()).collect();
        assert_eq!(counts.iter().sum::<usize>(), 15);
        for f in s.facets() {
            let vol = crate::geometry::normalized_volume(&example_config(), &f.facet).unwrap();
            assert_eq!(f.pairs.len() as u64, vol);
            for p in &f.pairs {
                assert!(p.pair.root.support_within(&f.partition.inside));
                assert!(p.fiber_size >= 1);
            }
        }
        let last = s.facet(&faces(&[&[11, 12, 13]])[0]).unwrap();
        assert_eq!(last.pairs.len(), 1);
        assert!(last.pairs[0].pair.root.is_one());
    }

    #[test]
    fn deltas() {
        let s = example();
        assert_eq!(delta_of_root(&s, &mono("g")).unwrap(), faces(&[&[4, 13]])[0]);
        assert_eq!(delta_of_root(&s, &mono("1")).unwrap(), Vec::<usize>::new());
        assert_eq!(delta_of_root(&s, &mono("bj")).unwrap(), faces(&[&[1, 4, 13]])[0]);
        assert!(matches!(delta_of_root(&s, &mono("k")), Err(Error::UnknownRoot(_))));
    }

    #[test]
    fn shelling_monomials() {
        let s = example();
        let global = Shelling::from_order(faces(&[&[4, 11, 12], &[11, 12, 13], &[4, 11, 13], &[1, 4, 13]])).unwrap();
        let f = |v: &[usize]| faces(&[v]).remove(0);
        let c = example_config();
        assert!(shelling_monomial(&s, &mono("g"), &f(&[4, 11, 13]), &global).unwrap().is_one());
        assert_eq!(shelling_monomial(&s, &mono("g"), &f(&[1, 4, 13]), &global).unwrap(), mono("a"));
        assert_eq!(shelling_monomial(&s, &mono("1"), &f(&[4, 11, 13]), &global).unwrap(), mono("dm"));
        assert_eq!(
            shelling_monomial(&s, &mono("1"), &f(&[1, 4, 13]), &global).unwrap(),
            Monomial::var(c.n(), var("a"))
        );
    }

    #[test]
    fn unimodular_facet_has_root_one() {
        let c = Configuration::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let t = Triangulation::new(vec![vec![0, 1, 2]]);
        let s = special_pairs(&c, &t, &TermOrder::grevlex(3)).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.facets()[0].pairs[0].pair.root.is_one());
    }
}
