use serde::{Deserialize, Serialize};

use super::Monomial;
use crate::error::{Error, Result};

/// A monomial ideal given by its minimal generators, canonically sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(n: usize) -> Self {
        Self { n, gens: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(Monomial::is_one)
    }

    /// Largest exponent of each variable over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut e = vec![0u32; self.n];
        for g in &self.gens {
            for (m, &x) in e.iter_mut().zip(g.exponents()) {
                *m = (*m).max(x);
            }
        }
        e
    }

    pub fn max_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Image under `x_i ↦ 1` for `i ∈ tau`, re-minimalized.
    pub fn localize(&self, tau: &[usize]) -> MonomialIdeal {
        let projected: Vec<Monomial> = self.gens.iter().map(|g| g.project_out(tau)).collect();
        minimalize_unchecked(self.n, projected)
    }

    /// The ideal enlarged by extra generators.
    pub fn with_generators(&self, extra: &[Monomial]) -> MonomialIdeal {
        let mut all = self.gens.clone();
        all.extend(extra.iter().cloned());
        minimalize_unchecked(self.n, all)
    }

    /// Every monomial of total degree at most `max_degree` outside the ideal,
    /// canonically sorted.
    pub fn standard_monomials_up_to(&self, max_degree: u64) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut e = vec![0u32; self.n];
        self.collect_standard(0, max_degree, &mut e, &mut out);
        out.sort();
        out
    }

    fn collect_standard(&self, pos: usize, budget: u64, e: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == self.n {
            out.push(Monomial::new(e.clone()));
            return;
        }
        let mut k = 0u32;
        loop {
            e[pos] = k;
            // the standard set is closed under division, so the first
            // member of the ideal ends this coordinate
            let m = Monomial::new(e.clone());
            if self.contains(&m) {
                break;
            }
            self.collect_standard(pos + 1, budget - u64::from(k), e, out);
            if u64::from(k) == budget {
                break;
            }
            k += 1;
        }
        e[pos] = 0;
    }
}

/// Keeps the divisibility-minimal elements and sorts them canonically.
pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    if let Some(g) = gens.iter().find(|g| g.nvars() != n) {
        return Err(Error::Dimension(format!(
            "monomial in {} variables inside a ring with {n}",
            g.nvars()
        )));
    }
    Ok(minimalize_unchecked(n, gens))
}

fn minimalize_unchecked(n: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
    gens.sort();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // sorted by degree, so a divisor is always seen before its multiples
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    MonomialIdeal { n, gens: kept }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{default_names, parse_monomial_list};

    fn ideal(s: &str, n: usize) -> MonomialIdeal {
        let names = default_names(n);
        minimalize(n, parse_monomial_list(s, &names).unwrap()).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let names = default_names(2);
        let i = ideal("a^2, a^3, ab", 2);
        let shown: Vec<String> = i.generators().iter().map(|g| g.display(&names)).collect();
        assert_eq!(shown, ["a^2", "ab"]);
        assert!(minimalize(2, vec![]).unwrap().is_zero());
        assert!(minimalize(2, vec![Monomial::one(3)]).is_err());
    }

    #[test]
    fn localize_examples() {
        let i = ideal("a^2b", 2);
        assert_eq!(i.localize(&[1]), ideal("a^2", 2));
        assert_eq!(i.localize(&[]), i);
    }

    #[test]
    fn standard_monomials_examples() {
        let i = ideal("a, b", 2);
        assert_eq!(i.standard_monomials_up_to(3), vec![Monomial::one(2)]);
        let z = MonomialIdeal::zero(1);
        assert_eq!(
            z.standard_monomials_up_to(2),
            vec![Monomial::new(vec![0]), Monomial::new(vec![1]), Monomial::new(vec![2])]
        );
    }
}
