use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::Monomial;

/// A weight vector refined by graded reverse lexicographic order.
///
/// `tiebreak` lists the variables from largest to smallest. Two monomials
/// are compared by weight, then by total degree, then reverse
/// lexicographically: scanning from the smallest variable, the first one
/// where the exponents differ decides, and the smaller exponent wins.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermOrder {
    weight: Vec<i64>,
    tiebreak: Vec<usize>,
    #[serde(skip)]
    degree_step: bool,
}

impl TermOrder {
    pub fn new(weight: Vec<i64>, tiebreak: Vec<usize>) -> Result<Self> {
        let n = weight.len();
        if tiebreak.len() != n {
            return Err(Error::Input(format!(
                "tiebreak has {} entries for {n} variables",
                tiebreak.len()
            )));
        }
        let mut seen = vec![false; n];
        for &v in &tiebreak {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Input("tiebreak is not a permutation".into()));
            }
        }
        if weight.iter().any(|&w| w < 0) {
            return Err(Error::Input("weights must be nonnegative".into()));
        }
        Ok(Self {
            weight,
            tiebreak,
            degree_step: true,
        })
    }

    /// Weight `w` with the natural variable order `x_1 > ... > x_n`.
    pub fn from_weight(weight: Vec<i64>) -> Result<Self> {
        let n = weight.len();
        Self::new(weight, (0..n).collect())
    }

    /// Pure graded reverse lexicographic order with `x_1 > ... > x_n`.
    pub fn grevlex(n: usize) -> Self {
        Self::from_weight(vec![0; n]).expect("valid")
    }

    /// Positive weight refined by plain revlex with `last` the smallest
    /// variable. No degree step, so for binomials homogeneous in `weight`
    /// the variable `last` never divides a leading term it could avoid.
    pub(crate) fn elimination_last(weight: Vec<i64>, last: usize) -> Self {
        let n = weight.len();
        let mut tiebreak: Vec<usize> = (0..n).filter(|&i| i != last).collect();
        tiebreak.push(last);
        Self {
            weight,
            tiebreak,
            degree_step: false,
        }
    }

    pub fn nvars(&self) -> usize {
        self.weight.len()
    }

    pub fn weight(&self) -> &[i64] {
        &self.weight
    }

    pub fn tiebreak(&self) -> &[usize] {
        &self.tiebreak
    }

    pub fn has_degree_step(&self) -> bool {
        self.degree_step
    }

    fn weigh(&self, e: &[u32]) -> i128 {
        e.iter()
            .zip(&self.weight)
            .map(|(&x, &w)| i128::from(x) * i128::from(w))
            .sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_exponents(a.exponents(), b.exponents())
    }

    pub fn compare_exponents(&self, a: &[u32], b: &[u32]) -> Ordering {
        let w = self.weigh(a).cmp(&self.weigh(b));
        if w != Ordering::Equal {
            return w;
        }
        if self.degree_step {
            let da: u64 = a.iter().map(|&x| u64::from(x)).sum();
            let db: u64 = b.iter().map(|&x| u64::from(x)).sum();
            if da != db {
                return da.cmp(&db);
            }
        }
        for &v in self.tiebreak.iter().rev() {
            if a[v] != b[v] {
                return b[v].cmp(&a[v]);
            }
        }
        Ordering::Equal
    }

    /// Compares the positive and negative parts of a kernel vector.
    pub(crate) fn compare_parts(&self, v: &[i64]) -> Ordering {
        let w: i128 = v
            .iter()
            .zip(&self.weight)
            .map(|(&x, &w)| i128::from(x) * i128::from(w))
            .sum();
        if w != 0 {
            return w.cmp(&0);
        }
        if self.degree_step {
            let d: i64 = v.iter().sum();
            if d != 0 {
                return d.cmp(&0);
            }
        }
        for &k in self.tiebreak.iter().rev() {
            if v[k] != 0 {
                // positive part has the larger exponent on this variable
                return if v[k] > 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::{default_names, parse_monomial_list};
    use crate::testutil::example_order;


    #[test]
    fn fiber_order_on_example() {
        let o = example_order();
        let names = default_names(13);
        let ms = parse_monomial_list("bj, eg, ci, f^2, ak", &names).unwrap();
        for w in ms.windows(2) {
            assert_eq!(o.compare(&w[0], &w[1]), Ordering::Less, "{:?}", w);
        }
        assert_eq!(o.compare(&ms[0], &ms[0]), Ordering::Equal);
    }

    #[test]
    fn grevlex_basics() {
        let o = TermOrder::grevlex(2);
        let a2 = Monomial::new(vec![2, 0]);
        let ab = Monomial::new(vec![1, 1]);
        assert_eq!(o.compare(&a2, &ab), Ordering::Greater);
    }

    #[test]
    fn compare_parts_matches_compare() {
        let o = example_order();
        let names = default_names(13);
        let ms = parse_monomial_list("bj, eg, ci, f^2, ak", &names).unwrap();
        for a in &ms {
            for b in &ms {
                let v: Vec<i64> = a
                    .exponents()
                    .iter()
                    .zip(b.exponents())
                    .map(|(&x, &y)| i64::from(x) - i64::from(y))
                    .collect();
                assert_eq!(o.compare_parts(&v), o.compare(a, b));
            }
        }
    }

    #[test]
    fn rejects_bad_permutation() {
        assert!(TermOrder::new(vec![0, 0], vec![0, 0]).is_err());
        assert!(TermOrder::new(vec![0, 0], vec![0]).is_err());
        assert!(TermOrder::new(vec![-1, 0], vec![0, 1]).is_err());
    }

    use proptest::prelude::*;
    proptest! {
        #[test]
        fn multiplicative(
            a in proptest::collection::vec(0u32..4, 4),
            b in proptest::collection::vec(0u32..4, 4),
            m in proptest::collection::vec(0u32..4, 4),
            w in proptest::collection::vec(0i64..4, 4),
        ) {
            let o = TermOrder::new(w, vec![2, 0, 3, 1]).unwrap();
            let (a, b, m) = (Monomial::new(a), Monomial::new(b), Monomial::new(m));
            prop_assert_eq!(o.compare(&a, &b), o.compare(&a.mul(&m), &b.mul(&m)));
            prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        }
    }
}
