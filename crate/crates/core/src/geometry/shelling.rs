use serde::{Deserialize, Serialize};

use super::Triangulation;
use crate::error::{Error, Result};
use crate::report::face_label;

/// A shelling order with its restriction faces `Q_j`.
///
/// `Q_j` collects the vertices `v ∈ F_j` whose opposite ridge `F_j \ {v}`
/// already lies in an earlier facet. The order is a shelling iff no earlier
/// facet contains `Q_j`, so that the new faces of `F_j` are exactly the
/// interval `[Q_j, F_j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shelling {
    facets: Vec<Vec<usize>>,
    restrictions: Vec<Vec<usize>>,
}

impl Shelling {
    /// Validates a proposed order.
    pub fn from_order(order: Vec<Vec<usize>>) -> Result<Self> {
        let facets: Vec<Vec<usize>> = order
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        if let Some(first) = facets.first() {
            if facets.iter().any(|f| f.len() != first.len()) {
                return Err(Error::NoShelling("complex is not pure".into()));
            }
        }
        let mut restrictions = Vec::with_capacity(facets.len());
        for j in 0..facets.len() {
            if facets[..j].contains(&facets[j]) {
                return Err(Error::NoShelling(format!(
                    "facet {} repeated",
                    face_label(&facets[j])
                )));
            }
            let q = restriction(&facets[..j], &facets[j]);
            if j > 0 && !attaches(&facets[..j], &q) {
                return Err(Error::NoShelling(format!(
                    "facet {} at position {} meets the earlier facets in a non-pure set",
                    face_label(&facets[j]),
                    j + 1
                )));
            }
            restrictions.push(q);
        }
        Ok(Self {
            facets,
            restrictions,
        })
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

    /// `Q_j` for the facet at position `j` (0-based); empty for the first.
    pub fn restriction(&self, j: usize) -> &[usize] {
        &self.restrictions[j]
    }

    pub fn restrictions(&self) -> &[Vec<usize>] {
        &self.restrictions
    }

    pub fn position(&self, facet: &[usize]) -> Option<usize> {
        let mut f = facet.to_vec();
        f.sort_unstable();
        self.facets.iter().position(|g| *g == f)
    }

    pub fn triangulation(&self) -> Triangulation {
        Triangulation::new(self.facets.clone())
    }
}

fn restriction(earlier: &[Vec<usize>], f: &[usize]) -> Vec<usize> {
    f.iter()
        .copied()
        .filter(|&v| {
            earlier
                .iter()
                .any(|g| f.iter().all(|&x| x == v || g.contains(&x)))
        })
        .collect()
}

fn attaches(earlier: &[Vec<usize>], q: &[usize]) -> bool {
    earlier.iter().all(|g| !q.iter().all(|x| g.contains(x)))
}

const SEARCH_BUDGET: usize = 1_000_000;

/// Greedy search over facets in lexicographic order, backtracking when
/// no remaining facet can be attached.
pub fn find_shelling(t: &Triangulation) -> Result<Shelling> {
    let facets = t.facets().to_vec();
    if facets.is_empty() {
        return Shelling::from_order(facets);
    }
    let mut order: Vec<usize> = Vec::with_capacity(facets.len());
    let mut used = vec![false; facets.len()];
    let mut steps = 0usize;
    if extend(&facets, &mut order, &mut used, &mut steps)? {
        return Shelling::from_order(order.into_iter().map(|i| facets[i].clone()).collect());
    }
    Err(Error::NoShelling(format!(
        "exhausted all orders of {} facets",
        facets.len()
    )))
}

fn extend(
    facets: &[Vec<usize>],
    order: &mut Vec<usize>,
    used: &mut [bool],
    steps: &mut usize,
) -> Result<bool> {
    if order.len() == facets.len() {
        return Ok(true);
    }
    let placed: Vec<Vec<usize>> = order.iter().map(|&i| facets[i].clone()).collect();
    for k in 0..facets.len() {
        if used[k] {
            continue;
        }
        *steps += 1;
        if *steps > SEARCH_BUDGET {
            return Err(Error::NoShelling(format!(
                "search budget of {SEARCH_BUDGET} steps exceeded"
            )));
        }
        if !placed.is_empty() {
            let q = restriction(&placed, &facets[k]);
            if !attaches(&placed, &q) {
                continue;
            }
        }
        used[k] = true;
        order.push(k);
        if extend(facets, order, used, steps)? {
            return Ok(true);
        }
        order.pop();
        used[k] = false;
    }
    Ok(false)
}

/// Facets containing `f`.
pub fn star(t: &Triangulation, f: &[usize]) -> Result<Triangulation> {
    if !t.is_face(f) {
        return Err(Error::NotAFace(f.to_vec()));
    }
    Ok(Triangulation::new(
        t.facets()
            .iter()
            .filter(|s| f.iter().all(|i| s.contains(i)))
            .cloned()
            .collect(),
    ))
}

/// The global order filtered to the star of `f`, with restriction faces
/// recomputed inside the star.
pub fn restricted_shelling(t: &Triangulation, global: &Shelling, f: &[usize]) -> Result<Shelling> {
    let s = star(t, f)?;
    Shelling::from_order(
        global
            .facets()
            .iter()
            .filter(|g| s.contains_facet(g))
            .cloned()
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::faces;

    fn example() -> (Triangulation, Shelling) {
        let order = faces(&[&[4, 11, 12], &[11, 12, 13], &[4, 11, 13], &[1, 4, 13]]);
        (
            Triangulation::new(order.clone()),
            Shelling::from_order(order).unwrap(),
        )
    }

    /// New faces of `F_j`, by brute force over subsets.
    fn new_faces(earlier: &[Vec<usize>], f: &[usize]) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for mask in 0u32..(1 << f.len()) {
            let g: Vec<usize> = (0..f.len()).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
            if !earlier.iter().any(|e| g.iter().all(|x| e.contains(x))) {
                out.push(g);
            }
        }
        out
    }

    fn check_intervals(s: &Shelling) {
        for j in 1..s.len() {
            let q = s.restriction(j);
            let nf = new_faces(&s.facets()[..j], &s.facets()[j]);
            let f = &s.facets()[j];
            let interval: Vec<Vec<usize>> = new_faces(&[], f)
                .into_iter()
                .filter(|g| q.iter().all(|x| g.contains(x)))
                .collect();
            let (mut a, mut b) = (nf, interval);
            a.sort();
            b.sort();
            assert_eq!(a, b, "position {j}");
        }
    }

    #[test]
    fn printed_order_is_a_shelling() {
        let (_, s) = example();
        let q: Vec<Vec<usize>> = s.restrictions().to_vec();
        assert_eq!(q, faces(&[&[], &[13], &[13, 4], &[1]]).into_iter().map(|mut v| { v.sort(); v }).collect::<Vec<_>>());
        check_intervals(&s);
    }

    #[test]
    fn found_shelling_satisfies_intervals() {
        let (t, _) = example();
        let s = find_shelling(&t).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.facets()[0], vec![0, 3, 12]);
        check_intervals(&s);
    }

    #[test]
    fn bad_order_is_rejected() {
        let bad = faces(&[&[1, 4, 13], &[11, 12, 13], &[4, 11, 12]]);
        assert!(Shelling::from_order(bad).is_err());
        // two triangles sharing only a vertex
        let t = Triangulation::new(vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(find_shelling(&t).is_err());
    }

    #[test]
    fn star_and_restriction_for_root_g() {
        let (t, s) = example();
        let f = faces(&[&[4, 13]]).remove(0);
        let st = star(&t, &f).unwrap();
        assert_eq!(st.facets(), &faces(&[&[1, 4, 13], &[4, 11, 13]])[..]);
        let r = restricted_shelling(&t, &s, &f).unwrap();
        assert_eq!(r.facets(), &faces(&[&[4, 11, 13], &[1, 4, 13]])[..]);
        assert!(r.restriction(0).is_empty());
        assert_eq!(r.restriction(1), &[0]);

        assert_eq!(star(&t, &[]).unwrap(), t);
        assert_eq!(restricted_shelling(&t, &s, &[]).unwrap(), s);
        let one = star(&t, &[0, 3, 12]).unwrap();
        assert_eq!(one.len(), 1);
        assert!(restricted_shelling(&t, &s, &[0, 3, 12]).unwrap().restriction(0).is_empty());
        assert!(matches!(star(&t, &[0, 10]), Err(Error::NotAFace(_))));
    }

    #[test]
    fn two_facets_sharing_a_ridge() {
        let a = vec![0, 1, 2];
        let b = vec![1, 2, 3];
        for order in [vec![a.clone(), b.clone()], vec![b.clone(), a.clone()]] {
            let s = Shelling::from_order(order.clone()).unwrap();
            let opposite: Vec<usize> = order[1].iter().copied().filter(|x| !order[0].contains(x)).collect();
            assert_eq!(s.restriction(1), &opposite[..]);
        }
        let single = Shelling::from_order(vec![a]).unwrap();
        assert!(single.restriction(0).is_empty());
    }
}
