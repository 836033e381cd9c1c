use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LatticeFrame;
use crate::error::{Error, Result};
use crate::linalg::{
    det, feasible, hnf, int_rat, inverse, to_i64, Feasibility, IntMatrix, LinearSystem, RatVector,
    Relation,
};
use crate::toric::Configuration;

/// A nonsingular maximal subset of frame columns with its inverse.
pub(crate) struct Simplex {
    pub sigma: Vec<usize>,
    pub matrix: IntMatrix,
    pub inv: Vec<Vec<BigRational>>,
}

impl Simplex {
    pub fn new(frame: &Configuration, sigma: &[usize]) -> Result<Self> {
        if sigma.len() != frame.d() || sigma.iter().any(|&i| i >= frame.n()) {
            return Err(Error::DegenerateFacet(sigma.to_vec()));
        }
        let matrix = frame.submatrix(sigma);
        let inv = inverse(&matrix).ok_or_else(|| Error::DegenerateFacet(sigma.to_vec()))?;
        Ok(Self {
            sigma: sigma.to_vec(),
            matrix,
            inv,
        })
    }

    /// `λ` with `A_σ λ = v`.
    pub fn coords(&self, v: &[i64]) -> Vec<BigRational> {
        self.inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(_, &x)| x != 0)
                    .map(|(a, &x)| a * BigInt::from(x))
                    .sum()
            })
            .collect()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.coords(v).iter().all(|x| !x.is_negative())
    }

    pub fn volume(&self) -> Result<BigInt> {
        Ok(det(&self.matrix)?.abs())
    }
}

/// `σ`, the other columns inside `cone(A_σ)`, and the columns outside it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePartition {
    pub sigma: Vec<usize>,
    pub inside: Vec<usize>,
    pub outside: Vec<usize>,
}

impl FacePartition {
    /// `σ ∪ σ_in`, sorted.
    pub fn closed(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.sigma.iter().chain(&self.inside).copied().collect();
        v.sort_unstable();
        v
    }
}

pub fn face_partition(c: &Configuration, sigma: &[usize]) -> Result<FacePartition> {
    let frame = LatticeFrame::of(c)?;
    let s = Simplex::new(&frame.config, sigma)?;
    let mut sorted = sigma.to_vec();
    sorted.sort_unstable();
    let (mut inside, mut outside) = (Vec::new(), Vec::new());
    for j in (0..c.n()).filter(|j| !sigma.contains(j)) {
        if s.contains(frame.config.column(j)) {
            inside.push(j);
        } else {
            outside.push(j);
        }
    }
    Ok(FacePartition {
        sigma: sorted,
        inside,
        outside,
    })
}

/// `|det A_σ| / [Z^d : ZA]`, computed in lattice coordinates.
pub fn normalized_volume(c: &Configuration, sigma: &[usize]) -> Result<u64> {
    let frame = LatticeFrame::of(c)?;
    let v = Simplex::new(&frame.config, sigma)?.volume()?;
    v.to_u64().ok_or(Error::Overflow("normalized volume"))
}

/// A lattice point of the half-open parallelepiped with its coordinates `λ ∈ [0,1)^σ`.
pub(crate) struct FpPoint {
    pub point: Vec<i64>,
    pub lambda: Vec<BigRational>,
}

/// Enumerates `ZA / Z A_σ` through the diagonal of the HNF of `A_σ` in
/// lattice coordinates, and reduces each representative into the
/// parallelepiped.
pub(crate) fn fp_points_with_coords(c: &Configuration, sigma: &[usize]) -> Result<Vec<FpPoint>> {
    let frame = LatticeFrame::of(c)?;
    let s = Simplex::new(&frame.config, sigma)?;
    let h = hnf(&s.matrix);
    let diag: Vec<i64> = h.pivots().map(to_i64).collect::<Result<_>>()?;
    let total: u64 = diag
        .iter()
        .try_fold(1u64, |acc, &x| acc.checked_mul(x as u64))
        .ok_or(Error::Overflow("parallelepiped size"))?;
    let r = diag.len();
    let mut out = Vec::with_capacity(total as usize);
    let mut t = vec![0i64; r];
    loop {
        let lambda: Vec<BigRational> = s
            .coords(&t)
            .into_iter()
            .map(|x| {
                let f = x.numer().mod_floor(x.denom());
                BigRational::new(f, x.denom().clone())
            })
            .collect();
        let mut point = vec![BigRational::zero(); c.d()];
        for (l, &j) in lambda.iter().zip(sigma) {
            if l.is_zero() {
                continue;
            }
            for (p, &a) in point.iter_mut().zip(c.column(j)) {
                *p += l * BigInt::from(a);
            }
        }
        let point = point
            .iter()
            .map(|x| {
                debug_assert!(x.is_integer());
                to_i64(&x.to_integer())
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(FpPoint { point, lambda });
        // mixed-radix increment
        let mut k = 0;
        while k < r {
            t[k] += 1;
            if t[k] < diag[k] {
                break;
            }
            t[k] = 0;
            k += 1;
        }
        if k == r {
            break;
        }
    }
    out.sort_by(|a, b| a.point.cmp(&b.point));
    Ok(out)
}

/// Lattice points `Σ λ_i a_i` with `0 ≤ λ_i < 1`, sorted; there are
/// `normalized_volume(c, σ)` of them.
pub fn fp_points(c: &Configuration, sigma: &[usize]) -> Result<Vec<Vec<i64>>> {
    Ok(fp_points_with_coords(c, sigma)?
        .into_iter()
        .map(|p| p.point)
        .collect())
}

/// Hilbert basis of `cone(A_σ) ∩ ZA`.
///
/// Every irreducible element is a ray generator `a_i` or a nonzero
/// parallelepiped point. A candidate is reducible iff another candidate is
/// dominated by it in `λ`-coordinates. Ray generators that survive come
/// first in the order of `σ`, followed by the rest in lexicographic order.
pub fn hilbert_basis_simplicial(c: &Configuration, sigma: &[usize]) -> Result<Vec<Vec<i64>>> {
    let r = sigma.len();
    let mut cands: Vec<(Vec<i64>, Vec<BigRational>, bool)> = Vec::new();
    for (k, &i) in sigma.iter().enumerate() {
        let lambda = (0..r)
            .map(|m| if m == k { BigRational::one() } else { BigRational::zero() })
            .collect();
        cands.push((c.column(i).to_vec(), lambda, true));
    }
    for p in fp_points_with_coords(c, sigma)? {
        if p.lambda.iter().any(|x| !x.is_zero()) {
            cands.push((p.point, p.lambda, false));
        }
    }
    let irreducible: Vec<bool> = (0..cands.len())
        .map(|x| {
            !cands.iter().enumerate().any(|(y, cy)| {
                y != x
                    && cy.0 != cands[x].0
                    && cy.1.iter().zip(&cands[x].1).all(|(a, b)| a <= b)
            })
        })
        .collect();
    let mut rays = Vec::new();
    let mut rest = Vec::new();
    for ((v, _, is_ray), keep) in cands.into_iter().zip(irreducible) {
        if !keep {
            continue;
        }
        if is_ray {
            if !rays.contains(&v) {
                rays.push(v);
            }
        } else {
            rest.push(v);
        }
    }
    rest.sort();
    rest.dedup();
    rays.extend(rest);
    Ok(rays)
}

/// Hilbert basis of `cone(G) ∩ Z^d` for `d` linearly independent generators.
pub fn cone_hilbert_basis(generators: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let d = generators.first().map_or(0, Vec::len);
    let mut cols = generators.to_vec();
    // unit vectors make the lattice all of Z^d
    cols.extend((0..d).map(|i| (0..d).map(|k| i64::from(k == i)).collect()));
    let c = Configuration::new(d, cols)?;
    let sigma: Vec<usize> = (0..generators.len()).collect();
    hilbert_basis_simplicial(&c, &sigma)
}

/// Indices of columns spanning extreme rays of `cone(A)`, one per ray.
///
/// `a_j` spans an extreme ray iff some `c` has `c·a_j = 0` and `c·a_k ≥ 1`
/// on every column not on the ray of `a_j`.
pub fn extreme_rays(c: &Configuration) -> Result<Vec<usize>> {
    let n = c.n();
    let on_ray = |j: usize, k: usize| -> bool {
        let (a, b) = (c.column(j), c.column(k));
        let dot: i128 = a.iter().zip(b).map(|(&x, &y)| i128::from(x) * i128::from(y)).sum();
        if dot <= 0 {
            return false;
        }
        // parallel iff every 2x2 minor vanishes
        (0..a.len()).all(|p| {
            (p + 1..a.len()).all(|q| {
                i128::from(a[p]) * i128::from(b[q]) == i128::from(a[q]) * i128::from(b[p])
            })
        })
    };
    let mut out = Vec::new();
    for j in 0..n {
        if c.column(j).iter().all(|&x| x == 0) {
            continue;
        }
        if (0..j).any(|k| on_ray(j, k)) {
            continue;
        }
        let mut sys = LinearSystem::new(c.d());
        sys.add_equality(RatVector::from_ints(c.column(j)), BigRational::zero())?;
        for k in (0..n).filter(|&k| k != j && !on_ray(j, k)) {
            sys.add_inequality(RatVector::from_ints(c.column(k)), Relation::Ge, int_rat(1))?;
        }
        if feasible(&sys).is_feasible() {
            out.push(j);
        }
    }
    Ok(out)
}

/// The polyhedron `{x : g·x = 1, S x ≤ 0}` where `g` is the grading and the
/// rows of `S` are the inner facet normals of `cone(A_σ)`. It is empty for
/// every graded nonsingular σ.
pub fn reversed_simplex_feasible(c: &Configuration, sigma: &[usize]) -> Result<Feasibility> {
    let frame = LatticeFrame::of(c)?;
    let g = frame
        .config
        .grading()
        .ok_or_else(|| Error::Input("configuration is not graded".into()))?;
    let s = Simplex::new(&frame.config, sigma)?;
    let mut sys = LinearSystem::new(frame.rank());
    sys.add_inequality(g.clone(), Relation::Le, BigRational::one())?;
    sys.add_inequality(
        g.iter().map(|x| -x).collect(),
        Relation::Le,
        -BigRational::one(),
    )?;
    for row in &s.inv {
        sys.add_inequality(RatVector::new(row.clone()), Relation::Le, BigRational::zero())?;
    }
    Ok(feasible(&sys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{example_config, faces};

    fn cone2(cols: Vec<Vec<i64>>) -> Configuration {
        Configuration::new(cols[0].len(), cols).unwrap()
    }

    /// Bounding-box enumeration of the parallelepiped, in `Z^d` directly.
    fn fp_box_oracle(c: &Configuration, sigma: &[usize]) -> Vec<Vec<i64>> {
        let d = c.d();
        let lo: Vec<i64> = (0..d)
            .map(|i| sigma.iter().map(|&j| c.column(j)[i].min(0)).sum())
            .collect();
        let hi: Vec<i64> = (0..d)
            .map(|i| sigma.iter().map(|&j| c.column(j)[i].max(0)).sum())
            .collect();
        let s = Simplex::new(c, sigma).unwrap();
        let mut out = Vec::new();
        let mut p = lo.clone();
        loop {
            let l = s.coords(&p);
            if l.iter().all(|x| !x.is_negative() && x < &BigRational::one()) {
                out.push(p.clone());
            }
            let mut k = 0;
            while k < d {
                p[k] += 1;
                if p[k] <= hi[k] {
                    break;
                }
                p[k] = lo[k];
                k += 1;
            }
            if k == d {
                break;
            }
        }
        out.sort();
        out
    }

    #[test]
    fn example_partition_and_volumes() {
        let c = example_config();
        let f = faces(&[&[1, 4, 13], &[4, 11, 12], &[4, 11, 13], &[11, 12, 13]]);
        let p = face_partition(&c, &f[0]).unwrap();
        assert_eq!(p.outside, vec![7, 10, 11]);
        assert_eq!(p.inside.len(), 13 - 3 - 3);
        let vols: Vec<u64> = f.iter().map(|s| normalized_volume(&c, s).unwrap()).collect();
        assert_eq!(vols, vec![9, 2, 3, 1]);
        let fp = fp_points(&c, &f[0]).unwrap();
        assert_eq!(fp.len(), 9);
        assert!(fp.contains(&vec![2, 2, 2]));
        assert_eq!(fp_points(&c, &f[3]).unwrap(), vec![vec![0, 0, 0]]);
        for s in &f {
            assert_eq!(fp_points(&c, s).unwrap(), fp_box_oracle(&c, s));
        }
        assert!(matches!(
            face_partition(&c, &[0, 1, 2]),
            Err(Error::DegenerateFacet(_))
        ));
    }

    #[test]
    fn simplicial_cone_has_empty_outside() {
        let c = cone2(vec![vec![1, 0], vec![1, 3], vec![1, 1], vec![1, 2]]);
        let p = face_partition(&c, &[0, 1]).unwrap();
        assert!(p.outside.is_empty());
        assert_eq!(p.inside, vec![2, 3]);
        let unit = cone2(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        let p = face_partition(&unit, &[0, 1, 2]).unwrap();
        assert!(p.inside.is_empty() && p.outside.is_empty());
        assert_eq!(fp_points(&unit, &[0, 1, 2]).unwrap(), vec![vec![0, 0, 0]]);
    }

    #[test]
    fn planar_hilbert_basis() {
        let expected = vec![vec![1, 0], vec![1, 3], vec![1, 1], vec![1, 2]];
        assert_eq!(cone_hilbert_basis(&[vec![1, 0], vec![1, 3]]).unwrap(), expected);
        let c = cone2(vec![vec![1, 0], vec![1, 3], vec![1, 1]]);
        assert_eq!(hilbert_basis_simplicial(&c, &[0, 1]).unwrap(), expected);
        // over the coarser lattice ZA only the rays remain
        let c = cone2(vec![vec![1, 0], vec![1, 3]]);
        assert_eq!(
            hilbert_basis_simplicial(&c, &[0, 1]).unwrap(),
            vec![vec![1, 0], vec![1, 3]]
        );
        let unit = cone2(vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(
            hilbert_basis_simplicial(&unit, &[0, 1]).unwrap(),
            vec![vec![1, 0], vec![0, 1]]
        );
    }

    #[test]
    fn non_primitive_ray_is_dropped() {
        let c = cone2(vec![vec![1, 0], vec![0, 1], vec![2, 2]]);
        let hb = hilbert_basis_simplicial(&c, &[0, 2]).unwrap();
        assert_eq!(hb, vec![vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn firla_ziegler_cone() {
        let hb = cone_hilbert_basis(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![1, 2, 3, 5],
        ])
        .unwrap();
        assert_eq!(
            hb,
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 0],
                vec![1, 2, 3, 5],
                vec![1, 1, 1, 1],
                vec![1, 1, 2, 2],
                vec![1, 2, 2, 3],
                vec![1, 2, 3, 4],
            ]
        );
    }

    #[test]
    fn volume_respects_sublattice() {
        // ZA has index 2 in Z^2
        let c = cone2(vec![vec![1, 1], vec![1, -1], vec![2, 0]]);
        assert_eq!(normalized_volume(&c, &[0, 1]).unwrap(), 1);
        assert_eq!(fp_points(&c, &[0, 1]).unwrap(), vec![vec![0, 0]]);
    }

    #[test]
    fn extreme_rays_examples() {
        let c = example_config();
        assert_eq!(extreme_rays(&c).unwrap(), vec![0, 3, 11, 12]);
        let par = cone2(vec![vec![1, 0], vec![2, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(extreme_rays(&par).unwrap(), vec![0, 2]);
    }

    #[test]
    fn reversed_simplex_is_empty() {
        let c = example_config();
        let f = faces(&[&[1, 4, 13]]);
        assert_eq!(reversed_simplex_feasible(&c, &f[0]).unwrap(), Feasibility::Infeasible);
        let unit = cone2(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(
            reversed_simplex_feasible(&unit, &[0, 1, 2]).unwrap(),
            Feasibility::Infeasible
        );
    }

    use proptest::prelude::*;

    fn graded_simplex() -> impl Strategy<Value = Configuration> {
        (2usize..=4).prop_flat_map(|d| {
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, d - 1), d).prop_map(
                move |rows| {
                    let cols = rows
                        .into_iter()
                        .map(|r| std::iter::once(1).chain(r).collect())
                        .collect();
                    Configuration::new(d, cols).unwrap()
                },
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn fp_count_is_volume_and_matches_box(c in graded_simplex()) {
            let sigma: Vec<usize> = (0..c.n()).collect();
            prop_assume!(Simplex::new(&c, &sigma).is_ok());
            let fp = fp_points(&c, &sigma).unwrap();
            prop_assert_eq!(fp.len() as u64, normalized_volume(&c, &sigma).unwrap());
            if c.lattice_index().unwrap() == BigInt::one() {
                prop_assert_eq!(fp, fp_box_oracle(&c, &sigma));
            }
        }

        #[test]
        fn reversed_simplex_always_infeasible(c in graded_simplex()) {
            let sigma: Vec<usize> = (0..c.n()).collect();
            prop_assume!(Simplex::new(&c, &sigma).is_ok());
            prop_assert_eq!(reversed_simplex_feasible(&c, &sigma).unwrap(), Feasibility::Infeasible);
        }

        #[test]
        fn hilbert_basis_is_minimal(c in graded_simplex()) {
            let sigma: Vec<usize> = (0..c.n()).collect();
            prop_assume!(Simplex::new(&c, &sigma).is_ok());
            let hb = hilbert_basis_simplicial(&c, &sigma).unwrap();
            // every parallelepiped point is generated, and dropping any element breaks that
            let fp = fp_points(&c, &sigma).unwrap();
            let gen = |set: &[Vec<i64>]| {
                let cfg = Configuration::new(c.d(), set.to_vec()).unwrap();
                let s = crate::toric::Semigroup::new(cfg).unwrap();
                fp.iter().chain(hb.iter()).all(|p| s.contains(p))
            };
            prop_assert!(gen(&hb));
            for k in 0..hb.len() {
                let mut fewer = hb.clone();
                fewer.remove(k);
                prop_assert!(!gen(&fewer));
            }
        }
    }
}
