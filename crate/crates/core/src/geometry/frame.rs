use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{to_i64, IntMatrix, Lattice};
use crate::toric::Configuration;

/// Coordinates in which `ZA = Z^r`.
///
/// `basis` is a `d × r` HNF basis of `ZA`; column `j` of `config` holds the
/// coordinates of `a_j` in that basis. When `ZA` already equals `Z^d` the
/// basis is the identity and `config` is the input.
#[derive(Clone, Debug, Serialize)]
pub struct LatticeFrame {
    #[serde(serialize_with = "serialize_basis")]
    pub basis: IntMatrix,
    pub config: Configuration,
    pub trivial: bool,
}

fn serialize_basis<S: serde::Serializer>(m: &IntMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.rows()))?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

impl LatticeFrame {
    pub fn of(c: &Configuration) -> Result<Self> {
        let lattice = Lattice::spanned_by(&c.matrix());
        let r = lattice.rank();
        if r == c.d() && lattice.index() == BigInt::from(1) {
            return Ok(Self {
                basis: IntMatrix::identity(r),
                config: c.clone(),
                trivial: true,
            });
        }
        let mut cols = Vec::with_capacity(c.n());
        for col in c.columns() {
            let v: Vec<BigInt> = col.iter().map(|&x| BigInt::from(x)).collect();
            let coords = lattice
                .coordinates(&v)
                .ok_or_else(|| Error::Rank("column outside its own lattice".into()))?;
            cols.push(coords.iter().map(to_i64).collect::<Result<Vec<_>>>()?);
        }
        let config = Configuration::new(r, cols)?.with_names(c.names().to_vec())?;
        Ok(Self {
            basis: lattice.basis().clone(),
            config,
            trivial: false,
        })
    }

    pub fn rank(&self) -> usize {
        self.config.d()
    }

    /// Maps frame coordinates back to `Z^d`.
    pub fn to_ambient(&self, v: &[i64]) -> Result<Vec<i64>> {
        if self.trivial {
            return Ok(v.to_vec());
        }
        let x: Vec<BigInt> = v.iter().map(|&a| BigInt::from(a)).collect();
        self.basis.mul_vec(&x)?.iter().map(to_i64).collect()
    }
}

/// The lattice-normalized configuration together with its change of basis.
pub fn normalize_lattice(c: &Configuration) -> Result<LatticeFrame> {
    LatticeFrame::of(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sublattice_is_rescaled() {
        let c = Configuration::new(2, vec![vec![2, 0], vec![0, 2], vec![2, 2]]).unwrap();
        let f = LatticeFrame::of(&c).unwrap();
        assert!(!f.trivial);
        assert_eq!(f.config.lattice_index().unwrap(), BigInt::from(1));
        for (j, col) in f.config.columns().iter().enumerate() {
            assert_eq!(f.to_ambient(col).unwrap(), c.column(j));
        }
    }

    #[test]
    fn rank_deficient_is_projected() {
        let c = Configuration::new(3, vec![vec![1, 0, 1], vec![1, 1, 1], vec![1, 3, 1]]).unwrap();
        let f = LatticeFrame::of(&c).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(f.to_ambient(f.config.column(2)).unwrap(), vec![1, 3, 1]);
    }
}
