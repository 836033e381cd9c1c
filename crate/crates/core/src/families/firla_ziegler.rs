use crate::error::{Error, Result};
use crate::geometry::cone_hilbert_basis;
use crate::toric::Configuration;

/// Hilbert basis of `cone(e_1, e_2, e_3, v)` in `Z^4` for `v = (a, b, c, d)`
/// with `0 < a < b < c < d`. The four ray generators come first; a
/// non-primitive `v` contributes its primitive vector.
pub fn firla_ziegler(v: [i64; 4]) -> Result<Configuration> {
    if !(0 < v[0] && v[0] < v[1] && v[1] < v[2] && v[2] < v[3]) {
        return Err(Error::Input(format!(
            "Firla-Ziegler vector {v:?} must satisfy 0 < a < b < c < d"
        )));
    }
    let gens = vec![
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        v.to_vec(),
    ];
    Configuration::new(4, cone_hilbert_basis(&gens)?)
}
