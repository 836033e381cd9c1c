//! Cones over configurations: regular triangulations, parallelepipeds,
//! simplicial Hilbert bases, normality checks and shellings.
//!
//! Everything is computed in lattice coordinates where `ZA = Z^r`, so
//! volumes are normalized and parallelepiped points live in `ZA`.

mod cones;
mod frame;
mod normality;
mod shelling;
mod triangulation;

pub use cones::{
    cone_hilbert_basis, extreme_rays, face_partition, fp_points, hilbert_basis_simplicial, normalized_volume,
    reversed_simplex_feasible, FacePartition,
};
pub use frame::{normalize_lattice, LatticeFrame};
pub use normality::{is_delta_normal, is_normal, is_normal_over};
pub use shelling::{find_shelling, restricted_shelling, star, Shelling};
pub use triangulation::{
    default_triangulation, is_triangulation, is_unimodular, lexicographic_subdivision,
    order_triangulation, regular_subdivision, regular_triangulation, Triangulation,
};
