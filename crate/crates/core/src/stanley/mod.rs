//! Special standard pairs, Stanley decompositions built from shellings,
//! Stanley filtrations with their Cohen-Macaulay certificate, and the
//! generator classes behind the degree bound for Δ-normal configurations.

mod bounds;
mod filtration;
mod special;

pub use bounds::{
    classify_generators, classify_initial_ideal, out_preimages, ClassifiedGenerator, GeneratorClass,
    GeneratorClassification,
};
pub use filtration::{
    algorithm_list, certify_cm, default_check_degree, stanley_decomposition, verify_filtration,
    StanleyFiltration, StanleyPair,
};
pub use special::{delta_of_root, shelling_monomial, special_pairs, FacetPairs, SpecialPair, SpecialPairs};
