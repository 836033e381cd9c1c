//! Monomial ideals: minimal generators, localization, standard monomials
//! and standard pair decompositions.

mod ideal;
mod monomial;
mod pairs;

pub use ideal::{minimalize, MonomialIdeal};
pub use monomial::{default_names, parse_monomial_list, Monomial};
pub use pairs::{
    associated_faces, embedded_prime_free, standard_pairs, standard_pairs_with_budget,
    StandardPair, DEFAULT_PAIR_BUDGET,
};
