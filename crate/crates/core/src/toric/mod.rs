//! Toric ideals: configurations, term orders, Gröbner bases and fibers.

mod config;
mod fiber;
mod groebner;
mod order;

pub use config::{Configuration, PositiveFunctional};
pub use fiber::{cheapest_in_fiber, fiber, Semigroup};
pub use groebner::{
    initial_ideal, kernel_basis, max_degree, toric_groebner, toric_groebner_with_budget, Binomial,
    Budget, GroebnerBasis,
};
pub(crate) use groebner::next_subset;
pub use order::TermOrder;
