//! Families of configurations: Firla-Ziegler Hilbert bases, towers built
//! on them that stay Δ-normal, graph configurations, and towers that are
//! normal but Δ-normal for no regular triangulation.

mod firla_ziegler;
mod graphs;
mod towers;

pub use firla_ziegler::firla_ziegler;
pub use graphs::{graph_configuration, parse_edges, GraphConfig};
pub use towers::{
    certify_delta_normal_level, certify_non_delta_normal_tower, check_empty_normal_hypotheses,
    delta_normal_tower, non_delta_normal_tower, not_delta_normal_witness, parity_certificate, Tower,
    TowerLevel, DEFAULT_DELTA_TOWER_MAX, DEFAULT_NON_DELTA_TOWER_MAX,
};
