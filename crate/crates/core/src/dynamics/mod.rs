//! Exact orbits of the map, transit-time quadrature on potential branches,
//! and the chemin: the order in which a particle visits the branches.

mod chemin;
mod orbit;
mod transit;

pub use chemin::{
    build_chemin, build_chemin_with, chemin_transits, transit_tolerance, verify_chemin, CheminGroup, CheminLeg,
    CheminSchedule, GroupTransit, KNOWN_GROUPS,
};
pub use orbit::{critical_orbit, fixed_points, logistic, map_iterate, two_cycle, Orbit};
pub use transit::{transit_time, transit_time_with};
