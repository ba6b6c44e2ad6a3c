//! Canonical forms and orbit enumeration under pivot and local
//! complementation.

mod canonical;
mod enumerate;

pub use canonical::{brute_force_canonical, canonical_form, canonical_form_colored, CanonicalForm};
pub use enumerate::{
    all_graph_reps, bipartite_connected_classes, classify, classify_reps, connected_graph_reps,
    euler_transform, extend_bipartite, extension_count, labelled_orbit_members,
    labelled_orbit_size, lc_orbit, orbit, orbit_members, pivot_orbit, reps_from_database,
    reps_to_database, Classification, Mode, MoveSet, OrbitClass, OrbitReport, Universe,
};
