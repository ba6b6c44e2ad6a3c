//! Exact spectral analysis under the {I,H,N} tensor transforms: phase
//! vectors, flatness, flat-spectra counting, and the identity checkers.

mod counts;
mod identities;
mod vector;

pub use counts::{
    average_flat_all_functions, average_flat_all_quadratics,
    average_flat_all_quadratics_by_size, clique_upper_bound, component_bound, count_flat,
    count_flat_quadratic, count_flat_quadratic_threaded, count_flat_threaded, family_flat_counts,
    flat_h_masks, flat_specs, round3, spec_is_flat_quadratic, FamilyFlatCounts, DIRECT_IHN_MAX_N,
    DIRECT_IH_MAX_N,
};
pub use identities::{
    verify_h_identities, verify_lc_chain, verify_napf, verify_pivot_identity, HBranch,
    HIdentityReport, LcChainReport,
};
pub use vector::{
    DiagEntry, DiagonalOp, Family, Gaussian, Kernel, KernelKind, SpectralVector, TransformSpec,
};
