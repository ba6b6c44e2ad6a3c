//! Pivot (edge-local complementation) and local complementation on graphs
//! and hypergraphs through Boolean-function algebra, exact flat-spectra
//! analysis under the {I,H,N} transform family, orbit enumeration up to
//! isomorphism, and the bipartite-graph classification of binary linear
//! codes.
//!
//! Everything is exact: spectra live in Gaussian integers with deferred
//! powers of sqrt2, graphs are bit-row adjacency words, and codes are
//! bit-packed GF(2) matrices. See the `examples/` directory for a runnable
//! tour of each capability, or the `pivotlab` binary for the command-line
//! surface.

pub mod anf;
pub mod cli;
pub mod code;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod par;
pub mod rng;
pub mod orbit;
pub mod spectral;
pub mod suites;
pub mod tables;

pub use error::{Error, Result};
