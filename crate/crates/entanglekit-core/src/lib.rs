//! Numerical toolkit for bipartite quantum entanglement.
//!
//! Everything operates on small dense complex matrices (dimension up to
//! ~100) and is organised in layers:
//!
//! - [`linalg`] — Hermitian eigensolver, SVD, trace norm, PSD square root;
//! - [`states`] — pure/mixed bipartite states, Schmidt analysis, partial
//!   trace/transpose, reshuffling, Fano form, entropies and the named
//!   state families (Bell, Werner, tiles UPB, ...);
//! - [`separability`] — the criterion battery (PPT, reduction,
//!   majorisation, entropy, reshuffling, separable-ball tests) and the
//!   aggregate report;
//! - [`measures`] — entanglement quantifiers: pure-state entropies,
//!   two-qubit concurrence / EoF / maximal fidelity, negativities,
//!   bound curves and search-based oracles;
//! - [`locc`] — majorisation order, Nielsen convertibility and Vidal's
//!   optimal conversion probability;
//! - [`geometry`] — octant coordinates, Segre tests, local-orbit
//!   dimensions, insphere and volume-ratio formulas;
//! - [`sampling`] — seeded random states (Fubini–Study, Hilbert–Schmidt)
//!   and Monte Carlo estimation.
//!
//! All functions are pure; values are immutable once constructed, so the
//! whole crate is safe to call concurrently. The crate is `no_std`
//! compatible (`alloc` required): disable the default `std` feature to
//! build against `core + alloc + libm`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod error;
pub mod geometry;
pub mod linalg;
pub mod locc;
pub mod measures;
pub mod sampling;
pub mod separability;
pub mod states;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use states::{BipartiteDims, DensityMatrix, PureState, SchmidtData};

