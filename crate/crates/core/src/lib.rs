//! Connectivity hypermatrices and spectra of general (non-uniform) hypergraphs.
//!
//! A general hypergraph has edges of mixed cardinalities. Each edge of
//! cardinality `s` is spread over all order-`m` index tuples that use every
//! vertex of the edge at least once, scaled by `s / alpha(m, s)` where
//! `alpha(m, s)` counts those tuples. With that normalization the row sums of
//! the adjacency hypermatrix recover the vertex degrees, and the familiar
//! spectral objects (Laplacian, signless Laplacian, two normalized
//! Laplacians) carry over from graphs.
//!
//! The crate never materializes an `n^m` array for real work. Operators are
//! *virtual*: entry coefficients are exact rationals, and contractions
//! (`T x^{m-1}`, `x^T T x^{m-1}`) are evaluated per edge through an
//! inclusion–exclusion identity that is independent of the tuple count.
//!
//! Modules:
//! - [`model`]: the canonical hypergraph, degrees, connected components.
//! - [`tensor`]: the five virtual hypermatrix kinds, entry streams,
//!   contractions, row sums.
//! - [`eigen`]: H- and Z-eigenpair iterations, residual certification,
//!   spectral bound reports.
//! - [`connectivity`]: analytic connectivity by projected gradient descent
//!   on a simplex substitution.
//! - [`charpoly`]: exact characteristic polynomials for dimension-2
//!   operators via the Sylvester resultant, plus dense brute-force oracles.
//! - [`construct`]: Cartesian products, spanning subhypergraphs,
//!   cardinality partitions, regular families.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature simply forwards to the std implementations of the numeric
//! dependencies.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod charpoly;
pub mod connectivity;
pub mod construct;
pub mod eigen;
pub mod model;
pub mod poly;
pub mod rng;
pub mod tensor;

pub use charpoly::{brute_entries, brute_entries_f64, charpoly_n2, CharPoly, CharPolyError};
pub use connectivity::{analytic_connectivity, ConnectivityResult};
pub use construct::{
    cardinality_partition, cartesian_product, product_eigenpair, regular_family, spanning_sub,
    ConstructError, ProductIndexMap, RegularFamily,
};
pub use eigen::{
    bound_report, h_power, h_residual, verify_known_pairs, z_residual, z_shss, BoundReport,
    BoundRow, EigenError, EigenPair, KnownPairCheck, KnownPairLabel, KnownPairsReport, PairKind,
    ShiftPolicy, SolverConfig, ZSweep,
};
pub use model::{DegreeProfile, Edge, Hypergraph, ModelError, Vertex};
pub use tensor::{Entry, EntryValue, TensorError, TensorKind, TensorOperator};
