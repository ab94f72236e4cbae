//! Lazy enumeration of far-apart vertex pairs by non-increasing distance, and
//! a Gromov hyperbolicity solver built on top of it that never materializes
//! the distance matrix.
//!
//! The pipeline is:
//!
//! 1. [`graph`] loads or generates a simple undirected graph and extracts its
//!    largest biconnected component.
//! 2. [`eccentricity`] computes exact eccentricities by bound refinement; every
//!    BFS it performs is handed to the far-apart store.
//! 3. [`farpairs::FarApartStore`] yields far-apart pairs lazily, running a BFS
//!    only the first time a vertex's far sets are needed.
//! 4. [`hyperbolicity::run`] scans pairs by decreasing distance and prunes
//!    4-tuples with the acceptable/valuable classification, a pruned BFS and
//!    a bounded BFS cache.
//!
//! [`oracle`] holds brute-force references used by the test suites.

pub mod cli;
pub mod eccentricity;
mod error;
pub mod farpairs;
pub mod graph;
pub mod hyperbolicity;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{DistanceVector, EccVector, Graph, Vertex, INF};
