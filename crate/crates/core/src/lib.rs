//! Optimum skew energy orientations of regular graphs.
//!
//! An orientation of a `k`-regular graph on `n` vertices reaches the skew
//! energy bound `n·√k` exactly when its skew-adjacency matrix `S` satisfies
//! `SᵀS = kI`. This crate verifies that identity exactly, builds the known
//! optimum families, searches for optimum orientations modulo vertex
//! reversals, and enumerates the regular graphs with the even
//! neighbourhood property that could carry one.

pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod io;
pub mod matrix;
pub mod oriented;
pub mod report;
pub mod search;

pub use canon::{canonical_form, CanonicalForm};
pub use constructions::{g12_family, g26_family, p2_lift, paper_matrix, PaperMatrix};
pub use error::{Error, Result};
pub use graph::{CliqueLevel, PairParityViolation, UndirectedGraph};
pub use matrix::IntMatrix;
pub use oriented::{skew_energy, GramReport, Orientation, SpanningTree};
pub use search::{
    build_catalog, enumerate_even_neighborhood, find_optimum_orientation, CatalogEntry, EnumerateOptions,
    SearchCertificate, SearchOptions, SearchOutcome,
};
