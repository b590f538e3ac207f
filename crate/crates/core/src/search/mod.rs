//! Orientation search, graph enumeration and the catalog built from both.

pub mod catalog;
pub mod enumerate;
pub mod orient;

pub use catalog::{build_catalog, build_catalog_with, enumerate_even_neighborhood, CatalogEntry, SearchSummary, THREADS_ENV};
pub use enumerate::{enumerate_graphs, enumerate_streaming, feasibility_bound, EnumerateOptions, EnumerateStats, EnumeratedGraph};
pub use orient::{brute_force, find_optimum_orientation, BruteForceResult, SearchCertificate, SearchOptions, SearchOutcome};
