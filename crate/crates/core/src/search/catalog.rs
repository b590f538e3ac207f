//! Enumerated graphs annotated with their clique level and orientability.

use rayon::prelude::*;

use super::enumerate::{enumerate_graphs, EnumerateOptions, EnumeratedGraph};
use super::orient::{find_optimum_orientation, SearchOptions, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{CliqueLevel, UndirectedGraph};
use crate::oriented::Orientation;

/// Environment variable capping the number of catalog worker threads.
pub const THREADS_ENV: &str = "SKEWOPT_THREADS";

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    /// Canonically labelled.
    pub graph: UndirectedGraph,
    pub order: usize,
    pub k: usize,
    /// graph6 of `graph`.
    pub certificate: String,
    pub clique_level: CliqueLevel,
    /// `None` until the orientation search has run.
    pub orientable: Option<bool>,
    pub witness: Option<Orientation>,
    pub search: Option<SearchSummary>,
}

/// Counters of the orientation search behind a catalog verdict.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchSummary {
    pub nodes_explored: u64,
    pub classes_covered: u128,
    pub cycle_space_dim: usize,
    pub wall_time: f64,
}

impl CatalogEntry {
    pub fn unclassified(k: usize, e: EnumeratedGraph) -> Self {
        CatalogEntry {
            order: e.graph.order(),
            clique_level: e.graph.classify_clique_level(),
            graph: e.graph,
            k,
            certificate: e.certificate,
            orientable: None,
            witness: None,
            search: None,
        }
    }

    /// Runs the orientation search and fills the verdict.
    pub fn classify(&mut self) -> Result<()> {
        let cert = find_optimum_orientation(&self.graph, self.k, &SearchOptions::default())?;
        self.search = Some(SearchSummary {
            nodes_explored: cert.nodes_explored,
            classes_covered: cert.classes_covered,
            cycle_space_dim: cert.cycle_space_dim,
            wall_time: cert.wall_time,
        });
        match cert.outcome {
            SearchOutcome::Found(o) => {
                self.orientable = Some(true);
                self.witness = Some(o);
            }
            SearchOutcome::NotFound => self.orientable = Some(false),
            SearchOutcome::LimitReached => unreachable!("no node limit was set"),
        }
        Ok(())
    }
}

/// Even neighbourhood graphs of order `n`, orientability left open.
pub fn enumerate_even_neighborhood(k: usize, n: usize, opts: &EnumerateOptions) -> Result<Vec<CatalogEntry>> {
    let graphs = enumerate_graphs(k, n, &EnumerateOptions {
        even_neighborhoods: true,
        ..opts.clone()
    })?;
    Ok(graphs.into_iter().map(|e| CatalogEntry::unclassified(k, e)).collect())
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(Error::InvalidParameter(format!("{THREADS_ENV} must be a positive integer, got `{s}`"))),
        },
    }
}

/// Enumerates every order in `orders` and classifies each graph, honouring
/// [`THREADS_ENV`]. Entries are sorted by order, then certificate.
pub fn build_catalog(k: usize, orders: &[usize]) -> Result<Vec<CatalogEntry>> {
    build_catalog_with(k, orders, &EnumerateOptions::default(), threads_from_env()?)
}

pub fn build_catalog_with(
    k: usize,
    orders: &[usize],
    opts: &EnumerateOptions,
    threads: Option<usize>,
) -> Result<Vec<CatalogEntry>> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    let mut entries = Vec::new();
    for &n in orders {
        entries.extend(enumerate_even_neighborhood(k, n, opts)?);
    }
    pool.install(|| entries.par_iter_mut().try_for_each(CatalogEntry::classify))?;
    entries.sort_by(|a, b| (a.order, &a.certificate).cmp(&(b.order, &b.certificate)));
    Ok(entries)
}
