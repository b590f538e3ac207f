//! JSON reports. Keys come out sorted and floats carry 10 significant
//! digits so that output can be diffed across machines.

use serde::Serialize;
use serde_json::{json, Value};

use crate::io::sgf;
use crate::oriented::{energy_bound, Orientation};
use crate::search::{CatalogEntry, SearchCertificate};

/// Rounds to 10 significant digits.
pub fn sig10(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.9e}").parse().expect("formatted float parses")
}

/// One entry of `SᵀS` that differs from `kI`, with 1-based vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramViolation {
    pub u: usize,
    pub v: usize,
    pub value: i64,
    pub expected: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub input_path: Option<String>,
    pub n: usize,
    pub k: usize,
    pub is_optimum: bool,
    pub energy: f64,
    /// `n·√Δ`.
    pub energy_bound: f64,
    pub even_neighborhood_ok: bool,
    pub gram_violations: Vec<GramViolation>,
}

impl VerifyReport {
    pub fn new(o: &Orientation, k: usize, input_path: Option<String>) -> Self {
        let report = o.gram(k);
        let mut gram_violations: Vec<GramViolation> = report
            .diagonal_violations
            .iter()
            .map(|&(u, value)| GramViolation {
                u: u + 1,
                v: u + 1,
                value,
                expected: k as i64,
            })
            .chain(report.off_diagonal_violations.iter().map(|&(u, v, value)| GramViolation {
                u: u + 1,
                v: v + 1,
                value,
                expected: 0,
            }))
            .collect();
        gram_violations.sort_by_key(|g| (g.u, g.v));
        VerifyReport {
            input_path,
            n: o.order(),
            k,
            is_optimum: report.is_optimum,
            energy: o.skew_energy(),
            energy_bound: energy_bound(o.graph()),
            even_neighborhood_ok: o.graph().has_even_neighborhoods(),
            gram_violations,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v["energy"] = json!(sig10(self.energy));
        v["energy_bound"] = json!(sig10(self.energy_bound));
        v
    }
}

fn big_count(x: u128) -> Value {
    match u64::try_from(x) {
        Ok(small) => json!(small),
        Err(_) => json!(x.to_string()),
    }
}

/// `{outcome, witness, nodes, classes, time, ...}`; `witness` is sgf text
/// or null.
pub fn search_json(cert: &SearchCertificate, k: usize) -> Value {
    let mut v = json!({
        "outcome": cert.outcome.label(),
        "witness": cert.outcome.witness().map(|o| sgf::write(o, k)),
        "nodes": cert.nodes_explored,
        "classes": big_count(cert.classes_covered),
        "total_classes": big_count(cert.total_classes()),
        "cycle_space_dim": cert.cycle_space_dim,
        "exhaustive": cert.is_exhaustive(),
        "time": sig10(cert.wall_time),
    });
    if !cert.solutions.is_empty() {
        v["solutions"] = json!(cert.solutions.iter().map(|o| sgf::write(o, k)).collect::<Vec<_>>());
    }
    v
}

pub fn catalog_entry_json(e: &CatalogEntry) -> Value {
    let mut v = json!({
        "order": e.order,
        "k": e.k,
        "graph6": e.certificate,
        "clique_level": e.clique_level.as_str(),
        "orientable": e.orientable,
        "witness": e.witness.as_ref().map(|o| sgf::write(o, e.k)),
    });
    if let Some(s) = e.search {
        v["nodes"] = json!(s.nodes_explored);
        v["classes"] = big_count(s.classes_covered);
        v["cycle_space_dim"] = json!(s.cycle_space_dim);
        v["time"] = json!(sig10(s.wall_time));
    }
    v
}

/// Full catalog with per-order totals.
pub fn catalog_json(k: usize, orders: &[usize], entries: &[CatalogEntry]) -> Value {
    let mut counts = serde_json::Map::new();
    for &n in orders {
        let at: Vec<&CatalogEntry> = entries.iter().filter(|e| e.order == n).collect();
        counts.insert(
            n.to_string(),
            json!({
                "graphs": at.len(),
                "orientable": at.iter().filter(|e| e.orientable == Some(true)).count(),
            }),
        );
    }
    json!({
        "k": k,
        "orders": orders,
        "counts": counts,
        "entries": entries.iter().map(catalog_entry_json).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}
