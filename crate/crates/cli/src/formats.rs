//! JSON documents read and written by the command line. Vertex ids are
//! 0-based everywhere in JSON (DIMACS files are 1-based).

use distgirth_core::lll::{CheckReport, GammaInterval, PaperParameters, Sys1Report};
use distgirth_core::model::{dependency_graph, DependencyGraph, EventSpec};
use distgirth_core::search::{GammaOrP, Rejection};
use distgirth_core::BaseGraph;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

/// JSON that does not match the expected document shape.
#[derive(Debug, thiserror::Error)]
#[error("{what}: invalid JSON at `{path}`: {message}")]
pub struct SchemaError {
    pub what: String,
    pub path: String,
    pub message: String,
}

/// Deserializes with the path of the first offending value in the error.
pub fn from_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, SchemaError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| SchemaError {
        what: what.to_string(),
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerticesFile {
    pub n: u32,
    pub dimension: u32,
    /// Coordinates as `'0'`/`'1'` strings, in vertex order.
    pub vertices: Vec<String>,
}

impl VerticesFile {
    pub fn of(g: &BaseGraph) -> Self {
        VerticesFile {
            n: g.n(),
            dimension: g.dimension(),
            vertices: g.vertices().iter().map(|v| v.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleReport {
    pub s: u32,
    pub labeled: u128,
    pub distinct: u64,
}

/// An event system. Without `dependencies`, two events depend on each other
/// when their variable sets meet.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventSystem {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    pub events: Vec<EventSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dependencies: Option<Vec<Vec<u32>>>,
}

impl EventSystem {
    pub fn probabilities(&self) -> Vec<f64> {
        self.events.iter().map(|e| e.probability).collect()
    }

    pub fn dependency_graph(&self) -> distgirth_core::Result<DependencyGraph> {
        match &self.dependencies {
            Some(lists) => {
                if lists.len() != self.events.len() {
                    return Err(distgirth_core::Error::Parameter(format!(
                        "{} dependency lists for {} events",
                        lists.len(),
                        self.events.len()
                    )));
                }
                DependencyGraph::from_neighbors(lists.clone())
            }
            None => Ok(dependency_graph(&self.events)),
        }
    }
}

/// Outcome of `lll-check`, in either lemma form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginReport {
    /// `general`, `bollobas` or `construction`.
    pub style: String,
    pub holds: bool,
    pub tolerance: f64,
    pub margins: Vec<f64>,
    pub failing: Vec<usize>,
    /// Events violating `0 < d P < 0.69` (logarithmic form only).
    pub hypothesis_violations: Vec<usize>,
    /// Subset events with no inner edge.
    pub unavoidable: Vec<usize>,
    pub bound: Option<f64>,
    pub log_bound: Option<f64>,
}

impl MarginReport {
    pub fn from_check(style: &str, tolerance: f64, r: CheckReport) -> Self {
        MarginReport {
            style: style.into(),
            holds: r.holds,
            tolerance,
            margins: r.margins,
            failing: r.failing,
            hypothesis_violations: Vec::new(),
            unavoidable: Vec::new(),
            bound: r.bound,
            log_bound: Some(r.log_bound),
        }
    }

    pub fn hypothesis_failure(
        style: &str,
        tolerance: f64,
        events: usize,
        violations: Vec<usize>,
    ) -> Self {
        MarginReport {
            style: style.into(),
            holds: false,
            tolerance,
            margins: Vec::with_capacity(events),
            failing: Vec::new(),
            hypothesis_violations: violations,
            unavoidable: Vec::new(),
            bound: None,
            log_bound: None,
        }
    }

    pub fn from_sys1(tolerance: f64, r: Sys1Report) -> Self {
        let failing = r
            .margins
            .iter()
            .enumerate()
            .filter(|(_, &m)| m < -tolerance)
            .map(|(i, _)| i)
            .collect();
        MarginReport {
            style: "construction".into(),
            holds: r.holds,
            tolerance,
            margins: r.margins,
            failing,
            hypothesis_violations: r.hypothesis_violations,
            unavoidable: r.unavoidable,
            bound: r.bound,
            log_bound: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsReport {
    pub parameters: PaperParameters,
    /// `gamma^(4n)`.
    pub p: f64,
    pub interval: GammaInterval,
    /// `s - 2 + (s - 1 - f) log2(gamma)` for `s = 3..=k`.
    pub exponent_conditions: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub k: u32,
    pub epsilon: f64,
    pub f: f64,
    pub lower: f64,
    pub upper: f64,
    pub nonempty: bool,
    /// The row produced by the parameter recipe.
    pub recipe: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub delta: f64,
    pub rows: Vec<ScanRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleReport {
    pub n: u32,
    pub p: f64,
    pub seed: u64,
    pub replica: u64,
    pub sampler: String,
    pub edges: usize,
    pub edge_mask_hex: String,
}

/// Written instead of a certificate when search or certification fails.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureReport {
    /// `rejected`, `exhausted` or `infeasible`.
    pub status: String,
    pub reason: String,
    pub n: u32,
    pub k: u32,
    pub l: Option<u64>,
    pub method: String,
    pub gamma_or_p: Option<GammaOrP>,
    pub seeds: Vec<u64>,
    /// Mask of the last restart's final subgraph, when there is one.
    pub edge_mask_hex: Option<String>,
    /// Cycle or independent set behind a rejection.
    pub witness: Option<Vec<u32>>,
}

pub fn rejection_parts(r: &Rejection) -> (&'static str, Option<Vec<u32>>) {
    match r {
        Rejection::ShortCycle(c) => ("short_cycle", Some(c.clone())),
        Rejection::LargeIndependentSet(s) => ("large_independent_set", Some(s.clone())),
        Rejection::AlphaUndetermined { .. } => ("alpha_undetermined", None),
        Rejection::Invalid(_) => ("invalid", None),
    }
}
