//! Constructive search for subgraphs of `G_{4n}` with girth above `k` and
//! small independence number, and their certificates.
//!
//! [`moser_tardos_search`] samples every base edge once, then repeatedly
//! resamples the edges of the lowest-indexed bad event that currently
//! occurs. [`deletion_method`] samples once and deletes one edge from each
//! remaining short cycle. Both hand their subgraph to [`certify`], which
//! re-derives every claimed quantity with the exact solvers.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::base::{BaseGraph, EdgeSubset};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::{
    draw, edge_stream, enumerate_cycle_events, enumerate_independent_set_events, EventKind,
    EventSpec, ModelParams, DEFAULT_EVENT_GUARD,
};
use crate::solvers::{
    girth, independence_number, shortest_cycle_at_most, SolveBudget, SolveResult, SolveValue,
    Witness,
};
use crate::SOLVER_VERSION;

/// Which model parameter produced a sample.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum GammaOrP {
    Gamma(f64),
    P(f64),
}

impl From<&ModelParams> for GammaOrP {
    fn from(m: &ModelParams) -> Self {
        if m.is_p_override() {
            GammaOrP::P(m.p())
        } else {
            GammaOrP::Gamma(m.gamma())
        }
    }
}

/// A verified subgraph: girth above `k`, independence number at most `l`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GirthCertificate {
    pub n: u32,
    pub k: u32,
    pub l: u64,
    pub girth: SolveValue,
    pub alpha: u64,
    pub alpha_exact: bool,
    /// `ceil(N / l)`.
    pub chi_lower: u64,
    /// `chi_lower^(1 / 4n)`.
    pub empirical_rate: f64,
    pub seed: Option<u64>,
    pub gamma_or_p: Option<GammaOrP>,
    pub method: Option<String>,
    /// Edge mask in the layout of [`EdgeSubset::to_hex`].
    pub edge_mask_hex: String,
    pub solver_versions: String,
}

impl GirthCertificate {
    /// Decodes the certified subgraph.
    pub fn subgraph<'g>(&self, base: &'g BaseGraph) -> Result<EdgeSubset<'g>> {
        if base.n() != self.n {
            return Err(Error::Parameter(alloc::format!(
                "certificate is for n = {}, base graph has n = {}",
                self.n,
                base.n()
            )));
        }
        EdgeSubset::from_hex(base, &self.edge_mask_hex)
    }
}

/// Why a subgraph was not certified.
#[derive(Clone, Debug, PartialEq)]
pub enum Rejection {
    /// A cycle of length at most `k`.
    ShortCycle(Vec<u32>),
    /// An independent set larger than `l`.
    LargeIndependentSet(Vec<u32>),
    /// The independence number could not be settled within budget.
    AlphaUndetermined {
        lower: u64,
        upper: u64,
    },
    Invalid(Error),
}

impl core::fmt::Display for Rejection {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Rejection::ShortCycle(c) => write!(f, "cycle of length {} at vertices {c:?}", c.len()),
            Rejection::LargeIndependentSet(s) => write!(f, "independent set of size {}", s.len()),
            Rejection::AlphaUndetermined { lower, upper } => {
                write!(
                    f,
                    "independence number undetermined within budget ({lower}..={upper})"
                )
            }
            Rejection::Invalid(e) => write!(f, "{e}"),
        }
    }
}

/// Reproduction metadata copied into certificates.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Provenance {
    pub seed: Option<u64>,
    pub gamma_or_p: Option<GammaOrP>,
    pub method: Option<String>,
}

impl Provenance {
    fn of(m: &ModelParams, method: &str) -> Self {
        Provenance {
            seed: Some(m.seed()),
            gamma_or_p: Some(m.into()),
            method: Some(method.into()),
        }
    }
}

/// Certifies girth above `k` and `alpha <= l`, or explains why not.
pub fn certify(
    sub: &EdgeSubset<'_>,
    k: u32,
    l: u64,
    budget: &SolveBudget,
    provenance: Provenance,
) -> core::result::Result<GirthCertificate, Rejection> {
    let graph = sub.to_graph();
    if let Some(c) = shortest_cycle_at_most(&graph, k) {
        return Err(Rejection::ShortCycle(c));
    }
    let alpha = independence_number(&graph, budget).map_err(Rejection::Invalid)?;
    assemble(sub, &graph, k, l, &alpha, provenance)
}

/// Like [`certify`] with `l` set to the exact independence number.
pub fn certify_exact(
    sub: &EdgeSubset<'_>,
    k: u32,
    budget: &SolveBudget,
    provenance: Provenance,
) -> core::result::Result<GirthCertificate, Rejection> {
    let graph = sub.to_graph();
    if let Some(c) = shortest_cycle_at_most(&graph, k) {
        return Err(Rejection::ShortCycle(c));
    }
    let alpha = independence_number(&graph, budget).map_err(Rejection::Invalid)?;
    assemble(sub, &graph, k, alpha.lower.max(1), &alpha, provenance)
}

fn assemble(
    sub: &EdgeSubset<'_>,
    graph: &Graph,
    k: u32,
    l: u64,
    alpha: &SolveResult,
    provenance: Provenance,
) -> core::result::Result<GirthCertificate, Rejection> {
    if l == 0 {
        return Err(Rejection::Invalid(Error::Parameter(
            "l must be positive".into(),
        )));
    }
    if alpha.lower > l {
        let set = match &alpha.witness {
            Some(Witness::IndependentSet(s)) => s.clone(),
            _ => Vec::new(),
        };
        return Err(Rejection::LargeIndependentSet(set));
    }
    if !alpha.exact {
        return Err(Rejection::AlphaUndetermined {
            lower: alpha.lower,
            upper: alpha.upper.unwrap_or(u64::MAX),
        });
    }
    let base = sub.base();
    let chi_lower = (base.vertex_count() as u64).div_ceil(l);
    Ok(GirthCertificate {
        n: base.n(),
        k,
        l,
        girth: girth(graph).value,
        alpha: alpha.lower,
        alpha_exact: true,
        chi_lower,
        empirical_rate: libm::pow(chi_lower as f64, 1.0 / base.dimension() as f64),
        seed: provenance.seed,
        gamma_or_p: provenance.gamma_or_p,
        method: provenance.method,
        edge_mask_hex: sub.to_hex(),
        solver_versions: SOLVER_VERSION.into(),
    })
}

/// Re-derives a certificate from its serialized mask and compares every
/// field; returns the mismatching field name on failure.
pub fn recheck(
    cert: &GirthCertificate,
    base: &BaseGraph,
    budget: &SolveBudget,
) -> core::result::Result<(), String> {
    let sub = cert.subgraph(base).map_err(|e| alloc::format!("{e}"))?;
    let provenance = Provenance {
        seed: cert.seed,
        gamma_or_p: cert.gamma_or_p,
        method: cert.method.clone(),
    };
    let again =
        certify(&sub, cert.k, cert.l, budget, provenance).map_err(|r| alloc::format!("{r}"))?;
    let fields: [(&str, bool); 6] = [
        ("girth", again.girth == cert.girth),
        ("alpha", again.alpha == cert.alpha),
        ("alpha_exact", again.alpha_exact == cert.alpha_exact),
        ("chi_lower", again.chi_lower == cert.chi_lower),
        (
            "empirical_rate",
            again.empirical_rate.to_bits() == cert.empirical_rate.to_bits(),
        ),
        ("edge_mask_hex", again.edge_mask_hex == cert.edge_mask_hex),
    ];
    match fields.iter().find(|(_, ok)| !ok) {
        Some((name, _)) => Err(alloc::format!("field {name} does not reproduce")),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    /// Forbidden cycle lengths are `3..=k`.
    pub k: u32,
    /// Independence bound to certify; `None` certifies the exact value.
    /// Subset events need it.
    pub l: Option<u64>,
    pub max_resamples: u64,
    /// Include the `C(N, l)` independent-set events.
    pub subset_events: bool,
    pub event_guard: usize,
    pub budget: SolveBudget,
}

impl SearchConfig {
    pub fn new(k: u32, l: Option<u64>) -> Self {
        SearchConfig {
            k,
            l,
            max_resamples: 1_000_000,
            subset_events: false,
            event_guard: DEFAULT_EVENT_GUARD,
            budget: SolveBudget::UNLIMITED,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchOutcome {
    Certified(GirthCertificate),
    /// Resample budget spent while events were still occurring.
    Exhausted {
        violated: usize,
    },
    /// Events that occur with certainty (independent `l`-subsets of `G_{4n}`
    /// itself), so no assignment avoids them.
    Infeasible(Vec<usize>),
    /// All events avoided, but certification failed.
    Rejected(Rejection),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub resamples: u64,
    /// Number of occurring events before each step (first entry: after the
    /// initial sample).
    pub violated_history: Vec<u32>,
    pub event_count: usize,
    /// Final edge mask.
    pub edge_mask_hex: String,
}

/// Moser–Tardos resampling over cycle events of length `3..=k` and,
/// optionally, independent-set events of size `l`.
pub fn moser_tardos_search(
    g: &BaseGraph,
    m: &ModelParams,
    cfg: &SearchConfig,
) -> Result<SearchReport> {
    if m.n() != g.n() {
        return Err(Error::Parameter(
            "model and base graph disagree on n".into(),
        ));
    }
    cfg.budget.validate()?;
    let p = m.p();
    let mut events = enumerate_cycle_events(g, cfg.k, p, cfg.event_guard)?;
    if cfg.subset_events {
        let l = cfg
            .l
            .ok_or_else(|| Error::Parameter("subset events need l".into()))?;
        if l as usize <= g.vertex_count() {
            let left = cfg.event_guard - events.len();
            events.extend(enumerate_independent_set_events(g, l as usize, p, left)?);
        }
    }
    let unavoidable: Vec<usize> = events
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_unavoidable())
        .map(|(i, _)| i)
        .collect();

    let mut rng = edge_stream(m.seed(), 0);
    let edges = g.edge_count();
    let mut sub = EdgeSubset::empty(g);
    for e in 0..edges {
        if draw(&mut rng, p) {
            sub.insert(e);
        }
    }
    if !unavoidable.is_empty() {
        return Ok(SearchReport {
            outcome: SearchOutcome::Infeasible(unavoidable),
            resamples: 0,
            violated_history: Vec::new(),
            event_count: events.len(),
            edge_mask_hex: sub.to_hex(),
        });
    }

    let mut state = EventState::new(&events, edges, &sub);
    let mut history = Vec::new();
    let mut resamples = 0u64;
    loop {
        history.push(state.violated.len() as u32);
        let Some(&i) = state.violated.first() else {
            break;
        };
        if resamples == cfg.max_resamples {
            return Ok(SearchReport {
                outcome: SearchOutcome::Exhausted {
                    violated: state.violated.len(),
                },
                resamples,
                violated_history: history,
                event_count: events.len(),
                edge_mask_hex: sub.to_hex(),
            });
        }
        for &e in &events[i as usize].variable_set {
            let keep = draw(&mut rng, p);
            if keep != sub.contains(e as usize) {
                sub.set(e as usize, keep);
                state.flip(&events, e, keep);
            }
        }
        resamples += 1;
    }

    let provenance = Provenance::of(m, "moser-tardos");
    let certified = match cfg.l {
        Some(l) => certify(&sub, cfg.k, l, &cfg.budget, provenance),
        None => certify_exact(&sub, cfg.k, &cfg.budget, provenance),
    };
    let outcome = match certified {
        Ok(c) => SearchOutcome::Certified(c),
        Err(r) => SearchOutcome::Rejected(r),
    };
    Ok(SearchReport {
        outcome,
        resamples,
        violated_history: history,
        event_count: events.len(),
        edge_mask_hex: sub.to_hex(),
    })
}

/// Incremental occurrence tracking: per event, the number of its edges
/// currently present.
struct EventState {
    present: Vec<u32>,
    by_edge: Vec<Vec<u32>>,
    violated: BTreeSet<u32>,
}

impl EventState {
    fn new(events: &[EventSpec], edges: usize, sub: &EdgeSubset<'_>) -> Self {
        let mut by_edge = vec![Vec::new(); edges];
        let mut present = Vec::with_capacity(events.len());
        let mut violated = BTreeSet::new();
        for (i, ev) in events.iter().enumerate() {
            for &e in &ev.variable_set {
                by_edge[e as usize].push(i as u32);
            }
            let count = ev
                .variable_set
                .iter()
                .filter(|&&e| sub.contains(e as usize))
                .count() as u32;
            present.push(count);
            if occurring(ev, count) {
                violated.insert(i as u32);
            }
        }
        EventState {
            present,
            by_edge,
            violated,
        }
    }

    fn flip(&mut self, events: &[EventSpec], e: u32, now_present: bool) {
        for &i in &self.by_edge[e as usize] {
            let c = &mut self.present[i as usize];
            if now_present {
                *c += 1;
            } else {
                *c -= 1;
            }
            if occurring(&events[i as usize], *c) {
                self.violated.insert(i);
            } else {
                self.violated.remove(&i);
            }
        }
    }
}

fn occurring(ev: &EventSpec, present: u32) -> bool {
    match ev.kind {
        EventKind::Cycle => present as usize == ev.variable_set.len(),
        EventKind::IndependentSet => present == 0,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeletionReport {
    /// Certificate with `l` set to the exact independence number.
    pub certificate: core::result::Result<GirthCertificate, Rejection>,
    /// Deleted edge indices, in deletion order.
    pub deleted: Vec<usize>,
    pub sampled_edges: usize,
    /// Final edge mask (girth above `k` regardless of certification).
    pub edge_mask_hex: String,
}

/// Samples once, then while a cycle of length at most `k` remains deletes
/// the smallest-indexed edge of a shortest such cycle.
pub fn deletion_method(
    g: &BaseGraph,
    m: &ModelParams,
    k: u32,
    budget: &SolveBudget,
) -> Result<DeletionReport> {
    if m.n() != g.n() {
        return Err(Error::Parameter(
            "model and base graph disagree on n".into(),
        ));
    }
    if k < 3 {
        return Err(Error::CycleLength {
            s: k,
            min: 3,
            max: u32::MAX,
        });
    }
    budget.validate()?;
    let mut sub = crate::model::sample_subgraph(g, m);
    let sampled_edges = sub.len();
    let mut graph = sub.to_graph();
    let mut finder = crate::solvers::girth::CycleFinder::new(g.vertex_count());
    let mut deleted = Vec::new();
    // Rounds by length: once every root is clean at length L, all cycles are
    // longer than L, and deletions never create cycles.
    for len in 3..=k {
        for root in 0..g.vertex_count() as u32 {
            while let Some(c) = finder.find_from(&graph, root, len) {
                let s = c.len();
                let e = (0..s)
                    .map(|i| g.edge_index(c[i], c[(i + 1) % s]).expect("subgraph edge"))
                    .min()
                    .unwrap();
                let (u, v) = g.edge(e);
                graph.remove_edge(u, v);
                sub.remove(e);
                deleted.push(e);
            }
        }
    }
    let certificate = match independence_number(&graph, budget) {
        Ok(alpha) => assemble(
            &sub,
            &graph,
            k,
            alpha.lower.max(1),
            &alpha,
            Provenance::of(m, "deletion"),
        ),
        Err(e) => Err(Rejection::Invalid(e)),
    };
    Ok(DeletionReport {
        certificate,
        deleted,
        sampled_edges,
        edge_mask_hex: sub.to_hex(),
    })
}
