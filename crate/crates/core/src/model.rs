//! The random subgraph model on `G_{4n}`: every base edge is kept
//! independently with probability `p = gamma^(4n)`.
//!
//! # Sampling stream
//!
//! Samples are bit-reproducible. Replica `r` of seed `s` uses
//! `ChaCha20Rng::seed_from_u64(s)` with stream `r`; edge `e` (canonical
//! order) consumes the `e`-th `next_u64()` value `x` and is kept iff
//! `(x >> 11) * 2^-53 < p`. Resampling in the constructive search continues
//! the same stream, one draw per resampled edge in increasing edge order.
//!
//! # Events
//!
//! Two families of bad events are instantiated: an `l`-subset `W` of
//! vertices being independent (all `a = |E(W)|` base edges inside it absent,
//! probability `(1-p)^a`) and a cycle of `G_{4n}` of length `s` surviving
//! (all `s` edges present, probability `p^s`). Cycles are identified with
//! their edge sets. Two events depend on each other iff their edge sets meet.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;
use rand_chacha::ChaCha20Rng;
use rand_core::{RngCore, SeedableRng};

use crate::base::{binomial, BaseGraph, EdgeSubset};
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::solvers::enumerate_cycles;

/// Name of the generator recorded in reports.
pub const SAMPLER: &str = "chacha20-seed_from_u64-stream_replica-u53";

/// Default cap on the number of enumerated events.
pub const DEFAULT_EVENT_GUARD: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ModelParams {
    n: u32,
    gamma: f64,
    p: f64,
    p_override: bool,
    seed: u64,
}

impl ModelParams {
    /// `p = gamma^(4n)`.
    pub fn new(n: u32, gamma: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if !(gamma > 0.0 && gamma < 1.0) {
            return Err(Error::Parameter(alloc::format!(
                "gamma {gamma} outside (0, 1)"
            )));
        }
        let p = libm::pow(gamma, 4.0 * n as f64);
        if !(p > 0.0) {
            return Err(Error::Parameter(alloc::format!(
                "gamma^(4n) underflows for gamma {gamma}, n {n}; give p explicitly"
            )));
        }
        Ok(ModelParams {
            n,
            gamma,
            p,
            p_override: false,
            seed,
        })
    }

    /// Explicit edge probability in `[0, 1]`; gamma becomes `p^(1/4n)`.
    pub fn with_p(n: u32, p: f64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::Parameter(alloc::format!("p {p} outside [0, 1]")));
        }
        Ok(ModelParams {
            n,
            gamma: libm::pow(p, 1.0 / (4.0 * n as f64)),
            p,
            p_override: true,
            seed,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn is_p_override(&self) -> bool {
        self.p_override
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }
}

/// Generator for replica `replica` of `seed`.
pub fn edge_stream(seed: u64, replica: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(replica);
    rng
}

/// One Bernoulli(`p`) draw from the stream.
#[inline]
pub fn draw(rng: &mut ChaCha20Rng, p: f64) -> bool {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    ((rng.next_u64() >> 11) as f64 * SCALE) < p
}

/// Samples replica 0 of the model.
pub fn sample_subgraph<'g>(g: &'g BaseGraph, m: &ModelParams) -> EdgeSubset<'g> {
    sample_replica(g, m, 0)
}

pub fn sample_replica<'g>(g: &'g BaseGraph, m: &ModelParams, replica: u64) -> EdgeSubset<'g> {
    let mut rng = edge_stream(m.seed, replica);
    let edges = g.edge_count();
    let mask = Bitset::from_indices(edges, (0..edges).filter(|_| draw(&mut rng, m.p)));
    EdgeSubset::from_mask(g, mask).expect("mask sized to base")
}

/// `ln P(G) = |E| ln p + (M - |E|) ln(1 - p)`.
pub fn log_probability(sub: &EdgeSubset<'_>, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Probability(p));
    }
    let kept = sub.len() as f64;
    let total = sub.base().edge_count() as f64;
    Ok(kept * libm::log(p) + (total - kept) * libm::log1p(-p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EventKind {
    IndependentSet,
    Cycle,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct EventSpec {
    pub kind: EventKind,
    /// Sorted base edge indices the event depends on.
    pub variable_set: Vec<u32>,
    /// Subset size `l` or cycle length `s`.
    pub meta: u32,
    pub probability: f64,
    /// The subset `W` or the cycle's vertex sequence.
    #[cfg_attr(feature = "serde", serde(default))]
    pub vertices: Vec<u32>,
}

impl EventSpec {
    /// An independent-set event with `a = 0` happens with certainty.
    pub fn is_unavoidable(&self) -> bool {
        self.kind == EventKind::IndependentSet && self.variable_set.is_empty()
    }

    /// Whether the event happens when exactly the edges in `present` are kept.
    pub fn occurs(&self, present: &Bitset) -> bool {
        match self.kind {
            EventKind::IndependentSet => self
                .variable_set
                .iter()
                .all(|&e| !present.contains(e as usize)),
            EventKind::Cycle => self
                .variable_set
                .iter()
                .all(|&e| present.contains(e as usize)),
        }
    }
}

/// All `C(N, l)` independent-set events, subsets in lexicographic order.
pub fn enumerate_independent_set_events(
    g: &BaseGraph,
    l: usize,
    p: f64,
    guard: usize,
) -> Result<Vec<EventSpec>> {
    let n = g.vertex_count();
    if l == 0 || l > n {
        return Err(Error::Parameter(alloc::format!(
            "subset size {l} must lie in 1..={n}"
        )));
    }
    let count = binomial(n as u64, l as u64).to_u128().unwrap_or(u128::MAX);
    if count > guard as u128 {
        return Err(Error::Guard {
            what: "independent-set events",
            count,
            guard: guard as u128,
        });
    }
    let q = 1.0 - p;
    let mut events = Vec::with_capacity(count as usize);
    let mut subset: Vec<u32> = (0..l as u32).collect();
    loop {
        let mut edges = Vec::new();
        for (i, &a) in subset.iter().enumerate() {
            for &b in &subset[i + 1..] {
                if let Some(e) = g.edge_index(a, b) {
                    edges.push(e as u32);
                }
            }
        }
        edges.sort_unstable();
        events.push(EventSpec {
            kind: EventKind::IndependentSet,
            probability: libm::pow(q, edges.len() as f64),
            variable_set: edges,
            meta: l as u32,
            vertices: subset.clone(),
        });
        // next combination in lexicographic order
        let Some(i) = (0..l).rev().find(|&i| (subset[i] as usize) < n - l + i) else {
            break;
        };
        subset[i] += 1;
        for j in i + 1..l {
            subset[j] = subset[j - 1] + 1;
        }
    }
    Ok(events)
}

/// One event per cycle (as an edge set) of each length `3..=k`.
pub fn enumerate_cycle_events(
    g: &BaseGraph,
    k: u32,
    p: f64,
    guard: usize,
) -> Result<Vec<EventSpec>> {
    if k < 3 {
        return Err(Error::CycleLength {
            s: k,
            min: 3,
            max: u32::MAX,
        });
    }
    let mut events = Vec::new();
    for s in 3..=k {
        let left = guard - events.len();
        let cycles = enumerate_cycles(g.graph(), s, k, left).map_err(|e| match e {
            Error::Guard { .. } => Error::Guard {
                what: "cycle events",
                count: guard as u128 + 1,
                guard: guard as u128,
            },
            other => other,
        })?;
        let prob = libm::pow(p, s as f64);
        for c in cycles {
            events.push(EventSpec {
                kind: EventKind::Cycle,
                variable_set: g.cycle_edges(&c).expect("cycle of the base graph"),
                meta: s,
                probability: prob,
                vertices: c,
            });
        }
    }
    Ok(events)
}

/// Neighborhoods `J(i)` of a dependency graph over events.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DependencyGraph {
    neighbors: Vec<Vec<u32>>,
}

impl DependencyGraph {
    /// Arbitrary neighborhoods; each list is sorted and deduplicated, and
    /// must not contain its own event.
    pub fn from_neighbors(mut neighbors: Vec<Vec<u32>>) -> Result<Self> {
        let m = neighbors.len();
        for (i, list) in neighbors.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if let Some(&j) = list.iter().find(|&&j| j as usize >= m || j as usize == i) {
                return Err(Error::Parameter(alloc::format!(
                    "dependency list of event {i} contains invalid entry {j}"
                )));
            }
        }
        Ok(DependencyGraph { neighbors })
    }

    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.neighbors[i]
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Events are dependent iff their variable sets intersect.
pub fn dependency_graph(events: &[EventSpec]) -> DependencyGraph {
    let edges = events
        .iter()
        .flat_map(|e| e.variable_set.iter())
        .max()
        .map_or(0, |&e| e as usize + 1);
    let mut by_edge: Vec<Vec<u32>> = vec![Vec::new(); edges];
    for (i, ev) in events.iter().enumerate() {
        for &e in &ev.variable_set {
            by_edge[e as usize].push(i as u32);
        }
    }
    let neighbors = events
        .iter()
        .enumerate()
        .map(|(i, ev)| {
            let mut list: Vec<u32> = ev
                .variable_set
                .iter()
                .flat_map(|&e| by_edge[e as usize].iter().copied())
                .filter(|&j| j as usize != i)
                .collect();
            list.sort_unstable();
            list.dedup();
            list
        })
        .collect();
    DependencyGraph { neighbors }
}

/// `J(E)` split into independent-set events `J^x(E)` and cycle events of
/// each length, `J^y_s(E)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SplitNeighborhood {
    pub x: Vec<u32>,
    pub y: BTreeMap<u32, Vec<u32>>,
}

pub fn split_neighborhoods(events: &[EventSpec], deps: &DependencyGraph) -> Vec<SplitNeighborhood> {
    (0..deps.len())
        .map(|i| {
            let mut split = SplitNeighborhood::default();
            for &j in deps.neighbors(i) {
                let ev = &events[j as usize];
                match ev.kind {
                    EventKind::IndependentSet => split.x.push(j),
                    EventKind::Cycle => split.y.entry(ev.meta).or_default().push(j),
                }
            }
            split
        })
        .collect()
}
