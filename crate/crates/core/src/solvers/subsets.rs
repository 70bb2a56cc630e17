use alloc::vec::Vec;

use super::girth::girth;
use super::SolveValue;
use crate::base::binomial;
use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;
use num_traits::ToPrimitive;

/// Number of edges of `g` with both ends in `subset`. Repeated indices
/// count once.
pub fn edges_within(g: &Graph, subset: &[u32]) -> Result<usize> {
    for &v in subset {
        g.check_vertex(v)?;
    }
    let set = Bitset::from_indices(g.vertex_count(), subset.iter().map(|&v| v as usize));
    Ok(set
        .iter()
        .map(|v| {
            g.neighbors(v as u32)
                .iter()
                .filter(|&&w| set.contains(w as usize))
                .count()
        })
        .sum::<usize>()
        / 2)
}

/// Options for [`min_edges_over_subsets`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetSearch {
    /// Largest `C(N, l)` searched exhaustively.
    pub guard: u128,
    /// Fall back to local search above the guard instead of failing.
    pub allow_heuristic: bool,
}

impl Default for SubsetSearch {
    fn default() -> Self {
        SubsetSearch {
            guard: 50_000_000,
            allow_heuristic: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct MinEdges {
    pub min_edges: usize,
    /// An `l`-subset (sorted) attaining `min_edges`.
    pub witness: Vec<u32>,
    /// False when produced by local search.
    pub exact: bool,
}

/// Minimum number of edges spanned by an `l`-element vertex subset.
pub fn min_edges_over_subsets(g: &Graph, l: usize, opts: SubsetSearch) -> Result<MinEdges> {
    let n = g.vertex_count();
    if l == 0 || l > n {
        return Err(Error::Parameter(alloc::format!(
            "subset size {l} must lie in 1..={n}"
        )));
    }
    let count = binomial(n as u64, l as u64).to_u128().unwrap_or(u128::MAX);
    let adj = g.adjacency_bitsets();
    if count <= opts.guard {
        let mut search = Exhaustive {
            adj: &adj,
            l,
            best: usize::MAX,
            best_set: Vec::new(),
        };
        let mut chosen = Bitset::new(n);
        let mut stack = Vec::with_capacity(l);
        search.extend(0, 0, &mut chosen, &mut stack);
        return Ok(MinEdges {
            min_edges: search.best,
            witness: search.best_set,
            exact: true,
        });
    }
    if !opts.allow_heuristic {
        return Err(Error::Guard {
            what: "l-subsets",
            count,
            guard: opts.guard,
        });
    }
    Ok(local_search(&adj, l))
}

struct Exhaustive<'a> {
    adj: &'a [Bitset],
    l: usize,
    best: usize,
    best_set: Vec<u32>,
}

impl Exhaustive<'_> {
    fn extend(&mut self, next: usize, edges: usize, chosen: &mut Bitset, stack: &mut Vec<u32>) {
        if stack.len() == self.l {
            if edges < self.best {
                self.best = edges;
                self.best_set = stack.clone();
            }
            return;
        }
        let n = self.adj.len();
        let need = self.l - stack.len();
        for v in next..=n - need {
            let added = edges + self.adj[v].intersection_count(chosen);
            if added >= self.best {
                continue;
            }
            chosen.insert(v);
            stack.push(v as u32);
            self.extend(v + 1, added, chosen, stack);
            stack.pop();
            chosen.remove(v);
            if self.best == 0 {
                return;
            }
        }
    }
}

/// Greedy fill followed by best-improvement swaps.
fn local_search(adj: &[Bitset], l: usize) -> MinEdges {
    let n = adj.len();
    let mut inside = Bitset::new(n);
    for _ in 0..l {
        let v = (0..n)
            .filter(|&v| !inside.contains(v))
            .min_by_key(|&v| (adj[v].intersection_count(&inside), v))
            .unwrap();
        inside.insert(v);
    }
    loop {
        let mut best: Option<(isize, usize, usize)> = None;
        for u in inside.iter() {
            let du = adj[u].intersection_count(&inside) as isize;
            for v in (0..n).filter(|&v| !inside.contains(v)) {
                let dv = adj[v].intersection_count(&inside) as isize - adj[v].contains(u) as isize;
                let delta = dv - du;
                if delta < 0 && best.is_none_or(|b| delta < b.0) {
                    best = Some((delta, u, v));
                }
            }
        }
        match best {
            Some((_, u, v)) => {
                inside.remove(u);
                inside.insert(v);
            }
            None => break,
        }
    }
    let witness: Vec<u32> = inside.iter().map(|v| v as u32).collect();
    let min_edges = inside
        .iter()
        .map(|v| adj[v].intersection_count(&inside))
        .sum::<usize>()
        / 2;
    MinEdges {
        min_edges,
        witness,
        exact: false,
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct RatioBound {
    /// `ceil(N / alpha_bound)`.
    pub bound: u64,
    /// `(N / alpha_bound)^(1 / dimension)`.
    pub rate: f64,
}

/// Chromatic lower bound `chi >= N / alpha` and its per-dimension rate.
pub fn chromatic_lower_bound_ratio(
    vertex_count: u64,
    alpha_bound: u64,
    dimension: u32,
) -> Result<RatioBound> {
    if alpha_bound == 0 || dimension == 0 {
        return Err(Error::Parameter(
            "alpha bound and dimension must be positive".into(),
        ));
    }
    Ok(RatioBound {
        bound: vertex_count.div_ceil(alpha_bound),
        rate: libm::pow(
            vertex_count as f64 / alpha_bound as f64,
            1.0 / dimension as f64,
        ),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct GirthReduction {
    /// Shortest cycle length of each forbidden graph.
    pub lengths: Vec<u64>,
    /// Any graph of girth greater than this avoids every forbidden graph.
    pub required_girth: u64,
}

/// Reduces a family of forbidden (non-forest) subgraphs to a girth
/// requirement: each member contains a cycle of its own girth `l_i`, so
/// girth above `max l_i` excludes all of them.
pub fn family_girth_reduction(family: &[Graph]) -> Result<GirthReduction> {
    if family.is_empty() {
        return Err(Error::Parameter("empty forbidden family".into()));
    }
    let mut lengths = Vec::with_capacity(family.len());
    for (i, h) in family.iter().enumerate() {
        match girth(h).value {
            SolveValue::Finite(l) => lengths.push(l),
            SolveValue::Infinite => return Err(Error::Forest(i)),
        }
    }
    let required_girth = *lengths.iter().max().unwrap();
    Ok(GirthReduction {
        lengths,
        required_girth,
    })
}
