//! Exact chromatic number: iterative k-colorability with DSATUR branching,
//! seeded by a DSATUR greedy upper bound and a greedy clique lower bound.

use alloc::vec;
use alloc::vec::Vec;

use super::{Meter, SolveBudget, SolveResult, SolveValue, Witness};
use crate::error::Result;
use crate::graph::Graph;

const UNCOLORED: u32 = u32::MAX;

pub fn is_proper_coloring(g: &Graph, colors: &[u32]) -> bool {
    colors.len() == g.vertex_count()
        && g.edges()
            .all(|(u, v)| colors[u as usize] != colors[v as usize])
}

/// A maximal clique grown greedily from every start vertex; the largest is
/// returned (sorted).
pub fn greedy_clique(g: &Graph) -> Vec<u32> {
    let n = g.vertex_count();
    let adj = g.adjacency_bitsets();
    let mut best: Vec<u32> = Vec::new();
    for start in 0..n {
        let mut clique = vec![start as u32];
        let mut cand = adj[start].clone();
        while !cand.is_empty() {
            let v = cand
                .iter()
                .max_by_key(|&v| (adj[v].intersection_count(&cand), core::cmp::Reverse(v)))
                .unwrap();
            clique.push(v as u32);
            cand.intersect_with(&adj[v]);
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Chromatic number with a proper coloring witness.
///
/// Inexact results carry the best coloring found (`value`, `upper`) and the
/// largest `k` for which `k - 1` colors were refuted (`lower`).
pub fn chromatic_number(g: &Graph, budget: &SolveBudget) -> Result<SolveResult> {
    let mut meter = Meter::new(budget)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(SolveResult::exact(
            0,
            Some(Witness::Coloring(Vec::new())),
            0,
        ));
    }
    let mut dsatur = Dsatur::new(g);
    let greedy = dsatur.greedy();
    let upper = greedy.iter().max().map_or(0, |&c| c + 1) as u64;
    let lower = greedy_clique(g).len() as u64;

    for k in lower..upper {
        match dsatur.colorable(k as u32, &mut meter) {
            Some(colors) => {
                return Ok(SolveResult::exact(
                    k,
                    Some(Witness::Coloring(colors)),
                    meter.nodes(),
                ))
            }
            None if meter.exhausted() => {
                return Ok(SolveResult {
                    value: SolveValue::Finite(upper),
                    exact: false,
                    lower: k,
                    upper: Some(upper),
                    witness: Some(Witness::Coloring(greedy)),
                    nodes: meter.nodes(),
                })
            }
            None => {}
        }
    }
    Ok(SolveResult::exact(
        upper,
        Some(Witness::Coloring(greedy)),
        meter.nodes(),
    ))
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<u32>,
    // forbidden[v * k + c]: number of neighbors of v colored c
    forbidden: Vec<u32>,
    saturation: Vec<u32>,
    k: usize,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph) -> Self {
        Dsatur {
            g,
            colors: Vec::new(),
            forbidden: Vec::new(),
            saturation: Vec::new(),
            k: 0,
        }
    }

    fn reset(&mut self, k: usize) {
        let n = self.g.vertex_count();
        self.k = k;
        self.colors = vec![UNCOLORED; n];
        self.forbidden = vec![0; n * k];
        self.saturation = vec![0; n];
    }

    fn assign(&mut self, v: u32, c: u32) {
        self.colors[v as usize] = c;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbidden[w as usize * self.k + c as usize];
            if *slot == 0 {
                self.saturation[w as usize] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, v: u32) {
        let c = self.colors[v as usize];
        self.colors[v as usize] = UNCOLORED;
        for &w in self.g.neighbors(v) {
            let slot = &mut self.forbidden[w as usize * self.k + c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w as usize] -= 1;
            }
        }
    }

    /// Uncolored vertex of maximum saturation, then degree, then smallest index.
    fn pick(&self) -> Option<u32> {
        let mut best: Option<(u32, usize, u32)> = None;
        for v in 0..self.g.vertex_count() as u32 {
            if self.colors[v as usize] != UNCOLORED {
                continue;
            }
            let key = (self.saturation[v as usize], self.g.degree(v));
            if best.is_none_or(|(s, d, _)| key > (s, d)) {
                best = Some((key.0, key.1, v));
            }
        }
        best.map(|b| b.2)
    }

    fn greedy(&mut self) -> Vec<u32> {
        let n = self.g.vertex_count();
        self.reset(n.max(1));
        while let Some(v) = self.pick() {
            let c = (0..self.k)
                .find(|&c| self.forbidden[v as usize * self.k + c] == 0)
                .unwrap();
            self.assign(v, c as u32);
        }
        self.colors.clone()
    }

    fn colorable(&mut self, k: u32, meter: &mut Meter) -> Option<Vec<u32>> {
        if k == 0 {
            return None;
        }
        self.reset(k as usize);
        if self.extend(0, meter) {
            Some(self.colors.clone())
        } else {
            None
        }
    }

    fn extend(&mut self, used: u32, meter: &mut Meter) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        if !meter.tick() {
            return false;
        }
        // a fresh color is only ever the next unused one
        let limit = (used + 1).min(self.k as u32);
        for c in 0..limit {
            if self.forbidden[v as usize * self.k + c as usize] != 0 {
                continue;
            }
            self.assign(v, c);
            if self.extend(used.max(c + 1), meter) {
                return true;
            }
            self.unassign(v);
            if meter.exhausted() {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chi(g: &Graph) -> u64 {
        let r = chromatic_number(g, &SolveBudget::UNLIMITED).unwrap();
        assert!(r.exact);
        match &r.witness {
            Some(Witness::Coloring(c)) => {
                assert!(is_proper_coloring(g, c));
                assert!(c.iter().all(|&x| (x as u64) < r.lower.max(1)));
            }
            w => panic!("{w:?}"),
        }
        r.lower
    }

    #[test]
    fn classic_values() {
        assert_eq!(chi(&Graph::empty(1)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
        assert_eq!(chi(&Graph::cycle(5)), 3);
        assert_eq!(chi(&Graph::cycle(6)), 2);
        assert_eq!(chi(&Graph::complete(5)), 5);
        assert_eq!(chi(&Graph::path(4)), 2);
    }

    #[test]
    fn petersen_and_grotzsch() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
        let petersen = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(chi(&petersen), 3);
        // Mycielskian of C5: triangle-free with chromatic number 4
        let mut edges: Vec<(u32, u32)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        for i in 0..5u32 {
            edges.push((i + 5, (i + 1) % 5));
            edges.push((i + 5, (i + 4) % 5));
            edges.push((i + 5, 10));
        }
        let grotzsch = Graph::from_edges(11, edges).unwrap();
        assert_eq!(chi(&grotzsch), 4);
        assert_eq!(greedy_clique(&grotzsch).len(), 2);
    }

    #[test]
    fn budget_gives_bounds() {
        let g = crate::build_base_graph(2).unwrap();
        let r = chromatic_number(g.graph(), &SolveBudget::nodes(5)).unwrap();
        assert!(r.exact || r.lower < r.upper.unwrap());
        if let Some(Witness::Coloring(c)) = &r.witness {
            assert!(is_proper_coloring(g.graph(), c));
        }
    }
}
