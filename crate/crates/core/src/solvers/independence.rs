//! Maximum independent set by branch and bound over bitset candidate sets.
//!
//! Each node applies the degree-0 and degree-1 reductions, solves
//! max-degree-2 remainders (disjoint paths and cycles) in closed form, and
//! prunes with a greedy clique cover of the candidates: a partition into `c`
//! cliques bounds the independent set by `c`. Branching takes the candidate
//! of largest degree, smallest index first.

use alloc::vec::Vec;

use super::{Meter, SolveBudget, SolveResult, SolveValue, Witness};
use crate::bitset::Bitset;
use crate::error::Result;
use crate::graph::Graph;

/// True when no two listed vertices are adjacent (and all are in range).
pub fn is_independent(g: &Graph, set: &[u32]) -> bool {
    set.iter().all(|&v| (v as usize) < g.vertex_count())
        && set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !g.has_edge(u, v)))
}

/// Independence number `alpha(g)` with a maximum independent set witness.
///
/// When the budget runs out the result carries the best set found and a
/// proven upper bound, with `exact == false`.
pub fn independence_number(g: &Graph, budget: &SolveBudget) -> Result<SolveResult> {
    let meter = Meter::new(budget)?;
    let n = g.vertex_count();
    let adj = g.adjacency_bitsets();
    let mut search = MisSearch {
        adj: &adj,
        best: greedy_independent_set(g),
        meter,
        open_bound: 0,
    };
    let mut cur = Vec::new();
    search.search(Bitset::full(n), &mut cur);

    let mut best = search.best;
    best.sort_unstable();
    let size = best.len() as u64;
    // an interrupted search is still exact when its open bound meets the incumbent
    let upper = if search.meter.exhausted() {
        size.max(search.open_bound)
    } else {
        size
    };
    Ok(SolveResult {
        value: SolveValue::Finite(size),
        exact: upper == size,
        lower: size,
        upper: Some(upper),
        witness: Some(Witness::IndependentSet(best)),
        nodes: search.meter.nodes(),
    })
}

/// Min-degree greedy, used to seed the incumbent.
fn greedy_independent_set(g: &Graph) -> Vec<u32> {
    let mut order: Vec<u32> = (0..g.vertex_count() as u32).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut blocked = Bitset::new(g.vertex_count());
    let mut set = Vec::new();
    for v in order {
        if !blocked.contains(v as usize) {
            set.push(v);
            blocked.insert(v as usize);
            for &w in g.neighbors(v) {
                blocked.insert(w as usize);
            }
        }
    }
    set
}

struct MisSearch<'a> {
    adj: &'a [Bitset],
    best: Vec<u32>,
    meter: Meter,
    open_bound: u64,
}

impl MisSearch<'_> {
    fn search(&mut self, mut p: Bitset, cur: &mut Vec<u32>) {
        let mark = cur.len();
        if !self.meter.tick() {
            let bound = (cur.len() + self.clique_cover(&p)) as u64;
            self.open_bound = self.open_bound.max(bound);
            return;
        }

        let (branch, max_degree) = loop {
            let mut changed = false;
            let mut branch = None;
            let mut max_degree = 0;
            let members: Vec<usize> = p.iter().collect();
            for v in members {
                if !p.contains(v) {
                    continue;
                }
                let d = self.adj[v].intersection_count(&p);
                match d {
                    0 => {
                        cur.push(v as u32);
                        p.remove(v);
                        changed = true;
                    }
                    1 => {
                        let mut nb = self.adj[v].clone();
                        nb.intersect_with(&p);
                        let u = nb.first().unwrap();
                        cur.push(v as u32);
                        p.remove(v);
                        p.remove(u);
                        changed = true;
                    }
                    _ => {
                        if d > max_degree {
                            max_degree = d;
                            branch = Some(v);
                        }
                    }
                }
            }
            if !changed {
                break (branch, max_degree);
            }
        };

        match branch {
            None => self.offer(cur),
            Some(_) if max_degree <= 2 => {
                self.paths_and_cycles(&p, cur);
                self.offer(cur);
            }
            Some(v) => {
                if cur.len() + self.clique_cover(&p) > self.best.len() {
                    let mut with = p.clone();
                    with.difference_with(&self.adj[v]);
                    with.remove(v);
                    cur.push(v as u32);
                    self.search(with, cur);
                    cur.pop();
                    p.remove(v);
                    self.search(p, cur);
                }
            }
        }
        cur.truncate(mark);
    }

    fn offer(&mut self, cur: &[u32]) {
        if cur.len() > self.best.len() {
            self.best = cur.to_vec();
        }
    }

    /// Number of cliques in a greedy partition of `p`.
    fn clique_cover(&self, p: &Bitset) -> usize {
        let mut rest = p.clone();
        let mut cliques = 0;
        while let Some(v) = rest.first() {
            cliques += 1;
            let mut q = rest.clone();
            let mut v = v;
            loop {
                rest.remove(v);
                q.remove(v);
                q.intersect_with(&self.adj[v]);
                match q.first() {
                    Some(w) => v = w,
                    None => break,
                }
            }
        }
        cliques
    }

    /// Maximum independent set of a max-degree-2 candidate set: each
    /// component is a path or a cycle; take every other vertex.
    fn paths_and_cycles(&self, p: &Bitset, cur: &mut Vec<u32>) {
        let mut left = p.clone();
        let neighbors_in = |v: usize, left: &Bitset| {
            let mut nb = self.adj[v].clone();
            nb.intersect_with(left);
            nb
        };
        // paths first, walked from an endpoint
        let starts: Vec<usize> = p
            .iter()
            .filter(|&v| self.adj[v].intersection_count(p) <= 1)
            .collect();
        for s in starts {
            if !left.contains(s) {
                continue;
            }
            let mut v = s;
            let mut take = true;
            loop {
                left.remove(v);
                if take {
                    cur.push(v as u32);
                }
                take = !take;
                match neighbors_in(v, &left).first() {
                    Some(w) => v = w,
                    None => break,
                }
            }
        }
        // remaining components are cycles: take floor(m / 2)
        while let Some(s) = left.first() {
            let mut walk = Vec::new();
            let mut v = s;
            loop {
                left.remove(v);
                walk.push(v);
                match neighbors_in(v, &left).first() {
                    Some(w) => v = w,
                    None => break,
                }
            }
            let keep = walk.len() / 2;
            cur.extend(walk.iter().step_by(2).take(keep).map(|&v| v as u32));
        }
    }
}
