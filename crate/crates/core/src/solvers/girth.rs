use alloc::vec;
use alloc::vec::Vec;

use super::{SolveResult, SolveValue, Witness};
use crate::graph::Graph;

const UNSEEN: u32 = u32::MAX;

/// Breadth-first short-cycle detection with reusable buffers.
pub(crate) struct CycleFinder {
    dist: Vec<u32>,
    parent: Vec<u32>,
    queue: Vec<u32>,
}

impl CycleFinder {
    pub(crate) fn new(vertex_count: usize) -> Self {
        CycleFinder {
            dist: vec![UNSEEN; vertex_count],
            parent: vec![UNSEEN; vertex_count],
            queue: Vec::with_capacity(vertex_count),
        }
    }

    /// Shortest cycle of length at most `limit` detectable from `root`.
    ///
    /// If `root` lies on a cycle of length `L <= limit`, a cycle of length at
    /// most `L` is returned. The returned cycle need not pass through `root`.
    pub(crate) fn find_from(&mut self, g: &Graph, root: u32, limit: u32) -> Option<Vec<u32>> {
        for &v in &self.queue {
            self.dist[v as usize] = UNSEEN;
            self.parent[v as usize] = UNSEEN;
        }
        self.queue.clear();
        self.dist[root as usize] = 0;
        self.queue.push(root);

        let mut best: Option<(u32, u32, u32)> = None;
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u as usize];
            let bound = best.map_or(limit, |b| b.0 - 1);
            if 2 * du + 1 > bound {
                break;
            }
            for &w in g.neighbors(u) {
                let dw = self.dist[w as usize];
                if dw == UNSEEN {
                    self.dist[w as usize] = du + 1;
                    self.parent[w as usize] = u;
                    self.queue.push(w);
                } else if self.parent[u as usize] != w {
                    let len = du + dw + 1;
                    if len <= best.map_or(limit, |b| b.0 - 1) {
                        best = Some((len, u, w));
                    }
                }
            }
        }
        let (_, u, w) = best?;
        Some(self.close_cycle(u, w))
    }

    // Tree paths from u and w up to their lowest common ancestor, joined by
    // the non-tree edge {u, w}.
    fn close_cycle(&self, mut u: u32, mut w: u32) -> Vec<u32> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        while self.dist[u as usize] > self.dist[w as usize] {
            left.push(u);
            u = self.parent[u as usize];
        }
        while self.dist[w as usize] > self.dist[u as usize] {
            right.push(w);
            w = self.parent[w as usize];
        }
        while u != w {
            left.push(u);
            right.push(w);
            u = self.parent[u as usize];
            w = self.parent[w as usize];
        }
        left.push(u);
        left.extend(right.into_iter().rev());
        left
    }
}

/// Shortest cycle of length at most `limit`, or `None` if there is none.
pub fn shortest_cycle_at_most(g: &Graph, limit: u32) -> Option<Vec<u32>> {
    let mut finder = CycleFinder::new(g.vertex_count());
    let mut best: Option<Vec<u32>> = None;
    for root in 0..g.vertex_count() as u32 {
        let cap = best.as_ref().map_or(limit, |c| c.len() as u32 - 1);
        if cap < 3 {
            break;
        }
        if let Some(c) = finder.find_from(g, root, cap) {
            best = Some(c);
        }
    }
    best
}

/// Girth (length of the shortest cycle), with one shortest cycle as witness.
/// Forests have infinite girth and no witness.
pub fn girth(g: &Graph) -> SolveResult {
    match shortest_cycle_at_most(g, u32::MAX / 4) {
        Some(c) => SolveResult::exact(
            c.len() as u64,
            Some(Witness::Cycle(c)),
            g.vertex_count() as u64,
        ),
        None => SolveResult {
            value: SolveValue::Infinite,
            exact: true,
            lower: u64::MAX,
            upper: None,
            witness: None,
            nodes: g.vertex_count() as u64,
        },
    }
}

/// True when `cycle` lists at least 3 distinct vertices forming a closed
/// path in `g`.
pub fn is_cycle(g: &Graph, cycle: &[u32]) -> bool {
    let s = cycle.len();
    if s < 3 || cycle.iter().any(|&v| v as usize >= g.vertex_count()) {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == s && (0..s).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % s]))
}
