//! Simple undirected graphs on `0..N`, the common view every solver consumes.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Graph on `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); vertex_count],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for x in [u, v] {
                if x as usize >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: x,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adj,
            edge_count: edge_count / 2,
        })
    }

    /// Trusted constructor: lists must be sorted, symmetric and loop-free.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Self {
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, edge_count }
    }

    pub fn cycle(m: usize) -> Self {
        let m32 = m as u32;
        Self::from_edges(m, (0..m32).map(|i| (i, (i + 1) % m32)))
            .expect("cycle needs at least 3 vertices")
    }

    pub fn path(m: usize) -> Self {
        let m32 = m as u32;
        Self::from_edges(m, (1..m32).map(|i| (i - 1, i))).unwrap()
    }

    pub fn complete(m: usize) -> Self {
        let m32 = m as u32;
        Self::from_edges(m, (0..m32).flat_map(|i| (i + 1..m32).map(move |j| (i, j)))).unwrap()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj
            .get(u as usize)
            .is_some_and(|list| list.binary_search(&v).is_ok())
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn is_forest(&self) -> bool {
        // A graph is a forest iff |E| = |V| - #components.
        self.edge_count + self.component_count() == self.vertex_count()
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = Vec::new();
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s as u32);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    pub fn adjacency_bitsets(&self) -> Vec<Bitset> {
        let n = self.vertex_count();
        self.adj
            .iter()
            .map(|list| Bitset::from_indices(n, list.iter().map(|&v| v as usize)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count() as u32;
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// Graph with the given edges removed (edges not present are ignored).
    pub fn without_edges(&self, removed: &[(u32, u32)]) -> Graph {
        let mut adj = self.adj.clone();
        for &(u, v) in removed {
            if let Ok(i) = adj[u as usize].binary_search(&v) {
                adj[u as usize].remove(i);
            }
            if let Ok(i) = adj[v as usize].binary_search(&u) {
                adj[v as usize].remove(i);
            }
        }
        Graph::from_sorted_adjacency(adj)
    }

    /// Removes edge `{u, v}`; returns whether it was present.
    pub fn remove_edge(&mut self, u: u32, v: u32) -> bool {
        let Ok(i) = self.adj[u as usize].binary_search(&v) else {
            return false;
        };
        self.adj[u as usize].remove(i);
        if let Ok(j) = self.adj[v as usize].binary_search(&u) {
            self.adj[v as usize].remove(j);
        }
        self.edge_count -= 1;
        true
    }

    pub(crate) fn check_vertex(&self, v: u32) -> Result<()> {
        if (v as usize) < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                count: self.vertex_count(),
            })
        }
    }
}
