use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_MAX_CYCLE_LENGTH: u32 = 8;

/// Number of `s`-cycles counted two ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CycleCount {
    /// Rooted, directed vertex sequences `(v_1, ..., v_s)`; each geometric
    /// cycle contributes `2s` of them.
    pub labeled: u128,
    /// Cycles as edge sets.
    pub distinct: u64,
}

fn check_length(s: u32, max: u32) -> Result<()> {
    if s < 3 || s > max {
        return Err(Error::CycleLength { s, min: 3, max });
    }
    Ok(())
}

/// Visits each `s`-cycle once, as the sequence starting at its smallest
/// vertex and continuing towards the smaller of that vertex's two cycle
/// neighbors. Stops early when `visit` returns false.
fn for_each_cycle(g: &Graph, s: u32, mut visit: impl FnMut(&[u32]) -> bool) {
    let n = g.vertex_count();
    let s = s as usize;
    let mut on_path = vec![false; n];
    let mut path: Vec<u32> = Vec::with_capacity(s);
    // explicit stack of (vertex, next neighbor position)
    let mut stack: Vec<(u32, usize)> = Vec::with_capacity(s);
    for root in 0..n as u32 {
        path.push(root);
        on_path[root as usize] = true;
        stack.push((root, 0));
        while let Some(&mut (u, ref mut pos)) = stack.last_mut() {
            let nbrs = g.neighbors(u);
            if *pos >= nbrs.len() {
                stack.pop();
                on_path[u as usize] = false;
                path.pop();
                continue;
            }
            let w = nbrs[*pos];
            *pos += 1;
            if w <= root || on_path[w as usize] {
                continue;
            }
            if path.len() + 1 == s {
                if w > path[1] && g.has_edge(w, root) {
                    path.push(w);
                    let go_on = visit(&path);
                    path.pop();
                    if !go_on {
                        for &v in &path {
                            on_path[v as usize] = false;
                        }
                        return;
                    }
                }
            } else {
                path.push(w);
                on_path[w as usize] = true;
                stack.push((w, 0));
            }
        }
    }
}

/// Counts `s`-cycles, `3 <= s <= max_len`.
pub fn count_cycles(g: &Graph, s: u32, max_len: u32) -> Result<CycleCount> {
    check_length(s, max_len)?;
    let mut distinct = 0u64;
    for_each_cycle(g, s, |_| {
        distinct += 1;
        true
    });
    Ok(CycleCount {
        labeled: 2 * s as u128 * distinct as u128,
        distinct,
    })
}

/// Lists every `s`-cycle once (see the orientation rule on the visitor),
/// failing when more than `guard` cycles exist.
pub fn enumerate_cycles(g: &Graph, s: u32, max_len: u32, guard: usize) -> Result<Vec<Vec<u32>>> {
    check_length(s, max_len)?;
    let mut out = Vec::new();
    let mut overflow = false;
    for_each_cycle(g, s, |c| {
        if out.len() == guard {
            overflow = true;
            return false;
        }
        out.push(c.to_vec());
        true
    });
    if overflow {
        return Err(Error::Guard {
            what: "cycle enumeration",
            count: guard as u128 + 1,
            guard: guard as u128,
        });
    }
    Ok(out)
}
