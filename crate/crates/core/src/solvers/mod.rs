//! Exact graph computations: girth, short cycles, independence number,
//! chromatic number and induced edge counts.
//!
//! The solvers double as oracles for the random model and as verifiers for
//! search certificates, so every witness they return re-verifies against the
//! input graph. Running out of budget never fails; the result degrades to
//! bounds with `exact == false`.

use alloc::vec::Vec;

use crate::error::{Error, Result};

mod coloring;
mod cycles;
pub(crate) mod girth;
mod independence;
mod subsets;

pub use coloring::{chromatic_number, greedy_clique, is_proper_coloring};
pub use cycles::{count_cycles, enumerate_cycles, CycleCount, DEFAULT_MAX_CYCLE_LENGTH};
pub use girth::{girth, is_cycle, shortest_cycle_at_most};
pub use independence::{independence_number, is_independent};
pub use subsets::{
    chromatic_lower_bound_ratio, edges_within, family_girth_reduction, min_edges_over_subsets,
    GirthReduction, MinEdges, RatioBound, SubsetSearch,
};

/// Limits on search effort. Zero means unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolveBudget {
    /// Search-tree nodes.
    pub node_limit: u64,
    /// Wall-clock seconds; needs the `std` feature when nonzero.
    pub time_limit: f64,
}

impl SolveBudget {
    pub const UNLIMITED: SolveBudget = SolveBudget {
        node_limit: 0,
        time_limit: 0.0,
    };

    pub fn nodes(node_limit: u64) -> Self {
        SolveBudget {
            node_limit,
            time_limit: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.time_limit >= 0.0) {
            return Err(Error::Parameter(alloc::format!(
                "time limit {} must be nonnegative",
                self.time_limit
            )));
        }
        if self.time_limit > 0.0 && cfg!(not(feature = "std")) {
            return Err(Error::NoClock);
        }
        Ok(())
    }
}

/// Counts nodes against a [`SolveBudget`].
pub(crate) struct Meter {
    nodes: u64,
    limit: u64,
    exhausted: bool,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
}

impl Meter {
    pub(crate) fn new(budget: &SolveBudget) -> Result<Self> {
        budget.validate()?;
        Ok(Meter {
            nodes: 0,
            limit: budget.node_limit,
            exhausted: false,
            #[cfg(feature = "std")]
            deadline: (budget.time_limit > 0.0).then(|| {
                std::time::Instant::now() + std::time::Duration::from_secs_f64(budget.time_limit)
            }),
        })
    }

    /// Accounts one node; returns false once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.nodes += 1;
        if self.limit != 0 && self.nodes > self.limit {
            self.exhausted = true;
        }
        #[cfg(feature = "std")]
        if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if std::time::Instant::now() >= d {
                    self.exhausted = true;
                }
            }
        }
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes
    }
}

/// A solver value; girth of a forest is [`SolveValue::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SolveValue {
    Finite(u64),
    Infinite,
}

impl SolveValue {
    pub fn finite(self) -> Option<u64> {
        match self {
            SolveValue::Finite(v) => Some(v),
            SolveValue::Infinite => None,
        }
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for SolveValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
        match self {
            SolveValue::Finite(v) => s.serialize_u64(*v),
            SolveValue::Infinite => s.serialize_str("infinite"),
        }
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for SolveValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
        struct V;
        impl serde::de::Visitor<'_> for V {
            type Value = SolveValue;
            fn expecting(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
                f.write_str("a nonnegative integer or \"infinite\"")
            }
            fn visit_u64<E: serde::de::Error>(self, v: u64) -> core::result::Result<SolveValue, E> {
                Ok(SolveValue::Finite(v))
            }
            fn visit_i64<E: serde::de::Error>(self, v: i64) -> core::result::Result<SolveValue, E> {
                u64::try_from(v)
                    .map(SolveValue::Finite)
                    .map_err(|_| E::custom("negative value"))
            }
            fn visit_str<E: serde::de::Error>(
                self,
                v: &str,
            ) -> core::result::Result<SolveValue, E> {
                if v == "infinite" {
                    Ok(SolveValue::Infinite)
                } else {
                    Err(E::invalid_value(serde::de::Unexpected::Str(v), &self))
                }
            }
        }
        d.deserialize_any(V)
    }
}

impl core::fmt::Display for SolveValue {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolveValue::Finite(v) => write!(f, "{v}"),
            SolveValue::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Witness {
    /// An independent set, sorted.
    IndependentSet(Vec<u32>),
    /// Color of each vertex, colors numbered from 0.
    Coloring(Vec<u32>),
    /// A cycle as a closed vertex sequence (first vertex not repeated).
    Cycle(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SolveResult {
    /// Exact value, or the best witnessed value when `exact` is false
    /// (best independent set found, best coloring found).
    pub value: SolveValue,
    pub exact: bool,
    /// Proven lower bound; `u64::MAX` (serialized as `"infinite"`) for the
    /// girth of a forest.
    #[cfg_attr(feature = "serde", serde(with = "lower_bound"))]
    pub lower: u64,
    /// Proven upper bound; `None` when unbounded (girth of a forest).
    pub upper: Option<u64>,
    pub witness: Option<Witness>,
    /// Search-tree nodes spent.
    pub nodes: u64,
}

#[cfg(feature = "serde")]
mod lower_bound {
    use super::SolveValue;

    pub fn serialize<S: serde::Serializer>(v: &u64, s: S) -> core::result::Result<S::Ok, S::Error> {
        let v = if *v == u64::MAX {
            SolveValue::Infinite
        } else {
            SolveValue::Finite(*v)
        };
        serde::Serialize::serialize(&v, s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        d: D,
    ) -> core::result::Result<u64, D::Error> {
        let v: SolveValue = serde::Deserialize::deserialize(d)?;
        Ok(v.finite().unwrap_or(u64::MAX))
    }
}

impl SolveResult {
    pub(crate) fn exact(value: u64, witness: Option<Witness>, nodes: u64) -> Self {
        SolveResult {
            value: SolveValue::Finite(value),
            exact: true,
            lower: value,
            upper: Some(value),
            witness,
            nodes,
        }
    }
}
