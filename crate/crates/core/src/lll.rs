//! Local Lemma checks and the parameter pipeline of the construction.
//!
//! Two forms of the lemma are checked on explicit event systems:
//!
//! * general: with multipliers `0 < x_i < 1`, if every
//!   `P(A_i) <= x_i * prod_{j in J(i)} (1 - x_j)` then no event occurs with
//!   probability at least `prod (1 - x_i)`;
//! * logarithmic: with `0 < d_i P(A_i) < 0.69`, if every
//!   `ln d_i >= sum_{j in J(i)} 2 d_j P(A_j)` then no event occurs with
//!   probability at least `prod (1 - d_i P(A_i))`.
//!
//! The logarithmic form reduces to the general one through `x_i = d_i P(A_i)`
//! ([`bollobas_implies_general`]). All comparisons are made on margins
//! (`lhs - rhs`) against an absolute tolerance, and margins are reported.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::base::{big_ln, binomial};
use crate::error::{Error, Result};
use crate::model::{split_neighborhoods, DependencyGraph, EventKind, EventSpec};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
/// Upper limit on `d_i P(A_i)` in the logarithmic form.
pub const BOLLOBAS_LIMIT: f64 = 0.69;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum AssignmentStyle {
    General,
    Bollobas,
}

/// Per-event multipliers for one of the two lemma forms.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct LllAssignment {
    pub style: AssignmentStyle,
    pub multipliers: Vec<f64>,
}

impl LllAssignment {
    pub fn general(multipliers: Vec<f64>) -> Self {
        LllAssignment {
            style: AssignmentStyle::General,
            multipliers,
        }
    }

    pub fn bollobas(multipliers: Vec<f64>) -> Self {
        LllAssignment {
            style: AssignmentStyle::Bollobas,
            multipliers,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckReport {
    pub holds: bool,
    /// `lhs - rhs` per event, in event order.
    pub margins: Vec<f64>,
    /// Events whose margin is below `-tolerance`.
    pub failing: Vec<usize>,
    /// Lower bound on the probability that no event occurs, when `holds`.
    pub bound: Option<f64>,
    /// Natural log of the product bound (finite even when the product
    /// underflows).
    pub log_bound: f64,
}

fn check_lengths(probabilities: &[f64], deps: &DependencyGraph, a: &LllAssignment) -> Result<()> {
    if deps.len() != probabilities.len() {
        return Err(Error::Parameter(alloc::format!(
            "dependency graph has {} events, system has {}",
            deps.len(),
            probabilities.len()
        )));
    }
    if a.multipliers.len() != probabilities.len() {
        return Err(Error::AssignmentLength {
            got: a.multipliers.len(),
            expected: probabilities.len(),
        });
    }
    if let Some(i) = probabilities
        .iter()
        .position(|&p| !(0.0..=1.0).contains(&p))
    {
        return Err(Error::Probability(probabilities[i]));
    }
    Ok(())
}

fn report(margins: Vec<f64>, log_bound: f64, tol: f64) -> CheckReport {
    let failing: Vec<usize> = margins
        .iter()
        .enumerate()
        .filter(|(_, &m)| !(m >= -tol))
        .map(|(i, _)| i)
        .collect();
    let holds = failing.is_empty();
    CheckReport {
        holds,
        bound: holds.then(|| libm::exp(log_bound)),
        margins,
        failing,
        log_bound,
    }
}

/// General form: margin `x_i prod_{J(i)} (1 - x_j) - P(A_i)`.
pub fn check_general_lll(
    probabilities: &[f64],
    deps: &DependencyGraph,
    a: &LllAssignment,
    tol: f64,
) -> Result<CheckReport> {
    check_lengths(probabilities, deps, a)?;
    if a.style != AssignmentStyle::General {
        return Err(Error::Parameter(
            "general check needs a general assignment".into(),
        ));
    }
    for (i, &x) in a.multipliers.iter().enumerate() {
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::Assignment {
                index: i,
                reason: "multiplier must lie in (0, 1)",
            });
        }
    }
    let log_keep: Vec<f64> = a.multipliers.iter().map(|&x| libm::log1p(-x)).collect();
    let margins = (0..probabilities.len())
        .map(|i| {
            let log_rhs: f64 = deps
                .neighbors(i)
                .iter()
                .map(|&j| log_keep[j as usize])
                .sum();
            a.multipliers[i] * libm::exp(log_rhs) - probabilities[i]
        })
        .collect();
    Ok(report(margins, log_keep.iter().sum(), tol))
}

/// Logarithmic form: margin `ln d_i - sum_{J(i)} 2 d_j P(A_j)`.
///
/// Fails with [`Error::BollobasHypothesis`] listing every event where
/// `0 < d_i P(A_i) < 0.69` does not hold.
pub fn check_bollobas_lll(
    probabilities: &[f64],
    deps: &DependencyGraph,
    a: &LllAssignment,
    tol: f64,
) -> Result<CheckReport> {
    check_lengths(probabilities, deps, a)?;
    if a.style != AssignmentStyle::Bollobas {
        return Err(Error::Parameter(
            "logarithmic check needs a Bollobas assignment".into(),
        ));
    }
    let weights: Vec<f64> = a
        .multipliers
        .iter()
        .zip(probabilities)
        .map(|(&d, &p)| d * p)
        .collect();
    let bad: Vec<usize> = weights
        .iter()
        .enumerate()
        .filter(|(_, &t)| !(t > 0.0 && t < BOLLOBAS_LIMIT))
        .map(|(i, _)| i)
        .collect();
    if !bad.is_empty() {
        return Err(Error::BollobasHypothesis(bad));
    }
    let margins = (0..probabilities.len())
        .map(|i| {
            let rhs: f64 = deps
                .neighbors(i)
                .iter()
                .map(|&j| 2.0 * weights[j as usize])
                .sum();
            libm::log(a.multipliers[i]) - rhs
        })
        .collect();
    let log_bound = weights.iter().map(|&t| libm::log1p(-t)).sum();
    Ok(report(margins, log_bound, tol))
}

/// The reduction `x_i = d_i P(A_i)`: when the logarithmic condition holds,
/// the resulting general assignment must pass the general check.
pub fn bollobas_implies_general(
    probabilities: &[f64],
    deps: &DependencyGraph,
    a: &LllAssignment,
) -> Result<bool> {
    let log_form = check_bollobas_lll(probabilities, deps, a, DEFAULT_TOLERANCE)?;
    if !log_form.holds {
        return Err(Error::Parameter(
            "logarithmic condition does not hold".into(),
        ));
    }
    let general = LllAssignment::general(
        a.multipliers
            .iter()
            .zip(probabilities)
            .map(|(&d, &p)| d * p)
            .collect(),
    );
    Ok(check_general_lll(probabilities, deps, &general, DEFAULT_TOLERANCE)?.holds)
}

/// Upper bounds on neighborhood sizes used in the asymptotic argument.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct DependencyBounds {
    /// `(s, a * 2^((s-2) 4n))`: cycle events of length `s` meeting a subset
    /// event with `a` inner edges.
    pub x_on_y: Vec<(u32, f64)>,
    /// `(s1, s2, s1 * 2^(4n (s2-2)))`: cycle events of length `s2` meeting a
    /// fixed cycle of length `s1`.
    pub y_on_y: Vec<(u32, u32, f64)>,
    /// `C(N, l)`: bound on subset events any event can depend on.
    #[cfg_attr(
        feature = "serde",
        serde(serialize_with = "crate::base::serialize_decimal")
    )]
    pub on_x: BigUint,
}

pub fn dependency_count_bounds(n: u32, k: u32, l: u64, a: u64) -> Result<DependencyBounds> {
    if n == 0 || k < 3 || l == 0 {
        return Err(Error::Parameter("need n >= 1, k >= 3, l >= 1".into()));
    }
    let dim = 4.0 * n as f64;
    let x_on_y = (3..=k)
        .map(|s| (s, a as f64 * libm::exp2((s - 2) as f64 * dim)))
        .collect();
    let y_on_y = (3..=k)
        .flat_map(|s1| {
            (3..=k).map(move |s2| (s1, s2, s1 as f64 * libm::exp2(dim * (s2 - 2) as f64)))
        })
        .collect();
    let vertices = binomial(4 * n as u64, 2 * n as u64);
    let vertices = vertices
        .to_u64()
        .ok_or_else(|| Error::Parameter("vertex count exceeds 64 bits".into()))?;
    let on_x = binomial(vertices, l);
    Ok(DependencyBounds {
        x_on_y,
        y_on_y,
        on_x,
    })
}

/// The parameter tuple of the construction.
#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PaperParameters {
    pub k: u32,
    pub n: u32,
    pub epsilon: f64,
    pub delta: f64,
    pub f: f64,
    pub gamma: f64,
    /// `ceil((2 - delta)^(4n))`.
    pub l: u64,
}

impl PaperParameters {
    /// Validity: `f < k - 1` and `(2-delta)/(4-epsilon) < gamma < 2^(-(k-2)/(k-1-f))`.
    pub fn is_valid(&self) -> bool {
        let Ok(w) = feasible_gamma_interval(self.k, self.epsilon, self.delta, self.f) else {
            return false;
        };
        self.gamma > 0.0 && self.gamma < 1.0 && w.lower < self.gamma && self.gamma < w.upper
    }

    /// Edge probability `gamma^(4n)`.
    pub fn p(&self) -> f64 {
        libm::pow(self.gamma, 4.0 * self.n as f64)
    }
}

/// Subset size `l = ceil((2 - delta)^(4n))`, at least 1.
pub fn subset_size(n: u32, delta: f64) -> u64 {
    let base = 2.0 - delta;
    if base <= 0.0 {
        return 1;
    }
    (libm::ceil(libm::pow(base, 4.0 * n as f64)) as u64).max(1)
}

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct GammaInterval {
    /// `(2 - delta) / (4 - epsilon)`.
    pub lower: f64,
    /// `2^(-(k-2)/(k-1-f))`.
    pub upper: f64,
    pub nonempty: bool,
}

pub fn feasible_gamma_interval(k: u32, epsilon: f64, delta: f64, f: f64) -> Result<GammaInterval> {
    if k < 3 {
        return Err(Error::Parameter(alloc::format!(
            "k = {k} must be at least 3"
        )));
    }
    if !(epsilon > 0.0 && epsilon < 4.0) {
        return Err(Error::Parameter(alloc::format!(
            "epsilon {epsilon} outside (0, 4)"
        )));
    }
    if !(delta >= 0.0) {
        return Err(Error::Parameter(alloc::format!(
            "delta {delta} must be nonnegative"
        )));
    }
    if !(f >= 0.0 && f < (k - 1) as f64) {
        return Err(Error::Parameter(alloc::format!("f {f} outside [0, k-1)")));
    }
    let lower = (2.0 - delta) / (4.0 - epsilon);
    let upper = gamma_ceiling(k, f);
    Ok(GammaInterval {
        lower,
        upper,
        nonempty: lower.max(0.0) < upper,
    })
}

/// `2^(-(k-2)/(k-1-f))`.
pub fn gamma_ceiling(k: u32, f: f64) -> f64 {
    libm::exp2(-((k - 2) as f64) / ((k - 1) as f64 - f))
}

/// `s - 2 + (s - 1 - f) log2(gamma)`; negative values certify the exponent
/// condition for cycles of length `s`.
pub fn verify_exponent_condition(s: u32, f: f64, gamma: f64) -> f64 {
    (s as f64 - 2.0) + (s as f64 - 1.0 - f) * libm::log2(gamma)
}

/// Largest epsilon with `2 / (4 - epsilon) < 2^(-(k-2)/(k-1))` (exclusive).
pub fn epsilon_limit(k: u32) -> f64 {
    4.0 - libm::exp2(1.0 + (k - 2) as f64 / (k - 1) as f64)
}

/// Parameter recipe: epsilon at the midpoint of its valid range, `f` at half
/// the largest value that keeps the gamma window open, gamma at the window's
/// midpoint (lower end clipped at 0).
pub fn choose_parameters(k: u32, delta: f64, n: u32) -> Result<PaperParameters> {
    if k < 3 {
        return Err(Error::Parameter(alloc::format!(
            "k = {k} must be at least 3"
        )));
    }
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Parameter(alloc::format!(
            "delta {delta} must be positive"
        )));
    }
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let eps_max = epsilon_limit(k);
    if !(eps_max > 0.0) {
        return Err(Error::Infeasible(alloc::format!("no epsilon for k = {k}")));
    }
    let epsilon = eps_max / 2.0;
    let ratio = (2.0 - delta) / (4.0 - epsilon);
    let f_max = if ratio <= 0.0 {
        (k - 1) as f64
    } else {
        (k - 1) as f64 + (k - 2) as f64 / libm::log2(ratio)
    };
    if !(f_max > 0.0) {
        return Err(Error::Infeasible(alloc::format!(
            "gamma window closed for k = {k}, delta = {delta}"
        )));
    }
    let f = f_max / 2.0;
    let w = feasible_gamma_interval(k, epsilon, delta, f)?;
    if !w.nonempty {
        return Err(Error::Infeasible(alloc::format!(
            "empty gamma window ({}, {})",
            w.lower,
            w.upper
        )));
    }
    let gamma = (w.lower.max(0.0) + w.upper) / 2.0;
    let params = PaperParameters {
        k,
        n,
        epsilon,
        delta,
        f,
        gamma,
        l: subset_size(n, delta),
    };
    debug_assert!(params.is_valid());
    Ok(params)
}

/// Multipliers `d = e` for cycle events and `d = exp(p^(1+f) a)` for subset
/// events with `a` inner edges, with the events violating
/// `0 < d P < 0.69` listed.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PaperMultipliers {
    pub assignment: LllAssignment,
    pub hypothesis_violations: Vec<usize>,
}

pub fn paper_multipliers(events: &[EventSpec], p: f64, f: f64) -> PaperMultipliers {
    let scale = libm::pow(p, 1.0 + f);
    let multipliers: Vec<f64> = events
        .iter()
        .map(|e| match e.kind {
            EventKind::Cycle => core::f64::consts::E,
            EventKind::IndependentSet => libm::exp(scale * e.variable_set.len() as f64),
        })
        .collect();
    let hypothesis_violations = events
        .iter()
        .zip(&multipliers)
        .enumerate()
        .filter(|(_, (e, &d))| {
            let t = d * e.probability;
            !(t > 0.0 && t < BOLLOBAS_LIMIT)
        })
        .map(|(i, _)| i)
        .collect();
    PaperMultipliers {
        assignment: LllAssignment::bollobas(multipliers),
        hypothesis_violations,
    }
}

/// Smallest `n <= max_n` at which every cycle event satisfies
/// `e * gamma^(4ns) < 0.69` (the triangle case `s = 3` is the binding one).
pub fn first_n_cycle_hypothesis(gamma: f64, max_n: u32) -> Option<u32> {
    (1..=max_n).find(|&n| core::f64::consts::E * libm::pow(gamma, 12.0 * n as f64) < BOLLOBAS_LIMIT)
}

/// Per-event evaluation of the system of logarithmic conditions with the
/// construction's multipliers, on an explicit event system.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Sys1Report {
    /// `ln d_i - 2 sum_{J^x} d_j e^(-p a_j) - 2 sum_s sum_{J^y_s} d_j p^s`.
    pub margins: Vec<f64>,
    /// All margins nonnegative (within tolerance), no unavoidable events and
    /// the hypothesis `0 < d P < 0.69` met everywhere.
    pub holds: bool,
    /// Subset events with no inner edge: they occur with certainty.
    pub unavoidable: Vec<usize>,
    pub hypothesis_violations: Vec<usize>,
    /// Product lower bound `prod (1 - d_i P(A_i))` when `holds`.
    pub bound: Option<f64>,
    /// `(s1, s2, max |J^y_{s2}(Y^{s1})|, g)` with
    /// `g = log2(count) / (4n (s2 - 2)) - 1`, diagnostics only.
    pub exponent_corrections: Vec<(u32, u32, usize, f64)>,
}

pub fn verify_sys1_finite(
    events: &[EventSpec],
    deps: &DependencyGraph,
    n: u32,
    p: f64,
    f: f64,
    tol: f64,
) -> Result<Sys1Report> {
    if deps.len() != events.len() {
        return Err(Error::Parameter(
            "dependency graph does not match events".into(),
        ));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Probability(p));
    }
    let mult = paper_multipliers(events, p, f);
    let d = &mult.assignment.multipliers;
    // the construction bounds P(X_j) = (1-p)^a by e^(-p a) and uses p^s for cycles
    let weight: Vec<f64> = events
        .iter()
        .zip(d)
        .map(|(e, &dj)| match e.kind {
            EventKind::IndependentSet => dj * libm::exp(-p * e.variable_set.len() as f64),
            EventKind::Cycle => dj * libm::pow(p, e.meta as f64),
        })
        .collect();
    let split = split_neighborhoods(events, deps);
    let margins: Vec<f64> = split
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let x: f64 = s.x.iter().map(|&j| weight[j as usize]).sum();
            let y: f64 = s.y.values().flatten().map(|&j| weight[j as usize]).sum();
            libm::log(d[i]) - 2.0 * x - 2.0 * y
        })
        .collect();
    let unavoidable: Vec<usize> = events
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_unavoidable())
        .map(|(i, _)| i)
        .collect();

    let mut corrections: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    for (e, s) in events.iter().zip(&split) {
        if e.kind == EventKind::Cycle {
            for (&s2, list) in &s.y {
                let slot = corrections.entry((e.meta, s2)).or_default();
                *slot = (*slot).max(list.len());
            }
        }
    }
    let dim = 4.0 * n as f64;
    let exponent_corrections = corrections
        .into_iter()
        .map(|((s1, s2), c)| {
            (
                s1,
                s2,
                c,
                libm::log2(c as f64) / (dim * (s2 - 2) as f64) - 1.0,
            )
        })
        .collect();

    let margins_ok = margins.iter().all(|&m| m >= -tol);
    let holds = margins_ok && unavoidable.is_empty() && mult.hypothesis_violations.is_empty();
    let bound = if holds {
        let probs: Vec<f64> = events.iter().map(|e| e.probability).collect();
        let exact = check_bollobas_lll(&probs, deps, &mult.assignment, tol)?;
        exact.bound
    } else {
        None
    };
    Ok(Sys1Report {
        margins,
        holds,
        unavoidable,
        hypothesis_violations: mult.hypothesis_violations,
        bound,
        exponent_corrections,
    })
}

/// Natural log of `C(N, l)`, as used in the `C(N, l) <= (eN/l)^l` estimate.
pub fn log_subset_count(vertex_count: u64, l: u64) -> f64 {
    big_ln(&binomial(vertex_count, l))
}
