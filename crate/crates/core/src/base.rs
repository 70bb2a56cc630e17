//! The base distance graphs `G_{4n}` and edge subsets of them.
//!
//! Vertices are the 0/1 vectors of length `4n` with exactly `2n` ones; two
//! vertices are adjacent when their scalar product is `n`, which for such
//! vectors is the same as squared Euclidean distance `2n`. Every `G_{4n}` is
//! therefore a `sqrt(2n)`-distance graph, and a homothety makes it a unit
//! distance graph.
//!
//! Coordinate `i` (0-based) of a vertex is bit `i` of its mask, and the
//! textual form lists coordinates left to right, so `"1100"` is mask `0b0011`.
//! Vertices are indexed in colexicographic order, which is increasing order of
//! the masks.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default refusal threshold on the dimension `4n`.
pub const DEFAULT_MAX_DIMENSION: u32 = 16;
/// Largest dimension whose vertex count fits 32-bit indices.
pub const HARD_MAX_DIMENSION: u32 = 32;

/// A 0/1 vector of even-weight-half form: length `4n`, exactly `2n` ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitVertex {
    bits: u64,
    len: u8,
}

impl BitVertex {
    /// Validates length (a positive multiple of 4, at most 64) and weight.
    pub fn new(bits: u64, len: u32) -> Result<Self> {
        if len == 0 || !len.is_multiple_of(4) || len > 64 {
            return Err(Error::InvalidVertex(alloc::format!(
                "length {len} is not a positive multiple of 4 up to 64"
            )));
        }
        if len < 64 && bits >> len != 0 {
            return Err(Error::InvalidVertex(alloc::format!(
                "bits set beyond length {len}"
            )));
        }
        if bits.count_ones() != len / 2 {
            return Err(Error::InvalidVertex(alloc::format!(
                "weight {} but length {len} requires {}",
                bits.count_ones(),
                len / 2
            )));
        }
        Ok(BitVertex {
            bits,
            len: len as u8,
        })
    }

    /// Parses the `'0'`/`'1'` textual form.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' if i < 64 => bits |= 1 << i,
                '0' => {}
                _ => {
                    return Err(Error::InvalidVertex(alloc::format!(
                        "bad character {c:?} at {i}"
                    )))
                }
            }
            len += 1;
        }
        Self::new(bits, len)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> u32 {
        self.len as u32
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn coord(&self, i: u32) -> u8 {
        (self.bits >> i & 1) as u8
    }

    pub fn coords(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.coord(i)).collect()
    }

    /// Squared Euclidean distance; for 0/1 vectors this is the Hamming distance.
    pub fn squared_distance(&self, other: &BitVertex) -> Result<u32> {
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok((self.bits ^ other.bits).count_ones())
    }
}

impl fmt::Display for BitVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.coord(i) == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Euclidean scalar product `|{i : x_i = y_i = 1}|`.
pub fn scalar_product(x: &BitVertex, y: &BitVertex) -> Result<u32> {
    if x.len != y.len {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    Ok((x.bits & y.bits).count_ones())
}

/// The graph `G_{4n}` with its canonical vertex and edge orders.
///
/// Edges are the pairs `(u, v)` with `u < v`, ordered lexicographically; an
/// edge's position in that order is its edge index.
#[derive(Clone, Debug)]
pub struct BaseGraph {
    n: u32,
    vertices: Vec<BitVertex>,
    graph: Graph,
    // edge index of the first edge (u, _) with u as smaller endpoint
    edge_start: Vec<usize>,
    // number of neighbors of u that are smaller than u
    lower_degree: Vec<u32>,
}

/// Builds `G_{4n}` under the default size guard.
pub fn build_base_graph(n: u32) -> Result<BaseGraph> {
    BaseGraph::build(n, DEFAULT_MAX_DIMENSION)
}

impl BaseGraph {
    /// Builds `G_{4n}`, refusing dimensions above `max_dimension`.
    pub fn build(n: u32, max_dimension: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let dim = n.checked_mul(4).ok_or(Error::TooLarge {
            dim: u32::MAX,
            limit: HARD_MAX_DIMENSION,
        })?;
        if dim > HARD_MAX_DIMENSION {
            return Err(Error::TooLarge {
                dim,
                limit: HARD_MAX_DIMENSION,
            });
        }
        if dim > max_dimension {
            return Err(Error::SizeGuard {
                dim,
                guard: max_dimension,
            });
        }

        let weight = 2 * n;
        let table = BinomialTable::new(dim as usize);
        let mut masks = Vec::with_capacity(table.get(dim, weight) as usize);
        let mut m: u64 = (1 << weight) - 1;
        while m < 1 << dim {
            masks.push(m);
            // Gosper's hack: next larger integer with the same popcount.
            let c = m & m.wrapping_neg();
            let r = m + c;
            m = (((r ^ m) >> 2) / c) | r;
        }
        let vertices: Vec<BitVertex> = masks
            .iter()
            .map(|&bits| BitVertex {
                bits,
                len: dim as u8,
            })
            .collect();

        let full = (1u64 << dim) - 1;
        let half = table.get(weight, n) as usize;
        let mut adj = Vec::with_capacity(vertices.len());
        let mut ones = Vec::with_capacity(weight as usize);
        let mut zeros = Vec::with_capacity(weight as usize);
        let mut ones_choices = Vec::with_capacity(half);
        let mut zeros_choices = Vec::with_capacity(half);
        for &x in &masks {
            positions(x, &mut ones);
            positions(!x & full, &mut zeros);
            scattered_subsets(&ones, n, &mut ones_choices);
            scattered_subsets(&zeros, n, &mut zeros_choices);
            let mut list = Vec::with_capacity(half * half);
            for &a in &ones_choices {
                for &b in &zeros_choices {
                    list.push(table.colex_rank(a | b) as u32);
                }
            }
            list.sort_unstable();
            adj.push(list);
        }

        let mut edge_start = Vec::with_capacity(vertices.len() + 1);
        let mut lower_degree = Vec::with_capacity(vertices.len());
        let mut acc = 0usize;
        for (u, list) in adj.iter().enumerate() {
            let below = list.partition_point(|&v| (v as usize) < u);
            edge_start.push(acc);
            lower_degree.push(below as u32);
            acc += list.len() - below;
        }
        edge_start.push(acc);

        Ok(BaseGraph {
            n,
            vertices,
            graph: Graph::from_sorted_adjacency(adj),
            edge_start,
            lower_degree,
        })
    }

    /// Quarter-dimension `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Ambient dimension `4n`.
    pub fn dimension(&self) -> u32 {
        4 * self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn vertices(&self) -> &[BitVertex] {
        &self.vertices
    }

    pub fn vertex(&self, i: u32) -> BitVertex {
        self.vertices[i as usize]
    }

    /// Index of a vertex in canonical order.
    pub fn index_of(&self, v: &BitVertex) -> Option<u32> {
        if v.len() != self.dimension() {
            return None;
        }
        self.vertices.binary_search(v).ok().map(|i| i as u32)
    }

    /// The full graph as a solver view.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Endpoints `(u, v)`, `u < v`, of edge `e`.
    pub fn edge(&self, e: usize) -> (u32, u32) {
        assert!(e < self.edge_count(), "edge index {e} out of range");
        let u = self.edge_start.partition_point(|&s| s <= e) - 1;
        let offset = e - self.edge_start[u] + self.lower_degree[u] as usize;
        (u as u32, self.graph.neighbors(u as u32)[offset])
    }

    /// Canonical index of edge `{u, v}`, if present.
    pub fn edge_index(&self, u: u32, v: u32) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let list = self.graph.neighbors(u);
        let pos = list.binary_search(&v).ok()?;
        Some(self.edge_start[u as usize] + pos - self.lower_degree[u as usize] as usize)
    }

    /// All edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.graph.edges()
    }

    /// Common degree `C(2n, n)^2`.
    pub fn degree(&self) -> usize {
        self.graph.degree(0)
    }

    /// Vertex set of a cycle given as a vertex sequence → its edge indices.
    pub fn cycle_edges(&self, cycle: &[u32]) -> Option<Vec<u32>> {
        let s = cycle.len();
        let mut edges = Vec::with_capacity(s);
        for i in 0..s {
            edges.push(self.edge_index(cycle[i], cycle[(i + 1) % s])? as u32);
        }
        edges.sort_unstable();
        Some(edges)
    }
}

fn positions(mut mask: u64, out: &mut Vec<u32>) {
    out.clear();
    while mask != 0 {
        out.push(mask.trailing_zeros());
        mask &= mask - 1;
    }
}

/// All masks obtained by picking `r` of the given bit positions.
fn scattered_subsets(positions: &[u32], r: u32, out: &mut Vec<u64>) {
    out.clear();
    let m = positions.len() as u32;
    if r > m {
        return;
    }
    let mut pattern: u64 = (1 << r) - 1;
    while pattern < 1 << m {
        let mut mask = 0u64;
        let mut p = pattern;
        while p != 0 {
            mask |= 1 << positions[p.trailing_zeros() as usize];
            p &= p - 1;
        }
        out.push(mask);
        if pattern == 0 {
            break;
        }
        let c = pattern & pattern.wrapping_neg();
        let r = pattern + c;
        pattern = (((r ^ pattern) >> 2) / c) | r;
    }
}

struct BinomialTable {
    rows: Vec<Vec<u64>>,
}

impl BinomialTable {
    fn new(max: usize) -> Self {
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(max + 1);
        for i in 0..=max {
            let mut row = vec![0u64; max + 1];
            row[0] = 1;
            for j in 1..=i {
                row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
            }
            rows.push(row);
        }
        BinomialTable { rows }
    }

    fn get(&self, n: u32, k: u32) -> u64 {
        if k > n {
            0
        } else {
            self.rows[n as usize][k as usize]
        }
    }

    /// Rank in the combinatorial number system, which is colex order.
    fn colex_rank(&self, mut mask: u64) -> u64 {
        let mut rank = 0;
        let mut i = 1;
        while mask != 0 {
            rank += self.get(mask.trailing_zeros(), i);
            mask &= mask - 1;
            i += 1;
        }
        rank
    }
}

/// Reports the first edge whose endpoints are not at squared distance
/// `expected`; otherwise returns `expected`. An edgeless graph passes.
pub fn common_squared_distance(
    vertices: &[BitVertex],
    graph: &Graph,
    expected: u32,
) -> Result<u32> {
    for (u, v) in graph.edges() {
        let got = vertices[u as usize].squared_distance(&vertices[v as usize])?;
        if got != expected {
            return Err(Error::DistanceViolation {
                u,
                v,
                got,
                expected,
            });
        }
    }
    Ok(expected)
}

/// Certifies that every edge of `g` has squared length `2n` and returns `2n`.
pub fn verify_unit_distance(g: &BaseGraph) -> Result<u32> {
    common_squared_distance(&g.vertices, &g.graph, 2 * g.n)
}

/// Places each vertex in dimension `4n + j` by appending `j` zero coordinates.
pub fn embed_codimension(g: &BaseGraph, j: u32) -> Vec<Vec<u8>> {
    g.vertices
        .iter()
        .map(|v| {
            let mut c = v.coords();
            c.resize(c.len() + j as usize, 0);
            c
        })
        .collect()
}

/// Exact squared distance of integer points.
pub fn squared_distance(a: &[u8], b: &[u8]) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len() as u32, b.len() as u32));
    }
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| {
            let d = x as i64 - y as i64;
            (d * d) as u64
        })
        .sum())
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Natural log of a big integer, accurate to double precision.
pub fn big_ln(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return libm::log(x.to_f64().unwrap_or(f64::INFINITY));
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    libm::log(top) + shift as f64 * core::f64::consts::LN_2
}

/// Serializes big integers as decimal strings.
#[cfg(feature = "serde")]
pub(crate) fn serialize_decimal<S: serde::Serializer>(
    x: &BigUint,
    s: S,
) -> core::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

/// Closed-form sizes of `G_{4n}`.
#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CountFormulas {
    pub n: u32,
    /// `N = C(4n, 2n)`.
    #[cfg_attr(feature = "serde", serde(serialize_with = "serialize_decimal"))]
    pub vertices: BigUint,
    /// `C(2n, n)^2`.
    #[cfg_attr(feature = "serde", serde(serialize_with = "serialize_decimal"))]
    pub degree: BigUint,
    /// Unordered edges `M = N * C(2n, n)^2 / 2`.
    #[cfg_attr(feature = "serde", serde(serialize_with = "serialize_decimal"))]
    pub edges: BigUint,
    /// Ordered adjacent pairs `N * C(2n, n)^2`.
    #[cfg_attr(feature = "serde", serde(serialize_with = "serialize_decimal"))]
    pub ordered_pairs: BigUint,
    /// `N^(1/4n)`, tends to 2.
    pub vertex_rate: f64,
    /// `(2M)^(1/4n)`, tends to 4.
    pub edge_rate: f64,
}

pub fn count_formulas(n: u32) -> Result<CountFormulas> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let n64 = n as u64;
    let vertices = binomial(4 * n64, 2 * n64);
    let half = binomial(2 * n64, n64);
    let degree = &half * &half;
    let ordered_pairs = &vertices * &degree;
    let edges = &ordered_pairs >> 1u32;
    let dim = 4.0 * n as f64;
    Ok(CountFormulas {
        n,
        vertex_rate: libm::exp(big_ln(&vertices) / dim),
        edge_rate: libm::exp(big_ln(&ordered_pairs) / dim),
        vertices,
        degree,
        edges,
        ordered_pairs,
    })
}

/// A subset of the base graph's edges.
#[derive(Clone, Debug)]
pub struct EdgeSubset<'g> {
    base: &'g BaseGraph,
    mask: Bitset,
}

impl PartialEq for EdgeSubset<'_> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.base, other.base) && self.mask == other.mask
    }
}

impl<'g> EdgeSubset<'g> {
    pub fn empty(base: &'g BaseGraph) -> Self {
        EdgeSubset {
            base,
            mask: Bitset::new(base.edge_count()),
        }
    }

    pub fn full(base: &'g BaseGraph) -> Self {
        EdgeSubset {
            base,
            mask: Bitset::full(base.edge_count()),
        }
    }

    pub fn from_mask(base: &'g BaseGraph, mask: Bitset) -> Result<Self> {
        if mask.len() != base.edge_count() {
            return Err(Error::MaskLength {
                got: mask.len(),
                expected: base.edge_count(),
            });
        }
        Ok(EdgeSubset { base, mask })
    }

    pub fn from_bools(base: &'g BaseGraph, mask: &[bool]) -> Result<Self> {
        if mask.len() != base.edge_count() {
            return Err(Error::MaskLength {
                got: mask.len(),
                expected: base.edge_count(),
            });
        }
        let bits = Bitset::from_indices(
            mask.len(),
            mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
        );
        Ok(EdgeSubset { base, mask: bits })
    }

    pub fn from_indices(
        base: &'g BaseGraph,
        edges: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let m = base.edge_count();
        let mut mask = Bitset::new(m);
        for e in edges {
            if e >= m {
                return Err(Error::MaskLength {
                    got: e + 1,
                    expected: m,
                });
            }
            mask.insert(e);
        }
        Ok(EdgeSubset { base, mask })
    }

    /// Decodes the hex form produced by [`EdgeSubset::to_hex`].
    pub fn from_hex(base: &'g BaseGraph, s: &str) -> Result<Self> {
        let m = base.edge_count();
        let bytes = hex::decode(s).map_err(|_| Error::MaskHex)?;
        if bytes.len() != m.div_ceil(8) {
            return Err(Error::MaskLength {
                got: bytes.len() * 8,
                expected: m,
            });
        }
        let mut mask = Bitset::new(m);
        for (i, byte) in bytes.iter().enumerate() {
            for b in 0..8 {
                if byte >> b & 1 == 1 {
                    let e = i * 8 + b;
                    if e >= m {
                        return Err(Error::MaskHex);
                    }
                    mask.insert(e);
                }
            }
        }
        Ok(EdgeSubset { base, mask })
    }

    /// Lowercase hex of the mask: byte `i` carries edges `8i..8i+8`, edge
    /// `8i + b` in bit `b` (least significant first).
    pub fn to_hex(&self) -> String {
        let m = self.base.edge_count();
        let mut bytes = vec![0u8; m.div_ceil(8)];
        for e in self.mask.iter() {
            bytes[e / 8] |= 1 << (e % 8);
        }
        hex::encode(bytes)
    }

    pub fn base(&self) -> &'g BaseGraph {
        self.base
    }

    pub fn mask(&self) -> &Bitset {
        &self.mask
    }

    pub fn contains(&self, e: usize) -> bool {
        self.mask.contains(e)
    }

    pub fn insert(&mut self, e: usize) {
        self.mask.insert(e)
    }

    pub fn remove(&mut self, e: usize) {
        self.mask.remove(e)
    }

    pub fn set(&mut self, e: usize, present: bool) {
        self.mask.set(e, present)
    }

    /// Number of edges in the subset.
    pub fn len(&self) -> usize {
        self.mask.count()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.mask.iter()
    }

    /// The realized subgraph on all base vertices.
    pub fn to_graph(&self) -> Graph {
        let n = self.base.vertex_count();
        let mut adj = vec![Vec::new(); n];
        for (e, (u, v)) in self.base.edges().enumerate() {
            if self.mask.contains(e) {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        // edges come in lexicographic order, so lists of larger endpoints
        // receive smaller neighbors first; both halves are already sorted
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph::from_sorted_adjacency(adj)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> BitVertex {
        BitVertex::parse(s).unwrap()
    }

    #[test]
    fn scalar_products() {
        assert_eq!(scalar_product(&v("1100"), &v("1100")), Ok(2));
        assert_eq!(scalar_product(&v("1100"), &v("0011")), Ok(0));
        assert_eq!(scalar_product(&v("11110000"), &v("11001100")), Ok(2));
        assert_eq!(
            scalar_product(&v("1100"), &v("11110000")),
            Err(Error::LengthMismatch(4, 8))
        );
    }

    #[test]
    fn vertex_validation() {
        assert!(BitVertex::parse("1110").is_err());
        assert!(BitVertex::parse("110").is_err());
        assert!(BitVertex::parse("11x0").is_err());
        assert_eq!(v("1100").to_string(), "1100");
        assert_eq!(v("1100").bits(), 0b0011);
    }

    #[test]
    fn g4_small_facts() {
        let g = build_base_graph(1).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.degree(), 4);
        let names: Vec<_> = g.vertices().iter().map(|x| x.to_string()).collect();
        assert_eq!(names, ["1100", "1010", "0110", "1001", "0101", "0011"]);
        let a = g.index_of(&v("1100")).unwrap();
        for other in ["1010", "1001", "0110", "0101"] {
            assert!(
                g.graph().has_edge(a, g.index_of(&v(other)).unwrap()),
                "{other}"
            );
        }
        assert!(!g.graph().has_edge(a, g.index_of(&v("0011")).unwrap()));
    }

    #[test]
    fn edge_index_round_trip() {
        let g = build_base_graph(2).unwrap();
        for (e, (u, w)) in g.edges().enumerate() {
            assert_eq!(g.edge(e), (u, w));
            assert_eq!(g.edge_index(u, w), Some(e));
            assert_eq!(g.edge_index(w, u), Some(e));
        }
        assert_eq!(g.edge_index(0, 0), None);
    }

    #[test]
    fn size_guards() {
        assert_eq!(build_base_graph(0).unwrap_err(), Error::ZeroDimension);
        assert_eq!(
            build_base_graph(5).unwrap_err(),
            Error::SizeGuard { dim: 20, guard: 16 }
        );
        assert!(matches!(
            BaseGraph::build(9, 64),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn distances_and_embedding() {
        let g1 = build_base_graph(1).unwrap();
        assert_eq!(verify_unit_distance(&g1), Ok(2));
        assert_eq!(verify_unit_distance(&build_base_graph(2).unwrap()), Ok(4));
        let single = [v("1100")];
        assert_eq!(common_squared_distance(&single, &Graph::empty(1), 2), Ok(2));

        let e0 = embed_codimension(&g1, 0);
        assert_eq!(e0[0], vec![1, 1, 0, 0]);
        let e3 = embed_codimension(&g1, 3);
        assert_eq!(e3[0].len(), 7);
        for (a, b) in g1.edges() {
            assert_eq!(squared_distance(&e3[a as usize], &e3[b as usize]), Ok(2));
        }
        let bad = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(matches!(
            common_squared_distance(&[v("1100"), v("0011")], &bad, 2),
            Err(Error::DistanceViolation { got: 4, .. })
        ));
    }

    #[test]
    fn counts() {
        let c = count_formulas(1).unwrap();
        assert_eq!(c.vertices, BigUint::from(6u32));
        assert_eq!(c.edges, BigUint::from(12u32));
        assert_eq!(c.ordered_pairs, BigUint::from(24u32));
        let c2 = count_formulas(2).unwrap();
        assert_eq!(
            (c2.vertices, c2.edges),
            (BigUint::from(70u32), BigUint::from(1260u32))
        );
        let c3 = count_formulas(3).unwrap();
        assert_eq!(
            (c3.vertices, c3.edges),
            (BigUint::from(924u32), BigUint::from(184800u32))
        );
        // 4n = 64 overflows u64 for C(4n, 2n) * C(2n, n)^2
        let c16 = count_formulas(16).unwrap();
        assert!(c16.ordered_pairs.bits() > 64);
        assert!(
            (c16.vertex_rate - libm::pow(binomial(64, 32).to_f64().unwrap(), 1.0 / 64.0)).abs()
                < 1e-12
        );
        assert_eq!(count_formulas(0).unwrap_err(), Error::ZeroDimension);
    }

    #[test]
    fn hex_round_trip_and_layout() {
        let g = build_base_graph(1).unwrap();
        let s = EdgeSubset::from_indices(&g, [0, 9, 11]).unwrap();
        assert_eq!(s.to_hex(), "010a");
        let back = EdgeSubset::from_hex(&g, "010a").unwrap();
        assert_eq!(back, s);
        assert_eq!(
            EdgeSubset::from_hex(&g, "01fa").unwrap_err(),
            Error::MaskHex
        );
        assert!(EdgeSubset::from_hex(&g, "01").is_err());
        assert!(EdgeSubset::from_hex(&g, "zz0a").is_err());
    }

    #[test]
    fn subset_graph_view() {
        let g = build_base_graph(1).unwrap();
        assert_eq!(EdgeSubset::full(&g).to_graph(), *g.graph());
        assert_eq!(EdgeSubset::empty(&g).to_graph().edge_count(), 0);
        assert!(EdgeSubset::from_bools(&g, &[true; 5]).is_err());
    }
}
