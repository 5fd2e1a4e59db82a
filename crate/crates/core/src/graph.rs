//! Vertex-weighted multigraphs, subcurves and multidegrees.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Index, Sub};

use crate::error::{Error, Result};

/// Largest vertex count a [`DualGraph`] may have; vertex sets are bitmasks.
pub const MAX_VERTICES: usize = 64;

/// Largest vertex count accepted by the definition-based subset sweeps.
pub const MAX_SUBSET_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub id: String,
    /// Geometric genus of the component.
    pub weight: u32,
}

/// An edge between two vertex indices; `a == b` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge { a, b }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

/// Dual graph of a nodal curve: one weighted vertex per component, one edge
/// per node. Parallel edges and loops are allowed and edges are addressed by
/// their position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
}

impl DualGraph {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Result<Self> {
        if vertices.len() > MAX_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex count",
                actual: vertices.len(),
                bound: MAX_VERTICES,
            });
        }
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.id.as_str()) {
                return Err(Error::DuplicateVertex(v.id.clone()));
            }
        }
        let n = vertices.len();
        for e in &edges {
            for end in [e.a, e.b] {
                if end >= n {
                    return Err(Error::VertexOutOfRange { index: end, len: n });
                }
            }
        }
        Ok(DualGraph { vertices, edges })
    }

    /// Builds a graph from `(id, weight)` pairs and edges named by id.
    pub fn from_ids(vertices: &[(&str, u32)], edges: &[(&str, &str)]) -> Result<Self> {
        let vs: Vec<Vertex> = vertices
            .iter()
            .map(|&(id, weight)| Vertex {
                id: id.to_string(),
                weight,
            })
            .collect();
        let lookup = |id: &str| {
            vs.iter()
                .position(|v| v.id == id)
                .ok_or_else(|| Error::UnknownVertex(id.to_string()))
        };
        let es = edges
            .iter()
            .map(|&(a, b)| Ok(Edge::new(lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        DualGraph::new(vs, es)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_non_loop_edges(&self) -> usize {
        self.edges.iter().filter(|e| !e.is_loop()).count()
    }

    pub fn id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.vertices[v].weight
    }

    pub fn vertex_index(&self, id: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v.id == id)
            .ok_or_else(|| Error::UnknownVertex(id.to_string()))
    }

    pub fn edge(&self, index: usize) -> Result<Edge> {
        self.edges.get(index).copied().ok_or(Error::EdgeOutOfRange {
            index,
            len: self.edges.len(),
        })
    }

    pub fn loops_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.is_loop() && e.a == v).count()
    }

    /// Number of half-edges at `v`; a loop counts twice.
    pub fn valence(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.a == v) + usize::from(e.b == v))
            .sum()
    }

    /// `1 - |V| + |E| + sum of weights`. Applied literally, so disconnected
    /// graphs may have negative genus.
    pub fn genus(&self) -> i64 {
        let weights: i64 = self.vertices.iter().map(|v| i64::from(v.weight)).sum();
        1 - self.vertices.len() as i64 + self.edges.len() as i64 + weights
    }

    /// Genus of the induced subgraph on `y`, connected or not.
    pub fn subcurve_genus(&self, y: &VertexSet) -> Result<i64> {
        self.check_subcurve(y)?;
        Ok(self.subcurve_genus_mask(y.bits()))
    }

    /// Per vertex `2 g_v - 2 + valence(v)`.
    pub fn canonical_multidegree(&self) -> Multidegree {
        Multidegree::new(
            (0..self.num_vertices())
                .map(|v| 2 * i64::from(self.weight(v)) - 2 + self.valence(v) as i64)
                .collect(),
        )
    }

    /// Edges with exactly one endpoint in `y`, in index order.
    pub fn cut_edges(&self, y: &VertexSet) -> Result<Vec<usize>> {
        self.check_subcurve(y)?;
        let mask = y.bits();
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| in_mask(mask, e.a) != in_mask(mask, e.b))
            .map(|(i, _)| i)
            .collect())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.num_vertices();
        if n == 0 {
            return false;
        }
        self.component_of(0) == full_mask(n)
    }

    /// Connected, genus at least 2 and the canonical multidegree positive on
    /// every vertex.
    pub fn is_stable_curve(&self) -> bool {
        self.is_connected()
            && self.genus() >= 2
            && self.canonical_multidegree().values().iter().all(|&k| k > 0)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(full_mask(self.num_vertices()))
    }

    /// Vertex set named by ids.
    pub fn vertex_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<VertexSet> {
        let mut y = VertexSet::empty();
        for id in ids {
            y.insert(self.vertex_index(id.as_ref())?);
        }
        Ok(y)
    }

    /// Renders `y` as `{id, id, ...}`.
    pub fn format_set(&self, y: &VertexSet) -> String {
        let ids: Vec<&str> = y.iter().map(|v| self.id(v)).collect();
        format!("{{{}}}", ids.join(", "))
    }

    pub(crate) fn check_subcurve(&self, y: &VertexSet) -> Result<()> {
        if y.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let n = self.num_vertices();
        if let Some(v) = y.iter().find(|&v| v >= n) {
            return Err(Error::VertexOutOfRange { index: v, len: n });
        }
        Ok(())
    }

    pub(crate) fn check_multidegree(&self, d: &Multidegree) -> Result<()> {
        if d.len() != self.num_vertices() {
            return Err(Error::LengthMismatch {
                expected: self.num_vertices(),
                got: d.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.num_vertices() {
            return Err(Error::VertexOutOfRange {
                index: v,
                len: self.num_vertices(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_subset_sweep(&self) -> Result<()> {
        if self.num_vertices() > MAX_SUBSET_VERTICES {
            return Err(Error::ResourceLimit {
                what: "vertex count for subset enumeration",
                actual: self.num_vertices(),
                bound: MAX_SUBSET_VERTICES,
            });
        }
        Ok(())
    }

    pub(crate) fn subcurve_genus_mask(&self, mask: u64) -> i64 {
        let mut size = 0i64;
        let mut weights = 0i64;
        for v in iter_bits(mask) {
            size += 1;
            weights += i64::from(self.weight(v));
        }
        let internal = self
            .edges
            .iter()
            .filter(|e| in_mask(mask, e.a) && in_mask(mask, e.b))
            .count() as i64;
        1 - size + internal + weights
    }

    pub(crate) fn cut_size_mask(&self, mask: u64) -> i64 {
        self.edges
            .iter()
            .filter(|e| in_mask(mask, e.a) != in_mask(mask, e.b))
            .count() as i64
    }

    /// Vertices reachable from `start` ignoring edge directions.
    pub(crate) fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for e in &self.edges {
                if e.is_loop() {
                    continue;
                }
                let w = if e.a == u {
                    e.b
                } else if e.b == u {
                    e.a
                } else {
                    continue;
                };
                if !in_mask(seen, w) {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Whether the induced subgraph on `mask` is connected.
    pub(crate) fn is_connected_mask(&self, mask: u64) -> bool {
        let Some(start) = iter_bits(mask).next() else {
            return false;
        };
        let mut seen = 1u64 << start;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for e in &self.edges {
                if e.is_loop() || !in_mask(mask, e.a) || !in_mask(mask, e.b) {
                    continue;
                }
                if e.a == u || e.b == u {
                    let w = e.other(u);
                    if !in_mask(seen, w) {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
        }
        seen == mask
    }
}

/// A set of vertices, read as a subcurve `Y` with its induced subgraph.
///
/// Ordered lexicographically by the ascending list of member indices, so
/// `{0} < {0, 1} < {0, 2} < {1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub fn empty() -> Self {
        VertexSet(0)
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut y = VertexSet::empty();
        for v in indices {
            y.insert(v);
        }
        y
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex index {v} exceeds {MAX_VERTICES}");
        self.0 |= 1 << v;
    }

    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && in_mask(self.0, v)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        iter_bits(self.0)
    }

    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet(full_mask(n) & !self.0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Integer degree per vertex, aligned with the graph's vertex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree(Vec<i64>);

impl Multidegree {
    pub fn new(values: Vec<i64>) -> Self {
        Multidegree(values)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    /// The multidegree with a single 1 at `v`.
    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = Multidegree::zero(n);
        d.0[v] = 1;
        d
    }

    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Every coordinate nonnegative.
    pub fn is_effective(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// `d + v`.
    pub fn plus_vertex(&self, v: usize) -> Self {
        let mut d = self.clone();
        d.0[v] += 1;
        d
    }

    /// `d - v`.
    pub fn minus_vertex(&self, v: usize) -> Self {
        let mut d = self.clone();
        d.0[v] -= 1;
        d
    }

    /// Total degree of the restriction to `y`.
    pub fn degree_on(&self, y: &VertexSet) -> i64 {
        self.degree_on_mask(y.bits())
    }

    pub(crate) fn degree_on_mask(&self, mask: u64) -> i64 {
        iter_bits(mask).map(|v| self.0[v]).sum()
    }
}

impl Index<usize> for Multidegree {
    type Output = i64;

    fn index(&self, v: usize) -> &i64 {
        &self.0[v]
    }
}

impl Add for &Multidegree {
    type Output = Multidegree;

    fn add(self, rhs: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Multidegree {
    type Output = Multidegree;

    fn sub(self, rhs: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), rhs.len(), "multidegree length mismatch");
        Multidegree(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn in_mask(mask: u64, v: usize) -> bool {
    mask >> v & 1 == 1
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn iter_bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// Number of nonempty subsets of an `n`-element set.
pub(crate) fn nonempty_subset_count(n: usize) -> usize {
    (1usize << n) - 1
}

/// The `rank`-th nonempty subset of `{0, .., n-1}` in lexicographic order of
/// ascending member lists.
///
/// Lexicographic order is the preorder of the tree whose children of a
/// prefix ending at `i` are `i+1, .., n-1`; the subtree rooted at element
/// `i` holds `2^(n-1-i)` subsets.
pub(crate) fn lex_subset(n: usize, mut rank: usize) -> u64 {
    debug_assert!(rank < nonempty_subset_count(n));
    let mut mask = 0u64;
    let mut i = 0;
    while i < n {
        let subtree = 1usize << (n - 1 - i);
        if rank < subtree {
            mask |= 1 << i;
            if rank == 0 {
                break;
            }
            rank -= 1;
        } else {
            rank -= subtree;
        }
        i += 1;
    }
    mask
}
