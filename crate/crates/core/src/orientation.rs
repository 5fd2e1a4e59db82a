//! Orientations of dual graphs and their multidegrees.
//!
//! An orientation directs every non-loop edge. A loop has no direction but
//! always contributes exactly one to the indegree of its vertex, and is a
//! directed cycle on its own. The multidegree of an orientation `O` is
//! `g_v - 1 + indeg_O(v)` and always has total degree `g - 1`.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec;
use crate::flow::FlowNetwork;
use crate::graph::{
    full_mask, in_mask, lex_subset, nonempty_subset_count, DualGraph, Multidegree, VertexSet,
};

/// Default cap on non-loop edges for the exhaustive orientation sweep.
pub const DEFAULT_ORIENTATION_BOUND: usize = 20;

/// Direction of one edge. `AtoB` sorts before `BtoA`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    AtoB,
    BtoA,
    Loop,
}

impl Direction {
    pub fn token(self) -> &'static str {
        match self {
            Direction::AtoB => "ab",
            Direction::BtoA => "ba",
            Direction::Loop => "loop",
        }
    }

    fn flipped(self) -> Self {
        match self {
            Direction::AtoB => Direction::BtoA,
            Direction::BtoA => Direction::AtoB,
            Direction::Loop => Direction::Loop,
        }
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ab" => Ok(Direction::AtoB),
            "ba" => Ok(Direction::BtoA),
            "loop" => Ok(Direction::Loop),
            other => Err(Error::Parse {
                location: "orientation".into(),
                message: format!("unknown edge token `{other}`, expected ab, ba or loop"),
            }),
        }
    }
}

/// One [`Direction`] per edge, aligned with the graph's edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Orientation(Vec<Direction>);

impl Orientation {
    pub fn new(directions: Vec<Direction>) -> Self {
        Orientation(directions)
    }

    /// Builds an orientation and checks it against `graph`.
    pub fn for_graph(graph: &DualGraph, directions: Vec<Direction>) -> Result<Self> {
        let o = Orientation(directions);
        o.check(graph)?;
        Ok(o)
    }

    pub fn directions(&self) -> &[Direction] {
        &self.0
    }

    pub fn tokens(&self) -> Vec<&'static str> {
        self.0.iter().map(|d| d.token()).collect()
    }

    /// Every non-loop edge reversed.
    pub fn reversed(&self) -> Orientation {
        Orientation(self.0.iter().map(|d| d.flipped()).collect())
    }

    /// Loops carry `Loop` and nothing else does.
    pub fn check(&self, graph: &DualGraph) -> Result<()> {
        if self.0.len() != graph.num_edges() {
            return Err(Error::OrientationMismatch(format!(
                "{} directions for {} edges",
                self.0.len(),
                graph.num_edges()
            )));
        }
        for (i, (dir, e)) in self.0.iter().zip(graph.edges()).enumerate() {
            if e.is_loop() != (*dir == Direction::Loop) {
                return Err(Error::OrientationMismatch(format!(
                    "edge {i} is {} but has direction `{}`",
                    if e.is_loop() { "a loop" } else { "not a loop" },
                    dir.token()
                )));
            }
        }
        Ok(())
    }

    /// `(tail, head)` of edge `i`, `None` for loops.
    fn arc(&self, graph: &DualGraph, i: usize) -> Option<(usize, usize)> {
        let e = graph.edges()[i];
        match self.0[i] {
            Direction::AtoB => Some((e.a, e.b)),
            Direction::BtoA => Some((e.b, e.a)),
            Direction::Loop => None,
        }
    }

    /// Indegree per vertex; each loop contributes one.
    pub fn indegrees(&self, graph: &DualGraph) -> Vec<usize> {
        let mut indeg = vec![0; graph.num_vertices()];
        for (i, e) in graph.edges().iter().enumerate() {
            match self.arc(graph, i) {
                Some((_, head)) => indeg[head] += 1,
                None => indeg[e.a] += 1,
            }
        }
        indeg
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tokens().join(","))
    }
}

/// `g_v - 1 + indeg_O(v)` per vertex.
pub fn multidegree_of(graph: &DualGraph, o: &Orientation) -> Result<Multidegree> {
    o.check(graph)?;
    Ok(multidegree_unchecked(graph, o))
}

fn multidegree_unchecked(graph: &DualGraph, o: &Orientation) -> Multidegree {
    Multidegree::new(
        o.indegrees(graph)
            .into_iter()
            .enumerate()
            .map(|(v, k)| i64::from(graph.weight(v)) - 1 + k as i64)
            .collect(),
    )
}

/// Indegree each vertex must receive from non-loop edges to realize `d`.
fn required_indegrees(graph: &DualGraph, d: &Multidegree) -> Vec<i64> {
    (0..graph.num_vertices())
        .map(|v| d[v] + 1 - i64::from(graph.weight(v)) - graph.loops_at(v) as i64)
        .collect()
}

/// An orientation realizing `d`, or `None` if `d` is not orientable.
///
/// Orientability is decided by a maximum flow from the edges to the vertices
/// (each edge sends one unit to one of its endpoints, vertex `v` absorbs its
/// required indegree). The witness is then normalized by cycle reversals to
/// the lexicographically least realization, `ab` before `ba`.
pub fn find_orientation(graph: &DualGraph, d: &Multidegree) -> Result<Option<Orientation>> {
    graph.check_multidegree(d)?;
    if d.total() != graph.genus() - 1 {
        return Ok(None);
    }
    let required = required_indegrees(graph, d);
    if required.iter().any(|&r| r < 0) {
        return Ok(None);
    }
    let n = graph.num_vertices();
    let m = graph.num_edges();
    let source = 0;
    let sink = 1 + m + n;
    let mut net = FlowNetwork::new(sink + 1);
    let mut to_a = vec![usize::MAX; m];
    let mut non_loop = 0i64;
    for (i, e) in graph.edges().iter().enumerate() {
        if e.is_loop() {
            continue;
        }
        non_loop += 1;
        net.add_arc(source, 1 + i, 1);
        to_a[i] = net.add_arc(1 + i, 1 + m + e.a, 1);
        net.add_arc(1 + i, 1 + m + e.b, 1);
    }
    for (v, &r) in required.iter().enumerate() {
        net.add_arc(1 + m + v, sink, r);
    }
    if net.max_flow(source, sink) != non_loop {
        return Ok(None);
    }
    let dirs = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            if e.is_loop() {
                Direction::Loop
            } else if net.flow_on(to_a[i]) == 1 {
                Direction::BtoA
            } else {
                Direction::AtoB
            }
        })
        .collect();
    let mut o = Orientation(dirs);
    lex_normalize(graph, &mut o);
    Ok(Some(o))
}

/// Moves `o` to the lexicographically least orientation with the same
/// indegrees. Edge `i` can be turned to `ab` without touching earlier edges
/// iff it lies on a directed cycle through edges of index `>= i`.
fn lex_normalize(graph: &DualGraph, o: &mut Orientation) {
    for i in 0..graph.num_edges() {
        if o.0[i] != Direction::BtoA {
            continue;
        }
        let (tail, head) = o.arc(graph, i).expect("non-loop");
        if let Some(path) = directed_path(graph, o, head, tail, |j| j > i) {
            for j in path {
                o.0[j] = o.0[j].flipped();
            }
            o.0[i] = Direction::AtoB;
        }
    }
}

/// Shortest directed path `from -> to` through edges accepted by `allow`,
/// exploring edges in index order. Returns the edge indices along the path.
fn directed_path(
    graph: &DualGraph,
    o: &Orientation,
    from: usize,
    to: usize,
    allow: impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let n = graph.num_vertices();
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = 1u64 << from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for j in 0..graph.num_edges() {
            if !allow(j) {
                continue;
            }
            if let Some((t, h)) = o.arc(graph, j) {
                if t == u && !in_mask(seen, h) {
                    seen |= 1 << h;
                    parent[h] = Some(j);
                    queue.push_back(h);
                }
            }
        }
    }
    if !in_mask(seen, to) {
        return None;
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let j = parent[v].expect("reached vertex has a parent");
        path.push(j);
        v = o.arc(graph, j).expect("non-loop").0;
    }
    path.reverse();
    Some(path)
}

/// Vertices reachable from `start` along directed edges, as a bitmask.
fn reachable(graph: &DualGraph, o: &Orientation, start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for j in 0..graph.num_edges() {
            if let Some((t, h)) = o.arc(graph, j) {
                if t == u && !in_mask(seen, h) {
                    seen |= 1 << h;
                    stack.push(h);
                }
            }
        }
    }
    seen
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MintyKind {
    DirectedCycle,
    DirectedCut,
}

/// Certificate that an edge lies on a directed cycle or in a directed cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MintyWitness {
    /// Edges of a closed directed walk, starting with the queried edge.
    DirectedCycle { edges: Vec<usize> },
    /// The cut of `sink_side`; every edge is directed into `sink_side`.
    DirectedCut {
        edges: Vec<usize>,
        sink_side: VertexSet,
    },
}

impl MintyWitness {
    pub fn kind(&self) -> MintyKind {
        match self {
            MintyWitness::DirectedCycle { .. } => MintyKind::DirectedCycle,
            MintyWitness::DirectedCut { .. } => MintyKind::DirectedCut,
        }
    }

    pub fn edges(&self) -> &[usize] {
        match self {
            MintyWitness::DirectedCycle { edges } | MintyWitness::DirectedCut { edges, .. } => edges,
        }
    }
}

/// Places edge `e` in a directed cycle or a directed cut.
///
/// With `e` directed `v -> w`, let `R` be the set reachable from `w`. If
/// `v ∈ R` the path back to `v` closes a directed cycle; otherwise the cut of
/// `R` is directed into `R` and contains `e`.
pub fn minty_decompose(graph: &DualGraph, o: &Orientation, e: usize) -> Result<MintyWitness> {
    o.check(graph)?;
    graph.edge(e)?;
    let Some((tail, head)) = o.arc(graph, e) else {
        return Ok(MintyWitness::DirectedCycle { edges: vec![e] });
    };
    if let Some(path) = directed_path(graph, o, head, tail, |_| true) {
        let mut edges = vec![e];
        edges.extend(path);
        return Ok(MintyWitness::DirectedCycle { edges });
    }
    let sink_side = VertexSet::from_bits(reachable(graph, o, head));
    let edges = graph.cut_edges(&sink_side)?;
    Ok(MintyWitness::DirectedCut { edges, sink_side })
}

/// Whether `edges` form a directed cycle of `o`: a single loop, or distinct
/// non-loop edges forming one closed walk on which every vertex has exactly
/// one incoming and one outgoing edge.
pub fn is_directed_cycle(graph: &DualGraph, o: &Orientation, edges: &[usize]) -> bool {
    if o.check(graph).is_err()
        || edges.is_empty()
        || edges.iter().any(|&j| j >= graph.num_edges())
    {
        return false;
    }
    let mut sorted = edges.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != edges.len() {
        return false;
    }
    if edges.iter().any(|&j| graph.edges()[j].is_loop()) {
        return edges.len() == 1;
    }
    let n = graph.num_vertices();
    let mut out_edge = vec![None; n];
    let mut indeg = vec![0usize; n];
    for &j in edges {
        let (t, h) = o.arc(graph, j).expect("non-loop");
        if out_edge[t].is_some() {
            return false;
        }
        out_edge[t] = Some(j);
        indeg[h] += 1;
    }
    for v in 0..n {
        if out_edge[v].is_some() != (indeg[v] == 1) || indeg[v] > 1 {
            return false;
        }
    }
    // single closed walk
    let start = o.arc(graph, edges[0]).expect("non-loop").0;
    let mut v = start;
    let mut steps = 0;
    loop {
        let j = out_edge[v].expect("every cycle vertex has an out edge");
        v = o.arc(graph, j).expect("non-loop").1;
        steps += 1;
        if v == start {
            break;
        }
    }
    steps == edges.len()
}

/// Whether the cut of `y` is nonempty with every edge directed into `y`.
pub fn is_directed_cut_toward(graph: &DualGraph, o: &Orientation, y: &VertexSet) -> bool {
    directed_cut_mask(graph, o, y.bits())
}

fn directed_cut_mask(graph: &DualGraph, o: &Orientation, mask: u64) -> bool {
    let mut any = false;
    for j in 0..graph.num_edges() {
        if let Some((t, h)) = o.arc(graph, j) {
            match (in_mask(mask, t), in_mask(mask, h)) {
                (false, true) => any = true,
                (true, false) => return false,
                _ => {}
            }
        }
    }
    any
}

/// No directed cycle; any loop makes an orientation cyclic.
pub fn is_acyclic(graph: &DualGraph, o: &Orientation) -> Result<bool> {
    o.check(graph)?;
    if graph.edges().iter().any(|e| e.is_loop()) {
        return Ok(false);
    }
    let n = graph.num_vertices();
    let mut indeg = vec![0usize; n];
    for j in 0..graph.num_edges() {
        let (_, h) = o.arc(graph, j).expect("no loops");
        indeg[h] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        removed += 1;
        for j in 0..graph.num_edges() {
            let (t, h) = o.arc(graph, j).expect("no loops");
            if t == u {
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    ready.push(h);
                }
            }
        }
    }
    Ok(removed == n)
}

/// Every edge on a directed cycle, i.e. every connected component is
/// strongly connected.
pub fn is_totally_cyclic(graph: &DualGraph, o: &Orientation) -> Result<bool> {
    o.check(graph)?;
    let reach: Vec<u64> = (0..graph.num_vertices())
        .map(|v| reachable(graph, o, v))
        .collect();
    Ok((0..graph.num_edges()).all(|j| match o.arc(graph, j) {
        Some((t, h)) => in_mask(reach[h], t),
        None => true,
    }))
}

/// Vertices of indegree zero; a loop at `v` means `v` is not a source.
pub fn sources(graph: &DualGraph, o: &Orientation) -> Result<Vec<usize>> {
    o.check(graph)?;
    Ok(o.indegrees(graph)
        .into_iter()
        .enumerate()
        .filter(|&(_, k)| k == 0)
        .map(|(v, _)| v)
        .collect())
}

/// An acyclic orientation realizing `d` (total degree `g - 1`), by peeling
/// sources: a remaining vertex whose outstanding indegree is zero must be a
/// source of any acyclic realization, so it gets all its remaining edges
/// directed outward.
pub fn admits_acyclic_orientation(
    graph: &DualGraph,
    d: &Multidegree,
) -> Result<Option<Orientation>> {
    graph.check_multidegree(d)?;
    let genus = graph.genus();
    if d.total() != genus - 1 {
        return Err(Error::Precondition(format!(
            "total degree {} must equal g - 1 = {}",
            d.total(),
            genus - 1
        )));
    }
    if graph.edges().iter().any(|e| e.is_loop()) {
        return Ok(None);
    }
    let n = graph.num_vertices();
    let mut need: Vec<i64> = (0..n)
        .map(|v| d[v] + 1 - i64::from(graph.weight(v)))
        .collect();
    if need.iter().any(|&r| r < 0) {
        return Ok(None);
    }
    let mut dirs = vec![Direction::AtoB; graph.num_edges()];
    let mut remaining = full_mask(n);
    while remaining != 0 {
        let Some(v) = (0..n).find(|&v| in_mask(remaining, v) && need[v] == 0) else {
            return Ok(None);
        };
        remaining &= !(1 << v);
        for (j, e) in graph.edges().iter().enumerate() {
            let other = if e.a == v {
                e.b
            } else if e.b == v {
                e.a
            } else {
                continue;
            };
            if !in_mask(remaining, other) {
                continue;
            }
            dirs[j] = if e.a == v {
                Direction::AtoB
            } else {
                Direction::BtoA
            };
            need[other] -= 1;
        }
    }
    let o = Orientation(dirs);
    debug_assert_eq!(multidegree_unchecked(graph, &o), *d);
    Ok(Some(o))
}

/// Reverses the directed cycle `cycle` of `o`; the multidegree is unchanged.
pub fn reverse_cycle(graph: &DualGraph, o: &Orientation, cycle: &[usize]) -> Result<Orientation> {
    o.check(graph)?;
    if !is_directed_cycle(graph, o, cycle) {
        return Err(Error::NotADirectedCycle(cycle.to_vec()));
    }
    let mut out = o.clone();
    for &j in cycle {
        out.0[j] = out.0[j].flipped();
    }
    Ok(out)
}

/// All orientations of a graph, indexed in lexicographic order (edge 0 most
/// significant, `ab` before `ba`). Indexable so callers can split the range.
#[derive(Debug, Clone)]
pub struct OrientationSpace<'a> {
    graph: &'a DualGraph,
    non_loop: Vec<usize>,
}

impl<'a> OrientationSpace<'a> {
    pub fn len(&self) -> usize {
        1usize << self.non_loop.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn get(&self, index: usize) -> Orientation {
        debug_assert!(index < self.len());
        let k = self.non_loop.len();
        let mut dirs = vec![Direction::Loop; self.graph.num_edges()];
        for (pos, &j) in self.non_loop.iter().enumerate() {
            dirs[j] = if index >> (k - 1 - pos) & 1 == 0 {
                Direction::AtoB
            } else {
                Direction::BtoA
            };
        }
        Orientation(dirs)
    }

    pub fn iter(&self) -> impl Iterator<Item = Orientation> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

pub fn enumerate_orientations(graph: &DualGraph) -> Result<OrientationSpace<'_>> {
    enumerate_orientations_bounded(graph, DEFAULT_ORIENTATION_BOUND)
}

/// Like [`enumerate_orientations`] with an explicit cap on non-loop edges.
pub fn enumerate_orientations_bounded(
    graph: &DualGraph,
    max_non_loop_edges: usize,
) -> Result<OrientationSpace<'_>> {
    let non_loop: Vec<usize> = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.is_loop())
        .map(|(j, _)| j)
        .collect();
    let bound = max_non_loop_edges.min(usize::BITS as usize - 2);
    if non_loop.len() > bound {
        return Err(Error::ResourceLimit {
            what: "non-loop edges for orientation enumeration",
            actual: non_loop.len(),
            bound,
        });
    }
    Ok(OrientationSpace { graph, non_loop })
}

/// Proper nonempty `Y` whose nonempty cut is directed into `Y`, lexicographic.
pub fn directed_cuts_toward(graph: &DualGraph, o: &Orientation) -> Result<Vec<VertexSet>> {
    o.check(graph)?;
    graph.check_subset_sweep()?;
    let n = graph.num_vertices();
    let full = full_mask(n);
    Ok(exec::filter_map(nonempty_subset_count(n), |r| {
        let mask = lex_subset(n, r);
        (mask != full && directed_cut_mask(graph, o, mask)).then(|| VertexSet::from_bits(mask))
    }))
}
