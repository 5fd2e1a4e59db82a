//! Brute-force oracles written independently of the library internals.
#![allow(dead_code)]

use std::collections::BTreeSet;

use proptest::prelude::*;
use semistab::{DualGraph, Edge, Multidegree, Vertex};

pub fn md(v: &[i64]) -> Multidegree {
    Multidegree::new(v.to_vec())
}

fn members(mask: u64, n: usize) -> impl Iterator<Item = usize> {
    (0..n).filter(move |&v| mask >> v & 1 == 1)
}

fn inside(mask: u64, v: usize) -> bool {
    mask >> v & 1 == 1
}

/// `(genus, cut size, degree)` of the subcurve `mask`, from scratch.
fn subcurve(g: &DualGraph, d: &Multidegree, mask: u64) -> (i128, i128, i128) {
    let n = g.num_vertices();
    let verts = members(mask, n).count() as i128;
    let weights: i128 = members(mask, n).map(|v| g.weight(v) as i128).sum();
    let mut internal = 0i128;
    let mut cut = 0i128;
    for e in g.edges() {
        match (inside(mask, e.a), inside(mask, e.b)) {
            (true, true) => internal += 1,
            (true, false) | (false, true) => cut += 1,
            _ => {}
        }
    }
    let deg: i128 = members(mask, n).map(|v| d.values()[v] as i128).sum();
    (1 - verts + internal + weights, cut, deg)
}

/// Sign of `deg - lower bound` in the form
/// `d (2g(Y) - 2 + cut) / (2g - 2) - cut / 2 <= deg`, cleared by `2(2g-2)`.
fn slack(g: &DualGraph, d: &Multidegree, mask: u64) -> i128 {
    let genus = g.genus() as i128;
    let total: i128 = d.values().iter().map(|&x| x as i128).sum();
    let (gy, cut, deg) = subcurve(g, d, mask);
    let lhs = 2 * total * (2 * gy - 2 + cut) - cut * (2 * genus - 2);
    2 * (2 * genus - 2) * deg - lhs
}

pub fn oracle_semistable(g: &DualGraph, d: &Multidegree) -> bool {
    let full = (1u64 << g.num_vertices()) - 1;
    (1..=full).all(|m| slack(g, d, m) >= 0)
}

pub fn oracle_stable(g: &DualGraph, d: &Multidegree) -> bool {
    let full = (1u64 << g.num_vertices()) - 1;
    oracle_semistable(g, d) && (1..full).all(|m| slack(g, d, m) > 0)
}

/// `(tail, head)` per edge for orientation code `bits` (bit `j` set means
/// edge `j` points from `b` to `a`), loops as `None`.
pub fn arcs(g: &DualGraph, bits: u64) -> Vec<Option<(usize, usize)>> {
    g.edges()
        .iter()
        .enumerate()
        .map(|(j, e)| {
            if e.a == e.b {
                None
            } else if bits >> j & 1 == 1 {
                Some((e.b, e.a))
            } else {
                Some((e.a, e.b))
            }
        })
        .collect()
}

/// All distinct orientation codes, loop bits forced to zero.
pub fn orientation_codes(g: &DualGraph) -> Vec<u64> {
    let loop_mask: u64 = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.a == e.b)
        .map(|(j, _)| 1u64 << j)
        .sum();
    (0..1u64 << g.num_edges())
        .filter(|b| b & loop_mask == 0)
        .collect()
}

pub fn degree_of(g: &DualGraph, arcs: &[Option<(usize, usize)>]) -> Multidegree {
    let mut v: Vec<i64> = (0..g.num_vertices()).map(|x| g.weight(x) as i64 - 1).collect();
    for (j, a) in arcs.iter().enumerate() {
        match a {
            Some((_, h)) => v[*h] += 1,
            None => v[g.edges()[j].a] += 1,
        }
    }
    Multidegree::new(v)
}

pub fn orientation_image(g: &DualGraph) -> BTreeSet<Vec<i64>> {
    orientation_codes(g)
        .into_iter()
        .map(|b| degree_of(g, &arcs(g, b)).into_values())
        .collect()
}

/// Transitive closure: `reach[u][v]` iff a directed path `u -> v` exists.
pub fn closure(n: usize, arcs: &[Option<(usize, usize)>]) -> Vec<Vec<bool>> {
    let mut r = vec![vec![false; n]; n];
    for (i, row) in r.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(t, h) in arcs.iter().flatten() {
        r[t][h] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    r
}

pub fn edge_on_cycle(g: &DualGraph, arcs: &[Option<(usize, usize)>], e: usize) -> bool {
    match arcs[e] {
        None => true,
        Some((t, h)) => closure(g.num_vertices(), arcs)[h][t],
    }
}

/// Whether some `Y` has `e` in its cut with every cut edge pointing into `Y`.
pub fn edge_in_directed_cut(g: &DualGraph, arcs: &[Option<(usize, usize)>], e: usize) -> bool {
    let full = (1u64 << g.num_vertices()) - 1;
    (1..full).any(|y| {
        let crosses = |j: usize| arcs[j].is_some_and(|(t, h)| inside(y, t) != inside(y, h));
        crosses(e)
            && (0..arcs.len())
                .filter(|&j| crosses(j))
                .all(|j| inside(y, arcs[j].unwrap().1))
    })
}

pub fn has_cycle(g: &DualGraph, arcs: &[Option<(usize, usize)>]) -> bool {
    (0..arcs.len()).any(|e| edge_on_cycle(g, arcs, e))
}

/// Whether `d` is the multidegree of some acyclic orientation.
pub fn oracle_acyclic_realization(g: &DualGraph, d: &Multidegree) -> bool {
    orientation_codes(g).into_iter().any(|b| {
        let a = arcs(g, b);
        degree_of(g, &a) == *d && !has_cycle(g, &a)
    })
}

/// Effective locus is a divisor: semistable and some component has positive
/// genus or some realization contains a directed cycle.
pub fn oracle_theta(g: &DualGraph, d: &Multidegree) -> bool {
    oracle_semistable(g, d)
        && ((0..g.num_vertices()).any(|v| g.weight(v) > 0) || !oracle_acyclic_realization(g, d))
}

/// Every integer vector with entries in `lo..=hi` summing to `total`.
pub fn vectors(n: usize, lo: i64, hi: i64, total: i64) -> Vec<Multidegree> {
    fn go(n: usize, lo: i64, hi: i64, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Multidegree>) {
        if cur.len() + 1 == n {
            if (lo..=hi).contains(&left) {
                cur.push(left);
                out.push(Multidegree::new(cur.clone()));
                cur.pop();
            }
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            go(n, lo, hi, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, total, &mut Vec::new(), &mut out);
    out
}

fn build(weights: &[u32], edges: &[(usize, usize)]) -> DualGraph {
    let vertices = weights
        .iter()
        .enumerate()
        .map(|(i, &w)| Vertex {
            id: format!("v{}", i + 1),
            weight: w,
        })
        .collect();
    DualGraph::new(vertices, edges.iter().map(|&(a, b)| Edge::new(a, b)).collect()).unwrap()
}

/// Connected graphs with at most 5 vertices and 8 edges, loops allowed,
/// weights at most 2.
pub fn connected_graph() -> impl Strategy<Value = DualGraph> {
    (1usize..=5).prop_flat_map(|n| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let extra = proptest::collection::vec((0..n, 0..n), 0..=(8 - (n - 1)));
        let weights = proptest::collection::vec(0u32..=2, n);
        (weights, tree, extra).prop_map(|(weights, tree, extra)| {
            let mut edges: Vec<(usize, usize)> = tree
                .iter()
                .enumerate()
                .map(|(i, ix)| (ix.index(i + 1), i + 1))
                .collect();
            edges.extend(extra);
            build(&weights, &edges)
        })
    })
}

pub fn stable_graph() -> impl Strategy<Value = DualGraph> {
    connected_graph().prop_filter("stable curve", |g| g.is_stable_curve())
}

/// A stable graph with a multidegree of total `g - 1 + offset`. Half the
/// time the degree starts from a random orientation, is shifted by random
/// vertices to the right total and may have one unit moved; otherwise it is
/// uniform with entries within `g + 2` of zero.
pub fn graph_and_degree(
    offsets: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = (DualGraph, Multidegree)> {
    type Pick = prop::sample::Index;
    (
        stable_graph(),
        offsets,
        any::<bool>(),
        any::<u64>(),
        proptest::collection::vec(any::<Pick>(), 8),
        proptest::option::of((any::<Pick>(), any::<Pick>())),
        proptest::collection::vec(any::<i64>(), 5),
    )
        .prop_map(|(g, off, near, bits, shifts, moved, raw)| {
            let n = g.num_vertices();
            let total = g.genus() - 1 + off;
            let values = if near {
                let codes = orientation_codes(&g);
                let code = codes[(bits % codes.len() as u64) as usize];
                let mut v = degree_of(&g, &arcs(&g, code)).into_values();
                for k in 0..off.unsigned_abs() as usize {
                    v[shifts[k % shifts.len()].index(n)] += off.signum();
                }
                if let Some((a, b)) = moved {
                    v[a.index(n)] -= 1;
                    v[b.index(n)] += 1;
                }
                v
            } else {
                let span = g.genus() + 2;
                let mut v: Vec<i64> = raw[..n - 1].iter().map(|x| x.rem_euclid(2 * span + 1) - span).collect();
                v.push(total - v.iter().sum::<i64>());
                v
            };
            (g, Multidegree::new(values))
        })
}
