//! Exhaustive generation of small stable dual graphs, one per isomorphism
//! class.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{DualGraph, Edge, Vertex};

/// Largest vertex count accepted by [`stable_graphs`].
pub const MAX_FAMILY_VERTICES: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_weight: u32,
}

impl Default for FamilyBounds {
    fn default() -> Self {
        FamilyBounds {
            max_vertices: 4,
            max_edges: 6,
            max_weight: 2,
        }
    }
}

/// Canonical form: weights, then sorted edge list, minimized over all
/// relabelings.
type Key = (Vec<u32>, Vec<(usize, usize)>);

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn canonical_key(weights: &[u32], edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Key {
    perms
        .iter()
        .map(|p| {
            let mut w = vec![0; weights.len()];
            for (old, &new) in p.iter().enumerate() {
                w[new] = weights[old];
            }
            let mut es: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| {
                    let (x, y) = (p[a], p[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            es.sort_unstable();
            (w, es)
        })
        .min()
        .expect("at least one permutation")
}

fn graph_of(key: &Key) -> DualGraph {
    let vertices = key
        .0
        .iter()
        .enumerate()
        .map(|(i, &weight)| Vertex {
            id: format!("v{}", i + 1),
            weight,
        })
        .collect();
    let edges = key.1.iter().map(|&(a, b)| Edge::new(a, b)).collect();
    DualGraph::new(vertices, edges).expect("generated graphs are well formed")
}

/// Every edge multiset on `pairs` with at most `budget` edges.
fn multisets(pairs: &[(usize, usize)], budget: usize, out: &mut Vec<Vec<(usize, usize)>>) {
    fn go(
        pairs: &[(usize, usize)],
        start: usize,
        budget: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        out.push(current.clone());
        if budget == 0 {
            return;
        }
        for i in start..pairs.len() {
            current.push(pairs[i]);
            go(pairs, i, budget - 1, current, out);
            current.pop();
        }
    }
    go(pairs, 0, budget, &mut Vec::new(), out);
}

/// All connected stable dual graphs within `bounds`, loops included, one
/// representative per isomorphism class. Ordered by vertex count, then by
/// canonical form.
pub fn stable_graphs(bounds: FamilyBounds) -> Result<Vec<DualGraph>> {
    if bounds.max_vertices > MAX_FAMILY_VERTICES {
        return Err(Error::ResourceLimit {
            what: "family vertex count",
            actual: bounds.max_vertices,
            bound: MAX_FAMILY_VERTICES,
        });
    }
    let mut out = Vec::new();
    for n in 1..=bounds.max_vertices {
        let perms = permutations(n);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let mut edge_sets = Vec::new();
        multisets(&pairs, bounds.max_edges, &mut edge_sets);
        let mut keys = BTreeSet::new();
        let weight_count = (bounds.max_weight as usize + 1).pow(n as u32);
        for code in 0..weight_count {
            let mut c = code;
            let weights: Vec<u32> = (0..n)
                .map(|_| {
                    let w = (c % (bounds.max_weight as usize + 1)) as u32;
                    c /= bounds.max_weight as usize + 1;
                    w
                })
                .collect();
            for edges in &edge_sets {
                let candidate = graph_of(&(weights.clone(), edges.clone()));
                if candidate.is_stable_curve() {
                    keys.insert(canonical_key(&weights, edges, &perms));
                }
            }
        }
        out.extend(keys.iter().map(graph_of));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn small() -> FamilyBounds {
        FamilyBounds {
            max_vertices: 2,
            max_edges: 3,
            max_weight: 1,
        }
    }

    #[test]
    fn small_family_by_hand() {
        // one vertex: weight w, k loops, genus w + k >= 2, 2w - 2 + 2k > 0
        // two vertices (weights a <= b): joined, stable, genus >= 2
        let family = stable_graphs(small()).unwrap();
        let one: Vec<_> = family.iter().filter(|g| g.num_vertices() == 1).collect();
        // (w=0,k=2), (0,3), (1,1), (1,2), (1,3)
        assert_eq!(one.len(), 5);
        let banana = DualGraph::from_ids(&[("v1", 0), ("v2", 0)], &[("v1", "v2"); 3]).unwrap();
        assert!(family.contains(&banana));
        assert_eq!(banana.edges(), fixtures::fig1().edges());
        for g in &family {
            assert!(g.is_stable_curve());
        }
    }

    #[test]
    fn no_isomorphic_duplicates() {
        let family = stable_graphs(FamilyBounds {
            max_vertices: 3,
            max_edges: 4,
            max_weight: 1,
        })
        .unwrap();
        let mut keys = BTreeSet::new();
        for g in &family {
            let n = g.num_vertices();
            let weights: Vec<u32> = (0..n).map(|v| g.weight(v)).collect();
            let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.a, e.b)).collect();
            assert!(keys.insert(canonical_key(&weights, &edges, &permutations(n))));
        }
    }

    #[test]
    fn family_is_deterministic() {
        assert_eq!(stable_graphs(small()).unwrap(), stable_graphs(small()).unwrap());
    }

    #[test]
    fn vertex_bound() {
        let bounds = FamilyBounds {
            max_vertices: 7,
            ..FamilyBounds::default()
        };
        assert!(matches!(stable_graphs(bounds), Err(Error::ResourceLimit { .. })));
    }
}
