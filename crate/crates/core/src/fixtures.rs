//! Named reference graphs used throughout the tests and by the CLI.

use crate::graph::{DualGraph, Edge, Vertex};

pub struct Fixture {
    pub name: String,
    pub summary: &'static str,
    pub graph: DualGraph,
}

fn build(weights: &[(&str, u32)], edges: &[(&str, &str, usize)]) -> DualGraph {
    let expanded: Vec<(&str, &str)> = edges
        .iter()
        .flat_map(|&(a, b, mult)| std::iter::repeat_n((a, b), mult))
        .collect();
    DualGraph::from_ids(weights, &expanded).expect("fixture graphs are well formed")
}

/// Two weight-0 vertices `v`, `w` joined by three edges.
pub fn fig1() -> DualGraph {
    ex44(3)
}

/// Two weight-0 vertices `v`, `w` joined by `k` parallel edges.
pub fn ex44(k: usize) -> DualGraph {
    let vertices = vec![
        Vertex {
            id: "v".into(),
            weight: 0,
        },
        Vertex {
            id: "w".into(),
            weight: 0,
        },
    ];
    DualGraph::new(vertices, vec![Edge::new(0, 1); k]).expect("well formed")
}

/// Weights (0, 0, 1); triple edge v1-v2, single edge v2-v3.
pub fn ex54() -> DualGraph {
    build(
        &[("v1", 0), ("v2", 0), ("v3", 1)],
        &[("v1", "v2", 3), ("v2", "v3", 1)],
    )
}

/// Weights (0, 0, 0); triple edges v1-v2 and v2-v3.
pub fn ex55() -> DualGraph {
    build(
        &[("v1", 0), ("v2", 0), ("v3", 0)],
        &[("v1", "v2", 3), ("v2", "v3", 3)],
    )
}

/// Weights (2, 1, 2); double edges v1-v2 and v2-v3.
pub fn ex63() -> DualGraph {
    build(
        &[("v1", 2), ("v2", 1), ("v3", 2)],
        &[("v1", "v2", 2), ("v2", "v3", 2)],
    )
}

/// Weights (1, 5); three parallel edges.
pub fn ex66() -> DualGraph {
    build(&[("v1", 1), ("v2", 5)], &[("v1", "v2", 3)])
}

/// Weights (3, 4); a single edge.
pub fn ex67() -> DualGraph {
    build(&[("v1", 3), ("v2", 4)], &[("v1", "v2", 1)])
}

/// Looks a fixture up by name: `fig1`, `ex44k<K>`, `ex54`, `ex55`, `ex63`,
/// `ex66`, `ex67`.
pub fn by_name(name: &str) -> Option<DualGraph> {
    match name {
        "fig1" => Some(fig1()),
        "ex54" => Some(ex54()),
        "ex55" => Some(ex55()),
        "ex63" => Some(ex63()),
        "ex66" => Some(ex66()),
        "ex67" => Some(ex67()),
        _ => {
            let k: usize = name.strip_prefix("ex44k")?.parse().ok()?;
            (1..=64).contains(&k).then(|| ex44(k))
        }
    }
}

/// The bundled corpus; `ex44k<K>` is listed for K = 3..=6.
pub fn catalog() -> Vec<Fixture> {
    let mut out = vec![Fixture {
        name: "fig1".into(),
        summary: "weights (0,0), 3 parallel edges; all-v->w orientation gives (-1,2) and a directed cut",
        graph: fig1(),
    }];
    for k in 3..=6 {
        out.push(Fixture {
            name: format!("ex44k{k}"),
            summary: "weights (0,0), k parallel edges; (-1,k-1) is semistable with empty effective locus",
            graph: ex44(k),
        });
    }
    out.extend([
        Fixture {
            name: "ex54".into(),
            summary: "weights (0,0,1), triple edge v1-v2, edge v2-v3; (2,-1,0) unstable, (-1,2,0) semistable",
            graph: ex54(),
        },
        Fixture {
            name: "ex55".into(),
            summary: "weights (0,0,0), triple edges v1-v2 and v2-v3; (2,0,0) not semistable",
            graph: ex55(),
        },
        Fixture {
            name: "ex63".into(),
            summary: "weights (2,1,2), double edges v1-v2 and v2-v3; (0,3,0) semistable but no d+v is",
            graph: ex63(),
        },
        Fixture {
            name: "ex66".into(),
            summary: "weights (1,5), 3 parallel edges; (-1,3) is stable",
            graph: ex66(),
        },
        Fixture {
            name: "ex67".into(),
            summary: "weights (3,4), single edge, genus 7; (2,2) is effective and stable",
            graph: ex67(),
        },
    ]);
    out
}
