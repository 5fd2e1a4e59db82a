//! Existence of effective line bundles in degree `g - 1`, the components of
//! the effective locus coming from one orientation, and the orientation
//! criteria for semistability in degrees `g` and `g - 2`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{full_mask, in_mask, lex_subset, nonempty_subset_count, DualGraph, Multidegree, VertexSet};
use crate::orientation::{
    admits_acyclic_orientation, enumerate_orientations, find_orientation, minty_decompose,
    multidegree_of, Direction, MintyWitness, Orientation,
};
use crate::semistability::is_semistable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThetaReason {
    NotSemistable,
    PositiveWeightVertex,
    CyclicRealization,
    AllRationalAcyclic,
}

impl ThetaReason {
    pub fn as_str(self) -> &'static str {
        match self {
            ThetaReason::NotSemistable => "not_semistable",
            ThetaReason::PositiveWeightVertex => "positive_weight_vertex",
            ThetaReason::CyclicRealization => "cyclic_realization",
            ThetaReason::AllRationalAcyclic => "all_rational_acyclic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThetaWitness {
    /// First vertex of positive weight.
    Vertex(usize),
    /// An acyclic realization of `d`.
    Orientation(Orientation),
    /// A realization of `d` together with one of its directed cycles.
    CyclicOrientation {
        orientation: Orientation,
        cycle: Vec<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaVerdict {
    pub semistable: bool,
    pub exists: bool,
    pub reason: ThetaReason,
    pub witness: Option<ThetaWitness>,
}

fn require_stable_curve(graph: &DualGraph) -> Result<()> {
    if graph.is_stable_curve() {
        Ok(())
    } else {
        Err(Error::NotStableCurve)
    }
}

fn require_total(d: &Multidegree, want: i64, label: &str) -> Result<()> {
    if d.total() == want {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "total degree {} must equal {label} = {want}",
            d.total()
        )))
    }
}

/// Whether the effective locus of multidegree `d` (total `g - 1`) is a
/// divisor: `d` must be semistable, and then either some component has
/// positive genus or no realization of `d` is acyclic.
pub fn theta_exists(graph: &DualGraph, d: &Multidegree) -> Result<ThetaVerdict> {
    graph.check_multidegree(d)?;
    require_stable_curve(graph)?;
    require_total(d, graph.genus() - 1, "g - 1")?;
    if !is_semistable(graph, d)? {
        return Ok(ThetaVerdict {
            semistable: false,
            exists: false,
            reason: ThetaReason::NotSemistable,
            witness: None,
        });
    }
    if let Some(v) = (0..graph.num_vertices()).find(|&v| graph.weight(v) > 0) {
        return Ok(ThetaVerdict {
            semistable: true,
            exists: true,
            reason: ThetaReason::PositiveWeightVertex,
            witness: Some(ThetaWitness::Vertex(v)),
        });
    }
    if let Some(o) = admits_acyclic_orientation(graph, d)? {
        return Ok(ThetaVerdict {
            semistable: true,
            exists: false,
            reason: ThetaReason::AllRationalAcyclic,
            witness: Some(ThetaWitness::Orientation(o)),
        });
    }
    let orientation = find_orientation(graph, d)?
        .ok_or_else(|| Error::Precondition(format!("semistable {d} has no realization")))?;
    let cycle = directed_cycle_of(graph, &orientation)?
        .ok_or_else(|| Error::Precondition(format!("realization {orientation} has no cycle")))?;
    Ok(ThetaVerdict {
        semistable: true,
        exists: true,
        reason: ThetaReason::CyclicRealization,
        witness: Some(ThetaWitness::CyclicOrientation { orientation, cycle }),
    })
}

/// The directed cycle through the least edge that lies on one.
fn directed_cycle_of(graph: &DualGraph, o: &Orientation) -> Result<Option<Vec<usize>>> {
    for e in 0..graph.num_edges() {
        if let MintyWitness::DirectedCycle { edges } = minty_decompose(graph, o, e)? {
            return Ok(Some(edges));
        }
    }
    Ok(None)
}

/// Degree of `O` restricted to the induced subgraph on `mask`:
/// `g_v - 1 + indegree` counting only edges inside `mask`.
fn restricted_effective(graph: &DualGraph, o: &Orientation, mask: u64) -> bool {
    let mut indeg = vec![0i64; graph.num_vertices()];
    for (j, e) in graph.edges().iter().enumerate() {
        if !(in_mask(mask, e.a) && in_mask(mask, e.b)) {
            continue;
        }
        let head = match o.directions()[j] {
            Direction::AtoB | Direction::Loop => e.b,
            Direction::BtoA => e.a,
        };
        indeg[head] += 1;
    }
    (0..graph.num_vertices())
        .filter(|&v| in_mask(mask, v))
        .all(|v| i64::from(graph.weight(v)) - 1 + indeg[v] >= 0)
}

fn cut_into(graph: &DualGraph, o: &Orientation, mask: u64) -> bool {
    let mut any = false;
    for (j, e) in graph.edges().iter().enumerate() {
        let (t, h) = match o.directions()[j] {
            Direction::AtoB => (e.a, e.b),
            Direction::BtoA => (e.b, e.a),
            Direction::Loop => continue,
        };
        match (in_mask(mask, t), in_mask(mask, h)) {
            (false, true) => any = true,
            (true, false) => return false,
            _ => {}
        }
    }
    any
}

/// Connected `Y` that are the whole graph or receive a directed cut, and on
/// which the restricted multidegree of `O` is effective. Lexicographic.
pub fn theta_components(graph: &DualGraph, o: &Orientation) -> Result<Vec<VertexSet>> {
    o.check(graph)?;
    require_stable_curve(graph)?;
    graph.check_subset_sweep()?;
    let n = graph.num_vertices();
    let full = full_mask(n);
    Ok(exec::filter_map(nonempty_subset_count(n), |r| {
        let mask = lex_subset(n, r);
        let qualifies = (mask == full || cut_into(graph, o, mask))
            && graph.is_connected_mask(mask)
            && restricted_effective(graph, o, mask);
        qualifies.then(|| VertexSet::from_bits(mask))
    }))
}

/// Searches all orientations, in order, for one realizing `target` that
/// satisfies `ok`.
fn search(
    graph: &DualGraph,
    target: &Multidegree,
    ok: impl Fn(&Orientation) -> bool + Sync,
) -> Result<Option<Orientation>> {
    let space = enumerate_orientations(graph)?;
    if find_orientation(graph, target)?.is_none() {
        return Ok(None);
    }
    Ok(exec::find_map_first(space.len(), |i| {
        let o = space.get(i);
        let realizes = multidegree_of(graph, &o).is_ok_and(|m| m == *target);
        (realizes && ok(&o)).then_some(o)
    }))
}

fn proper_masks(n: usize) -> impl Iterator<Item = u64> {
    let full = full_mask(n);
    1..full
}

/// An orientation `O` with `d_O = d - v` and no directed cut toward any `Y`
/// containing `v`, by exhaustive search. `d` has total degree `g`.
pub fn degree_g_criterion(graph: &DualGraph, d: &Multidegree, v: usize) -> Result<Option<Orientation>> {
    graph.check_multidegree(d)?;
    graph.check_vertex(v)?;
    require_stable_curve(graph)?;
    require_total(d, graph.genus(), "g")?;
    graph.check_subset_sweep()?;
    let n = graph.num_vertices();
    search(graph, &d.minus_vertex(v), |o| {
        proper_masks(n).all(|mask| !in_mask(mask, v) || !cut_into(graph, o, mask))
    })
}

/// An orientation `O` with `d_O = d + v` and no directed cut away from any
/// `Y` containing `v`, by exhaustive search. `d` has total degree `g - 2`.
pub fn degree_g_minus_2_criterion(
    graph: &DualGraph,
    d: &Multidegree,
    v: usize,
) -> Result<Option<Orientation>> {
    graph.check_multidegree(d)?;
    graph.check_vertex(v)?;
    require_total(d, graph.genus() - 2, "g - 2")?;
    graph.check_subset_sweep()?;
    let n = graph.num_vertices();
    search(graph, &d.plus_vertex(v), |o| {
        proper_masks(n).all(|mask| in_mask(mask, v) || !cut_into(graph, o, mask))
    })
}

/// Semistability in degree `g - 2` (resp. `g`) read off from orientability
/// of every `d + v` (resp. `d - v`).
pub fn semistable_via_vertex_shifts(graph: &DualGraph, d: &Multidegree) -> Result<bool> {
    graph.check_multidegree(d)?;
    let genus = graph.genus();
    let up = if d.total() == genus - 2 {
        true
    } else if d.total() == genus {
        false
    } else {
        return Err(Error::Precondition(format!(
            "total degree {} must be g - 2 = {} or g = {genus}",
            d.total(),
            genus - 2
        )));
    };
    for v in 0..graph.num_vertices() {
        let shifted = if up { d.plus_vertex(v) } else { d.minus_vertex(v) };
        if find_orientation(graph, &shifted)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::orientation::is_directed_cycle;
    use crate::semistability::is_stable;
    use Direction::{AtoB as AB, BtoA as BA};

    fn md(v: &[i64]) -> Multidegree {
        Multidegree::new(v.to_vec())
    }

    #[test]
    fn theta_examples() {
        let g = fixtures::ex44(4);
        let v = theta_exists(&g, &md(&[-1, 3])).unwrap();
        assert!(v.semistable && !v.exists);
        assert_eq!(v.reason, ThetaReason::AllRationalAcyclic);
        assert_eq!(
            v.witness,
            Some(ThetaWitness::Orientation(Orientation::new(vec![AB; 4])))
        );

        let v = theta_exists(&g, &md(&[1, 1])).unwrap();
        assert!(v.exists);
        assert_eq!(v.reason, ThetaReason::CyclicRealization);
        let Some(ThetaWitness::CyclicOrientation { orientation, cycle }) = v.witness else {
            panic!("expected a cyclic witness");
        };
        assert_eq!(orientation, Orientation::new(vec![AB, AB, BA, BA]));
        assert_eq!(cycle, vec![0, 2]);
        assert!(is_directed_cycle(&g, &orientation, &cycle));

        let g = fixtures::ex54();
        let v = theta_exists(&g, &md(&[0, 2, 0])).unwrap();
        assert!(v.exists);
        assert_eq!(v.reason, ThetaReason::PositiveWeightVertex);
        assert_eq!(v.witness, Some(ThetaWitness::Vertex(2)));

        let v = theta_exists(&g, &md(&[3, -1, 0])).unwrap();
        assert!(!v.semistable && !v.exists);
        assert_eq!(v.reason, ThetaReason::NotSemistable);
    }

    #[test]
    fn theta_preconditions() {
        let g = fixtures::ex44(4);
        assert!(matches!(theta_exists(&g, &md(&[0, 0])), Err(Error::Precondition(_))));
        assert_eq!(
            theta_exists(&fixtures::ex44(2), &md(&[0, 0])),
            Err(Error::NotStableCurve)
        );
    }

    #[test]
    fn component_examples() {
        let g = fixtures::fig1();
        let o = Orientation::new(vec![BA, AB, AB]);
        assert_eq!(theta_components(&g, &o).unwrap(), vec![g.all_vertices()]);

        let o = Orientation::new(vec![AB; 3]);
        assert!(theta_components(&g, &o).unwrap().is_empty());

        let g = DualGraph::from_ids(
            &[("v", 1), ("w", 0)],
            &[("v", "w"), ("v", "w"), ("v", "w")],
        )
        .unwrap();
        assert_eq!(theta_components(&g, &o).unwrap(), vec![g.all_vertices()]);
    }

    #[test]
    fn components_track_theta_on_corpus() {
        for f in fixtures::catalog() {
            let g = &f.graph;
            for o in enumerate_orientations(g).unwrap().iter() {
                let d = multidegree_of(g, &o).unwrap();
                let comps = theta_components(g, &o).unwrap();
                let verdict = theta_exists(g, &d).unwrap();
                assert_eq!(comps.is_empty(), !verdict.exists, "{} {o}", f.name);
                if is_stable(g, &d).unwrap() {
                    assert_eq!(comps, vec![g.all_vertices()]);
                }
            }
        }
    }

    #[test]
    fn degree_g_examples() {
        let g = fixtures::fig1();
        let d = md(&[1, 1]);
        for v in 0..2 {
            let o = degree_g_criterion(&g, &d, v).unwrap().unwrap();
            assert_eq!(multidegree_of(&g, &o).unwrap(), d.minus_vertex(v));
        }
        let d = md(&[0, 2]);
        for v in 0..2 {
            assert_eq!(
                degree_g_criterion(&g, &d, v).unwrap().is_some(),
                is_semistable(&g, &d).unwrap()
            );
        }
        let d = md(&[-1, 3]);
        assert!(!is_semistable(&g, &d).unwrap());
        assert_eq!(degree_g_criterion(&g, &d, 0).unwrap(), None);
        assert!(matches!(
            degree_g_criterion(&g, &md(&[0, 1]), 0),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn degree_g_minus_2_examples() {
        let g = fixtures::ex54();
        for v in 0..3 {
            let o = degree_g_minus_2_criterion(&g, &md(&[-1, 2, 0]), v).unwrap().unwrap();
            assert_eq!(multidegree_of(&g, &o).unwrap(), md(&[-1, 2, 0]).plus_vertex(v));
        }
        assert!((0..3).any(|v| degree_g_minus_2_criterion(&g, &md(&[2, -1, 0]), v)
            .unwrap()
            .is_none()));
        let g = fixtures::ex55();
        assert!((0..3).any(|v| degree_g_minus_2_criterion(&g, &md(&[2, 0, 0]), v)
            .unwrap()
            .is_none()));
    }

    #[test]
    fn vertex_shift_examples() {
        assert!(semistable_via_vertex_shifts(&fixtures::ex54(), &md(&[-1, 2, 0])).unwrap());
        assert!(!semistable_via_vertex_shifts(&fixtures::ex55(), &md(&[2, 0, 0])).unwrap());
        let g = fixtures::ex63();
        let d = md(&[1, 3, 1]);
        assert_eq!(
            semistable_via_vertex_shifts(&g, &d).unwrap(),
            is_semistable(&g, &d).unwrap()
        );
        assert!(matches!(
            semistable_via_vertex_shifts(&g, &md(&[0, 0, 0])),
            Err(Error::Precondition(_))
        ));
    }
}
