mod common;

use common::connected_graph;
use proptest::prelude::*;
use semistab::{fixtures, io, DualGraph, Multidegree, VertexSet};

fn proper_subsets(g: &DualGraph) -> impl Iterator<Item = VertexSet> + '_ {
    let full = g.all_vertices().bits();
    (1..full).map(VertexSet::from_bits)
}

proptest! {
    #[test]
    fn genus_formula_is_literal(g in connected_graph()) {
        let weights: i64 = (0..g.num_vertices()).map(|v| i64::from(g.weight(v))).sum();
        prop_assert_eq!(g.genus() + g.num_vertices() as i64 - g.num_edges() as i64 - weights, 1);
    }

    #[test]
    fn canonical_total(g in connected_graph()) {
        prop_assert_eq!(g.canonical_multidegree().total(), 2 * g.genus() - 2);
    }

    #[test]
    fn cuts_are_symmetric(g in connected_graph()) {
        let n = g.num_vertices();
        for y in proper_subsets(&g) {
            prop_assert_eq!(g.cut_edges(&y).unwrap(), g.cut_edges(&y.complement(n)).unwrap());
        }
        prop_assert!(g.cut_edges(&g.all_vertices()).unwrap().is_empty());
    }

    #[test]
    fn vertex_cuts_count_each_edge_twice(g in connected_graph()) {
        let sum: usize = (0..g.num_vertices())
            .map(|v| g.cut_edges(&VertexSet::singleton(v)).unwrap().len())
            .sum();
        prop_assert_eq!(sum, 2 * g.num_non_loop_edges());
    }

    #[test]
    fn subcurve_genus_of_everything(g in connected_graph()) {
        prop_assert_eq!(g.subcurve_genus(&g.all_vertices()).unwrap(), g.genus());
    }

    #[test]
    fn document_round_trip(g in connected_graph(), shift in -3i64..=3) {
        let d = Multidegree::new((0..g.num_vertices() as i64).map(|v| v + shift).collect());
        let text = io::serialize_document(&g, Some(&d));
        prop_assert_eq!(io::parse_document(&text).unwrap(), (g.clone(), Some(d)));
        prop_assert_eq!(io::parse_document(&io::serialize_document(&g, None)).unwrap(), (g, None));
    }
}

#[test]
fn spec_cut_examples() {
    let g = fixtures::fig1();
    assert_eq!(g.cut_edges(&g.vertex_set(&["w"]).unwrap()).unwrap(), vec![0, 1, 2]);
    let g = fixtures::ex54();
    assert_eq!(g.cut_edges(&g.vertex_set(&["v3"]).unwrap()).unwrap(), vec![3]);
}

#[test]
fn stable_curve_examples() {
    assert!(fixtures::fig1().is_stable_curve());
    assert!(!fixtures::ex44(2).is_stable_curve());
    let path = DualGraph::from_ids(&[("a", 0), ("b", 0), ("c", 0)], &[("a", "b"), ("b", "c")]).unwrap();
    assert!(!path.is_stable_curve());
    let lone = DualGraph::from_ids(&[("a", 2)], &[]).unwrap();
    assert!(lone.is_stable_curve());
}
