//! The basic inequality, (semi)stability, residuals, enumeration of
//! semistable multidegrees and the degree-reduction procedures.
//!
//! Everything is evaluated after multiplying the basic inequality by
//! `2g - 2 > 0`, so comparisons are exact integer comparisons:
//!
//! ```text
//! (2g-2)(g(Y)-1) + (d - g + 1)(2g(Y) - 2 + |Y ∩ Y^c|)  <=  (2g-2) deg(d|_Y)
//! ```

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec;
use crate::graph::{
    full_mask, lex_subset, nonempty_subset_count, DualGraph, Multidegree, VertexSet,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityStatus {
    Strict,
    Equality,
    Violated,
}

/// Outcome of the basic inequality on one subcurve, with both cleared sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InequalityVerdict {
    pub status: InequalityStatus,
    pub lhs: i64,
    pub rhs: i64,
}

impl InequalityVerdict {
    fn from_sides(lhs: i64, rhs: i64) -> Self {
        let status = match lhs.cmp(&rhs) {
            std::cmp::Ordering::Less => InequalityStatus::Strict,
            std::cmp::Ordering::Equal => InequalityStatus::Equality,
            std::cmp::Ordering::Greater => InequalityStatus::Violated,
        };
        InequalityVerdict { status, lhs, rhs }
    }
}

/// Precomputed per-graph quantities for repeated subset evaluations.
struct Sweep<'a> {
    graph: &'a DualGraph,
    genus: i64,
    n: usize,
}

impl<'a> Sweep<'a> {
    fn new(graph: &'a DualGraph) -> Result<Self> {
        let genus = graph.genus();
        if genus < 2 {
            return Err(Error::UnsupportedGenus(genus));
        }
        Ok(Sweep {
            graph,
            genus,
            n: graph.num_vertices(),
        })
    }

    /// Cleared sides for subcurve `mask`, given the degree on it and the
    /// total degree.
    fn sides(&self, mask: u64, degree_on: i64, total: i64) -> (i64, i64) {
        let denom = 2 * self.genus - 2;
        let gy = self.graph.subcurve_genus_mask(mask);
        let cut = self.graph.cut_size_mask(mask);
        let lhs = denom * (gy - 1) + (total - self.genus + 1) * (2 * gy - 2 + cut);
        (lhs, denom * degree_on)
    }

    fn verdict(&self, d: &Multidegree, total: i64, mask: u64) -> InequalityVerdict {
        let (lhs, rhs) = self.sides(mask, d.degree_on_mask(mask), total);
        InequalityVerdict::from_sides(lhs, rhs)
    }

    fn subsets(&self) -> usize {
        nonempty_subset_count(self.n)
    }

    fn subset(&self, rank: usize) -> u64 {
        lex_subset(self.n, rank)
    }
}

fn theorem_sweep<'a>(graph: &'a DualGraph, d: &'a Multidegree) -> Result<Sweep<'a>> {
    graph.check_multidegree(d)?;
    graph.check_subset_sweep()?;
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    Sweep::new(graph)
}

/// Evaluates the basic inequality for the subcurve `y`.
pub fn basic_inequality(
    graph: &DualGraph,
    d: &Multidegree,
    y: &VertexSet,
) -> Result<InequalityVerdict> {
    graph.check_multidegree(d)?;
    graph.check_subcurve(y)?;
    let sweep = Sweep::new(graph)?;
    Ok(sweep.verdict(d, d.total(), y.bits()))
}

/// Lexicographically least subcurve violating the basic inequality, or
/// `None` when `d` is semistable.
pub fn semistability_witness(graph: &DualGraph, d: &Multidegree) -> Result<Option<VertexSet>> {
    let sweep = theorem_sweep(graph, d)?;
    let total = d.total();
    let hit = exec::find_first(sweep.subsets(), |r| {
        sweep.verdict(d, total, sweep.subset(r)).status == InequalityStatus::Violated
    });
    Ok(hit.map(|r| VertexSet::from_bits(sweep.subset(r))))
}

pub fn is_semistable(graph: &DualGraph, d: &Multidegree) -> Result<bool> {
    Ok(semistability_witness(graph, d)?.is_none())
}

/// Lexicographically least proper subcurve on which the inequality is not
/// strict, or `None` when `d` is stable.
pub fn stability_witness(graph: &DualGraph, d: &Multidegree) -> Result<Option<VertexSet>> {
    let sweep = theorem_sweep(graph, d)?;
    let total = d.total();
    let full = full_mask(sweep.n);
    let hit = exec::find_first(sweep.subsets(), |r| {
        let mask = sweep.subset(r);
        mask != full && sweep.verdict(d, total, mask).status != InequalityStatus::Strict
    });
    Ok(hit.map(|r| VertexSet::from_bits(sweep.subset(r))))
}

/// Strict inequality on every proper nonempty subcurve.
pub fn is_stable(graph: &DualGraph, d: &Multidegree) -> Result<bool> {
    Ok(stability_witness(graph, d)?.is_none())
}

/// Canonical multidegree minus `d`.
pub fn residual(graph: &DualGraph, d: &Multidegree) -> Result<Multidegree> {
    graph.check_multidegree(d)?;
    Ok(&graph.canonical_multidegree() - d)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    -((-a).div_euclid(b))
}

/// Per-vertex bounds `(lo, hi)` satisfied by every semistable multidegree of
/// the given total: the inequality on `{v}` bounds `d_v` below and the
/// inequality on the complement of `{v}` bounds it above.
pub fn semistable_bounds(graph: &DualGraph, total: i64) -> Result<Vec<(i64, i64)>> {
    graph.check_subset_sweep()?;
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let sweep = Sweep::new(graph)?;
    let denom = 2 * sweep.genus - 2;
    let n = sweep.n;
    if n == 1 {
        return Ok(vec![(total, total)]);
    }
    let full = full_mask(n);
    Ok((0..n)
        .map(|v| {
            let single = 1u64 << v;
            let (lhs, _) = sweep.sides(single, 0, total);
            let lo = ceil_div(lhs, denom);
            let (lhs_rest, _) = sweep.sides(full & !single, 0, total);
            let hi = total - ceil_div(lhs_rest, denom);
            (lo, hi)
        })
        .collect())
}

/// Every integer vector with `lo_v <= x_v <= hi_v` summing to `total`, in
/// lexicographic order.
pub fn box_vectors(bounds: &[(i64, i64)], total: i64) -> Vec<Multidegree> {
    fn rec(
        bounds: &[(i64, i64)],
        suffix: &[(i64, i64)],
        remaining: i64,
        prefix: &mut Vec<i64>,
        out: &mut Vec<Multidegree>,
    ) {
        let i = prefix.len();
        if i == bounds.len() {
            if remaining == 0 {
                out.push(Multidegree::new(prefix.clone()));
            }
            return;
        }
        let (lo, hi) = bounds[i];
        let (rest_lo, rest_hi) = suffix[i + 1];
        let from = lo.max(remaining - rest_hi);
        let to = hi.min(remaining - rest_lo);
        for x in from..=to {
            prefix.push(x);
            rec(bounds, suffix, remaining - x, prefix, out);
            prefix.pop();
        }
    }
    if bounds.iter().any(|&(lo, hi)| lo > hi) {
        return Vec::new();
    }
    // suffix[i] = summed bounds of coordinates i..
    let mut suffix = vec![(0i64, 0i64); bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix[i] = (suffix[i + 1].0 + bounds[i].0, suffix[i + 1].1 + bounds[i].1);
    }
    let mut out = Vec::new();
    rec(bounds, &suffix, total, &mut Vec::new(), &mut out);
    out
}

/// All semistable multidegrees of the given total degree, lexicographic.
pub fn enumerate_semistable(graph: &DualGraph, total: i64) -> Result<Vec<Multidegree>> {
    let bounds = semistable_bounds(graph, total)?;
    let sweep = Sweep::new(graph)?;
    let candidates = box_vectors(&bounds, total);
    let subsets = sweep.subsets();
    Ok(exec::filter_slice(candidates, |d| {
        (0..subsets).all(|r| {
            sweep.verdict(d, total, sweep.subset(r)).status != InequalityStatus::Violated
        })
    }))
}

/// `g - (r + 1)(g - d + r)`.
pub fn brill_noether_number(genus: i64, r: i64, d: i64) -> i64 {
    genus - (r + 1) * (genus - d + r)
}

/// For `d` of total degree above the genus with `g(Y) <= deg(d|_Y)` on every
/// subcurve, the least vertex `v` such that `g(Y) < deg(d|_Y)` for every
/// subcurve containing `v`.
pub fn vertex_with_strict_slack(graph: &DualGraph, d: &Multidegree) -> Result<usize> {
    graph.check_multidegree(d)?;
    graph.check_subset_sweep()?;
    let n = graph.num_vertices();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let genus = graph.genus();
    if d.total() <= genus {
        return Err(Error::Precondition(format!(
            "total degree {} must exceed the genus {genus}",
            d.total()
        )));
    }
    let subsets = nonempty_subset_count(n);
    let slack = |mask: u64| d.degree_on_mask(mask) - graph.subcurve_genus_mask(mask);
    if let Some(r) = exec::find_first(subsets, |r| slack(lex_subset(n, r)) < 0) {
        let y = VertexSet::from_bits(lex_subset(n, r));
        return Err(Error::Precondition(format!(
            "subcurve {} has genus {} above its degree {}",
            graph.format_set(&y),
            graph.subcurve_genus_mask(y.bits()),
            d.degree_on(&y)
        )));
    }
    // Subcurves with zero slack; v qualifies iff it avoids all of them.
    let tight: Vec<u64> =
        exec::filter_map(subsets, |r| Some(lex_subset(n, r)).filter(|&m| slack(m) == 0));
    let covered = tight.iter().fold(0u64, |acc, m| acc | m);
    (0..n)
        .find(|&v| covered >> v & 1 == 0)
        .ok_or_else(|| Error::Precondition("every vertex lies on a tight subcurve".into()))
}

/// Target total degree of a reduction, relative to the genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReductionTarget {
    Genus,
    GenusMinusOne,
    GenusMinusTwo,
}

impl ReductionTarget {
    pub fn degree(self, genus: i64) -> i64 {
        match self {
            ReductionTarget::Genus => genus,
            ReductionTarget::GenusMinusOne => genus - 1,
            ReductionTarget::GenusMinusTwo => genus - 2,
        }
    }
}

impl fmt::Display for ReductionTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReductionTarget::Genus => "g",
            ReductionTarget::GenusMinusOne => "g-1",
            ReductionTarget::GenusMinusTwo => "g-2",
        })
    }
}

impl FromStr for ReductionTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "g" => Ok(ReductionTarget::Genus),
            "g-1" => Ok(ReductionTarget::GenusMinusOne),
            "g-2" => Ok(ReductionTarget::GenusMinusTwo),
            other => Err(Error::Parse {
                location: "--target".into(),
                message: format!("expected one of g, g-1, g-2; got `{other}`"),
            }),
        }
    }
}

/// Effective `e` with `d - e` semistable of total degree `g` or `g - 1`.
///
/// Repeatedly removes a vertex with strict slack until the total reaches the
/// genus; for `g - 1` one more (lowest-index) vertex is removed.
pub fn reduce_down(
    graph: &DualGraph,
    d: &Multidegree,
    target: ReductionTarget,
) -> Result<Multidegree> {
    let genus = graph.genus();
    if target == ReductionTarget::GenusMinusTwo {
        return Err(Error::Precondition(
            "reduce_down targets g or g-1 only".into(),
        ));
    }
    if let Some(y) = semistability_witness(graph, d)? {
        return Err(Error::Precondition(format!(
            "multidegree {d} is not semistable, violated on {}",
            graph.format_set(&y)
        )));
    }
    let goal = target.degree(genus);
    if d.total() < goal {
        return Err(Error::Precondition(format!(
            "total degree {} is below the target {goal}",
            d.total()
        )));
    }
    let n = graph.num_vertices();
    let mut e = Multidegree::zero(n);
    while d.total() - e.total() > genus {
        let v = vertex_with_strict_slack(graph, &(d - &e))?;
        e = e.plus_vertex(v);
    }
    if d.total() - e.total() > goal {
        e = e.plus_vertex(0);
    }
    Ok(e)
}

/// Effective `e` with `d + e` semistable of total degree `g - 2` or `g - 1`,
/// obtained by reducing the residual.
pub fn reduce_up(
    graph: &DualGraph,
    d: &Multidegree,
    target: ReductionTarget,
) -> Result<Multidegree> {
    let genus = graph.genus();
    let dual_target = match target {
        ReductionTarget::GenusMinusTwo => ReductionTarget::Genus,
        ReductionTarget::GenusMinusOne => ReductionTarget::GenusMinusOne,
        ReductionTarget::Genus => {
            return Err(Error::Precondition("reduce_up targets g-2 or g-1 only".into()))
        }
    };
    graph.check_multidegree(d)?;
    let goal = target.degree(genus);
    if d.total() > goal {
        return Err(Error::Precondition(format!(
            "total degree {} is above the target {goal}",
            d.total()
        )));
    }
    if let Some(y) = semistability_witness(graph, d)? {
        return Err(Error::Precondition(format!(
            "multidegree {d} is not semistable, violated on {}",
            graph.format_set(&y)
        )));
    }
    reduce_down(graph, &residual(graph, d)?, dual_target)
}

/// Every subcurve on which `d` violates the inequality, lexicographic.
pub fn violated_subcurves(graph: &DualGraph, d: &Multidegree) -> Result<Vec<VertexSet>> {
    let sweep = theorem_sweep(graph, d)?;
    let total = d.total();
    Ok(exec::filter_map(sweep.subsets(), |r| {
        let mask = sweep.subset(r);
        (sweep.verdict(d, total, mask).status == InequalityStatus::Violated)
            .then(|| VertexSet::from_bits(mask))
    }))
}
