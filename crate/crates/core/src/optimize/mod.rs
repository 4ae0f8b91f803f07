//! The strong-resolution invariants, computed exactly.
//!
//! A weighting g of the vertices strongly resolves a pair x, y when the
//! vertices lying on maximal shortest paths through x or y (the set
//! `S{x,y}`) carry total weight at least 1. [`sdim_f`] minimizes the total
//! weight over all such g; [`sdim`] is the classic 0/1 version, which
//! reduces to a minimum vertex cover of the strong resolving graph;
//! [`sl_f`] restricts each pair's support to the closed neighborhoods of
//! the pair. Everything is exact: values are `BigRational` and the integer
//! invariants come from exhaustive search with pruning.

pub mod lp;
pub mod matching;
pub mod rational;
pub mod vcover;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::dist::all_pairs_distances;
use crate::graph::{ComponentProfile, Graph};
use crate::resolving::{pair_constraints, strong_resolving_graph, ConstraintKind};
use lp::{extreme_on_face, solve_covering, LpProblem, WeightFunction};
use rational::{rat, rat_int, rat_to_string, Rational};

/// An optimal value together with a weighting that attains it.
#[derive(Clone, Debug)]
pub struct FractionalSolution {
    pub value: Rational,
    pub witness: WeightFunction,
}

fn require_connected(op: &'static str, g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(Error::OrderTooSmall {
            op,
            min: 2,
            actual: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput(op));
    }
    Ok(())
}

fn solve_pair_lp(g: &Graph, kind: ConstraintKind) -> Result<FractionalSolution> {
    let supports = pair_constraints(g, kind)?
        .into_iter()
        .map(|c| c.support)
        .collect();
    let problem = LpProblem::new(g.n(), supports)?;
    let sol = solve_covering(&problem);
    Ok(FractionalSolution {
        value: sol.value,
        witness: sol.witness,
    })
}

/// Fractional strong metric dimension: the least total weight of a
/// vertex weighting that puts at least 1 on `S{x,y}` for every pair.
/// Ground truth route, one constraint per vertex pair.
pub fn sdim_f(g: &Graph) -> Result<FractionalSolution> {
    require_connected("sdim_f", g)?;
    solve_pair_lp(g, ConstraintKind::S)
}

/// Same value via the strong resolving graph: mutually maximally distant
/// pairs have `S{x,y} = {x,y}`, and those two-element supports subsume all
/// the others, so only the edges of the strong resolving graph are used.
/// This is the fractional vertex cover LP of that graph.
pub fn sdim_f_reduced(g: &Graph) -> Result<FractionalSolution> {
    require_connected("sdim_f_reduced", g)?;
    let sr = strong_resolving_graph(g)?;
    let supports: Vec<Vec<usize>> = sr
        .edges_base()
        .into_iter()
        .map(|(u, v)| vec![u, v])
        .collect();
    let problem = LpProblem::new(g.n(), supports)?;
    let sol = solve_covering(&problem);
    Ok(FractionalSolution {
        value: sol.value,
        witness: sol.witness,
    })
}

/// Like [`sdim_f`], but each pair's support is cut down to the closed
/// neighborhoods of the pair: `SL{x,y} = (N[x] ∪ N[y]) ∩ S{x,y}`. Always
/// at least [`sdim_f`], with equality whenever the diameter is at most 2.
pub fn sl_f(g: &Graph) -> Result<FractionalSolution> {
    require_connected("sl_f", g)?;
    solve_pair_lp(g, ConstraintKind::Sl)
}

/// Strong metric dimension: the least size of a vertex set hitting every
/// `S{x,y}`, equal to the vertex cover number of the strong resolving
/// graph.
pub fn sdim(g: &Graph) -> Result<usize> {
    sdim_with_limit(g, vcover::DEFAULT_VCOVER_LIMIT)
}

/// [`sdim`] with an explicit cap on the boundary size the exact cover
/// search will accept.
pub fn sdim_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    require_connected("sdim", g)?;
    let sr = strong_resolving_graph(g)?;
    vcover::vertex_cover_number_with_limit(sr.graph(), limit)
}

/// Smallest combined weight the given vertices can carry over all optimal
/// weightings. Zero means some optimal weighting avoids them entirely.
pub fn min_weight_on_optimal_face(g: &Graph, vertices: &[usize]) -> Result<Rational> {
    weight_on_optimal_face(g, vertices, false)
}

/// Largest combined weight the given vertices can carry over all optimal
/// weightings.
pub fn max_weight_on_optimal_face(g: &Graph, vertices: &[usize]) -> Result<Rational> {
    weight_on_optimal_face(g, vertices, true)
}

fn weight_on_optimal_face(g: &Graph, vertices: &[usize], maximize: bool) -> Result<Rational> {
    require_connected("weight_on_optimal_face", g)?;
    for &v in vertices {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                id: v,
                order: g.n(),
            });
        }
    }
    let supports = pair_constraints(g, ConstraintKind::S)?
        .into_iter()
        .map(|c| c.support)
        .collect();
    let problem = LpProblem::new(g.n(), supports)?;
    let opt = solve_covering(&problem);
    let mut objective = vec![Rational::zero(); g.n()];
    for &v in vertices {
        objective[v] = Rational::one();
    }
    extreme_on_face(&problem, &opt.value, &objective, maximize)
}

use num_traits::{One, Zero};

/// Everything the library knows about one graph's strong resolution,
/// cross-checked internally before being handed out.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub order: usize,
    pub size: usize,
    pub diameter: u32,
    pub leaf_count: usize,
    pub boundary: Vec<usize>,
    pub sdim_f: Rational,
    pub sl_f: Rational,
    pub sdim: usize,
    pub sr_matching_number: usize,
    pub sr_components: Vec<ComponentProfile>,
    pub witness: WeightFunction,
}

pub fn invariant_report(g: &Graph) -> Result<InvariantReport> {
    invariant_report_with_limit(g, vcover::DEFAULT_VCOVER_LIMIT)
}

pub fn invariant_report_with_limit(g: &Graph, limit: usize) -> Result<InvariantReport> {
    require_connected("invariant_report", g)?;
    let d = all_pairs_distances(g);
    let diameter = d.diameter().expect("connected graph has a diameter");
    let sr = strong_resolving_graph(g)?;
    let frac = sdim_f(g)?;
    let loc = sl_f(g)?;
    let dim = vcover::vertex_cover_number_with_limit(sr.graph(), limit)?;
    let nu = matching::matching_number(sr.graph());
    let boundary_size = sr.boundary().len();

    // The sandwich every graph must satisfy; a violation is a library bug,
    // not a property of the input.
    assert!(frac.value >= rat_int(1));
    assert!(frac.value >= rat_int(nu as i64));
    assert!(frac.value <= rat(boundary_size as i64, 2));
    assert!(frac.value >= rat(dim as i64, 2));
    assert!(frac.value <= rat_int(dim as i64));
    assert!(loc.value >= frac.value);
    if diameter <= 2 {
        assert_eq!(loc.value, frac.value);
    }

    Ok(InvariantReport {
        order: g.n(),
        size: g.edge_count(),
        diameter,
        leaf_count: g.leaf_count(),
        boundary: sr.boundary().to_vec(),
        sdim_f: frac.value,
        sl_f: loc.value,
        sdim: dim,
        sr_matching_number: nu,
        sr_components: sr.graph().component_profile(),
        witness: frac.witness,
    })
}

impl InvariantReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "order": self.order,
            "size": self.size,
            "diameter": self.diameter,
            "leaf_count": self.leaf_count,
            "boundary": self.boundary,
            "boundary_size": self.boundary.len(),
            "sdim_f": rat_to_string(&self.sdim_f),
            "sl_f": rat_to_string(&self.sl_f),
            "sdim": self.sdim,
            "sr_matching_number": self.sr_matching_number,
            "sr_components": self.sr_components.iter().map(|c| json!({
                "order": c.order,
                "regular_degree": c.regular_degree,
                "is_bipartite": c.is_bipartite,
            })).collect::<Vec<_>>(),
            "witness": self.witness.values().iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }
}
