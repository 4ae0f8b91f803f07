//! Strong resolving structure of a connected graph.
//!
//! For distinct vertices `x, y`, the set `S{x,y}` collects every vertex `z`
//! such that `x` lies on some shortest `y`-`z` path or `y` lies on some
//! shortest `x`-`z` path. A vertex `u` is maximally distant from `v` when no
//! neighbor of `u` is farther from `v`; when the relation holds both ways the
//! pair is mutually maximally distant (MMD) and `S{x,y} = {x,y}`. The strong
//! resolving graph `G_SR` has the MMD pairs as edges, on the vertices that
//! appear in at least one such pair (the boundary of `G`).

use crate::error::{Error, Result};
use crate::graph::dist::{all_pairs_distances, DistanceMatrix};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    /// Support is the full set `S{x,y}`.
    S,
    /// Support is `SL{x,y} = (N[x] ∪ N[y]) ∩ S{x,y}`.
    Sl,
}

/// One covering constraint `sum over support >= 1`, tagged with the vertex
/// pair that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairConstraint {
    pub pair: (usize, usize),
    pub support: Vec<usize>,
    pub kind: ConstraintKind,
}

fn check_pair(op: &'static str, d: &DistanceMatrix, x: usize, y: usize) -> Result<()> {
    let n = d.n();
    for id in [x, y] {
        if id >= n {
            return Err(Error::VertexOutOfRange { id, order: n });
        }
    }
    if x == y {
        return Err(Error::SameVertex { op, v: x });
    }
    if !d.same_component(x, y) {
        return Err(Error::DifferentComponents(x, y));
    }
    Ok(())
}

/// `S{x,y}` from a precomputed distance matrix, sorted ascending.
pub fn s_set_from(d: &DistanceMatrix, x: usize, y: usize) -> Result<Vec<usize>> {
    check_pair("s_set", d, x, y)?;
    let dxy = d.get(x, y).expect("same component");
    let mut out = Vec::new();
    for z in 0..d.n() {
        let (Some(dxz), Some(dyz)) = (d.get(x, z), d.get(y, z)) else {
            continue;
        };
        if dxy + dxz == dyz || dxy + dyz == dxz {
            out.push(z);
        }
    }
    Ok(out)
}

pub fn s_set(g: &Graph, x: usize, y: usize) -> Result<Vec<usize>> {
    s_set_from(&all_pairs_distances(g), x, y)
}

/// `SL{x,y}`: the part of `S{x,y}` inside the union of closed neighborhoods.
pub fn sl_set_from(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Result<Vec<usize>> {
    let s = s_set_from(d, x, y)?;
    Ok(s.into_iter()
        .filter(|&z| z == x || z == y || g.has_edge(x, z) || g.has_edge(y, z))
        .collect())
}

pub fn sl_set(g: &Graph, x: usize, y: usize) -> Result<Vec<usize>> {
    sl_set_from(g, &all_pairs_distances(g), x, y)
}

/// Is `u` maximally distant from `v`: `d(u,v) >= d(w,v)` for every neighbor
/// `w` of `u`.
pub fn is_maximally_distant_from(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
) -> Result<bool> {
    check_pair("is_maximally_distant_from", d, u, v)?;
    let duv = d.get(u, v).expect("same component");
    Ok(g.neighbors(u)
        .iter()
        .all(|&w| d.get(w, v).expect("same component") <= duv))
}

/// Mutually maximally distant: maximally distant in both directions.
pub fn is_mmd(g: &Graph, d: &DistanceMatrix, x: usize, y: usize) -> Result<bool> {
    Ok(is_maximally_distant_from(g, d, x, y)? && is_maximally_distant_from(g, d, y, x)?)
}

/// The strong resolving graph of `g`, with the boundary kept as a map back
/// to the vertices of `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongResolvingGraph {
    graph: Graph,
    boundary: Vec<usize>,
}

impl StrongResolvingGraph {
    /// The re-indexed graph on the boundary vertices.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Boundary vertices of the base graph, sorted ascending; `boundary()[i]`
    /// is the base id of re-indexed vertex `i`.
    pub fn boundary(&self) -> &[usize] {
        &self.boundary
    }

    pub fn base_id(&self, i: usize) -> usize {
        self.boundary[i]
    }

    pub fn index_of(&self, base: usize) -> Option<usize> {
        self.boundary.binary_search(&base).ok()
    }

    /// Edges in base-graph ids, sorted.
    pub fn edges_base(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .into_iter()
            .map(|(u, v)| (self.boundary[u], self.boundary[v]))
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "boundary": self.boundary,
            "edges": self.edges_base(),
        })
    }

    pub fn to_dot(&self) -> String {
        crate::graph::io::render_dot(&self.graph)
    }
}

/// Builds the strong resolving graph of a connected graph of order >= 2.
/// Every vertex of the result has degree >= 1 by construction.
pub fn strong_resolving_graph(g: &Graph) -> Result<StrongResolvingGraph> {
    if g.n() < 2 {
        return Err(Error::OrderTooSmall {
            op: "strong_resolving_graph",
            min: 2,
            actual: g.n(),
        });
    }
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(Error::DisconnectedInput("strong_resolving_graph"));
    }
    let n = g.n();
    let mut mmd_edges = Vec::new();
    let mut on_boundary = vec![false; n];
    for x in 0..n {
        for y in (x + 1)..n {
            if is_mmd(g, &d, x, y)? {
                mmd_edges.push((x, y));
                on_boundary[x] = true;
                on_boundary[y] = true;
            }
        }
    }
    let boundary: Vec<usize> = (0..n).filter(|&v| on_boundary[v]).collect();
    let index = |v: usize| boundary.binary_search(&v).expect("boundary vertex");
    let edges: Vec<(usize, usize)> = mmd_edges
        .into_iter()
        .map(|(x, y)| (index(x), index(y)))
        .collect();
    let mut graph = Graph::build(boundary.len(), &edges).expect("re-indexed edges are valid");
    if g.has_labels() {
        graph = graph
            .with_labels(boundary.iter().map(|&v| g.display_label(v)).collect())
            .expect("label count matches");
    }
    debug_assert!((0..graph.n()).all(|v| graph.degree(v) >= 1));
    Ok(StrongResolvingGraph { graph, boundary })
}

/// The boundary of `g`: vertices that are mutually maximally distant with at
/// least one other vertex.
pub fn boundary(g: &Graph) -> Result<Vec<usize>> {
    Ok(strong_resolving_graph(g)?.boundary().to_vec())
}

/// The closure `H*` of an arbitrary graph `h`: vertices of `h`, with `x ~ y`
/// whenever `d_h(x, y) >= 2` (cross-component pairs included) or `x` and `y`
/// are true twins in `h`.
pub fn star_closure(h: &Graph) -> Graph {
    let d = all_pairs_distances(h);
    let n = h.n();
    let mut edges = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            let far = match d.get(x, y) {
                None => true,
                Some(dist) => dist >= 2,
            };
            let true_twins = {
                let mut nx: Vec<usize> = h.neighbors(x).to_vec();
                nx.push(x);
                nx.sort_unstable();
                let mut ny: Vec<usize> = h.neighbors(y).to_vec();
                ny.push(y);
                ny.sort_unstable();
                nx == ny
            };
            if far || true_twins {
                edges.push((x, y));
            }
        }
    }
    Graph::build(n, &edges).expect("closure edges are valid")
}

/// Drops isolated vertices, re-indexing the rest.
pub fn drop_isolated(h: &Graph) -> Graph {
    let keep: Vec<usize> = (0..h.n()).filter(|&v| h.degree(v) > 0).collect();
    let (g, _) = h.induced_subgraph(&keep).expect("vertices in range");
    g
}

/// All pairwise covering constraints of `g` (connected, order >= 2): one per
/// unordered vertex pair, with support `S{x,y}` or `SL{x,y}`.
pub fn pair_constraints(g: &Graph, kind: ConstraintKind) -> Result<Vec<PairConstraint>> {
    if g.n() < 2 {
        return Err(Error::OrderTooSmall {
            op: "pair_constraints",
            min: 2,
            actual: g.n(),
        });
    }
    let d = all_pairs_distances(g);
    if !d.is_connected() {
        return Err(Error::DisconnectedInput("pair_constraints"));
    }
    let mut out = Vec::with_capacity(g.n() * (g.n() - 1) / 2);
    for x in 0..g.n() {
        for y in (x + 1)..g.n() {
            let support = match kind {
                ConstraintKind::S => s_set_from(&d, x, y)?,
                ConstraintKind::Sl => sl_set_from(g, &d, x, y)?,
            };
            out.push(PairConstraint {
                pair: (x, y),
                support,
                kind,
            });
        }
    }
    Ok(out)
}
