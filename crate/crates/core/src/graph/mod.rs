//! Undirected simple graphs on the vertex set `{0, .., n-1}`.
//!
//! A [`Graph`] is immutable once built: no self-loops, no parallel edges,
//! adjacency lists sorted. Vertex labels are an optional overlay and never
//! affect structure.

pub mod dist;
pub mod hamilton;
pub mod io;
pub mod iso;

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate edges and
    /// swapped orientations are normalized away; self-loops and out-of-range
    /// endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for id in [u, v] {
                if id >= n {
                    return Err(Error::VertexOutOfRange { id, order: n });
                }
            }
            set.insert((u.min(v), u.max(v)));
        }
        let mut adj = vec![Vec::new(); n];
        for (u, v) in set {
            adj[u].push(v);
            adj[v].push(u);
        }
        // BTreeSet iteration inserts neighbors in increasing order of the
        // second endpoint only; sort each list to restore the invariant.
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Attaches one label per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParams(format!(
                "expected {} labels, got {}",
                self.n(),
                labels.len()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    /// The label if one is set, the vertex index otherwise.
    pub fn display_label(&self, v: usize) -> String {
        match self.label(v) {
            Some(s) => s.to_string(),
            None => v.to_string(),
        }
    }

    pub fn has_labels(&self) -> bool {
        self.labels.is_some()
    }

    /// Number of degree-1 vertices (the leaves of a tree).
    pub fn leaf_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.degree(v) == 1).count()
    }

    pub fn is_regular(&self) -> bool {
        self.n() == 0 || (0..self.n()).all(|v| self.degree(v) == self.degree(0))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges).expect("complement edges are valid");
        match &self.labels {
            Some(l) => g.with_labels(l.clone()).expect("label count unchanged"),
            None => g,
        }
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Articulation points of a connected graph, sorted ascending.
    pub fn cut_vertices(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::DisconnectedInput("cut_vertices"));
        }
        let n = self.n();
        if n == 0 {
            return Ok(Vec::new());
        }
        // Iterative Tarjan lowpoint DFS; the explicit stack keeps arbitrarily
        // long paths from overflowing the call stack.
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut parent = vec![usize::MAX; n];
        let mut child_count = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // Stack entries are (vertex, index of next neighbor to explore).
        let mut stack = vec![(0usize, 0usize)];
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        while let Some(&(v, next)) = stack.last() {
            if next < self.adj[v].len() {
                stack.last_mut().expect("stack non-empty").1 += 1;
                let w = self.adj[v][next];
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    child_count[v] += 1;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, 0));
                } else if w != parent[v] {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if parent[p] != usize::MAX && low[v] >= disc[p] {
                        is_cut[p] = true;
                    }
                }
            }
        }
        if child_count[0] > 1 {
            is_cut[0] = true;
        }
        Ok((0..n).filter(|&v| is_cut[v]).collect())
    }

    /// Subgraph induced by `vertices` (deduplicated, sorted). Returns the new
    /// graph together with the map from new index to original id.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        for &v in &keep {
            if v >= self.n() {
                return Err(Error::VertexOutOfRange {
                    id: v,
                    order: self.n(),
                });
            }
        }
        let back: Vec<usize> = keep.iter().copied().collect();
        let index: BTreeMap<usize, usize> = back.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (&v, &i) in &index {
            for &w in &self.adj[v] {
                if let Some(&j) = index.get(&w) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let mut g = Graph::build(back.len(), &edges).expect("induced edges are valid");
        if let Some(labels) = &self.labels {
            g = g
                .with_labels(back.iter().map(|&v| labels[v].clone()).collect())
                .expect("label count matches");
        }
        Ok((g, back))
    }

    /// Disjoint union; vertex ids of `parts[i]` are shifted by the total
    /// order of the preceding parts. Labels are kept only if every part has
    /// them.
    pub fn disjoint_union(parts: &[&Graph]) -> Graph {
        let n: usize = parts.iter().map(|g| g.n()).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in parts {
            for (u, v) in g.edges() {
                edges.push((u + offset, v + offset));
            }
            offset += g.n();
        }
        let union = Graph::build(n, &edges).expect("shifted edges are valid");
        if !parts.is_empty() && parts.iter().all(|g| g.has_labels()) {
            let labels = parts
                .iter()
                .flat_map(|g| (0..g.n()).map(|v| g.display_label(v)))
                .collect();
            union.with_labels(labels).expect("label count matches")
        } else {
            union
        }
    }

    /// Per-component structure summary.
    pub fn component_profile(&self) -> Vec<ComponentProfile> {
        self.connected_components()
            .into_iter()
            .map(|vertices| {
                let degrees: Vec<usize> = vertices.iter().map(|&v| self.degree(v)).collect();
                let is_regular = degrees.windows(2).all(|w| w[0] == w[1]);
                ComponentProfile {
                    order: vertices.len(),
                    is_regular,
                    regular_degree: if is_regular {
                        degrees.first().copied()
                    } else {
                        None
                    },
                    is_bipartite: self.component_is_bipartite(&vertices),
                    vertices,
                }
            })
            .collect()
    }

    fn component_is_bipartite(&self, vertices: &[usize]) -> bool {
        let mut color: BTreeMap<usize, bool> = BTreeMap::new();
        let start = vertices[0];
        color.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[&u];
            for &w in &self.adj[u] {
                match color.get(&w) {
                    Some(&cw) if cw == cu => return false,
                    Some(_) => {}
                    None => {
                        color.insert(w, !cu);
                        queue.push_back(w);
                    }
                }
            }
        }
        true
    }

    /// Partition of the vertices into twin equivalence classes. Two distinct
    /// vertices are equivalent when their open neighborhoods agree (false
    /// twins) or their closed neighborhoods agree (true twins).
    pub fn twin_partition(&self) -> TwinPartition {
        let n = self.n();
        let mut by_closed: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        let mut by_open: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            let open = self.adj[v].clone();
            let mut closed = open.clone();
            closed.push(v);
            closed.sort_unstable();
            by_closed.entry(closed).or_default().push(v);
            by_open.entry(open).or_default().push(v);
        }
        let mut kind = vec![TwinClassKind::Singleton; n];
        let mut classes: Vec<TwinClass> = Vec::new();
        let mut in_class = vec![false; n];
        for group in by_closed.into_values().chain(by_open.into_values()) {
            if group.len() < 2 {
                continue;
            }
            // Distinct vertices cannot be both true and false twins (one
            // relation puts each vertex inside the shared set, the other
            // keeps it out), so the two groupings never overlap.
            let k = if self.has_edge(group[0], group[1]) {
                TwinClassKind::TrueTwin
            } else {
                TwinClassKind::FalseTwin
            };
            for &v in &group {
                assert!(!in_class[v], "vertex {v} in two twin classes");
                in_class[v] = true;
                kind[v] = k;
            }
            classes.push(TwinClass {
                vertices: group,
                kind: k,
            });
        }
        for (v, &claimed) in in_class.iter().enumerate() {
            if !claimed {
                classes.push(TwinClass {
                    vertices: vec![v],
                    kind: TwinClassKind::Singleton,
                });
            }
        }
        classes.sort_by_key(|c| c.vertices[0]);
        TwinPartition { classes }
    }

    /// True when some pair of adjacent vertices shares a closed neighborhood.
    pub fn has_true_twins(&self) -> bool {
        self.twin_partition()
            .classes
            .iter()
            .any(|c| c.kind == TwinClassKind::TrueTwin)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentProfile {
    pub vertices: Vec<usize>,
    pub order: usize,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
    pub is_bipartite: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinClassKind {
    /// Type 1: the class is a single vertex.
    Singleton,
    /// Type 2: a clique of vertices with a common closed neighborhood.
    TrueTwin,
    /// Type 3: an independent set of vertices with a common open neighborhood.
    FalseTwin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinClass {
    pub vertices: Vec<usize>,
    pub kind: TwinClassKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<TwinClass>,
}

impl TwinPartition {
    fn vertex_total(&self, kind: TwinClassKind) -> usize {
        self.classes
            .iter()
            .filter(|c| c.kind == kind)
            .map(|c| c.vertices.len())
            .sum()
    }

    /// Vertices lying in singleton classes.
    pub fn m1(&self) -> usize {
        self.vertex_total(TwinClassKind::Singleton)
    }

    /// Vertices lying in true-twin classes.
    pub fn m2(&self) -> usize {
        self.vertex_total(TwinClassKind::TrueTwin)
    }

    /// Vertices lying in false-twin classes.
    pub fn m3(&self) -> usize {
        self.vertex_total(TwinClassKind::FalseTwin)
    }
}
