//! Corona, lexicographic, Cartesian, and direct graph products.
//!
//! The three pairwise products index vertices row-major: `(u, w)` becomes
//! `u * |V(H)| + w`. The corona places the `n` vertices of `G` first, then
//! the `i`-th copy of `H` as a contiguous block; every copy vertex is joined
//! to its attach vertex in `G`. Disconnected factors are accepted everywhere.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    Corona,
    Lexicographic,
    Cartesian,
    Direct,
}

/// Bijection between product vertex ids and their factor coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    kind: ProductKind,
    left_n: usize,
    right_n: usize,
}

/// A product vertex decoded through a [`ProductVertexMap`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductVertex {
    /// A vertex of the left factor itself (corona only).
    Center(usize),
    /// Coordinates `(u, w)`; for the corona this is H-copy `u`, vertex `w`.
    Pair(usize, usize),
}

impl ProductVertexMap {
    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        match self.kind {
            ProductKind::Corona => self.left_n + self.left_n * self.right_n,
            _ => self.left_n * self.right_n,
        }
    }

    /// Id of `(u, w)`: the product vertex for pairwise products, the vertex
    /// `w` in the `u`-th copy of the right factor for the corona.
    pub fn pair_id(&self, u: usize, w: usize) -> usize {
        debug_assert!(u < self.left_n && w < self.right_n);
        match self.kind {
            ProductKind::Corona => self.left_n + u * self.right_n + w,
            _ => u * self.right_n + w,
        }
    }

    /// Id of the left-factor vertex `u` inside a corona; `None` for the
    /// pairwise products, whose vertices all carry coordinates.
    pub fn center_id(&self, u: usize) -> Option<usize> {
        debug_assert!(u < self.left_n);
        match self.kind {
            ProductKind::Corona => Some(u),
            _ => None,
        }
    }

    pub fn vertex(&self, id: usize) -> ProductVertex {
        debug_assert!(id < self.order());
        match self.kind {
            ProductKind::Corona => {
                if id < self.left_n {
                    ProductVertex::Center(id)
                } else {
                    let rest = id - self.left_n;
                    ProductVertex::Pair(rest / self.right_n, rest % self.right_n)
                }
            }
            _ => ProductVertex::Pair(id / self.right_n, id % self.right_n),
        }
    }
}

fn check_factors(op: &'static str, g: &Graph, h: &Graph) -> Result<()> {
    for side in [g, h] {
        if side.n() == 0 {
            return Err(Error::OrderTooSmall {
                op,
                min: 1,
                actual: 0,
            });
        }
    }
    Ok(())
}

fn pair_labels(g: &Graph, h: &Graph) -> Vec<String> {
    let mut labels = Vec::with_capacity(g.n() * h.n());
    for u in 0..g.n() {
        for w in 0..h.n() {
            labels.push(format!("({},{})", g.display_label(u), h.display_label(w)));
        }
    }
    labels
}

fn build_pairwise(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    adjacent: impl Fn(usize, usize, usize, usize) -> bool,
) -> (Graph, ProductVertexMap) {
    let map = ProductVertexMap {
        kind,
        left_n: g.n(),
        right_n: h.n(),
    };
    let mut edges = Vec::new();
    let order = map.order();
    for a in 0..order {
        let ProductVertex::Pair(u1, w1) = map.vertex(a) else {
            unreachable!("pairwise products have no centers");
        };
        for b in (a + 1)..order {
            let ProductVertex::Pair(u2, w2) = map.vertex(b) else {
                unreachable!("pairwise products have no centers");
            };
            if adjacent(u1, w1, u2, w2) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::build(order, &edges)
        .expect("product edges are valid")
        .with_labels(pair_labels(g, h))
        .expect("label count matches");
    (graph, map)
}

/// Corona `G ⊙ H`: one fresh copy of `H` per vertex of `G`, fully joined to
/// that vertex. `|V| = n(1 + m)`, `|E| = |E(G)| + n|E(H)| + nm`.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    check_factors("corona", g, h)?;
    let map = ProductVertexMap {
        kind: ProductKind::Corona,
        left_n: g.n(),
        right_n: h.n(),
    };
    let mut edges = g.edges();
    for u in 0..g.n() {
        for (a, b) in h.edges() {
            edges.push((map.pair_id(u, a), map.pair_id(u, b)));
        }
        for w in 0..h.n() {
            edges.push((u, map.pair_id(u, w)));
        }
    }
    let mut labels: Vec<String> = (0..g.n()).map(|u| g.display_label(u)).collect();
    for u in 0..g.n() {
        for w in 0..h.n() {
            labels.push(format!("{}:{}", g.display_label(u), h.display_label(w)));
        }
    }
    let graph = Graph::build(map.order(), &edges)
        .expect("corona edges are valid")
        .with_labels(labels)
        .expect("label count matches");
    Ok((graph, map))
}

/// Lexicographic product `G[H]`: `(u1,w1) ~ (u2,w2)` iff `u1 ~ u2`, or
/// `u1 = u2` and `w1 ~ w2`.
pub fn lexicographic(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    check_factors("lexicographic", g, h)?;
    Ok(build_pairwise(
        ProductKind::Lexicographic,
        g,
        h,
        |u1, w1, u2, w2| g.has_edge(u1, u2) || (u1 == u2 && h.has_edge(w1, w2)),
    ))
}

/// Cartesian product `G □ H`: move along one coordinate at a time.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    check_factors("cartesian", g, h)?;
    Ok(build_pairwise(
        ProductKind::Cartesian,
        g,
        h,
        |u1, w1, u2, w2| (u1 == u2 && h.has_edge(w1, w2)) || (w1 == w2 && g.has_edge(u1, u2)),
    ))
}

/// Direct (tensor) product `G × H`: move along both coordinates at once.
pub fn direct(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap)> {
    check_factors("direct", g, h)?;
    Ok(build_pairwise(
        ProductKind::Direct,
        g,
        h,
        |u1, w1, u2, w2| g.has_edge(u1, u2) && h.has_edge(w1, w2),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::dist::all_pairs_distances;
    use crate::graph::iso::is_isomorphic;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).unwrap()
    }

    #[test]
    fn counts_match_the_product_formulas() {
        let gs = [
            path(3),
            cycle(4),
            complete(4),
            Graph::build(3, &[(0, 1)]).unwrap(),
        ];
        let hs = [path(2), cycle(3), Graph::build(2, &[]).unwrap()];
        for g in &gs {
            for h in &hs {
                let (n, m) = (g.n(), h.n());
                let (eg, eh) = (g.edge_count(), h.edge_count());
                let (c, _) = corona(g, h).unwrap();
                assert_eq!(c.n(), n + n * m);
                assert_eq!(c.edge_count(), eg + n * eh + n * m);
                let (l, _) = lexicographic(g, h).unwrap();
                assert_eq!(l.n(), n * m);
                assert_eq!(l.edge_count(), eg * m * m + n * eh);
                let (ca, _) = cartesian(g, h).unwrap();
                assert_eq!(ca.n(), n * m);
                assert_eq!(ca.edge_count(), n * eh + m * eg);
                let (d, _) = direct(g, h).unwrap();
                assert_eq!(d.n(), n * m);
                assert_eq!(d.edge_count(), 2 * eg * eh);
            }
        }
    }

    #[test]
    fn empty_factors_are_rejected() {
        let empty = Graph::build(0, &[]).unwrap();
        let k1 = Graph::build(1, &[]).unwrap();
        for f in [corona, lexicographic, cartesian, direct] {
            assert!(matches!(f(&empty, &k1), Err(Error::OrderTooSmall { .. })));
            assert!(matches!(f(&k1, &empty), Err(Error::OrderTooSmall { .. })));
        }
    }

    #[test]
    fn vertex_map_round_trips() {
        let (g, map) = corona(&path(3), &cycle(3)).unwrap();
        assert_eq!(g.n(), map.order());
        assert_eq!(map.vertex(1), ProductVertex::Center(1));
        let id = map.pair_id(2, 1);
        assert_eq!(map.vertex(id), ProductVertex::Pair(2, 1));
        assert_eq!(map.center_id(0), Some(0));

        let (g, map) = cartesian(&path(3), &path(2)).unwrap();
        assert_eq!(g.n(), map.order());
        assert_eq!(map.center_id(0), None);
        for u in 0..3 {
            for w in 0..2 {
                assert_eq!(map.vertex(map.pair_id(u, w)), ProductVertex::Pair(u, w));
            }
        }
    }

    #[test]
    fn corona_attaches_each_copy_to_its_center() {
        let (g, map) = corona(&path(2), &complete(2)).unwrap();
        for u in 0..2 {
            for w in 0..2 {
                assert!(g.has_edge(u, map.pair_id(u, w)));
                let other = 1 - u;
                assert!(!g.has_edge(other, map.pair_id(u, w)));
            }
        }
        assert_eq!(g.display_label(map.pair_id(1, 0)), "1:0");
        // Every center of a corona over a connected G (order >= 2) is a cut
        // vertex: its copy hangs off it.
        let (big, _) = corona(&path(3), &cycle(3)).unwrap();
        let cuts = big.cut_vertices().unwrap();
        assert!([0, 1, 2].iter().all(|v| cuts.contains(v)));
    }

    #[test]
    fn cartesian_distances_add_coordinatewise() {
        let (g, map) = cartesian(&cycle(5), &path(3)).unwrap();
        let d = all_pairs_distances(&g);
        let dg = all_pairs_distances(&cycle(5));
        let dh = all_pairs_distances(&path(3));
        for u1 in 0..5 {
            for w1 in 0..3 {
                for u2 in 0..5 {
                    for w2 in 0..3 {
                        let expected = dg.get(u1, u2).unwrap() + dh.get(w1, w2).unwrap();
                        assert_eq!(
                            d.get(map.pair_id(u1, w1), map.pair_id(u2, w2)),
                            Some(expected)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn lexicographic_distance_law() {
        // With G connected of order >= 2: distance 1 inside a copy when the
        // H-coordinates are adjacent, 2 inside a copy otherwise, and the
        // G-distance across copies.
        let g_factor = path(4);
        let h_factor = Graph::build(3, &[(0, 1)]).unwrap(); // disconnected H allowed
        let (prod, map) = lexicographic(&g_factor, &h_factor).unwrap();
        let d = all_pairs_distances(&prod);
        let dg = all_pairs_distances(&g_factor);
        for u1 in 0..4 {
            for w1 in 0..3 {
                for u2 in 0..4 {
                    for w2 in 0..3 {
                        if (u1, w1) == (u2, w2) {
                            continue;
                        }
                        let expected = if u1 == u2 {
                            if h_factor.has_edge(w1, w2) {
                                1
                            } else {
                                2
                            }
                        } else {
                            dg.get(u1, u2).unwrap()
                        };
                        assert_eq!(
                            d.get(map.pair_id(u1, w1), map.pair_id(u2, w2)),
                            Some(expected),
                            "pair ({u1},{w1}) ({u2},{w2})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn direct_product_connectivity() {
        // Both factors connected: the product is connected iff some factor
        // has an odd cycle, and falls into exactly two components otherwise.
        let (a, _) = direct(&cycle(3), &cycle(3)).unwrap();
        assert_eq!(a.connected_components().len(), 1);
        let (b, _) = direct(&cycle(4), &complete(2)).unwrap();
        assert_eq!(b.connected_components().len(), 2);
        let (c, _) = direct(&path(4), &path(3)).unwrap();
        assert_eq!(c.connected_components().len(), 2);
        let (d, _) = direct(&cycle(5), &path(3)).unwrap();
        assert_eq!(d.connected_components().len(), 1);
    }

    #[test]
    fn direct_with_k2_doubles_a_bipartite_graph() {
        for g in [path(4), cycle(6), complete(2)] {
            let (prod, _) = direct(&g, &complete(2)).unwrap();
            let doubled = Graph::disjoint_union(&[&g, &g]);
            assert!(is_isomorphic(&prod, &doubled).unwrap());
        }
        // Sanity: fails for an odd cycle, which stays connected.
        let (prod, _) = direct(&cycle(3), &complete(2)).unwrap();
        assert!(is_isomorphic(&prod, &cycle(6)).unwrap());
    }

    #[test]
    fn product_labels_use_factor_coordinates() {
        let (g, map) = cartesian(&path(2), &path(2)).unwrap();
        assert_eq!(g.display_label(map.pair_id(0, 1)), "(0,1)");
        let labeled = path(2).with_labels(vec!["x".into(), "y".into()]).unwrap();
        let (g, map) = direct(&labeled, &path(2)).unwrap();
        assert_eq!(g.display_label(map.pair_id(1, 0)), "(y,0)");
    }
}
