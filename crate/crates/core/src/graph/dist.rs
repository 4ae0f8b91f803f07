//! All-pairs shortest-path distances by repeated BFS.
//!
//! Unreachable pairs are `None`, never a large finite stand-in, so distance
//! arithmetic cannot silently mix components.

use super::Graph;
use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Option<u32>>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `d(u, v)`, or `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.d[u * self.n + v]
    }

    pub fn same_component(&self, u: usize, v: usize) -> bool {
        self.get(u, v).is_some()
    }

    /// Largest finite distance; `None` when the graph is disconnected or empty.
    pub fn diameter(&self) -> Option<u32> {
        if self.n == 0 {
            return None;
        }
        let mut max = 0;
        for value in &self.d {
            max = max.max((*value)?);
        }
        Some(max)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.diameter().is_some()
    }
}

/// BFS from every vertex; `O(n (n + m))` total.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![None; n * n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        let row = &mut d[source * n..(source + 1) * n];
        row[source] = Some(0);
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = row[u].expect("queued vertices have distances");
            for &w in g.neighbors(u) {
                if row[w].is_none() {
                    row[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn path_distances_and_diameter() {
        let g = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 3), Some(3));
        assert_eq!(d.get(2, 0), Some(2));
        assert_eq!(d.get(1, 1), Some(0));
        assert_eq!(d.diameter(), Some(3));
        assert!(d.is_connected());
    }

    #[test]
    fn unreachable_pairs_are_none() {
        let g = Graph::build(4, &[(0, 1), (2, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        assert_eq!(d.get(0, 2), None);
        assert!(!d.same_component(1, 3));
        assert_eq!(d.diameter(), None);
        assert!(!d.is_connected());
    }

    #[test]
    fn distances_are_symmetric_and_satisfy_triangle_inequality() {
        let g = Graph::build(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (4, 5),
                (5, 6),
                (6, 2),
            ],
        )
        .unwrap();
        let d = all_pairs_distances(&g);
        for u in 0..7 {
            for v in 0..7 {
                assert_eq!(d.get(u, v), d.get(v, u));
                for w in 0..7 {
                    let (duv, duw, dwv) = (
                        d.get(u, v).unwrap(),
                        d.get(u, w).unwrap(),
                        d.get(w, v).unwrap(),
                    );
                    assert!(duv <= duw + dwv);
                }
            }
        }
    }

    #[test]
    fn adjacent_iff_distance_one() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        let d = all_pairs_distances(&g);
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    assert_eq!(g.has_edge(u, v), d.get(u, v) == Some(1));
                }
            }
        }
    }
}
