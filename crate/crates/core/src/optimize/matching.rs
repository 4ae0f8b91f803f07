//! Maximum matching in general graphs.
//!
//! Blossom contraction in the classic O(V³) form: grow alternating trees
//! from free vertices, shrink odd cycles on the fly by rebasing their
//! vertices, and augment when a free vertex is reached. Works on arbitrary
//! graphs, connected or not.

use std::collections::VecDeque;

use crate::graph::Graph;

const NONE: usize = usize::MAX;

/// A matching, stored as the mate of each vertex.
#[derive(Clone, Debug)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.mate.iter().flatten().count() / 2
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn covers(&self, v: usize) -> bool {
        self.mate[v].is_some()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Matched edges with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
            .collect();
        out.sort_unstable();
        out
    }
}

struct Search<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.base[self.parent[self.mate[a]]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.base[self.parent[self.mate[b]]];
        }
    }

    fn mark_path(&mut self, mut v: usize, stem: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != stem {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free endpoint of
    /// an augmenting path, or `NONE` when the tree is exhausted.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Two even-level vertices meet: shrink the odd cycle.
                    let stem = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, stem, to, &mut in_blossom);
                    self.mark_path(to, stem, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = stem;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    self.used[self.mate[to]] = true;
                    queue.push_back(self.mate[to]);
                }
            }
        }
        NONE
    }
}

/// Computes a maximum matching. The result is validated against the graph
/// before it is returned.
pub fn maximum_matching(g: &Graph) -> Matching {
    let n = g.n();
    let mut s = Search {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: vec![0; n],
        used: vec![false; n],
    };
    // Cheap greedy start; the search below only has to fix the remainder.
    for v in 0..n {
        if s.mate[v] != NONE {
            continue;
        }
        if let Some(&u) = g.neighbors(v).iter().find(|&&u| s.mate[u] == NONE) {
            s.mate[v] = u;
            s.mate[u] = v;
        }
    }
    for root in 0..n {
        if s.mate[root] != NONE {
            continue;
        }
        let mut v = s.find_path(root);
        while v != NONE {
            let pv = s.parent[v];
            let next = s.mate[pv];
            s.mate[v] = pv;
            s.mate[pv] = v;
            v = next;
        }
    }
    let mate: Vec<Option<usize>> = s.mate.iter().map(|&m| (m != NONE).then_some(m)).collect();
    for (v, &m) in mate.iter().enumerate() {
        if let Some(u) = m {
            assert_eq!(mate[u], Some(v), "matching must be symmetric");
            assert!(g.has_edge(v, u), "matched pairs must be edges");
        }
    }
    Matching { mate }
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    struct XorShift(u64);

    impl XorShift {
        fn new(seed: u64) -> Self {
            Self(seed.max(1))
        }

        fn next(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            self.0 = x;
            x
        }
    }

    /// Memoized exhaustive matching number, independent of the blossom code.
    fn oracle_matching_number(g: &Graph) -> usize {
        fn rec(g: &Graph, mask: u32, memo: &mut HashMap<u32, usize>) -> usize {
            if mask == 0 {
                return 0;
            }
            if let Some(&v) = memo.get(&mask) {
                return v;
            }
            let v = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << v);
            let mut best = rec(g, rest, memo);
            for &u in g.neighbors(v) {
                if rest >> u & 1 == 1 {
                    best = best.max(1 + rec(g, rest & !(1 << u), memo));
                }
            }
            memo.insert(mask, best);
            best
        }
        assert!(g.n() <= 32);
        rec(g, (1u32 << g.n()) - 1, &mut HashMap::new())
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::build(10, &edges).unwrap()
    }

    #[test]
    fn known_matching_numbers() {
        assert_eq!(matching_number(&cycle(5)), 2);
        assert_eq!(matching_number(&cycle(6)), 3);
        assert_eq!(matching_number(&petersen()), 5);
        assert!(maximum_matching(&petersen()).is_perfect());

        let path4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(matching_number(&path4), 2);

        let star = Graph::build(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(matching_number(&star), 1);

        // Complete bipartite minus a perfect matching still has one.
        let edges = [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)];
        let k33_minus = Graph::build(6, &edges).unwrap();
        assert_eq!(matching_number(&k33_minus), 3);

        let empty = Graph::build(4, &[]).unwrap();
        assert_eq!(matching_number(&empty), 0);
        assert_eq!(matching_number(&Graph::build(0, &[]).unwrap()), 0);
    }

    #[test]
    fn matched_edges_are_disjoint_graph_edges() {
        let g = petersen();
        let m = maximum_matching(&g);
        let edges = m.edges();
        assert_eq!(edges.len(), m.size());
        let mut seen = vec![false; g.n()];
        for (u, v) in edges {
            assert!(g.has_edge(u, v));
            assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn odd_components_need_blossoms() {
        // Two triangles joined by a bridge: the greedy phase alone can get
        // stuck here, the blossom search must recover the third edge.
        let g = Graph::build(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn matches_exhaustive_search_on_random_graphs() {
        let mut rng = XorShift::new(0xb105_50b1);
        for case in 0..150 {
            let n = 4 + (rng.next() % 9) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next().is_multiple_of(2) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            assert_eq!(
                matching_number(&g),
                oracle_matching_number(&g),
                "case {case}: n={n} edges={edges:?}"
            );
        }
    }
}
