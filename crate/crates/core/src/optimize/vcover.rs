//! Exact minimum vertex cover by branch and bound.
//!
//! Vertices live in a `u128` mask, so instances are capped at 128 vertices
//! outright and at [`DEFAULT_VCOVER_LIMIT`] unless a caller raises it.
//! Degree-0 and degree-1 vertices are kernelized away, a greedy maximal
//! matching prunes hopeless branches, and the branching vertex is the one
//! of highest remaining degree (take it, or take its whole neighborhood).

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_VCOVER_LIMIT: usize = 40;

/// A minimum vertex cover, sorted ascending.
pub fn minimum_vertex_cover(g: &Graph) -> Result<Vec<usize>> {
    minimum_vertex_cover_with_limit(g, DEFAULT_VCOVER_LIMIT)
}

pub fn minimum_vertex_cover_with_limit(g: &Graph, limit: usize) -> Result<Vec<usize>> {
    let n = g.n();
    if n > limit.min(128) {
        return Err(Error::SizeLimitExceeded {
            op: "minimum_vertex_cover",
            limit: limit.min(128),
            actual: n,
        });
    }
    let adj: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &u| m | 1 << u))
        .collect();
    let alive = if n == 128 { !0u128 } else { (1u128 << n) - 1 };
    let mut best = (n, alive);
    branch(&adj, alive, 0, 0, &mut best);
    let cover: Vec<usize> = (0..n).filter(|&v| best.1 >> v & 1 == 1).collect();
    assert_eq!(cover.len(), best.0);
    for (u, v) in g.edges() {
        assert!(
            best.1 >> u & 1 == 1 || best.1 >> v & 1 == 1,
            "cover must touch every edge"
        );
    }
    Ok(cover)
}

pub fn vertex_cover_number(g: &Graph) -> Result<usize> {
    Ok(minimum_vertex_cover(g)?.len())
}

pub fn vertex_cover_number_with_limit(g: &Graph, limit: usize) -> Result<usize> {
    Ok(minimum_vertex_cover_with_limit(g, limit)?.len())
}

fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn branch(
    adj: &[u128],
    mut alive: u128,
    mut picked: u128,
    mut count: usize,
    best: &mut (usize, u128),
) {
    // Kernel rules: isolated vertices leave the instance, a pendant vertex
    // forces its only neighbor into the cover.
    loop {
        if count >= best.0 {
            return;
        }
        let mut changed = false;
        for v in bits(alive) {
            let nb = adj[v] & alive;
            if nb == 0 {
                alive &= !(1 << v);
                changed = true;
            } else if nb.count_ones() == 1 {
                let u = nb.trailing_zeros();
                picked |= 1 << u;
                count += 1;
                alive &= !(1 << v) & !(1u128 << u);
                changed = true;
                break;
            }
        }
        if !changed {
            break;
        }
    }
    if alive == 0 {
        if count < best.0 {
            *best = (count, picked);
        }
        return;
    }
    if count + greedy_matching_bound(adj, alive) >= best.0 {
        return;
    }
    let v = bits(alive)
        .max_by_key(|&v| (adj[v] & alive).count_ones())
        .expect("alive is non-empty");
    branch(adj, alive & !(1 << v), picked | 1 << v, count + 1, best);
    let nb = adj[v] & alive;
    branch(
        adj,
        alive & !(1 << v) & !nb,
        picked | nb,
        count + nb.count_ones() as usize,
        best,
    );
}

/// Size of a greedily built maximal matching: a lower bound for the cover
/// of the surviving subgraph, since each matched edge needs its own vertex.
fn greedy_matching_bound(adj: &[u128], alive: u128) -> usize {
    let mut free = alive;
    let mut size = 0;
    for v in bits(alive) {
        if free >> v & 1 == 0 {
            continue;
        }
        let candidates = adj[v] & free & !(1u128 << v);
        if candidates != 0 {
            let u = candidates.trailing_zeros();
            free &= !(1 << v) & !(1u128 << u);
            size += 1;
        }
    }
    size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::matching::matching_number;

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

    fn oracle_cover_number(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 20);
        let edges = g.edges();
        (0u32..1 << n)
            .filter(|mask| {
                edges
                    .iter()
                    .all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .expect("the full vertex set is a cover")
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
    fn known_cover_numbers() {
        assert_eq!(vertex_cover_number(&cycle(5)).unwrap(), 3);
        assert_eq!(vertex_cover_number(&cycle(6)).unwrap(), 3);
        assert_eq!(vertex_cover_number(&complete(5)).unwrap(), 4);
        assert_eq!(vertex_cover_number(&petersen()).unwrap(), 6);
        let star = Graph::build(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(vertex_cover_number(&star).unwrap(), 1);
        assert_eq!(minimum_vertex_cover(&star).unwrap(), vec![0]);
        let empty = Graph::build(5, &[]).unwrap();
        assert_eq!(vertex_cover_number(&empty).unwrap(), 0);
        // Disjoint pieces add up.
        let two = Graph::disjoint_union(&[&cycle(5), &complete(4)]);
        assert_eq!(vertex_cover_number(&two).unwrap(), 6);
    }

    #[test]
    fn cover_is_valid_and_minimal_on_random_graphs() {
        let mut rng = XorShift::new(0xc0ffee);
        for case in 0..100 {
            let n = 3 + (rng.next() % 8) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next().is_multiple_of(2) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let cover = minimum_vertex_cover(&g).unwrap();
            assert!(edges
                .iter()
                .all(|&(u, v)| cover.contains(&u) || cover.contains(&v)));
            assert_eq!(cover.len(), oracle_cover_number(&g), "case {case}");
        }
    }

    #[test]
    fn matching_number_bounds_cover_number() {
        let mut rng = XorShift::new(0xdead10cc);
        for _ in 0..60 {
            let n = 4 + (rng.next() % 8) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.next().is_multiple_of(3) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::build(n, &edges).unwrap();
            let nu = matching_number(&g);
            let tau = vertex_cover_number(&g).unwrap();
            assert!(nu <= tau && tau <= 2 * nu);
        }
    }

    #[test]
    fn koenig_equality_on_random_bipartite_graphs() {
        let mut rng = XorShift::new(0x2b1_2b1);
        for _ in 0..60 {
            let left = 2 + (rng.next() % 4) as usize;
            let right = 2 + (rng.next() % 4) as usize;
            let mut edges = Vec::new();
            for u in 0..left {
                for v in 0..right {
                    if rng.next().is_multiple_of(2) {
                        edges.push((u, left + v));
                    }
                }
            }
            let g = Graph::build(left + right, &edges).unwrap();
            assert_eq!(matching_number(&g), vertex_cover_number(&g).unwrap());
        }
    }

    #[test]
    fn size_limit_is_enforced() {
        let big = cycle(41);
        assert!(matches!(
            minimum_vertex_cover(&big),
            Err(Error::SizeLimitExceeded { limit: 40, .. })
        ));
        assert_eq!(vertex_cover_number_with_limit(&big, 64).unwrap(), 21);
    }
}
