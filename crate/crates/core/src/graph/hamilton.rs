//! Exact Hamiltonian-cycle search by backtracking.
//!
//! Used as a constructive witness: a cycle through every vertex certifies a
//! 2-regular spanning subgraph. Exhaustive, so only sensible at desk scale;
//! the cap errors out rather than letting a search run away.

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_HAMILTON_LIMIT: usize = 30;

pub fn hamiltonian_cycle(g: &Graph) -> Result<Option<Vec<usize>>> {
    hamiltonian_cycle_with_limit(g, DEFAULT_HAMILTON_LIMIT)
}

/// Returns a cycle as a vertex sequence of length `n` (implicitly closed), or
/// `None` when the graph has no Hamiltonian cycle. Disconnected graphs and
/// graphs on fewer than three vertices have none.
pub fn hamiltonian_cycle_with_limit(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if n > limit {
        return Err(Error::SizeLimitExceeded {
            op: "hamiltonian_cycle",
            limit,
            actual: n,
        });
    }
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) < 2) {
        return Ok(None);
    }
    debug_assert!(n <= 128, "bitmask search assumes at most 128 vertices");
    let masks: Vec<u128> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u128, |m, &w| m | (1 << w)))
        .collect();
    let mut path = vec![0usize];
    let found = extend(&masks, n, &mut path, 1u128);
    Ok(found.then_some(path))
}

fn extend(masks: &[u128], n: usize, path: &mut Vec<usize>, visited: u128) -> bool {
    let current = *path.last().expect("path starts non-empty");
    if path.len() == n {
        return masks[current] & 1 != 0; // close the cycle back to vertex 0
    }
    // Every unvisited vertex still needs two usable cycle neighbors among
    // the unvisited vertices, the current endpoint, and the start.
    let open = !visited & ((1u128 << n) - 1);
    let usable = open | (1 << current) | 1;
    let mut scan = open;
    while scan != 0 {
        let v = scan.trailing_zeros() as usize;
        scan &= scan - 1;
        if (masks[v] & usable).count_ones() < 2 {
            return false;
        }
    }
    let mut candidates = masks[current] & open;
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        path.push(v);
        if extend(masks, n, path, visited | (1 << v)) {
            return true;
        }
        path.pop();
    }
    false
}

/// Checks that `cycle` visits every vertex exactly once along edges of `g`.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.n();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cycle.windows(2).all(|w| g.has_edge(w[0], w[1])) && g.has_edge(cycle[n - 1], cycle[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

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
    fn finds_cycles_where_they_exist() {
        for g in [cycle(3), cycle(8), complete(7), complete(20)] {
            let c = hamiltonian_cycle(&g).unwrap().expect("hamiltonian");
            assert!(is_hamiltonian_cycle(&g, &c));
        }
        // Petersen graph: vertex-transitive, not Hamiltonian.
        let petersen = Graph::build(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(hamiltonian_cycle(&petersen).unwrap(), None);
    }

    #[test]
    fn trees_stars_and_small_graphs_have_none() {
        let p4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(hamiltonian_cycle(&p4).unwrap(), None);
        let star = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(hamiltonian_cycle(&star).unwrap(), None);
        assert_eq!(hamiltonian_cycle(&complete(2)).unwrap(), None);
        let two_triangles = Graph::disjoint_union(&[&cycle(3), &cycle(3)]);
        assert_eq!(hamiltonian_cycle(&two_triangles).unwrap(), None);
    }

    #[test]
    fn dirac_condition_guarantees_a_cycle() {
        // Any graph with minimum degree >= n/2 is Hamiltonian; check against
        // deterministic random supergraphs of that threshold.
        let mut state = 0x9E37_79B9_7F4A_7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..30 {
            let n = 4 + (next() % 6) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if next() % 2 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let mut g = Graph::build(n, &edges).unwrap();
            // Top up low-degree vertices until Dirac's bound holds.
            loop {
                let low = (0..n).find(|&v| 2 * g.degree(v) < n);
                match low {
                    None => break,
                    Some(v) => {
                        let w = (0..n)
                            .find(|&w| w != v && !g.has_edge(v, w))
                            .expect("degree below n/2 leaves a non-neighbor");
                        let mut e = g.edges();
                        e.push((v, w));
                        g = Graph::build(n, &e).unwrap();
                    }
                }
            }
            let c = hamiltonian_cycle(&g).unwrap().expect("dirac graph");
            assert!(is_hamiltonian_cycle(&g, &c));
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let big = cycle(31);
        assert!(matches!(
            hamiltonian_cycle(&big),
            Err(Error::SizeLimitExceeded { .. })
        ));
        let c = hamiltonian_cycle_with_limit(&big, 40).unwrap().unwrap();
        assert!(is_hamiltonian_cycle(&big, &c));
    }
}
