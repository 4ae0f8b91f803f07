//! Named graph families and seeded random graphs.
//!
//! Everything here is deterministic: the random families draw raw words
//! from ChaCha8 with rejection sampling, so a (family, seed) pair denotes
//! one concrete graph forever, independent of any distribution helpers.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// Complete multipartite graph; one part yields an edgeless graph.
    CompleteMultipartite {
        parts: Vec<usize>,
    },
    /// A center joined to `leaves` independent vertices.
    Star {
        leaves: usize,
    },
    /// Hub joined to every vertex of an (n-1)-cycle; `n` counts the hub.
    Wheel {
        n: usize,
    },
    Petersen,
    Hypercube {
        dim: usize,
    },
    /// C_5 plus one chord: the smallest graph whose strong resolving graph
    /// is a path on all five vertices.
    House,
    /// Six vertices carrying one twin class of each kind: a true-twin pair,
    /// a false-twin pair, and two singletons.
    MixedTwins,
    /// Family with an arbitrarily large gap between sdim_f and
    /// min{|M|/2, sdim}: its strong resolving graph is a complete graph on
    /// the 2q+2 pendant vertices plus a star K_{1,q}.
    Gap {
        q: usize,
    },
    /// The gap family without its pendant pairs. Its strong resolving graph
    /// is bipartite: K_{1,q} plus K_{q,q} minus a perfect matching.
    GapCore {
        q: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    RandomConnected {
        n: usize,
        seed: u64,
    },
}

struct Words {
    rng: ChaCha8Rng,
}

impl Words {
    fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Unbiased draw from `0..n` by rejection on the top of the u32 range.
    fn below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0 && n <= u32::MAX as usize);
        let n32 = n as u32;
        let limit = u32::MAX - u32::MAX % n32;
        loop {
            let x = self.rng.next_u32();
            if x < limit {
                return (x % n32) as usize;
            }
        }
    }

    fn coin(&mut self) -> bool {
        self.rng.next_u32() & 1 == 1
    }
}

fn at_least(op: &'static str, min: usize, actual: usize) -> Result<()> {
    if actual < min {
        return Err(Error::OrderTooSmall { op, min, actual });
    }
    Ok(())
}

pub fn generate(family: &Family) -> Result<Graph> {
    match family {
        Family::Path { n } => {
            at_least("path", 1, *n)?;
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::build(*n, &edges)
        }
        Family::Cycle { n } => {
            at_least("cycle", 3, *n)?;
            let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            Graph::build(*n, &edges)
        }
        Family::Complete { n } => {
            at_least("complete", 1, *n)?;
            Graph::build(*n, &all_pairs(*n))
        }
        Family::CompleteMultipartite { parts } => {
            if parts.is_empty() || parts.contains(&0) {
                return Err(Error::InvalidParams(
                    "multipartite parts must be positive".into(),
                ));
            }
            let n: usize = parts.iter().sum();
            let block: Vec<usize> = parts
                .iter()
                .enumerate()
                .flat_map(|(b, &p)| std::iter::repeat_n(b, p))
                .collect();
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if block[u] != block[v] {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, &edges)
        }
        Family::Star { leaves } => {
            at_least("star", 1, *leaves)?;
            let edges: Vec<_> = (1..=*leaves).map(|v| (0, v)).collect();
            Graph::build(leaves + 1, &edges)
        }
        Family::Wheel { n } => {
            at_least("wheel", 4, *n)?;
            let rim = n - 1;
            let mut edges: Vec<_> = (1..*n).map(|v| (0, v)).collect();
            for i in 0..rim {
                edges.push((1 + i, 1 + (i + 1) % rim));
            }
            Graph::build(*n, &edges)
        }
        Family::Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((5 + i, 5 + (i + 2) % 5));
                edges.push((i, i + 5));
            }
            Graph::build(10, &edges)
        }
        Family::Hypercube { dim } => {
            if !(1..=12).contains(dim) {
                return Err(Error::InvalidParams(format!(
                    "hypercube dimension must be in 1..=12, got {dim}"
                )));
            }
            let n = 1usize << dim;
            let mut edges = Vec::new();
            for u in 0..n {
                for b in 0..*dim {
                    let v = u ^ (1 << b);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Graph::build(n, &edges)
        }
        Family::House => Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]),
        Family::MixedTwins => Graph::build(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 4),
                (0, 4),
                (0, 3),
                (2, 3),
                (4, 5),
            ],
        ),
        Family::Gap { q } => gap_graph(*q, true),
        Family::GapCore { q } => gap_graph(*q, false),
        Family::RandomTree { n, seed } => {
            at_least("random_tree", 1, *n)?;
            Ok(random_tree(*n, *seed))
        }
        Family::RandomConnected { n, seed } => {
            at_least("random_connected", 1, *n)?;
            if *n > 64 {
                return Err(Error::SizeLimitExceeded {
                    op: "random_connected",
                    limit: 64,
                    actual: *n,
                });
            }
            Ok(random_connected(*n, *seed))
        }
    }
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    edges
}

/// Spine of the gap family: q+1 paths a_i b_i c_i with a_i, b_i, c_i each
/// wired back to their 0-indexed counterpart, plus an apex adjacent to a_0
/// and c_0. With `pendants` every a_i and c_i gets one extra leaf.
fn gap_graph(q: usize, pendants: bool) -> Result<Graph> {
    let min_q = if pendants { 1 } else { 2 };
    at_least(if pendants { "gap" } else { "gap_core" }, min_q, q)?;
    let spine = 3 * (q + 1);
    let a = |i: usize| 3 * i;
    let b = |i: usize| 3 * i + 1;
    let c = |i: usize| 3 * i + 2;
    let mut edges = Vec::new();
    for i in 0..=q {
        edges.push((a(i), b(i)));
        edges.push((b(i), c(i)));
    }
    for i in 1..=q {
        edges.push((a(i), a(0)));
        edges.push((b(i), b(0)));
        edges.push((c(i), c(0)));
    }
    let mut labels: Vec<String> = Vec::new();
    for i in 0..=q {
        labels.extend([format!("a{i}"), format!("b{i}"), format!("c{i}")]);
    }
    let apex = if pendants {
        let y = |i: usize| spine + 2 * i;
        let z = |i: usize| spine + 2 * i + 1;
        for i in 0..=q {
            edges.push((a(i), y(i)));
            edges.push((c(i), z(i)));
            labels.extend([format!("y{i}"), format!("z{i}")]);
        }
        spine + 2 * (q + 1)
    } else {
        spine
    };
    edges.push((apex, a(0)));
    edges.push((apex, c(0)));
    labels.push("x".into());
    Graph::build(apex + 1, &edges)?.with_labels(labels)
}

/// Uniform labeled tree by decoding a random Prüfer sequence.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n == 1 {
        return Graph::build(1, &[]).expect("single vertex");
    }
    if n == 2 {
        return Graph::build(2, &[(0, 1)]).expect("single edge");
    }
    let mut words = Words::new(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| words.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut used = vec![false; n];
    for &s in &seq {
        let leaf = (0..n)
            .find(|&v| degree[v] == 1 && !used[v])
            .expect("a leaf always remains");
        edges.push((leaf, s));
        used[leaf] = true;
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !used[v] && degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::build(n, &edges).expect("Prüfer decode yields a tree")
}

/// Uniform graph with edge probability one half, resampled until connected.
fn random_connected(n: usize, seed: u64) -> Graph {
    let mut words = Words::new(seed);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if words.coin() {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, &edges).expect("random edges are valid");
        if g.is_connected() {
            return g;
        }
    }
}

/// Parses a compact family spec: a name, optionally followed by `:` and
/// comma-separated integers. Random families take an optional trailing
/// seed, e.g. `randtree:12,99`.
pub fn parse_spec(spec: &str) -> Result<Family> {
    let bad = |msg: String| Error::InvalidParams(msg);
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, Some(r)),
        None => (spec, None),
    };
    let args: Vec<usize> = match rest {
        None => Vec::new(),
        Some(r) => r
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| bad(format!("bad family argument {t:?} in {spec:?}")))
            })
            .collect::<Result<_>>()?,
    };
    let one = |family: fn(usize) -> Family| -> Result<Family> {
        match args.as_slice() {
            [v] => Ok(family(*v)),
            _ => Err(bad(format!("{name} takes exactly one argument"))),
        }
    };
    let none = |family: Family| -> Result<Family> {
        if args.is_empty() {
            Ok(family)
        } else {
            Err(bad(format!("{name} takes no arguments")))
        }
    };
    let seeded = |family: fn(usize, u64) -> Family| -> Result<Family> {
        match args.as_slice() {
            [n] => Ok(family(*n, 0)),
            [n, seed] => Ok(family(*n, *seed as u64)),
            _ => Err(bad(format!("{name} takes a size and an optional seed"))),
        }
    };
    match name {
        "path" => one(|n| Family::Path { n }),
        "cycle" => one(|n| Family::Cycle { n }),
        "complete" => one(|n| Family::Complete { n }),
        "multipartite" => {
            if args.is_empty() {
                Err(bad("multipartite needs part sizes".into()))
            } else {
                Ok(Family::CompleteMultipartite { parts: args })
            }
        }
        "star" => one(|leaves| Family::Star { leaves }),
        "wheel" => one(|n| Family::Wheel { n }),
        "petersen" => none(Family::Petersen),
        "hypercube" => one(|dim| Family::Hypercube { dim }),
        "house" => none(Family::House),
        "mixedtwins" => none(Family::MixedTwins),
        "gap" => one(|q| Family::Gap { q }),
        "gapcore" => one(|q| Family::GapCore { q }),
        "randtree" => seeded(|n, seed| Family::RandomTree { n, seed }),
        "randconn" => seeded(|n, seed| Family::RandomConnected { n, seed }),
        _ => Err(bad(format!("unknown family {name:?}"))),
    }
}

/// A graph plus the spec string it came from, for diagnostics.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub graph: Graph,
}

/// Deterministic battery of graphs: a fixed slate of named families plus
/// `random_count` seeded trees and connected graphs with orders cycling in
/// `5..=max_random_n`.
pub fn corpus(seed: u64, random_count: usize, max_random_n: usize) -> Vec<CorpusEntry> {
    let named = [
        "path:2",
        "path:3",
        "path:5",
        "path:8",
        "cycle:4",
        "cycle:5",
        "cycle:6",
        "cycle:7",
        "cycle:9",
        "complete:3",
        "complete:4",
        "complete:6",
        "star:3",
        "star:5",
        "wheel:5",
        "wheel:6",
        "wheel:8",
        "petersen",
        "hypercube:3",
        "hypercube:4",
        "house",
        "mixedtwins",
        "multipartite:2,3",
        "multipartite:1,2,2",
        "multipartite:3,3",
        "gap:2",
        "gap:3",
        "gapcore:2",
        "gapcore:3",
    ];
    let mut out: Vec<CorpusEntry> = named
        .iter()
        .map(|spec| CorpusEntry {
            name: (*spec).to_string(),
            graph: generate(&parse_spec(spec).expect("slate specs parse"))
                .expect("slate specs generate"),
        })
        .collect();
    let span = (max_random_n + 1).saturating_sub(5).max(1);
    for i in 0..random_count {
        let n = 5 + i % span;
        let s = seed.wrapping_add(i as u64);
        let (name, family) = if i % 2 == 0 {
            (
                format!("randtree:{n},{s}"),
                Family::RandomTree { n, seed: s },
            )
        } else {
            (
                format!("randconn:{n},{s}"),
                Family::RandomConnected { n, seed: s },
            )
        };
        out.push(CorpusEntry {
            name,
            graph: generate(&family).expect("random families generate"),
        });
    }
    out
}
