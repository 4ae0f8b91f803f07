//! Exact graph isomorphism for desk-scale graphs.
//!
//! Both graphs are refined together by iterated neighborhood coloring
//! (color = old color + multiset of neighbor colors, to a fixpoint). If the
//! refined color histograms disagree the graphs are not isomorphic; otherwise
//! a backtracking search looks for a color-preserving, adjacency-preserving
//! bijection. The search is exhaustive, so the answer is exact; the size cap
//! keeps worst cases at bay rather than any pruning heuristic.

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_ISO_LIMIT: usize = 40;

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    is_isomorphic_with_limit(a, b, DEFAULT_ISO_LIMIT)
}

pub fn is_isomorphic_with_limit(a: &Graph, b: &Graph, limit: usize) -> Result<bool> {
    let n = a.n().max(b.n());
    if n > limit {
        return Err(Error::SizeLimitExceeded {
            op: "is_isomorphic",
            limit,
            actual: n,
        });
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if a.n() == 0 {
        return Ok(true);
    }
    let (colors_a, colors_b) = match refine_jointly(a, b) {
        Some(pair) => pair,
        None => return Ok(false),
    };
    Ok(search(a, b, &colors_a, &colors_b))
}

/// Iterated refinement over the disjoint union of both vertex sets. Returns
/// per-graph color vectors, or `None` when the histograms already separate
/// the graphs.
fn refine_jointly(a: &Graph, b: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = a.n();
    let mut ca: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    normalize(&mut ca, &mut cb)?;
    loop {
        let classes_before = class_count(&ca);
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            s.sort_unstable();
            (c[v], s)
        };
        let next_a: Vec<_> = (0..n).map(|v| sig(a, &ca, v)).collect();
        let next_b: Vec<_> = (0..n).map(|v| sig(b, &cb, v)).collect();
        let mut palette: Vec<&(usize, Vec<usize>)> = next_a.iter().chain(next_b.iter()).collect();
        palette.sort();
        palette.dedup();
        let id_of = |s: &(usize, Vec<usize>)| palette.binary_search(&s).expect("signature present");
        let mut new_a: Vec<usize> = next_a.iter().map(id_of).collect();
        let mut new_b: Vec<usize> = next_b.iter().map(id_of).collect();
        normalize(&mut new_a, &mut new_b)?;
        // Refinement only ever splits classes, so an unchanged class count
        // means the partition is stable.
        let done = class_count(&new_a) == classes_before;
        ca = new_a;
        cb = new_b;
        if done {
            return Some((ca, cb));
        }
    }
}

/// Renumbers colors to 0..k consistently across both vectors and checks the
/// histograms match.
fn normalize(ca: &mut [usize], cb: &mut [usize]) -> Option<()> {
    let mut values: Vec<usize> = ca.iter().chain(cb.iter()).copied().collect();
    values.sort_unstable();
    values.dedup();
    for c in ca.iter_mut().chain(cb.iter_mut()) {
        *c = values.binary_search(c).expect("color present");
    }
    let k = values.len();
    let mut ha = vec![0usize; k];
    let mut hb = vec![0usize; k];
    for &c in ca.iter() {
        ha[c] += 1;
    }
    for &c in cb.iter() {
        hb[c] += 1;
    }
    (ha == hb).then_some(())
}

fn class_count(colors: &[usize]) -> usize {
    let mut v = colors.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

fn search(a: &Graph, b: &Graph, ca: &[usize], cb: &[usize]) -> bool {
    let n = a.n();
    // Order a's vertices so each one touches as many already-placed vertices
    // as possible: candidates in b are then heavily constrained early.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut class_size = vec![0usize; n + 1];
    for &c in ca {
        class_size[c] += 1;
    }
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let anchored = a.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (usize::MAX - anchored, class_size[ca[v]], v)
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let ctx = SearchCtx {
        a,
        b,
        ca,
        cb,
        order: &order,
    };
    backtrack(&ctx, 0, &mut map, &mut used)
}

struct SearchCtx<'s> {
    a: &'s Graph,
    b: &'s Graph,
    ca: &'s [usize],
    cb: &'s [usize],
    order: &'s [usize],
}

fn backtrack(ctx: &SearchCtx, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == ctx.order.len() {
        return true;
    }
    let v = ctx.order[depth];
    'candidates: for w in 0..ctx.b.n() {
        if used[w] || ctx.cb[w] != ctx.ca[v] {
            continue;
        }
        for u in ctx.order[..depth].iter().copied() {
            if ctx.a.has_edge(u, v) != ctx.b.has_edge(map[u], w) {
                continue 'candidates;
            }
        }
        map[v] = w;
        used[w] = true;
        if backtrack(ctx, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[w] = false;
    }
    false
}
