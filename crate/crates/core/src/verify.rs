//! The acceptance battery: every closed-form value and structural law the
//! library reproduces, run as numbered criteria with exact arithmetic.
//!
//! Each criterion is independent: [`run_criterion`] executes one and
//! returns a [`CheckReport`], [`run_all`] walks the list. Failures in the
//! property sweep also archive the offending graph as an edge-list fixture
//! under the system temp directory so the case can be replayed.

use std::fmt::Display;
use std::fs;
use std::path::PathBuf;

use crate::error::Result;
use crate::families::{self, Family};
use crate::graph::dist::all_pairs_distances;
use crate::graph::io::render_edge_list;
use crate::graph::iso::is_isomorphic;
use crate::graph::Graph;
use crate::optimize::rational::{rat, rat_int, Rational};
use crate::optimize::{self, matching, vcover};
use crate::products;
use crate::resolving::strong_resolving_graph;

/// Outcome of one numbered criterion.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

struct Audit {
    cases: usize,
    failures: Vec<String>,
}

impl Audit {
    fn new() -> Self {
        Audit {
            cases: 0,
            failures: Vec::new(),
        }
    }

    /// Runs one case; the body reports a list of problems, empty meaning
    /// the case passed. Errors count as failures rather than aborting the
    /// criterion.
    fn run<F>(&mut self, label: impl Display, body: F)
    where
        F: FnOnce() -> Result<Vec<String>>,
    {
        self.cases += 1;
        match body() {
            Ok(problems) => {
                for p in problems {
                    self.failures.push(format!("{label}: {p}"));
                }
            }
            Err(e) => self.failures.push(format!("{label}: error: {e}")),
        }
    }

    fn into_report(self, id: usize, name: &'static str) -> CheckReport {
        const SHOWN: usize = 8;
        let pass = self.failures.is_empty();
        let detail = if pass {
            format!("{} cases", self.cases)
        } else {
            let mut lines: Vec<String> = self.failures.iter().take(SHOWN).cloned().collect();
            if self.failures.len() > SHOWN {
                lines.push(format!("... {} more", self.failures.len() - SHOWN));
            }
            format!(
                "{} of {} cases failed: {}",
                self.failures.len(),
                self.cases,
                lines.join("; ")
            )
        };
        CheckReport {
            id,
            name,
            pass,
            detail,
        }
    }
}

pub fn run_criterion(id: usize) -> CheckReport {
    let (name, body): (&'static str, fn(&mut Audit) -> Result<()>) = match id {
        1 => ("paths", c01),
        2 => ("cycles", c02),
        3 => ("petersen", c03),
        4 => ("wheels", c04),
        5 => ("random trees", c05),
        6 => ("complete multipartite", c06),
        7 => ("gap family", c07),
        8 => ("corona products", c08),
        9 => ("lexicographic p4 over p3", c09),
        10 => ("lexicographic c5 over p3", c10),
        11 => ("mixed twins lexicographic", c11),
        12 => ("house lexicographic sharpness", c12),
        13 => ("path grids", c13),
        14 => ("cycle cartesian products", c14),
        15 => ("cartesian resolving structure", c15),
        16 => ("gap core cartesian paths", c16),
        17 => ("tree by complete cartesian", c17),
        18 => ("multipartite matchings", c18),
        19 => ("property sweep", c19),
        20 => ("odd cycle prisms", c20),
        _ => {
            return CheckReport {
                id,
                name: "unknown",
                pass: false,
                detail: "no such criterion".to_string(),
            }
        }
    };
    let mut aud = Audit::new();
    if let Err(e) = body(&mut aud) {
        aud.failures.push(format!("setup error: {e}"));
    }
    aud.into_report(id, name)
}

pub fn run_all() -> Vec<CheckReport> {
    (1..=20).map(run_criterion).collect()
}

fn path(n: usize) -> Result<Graph> {
    families::generate(&Family::Path { n })
}

fn cycle(n: usize) -> Result<Graph> {
    families::generate(&Family::Cycle { n })
}

fn complete(n: usize) -> Result<Graph> {
    families::generate(&Family::Complete { n })
}

fn star(leaves: usize) -> Result<Graph> {
    families::generate(&Family::Star { leaves })
}

fn by_spec(spec: &str) -> Result<Graph> {
    families::generate(&families::parse_spec(spec)?)
}

fn sdim_f_value(g: &Graph) -> Result<Rational> {
    Ok(optimize::sdim_f(g)?.value)
}

fn half(n: usize) -> Rational {
    rat(n as i64, 2)
}

fn expect_eq<T: PartialEq + Display>(what: &str, actual: T, expected: T) -> Vec<String> {
    if actual == expected {
        Vec::new()
    } else {
        vec![format!("{what} is {actual}, expected {expected}")]
    }
}

fn expect_le(what: &str, lo: &Rational, hi: &Rational) -> Vec<String> {
    if lo <= hi {
        Vec::new()
    } else {
        vec![format!("{what} violated: {lo} > {hi}")]
    }
}

fn expect_that(what: &str, ok: bool) -> Vec<String> {
    if ok {
        Vec::new()
    } else {
        vec![what.to_string()]
    }
}

fn slug(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '-' })
        .collect()
}

/// Saves a failing graph as an edge list with the problems as comments.
/// Returns None when the temp directory is not writable; archiving is
/// best-effort and never masks the original failure.
fn archive_fixture(tag: &str, g: &Graph, problems: &[String]) -> Option<PathBuf> {
    let dir = std::env::temp_dir().join("sdimlab-fixtures");
    fs::create_dir_all(&dir).ok()?;
    let path = dir.join(format!("{tag}.edges"));
    let mut text = String::new();
    for p in problems {
        text.push_str(&format!("# {p}\n"));
    }
    text.push_str(&render_edge_list(g));
    fs::write(&path, text).ok()?;
    Some(path)
}

/// Nondecreasing part vectors with at least two parts and total at most
/// `max_total`.
fn part_vectors(max_total: usize) -> Vec<Vec<usize>> {
    fn rec(budget: usize, min_part: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for p in min_part..=budget {
            acc.push(p);
            if acc.len() >= 2 {
                out.push(acc.clone());
            }
            rec(budget - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_total, 1, &mut Vec::new(), &mut out);
    out
}

fn c01(aud: &mut Audit) -> Result<()> {
    for n in 2..=8 {
        aud.run(format!("path:{n}"), || {
            Ok(expect_eq("sdim_f", sdim_f_value(&path(n)?)?, rat_int(1)))
        });
    }
    Ok(())
}

fn c02(aud: &mut Audit) -> Result<()> {
    for n in 3..=10 {
        aud.run(format!("cycle:{n}"), || {
            Ok(expect_eq("sdim_f", sdim_f_value(&cycle(n)?)?, half(n)))
        });
    }
    Ok(())
}

fn c03(aud: &mut Audit) -> Result<()> {
    aud.run("petersen", || {
        let g = families::generate(&Family::Petersen)?;
        Ok(expect_eq("sdim_f", sdim_f_value(&g)?, rat_int(5)))
    });
    Ok(())
}

fn c04(aud: &mut Audit) -> Result<()> {
    aud.run("wheel:4", || {
        let g = families::generate(&Family::Wheel { n: 4 })?;
        Ok(expect_eq("sdim_f", sdim_f_value(&g)?, rat_int(2)))
    });
    for n in 5..=9 {
        aud.run(format!("wheel:{n}"), || {
            let g = families::generate(&Family::Wheel { n })?;
            Ok(expect_eq("sdim_f", sdim_f_value(&g)?, half(n - 1)))
        });
    }
    Ok(())
}

fn c05(aud: &mut Audit) -> Result<()> {
    for i in 0..50u64 {
        let n = 2 + (i as usize) % 11;
        let seed = 500 + i;
        aud.run(format!("randtree:{n},{seed}"), || {
            let t = families::generate(&Family::RandomTree { n, seed })?;
            Ok(expect_eq(
                "sdim_f vs half the leaf count",
                sdim_f_value(&t)?,
                half(t.leaf_count()),
            ))
        });
    }
    Ok(())
}

fn c06(aud: &mut Audit) -> Result<()> {
    for parts in part_vectors(10) {
        let n: usize = parts.iter().sum();
        let singles = parts.iter().filter(|&&p| p == 1).count();
        let expected = if singles == 1 { half(n - 1) } else { half(n) };
        aud.run(format!("multipartite {parts:?}"), || {
            let g = families::generate(&Family::CompleteMultipartite {
                parts: parts.clone(),
            })?;
            Ok(expect_eq("sdim_f", sdim_f_value(&g)?, expected))
        });
    }
    Ok(())
}

fn c07(aud: &mut Audit) -> Result<()> {
    for q in 1..=4 {
        aud.run(format!("gap:{q}"), || {
            let g = families::generate(&Family::Gap { q })?;
            let sr = strong_resolving_graph(&g)?;
            let mut problems = Vec::new();
            problems.extend(expect_eq("boundary size", sr.boundary().len(), 3 * q + 3));
            problems.extend(expect_eq("sdim", optimize::sdim(&g)?, 2 * q + 2));
            problems.extend(expect_eq(
                "sdim_f",
                sdim_f_value(&g)?,
                rat_int((q + 2) as i64),
            ));
            let expected = Graph::disjoint_union(&[&complete(2 * q + 2)?, &star(q)?]);
            problems.extend(expect_that(
                "resolving graph is a complete block plus a star",
                is_isomorphic(sr.graph(), &expected)?,
            ));
            Ok(problems)
        });
    }
    Ok(())
}

fn c08(aud: &mut Audit) -> Result<()> {
    let gs = vec![
        ("path:2", path(2)?),
        ("path:3", path(3)?),
        ("cycle:3", cycle(3)?),
        ("path:4", path(4)?),
        ("star:3", star(3)?),
        ("cycle:5", cycle(5)?),
        ("complete:4", complete(4)?),
        ("path:6", path(6)?),
    ];
    let hs = vec![
        ("k1", complete(1)?),
        ("p2", path(2)?),
        ("2k1", Graph::build(2, &[])?),
        ("p3", path(3)?),
        ("c3", cycle(3)?),
        (
            "k2+k1",
            Graph::disjoint_union(&[&complete(2)?, &complete(1)?]),
        ),
        ("c4", cycle(4)?),
        ("star3", star(3)?),
        ("p5", path(5)?),
        ("k4", complete(4)?),
    ];
    let mut combos = Vec::new();
    for (gn, g) in &gs {
        for (hn, h) in &hs {
            if g.n() * (1 + h.n()) <= 30 {
                combos.push((*gn, g, *hn, h));
            }
        }
    }
    let stride = (combos.len() / 30).max(1);
    let picked: Vec<_> = combos.iter().step_by(stride).take(30).collect();
    if picked.len() != 30 {
        aud.failures.push(format!(
            "expected 30 corona pairs, slate yields {}",
            picked.len()
        ));
    }
    for (gn, g, hn, h) in picked {
        aud.run(format!("{gn} corona {hn}"), || {
            let (gh, _) = products::corona(g, h)?;
            Ok(expect_eq("sdim_f", sdim_f_value(&gh)?, half(g.n() * h.n())))
        });
    }
    Ok(())
}

fn c09(aud: &mut Audit) -> Result<()> {
    aud.run("path:4 lex path:3", || {
        let (gh, _) = products::lexicographic(&path(4)?, &path(3)?)?;
        let mut problems = expect_eq("sdim_f", sdim_f_value(&gh)?, rat_int(5));
        let sr = strong_resolving_graph(&gh)?;
        let k2_over_k2k1 = products::lexicographic(
            &complete(2)?,
            &Graph::disjoint_union(&[&complete(2)?, &complete(1)?]),
        )?
        .0;
        let expected = Graph::disjoint_union(&[&k2_over_k2k1, &complete(2)?, &complete(2)?]);
        problems.extend(expect_that(
            "resolving graph matches the two-block shape",
            is_isomorphic(sr.graph(), &expected)?,
        ));
        Ok(problems)
    });
    Ok(())
}

fn c10(aud: &mut Audit) -> Result<()> {
    aud.run("cycle:5 lex path:3", || {
        let (gh, _) = products::lexicographic(&cycle(5)?, &path(3)?)?;
        Ok(expect_eq("sdim_f", sdim_f_value(&gh)?, rat(15, 2)))
    });
    Ok(())
}

fn c11(aud: &mut Audit) -> Result<()> {
    aud.run("mixedtwins lex path:3", || {
        let g = families::generate(&Family::MixedTwins)?;
        let h = path(3)?;
        let (gh, _) = products::lexicographic(&g, &h)?;
        let value = sdim_f_value(&gh)?;
        let mut problems = expect_eq("sdim_f", value.clone(), rat(17, 2));

        let tp = g.twin_partition();
        let slf_h = optimize::sl_f(&h)?.value;
        let (k2h, _) = products::lexicographic(&complete(2)?, &h)?;
        let bound = rat_int(tp.m1() as i64) * slf_h
            + half(tp.m2()) * sdim_f_value(&k2h)?
            + half(tp.m3() * h.n());
        problems.extend(expect_eq("twin lower bound", bound.clone(), rat_int(8)));
        problems.extend(expect_le("twin lower bound vs sdim_f", &bound, &value));
        Ok(problems)
    });
    Ok(())
}

fn c12(aud: &mut Audit) -> Result<()> {
    aud.run("house lex house", || {
        let house = families::generate(&Family::House)?;
        let (gh, _) = products::lexicographic(&house, &house)?;
        Ok(expect_eq("sdim_f", sdim_f_value(&gh)?, rat(25, 2)))
    });
    for n in 3..=5 {
        aud.run(format!("star:{} lex house", n - 1), || {
            let house = families::generate(&Family::House)?;
            let (gh, _) = products::lexicographic(&star(n - 1)?, &house)?;
            Ok(expect_eq(
                "sdim_f",
                sdim_f_value(&gh)?,
                rat(5 * n as i64 - 1, 2),
            ))
        });
    }
    Ok(())
}

fn c13(aud: &mut Audit) -> Result<()> {
    for s in 2..=5 {
        for t in 2..=5 {
            aud.run(format!("path:{s} box path:{t}"), || {
                let (gh, _) = products::cartesian(&path(s)?, &path(t)?)?;
                Ok(expect_eq("sdim_f", sdim_f_value(&gh)?, rat_int(2)))
            });
        }
    }
    Ok(())
}

fn c14(aud: &mut Audit) -> Result<()> {
    for (n, m) in [(3, 3), (3, 4), (4, 5)] {
        aud.run(format!("cycle:{n} box cycle:{m}"), || {
            let (gh, _) = products::cartesian(&cycle(n)?, &cycle(m)?)?;
            Ok(expect_eq("sdim_f", sdim_f_value(&gh)?, half(n * m)))
        });
    }
    for (n, m) in [(3, 2), (4, 3)] {
        aud.run(format!("cycle:{n} box complete:{m}"), || {
            let (gh, _) = products::cartesian(&cycle(n)?, &complete(m)?)?;
            Ok(expect_eq("sdim_f", sdim_f_value(&gh)?, half(n * m)))
        });
    }
    Ok(())
}

fn c15(aud: &mut Audit) -> Result<()> {
    let specs = [
        "path:2",
        "path:3",
        "path:4",
        "path:5",
        "cycle:3",
        "cycle:4",
        "cycle:5",
        "cycle:6",
        "complete:3",
        "complete:4",
        "star:3",
        "house",
        "petersen",
    ];
    let graphs: Vec<(&str, Graph)> = specs
        .iter()
        .map(|s| by_spec(s).map(|g| (*s, g)))
        .collect::<Result<_>>()?;
    let mut pairs = Vec::new();
    for i in 0..graphs.len() {
        for j in i..graphs.len() {
            if graphs[i].1.n() * graphs[j].1.n() <= 36 {
                pairs.push((i, j));
            }
        }
    }
    let stride = (pairs.len() / 20).max(1);
    let picked: Vec<_> = pairs.iter().step_by(stride).take(20).collect();
    if picked.len() != 20 {
        aud.failures.push(format!(
            "expected 20 cartesian pairs, slate yields {}",
            picked.len()
        ));
    }
    for &&(i, j) in &picked {
        let (gn, g) = &graphs[i];
        let (hn, h) = &graphs[j];
        aud.run(format!("{gn} box {hn}"), || {
            let (gh, _) = products::cartesian(g, h)?;
            let sr_prod = strong_resolving_graph(&gh)?;
            let sr_g = strong_resolving_graph(g)?;
            let sr_h = strong_resolving_graph(h)?;
            let (expected, _) = products::direct(sr_g.graph(), sr_h.graph())?;
            Ok(expect_that(
                "resolving graph of the product is the direct product of the factor resolving graphs",
                is_isomorphic(sr_prod.graph(), &expected)?,
            ))
        });
    }
    Ok(())
}

fn c16(aud: &mut Audit) -> Result<()> {
    for q in 2..=3 {
        aud.run(format!("gapcore:{q} boundary"), || {
            let g = families::generate(&Family::GapCore { q })?;
            let sr = strong_resolving_graph(&g)?;
            Ok(expect_eq("boundary size", sr.boundary().len(), 3 * q + 1))
        });
        for n in 2..=3 {
            aud.run(format!("gapcore:{q} box path:{n}"), || {
                let g = families::generate(&Family::GapCore { q })?;
                let (gh, _) = products::cartesian(&g, &path(n)?)?;
                Ok(expect_eq(
                    "sdim_f",
                    sdim_f_value(&gh)?,
                    rat_int((2 * q + 2) as i64),
                ))
            });
        }
    }
    Ok(())
}

fn c17(aud: &mut Audit) -> Result<()> {
    for i in 0..10u64 {
        let n = 4 + (i as usize) % 5;
        let seed = 1700 + i;
        for k in 2..=3 {
            aud.run(format!("randtree:{n},{seed} box complete:{k}"), || {
                let t = families::generate(&Family::RandomTree { n, seed })?;
                let (gh, _) = products::cartesian(&t, &complete(k)?)?;
                Ok(expect_eq(
                    "sdim_f",
                    sdim_f_value(&gh)?,
                    half(k * t.leaf_count()),
                ))
            });
        }
    }
    Ok(())
}

fn c18(aud: &mut Audit) -> Result<()> {
    for parts in part_vectors(10) {
        let n: usize = parts.iter().sum();
        let a_max = *parts.last().expect("nonempty parts");
        let expected = (n - a_max).min(n / 2);
        aud.run(format!("multipartite {parts:?}"), || {
            let g = families::generate(&Family::CompleteMultipartite {
                parts: parts.clone(),
            })?;
            Ok(expect_eq(
                "matching number",
                matching::matching_number(&g),
                expected,
            ))
        });
    }
    Ok(())
}

fn c19(aud: &mut Audit) -> Result<()> {
    let entries = families::corpus(0x51ab, 500, 12);
    for entry in &entries {
        aud.run(format!("graph {}", entry.name), || {
            sweep_graph(&entry.name, &entry.graph)
        });
    }

    for entry in entries.iter().step_by(23) {
        if !(2..=11).contains(&entry.graph.n()) {
            continue;
        }
        aud.run(format!("cone over {}", entry.name), || {
            cone_bracket_connected(&entry.name, &entry.graph)
        });
    }

    let disconnected = vec![
        ("2k1", Graph::build(2, &[])?),
        ("3k1", Graph::build(3, &[])?),
        (
            "k2+k1",
            Graph::disjoint_union(&[&complete(2)?, &complete(1)?]),
        ),
        (
            "2k2",
            Graph::disjoint_union(&[&complete(2)?, &complete(2)?]),
        ),
        ("c3+k2", Graph::disjoint_union(&[&cycle(3)?, &complete(2)?])),
        ("p3+p2", Graph::disjoint_union(&[&path(3)?, &path(2)?])),
        ("c3+c3", Graph::disjoint_union(&[&cycle(3)?, &cycle(3)?])),
        (
            "k4+k1",
            Graph::disjoint_union(&[&complete(4)?, &complete(1)?]),
        ),
        (
            "star3+k2",
            Graph::disjoint_union(&[&star(3)?, &complete(2)?]),
        ),
        (
            "p4+2k1",
            Graph::disjoint_union(&[&path(4)?, &Graph::build(2, &[])?]),
        ),
    ];
    for (name, h) in &disconnected {
        aud.run(format!("cone over {name}"), || {
            cone_bracket_disconnected(name, h)
        });
    }

    let cart_pairs = [
        ("path:3", "cycle:4"),
        ("path:4", "complete:3"),
        ("cycle:5", "path:2"),
        ("house", "path:3"),
        ("star:3", "cycle:3"),
        ("path:2", "petersen"),
        ("cycle:4", "cycle:4"),
        ("complete:3", "complete:3"),
        ("gapcore:2", "path:2"),
        ("path:5", "path:5"),
        ("cycle:6", "path:4"),
        ("star:4", "cycle:5"),
    ];
    for (gn, hn) in cart_pairs {
        aud.run(format!("{gn} box {hn}"), || cartesian_bounds(gn, hn));
    }

    let lex_pairs: Vec<(&str, Graph, &str, Graph)> = vec![
        ("path:4", path(4)?, "path:3", path(3)?),
        ("cycle:5", cycle(5)?, "path:3", path(3)?),
        ("path:3", path(3)?, "house", by_spec("house")?),
        ("cycle:4", cycle(4)?, "cycle:4", cycle(4)?),
        ("star:3", star(3)?, "complete:3", complete(3)?),
        ("house", by_spec("house")?, "path:3", path(3)?),
        ("cycle:6", cycle(6)?, "cycle:5", cycle(5)?),
        ("petersen", by_spec("petersen")?, "path:3", path(3)?),
        ("path:3", path(3)?, "path:4", path(4)?),
        ("cycle:4", cycle(4)?, "path:4", path(4)?),
        ("path:3", path(3)?, "cycle:6", cycle(6)?),
        ("star:3", star(3)?, "path:5", path(5)?),
        ("path:4", path(4)?, "path:7", path(7)?),
        (
            "path:3",
            path(3)?,
            "k2+k1",
            Graph::disjoint_union(&[&complete(2)?, &complete(1)?]),
        ),
        ("mixedtwins", by_spec("mixedtwins")?, "path:3", path(3)?),
        ("complete:3", complete(3)?, "path:4", path(4)?),
        ("wheel:5", by_spec("wheel:5")?, "path:3", path(3)?),
        ("complete:4", complete(4)?, "path:3", path(3)?),
        ("star:3", star(3)?, "cycle:4", cycle(4)?),
    ];
    for (gn, g, hn, h) in &lex_pairs {
        aud.run(format!("{gn} lex {hn}"), || {
            lexicographic_bounds(&format!("{gn}-lex-{hn}"), g, h)
        });
    }
    Ok(())
}

/// The per-graph invariant suite: sandwich bounds, structural equalities,
/// the reduced LP route, optimal-face behavior at cut vertices, and the
/// locating variant.
fn sweep_graph(name: &str, g: &Graph) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let f = optimize::sdim_f(g)?.value;
    let reduced = optimize::sdim_f_reduced(g)?.value;
    let sr = strong_resolving_graph(g)?;
    let m = sr.boundary().len();
    let nu = matching::matching_number(sr.graph());
    let tau = vcover::vertex_cover_number(sr.graph())?;

    problems.extend(expect_le(
        "matching number <= sdim_f",
        &rat_int(nu as i64),
        &f,
    ));
    problems.extend(expect_le("sdim/2 <= sdim_f", &half(tau), &f));
    problems.extend(expect_le("1 <= sdim_f", &rat_int(1), &f));
    problems.extend(expect_le("sdim_f <= half the boundary", &f, &half(m)));
    problems.extend(expect_le("sdim_f <= sdim", &f, &rat_int(tau as i64)));
    problems.extend(expect_eq("reduced LP value", reduced, f.clone()));

    let profiles = sr.graph().component_profile();
    if profiles.iter().all(|p| p.is_bipartite) {
        problems.extend(expect_eq(
            "bipartite resolving graph: sdim_f vs sdim",
            f.clone(),
            rat_int(tau as i64),
        ));
    }
    if profiles.iter().all(|p| p.is_regular) {
        problems.extend(expect_eq(
            "regular components: sdim_f vs half the boundary",
            f.clone(),
            half(m),
        ));
    }

    for &v in g.cut_vertices()?.iter().take(3) {
        let lo = optimize::min_weight_on_optimal_face(g, &[v])?;
        problems.extend(expect_eq(
            &format!("optimal-face minimum at cut vertex {v}"),
            lo,
            rat_int(0),
        ));
    }

    let slf = optimize::sl_f(g)?.value;
    problems.extend(expect_le("sdim_f <= sl_f", &f, &slf));
    let diam = all_pairs_distances(g).diameter();
    if matches!(diam, Some(d) if d <= 2) {
        problems.extend(expect_eq("diameter <= 2: sl_f vs sdim_f", slf, f));
    }

    if !problems.is_empty() {
        if let Some(p) = archive_fixture(&format!("sweep-{}", slug(name)), g, &problems) {
            problems.push(format!("fixture {}", p.display()));
        }
    }
    Ok(problems)
}

fn cone_bracket_connected(name: &str, g: &Graph) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let (cone, _) = products::corona(&complete(1)?, g)?;
    let value = sdim_f_value(&cone)?;
    let base = sdim_f_value(g)?;
    problems.extend(expect_le(
        "sdim_f of the base <= sdim_f of the cone",
        &base,
        &value,
    ));
    problems.extend(expect_le(
        "sdim_f of the cone <= (1+m)/2",
        &value,
        &half(1 + g.n()),
    ));
    if !problems.is_empty() {
        if let Some(p) = archive_fixture(&format!("cone-{}", slug(name)), g, &problems) {
            problems.push(format!("fixture {}", p.display()));
        }
    }
    Ok(problems)
}

fn cone_bracket_disconnected(name: &str, h: &Graph) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let m = h.n();
    let a_max = h
        .connected_components()
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0);
    let lower = (m - a_max).min(m / 2);
    let (cone, _) = products::corona(&complete(1)?, h)?;
    let value = sdim_f_value(&cone)?;
    problems.extend(expect_le(
        "component bracket <= sdim_f of the cone",
        &rat_int(lower as i64),
        &value,
    ));
    problems.extend(expect_le("sdim_f of the cone <= m/2", &value, &half(m)));
    if !problems.is_empty() {
        if let Some(p) = archive_fixture(&format!("cone-{}", slug(name)), h, &problems) {
            problems.push(format!("fixture {}", p.display()));
        }
    }
    Ok(problems)
}

fn cartesian_bounds(gspec: &str, hspec: &str) -> Result<Vec<String>> {
    let g = by_spec(gspec)?;
    let h = by_spec(hspec)?;
    let (gh, _) = products::cartesian(&g, &h)?;
    let fg = sdim_f_value(&g)?;
    let fh = sdim_f_value(&h)?;
    let fgh = sdim_f_value(&gh)?;
    let sr_g = strong_resolving_graph(&g)?;
    let sr_h = strong_resolving_graph(&h)?;
    let sr_gh = strong_resolving_graph(&gh)?;
    let (mg, mh) = (sr_g.boundary().len(), sr_h.boundary().len());

    let mut problems = Vec::new();
    problems.extend(expect_le(
        "2 sdim_f of the left factor <= sdim_f",
        &(rat_int(2) * fg.clone()),
        &fgh,
    ));
    problems.extend(expect_le(
        "2 sdim_f of the right factor <= sdim_f",
        &(rat_int(2) * fh.clone()),
        &fgh,
    ));
    problems.extend(expect_le(
        "sdim_f <= left boundary times right sdim_f",
        &fgh,
        &(rat_int(mg as i64) * fh),
    ));
    problems.extend(expect_le(
        "sdim_f <= right boundary times left sdim_f",
        &fgh,
        &(rat_int(mh as i64) * fg),
    ));
    problems.extend(expect_eq(
        "boundary of the product",
        sr_gh.boundary().len(),
        mg * mh,
    ));
    let complete_right = h.n() >= 2 && h.edge_count() == h.n() * (h.n() - 1) / 2;
    if complete_right {
        let nu_g = matching::matching_number(sr_g.graph());
        problems.extend(expect_le(
            "k times the left matching number <= sdim_f",
            &rat_int((h.n() * nu_g) as i64),
            &fgh,
        ));
    }
    if !problems.is_empty() {
        if let Some(p) = archive_fixture(
            &format!("box-{}-{}", slug(gspec), slug(hspec)),
            &gh,
            &problems,
        ) {
            problems.push(format!("fixture {}", p.display()));
        }
    }
    Ok(problems)
}

/// Bound checks for one lexicographic pair: the twin-decomposition lower
/// bound whenever the right factor is connected, and the boundary-counting
/// bounds whenever the left factor has no true twins. A right factor of
/// diameter above two (or disconnected) is replaced by its cone for the
/// right-hand data, which is exactly when pairs inside one copy stop
/// resolving at distance two.
fn lexicographic_bounds(tag: &str, g: &Graph, h: &Graph) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let (n, m) = (g.n(), h.n());
    let (gh, _) = products::lexicographic(g, h)?;
    let fgh = sdim_f_value(&gh)?;
    let fg = sdim_f_value(g)?;

    if h.is_connected() && m >= 2 {
        let tp = g.twin_partition();
        let slf_h = optimize::sl_f(h)?.value;
        let (k2h, _) = products::lexicographic(&complete(2)?, h)?;
        let bound = rat_int(tp.m1() as i64) * slf_h
            + half(tp.m2()) * sdim_f_value(&k2h)?
            + half(tp.m3() * m);
        problems.extend(expect_le("twin lower bound <= sdim_f", &bound, &fgh));
    }

    if !g.has_true_twins() {
        let n_prime = strong_resolving_graph(g)?.boundary().len();
        let diam_h = all_pairs_distances(h).diameter();
        let shallow = matches!(diam_h, Some(d) if d <= 2);
        let (f_right, m_prime) = if shallow {
            (
                sdim_f_value(h)?,
                strong_resolving_graph(h)?.boundary().len(),
            )
        } else {
            let (cone, _) = products::corona(&complete(1)?, h)?;
            (
                sdim_f_value(&cone)?,
                strong_resolving_graph(&cone)?.boundary().len(),
            )
        };
        let lower1 =
            rat_int(n as i64) * f_right.clone() + rat_int((m - m_prime) as i64) * fg.clone();
        let lower2 = rat_int((n - n_prime) as i64) * f_right + rat_int(m as i64) * fg.clone();
        let upper = half(n * m_prime + m * n_prime - n_prime * m_prime);
        problems.extend(expect_le(
            "first boundary lower bound <= sdim_f",
            &lower1,
            &fgh,
        ));
        problems.extend(expect_le(
            "second boundary lower bound <= sdim_f",
            &lower2,
            &fgh,
        ));
        problems.extend(expect_le("sdim_f <= boundary upper bound", &fgh, &upper));
        if shallow {
            let m_gh = strong_resolving_graph(&gh)?.boundary().len();
            problems.extend(expect_eq(
                "boundary of the product",
                m_gh,
                n * m_prime + m * n_prime - n_prime * m_prime,
            ));
        }
    }

    if !problems.is_empty() {
        if let Some(p) = archive_fixture(&format!("lex-{}", slug(tag)), &gh, &problems) {
            problems.push(format!("fixture {}", p.display()));
        }
    }
    Ok(problems)
}

fn c20(aud: &mut Audit) -> Result<()> {
    for k in 1..=3 {
        aud.run(format!("cycle:{} box complete:2", 2 * k + 1), || {
            let g = cycle(2 * k + 1)?;
            let (gh, _) = products::cartesian(&g, &complete(2)?)?;
            let sd_prod = optimize::sdim(&gh)?;
            let sd_g = optimize::sdim(&g)?;
            let mut problems = expect_eq("sdim of the prism", sd_prod, 2 * k + 1);
            problems.extend(expect_that(
                "sdim of the prism < twice sdim of the cycle",
                sd_prod < 2 * sd_g,
            ));
            Ok(problems)
        });
    }
    Ok(())
}
