//! Exact covering LPs over the rationals.
//!
//! The shape solved here is always the same: minimize the total weight
//! placed on `n_vars` variables so that every listed support receives weight
//! at least 1, with each variable kept in `[0, 1]`. Everything runs in exact
//! `BigRational` arithmetic with Bland's rule, so there is no tolerance
//! anywhere and cycling cannot occur.
//!
//! [`solve_covering`] works on the packing dual (maximize the number of
//! fractionally chosen supports subject to unit capacity per variable). The
//! dual starts from the all-slack basis, which is feasible outright, so no
//! artificial variables are needed; the primal witness is read off the slack
//! reduced costs at optimality. Before returning, the solution is checked
//! against the constraints and against the dual value, which certifies
//! optimality by weak duality independently of the pivoting code.
//!
//! [`extreme_on_face`] answers a follow-up question: over all optimal (or,
//! generally, fixed-total) weightings, how large or small can a given linear
//! functional get? That slice needs equality rows and explicit upper bounds,
//! so it goes through a conventional two-phase simplex.

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// A unit-coverage problem: supports over `0..n_vars`, each of which must
/// collect total weight at least 1.
#[derive(Clone, Debug)]
pub struct LpProblem {
    n_vars: usize,
    supports: Vec<Vec<usize>>,
}

impl LpProblem {
    /// Validates and canonicalizes the supports (sorted, no duplicates
    /// within a support). Empty supports are rejected: they would make the
    /// problem infeasible.
    pub fn new(n_vars: usize, supports: Vec<Vec<usize>>) -> Result<Self> {
        let mut cleaned = Vec::with_capacity(supports.len());
        for (idx, mut s) in supports.into_iter().enumerate() {
            s.sort_unstable();
            s.dedup();
            if s.is_empty() {
                return Err(Error::InvalidParams(format!(
                    "constraint {idx} has an empty support"
                )));
            }
            let &max = s.last().expect("support is non-empty");
            if max >= n_vars {
                return Err(Error::VertexOutOfRange {
                    id: max,
                    order: n_vars,
                });
            }
            cleaned.push(s);
        }
        Ok(Self {
            n_vars,
            supports: cleaned,
        })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn constraint_count(&self) -> usize {
        self.supports.len()
    }

    pub fn supports(&self) -> &[Vec<usize>] {
        &self.supports
    }

    /// Drops duplicate supports and any support that contains another one:
    /// once the smaller support is covered, the larger is covered for free.
    /// The feasible set is unchanged.
    pub fn reduced(&self) -> LpProblem {
        let words = self.n_vars.div_ceil(64);
        let mut sets: Vec<(Vec<u64>, &Vec<usize>)> = self
            .supports
            .iter()
            .map(|s| (to_bits(s, words), s))
            .collect();
        sets.sort_by_key(|(_, s)| s.len());
        let mut kept: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
        for (bits, support) in sets {
            if kept.iter().any(|(k, _)| is_subset(k, &bits)) {
                continue;
            }
            kept.push((bits, support.clone()));
        }
        LpProblem {
            n_vars: self.n_vars,
            supports: kept.into_iter().map(|(_, s)| s).collect(),
        }
    }
}

fn to_bits(support: &[usize], words: usize) -> Vec<u64> {
    let mut bits = vec![0u64; words];
    for &i in support {
        bits[i / 64] |= 1 << (i % 64);
    }
    bits
}

fn is_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// A weighting of the variables, exact and indexable by vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    values: Vec<Rational>,
}

impl WeightFunction {
    pub fn new(values: Vec<Rational>) -> Self {
        Self { values }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            values: vec![Rational::zero(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, i: usize) -> &Rational {
        &self.values[i]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn total(&self) -> Rational {
        self.values.iter().sum()
    }

    pub fn support_sum(&self, support: &[usize]) -> Rational {
        support.iter().map(|&i| &self.values[i]).sum()
    }

    /// Unit coverage of every support, with all values in `[0, 1]`.
    pub fn is_feasible_for(&self, problem: &LpProblem) -> bool {
        if self.values.len() != problem.n_vars() {
            return false;
        }
        let one = Rational::one();
        self.values.iter().all(|v| !v.is_negative() && *v <= one)
            && problem
                .supports()
                .iter()
                .all(|s| self.support_sum(s) >= one)
    }
}

/// An optimal weighting together with its (certified) total.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub value: Rational,
    pub witness: WeightFunction,
}

const MAX_PIVOTS: usize = 1_000_000;

enum Step {
    Optimal,
    Unbounded,
}

/// Dense simplex tableau kept in basis-reduced form: `rows` is B⁻¹A with an
/// identity embedded on the basic columns, `rhs` is B⁻¹b (componentwise
/// nonnegative), `zrow[j]` is the reduced cost cᵦB⁻¹Aⱼ − cⱼ, and `value` is
/// the current objective (maximization convention).
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    zrow: Vec<Rational>,
    value: Rational,
    basis: Vec<usize>,
}

impl Tableau {
    /// `rows`/`rhs` must already be reduced with respect to `basis` (the
    /// basic columns form an identity). Prices the objective out of the
    /// basic rows so the invariants hold from the start.
    fn new(
        rows: Vec<Vec<Rational>>,
        rhs: Vec<Rational>,
        c: &[Rational],
        basis: Vec<usize>,
    ) -> Self {
        let ncols = c.len();
        let mut zrow: Vec<Rational> = c.iter().map(|cj| -cj).collect();
        let mut value = Rational::zero();
        for (r, &bcol) in basis.iter().enumerate() {
            let cb = c[bcol].clone();
            if cb.is_zero() {
                continue;
            }
            for j in 0..ncols {
                if !rows[r][j].is_zero() {
                    zrow[j] += &cb * &rows[r][j];
                }
            }
            value += &cb * &rhs[r];
        }
        Self {
            rows,
            rhs,
            zrow,
            value,
            basis,
        }
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let ncols = self.zrow.len();
        let piv = self.rows[r][col].clone();
        debug_assert!(!piv.is_zero());
        for x in &mut self.rows[r] {
            if !x.is_zero() {
                *x = &*x / &piv;
            }
        }
        self.rhs[r] = &self.rhs[r] / &piv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][col].is_zero() {
                continue;
            }
            let f = self.rows[i][col].clone();
            for j in 0..ncols {
                if !self.rows[r][j].is_zero() {
                    let t = &f * &self.rows[r][j];
                    self.rows[i][j] -= t;
                }
            }
            let t = &f * &self.rhs[r];
            self.rhs[i] -= t;
        }
        let f = self.zrow[col].clone();
        if !f.is_zero() {
            for j in 0..ncols {
                if !self.rows[r][j].is_zero() {
                    let t = &f * &self.rows[r][j];
                    self.zrow[j] -= t;
                }
            }
            let t = &f * &self.rhs[r];
            self.value -= t;
        }
        self.basis[r] = col;
    }

    /// Bland's rule: lowest-index entering column with negative reduced
    /// cost, lowest-index basic variable among the minimum ratios.
    fn run(&mut self) -> Step {
        for _ in 0..MAX_PIVOTS {
            let Some(col) = self.zrow.iter().position(|z| z.is_negative()) else {
                return Step::Optimal;
            };
            let mut leave: Option<usize> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][col].is_positive() {
                    continue;
                }
                leave = Some(match leave {
                    None => r,
                    Some(best) => {
                        let lhs = &self.rhs[r] * &self.rows[best][col];
                        let rhs = &self.rhs[best] * &self.rows[r][col];
                        match lhs.cmp(&rhs) {
                            std::cmp::Ordering::Less => r,
                            std::cmp::Ordering::Greater => best,
                            std::cmp::Ordering::Equal => {
                                if self.basis[r] < self.basis[best] {
                                    r
                                } else {
                                    best
                                }
                            }
                        }
                    }
                });
            }
            match leave {
                Some(r) => self.pivot(r, col),
                None => return Step::Unbounded,
            }
        }
        unreachable!("Bland's rule terminates; the pivot cap is a safety net");
    }
}

/// Minimizes the total weight subject to unit coverage of every support.
/// Always solvable: the all-ones weighting is feasible. The returned witness
/// is feasible, lies in `[0, 1]`, and its total equals `value`; both sides
/// of the duality gap are checked before returning.
pub fn solve_covering(problem: &LpProblem) -> LpSolution {
    let reduced = problem.reduced();
    let n = reduced.n_vars();
    let k = reduced.constraint_count();
    if k == 0 {
        return LpSolution {
            value: Rational::zero(),
            witness: WeightFunction::zero(n),
        };
    }

    // Packing dual: maximize 1ᵀy subject to (per variable i)
    // Σ {y_j : i ∈ support_j} ≤ 1, y ≥ 0. Columns 0..k are the y's,
    // columns k..k+n their slacks, which form the initial basis.
    let ncols = k + n;
    let mut rows = vec![vec![Rational::zero(); ncols]; n];
    for (j, support) in reduced.supports().iter().enumerate() {
        for &i in support {
            rows[i][j] = Rational::one();
        }
    }
    for (i, row) in rows.iter_mut().enumerate() {
        row[k + i] = Rational::one();
    }
    let rhs = vec![Rational::one(); n];
    let mut c = vec![Rational::one(); k];
    c.extend(std::iter::repeat_with(Rational::zero).take(n));
    let basis: Vec<usize> = (k..k + n).collect();

    let mut tab = Tableau::new(rows, rhs, &c, basis);
    match tab.run() {
        Step::Optimal => {}
        Step::Unbounded => unreachable!("packing objective is capped by the number of variables"),
    }

    // Primal witness: the slack reduced costs are the simplex multipliers,
    // which solve the covering problem at the same value.
    let witness = WeightFunction::new(tab.zrow[k..k + n].to_vec());

    // Packing certificate: read y off the basis and re-check it from scratch.
    let mut packing = vec![Rational::zero(); k];
    for (r, &bcol) in tab.basis.iter().enumerate() {
        if bcol < k {
            packing[bcol] = tab.rhs[r].clone();
        }
    }
    let one = Rational::one();
    assert!(packing.iter().all(|y| !y.is_negative()));
    for i in 0..n {
        let load: Rational = reduced
            .supports()
            .iter()
            .enumerate()
            .filter(|(_, s)| s.binary_search(&i).is_ok())
            .map(|(j, _)| &packing[j])
            .sum();
        assert!(load <= one, "packing certificate violates capacity");
    }
    let packing_total: Rational = packing.iter().sum();

    assert!(
        witness.is_feasible_for(problem),
        "witness must cover every original constraint"
    );
    assert_eq!(
        witness.total(),
        tab.value,
        "witness total must equal the LP value"
    );
    assert_eq!(
        packing_total, tab.value,
        "packing and covering values must agree"
    );

    LpSolution {
        value: tab.value,
        witness,
    }
}

/// Extreme value of `objective · x` over the coverage polytope sliced at a
/// fixed total weight: unit coverage of every support, all variables in
/// `[0, 1]`, and `Σ x = total`. With `total` set to the covering optimum
/// this ranges over exactly the optimal weightings. Errors when the slice is
/// empty (the total is not achievable).
pub fn extreme_on_face(
    problem: &LpProblem,
    total: &Rational,
    objective: &[Rational],
    maximize: bool,
) -> Result<Rational> {
    if objective.len() != problem.n_vars() {
        return Err(Error::InvalidParams(format!(
            "objective has {} entries for {} variables",
            objective.len(),
            problem.n_vars()
        )));
    }
    let reduced = problem.reduced();
    let n = reduced.n_vars();
    let k = reduced.constraint_count();

    // Rows: k coverage rows (x(S) − surplus = 1), one total row (Σ x = t),
    // n upper-bound rows (x_i + slack = 1). Columns: n variables, k
    // surpluses, n upper slacks, then k + 1 artificials for the rows that
    // have no natural basic variable.
    let m = k + 1 + n;
    let real_cols = n + k + n;
    let ncols = real_cols + k + 1;
    let mut rows = vec![vec![Rational::zero(); ncols]; m];
    let mut rhs = vec![Rational::one(); m];
    let mut basis = vec![0usize; m];
    for (j, support) in reduced.supports().iter().enumerate() {
        for &i in support {
            rows[j][i] = Rational::one();
        }
        rows[j][n + j] = -Rational::one();
        rows[j][real_cols + j] = Rational::one();
        basis[j] = real_cols + j;
    }
    for cell in rows[k].iter_mut().take(n) {
        *cell = Rational::one();
    }
    rows[k][real_cols + k] = Rational::one();
    rhs[k] = total.clone();
    basis[k] = real_cols + k;
    if total.is_negative() {
        return Err(Error::InvalidParams(
            "target total weight is negative".into(),
        ));
    }
    for i in 0..n {
        let r = k + 1 + i;
        rows[r][i] = Rational::one();
        rows[r][n + k + i] = Rational::one();
        basis[r] = n + k + i;
    }

    // Phase 1: drive the artificials to zero.
    let mut c1 = vec![Rational::zero(); ncols];
    for cj in c1.iter_mut().take(ncols).skip(real_cols) {
        *cj = -Rational::one();
    }
    let mut tab = Tableau::new(rows, rhs, &c1, basis);
    match tab.run() {
        Step::Optimal => {}
        Step::Unbounded => unreachable!("phase-1 objective is bounded above by zero"),
    }
    if !tab.value.is_zero() {
        return Err(Error::InvalidParams(format!(
            "no feasible weighting attains total {total}"
        )));
    }

    // Remove artificials from the basis (degenerate pivots), dropping any
    // row that has become redundant.
    let mut r = 0;
    while r < tab.basis.len() {
        if tab.basis[r] >= real_cols {
            match (0..real_cols).find(|&j| !tab.rows[r][j].is_zero()) {
                Some(j) => tab.pivot(r, j),
                None => {
                    assert!(tab.rhs[r].is_zero(), "redundant row must carry zero");
                    tab.rows.swap_remove(r);
                    tab.rhs.swap_remove(r);
                    tab.basis.swap_remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }

    // Phase 2 on the real columns only.
    let rows2: Vec<Vec<Rational>> = tab
        .rows
        .iter()
        .map(|row| row[..real_cols].to_vec())
        .collect();
    let mut c2 = vec![Rational::zero(); real_cols];
    for (i, w) in objective.iter().enumerate() {
        c2[i] = if maximize { w.clone() } else { -w.clone() };
    }
    let mut tab2 = Tableau::new(rows2, tab.rhs, &c2, tab.basis);
    match tab2.run() {
        Step::Optimal => {}
        Step::Unbounded => unreachable!("all variables of the slice are bounded"),
    }

    // Re-check the attained point before trusting the value.
    let mut point = vec![Rational::zero(); n];
    for (r, &bcol) in tab2.basis.iter().enumerate() {
        if bcol < n {
            point[bcol] = tab2.rhs[r].clone();
        }
    }
    let witness = WeightFunction::new(point);
    assert!(
        witness.is_feasible_for(&reduced),
        "face point must be feasible"
    );
    assert_eq!(
        &witness.total(),
        total,
        "face point must hit the target total"
    );
    let attained: Rational = objective
        .iter()
        .zip(witness.values())
        .map(|(w, x)| w * x)
        .sum();
    let value = if maximize { tab2.value } else { -tab2.value };
    assert_eq!(attained, value, "objective at the face point must match");
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::optimize::rational::{rat, rat_int};
    use num_traits::ToPrimitive;

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

        fn below(&mut self, n: usize) -> usize {
            (self.next() % n as u64) as usize
        }
    }

    fn problem(n: usize, supports: &[&[usize]]) -> LpProblem {
        LpProblem::new(n, supports.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    /// Exact Gauss-Jordan solve of a square system; `None` when singular.
    fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
        let n = b.len();
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, piv);
            b.swap(col, piv);
            let p = a[col][col].clone();
            for x in &mut a[col] {
                if !x.is_zero() {
                    *x = &*x / &p;
                }
            }
            b[col] = &b[col] / &p;
            let pivot_row = std::mem::take(&mut a[col]);
            for (r, row) in a.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    if !pv.is_zero() {
                        let t = &f * pv;
                        *x -= t;
                    }
                }
                let t = &f * &b[col];
                b[r] -= t;
            }
            a[col] = pivot_row;
        }
        Some(b)
    }

    /// Every vertex of the (optionally total-sliced) coverage polytope, by
    /// brute-force enumeration of n-subsets of the defining hyperplanes.
    /// Entirely independent of the simplex code.
    fn oracle_vertices(problem: &LpProblem, fixed_total: Option<&Rational>) -> Vec<Vec<Rational>> {
        let n = problem.n_vars();
        let mut planes: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for s in problem.supports() {
            let mut row = vec![Rational::zero(); n];
            for &i in s {
                row[i] = Rational::one();
            }
            planes.push((row, Rational::one()));
        }
        for i in 0..n {
            let mut lo = vec![Rational::zero(); n];
            lo[i] = Rational::one();
            planes.push((lo.clone(), Rational::zero()));
            planes.push((lo, Rational::one()));
        }
        if let Some(t) = fixed_total {
            planes.push((vec![Rational::one(); n], t.clone()));
        }
        let mut found = Vec::new();
        let mut pick = vec![0usize; n];
        enumerate_subsets(planes.len(), n, &mut pick, 0, 0, &mut |chosen| {
            let a: Vec<Vec<Rational>> = chosen.iter().map(|&i| planes[i].0.clone()).collect();
            let b: Vec<Rational> = chosen.iter().map(|&i| planes[i].1.clone()).collect();
            if let Some(x) = solve_square(a, b) {
                let w = WeightFunction::new(x.clone());
                if w.is_feasible_for(problem) && fixed_total.is_none_or(|t| &w.total() == t) {
                    found.push(x);
                }
            }
        });
        found
    }

    fn enumerate_subsets(
        pool: usize,
        want: usize,
        pick: &mut Vec<usize>,
        depth: usize,
        start: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        if depth == want {
            f(pick);
            return;
        }
        for i in start..pool {
            pick[depth] = i;
            enumerate_subsets(pool, want, pick, depth + 1, i + 1, f);
        }
    }

    fn oracle_covering_min(problem: &LpProblem) -> Rational {
        oracle_vertices(problem, None)
            .into_iter()
            .map(|x| x.iter().sum::<Rational>())
            .min()
            .expect("coverage polytope has a vertex")
    }

    fn oracle_face_extreme(
        problem: &LpProblem,
        total: &Rational,
        objective: &[Rational],
        maximize: bool,
    ) -> Option<Rational> {
        let vals = oracle_vertices(problem, Some(total)).into_iter().map(|x| {
            objective
                .iter()
                .zip(&x)
                .map(|(w, v)| w * v)
                .sum::<Rational>()
        });
        if maximize {
            vals.max()
        } else {
            vals.min()
        }
    }

    #[test]
    fn covering_knowns() {
        // Three pairwise constraints force one half everywhere.
        let p = problem(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let sol = solve_covering(&p);
        assert_eq!(sol.value, rat(3, 2));
        assert_eq!(sol.witness.values(), &[rat(1, 2), rat(1, 2), rat(1, 2)]);

        let p = problem(4, &[&[0, 1, 2, 3]]);
        assert_eq!(solve_covering(&p).value, rat_int(1));

        let p = problem(2, &[&[0], &[1]]);
        assert_eq!(solve_covering(&p).value, rat_int(2));

        let p = problem(3, &[&[0], &[0, 1], &[0, 1, 2]]);
        let sol = solve_covering(&p);
        assert_eq!(sol.value, rat_int(1));
        assert_eq!(*sol.witness.get(0), rat_int(1));

        let p = problem(5, &[]);
        assert_eq!(solve_covering(&p).value, rat_int(0));
    }

    #[test]
    fn problem_validation() {
        assert!(matches!(
            LpProblem::new(3, vec![vec![]]),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            LpProblem::new(3, vec![vec![0, 3]]),
            Err(Error::VertexOutOfRange { id: 3, order: 3 })
        ));
        let p = LpProblem::new(3, vec![vec![2, 0, 2]]).unwrap();
        assert_eq!(p.supports()[0], vec![0, 2]);
    }

    #[test]
    fn reduce_drops_duplicates_and_supersets() {
        let p = problem(
            4,
            &[&[0, 1], &[1, 0], &[0, 1, 2], &[2, 3], &[1, 2, 3], &[3, 2]],
        );
        let r = p.reduced();
        let mut kept = r.supports().to_vec();
        kept.sort();
        assert_eq!(kept, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(solve_covering(&p).value, solve_covering(&r).value);
    }

    #[test]
    fn covering_matches_vertex_enumeration_on_random_problems() {
        let mut rng = XorShift::new(0x5eed_c0de);
        for _ in 0..120 {
            let n = 2 + rng.below(3);
            let k = 1 + rng.below(5);
            let mut supports = Vec::new();
            for _ in 0..k {
                let mut mask = 0usize;
                while mask == 0 {
                    mask = rng.below(1 << n);
                }
                supports.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
            }
            let p = LpProblem::new(n, supports).unwrap();
            let sol = solve_covering(&p);
            assert!(sol.witness.is_feasible_for(&p));
            assert_eq!(sol.witness.total(), sol.value);
            assert_eq!(
                sol.value,
                oracle_covering_min(&p),
                "problem {:?}",
                p.supports()
            );
        }
    }

    #[test]
    fn probe_finds_face_extremes() {
        // The pairwise-constraint triangle has a unique optimum.
        let p = problem(3, &[&[0, 1], &[0, 2], &[1, 2]]);
        let opt = solve_covering(&p).value;
        let e0 = [rat_int(1), rat_int(0), rat_int(0)];
        assert_eq!(extreme_on_face(&p, &opt, &e0, true).unwrap(), rat(1, 2));
        assert_eq!(extreme_on_face(&p, &opt, &e0, false).unwrap(), rat(1, 2));

        // A middle variable covered only by a superset constraint is forced
        // to zero on the optimal face.
        let p = problem(3, &[&[0, 1, 2], &[0, 2]]);
        let opt = solve_covering(&p).value;
        assert_eq!(opt, rat_int(1));
        let e1 = [rat_int(0), rat_int(1), rat_int(0)];
        assert_eq!(extreme_on_face(&p, &opt, &e1, true).unwrap(), rat_int(0));

        // A single two-element constraint leaves the whole segment free.
        let p = problem(2, &[&[0, 1]]);
        let opt = solve_covering(&p).value;
        let e0 = [rat_int(1), rat_int(0)];
        assert_eq!(extreme_on_face(&p, &opt, &e0, true).unwrap(), rat_int(1));
        assert_eq!(extreme_on_face(&p, &opt, &e0, false).unwrap(), rat_int(0));
    }

    #[test]
    fn probe_matches_vertex_enumeration_on_random_problems() {
        let mut rng = XorShift::new(0xface_face);
        for _ in 0..60 {
            let n = 2 + rng.below(3);
            let k = 1 + rng.below(4);
            let mut supports = Vec::new();
            for _ in 0..k {
                let mut mask = 0usize;
                while mask == 0 {
                    mask = rng.below(1 << n);
                }
                supports.push((0..n).filter(|i| mask >> i & 1 == 1).collect());
            }
            let p = LpProblem::new(n, supports).unwrap();
            let opt = solve_covering(&p).value;
            let mut objective = vec![Rational::zero(); n];
            objective[rng.below(n)] = Rational::one();
            for maximize in [true, false] {
                let got = extreme_on_face(&p, &opt, &objective, maximize).unwrap();
                let want = oracle_face_extreme(&p, &opt, &objective, maximize)
                    .expect("optimal face is never empty");
                assert_eq!(got, want, "problem {:?}", p.supports());
            }
        }
    }

    #[test]
    fn probe_rejects_unachievable_targets() {
        let p = problem(2, &[&[0], &[1]]);
        let e0 = [rat_int(1), rat_int(0)];
        assert!(matches!(
            extreme_on_face(&p, &rat(3, 2), &e0, true),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            extreme_on_face(&p, &rat_int(5), &e0, true),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            extreme_on_face(&p, &(-rat_int(1)), &e0, true),
            Err(Error::InvalidParams(_))
        ));
        assert!(extreme_on_face(&p, &rat_int(2), &e0, true).is_ok());
        // Wrong objective length is caught before any solving.
        assert!(matches!(
            extreme_on_face(&p, &rat_int(2), &[rat_int(1)], true),
            Err(Error::InvalidParams(_))
        ));
    }

    #[test]
    fn values_stay_exact_for_awkward_fractions() {
        // Five constraints in a ring give 5/2, which a float pipeline would
        // represent only approximately after enough pivots.
        let p = problem(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]]);
        let sol = solve_covering(&p);
        assert_eq!(sol.value, rat(5, 2));
        assert!(sol.value.to_f64().is_some());
    }
}
