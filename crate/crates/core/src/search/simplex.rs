//! Dense two-phase simplex method.
//!
//! Entering columns are picked by the most negative reduced cost and leaving
//! rows by a Harris two-pass ratio test; after a run of degenerate pivots the
//! method switches to Bland's smallest-index rule, which cannot cycle. Rows
//! and columns are rescaled before solving and the final vertex is recomputed
//! from the original rows. Every tie is broken by index, so the result is a
//! deterministic function of the input.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// Bounds on one variable; `None` means unbounded on that side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarBounds {
    pub lower: Option<f64>,
    pub upper: Option<f64>,
}

impl VarBounds {
    pub const FREE: VarBounds = VarBounds {
        lower: None,
        upper: None,
    };
    pub const NONNEGATIVE: VarBounds = VarBounds {
        lower: Some(0.0),
        upper: None,
    };
    pub const NONPOSITIVE: VarBounds = VarBounds {
        lower: None,
        upper: Some(0.0),
    };
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<VarBounds>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let n = objective.len();
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
            bounds: vec![VarBounds::NONNEGATIVE; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LpError {
    #[error("constraint {0} has {1} coefficients for {2} variables")]
    Shape(usize, usize, usize),
    #[error("variable {0} has lower bound above upper bound")]
    EmptyBounds(usize),
    #[error("non-finite input")]
    NotFinite,
    #[error("no optimum after {0} pivots")]
    IterationLimit(usize),
    #[error("solution violates constraint {row} by {excess:e}")]
    Numerical { row: usize, excess: f64 },
}

const PIVOT_TOL: f64 = 1e-11;
const DROP_TOL: f64 = 1e-9;
const COST_TOL: f64 = 1e-10;
const FEAS_TOL: f64 = 1e-9;
const DEGENERATE_RUN: usize = 50;
const MAX_PIVOTS: usize = 200_000;

/// How each original variable is expressed through nonnegative columns.
#[derive(Debug, Clone, Copy)]
enum VarMap {
    /// `x = offset + y`
    Shift { col: usize, offset: f64 },
    /// `x = offset - y`
    Reflect { col: usize, offset: f64 },
    /// `x = y⁺ - y⁻`
    Split { pos: usize, neg: usize },
}

struct Tableau {
    rows: usize,
    cols: usize,
    /// `rows x (cols + 1)`, last column is the right-hand side
    a: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    fn at(&self, r: usize, c: usize) -> f64 {
        self.a[r * (self.cols + 1) + c]
    }

    fn remove_row(&mut self, r: usize) {
        let w = self.cols + 1;
        self.a.drain(r * w..(r + 1) * w);
        self.basis.remove(r);
        self.rows -= 1;
    }

    fn rhs(&self, r: usize) -> f64 {
        self.at(r, self.cols)
    }

    fn pivot(&mut self, r: usize, c: usize, cost: &mut [f64]) {
        let w = self.cols + 1;
        let p = self.a[r * w + c];
        for v in &mut self.a[r * w..(r + 1) * w] {
            *v /= p;
        }
        let prow: Vec<f64> = self.a[r * w..(r + 1) * w].to_vec();
        for i in 0..self.rows {
            if i == r {
                continue;
            }
            let f = self.a[i * w + c];
            if f != 0.0 {
                let row = &mut self.a[i * w..(i + 1) * w];
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= f * pv;
                }
                row[c] = 0.0;
            }
        }
        let f = cost[c];
        if f != 0.0 {
            for (v, pv) in cost.iter_mut().zip(&prow) {
                *v -= f * pv;
            }
            cost[c] = 0.0;
        }
        self.basis[r] = c;
    }

    /// Minimum ratio, ties to the smallest basic index.
    fn textbook_ratio(&self, c: usize) -> Option<(usize, f64)> {
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..self.rows {
            let v = self.at(r, c);
            if v <= PIVOT_TOL {
                continue;
            }
            let ratio = self.rhs(r).max(0.0) / v;
            let better = match leave {
                None => true,
                Some((lr, lratio)) => ratio < lratio || ratio == lratio && self.basis[r] < self.basis[lr],
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        leave
    }

    /// Harris two-pass test: among rows whose ratio is within the feasibility
    /// tolerance of the minimum, take the largest pivot.
    fn harris_ratio(&self, c: usize) -> Option<(usize, f64)> {
        let mut bound = f64::INFINITY;
        for r in 0..self.rows {
            let v = self.at(r, c);
            if v > PIVOT_TOL {
                bound = bound.min((self.rhs(r).max(0.0) + FEAS_TOL) / v);
            }
        }
        if bound == f64::INFINITY {
            return None;
        }
        let mut leave: Option<(usize, f64)> = None;
        for r in 0..self.rows {
            let v = self.at(r, c);
            if v <= PIVOT_TOL || self.rhs(r).max(0.0) / v > bound {
                continue;
            }
            let better = match leave {
                None => true,
                Some((lr, _)) => {
                    let lv = self.at(lr, c);
                    v > lv || v == lv && self.basis[r] < self.basis[lr]
                }
            };
            if better {
                leave = Some((r, v));
            }
        }
        leave.map(|(r, v)| (r, self.rhs(r).max(0.0) / v))
    }

    /// Minimizes the cost row (reduced costs, last entry `-objective`) over
    /// columns with `allowed[c]`.
    fn optimize(&mut self, cost: &mut [f64], allowed: &[bool], pivots: &mut usize) -> Result<bool, LpError> {
        let mut degenerate = 0;
        loop {
            let bland = degenerate >= DEGENERATE_RUN;
            let mut entering = None;
            let mut best = -COST_TOL;
            for c in 0..self.cols {
                if !allowed[c] || cost[c] >= -COST_TOL {
                    continue;
                }
                if bland {
                    entering = Some(c);
                    break;
                }
                if cost[c] < best {
                    best = cost[c];
                    entering = Some(c);
                }
            }
            let Some(c) = entering else {
                return Ok(true);
            };
            let leave = if bland {
                self.textbook_ratio(c)
            } else {
                self.harris_ratio(c)
            };
            let Some((r, ratio)) = leave else {
                return Ok(false);
            };
            if ratio <= 1e-14 {
                degenerate += 1;
            } else {
                degenerate = 0;
            }
            // the ratio test read a slightly negative value as zero
            let w = self.cols + 1;
            if self.a[r * w + self.cols] < 0.0 {
                self.a[r * w + self.cols] = 0.0;
            }
            self.pivot(r, c, cost);
            *pivots += 1;
            if *pivots > MAX_PIVOTS {
                return Err(LpError::IterationLimit(*pivots));
            }
        }
    }
}

/// Solves `lp`. An `Optimal` result satisfies every constraint to within a
/// relative residual of `1e-9`.
pub fn simplex_solve(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    let n = lp.num_vars();
    for (i, c) in lp.constraints.iter().enumerate() {
        if c.coeffs.len() != n {
            return Err(LpError::Shape(i, c.coeffs.len(), n));
        }
        if !c.rhs.is_finite() || c.coeffs.iter().any(|v| !v.is_finite()) {
            return Err(LpError::NotFinite);
        }
    }
    if lp.objective.iter().any(|v| !v.is_finite()) || lp.bounds.len() != n {
        return Err(LpError::NotFinite);
    }

    // nonnegative columns for the structural variables
    let mut maps = Vec::with_capacity(n);
    let mut ncols = 0;
    let mut extra_rows: Vec<(usize, f64)> = Vec::new();
    for (j, b) in lp.bounds.iter().enumerate() {
        let m = match (b.lower, b.upper) {
            (Some(l), Some(u)) => {
                if l > u {
                    return Err(LpError::EmptyBounds(j));
                }
                extra_rows.push((ncols, u - l));
                VarMap::Shift { col: ncols, offset: l }
            }
            (Some(l), None) => VarMap::Shift { col: ncols, offset: l },
            (None, Some(u)) => VarMap::Reflect { col: ncols, offset: u },
            (None, None) => {
                ncols += 1;
                VarMap::Split {
                    pos: ncols - 1,
                    neg: ncols,
                }
            }
        };
        ncols += 1;
        maps.push(m);
    }
    let structural = ncols;

    // rows over structural columns: (coeffs, relation, rhs)
    let mut rows: Vec<(Vec<f64>, Relation, f64)> = Vec::new();
    for c in &lp.constraints {
        let mut coeffs = vec![0.0; structural];
        let mut rhs = c.rhs;
        for (j, &a) in c.coeffs.iter().enumerate() {
            match maps[j] {
                VarMap::Shift { col, offset } => {
                    coeffs[col] += a;
                    rhs -= a * offset;
                }
                VarMap::Reflect { col, offset } => {
                    coeffs[col] -= a;
                    rhs -= a * offset;
                }
                VarMap::Split { pos, neg } => {
                    coeffs[pos] += a;
                    coeffs[neg] -= a;
                }
            }
        }
        rows.push((coeffs, c.relation, rhs));
    }
    for &(col, width) in &extra_rows {
        let mut coeffs = vec![0.0; structural];
        coeffs[col] = 1.0;
        rows.push((coeffs, Relation::Le, width));
    }
    let col_scale = equilibrate(&mut rows, structural);
    // nonnegative right-hand sides
    for (coeffs, rel, rhs) in &mut rows {
        if *rhs < 0.0 {
            for v in coeffs.iter_mut() {
                *v = -*v;
            }
            *rhs = -*rhs;
            *rel = match *rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let m = rows.len();
    let slack_count = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let art_count = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let cols = structural + slack_count + art_count;
    let w = cols + 1;
    let mut t = Tableau {
        rows: m,
        cols,
        a: vec![0.0; m * w],
        basis: vec![0; m],
    };
    let mut next_slack = structural;
    let mut next_art = structural + slack_count;
    let first_art = next_art;
    let mut slack_of = vec![None; m];
    for (i, (coeffs, rel, rhs)) in rows.iter().enumerate() {
        t.a[i * w..i * w + structural].copy_from_slice(coeffs);
        t.a[i * w + cols] = *rhs;
        match rel {
            Relation::Le => {
                t.a[i * w + next_slack] = 1.0;
                t.basis[i] = next_slack;
                slack_of[i] = Some(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                t.a[i * w + next_slack] = -1.0;
                slack_of[i] = Some(next_slack);
                next_slack += 1;
                t.a[i * w + next_art] = 1.0;
                t.basis[i] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                t.a[i * w + next_art] = 1.0;
                t.basis[i] = next_art;
                next_art += 1;
            }
        }
    }

    let mut pivots = 0;
    // phase one: minimize the sum of artificials
    if art_count > 0 {
        let mut cost = vec![0.0; w];
        for c in first_art..cols {
            cost[c] = 1.0;
        }
        for i in 0..m {
            if t.basis[i] >= first_art {
                for c in 0..w {
                    cost[c] -= t.at(i, c);
                }
            }
        }
        let allowed = vec![true; cols];
        t.optimize(&mut cost, &allowed, &mut pivots)?;
        let infeasibility = -cost[cols];
        let rhs_scale = rows.iter().fold(1.0f64, |s, r| s.max(r.2.abs()));
        if infeasibility > FEAS_TOL * rhs_scale {
            return Ok(LpOutcome::Infeasible);
        }
        // drive remaining artificials out of the basis; rows where that is
        // impossible are redundant and dropped
        let mut r = 0;
        while r < t.rows {
            if t.basis[r] < first_art {
                r += 1;
                continue;
            }
            let best = (0..first_art)
                .filter(|&c| t.at(r, c).abs() > DROP_TOL)
                .max_by(|&x, &y| t.at(r, x).abs().total_cmp(&t.at(r, y).abs()));
            match best {
                Some(c) => {
                    // the artificial is zero up to round-off; pivoting on
                    // its residue would spread that error to other rows
                    t.a[r * w + cols] = 0.0;
                    let mut dummy = vec![0.0; w];
                    t.pivot(r, c, &mut dummy);
                    pivots += 1;
                    r += 1;
                }
                None => t.remove_row(r),
            }
        }
    }

    // phase two
    let sign = match lp.sense {
        Sense::Minimize => 1.0,
        Sense::Maximize => -1.0,
    };
    let mut struct_cost = vec![0.0; w];
    for (j, &c) in lp.objective.iter().enumerate() {
        let c = sign * c;
        match maps[j] {
            VarMap::Shift { col, .. } => struct_cost[col] += c,
            VarMap::Reflect { col, .. } => struct_cost[col] -= c,
            VarMap::Split { pos, neg } => {
                struct_cost[pos] += c;
                struct_cost[neg] -= c;
            }
        }
    }
    for (c, s) in struct_cost.iter_mut().zip(&col_scale) {
        *c /= s;
    }
    let mut cost = struct_cost.clone();
    for i in 0..t.rows {
        let cb = struct_cost[t.basis[i]];
        if cb != 0.0 {
            for c in 0..w {
                cost[c] -= cb * t.at(i, c);
            }
        }
    }
    let allowed: Vec<bool> = (0..cols).map(|c| c < first_art).collect();
    if !t.optimize(&mut cost, &allowed, &mut pivots)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut y = vec![0.0; cols];
    for i in 0..t.rows {
        y[t.basis[i]] = t.rhs(i);
    }
    let mut is_basic = vec![false; cols];
    for &b in &t.basis {
        is_basic[b] = true;
    }
    if let Some(polished) = polish(&rows, &slack_of, &is_basic, structural) {
        let residual = |y: &[f64]| max_residual(&rows, y);
        if residual(&polished) <= residual(&y[..structural]) {
            y[..structural].copy_from_slice(&polished);
        }
    }
    for (v, s) in y.iter_mut().zip(&col_scale) {
        *v /= s;
    }
    let x: Vec<f64> = maps
        .iter()
        .map(|m| match *m {
            VarMap::Shift { col, offset } => offset + y[col],
            VarMap::Reflect { col, offset } => offset - y[col],
            VarMap::Split { pos, neg } => y[pos] - y[neg],
        })
        .collect();

    for (row, c) in lp.constraints.iter().enumerate() {
        let lhs: f64 = c.coeffs.iter().zip(&x).map(|(a, v)| a * v).sum();
        let mag: f64 = c.coeffs.iter().zip(&x).map(|(a, v)| (a * v).abs()).sum::<f64>() + c.rhs.abs();
        let excess = match c.relation {
            Relation::Le => lhs - c.rhs,
            Relation::Ge => c.rhs - lhs,
            Relation::Eq => (lhs - c.rhs).abs(),
        };
        if excess > FEAS_TOL * mag.max(1.0) {
            return Err(LpError::Numerical { row, excess });
        }
    }
    let objective = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpOutcome::Optimal(LpSolution {
        x,
        objective,
        iterations: pivots,
    }))
}

/// Alternating row and column scaling followed by row equilibration.
/// Column `j` is multiplied by `1 / s_j`, so a solution `y'` of the scaled
/// rows gives `y_j = y'_j / s_j`; the returned vector holds the `s_j`.
fn equilibrate(rows: &mut [(Vec<f64>, Relation, f64)], cols: usize) -> Vec<f64> {
    let mut col_scale = vec![1.0; cols];
    // root mean square of the nonzero entries; unlike max/min it is not
    // thrown off by a single tiny entry
    let spread = |vals: &mut dyn Iterator<Item = f64>| {
        let (mut sum, mut count) = (0.0, 0usize);
        for v in vals.filter(|v| *v != 0.0) {
            sum += v * v;
            count += 1;
        }
        if count == 0 {
            1.0
        } else {
            (sum / count as f64).sqrt()
        }
    };
    for _ in 0..4 {
        for (coeffs, _, rhs) in rows.iter_mut() {
            let s = spread(&mut coeffs.iter().copied());
            coeffs.iter_mut().for_each(|v| *v /= s);
            *rhs /= s;
        }
        for j in 0..cols {
            let s = spread(&mut rows.iter().map(|r| r.0[j]));
            rows.iter_mut().for_each(|r| r.0[j] /= s);
            col_scale[j] *= s;
        }
    }
    for (coeffs, _, rhs) in rows.iter_mut() {
        let s = coeffs.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if s > 0.0 {
            coeffs.iter_mut().for_each(|v| *v /= s);
            *rhs /= s;
        }
    }
    col_scale
}

/// Largest violation of the transformed rows by structural values `y >= 0`.
fn max_residual(rows: &[(Vec<f64>, Relation, f64)], y: &[f64]) -> f64 {
    let mut worst = y.iter().fold(0.0f64, |m, v| m.max(-v));
    for (coeffs, rel, rhs) in rows {
        let lhs: f64 = coeffs.iter().zip(y).map(|(a, v)| a * v).sum();
        let excess = match rel {
            Relation::Le => lhs - rhs,
            Relation::Ge => rhs - lhs,
            Relation::Eq => (lhs - rhs).abs(),
        };
        worst = worst.max(excess);
    }
    worst
}

/// Recomputes the vertex named by the final basis from the original rows:
/// nonbasic structural columns are zero and rows whose slack is nonbasic
/// hold with equality. The tableau accumulates rounding over many pivots;
/// this solve does not.
fn polish(
    rows: &[(Vec<f64>, Relation, f64)],
    slack_of: &[Option<usize>],
    is_basic: &[bool],
    structural: usize,
) -> Option<Vec<f64>> {
    let free: Vec<usize> = (0..structural).filter(|&c| is_basic[c]).collect();
    let mut eqs: Vec<(Vec<f64>, f64)> = rows
        .iter()
        .zip(slack_of)
        .filter(|(_, s)| s.map_or(true, |s| !is_basic[s]))
        .map(|((coeffs, _, rhs), _)| (free.iter().map(|&c| coeffs[c]).collect(), *rhs))
        .collect();
    let k = free.len();
    if eqs.len() < k {
        return None;
    }
    // elimination with row pivoting on the tall system
    for col in 0..k {
        let p = (col..eqs.len()).max_by(|&a, &b| eqs[a].0[col].abs().total_cmp(&eqs[b].0[col].abs()))?;
        if eqs[p].0[col].abs() < 1e-12 {
            return None;
        }
        eqs.swap(col, p);
        let (head, tail) = eqs.split_at_mut(col + 1);
        let pivot = &head[col];
        for row in tail.iter_mut() {
            let f = row.0[col] / pivot.0[col];
            if f != 0.0 {
                for c in col..k {
                    row.0[c] -= f * pivot.0[c];
                }
                row.1 -= f * pivot.1;
            }
        }
    }
    let mut sol = vec![0.0; k];
    for col in (0..k).rev() {
        let (a, b) = &eqs[col];
        let s: f64 = (col + 1..k).map(|c| a[c] * sol[c]).sum();
        sol[col] = (b - s) / a[col];
    }
    let mut y = vec![0.0; structural];
    for (&c, v) in free.iter().zip(sol) {
        y[c] = v;
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn optimal(lp: &LinearProgram) -> LpSolution {
        match simplex_solve(lp).unwrap() {
            LpOutcome::Optimal(s) => s,
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn single_upper_bound() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![1.0]);
        lp.add(vec![1.0], Relation::Le, 3.0);
        let s = optimal(&lp);
        assert!((s.x[0] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn infeasible_pair() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![1.0]);
        lp.bounds[0] = VarBounds::FREE;
        lp.add(vec![1.0], Relation::Le, 0.0);
        lp.add(vec![1.0], Relation::Ge, 1.0);
        assert_eq!(simplex_solve(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![1.0, 1.0]);
        lp.add(vec![1.0, -1.0], Relation::Le, 1.0);
        assert_eq!(simplex_solve(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let mut lp = LinearProgram::new(Sense::Maximize, vec![3.0, 5.0]);
        lp.add(vec![1.0, 0.0], Relation::Le, 4.0);
        lp.add(vec![0.0, 2.0], Relation::Le, 12.0);
        lp.add(vec![3.0, 2.0], Relation::Le, 18.0);
        let s = optimal(&lp);
        assert!((s.objective - 36.0).abs() < 1e-9);
        assert!((s.x[0] - 2.0).abs() < 1e-9 && (s.x[1] - 6.0).abs() < 1e-9);
    }

    #[test]
    fn free_and_bounded_variables() {
        // min x - y with x free, -2 <= y <= 3, x + y >= 1, x >= -5 via row
        let mut lp = LinearProgram::new(Sense::Minimize, vec![1.0, -1.0]);
        lp.bounds = vec![
            VarBounds::FREE,
            VarBounds {
                lower: Some(-2.0),
                upper: Some(3.0),
            },
        ];
        lp.add(vec![1.0, 1.0], Relation::Ge, 1.0);
        lp.add(vec![1.0, 0.0], Relation::Ge, -5.0);
        let s = optimal(&lp);
        assert!((s.x[1] - 3.0).abs() < 1e-9);
        assert!((s.x[0] + 2.0).abs() < 1e-9);
        assert!((s.objective + 5.0).abs() < 1e-9);
    }

    #[test]
    fn equality_rows() {
        let mut lp = LinearProgram::new(Sense::Minimize, vec![1.0, 2.0, 3.0]);
        lp.add(vec![1.0, 1.0, 1.0], Relation::Eq, 1.0);
        lp.add(vec![1.0, -1.0, 0.0], Relation::Eq, 0.0);
        let s = optimal(&lp);
        assert!((s.objective - 1.5).abs() < 1e-9);
    }

    #[test]
    fn degenerate_cycling_example() {
        // Beale's example cycles under the largest-coefficient rule without
        // an anti-cycling safeguard
        let mut lp = LinearProgram::new(Sense::Minimize, vec![-0.75, 150.0, -0.02, 6.0]);
        lp.add(vec![0.25, -60.0, -0.04, 9.0], Relation::Le, 0.0);
        lp.add(vec![0.5, -90.0, -0.02, 3.0], Relation::Le, 0.0);
        lp.add(vec![0.0, 0.0, 1.0, 0.0], Relation::Le, 1.0);
        let s = optimal(&lp);
        assert!((s.objective + 0.05).abs() < 1e-9);
    }

    #[test]
    fn deterministic() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![1.0, 1.0, 1.0]);
        for k in 0..20 {
            let t = k as f64 / 19.0;
            lp.add(vec![1.0, t, t * t], Relation::Le, 1.0 + t);
        }
        assert_eq!(simplex_solve(&lp).unwrap(), simplex_solve(&lp).unwrap());
    }
}
