//! Floating-point discovery of certificate polynomials.
//!
//! The sign condition is sampled at finitely many nodes of the allowed set,
//! which turns the choice of Gegenbauer coefficients into a linear program.
//! Nothing found here is a proof: a candidate becomes a certificate only after
//! its roots are snapped to rationals and the exact verifier accepts it.

pub mod rationalize;
pub mod simplex;

use std::f64::consts::PI;

use crate::certificate::{Certificate, CertificateMode};
use crate::gegenbauer::{GegenbauerBasis, GegenbauerError};
use crate::interval::IntervalSet;
use crate::rational::{to_f64, Rational};

pub use rationalize::{rationalize_candidate, RationalizeError};
pub use simplex::{simplex_solve, LinearProgram, LpError, LpOutcome, LpSolution, Relation, Sense, VarBounds};

/// Denominator bound used by [`search_polynomial`] when snapping roots.
pub const DEFAULT_DENOMINATOR_BOUND: u64 = 1000;

/// Relative level below which a sampled value counts as a zero.
const ACTIVE_TOL: f64 = 1e-6;
/// Relative level above which a local maximum of the slack gets new nodes.
const REFINE_TOL: f64 = 1e-2;
/// Zeros closer than this are merged.
const CLUSTER_TOL: f64 = 1e-4;
const NODES_PER_CLUSTER: usize = 8;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SearchError {
    #[error("invalid search problem: {0}")]
    InvalidProblem(String),
    #[error(transparent)]
    Dimension(#[from] GegenbauerError),
    #[error("the discretized problem is infeasible")]
    Infeasible,
    #[error("the discretized problem is unbounded; the allowed set or mode is probably wrong")]
    Unbounded,
    #[error(transparent)]
    Lp(#[from] LpError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchProblem {
    pub dimension: u32,
    pub degree: usize,
    pub mode: CertificateMode,
    pub allowed: IntervalSet,
    pub nodes_per_interval: usize,
    pub refinement_rounds: usize,
}

impl SearchProblem {
    pub fn new(
        dimension: u32,
        degree: usize,
        mode: CertificateMode,
        allowed: IntervalSet,
    ) -> Result<Self, SearchError> {
        let p = SearchProblem {
            dimension,
            degree,
            mode,
            allowed,
            nodes_per_interval: 64,
            refinement_rounds: 4,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |m: &str| Err(SearchError::InvalidProblem(m.to_string()));
        if self.dimension < 2 {
            return Err(GegenbauerError::Dimension(self.dimension).into());
        }
        if self.degree < 1 {
            return bad("degree must be at least 1");
        }
        if self.nodes_per_interval < 2 {
            return bad("at least 2 nodes per interval are needed");
        }
        if self.allowed.is_empty() {
            return bad("allowed set is empty");
        }
        if !self.allowed.within_unit_range() {
            return bad("allowed set must lie inside [-1, 1]");
        }
        if self.mode.tau() == Some(0) {
            return bad("design strength must be at least 1");
        }
        Ok(())
    }
}

/// A zero of the float solution on the allowed set.
#[derive(Debug, Clone, PartialEq)]
pub struct GuessedRoot {
    pub location: f64,
    pub multiplicity: u32,
    /// The allowed-set endpoint this zero sits on, if any.
    pub endpoint: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CandidateResult {
    pub problem: SearchProblem,
    /// `f_1, ..., f_d` with `f_0 = 1`.
    pub float_coefficients: Vec<f64>,
    /// `f(1)`; not a rigorous bound.
    pub float_bound: f64,
    pub guessed_roots: Vec<GuessedRoot>,
    pub exact_certificate: Option<Certificate>,
    /// Optimum after the initial solve and each refinement round.
    pub optimum_history: Vec<f64>,
    pub node_count: usize,
}

impl CandidateResult {
    /// Float value of the candidate at `t`.
    pub fn eval(&self, t: f64) -> f64 {
        let basis = GegenbauerBasis::shared(self.problem.dimension).expect("validated dimension");
        eval_float(&basis, &self.float_coefficients, t)
    }
}

fn eval_float(basis: &GegenbauerBasis, coeffs: &[f64], t: f64) -> f64 {
    let p = basis.eval_all_f64(coeffs.len(), t);
    p[0] + coeffs.iter().zip(&p[1..]).map(|(c, v)| c * v).sum::<f64>()
}

/// Searches with [`DEFAULT_DENOMINATOR_BOUND`].
pub fn search_polynomial(problem: &SearchProblem) -> Result<CandidateResult, SearchError> {
    search_with_denominator_bound(problem, DEFAULT_DENOMINATOR_BOUND)
}

/// Runs the float search and, when the guessed roots rationalize to a
/// polynomial the exact verifier accepts, attaches that certificate.
pub fn search_with_denominator_bound(
    problem: &SearchProblem,
    denominator_bound: u64,
) -> Result<CandidateResult, SearchError> {
    let mut candidate = search_float(problem)?;
    candidate.exact_certificate = rationalize_candidate(&candidate, denominator_bound).ok();
    Ok(candidate)
}

/// One allowed interval in floating point, with its exact ends.
struct Piece {
    lo: Rational,
    hi: Rational,
    nodes: Vec<f64>,
}

fn chebyshev_nodes(a: f64, b: f64, m: usize) -> Vec<f64> {
    let mut v: Vec<f64> = (0..m)
        .map(|k| {
            let theta = (2 * k + 1) as f64 * PI / (2 * m) as f64;
            0.5 * (a + b) - 0.5 * (b - a) * theta.cos()
        })
        .collect();
    v.push(a);
    v.push(b);
    v
}

fn normalize(nodes: &mut Vec<f64>, a: f64, b: f64) {
    for t in nodes.iter_mut() {
        *t = t.clamp(a, b);
    }
    nodes.sort_by(f64::total_cmp);
    nodes.dedup();
}

/// `sigma f`, which must be `<= 0` on the allowed set.
fn slack_sign(mode: CertificateMode) -> f64 {
    if mode.is_upper() {
        1.0
    } else {
        -1.0
    }
}

/// Float search without rationalization.
pub fn search_float(problem: &SearchProblem) -> Result<CandidateResult, SearchError> {
    problem.validate()?;
    let basis = GegenbauerBasis::shared(problem.dimension)?;
    let sigma = slack_sign(problem.mode);

    let mut pieces: Vec<Piece> = problem
        .allowed
        .intervals()
        .iter()
        .map(|iv| {
            let (a, b) = (to_f64(&iv.lo), to_f64(&iv.hi));
            let mut nodes = if iv.is_point() {
                vec![a]
            } else {
                chebyshev_nodes(a, b, problem.nodes_per_interval)
            };
            normalize(&mut nodes, a, b);
            Piece {
                lo: iv.lo.clone(),
                hi: iv.hi.clone(),
                nodes,
            }
        })
        .collect();

    let mut history = Vec::new();
    let mut coeffs;
    let mut round = 0;
    loop {
        coeffs = solve_discretized(problem, &basis, &pieces)?;
        history.push(1.0 + coeffs.iter().sum::<f64>());
        if round == problem.refinement_rounds {
            break;
        }
        round += 1;
        let scale = value_scale(&basis, &coeffs, &pieces);
        for piece in &mut pieces {
            let (a, b) = (to_f64(&piece.lo), to_f64(&piece.hi));
            let extra = refinement_nodes(&basis, &coeffs, sigma, scale, &piece.nodes);
            piece.nodes.extend(extra);
            normalize(&mut piece.nodes, a, b);
        }
    }

    let mut guessed_roots = guess_roots(&basis, &coeffs, sigma, &pieces);
    guessed_roots.sort_by(|x, y| x.location.total_cmp(&y.location));
    Ok(CandidateResult {
        problem: problem.clone(),
        float_bound: 1.0 + coeffs.iter().sum::<f64>(),
        float_coefficients: coeffs,
        guessed_roots,
        exact_certificate: None,
        optimum_history: history,
        node_count: pieces.iter().map(|p| p.nodes.len()).sum(),
    })
}

fn solve_discretized(
    problem: &SearchProblem,
    basis: &GegenbauerBasis,
    pieces: &[Piece],
) -> Result<Vec<f64>, SearchError> {
    let d = problem.degree;
    let upper = problem.mode.is_upper();
    let sense = if upper { Sense::Minimize } else { Sense::Maximize };
    let mut lp = LinearProgram::new(sense, vec![1.0; d]);
    lp.bounds = (1..=d)
        .map(|i| match (problem.mode.constrains(i), upper) {
            (false, _) => VarBounds::FREE,
            (true, true) => VarBounds::NONNEGATIVE,
            (true, false) => VarBounds::NONPOSITIVE,
        })
        .collect();
    let relation = if upper { Relation::Le } else { Relation::Ge };
    for piece in pieces {
        for &t in &piece.nodes {
            let p = basis.eval_all_f64(d, t);
            lp.add(p[1..].to_vec(), relation, -p[0]);
        }
    }
    match simplex_solve(&lp)? {
        LpOutcome::Optimal(s) => Ok(s.x),
        LpOutcome::Infeasible => Err(SearchError::Infeasible),
        LpOutcome::Unbounded => Err(SearchError::Unbounded),
    }
}

/// Largest sampled `|f|` on the allowed set, the yardstick for tolerances.
fn value_scale(basis: &GegenbauerBasis, coeffs: &[f64], pieces: &[Piece]) -> f64 {
    pieces
        .iter()
        .flat_map(|p| p.nodes.iter())
        .map(|&t| eval_float(basis, coeffs, t).abs())
        .fold(f64::MIN_POSITIVE, f64::max)
}

/// Indices of nodes where the slack has a local maximum, endpoints included.
fn local_maxima(values: &[f64]) -> Vec<usize> {
    let n = values.len();
    (0..n)
        .filter(|&j| {
            let left = j == 0 || values[j] >= values[j - 1];
            let right = j + 1 == n || values[j] >= values[j + 1];
            left && right && n > 1
        })
        .collect()
}

fn golden_max(g: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> f64 {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - r * (b - a);
    let mut x2 = a + r * (b - a);
    let (mut g1, mut g2) = (g(x1), g(x2));
    for _ in 0..80 {
        if g1 < g2 {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + r * (b - a);
            g2 = g(x2);
        } else {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - r * (b - a);
            g1 = g(x1);
        }
    }
    if g1 >= g2 {
        x1
    } else {
        x2
    }
}

fn bracket(nodes: &[f64], j: usize) -> (f64, f64) {
    let a = nodes[j.saturating_sub(1)];
    let b = nodes[(j + 1).min(nodes.len() - 1)];
    (a, b)
}

fn refinement_nodes(basis: &GegenbauerBasis, coeffs: &[f64], sigma: f64, scale: f64, nodes: &[f64]) -> Vec<f64> {
    let slack = |t: f64| sigma * eval_float(basis, coeffs, t);
    let values: Vec<f64> = nodes.iter().map(|&t| slack(t)).collect();
    let mut extra = Vec::new();
    for j in local_maxima(&values) {
        if values[j] < -REFINE_TOL * scale {
            continue;
        }
        let (a, b) = bracket(nodes, j);
        extra.push(golden_max(slack, a, b));
        for k in 1..NODES_PER_CLUSTER {
            extra.push(a + (b - a) * k as f64 / NODES_PER_CLUSTER as f64);
        }
    }
    extra
}

fn guess_roots(basis: &GegenbauerBasis, coeffs: &[f64], sigma: f64, pieces: &[Piece]) -> Vec<GuessedRoot> {
    let scale = value_scale(basis, coeffs, pieces);
    let tol = ACTIVE_TOL * scale;
    let slack = |t: f64| sigma * eval_float(basis, coeffs, t);
    let mut roots: Vec<GuessedRoot> = Vec::new();
    for piece in pieces {
        let (a, b) = (to_f64(&piece.lo), to_f64(&piece.hi));
        for (e, exact) in [(a, &piece.lo), (b, &piece.hi)] {
            let dup = roots.iter().any(|r| r.endpoint.as_ref() == Some(exact));
            if !dup && slack(e).abs() <= tol {
                roots.push(GuessedRoot {
                    location: e,
                    multiplicity: 1,
                    endpoint: Some(exact.clone()),
                });
            }
        }
        let values: Vec<f64> = piece.nodes.iter().map(|&t| slack(t)).collect();
        for j in local_maxima(&values) {
            if j == 0 || j + 1 == piece.nodes.len() || values[j] < -tol {
                continue;
            }
            let (lo, hi) = bracket(&piece.nodes, j);
            let x = golden_max(slack, lo, hi);
            if slack(x) < -tol {
                continue;
            }
            // endpoint zeros stay simple; the rationalizer tries doubling them
            if roots.iter().any(|r| (r.location - x).abs() <= CLUSTER_TOL) {
                continue;
            }
            roots.push(GuessedRoot {
                location: x,
                multiplicity: 2,
                endpoint: None,
            });
        }
    }
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn problem(n: u32, d: usize, mode: CertificateMode, allowed: IntervalSet) -> SearchProblem {
        SearchProblem::new(n, d, mode, allowed).unwrap()
    }

    #[test]
    fn rejects_bad_problems() {
        let t = IntervalSet::closed(int(-1), int(0)).unwrap();
        let m = CertificateMode::UpperUnrestricted;
        assert!(SearchProblem::new(4, 0, m, t.clone()).is_err());
        assert!(SearchProblem::new(1, 2, m, t.clone()).is_err());
        let mut p = problem(4, 2, m, t);
        p.nodes_per_interval = 1;
        assert!(search_polynomial(&p).is_err());
    }

    #[test]
    fn orthoplex_in_four_dimensions() {
        let t = IntervalSet::closed(int(-1), int(0)).unwrap();
        let c = search_polynomial(&problem(4, 2, CertificateMode::UpperUnrestricted, t)).unwrap();
        assert!((c.float_bound - 8.0).abs() < 1e-6, "{}", c.float_bound);
        let locs: Vec<f64> = c.guessed_roots.iter().map(|r| r.location).collect();
        assert_eq!(locs, vec![-1.0, 0.0]);
        let cert = c.exact_certificate.clone().unwrap_or_else(|| panic!("{c:#?}"));
        let report = crate::certificate::verify(&cert);
        assert_eq!(report.bound, Some(int(8)));
    }

    #[test]
    fn golden_section_finds_peak() {
        let x = golden_max(|t| -(t - 0.3).powi(2), 0.0, 1.0);
        assert!((x - 0.3).abs() < 1e-7);
    }

    #[test]
    fn local_maxima_include_ends() {
        assert_eq!(local_maxima(&[3.0, 1.0, 2.0, 0.0]), vec![0, 2]);
        assert_eq!(local_maxima(&[0.0, 1.0]), vec![1]);
    }

    #[test]
    fn point_intervals_are_sampled_once() {
        let allowed = IntervalSet::new(vec![
            crate::interval::Interval::point(int(-1)),
            crate::interval::Interval::new(rat(-1, 2), rat(1, 2)).unwrap(),
        ]);
        let mut p = problem(3, 3, CertificateMode::UpperUnrestricted, allowed);
        p.refinement_rounds = 0;
        p.nodes_per_interval = 5;
        let c = search_float(&p).unwrap();
        assert_eq!(c.node_count, 1 + 7);
    }
}
