//! Turning a float candidate into an exact certificate.
//!
//! Guessed zeros are snapped to nearby rationals, the polynomial is rebuilt
//! from its factorization and handed to the exact verifier. Endpoint zeros
//! already carry their exact value. Because the float solution cannot tell a
//! simple endpoint zero from a double one, every way of doubling endpoint
//! zeros that keeps the degree within bounds is tried, from the largest
//! degree down.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::certificate::{verify, Certificate, CertificateError, VerificationReport};
use crate::gegenbauer::GegenbauerBasis;
use crate::poly::Polynomial;
use crate::rational::{best_approximation, from_f64, simplest_between, Rational};

use super::CandidateResult;

/// Half-widths of the windows searched for a simple nearby rational.
const SNAP_WINDOWS: [f64; 6] = [1e-2, 3e-3, 1e-3, 1e-4, 1e-5, 1e-6];
/// Endpoint subsets are enumerated only up to this many simple endpoints.
const MAX_ENUMERATED: usize = 12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum RationalizeError {
    #[error("the candidate has no guessed roots")]
    NoRoots,
    #[error("denominator bound must be positive")]
    ZeroDenominatorBound,
    #[error("guessed roots have total multiplicity {found}, above the degree {degree}")]
    TooManyRoots { found: u32, degree: usize },
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("no rationalization verified; first attempt was {polynomial}")]
    Verification {
        polynomial: Polynomial,
        report: Box<VerificationReport>,
    },
}

/// Snapped zeros of one attempt: `(root, multiplicity, on an endpoint)`.
type Snapped = Vec<(Rational, u32, bool)>;

fn snap(x: f64, window: f64, max_den: &BigInt) -> Rational {
    let (Some(lo), Some(hi), Some(mid)) = (from_f64(x - window), from_f64(x + window), from_f64(x)) else {
        return Rational::zero();
    };
    let s = simplest_between(&lo, &hi);
    if s.denom() <= max_den {
        s
    } else {
        best_approximation(&mid, max_den)
    }
}

fn snapped_roots(candidate: &CandidateResult, window: f64, max_den: &BigInt) -> Snapped {
    let mut out: Snapped = Vec::new();
    for g in &candidate.guessed_roots {
        let (r, on_end) = match &g.endpoint {
            Some(e) => (e.clone(), true),
            None => (snap(g.location, window, max_den), false),
        };
        match out.iter_mut().find(|(x, _, _)| *x == r) {
            Some(entry) => {
                entry.1 = entry.1.max(g.multiplicity);
                entry.2 |= on_end;
            }
            None => out.push((r, g.multiplicity, on_end)),
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// `prod (t - r)^m`, negated if needed so that `f_0 > 0`.
fn build(roots: &Snapped, bumped: &[usize], basis: &GegenbauerBasis) -> Polynomial {
    let factors: Vec<(Polynomial, u32)> = roots
        .iter()
        .enumerate()
        .map(|(i, (r, m, _))| (Polynomial::linear_root(r), m + u32::from(bumped.contains(&i))))
        .collect();
    let p = Polynomial::expand_factored(&factors);
    if basis.expand(&p).coeff(0).is_negative() {
        -p
    } else {
        p
    }
}

/// Index subsets of `pool` of size `k`, in lexicographic order.
fn subsets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut pick = Vec::with_capacity(k);
    fn go(pool: &[usize], k: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pick.len() == k {
            out.push(pick.clone());
            return;
        }
        for i in start..pool.len() {
            pick.push(pool[i]);
            go(pool, k, i + 1, pick, out);
            pick.pop();
        }
    }
    go(pool, k, 0, &mut pick, &mut out);
    out
}

/// Snaps the guessed roots, rebuilds the polynomial and verifies it.
/// Returns the verified certificate with the best bound, or the first failed
/// report.
pub fn rationalize_candidate(candidate: &CandidateResult, denominator_bound: u64) -> Result<Certificate, RationalizeError> {
    if candidate.guessed_roots.is_empty() {
        return Err(RationalizeError::NoRoots);
    }
    if denominator_bound == 0 {
        return Err(RationalizeError::ZeroDenominatorBound);
    }
    let problem = &candidate.problem;
    let basis = GegenbauerBasis::shared(problem.dimension).map_err(CertificateError::from)?;
    let max_den = BigInt::from(denominator_bound);
    let degree = problem.degree;

    let mut seen_roots: Vec<Snapped> = Vec::new();
    for &w in &SNAP_WINDOWS {
        let s = snapped_roots(candidate, w, &max_den);
        if !seen_roots.contains(&s) {
            seen_roots.push(s);
        }
    }

    let mut tried: HashSet<Polynomial> = HashSet::new();
    let mut first_failure: Option<(Polynomial, VerificationReport)> = None;
    let mut smallest_excess = None;
    for roots in &seen_roots {
        let base: u32 = roots.iter().map(|r| r.1).sum();
        if base as usize > degree {
            smallest_excess = Some(smallest_excess.map_or(base, |m: u32| m.min(base)));
            continue;
        }
        let pool: Vec<usize> = (0..roots.len()).filter(|&i| roots[i].2 && roots[i].1 == 1).collect();
        let room = (degree - base as usize).min(pool.len());
        if pool.len() > MAX_ENUMERATED && room > 0 {
            continue;
        }
        // most bumps first, stopping at the first level that verifies
        for k in (0..=room).rev() {
            let mut best: Option<(Rational, Certificate)> = None;
            for bumped in subsets(&pool, k) {
                let p = build(roots, &bumped, &basis);
                if !tried.insert(p.clone()) {
                    continue;
                }
                let cert = Certificate::new(problem.dimension, p.clone(), problem.allowed.clone(), problem.mode)?;
                let report = verify(&cert);
                match report.bound.clone() {
                    Some(b) if report.valid => {
                        let better = best.as_ref().map_or(true, |(old, _)| {
                            if problem.mode.is_upper() {
                                b < *old
                            } else {
                                b > *old
                            }
                        });
                        if better {
                            best = Some((b, cert));
                        }
                    }
                    _ => {
                        if first_failure.is_none() {
                            first_failure = Some((p, report));
                        }
                    }
                }
            }
            if let Some((_, cert)) = best {
                return Ok(cert);
            }
        }
    }
    match (first_failure, smallest_excess) {
        (Some((polynomial, report)), _) => Err(RationalizeError::Verification {
            polynomial,
            report: Box::new(report),
        }),
        (None, Some(found)) => Err(RationalizeError::TooManyRoots { found, degree }),
        (None, None) => Err(RationalizeError::NoRoots),
    }
}

/// Exact rebuild of a monic polynomial from roots, for callers that already
/// know the factorization.
pub fn from_roots(roots: &[(Rational, u32)]) -> Polynomial {
    let factors: Vec<(Polynomial, u32)> = roots.iter().map(|(r, m)| (Polynomial::linear_root(r), *m)).collect();
    let p = Polynomial::expand_factored(&factors);
    debug_assert!(p.leading().map_or(true, |c| c.is_one()));
    p
}
