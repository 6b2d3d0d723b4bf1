//! Distance distributions and explicit spherical codes.
//!
//! For a τ-design `C` and a point `x` in `C`, averaging `t^k` over the inner
//! products `<x, y>`, `y` in `C` (including `y = x`, which contributes `1`),
//! gives `sum_t A_t t^k + 1 = m_k |C|` for `k = 0..=τ`, where `m_k` is the
//! constant Gegenbauer coefficient of `t^k`. With the inner products known
//! these equations are a Vandermonde system in the counts `A_t`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, Signed, Zero};

use crate::gegenbauer::{GegenbauerBasis, GegenbauerError};
use crate::linalg::{rank, solve, vandermonde, LinalgError};
use crate::poly::Polynomial;
use crate::rational::{fmt_exact, int, Rational};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DesignError {
    #[error(transparent)]
    Dimension(#[from] GegenbauerError),
    #[error("inner product {0} listed twice")]
    RepeatedValue(String),
    #[error("inner product {0} lies outside [-1, 1)")]
    ValueOutOfRange(String),
    #[error("{unknowns} unknown counts but only {equations} usable moment equations")]
    TooFewEquations { unknowns: usize, equations: usize },
    #[error("antipodal solve needs -1 among the values and a set symmetric about 0")]
    NotSymmetric,
    #[error("moment system is singular")]
    Singular,
    #[error("moment equation k = {k} fails with residual {residual}: no such code exists")]
    Inconsistent {
        k: usize,
        residual: String,
        solved: Box<SolvedDistribution>,
    },
    #[error("code is empty")]
    EmptyCode,
    #[error("point {0} has {1} coordinates, expected {2}")]
    CoordinateCount(usize, usize, usize),
    #[error("point {0} is the zero vector")]
    ZeroVector(usize),
    #[error("points {0} and {1} have norms whose product is not a rational square")]
    NotNormalizable(usize, usize),
    #[error("points {0} and {1} coincide after normalization")]
    DuplicatePoint(usize, usize),
    #[error("points span {rank} dimensions, more than {dimension}")]
    RankTooLarge { rank: usize, dimension: u32 },
}

impl From<LinalgError> for DesignError {
    fn from(_: LinalgError) -> Self {
        DesignError::Singular
    }
}

/// Counts `A_t` of points at inner product `t` from a base point. The point
/// itself (`t = 1`) is not listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDistribution {
    pub dimension: u32,
    pub cardinality: Rational,
    pub entries: BTreeMap<Rational, Rational>,
}

impl DistanceDistribution {
    pub fn get(&self, t: &Rational) -> Rational {
        self.entries.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_integral(&self) -> bool {
        self.entries.values().all(|a| a.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|a| !a.is_negative())
    }

    /// `A_{-1} = 1` and `A_t = A_{-t}` for every other `t`.
    pub fn looks_antipodal(&self) -> bool {
        let minus_one = -Rational::one();
        self.get(&minus_one).is_one()
            && self
                .entries
                .iter()
                .filter(|(t, _)| **t != minus_one)
                .all(|(t, a)| &self.get(&-t.clone()) == a)
    }

    /// `sum_t A_t t^k + 1 - m_k |C|` for `k = 0..=max_k`.
    pub fn residuals(&self, basis: &GegenbauerBasis, max_k: usize) -> Vec<(usize, Rational)> {
        (0..=max_k)
            .map(|k| {
                let lhs: Rational = self
                    .entries
                    .iter()
                    .map(|(t, a)| a * power(t, k))
                    .sum::<Rational>()
                    + Rational::one();
                (k, lhs - basis.monomial_moment(k) * &self.cardinality)
            })
            .collect()
    }
}

/// `t^k` with `0^0 = 1`.
fn power(t: &Rational, k: usize) -> Rational {
    num_traits::pow(t.clone(), k)
}

/// Exact residual of every moment equation up to the design strength.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub residuals: Vec<(usize, Rational)>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.residuals.iter().all(|(_, r)| r.is_zero())
    }

    pub fn first_violation(&self) -> Option<&(usize, Rational)> {
        self.residuals.iter().find(|(_, r)| !r.is_zero())
    }
}

/// Checks `sum_t A_t t^k + 1 = m_k |C|` for `k = 0..=strength`.
pub fn check_distribution_consistency(
    dist: &DistanceDistribution,
    strength: u32,
) -> Result<ConsistencyReport, DesignError> {
    let basis = GegenbauerBasis::shared(dist.dimension)?;
    Ok(ConsistencyReport {
        residuals: dist.residuals(&basis, strength as usize),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedDistribution {
    pub distribution: DistanceDistribution,
    pub integral: bool,
    pub nonnegative: bool,
    /// The solution has `A_{-1} = 1` and is symmetric.
    pub antipodal: bool,
    /// Moment equation indices `k` used to determine the counts.
    pub equations_used: Vec<usize>,
    pub consistency: ConsistencyReport,
}

impl SolvedDistribution {
    /// Equations checked beyond those used in the solve.
    pub fn extra_checks(&self) -> impl Iterator<Item = &(usize, Rational)> {
        self.consistency
            .residuals
            .iter()
            .filter(|(k, _)| !self.equations_used.contains(k))
    }
}

/// Solves the moment equations for the counts `A_t` of a putative τ-design of
/// the given size whose inner products are `values`.
///
/// The general path takes one unknown per value and the equations
/// `k = 0, 1, ...`; the antipodal path fixes `A_{-1} = 1`, ties `A_t = A_{-t}`
/// and uses even `k` only. Either way the first equations determine the
/// counts and every remaining equation up to `k = strength` is checked.
pub fn solve_distance_distribution(
    dimension: u32,
    strength: u32,
    values: &[Rational],
    cardinality: &Rational,
    antipodal: bool,
) -> Result<SolvedDistribution, DesignError> {
    let basis = GegenbauerBasis::shared(dimension)?;
    let one = Rational::one();
    let mut sorted: Vec<Rational> = values.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            return Err(DesignError::RepeatedValue(fmt_exact(&w[0])));
        }
    }
    if let Some(bad) = sorted.iter().find(|t| **t < -one.clone() || **t >= one) {
        return Err(DesignError::ValueOutOfRange(fmt_exact(bad)));
    }
    let tau = strength as usize;
    let rhs = |k: usize| basis.monomial_moment(k) * cardinality - &one;

    let (entries, used) = if antipodal {
        let minus_one = -one.clone();
        let set: BTreeSet<&Rational> = sorted.iter().collect();
        if !set.contains(&minus_one)
            || sorted
                .iter()
                .any(|t| *t != minus_one && !set.contains(&-t.clone()))
        {
            return Err(DesignError::NotSymmetric);
        }
        let classes: Vec<Rational> = sorted
            .iter()
            .filter(|t| !t.is_negative())
            .cloned()
            .collect();
        let s = classes.len();
        let available = tau / 2 + 1;
        if s > available {
            return Err(DesignError::TooFewEquations {
                unknowns: s,
                equations: available,
            });
        }
        let used: Vec<usize> = (0..s).map(|j| 2 * j).collect();
        let matrix: Vec<Vec<Rational>> = used
            .iter()
            .map(|&k| {
                classes
                    .iter()
                    .map(|c| {
                        let w = if c.is_zero() { int(1) } else { int(2) };
                        w * power(c, k)
                    })
                    .collect()
            })
            .collect();
        // the antipode contributes (-1)^k = 1 for even k
        let b: Vec<Rational> = used.iter().map(|&k| rhs(k) - &one).collect();
        let counts = solve(&matrix, &b)?;
        let mut entries = BTreeMap::new();
        entries.insert(minus_one, one.clone());
        for (c, a) in classes.iter().zip(counts) {
            if !c.is_zero() {
                entries.insert(-c.clone(), a.clone());
            }
            entries.insert(c.clone(), a);
        }
        (entries, used)
    } else {
        let s = sorted.len();
        if s > tau + 1 {
            return Err(DesignError::TooFewEquations {
                unknowns: s,
                equations: tau + 1,
            });
        }
        let used: Vec<usize> = (0..s).collect();
        let b: Vec<Rational> = used.iter().map(|&k| rhs(k)).collect();
        let counts = solve(&vandermonde(&sorted), &b)?;
        (sorted.into_iter().zip(counts).collect(), used)
    };

    let distribution = DistanceDistribution {
        dimension,
        cardinality: cardinality.clone(),
        entries,
    };
    let consistency = ConsistencyReport {
        residuals: distribution.residuals(&basis, tau),
    };
    let solved = SolvedDistribution {
        integral: distribution.is_integral(),
        nonnegative: distribution.is_nonnegative(),
        antipodal: distribution.looks_antipodal(),
        distribution,
        equations_used: used,
        consistency,
    };
    if let Some((k, r)) = solved.consistency.first_violation() {
        return Err(DesignError::Inconsistent {
            k: *k,
            residual: fmt_exact(r),
            solved: Box::new(solved.clone()),
        });
    }
    Ok(solved)
}

/// Brute-force description of an explicit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeAnalysis {
    pub dimension: u32,
    pub size: usize,
    /// Normalized Gram matrix.
    pub gram: Vec<Vec<Rational>>,
    /// `I(C)`: inner products of distinct points, ascending.
    pub inner_products: Vec<Rational>,
    /// For each point, the count of other points at each inner product.
    pub per_point_distributions: Vec<BTreeMap<Rational, usize>>,
    /// `M_0, ..., M_k`.
    pub moments: Vec<Rational>,
    /// Largest `τ <= k` with `M_1 = ... = M_τ = 0`.
    pub design_strength: usize,
    pub antipodal: bool,
    pub distance_invariant: bool,
}

impl CodeAnalysis {
    /// Distribution averaged over base points.
    pub fn average_distribution(&self) -> DistanceDistribution {
        let mut entries: BTreeMap<Rational, Rational> = BTreeMap::new();
        for d in &self.per_point_distributions {
            for (t, c) in d {
                *entries.entry(t.clone()).or_insert_with(Rational::zero) += int(*c as i64);
            }
        }
        let n = int(self.size as i64);
        for v in entries.values_mut() {
            *v /= &n;
        }
        DistanceDistribution {
            dimension: self.dimension,
            cardinality: n,
            entries,
        }
    }

    /// Checks `sum_y f(<x, y>) = f_0 |C|` at every point `x`.
    pub fn averages_polynomial(&self, basis: &GegenbauerBasis, f: &Polynomial) -> bool {
        let target = basis.expand(f).coeff(0) * int(self.size as i64);
        self.gram
            .iter()
            .all(|row| row.iter().map(|t| f.eval(t)).sum::<Rational>() == target)
    }
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

/// Analyzes an explicit code given by rational vectors.
///
/// Points are normalized implicitly: `<v, w> / sqrt(|v|^2 |w|^2)` must be
/// rational, which holds whenever all points share one norm. Points may be
/// written in more coordinates than the dimension as long as they span at most
/// `basis.dimension()` of them.
pub fn analyze_code(
    points: &[Vec<Rational>],
    basis: &GegenbauerBasis,
    max_moment: usize,
) -> Result<CodeAnalysis, DesignError> {
    let size = points.len();
    if size == 0 {
        return Err(DesignError::EmptyCode);
    }
    let width = points[0].len();
    for (i, p) in points.iter().enumerate() {
        if p.len() != width {
            return Err(DesignError::CoordinateCount(i, p.len(), width));
        }
    }
    let dot = |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let norms: Vec<Rational> = points.iter().map(|p| dot(p, p)).collect();
    if let Some(i) = norms.iter().position(Zero::is_zero) {
        return Err(DesignError::ZeroVector(i));
    }
    let r = rank(points);
    if r > basis.dimension() as usize {
        return Err(DesignError::RankTooLarge {
            rank: r,
            dimension: basis.dimension(),
        });
    }

    let mut scale: HashMap<(Rational, Rational), Rational> = HashMap::new();
    let mut gram = vec![vec![Rational::zero(); size]; size];
    for i in 0..size {
        gram[i][i] = Rational::one();
        for j in i + 1..size {
            let key = if norms[i] <= norms[j] {
                (norms[i].clone(), norms[j].clone())
            } else {
                (norms[j].clone(), norms[i].clone())
            };
            let s = match scale.get(&key) {
                Some(s) => s.clone(),
                None => {
                    let s = rational_sqrt(&(&key.0 * &key.1)).ok_or(DesignError::NotNormalizable(i, j))?;
                    scale.insert(key, s.clone());
                    s
                }
            };
            let t = dot(&points[i], &points[j]) / s;
            if t.is_one() {
                return Err(DesignError::DuplicatePoint(i, j));
            }
            gram[i][j] = t.clone();
            gram[j][i] = t;
        }
    }

    let mut per_point_distributions = Vec::with_capacity(size);
    let mut totals: BTreeMap<Rational, usize> = BTreeMap::new();
    for (i, row) in gram.iter().enumerate() {
        let mut d: BTreeMap<Rational, usize> = BTreeMap::new();
        for (j, t) in row.iter().enumerate() {
            if i != j {
                *d.entry(t.clone()).or_default() += 1;
            }
        }
        for (t, c) in &d {
            *totals.entry(t.clone()).or_default() += c;
        }
        per_point_distributions.push(d);
    }
    let inner_products: Vec<Rational> = totals.keys().cloned().collect();

    let n = int(size as i64);
    let moments: Vec<Rational> = (0..=max_moment)
        .map(|i| {
            let p = basis.poly(i);
            totals
                .iter()
                .map(|(t, c)| p.eval(t) * int(*c as i64))
                .sum::<Rational>()
                + &n
        })
        .collect();
    let design_strength = moments
        .iter()
        .skip(1)
        .take_while(|m| m.is_zero())
        .count();
    let minus_one = -Rational::one();
    let antipodal = per_point_distributions
        .iter()
        .all(|d| d.get(&minus_one) == Some(&1));
    let distance_invariant = per_point_distributions.windows(2).all(|w| w[0] == w[1]);

    Ok(CodeAnalysis {
        dimension: basis.dimension(),
        size,
        gram,
        inner_products,
        per_point_distributions,
        moments,
        design_strength,
        antipodal,
        distance_invariant,
    })
}

/// Standard explicit codes with rational coordinates.
pub mod codes {
    use super::*;

    fn unit(width: usize, i: usize, value: i64) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); width];
        v[i] = int(value);
        v
    }

    /// `±e_i` in `R^n`: `2n` points.
    pub fn cross_polytope(n: usize) -> Vec<Vec<Rational>> {
        (0..n)
            .flat_map(|i| [unit(n, i, 1), unit(n, i, -1)])
            .collect()
    }

    /// Regular simplex with `n + 1` vertices, written as `(n+1) e_i - 1` in
    /// `R^{n+1}`; the points span `n` dimensions.
    pub fn simplex(n: usize) -> Vec<Vec<Rational>> {
        (0..=n)
            .map(|i| {
                let mut v = vec![int(-1); n + 1];
                v[i] = int(n as i64);
                v
            })
            .collect()
    }

    /// Vertices `(±1, ..., ±1)` of the cube in `R^n`.
    pub fn hypercube(n: usize) -> Vec<Vec<Rational>> {
        (0..1usize << n)
            .map(|mask| {
                (0..n)
                    .map(|b| if mask >> b & 1 == 1 { int(-1) } else { int(1) })
                    .collect()
            })
            .collect()
    }

    /// The 240 minimal vectors of the E8 lattice (norm 2, doubled to integers).
    pub fn e8_roots() -> Vec<Vec<Rational>> {
        let mut out = Vec::with_capacity(240);
        for i in 0..8 {
            for j in i + 1..8 {
                for (si, sj) in [(2, 2), (2, -2), (-2, 2), (-2, -2)] {
                    let mut v = vec![int(0); 8];
                    v[i] = int(si);
                    v[j] = int(sj);
                    out.push(v);
                }
            }
        }
        for mask in 0..256u32 {
            if mask.count_ones() % 2 == 0 {
                out.push(
                    (0..8)
                        .map(|b| if mask >> b & 1 == 1 { int(-1) } else { int(1) })
                        .collect(),
                );
            }
        }
        out
    }

    pub fn single_point(n: usize) -> Vec<Vec<Rational>> {
        vec![unit(n, 0, 1)]
    }
}
