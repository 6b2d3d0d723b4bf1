//! Exact real-root isolation.
//!
//! Roots are isolated on the square-free part of the input with a Sturm
//! sequence and rational bisection. Multiplicities come from Yun's square-free
//! decomposition. Rational roots are always reported exactly: a rational root
//! of an integer polynomial has a denominator dividing the leading
//! coefficient, so once an isolating interval is narrower than `1 / D^2` it
//! holds at most one candidate, and that candidate is the simplest rational in
//! the interval.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Polynomial;
use crate::rational::{fmt_exact, midpoint, simplest_between, to_f64, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("window [{0}, {1}] is empty")]
    EmptyWindow(String, String),
}

/// Where a real root lies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RootLocation {
    Exact(Rational),
    /// The open interval `(lo, hi)` holds exactly one root, which is
    /// irrational; the polynomial is nonzero at both ends.
    Isolated { lo: Rational, hi: Rational },
}

impl RootLocation {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RootLocation::Exact(r) => Some(r),
            RootLocation::Isolated { .. } => None,
        }
    }

    pub fn lower(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Isolated { lo, .. } => lo,
        }
    }

    pub fn upper(&self) -> &Rational {
        match self {
            RootLocation::Exact(r) => r,
            RootLocation::Isolated { hi, .. } => hi,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RootLocation::Exact(r) => to_f64(r),
            RootLocation::Isolated { lo, hi } => to_f64(&midpoint(lo, hi)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub location: RootLocation,
    pub multiplicity: u32,
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.location {
            RootLocation::Exact(r) => write!(f, "{}", fmt_exact(r))?,
            RootLocation::Isolated { lo, hi } => {
                write!(f, "({}, {})", fmt_exact(lo), fmt_exact(hi))?
            }
        }
        write!(f, " x{}", self.multiplicity)
    }
}

/// Yun's square-free decomposition: monic pairwise coprime factors `q_i` with
/// `p = c * prod q_i^i`. Constant factors are omitted.
pub fn square_free_decomposition(p: &Polynomial) -> Vec<(Polynomial, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let a = f.gcd(&df);
    let mut b = f.div_rem(&a).0;
    let c = df.div_rem(&a).0;
    let mut d = &c - &b.derivative();
    let mut k = 1;
    while b.degree().unwrap_or(0) > 0 {
        let g = b.gcd(&d);
        b = b.div_rem(&g).0;
        let c = d.div_rem(&g).0;
        d = &c - &b.derivative();
        if g.degree().unwrap_or(0) > 0 {
            out.push((g, k));
        }
        k += 1;
    }
    out
}

/// Product of the distinct irreducible factors of `p`, made monic.
pub fn square_free_part(p: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return Polynomial::zero();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct SturmSequence {
    seq: Vec<Polynomial>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        let mut seq = vec![p.clone()];
        if p.degree().unwrap_or(0) > 0 {
            seq.push(p.derivative());
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                // positive rescaling keeps signs and shrinks coefficients
                let lc = r.leading().unwrap().abs();
                seq.push(-&r.scale(&lc.recip()));
            }
        }
        SturmSequence { seq }
    }

    /// Sign variations at `t`, zeros skipped.
    pub fn variations(&self, t: &Rational) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for q in &self.seq {
            let v = q.eval(t);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Number of distinct roots in the half-open interval `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a).saturating_sub(self.variations(b))
    }
}

/// Bound on the denominator of any rational root of `p`.
fn root_denominator_bound(p: &Polynomial) -> BigInt {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lead = p.leading().expect("nonzero polynomial");
    (lead * Rational::from_integer(lcm)).to_integer().abs()
}

struct Isolator<'a> {
    p: &'a Polynomial,
    sturm: SturmSequence,
    /// `1 / D^2` for the rational-root denominator bound `D`
    separation: Rational,
}

impl<'a> Isolator<'a> {
    fn new(p: &'a Polynomial) -> Self {
        let d = root_denominator_bound(p);
        Isolator {
            p,
            sturm: SturmSequence::new(p),
            separation: Rational::new(BigInt::one(), &d * &d),
        }
    }

    fn run(&self, lo: &Rational, hi: &Rational) -> Vec<RootLocation> {
        let mut out = Vec::new();
        if self.p.eval(lo).is_zero() {
            out.push(RootLocation::Exact(lo.clone()));
        }
        if lo == hi {
            return out;
        }
        let mut stack = vec![(lo.clone(), hi.clone(), self.sturm.count(lo, hi))];
        while let Some((a, b, n)) = stack.pop() {
            match n {
                0 => {}
                1 => out.push(self.single(a, b)),
                _ => {
                    let m = midpoint(&a, &b);
                    let left = self.sturm.count(&a, &m);
                    stack.push((m.clone(), b, n - left));
                    stack.push((a, m, left));
                }
            }
        }
        out.sort_by(|x, y| x.lower().cmp(y.lower()));
        out
    }

    /// Locates the unique root in `(a, b]`.
    fn single(&self, mut a: Rational, mut b: Rational) -> RootLocation {
        let p = self.p;
        if p.eval(&b).is_zero() {
            return RootLocation::Exact(b);
        }
        // move the left end off a neighbouring root
        while p.eval(&a).is_zero() {
            let m = midpoint(&a, &b);
            if self.sturm.count(&a, &m) == 1 {
                if p.eval(&m).is_zero() {
                    return RootLocation::Exact(m);
                }
                b = m;
            } else {
                a = m;
            }
        }
        let left_positive = p.eval(&a).is_positive();
        loop {
            let r = simplest_between(&a, &b);
            if r != a && r != b && p.eval(&r).is_zero() {
                return RootLocation::Exact(r);
            }
            if &b - &a < self.separation {
                return RootLocation::Isolated { lo: a, hi: b };
            }
            let m = midpoint(&a, &b);
            let v = p.eval(&m);
            if v.is_zero() {
                return RootLocation::Exact(m);
            }
            if v.is_positive() == left_positive {
                a = m;
            } else {
                b = m;
            }
        }
    }
}

/// Every real root of `p` in the closed window `[lo, hi]`, ascending, each
/// reported once with its multiplicity.
pub fn isolate_roots(p: &Polynomial, lo: &Rational, hi: &Rational) -> Result<Vec<Root>, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo > hi {
        return Err(RootError::EmptyWindow(fmt_exact(lo), fmt_exact(hi)));
    }
    if p.degree() == Some(0) {
        return Ok(Vec::new());
    }
    let factors = square_free_decomposition(p);
    let s = square_free_part(p);
    let locations = Isolator::new(&s).run(lo, hi);
    let roots = locations
        .into_iter()
        .map(|location| {
            let multiplicity = factors
                .iter()
                .find(|(q, _)| match &location {
                    RootLocation::Exact(r) => q.eval(r).is_zero(),
                    RootLocation::Isolated { lo, hi } => {
                        let sl = q.eval(lo);
                        let sh = q.eval(hi);
                        sl.is_positive() != sh.is_positive()
                    }
                })
                .map(|(_, k)| *k)
                .expect("every root of the square-free part divides a factor");
            Root {
                location,
                multiplicity,
            }
        })
        .collect();
    Ok(roots)
}

/// Orders roots by position; isolated roots compare by their intervals.
pub fn compare_locations(a: &RootLocation, b: &RootLocation) -> Ordering {
    a.lower().cmp(b.lower()).then(a.upper().cmp(b.upper()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn exact_roots(roots: &[Root]) -> Vec<(Rational, u32)> {
        roots
            .iter()
            .map(|r| (r.location.exact().cloned().unwrap(), r.multiplicity))
            .collect()
    }

    #[test]
    fn double_root_at_zero() {
        let p = Polynomial::monomial(2, int(1));
        let roots = isolate_roots(&p, &int(-1), &int(1)).unwrap();
        assert_eq!(exact_roots(&roots), vec![(int(0), 2)]);
    }

    #[test]
    fn irrational_root_is_bracketed() {
        let p = Polynomial::from_i64(&[-2, 0, 1]);
        let roots = isolate_roots(&p, &int(0), &int(2)).unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].multiplicity, 1);
        match &roots[0].location {
            RootLocation::Isolated { lo, hi } => {
                assert!(lo * lo < int(2) && hi * hi > int(2));
            }
            other => panic!("expected an isolating interval, got {other:?}"),
        }
    }

    #[test]
    fn roots_on_window_ends() {
        // t (t - 1/2)
        let p = Polynomial::new(vec![int(0), rat(-1, 2), int(1)]);
        let roots = isolate_roots(&p, &int(0), &rat(1, 2)).unwrap();
        assert_eq!(exact_roots(&roots), vec![(int(0), 1), (rat(1, 2), 1)]);
        assert!(isolate_roots(&p, &rat(1, 10), &rat(2, 5)).unwrap().is_empty());
        assert!(isolate_roots(&p, &rat(1, 2), &rat(1, 2)).unwrap().len() == 1);
    }

    #[test]
    fn yun_decomposition() {
        // (t - 1)^3 (t + 2)^2 t
        let p = Polynomial::expand_factored(&[
            (Polynomial::linear_root(&int(1)), 3),
            (Polynomial::linear_root(&int(-2)), 2),
            (Polynomial::t(), 1),
        ]);
        let f = square_free_decomposition(&p);
        assert_eq!(
            f,
            vec![
                (Polynomial::t(), 1),
                (Polynomial::linear_root(&int(-2)), 2),
                (Polynomial::linear_root(&int(1)), 3)
            ]
        );
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            isolate_roots(&Polynomial::zero(), &int(0), &int(1)),
            Err(RootError::ZeroPolynomial)
        );
    }

    #[test]
    fn close_rational_roots_with_large_denominators() {
        let a = rat(1000, 1001);
        let b = rat(1001, 1002);
        let p = Polynomial::expand_factored(&[
            (Polynomial::linear_root(&a), 1),
            (Polynomial::linear_root(&b), 2),
        ]);
        let roots = isolate_roots(&p, &int(0), &int(1)).unwrap();
        assert_eq!(exact_roots(&roots), vec![(a, 1), (b, 2)]);
    }
}
