//! Rigorous sign verification of a polynomial on an interval set.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::interval::IntervalSet;
use crate::poly::Polynomial;
use crate::rational::{fmt_exact, midpoint, Rational};
use crate::roots::{isolate_roots, RootLocation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignVerdict {
    Nonpositive,
    Nonnegative,
    /// Zero everywhere on the set (vacuously so on an empty set).
    IdenticallyZero,
    Mixed,
}

impl SignVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            SignVerdict::Nonpositive => "nonpositive",
            SignVerdict::Nonnegative => "nonnegative",
            SignVerdict::IdenticallyZero => "identically-zero",
            SignVerdict::Mixed => "mixed",
        }
    }
}

impl fmt::Display for SignVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A point of the set together with the exact value there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Witness {
    pub point: Rational,
    pub value: Rational,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f({}) = {}", fmt_exact(&self.point), fmt_exact(&self.value))
    }
}

/// Outcome of [`sign_on_set`].
///
/// For `Mixed`, the witnesses are one point with a positive value and one
/// with a negative value. For the one-signed verdicts they are the exact zeros
/// found on the set (refuting strict sign), or, when there are none, the
/// sample closest to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignReport {
    pub verdict: SignVerdict,
    pub witnesses: Vec<Witness>,
}

impl SignReport {
    pub fn is_nonpositive(&self) -> bool {
        matches!(
            self.verdict,
            SignVerdict::Nonpositive | SignVerdict::IdenticallyZero
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        matches!(
            self.verdict,
            SignVerdict::Nonnegative | SignVerdict::IdenticallyZero
        )
    }

    pub fn first_positive(&self) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.value.is_positive())
    }

    pub fn first_negative(&self) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.value.is_negative())
    }
}

/// Points at which the sign of `p` on `[lo, hi]` is fully determined: the
/// ends first, then exact roots, isolating-interval ends, and one point inside
/// every gap between consecutive roots.
fn sample_points(p: &Polynomial, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let mut samples = vec![lo.clone()];
    if lo == hi {
        return samples;
    }
    samples.push(hi.clone());
    if p.degree().unwrap_or(0) == 0 {
        samples.push(midpoint(lo, hi));
        return samples;
    }
    let roots = isolate_roots(p, lo, hi).expect("nonzero polynomial");
    let mut marks = vec![lo.clone()];
    for r in &roots {
        match &r.location {
            RootLocation::Exact(x) => marks.push(x.clone()),
            RootLocation::Isolated { lo, hi } => {
                marks.push(lo.clone());
                marks.push(hi.clone());
                samples.push(lo.clone());
                samples.push(hi.clone());
            }
        }
        if let Some(x) = r.location.exact() {
            samples.push(x.clone());
        }
    }
    marks.push(hi.clone());
    marks.dedup();
    for pair in marks.windows(2) {
        samples.push(midpoint(&pair[0], &pair[1]));
    }
    samples
}

/// Decides the sign of `p` on every point of `set`.
///
/// Each interval is split at the real roots of `p`; the sign is constant on
/// every gap and is read off an exact sample inside it. No floating point is
/// involved.
pub fn sign_on_set(p: &Polynomial, set: &IntervalSet) -> SignReport {
    let mut values: Vec<Witness> = Vec::new();
    if !p.is_zero() {
        for iv in set.intervals() {
            for point in sample_points(p, &iv.lo, &iv.hi) {
                let value = p.eval(&point);
                values.push(Witness { point, value });
            }
        }
    } else {
        for iv in set.intervals() {
            values.push(Witness {
                point: iv.lo.clone(),
                value: Rational::zero(),
            });
        }
    }

    let pos = values.iter().find(|w| w.value.is_positive()).cloned();
    let neg = values.iter().find(|w| w.value.is_negative()).cloned();
    let zeros = || -> Vec<Witness> {
        let mut z: Vec<Witness> = values.iter().filter(|w| w.value.is_zero()).cloned().collect();
        z.sort_by(|a, b| a.point.cmp(&b.point));
        z.dedup();
        z
    };
    match (pos, neg) {
        (Some(p), Some(n)) => SignReport {
            verdict: SignVerdict::Mixed,
            witnesses: vec![n, p],
        },
        (None, None) => SignReport {
            verdict: SignVerdict::IdenticallyZero,
            witnesses: zeros(),
        },
        (pos, _) => {
            let verdict = if pos.is_some() {
                SignVerdict::Nonnegative
            } else {
                SignVerdict::Nonpositive
            };
            let mut witnesses = zeros();
            if witnesses.is_empty() {
                let closest = values
                    .iter()
                    .min_by(|a, b| a.value.abs().cmp(&b.value.abs()))
                    .cloned();
                witnesses.extend(closest);
            }
            SignReport { verdict, witnesses }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn mixed_linear() {
        let p = Polynomial::new(vec![rat(-1, 4), int(1)]);
        let set = IntervalSet::closed(int(0), rat(1, 2)).unwrap();
        let report = sign_on_set(&p, &set);
        assert_eq!(report.verdict, SignVerdict::Mixed);
        assert_eq!(
            report.witnesses,
            vec![
                Witness { point: int(0), value: rat(-1, 4) },
                Witness { point: rat(1, 2), value: rat(1, 4) },
            ]
        );
    }

    #[test]
    fn interior_bump_is_caught() {
        // -(t - 1/3)^2 + 1/1000 is positive only near 1/3, far from the ends
        let p = &-&Polynomial::linear_root(&rat(1, 3)).pow(2)
            + &Polynomial::constant(rat(1, 1000));
        let set = IntervalSet::closed(int(-1), int(1)).unwrap();
        let report = sign_on_set(&p, &set);
        assert_eq!(report.verdict, SignVerdict::Mixed);
        assert!(report.first_positive().is_some());
    }

    #[test]
    fn touching_zero_stays_one_signed() {
        let p = Polynomial::monomial(2, int(-1));
        let set: IntervalSet = "[-1, 1] {2}".parse().unwrap();
        let report = sign_on_set(&p, &set);
        assert_eq!(report.verdict, SignVerdict::Nonpositive);
        assert_eq!(
            report.witnesses,
            vec![Witness { point: int(0), value: int(0) }]
        );
    }

    #[test]
    fn zero_polynomial_and_empty_set() {
        let set = IntervalSet::closed(int(0), int(1)).unwrap();
        assert_eq!(
            sign_on_set(&Polynomial::zero(), &set).verdict,
            SignVerdict::IdenticallyZero
        );
        let r = sign_on_set(&Polynomial::one(), &IntervalSet::empty());
        assert!(r.is_nonpositive() && r.is_nonnegative());
    }

    #[test]
    fn isolated_point_only() {
        let p = Polynomial::from_i64(&[-1, 1]);
        let set: IntervalSet = "{1}".parse().unwrap();
        assert_eq!(sign_on_set(&p, &set).verdict, SignVerdict::IdenticallyZero);
    }
}
