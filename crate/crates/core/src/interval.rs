//! Finite unions of closed rational intervals and isolated points.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::rational::{fmt_exact, parse_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntervalError {
    #[error("interval [{0}, {1}] has lower end above upper end")]
    Reversed(String, String),
    #[error("cannot parse interval set: {0}")]
    Parse(String),
}

/// A closed interval `[lo, hi]`; `lo == hi` is an isolated point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        if lo > hi {
            return Err(IntervalError::Reversed(fmt_exact(&lo), fmt_exact(&hi)));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(p: Rational) -> Self {
        Interval {
            lo: p.clone(),
            hi: p,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo <= t && t <= &self.hi
    }
}

/// Sorted, pairwise disjoint closed intervals. Overlapping or touching inputs
/// are merged on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntervalSet {
    intervals: Vec<Interval>,
}

impl IntervalSet {
    pub fn new(mut intervals: Vec<Interval>) -> Self {
        intervals.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi => {
                    if iv.hi > last.hi {
                        last.hi = iv.hi;
                    }
                }
                _ => merged.push(iv),
            }
        }
        IntervalSet { intervals: merged }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn closed(lo: Rational, hi: Rational) -> Result<Self, IntervalError> {
        Ok(Self::new(vec![Interval::new(lo, hi)?]))
    }

    /// Closure of `[lo, hi]` minus a list of open intervals.
    pub fn closed_minus_open(lo: Rational, hi: Rational, removed: &[(Rational, Rational)]) -> Self {
        let mut pieces = vec![Interval {
            lo: lo.clone(),
            hi: hi.clone(),
        }];
        for (a, b) in removed {
            let mut next = Vec::new();
            for p in pieces {
                if b <= &p.lo || a >= &p.hi {
                    next.push(p);
                    continue;
                }
                if a >= &p.lo {
                    next.push(Interval {
                        lo: p.lo.clone(),
                        hi: a.clone(),
                    });
                }
                if b <= &p.hi {
                    next.push(Interval {
                        lo: b.clone(),
                        hi: p.hi.clone(),
                    });
                }
            }
            pieces = next;
        }
        Self::new(pieces)
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, t: &Rational) -> bool {
        self.intervals.iter().any(|iv| iv.contains(t))
    }

    /// Whether some interval meets the closed range `[lo, hi]`.
    pub fn meets(&self, lo: &Rational, hi: &Rational) -> bool {
        self.intervals.iter().any(|iv| &iv.lo <= hi && lo <= &iv.hi)
    }

    pub fn min(&self) -> Option<&Rational> {
        self.intervals.first().map(|iv| &iv.lo)
    }

    pub fn max(&self) -> Option<&Rational> {
        self.intervals.last().map(|iv| &iv.hi)
    }

    /// Whether the whole set lies inside `[-1, 1]`.
    pub fn within_unit_range(&self) -> bool {
        let one = Rational::one();
        match (self.min(), self.max()) {
            (Some(lo), Some(hi)) => lo >= &-one.clone() && hi <= &one,
            _ => true,
        }
    }

    /// Whether the set is symmetric under `t -> -t`.
    pub fn is_symmetric(&self) -> bool {
        let mirrored = IntervalSet::new(
            self.intervals
                .iter()
                .map(|iv| Interval {
                    lo: -iv.hi.clone(),
                    hi: -iv.lo.clone(),
                })
                .collect(),
        );
        &mirrored == self
    }
}

/// `[a, b] [c, d] {p}` with rational endpoints; commas between items optional.
impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .intervals
            .iter()
            .map(|iv| {
                if iv.is_point() {
                    format!("{{{}}}", fmt_exact(&iv.lo))
                } else {
                    format!("[{}, {}]", fmt_exact(&iv.lo), fmt_exact(&iv.hi))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for IntervalSet {
    type Err = IntervalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |m: &str| IntervalError::Parse(format!("{m} in `{}`", s.trim()));
        let mut out = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
            if rest.is_empty() {
                break;
            }
            let (close, point) = match rest.as_bytes()[0] {
                b'[' => (']', false),
                b'{' => ('}', true),
                _ => return Err(bad("expected `[` or `{`")),
            };
            let end = rest.find(close).ok_or_else(|| bad("unterminated item"))?;
            let body = &rest[1..end];
            rest = &rest[end + 1..];
            if point {
                let p = parse_rational(body).map_err(|e| bad(&e.to_string()))?;
                out.push(Interval::point(p));
            } else {
                let (a, b) = body.split_once(',').ok_or_else(|| bad("interval needs two ends"))?;
                let a = parse_rational(a).map_err(|e| bad(&e.to_string()))?;
                let b = parse_rational(b).map_err(|e| bad(&e.to_string()))?;
                out.push(Interval::new(a, b)?);
            }
        }
        Ok(IntervalSet::new(out))
    }
}

/// The forbidden set `(-1/3, -1/6) ∪ (1/6, 1/3)` as open-interval ends.
pub fn forbidden_near() -> Vec<(Rational, Rational)> {
    vec![(rat(-1, 3), rat(-1, 6)), (rat(1, 6), rat(1, 3))]
}

/// The forbidden set `(-1/2, -1/3) ∪ (1/3, 1/2)` as open-interval ends.
pub fn forbidden_far() -> Vec<(Rational, Rational)> {
    vec![(rat(-1, 2), rat(-1, 3)), (rat(1, 3), rat(1, 2))]
}

/// Allowed inner products of a kissing code avoiding `forbidden_near`:
/// `[-1, -1/3] ∪ [-1/6, 1/6] ∪ [1/3, 1/2]`.
pub fn kissing_allowed() -> IntervalSet {
    IntervalSet::closed_minus_open(rat(-1, 1), rat(1, 2), &forbidden_near())
}

/// Closure of `[-1, 1)` minus `forbidden_near`.
pub fn design_allowed_near() -> IntervalSet {
    IntervalSet::closed_minus_open(rat(-1, 1), rat(1, 1), &forbidden_near())
}

/// Closure of `[-1, 1)` minus `forbidden_far`.
pub fn design_allowed_far() -> IntervalSet {
    IntervalSet::closed_minus_open(rat(-1, 1), rat(1, 1), &forbidden_far())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merging_and_order() {
        let s: IntervalSet = "[1/3, 1/2], [-1, 0] {0} [-1/2, 1/4]".parse().unwrap();
        assert_eq!(s.to_string(), "[-1/1, 1/4] [1/3, 1/2]");
        assert!(s.contains(&rat(1, 4)));
        assert!(!s.contains(&rat(3, 10)));
    }

    #[test]
    fn standard_sets() {
        assert_eq!(
            kissing_allowed().to_string(),
            "[-1/1, -1/3] [-1/6, 1/6] [1/3, 1/2]"
        );
        assert_eq!(
            design_allowed_far().to_string(),
            "[-1/1, -1/2] [-1/3, 1/3] [1/2, 1/1]"
        );
        assert!(design_allowed_near().is_symmetric());
        assert!(!kissing_allowed().is_symmetric());
        assert!(kissing_allowed().within_unit_range());
    }

    #[test]
    fn parse_errors() {
        assert!("[1, 0]".parse::<IntervalSet>().is_err());
        assert!("[0, 1".parse::<IntervalSet>().is_err());
        assert!("(0, 1)".parse::<IntervalSet>().is_err());
        assert!("[0]".parse::<IntervalSet>().is_err());
        assert!("".parse::<IntervalSet>().unwrap().is_empty());
    }
}
