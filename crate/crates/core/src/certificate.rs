//! Linear-programming certificates for codes and designs.
//!
//! A certificate is a polynomial `f`, a dimension `n`, an allowed set `T` of
//! inner products and a mode naming the family of conditions to check. Writing
//! `f = sum f_i P_i` in the Gegenbauer basis, every mode requires `f_0 > 0`;
//! then
//!
//! | mode                          | sign on `T` | coefficient condition        | bound         |
//! |-------------------------------|-------------|------------------------------|---------------|
//! | `upper-unrestricted`          | `f <= 0`    | `f_i >= 0`, all `i >= 1`     | `|C| <= f(1)/f_0` |
//! | `upper-unrestricted-design τ` | `f <= 0`    | `f_i >= 0`, `i >= τ+1`       | same          |
//! | `upper-antipodal`             | `f <= 0`    | `f_i >= 0`, even `i`         | same          |
//! | `upper-antipodal-design τ`    | `f <= 0`    | `f_i >= 0`, even `i >= τ+1`  | same          |
//! | `lower-design τ`              | `f >= 0`    | `f_i <= 0`, `i >= τ+1`       | `|C| >= f(1)/f_0` |
//!
//! All of it follows from the identity
//! `f(1)|C| + sum_{x != y} f(<x,y>) = f_0 |C|^2 + sum_{i>=1} f_i M_i(C)` with
//! nonnegative moments `M_i`, which vanish for `1 <= i <= τ` on a τ-design
//! and for odd `i` on antipodal codes.
//!
//! Sign conditions are checked on the closed set `T` as given; for half-open
//! sets such as `[-1, 1)` callers pass the closure, which is a stronger
//! requirement.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::gegenbauer::{GegenbauerBasis, GegenbauerError, GegenbauerExpansion};
use crate::interval::IntervalSet;
use crate::poly::Polynomial;
use crate::rational::{fmt_exact, int, Rational};
use crate::roots::{isolate_roots, Root, RootLocation};
use crate::sign::{sign_on_set, SignReport, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CertificateError {
    #[error(transparent)]
    Dimension(#[from] GegenbauerError),
    #[error("allowed set must lie inside [-1, 1]")]
    AllowedOutOfRange,
    #[error("design strength must be at least 1")]
    ZeroStrength,
    #[error("unknown certificate mode `{0}`")]
    UnknownMode(String),
    #[error("mode `{0}` needs a design strength")]
    MissingStrength(String),
    #[error("mode `{0}` takes no design strength")]
    UnexpectedStrength(String),
    #[error("certificate is not valid")]
    NotValid,
    #[error("a code of size {achieved} contradicts the bound {bound}")]
    BoundViolated { achieved: String, bound: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateMode {
    UpperUnrestricted,
    UpperUnrestrictedDesign { tau: u32 },
    UpperAntipodal,
    UpperAntipodalDesign { tau: u32 },
    LowerDesign { tau: u32 },
}

impl CertificateMode {
    pub const NAMES: [&'static str; 5] = [
        "upper-unrestricted",
        "upper-unrestricted-design",
        "upper-antipodal",
        "upper-antipodal-design",
        "lower-design",
    ];

    pub fn parse(name: &str, tau: Option<u32>) -> Result<Self, CertificateError> {
        use CertificateMode::*;
        let needs = |m: fn(u32) -> CertificateMode| match tau {
            Some(0) => Err(CertificateError::ZeroStrength),
            Some(t) => Ok(m(t)),
            None => Err(CertificateError::MissingStrength(name.to_string())),
        };
        let plain = |m: CertificateMode| match tau {
            None => Ok(m),
            Some(_) => Err(CertificateError::UnexpectedStrength(name.to_string())),
        };
        match name.trim() {
            "upper-unrestricted" => plain(UpperUnrestricted),
            "upper-antipodal" => plain(UpperAntipodal),
            "upper-unrestricted-design" => needs(|tau| UpperUnrestrictedDesign { tau }),
            "upper-antipodal-design" => needs(|tau| UpperAntipodalDesign { tau }),
            "lower-design" => needs(|tau| LowerDesign { tau }),
            other => Err(CertificateError::UnknownMode(other.to_string())),
        }
    }

    pub fn name(&self) -> &'static str {
        use CertificateMode::*;
        match self {
            UpperUnrestricted => "upper-unrestricted",
            UpperUnrestrictedDesign { .. } => "upper-unrestricted-design",
            UpperAntipodal => "upper-antipodal",
            UpperAntipodalDesign { .. } => "upper-antipodal-design",
            LowerDesign { .. } => "lower-design",
        }
    }

    pub fn tau(&self) -> Option<u32> {
        use CertificateMode::*;
        match *self {
            UpperUnrestricted | UpperAntipodal => None,
            UpperUnrestrictedDesign { tau }
            | UpperAntipodalDesign { tau }
            | LowerDesign { tau } => Some(tau),
        }
    }

    pub fn is_upper(&self) -> bool {
        !matches!(self, CertificateMode::LowerDesign { .. })
    }

    pub fn is_antipodal(&self) -> bool {
        matches!(
            self,
            CertificateMode::UpperAntipodal | CertificateMode::UpperAntipodalDesign { .. }
        )
    }

    /// Whether the coefficient `f_i` (`i >= 1`) carries a sign condition.
    pub fn constrains(&self, i: usize) -> bool {
        let above_tau = self.tau().map_or(true, |t| i > t as usize);
        let parity_ok = !self.is_antipodal() || i % 2 == 0;
        i >= 1 && above_tau && parity_ok
    }

    /// Whether the moment `M_i` vanishes by assumption on the code class.
    fn moment_free(&self, i: usize) -> bool {
        let design = self.tau().is_some_and(|t| i <= t as usize);
        let odd_antipodal = self.is_antipodal() && i % 2 == 1;
        design || odd_antipodal
    }
}

impl fmt::Display for CertificateMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tau() {
            Some(t) => write!(f, "{}({t})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Certificate {
    pub dimension: u32,
    pub polynomial: Polynomial,
    pub allowed: IntervalSet,
    pub mode: CertificateMode,
}

impl Certificate {
    pub fn new(
        dimension: u32,
        polynomial: Polynomial,
        allowed: IntervalSet,
        mode: CertificateMode,
    ) -> Result<Self, CertificateError> {
        if dimension < 2 {
            return Err(GegenbauerError::Dimension(dimension).into());
        }
        if !allowed.within_unit_range() {
            return Err(CertificateError::AllowedOutOfRange);
        }
        if mode.tau() == Some(0) {
            return Err(CertificateError::ZeroStrength);
        }
        Ok(Certificate {
            dimension,
            polynomial,
            allowed,
            mode,
        })
    }
}

/// Which condition failed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Condition {
    NonzeroPolynomial,
    PositiveConstant,
    /// `f <= 0` (upper modes) or `f >= 0` (lower mode) on the allowed set.
    Sign,
    /// The sign condition on `f_i`.
    Coefficient(usize),
}

/// Exact evidence of a failed condition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FailureWitness {
    None,
    Point(Witness),
    Coefficient { index: usize, value: Rational },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FailedCondition {
    pub condition: Condition,
    pub description: String,
    pub witness: FailureWitness,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.description)?;
        match &self.witness {
            FailureWitness::None => Ok(()),
            FailureWitness::Point(w) => write!(f, "; witness {w}"),
            FailureWitness::Coefficient { index, value } => {
                write!(f, "; witness f_{index} = {}", fmt_exact(value))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub valid: bool,
    /// `f(1) / f_0` when valid.
    pub bound: Option<Rational>,
    /// Floor of the bound in upper modes, ceiling in the lower mode.
    pub integer_bound: Option<BigInt>,
    pub value_at_one: Rational,
    pub failed_conditions: Vec<FailedCondition>,
    pub expansion: GegenbauerExpansion,
    pub sign_report: SignReport,
}

/// Checks `f_0 > 0`, the sign condition on the allowed set and the
/// coefficient condition of the mode, in that order. Every failure is
/// collected with an exact witness.
pub fn verify(cert: &Certificate) -> VerificationReport {
    let basis = GegenbauerBasis::shared(cert.dimension).expect("dimension checked on construction");
    let f = &cert.polynomial;
    let expansion = basis.expand(f);
    let value_at_one = f.eval(&int(1));
    let sign_report = sign_on_set(f, &cert.allowed);
    let upper = cert.mode.is_upper();
    let mut failed = Vec::new();

    if f.is_zero() {
        failed.push(FailedCondition {
            condition: Condition::NonzeroPolynomial,
            description: "polynomial is identically zero".into(),
            witness: FailureWitness::None,
        });
    }
    let f0 = expansion.coeff(0);
    if !f0.is_positive() {
        failed.push(FailedCondition {
            condition: Condition::PositiveConstant,
            description: "f_0 > 0 fails".into(),
            witness: FailureWitness::Coefficient {
                index: 0,
                value: f0.clone(),
            },
        });
    }

    let sign_ok = if upper {
        sign_report.is_nonpositive()
    } else {
        sign_report.is_nonnegative()
    };
    if !sign_ok {
        let bad = if upper {
            sign_report.first_positive()
        } else {
            sign_report.first_negative()
        };
        failed.push(FailedCondition {
            condition: Condition::Sign,
            description: format!(
                "f {} 0 on the allowed set fails",
                if upper { "<=" } else { ">=" }
            ),
            witness: bad.cloned().map_or(FailureWitness::None, FailureWitness::Point),
        });
    }

    for (i, c) in expansion.coeffs.iter().enumerate().skip(1) {
        if !cert.mode.constrains(i) {
            continue;
        }
        let bad = if upper { c.is_negative() } else { c.is_positive() };
        if bad {
            failed.push(FailedCondition {
                condition: Condition::Coefficient(i),
                description: format!("f_{i} {} 0 fails", if upper { ">=" } else { "<=" }),
                witness: FailureWitness::Coefficient {
                    index: i,
                    value: c.clone(),
                },
            });
        }
    }

    let valid = failed.is_empty();
    let bound = valid.then(|| &value_at_one / &f0);
    let integer_bound = bound.as_ref().map(|b| {
        if upper {
            b.floor().to_integer()
        } else {
            b.ceil().to_integer()
        }
    });
    VerificationReport {
        valid,
        bound,
        integer_bound,
        value_at_one,
        failed_conditions: failed,
        expansion,
        sign_report,
    }
}

/// Consequences of a code meeting a certificate's bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttainmentReport {
    pub attained: bool,
    /// Roots of `f` in `[-1, 1)`.
    pub zero_set: Vec<Root>,
    /// The roots lying in the allowed set: the only inner products an
    /// attaining code may have.
    pub permitted_inner_products: Vec<Root>,
    /// Indices `i >= 1` whose coefficient is strictly signed (positive in
    /// upper modes, negative in the lower mode), forcing `M_i = 0`.
    pub forced_zero_moments: Vec<usize>,
    /// Largest `m` with `M_1 = ... = M_m = 0` forced, counting moments that
    /// vanish by the mode's assumptions (design strength, antipodality).
    pub deduced_design_strength: Option<usize>,
}

/// Attainment analysis for a code of size `achieved`.
///
/// A size strictly inside the bound yields `attained = false` with no
/// deductions; a size beyond the bound is an error, as is an invalid
/// certificate.
pub fn attainment(cert: &Certificate, achieved: &Rational) -> Result<AttainmentReport, CertificateError> {
    let report = verify(cert);
    let bound = report.bound.ok_or(CertificateError::NotValid)?;
    let upper = cert.mode.is_upper();
    let beyond = if upper { achieved > &bound } else { achieved < &bound };
    if beyond {
        return Err(CertificateError::BoundViolated {
            achieved: fmt_exact(achieved),
            bound: fmt_exact(&bound),
        });
    }
    if achieved != &bound {
        return Ok(AttainmentReport {
            attained: false,
            zero_set: Vec::new(),
            permitted_inner_products: Vec::new(),
            forced_zero_moments: Vec::new(),
            deduced_design_strength: None,
        });
    }

    let f = &cert.polynomial;
    let one = int(1);
    let zero_set: Vec<Root> = isolate_roots(f, &-one.clone(), &one)
        .expect("valid certificate has a nonzero polynomial")
        .into_iter()
        .filter(|r| r.location.exact() != Some(&one))
        .collect();
    let permitted_inner_products = zero_set
        .iter()
        .filter(|r| match &r.location {
            RootLocation::Exact(x) => cert.allowed.contains(x),
            RootLocation::Isolated { lo, hi } => cert.allowed.meets(lo, hi),
        })
        .cloned()
        .collect();

    let coeffs = &report.expansion.coeffs;
    let strictly_signed = |i: usize| {
        coeffs.get(i).is_some_and(|c| {
            if upper {
                c.is_positive()
            } else {
                c.is_negative()
            }
        })
    };
    let forced_zero_moments: Vec<usize> = (1..coeffs.len()).filter(|&i| strictly_signed(i)).collect();
    // terminates: past the degree only assumed moments remain, and an even
    // index above tau is never assumed
    let mut strength = 0;
    while strictly_signed(strength + 1) || cert.mode.moment_free(strength + 1) {
        strength += 1;
    }
    Ok(AttainmentReport {
        attained: true,
        zero_set,
        permitted_inner_products,
        forced_zero_moments,
        deduced_design_strength: Some(strength),
    })
}

impl VerificationReport {
    /// The failed conditions that point at a coefficient.
    pub fn coefficient_witnesses(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.failed_conditions.iter().filter_map(|c| match &c.witness {
            FailureWitness::Coefficient { index, value } => Some((*index, value)),
            _ => None,
        })
    }
}

/// Bound comparison helper for explicit codes: does a code of `size`
/// respect this report's bound in the given mode?
pub fn respects_bound(report: &VerificationReport, mode: CertificateMode, size: usize) -> bool {
    let Some(bound) = &report.bound else {
        return true;
    };
    let size = Rational::from_integer(size.into());
    if mode.is_upper() {
        size <= *bound
    } else {
        size >= *bound
    }
}

impl Certificate {
    /// Same certificate with the polynomial scaled by `c`.
    pub fn scaled(&self, c: &Rational) -> Certificate {
        let mut out = self.clone();
        out.polynomial = self.polynomial.scale(c);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::rational::rat;

    fn orthoplex(n: u32) -> Certificate {
        Certificate::new(
            n,
            catalog::orthoplex(),
            IntervalSet::closed(int(-1), int(0)).unwrap(),
            CertificateMode::UpperUnrestricted,
        )
        .unwrap()
    }

    #[test]
    fn orthoplex_bound_is_twice_dimension() {
        for n in 2..10u32 {
            let r = verify(&orthoplex(n));
            assert!(r.valid, "{:?}", r.failed_conditions);
            assert_eq!(r.bound, Some(int(2 * i64::from(n))));
            assert_eq!(r.integer_bound, Some(BigInt::from(2 * n)));
        }
    }

    #[test]
    fn mode_parsing() {
        assert_eq!(
            CertificateMode::parse("lower-design", Some(11)).unwrap(),
            CertificateMode::LowerDesign { tau: 11 }
        );
        assert!(matches!(
            CertificateMode::parse("lower-design", None),
            Err(CertificateError::MissingStrength(_))
        ));
        assert!(matches!(
            CertificateMode::parse("upper-antipodal", Some(3)),
            Err(CertificateError::UnexpectedStrength(_))
        ));
        assert!(CertificateMode::parse("upper", None).is_err());
        assert_eq!(
            CertificateMode::parse("upper-antipodal-design", Some(0)),
            Err(CertificateError::ZeroStrength)
        );
    }

    #[test]
    fn constrained_indices() {
        let m = CertificateMode::UpperAntipodalDesign { tau: 3 };
        let idx: Vec<usize> = (0..10).filter(|&i| m.constrains(i)).collect();
        assert_eq!(idx, vec![4, 6, 8]);
        let m = CertificateMode::UpperUnrestricted;
        assert!(!m.constrains(0) && m.constrains(1));
    }

    #[test]
    fn zero_polynomial_is_reported_not_panicking() {
        let c = Certificate::new(
            4,
            Polynomial::zero(),
            IntervalSet::closed(int(-1), int(0)).unwrap(),
            CertificateMode::UpperUnrestricted,
        )
        .unwrap();
        let r = verify(&c);
        assert!(!r.valid);
        assert_eq!(r.failed_conditions[0].condition, Condition::NonzeroPolynomial);
        assert_eq!(r.failed_conditions[1].condition, Condition::PositiveConstant);
        assert!(r.bound.is_none());
    }

    #[test]
    fn sign_failure_has_point_witness() {
        // t (t + 1) is positive on (0, 1/2]
        let c = Certificate::new(
            4,
            catalog::orthoplex(),
            IntervalSet::closed(int(-1), rat(1, 2)).unwrap(),
            CertificateMode::UpperUnrestricted,
        )
        .unwrap();
        let r = verify(&c);
        let sign = r
            .failed_conditions
            .iter()
            .find(|f| f.condition == Condition::Sign)
            .unwrap();
        match &sign.witness {
            FailureWitness::Point(w) => assert!(w.value.is_positive()),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_allowed_set() {
        let r = Certificate::new(
            4,
            catalog::orthoplex(),
            IntervalSet::closed(int(-2), int(0)).unwrap(),
            CertificateMode::UpperUnrestricted,
        );
        assert_eq!(r.unwrap_err(), CertificateError::AllowedOutOfRange);
    }

    #[test]
    fn orthoplex_attainment() {
        let c = orthoplex(5);
        let a = attainment(&c, &int(10)).unwrap();
        assert!(a.attained);
        let pts: Vec<_> = a
            .permitted_inner_products
            .iter()
            .map(|r| r.location.exact().cloned().unwrap())
            .collect();
        assert_eq!(pts, vec![int(-1), int(0)]);
        assert_eq!(a.forced_zero_moments, vec![1, 2]);
        assert_eq!(a.deduced_design_strength, Some(2));

        let below = attainment(&c, &int(9)).unwrap();
        assert!(!below.attained && below.deduced_design_strength.is_none());
        assert!(matches!(
            attainment(&c, &int(11)),
            Err(CertificateError::BoundViolated { .. })
        ));
    }
}
