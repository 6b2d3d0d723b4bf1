//! Known certificate polynomials, given by their factorizations.

use crate::interval::{design_allowed_far, design_allowed_near, kissing_allowed};
use crate::poly::Polynomial;
use crate::rational::{int, rat, Rational};

use crate::certificate::{Certificate, CertificateMode};

fn root(r: Rational) -> Polynomial {
    Polynomial::linear_root(&r)
}

/// `t^2 - c`
fn even_pair(c: Rational) -> Polynomial {
    Polynomial::new(vec![-c, int(0), int(1)])
}

/// Factors of the degree-11 kissing polynomial in dimension 48:
/// `(t+1)^2 t^2 (t+1/2)^2 (t^2-1/36) (t^2-1/9) (t-1/2)`.
pub fn kissing48_factors() -> Vec<(Polynomial, u32)> {
    vec![
        (root(int(-1)), 2),
        (Polynomial::t(), 2),
        (root(rat(-1, 2)), 2),
        (even_pair(rat(1, 36)), 1),
        (even_pair(rat(1, 9)), 1),
        (root(rat(1, 2)), 1),
    ]
}

pub fn kissing48() -> Polynomial {
    Polynomial::expand_factored(&kissing48_factors())
}

/// `(t+1) t^2 (t+1/2)^2 (t^2-1/36) (t^2-1/9) (t-1/2)^2`
pub fn design48_near_factors() -> Vec<(Polynomial, u32)> {
    vec![
        (root(int(-1)), 1),
        (Polynomial::t(), 2),
        (root(rat(-1, 2)), 2),
        (even_pair(rat(1, 36)), 1),
        (even_pair(rat(1, 9)), 1),
        (root(rat(1, 2)), 2),
    ]
}

pub fn design48_near() -> Polynomial {
    Polynomial::expand_factored(&design48_near_factors())
}

/// `(t+1) t^2 (t^2-1/36)^2 (t^2-1/9) (t^2-1/4)`
pub fn design48_far_factors() -> Vec<(Polynomial, u32)> {
    vec![
        (root(int(-1)), 1),
        (Polynomial::t(), 2),
        (even_pair(rat(1, 36)), 2),
        (even_pair(rat(1, 9)), 1),
        (even_pair(rat(1, 4)), 1),
    ]
}

pub fn design48_far() -> Polynomial {
    Polynomial::expand_factored(&design48_far_factors())
}

/// Kissing certificate in dimension 8: `(t+1) (t+1/2)^2 t^2 (t-1/2)`.
pub fn kissing8() -> Polynomial {
    Polynomial::expand_factored(&[
        (root(int(-1)), 1),
        (root(rat(-1, 2)), 2),
        (Polynomial::t(), 2),
        (root(rat(1, 2)), 1),
    ])
}

/// Cross-polytope certificate `t (t + 1)`.
pub fn orthoplex() -> Polynomial {
    Polynomial::from_i64(&[0, 1, 1])
}

pub fn kissing48_certificate(mode: CertificateMode) -> Certificate {
    Certificate::new(48, kissing48(), kissing_allowed(), mode).expect("static certificate")
}

pub fn design48_near_certificate() -> Certificate {
    Certificate::new(
        48,
        design48_near(),
        design_allowed_near(),
        CertificateMode::LowerDesign { tau: 11 },
    )
    .expect("static certificate")
}

pub fn design48_far_certificate() -> Certificate {
    Certificate::new(
        48,
        design48_far(),
        design_allowed_far(),
        CertificateMode::LowerDesign { tau: 11 },
    )
    .expect("static certificate")
}

/// Inner products of the 48-dimensional attaining codes other than `1`.
pub fn kissing48_inner_products() -> Vec<Rational> {
    vec![
        int(-1),
        rat(-1, 2),
        rat(-1, 3),
        rat(-1, 6),
        int(0),
        rat(1, 6),
        rat(1, 3),
        rat(1, 2),
    ]
}

pub const KISSING48_CARDINALITY: i64 = 52_416_000;
