//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's Gegenbauer code: the basis is rebuilt by
//! Gram-Schmidt against the closed-form moments of the uniform measure on the
//! sphere, which is a different route to the same polynomials.

#![allow(dead_code)]

use lpcert::poly::Polynomial;
use lpcert::rational::{int, rat, Rational};
use num_traits::{One, Zero};
use rand::Rng;

/// Average of `t^k` over the sphere in `R^n`, where `t` is one coordinate:
/// `(k-1)!! / (n (n+2) ... (n+k-2))` for even `k`, zero for odd `k`.
pub fn closed_form_moment(n: u32, k: usize) -> Rational {
    if k % 2 == 1 {
        return Rational::zero();
    }
    let mut m = Rational::one();
    for j in 0..k / 2 {
        m *= rat(2 * j as i64 + 1, n as i64 + 2 * j as i64);
    }
    m
}

/// The linear functional `q -> E[q(t)]`.
pub fn average(n: u32, q: &Polynomial) -> Rational {
    q.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * closed_form_moment(n, k))
        .sum()
}

/// Orthogonal polynomials for the functional, normalized to `P_i(1) = 1`.
pub fn gram_schmidt_basis(n: u32, d: usize) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for i in 0..=d {
        let mut p = Polynomial::monomial(i, int(1));
        for q in &basis {
            let c = average(n, &(&p * q)) / average(n, &(q * q));
            p = &p - &q.scale(&c);
        }
        let at_one = p.eval(&int(1));
        basis.push(p.scale(&at_one.recip()));
    }
    basis
}

/// Coefficients of `p` in the oracle basis.
pub fn oracle_expand(n: u32, p: &Polynomial) -> Vec<Rational> {
    let d = p.degree().unwrap_or(0);
    gram_schmidt_basis(n, d)
        .iter()
        .map(|q| average(n, &(p * q)) / average(n, &(q * q)))
        .collect()
}

pub fn random_rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn random_poly<R: Rng>(rng: &mut R, max_degree: usize) -> Polynomial {
    let d = rng.gen_range(0..=max_degree);
    Polynomial::new((0..=d).map(|_| random_rational(rng, 20, 9)).collect())
}

/// Reference Gegenbauer coefficients `h_0, ..., h_11` of the kissing
/// polynomial in dimension 48.
pub fn reference_h() -> Vec<Rational> {
    [
        (1, 13478400),
        (3961, 1758931200),
        (47, 8794656),
        (-118957, 811814400),
        (122059, 1563494400),
        (376856011, 32716120320),
        (231656467, 3008378880),
        (399983395, 1342199808),
        (439011349, 577290240),
        (3260719, 2589120),
        (16303595, 14729216),
        (2075003, 5523456),
    ]
    .iter()
    .map(|&(p, q)| rat(p, q))
    .collect()
}

/// Reference distance distribution of the 48-dimensional codes.
pub fn reference_distribution() -> Vec<(Rational, i64)> {
    vec![
        (int(-1), 1),
        (rat(-1, 2), 36848),
        (rat(1, 2), 36848),
        (rat(-1, 3), 1678887),
        (rat(1, 3), 1678887),
        (rat(-1, 6), 12608784),
        (rat(1, 6), 12608784),
        (int(0), 23766960),
    ]
}
