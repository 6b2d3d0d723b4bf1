mod common;

use lpcert::catalog;
use lpcert::certificate::{verify, Certificate, CertificateMode};
use lpcert::designs::{analyze_code, codes};
use lpcert::gegenbauer::GegenbauerBasis;
use lpcert::interval::{Interval, IntervalSet};
use lpcert::poly::Polynomial;
use lpcert::rational::{int, rat, Rational};
use lpcert::roots::{isolate_roots, RootLocation};
use lpcert::search::{search_float, simplex_solve, LinearProgram, LpOutcome, Relation, SearchProblem, Sense};
use lpcert::sign::{sign_on_set, SignVerdict};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn unit_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24).prop_map(|p| rat(p, 24))
}

fn polynomial(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(rational(), 1..=max_degree + 1).prop_map(Polynomial::new)
}

fn allowed_set() -> impl Strategy<Value = IntervalSet> {
    prop::collection::vec((unit_rational(), unit_rational()), 1..=3).prop_map(|pairs| {
        IntervalSet::new(
            pairs
                .into_iter()
                .map(|(a, b)| if a <= b { Interval::new(a, b) } else { Interval::new(b, a) }.unwrap())
                .collect(),
        )
    })
}

/// Integral of `p (1 - t^2)^e` over `[-1, 1]`.
fn weighted_integral(p: &Polynomial, e: u32) -> Rational {
    let w = Polynomial::from_i64(&[1, 0, -1]).pow(e);
    let anti = (p * &w).integral();
    anti.eval(&int(1)) - anti.eval(&int(-1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn evaluation_is_a_ring_map(p in polynomial(6), q in polynomial(6), t in rational()) {
        prop_assert_eq!((&p * &q).eval(&t), p.eval(&t) * q.eval(&t));
        prop_assert_eq!((&p + &q).eval(&t), p.eval(&t) + q.eval(&t));
    }

    #[test]
    fn division_identity(p in polynomial(8), q in polynomial(4)) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = p.div_rem(&q);
        prop_assert_eq!(&(&quot * &q) + &rem, p);
        prop_assert!(rem.degree().unwrap_or(0) < q.degree().unwrap_or(0) || rem.is_zero());
    }

    #[test]
    fn factored_roots_are_recovered(
        roots in prop::collection::btree_set(unit_rational(), 1..=5),
        mults in prop::collection::vec(1u32..=3, 5),
        lead in (1i64..=9).prop_map(int),
    ) {
        let want: Vec<(Rational, u32)> = roots.into_iter().zip(mults).collect();
        let factors: Vec<(Polynomial, u32)> = want.iter().map(|(r, m)| (Polynomial::linear_root(r), *m)).collect();
        let p = Polynomial::expand_factored(&factors).scale(&lead);
        let got: Vec<(Rational, u32)> = isolate_roots(&p, &int(-2), &int(2))
            .unwrap()
            .into_iter()
            .map(|r| (r.location.exact().cloned().expect("rational root"), r.multiplicity))
            .collect();
        prop_assert_eq!(got, want);
    }

    #[test]
    fn multiplicities_fit_the_degree(p in polynomial(9)) {
        prop_assume!(!p.is_zero());
        let roots = isolate_roots(&p, &int(-5), &int(5)).unwrap();
        let total: u32 = roots.iter().map(|r| r.multiplicity).sum();
        prop_assert!(total as usize <= p.degree().unwrap());
        for r in &roots {
            match &r.location {
                RootLocation::Exact(x) => prop_assert!(p.eval(x).is_zero()),
                RootLocation::Isolated { lo, hi } => {
                    let (a, b) = (p.eval(lo), p.eval(hi));
                    prop_assert!(!a.is_zero() && !b.is_zero());
                }
            }
        }
    }

    #[test]
    fn sign_agrees_with_sampling(p in polynomial(7), set in allowed_set()) {
        let report = sign_on_set(&p, &set);
        let mut pos = false;
        let mut neg = false;
        for iv in set.intervals() {
            for j in 0..=1000 {
                let t = &iv.lo + (&iv.hi - &iv.lo) * rat(j, 1000);
                let v = p.eval(&t);
                pos |= v.is_positive();
                neg |= v.is_negative();
            }
        }
        match report.verdict {
            SignVerdict::Nonpositive => prop_assert!(!pos),
            SignVerdict::Nonnegative => prop_assert!(!neg),
            SignVerdict::IdenticallyZero => prop_assert!(!pos && !neg),
            SignVerdict::Mixed => {
                let n = report.first_negative().unwrap();
                let q = report.first_positive().unwrap();
                prop_assert!(set.contains(&n.point) && p.eval(&n.point) == n.value && n.value.is_negative());
                prop_assert!(set.contains(&q.point) && p.eval(&q.point) == q.value && q.value.is_positive());
            }
        }
        if pos && neg {
            prop_assert_eq!(report.verdict, SignVerdict::Mixed);
        }
    }

    #[test]
    fn gegenbauer_round_trip(p in polynomial(12), which in 0usize..4) {
        let n = [3u32, 8, 24, 48][which];
        let basis = GegenbauerBasis::shared(n).unwrap();
        prop_assert_eq!(basis.expand(&p).reconstruct(&basis), p);
    }

    #[test]
    fn expansion_matches_gram_schmidt(p in polynomial(6), which in 0usize..4) {
        let n = [3u32, 5, 8, 48][which];
        let basis = GegenbauerBasis::shared(n).unwrap();
        let mut got = basis.expand(&p).coeffs;
        let mut want = common::oracle_expand(n, &p);
        while got.last().is_some_and(Zero::is_zero) { got.pop(); }
        while want.last().is_some_and(Zero::is_zero) { want.pop(); }
        prop_assert_eq!(got, want);
    }

    #[test]
    fn verification_is_scale_invariant(c in (1i64..=500, 1i64..=500).prop_map(|(p, q)| rat(p, q)), which in 0usize..4) {
        let cert = match which {
            0 => catalog::kissing48_certificate(CertificateMode::UpperAntipodal),
            1 => catalog::kissing48_certificate(CertificateMode::UpperUnrestricted),
            2 => catalog::design48_near_certificate(),
            _ => Certificate::new(
                4,
                catalog::orthoplex(),
                IntervalSet::closed(int(-1), int(0)).unwrap(),
                CertificateMode::UpperUnrestricted,
            )
            .unwrap(),
        };
        let a = verify(&cert);
        let b = verify(&cert.scaled(&c));
        prop_assert_eq!(a.valid, b.valid);
        prop_assert_eq!(a.bound, b.bound);
        prop_assert_eq!(
            a.failed_conditions.iter().map(|f| f.condition.clone()).collect::<Vec<_>>(),
            b.failed_conditions.iter().map(|f| f.condition.clone()).collect::<Vec<_>>()
        );
        let flipped = verify(&cert.scaled(&-c));
        prop_assert!(!flipped.valid);
    }

    #[test]
    fn master_identity_on_codes(f in polynomial(7), which in 0usize..4) {
        let (n, points) = match which {
            0 => (4u32, codes::hypercube(4)),
            1 => (8, codes::e8_roots()),
            2 => (5, codes::simplex(5)),
            _ => (6, codes::cross_polytope(6)),
        };
        let basis = GegenbauerBasis::shared(n).unwrap();
        let a = analyze_code(&points, &basis, 7).unwrap();
        let lhs: Rational = a.gram.iter().flatten().map(|t| f.eval(t)).sum();
        let rhs: Rational = basis.expand(&f).coeffs.iter().zip(&a.moments).map(|(c, m)| c * m).sum();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn small_lps_match_vertex_enumeration(
        rows in prop::collection::vec((-9i64..=9, -9i64..=9, 1i64..=20), 1..=6),
        obj in (-5i64..=5, -5i64..=5),
    ) {
        // max c.x over x in [0, 10]^2 with a.x <= b
        let mut lp = LinearProgram::new(Sense::Maximize, vec![obj.0 as f64, obj.1 as f64]);
        let mut all: Vec<(f64, f64, f64)> = vec![(1.0, 0.0, 10.0), (0.0, 1.0, 10.0), (-1.0, 0.0, 0.0), (0.0, -1.0, 0.0)];
        for &(a, b, r) in &rows {
            lp.add(vec![a as f64, b as f64], Relation::Le, r as f64);
            all.push((a as f64, b as f64, r as f64));
        }
        lp.add(vec![1.0, 0.0], Relation::Le, 10.0);
        lp.add(vec![0.0, 1.0], Relation::Le, 10.0);
        let mut best = f64::NEG_INFINITY;
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let (a1, b1, r1) = all[i];
                let (a2, b2, r2) = all[j];
                let det = a1 * b2 - a2 * b1;
                if det.abs() < 1e-12 { continue; }
                let x = (r1 * b2 - r2 * b1) / det;
                let y = (a1 * r2 - a2 * r1) / det;
                if all.iter().all(|&(a, b, r)| a * x + b * y <= r + 1e-9) {
                    best = best.max(obj.0 as f64 * x + obj.1 as f64 * y);
                }
            }
        }
        // the origin is always feasible, so the box keeps the problem bounded
        match simplex_solve(&lp).unwrap() {
            LpOutcome::Optimal(s) => prop_assert!((s.objective - best).abs() <= 1e-7 * best.abs().max(1.0)),
            other => prop_assert!(false, "unexpected {:?}", other),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // t(t + 1) keeps every instance feasible
    #[test]
    fn search_is_reproducible_and_monotone(n in 3u32..=10, d in 2usize..=5, rounds in 0usize..=3) {
        let mut p = SearchProblem::new(n, d, CertificateMode::UpperUnrestricted, IntervalSet::closed(int(-1), int(0)).unwrap()).unwrap();
        p.refinement_rounds = rounds;
        p.nodes_per_interval = 24;
        let a = search_float(&p).unwrap();
        let b = search_float(&p).unwrap();
        prop_assert_eq!(&a, &b);
        for w in a.optimum_history.windows(2) {
            prop_assert!(w[1] >= w[0] * (1.0 - 1e-9), "history {:?}", a.optimum_history);
        }
    }
}

#[test]
fn odd_dimension_orthogonality() {
    for n in [3u32, 5, 7, 9] {
        let e = (n - 3) / 2;
        let basis = GegenbauerBasis::shared(n).unwrap();
        for i in 0..=6 {
            for j in 0..=6 {
                let v = weighted_integral(&(&*basis.poly(i) * &*basis.poly(j)), e);
                assert_eq!(v.is_zero(), i != j, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn unit_value_and_moments() {
    for n in [3u32, 8, 24, 48] {
        let basis = GegenbauerBasis::shared(n).unwrap();
        for i in 0..=30 {
            assert_eq!(basis.poly(i).eval(&int(1)), int(1));
        }
        for k in 0..=20 {
            assert_eq!(basis.monomial_moment(k), common::closed_form_moment(n, k), "n={n} k={k}");
        }
    }
}

#[test]
fn moments_two_ways() {
    for (n, points) in [(8u32, codes::e8_roots()), (4, codes::hypercube(4)), (3, codes::simplex(3))] {
        let basis = GegenbauerBasis::shared(n).unwrap();
        let a = analyze_code(&points, &basis, 8).unwrap();
        for i in 0..=8 {
            let p = basis.poly(i);
            let direct: Rational = a.gram.iter().flatten().map(|t| p.eval(t)).sum();
            assert_eq!(direct, a.moments[i], "n={n} i={i}");
            assert!(!a.moments[i].is_negative());
        }
    }
}
