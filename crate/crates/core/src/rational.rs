//! Exact rational scalars.
//!
//! Scalars are `num_rational::BigRational`, which keeps every value in lowest
//! terms with a positive denominator. This module adds the parsing and
//! formatting conventions used throughout the crate, plus the continued
//! fraction tools used for root detection and float rationalization.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `p/q`, or a finite decimal such as `-0.125`.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let whole = if digits.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(digits).map_err(|_| err())?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac = BigInt::from_str(frac).map_err(|_| err())?;
        let mut value = Rational::new(whole * &scale + frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    BigInt::from_str(t)
        .map(Rational::from_integer)
        .map_err(|_| err())
}

/// Canonical text form: always `p/q`, including `q = 1`.
pub fn fmt_exact(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn to_f64(r: &Rational) -> f64 {
    // numerator and denominator may each overflow f64 while the ratio does not
    let n = r.numer();
    let d = r.denom();
    match (n.to_f64(), d.to_f64()) {
        (Some(a), Some(b)) if a.is_finite() && b.is_finite() => a / b,
        _ => {
            let shift = n.bits().max(d.bits()).saturating_sub(1000);
            let a = (n >> shift).to_f64().unwrap_or(0.0);
            let b = (d >> shift).to_f64().unwrap_or(1.0);
            a / b
        }
    }
}

/// Exact conversion of a finite double.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// The rational with the smallest denominator in the closed interval
/// `[lo, hi]`; when the interval holds integers, the one closest to zero.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    debug_assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rational::zero();
    }
    let ceil = lo.ceil();
    if &ceil <= hi {
        // the integer in range closest to zero
        return if lo.is_positive() { ceil } else { hi.floor() };
    }
    let fl = lo.floor();
    // lo, hi both lie in (fl, fl + 1)
    let inner = simplest_between(&(hi - &fl).recip(), &(lo - &fl).recip());
    fl + inner.recip()
}

/// Closest rational to `x` with denominator at most `max_den`, found from the
/// continued fraction convergents and semiconvergents of `x`.
pub fn best_approximation(x: &Rational, max_den: &BigInt) -> Rational {
    assert!(max_den.is_positive(), "denominator bound must be positive");
    if x.denom() <= max_den {
        return x.clone();
    }
    // convergents h/k
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if &k2 > max_den {
            // largest admissible semiconvergent
            let m = (max_den - &k0).div_floor(&k1);
            let semi = Rational::new(&m * &h1 + &h0, &m * &k1 + &k0);
            let conv = Rational::new(h1.clone(), k1.clone());
            let ds = (&semi - x).abs();
            let dc = (&conv - x).abs();
            return if ds < dc { semi } else { conv };
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = &rest - Rational::from_integer(a);
        if frac.is_zero() {
            return Rational::new(h1, k1);
        }
        rest = frac.recip();
    }
}

/// Parses a comma and/or whitespace separated list of rationals.
pub fn parse_rational_list(s: &str) -> Result<Vec<Rational>, ParseRationalError> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(parse_rational)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational(" -6/4 ").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("-0.125").unwrap(), rat(-1, 8));
        assert_eq!(parse_rational(".5").unwrap(), rat(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn exact_format_keeps_unit_denominator() {
        assert_eq!(fmt_exact(&int(52416000)), "52416000/1");
        assert_eq!(fmt_exact(&rat(-2, 4)), "-1/2");
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&rat(3, 10), &rat(2, 5)), rat(1, 3));
        assert_eq!(simplest_between(&rat(-2, 5), &rat(-3, 10)), rat(-1, 3));
        assert_eq!(simplest_between(&rat(1, 7), &rat(1, 7)), rat(1, 7));
        assert_eq!(simplest_between(&rat(-5, 2), &rat(7, 2)), int(0));
        assert_eq!(simplest_between(&rat(-9, 2), &rat(-5, 2)), int(-3));
        assert_eq!(simplest_between(&rat(3, 2), &rat(7, 2)), int(2));
    }

    #[test]
    fn best_approximation_examples() {
        let pi = from_f64(std::f64::consts::PI).unwrap();
        assert_eq!(best_approximation(&pi, &BigInt::from(10)), rat(22, 7));
        assert_eq!(best_approximation(&pi, &BigInt::from(200)), rat(355, 113));
        let x = from_f64(-0.50007).unwrap();
        assert_eq!(best_approximation(&x, &BigInt::from(36)), rat(-1, 2));
        let y = from_f64(0.16668).unwrap();
        assert_eq!(best_approximation(&y, &BigInt::from(36)), rat(1, 6));
    }

    #[test]
    fn large_ratio_to_float() {
        let big = Rational::new(
            num_traits::pow(BigInt::from(10), 400) * 3 + 1,
            num_traits::pow(BigInt::from(10), 400),
        );
        assert_eq!(to_f64(&big), 3.0);
    }
}
