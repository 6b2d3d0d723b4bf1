//! Gegenbauer polynomials attached to the sphere in `R^n`, normalized so that
//! `P_i(1) = 1`, and exact conversion from the monomial basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;

use crate::poly::Polynomial;
use crate::rational::{int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GegenbauerError {
    #[error("dimension must be at least 2, got {0}")]
    Dimension(u32),
}

/// The basis `P_0, P_1, ...` for one dimension, grown on demand.
///
/// `P_0 = 1`, `P_1 = t` and for `i >= 2`
/// `P_i = ((n + 2i - 4) t P_{i-1} - (i - 1) P_{i-2}) / (n + i - 3)`.
#[derive(Debug)]
pub struct GegenbauerBasis {
    dimension: u32,
    polys: RwLock<Vec<Arc<Polynomial>>>,
}

impl GegenbauerBasis {
    pub fn new(dimension: u32) -> Result<Self, GegenbauerError> {
        if dimension < 2 {
            return Err(GegenbauerError::Dimension(dimension));
        }
        Ok(GegenbauerBasis {
            dimension,
            polys: RwLock::new(vec![Arc::new(Polynomial::one()), Arc::new(Polynomial::t())]),
        })
    }

    /// Shared basis for `dimension`, created once per process.
    pub fn shared(dimension: u32) -> Result<Arc<Self>, GegenbauerError> {
        static CACHE: OnceLock<RwLock<HashMap<u32, Arc<GegenbauerBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(b) = cache.read().unwrap().get(&dimension) {
            return Ok(b.clone());
        }
        let basis = Arc::new(Self::new(dimension)?);
        let mut w = cache.write().unwrap();
        Ok(w.entry(dimension).or_insert(basis).clone())
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    /// `P_i` for this dimension.
    pub fn poly(&self, i: usize) -> Arc<Polynomial> {
        if let Some(p) = self.polys.read().unwrap().get(i) {
            return p.clone();
        }
        let mut polys = self.polys.write().unwrap();
        let n = i64::from(self.dimension);
        let t = Polynomial::t();
        while polys.len() <= i {
            let k = polys.len() as i64;
            let a = &t * &polys[polys.len() - 1];
            let a = a.scale(&int(n + 2 * k - 4));
            let b = polys[polys.len() - 2].scale(&int(k - 1));
            let next = (&a - &b).scale(&int(n + k - 3).recip());
            polys.push(Arc::new(next));
        }
        polys[i].clone()
    }

    /// Evaluates `P_0(t), ..., P_d(t)` in floating point by the same recurrence.
    pub fn eval_all_f64(&self, d: usize, t: f64) -> Vec<f64> {
        let n = f64::from(self.dimension);
        let mut out = Vec::with_capacity(d + 1);
        out.push(1.0);
        if d >= 1 {
            out.push(t);
        }
        for i in 2..=d {
            let k = i as f64;
            let v = ((n + 2.0 * k - 4.0) * t * out[i - 1] - (k - 1.0) * out[i - 2]) / (n + k - 3.0);
            out.push(v);
        }
        out
    }

    /// Coefficients `f_0, ..., f_d` with `p = sum f_i P_i`.
    ///
    /// `P_i` has degree `i`, so the change of basis is triangular and is solved
    /// from the top degree down.
    pub fn expand(&self, p: &Polynomial) -> GegenbauerExpansion {
        let Some(d) = p.degree() else {
            return GegenbauerExpansion {
                dimension: self.dimension,
                coeffs: Vec::new(),
            };
        };
        let mut rest = p.clone();
        let mut coeffs = vec![Rational::zero(); d + 1];
        for i in (0..=d).rev() {
            let c = rest.coeff(i);
            if c.is_zero() {
                continue;
            }
            let pi = self.poly(i);
            let fi = &c / pi.leading().unwrap();
            rest = &rest - &pi.scale(&fi);
            coeffs[i] = fi;
        }
        debug_assert!(rest.is_zero());
        GegenbauerExpansion {
            dimension: self.dimension,
            coeffs,
        }
    }

    /// Constant Gegenbauer coefficient of `t^k`: the mean of `t^k` over the
    /// inner products `<x, y>` as `y` runs over the sphere.
    pub fn monomial_moment(&self, k: usize) -> Rational {
        self.expand(&Polynomial::monomial(k, int(1))).coeff(0)
    }
}

/// Coefficients of a polynomial in the Gegenbauer basis of one dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GegenbauerExpansion {
    pub dimension: u32,
    pub coeffs: Vec<Rational>,
}

impl GegenbauerExpansion {
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Rebuilds `sum f_i P_i`.
    pub fn reconstruct(&self, basis: &GegenbauerBasis) -> Polynomial {
        assert_eq!(basis.dimension(), self.dimension, "basis of another dimension");
        self.coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::zero(), |acc, (i, c)| &acc + &basis.poly(i).scale(c))
    }
}

/// `P_i` in dimension `n`, from the shared cache.
pub fn gegenbauer_poly(n: u32, i: usize) -> Result<Polynomial, GegenbauerError> {
    Ok((*GegenbauerBasis::shared(n)?.poly(i)).clone())
}

pub fn expand_in_gegenbauer(n: u32, p: &Polynomial) -> Result<GegenbauerExpansion, GegenbauerError> {
    Ok(GegenbauerBasis::shared(n)?.expand(p))
}

pub fn monomial_moment(n: u32, k: usize) -> Result<Rational, GegenbauerError> {
    Ok(GegenbauerBasis::shared(n)?.monomial_moment(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use num_traits::One;

    #[test]
    fn low_degree_polys() {
        assert_eq!(gegenbauer_poly(48, 0).unwrap(), Polynomial::one());
        assert_eq!(gegenbauer_poly(48, 1).unwrap(), Polynomial::t());
        // (48 t^2 - 1) / 47
        assert_eq!(
            gegenbauer_poly(48, 2).unwrap(),
            Polynomial::new(vec![rat(-1, 47), int(0), rat(48, 47)])
        );
    }

    #[test]
    fn rejects_small_dimension() {
        assert_eq!(
            GegenbauerBasis::new(1).unwrap_err(),
            GegenbauerError::Dimension(1)
        );
    }

    #[test]
    fn expand_simple_monomials() {
        for n in [2u32, 3, 7, 48] {
            let e = expand_in_gegenbauer(n, &Polynomial::t()).unwrap();
            assert_eq!(e.coeffs, vec![int(0), int(1)]);
            // t^2 = 1/n + (n - 1)/n P_2
            let e = expand_in_gegenbauer(n, &Polynomial::monomial(2, int(1))).unwrap();
            let nn = int(i64::from(n));
            assert_eq!(e.coeffs, vec![nn.recip(), int(0), (&nn - int(1)) / &nn]);
        }
    }

    #[test]
    fn moments_of_monomials() {
        assert_eq!(monomial_moment(48, 2).unwrap(), rat(1, 48));
        assert_eq!(monomial_moment(17, 3).unwrap(), int(0));
        assert_eq!(monomial_moment(17, 0).unwrap(), Rational::one());
        assert!(expand_in_gegenbauer(5, &Polynomial::zero()).unwrap().coeffs.is_empty());
    }

    #[test]
    fn float_recurrence_matches_exact() {
        let b = GegenbauerBasis::new(8).unwrap();
        let vals = b.eval_all_f64(9, 0.3);
        for (i, v) in vals.iter().enumerate() {
            let exact = b.poly(i).eval_f64(0.3);
            assert!((v - exact).abs() < 1e-12, "P_{i}: {v} vs {exact}");
        }
    }
}
