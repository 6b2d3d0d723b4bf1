//! Exact dense linear algebra over the rationals.

use num_traits::Zero;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is {rows}x{cols}, expected square with {rhs} right-hand sides")]
    Shape { rows: usize, cols: usize, rhs: usize },
}

/// Solves `a x = b` by Gaussian elimination with exact pivots.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    let n = a.len();
    if b.len() != n || a.iter().any(|row| row.len() != n) {
        return Err(LinalgError::Shape {
            rows: n,
            cols: a.first().map_or(0, Vec::len),
            rhs: b.len(),
        });
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .ok_or(LinalgError::Singular)?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for v in m[col].iter_mut().skip(col) {
            *v *= &inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..=n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    Ok(m.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &m[r][col];
            for c in col..cols {
                let delta = &factor * &m[r][c];
                m[i][c] -= delta;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Square Vandermonde matrix `V[k][j] = nodes[j]^k`, `k = 0..nodes.len()`.
pub fn vandermonde(nodes: &[Rational]) -> Vec<Vec<Rational>> {
    let n = nodes.len();
    let mut rows = Vec::with_capacity(n);
    let mut power: Vec<Rational> = vec![num_traits::One::one(); n];
    for _ in 0..n {
        rows.push(power.clone());
        for (p, x) in power.iter_mut().zip(nodes) {
            *p *= x;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn small_system() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&a, &[int(3), int(5)]).unwrap();
        assert_eq!(x, vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn singular_and_rank() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&a, &[int(1), int(2)]), Err(LinalgError::Singular));
        assert_eq!(rank(&a), 1);
        assert_eq!(rank(&vandermonde(&[int(0), rat(1, 2), int(3)])), 3);
        assert_eq!(rank(&vandermonde(&[int(1), int(1)])), 1);
    }

    #[test]
    fn vandermonde_interpolates() {
        // weights reproducing sum_j w_j x_j^k for x = (-1, 0, 2), w = (1, 2, 3)
        let x = [int(-1), int(0), int(2)];
        let w = [int(1), int(2), int(3)];
        let v = vandermonde(&x);
        let b: Vec<Rational> = v
            .iter()
            .map(|row| row.iter().zip(&w).map(|(a, b)| a * b).sum())
            .collect();
        assert_eq!(solve(&v, &b).unwrap(), w.to_vec());
    }
}
