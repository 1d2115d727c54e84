//! Dense linear algebra over `Q(q,t)`.

use crate::error::{Error, Result};
use crate::qtring::QtScalar;

pub type Matrix = Vec<Vec<QtScalar>>;

fn weight(x: &QtScalar) -> usize {
    x.numer().len() + x.denom().len() + (x.numer().total_degree() + x.denom().total_degree()) as usize
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { QtScalar::one() } else { QtScalar::zero() }).collect())
        .collect()
}

/// Gauss-Jordan inverse, pivoting on the simplest available entry.
pub fn invert(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let mut a: Matrix = m.clone();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| weight(&a[r][col]))
            .ok_or_else(|| Error::Singular(format!("no pivot in column {}", col)))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inv()?;
        if !p.is_one() {
            for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                if !x.is_zero() {
                    *x = &*x * &p;
                }
            }
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in 0..n {
                if !a[col][c].is_zero() {
                    let d = &f * &a[col][c];
                    a[r][c] -= &d;
                }
                if !inv[col][c].is_zero() {
                    let d = &f * &inv[col][c];
                    inv[r][c] -= &d;
                }
            }
        }
    }
    Ok(inv)
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![QtScalar::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    let d = &a[i][l] * &b[l][j];
                    out[i][j] += &d;
                }
            }
        }
    }
    out
}

/// Row vector times matrix.
pub fn vec_mul(v: &[QtScalar], a: &Matrix) -> Vec<QtScalar> {
    let m = if a.is_empty() { 0 } else { a[0].len() };
    let mut out = vec![QtScalar::zero(); m];
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for j in 0..m {
            if !a[i][j].is_zero() {
                let d = x * &a[i][j];
                out[j] += &d;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::qt;

    #[test]
    fn inverse_round_trip() {
        let m = vec![
            vec![qt("q"), qt("1"), qt("0")],
            vec![qt("t"), qt("q - 1"), qt("2")],
            vec![qt("1"), qt("0"), qt("q*t")],
        ];
        let inv = invert(&m).unwrap();
        assert_eq!(mul(&m, &inv), identity(3));
        assert_eq!(mul(&inv, &m), identity(3));
    }

    #[test]
    fn singular() {
        let m = vec![vec![qt("q"), qt("1")], vec![qt("q^2"), qt("q")]];
        assert!(invert(&m).is_err());
    }
}
