//! The operator `nabla`, diagonal on the `H_mu` with eigenvalue `(-1)^|mu| q^n(mu') t^n(mu)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::transition::partitions;
use super::{macdonald_h, Basis, SymFunc};
use crate::linalg::{self, Matrix};
use crate::qtring::QtScalar;
use crate::shapes::Partition;

pub fn nabla_eigenvalue(mu: &Partition) -> QtScalar {
    let v = QtScalar::monomial(mu.conjugate().n() as i64, mu.n() as i64);
    if mu.size() % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Rows are the `H_mu`, `mu |- d`, in the Schur basis.
fn h_matrix(d: usize) -> Matrix {
    let idx = partitions(d);
    idx.list
        .iter()
        .map(|mu| {
            let h = macdonald_h(mu).to_basis(Basis::S);
            idx.list.iter().map(|lam| h.coeff(lam)).collect()
        })
        .collect()
}

/// `M^{-1} D M` in degree `d`, where `M` is [`h_matrix`] and `D` the eigenvalues; acts on row
/// vectors of Schur coefficients.
fn nabla_matrix(d: usize) -> Arc<Matrix> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&d) {
        return m.clone();
    }
    let idx = partitions(d);
    let m = h_matrix(d);
    let minv = linalg::invert(&m).expect("the H_mu form a basis");
    let dm: Matrix = m
        .iter()
        .zip(&idx.list)
        .map(|(row, mu)| {
            let e = nabla_eigenvalue(mu);
            row.iter().map(|x| x * &e).collect()
        })
        .collect();
    let n = Arc::new(linalg::mul(&minv, &dm));
    cache.write().unwrap().entry(d).or_insert(n).clone()
}

/// Coefficients of `f` in the `H_mu` basis, one degree at a time.
pub fn h_expansion(f: &SymFunc) -> Vec<(Partition, QtScalar)> {
    let s = f.to_basis(Basis::S);
    let mut out = Vec::new();
    let degrees: std::collections::BTreeSet<usize> = s.terms().keys().map(|p| p.size()).collect();
    for d in degrees {
        let idx = partitions(d);
        let v: Vec<QtScalar> = idx.list.iter().map(|lam| s.coeff(lam)).collect();
        let minv = linalg::invert(&h_matrix(d)).expect("the H_mu form a basis");
        for (mu, c) in idx.list.iter().zip(linalg::vec_mul(&v, &minv)) {
            if !c.is_zero() {
                out.push((mu.clone(), c));
            }
        }
    }
    out
}

pub fn nabla(f: &SymFunc) -> SymFunc {
    let s = f.to_basis(Basis::S);
    let degrees: std::collections::BTreeSet<usize> = s.terms().keys().map(|p| p.size()).collect();
    let mut terms = Vec::new();
    for d in degrees {
        let idx = partitions(d);
        let v: Vec<QtScalar> = idx.list.iter().map(|lam| s.coeff(lam)).collect();
        let w = linalg::vec_mul(&v, &nabla_matrix(d));
        terms.extend(idx.list.iter().cloned().zip(w));
    }
    SymFunc::from_terms(Basis::S, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::qt;
    use crate::symfn::ops::{b_word, c_word};

    #[test]
    fn eigenvectors() {
        assert_eq!(nabla(&SymFunc::one()), SymFunc::one());
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let h = macdonald_h(&mu);
                assert_eq!(nabla(&h), h.scale(&nabla_eigenvalue(&mu)), "{}", mu);
            }
        }
        let h2 = macdonald_h(&Partition::new(vec![2]).unwrap());
        assert_eq!(nabla(&h2), h2.scale(&qt("q")));
    }

    #[test]
    fn worked_value() {
        // C_3 C_1(1) maps to q t^3 B_3 B_1(1) + q t^2 B_2 B_1 B_1(1)
        let lhs = nabla(&c_word(&[3, 1]));
        let rhs = b_word(&[3, 1]).scale(&qt("q*t^3")).add(&b_word(&[2, 1, 1]).scale(&qt("q*t^2")));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn expansion_round_trip() {
        let f = SymFunc::s(&[2, 1]).add(&SymFunc::s(&[1]).scale(&qt("t")));
        let back = h_expansion(&f)
            .into_iter()
            .fold(SymFunc::zero(Basis::S), |acc, (mu, c)| acc.add(&macdonald_h(&mu).scale(&c)));
        assert_eq!(back, f);
    }
}
