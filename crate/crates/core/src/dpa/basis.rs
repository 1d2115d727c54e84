//! The canonical spanning set `d_-^m y^a d_+^{k+m}(1)` of `V_k` and decomposition into it.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use super::ops::{d_minus, d_plus, y_mul};
use super::VElem;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::qtring::QtScalar;
use crate::shapes::Partition;
use crate::symfn::ops::b_word;
use crate::symfn::transition::partitions;
use crate::symfn::Basis;

/// One term `coeff * d_-^m y^a d_+^{k+m}(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisTerm {
    pub m: usize,
    pub a: Vec<u32>,
    pub coeff: QtScalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisDecomposition {
    pub level: usize,
    pub terms: Vec<BasisTerm>,
}

impl BasisDecomposition {
    /// Sums the basis images back up.
    pub fn reconstruct(&self) -> Result<VElem> {
        let mut out = VElem::zero(self.level);
        for t in &self.terms {
            out.add_scaled(&basis_element(self.level, t.m, &t.a)?, &t.coeff);
        }
        Ok(out)
    }
}

fn check_shape(k: usize, m: usize, a: &[u32]) -> Result<()> {
    if a.len() != k + m {
        return Err(Error::InvalidShape(format!("exponent vector has length {}, expected {}", a.len(), k + m)));
    }
    if a[k..].windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidShape("tail exponents must weakly decrease".into()));
    }
    Ok(())
}

/// `(-1)^m y_1^{a_1}..y_k^{a_k} B_{a_{k+1}+1} ... B_{a_{k+m}+1}(1)`.
pub fn basis_element(k: usize, m: usize, a: &[u32]) -> Result<VElem> {
    check_shape(k, m, a)?;
    let nu: Vec<usize> = a[k..].iter().map(|&x| x as usize + 1).collect();
    let mut f = b_word(&nu);
    if m % 2 == 1 {
        f = -f;
    }
    Ok(VElem::monomial(a[..k].to_vec(), f))
}

/// The same element computed by applying the operators.
pub fn basis_element_by_word(k: usize, m: usize, a: &[u32]) -> Result<VElem> {
    check_shape(k, m, a)?;
    let mut v = VElem::one(0);
    for _ in 0..k + m {
        v = d_plus(&v)?;
    }
    for (i, &e) in a.iter().enumerate() {
        for _ in 0..e {
            v = y_mul(i + 1, &v)?;
        }
    }
    for _ in 0..m {
        v = d_minus(&v)?;
    }
    Ok(v)
}

/// Inverse of the matrix whose rows are `(-1)^l(nu) B_nu(1)` in the `h` basis, `nu |- d`.
fn inverse_b_matrix(d: usize) -> Arc<Matrix> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(m) = cache.read().unwrap().get(&d) {
        return m.clone();
    }
    let idx = partitions(d);
    let rows: Matrix = idx
        .list
        .iter()
        .map(|nu| {
            let mut f = b_word(nu.parts());
            if nu.len() % 2 == 1 {
                f = -f;
            }
            let f = f.to_basis(Basis::H);
            idx.list.iter().map(|mu| f.coeff(mu)).collect()
        })
        .collect();
    let inv = Arc::new(linalg::invert(&rows).expect("the B_nu(1) form a basis"));
    cache.write().unwrap().entry(d).or_insert(inv).clone()
}

/// Writes `f` in the canonical basis, one `y`-monomial and one degree at a time.
pub fn decompose(f: &VElem) -> Result<BasisDecomposition> {
    let k = f.level();
    let mut acc: BTreeMap<(usize, Vec<u32>), QtScalar> = BTreeMap::new();
    for (e, g) in f.terms() {
        let g = g.to_basis(Basis::H);
        let degrees: std::collections::BTreeSet<usize> = g.terms().keys().map(|p| p.size()).collect();
        for d in degrees {
            let idx = partitions(d);
            let v: Vec<QtScalar> = idx.list.iter().map(|mu| g.coeff(mu)).collect();
            let c = linalg::vec_mul(&v, &inverse_b_matrix(d));
            for (nu, x) in idx.list.iter().zip(c) {
                if x.is_zero() {
                    continue;
                }
                let mut a = e.clone();
                a.extend(nu.parts().iter().map(|&p| p as u32 - 1));
                let entry = acc.entry((nu.len(), a)).or_default();
                *entry += &x;
            }
        }
    }
    let terms = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((m, a), coeff)| BasisTerm { m, a, coeff })
        .collect();
    Ok(BasisDecomposition { level: k, terms })
}

/// All shapes `(m, a)` of the canonical basis of `V_k` in total degree `deg`.
///
/// The degree of `d_-^m y^a d_+^{k+m}(1)` is `m + sum(a)`.
pub fn basis_shapes(k: usize, deg: usize) -> Vec<(usize, Vec<u32>)> {
    let mut out = Vec::new();
    for m in 0..=deg {
        for head_deg in 0..=deg - m {
            let tail_total = deg - m - head_deg;
            // tail: partition nu with exactly m parts and |nu| = tail_total + m
            let tails: Vec<Partition> = if m == 0 {
                if tail_total == 0 {
                    vec![Partition::empty()]
                } else {
                    vec![]
                }
            } else {
                Partition::all(tail_total + m).into_iter().filter(|p| p.len() == m).collect()
            };
            for head in compositions_weak(head_deg, k) {
                for nu in &tails {
                    let mut a = head.clone();
                    a.extend(nu.parts().iter().map(|&p| p as u32 - 1));
                    out.push((m, a));
                }
            }
        }
    }
    out
}

/// Weak compositions of `n` into `k` parts.
pub fn compositions_weak(n: usize, k: usize) -> Vec<Vec<u32>> {
    if k == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions_weak(n - first, k - 1) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::qt;
    use crate::symfn::SymFunc;

    #[test]
    fn small_elements() {
        assert_eq!(basis_element(0, 0, &[]).unwrap(), VElem::one(0));
        assert_eq!(basis_element(0, 1, &[0]).unwrap(), VElem::from_sym(SymFunc::h(&[1])));
        assert_eq!(basis_element(1, 0, &[1]).unwrap(), VElem::y_monomial(vec![1]));
        assert!(basis_element(0, 2, &[0, 1]).is_err());
        assert!(basis_element(1, 1, &[0]).is_err());
    }

    #[test]
    fn word_route_agrees() {
        for k in 0..3 {
            for deg in 0..4 {
                for (m, a) in basis_shapes(k, deg) {
                    assert_eq!(basis_element(k, m, &a).unwrap(), basis_element_by_word(k, m, &a).unwrap(), "k={} a={:?}", k, a);
                }
            }
        }
    }

    #[test]
    fn decompositions() {
        let d = decompose(&VElem::from_sym(SymFunc::h(&[1]))).unwrap();
        assert_eq!(d.terms, vec![BasisTerm { m: 1, a: vec![0], coeff: qt("1") }]);
        let d = decompose(&VElem::y_monomial(vec![1])).unwrap();
        assert_eq!(d.terms, vec![BasisTerm { m: 0, a: vec![1], coeff: qt("1") }]);
        for k in 0..3 {
            for deg in 0..5 {
                for (m, a) in basis_shapes(k, deg) {
                    let d = decompose(&basis_element(k, m, &a).unwrap()).unwrap();
                    assert_eq!(d.terms, vec![BasisTerm { m, a: a.clone(), coeff: qt("1") }]);
                }
            }
        }
    }
}
