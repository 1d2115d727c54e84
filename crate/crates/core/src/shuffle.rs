//! The three routes to `D_alpha` and the involution `N`.
//!
//! * the operator route `d_-^l N_alpha`, with `N_alpha` from its recursion in the Dyck path
//!   algebra;
//! * the combinatorial route, summing over paths with `touch' = alpha`;
//! * the symmetric function route `nabla C_alpha(1)`, where `C_alpha = C_{a_1} ... C_{a_l}` acts
//!   with `C_{a_l}` first.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::charfn::dalpha_bruteforce;
use crate::dpa::{d_minus, d_plus, d_plus_star, decompose, z_op, VElem};
use crate::error::Result;
use crate::qtring::{qt, QtScalar};
use crate::shapes::Composition;
use crate::symfn::ops::c_word;
use crate::symfn::{nabla, Basis, SymFunc};

/// Order of the creation operators, recorded in every report.
pub const C_ORDER: &str = "C_alpha = C_{alpha_1} ... C_{alpha_l}, applied to 1 with C_{alpha_l} first";

fn cached<K, V, F>(cache: &OnceLock<RwLock<HashMap<K, Arc<V>>>>, key: K, f: F) -> Result<Arc<V>>
where
    K: std::hash::Hash + Eq + Clone,
    F: FnOnce() -> Result<V>,
{
    let map = cache.get_or_init(Default::default);
    if let Some(v) = map.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(f()?);
    Ok(map.write().unwrap().entry(key).or_insert(v).clone())
}

/// Every composition of `n` with its parts in order.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    Composition::all(n).into_iter().map(|c| c.parts().to_vec()).collect()
}

/// `N_alpha` in `V_{l(alpha)}`:
/// `N_() = 1`, `N_{1 alpha} = d_+ N_alpha` and, for `a > 1`,
/// `N_{a alpha} = t^{a-1}/(q-1) (d_- d_+ - d_+ d_-) sum_{beta |= a-1} d_-^{l(beta)-1} N_{alpha beta}`.
pub fn n_alpha(alpha: &[usize]) -> Result<VElem> {
    static CACHE: OnceLock<RwLock<HashMap<Vec<usize>, Arc<VElem>>>> = OnceLock::new();
    cached(&CACHE, alpha.to_vec(), || {
        let Some((&a, rest)) = alpha.split_first() else {
            return Ok(VElem::one(0));
        };
        if a == 1 {
            return d_plus(&n_alpha(rest)?);
        }
        let mut sum = VElem::zero(rest.len() + 1);
        for beta in compositions(a - 1) {
            let mut key = rest.to_vec();
            key.extend_from_slice(&beta);
            let mut v = n_alpha(&key)?;
            for _ in 1..beta.len() {
                v = d_minus(&v)?;
            }
            sum = sum.try_add(&v)?;
        }
        let bracket = &d_minus(&d_plus(&sum)?)? - &d_plus(&d_minus(&sum)?)?;
        Ok(bracket.scale(&(QtScalar::t_pow(a as i64 - 1) * qt("1/(q - 1)"))))
    })
    .map(|v| (*v).clone())
}

/// `y_alpha = y_1^{a_1 - 1} ... y_l^{a_l - 1}`.
pub fn y_alpha(alpha: &[usize]) -> VElem {
    VElem::y_monomial(alpha.iter().map(|&a| a as u32 - 1).collect())
}

/// `y_alpha` rebuilt through the starred recursion:
/// `y_{1 alpha} = d_+^* y_alpha` and, for `a > 1`,
/// `y_{a alpha} = t^{1-a}/(q-1) (d_+^* d_- - d_- d_+^*) sum_{beta |= a-1} q^{1-l(beta)} d_-^{l(beta)-1} y_{alpha beta}`.
pub fn y_alpha_recursive(alpha: &[usize]) -> Result<VElem> {
    let Some((&a, rest)) = alpha.split_first() else {
        return Ok(VElem::one(0));
    };
    if a == 1 {
        return d_plus_star(&y_alpha_recursive(rest)?);
    }
    let mut sum = VElem::zero(rest.len() + 1);
    for beta in compositions(a - 1) {
        let mut key = rest.to_vec();
        key.extend_from_slice(&beta);
        let mut v = y_alpha(&key);
        for _ in 1..beta.len() {
            v = d_minus(&v)?;
        }
        sum.add_scaled(&v, &QtScalar::q_pow(1 - beta.len() as i64));
    }
    let bracket = &d_plus_star(&d_minus(&sum)?)? - &d_minus(&d_plus_star(&sum)?)?;
    Ok(bracket.scale(&(QtScalar::t_pow(1 - a as i64) * qt("1/(q - 1)"))))
}

/// `D_alpha = d_-^{l(alpha)} N_alpha`.
pub fn d_alpha_operator(alpha: &[usize]) -> Result<SymFunc> {
    let mut v = n_alpha(alpha)?;
    for _ in 0..alpha.len() {
        v = d_minus(&v)?;
    }
    v.to_sym()
}

/// `nabla C_alpha(1)`.
pub fn nabla_c(alpha: &[usize]) -> SymFunc {
    nabla(&c_word(alpha))
}

/// `d_-^m z_1^{a_1} ... z_{k+m}^{a_{k+m}} d_+^{*(k+m)}(1)`, the image of a canonical basis element.
fn n_basis_image(k: usize, m: usize, a: &[u32]) -> Result<VElem> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize, Vec<u32>), Arc<VElem>>>> = OnceLock::new();
    cached(&CACHE, (k, m, a.to_vec()), || {
        let mut v = VElem::one(0);
        for _ in 0..k + m {
            v = d_plus_star(&v)?;
        }
        for (i, &e) in a.iter().enumerate() {
            for _ in 0..e {
                v = z_op(i + 1, &v)?;
            }
        }
        for _ in 0..m {
            v = d_minus(&v)?;
        }
        Ok(v)
    })
    .map(|v| (*v).clone())
}

/// The antilinear involution `N`: decompose in the canonical basis, conjugate the
/// coefficients and send `d_-^m y^a d_+^{k+m}(1)` to `d_-^m z^a d_+^{*(k+m)}(1)`.
pub fn n_involution(f: &VElem) -> Result<VElem> {
    let dec = decompose(f)?;
    let mut out = VElem::zero(f.level());
    for term in &dec.terms {
        out.add_scaled(&n_basis_image(f.level(), term.m, &term.a)?, &term.coeff.bar());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleRecord {
    pub alpha: Composition,
    pub d_op: SymFunc,
    pub d_brute: SymFunc,
    pub nabla_c: SymFunc,
    pub op_eq_brute: bool,
    pub op_eq_nabla: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShuffleReport {
    pub n: usize,
    pub convention: String,
    pub records: Vec<ShuffleRecord>,
    /// `sum_alpha D_alpha = (-1)^n nabla e_n`.
    pub sum_check: bool,
    pub pass: bool,
    pub elapsed_ms: u128,
}

fn record(alpha: &[usize]) -> Result<ShuffleRecord> {
    let d_op = d_alpha_operator(alpha)?.to_basis(Basis::S);
    let comp = Composition::new(alpha.to_vec())?;
    let d_brute = dalpha_bruteforce(&comp).to_basis(Basis::S);
    let nc = nabla_c(alpha).to_basis(Basis::S);
    let op_eq_brute = d_op == d_brute;
    let op_eq_nabla = d_op == nc;
    Ok(ShuffleRecord { alpha: comp, d_op, d_brute, nabla_c: nc, op_eq_brute, op_eq_nabla, pass: op_eq_brute && op_eq_nabla })
}

/// Three-way comparison for every composition of `n`, plus the aggregate identity.
pub fn verify_shuffle(n: usize) -> Result<ShuffleReport> {
    let start = Instant::now();
    let records: Vec<ShuffleRecord> = compositions(n).par_iter().map(|a| record(a)).collect::<Result<_>>()?;
    let total = records.iter().fold(SymFunc::zero(Basis::S), |acc, r| acc.add(&r.d_op));
    let sign = if n % 2 == 0 { QtScalar::one() } else { -QtScalar::one() };
    let sum_check = total == nabla(&SymFunc::e(&[n])).scale(&sign);
    let pass = sum_check && records.iter().all(|r| r.pass);
    Ok(ShuffleReport {
        n,
        convention: C_ORDER.to_string(),
        records,
        sum_check,
        pass,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpa::{basis::basis_shapes, basis_element, t_op, y_mul};
    use crate::symfn::ops::b_word;

    #[test]
    fn n_alpha_values() {
        assert_eq!(n_alpha(&[]).unwrap(), VElem::one(0));
        assert_eq!(n_alpha(&[2]).unwrap(), VElem::y_monomial(vec![1]).scale(&qt("-t")));
        let want = &VElem::y_monomial(vec![2, 0]).scale(&qt("q*t^3"))
            - &VElem::monomial(vec![1, 0], SymFunc::e(&[1])).scale(&qt("q*t^2"));
        assert_eq!(n_alpha(&[3, 1]).unwrap(), want);
        let d31 = b_word(&[3, 1]).scale(&qt("q*t^3")).add(&b_word(&[2, 1, 1]).scale(&qt("q*t^2")));
        assert_eq!(d_alpha_operator(&[3, 1]).unwrap(), d31);
        assert_eq!(nabla_c(&[3, 1]), d31);
        assert_eq!(d_alpha_operator(&[1]).unwrap(), SymFunc::s(&[1]));
        assert_eq!(nabla_c(&[1]), SymFunc::s(&[1]));
    }

    #[test]
    fn y_recursion() {
        for n in 1..=4 {
            for alpha in compositions(n) {
                if alpha[0] <= 3 && n - alpha[0] <= 2 {
                    assert_eq!(y_alpha_recursive(&alpha).unwrap(), y_alpha(&alpha), "{:?}", alpha);
                }
            }
        }
        assert_eq!(y_alpha(&[1, 1]), VElem::one(2));
        assert_eq!(y_alpha(&[3, 1]), VElem::y_monomial(vec![2, 0]));
    }

    #[test]
    fn involution_small() {
        assert_eq!(n_involution(&VElem::one(0)).unwrap(), VElem::one(0));
        assert_eq!(n_involution(&VElem::y_monomial(vec![1])).unwrap(), VElem::y_monomial(vec![1]).scale(&qt("-q*t")));
        let h1 = VElem::from_sym(SymFunc::h(&[1]));
        assert_eq!(n_involution(&h1).unwrap(), h1);
        for k in 0..=2 {
            for deg in 0..=3 {
                for (m, a) in basis_shapes(k, deg) {
                    let b = basis_element(k, m, &a).unwrap();
                    let nb = n_involution(&b).unwrap();
                    assert_eq!(n_involution(&nb).unwrap(), b, "k={} a={:?}", k, a);
                    if k >= 1 {
                        assert_eq!(n_involution(&d_minus(&b).unwrap()).unwrap(), d_minus(&nb).unwrap());
                        assert_eq!(n_involution(&y_mul(1, &b).unwrap()).unwrap(), z_op(1, &nb).unwrap());
                    }
                    if k >= 2 {
                        assert_eq!(n_involution(&t_op(1, &b, false).unwrap()).unwrap(), t_op(1, &nb, true).unwrap());
                    }
                    assert_eq!(n_involution(&d_plus(&b).unwrap()).unwrap(), d_plus_star(&nb).unwrap());
                }
            }
        }
    }

    #[test]
    fn small_degrees() {
        for n in 0..=4 {
            let rep = verify_shuffle(n).unwrap();
            for r in &rep.records {
                assert!(r.pass, "alpha = {}: op {} brute {} nabla {}", r.alpha, r.d_op, r.d_brute, r.nabla_c);
            }
            assert!(rep.sum_check, "n = {}", n);
        }
    }
}
