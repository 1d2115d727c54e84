//! General plethystic substitution through the power-sum basis.
//!
//! An [`Alphabet`] is a finite sum of terms `c * X^e * g_1^{a_1} ... g_r^{a_r}` where `e` is
//! 0 or 1 and the `g_i` are auxiliary generators with integer exponents. Power sums act by
//! raising every generator, including `q` and `t` inside `c`, to the `k`-th power.
//! This route is slower than the operators in [`super::ops`] and serves as an independent
//! cross-check of them.

use std::collections::BTreeMap;

use super::{Basis, SymFunc};
use crate::error::{Error, Result};
use crate::qtring::QtScalar;
use crate::shapes::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaTerm {
    pub coeff: QtScalar,
    pub x: bool,
    pub aux: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    naux: usize,
    terms: Vec<AlphaTerm>,
}

impl Alphabet {
    pub fn empty(naux: usize) -> Self {
        Alphabet { naux, terms: Vec::new() }
    }

    /// `c * X^x * prod g_i^{aux_i}`.
    pub fn term(coeff: QtScalar, x: bool, aux: Vec<i32>) -> Self {
        let naux = aux.len();
        Alphabet { naux, terms: vec![AlphaTerm { coeff, x, aux }] }
    }

    /// The alphabet `X` with `naux` unused auxiliary generators.
    pub fn x(naux: usize) -> Self {
        Self::term(QtScalar::one(), true, vec![0; naux])
    }

    pub fn naux(&self) -> usize {
        self.naux
    }

    pub fn terms(&self) -> &[AlphaTerm] {
        &self.terms
    }

    pub fn plus(mut self, other: Alphabet) -> Self {
        assert_eq!(self.naux, other.naux, "alphabets over different generators");
        self.terms.extend(other.terms);
        self
    }

    /// `p_k` of the alphabet as `(aux exponents, has X, coefficient)` triples.
    fn power_sum(&self, k: usize) -> Vec<(Vec<i32>, bool, QtScalar)> {
        self.terms
            .iter()
            .map(|t| (t.aux.iter().map(|a| a * k as i32).collect(), t.x, t.coeff.subs_pow(k as u32)))
            .collect()
    }
}

/// A Laurent polynomial in auxiliary generators with symmetric-function coefficients.
///
/// `window` is the largest `X`-degree that was computed; coefficients that would need
/// more are reported as truncation errors.
#[derive(Clone, Debug, PartialEq)]
pub struct AuxSeries {
    naux: usize,
    window: usize,
    terms: BTreeMap<Vec<i32>, SymFunc>,
}

impl AuxSeries {
    pub fn terms(&self) -> &BTreeMap<Vec<i32>, SymFunc> {
        &self.terms
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Coefficient of the given auxiliary monomial, in basis `p`.
    pub fn coeff(&self, aux: &[i32]) -> SymFunc {
        self.terms.get(aux).cloned().unwrap_or_else(|| SymFunc::zero(Basis::P))
    }

    pub fn mul(&self, other: &AuxSeries) -> AuxSeries {
        let mut terms: BTreeMap<Vec<i32>, SymFunc> = BTreeMap::new();
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                let key: Vec<i32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                let prod = f.mul(g);
                let e = terms.entry(key).or_insert_with(|| SymFunc::zero(Basis::P));
                *e = e.add(&prod);
            }
        }
        terms.retain(|_, v| !v.is_zero());
        AuxSeries { naux: self.naux, window: self.window.min(other.window), terms }
    }

    /// Coefficient extraction that fails if the answer may involve degrees past the window.
    pub fn extract(&self, aux: &[i32], degree_needed: usize) -> Result<SymFunc> {
        if degree_needed > self.window {
            return Err(Error::DegreeOverflow { degree: degree_needed, bound: self.window });
        }
        Ok(self.coeff(aux))
    }
}

/// `F[A]`; the scalar coefficients of `F` itself are not touched.
pub fn plethysm(f: &SymFunc, a: &Alphabet) -> AuxSeries {
    let fp = f.to_basis(Basis::P);
    let mut out: BTreeMap<Vec<i32>, BTreeMap<Partition, QtScalar>> = BTreeMap::new();
    let mut cache: Vec<Vec<(Vec<i32>, bool, QtScalar)>> = Vec::new();
    for (lambda, c) in fp.terms() {
        // expand prod_k p_k[A]
        let mut partial: Vec<(Vec<i32>, Vec<usize>, QtScalar)> = vec![(vec![0; a.naux], Vec::new(), c.clone())];
        for &k in lambda.parts() {
            while cache.len() <= k {
                let len = cache.len();
                cache.push(a.power_sum(len));
            }
            let mut next = Vec::with_capacity(partial.len() * cache[k].len());
            for (aux, xs, coeff) in &partial {
                for (ea, has_x, cc) in &cache[k] {
                    let aux2: Vec<i32> = aux.iter().zip(ea).map(|(u, v)| u + v).collect();
                    let mut xs2 = xs.clone();
                    if *has_x {
                        xs2.push(k);
                    }
                    next.push((aux2, xs2, coeff * cc));
                }
            }
            partial = next;
        }
        for (aux, xs, coeff) in partial {
            let e = out.entry(aux).or_default().entry(Partition::from_unsorted(xs)).or_default();
            *e += &coeff;
        }
    }
    let terms = out
        .into_iter()
        .map(|(k, v)| {
            let mut s = SymFunc::from_map(Basis::P, v);
            s.set_max_degree(f.max_degree());
            (k, s)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect();
    AuxSeries { naux: a.naux, window: usize::MAX, terms }
}

/// `sum_{n <= max_degree} h_n[A]`.
pub fn plethystic_exp(a: &Alphabet, max_degree: usize) -> AuxSeries {
    let mut total = AuxSeries { naux: a.naux, window: max_degree, terms: BTreeMap::new() };
    for n in 0..=max_degree {
        let part = plethysm(&SymFunc::h(&[n]).with_max_degree(n).expect("degree n"), a);
        for (k, v) in part.terms {
            let e = total.terms.entry(k).or_insert_with(|| SymFunc::zero(Basis::P));
            *e = e.add(&v);
        }
    }
    total.terms.retain(|_, v| !v.is_zero());
    total
}

/// Slow creation operators through explicit series, for cross-checking.
pub mod generic {
    use super::*;
    use crate::qtring::qt;

    fn shifted_times_exp(f: &SymFunc, shift: QtScalar, exp_sign: i64, r: i64) -> Result<SymFunc> {
        let x = Alphabet::x(1);
        let a = x.plus(Alphabet::term(shift, false, vec![-1]));
        let left = plethysm(f, &a);
        let window = (f.max_degree() as i64 + r).max(0) as usize;
        let e = plethystic_exp(&Alphabet::term(QtScalar::from_int(exp_sign), true, vec![1]), window);
        let prod = left.mul(&e);
        Ok(prod.extract(&[r as i32], window)?.to_basis(Basis::H))
    }

    pub fn b_op(r: i64, f: &SymFunc) -> Result<SymFunc> {
        shifted_times_exp(f, qt("1 - q"), -1, r)
    }

    pub fn c_op(r: i64, f: &SymFunc) -> Result<SymFunc> {
        Ok(shifted_times_exp(f, qt("1/q - 1"), 1, r)?.scale(&-QtScalar::q_pow(1 - r)))
    }

    pub fn d1(f: &SymFunc) -> Result<SymFunc> {
        shifted_times_exp(f, qt("(1 - q)*(1 - t)"), -1, 1)
    }

    pub fn d1_star(f: &SymFunc) -> Result<SymFunc> {
        shifted_times_exp(f, qt("-(1 - 1/q)*(1 - 1/t)"), 1, 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::qt;

    #[test]
    fn power_sum_examples() {
        // p1 p2 [X/(1-q)]
        let a = Alphabet::term(qt("1/(1 - q)"), true, vec![]);
        let r = plethysm(&SymFunc::p(&[2, 1]), &a);
        let want = SymFunc::p(&[2, 1]).scale(&qt("1/((1 - q)*(1 - q^2))"));
        assert_eq!(r.coeff(&[]), want);
        // p2[(q-1) y]
        let a = Alphabet::term(qt("q - 1"), false, vec![1]);
        let r = plethysm(&SymFunc::p(&[2]), &a);
        assert_eq!(r.coeff(&[2]), SymFunc::scalar(qt("q^2 - 1")));
        // h_n[-X] = (-1)^n e_n
        let a = Alphabet::term(qt("-1"), true, vec![]);
        for n in 1..5 {
            let r = plethysm(&SymFunc::h(&[n]), &a).coeff(&[]);
            let sign = if n % 2 == 0 { qt("1") } else { qt("-1") };
            assert_eq!(r, SymFunc::e(&[n]).scale(&sign));
        }
    }

    #[test]
    fn exp_coefficients() {
        let e = plethystic_exp(&Alphabet::term(qt("-1"), true, vec![1]), 3);
        assert_eq!(e.coeff(&[1]), -SymFunc::h(&[1]));
        let e = plethystic_exp(&Alphabet::term(qt("1"), true, vec![1]), 3);
        assert_eq!(e.coeff(&[2]), SymFunc::h(&[2]));
        let e = plethystic_exp(&Alphabet::empty(0), 3);
        assert_eq!(e.coeff(&[]), SymFunc::one());
        assert!(e.extract(&[], 4).is_err());
    }
}
