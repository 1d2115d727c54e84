//! Symmetric functions of bounded degree with coefficients in `Q(q,t)`.
//!
//! A [`SymFunc`] carries the basis it is written in. Conversions go through the monomial
//! basis, which is also the canonical basis for comparisons between different bases.
//! The plethystic operators of [`ops`] work in the complete homogeneous basis, where
//! `h_lambda h_mu = h_(lambda u mu)` keeps products trivial.

pub mod macdonald;
pub mod nabla;
pub mod ops;
pub mod plethysm;
pub mod transition;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;
use crate::qtring::QtScalar;
use crate::shapes::Partition;

pub use macdonald::macdonald_h;
pub use nabla::nabla;
pub use ops::{b_op, c_op, d1, d1_star, e1_mul};
pub use plethysm::{plethysm, plethystic_exp, AlphaTerm, Alphabet, AuxSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Result<Basis> {
        Ok(match c {
            'm' => Basis::M,
            'e' => Basis::E,
            'h' => Basis::H,
            'p' => Basis::P,
            's' => Basis::S,
            _ => return Err(Error::Parse(format!("unknown basis {:?}", c))),
        })
    }
}

/// A symmetric function, stored as a sparse map from partitions to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct SymFunc {
    basis: Basis,
    max_degree: usize,
    terms: BTreeMap<Partition, QtScalar>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, max_degree: 0, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::scalar(QtScalar::one())
    }

    pub fn scalar(c: QtScalar) -> Self {
        Self::from_terms(Basis::H, [(Partition::empty(), c)])
    }

    pub fn basis_element(basis: Basis, shape: Partition) -> Self {
        Self::from_terms(basis, [(shape, QtScalar::one())])
    }

    fn elem(basis: Basis, parts: &[usize]) -> Self {
        Self::basis_element(basis, Partition::from_unsorted(parts.to_vec()))
    }

    pub fn h(parts: &[usize]) -> Self {
        Self::elem(Basis::H, parts)
    }

    pub fn e(parts: &[usize]) -> Self {
        Self::elem(Basis::E, parts)
    }

    pub fn s(parts: &[usize]) -> Self {
        Self::elem(Basis::S, parts)
    }

    pub fn m(parts: &[usize]) -> Self {
        Self::elem(Basis::M, parts)
    }

    pub fn p(parts: &[usize]) -> Self {
        Self::elem(Basis::P, parts)
    }

    /// Sums repeated shapes and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Partition, QtScalar)>>(basis: Basis, iter: I) -> Self {
        let mut terms: BTreeMap<Partition, QtScalar> = BTreeMap::new();
        for (p, c) in iter {
            if c.is_zero() {
                continue;
            }
            match terms.get_mut(&p) {
                Some(x) => *x += &c,
                None => {
                    terms.insert(p, c);
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let max_degree = terms.keys().map(|p| p.size()).max().unwrap_or(0);
        SymFunc { basis, max_degree, terms }
    }

    pub(crate) fn from_map(basis: Basis, mut terms: BTreeMap<Partition, QtScalar>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let max_degree = terms.keys().map(|p| p.size()).max().unwrap_or(0);
        SymFunc { basis, max_degree, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QtScalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Partition, QtScalar> {
        self.terms
    }

    pub fn coeff(&self, shape: &Partition) -> QtScalar {
        self.terms.get(shape).cloned().unwrap_or_default()
    }

    /// Coefficient of `shape` after converting to `basis`.
    pub fn coeff_in(&self, basis: Basis, shape: &Partition) -> QtScalar {
        self.to_basis(basis).coeff(shape)
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Raises the degree bound; lowering below the actual degree is an error.
    pub fn with_max_degree(mut self, bound: usize) -> Result<Self> {
        if let Some(d) = self.degree() {
            if d > bound {
                return Err(Error::DegreeOverflow { degree: d, bound });
            }
        }
        self.max_degree = bound;
        Ok(self)
    }

    /// Highest degree with a nonzero term, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|p| p.size()).max()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|p| p.size());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous(&self, d: usize) -> SymFunc {
        let terms = self.terms.iter().filter(|(p, _)| p.size() == d).map(|(p, c)| (p.clone(), c.clone())).collect();
        SymFunc { basis: self.basis, max_degree: self.max_degree, terms }
    }

    pub fn map_coeffs<F: Fn(&QtScalar) -> QtScalar>(&self, f: F) -> SymFunc {
        let terms = self.terms.iter().map(|(p, c)| (p.clone(), f(c))).collect();
        let mut out = SymFunc::from_map(self.basis, terms);
        out.max_degree = self.max_degree;
        out
    }

    pub fn scale(&self, c: &QtScalar) -> SymFunc {
        if c.is_zero() {
            let mut z = SymFunc::zero(self.basis);
            z.max_degree = self.max_degree;
            return z;
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn to_basis(&self, target: Basis) -> SymFunc {
        if target == self.basis {
            return self.clone();
        }
        let mut out: BTreeMap<Partition, QtScalar> = BTreeMap::new();
        let degrees: std::collections::BTreeSet<usize> = self.terms.keys().map(|p| p.size()).collect();
        for d in degrees {
            let idx = transition::partitions(d);
            let mut v = vec![QtScalar::zero(); idx.list.len()];
            for (p, c) in self.terms.range(first_of_degree(d)..) {
                if p.size() != d {
                    break;
                }
                v[idx.index[p]] = c.clone();
            }
            if self.basis != Basis::M {
                v = linalg::vec_mul(&v, &transition::matrix(self.basis, d, false));
            }
            if target != Basis::M {
                v = linalg::vec_mul(&v, &transition::matrix(target, d, true));
            }
            for (i, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    out.insert(idx.list[i].clone(), c);
                }
            }
        }
        SymFunc { basis: target, max_degree: self.max_degree, terms: out }
    }

    /// Hall scalar product with `<h_lambda, m_mu> = delta`.
    pub fn hall(&self, other: &SymFunc) -> QtScalar {
        let a = self.to_basis(Basis::H);
        let b = other.to_basis(Basis::M);
        let mut acc = QtScalar::zero();
        for (p, c) in &a.terms {
            if let Some(d) = b.terms.get(p) {
                acc += &(c * d);
            }
        }
        acc
    }

    /// Conjugates every coefficient under `q -> 1/q`, `t -> 1/t`.
    pub fn bar(&self) -> SymFunc {
        self.map_coeffs(|c| c.bar())
    }

    /// `F[-X]`, which sends `h_lambda` to `(-1)^|lambda| e_lambda`.
    pub fn omega(&self) -> SymFunc {
        let h = self.to_basis(Basis::H);
        let terms = h
            .terms
            .into_iter()
            .map(|(p, c)| {
                let c = if p.size() % 2 == 1 { -c } else { c };
                (p, c)
            })
            .collect();
        SymFunc { basis: Basis::E, max_degree: self.max_degree, terms }.to_basis(self.basis)
    }

    pub fn omega_bar(&self) -> SymFunc {
        self.omega().bar()
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.combine(other, true)
    }

    fn combine(&self, other: &SymFunc, negate: bool) -> SymFunc {
        let other = other.to_basis(self.basis);
        let mut terms = self.terms.clone();
        for (p, c) in other.terms {
            match terms.get_mut(&p) {
                Some(x) => {
                    if negate {
                        *x -= &c
                    } else {
                        *x += &c
                    }
                }
                None => {
                    terms.insert(p, if negate { -c } else { c });
                }
            }
        }
        let mut out = SymFunc::from_map(self.basis, terms);
        out.max_degree = self.max_degree.max(other.max_degree);
        out
    }

    /// Product; `h`, `e` and `p` are multiplicative so products there are unions of shapes.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let base = match self.basis {
            Basis::H | Basis::E | Basis::P => self.basis,
            _ => Basis::H,
        };
        let a = self.to_basis(base);
        let b = other.to_basis(base);
        let mut terms: BTreeMap<Partition, QtScalar> = BTreeMap::new();
        for (p, c) in &a.terms {
            for (r, d) in &b.terms {
                let key = p.union(r);
                let v = c * d;
                match terms.get_mut(&key) {
                    Some(x) => *x += &v,
                    None => {
                        terms.insert(key, v);
                    }
                }
            }
        }
        let mut out = SymFunc::from_map(base, terms);
        out.max_degree = self.max_degree + other.max_degree;
        out.to_basis(self.basis)
    }

    pub(crate) fn set_max_degree(&mut self, d: usize) {
        self.max_degree = d.max(self.degree().unwrap_or(0));
    }
}

/// Smallest partition of size `d` in the ordering used by the term maps.
fn first_of_degree(d: usize) -> Partition {
    Partition::from_unsorted(vec![d])
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.terms == other.to_basis(self.basis).terms
        }
    }
}

impl Eq for SymFunc {}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let b = self.basis.letter();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let shape: String = p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            if p.is_empty() {
                write!(f, "({})", c)?;
            } else if c.is_one() {
                write!(f, "{}[{}]", b, shape)?;
            } else {
                write!(f, "({})*{}[{}]", c, b, shape)?;
            }
        }
        Ok(())
    }
}

macro_rules! sym_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&SymFunc> for &SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: &SymFunc) -> SymFunc {
                SymFunc::$method(self, rhs)
            }
        }
        impl $tr<SymFunc> for SymFunc {
            type Output = SymFunc;
            fn $method(self, rhs: SymFunc) -> SymFunc {
                SymFunc::$method(&self, &rhs)
            }
        }
    };
}

sym_binop!(Add, add);
sym_binop!(Sub, sub);
sym_binop!(Mul, mul);

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul<&QtScalar> for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &QtScalar) -> SymFunc {
        self.scale(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qtring::qt;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conversion_example() {
        let f = SymFunc::from_terms(
            Basis::M,
            [(part("3"), qt("1")), (part("2,1"), qt("2 + q")), (part("1,1,1"), qt("3 + 3*q"))],
        );
        let s = f.to_basis(Basis::S);
        let want = SymFunc::from_terms(
            Basis::S,
            [(part("3"), qt("1")), (part("2,1"), qt("1 + q")), (part("1,1,1"), qt("q"))],
        );
        assert_eq!(s.terms(), want.terms());
        assert_eq!(f, want);
    }

    #[test]
    fn newton_identity() {
        // h_2 = (p_1^2 + p_2)/2 and e_2 = h_1^2 - h_2
        let h2 = SymFunc::h(&[2]);
        let via_p = SymFunc::from_terms(Basis::P, [(part("1,1"), qt("1/2")), (part("2"), qt("1/2"))]);
        assert_eq!(h2, via_p);
        assert_eq!(h2.to_basis(Basis::E), SymFunc::e(&[1, 1]) - SymFunc::e(&[2]));
    }

    #[test]
    fn hall_pairing() {
        assert_eq!(SymFunc::p(&[2]).hall(&SymFunc::p(&[2])), qt("2"));
        assert_eq!(SymFunc::s(&[2, 1]).hall(&SymFunc::s(&[2, 1])), qt("1"));
        assert_eq!(SymFunc::h(&[2, 1]).hall(&SymFunc::m(&[2, 1])), qt("1"));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(SymFunc::e(&[3]).omega(), -SymFunc::h(&[3]));
        let f = SymFunc::s(&[1]).scale(&qt("q"));
        assert_eq!(f.omega_bar(), SymFunc::s(&[1]).scale(&qt("-1/q")));
        assert_eq!(SymFunc::s(&[2, 1]).omega(), -SymFunc::s(&[2, 1]));
    }
}
