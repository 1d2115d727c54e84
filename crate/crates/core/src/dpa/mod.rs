//! The spaces `V_k = Sym[X] (x) Q(q,t)[y_1..y_k]` and the Dyck path algebra acting on them.

pub mod basis;
pub mod ops;
pub mod relations;
pub mod word;

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qtring::QtScalar;
use crate::symfn::{Basis, SymFunc};

pub use basis::{basis_element, basis_element_by_word, decompose, BasisDecomposition, BasisTerm};
pub use ops::{d_minus, d_plus, d_plus_star, delta_at, delta_op, t_op, t_pow_chain, y_mul, z_op, Biv};
pub use relations::{check_relations, RelationRecord, RelationReport};
pub use word::{apply_word, corner_word, path_word, Gen, GenWord};

/// An element of `V_k`, stored as a map from `y`-exponent vectors to symmetric functions.
///
/// Coefficients are kept in the `h` basis so that equal elements have equal maps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VElem {
    level: usize,
    terms: BTreeMap<Vec<u32>, SymFunc>,
}

impl VElem {
    pub fn zero(level: usize) -> Self {
        VElem { level, terms: BTreeMap::new() }
    }

    /// `1` in `V_k`.
    pub fn one(level: usize) -> Self {
        Self::monomial(vec![0; level], SymFunc::one())
    }

    pub fn from_sym(f: SymFunc) -> Self {
        Self::monomial(Vec::new(), f)
    }

    /// `y^exps * f` at level `exps.len()`.
    pub fn monomial(exps: Vec<u32>, f: SymFunc) -> Self {
        let mut v = VElem::zero(exps.len());
        v.add_term(exps, &f);
        v
    }

    pub fn y_monomial(exps: Vec<u32>) -> Self {
        Self::monomial(exps, SymFunc::one())
    }

    /// Builds from a term list; every exponent vector must have length `level`.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, SymFunc)>>(level: usize, iter: I) -> Result<Self> {
        let mut v = VElem::zero(level);
        for (e, f) in iter {
            if e.len() != level {
                return Err(Error::LevelMismatch { expected: level, found: e.len() });
            }
            v.add_term(e, &f);
        }
        Ok(v)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, SymFunc> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> SymFunc {
        self.terms.get(exps).cloned().unwrap_or_else(|| SymFunc::zero(Basis::H))
    }

    /// The underlying symmetric function of a level-0 element.
    pub fn to_sym(&self) -> Result<SymFunc> {
        if self.level != 0 {
            return Err(Error::LevelMismatch { expected: 0, found: self.level });
        }
        Ok(self.coeff(&[]))
    }

    /// Largest `y`-degree plus symmetric degree over all terms.
    pub fn degree(&self) -> Option<usize> {
        self.terms
            .iter()
            .map(|(e, f)| e.iter().map(|&x| x as usize).sum::<usize>() + f.degree().unwrap_or(0))
            .max()
    }

    pub(crate) fn add_term(&mut self, exps: Vec<u32>, f: &SymFunc) {
        debug_assert_eq!(exps.len(), self.level);
        if f.is_zero() {
            return;
        }
        let f = f.to_basis(Basis::H);
        match self.terms.get_mut(&exps) {
            Some(g) => {
                let s = g.add(&f);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *g = s;
                }
            }
            None => {
                self.terms.insert(exps, f);
            }
        }
    }

    pub(crate) fn add_scaled(&mut self, other: &VElem, c: &QtScalar) {
        for (e, f) in &other.terms {
            self.add_term(e.clone(), &f.scale(c));
        }
    }

    fn check_level(&self, other: &VElem) -> Result<()> {
        if self.level != other.level {
            return Err(Error::LevelMismatch { expected: self.level, found: other.level });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &VElem) -> Result<VElem> {
        self.check_level(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &QtScalar::one());
        Ok(out)
    }

    pub fn try_sub(&self, other: &VElem) -> Result<VElem> {
        self.check_level(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-QtScalar::one());
        Ok(out)
    }

    pub fn scale(&self, c: &QtScalar) -> VElem {
        let mut out = VElem::zero(self.level);
        if !c.is_zero() {
            out.add_scaled(self, c);
        }
        out
    }

    /// Multiplies every coefficient by a symmetric function.
    pub fn mul_sym(&self, g: &SymFunc) -> VElem {
        let mut out = VElem::zero(self.level);
        for (e, f) in &self.terms {
            out.add_term(e.clone(), &f.mul(g));
        }
        out
    }

    /// Conjugates every scalar under `q -> 1/q`, `t -> 1/t`.
    pub fn bar(&self) -> VElem {
        VElem { level: self.level, terms: self.terms.iter().map(|(e, f)| (e.clone(), f.bar())).collect() }
    }

    /// Applies a map to each coefficient, keeping the `y` part.
    pub fn map_sym<F: Fn(&SymFunc) -> SymFunc>(&self, f: F) -> VElem {
        let mut out = VElem::zero(self.level);
        for (e, g) in &self.terms {
            out.add_term(e.clone(), &f(g));
        }
        out
    }
}

impl fmt::Display for VElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, g) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { format!("y{}", i + 1) } else { format!("y{}^{}", i + 1, x) })
                .collect();
            if mono.is_empty() {
                write!(f, "({})", g.to_basis(Basis::S))?;
            } else {
                write!(f, "{}*({})", mono.join("*"), g.to_basis(Basis::S))?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add<&VElem> for &VElem {
    type Output = VElem;
    fn add(self, rhs: &VElem) -> VElem {
        self.try_add(rhs).expect("levels agree")
    }
}

impl std::ops::Sub<&VElem> for &VElem {
    type Output = VElem;
    fn sub(self, rhs: &VElem) -> VElem {
        self.try_sub(rhs).expect("levels agree")
    }
}

impl std::ops::Neg for &VElem {
    type Output = VElem;
    fn neg(self) -> VElem {
        self.scale(&-QtScalar::one())
    }
}
