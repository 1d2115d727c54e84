//! Exact arithmetic in the field `Q(q,t)`.
//!
//! A [`QtScalar`] is a reduced fraction of integer polynomials. The denominator has a
//! positive leading coefficient under graded lex order with `q > t`, and numerator and
//! denominator share no common factor in `Z[q,t]`. Because of that, equality is structural.
//! The printed form rescales to a monic denominator.

mod gcd;
mod parse;
pub mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use dashu_int::IBig;

pub use gcd::gcd;
pub use poly::{Mono, Poly};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QtScalar {
    num: Poly,
    den: Poly,
}

impl Default for QtScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl QtScalar {
    pub fn zero() -> Self {
        QtScalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(Poly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(Poly::t())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(Poly::constant(IBig::from(n)))
    }

    pub fn from_ibig(n: IBig) -> Self {
        Self::from_poly(Poly::constant(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        QtScalar { num: p, den: Poly::one() }
    }

    /// `q^a t^b` for integer (possibly negative) exponents.
    pub fn monomial(a: i64, b: i64) -> Self {
        let num = Mono::new(a.max(0) as u32, b.max(0) as u32);
        let den = Mono::new((-a).max(0) as u32, (-b).max(0) as u32);
        QtScalar { num: Poly::monomial(num, IBig::ONE), den: Poly::monomial(den, IBig::ONE) }
    }

    /// `q^a` for an integer exponent.
    pub fn q_pow(a: i64) -> Self {
        Self::monomial(a, 0)
    }

    pub fn t_pow(b: i64) -> Self {
        Self::monomial(0, b)
    }

    pub fn ratio(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QtScalar { num, den };
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        if den.lead_coeff() < IBig::ZERO {
            num = num.neg();
            den = den.neg();
        }
        QtScalar { num, den }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_integer(&self) -> Option<IBig> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.lead_coeff() < IBig::ZERO {
            num = num.neg();
            den = den.neg();
        }
        Ok(QtScalar { num, den })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inv().expect("negative power of zero").pow(-e);
        }
        let e = e as u32;
        QtScalar { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// The involution `q -> 1/q`, `t -> 1/t`.
    pub fn bar(&self) -> Self {
        let (nq, nt) = (self.num.max_q(), self.num.max_t());
        let (dq, dt) = (self.den.max_q(), self.den.max_t());
        let num = self.num.reversed(nq, nt);
        let den = self.den.reversed(dq, dt);
        // P(1/q,1/t)/Q(1/q,1/t) = q^(dq-nq) t^(dt-nt) num/den
        let eq = dq as i64 - nq as i64;
        let et = dt as i64 - nt as i64;
        let nm = Mono::new(eq.max(0) as u32, et.max(0) as u32);
        let dm = Mono::new((-eq).max(0) as u32, (-et).max(0) as u32);
        let mut num = num.mul_mono(nm);
        let mut den = den.mul_mono(dm);
        if den.lead_coeff() < IBig::ZERO {
            num = num.neg();
            den = den.neg();
        }
        QtScalar { num, den }
    }

    /// `q -> q^k`, `t -> t^k`.
    pub fn subs_pow(&self, k: u32) -> Self {
        let num = self.num.subs_pow(k);
        let mut den = self.den.subs_pow(k);
        let mut num = num;
        if den.lead_coeff() < IBig::ZERO {
            num = num.neg();
            den = den.neg();
        }
        QtScalar { num, den }
    }

    /// Exchange `q` and `t`.
    pub fn swap_qt(&self) -> Self {
        Self::reduce(self.num.swap_qt(), self.den.swap_qt())
    }

    /// Evaluate at integer points, `None` when the denominator vanishes.
    pub fn eval_ratio(&self, q: &IBig, t: &IBig) -> Option<(IBig, IBig)> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            None
        } else {
            Some((self.num.eval(q, t), d))
        }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let rhs_num = if negate { other.num.neg() } else { other.num.clone() };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return QtScalar { num: rhs_num, den: other.den.clone() };
        }
        if self.den == other.den {
            let num = self.num.add(&rhs_num);
            if self.den.is_one() {
                return QtScalar { num, den: Poly::one() };
            }
            return Self::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return QtScalar { num: self.num.mul(&other.den).add(&rhs_num), den: other.den.clone() };
        }
        if other.den.is_one() {
            return QtScalar { num: self.num.add(&rhs_num.mul(&self.den)), den: self.den.clone() };
        }
        let g = gcd(&self.den, &other.den);
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d1).add(&rhs_num.mul(&b1));
        if num.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return QtScalar { num, den: b1.mul(&other.den) };
        }
        let g2 = gcd(&num, &g);
        let num = num.div_exact(&g2).expect("gcd divides");
        let den = b1.mul(&other.den.div_exact(&g2).expect("gcd divides"));
        QtScalar { num, den }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return QtScalar { num: self.num.mul(&other.num), den: Poly::one() };
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        let mut num = n1.mul(&n2);
        let mut den = d1.mul(&d2);
        if den.lead_coeff() < IBig::ZERO {
            num = num.neg();
            den = den.neg();
        }
        QtScalar { num, den }
    }
}

impl fmt::Display for QtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lc = self.den.lead_coeff();
        if self.den.is_constant() {
            return self.num.fmt_over(&lc, f);
        }
        let num = Monic(&self.num, &lc).to_string();
        if self.num.len() > 1 || num.contains('/') {
            write!(f, "({})/", num)?;
        } else {
            write!(f, "{}/", num)?;
        }
        let wrap_den = self.den.len() > 1;
        if wrap_den {
            write!(f, "(")?;
        }
        self.den.fmt_over(&lc, f)?;
        if wrap_den {
            write!(f, ")")?;
        }
        Ok(())
    }
}

struct Monic<'a>(&'a Poly, &'a IBig);

impl fmt::Display for Monic<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_over(self.1, f)
    }
}

impl FromStr for QtScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

impl serde::Serialize for QtScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for QtScalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<i64> for QtScalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&QtScalar> for &QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: &QtScalar) -> QtScalar {
                let f: fn(&QtScalar, &QtScalar) -> QtScalar = $body;
                f(self, rhs)
            }
        }
        impl $tr<QtScalar> for QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: QtScalar) -> QtScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&QtScalar> for QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: &QtScalar) -> QtScalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<QtScalar> for &QtScalar {
            type Output = QtScalar;
            fn $method(self, rhs: QtScalar) -> QtScalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.try_div(b).expect("division by zero"));

impl Neg for &QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        QtScalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for QtScalar {
    type Output = QtScalar;
    fn neg(self) -> QtScalar {
        -&self
    }
}

impl std::ops::AddAssign<&QtScalar> for QtScalar {
    fn add_assign(&mut self, rhs: &QtScalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl std::ops::SubAssign<&QtScalar> for QtScalar {
    fn sub_assign(&mut self, rhs: &QtScalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl std::ops::MulAssign<&QtScalar> for QtScalar {
    fn mul_assign(&mut self, rhs: &QtScalar) {
        *self = self.mul_impl(rhs);
    }
}

impl std::iter::Sum for QtScalar {
    fn sum<I: Iterator<Item = QtScalar>>(iter: I) -> Self {
        iter.fold(QtScalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for QtScalar {
    fn product<I: Iterator<Item = QtScalar>>(iter: I) -> Self {
        iter.fold(QtScalar::one(), |a, b| a * b)
    }
}

/// Shorthand for parsing a scalar literal in tests and examples.
pub fn qt(s: &str) -> QtScalar {
    s.parse().unwrap_or_else(|e| panic!("bad scalar {s:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces() {
        assert_eq!(qt("(q^2 - 1)/(q - 1)"), qt("q + 1"));
        assert_eq!(qt("(q*t - q)/(2*t - 2)"), qt("q/2"));
    }

    #[test]
    fn monic_display() {
        assert_eq!(qt("(q^2*t - 1)/(q - 1)").to_string(), "(q^2*t - 1)/(q - 1)");
        assert_eq!(qt("(1 - q^2*t)/(1 - q)").to_string(), "(q^2*t - 1)/(q - 1)");
        assert_eq!(qt("1/(2*q + 2)").to_string(), "(1/2)/(q + 1)");
        assert_eq!(qt("3/6").to_string(), "1/2");
        assert_eq!(qt("q^-1").to_string(), "1/q");
    }

    #[test]
    fn bar_involution() {
        assert_eq!(qt("(q - 1)/t").bar(), qt("(1 - q)*t/q"));
        let x = qt("(q^2*t - 3*t + 1)/(q*t^2 - q + 2)");
        assert_eq!(x.bar().bar(), x);
    }

    #[test]
    fn field_ops() {
        let a = qt("(q + t)/(q - t)");
        let b = qt("(q*t - 1)/(q + 1)");
        assert_eq!(&(&a * &b) / &b, a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(QtScalar::zero().inv(), Err(Error::DivisionByZero));
    }
}
