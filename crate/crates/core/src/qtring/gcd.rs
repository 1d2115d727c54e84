//! Greatest common divisors in `Z[q,t]`.
//!
//! Univariate inputs use a primitive remainder sequence over `Z`; bivariate inputs
//! are treated as polynomials in `t` over `Z[q]` with the same sequence one level up.

use dashu_int::IBig;

use super::poly::{Mono, Poly};

trait Coeff: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, other: &Self) -> Self;
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
}

impl Coeff for IBig {
    fn zero() -> Self {
        IBig::ZERO
    }
    fn is_zero(&self) -> bool {
        IBig::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.is_one() || *self == IBig::NEG_ONE
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn gcd(&self, other: &Self) -> Self {
        super::poly::int_gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        self / other
    }
    fn is_negative(&self) -> bool {
        *self < IBig::ZERO
    }
    fn neg(&self) -> Self {
        -self
    }
}

// univariate polynomials in q
impl Coeff for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        matches!(self.as_constant(), Some(c) if c.is_unit())
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other)
    }
    fn gcd(&self, other: &Self) -> Self {
        gcd(self, other)
    }
    fn div_exact(&self, other: &Self) -> Self {
        Poly::div_exact(self, other).expect("inexact coefficient division")
    }
    fn is_negative(&self) -> bool {
        self.lead_coeff() < IBig::ZERO
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
}

fn trim<C: Coeff>(v: &mut Vec<C>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn content<C: Coeff>(v: &[C]) -> C {
    let mut g = C::zero();
    for c in v {
        g = g.gcd(c);
        if g.is_unit() {
            break;
        }
    }
    g
}

fn primitive<C: Coeff>(v: &[C]) -> Vec<C> {
    let c = content(v);
    let mut out: Vec<C> = if c.is_unit() || c.is_zero() {
        v.to_vec()
    } else {
        v.iter().map(|x| x.div_exact(&c)).collect()
    };
    if out.last().is_some_and(|x| x.is_negative()) {
        out = out.iter().map(|x| x.neg()).collect();
    }
    out
}

/// `lc(b)^k a mod b`, enough for primitive sequences.
fn pseudo_rem<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        let mut next: Vec<C> = r.iter().map(|x| x.mul(&lb)).collect();
        for (i, bi) in b.iter().enumerate() {
            next[i + shift] = next[i + shift].sub(&bi.mul(&lr));
        }
        trim(&mut next);
        r = next;
    }
    r
}

/// Gcd of primitive univariate polynomials, normalized to a positive leading coefficient.
fn prs_gcd<C: Coeff>(a: &[C], b: &[C]) -> Vec<C> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_empty() {
            return a;
        }
        if b.len() == 1 {
            return b;
        }
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return b;
        }
        a = b;
        b = primitive(&r);
    }
}

fn uni_coeffs(p: &Poly, in_q: bool) -> Vec<IBig> {
    let d = if in_q { p.max_q() } else { p.max_t() } as usize;
    let mut v = vec![IBig::ZERO; d + 1];
    for (m, c) in p.terms() {
        v[if in_q { m.q } else { m.t } as usize] = c.clone();
    }
    v
}

fn from_uni(v: &[IBig], in_q: bool) -> Poly {
    Poly::from_terms(v.iter().enumerate().map(|(i, c)| {
        let m = if in_q { Mono::new(i as u32, 0) } else { Mono::new(0, i as u32) };
        (m, c.clone())
    }))
}

/// Gcd of two polynomials in `Z[q,t]`, normalized so the leading coefficient is positive.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    let m = a.min_mono().gcd(b.min_mono());
    let a = a.div_mono(a.min_mono());
    let b = b.div_mono(b.min_mono());
    let ca = a.content();
    let cb = b.content();
    let c = Coeff::gcd(&ca, &cb);
    let a = if ca.is_one() { a } else { a.div_int(&ca) };
    let b = if cb.is_one() { b } else { b.div_int(&cb) };
    core_gcd(&a, &b).scale(&c).mul_mono(m)
}

fn normalize(p: &Poly) -> Poly {
    if p.lead_coeff() < IBig::ZERO {
        p.neg()
    } else {
        p.clone()
    }
}

// inputs primitive, positive leading coefficient, no monomial factor
fn core_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a.clone();
    }
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.total_degree() <= large.total_degree() && large.div_exact(small).is_some() {
        return small.clone();
    }
    let (aq, at) = (a.has_q(), a.has_t());
    let (bq, bt) = (b.has_q(), b.has_t());
    if !at && !bt {
        return from_uni(&prs_gcd(&uni_coeffs(a, true), &uni_coeffs(b, true)), true);
    }
    if !aq && !bq {
        return from_uni(&prs_gcd(&uni_coeffs(a, false), &uni_coeffs(b, false)), false);
    }
    if !at || !bt {
        // one side lives in Z[q]: reduce against the t-coefficients of the other
        let (u, v) = if !at { (a, b) } else { (b, a) };
        let mut g = u.clone();
        for c in v.coeffs_in_t() {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_constant() {
                return Poly::one();
            }
        }
        return normalize(&g);
    }
    if !aq || !bq {
        let (u, v) = if !aq { (a, b) } else { (b, a) };
        let mut g = u.clone();
        for c in v.coeffs_in_q() {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_constant() {
                return Poly::one();
            }
        }
        return normalize(&g);
    }
    let ac = a.coeffs_in_t();
    let bc = b.coeffs_in_t();
    let cont = gcd(&content(&ac), &content(&bc));
    let g = prs_gcd(&ac, &bc);
    let g = Poly::from_coeffs_in_t(&g);
    normalize(&g.primitive_part().mul(&cont))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), IBig::from(c))))
    }

    #[test]
    fn univariate() {
        let a = p(&[(2, 0, 1), (0, 0, -1)]);
        let b = p(&[(2, 0, 1), (1, 0, -2), (0, 0, 1)]);
        assert_eq!(gcd(&a, &b), p(&[(1, 0, 1), (0, 0, -1)]));
    }

    #[test]
    fn bivariate_common_factor() {
        let f = p(&[(1, 0, 1), (0, 1, -1)]);
        let g = p(&[(1, 1, 1), (0, 0, 1)]);
        let h = p(&[(2, 0, 1), (0, 1, 3), (0, 0, 1)]);
        let a = f.mul(&g).scale(&IBig::from(6));
        let b = f.mul(&h).scale(&IBig::from(4)).mul_mono(Mono::new(1, 0));
        assert_eq!(gcd(&a, &b), f.scale(&IBig::from(2)));
    }

    #[test]
    fn coprime() {
        let a = p(&[(1, 1, 1), (0, 0, -1)]);
        let b = p(&[(1, 0, 1), (0, 0, -1)]);
        assert!(gcd(&a, &b).is_one());
    }
}
