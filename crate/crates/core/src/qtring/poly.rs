//! Sparse bivariate polynomials over the integers in the variables `q` and `t`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use dashu_int::IBig;

/// Nonnegative gcd of two integers; `gcd(0, 0) = 0`.
pub fn int_gcd(a: &IBig, b: &IBig) -> IBig {
    if a.is_zero() {
        return if *b < IBig::ZERO { -b } else { b.clone() };
    }
    if b.is_zero() {
        return if *a < IBig::ZERO { -a } else { a.clone() };
    }
    IBig::from(dashu_int::ops::Gcd::gcd(a, b))
}

/// A monomial `q^q t^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    pub q: u32,
    pub t: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, t: 0 };

    pub fn new(q: u32, t: u32) -> Self {
        Mono { q, t }
    }

    pub fn degree(self) -> u32 {
        self.q + self.t
    }

    pub fn divides(self, other: Mono) -> bool {
        self.q <= other.q && self.t <= other.t
    }

    pub fn mul(self, other: Mono) -> Mono {
        Mono { q: self.q + other.q, t: self.t + other.t }
    }

    /// Caller guarantees `other` divides `self`.
    pub fn div(self, other: Mono) -> Mono {
        Mono { q: self.q - other.q, t: self.t - other.t }
    }

    pub fn gcd(self, other: Mono) -> Mono {
        Mono { q: self.q.min(other.q), t: self.t.min(other.t) }
    }
}

// graded lex with q > t
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then(self.q.cmp(&other.q))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Terms are kept sorted by decreasing monomial with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, IBig)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(IBig::ONE)
    }

    pub fn constant(c: IBig) -> Self {
        Self::monomial(Mono::ONE, c)
    }

    pub fn monomial(m: Mono, c: IBig) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn q() -> Self {
        Self::monomial(Mono::new(1, 0), IBig::ONE)
    }

    pub fn t() -> Self {
        Self::monomial(Mono::new(0, 1), IBig::ONE)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, IBig)>>(iter: I) -> Self {
        let mut acc: HashMap<Mono, IBig> = HashMap::new();
        for (m, c) in iter {
            *acc.entry(m).or_insert(IBig::ZERO) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Mono, IBig>) -> Self {
        let mut terms: Vec<(Mono, IBig)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Builds from terms already sorted in decreasing order, dropping zeros.
    fn from_sorted(terms: Vec<(Mono, IBig)>) -> Self {
        Poly { terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Mono, IBig)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn as_constant(&self) -> Option<IBig> {
        match self.terms.as_slice() {
            [] => Some(IBig::ZERO),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead(&self) -> Option<&(Mono, IBig)> {
        self.terms.first()
    }

    pub fn lead_coeff(&self) -> IBig {
        self.terms.first().map(|t| t.1.clone()).unwrap_or(IBig::ZERO)
    }

    pub fn coeff(&self, m: Mono) -> IBig {
        self.terms
            .binary_search_by(|(x, _)| m.cmp(x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or(IBig::ZERO)
    }

    pub fn max_q(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.q).max().unwrap_or(0)
    }

    pub fn max_t(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.t).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn has_q(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.q > 0)
    }

    pub fn has_t(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.t > 0)
    }

    /// Largest monomial dividing every term.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m, _)) => it.fold(*m, |acc, (x, _)| acc.gcd(*x)),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect() }
    }

    /// Caller guarantees `m` divides every term.
    pub fn div_mono(&self, m: Mono) -> Poly {
        if m == Mono::ONE {
            return self.clone();
        }
        Poly { terms: self.terms.iter().map(|(x, c)| (x.div(m), c.clone())).collect() }
    }

    pub fn scale(&self, c: &IBig) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    /// Caller guarantees `c` divides every coefficient.
    pub fn div_int(&self, c: &IBig) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect() }
    }

    /// Gcd of the coefficients, carrying the sign of the leading coefficient.
    pub fn content(&self) -> IBig {
        let mut g = IBig::ZERO;
        for (_, c) in &self.terms {
            g = int_gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        if self.lead_coeff() < IBig::ZERO {
            -g
        } else {
            g
        }
    }

    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content();
        if c.is_one() {
            self.clone()
        } else {
            self.div_int(&c)
        }
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.merge(other, true)
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate { -c } else { c.clone() }));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return Poly { terms: other.terms.iter().map(|(x, y)| (x.mul(*m), y * c)).collect() };
        }
        if other.terms.len() == 1 {
            return other.mul(self);
        }
        let wq = (self.max_q() + other.max_q() + 1) as usize;
        let wt = (self.max_t() + other.max_t() + 1) as usize;
        let box_size = wq * wt;
        if box_size <= 4 * self.terms.len() * other.terms.len() + 64 {
            let mut dense = vec![IBig::ZERO; box_size];
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let idx = (ma.q + mb.q) as usize * wt + (ma.t + mb.t) as usize;
                    dense[idx] += ca * cb;
                }
            }
            let mut terms = Vec::new();
            for (idx, c) in dense.into_iter().enumerate() {
                if !c.is_zero() {
                    terms.push((Mono::new((idx / wt) as u32, (idx % wt) as u32), c));
                }
            }
            terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            Poly { terms }
        } else {
            let mut acc: HashMap<Mono, IBig> = HashMap::new();
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    *acc.entry(ma.mul(*mb)).or_insert(IBig::ZERO) += ca * cb;
                }
            }
            Self::from_map(acc)
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact division in `Z[q,t]`, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if divisor.terms.len() == 1 {
            let (dm, dc) = &divisor.terms[0];
            let mut terms = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(*m) || !(c % dc).is_zero() {
                    return None;
                }
                terms.push((m.div(*dm), c / dc));
            }
            return Some(Poly { terms });
        }
        if divisor.max_q() > self.max_q() || divisor.max_t() > self.max_t() {
            return None;
        }
        let (dm, dc) = divisor.terms[0].clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            if !dm.divides(m) || !(&c % &dc).is_zero() {
                return None;
            }
            let qm = m.div(dm);
            let qc = &c / &dc;
            let sub = Poly { terms: divisor.terms.iter().map(|(x, y)| (x.mul(qm), y * &qc)).collect() };
            rem = rem.sub(&sub);
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Coefficients with respect to `t`, each a polynomial in `q` alone.
    pub fn coeffs_in_t(&self) -> Vec<Poly> {
        let mut out = vec![Vec::new(); self.max_t() as usize + 1];
        for (m, c) in &self.terms {
            out[m.t as usize].push((Mono::new(m.q, 0), c.clone()));
        }
        out.into_iter().map(Poly::from_sorted_any).collect()
    }

    /// Coefficients with respect to `q`, each a polynomial in `t` alone.
    pub fn coeffs_in_q(&self) -> Vec<Poly> {
        let mut out = vec![Vec::new(); self.max_q() as usize + 1];
        for (m, c) in &self.terms {
            out[m.q as usize].push((Mono::new(0, m.t), c.clone()));
        }
        out.into_iter().map(Poly::from_sorted_any).collect()
    }

    fn from_sorted_any(mut terms: Vec<(Mono, IBig)>) -> Poly {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly::from_sorted(terms)
    }

    /// Inverse of `coeffs_in_t`.
    pub fn from_coeffs_in_t(coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (j, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                terms.push((Mono::new(m.q, m.t + j as u32), x.clone()));
            }
        }
        Poly::from_sorted_any(terms)
    }

    pub fn from_coeffs_in_q(coeffs: &[Poly]) -> Poly {
        let mut terms = Vec::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, x) in &c.terms {
                terms.push((Mono::new(m.q + i as u32, m.t), x.clone()));
            }
        }
        Poly::from_sorted_any(terms)
    }

    pub fn swap_qt(&self) -> Poly {
        Poly::from_sorted_any(self.terms.iter().map(|(m, c)| (Mono::new(m.t, m.q), c.clone())).collect())
    }

    /// `q -> q^k`, `t -> t^k`.
    pub fn subs_pow(&self, k: u32) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (Mono::new(m.q * k, m.t * k), c.clone())).collect() }
    }

    /// `q^dq t^dt P(1/q, 1/t)`; requires `dq >= max_q` and `dt >= max_t`.
    pub fn reversed(&self, dq: u32, dt: u32) -> Poly {
        Poly::from_sorted_any(self.terms.iter().map(|(m, c)| (Mono::new(dq - m.q, dt - m.t), c.clone())).collect())
    }

    pub fn eval(&self, q: &IBig, t: &IBig) -> IBig {
        let mut qp = vec![IBig::ONE];
        for i in 1..=self.max_q() as usize {
            let next = &qp[i - 1] * q;
            qp.push(next);
        }
        let mut tp = vec![IBig::ONE];
        for i in 1..=self.max_t() as usize {
            let next = &tp[i - 1] * t;
            tp.push(next);
        }
        let mut acc = IBig::ZERO;
        for (m, c) in &self.terms {
            acc += c * &qp[m.q as usize] * &tp[m.t as usize];
        }
        acc
    }

    /// Formats with every coefficient divided by `denom` (a positive integer), reducing fractions.
    pub fn fmt_over(&self, denom: &IBig, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = *c < IBig::ZERO;
            let abs = if neg { -c } else { c.clone() };
            let g = int_gcd(&abs, denom);
            let (p, r) = (&abs / &g, denom / &g);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let coeff = if r.is_one() { format!("{}", p) } else { format!("{}/{}", p, r) };
            if *m == Mono::ONE {
                write!(f, "{}", coeff)?;
                continue;
            }
            if coeff != "1" {
                write!(f, "{}*", coeff)?;
            }
            let mut parts = Vec::new();
            for (name, e) in [("q", m.q), ("t", m.t)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    e => parts.push(format!("{}^{}", name, e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_over(&IBig::ONE, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(u32, u32, i64)]) -> Poly {
        Poly::from_terms(terms.iter().map(|&(a, b, c)| (Mono::new(a, b), IBig::from(c))))
    }

    #[test]
    fn grlex_order() {
        assert!(Mono::new(2, 0) > Mono::new(1, 1));
        assert!(Mono::new(0, 3) > Mono::new(2, 0));
    }

    #[test]
    fn product_and_division() {
        let a = p(&[(1, 0, 1), (0, 0, -1)]);
        let b = p(&[(1, 1, 1), (0, 0, 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab, p(&[(2, 1, 1), (1, 1, -1), (1, 0, 1), (0, 0, -1)]));
        assert_eq!(ab.div_exact(&a), Some(b.clone()));
        assert_eq!(ab.div_exact(&b), Some(a.clone()));
        assert_eq!(ab.div_exact(&p(&[(1, 0, 1), (0, 0, 1)])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[(2, 1, 1), (0, 0, -1)]).to_string(), "q^2*t - 1");
        assert_eq!(p(&[(1, 0, -3), (0, 1, 2)]).to_string(), "-3*q + 2*t");
    }
}
