//! Plethystic operators computed in the complete homogeneous basis.
//!
//! Each operator has the shape `F[X + a/z] Exp[c z X] |_{z^r}`. Writing
//! `h_m[X + a w] = sum_j h_{m-j}[X] h_j[a] w^j` turns the shift into a finite sum, and
//! `Exp[-zX]`, `Exp[zX]` contribute `(-1)^m e_m` and `h_m`. Results are cached per
//! basis element `h_lambda`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::{Basis, SymFunc};
use crate::qtring::{qt, QtScalar};
use crate::shapes::Partition;

/// `h_j[a]` for `j = 0..=n`, with `p_k[a] = a(q^k, t^k)`.
pub fn h_of_scalar(a: &QtScalar, n: usize) -> Arc<Vec<QtScalar>> {
    static CACHE: OnceLock<RwLock<HashMap<QtScalar, Arc<Vec<QtScalar>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(a) {
        if v.len() > n {
            return v.clone();
        }
    }
    let n = n.max(8);
    let p: Vec<QtScalar> = (0..=n).map(|k| if k == 0 { QtScalar::zero() } else { a.subs_pow(k as u32) }).collect();
    let mut h = vec![QtScalar::one()];
    for m in 1..=n {
        let mut acc = QtScalar::zero();
        for k in 1..=m {
            acc += &(&p[k] * &h[m - k]);
        }
        h.push(&acc / &QtScalar::from_int(m as i64));
    }
    let v = Arc::new(h);
    let mut w = cache.write().unwrap();
    match w.get(a) {
        Some(old) if old.len() >= v.len() => old.clone(),
        _ => {
            w.insert(a.clone(), v.clone());
            v
        }
    }
}

/// `e_n` in the `h` basis: `sum over compositions of n of (-1)^(n - len) h_alpha`.
pub fn e_in_h(n: usize) -> Arc<Vec<(Partition, QtScalar)>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<(Partition, QtScalar)>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&n) {
        return v.clone();
    }
    let v: Vec<(Partition, QtScalar)> = Partition::all(n)
        .into_iter()
        .map(|p| {
            let l = p.len();
            let mut arrangements: u128 = (1..=l as u128).product();
            for &m in p.multiplicities().iter() {
                arrangements /= (1..=m as u128).product::<u128>();
            }
            let sign = if (n - l) % 2 == 0 { 1 } else { -1 };
            (p, QtScalar::from_ibig(dashu_int::IBig::from(arrangements) * sign))
        })
        .collect();
    let v = Arc::new(v);
    cache.write().unwrap().entry(n).or_insert(v).clone()
}

type ShiftTerms = Vec<(usize, Partition, QtScalar)>;

/// `h_lambda[X + a w] = sum of (j, mu, c)` meaning `c w^j h_mu`.
pub fn shift_h(lambda: &Partition, a: &QtScalar) -> Arc<ShiftTerms> {
    static CACHE: OnceLock<RwLock<HashMap<(QtScalar, Partition), Arc<ShiftTerms>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (a.clone(), lambda.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let ha = h_of_scalar(a, lambda.part(1));
    let mut acc: HashMap<(usize, Vec<usize>), QtScalar> = HashMap::new();
    acc.insert((0, Vec::new()), QtScalar::one());
    for &part in lambda.parts() {
        let mut next: HashMap<(usize, Vec<usize>), QtScalar> = HashMap::new();
        for ((j, mu), c) in &acc {
            for k in 0..=part {
                if ha[k].is_zero() {
                    continue;
                }
                let mut nu = mu.clone();
                if part > k {
                    nu.push(part - k);
                }
                let v = c * &ha[k];
                let e = next.entry((j + k, nu)).or_default();
                *e += &v;
            }
        }
        acc = next;
    }
    let mut out: BTreeMap<(usize, Partition), QtScalar> = BTreeMap::new();
    for ((j, mu), c) in acc {
        let e = out.entry((j, Partition::from_unsorted(mu))).or_default();
        *e += &c;
    }
    let v: ShiftTerms = out.into_iter().filter(|(_, c)| !c.is_zero()).map(|((j, p), c)| (j, p, c)).collect();
    let v = Arc::new(v);
    cache.write().unwrap().entry(key).or_insert(v).clone()
}

/// `F[X + a w]` as coefficients of `w^0, w^1, ...`, all in the `h` basis.
pub fn shift(f: &SymFunc, a: &QtScalar) -> Vec<SymFunc> {
    let f = f.to_basis(Basis::H);
    let mut out: Vec<BTreeMap<Partition, QtScalar>> = Vec::new();
    for (lambda, c) in f.terms() {
        for (j, mu, d) in shift_h(lambda, a).iter() {
            if out.len() <= *j {
                out.resize_with(j + 1, BTreeMap::new);
            }
            let e = out[*j].entry(mu.clone()).or_default();
            *e += &(c * d);
        }
    }
    out.into_iter()
        .map(|m| {
            let mut s = SymFunc::from_map(Basis::H, m);
            s.set_max_degree(f.max_degree());
            s
        })
        .collect()
}

/// Adds `c * h_mu * (sum of cv h_nu)` into `acc`.
fn add_product(acc: &mut BTreeMap<Partition, QtScalar>, mu: &Partition, c: &QtScalar, other: &[(Partition, QtScalar)]) {
    for (nu, d) in other {
        let e = acc.entry(mu.union(nu)).or_default();
        *e += &(c * d);
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum OpKind {
    B(i64),
    C(i64),
    D1,
    D1Star,
}

fn apply_on_h(kind: OpKind, lambda: &Partition) -> Arc<SymFunc> {
    static CACHE: OnceLock<RwLock<HashMap<(OpKind, Partition), Arc<SymFunc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (kind, lambda.clone());
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let (a, r, minus_e) = match kind {
        OpKind::B(r) => (qt("1 - q"), r, true),
        OpKind::C(r) => (qt("1/q - 1"), r, false),
        OpKind::D1 => (qt("(1 - q)*(1 - t)"), 1, true),
        OpKind::D1Star => (qt("-(1 - 1/q)*(1 - 1/t)"), 1, false),
    };
    let mut acc: BTreeMap<Partition, QtScalar> = BTreeMap::new();
    for (j, mu, c) in shift_h(lambda, &a).iter() {
        // z^{-j} from the shift meets z^{r+j} from the exponential
        let m = r + *j as i64;
        if m < 0 {
            continue;
        }
        let m = m as usize;
        if minus_e {
            let c = if m % 2 == 1 { -c } else { c.clone() };
            add_product(&mut acc, mu, &c, &e_in_h(m));
        } else {
            add_product(&mut acc, mu, c, &[(Partition::from_unsorted(vec![m]), QtScalar::one())]);
        }
    }
    if let OpKind::C(r) = kind {
        let f = -QtScalar::q_pow(1 - r);
        for v in acc.values_mut() {
            *v = &*v * &f;
        }
    }
    let v = Arc::new(SymFunc::from_map(Basis::H, acc));
    cache.write().unwrap().entry(key).or_insert(v).clone()
}

fn apply(kind: OpKind, f: &SymFunc, raise: i64) -> SymFunc {
    let f = f.to_basis(Basis::H);
    let mut acc: BTreeMap<Partition, QtScalar> = BTreeMap::new();
    for (lambda, c) in f.terms() {
        for (mu, d) in apply_on_h(kind, lambda).terms() {
            let e = acc.entry(mu.clone()).or_default();
            *e += &(c * d);
        }
    }
    let mut out = SymFunc::from_map(Basis::H, acc);
    out.set_max_degree((f.max_degree() as i64 + raise).max(0) as usize);
    out
}

/// `(B_r F)[X] = F[X - (q-1)/z] Exp[-zX] |_{z^r}`, returned in the `h` basis.
pub fn b_op(r: i64, f: &SymFunc) -> SymFunc {
    apply(OpKind::B(r), f, r)
}

/// `(C_r F)[X] = -q^(1-r) F[X + (1/q - 1)/z] Exp[zX] |_{z^r}`.
pub fn c_op(r: i64, f: &SymFunc) -> SymFunc {
    apply(OpKind::C(r), f, r)
}

/// `(D_1 F)[X] = F[X + (1-q)(1-t)/u] Exp[-uX] |_{u^1}`.
pub fn d1(f: &SymFunc) -> SymFunc {
    apply(OpKind::D1, f, 1)
}

/// `(D_1^* F)[X] = F[X - (1-1/q)(1-1/t)/u] Exp[uX] |_{u^1}`.
pub fn d1_star(f: &SymFunc) -> SymFunc {
    apply(OpKind::D1Star, f, 1)
}

/// Multiplication by `e_1`.
pub fn e1_mul(f: &SymFunc) -> SymFunc {
    let mut out = f.to_basis(Basis::H).mul(&SymFunc::h(&[1]));
    out.set_max_degree(f.max_degree() + 1);
    out
}

/// `B_{a_1} B_{a_2} ... B_{a_l}(1)`, with the last operator applied first.
pub fn b_word(parts: &[usize]) -> SymFunc {
    parts.iter().rev().fold(SymFunc::one(), |acc, &r| b_op(r as i64, &acc))
}

/// `C_{a_1} ... C_{a_l}(1)`, with the last operator applied first.
pub fn c_word(parts: &[usize]) -> SymFunc {
    parts.iter().rev().fold(SymFunc::one(), |acc, &r| c_op(r as i64, &acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_h() {
        let h = h_of_scalar(&qt("q - 1"), 3);
        assert_eq!(h[1], qt("q - 1"));
        assert_eq!(h[2], qt("q^2 - q"));
        assert_eq!(h[3], qt("q^3 - q^2"));
        let h = h_of_scalar(&qt("1 - q"), 3);
        assert_eq!(h[3], qt("1 - q"));
    }

    #[test]
    fn e_expansion() {
        assert_eq!(SymFunc::from_terms(Basis::H, e_in_h(3).iter().cloned()), SymFunc::e(&[3]));
    }

    #[test]
    fn first_values() {
        assert_eq!(b_op(1, &SymFunc::one()), -SymFunc::h(&[1]));
        assert_eq!(c_op(1, &SymFunc::one()), -SymFunc::h(&[1]));
        assert_eq!(d1(&SymFunc::one()), -SymFunc::e(&[1]));
        assert_eq!(e1_mul(&SymFunc::one()), SymFunc::s(&[1]));
    }

    #[test]
    fn creation_sums() {
        use crate::shapes::Composition;
        for n in 1..=5 {
            let mut c_sum = SymFunc::zero(Basis::H);
            let mut b_sum = SymFunc::zero(Basis::H);
            for alpha in Composition::all(n) {
                c_sum = c_sum.add(&c_word(alpha.parts()));
                let l = alpha.len() as i64;
                let sign = if l % 2 == 0 { QtScalar::one() } else { -QtScalar::one() };
                b_sum = b_sum.add(&b_word(alpha.parts()).scale(&(QtScalar::q_pow(-l) * sign)));
            }
            // h_n[-X] = (-1)^n e_n and h_n[X/q] = q^-n h_n
            let sign = if n % 2 == 0 { QtScalar::one() } else { -QtScalar::one() };
            assert_eq!(c_sum, SymFunc::e(&[n]).scale(&sign), "n = {}", n);
            assert_eq!(b_sum, SymFunc::h(&[n]).scale(&QtScalar::q_pow(-(n as i64))), "n = {}", n);
        }
    }
}
