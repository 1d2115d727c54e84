//! The operators `Delta`, `T_i`, `d_+`, `d_-`, `d_+^*`, `y_i` and `z_i` on `V_k`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use super::VElem;
use crate::error::{Error, Result};
use crate::qtring::{qt, QtScalar};
use crate::symfn::ops::{b_op, shift};

/// A polynomial in two variables `u, v` with scalar coefficients, keyed by `(deg_u, deg_v)`.
pub type Biv = BTreeMap<(u32, u32), QtScalar>;

fn biv_add(p: &mut Biv, key: (u32, u32), c: QtScalar) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(key).or_default();
    *e += &c;
    if e.is_zero() {
        p.remove(&key);
    }
}

/// Exact division by `v - u`; panics if there is a remainder.
fn div_v_minus_u(p: &Biv) -> Biv {
    // write p = sum_j P_j(u) v^j and run Horner from the top
    let dv = p.keys().map(|k| k.1).max().unwrap_or(0);
    let mut cols: Vec<BTreeMap<u32, QtScalar>> = vec![BTreeMap::new(); dv as usize + 1];
    for (&(i, j), c) in p {
        cols[j as usize].insert(i, c.clone());
    }
    let mut quot: Vec<BTreeMap<u32, QtScalar>> = vec![BTreeMap::new(); dv as usize];
    let mut carry: BTreeMap<u32, QtScalar> = BTreeMap::new();
    for j in (1..=dv as usize).rev() {
        // Q_{j-1} = P_j + u Q_j
        let mut q = cols[j].clone();
        for (i, c) in &carry {
            let e = q.entry(i + 1).or_default();
            *e += c;
        }
        q.retain(|_, c| !c.is_zero());
        quot[j - 1] = q.clone();
        carry = q;
    }
    let mut rem = cols[0].clone();
    for (i, c) in &carry {
        let e = rem.entry(i + 1).or_default();
        *e += c;
    }
    assert!(rem.values().all(|c| c.is_zero()), "numerator not divisible by v - u");
    let mut out = Biv::new();
    for (j, col) in quot.into_iter().enumerate() {
        for (i, c) in col {
            biv_add(&mut out, (i, j as u32), c);
        }
    }
    out
}

/// `Delta_{uv}` (or its starred twin) on a single monomial `u^a v^b`, cached.
fn delta_monomial(a: u32, b: u32, star: bool) -> Arc<Biv> {
    static CACHE: OnceLock<RwLock<HashMap<(u32, u32, bool), Arc<Biv>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&(a, b, star)) {
        return v.clone();
    }
    let q = QtScalar::q();
    let mut num = Biv::new();
    // (q-1) w P(u,v) with w = u for the starred operator and w = v otherwise
    let first = if star { (a + 1, b) } else { (a, b + 1) };
    biv_add(&mut num, first, &q - &QtScalar::one());
    // (v - q u) P(v,u) = (v - q u) u^b v^a
    biv_add(&mut num, (b, a + 1), QtScalar::one());
    biv_add(&mut num, (b + 1, a), -q);
    let v = Arc::new(div_v_minus_u(&num));
    cache.write().unwrap().entry((a, b, star)).or_insert(v).clone()
}

/// `(Delta_{uv} P)` for `star = false`, `(Delta^*_{uv} P)` for `star = true`.
pub fn delta_op(p: &Biv, star: bool) -> Biv {
    let mut out = Biv::new();
    for (&(a, b), c) in p {
        for (&k, d) in delta_monomial(a, b, star).iter() {
            biv_add(&mut out, k, c * d);
        }
    }
    out
}

fn check_index(op: &str, i: usize, lo: usize, hi: usize, level: usize) -> Result<()> {
    if i < lo || i > hi {
        return Err(Error::OperatorUndefined { op: format!("{}{}", op, i), level });
    }
    Ok(())
}

/// `Delta_{y_i y_{i+1}}` (or the starred operator) acting on the `y` part of `f`.
pub fn delta_at(i: usize, f: &VElem, star: bool) -> Result<VElem> {
    let k = f.level();
    check_index(if star { "T" } else { "Delta" }, i, 1, k.saturating_sub(1), k)?;
    let mut out = VElem::zero(k);
    for (e, g) in f.terms() {
        let (a, b) = (e[i - 1], e[i]);
        for (&(c, d), coef) in delta_monomial(a, b, star).iter() {
            let mut e2 = e.clone();
            e2[i - 1] = c;
            e2[i] = d;
            out.add_term(e2, &g.scale(coef));
        }
    }
    Ok(out)
}

/// `T_i = Delta^*_{y_i y_{i+1}}`, or its inverse `q^{-1}(T_i + q - 1)`.
pub fn t_op(i: usize, f: &VElem, inverse: bool) -> Result<VElem> {
    let mut out = delta_at(i, f, true)?;
    if inverse {
        out.add_scaled(f, &qt("q - 1"));
        out = out.scale(&qt("1/q"));
    }
    Ok(out)
}

/// `T_{from} T_{from+1} ... T_{to}` (inverses when `inverse`), rightmost factor first.
pub fn t_pow_chain(from: usize, to: usize, f: &VElem, inverse: bool) -> Result<VElem> {
    let mut out = f.clone();
    for i in (from..=to).rev() {
        out = t_op(i, &out, inverse)?;
    }
    Ok(out)
}

/// `F[X + a y_{k+1}]` as an element of `V_{k+1}`.
fn shift_new_variable(f: &VElem, a: &QtScalar) -> VElem {
    let mut out = VElem::zero(f.level() + 1);
    for (e, g) in f.terms() {
        for (j, gj) in shift(g, a).into_iter().enumerate() {
            let mut e2 = e.clone();
            e2.push(j as u32);
            out.add_term(e2, &gj);
        }
    }
    out
}

/// `d_+ F = T_1 T_2 ... T_k (F[X + (q-1) y_{k+1}])`.
pub fn d_plus(f: &VElem) -> Result<VElem> {
    let k = f.level();
    let shifted = shift_new_variable(f, &qt("q - 1"));
    if k == 0 {
        return Ok(shifted);
    }
    t_pow_chain(1, k, &shifted, false)
}

/// `d_-(y_k^i F) = -B_{i+1} F` with `y_1..y_{k-1}` inert.
pub fn d_minus(f: &VElem) -> Result<VElem> {
    let k = f.level();
    if k == 0 {
        return Err(Error::OperatorUndefined { op: "d-".into(), level: 0 });
    }
    let mut out = VElem::zero(k - 1);
    for (e, g) in f.terms() {
        let i = e[k - 1] as i64;
        let img = -b_op(i + 1, g);
        out.add_term(e[..k - 1].to_vec(), &img);
    }
    Ok(out)
}

/// `d_+^* F = gamma F[X + (q-1) y_{k+1}]`, where `gamma` shifts `y_i -> y_{i+1}` and sends
/// `y_{k+1} -> t y_1`.
pub fn d_plus_star(f: &VElem) -> Result<VElem> {
    let shifted = shift_new_variable(f, &qt("q - 1"));
    let mut out = VElem::zero(shifted.level());
    for (e, g) in shifted.terms() {
        let j = *e.last().expect("level at least one");
        let mut e2 = Vec::with_capacity(e.len());
        e2.push(j);
        e2.extend_from_slice(&e[..e.len() - 1]);
        out.add_term(e2, &g.scale(&QtScalar::t_pow(j as i64)));
    }
    Ok(out)
}

/// Multiplication by `y_i`.
pub fn y_mul(i: usize, f: &VElem) -> Result<VElem> {
    let k = f.level();
    check_index("y", i, 1, k, k)?;
    let mut out = VElem::zero(k);
    for (e, g) in f.terms() {
        let mut e2 = e.clone();
        e2[i - 1] += 1;
        out.add_term(e2, g);
    }
    Ok(out)
}

/// `z_1 = q^k/(1-q) (d_+^* d_- - d_- d_+^*) T_{k-1}^{-1} ... T_1^{-1}` on `V_k` and
/// `z_{i+1} = q^{-1} T_i z_i T_i`.
pub fn z_op(i: usize, f: &VElem) -> Result<VElem> {
    let k = f.level();
    check_index("z", i, 1, k, k)?;
    if i == 1 {
        let mut g = f.clone();
        for j in 1..k {
            g = t_op(j, &g, true)?;
        }
        let a = d_plus_star(&d_minus(&g)?)?;
        let b = d_minus(&d_plus_star(&g)?)?;
        let c = QtScalar::q_pow(k as i64) * qt("1/(1 - q)");
        return Ok((&a - &b).scale(&c));
    }
    let g = t_op(i - 1, f, false)?;
    let g = z_op(i - 1, &g)?;
    Ok(t_op(i - 1, &g, false)?.scale(&qt("1/q")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfn::{ops::h_of_scalar, SymFunc};

    fn biv(terms: &[((u32, u32), &str)]) -> Biv {
        terms.iter().map(|(k, c)| (*k, qt(c))).collect()
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_op(&biv(&[((1, 0), "1")]), false), biv(&[((0, 1), "1")]));
        // symmetric input is scaled by q
        let sym = biv(&[((2, 1), "1"), ((1, 2), "1")]);
        assert_eq!(delta_op(&sym, false), biv(&[((2, 1), "q"), ((1, 2), "q")]));
        // Delta(u^j) = v h_{j-1}[(1-q) u + v]
        for j in 1..5u32 {
            let h = h_of_scalar(&qt("1 - q"), j as usize);
            let mut want = Biv::new();
            for i in 0..j {
                biv_add(&mut want, (i, j - i), h[i as usize].clone());
            }
            assert_eq!(delta_op(&biv(&[((j, 0), "1")]), false), want);
        }
        // Delta^* = q Delta^{-1}
        let p = biv(&[((3, 1), "t"), ((0, 2), "q + 1")]);
        let back = delta_op(&delta_op(&p, true), false);
        let scaled: Biv = p.iter().map(|(k, c)| (*k, c * &qt("q"))).collect();
        assert_eq!(back, scaled);
    }

    #[test]
    fn t_values() {
        let y1 = VElem::y_monomial(vec![1, 0]);
        let want = VElem::from_terms(2, [(vec![0, 1], SymFunc::one()), (vec![1, 0], SymFunc::scalar(qt("1 - q")))]).unwrap();
        assert_eq!(t_op(1, &y1, false).unwrap(), want);
        let sym = VElem::y_monomial(vec![1, 1]);
        assert_eq!(t_op(1, &sym, false).unwrap(), sym);
        let back = t_op(1, &t_op(1, &y1, true).unwrap(), false).unwrap();
        assert_eq!(back, y1);
        assert!(t_op(2, &y1, false).is_err());
    }

    #[test]
    fn worked_chain() {
        let one = VElem::one(0);
        let s1 = d_minus(&d_plus(&one).unwrap()).unwrap();
        assert_eq!(s1.to_sym().unwrap(), SymFunc::s(&[1]));
        let a = d_plus(&s1).unwrap();
        let want = VElem::from_terms(1, [(vec![0], SymFunc::s(&[1])), (vec![1], SymFunc::scalar(qt("q - 1")))]).unwrap();
        assert_eq!(a, want);
        let b = d_plus(&a).unwrap();
        let want = VElem::from_terms(
            2,
            [
                (vec![0, 0], SymFunc::s(&[1])),
                (vec![1, 0], SymFunc::scalar(qt("q - 1"))),
                (vec![0, 1], SymFunc::scalar(qt("q - 1"))),
            ],
        )
        .unwrap();
        assert_eq!(b, want);
        let c = d_minus(&b).unwrap();
        let want = VElem::from_terms(
            1,
            [(vec![0], SymFunc::s(&[2]).add(&SymFunc::s(&[1, 1]))), (vec![1], SymFunc::s(&[1]).scale(&qt("q - 1")))],
        )
        .unwrap();
        assert_eq!(c, want);
        let d = d_minus(&c).unwrap().to_sym().unwrap();
        assert_eq!(d, SymFunc::s(&[3]).add(&SymFunc::s(&[2, 1]).scale(&qt("1 + q"))).add(&SymFunc::s(&[1, 1, 1]).scale(&qt("q"))));
    }

    #[test]
    fn starred_values() {
        let one = VElem::one(0);
        assert_eq!(d_plus_star(&one).unwrap(), VElem::one(1));
        let s1 = VElem::from_sym(SymFunc::s(&[1]));
        let want = VElem::from_terms(1, [(vec![0], SymFunc::s(&[1])), (vec![1], SymFunc::scalar(qt("t*(q - 1)")))]).unwrap();
        assert_eq!(d_plus_star(&s1).unwrap(), want);
        assert_eq!(z_op(1, &VElem::one(1)).unwrap(), VElem::y_monomial(vec![1]).scale(&qt("-q*t")));
        let one1 = VElem::one(1);
        let comm = &d_minus(&d_plus(&one1).unwrap()).unwrap() - &d_plus(&d_minus(&one1).unwrap()).unwrap();
        assert_eq!(comm, VElem::y_monomial(vec![1]).scale(&qt("1 - q")));
    }
}
