//! Characteristic functions of Dyck paths: `chi(pi)`, the corner-weighted `chi(pi, wt)`,
//! `chi(pi, 0)` and the partial-path functions `chi_k(pi)` with values in `V_k`.
//!
//! Each quantity has a brute-force evaluation over a bounded alphabet next to the exact route,
//! so the two can be compared.

use std::collections::{BTreeMap, HashMap};

use crate::dpa::{apply_word, corner_word, path_word, VElem};
use crate::dyck::{enumerate_paths, paths_with_touch_prime, DyckPath, PartialDyckPath};
use crate::error::Result;
use crate::qtring::{qt, QtScalar};
use crate::report::{Check, VerifyReport};
use crate::shapes::{multiset_permutations, Composition, Partition};
use crate::symfn::{Basis, SymFunc};

/// Weights on the corners of a path; corners without an entry have weight `1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CornerWeight(pub BTreeMap<(usize, usize), QtScalar>);

impl CornerWeight {
    pub fn ones() -> Self {
        CornerWeight::default()
    }

    /// The same weight `c` on every corner of `pi`.
    pub fn constant(pi: &DyckPath, c: QtScalar) -> Self {
        CornerWeight(pi.corners().into_iter().map(|k| (k, c.clone())).collect())
    }

    pub fn get(&self, corner: (usize, usize)) -> QtScalar {
        self.0.get(&corner).cloned().unwrap_or_else(QtScalar::one)
    }

    pub fn set(&mut self, corner: (usize, usize), w: QtScalar) {
        self.0.insert(corner, w);
    }
}

fn q_pow(e: usize) -> QtScalar {
    QtScalar::q_pow(e as i64)
}

fn inv_of(pairs: &[(usize, usize)], w: &[usize]) -> usize {
    pairs.iter().filter(|&&(i, j)| w[i - 1] > w[j - 1]).count()
}

fn no_attack(pairs: &[(usize, usize)], w: &[usize]) -> bool {
    pairs.iter().all(|&(i, j)| w[i - 1] != w[j - 1])
}

/// Labels with `content[i]` copies of `i + 1`.
fn multiset(content: &[usize]) -> Vec<usize> {
    content.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat(i + 1).take(c)).collect()
}

/// Coefficient of `x^content` in `chi(pi)`: the sum of `q^inv` over rearrangements.
pub fn chi_coefficient(pi: &DyckPath, content: &[usize]) -> QtScalar {
    let pairs = pi.area_pairs();
    let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
    for w in multiset_permutations(&multiset(content)) {
        *counts.entry(inv_of(&pairs, &w)).or_default() += 1;
    }
    counts.into_iter().map(|(e, c)| q_pow(e) * QtScalar::from_int(c)).fold(QtScalar::zero(), |a, b| a + b)
}

/// Sums `q^inv` per partition content over the words accepted by `keep`.
fn m_expansion(pi: &DyckPath, keep: impl Fn(&[usize]) -> bool) -> SymFunc {
    let pairs = pi.area_pairs();
    let n = pi.size();
    let mut terms = Vec::new();
    for lam in Partition::all(n) {
        let mut counts: BTreeMap<usize, i64> = BTreeMap::new();
        for w in multiset_permutations(&multiset(lam.parts())) {
            if keep(&w) {
                *counts.entry(inv_of(&pairs, &w)).or_default() += 1;
            }
        }
        let c = counts.into_iter().map(|(e, c)| q_pow(e) * QtScalar::from_int(c)).fold(QtScalar::zero(), |a, b| a + b);
        terms.push((lam, c));
    }
    SymFunc::from_terms(Basis::M, terms)
}

/// `chi(pi)`, in the monomial basis.
pub fn chi(pi: &DyckPath) -> SymFunc {
    if pi.size() == 0 {
        return SymFunc::one();
    }
    m_expansion(pi, |_| true)
}

/// The generating function of `WP'_pi`: labels strictly decrease across every corner.
pub fn chi_wp_prime(pi: &DyckPath) -> SymFunc {
    if pi.size() == 0 {
        return SymFunc::one();
    }
    let corners = pi.corners();
    m_expansion(pi, |w| corners.iter().all(|&(i, j)| w[i - 1] > w[j - 1]))
}

/// Words with distinct labels on attacking rows, weighted by `q^inv`.
pub fn chi_no_attack(pi: &DyckPath) -> SymFunc {
    if pi.size() == 0 {
        return SymFunc::one();
    }
    let pairs = pi.area_pairs();
    m_expansion(pi, |w| no_attack(&pairs, w))
}

/// `F[cX]` for `c = q - 1` (`forward`) or `c = 1/(q - 1)`.
pub fn scale_by_q_minus_one(f: &SymFunc, forward: bool) -> SymFunc {
    let p = f.to_basis(Basis::P);
    let terms = p.terms().iter().map(|(lam, c)| {
        let mut factor = QtScalar::one();
        for &part in lam.parts() {
            factor = factor * (q_pow(part) - QtScalar::one());
        }
        let c = if forward { c * &factor } else { c * &factor.inv().expect("q^n - 1 is nonzero") };
        (lam.clone(), c)
    });
    SymFunc::from_terms(Basis::P, terms)
}

/// `chi(pi, wt)` through the corner recursion, which ends in unweighted `chi` of flipped paths.
pub fn chi_weighted(pi: &DyckPath, wt: &CornerWeight) -> SymFunc {
    let mut memo = HashMap::new();
    chi_weighted_rec(pi, wt, &mut memo)
}

fn chi_weighted_rec(pi: &DyckPath, wt: &CornerWeight, memo: &mut HashMap<DyckPath, SymFunc>) -> SymFunc {
    let corners = pi.corners();
    let Some(&c) = corners.iter().find(|&&c| !wt.get(c).is_one()) else {
        return memo.entry(pi.clone()).or_insert_with(|| chi(pi)).clone();
    };
    let w = wt.get(c);
    let mut wt1 = wt.clone();
    wt1.0.remove(&c);
    let flipped = pi.flip_corners(&[c]).expect("c is a corner");
    let kept: BTreeMap<_, _> =
        flipped.corners().into_iter().filter(|k| corners.contains(k)).map(|k| (k, wt.get(k))).collect();
    let wt2 = CornerWeight(kept);
    let a = chi_weighted_rec(pi, &wt1, memo);
    let b = chi_weighted_rec(&flipped, &wt2, memo);
    let qm1 = qt("q - 1");
    let ca = (&(&QtScalar::q() * &w) - &QtScalar::one()).try_div(&qm1).expect("q - 1 is nonzero");
    let cb = (&QtScalar::one() - &w).try_div(&qm1).expect("q - 1 is nonzero");
    a.scale(&ca).add(&b.scale(&cb))
}

/// `chi(pi, wt)` summed directly over all words with labels in `1..=labels`.
///
/// Monomials outside partition shape are skipped, so `labels >= |pi|` recovers every
/// coefficient.
pub fn chi_weighted_bruteforce(pi: &DyckPath, wt: &CornerWeight, labels: usize) -> SymFunc {
    let n = pi.size();
    if n == 0 {
        return SymFunc::one();
    }
    let pairs = pi.area_pairs();
    let corners: Vec<((usize, usize), QtScalar)> = pi.corners().into_iter().map(|c| (c, wt.get(c))).collect();
    let mut acc: BTreeMap<Partition, QtScalar> = BTreeMap::new();
    let mut w = vec![1usize; n];
    loop {
        let mut content = vec![0usize; labels];
        for &l in &w {
            content[l - 1] += 1;
        }
        if content.windows(2).all(|p| p[0] >= p[1]) {
            let mut term = q_pow(inv_of(&pairs, &w));
            for ((i, j), c) in &corners {
                if w[i - 1] <= w[j - 1] {
                    term = term * c.clone();
                }
            }
            let lam = Partition::from_unsorted(content);
            *acc.entry(lam).or_default() += &term;
        }
        if !odometer(&mut w, 1, labels) {
            break;
        }
    }
    SymFunc::from_terms(Basis::M, acc)
}

/// Advances `w` to the next word over `lo..=hi`; false after the last one.
fn odometer(w: &mut [usize], lo: usize, hi: usize) -> bool {
    for x in w.iter_mut().rev() {
        if *x < hi {
            *x += 1;
            return true;
        }
        *x = lo;
    }
    false
}

/// `chi(pi, 0)` by inclusion-exclusion over the subsets of corners.
pub fn chi_zero(pi: &DyckPath) -> SymFunc {
    let corners = pi.corners();
    let c = corners.len();
    let mut acc = SymFunc::zero(Basis::M);
    for mask in 0u32..(1 << c) {
        let subset: Vec<_> = (0..c).filter(|b| mask >> b & 1 == 1).map(|b| corners[b]).collect();
        let flipped = pi.flip_corners(&subset).expect("corners of pi");
        let term = chi(&flipped);
        acc = if subset.len() % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc.scale(&qt("1 - q").pow(-(c as i64)))
}

/// `chi_k(pi)` for a partial path: special labels `1..k` pinned to the first `k` rows, every
/// other row labelled from `1..k+|pi|` subject to no attack, then rescaled and substituted
/// `X -> X/(q-1)`.
pub fn chi_partial(pi: &PartialDyckPath) -> VElem {
    let k = pi.start_height();
    let full = pi.completed();
    let n = full.size();
    let big = pi.size();
    let pairs = full.area_pairs();
    let labels = k + big;
    // y-exponents -> (x content as partition -> coefficient)
    let mut acc: BTreeMap<Vec<u32>, BTreeMap<Partition, QtScalar>> = BTreeMap::new();
    let mut w: Vec<usize> = (1..=k).collect();
    w.extend(std::iter::repeat(1).take(n - k));
    loop {
        if no_attack(&pairs, &w) {
            let mut ye = vec![0u32; k];
            let mut xc = vec![0usize; big];
            for &l in &w[k..] {
                if l <= k {
                    ye[l - 1] += 1;
                } else {
                    xc[l - k - 1] += 1;
                }
            }
            if xc.windows(2).all(|p| p[0] >= p[1]) {
                let lam = Partition::from_unsorted(xc);
                *acc.entry(ye).or_default().entry(lam).or_default() += &q_pow(inv_of(&pairs, &w));
            }
        }
        if !odometer(&mut w[k..], 1, labels) {
            break;
        }
    }
    let factor = qt("q - 1").pow(big as i64);
    let mut out = VElem::zero(k);
    for (ye, terms) in acc {
        let f = SymFunc::from_terms(Basis::M, terms);
        out.add_term(ye, &scale_by_q_minus_one(&f, false).scale(&factor));
    }
    out
}

/// `D_alpha` straight from its definition: over paths with `touch' = alpha`, `t^bounce` times
/// the `WP'` generating function.
pub fn dalpha_bruteforce(alpha: &Composition) -> SymFunc {
    let mut acc = SymFunc::zero(Basis::M);
    for pi in paths_with_touch_prime(alpha) {
        acc = acc.add(&chi_wp_prime(&pi).scale(&QtScalar::t_pow(pi.bounce() as i64)));
    }
    acc
}

/// Cross-checks over all paths of size at most `n`: path words against `chi`, corner words
/// against `chi(pi, 0)`, reversal symmetry, the `omega-bar` eigenvalue and, for size at most 4,
/// the corner recursion against brute force on the weights `{0, 1, q, 1/t}`.
pub fn verify_charfn(n: usize) -> Result<VerifyReport> {
    let names = ["path word = chi", "corner word = chi(pi, 0)", "chi(reverse) = chi", "omega-bar chi", "weighted recursion"];
    let mut checks: Vec<Check> = names.iter().map(|s| Check::new(s)).collect();
    let weights = [qt("0"), qt("1"), qt("q"), qt("1/t")];
    for size in 0..=n {
        for (idx, pi) in enumerate_paths(size).into_iter().enumerate() {
            let c = chi(&pi);
            let by_word = apply_word(&path_word(pi.steps()), &VElem::one(0))?.to_sym()?;
            checks[0].record(by_word == c, || pi.to_string());
            let by_corners = apply_word(&corner_word(&pi), &VElem::one(0))?.to_sym()?;
            checks[1].record(by_corners == chi_zero(&pi), || pi.to_string());
            checks[2].record(chi(&pi.reverse()) == c, || pi.to_string());
            let sign = if size % 2 == 1 { -QtScalar::one() } else { QtScalar::one() };
            checks[3].record(c.omega_bar() == c.scale(&(sign * q_pow(pi.area()).pow(-1))), || pi.to_string());
            if size <= 4 {
                let mut wt = CornerWeight::ones();
                for (m, &k) in pi.corners().iter().enumerate() {
                    wt.set(k, weights[(idx + m) % weights.len()].clone());
                }
                checks[4].record(chi_weighted(&pi, &wt) == chi_weighted_bruteforce(&pi, &wt, size), || pi.to_string());
            }
        }
    }
    Ok(VerifyReport::new(n, checks))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dpa::{d_minus, d_plus};
    use crate::dyck::{enumerate_partial, enumerate_paths, Step};

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::s(parts)
    }

    fn fig4() -> DyckPath {
        "NNEENE".parse().unwrap()
    }

    #[test]
    fn worked_values() {
        let pi = fig4();
        let want = s(&[3]).add(&s(&[2, 1]).scale(&qt("1 + q"))).add(&s(&[1, 1, 1]).scale(&qt("q")));
        assert_eq!(chi(&pi), want);
        assert_eq!(chi_coefficient(&pi, &[1, 1, 1]), qt("3 + 3*q"));
        assert_eq!(chi_coefficient(&pi, &[2, 1]), qt("2 + q"));
        let flipped = pi.flip_corners(&[(2, 3)]).unwrap();
        let want = s(&[3]).add(&s(&[2, 1]).scale(&qt("2*q"))).add(&s(&[1, 1, 1]).scale(&qt("q^2")));
        assert_eq!(chi(&flipped), want);
        let zero = s(&[2, 1]).add(&s(&[1, 1, 1]).scale(&qt("q")));
        assert_eq!(chi_zero(&pi), zero);
        assert_eq!(chi_weighted(&pi, &CornerWeight::constant(&pi, QtScalar::zero())), zero);
        assert_eq!(chi_wp_prime(&pi), zero);
        assert_eq!(chi(&DyckPath::empty()), SymFunc::one());
        assert_eq!(chi_zero(&"NE".parse().unwrap()), s(&[1]));
    }

    #[test]
    fn dalpha_small() {
        // the only path with touch' = (1,2) is NNEENE, with bounce 1
        let d = dalpha_bruteforce(&Composition::new(vec![1, 2]).unwrap());
        assert_eq!(d, s(&[2, 1]).scale(&qt("t")).add(&s(&[1, 1, 1]).scale(&qt("q*t"))));
        assert_eq!(dalpha_bruteforce(&Composition::new(vec![1]).unwrap()), s(&[1]));
    }

    #[test]
    fn weighted_agrees_with_brute_force() {
        let weights = [qt("0"), qt("1"), qt("q"), qt("1/t")];
        for n in 1..=4 {
            for pi in enumerate_paths(n) {
                let corners = pi.corners();
                for (idx, _) in weights.iter().enumerate() {
                    let mut wt = CornerWeight::ones();
                    for (m, &c) in corners.iter().enumerate() {
                        wt.set(c, weights[(idx + m) % weights.len()].clone());
                    }
                    assert_eq!(chi_weighted(&pi, &wt), chi_weighted_bruteforce(&pi, &wt, n), "{}", pi);
                }
            }
        }
    }

    #[test]
    fn zero_weight_routes_agree() {
        for n in 1..=5 {
            for pi in enumerate_paths(n) {
                let z = chi_zero(&pi);
                assert_eq!(z, chi_weighted(&pi, &CornerWeight::constant(&pi, QtScalar::zero())), "{}", pi);
                assert_eq!(z, chi_wp_prime(&pi), "{}", pi);
            }
        }
    }

    #[test]
    fn partial_paths() {
        for n in 0..=4 {
            for pi in enumerate_paths(n) {
                assert_eq!(chi_partial(&PartialDyckPath::from(pi.clone())).to_sym().unwrap(), chi(&pi));
            }
        }
        let e = PartialDyckPath::new(1, vec![Step::E]).unwrap();
        assert_eq!(chi_partial(&e), VElem::one(1));
        for k in 0..=3 {
            for m in 0..=(4 - k) {
                for pi in enumerate_partial(k, m) {
                    let base = chi_partial(&pi);
                    let east = pi.prepend(Step::E).unwrap();
                    assert_eq!(chi_partial(&east), d_plus(&base).unwrap(), "E {} at {}", pi, k);
                    if k > 0 {
                        let north = pi.prepend(Step::N).unwrap();
                        assert_eq!(chi_partial(&north), d_minus(&base).unwrap(), "N {} at {}", pi, k);
                    }
                }
            }
        }
    }
}
