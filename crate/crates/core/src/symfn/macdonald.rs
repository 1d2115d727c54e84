//! Modified Macdonald polynomials `H_mu` as rescaled weighted characteristic functions.
//!
//! The cells of `mu` are read as `(l,1..mu_l), (l-1,1..mu_{l-1}), ..., (1,1..mu_1)`, in English
//! coordinates (row 1 is the longest). A cell `(i,j)` attacks the cells after it and before
//! `(i-1,j)`; the path `pi_mu` has exactly those attacking pairs under it. Its corners sit
//! between vertically adjacent cells `(i,j)` and `(i-1,j)`, and carry the weight
//! `q^arm(i,j) t^(-1-leg(i,j))` of the lower cell, with arm and leg from [`Partition::arm`] and
//! [`Partition::leg`]. This pins `H_(2) = s_2 + q s_11` and `H_(1,1) = s_2 + t s_11`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::SymFunc;
use crate::charfn::{chi_weighted, CornerWeight};
use crate::dyck::DyckPath;
use crate::qtring::QtScalar;
use crate::shapes::Partition;

/// Cells of `mu` in reading order.
fn reading_cells(mu: &Partition) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(mu.size());
    for i in (1..=mu.len()).rev() {
        for j in 1..=mu.part(i) {
            out.push((i, j));
        }
    }
    out
}

/// The path `pi_mu`.
pub fn pi_mu(mu: &Partition) -> DyckPath {
    // row (i,j) is attacked by (i, 1..j-1) and by (i+1, j+1..mu_{i+1}), a block just before it
    let area: Vec<usize> =
        reading_cells(mu).iter().map(|&(i, j)| (j - 1) + mu.part(i + 1).saturating_sub(j)).collect();
    DyckPath::from_area_sequence(&area).expect("attack counts form an area sequence")
}

/// The corner weights `wt_mu` on `pi_mu`.
pub fn wt_mu(mu: &Partition) -> CornerWeight {
    let cells = reading_cells(mu);
    let pi = pi_mu(mu);
    let mut wt = CornerWeight::ones();
    for (a, b) in pi.corners() {
        let (c1, c2) = (cells[a - 1], cells[b - 1]);
        let (lower, upper) = if c1.0 > c2.0 { (c1, c2) } else { (c2, c1) };
        debug_assert!(lower.1 == upper.1 && lower.0 == upper.0 + 1, "corner between {:?} and {:?}", c1, c2);
        let (i, j) = lower;
        let w = QtScalar::monomial(mu.arm(i, j) as i64, -1 - mu.leg(i, j) as i64);
        wt.set((a, b), w);
    }
    wt
}

/// `H_mu = q^{-n(mu') + C(mu_1, 2)} t^{n(mu)} chi(pi_mu, wt_mu)`, cached.
pub fn macdonald_h(mu: &Partition) -> SymFunc {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SymFunc>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.read().unwrap().get(mu) {
        return (**h).clone();
    }
    let mu1 = mu.part(1) as i64;
    let qe = -(mu.conjugate().n() as i64) + mu1 * (mu1 - 1) / 2;
    let scale = QtScalar::monomial(qe, mu.n() as i64);
    let h = chi_weighted(&pi_mu(mu), &wt_mu(mu)).scale(&scale);
    cache.write().unwrap().entry(mu.clone()).or_insert_with(|| Arc::new(h.clone()));
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charfn::chi_weighted_bruteforce;
    use crate::qtring::qt;
    use crate::symfn::Basis;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_shapes() {
        assert_eq!(macdonald_h(&p(&[1])), SymFunc::s(&[1]));
        assert_eq!(macdonald_h(&p(&[2])), SymFunc::s(&[2]).add(&SymFunc::s(&[1, 1]).scale(&qt("q"))));
        assert_eq!(macdonald_h(&p(&[1, 1])), SymFunc::s(&[2]).add(&SymFunc::s(&[1, 1]).scale(&qt("t"))));
        let h21 = SymFunc::s(&[3]).add(&SymFunc::s(&[2, 1]).scale(&qt("q + t"))).add(&SymFunc::s(&[1, 1, 1]).scale(&qt("q*t")));
        assert_eq!(macdonald_h(&p(&[2, 1])), h21);
        assert_eq!(pi_mu(&p(&[2, 1])).to_string(), "NENNEE");
    }

    #[test]
    fn recursion_matches_brute_force() {
        for n in 1..=4 {
            for mu in Partition::all(n) {
                let pi = pi_mu(&mu);
                let wt = wt_mu(&mu);
                assert_eq!(chi_weighted(&pi, &wt), chi_weighted_bruteforce(&pi, &wt, n), "{}", mu);
            }
        }
    }

    #[test]
    fn polynomial_schur_coefficients() {
        for n in 1..=5 {
            for mu in Partition::all(n) {
                let h = macdonald_h(&mu).to_basis(Basis::S);
                assert!(h.terms().values().all(|c| c.is_polynomial()), "{}", mu);
                // s_(n) appears with coefficient 1 in every H_mu
                assert_eq!(h.coeff(&p(&[n])), qt("1"), "{}", mu);
            }
        }
    }
}
