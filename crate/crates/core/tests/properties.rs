use compshuffle::charfn::{
    chi, chi_coefficient, chi_no_attack, chi_weighted_bruteforce, scale_by_q_minus_one, CornerWeight,
};
use compshuffle::dpa::basis::basis_shapes;
use compshuffle::dpa::relations::check_relations;
use compshuffle::dpa::{basis_element, d_minus, d_plus, d_plus_star, decompose, t_op, VElem};
use compshuffle::dyck::{enumerate_paths, DyckPath};
use compshuffle::json::to_json;
use compshuffle::qtring::{qt, QtScalar};
use compshuffle::shapes::Partition;
use compshuffle::shuffle::n_involution;
use compshuffle::symfn::{d1, e1_mul, macdonald_h, Basis, SymFunc};
use proptest::prelude::*;

const BASES: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::S, Basis::P];

fn scalar() -> impl Strategy<Value = QtScalar> {
    (-3i64..=3, 0i64..=2, -2i64..=2, -1i64..=2, 0i64..=1).prop_map(|(c, a, b, d, e)| {
        let num = &QtScalar::from_int(c) * &QtScalar::monomial(a, b) + QtScalar::from_int(d);
        let den = QtScalar::one() + &QtScalar::from_int(e) * &QtScalar::monomial(1, e);
        num.try_div(&den).unwrap()
    })
}

fn symfunc(max_deg: usize) -> impl Strategy<Value = SymFunc> {
    let shape = (0..=max_deg).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    });
    (prop::collection::vec((shape, scalar()), 1..4), 0usize..5)
        .prop_map(|(terms, b)| SymFunc::from_terms(BASES[b], terms))
}

fn path(max: usize) -> impl Strategy<Value = DyckPath> {
    (0..=max).prop_flat_map(|n| {
        let all = enumerate_paths(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn v0(f: &SymFunc) -> VElem {
    VElem::from_sym(f.clone())
}

fn sym(v: VElem) -> SymFunc {
    v.to_sym().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn bar_is_an_involutive_homomorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.bar().bar(), a.clone());
        prop_assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        prop_assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }

    #[test]
    fn scalar_strings_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<QtScalar>().unwrap(), a);
    }

    #[test]
    fn basis_round_trips(f in symfunc(6)) {
        for b1 in BASES {
            let g = f.to_basis(b1);
            for b2 in BASES {
                prop_assert_eq!(g.to_basis(b2).to_basis(b1), g.clone());
            }
        }
    }

    #[test]
    fn symfunc_json_round_trip(f in symfunc(4)) {
        let back: SymFunc = serde_json::from_str(&to_json(&f)).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn velem_json_round_trip(f in symfunc(3), e in prop::collection::vec(0u32..3, 0..3)) {
        let v = VElem::monomial(e, f);
        let back: VElem = serde_json::from_str(&to_json(&v)).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn reversal_preserves_chi(pi in path(6)) {
        prop_assert_eq!(chi(&pi.reverse()), chi(&pi));
    }

    #[test]
    fn chi_coefficients_are_symmetric(pi in path(5), perm_seed in 0usize..120) {
        // content of the multiset of labels, permuted
        let n = pi.size();
        let lam = Partition::all(n)[perm_seed % Partition::all(n).len()].clone();
        let mut content = lam.parts().to_vec();
        content.resize(n, 0);
        let base = chi_coefficient(&pi, &content);
        let mut rotated = content.clone();
        rotated.rotate_left(perm_seed % n.max(1));
        prop_assert_eq!(chi_coefficient(&pi, &rotated), base.clone());
        rotated.reverse();
        prop_assert_eq!(chi_coefficient(&pi, &rotated), base);
    }

    #[test]
    fn unweighted_chi_matches_words(pi in path(4)) {
        prop_assert_eq!(chi(&pi), chi_weighted_bruteforce(&pi, &CornerWeight::ones(), pi.size()));
    }

    #[test]
    fn random_relation_trials(seed in any::<u64>()) {
        let rep = check_relations(2, 4, 1, seed);
        let failing: Vec<String> = rep.failures().map(|r| r.relation.clone()).collect();
        prop_assert!(rep.all_pass, "{:?}", failing);
    }
}

#[test]
fn hall_duality() {
    for n in 0..=6 {
        let shapes = Partition::all(n);
        for lam in &shapes {
            for mu in &shapes {
                let hm = SymFunc::h(lam.parts()).hall(&SymFunc::m(mu.parts()));
                let pp = SymFunc::p(lam.parts()).hall(&SymFunc::p(mu.parts()));
                let delta = lam == mu;
                assert_eq!(hm, QtScalar::from_int(delta as i64));
                let z = if delta { QtScalar::from_int(lam.z() as i64) } else { QtScalar::zero() };
                assert_eq!(pp, z);
            }
        }
    }
}

#[test]
fn omega_bar_of_chi() {
    for n in 0..=5 {
        for pi in enumerate_paths(n) {
            let f = chi(&pi);
            let sign = if n % 2 == 1 { -QtScalar::one() } else { QtScalar::one() };
            let want = f.scale(&(sign * QtScalar::q_pow(-(pi.area() as i64))));
            assert_eq!(f.omega_bar(), want, "{}", pi);
        }
    }
}

#[test]
fn no_attack_plethysm() {
    for n in 0..=4 {
        for pi in enumerate_paths(n) {
            let lhs = scale_by_q_minus_one(&chi(&pi), true);
            let rhs = chi_no_attack(&pi).scale(&qt("q - 1").pow(n as i64));
            assert_eq!(lhs, rhs, "{}", pi);
        }
    }
}

#[test]
fn corner_recursion() {
    // both sides by brute force over words, so this is independent of the recursive route
    let weights = [qt("0"), qt("1"), qt("q"), qt("1/t")];
    let qm1 = qt("q - 1");
    for n in 1..=5 {
        for (idx, pi) in enumerate_paths(n).into_iter().enumerate() {
            let corners = pi.corners();
            let mut wt = CornerWeight::ones();
            for (m, &c) in corners.iter().enumerate() {
                wt.set(c, weights[(idx + 3 * m) % weights.len()].clone());
            }
            let lhs = chi_weighted_bruteforce(&pi, &wt, n);
            for &c in &corners {
                let w = wt.get(c);
                let mut without = wt.clone();
                without.0.remove(&c);
                let flipped = pi.flip_corners(&[c]).unwrap();
                let kept = CornerWeight(
                    flipped.corners().into_iter().filter(|k| corners.contains(k)).map(|k| (k, wt.get(k))).collect(),
                );
                let ca = (&(&QtScalar::q() * &w) - &QtScalar::one()).try_div(&qm1).unwrap();
                let cb = (&QtScalar::one() - &w).try_div(&qm1).unwrap();
                let rhs = chi_weighted_bruteforce(&pi, &without, n)
                    .scale(&ca)
                    .add(&chi_weighted_bruteforce(&flipped, &kept, n).scale(&cb));
                assert_eq!(lhs, rhs, "{} at corner {:?}", pi, c);
            }
        }
    }
}

#[test]
fn degree_one_operators() {
    for n in 0..=4 {
        for lam in Partition::all(n) {
            let f = SymFunc::s(lam.parts());
            let v = v0(&f);
            assert_eq!(d1(&f), sym(d_minus(&d_plus_star(&v).unwrap()).unwrap()).scale(&-QtScalar::one()), "{}", lam);
            assert_eq!(e1_mul(&f), sym(d_minus(&d_plus(&v).unwrap()).unwrap()), "{}", lam);
            let nf = sym(n_involution(&v).unwrap());
            assert_eq!(sym(n_involution(&v0(&d1(&f))).unwrap()), e1_mul(&nf).scale(&-QtScalar::one()), "{}", lam);
            assert_eq!(sym(n_involution(&v0(&e1_mul(&f))).unwrap()), d1(&nf).scale(&-QtScalar::one()), "{}", lam);
        }
    }
}

#[test]
fn involution_intertwines() {
    for k in 0..=2 {
        for deg in 0..=4 {
            for (m, a) in basis_shapes(k, deg) {
                let b = basis_element(k, m, &a).unwrap();
                let nb = n_involution(&b).unwrap();
                if k >= 1 {
                    assert_eq!(n_involution(&d_minus(&b).unwrap()).unwrap(), d_minus(&nb).unwrap());
                }
                for i in 1..k {
                    let lhs = n_involution(&t_op(i, &b, false).unwrap()).unwrap();
                    assert_eq!(lhs, t_op(i, &nb, true).unwrap(), "k={} m={} a={:?}", k, m, a);
                }
            }
        }
    }
}

#[test]
fn basis_is_faithful() {
    for k in 0..=2 {
        for deg in 0..=4 {
            for (m, a) in basis_shapes(k, deg) {
                let b = basis_element(k, m, &a).unwrap();
                let dec = decompose(&b).unwrap();
                assert_eq!(dec.terms.len(), 1);
                assert_eq!((dec.terms[0].m, &dec.terms[0].a), (m, &a));
                assert!(dec.terms[0].coeff.is_one());
                assert_eq!(dec.reconstruct().unwrap(), b);
            }
        }
    }
}

#[test]
fn macdonald_trivial_coefficient() {
    // every H_mu has s_n coefficient 1
    for n in 1..=5 {
        for mu in Partition::all(n) {
            let h = macdonald_h(&mu);
            assert!(h.coeff_in(Basis::S, &Partition::new(vec![n]).unwrap()).is_one(), "{}", mu);
        }
    }
}
