//! Exact checks of the defining relations of the Dyck path algebra, its starred twin and the
//! mixed relations between them, on monomial and pseudorandom inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::basis::compositions_weak;
use super::ops::{d_minus, d_plus, d_plus_star, delta_at, t_op, y_mul, z_op};
use super::VElem;
use crate::error::Result;
use crate::qtring::{qt, QtScalar};
use crate::shapes::Partition;
use crate::symfn::SymFunc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationRecord {
    pub relation: String,
    pub level: usize,
    pub degree: usize,
    pub status: String,
    /// Number of input elements the relation was evaluated on.
    pub inputs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub records: Vec<RelationRecord>,
    pub all_pass: bool,
}

impl RelationReport {
    pub fn failures(&self) -> impl Iterator<Item = &RelationRecord> {
        self.records.iter().filter(|r| r.status != "pass")
    }
}

type Check = fn(&VElem) -> Result<bool>;

struct Relation {
    name: &'static str,
    min_level: usize,
    check: Check,
}

fn t(i: usize, f: &VElem) -> Result<VElem> {
    t_op(i, f, false)
}

fn ti(i: usize, f: &VElem) -> Result<VElem> {
    t_op(i, f, true)
}

/// `(d_+ d_- - d_- d_+) F`
fn comm(f: &VElem) -> Result<VElem> {
    Ok(&d_plus(&d_minus(f)?)? - &d_minus(&d_plus(f)?)?)
}

/// `(d_+^* d_- - d_- d_+^*) F`
fn comm_star(f: &VElem) -> Result<VElem> {
    Ok(&d_plus_star(&d_minus(f)?)? - &d_minus(&d_plus_star(f)?)?)
}

fn all<I: IntoIterator<Item = usize>>(it: I, mut p: impl FnMut(usize) -> Result<bool>) -> Result<bool> {
    for i in it {
        if !p(i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pairs(k: usize, mut p: impl FnMut(usize, usize) -> Result<bool>) -> Result<bool> {
    for i in 1..=k {
        for j in 1..=k {
            if !p(i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `(X - 1)(X + c) F` for an operator `X`.
fn quadratic(f: &VElem, c: &QtScalar, x: impl Fn(&VElem) -> Result<VElem>) -> Result<bool> {
    let a = x(f)?;
    let b = x(&a)?;
    let mut out = b;
    out.add_scaled(&a, &(c - &QtScalar::one()));
    out.add_scaled(f, &-c.clone());
    Ok(out.is_zero())
}

fn relations() -> Vec<Relation> {
    vec![
        Relation {
            name: "(T_i - 1)(T_i + q) = 0",
            min_level: 2,
            check: |f| all(1..f.level(), |i| quadratic(f, &QtScalar::q(), |g| t(i, g))),
        },
        Relation {
            name: "Delta^* = q Delta^-1",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(delta_at(i, &delta_at(i, f, false)?, true)? == f.scale(&QtScalar::q()))),
        },
        Relation {
            name: "(Delta - q)(Delta + 1) = 0",
            min_level: 2,
            check: |f| {
                all(1..f.level(), |i| {
                    let a = delta_at(i, f, false)?;
                    let b = delta_at(i, &a, false)?;
                    let mut out = b;
                    out.add_scaled(&a, &qt("1 - q"));
                    out.add_scaled(f, &qt("-q"));
                    Ok(out.is_zero())
                })
            },
        },
        Relation {
            name: "Delta_12 Delta_23 Delta_12 = Delta_23 Delta_12 Delta_23",
            min_level: 3,
            check: |f| {
                all(1..f.level() - 1, |i| {
                    let l = delta_at(i, &delta_at(i + 1, &delta_at(i, f, false)?, false)?, false)?;
                    let r = delta_at(i + 1, &delta_at(i, &delta_at(i + 1, f, false)?, false)?, false)?;
                    Ok(l == r)
                })
            },
        },
        Relation {
            name: "T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}",
            min_level: 3,
            check: |f| all(1..f.level() - 1, |i| Ok(t(i, &t(i + 1, &t(i, f)?)?)? == t(i + 1, &t(i, &t(i + 1, f)?)?)?)),
        },
        Relation {
            name: "T_i T_j = T_j T_i (|i - j| > 1)",
            min_level: 4,
            check: |f| {
                let k = f.level();
                pairs(k - 1, |i, j| if i + 1 < j { Ok(t(i, &t(j, f)?)? == t(j, &t(i, f)?)?) } else { Ok(true) })
            },
        },
        Relation {
            name: "T_i d_- = d_- T_i",
            min_level: 3,
            check: |f| all(1..f.level() - 1, |i| Ok(t(i, &d_minus(f)?)? == d_minus(&t(i, f)?)?)),
        },
        Relation {
            name: "d_+ T_i = T_{i+1} d_+",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(d_plus(&t(i, f)?)? == t(i + 1, &d_plus(f)?)?)),
        },
        Relation {
            name: "T_1 d_+^2 = d_+^2",
            min_level: 0,
            check: |f| {
                let g = d_plus(&d_plus(f)?)?;
                Ok(t(1, &g)? == g)
            },
        },
        Relation {
            name: "d_-^2 T_{k-1} = d_-^2",
            min_level: 2,
            check: |f| {
                let k = f.level();
                Ok(d_minus(&d_minus(&t(k - 1, f)?)?)? == d_minus(&d_minus(f)?)?)
            },
        },
        Relation {
            name: "d_-(d_+ d_- - d_- d_+) T_{k-1} = q (d_+ d_- - d_- d_+) d_-",
            min_level: 2,
            check: |f| {
                let k = f.level();
                let l = d_minus(&comm(&t(k - 1, f)?)?)?;
                let r = comm(&d_minus(f)?)?.scale(&QtScalar::q());
                Ok(l == r)
            },
        },
        Relation {
            name: "T_1 (d_+ d_- - d_- d_+) d_+ = q d_+ (d_+ d_- - d_- d_+)",
            min_level: 1,
            check: |f| {
                let l = t(1, &comm(&d_plus(f)?)?)?;
                let r = d_plus(&comm(f)?)?.scale(&QtScalar::q());
                Ok(l == r)
            },
        },
        Relation {
            name: "(d_- d_+ - d_+ d_-) F = (q - 1) T_1 ... T_{k-1} (-y_k F)",
            min_level: 1,
            check: |f| {
                let k = f.level();
                let l = -&comm(f)?;
                let mut r = -&y_mul(k, f)?;
                for i in (1..k).rev() {
                    r = t(i, &r)?;
                }
                Ok(l == r.scale(&qt("q - 1")))
            },
        },
        Relation {
            name: "y_i = q^-1 T_i y_{i+1} T_i",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(y_mul(i, f)? == t(i, &y_mul(i + 1, &t(i, f)?)?)?.scale(&qt("1/q")))),
        },
        Relation {
            name: "y_i T_j = T_j y_i (i not in {j, j+1})",
            min_level: 3,
            check: |f| {
                let k = f.level();
                pairs(k, |i, j| {
                    if j >= k || i == j || i == j + 1 {
                        return Ok(true);
                    }
                    Ok(y_mul(i, &t(j, f)?)? == t(j, &y_mul(i, f)?)?)
                })
            },
        },
        Relation {
            name: "y_i d_- = d_- y_i",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(y_mul(i, &d_minus(f)?)? == d_minus(&y_mul(i, f)?)?)),
        },
        Relation {
            name: "d_+ y_i = T_1 ... T_i y_i (T_1 ... T_i)^-1 d_+",
            min_level: 1,
            check: |f| {
                all(1..=f.level(), |i| {
                    let l = d_plus(&y_mul(i, f)?)?;
                    let mut r = d_plus(f)?;
                    for j in 1..=i {
                        r = ti(j, &r)?;
                    }
                    r = y_mul(i, &r)?;
                    for j in (1..=i).rev() {
                        r = t(j, &r)?;
                    }
                    Ok(l == r)
                })
            },
        },
        Relation {
            name: "y_i y_j = y_j y_i",
            min_level: 2,
            check: |f| pairs(f.level(), |i, j| Ok(y_mul(i, &y_mul(j, f)?)? == y_mul(j, &y_mul(i, f)?)?)),
        },
        // the starred action: T_i -> T_i^-1, d_+ -> d_+^*, d_- -> d_-, q -> q^-1, y_i -> z_i
        Relation {
            name: "(T_i^-1 - 1)(T_i^-1 + q^-1) = 0",
            min_level: 2,
            check: |f| all(1..f.level(), |i| quadratic(f, &qt("1/q"), |g| ti(i, g))),
        },
        Relation {
            name: "T_i^-1 T_{i+1}^-1 T_i^-1 = T_{i+1}^-1 T_i^-1 T_{i+1}^-1",
            min_level: 3,
            check: |f| all(1..f.level() - 1, |i| Ok(ti(i, &ti(i + 1, &ti(i, f)?)?)? == ti(i + 1, &ti(i, &ti(i + 1, f)?)?)?)),
        },
        Relation {
            name: "T_i^-1 T_j^-1 = T_j^-1 T_i^-1 (|i - j| > 1)",
            min_level: 4,
            check: |f| {
                let k = f.level();
                pairs(k - 1, |i, j| if i + 1 < j { Ok(ti(i, &ti(j, f)?)? == ti(j, &ti(i, f)?)?) } else { Ok(true) })
            },
        },
        Relation {
            name: "T_i^-1 d_- = d_- T_i^-1",
            min_level: 3,
            check: |f| all(1..f.level() - 1, |i| Ok(ti(i, &d_minus(f)?)? == d_minus(&ti(i, f)?)?)),
        },
        Relation {
            name: "d_+^* T_i^-1 = T_{i+1}^-1 d_+^*",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(d_plus_star(&ti(i, f)?)? == ti(i + 1, &d_plus_star(f)?)?)),
        },
        Relation {
            name: "T_1^-1 d_+^*^2 = d_+^*^2",
            min_level: 0,
            check: |f| {
                let g = d_plus_star(&d_plus_star(f)?)?;
                Ok(ti(1, &g)? == g)
            },
        },
        Relation {
            name: "d_-^2 T_{k-1}^-1 = d_-^2",
            min_level: 2,
            check: |f| {
                let k = f.level();
                Ok(d_minus(&d_minus(&ti(k - 1, f)?)?)? == d_minus(&d_minus(f)?)?)
            },
        },
        Relation {
            name: "d_-(d_+^* d_- - d_- d_+^*) T_{k-1}^-1 = q^-1 (d_+^* d_- - d_- d_+^*) d_-",
            min_level: 2,
            check: |f| {
                let k = f.level();
                let l = d_minus(&comm_star(&ti(k - 1, f)?)?)?;
                let r = comm_star(&d_minus(f)?)?.scale(&qt("1/q"));
                Ok(l == r)
            },
        },
        Relation {
            name: "T_1^-1 (d_+^* d_- - d_- d_+^*) d_+^* = q^-1 d_+^* (d_+^* d_- - d_- d_+^*)",
            min_level: 1,
            check: |f| {
                let l = ti(1, &comm_star(&d_plus_star(f)?)?)?;
                let r = d_plus_star(&comm_star(f)?)?.scale(&qt("1/q"));
                Ok(l == r)
            },
        },
        Relation {
            name: "(d_- d_+^* - d_+^* d_-) F = (q^-1 - 1) T_1^-1 ... T_{k-1}^-1 (-z_k F)",
            min_level: 1,
            check: |f| {
                let k = f.level();
                let l = -&comm_star(f)?;
                let mut r = -&z_op(k, f)?;
                for i in (1..k).rev() {
                    r = ti(i, &r)?;
                }
                Ok(l == r.scale(&qt("1/q - 1")))
            },
        },
        Relation {
            name: "z_i = q T_i^-1 z_{i+1} T_i^-1",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(z_op(i, f)? == ti(i, &z_op(i + 1, &ti(i, f)?)?)?.scale(&QtScalar::q()))),
        },
        Relation {
            name: "z_i T_j^-1 = T_j^-1 z_i (i not in {j, j+1})",
            min_level: 3,
            check: |f| {
                let k = f.level();
                pairs(k, |i, j| {
                    if j >= k || i == j || i == j + 1 {
                        return Ok(true);
                    }
                    Ok(z_op(i, &ti(j, f)?)? == ti(j, &z_op(i, f)?)?)
                })
            },
        },
        Relation {
            name: "z_i d_- = d_- z_i",
            min_level: 2,
            check: |f| all(1..f.level(), |i| Ok(z_op(i, &d_minus(f)?)? == d_minus(&z_op(i, f)?)?)),
        },
        Relation {
            name: "d_+^* z_i = T_1^-1 ... T_i^-1 z_i (T_1^-1 ... T_i^-1)^-1 d_+^*",
            min_level: 1,
            check: |f| {
                all(1..=f.level(), |i| {
                    let l = d_plus_star(&z_op(i, f)?)?;
                    let mut r = d_plus_star(f)?;
                    for j in 1..=i {
                        r = t(j, &r)?;
                    }
                    r = z_op(i, &r)?;
                    for j in (1..=i).rev() {
                        r = ti(j, &r)?;
                    }
                    Ok(l == r)
                })
            },
        },
        Relation {
            name: "z_i z_j = z_j z_i",
            min_level: 2,
            check: |f| pairs(f.level(), |i, j| if i < j { Ok(z_op(i, &z_op(j, f)?)? == z_op(j, &z_op(i, f)?)?) } else { Ok(true) }),
        },
        // mixed relations between the two actions
        Relation {
            name: "z_{i+1} d_+ = d_+ z_i",
            min_level: 1,
            check: |f| all(1..=f.level(), |i| Ok(z_op(i + 1, &d_plus(f)?)? == d_plus(&z_op(i, f)?)?)),
        },
        Relation {
            name: "y_{i+1} d_+^* = d_+^* y_i",
            min_level: 1,
            check: |f| all(1..=f.level(), |i| Ok(y_mul(i + 1, &d_plus_star(f)?)? == d_plus_star(&y_mul(i, f)?)?)),
        },
        Relation {
            name: "z_1 d_+ = -t q^{k+1} y_1 d_+^*",
            min_level: 0,
            check: |f| {
                let k = f.level() as i64;
                let l = z_op(1, &d_plus(f)?)?;
                let c = -(QtScalar::t() * QtScalar::q_pow(k + 1));
                let r = y_mul(1, &d_plus_star(f)?)?.scale(&c);
                Ok(l == r)
            },
        },
    ]
}

/// Names of every relation the checker evaluates, including the `d_+^* d_+^m(1)` family.
pub fn relation_names() -> Vec<&'static str> {
    let mut v: Vec<&'static str> = relations().iter().map(|r| r.name).collect();
    v.push(POWER_RELATION);
    v
}

const POWER_RELATION: &str = "d_+^* d_+^m (1) = d_+^{m+1} (1)";

/// Every `y^a s_lambda` of total degree exactly `deg` at level `k`.
pub fn monomial_basis(k: usize, deg: usize) -> Vec<VElem> {
    let mut out = Vec::new();
    for ydeg in 0..=deg {
        for a in compositions_weak(ydeg, k) {
            for lam in Partition::all(deg - ydeg) {
                out.push(VElem::monomial(a.clone(), SymFunc::s(lam.parts())));
            }
        }
    }
    out
}

/// A sparse element with up to three terms of total degree at most `deg`.
pub fn random_element(k: usize, deg: usize, rng: &mut impl Rng) -> VElem {
    let mut out = VElem::zero(k);
    let nterms = rng.gen_range(1..=3);
    for _ in 0..nterms {
        let total = rng.gen_range(0..=deg);
        let ydeg = if k == 0 { 0 } else { rng.gen_range(0..=total) };
        let mut a = vec![0u32; k];
        for _ in 0..ydeg {
            a[rng.gen_range(0..k)] += 1;
        }
        let parts = Partition::all(total - ydeg);
        let lam = &parts[rng.gen_range(0..parts.len())];
        let coef = QtScalar::from_int(rng.gen_range(-3..=3))
            + QtScalar::q() * QtScalar::from_int(rng.gen_range(-2..=2))
            + QtScalar::t() * QtScalar::from_int(rng.gen_range(-2..=2));
        if coef.is_zero() {
            continue;
        }
        out.add_term(a, &SymFunc::s(lam.parts()).scale(&coef));
    }
    if out.is_zero() {
        out = VElem::one(k);
    }
    out
}

fn trial_seed(seed: u64, level: usize, trial: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((level as u64) << 32) ^ trial as u64
}

/// Checks every relation at every level `0..=k_max`.
///
/// Inputs are the full monomial basis in degrees `<= min(degree, 3)` and `trials` seeded
/// random elements of degree `<= degree` per level.
pub fn check_relations(k_max: usize, degree: usize, trials: usize, seed: u64) -> RelationReport {
    let exhaustive = degree.min(3);
    check_relations_with(k_max, exhaustive, degree, trials, seed)
}

/// Like [`check_relations`] with the exhaustive degree bound given separately.
pub fn check_relations_with(k_max: usize, exhaustive_degree: usize, degree: usize, trials: usize, seed: u64) -> RelationReport {
    let inputs: Vec<Vec<VElem>> = (0..=k_max)
        .map(|k| {
            let mut v: Vec<VElem> = (0..=exhaustive_degree).flat_map(|d| monomial_basis(k, d)).collect();
            for trial in 0..trials {
                let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, k, trial));
                v.push(random_element(k, degree, &mut rng));
            }
            v
        })
        .collect();
    let rels = relations();
    let jobs: Vec<(usize, usize)> =
        (0..rels.len()).flat_map(|r| (rels[r].min_level..=k_max).map(move |k| (r, k))).collect();
    let mut records: Vec<RelationRecord> = jobs
        .par_iter()
        .map(|&(r, k)| {
            let rel = &rels[r];
            let ok = inputs[k].par_iter().all(|f| matches!((rel.check)(f), Ok(true)));
            RelationRecord {
                relation: rel.name.to_string(),
                level: k,
                degree,
                status: if ok { "pass" } else { "fail" }.to_string(),
                inputs: inputs[k].len(),
            }
        })
        .collect();
    // d_+^* d_+^m(1) = d_+^{m+1}(1), recorded at the level of the result
    let mut power = VElem::one(0);
    for m in 0..=degree.max(k_max) {
        let next = d_plus(&power).expect("d_+ is total");
        let ok = d_plus_star(&power).map(|x| x == next).unwrap_or(false);
        records.push(RelationRecord {
            relation: POWER_RELATION.to_string(),
            level: m + 1,
            degree: 0,
            status: if ok { "pass" } else { "fail" }.to_string(),
            inputs: 1,
        });
        power = next;
    }
    let all_pass = records.iter().all(|r| r.status == "pass");
    RelationReport { records, all_pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_levels_pass() {
        let rep = check_relations(2, 2, 3, 7);
        let bad: Vec<_> = rep.failures().map(|r| (r.relation.clone(), r.level)).collect();
        assert!(rep.all_pass, "failing: {:?}", bad);
    }

    #[test]
    fn a_broken_relation_is_caught() {
        // T_1 is not the identity, so this must fail on some monomial
        let f = VElem::y_monomial(vec![1, 0]);
        assert_ne!(t(1, &f).unwrap(), f);
        assert!(!quadratic(&f, &QtScalar::q(), |g| Ok(g.scale(&qt("2")))).unwrap());
    }

    #[test]
    fn monomial_counts() {
        // y-degree 0..2 in two variables times partitions of the rest
        assert_eq!(monomial_basis(2, 2).len(), 2 + 2 + 3);
        assert_eq!(monomial_basis(0, 3).len(), 3);
    }
}
