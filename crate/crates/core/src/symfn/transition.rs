//! Transition matrices between the classical bases and the monomial basis.
//!
//! Every basis is expressed in `m` by a counting argument, and the inverses are solved
//! exactly once per degree. Caches are filled idempotently, so concurrent readers never
//! observe a partial matrix.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::Basis;
use crate::linalg::{self, Matrix};
use crate::qtring::QtScalar;
use crate::shapes::Partition;

pub struct PartitionIndex {
    pub list: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
}

pub fn partitions(n: usize) -> Arc<PartitionIndex> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<PartitionIndex>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let list = Partition::all(n);
    let index = list.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let entry = Arc::new(PartitionIndex { list, index });
    cache.write().unwrap().entry(n).or_insert(entry).clone()
}

/// Number of matrices with the given row and column sums; entries in `{0,1}` when `binary`.
fn count_matrices(rows: &[usize], cols: &[usize], binary: bool, memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>) -> u64 {
    if rows.is_empty() {
        return cols.iter().all(|&c| c == 0) as u64;
    }
    let mut key_cols = cols.to_vec();
    key_cols.sort_unstable();
    let key = (rows.to_vec(), key_cols);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    let mut cur = cols.to_vec();
    fill_row(rows[0], 0, &mut cur, &rows[1..], binary, memo, &mut total);
    memo.insert(key, total);
    total
}

fn fill_row(
    rem: usize,
    j: usize,
    cols: &mut Vec<usize>,
    rest: &[usize],
    binary: bool,
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), u64>,
    total: &mut u64,
) {
    if rem == 0 {
        *total += count_matrices(rest, cols, binary, memo);
        return;
    }
    if j == cols.len() {
        return;
    }
    let cap = if binary { cols[j].min(1) } else { cols[j] };
    for x in 0..=cap.min(rem) {
        cols[j] -= x;
        fill_row(rem - x, j + 1, cols, rest, binary, memo, total);
        cols[j] += x;
    }
}

/// Ways to send each part of `parts` into a column so that the column sums are `cols`.
fn count_power_sum(parts: &[usize], cols: &mut Vec<usize>) -> u64 {
    match parts.split_first() {
        None => cols.iter().all(|&c| c == 0) as u64,
        Some((&p, rest)) => {
            let mut total = 0;
            for j in 0..cols.len() {
                if cols[j] >= p {
                    cols[j] -= p;
                    total += count_power_sum(rest, cols);
                    cols[j] += p;
                }
            }
            total
        }
    }
}

/// Kostka number: semistandard tableaux of shape `shape` with content `content`.
pub fn kostka(shape: &Partition, content: &[usize]) -> u64 {
    fn rec(shape: &[usize], content: &[usize], memo: &mut HashMap<(Vec<usize>, usize), u64>) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return shape.iter().all(|&p| p == 0) as u64;
        };
        let key = (shape.to_vec(), content.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        // remove a horizontal strip of size `last`
        let mut total = 0;
        let mut nu = shape.to_vec();
        strip(shape, 0, last, &mut nu, rest, memo, &mut total);
        memo.insert(key, total);
        total
    }
    fn strip(
        mu: &[usize],
        i: usize,
        rem: usize,
        nu: &mut Vec<usize>,
        rest: &[usize],
        memo: &mut HashMap<(Vec<usize>, usize), u64>,
        total: &mut u64,
    ) {
        if i == mu.len() {
            if rem == 0 {
                *total += rec(nu, rest, memo);
            }
            return;
        }
        let lower = mu.get(i + 1).copied().unwrap_or(0);
        for take in 0..=(mu[i] - lower).min(rem) {
            nu[i] = mu[i] - take;
            strip(mu, i + 1, rem - take, nu, rest, memo, total);
        }
        nu[i] = mu[i];
    }
    if shape.size() != content.iter().sum::<usize>() {
        return 0;
    }
    rec(shape.parts(), content, &mut HashMap::new())
}

fn build_to_m(basis: Basis, n: usize) -> Matrix {
    let parts = partitions(n);
    let list = &parts.list;
    let mut memo = HashMap::new();
    list.iter()
        .map(|mu| {
            list.iter()
                .map(|lam| {
                    let c = match basis {
                        Basis::M => (mu == lam) as u64,
                        Basis::H => count_matrices(mu.parts(), lam.parts(), false, &mut memo),
                        Basis::E => count_matrices(mu.parts(), lam.parts(), true, &mut HashMap::new()),
                        Basis::S => kostka(mu, lam.parts()),
                        Basis::P => count_power_sum(mu.parts(), &mut lam.parts().to_vec()),
                    };
                    QtScalar::from_ibig(c.into())
                })
                .collect()
        })
        .collect()
}

type Key = (Basis, usize, bool);

/// Rows are the elements of `basis` in degree `n`, columns the monomials; with `inverse`
/// the rows are monomials written in `basis`.
pub fn matrix(basis: Basis, n: usize, inverse: bool) -> Arc<Matrix> {
    static CACHE: OnceLock<RwLock<HashMap<Key, Arc<Matrix>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (basis, n, inverse);
    if let Some(m) = cache.read().unwrap().get(&key) {
        return m.clone();
    }
    let m = if inverse {
        let fwd = matrix(basis, n, false);
        linalg::invert(&fwd).expect("classical bases are bases")
    } else {
        build_to_m(basis, n)
    };
    cache.write().unwrap().entry(key).or_insert(Arc::new(m)).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kostka_small() {
        let p = |s: &str| s.parse::<Partition>().unwrap();
        assert_eq!(kostka(&p("2,1"), &[1, 1, 1]), 2);
        assert_eq!(kostka(&p("3,2"), &[2, 2, 1]), 2);
        assert_eq!(kostka(&p("2,2"), &[3, 1]), 0);
    }

    #[test]
    fn h_in_m() {
        // h_{21} = m_3 + 2 m_{21} + 3 m_{111}
        let m = matrix(Basis::H, 3, false);
        let row: Vec<String> = m[1].iter().map(|x| x.to_string()).collect();
        assert_eq!(row, ["1", "2", "3"]);
        let p = matrix(Basis::P, 3, false);
        let row: Vec<String> = p[2].iter().map(|x| x.to_string()).collect();
        assert_eq!(row, ["1", "3", "6"]);
    }
}
