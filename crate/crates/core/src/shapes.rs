//! Partitions and compositions.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition stored as its positive parts in weakly decreasing order.
///
/// Ordering is by size first and then reverse lexicographic, so the partitions of `n`
/// come out as `(n), (n-1,1), ...`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let parts: Vec<usize> = parts.into_iter().filter(|&p| p > 0).collect();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{:?} is not weakly decreasing", parts)));
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` counted from 1, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.0.first().copied().unwrap_or(0);
        Partition((1..=w).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }

    /// `sum (i-1) lambda_i`.
    pub fn n(&self) -> usize {
        self.0.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Cells `(row, column)` in English notation, both counted from 1.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// Cells strictly to the right of `(i, j)`. English convention: row 1 is the longest.
    pub fn arm(&self, i: usize, j: usize) -> usize {
        self.part(i) - j
    }

    /// Cells strictly below `(i, j)`.
    pub fn leg(&self, i: usize, j: usize) -> usize {
        self.0.iter().filter(|&&p| p >= j).count() - i
    }

    /// `(arm, leg)` of a cell, with an error for cells outside the diagram.
    pub fn arm_leg(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        if !self.contains_cell(i, j) {
            return Err(Error::InvalidShape(format!("cell ({},{}) outside {}", i, j, self)));
        }
        Ok((self.arm(i, j), self.leg(i, j)))
    }

    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.0.get(i).copied().unwrap_or(0);
            b += other.0.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiplicities `m_i` for `i = 1..=max part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.0.first().copied().unwrap_or(0) + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// `z_lambda = prod i^{m_i} m_i!`.
    pub fn z(&self) -> u128 {
        let mut z: u128 = 1;
        for (i, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for k in 1..=m {
                z *= (i * k) as u128;
            }
        }
        z
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Partition::from_unsorted(v)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, largest first in lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {:?}", x))))
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if parts.contains(&0) {
            return Err(Error::InvalidShape("zero part".into()));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.contains(&0) {
            return Err(serde::de::Error::custom("zero part in partition"));
        }
        Partition::new(v).map_err(serde::de::Error::custom)
    }
}

/// A composition: a finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{:?} has a zero part", parts)));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }

    /// All `2^(n-1)` compositions of `n`, in decreasing lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition(Vec::new())];
        }
        let mut out: Vec<Composition> = (0..1u64 << (n - 1))
            .map(|mask| {
                let mut parts = Vec::new();
                let mut cur = 1;
                for i in 0..n - 1 {
                    if mask >> (n - 2 - i) & 1 == 1 {
                        parts.push(cur);
                        cur = 1;
                    } else {
                        cur += 1;
                    }
                }
                parts.push(cur);
                Composition(parts)
            })
            .collect();
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Composition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// Distinct rearrangements of `items`, in lexicographic order.
pub fn multiset_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = items.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    loop {
        let n = cur.len();
        if n < 2 {
            return out;
        }
        let mut i = n - 1;
        while i > 0 && cur[i - 1] >= cur[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = n - 1;
        while cur[j] <= cur[i - 1] {
            j -= 1;
        }
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Composition::all(5).len(), 16);
        let c3: Vec<String> = Composition::all(3).iter().map(|c| c.to_string()).collect();
        assert_eq!(c3, ["3", "2,1", "1,2", "1,1,1"]);
        assert_eq!(Composition::all(0), vec![Composition::default()]);
        assert_eq!(multiset_permutations(&[1, 1, 2, 3]).len(), 12);
    }

    #[test]
    fn arm_leg() {
        let mu: Partition = "(3,1)".parse().unwrap();
        assert_eq!(mu.arm(1, 1), 2);
        assert_eq!(mu.leg(1, 1), 1);
        assert_eq!(mu.leg(1, 2), 0);
        assert_eq!(mu.conjugate().parts(), &[2, 1, 1]);
        assert_eq!(mu.n(), 1);
        assert_eq!(mu.z(), 3);
        assert_eq!("2,2".parse::<Partition>().unwrap().arm_leg(1, 1), Ok((1, 1)));
        assert!(mu.arm_leg(2, 2).is_err());
    }

    #[test]
    fn ordering() {
        assert_eq!(Partition::all(3).iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["3", "2,1", "1,1,1"]);
        let mut v = Partition::all(3);
        v.reverse();
        v.sort();
        assert_eq!(v, Partition::all(3));
    }
}
