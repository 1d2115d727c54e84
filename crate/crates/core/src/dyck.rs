//! Dyck paths, their statistics and the zeta map carrying `(area, dinv)` to `(bounce, area')`.
//!
//! Cells are named by their top-right corner `(i, j)`: column `i`, row `j`, both from 1.
//! Row `j` holds the `j`-th North step; `x_j` is the column of the cell just right of it.
//! A pair `(i, j)` with `i < j` is in the area when `x_j <= i`, which makes the
//! area set double as the attack relation between rows.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Check, VerifyReport};
use crate::shapes::Composition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

fn parse_steps(text: &str) -> Result<Vec<Step>> {
    let mut steps = Vec::new();
    for (i, c) in text.chars().enumerate() {
        match c {
            'N' | 'n' | '-' => steps.push(Step::N),
            'E' | 'e' | '+' => steps.push(Step::E),
            c if c.is_whitespace() || c == ',' => {}
            c => return Err(Error::Parse(format!("unexpected {:?} at {} in path", c, i))),
        }
    }
    Ok(steps)
}

fn steps_string(steps: &[Step], signs: bool) -> String {
    steps
        .iter()
        .map(|s| match (s, signs) {
            (Step::N, false) => 'N',
            (Step::E, false) => 'E',
            (Step::N, true) => '-',
            (Step::E, true) => '+',
        })
        .collect()
}

/// A path from `(0,0)` to `(n,n)` that never goes below the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::N { 1 } else { -1 };
            if height < 0 {
                return Err(Error::InvalidPath(format!("step {} goes below the diagonal", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath("path does not end on the diagonal".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// The path whose area sequence is `a`; needs `a_1 = 0` and `a_{j+1} <= a_j + 1`.
    pub fn from_area_sequence(a: &[usize]) -> Result<Self> {
        let n = a.len();
        let mut steps = Vec::with_capacity(2 * n);
        let mut col = 0;
        for (idx, &aj) in a.iter().enumerate() {
            let j = idx + 1;
            if aj >= j {
                return Err(Error::InvalidPath(format!("area entry {} too large in row {}", aj, j)));
            }
            let x = j - aj;
            if x < col + 1 {
                return Err(Error::InvalidPath(format!("row {} moves left", j)));
            }
            while col + 1 < x {
                steps.push(Step::E);
                col += 1;
            }
            steps.push(Step::N);
        }
        while col < n {
            steps.push(Step::E);
            col += 1;
        }
        DyckPath::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of North steps.
    pub fn size(&self) -> usize {
        self.steps.len() / 2
    }

    /// `x_j` for `j = 1..n`.
    pub fn coarea_sequence(&self) -> Vec<usize> {
        let mut col = 0;
        let mut x = Vec::with_capacity(self.size());
        for s in &self.steps {
            match s {
                Step::N => x.push(col + 1),
                Step::E => col += 1,
            }
        }
        x
    }

    /// `a_j = j - x_j`.
    pub fn area_sequence(&self) -> Vec<usize> {
        self.coarea_sequence().iter().enumerate().map(|(i, x)| i + 1 - x).collect()
    }

    pub fn area(&self) -> usize {
        self.area_sequence().iter().sum()
    }

    pub fn area_set(&self) -> BTreeSet<(usize, usize)> {
        let x = self.coarea_sequence();
        let mut out = BTreeSet::new();
        for (idx, &xj) in x.iter().enumerate() {
            for i in xj..idx + 1 {
                out.insert((i, idx + 1));
            }
        }
        out
    }

    /// Pairs `(i, j)`, `i < j`, read off the area set as a list.
    pub fn area_pairs(&self) -> Vec<(usize, usize)> {
        self.area_set().into_iter().collect()
    }

    pub fn dinv_set(&self) -> BTreeSet<(usize, usize)> {
        let a = self.area_sequence();
        let n = a.len();
        let mut out = BTreeSet::new();
        for j in 0..n {
            for jp in 0..n {
                let same = j < jp && a[j] == a[jp];
                let next = jp < j && a[jp] == a[j] + 1;
                if same || next {
                    out.insert((j + 1, jp + 1));
                }
            }
        }
        out
    }

    pub fn dinv(&self) -> usize {
        self.dinv_set().len()
    }

    /// Gaps between consecutive zeros of the area sequence.
    pub fn touch(&self) -> Composition {
        let a = self.area_sequence();
        let mut zeros: Vec<usize> = a.iter().enumerate().filter(|(_, &v)| v == 0).map(|(i, _)| i).collect();
        zeros.push(a.len());
        let parts = zeros.windows(2).map(|w| w[1] - w[0]).collect();
        Composition::new(parts).expect("gaps are positive")
    }

    /// Valleys `E N`; the corner above row `j` is the pair `(x_j - 1, j)`.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let x = self.coarea_sequence();
        (1..x.len()).filter(|&i| x[i] > x[i - 1]).map(|i| (x[i] - 1, i + 1)).collect()
    }

    fn valley_index(&self, corner: (usize, usize)) -> Option<usize> {
        // index of the E step preceding the North step of row corner.1
        let mut rows = 0;
        for (idx, s) in self.steps.iter().enumerate() {
            if *s == Step::N {
                rows += 1;
                if rows == corner.1 {
                    let ok = idx > 0 && self.steps[idx - 1] == Step::E && self.coarea_sequence()[rows - 1] == corner.0 + 1;
                    return ok.then_some(idx - 1);
                }
            }
        }
        None
    }

    /// Turns each listed corner inside out, adding its cell to the area.
    pub fn flip_corners(&self, corners: &[(usize, usize)]) -> Result<DyckPath> {
        let mut steps = self.steps.clone();
        for &c in corners {
            let idx = self
                .valley_index(c)
                .ok_or_else(|| Error::InvalidPath(format!("({},{}) is not a corner", c.0, c.1)))?;
            steps.swap(idx, idx + 1);
        }
        DyckPath::new(steps)
    }

    /// N and E exchanged and the order reversed.
    pub fn reverse(&self) -> DyckPath {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match s {
                Step::N => Step::E,
                Step::E => Step::N,
            })
            .collect();
        DyckPath { steps }
    }

    /// Reading order position of each row: sort by `a_j`, ties by `j`.
    pub fn reading_permutation(&self) -> Vec<usize> {
        let a = self.area_sequence();
        let mut order: Vec<usize> = (0..a.len()).collect();
        order.sort_by_key(|&j| (a[j], j));
        let mut sigma = vec![0; a.len()];
        for (pos, &j) in order.iter().enumerate() {
            sigma[j] = pos + 1;
        }
        sigma
    }

    /// The image under zeta together with the reading permutation `sigma` (1-based values).
    pub fn zeta(&self) -> (DyckPath, Vec<usize>) {
        let sigma = self.reading_permutation();
        let mut a = vec![0; sigma.len()];
        for (j, jp) in self.dinv_set() {
            let (lo, hi) = (sigma[j - 1], sigma[jp - 1]);
            debug_assert!(lo < hi, "attacks follow the reading order");
            a[hi.max(lo) - 1] += 1;
        }
        let image = DyckPath::from_area_sequence(&a).expect("image of an attack set is a Dyck path");
        (image, sigma)
    }

    /// Block index of every diagonal cell under the bounce path.
    pub fn bounce_sequence(&self) -> Vec<usize> {
        let x = self.coarea_sequence();
        let n = x.len();
        let mut b = vec![0; n];
        let mut height = 0;
        let mut block = 0;
        while height < n {
            let next = x.iter().filter(|&&xj| xj <= height + 1).count();
            for v in b.iter_mut().take(next).skip(height) {
                *v = block;
            }
            height = next;
            block += 1;
        }
        b
    }

    pub fn bounce(&self) -> usize {
        self.bounce_sequence().iter().sum()
    }

    /// The numbers `t_0, ..., t_l` whose differences make up `touch'`.
    pub fn touch_prime_bounces(&self) -> Vec<usize> {
        if self.steps.is_empty() {
            return vec![0];
        }
        let l = self.steps.iter().take_while(|s| **s == Step::N).count();
        let tail = &self.steps[l + 1..];
        (0..=l)
            .map(|i| {
                let mut steps = vec![Step::N; i + 1];
                steps.push(Step::E);
                steps.extend(std::iter::repeat(Step::N).take(l - i));
                steps.push(Step::E);
                steps.extend_from_slice(tail);
                DyckPath::new(steps).expect("prefix keeps the path valid").bounce()
            })
            .collect()
    }

    pub fn touch_prime(&self) -> Composition {
        let t = self.touch_prime_bounces();
        Composition::new(t.windows(2).map(|w| w[0] - w[1]).collect()).expect("bounces strictly decrease")
    }

    /// `inv` of an arbitrary labelling: area pairs `(i, j)` with `w_i > w_j`.
    pub fn inv(&self, w: &[usize]) -> usize {
        let x = self.coarea_sequence();
        let mut count = 0;
        for (j, &xj) in x.iter().enumerate() {
            for i in xj..j + 1 {
                if w[i - 1] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Membership in `WP'`: labels strictly decrease across every corner.
    pub fn is_wp_prime(&self, w: &[usize]) -> bool {
        w.len() == self.size() && self.corners().iter().all(|&(i, j)| w[i - 1] > w[j - 1])
    }

    /// Membership in `WP`: labels strictly decrease up each column.
    pub fn is_wp(&self, w: &[usize]) -> bool {
        let x = self.coarea_sequence();
        w.len() == x.len() && (1..x.len()).all(|j| x[j] != x[j - 1] || w[j - 1] > w[j])
    }

    /// `dinv(pi, w)`: Dinv pairs `(j, j')` with `w_j > w_j'`.
    pub fn dinv_of(&self, w: &[usize]) -> usize {
        self.dinv_set().into_iter().filter(|&(j, jp)| w[j - 1] > w[jp - 1]).count()
    }

    /// Every `w in WP'` with labels in `1..=max_label`, paired with `inv`.
    pub fn wp_enumerate(&self, max_label: usize) -> Vec<(LabeledWord, usize)> {
        let n = self.size();
        let mut out = Vec::new();
        if max_label == 0 && n > 0 {
            return out;
        }
        let mut w = vec![1; n];
        loop {
            if self.is_wp_prime(&w) {
                out.push((LabeledWord { path: self.clone(), labels: w.clone() }, self.inv(&w)));
            }
            // odometer, last coordinate fastest
            let mut pos = n;
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if w[pos] < max_label {
                    w[pos] += 1;
                    break;
                }
                w[pos] = 1;
            }
        }
    }

    pub fn to_signs(&self) -> String {
        steps_string(&self.steps, true)
    }

    pub fn stats(&self) -> PathStats {
        let (image, sigma) = self.zeta();
        PathStats {
            path: self.to_string(),
            area_seq: self.area_sequence(),
            coarea_seq: self.coarea_sequence(),
            area: self.area(),
            dinv_set: self.dinv_set().into_iter().collect(),
            dinv: self.dinv(),
            touch: self.touch().parts().to_vec(),
            corners: self.corners(),
            bounce_seq: self.bounce_sequence(),
            bounce: self.bounce(),
            touch_prime: self.touch_prime().parts().to_vec(),
            zeta: image.to_string(),
            sigma,
        }
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_string(&self.steps, false))
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_steps(s)?)
    }
}

/// All paths of length `n`, in lexicographic order with `N < E`.
pub fn enumerate_paths(n: usize) -> Vec<DyckPath> {
    fn rec(n: usize, ups: usize, downs: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if ups == n && downs == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if ups < n {
            cur.push(Step::N);
            rec(n, ups + 1, downs, cur, out);
            cur.pop();
        }
        if downs < ups {
            cur.push(Step::E);
            rec(n, ups, downs + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// Paths of length `|alpha|` with `touch' = alpha`.
pub fn paths_with_touch_prime(alpha: &Composition) -> Vec<DyckPath> {
    enumerate_paths(alpha.size()).into_iter().filter(|p| p.touch_prime() == *alpha).collect()
}

/// A path from `(0,k)` to `(n,n)`; its rows are numbered as in the full path `N^k pi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialDyckPath {
    start: usize,
    steps: Vec<Step>,
}

impl PartialDyckPath {
    pub fn new(start: usize, steps: Vec<Step>) -> Result<Self> {
        let mut full = vec![Step::N; start];
        full.extend_from_slice(&steps);
        DyckPath::new(full)?;
        Ok(PartialDyckPath { start, steps })
    }

    pub fn parse(text: &str, start: usize) -> Result<Self> {
        Self::new(start, parse_steps(text)?)
    }

    pub fn start_height(&self) -> usize {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of North steps.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::N).count()
    }

    /// `N^k pi`.
    pub fn completed(&self) -> DyckPath {
        let mut full = vec![Step::N; self.start];
        full.extend_from_slice(&self.steps);
        DyckPath { steps: full }
    }

    /// Prepends one step; `E` raises the start height, `N` lowers it.
    pub fn prepend(&self, step: Step) -> Result<Self> {
        let mut steps = vec![step];
        steps.extend_from_slice(&self.steps);
        match step {
            Step::E => Self::new(self.start + 1, steps),
            Step::N if self.start > 0 => Self::new(self.start - 1, steps),
            Step::N => Err(Error::InvalidPath("cannot lower a path starting at height 0".into())),
        }
    }
}

impl From<DyckPath> for PartialDyckPath {
    fn from(p: DyckPath) -> Self {
        PartialDyckPath { start: 0, steps: p.steps }
    }
}

impl fmt::Display for PartialDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&steps_string(&self.steps, false))
    }
}

/// Every partial path from height `k` with `n` North steps.
pub fn enumerate_partial(k: usize, n: usize) -> Vec<PartialDyckPath> {
    enumerate_paths(n + k)
        .into_iter()
        .filter(|p| p.steps[..k].iter().all(|s| *s == Step::N))
        .map(|p| PartialDyckPath { start: k, steps: p.steps[k..].to_vec() })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledWord {
    #[serde(with = "path_string")]
    pub path: DyckPath,
    pub labels: Vec<usize>,
}

mod path_string {
    use super::DyckPath;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(p: &DyckPath, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<DyckPath, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Everything `stats` reports about one path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathStats {
    pub path: String,
    pub area_seq: Vec<usize>,
    pub coarea_seq: Vec<usize>,
    pub area: usize,
    pub dinv_set: Vec<(usize, usize)>,
    pub dinv: usize,
    pub touch: Vec<usize>,
    pub corners: Vec<(usize, usize)>,
    pub bounce_seq: Vec<usize>,
    pub bounce: usize,
    pub touch_prime: Vec<usize>,
    pub zeta: String,
    pub sigma: Vec<usize>,
}

/// The zeta statistics for every path of size at most `n`: `area` goes to `bounce`, `dinv`
/// to `area`, `touch` to `touch'`, the bounce sequence along `sigma` is the area sequence, and
/// zeta is injective.
pub fn verify_bijection(n: usize) -> VerifyReport {
    let names = ["area = bounce(zeta)", "dinv = area(zeta)", "touch = touch'(zeta)", "b[sigma] = a", "zeta injective"];
    let mut checks: Vec<Check> = names.iter().map(|s| Check::new(s)).collect();
    for size in 0..=n {
        let paths = enumerate_paths(size);
        let mut images = BTreeSet::new();
        for pi in &paths {
            let (img, sigma) = pi.zeta();
            let a = pi.area_sequence();
            let b = img.bounce_sequence();
            checks[0].record(pi.area() == img.bounce(), || pi.to_string());
            checks[1].record(pi.dinv() == img.area(), || pi.to_string());
            checks[2].record(pi.touch() == img.touch_prime(), || pi.to_string());
            checks[3].record((0..size).all(|i| b[sigma[i] - 1] == a[i]), || pi.to_string());
            images.insert(img);
        }
        checks[4].record(images.len() == paths.len(), || format!("size {}", size));
    }
    VerifyReport::new(n, checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    const EX: &str = "NENNNENNEEEENNEE";

    #[test]
    fn worked_path() {
        let pi = p(EX);
        assert_eq!(pi.area_sequence(), vec![0, 0, 1, 2, 2, 3, 0, 1]);
        assert_eq!(pi.coarea_sequence(), vec![1, 2, 2, 2, 3, 3, 7, 7]);
        assert_eq!(pi.area(), 9);
        assert_eq!(pi.dinv(), 8);
        let d: Vec<_> = pi.dinv_set().into_iter().collect();
        assert_eq!(d, vec![(1, 2), (1, 7), (2, 7), (3, 8), (4, 5), (7, 3), (8, 4), (8, 5)]);
        assert_eq!(pi.touch().parts(), &[1, 5, 2]);
        let w = [9, 5, 2, 1, 5, 2, 3, 2];
        assert!(pi.is_wp(&w));
        assert_eq!(pi.dinv_of(&w), 5);
    }

    #[test]
    fn zeta_image() {
        let (image, sigma) = p(EX).zeta();
        assert_eq!(sigma, vec![1, 2, 4, 6, 7, 8, 3, 5]);
        assert_eq!(image.to_string(), "NNNEENENENNEEENE");
        assert_eq!(image.bounce_sequence(), vec![0, 0, 0, 1, 1, 2, 2, 3]);
        assert_eq!(image.touch_prime_bounces(), vec![17, 16, 11, 9]);
        assert_eq!(image.corners(), vec![(2, 4), (3, 5), (4, 6), (7, 8)]);
        let w = [9, 5, 3, 2, 2, 1, 5, 2];
        assert!(image.is_wp_prime(&w));
        assert_eq!(image.inv(&w), 5);
    }

    #[test]
    fn small_cases() {
        assert!("EN".parse::<DyckPath>().is_err());
        assert!("NX".parse::<DyckPath>().is_err());
        assert_eq!(p("NE").touch().parts(), &[1]);
        assert_eq!(p("NENENE").bounce_sequence(), vec![0, 1, 2]);
        assert_eq!(p("NNEE").reverse(), p("NNEE"));
        assert_eq!(p("NENE").reverse(), p("NENE"));
        assert_eq!(p("NENE").flip_corners(&[(1, 2)]).unwrap(), p("NNEE"));
        assert!(p("NENE").flip_corners(&[(1, 3)]).is_err());
        assert_eq!(p("--++-+"), p("NNEENE"));
        assert_eq!(enumerate_paths(3).len(), 5);
        assert_eq!(enumerate_paths(0), vec![DyckPath::empty()]);
        assert_eq!(p("NE").touch_prime().parts(), &[1]);
    }

    #[test]
    fn unique_path_with_touch_prime_12() {
        let a: Composition = "1,2".parse().unwrap();
        assert_eq!(paths_with_touch_prime(&a), vec![p("NNEENE")]);
        assert_eq!(p("NNEENE").bounce(), 1);
        assert_eq!(p("NNEENE").corners(), vec![(2, 3)]);
    }

    #[test]
    fn wp_prime_words() {
        let w = p("NE").wp_enumerate(2);
        assert_eq!(w.iter().map(|(l, i)| (l.labels.clone(), *i)).collect::<Vec<_>>(), vec![(vec![1], 0), (vec![2], 0)]);
        // NENE has the single corner (1,2) and no area
        let w = p("NENE").wp_enumerate(2);
        assert_eq!(w.iter().map(|(l, i)| (l.labels.clone(), *i)).collect::<Vec<_>>(), vec![(vec![2, 1], 0)]);
        // NNEE has no corner, so every word counts
        let w = p("NNEE").wp_enumerate(2);
        assert_eq!(w.len(), 4);
        assert_eq!(w.iter().filter(|(_, i)| *i == 1).count(), 1);
    }

    #[test]
    fn partial_paths() {
        assert_eq!(enumerate_partial(0, 3).len(), 5);
        let e = PartialDyckPath::parse("E", 1).unwrap();
        assert_eq!(e.size(), 0);
        assert!(PartialDyckPath::parse("EE", 1).is_err());
        assert_eq!(e.prepend(Step::N).unwrap().completed(), p("NE"));
    }
}
