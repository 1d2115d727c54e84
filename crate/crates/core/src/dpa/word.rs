//! Words in the generators, applied rightmost-first.

use std::fmt;
use std::str::FromStr;

use super::ops::{d_minus, d_plus, d_plus_star, t_op, y_mul, z_op};
use super::VElem;
use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};
use crate::qtring::{qt, QtScalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gen {
    DPlus,
    DMinus,
    DPlusStar,
    T(usize),
    TInv(usize),
    Y(usize),
    Z(usize),
    /// `(d_- d_+ - d_+ d_-)/(q-1)`, the corner operator.
    Bracket,
    Scalar(QtScalar),
}

impl Gen {
    pub fn apply(&self, f: &VElem) -> Result<VElem> {
        match self {
            Gen::DPlus => d_plus(f),
            Gen::DMinus => d_minus(f),
            Gen::DPlusStar => d_plus_star(f),
            Gen::T(i) => t_op(*i, f, false),
            Gen::TInv(i) => t_op(*i, f, true),
            Gen::Y(i) => y_mul(*i, f),
            Gen::Z(i) => z_op(*i, f),
            Gen::Bracket => {
                let a = d_minus(&d_plus(f)?)?;
                let b = d_plus(&d_minus(f)?)?;
                Ok((&a - &b).scale(&qt("1/(q - 1)")))
            }
            Gen::Scalar(c) => Ok(f.scale(c)),
        }
    }

    /// Change in level caused by this generator.
    pub fn level_shift(&self) -> i64 {
        match self {
            Gen::DPlus | Gen::DPlusStar => 1,
            Gen::DMinus => -1,
            _ => 0,
        }
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::DPlus => write!(f, "d+"),
            Gen::DMinus => write!(f, "d-"),
            Gen::DPlusStar => write!(f, "d+*"),
            Gen::T(i) => write!(f, "T{}", i),
            Gen::TInv(i) => write!(f, "T{}^-1", i),
            Gen::Y(i) => write!(f, "y{}", i),
            Gen::Z(i) => write!(f, "z{}", i),
            Gen::Bracket => write!(f, "[d-,d+]"),
            Gen::Scalar(c) => write!(f, "({})", c.to_string().replace(' ', "")),
        }
    }
}

impl FromStr for Gen {
    type Err = Error;
    fn from_str(s: &str) -> Result<Gen> {
        let bad = || Error::Parse(format!("unknown generator {:?}", s));
        let index = |rest: &str| rest.parse::<usize>().map_err(|_| bad());
        Ok(match s {
            "d+" => Gen::DPlus,
            "d-" => Gen::DMinus,
            "d+*" => Gen::DPlusStar,
            "[d-,d+]" => Gen::Bracket,
            _ if s.starts_with('(') && s.ends_with(')') => Gen::Scalar(s[1..s.len() - 1].parse()?),
            _ if s.starts_with('T') && s.ends_with("^-1") => Gen::TInv(index(&s[1..s.len() - 3])?),
            _ if s.starts_with('T') => Gen::T(index(&s[1..])?),
            _ if s.starts_with('y') => Gen::Y(index(&s[1..])?),
            _ if s.starts_with('z') => Gen::Z(index(&s[1..])?),
            _ => return Err(bad()),
        })
    }
}

/// A sequence of generators; the last one acts first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenWord(pub Vec<Gen>);

impl GenWord {
    pub fn new(gens: Vec<Gen>) -> Self {
        GenWord(gens)
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    /// Level reached when the word is applied at `start`, or an error if it ever goes negative.
    pub fn end_level(&self, start: usize) -> Result<usize> {
        let mut level = start as i64;
        for g in self.0.iter().rev() {
            level += g.level_shift();
            if level < 0 {
                return Err(Error::OperatorUndefined { op: g.to_string(), level: 0 });
            }
        }
        Ok(level as usize)
    }

    /// The compact `+`/`-` form, available when the word only uses `d_+` and `d_-`.
    pub fn to_signs(&self) -> Option<String> {
        self.0
            .iter()
            .map(|g| match g {
                Gen::DPlus => Some('+'),
                Gen::DMinus => Some('-'),
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for GenWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<GenWord> {
        let s = s.trim();
        if !s.is_empty() && s.chars().all(|c| c == '+' || c == '-') {
            return Ok(GenWord(s.chars().map(|c| if c == '+' { Gen::DPlus } else { Gen::DMinus }).collect()));
        }
        s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>().map(GenWord)
    }
}

/// Applies `word` to `f`, rightmost generator first.
pub fn apply_word(word: &GenWord, f: &VElem) -> Result<VElem> {
    word.end_level(f.level())?;
    let mut cur = f.clone();
    for g in word.0.iter().rev() {
        cur = g.apply(&cur)?;
    }
    Ok(cur)
}

/// Reads the steps left to right with East as `d_+` and North as `d_-`.
pub fn path_word(steps: &[Step]) -> GenWord {
    GenWord(steps.iter().map(|s| if *s == Step::E { Gen::DPlus } else { Gen::DMinus }).collect())
}

/// Like [`path_word`], but every corner `E N` becomes the bracket `[d_-, d_+]/(q-1)`.
pub fn corner_word(path: &DyckPath) -> GenWord {
    let steps = path.steps();
    let mut gens = Vec::with_capacity(steps.len());
    let mut i = 0;
    while i < steps.len() {
        if steps[i] == Step::E && steps.get(i + 1) == Some(&Step::N) {
            gens.push(Gen::Bracket);
            i += 2;
        } else {
            gens.push(if steps[i] == Step::E { Gen::DPlus } else { Gen::DMinus });
            i += 1;
        }
    }
    GenWord(gens)
}
