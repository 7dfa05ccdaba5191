use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `x_1^a_1 * ... * x_n^a_n`, stored as the exponent vector.
///
/// Variables are numbered from 1. The derived ordering compares exponent
/// vectors lexicographically, which is lex order with `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars],
        }
    }

    /// `x_var^exp` in `nvars` variables.
    pub fn var_pow(nvars: usize, var: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var - 1] = exp;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_var`.
    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn set_exp(&mut self, var: usize, exp: u32) {
        self.exps[var - 1] = exp;
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is `x_i^e` with `e > 0`, returns `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut nonzero = self.exps.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((k, _)), None) => Some(k + 1),
            _ => None,
        }
    }

    /// Parses `x2*x4^2` (or `1`) into a monomial in `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Monomial> {
        let s = s.trim();
        let mut m = Monomial::one(nvars);
        if s == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let (var, exp) = parse_factor(factor)?;
            if var == 0 || var > nvars {
                return Err(Error::Parse(format!(
                    "variable x{var} out of range 1..={nvars}"
                )));
            }
            m.exps[var - 1] += exp;
        }
        Ok(m)
    }

    /// Sort key for listings: by degree, then lex-descending.
    pub fn graded_key(&self) -> (u32, std::cmp::Reverse<&[u32]>) {
        (self.degree(), std::cmp::Reverse(self.exps.as_slice()))
    }
}

fn parse_factor(factor: &str) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("bad monomial factor {factor:?}"));
    let rest = factor.strip_prefix('x').ok_or_else(bad)?;
    let (var, exp) = match rest.split_once('^') {
        Some((v, e)) => (v, e.trim().parse::<u32>().map_err(|_| bad())?),
        None => (rest, 1),
    };
    Ok((var.trim().parse::<usize>().map_err(|_| bad())?, exp))
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", k + 1)?;
            } else {
                write!(f, "x{}^{}", k + 1, e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sorts monomials by degree, lex-descending within a degree.
pub fn sort_graded(ms: &mut [Monomial]) {
    ms.sort_by(|a, b| a.graded_key().cmp(&b.graded_key()));
}
