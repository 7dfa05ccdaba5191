use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// An element of `Z[x_1, ..., x_n]`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(m.nvars());
        p.add_term(m, c.into());
        p
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn variable(nvars: usize, var: usize) -> Self {
        Self::from_monomial(Monomial::var_pow(nvars, var, 1))
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::SizeMismatch {
                    expected: nvars,
                    found: m.nvars(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in descending lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The lex-largest term.
    pub fn leading_term(&self) -> Result<(&Monomial, &BigInt)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `c * m * self`.
    pub fn scale(&self, c: &BigInt, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), d * c)).collect(),
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Parses the text form (`x3^2 - x4^2`, `3*x2 + 1`, `0`).
    pub fn parse(s: &str, nvars: usize) -> Result<Polynomial> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Polynomial::zero(nvars);
        // Split into signed chunks at top-level '+' / '-'.
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        let mut seen_sign = false;
        for ch in s.chars() {
            if ch == '+' || ch == '-' {
                if !cur.trim().is_empty() {
                    chunks.push((negative, std::mem::take(&mut cur)));
                } else if !chunks.is_empty() || seen_sign {
                    return Err(Error::Parse(format!("repeated sign in {s:?}")));
                }
                cur.clear();
                seen_sign = true;
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.trim().is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        chunks.push((negative, cur));
        for (neg, chunk) in chunks {
            let (c, m) = parse_term(chunk.trim(), nvars)?;
            p.add_term(m, if neg { -c } else { c });
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<JsonTerm> = self
            .terms()
            .map(|(m, c)| JsonTerm {
                exps: m.exps().to_vec(),
                coef: serde_json::Number::from_str(&c.to_string())
                    .expect("integer literal is a JSON number"),
            })
            .collect();
        serde_json::to_value(terms).expect("terms serialize")
    }

    pub fn from_json(v: &serde_json::Value, nvars: usize) -> Result<Polynomial> {
        let terms: Vec<JsonTerm> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let parsed = terms
            .into_iter()
            .map(|t| {
                let c = BigInt::from_str(&t.coef.to_string()).map_err(|_| {
                    Error::Parse(format!("coefficient {} is not an integer", t.coef))
                })?;
                Ok((Monomial::new(t.exps), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(nvars, parsed)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exps: Vec<u32>,
    coef: serde_json::Number,
}

fn parse_term(t: &str, nvars: usize) -> Result<(BigInt, Monomial)> {
    let bad = || Error::Parse(format!("bad term {t:?}"));
    let mut factors = t.split('*').map(str::trim).peekable();
    let first = factors.peek().copied().ok_or_else(bad)?;
    let coef = if first.chars().next().is_some_and(|c| c.is_ascii_digit()) {
        factors.next();
        BigInt::from_str(first).map_err(|_| bad())?
    } else {
        BigInt::one()
    };
    let rest = factors.join("*");
    let m = if rest.is_empty() {
        Monomial::one(nvars)
    } else {
        Monomial::parse(&rest, nvars)?
    };
    Ok((coef, m))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let abs = c.abs();
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars);
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(m.mul(n), c * d);
            }
        }
        out
    }
}

/// `e~_r(x_s : s in vars)`: every monomial of degree `r` in `vars`, each
/// with coefficient 1.
pub fn modified_complete_symmetric(r: u32, vars: &[usize], nvars: usize) -> Polynomial {
    assert!(!vars.is_empty(), "variable set must be nonempty");
    let mut p = Polynomial::zero(nvars);
    for combo in vars.iter().combinations_with_replacement(r as usize) {
        let mut m = Monomial::one(nvars);
        for &v in combo {
            m.set_exp(v, m.exp(v) + 1);
        }
        p.add_term(m, BigInt::one());
    }
    p
}
