//! Hessenberg functions and the tuples and diagrams derived from them.
//!
//! Values of `h` and the indices `i` they are evaluated at are 1-based,
//! matching the numbers `1..=n` that appear in fillings.

use std::fmt;

use crate::error::{Constraint, Error, Result};

/// A nondecreasing map `h: {1..n} -> {1..n}` with `h(i) >= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HessenbergFunction {
    values: Vec<usize>,
}

impl HessenbergFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyHessenberg);
        }
        for (k, &v) in values.iter().enumerate() {
            let i = k + 1;
            if v < i || v > n {
                return Err(Error::ConstraintViolation {
                    index: i,
                    constraint: Constraint::Bounds,
                });
            }
            if k > 0 && values[k - 1] > v {
                return Err(Error::ConstraintViolation {
                    index: i,
                    constraint: Constraint::Monotone,
                });
            }
        }
        Ok(Self { values })
    }

    /// The minimal function `(1, 2, ..., n)`; its fillings are the row-strict ones.
    pub fn springer(n: usize) -> Self {
        assert!(n > 0);
        Self {
            values: (1..=n).collect(),
        }
    }

    /// The maximal function `(n, ..., n)`; every filling is permissible.
    pub fn full(n: usize) -> Self {
        assert!(n > 0);
        Self { values: vec![n; n] }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// `h(i)` for `1 <= i <= n`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn is_springer(&self) -> bool {
        self.values.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn degree_tuple(&self) -> DegreeTuple {
        let n = self.n();
        let betas = (1..=n)
            .map(|i| i - self.values.iter().filter(|&&hk| hk < i).count())
            .collect();
        DegreeTuple { betas }
    }

    /// `nu_i = h_i - i + 1`, the column lengths of the Hessenberg diagram.
    pub fn nu_tuple(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &v)| v - k)
            .collect()
    }

    pub fn diagram(&self) -> HessenbergDiagram {
        HessenbergDiagram { h: self.clone() }
    }
}

impl std::str::FromStr for HessenbergFunction {
    type Err = Error;

    /// `3,3,3,4`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        HessenbergFunction::new(crate::shape::parse_usize_list(s)?)
    }
}

impl fmt::Display for HessenbergFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.values))
    }
}

/// `beta_i = i - #{k : h_k < i}`, stored by increasing `i`.
///
/// `Display` uses the conventional order `(beta_n, ..., beta_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTuple {
    betas: Vec<usize>,
}

impl DegreeTuple {
    pub fn n(&self) -> usize {
        self.betas.len()
    }

    /// `beta_i` for `1 <= i <= n`.
    #[inline]
    pub fn beta(&self, i: usize) -> usize {
        self.betas[i - 1]
    }

    /// `(beta_1, ..., beta_n)`.
    pub fn as_slice(&self) -> &[usize] {
        &self.betas
    }

    pub fn product(&self) -> u64 {
        self.betas.iter().map(|&b| b as u64).product()
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rev: Vec<usize> = self.betas.iter().rev().copied().collect();
        write!(f, "({})", join(&rev))
    }
}

/// The lower part of the `n x n` grid whose column `i` is shaded in rows `i..=h_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergDiagram {
    h: HessenbergFunction,
}

impl HessenbergDiagram {
    /// Whether the box in `row`, `col` (both 1-based) is shaded.
    pub fn is_shaded(&self, row: usize, col: usize) -> bool {
        col <= row && row <= self.h.at(col)
    }

    /// Shaded boxes per column, left to right.
    pub fn column_lengths(&self) -> Vec<usize> {
        let n = self.h.n();
        (1..=n)
            .map(|c| (1..=n).filter(|&r| self.is_shaded(r, c)).count())
            .collect()
    }

    /// Shaded boxes per row, top to bottom.
    pub fn row_lengths(&self) -> Vec<usize> {
        let n = self.h.n();
        (1..=n)
            .map(|r| (1..=n).filter(|&c| self.is_shaded(r, c)).count())
            .collect()
    }
}

impl fmt::Display for HessenbergDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.h.n();
        for r in 1..=n {
            let line: String = (1..=n)
                .map(|c| if self.is_shaded(r, c) { '#' } else { '.' })
                .collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Every Hessenberg function of size `n`, in lexicographic order of values.
///
/// There are Catalan(n) of them.
pub fn hessenberg_functions(n: usize) -> Vec<HessenbergFunction> {
    fn extend(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<HessenbergFunction>) {
        let i = prefix.len() + 1;
        if i > n {
            out.push(HessenbergFunction {
                values: prefix.clone(),
            });
            return;
        }
        let lo = prefix.last().copied().unwrap_or(1).max(i);
        for v in lo..=n {
            prefix.push(v);
            extend(n, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        extend(n, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

pub(crate) fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
