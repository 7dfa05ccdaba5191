//! Row shapes (partitions and compositions) and the dimension-ordering of
//! their far-right boxes.
//!
//! Box coordinates are 0-based `(row, col)`: row 0 is the top row, column 0
//! the leftmost column, and every row is flush left.

use std::fmt;

use crate::error::{Error, Result};
use crate::hessenberg::join;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeKind {
    Partition,
    Composition,
}

/// Row lengths, top row first. Zero-length rows are kept.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    rows: Vec<usize>,
}

impl Shape {
    /// Any sequence of row lengths, zeros allowed.
    pub fn composition(rows: Vec<usize>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidShape("no rows".into()));
        }
        Ok(Self { rows })
    }

    /// Weakly decreasing, strictly positive row lengths.
    pub fn partition(rows: Vec<usize>) -> Result<Self> {
        let shape = Self::composition(rows)?;
        if shape.kind() != ShapeKind::Partition {
            return Err(Error::InvalidShape(format!(
                "({}) is not a partition",
                join(&shape.rows)
            )));
        }
        Ok(shape)
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        Self { rows: vec![n] }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn kind(&self) -> ShapeKind {
        let decreasing = self.rows.windows(2).all(|w| w[0] >= w[1]);
        if decreasing && self.rows.iter().all(|&r| r > 0) {
            ShapeKind::Partition
        } else {
            ShapeKind::Composition
        }
    }

    pub fn is_partition(&self) -> bool {
        self.kind() == ShapeKind::Partition
    }

    pub fn nonzero_rows(&self) -> usize {
        self.rows.iter().filter(|&&r| r > 0).count()
    }

    /// All boxes in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(row, &len)| (0..len).map(move |col| Cell::new(row, col)))
    }

    /// Far-right boxes of the nonzero rows, rightmost column first and top to
    /// bottom within a column. Entry `k` has dimension-order `k + 1`.
    pub fn dimension_ordering(&self) -> Vec<Cell> {
        let mut ends: Vec<Cell> = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &len)| len > 0)
            .map(|(row, &len)| Cell::new(row, len - 1))
            .collect();
        ends.sort_by(|a, b| b.col.cmp(&a.col).then(a.row.cmp(&b.row)));
        ends
    }

    /// Column lengths; for a partition this is the conjugate partition.
    pub fn column_lengths(&self) -> Vec<usize> {
        let width = self.rows.iter().copied().max().unwrap_or(0);
        (0..width)
            .map(|c| self.rows.iter().filter(|&&r| r > c).count())
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.rows))
    }
}

/// Parses `"2,2,1"` (the parentheses are optional).
impl std::str::FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_usize_list(s)?;
        Shape::composition(rows)
    }
}

pub(crate) fn parse_usize_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

/// All partitions of `n`, in reverse lexicographic order (`(n)` first).
pub fn partitions(n: usize) -> Vec<Shape> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape {
                rows: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// All compositions of `n` into positive parts (`2^(n-1)` of them).
pub fn compositions(n: usize) -> Vec<Shape> {
    fn go(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Shape>) {
        if remaining == 0 {
            out.push(Shape {
                rows: prefix.clone(),
            });
            return;
        }
        for part in 1..=remaining {
            prefix.push(part);
            go(remaining - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::new(), &mut out);
    }
    out
}
